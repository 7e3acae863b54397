from pathlib import Path
from typing import Optional
from dotenv import load_dotenv
import os

# Load environment variables from .env file
load_dotenv()

class Config:
    # Base paths
    BASE_DIR = Path(__file__).parent.parent.parent

    # Grid configuration
    DEFAULT_GRID_PATH = BASE_DIR / 'config' / 'default_grid.cfg'
    GRID_PATH = os.getenv('DOWLING_GRID')

    # Series truncation order used when a command does not pass one
    DEFAULT_SERIES_ORDER = int(os.getenv('DOWLING_SERIES_ORDER', 10))

    # Enumeration guard for the set-partition oracle (n + r)
    ORACLE_LIMIT = 12

    # Bound on each memoized helper, keyed on exact rational arguments
    CACHE_SIZE = int(os.getenv('DOWLING_CACHE_SIZE', 8192))

    # Logging Configuration
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING')
    LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    LOG_FILE = os.getenv('DOWLING_LOG_FILE')

    @classmethod
    def get_grid_path(cls, explicit: Optional[str] = None) -> Optional[Path]:
        """Returns the grid config path to read, or None to use the built-in default grid.

        An explicit path wins over DOWLING_GRID, which wins over the shipped default file.
        """
        if explicit:
            return Path(explicit)
        if cls.GRID_PATH:
            return Path(cls.GRID_PATH)
        if cls.DEFAULT_GRID_PATH.exists():
            return cls.DEFAULT_GRID_PATH
        return None
