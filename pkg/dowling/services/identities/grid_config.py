#!/usr/bin/env python3
"""
Grid Configuration Module

Reads the flat key=value grid file:

    # comment
    m-list=1,2,3,1/2
    r-list=0,1,2,1/2
    sum-budget=8
    x-max=6
    y-list=1/2,1,2,3
    series-order=10

Keys left out take the built-in default. Unknown keys, malformed values,
m = 0 and empty lists are configuration errors.
"""

from pathlib import Path
from typing import Dict, Optional, Union

from pydantic import ValidationError

from dowling.core.config import Config
from dowling.core.errors import GridConfigError, PreconditionError
from dowling.core.exact import parse_rational
from dowling.core.utils import setup_logger, log_exception
from dowling.services.identities.models import ParamGrid

# Initialize logger
logger = setup_logger(__name__)

DEFAULT_GRID = ParamGrid(
    m_list=[1, 2, 3, "1/2"],
    r_list=[0, 1, 2, "1/2"],
    sum_budget=8,
    x_max=6,
    y_list=["1/2", 1, 2, 3],
    series_order=Config.DEFAULT_SERIES_ORDER,
)

_LIST_KEYS = {"m-list": "m_list", "r-list": "r_list", "y-list": "y_list"}
_INT_KEYS = {"sum-budget": "sum_budget", "x-max": "x_max", "series-order": "series_order"}


def _parse_value(key: str, raw: str):
    if key in _LIST_KEYS:
        items = [item.strip() for item in raw.split(",") if item.strip()]
        return [parse_rational(item) for item in items]
    try:
        return int(raw)
    except ValueError:
        raise PreconditionError(f"{key} must be an integer, got {raw!r}") from None


def parse_grid(text: str, source: str = "<grid>") -> ParamGrid:
    """
    Parses grid file text into a ParamGrid.

    Raises:
        GridConfigError: On any syntax or validation problem.
    """
    values: Dict[str, object] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise GridConfigError(f"{source}:{lineno}: expected key=value, got {line!r}")
        key, raw = (part.strip() for part in line.split("=", 1))
        field = _LIST_KEYS.get(key) or _INT_KEYS.get(key)
        if field is None:
            raise GridConfigError(f"{source}:{lineno}: unknown key {key!r}")
        try:
            values[field] = _parse_value(key, raw)
        except PreconditionError as e:
            raise GridConfigError(f"{source}:{lineno}: {e}") from None

    merged = {**DEFAULT_GRID.model_dump(), **values}
    try:
        return ParamGrid(**merged)
    except ValidationError as e:
        first = e.errors()[0]
        raise GridConfigError(f"{source}: invalid {first['loc'][0]}: {first['msg']}") from None


@log_exception(logger)
def load_grid(path: Optional[Union[str, Path]] = None) -> ParamGrid:
    """
    Loads the grid named by path, DOWLING_GRID or the shipped default file,
    falling back to the built-in default grid.

    Raises:
        GridConfigError: If the resolved file is missing or invalid.
    """
    resolved = Config.get_grid_path(str(path) if path else None)
    if resolved is None:
        logger.info("No grid file found, using the built-in default grid")
        return DEFAULT_GRID
    if not resolved.is_file():
        raise GridConfigError(f"grid file not found: {resolved}")
    grid = parse_grid(resolved.read_text(encoding="utf-8"), source=str(resolved))
    logger.info(f"Loaded grid from {resolved}")
    return grid
