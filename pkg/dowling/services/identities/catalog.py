#!/usr/bin/env python3
"""
Identity Catalog Module

A table-driven catalog of every identity the suite verifies. Each entry knows
which grid axes it sweeps and computes both sides independently: the left
side by direct construction, the right side by literal summation of the
identity's own display.

Specializations fix their parameters: Bell entries use m = 1, r = 0;
r-Bell entries use m = 1 and the integer r >= 0 of the grid; univariate
entries bind their polynomial variable from the y-list.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from dowling.core.config import Config
from dowling.core.errors import PreconditionError, UnknownIdentityError
from dowling.core.exact import (
    ONE,
    RationalLike,
    falling_factorial,
    power,
    rational_sum,
    to_rational,
)
from dowling.core.utils import setup_logger, log_exception
from dowling.services.identities.models import IdentityInstance, ParamGrid
from dowling.services.identities.spivey import (
    BELL_PARAMS,
    SpiveyMode,
    check_limit_form,
    check_spivey_first,
    check_spivey_second,
    literal_dowling,
    literal_univariate,
    spivey_sum,
)
from dowling.services.polynomials.dowling_poly import (
    ShiftDirection,
    dowling_univariate,
    dowling_value,
    explicit_eval,
    shift_r,
)
from dowling.services.polynomials.specializations import (
    bell_bivariate,
    bell_number,
    bell_poly,
    rbell_bivariate,
    rbell_number,
    rbell_params,
)
from dowling.services.series.generating_functions import SeriesKind, build_series
from dowling.services.triangles.partition_oracle import partition_oracle
from dowling.services.triangles.whitney import WhitneyParams, stirling2

# Initialize logger
logger = setup_logger(__name__)

Point = Dict[str, object]


@dataclass(frozen=True)
class CatalogEntry:
    """
    One identity: the grid axes it sweeps and the check that evaluates it.

    points(grid) yields keyword bindings for check; check also receives
    zero_to_zero and returns an IdentityInstance.
    """
    identity_id: str
    points: Callable[[ParamGrid], Iterator[Point]]
    check: Callable[..., IdentityInstance]
    note: Optional[str] = None


# ---------------------------------------------------------------------------
# Grid axes
# ---------------------------------------------------------------------------

def _splits(budget: int) -> Iterator[Tuple[int, int]]:
    # (l, n) with l + n <= budget, in lexicographic order
    for l in range(budget + 1):
        for n in range(budget - l + 1):
            yield l, n


def _params(grid: ParamGrid) -> Iterator[WhitneyParams]:
    for m in grid.m_list:
        for r in grid.r_list:
            yield WhitneyParams(m, r)


def _xy(grid: ParamGrid) -> Iterator[Tuple[int, Fraction]]:
    for x in grid.x_values:
        for y in grid.y_list:
            yield x, y


def _general_split_xy(grid):
    for params in _params(grid):
        for l, n in _splits(grid.sum_budget):
            for x, y in _xy(grid):
                yield {"params": params, "l": l, "n": n, "x": x, "y": y}


def _general_split(grid):
    for params in _params(grid):
        for l, n in _splits(grid.sum_budget):
            yield {"params": params, "l": l, "n": n}


def _general_split_y(grid):
    for params in _params(grid):
        for l, n in _splits(grid.sum_budget):
            for y in grid.y_list:
                yield {"params": params, "l": l, "n": n, "y": y}


def _general_split_variable(grid):
    for params in _params(grid):
        for l, n in _splits(grid.sum_budget):
            for x in grid.y_list:
                yield {"params": params, "l": l, "n": n, "x": x}


def _general_degree_xy(grid, last: int):
    for params in _params(grid):
        for n in range(last + 1):
            for x, y in _xy(grid):
                yield {"params": params, "n": n, "x": x, "y": y}


def _general_defining(grid):
    for params in _params(grid):
        for l in range(grid.sum_budget + 1):
            for x, y in _xy(grid):
                yield {"params": params, "l": l, "x": x, "y": y}


def _general_series(grid, singular_ok: bool = True):
    for params in _params(grid):
        for x, y in _xy(grid):
            if not singular_ok and y == params.m:
                continue
            for n in range(grid.series_order + 1):
                yield {"params": params, "x": x, "y": y, "n": n, "order": grid.series_order}


def _bell_split(grid):
    yield from ({"l": l, "n": n} for l, n in _splits(grid.sum_budget))


def _bell_split_xy(grid):
    for l, n in _splits(grid.sum_budget):
        for x, y in _xy(grid):
            yield {"l": l, "n": n, "x": x, "y": y}


def _bell_split_variable(grid):
    for l, n in _splits(grid.sum_budget):
        for x in grid.y_list:
            yield {"l": l, "n": n, "x": x}


def _bell_degree(grid, last: int):
    yield from ({"n": n} for n in range(last + 1))


def _bell_degree_xy(grid, last: int):
    for n in range(last + 1):
        for x, y in _xy(grid):
            yield {"n": n, "x": x, "y": y}


def _rbell_split(grid):
    for r in grid.integer_r_values:
        for l, n in _splits(grid.sum_budget):
            yield {"r": r, "l": l, "n": n}


def _rbell_split_xy(grid):
    for r in grid.integer_r_values:
        for l, n in _splits(grid.sum_budget):
            for x, y in _xy(grid):
                yield {"r": r, "l": l, "n": n, "x": x, "y": y}


def _rbell_degree_xy(grid):
    for r in grid.integer_r_values:
        for n in range(grid.sum_budget + 1):
            for x, y in _xy(grid):
                yield {"r": r, "n": n, "x": x, "y": y}


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------

def _instance(identity_id: str, bindings: dict, lhs, rhs) -> IdentityInstance:
    flat = {}
    for name, value in bindings.items():
        if isinstance(value, WhitneyParams):
            flat["m"], flat["r"] = value.m, value.r
        else:
            flat[name] = value
    return IdentityInstance(identity_id=identity_id, bindings=flat, lhs=lhs, rhs=rhs)


def _classic_base(k: int) -> Fraction:
    return Fraction(k)


def _check_spivey_classic(l, n, zero_to_zero=ONE):
    rhs = spivey_sum(BELL_PARAMS, l, n, _classic_base,
                     lambda i, k: literal_univariate(BELL_PARAMS, i, ONE),
                     lambda k: ONE, zero_to_zero)
    return _instance("spivey-classic", {"l": l, "n": n}, bell_number(l + n), rhs)


def _check_bell_sum(n, zero_to_zero=ONE):
    lhs = rational_sum(stirling2(n, k) for k in range(n + 1))
    rhs = rational_sum(partition_oracle(n, k, 0) for k in range(n + 1))
    return _instance("bell-sum", {"n": n}, lhs, rhs)


def _check_bell_rec(n, zero_to_zero=ONE):
    rhs = rational_sum(math.comb(n, k) * literal_univariate(BELL_PARAMS, k, ONE) for k in range(n + 1))
    return _instance("bell-rec", {"n": n}, bell_number(n + 1), rhs)


def _check_gould_quaintance(l, n, x, zero_to_zero=ONE):
    x = to_rational(x)
    rhs = spivey_sum(BELL_PARAMS, l, n, _classic_base,
                     lambda i, k: literal_univariate(BELL_PARAMS, i, x),
                     lambda k: power(x, k), zero_to_zero)
    return _instance("gould-quaintance", {"l": l, "n": n, "x": x}, bell_poly(l + n, x), rhs)


def _check_zheng_li_bivariate(l, n, x, y, zero_to_zero=ONE):
    x, y = to_rational(x), to_rational(y)
    rhs = spivey_sum(BELL_PARAMS, l, n, _classic_base,
                     lambda i, k: literal_dowling(BELL_PARAMS, i, x - k, y),
                     lambda k: falling_factorial(x, k) * power(y, k), zero_to_zero)
    return _instance("zheng-li-bivariate", {"l": l, "n": n, "x": x, "y": y}, bell_bivariate(l + n, x, y), rhs)


def _check_zheng_li_r1(r, l, n, x, y, zero_to_zero=ONE):
    x, y = to_rational(x), to_rational(y)
    params = rbell_params(r)
    rhs = spivey_sum(params, l, n, _classic_base,
                     lambda i, k: literal_dowling(params, i, x - k, y),
                     lambda k: falling_factorial(x, k) * power(y, k), zero_to_zero)
    lhs = rbell_bivariate(l + n, r, x, y)
    return _instance("zheng-li-r1", {"r": r, "l": l, "n": n, "x": x, "y": y}, lhs, rhs)


def _check_zheng_li_r2(r, l, n, x, y, zero_to_zero=ONE):
    x, y = to_rational(x), to_rational(y)
    params = rbell_params(r)
    rhs = spivey_sum(params, l, n, lambda k: Fraction(k + r),
                     lambda i, k: literal_dowling(BELL_PARAMS, i, x - k, y),
                     lambda k: falling_factorial(x, k) * power(y, k), zero_to_zero)
    lhs = rbell_bivariate(l + n, r, x, y)
    return _instance("zheng-li-r2", {"r": r, "l": l, "n": n, "x": x, "y": y}, lhs, rhs)


def _check_mezo_r1(r, l, n, zero_to_zero=ONE):
    params = rbell_params(r)
    rhs = spivey_sum(params, l, n, _classic_base,
                     lambda i, k: literal_univariate(params, i, ONE),
                     lambda k: ONE, zero_to_zero)
    return _instance("mezo-r1", {"r": r, "l": l, "n": n}, rbell_number(l + n, r), rhs)


def _check_mezo_r2(r, l, n, zero_to_zero=ONE):
    params = rbell_params(r)
    rhs = spivey_sum(params, l, n, lambda k: Fraction(k + r),
                     lambda i, k: literal_univariate(BELL_PARAMS, i, ONE),
                     lambda k: ONE, zero_to_zero)
    return _instance("mezo-r2", {"r": r, "l": l, "n": n}, rbell_number(l + n, r), rhs)


def _check_mangontarum_univariate(params, l, n, x, zero_to_zero=ONE):
    x = to_rational(x)
    rhs = spivey_sum(params, l, n, lambda k: params.m * k,
                     lambda i, k: literal_univariate(params, i, x),
                     lambda k: power(x, k), zero_to_zero)
    lhs = dowling_univariate(params, l + n, x)
    return _instance("mangontarum-univariate", {"params": params, "l": l, "n": n, "x": x}, lhs, rhs)


def _check_conclusion_defining(params, l, x, y, zero_to_zero=ONE):
    x, y = to_rational(x), to_rational(y)
    # First form at n = 0: D(0; x-k, y) = 1 and the only power is (mk)^0
    rhs = spivey_sum(params, l, 0, lambda k: params.m * k,
                     lambda i, k: literal_dowling(params, 0, x - k, y),
                     lambda k: falling_factorial(x, k) * power(y, k), zero_to_zero)
    lhs = dowling_value(params, l, x, y)
    return _instance("conclusion-defining", {"params": params, "l": l, "x": x, "y": y}, lhs, rhs)


def _check_conclusion_recurrence(params, n, x, y, zero_to_zero=ONE):
    x, y = to_rational(x), to_rational(y)
    m, r = params.m, params.r
    rhs = r * literal_dowling(params, n, x, y) + rational_sum(
        m ** (n - i) * math.comb(n, i) * literal_dowling(params, i, x - 1, y) * x * y
        for i in range(n + 1)
    )
    lhs = dowling_value(params, n + 1, x, y)
    return _instance("conclusion-recurrence", {"params": params, "n": n, "x": x, "y": y}, lhs, rhs)


def _check_conclusion_bell_bivariate(n, x, y, zero_to_zero=ONE):
    x, y = to_rational(x), to_rational(y)
    rhs = rational_sum(
        math.comb(n, i) * literal_dowling(BELL_PARAMS, i, x - 1, y) * x * y for i in range(n + 1)
    )
    return _instance("conclusion-bell-bivariate", {"n": n, "x": x, "y": y}, bell_bivariate(n + 1, x, y), rhs)


def _check_shift_up(params, n, x, y, zero_to_zero=ONE):
    x, y = to_rational(x), to_rational(y)
    lhs = dowling_value(params.shifted(1), n, x, y)
    rhs = shift_r(params, n, x, y, ShiftDirection.UP)
    return _instance("shift-up", {"params": params, "n": n, "x": x, "y": y}, lhs, rhs)


def _check_shift_down(params, n, x, y, zero_to_zero=ONE):
    x, y = to_rational(x), to_rational(y)
    lhs = dowling_value(params, n, x, y)
    rhs = shift_r(params, n, x, y, ShiftDirection.DOWN)
    return _instance("shift-down", {"params": params, "n": n, "x": x, "y": y}, lhs, rhs)


def _check_rbell_shift(r, n, x, y, zero_to_zero=ONE):
    x, y = to_rational(x), to_rational(y)
    params = rbell_params(r)
    rhs = rational_sum(math.comb(n, j) * literal_dowling(params, j, x, y) for j in range(n + 1))
    return _instance("rbell-shift", {"r": r, "n": n, "x": x, "y": y}, rbell_bivariate(n, r + 1, x, y), rhs)


def _check_rbell_shift_down(r, n, x, y, zero_to_zero=ONE):
    x, y = to_rational(x), to_rational(y)
    shifted = rbell_params(r + 1)
    rhs = rational_sum(
        (-1) ** (n - j) * math.comb(n, j) * literal_dowling(shifted, j, x, y) for j in range(n + 1)
    )
    return _instance("rbell-shift-down", {"r": r, "n": n, "x": x, "y": y}, rbell_bivariate(n, r, x, y), rhs)


def _check_explicit_bell(n, x, y, zero_to_zero=ONE):
    rhs = explicit_eval(BELL_PARAMS, n, x, y, zero_to_zero=zero_to_zero)
    return _instance("explicit-bell", {"n": n, "x": x, "y": y}, bell_bivariate(n, x, y), rhs)


def _check_explicit_rbell(r, n, x, y, zero_to_zero=ONE):
    rhs = explicit_eval(rbell_params(r), n, x, y, zero_to_zero=zero_to_zero)
    return _instance("explicit-rbell", {"r": r, "n": n, "x": x, "y": y}, rbell_bivariate(n, r, x, y), rhs)


def _check_explicit_dowling(params, n, x, y, zero_to_zero=ONE):
    y = to_rational(y)
    lhs = dowling_value(params, n, Fraction(x), y)
    rhs = explicit_eval(params, n, x, y, zero_to_zero=zero_to_zero)
    return _instance("explicit-dowling", {"params": params, "n": n, "x": x, "y": y}, lhs, rhs)


@lru_cache(maxsize=Config.CACHE_SIZE)
def _series_coeffs(kind: SeriesKind, params: WhitneyParams, x: int, y: Fraction, order: int):
    return build_series(kind, params, order, x=x, y=y).coeffs


def _series_check(identity_id: str, kind: SeriesKind, exponential: bool = False):
    def check(params, x, y, n, order, zero_to_zero=ONE):
        y = to_rational(y)
        value = dowling_value(params, n, Fraction(x), y)
        lhs = value / math.factorial(n) if exponential else value
        rhs = _series_coeffs(kind, params, x, y, order)[n]
        return _instance(identity_id, {"params": params, "x": x, "y": y, "n": n}, lhs, rhs)
    return check


def _check_spivey(identity_id: str):
    second = identity_id.startswith("spivey-second")
    mode = SpiveyMode.NUMBERS if identity_id.endswith("numbers") else SpiveyMode.BIVARIATE
    check_form = check_spivey_second if second else check_spivey_first

    def check(params, l, n, x=0, y=1, zero_to_zero=ONE):
        return check_form(params, l, n, x, y, mode=mode, zero_to_zero=zero_to_zero)
    return check


def _check_limit(second: bool):
    def check(params, l, n, y, zero_to_zero=ONE):
        return check_limit_form(params, l, n, y, second=second, zero_to_zero=zero_to_zero)
    return check


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

def _single_index(grid: ParamGrid) -> int:
    # single-index recurrences use n < sum-budget
    return max(grid.sum_budget - 1, 0)


_ENTRIES: List[CatalogEntry] = [
    CatalogEntry("spivey-first-bivariate", _general_split_xy, _check_spivey("spivey-first-bivariate")),
    CatalogEntry("spivey-first-numbers", _general_split, _check_spivey("spivey-first-numbers")),
    CatalogEntry("spivey-second-bivariate", _general_split_xy, _check_spivey("spivey-second-bivariate"),
                 note="inner polynomial carries m^i: m^i B_i(x-k, y/m)"),
    CatalogEntry("spivey-second-numbers", _general_split, _check_spivey("spivey-second-numbers"),
                 note="inner value carries m^i: m^i B_i(1/m)"),
    CatalogEntry("spivey-classic", _bell_split, _check_spivey_classic),
    CatalogEntry("bell-sum", lambda g: _bell_degree(g, min(g.sum_budget, Config.ORACLE_LIMIT)), _check_bell_sum),
    CatalogEntry("bell-rec", lambda g: _bell_degree(g, _single_index(g)), _check_bell_rec),
    CatalogEntry("gould-quaintance", _bell_split_variable, _check_gould_quaintance,
                 note="trailing factor read as x^k"),
    CatalogEntry("zheng-li-bivariate", _bell_split_xy, _check_zheng_li_bivariate),
    CatalogEntry("zheng-li-r1", _rbell_split_xy, _check_zheng_li_r1),
    CatalogEntry("zheng-li-r2", _rbell_split_xy, _check_zheng_li_r2),
    CatalogEntry("mezo-r1", _rbell_split, _check_mezo_r1),
    CatalogEntry("mezo-r2", _rbell_split, _check_mezo_r2),
    CatalogEntry("mangontarum-univariate", _general_split_variable, _check_mangontarum_univariate,
                 note="summand uses W(l,k)"),
    CatalogEntry("conclusion-defining", _general_defining, _check_conclusion_defining,
                 note="summand uses W(l,k)"),
    CatalogEntry("conclusion-recurrence", lambda g: _general_degree_xy(g, _single_index(g)),
                 _check_conclusion_recurrence, note="includes the k = 0 term r D(n;x,y)"),
    CatalogEntry("conclusion-bell-bivariate", lambda g: _bell_degree_xy(g, _single_index(g)),
                 _check_conclusion_bell_bivariate, note="inner polynomial read as B_i(x-1, y)"),
    CatalogEntry("shift-up", lambda g: _general_degree_xy(g, g.sum_budget), _check_shift_up),
    CatalogEntry("shift-down", lambda g: _general_degree_xy(g, g.sum_budget), _check_shift_down),
    CatalogEntry("rbell-shift", _rbell_degree_xy, _check_rbell_shift),
    CatalogEntry("rbell-shift-down", _rbell_degree_xy, _check_rbell_shift_down),
    CatalogEntry("explicit-bell", lambda g: _bell_degree_xy(g, g.sum_budget), _check_explicit_bell),
    CatalogEntry("explicit-rbell", _rbell_degree_xy, _check_explicit_rbell),
    CatalogEntry("explicit-dowling", lambda g: _general_degree_xy(g, g.sum_budget), _check_explicit_dowling),
    CatalogEntry("egf-dowling", _general_series,
                 _series_check("egf-dowling", SeriesKind.EGF, exponential=True)),
    CatalogEntry("ogf-hypergeometric", lambda g: _general_series(g, singular_ok=False),
                 _series_check("ogf-hypergeometric", SeriesKind.OGF_2F1)),
    CatalogEntry("ogf-hypergeometric-direct", _general_series,
                 _series_check("ogf-hypergeometric-direct", SeriesKind.OGF_2F1_DIRECT)),
    CatalogEntry("ogf-partial-fractions", _general_series,
                 _series_check("ogf-partial-fractions", SeriesKind.OGF_PF)),
    CatalogEntry("limit-first-form", _general_split_y, _check_limit(second=False)),
    CatalogEntry("limit-second-form", _general_split_y, _check_limit(second=True),
                 note="inner polynomial carries m^i"),
]

CATALOG: Dict[str, CatalogEntry] = {entry.identity_id: entry for entry in _ENTRIES}

IDENTITY_IDS: Tuple[str, ...] = tuple(CATALOG)


def get_entry(identity_id: str) -> CatalogEntry:
    """
    Raises:
        UnknownIdentityError: If no entry has this id.
    """
    try:
        return CATALOG[identity_id]
    except KeyError:
        raise UnknownIdentityError(f"unknown identity id: {identity_id!r}") from None


@log_exception(logger)
def check_catalog(identity_id: str, bindings: Optional[dict] = None,
                  zero_to_zero: RationalLike = ONE) -> IdentityInstance:
    """
    Evaluates one catalog identity at one point.

    Args:
        identity_id (str): A catalog id.
        bindings (dict): Keyword bindings of the entry. General entries take
            params (or m and r); Bell entries take no parameters; r-Bell
            entries take an integer r.
        zero_to_zero: Value of 0^0 in the right side.

    Returns:
        IdentityInstance: Both sides and the verdict.

    Raises:
        UnknownIdentityError: If identity_id is not in the catalog.
        PreconditionError: If the bindings do not fit the entry.
    """
    entry = get_entry(identity_id)
    bindings = dict(bindings or {})
    if "m" in bindings:
        bindings["params"] = WhitneyParams(bindings.pop("m"), bindings.pop("r", 0))
    try:
        return entry.check(**bindings, zero_to_zero=to_rational(zero_to_zero))
    except TypeError as e:
        raise PreconditionError(f"bad bindings for {identity_id}: {e}") from None
