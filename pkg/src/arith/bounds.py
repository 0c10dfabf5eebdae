"""Effective bounds: per-base caps on n3, the a-bound and the triple-count bound.

The caps come from two transcendental inequalities of the shape

    n < ((10·sqrt(n) + 2)·log(2g − 2) + extra(g)) / log(g) + 1

with extra = log 16 (independent pair x3/y3, x2/y2) or
extra = 4·log(g − 1) + log 128 (dependent pair, independent x3/y3, x1/y1).
They are evaluated at 60 significant digits; a comparison that lands within
the tolerance counts as satisfied, so caps can only round up.
"""

from dataclasses import dataclass, asdict
from functools import lru_cache
from math import comb
from typing import Any, Callable, Dict

from loguru import logger
from mpmath import mp, mpf

from src.arith.errors import InvalidArgumentError


GLOBAL_N3_CAP = 186
# n3 ceiling of the fully dependent case (no solutions with n3 >= 29)
DEPENDENT_CASE_CEILING = 28
SCAN_START = 400
PRECISION_DPS = 60
TOLERANCE = mpf("1e-40")


def _check(g: int) -> None:
    if g < 3:
        raise InvalidArgumentError(f"cap inequalities need g >= 3, got {g}")


def _margin(g: int, n: int, extra: Callable[[int], Any]) -> mpf:
    with mp.workdps(PRECISION_DPS):
        log_g = mp.log(g)
        rhs = ((10 * mp.sqrt(n) + 2) * mp.log(2 * g - 2) + extra(g)) / log_g + 1
        return +(rhs - n)


def case2_margin(g: int, n: int) -> mpf:
    """RHS − n of the independent-pair inequality; positive means n is admissible."""
    _check(g)
    return _margin(g, n, lambda base: mp.log(16))


def case3_margin(g: int, n: int) -> mpf:
    """RHS − n of the dependent-pair inequality; positive means n is admissible."""
    _check(g)
    return _margin(g, n, lambda base: 4 * mp.log(base - 1) + mp.log(128))


def _scan(g: int, margin: Callable[[int, int], mpf]) -> int:
    for n in range(SCAN_START, 1, -1):
        if margin(g, n) > -TOLERANCE:
            return n
    raise RuntimeError(f"cap scan found no admissible n for g={g}")


@lru_cache(maxsize=None)
def case2_cap(g: int) -> int:
    """Largest n >= 2 admissible for the independent-pair inequality."""
    _check(g)
    return _scan(g, case2_margin)


@lru_cache(maxsize=None)
def case3_cap(g: int) -> int:
    """Largest n >= 2 admissible for the dependent-pair inequality."""
    _check(g)
    return _scan(g, case3_margin)


@lru_cache(maxsize=None)
def n3_cap(g: int) -> int:
    """Upper bound on the longest repdigit length n3 for base g (0 for g = 2)."""
    if g < 2:
        raise InvalidArgumentError(f"base must be >= 2, got {g}")
    if g == 2:
        return 0
    cap = min(GLOBAL_N3_CAP, max(case2_cap(g), case3_cap(g), DEPENDENT_CASE_CEILING))
    logger.debug(f"n3 cap for g={g}: {cap}")
    return cap


def a_bound(g: int) -> int:
    """floor((g^cap − 2)/2): every triple in base g has a at most this."""
    _check(g)
    return (g ** n3_cap(g) - 2) // 2


def count_bound_for(M: int) -> int:
    """M(M−1)(M−2)/6, the number of increasing selections of three (d, n) pairs."""
    return comb(M, 3)


def count_bound(g: int) -> int:
    """Upper bound on the number of triples in base g."""
    _check(g)
    return count_bound_for((n3_cap(g) - 1) * (g - 1))


@dataclass(frozen=True)
class BoundReport:
    """All effective bounds for one base."""
    g: int
    case2_cap: int
    case3_cap: int
    n3_cap: int
    a_bound: int
    count_bound: int

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        # big values travel as decimal strings
        data["g"] = str(self.g)
        data["a_bound"] = str(self.a_bound)
        data["count_bound"] = str(self.count_bound)
        return data


def bound_report(g: int) -> BoundReport:
    """Compute the BoundReport for base g >= 3."""
    _check(g)
    return BoundReport(
        g=g,
        case2_cap=case2_cap(g),
        case3_cap=case3_cap(g),
        n3_cap=n3_cap(g),
        a_bound=a_bound(g),
        count_bound=count_bound(g),
    )
