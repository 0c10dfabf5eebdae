"""Independent ground truth: brute-force triples and the single-digit census.

Repdigit membership here is decided by expanding numbers into base-g digits,
never through the search layer's classification, so a bug in one cannot hide
in the other.
"""

from bisect import bisect_left, bisect_right
from typing import List, Optional, Tuple

from loguru import logger

from config.settings import settings
from src.arith.errors import CapacityError, InvalidArgumentError
from src.search.models import OutputRecord, Solution


def repdigit_by_digits(n: int, g: int) -> Optional[Tuple[int, int]]:
    """Return (d, k) when all k base-g digits of n equal d, else None."""
    if n < 1 or g < 2:
        raise InvalidArgumentError(f"need n >= 1 and g >= 2, got n={n}, g={g}")
    n, d = divmod(n, g)
    k = 1
    while n:
        n, digit = divmod(n, g)
        if digit != d:
            return None
        k += 1
    return (d, k)


def _multidigit(n: int, g: int) -> Optional[Tuple[int, int]]:
    found = repdigit_by_digits(n, g)
    if found is None or found[1] < 2:
        return None
    return found


def _repdigits_up_to(g: int, limit: int) -> List[int]:
    # built digit by digit, then confirmed by expansion
    values = []
    for d in range(1, g):
        v = d * g + d
        while v <= limit:
            if _multidigit(v, g) is not None:
                values.append(v)
            v = v * g + d
    values.sort()
    return values


def brute_force(g: int, a_max: int) -> List[Solution]:
    """All triples with 1 <= c < b < a <= a_max, sorted by (a, b, c)."""
    if g < 2:
        raise InvalidArgumentError(f"base must be >= 2, got {g}")
    if a_max < 3:
        raise InvalidArgumentError(f"a_max must be >= 3, got {a_max}")
    values = _repdigits_up_to(g, a_max * (a_max - 1) + 1)
    found = []
    for a in range(3, a_max + 1):
        lo = bisect_left(values, 2 * a + 1)
        hi = bisect_right(values, a * (a - 1) + 1)
        for ab1 in values[lo:hi]:
            if (ab1 - 1) % a:
                continue
            b = (ab1 - 1) // a
            # ac+1 runs over [a+1, a(b-1)+1]
            for ac1 in values[bisect_left(values, a + 1):bisect_right(values, a * (b - 1) + 1)]:
                if (ac1 - 1) % a:
                    continue
                c = (ac1 - 1) // a
                w2 = _multidigit(ac1, g)
                w1 = _multidigit(b * c + 1, g)
                if w1 is None:
                    continue
                found.append(
                    Solution(a=a, b=b, c=c, g=g, witnesses=(w1, w2, _multidigit(ab1, g)))
                )
    found.sort()
    logger.debug(f"brute force g={g} a<={a_max}: {len(found)} triples")
    return found


def count_tilde_d1(g: int) -> int:
    """Count triples c < b < a with ab+1 (hence ac+1, bc+1) a single base-g digit."""
    if g < 5:
        raise InvalidArgumentError(f"census needs g >= 5, got {g}")
    if g > settings.oracle_census_limit:
        raise CapacityError(f"census limited to g <= {settings.oracle_census_limit}, got {g}")
    total = 0
    # ab <= g-2 with b < a; c ranges over [1, b)
    for a in range(3, g - 1):
        b_max = min(a - 1, (g - 2) // a)
        if b_max < 2:
            break
        total += b_max * (b_max - 1) // 2
    return total


def verify_record(record: OutputRecord) -> bool:
    """Recheck a serialized triple against its three repdigit equations."""
    g, a, b, c = int(record.g), int(record.a), int(record.b), int(record.c)
    if g < 2 or not a > b > c >= 1:
        return False
    claimed = [tuple(w) for w in record.witnesses]
    actual = [_multidigit(b * c + 1, g), _multidigit(a * c + 1, g), _multidigit(a * b + 1, g)]
    return None not in actual and actual == claimed
