"""Repunits, repdigits and repdigit classification in an arbitrary base."""

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional
import math

from src.arith.errors import InvalidArgumentError


@dataclass(frozen=True)
class Repdigit:
    """A repdigit d·(g^k − 1)/(g − 1): k base-g digits, all equal to d."""
    d: int
    k: int
    g: int
    value: int

    def as_pair(self):
        return (self.d, self.k)


def _check_base(g: int) -> None:
    if g < 2:
        raise InvalidArgumentError(f"base must be >= 2, got {g}")


@lru_cache(maxsize=4096)
def repunit(g: int, k: int) -> int:
    """Return (g^k − 1)/(g − 1) = g^(k−1) + ... + g + 1."""
    _check_base(g)
    if k < 1:
        raise InvalidArgumentError(f"repunit length must be >= 1, got {k}")
    return (g ** k - 1) // (g - 1)


def repdigit_value(d: int, k: int, g: int) -> int:
    """Return the value of the length-k repdigit with digit d in base g."""
    _check_base(g)
    if not 1 <= d <= g - 1:
        raise InvalidArgumentError(f"digit {d} out of range [1, {g - 1}] for base {g}")
    return d * repunit(g, k)


def digit_length(n: int, g: int) -> int:
    """Return the number of base-g digits of n, i.e. k with g^(k−1) <= n < g^k."""
    _check_base(g)
    if n < 1:
        raise InvalidArgumentError(f"digit_length needs n >= 1, got {n}")
    # float estimate, then exact correction
    e = max(0, int((n.bit_length() - 1) / math.log2(g)))
    power = g ** e
    while power > n:
        e -= 1
        power //= g
    while power * g <= n:
        e += 1
        power *= g
    return e + 1


def classify(n: int, g: int) -> Optional[Repdigit]:
    """Return the repdigit description of n in base g, or None.

    Single-digit values (k = 1) are reported; callers that need multi-digit
    repdigits filter on ``k >= 2``.
    """
    if n < 1:
        raise InvalidArgumentError(f"classify needs n >= 1, got {n}")
    k = digit_length(n, g)
    d, rem = divmod(n, repunit(g, k))
    if rem or not 1 <= d <= g - 1:
        return None
    return Repdigit(d=d, k=k, g=g, value=n)

