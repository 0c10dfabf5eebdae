"""Integer square roots, product forms, multiplicative dependence and gcd bounds.

These are the number-theoretic facts the effective bounds rest on, exposed as exact
integer operations. Nothing here touches floating point except gcd_bound's
handling of a float X, which is converted to an exact fraction first.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, Optional, Tuple, Union

import gmpy2
from loguru import logger
from sympy import factorint, isprime

from config.settings import settings
from src.arith.errors import CapacityError, InvalidArgumentError


Real = Union[int, Fraction, float]


def isqrt(n: int) -> int:
    """Return floor(sqrt(n)) exactly."""
    if n < 0:
        raise InvalidArgumentError(f"isqrt of negative number {n}")
    return int(gmpy2.isqrt(n))


def perfect_square_root(n: int) -> Optional[int]:
    """Return sqrt(n) when n is a perfect square, else None."""
    if n < 0:
        return None
    root, rem = gmpy2.isqrt_rem(n)
    if rem:
        return None
    return int(root)


# Product forms

@dataclass(frozen=True)
class ProductForm:
    """d·g^n − (d+g−1) = lambda_·(x − y) with gcd(x, y) = 1."""
    d: int
    n: int
    g: int
    lambda_: int
    x: int
    y: int

    @property
    def ratio(self) -> Tuple[int, int]:
        return (self.x, self.y)


def product_form(d: int, n: int, g: int) -> ProductForm:
    """Decompose d·g^n − (d+g−1) into its coprime (x, y) parts."""
    if g < 2:
        raise InvalidArgumentError(f"base must be >= 2, got {g}")
    if not 1 <= d <= g - 1:
        raise InvalidArgumentError(f"digit {d} out of range [1, {g - 1}] for base {g}")
    if n < 2:
        raise InvalidArgumentError(f"product form needs n >= 2, got {n}")
    top = d * g ** n
    bottom = d + g - 1
    lam = gcd(top, bottom)
    return ProductForm(d=d, n=n, g=g, lambda_=lam, x=top // lam, y=bottom // lam)


# Pigeonhole exponent pairs

def _fits(s: int, X: int) -> bool:
    # 0 <= s <= 2*sqrt(X), exactly
    return s >= 0 and s * s <= 4 * X


def _ring(h: int):
    """Integer points with max(|u|, |v|) == h."""
    for u in range(-h, h + 1):
        if abs(u) == h:
            for v in range(-h, h + 1):
                yield u, v
        else:
            yield u, -h
            yield u, h


def pigeonhole_pair(m: int, n: int, X: int) -> Tuple[int, int]:
    """Return (u, v) != (0, 0) with max(|u|,|v|) <= sqrt(X) and 0 <= m·u + n·v <= 2·sqrt(X).

    Candidates are ranked by max(|u|,|v|), then by m·u + n·v, then by
    descending (u, v). A zero coefficient pins its coordinate to 0 first.
    """
    if m < 0 or n < 0 or (m == 0 and n == 0):
        raise InvalidArgumentError(f"need non-negative m, n not both zero, got ({m}, {n})")
    if X < max(3, m, n):
        raise InvalidArgumentError(f"need X >= max(3, m, n), got X={X} for ({m}, {n})")

    if m == 0 and _fits(n, X):
        return (0, 1)
    if n == 0 and _fits(m, X):
        return (1, 0)

    radius = isqrt(X)
    for h in range(1, radius + 1):
        best = None
        for u, v in _ring(h):
            s = m * u + n * v
            if not _fits(s, X):
                continue
            key = (s, -u, -v)
            if best is None or key < best[0]:
                best = (key, (u, v))
        if best is not None:
            return best[1]
    # existence is guaranteed, so reaching here is a bug
    raise RuntimeError(f"no pigeonhole pair for m={m}, n={n}, X={X}")


# Multiplicative dependence

class DependenceVerdict(Enum):
    """Outcome of a multiplicative-dependence test."""
    INDEPENDENT = "independent"
    DEPENDENT = "dependent"


@dataclass(frozen=True)
class Dependence:
    """Verdict plus, when dependent, the generator alpha/beta and exponents."""
    verdict: DependenceVerdict
    gen_num: Optional[int] = None
    gen_den: Optional[int] = None
    exponents: Optional[Tuple[int, int]] = None

    @property
    def dependent(self) -> bool:
        return self.verdict is DependenceVerdict.DEPENDENT


@lru_cache(maxsize=8192)
def _factor(n: int) -> Tuple[Tuple[int, int], ...]:
    limit = settings.trial_division_limit
    factors = factorint(n, limit=limit)
    for p in factors:
        if p > limit and not isprime(p):
            raise CapacityError(
                f"cofactor {p} of {n} exceeds the trial-division limit {limit}"
            )
    return tuple(sorted(factors.items()))


def exponent_vector(x: int, y: int) -> Dict[int, int]:
    """Signed prime exponent vector of the reduced fraction x/y."""
    vec: Dict[int, int] = {}
    for p, e in _factor(x):
        vec[p] = vec.get(p, 0) + e
    for p, e in _factor(y):
        vec[p] = vec.get(p, 0) - e
    return {p: e for p, e in vec.items() if e}


def _check_ratio(x: int, y: int) -> None:
    if not x > y >= 1:
        raise InvalidArgumentError(f"ratio {x}/{y} must satisfy x > y >= 1")
    if gcd(x, y) != 1:
        raise InvalidArgumentError(f"ratio {x}/{y} is not in lowest terms")


def mult_dependence(x1: int, y1: int, x2: int, y2: int) -> Dependence:
    """Decide whether x1/y1 and x2/y2 are powers of a common rational."""
    _check_ratio(x1, y1)
    _check_ratio(x2, y2)
    v1 = exponent_vector(x1, y1)
    v2 = exponent_vector(x2, y2)

    if set(v1) != set(v2):
        return Dependence(DependenceVerdict.INDEPENDENT)
    pivot = next(iter(v1))
    scale = Fraction(v2[pivot], v1[pivot])
    if any(Fraction(v2[p]) != scale * v1[p] for p in v1):
        return Dependence(DependenceVerdict.INDEPENDENT)

    # both ratios exceed 1, so the scale is positive
    content = 0
    for e in v1.values():
        content = gcd(content, e)
    r1 = content
    r2 = scale * content
    assert r2.denominator == 1 and r2 > 0
    r2 = int(r2)
    common = gcd(r1, r2)
    step = content // common
    alpha = 1
    beta = 1
    for p, e in v1.items():
        q = e // step
        if q > 0:
            alpha *= p ** q
        else:
            beta *= p ** (-q)
    logger.debug(f"dependent ratios {x1}/{y1}, {x2}/{y2}: generator {alpha}/{beta}")
    return Dependence(
        DependenceVerdict.DEPENDENT,
        gen_num=alpha,
        gen_den=beta,
        exponents=(r1 // common, r2 // common),
    )


# Special gcd bound

@dataclass(frozen=True)
class GcdBoundInput:
    """Parameters of gcd(t1·g^k1 − w1, t2·g^k2 − w2) and its envelope X."""
    t1: int
    w1: int
    t2: int
    w2: int
    k1: int
    k2: int
    g: int
    X: Real

    @property
    def C(self) -> int:
        return max(self.g, abs(self.t1), abs(self.w1), abs(self.t2), abs(self.w2))


def _ceil_sqrt(q: Fraction) -> int:
    """Least integer e >= 0 with e*e >= q."""
    e = isqrt(q.numerator // q.denominator)
    while e * e < q:
        e += 1
    return e


def gcd_bound_exponent(X: Real) -> int:
    """Least integer >= 2 + 5·sqrt(X)."""
    return 2 + _ceil_sqrt(25 * Fraction(X))


def gcd_bound(inp: GcdBoundInput) -> int:
    """Return 2·C^ceil(2 + 5·sqrt(X)), an upper bound for the special gcd."""
    if inp.g < 2:
        raise InvalidArgumentError(f"base must be >= 2, got {inp.g}")
    if 0 in (inp.t1, inp.w1, inp.t2, inp.w2):
        raise InvalidArgumentError("t1, w1, t2, w2 must be non-zero")
    if min(inp.k1, inp.k2) < 1:
        raise InvalidArgumentError("k1, k2 must be >= 1")
    if Fraction(inp.X) < max(inp.k1, inp.k2, 3):
        raise InvalidArgumentError(
            f"X={inp.X} is below max(k1, k2, 3) = {max(inp.k1, inp.k2, 3)}"
        )
    return 2 * inp.C ** gcd_bound_exponent(inp.X)


def gcd_special(t1: int, w1: int, k1: int, t2: int, w2: int, k2: int, g: int) -> int:
    """Return gcd(t1·g^k1 − w1, t2·g^k2 − w2) exactly."""
    return int(gmpy2.gcd(t1 * g ** k1 - w1, t2 * g ** k2 - w2))
