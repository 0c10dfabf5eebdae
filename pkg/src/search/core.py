"""Two-phase complete search for repdigit Diophantine triples in one base.

Below the threshold B every a is tried directly (small phase). Above it the
repdigit lengths and digits of ab+1 and ac+1 are enumerated; since a divides
both products, only pairs with gcd(ab, ac) >= B need the inner search over
bc+1, which reconstructs (a, b, c) from the square (abc)^2 = ab·ac·bc.
"""

from bisect import bisect_left, bisect_right
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import gmpy2
from loguru import logger

from src.arith.bounds import n3_cap
from src.arith.errors import InvalidArgumentError, VerificationError
from src.arith.numtheory import perfect_square_root
from src.arith.repdigit import repunit
from src.search.models import PHASE_LARGE, PHASE_SMALL, SearchConfig, Solution
from src.search.registry import global_phase_registry, search_phase


def repdigit_table(g: int, limit: int) -> List[int]:
    """Sorted multi-digit repdigits in base g not exceeding limit."""
    values = []
    k = 2
    while True:
        r = repunit(g, k)
        if r > limit:
            break
        values.extend(d * r for d in range(1, g) if d * r <= limit)
        k += 1
    values.sort()
    return values


def solve_products(ab: int, ac: int, bc: int) -> Optional[Tuple[int, int, int]]:
    """Recover (a, b, c) from the products ab > ac > bc, or None if inconsistent."""
    if not ab > ac > bc >= 1:
        return None
    s = perfect_square_root(ab * ac * bc)
    if s is None:
        return None
    a, ra = divmod(s, bc)
    b, rb = divmod(s, ac)
    c, rc = divmod(s, ab)
    if ra or rb or rc:
        return None
    if a * b != ab or a * c != ac or b * c != bc:
        return None
    if not a > b > c >= 1:
        return None
    return (a, b, c)


def small_phase(g: int, B: int) -> List[Solution]:
    """All triples with a < B, by direct enumeration of a and b."""
    if g < 2:
        raise InvalidArgumentError(f"base must be >= 2, got {g}")
    if B <= 3:
        return []
    # largest ab+1 with a < B is (B-1)(B-2)+1
    table = repdigit_table(g, (B - 1) * (B - 2) + 1)
    members = set(table)
    found: List[Solution] = []

    for a in range(3, B):
        # b in [2, a) means ab+1 in [2a+1, a(a-1)+1]
        lo = bisect_left(table, 2 * a + 1)
        hi = bisect_right(table, a * (a - 1) + 1)
        for i in range(lo, hi):
            b, rem = divmod(table[i] - 1, a)
            if rem:
                continue
            c_lo = bisect_left(table, a + 1)
            c_hi = bisect_right(table, a * (b - 1) + 1)
            for j in range(c_lo, c_hi):
                c, rem = divmod(table[j] - 1, a)
                if rem or b * c + 1 not in members:
                    continue
                solution = Solution.from_triple(g, a, b, c)
                if solution is not None:
                    found.append(solution)

    found.sort()
    logger.debug(f"small phase g={g} B={B}: {len(found)} triples")
    return found


def _match_bc(
    g: int,
    ab: gmpy2.mpz,
    ac: gmpy2.mpz,
    n2: int,
    repunits: Sequence[gmpy2.mpz],
    found: Dict[Tuple[int, int, int], Solution],
) -> None:
    for n1 in range(2, n2 + 1):
        r1 = repunits[n1]
        for d1 in range(1, g):
            bc = d1 * r1 - 1
            if bc >= ac:
                break
            triple = solve_products(int(ab), int(ac), int(bc))
            if triple is None:
                continue
            solution = Solution.from_triple(g, *triple)
            if solution is not None:
                found[solution.key] = solution


def _large_slice(g: int, B: int, cap: int, n2_values: Iterable[int]) -> List[Solution]:
    repunits = [gmpy2.mpz(0)] + [gmpy2.mpz(repunit(g, n)) for n in range(1, cap + 1)]
    bound = gmpy2.mpz(B)
    gcd = gmpy2.gcd
    found: Dict[Tuple[int, int, int], Solution] = {}
    hits = 0

    for n2 in n2_values:
        r2 = repunits[n2]
        acs = [d2 * r2 - 1 for d2 in range(1, g)]
        # gcd(ab, ac) <= ac, so digits with ac < B never pass the filter
        first = bisect_left(acs, bound)
        if first == len(acs):
            continue
        for n3 in range(n2, min(cap, 2 * n2) + 1):
            r3 = repunits[n3]
            for d3 in range(1, g):
                ab = d3 * r3 - 1
                # ab+1 > ac+1 forces d2 < d3 when the lengths agree
                stop = d3 - 1 if n3 == n2 else g - 1
                for i in range(first, stop):
                    ac = acs[i]
                    if gcd(ab, ac) < bound:
                        continue
                    hits += 1
                    _match_bc(g, ab, ac, n2, repunits, found)

    logger.debug(f"large phase slice g={g} B={B}: {hits} gcd-filter hits, {len(found)} triples")
    return list(found.values())


def _large_slice_task(args: Tuple[int, int, int, Tuple[int, ...]]) -> List[Solution]:
    return _large_slice(*args)


def large_phase(g: int, B: int, cap: int, workers: int = 1) -> List[Solution]:
    """Triples whose products ab, ac have gcd >= B, with repdigit lengths up to cap."""
    if g < 3:
        raise InvalidArgumentError(f"large phase needs g >= 3, got {g}")
    if cap < 2:
        return []
    n2_values = list(range(2, cap + 1))
    if workers <= 1:
        found = _large_slice(g, B, cap, n2_values)
    else:
        # longest lengths carry the most work; schedule them first
        tasks = [(g, B, cap, (n2,)) for n2 in reversed(n2_values)]
        found = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_large_slice_task, tasks):
                found.extend(part)
    unique = {s.key: s for s in found}
    return sorted(unique.values())


@search_phase(name=PHASE_SMALL, description="direct enumeration of a < B", order=0)
def _run_small(g: int, B: int, cap: int, workers: int) -> List[Solution]:
    return small_phase(g, B)


@search_phase(name=PHASE_LARGE, description="gcd-filtered repdigit enumeration", order=1, min_base=3)
def _run_large(g: int, B: int, cap: int, workers: int) -> List[Solution]:
    return large_phase(g, B, cap, workers=workers)


def search_base(g: int, config: Optional[SearchConfig] = None) -> List[Solution]:
    """All triples in base g, deduplicated, verified and sorted by (a, b, c)."""
    config = config or SearchConfig()
    if g < 2:
        raise InvalidArgumentError(f"base must be >= 2, got {g}")
    if g == 2:
        # (abc)^2 = 8·(odd) has no solution
        logger.debug("g=2: no triples, skipping search")
        return []

    B = config.threshold_for(g)
    cap = config.n3_cap_override if config.n3_cap_override is not None else n3_cap(g)
    merged: Dict[Tuple[int, int, int], Solution] = {}
    for phase in global_phase_registry.phases_for(config.phases, g):
        for solution in phase.function(g, B, cap, config.workers):
            merged.setdefault(solution.key, solution)

    for solution in merged.values():
        if not solution.verify():
            raise VerificationError(f"triple {solution.key} failed re-verification in base {g}")

    result = sorted(merged.values())
    logger.info(f"g={g} B={B} cap={cap}: {len(result)} triples")
    return result
