"""Sweeps over ranges of bases with a process pool and ordered output."""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Iterable, Iterator, Optional, Tuple
import sys
import time

from loguru import logger
from tqdm import tqdm

from src.arith.bounds import n3_cap
from src.arith.errors import InvalidArgumentError
from src.search.core import search_base
from src.search.models import SearchConfig, Solution


@dataclass(frozen=True)
class BaseResult:
    """Outcome of searching one base; ``error`` is set when the search failed."""
    g: int
    solutions: Tuple[Solution, ...]
    threshold: int
    n3_cap: int
    wall_time: float
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None


def _search_one(g: int, config: SearchConfig) -> BaseResult:
    start = time.perf_counter()
    threshold = config.threshold_for(g)
    cap = 0
    try:
        cap = config.n3_cap_override if config.n3_cap_override is not None else n3_cap(g)
        solutions = search_base(g, config)
    except Exception as e:
        logger.exception(f"Search failed for g={g}")
        return BaseResult(
            g=g, solutions=(), threshold=threshold, n3_cap=cap,
            wall_time=time.perf_counter() - start,
            error=f"{type(e).__name__}: {e}",
        )
    return BaseResult(
        g=g, solutions=tuple(solutions), threshold=threshold, n3_cap=cap,
        wall_time=time.perf_counter() - start,
    )


def search_range(
    g_lo: int,
    g_hi: int,
    config: Optional[SearchConfig] = None,
    skip: Iterable[int] = (),
) -> Iterator[BaseResult]:
    """Yield one BaseResult per base in ascending order, whatever the worker count."""
    config = config or SearchConfig()
    if not 2 <= g_lo <= g_hi:
        raise InvalidArgumentError(f"need 2 <= g_lo <= g_hi, got {g_lo}..{g_hi}")
    skipped = set(skip)
    bases = [g for g in range(g_lo, g_hi + 1) if g not in skipped]
    if skipped:
        logger.info(f"Skipping {len(range(g_lo, g_hi + 1)) - len(bases)} certified bases")

    progress = tqdm(total=len(bases), disable=not config.emit_progress, file=sys.stderr, unit="base")
    try:
        if config.workers <= 1 or len(bases) <= 1:
            # a lone base may still split its own large phase across workers
            for g in bases:
                result = _search_one(g, config)
                progress.update(1)
                yield result
            return

        per_base = replace(config, workers=1, emit_progress=False)
        pool = ProcessPoolExecutor(max_workers=config.workers)
        try:
            futures = [pool.submit(_search_one, g, per_base) for g in bases]
            for future in futures:
                result = future.result()
                progress.update(1)
                yield result
        finally:
            pool.shutdown(wait=True, cancel_futures=True)
    finally:
        progress.close()
