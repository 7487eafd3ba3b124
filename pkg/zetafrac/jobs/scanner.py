"""
Exhaustive scan of {(p/q)^n} over a range of n.

Chunks over disjoint n-ranges run inline or on a process pool and are
merged strictly in ascending n, so the record stream depends only on the
scan configuration: not on the worker count, the chunk size, or where a run
was interrupted and resumed.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from itertools import repeat
from typing import Iterable, Iterator

import mpmath

from zetafrac.arith.bigratio import ROUND_FLOOR, decimal_from_parts
from zetafrac.exceptions import IntegrityError
from zetafrac.jobs.checkpoint_store import ScanState, load_checkpoint, save_checkpoint
from zetafrac.jobs.schemas import ScanConfig, ScanRecord, ScanSummary
from zetafrac.jobs.tasks import ChunkResult, margin_text, scan_chunk
from zetafrac.logger import GLOBAL_LOGGER as logger


def chunk_ranges(cfg: ScanConfig, first_n: int, max_chunks: int | None = None) -> list[tuple[int, int]]:
    ranges = []
    start = first_n
    while start <= cfg.n_max and (max_chunks is None or len(ranges) < max_chunks):
        stop = min(start + cfg.chunk_size, cfg.n_max + 1)
        ranges.append((start, stop))
        start = stop
    return ranges


def _run_chunks(cfg: ScanConfig, ranges: list[tuple[int, int]], workers: int) -> Iterable[ChunkResult]:
    if workers <= 1 or len(ranges) <= 1:
        for start, stop in ranges:
            yield scan_chunk(cfg, start, stop)
        return
    starts = [r[0] for r in ranges]
    stops = [r[1] for r in ranges]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map yields in submission order
        yield from pool.map(scan_chunk, repeat(cfg), starts, stops)


def merge_chunk(state: ScanState, chunk: ChunkResult, cfg: ScanConfig) -> list[ScanRecord]:
    """Fold one chunk into the running state; returns the records to emit, ascending n."""
    if chunk.start != state.last_n + 1:
        raise IntegrityError(f"chunk [{chunk.start}, {chunk.stop}) merged out of order after n={state.last_n}")

    emitted = []
    for rec in chunk.records:
        new_min = False
        if rec.is_running_min and (state.min_num is None or rec.frac_num * state.min_den < state.min_num * rec.den):
            state.min_n, state.min_num, state.min_den = rec.n, rec.frac_num, rec.den
            new_min = True
        if rec.below_threshold:
            state.hits.append(rec.n)
        if rec.below_threshold or new_min or rec.n % cfg.sample_stride == 0:
            emitted.append(rec)

    if chunk.min_margin is not None:
        n, man, exp = chunk.min_margin
        if state.min_margin is None or mpmath.mpf((man, exp)) < mpmath.mpf(state.min_margin):
            state.min_margin_n, state.min_margin = n, (man, exp)

    state.histogram = [a + b for a, b in zip(state.histogram, chunk.histogram)]
    state.count += chunk.stop - chunk.start
    state.last_n = chunk.stop - 1
    return emitted


def summarize(cfg: ScanConfig, state: ScanState) -> ScanSummary:
    return ScanSummary(
        config_hash=cfg.config_hash(),
        n_min=cfg.n_min,
        n_max=cfg.n_max,
        last_n=state.last_n,
        completed=state.last_n >= cfg.n_max,
        count=state.count,
        hits=list(state.hits),
        min_frac_n=state.min_n,
        min_frac=None if state.min_n is None else decimal_from_parts(state.min_num, state.min_den, 60, ROUND_FLOOR),
        min_mahler_n=state.min_margin_n,
        min_mahler_margin=None if state.min_margin is None else margin_text(mpmath.mpf(state.min_margin)),
        histogram=list(state.histogram),
    )


def scan(
    cfg: ScanConfig,
    *,
    workers: int = 1,
    resume: bool = False,
    max_chunks: int | None = None,
) -> Iterator[ScanRecord | ScanSummary]:
    """Yield emitted ScanRecords in ascending n, then one ScanSummary.

    max_chunks stops after that many chunks, leaving the checkpoint as an
    interrupted run would.
    """
    if resume and cfg.checkpoint_path:
        state = load_checkpoint(cfg.checkpoint_path, cfg)
    else:
        state = ScanState.fresh(cfg)

    ranges = chunk_ranges(cfg, state.last_n + 1, max_chunks)
    logger.info(
        f"[scan] p/q={cfg.p}/{cfg.q} n={state.last_n + 1}..{cfg.n_max} "
        f"mode={cfg.threshold_mode.value} chunks={len(ranges)} workers={workers}"
    )

    for chunk in _run_chunks(cfg, ranges, workers):
        yield from merge_chunk(state, chunk, cfg)
        if cfg.checkpoint_path:
            save_checkpoint(cfg.checkpoint_path, cfg, state)
        logger.info(
            f"[scan] merged n={chunk.start}..{chunk.stop - 1} hits={len(state.hits)} "
            f"exact_checks={chunk.exact_checks}"
        )

    yield summarize(cfg, state)
