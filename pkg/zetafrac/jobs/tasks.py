"""
Chunk worker for the fractional-part scan.

A chunk covers n in [start, stop). It seeds P = p^start and Q = q^start by
exponentiation and then advances both with one multiplication per step,
so r = P mod Q is the exact numerator of {(p/q)^n} over Q = q^n.

Per step the chunk records a histogram bin, the Mahler margin
{(p/q)^n} * (10/9)^n at 53-bit float precision, threshold hits and
chunk-local running minima. Everything returned is plain data so chunks
can run in worker processes and be merged in order by the scanner.

verify_range fans a claim out over a range of n in the same way.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Iterator

import gmpy2
import mpmath

from zetafrac.jobs.schemas import ScanConfig, ScanRecord, ThresholdMode
from zetafrac.theorems.claims import run_claim
from zetafrac.theorems.classify import classify_k
from zetafrac.theorems.schemas import VerdictRecord

MARGIN_PREC = 53
# log2(8/9) rounded up with a 2^-40 allowance; log2 eps(n) <= 2 + n*log2(8/9)
LOG2_EIGHT_NINTHS_UPPER = math.log2(8 / 9) + 2.0 ** -40


@dataclass
class ChunkResult:
    start: int
    stop: int
    records: list[ScanRecord] = field(default_factory=list)
    histogram: list[int] = field(default_factory=list)
    min_margin: tuple[int, int, int] | None = None  # (n, man, exp)
    exact_checks: int = 0


def mahler_margin(r, Q, n: int) -> mpmath.mpf:
    with mpmath.workprec(MARGIN_PREC):
        return mpmath.mpf(int(r)) / mpmath.mpf(int(Q)) * mpmath.power(mpmath.mpf(10) / 9, n)


def margin_text(value: mpmath.mpf) -> str:
    return mpmath.nstr(value, 15)


def _fixed_log2_upper(cfg: ScanConfig) -> int:
    t = cfg.threshold_value
    # t < 2^(bl(num) - bl(den) + 1)
    return t.numerator.bit_length() - t.denominator.bit_length() + 1


def _below_fixed(r, Q, cfg: ScanConfig) -> bool:
    t = cfg.threshold_value
    return r * t.denominator < t.numerator * Q


def _below_adaptive(r, P, Q, n: int, cfg: ScanConfig) -> bool:
    """{(4/3)^n} < eps(n) narrows the candidates; k(n) = 1 decides."""
    if n < 2:
        # k(n) is defined from n = 2
        return False
    head = P + Q
    if not r * gmpy2.mpz(18) ** n < head * head * Q:
        return False
    return classify_k(n, max_rounds=cfg.max_rounds).k == 1


def scan_chunk(cfg: ScanConfig, start: int, stop: int) -> ChunkResult:
    p, q = gmpy2.mpz(cfg.p), gmpy2.mpz(cfg.q)
    bins = cfg.histogram_bins
    adaptive = cfg.threshold_mode is ThresholdMode.ADAPTIVE
    fixed_upper = None if adaptive else _fixed_log2_upper(cfg)

    result = ChunkResult(start=start, stop=stop, histogram=[0] * bins)
    P = p ** start
    Q = q ** start
    min_num, min_den = None, None
    min_margin = None

    for n in range(start, stop):
        if n > start:
            P *= p
            Q *= q
        r = P % Q

        result.histogram[int(r * bins // Q)] += 1

        margin = mahler_margin(r, Q, n)
        if min_margin is None or margin < min_margin[0]:
            min_margin = (margin, n)

        # pre-filter: {.} >= 2^(bl(r)-1-bl(Q)) proves {.} > 2*threshold
        rough = r.bit_length() - 1 - Q.bit_length()
        if adaptive:
            bound = 2 + n * LOG2_EIGHT_NINTHS_UPPER
        else:
            bound = fixed_upper
        if cfg.prefilter and rough >= bound + 1:
            below = False
        else:
            result.exact_checks += 1
            below = _below_adaptive(r, P, Q, n, cfg) if adaptive else _below_fixed(r, Q, cfg)

        is_min = False
        if min_num is None:
            is_min = True
        elif r.bit_length() - Q.bit_length() <= min_num.bit_length() - min_den.bit_length() + 1:
            is_min = r * min_den < min_num * Q
        if is_min:
            min_num, min_den = r, Q

        if below or is_min or n % cfg.sample_stride == 0:
            result.records.append(
                ScanRecord(
                    n=n,
                    frac_num=int(r),
                    den=int(Q),
                    below_threshold=below,
                    mahler_margin=margin_text(margin),
                    is_running_min=is_min,
                )
            )

    if min_margin is not None:
        man, exp = min_margin[0].man_exp
        result.min_margin = (min_margin[1], int(man), int(exp))
    return result


def verify_range(claim_id: str, ns: range, *, workers: int = 1, **options) -> Iterator[VerdictRecord]:
    """Run one claim over ns; results arrive in ascending n whatever the worker count."""
    job = partial(run_claim, claim_id, **options)
    if workers <= 1 or len(ns) <= 1:
        yield from map(job, ns)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(job, ns, chunksize=max(1, len(ns) // (4 * workers)))
