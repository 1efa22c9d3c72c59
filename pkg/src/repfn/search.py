"""Exhaustive scans over all balanced prefixes at small N.

For each of the C(2N, N) balanced prefixes the scan records where r2
last vanishes and how much slack the lower bounds leave, giving an
empirical picture of how tight the catalogued thresholds are.  Results
that would contradict a checked claim abort the scan: by construction
they can only come from an implementation bug.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Optional

import numpy as np

from .profiles import cross_profile, r2_profile
from .sets import Likeness, SarkozySet, SetSpec, make_set

__all__ = [
    "SearchRecord",
    "MAX_SCAN_N",
    "enumerate_balanced_prefixes",
    "iter_scan",
    "scan",
    "default_scan_n_max",
]

# C(20, 10) = 184756 prefixes is the desk-scale cap.
MAX_SCAN_N = 10


@dataclass(frozen=True)
class SearchRecord:
    """Per-prefix summary from a scan.

    last_zero: largest n <= n_max with r2[n] = 0 (always >= 0 since
    r2[0] = 0).  min_F_margin: minimum of r2 over n >= 14(N-1).
    min_E_slack: minimum of (56N-52)(r2[n]+1) - (n+3) over n in
    [1, n_max] (the numerator of the lower-bound margin).
    """

    spec: SetSpec
    tm_like: Likeness
    last_zero: int
    min_F_margin: int
    min_E_slack: int


def default_scan_n_max(n: int) -> int:
    """Comfortably beyond the nonvanishing threshold 14(N-1)."""
    return max(200, 20 * n)


def enumerate_balanced_prefixes(n: int) -> Iterator[SetSpec]:
    """All N-element subsets of [0, 2N-1], lexicographic, each once."""
    if not 1 <= n <= MAX_SCAN_N:
        raise ValueError(f"prefix enumeration is capped at N <= {MAX_SCAN_N}")
    for elements in combinations(range(2 * n), n):
        yield SetSpec(n, elements)


def _record_for(spec: SetSpec, n_max: int) -> SearchRecord:
    s = make_set(spec)
    n = s.N
    r2 = r2_profile(s, n_max).r2
    r2_comp = r2_profile(s.complement(), n_max).r2
    if not np.array_equal(r2[2 * n - 1 :], r2_comp[2 * n - 1 :]):
        raise RuntimeError(f"complement-equality violated for {spec}: implementation bug")

    likeness = s.thue_morse_likeness()
    zeros = np.flatnonzero(r2 == 0)
    last_zero = int(zeros[-1])

    f_lo = 14 * (n - 1)  # n_max reaches this by the iter_scan precondition
    min_f = int(r2[f_lo:].min())
    if likeness is Likeness.NEITHER and min_f < 1:
        raise RuntimeError(f"nonvanishing bound violated for {spec}: implementation bug")

    ns = np.arange(n_max + 1, dtype=np.int64)
    slack = (56 * n - 52) * (r2 + 1) - (ns + 3)
    min_e = int(slack[1:].min())
    if (
        n >= 2
        and min_e < 0
        and s.intersects_infinitely("A0")
        and s.intersects_infinitely("B0")
    ):
        raise RuntimeError(f"lower bound violated for {spec}: implementation bug")

    return SearchRecord(spec, likeness, last_zero, min_f, min_e)


def _scan_chunk(args: tuple[int, int, list[tuple[int, ...]]]) -> list[SearchRecord]:
    n, n_max, element_lists = args
    return [_record_for(SetSpec(n, els), n_max) for els in element_lists]


def iter_scan(
    n: int,
    n_max: Optional[int] = None,
    workers: int = 1,
    chunk_records: int = 2048,
) -> Iterator[SearchRecord]:
    """Stream one SearchRecord per balanced prefix, in lexicographic order.

    Output order is deterministic regardless of ``workers``; records are
    produced chunk by chunk so memory stays bounded.
    """
    if n_max is None:
        n_max = default_scan_n_max(n)
    if n_max < 14 * (n - 1):
        raise ValueError(f"n_max must reach the nonvanishing threshold 14(N-1) = {14 * (n - 1)}")
    specs = enumerate_balanced_prefixes(n)
    if workers <= 1:
        for spec in specs:
            yield _record_for(spec, n_max)
        return
    chunks = _chunked((spec.elements for spec in specs), chunk_records)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        args = ((n, n_max, chunk) for chunk in chunks)
        for records in pool.map(_scan_chunk, args):
            yield from records


def _chunked(items: Iterable[tuple[int, ...]], size: int) -> Iterator[list[tuple[int, ...]]]:
    buf: list[tuple[int, ...]] = []
    for item in items:
        buf.append(item)
        if len(buf) >= size:
            yield buf
            buf = []
    if buf:
        yield buf


_RECORD_BYTES = 600  # rough per-record footprint for the memory estimate


def scan(n: int, n_max: Optional[int] = None, workers: int = 1) -> list[SearchRecord]:
    """Materialized scan; honors the REPFN_MAX_MEMORY_MB cap.

    Use iter_scan (or the CLI, which streams to CSV) when the record
    list would not fit the cap.
    """
    count = comb(2 * n, n)
    cap_mb = float(os.environ.get("REPFN_MAX_MEMORY_MB", "512"))
    estimated_mb = count * _RECORD_BYTES / 2**20
    if estimated_mb > cap_mb:
        raise MemoryError(
            f"scan at N={n} would hold ~{estimated_mb:.0f} MiB of records "
            f"(cap {cap_mb:.0f} MiB); use iter_scan or raise REPFN_MAX_MEMORY_MB"
        )
    return list(iter_scan(n, n_max, workers))
