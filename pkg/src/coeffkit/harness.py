"""Closed-form vs oracle sweeps and timing, used by ``coeffkit verify``/``bench``."""
from __future__ import annotations

import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple

from . import oracle
from .relations import unique_row_as_printed, unique_row_closed


class Mismatch(NamedTuple):
    l: int
    r: int
    k: int
    closed: int
    oracle: int


@dataclass
class VerifyReport:
    powers: tuple[int, ...]
    rows: tuple[int, int]
    mismatches: list[Mismatch] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def as_dict(self) -> dict:
        return {
            "powers": list(self.powers),
            "rows": list(self.rows),
            "mismatches": [m._asdict() for m in self.mismatches],
            "elapsed_seconds": self.elapsed,
            "ok": self.ok,
        }


def _check_row(args: tuple[int, int, bool]) -> list[Mismatch]:
    l, r, as_printed = args
    if as_printed and l == 4:
        closed = unique_row_as_printed(r)
    else:
        closed = unique_row_closed(l, r)
    reference = oracle.unique_row_oracle(l, r)
    return [Mismatch(l, r, k, a, b)
            for k, (a, b) in enumerate(zip(closed, reference), start=1) if a != b]


def run_verify(powers, max_row: int, workers: int = 1,
               as_printed: bool = False) -> VerifyReport:
    """Compare every closed-form row with the oracle row.

    Results are ordered by ``(l, r)`` regardless of ``workers``.
    """
    powers = tuple(sorted(set(powers)))
    jobs = [(l, r, as_printed) for l in powers for r in range(1, max_row + 1)]
    start = time.perf_counter()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_check_row, jobs, chunksize=16))
    else:
        chunks = [_check_row(job) for job in jobs]
    report = VerifyReport(powers, (1, max_row))
    for found in chunks:
        report.mismatches.extend(found)
    report.elapsed = time.perf_counter() - start
    return report


class BenchRow(NamedTuple):
    r: int
    width: int
    closed_seconds: float
    oracle_seconds: float


def _median_time(fn, reps: int) -> float:
    samples = []
    for _ in range(reps):
        t0 = time.perf_counter_ns()
        fn()
        samples.append((time.perf_counter_ns() - t0) / 1e9)
    return statistics.median(samples)


def run_bench(l: int, max_row: int, reps: int) -> list[BenchRow]:
    """Median wall time per row: relation functions vs uncached expansion."""
    table = []
    for r in range(1, max_row + 1):
        closed = _median_time(lambda: unique_row_closed(l, r), reps)
        expanded = _median_time(lambda: oracle._expand(r - 1, l), reps)
        table.append(BenchRow(r, (l - 2) * (r - 1) + 1, closed, expanded))
    return table
