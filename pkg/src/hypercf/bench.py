"""Benchmark runs over seeded semiprimes: operation counters and wall times
per bound exponent and worker count, emitted as CSV rows."""

from __future__ import annotations

import csv
import io
from typing import NamedTuple

from .attack import AttackConfig, AttackStatus, attack
from .parallel import parallel_attack
from .rsa import keygen

CSV_HEADER = (
    "n_bits",
    "n",
    "status",
    "i_found",
    "candidates_tried",
    "gcd_tests",
    "workers",
    "elapsed_ms",
)


class BenchRow(NamedTuple):
    n_bits: int
    n: int
    status: str
    i_found: int | None
    candidates_tried: int
    gcd_tests: int
    workers: int
    elapsed_ms: float

    def csv_values(self) -> tuple:
        return (
            self.n_bits,
            self.n,
            self.status,
            "" if self.i_found is None else self.i_found,
            self.candidates_tried,
            self.gcd_tests,
            self.workers,
            f"{self.elapsed_ms:.3f}",
        )


def run_bench(
    bits_list: list[int],
    bound_exponent: int,
    workers_list: list[int],
    seed: int = 1,
    max_convergents: int | None = None,
) -> list[BenchRow]:
    """One attack run per (bits, workers) pair over seeded semiprimes.

    The modulus for each bit size is derived only from (bits, seed), so
    non-timing columns are identical across reruns.
    """
    if not bits_list:
        raise ValueError("empty bits list")
    rows = []
    for offset, bits in enumerate(bits_list):
        key = keygen(bits, seed + offset)
        for workers in workers_list:
            config = AttackConfig(
                bound_exponent=bound_exponent,
                workers=workers,
                max_convergents=max_convergents,
            )
            runner = parallel_attack if workers > 1 else attack
            result = runner(key.n, config)
            rows.append(
                BenchRow(
                    n_bits=key.n.bit_length(),
                    n=key.n,
                    status=result.status.value,
                    i_found=result.delta_used.i
                    if result.status is AttackStatus.FACTORED and result.delta_used
                    else None,
                    candidates_tried=result.candidates_tried,
                    gcd_tests=result.gcd_tests,
                    workers=workers,
                    elapsed_ms=result.elapsed * 1000.0,
                )
            )
    return rows


def rows_to_csv(rows: list[BenchRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.csv_values())
    return buffer.getvalue()
