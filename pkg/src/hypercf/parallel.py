"""Parallel delta-schedule search with results identical to the sequential scan.

Indices are dealt round-robin: worker s of w owns {s+1, s+1+w, s+1+2w, ...}.
Workers run in synchronized waves of indices; when any worker reports a hit,
the wave is completed and the hit with the smallest (i, variant) key is
returned, so the witness is always the one the sequential scan would have
found first, regardless of wall-clock racing. Candidate and gcd counters are
reconstructed from per-candidate records to match the sequential run exactly;
raw per-worker totals (including overshoot past the winning index) are
reported alongside.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .attack import (
    AttackConfig,
    AttackResult,
    AttackStatus,
    DeltaCandidate,
    DeltaVariant,
    _gcd_scan,
    _precheck,
    attack,
    delta_schedule,
    p4_ratio,
)
from .confrac import Convergent

# Indices per worker per synchronization wave. Small enough to limit overshoot
# past an early hit, large enough to amortize task dispatch.
WAVE_CHUNK = 32


@dataclass(frozen=True)
class ShardPlan:
    """Round-robin ownership: shard s of w workers owns s+1, s+1+w, ..."""

    workers: int
    shard: int

    def __post_init__(self) -> None:
        if self.workers < 1 or not 0 <= self.shard < self.workers:
            raise ValueError("invalid shard plan")

    def indices(self, bound: int) -> range:
        return range(self.shard + 1, bound + 1, self.workers)


# Per-candidate record: (i, variant position, tested, gcd tests run).
_Record = tuple[int, int, bool, int]


def _scan_shard(args) -> tuple[list[_Record], tuple | None]:
    """Worker task: scan one wave slice of a shard, stopping at its first hit."""
    (
        n,
        r4_num,
        r4_den,
        alpha_j4,
        first,
        last,
        step,
        variant_values,
        max_convergents,
        legacy_exponent,
    ) = args
    r4 = Fraction(r4_num, r4_den)
    variants = tuple(DeltaVariant(v) for v in variant_values)
    records: list[_Record] = []
    for i in range(first, last + 1, step):
        for pos, variant in enumerate(variants):
            cand = delta_schedule(i, alpha_j4, variant, legacy_exponent=legacy_exponent)
            if not cand.positive:
                records.append((i, pos, False, 0))
                continue
            hit, tests = _gcd_scan(n, r4 + cand.value, max_convergents)
            records.append((i, pos, True, tests))
            if hit is not None:
                found = (
                    i,
                    pos,
                    cand.m,
                    cand.value.numerator,
                    cand.value.denominator,
                    hit.factor,
                    hit.convergent.p,
                    hit.convergent.q,
                    hit.index,
                )
                return records, found
    return records, None


def parallel_attack(n: int, config: AttackConfig) -> AttackResult:
    """Search with config.workers processes; result fields (besides elapsed and
    the per-worker totals) are identical to attack(n, config)."""
    if config.workers == 1:
        return attack(n, config)

    started = time.perf_counter()
    short = _precheck(n, started)
    if short is not None:
        return short

    w = config.workers
    r4 = p4_ratio(n)
    alpha_j4 = (n - 1) // 2
    bound = config.bound
    variant_values = tuple(v.value for v in config.ordered_variants)

    canon_candidates = 0
    canon_gcds = 0
    worker_candidates = [0] * w
    worker_gcds = [0] * w

    def finish(win: tuple, wave_records: list[_Record]) -> AttackResult:
        nonlocal canon_candidates, canon_gcds
        win_key = (win[0], win[1])
        for i, pos, tested, tests in wave_records:
            if tested and (i, pos) <= win_key:
                canon_candidates += 1
                canon_gcds += tests
        cand = DeltaCandidate(
            i=win[0],
            m=win[2],
            variant=config.ordered_variants[win[1]],
            value=Fraction(win[3], win[4]),
        )
        factor = win[5]
        small = min(factor, n // factor)
        return AttackResult(
            n=n,
            status=AttackStatus.FACTORED,
            factor_small=small,
            factor_large=n // small,
            delta_used=cand,
            convergent=Convergent(win[6], win[7], win[8]),
            convergent_index=win[8],
            candidates_tried=canon_candidates,
            gcd_tests=canon_gcds,
            elapsed=time.perf_counter() - started,
            worker_candidates=tuple(worker_candidates),
            worker_gcd_tests=tuple(worker_gcds),
        )

    wave_span = w * WAVE_CHUNK
    with ProcessPoolExecutor(max_workers=w) as pool:
        for wave_start in range(0, bound, wave_span):
            wave_last = min(wave_start + wave_span, bound)
            futures = []
            for shard in range(w):
                first = wave_start + shard + 1
                if first > wave_last:
                    continue
                futures.append(
                    (
                        shard,
                        pool.submit(
                            _scan_shard,
                            (
                                n,
                                r4.numerator,
                                r4.denominator,
                                alpha_j4,
                                first,
                                wave_last,
                                w,
                                variant_values,
                                config.max_convergents,
                                config.legacy_exponent,
                            ),
                        ),
                    )
                )

            wave_records: list[_Record] = []
            hits = []
            for shard, future in futures:
                records, hit = future.result()
                for _, _, tested, tests in records:
                    if tested:
                        worker_candidates[shard] += 1
                        worker_gcds[shard] += tests
                wave_records.extend(records)
                if hit is not None:
                    hits.append(hit)

            if hits:
                winner = min(hits, key=lambda h: (h[0], h[1]))
                return finish(winner, wave_records)

            for _, _, tested, tests in wave_records:
                if tested:
                    canon_candidates += 1
                    canon_gcds += tests

    return AttackResult(
        n=n,
        status=AttackStatus.EXHAUSTED,
        factor_small=None,
        factor_large=None,
        delta_used=None,
        convergent=None,
        convergent_index=None,
        candidates_tried=canon_candidates,
        gcd_tests=canon_gcds,
        elapsed=time.perf_counter() - started,
        worker_candidates=tuple(worker_candidates),
        worker_gcd_tests=tuple(worker_gcds),
    )
