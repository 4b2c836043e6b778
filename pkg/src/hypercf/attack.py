"""Factoring an odd modulus by gcd-testing convergents of a perturbed ratio.

The top structural point of the curve for n has the reduced slope ratio
(n+1)/(n-1). For a semiprime n = p*q the analogous ratio of the larger
prime's point, (q+1)/(q-1) reduced, is a convergent of (n+1)/(n-1) + delta
whenever delta falls in the window

    ((aj4 - aj3) / (aj4*aj3),  (1 + aj4 - aj3) / (aj4*aj3)]

with aj3 = (q-1)/2 and aj4 = (n-1)/2. The attack therefore walks a schedule
of exact rational deltas built from powers of ten, expands (n+1)/(n-1)+delta
as a continued fraction, and gcd-tests the sum p_k + q_k of every convergent
against n. Success depends only on n, not on the RSA exponents.
"""

from __future__ import annotations

import enum
import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple

from .confrac import Convergent, convergent_stream
from .primes import is_probable_prime, perfect_power_root

log = logging.getLogger(__name__)


class DeltaVariant(enum.Enum):
    """Two readings of the delta schedule; RAW is tried before SCALED."""

    RAW = "raw"
    SCALED = "scaled"


# Canonical order used everywhere a candidate list is walked.
VARIANT_ORDER = (DeltaVariant.RAW, DeltaVariant.SCALED)


class AttackStatus(enum.Enum):
    FACTORED = "FACTORED"
    EXHAUSTED = "EXHAUSTED"


@dataclass(frozen=True)
class DeltaCandidate:
    """One element of the delta schedule.

    RAW:    value = i / 10^m
    SCALED: value = (1 + aj4)/aj4 * i/10^m - 1/aj4
    with m = floor(digits10(aj4) / 2) + digits10(i) in the default mode.
    Non-positive values are possible for SCALED at small i and are skipped by
    the search loop.
    """

    i: int
    m: int
    variant: DeltaVariant
    value: Fraction

    @property
    def positive(self) -> bool:
        return self.value > 0


@dataclass(frozen=True)
class AttackConfig:
    """Search parameters: the schedule runs i = 1 .. 10^bound_exponent."""

    bound_exponent: int
    variants: tuple[DeltaVariant, ...] = VARIANT_ORDER
    max_convergents: int | None = None
    workers: int = 1
    progress_interval: int | None = None
    legacy_exponent: bool = False

    def __post_init__(self) -> None:
        if self.bound_exponent < 1:
            raise ValueError("bound exponent must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if not self.variants:
            raise ValueError("at least one delta variant required")
        if len(set(self.variants)) != len(self.variants):
            raise ValueError("duplicate delta variants")

    @property
    def bound(self) -> int:
        return 10 ** self.bound_exponent

    @property
    def ordered_variants(self) -> tuple[DeltaVariant, ...]:
        return tuple(v for v in VARIANT_ORDER if v in self.variants)


@dataclass(frozen=True)
class AttackResult:
    """Outcome of one search run.

    candidates_tried counts delta candidates actually gcd-scanned (positive
    values only); gcd_tests counts individual convergent tests. For parallel
    runs the two match the sequential scan exactly, while worker_candidates /
    worker_gcd_tests record the raw per-worker totals including overshoot.
    """

    n: int
    status: AttackStatus
    factor_small: int | None
    factor_large: int | None
    delta_used: DeltaCandidate | None
    convergent: Convergent | None
    convergent_index: int | None
    candidates_tried: int
    gcd_tests: int
    elapsed: float
    worker_candidates: tuple[int, ...] | None = None
    worker_gcd_tests: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.status is AttackStatus.FACTORED:
            small, large = self.factor_small, self.factor_large
            if small is None or large is None:
                raise ValueError("factored result lacks factors")
            if not (1 < small <= large < self.n) or small * large != self.n:
                raise ValueError("unsound factorization result")


class DeltaHit(NamedTuple):
    factor: int
    convergent: Convergent
    index: int


def _digits10(n: int) -> int:
    return len(str(n))


def p4_ratio(n: int) -> Fraction:
    """Reduced (n+1)/(n-1) for odd n >= 3; numerator exceeds denominator by 1."""
    if n % 2 == 0:
        raise ValueError("even modulus unsupported")
    if n < 3:
        raise ValueError("modulus must be >= 3")
    return Fraction(n + 1, n - 1)


def delta_schedule(
    i: int,
    alpha_j4: int,
    variant: DeltaVariant,
    *,
    legacy_exponent: bool = False,
) -> DeltaCandidate:
    """Build the i-th delta candidate for a modulus with aj4 = (n-1)/2.

    The power-of-ten exponent is m = floor(digits10(aj4)/2) + digits10(i),
    which aligns i/10^m with the magnitude of 1/aj3 (aj3 has about half the
    digits of aj4). legacy_exponent instead uses
    floor(digits10(n)/2) + 1 + digits10(i); it is kept only for comparison and
    does not reproduce the known worked examples.
    """
    if i < 1:
        raise ValueError("schedule starts at i = 1")
    if legacy_exponent:
        m = _digits10(2 * alpha_j4 + 1) // 2 + 1 + _digits10(i)
    else:
        m = _digits10(alpha_j4) // 2 + _digits10(i)
    base = Fraction(i, 10 ** m)
    if variant is DeltaVariant.RAW:
        value = base
    else:
        value = Fraction(1 + alpha_j4, alpha_j4) * base - Fraction(1, alpha_j4)
    return DeltaCandidate(i=i, m=m, variant=variant, value=value)


def delta_window(alpha_j3: int, alpha_j4: int) -> tuple[Fraction, Fraction]:
    """The half-open delta window (low, high] that guarantees a factor hit.

    Requires 3*aj3 < aj4, which holds for every odd semiprime with smallest
    prime factor >= 3.
    """
    if not 3 * alpha_j3 < alpha_j4:
        raise ValueError("window undefined: need 3*alpha_j3 < alpha_j4")
    den = alpha_j4 * alpha_j3
    return (
        Fraction(alpha_j4 - alpha_j3, den),
        Fraction(1 + alpha_j4 - alpha_j3, den),
    )


def _gcd_scan(
    n: int, target: Fraction, max_convergents: int | None
) -> tuple[DeltaHit | None, int]:
    """Scan convergents of `target`, returning the first factor hit and the
    number of gcd tests performed."""
    tests = 0
    for conv in convergent_stream(target):
        if max_convergents is not None and tests >= max_convergents:
            break
        tests += 1
        g = gcd(n, conv.p + conv.q)
        if 1 < g < n:
            return DeltaHit(g, conv, conv.k), tests
    return None, tests


def test_delta(
    n: int,
    r4: Fraction,
    delta: Fraction,
    max_convergents: int | None = None,
) -> DeltaHit | None:
    """Expand r4 + delta and gcd-test each convergent sum p_k + q_k against n.

    Returns the first hit with 1 < gcd < n, or None if the expansion is
    exhausted. Every convergent is tested, including integer ones: a sum
    merely sharing a factor with n is enough.
    """
    if delta <= 0:
        raise ValueError("delta must be positive")
    hit, _ = _gcd_scan(n, r4 + delta, max_convergents)
    return hit


def _precheck(n: int, started: float) -> AttackResult | None:
    """Reject bad moduli; short-circuit perfect powers with a root factor."""
    if n % 2 == 0:
        raise ValueError("even modulus unsupported")
    if n < 5:
        raise ValueError("modulus must be an odd composite > 4")
    if is_probable_prime(n):
        raise ValueError("input prime")
    root = perfect_power_root(n)
    if root is not None:
        cofactor = n // root
        return AttackResult(
            n=n,
            status=AttackStatus.FACTORED,
            factor_small=min(root, cofactor),
            factor_large=max(root, cofactor),
            delta_used=None,
            convergent=None,
            convergent_index=None,
            candidates_tried=0,
            gcd_tests=0,
            elapsed=time.perf_counter() - started,
        )
    return None


def candidate_schedule(
    bound: int,
    alpha_j4: int,
    variants: Iterable[DeltaVariant],
    *,
    legacy_exponent: bool = False,
):
    """Yield delta candidates in canonical order: ascending i, RAW before SCALED."""
    ordered = tuple(v for v in VARIANT_ORDER if v in tuple(variants))
    for i in range(1, bound + 1):
        for variant in ordered:
            yield delta_schedule(i, alpha_j4, variant, legacy_exponent=legacy_exponent)


def attack(n: int, config: AttackConfig) -> AttackResult:
    """Run the sequential search: first factor hit over the delta schedule wins.

    Iterates i = 1 .. 10^y, testing each enabled variant (RAW first), skipping
    non-positive deltas. Deterministic: the same inputs always return the same
    result, witness included.
    """
    started = time.perf_counter()
    short = _precheck(n, started)
    if short is not None:
        return short

    r4 = p4_ratio(n)
    alpha_j4 = (n - 1) // 2
    candidates_tried = 0
    gcd_tests = 0

    for cand in candidate_schedule(
        config.bound, alpha_j4, config.variants, legacy_exponent=config.legacy_exponent
    ):
        if not cand.positive:
            continue
        hit, tests = _gcd_scan(n, r4 + cand.value, config.max_convergents)
        candidates_tried += 1
        gcd_tests += tests
        if config.progress_interval and candidates_tried % config.progress_interval == 0:
            log.info(
                "progress n=%d i=%d candidates=%d gcd_tests=%d",
                n, cand.i, candidates_tried, gcd_tests,
            )
        if hit is not None:
            small = min(hit.factor, n // hit.factor)
            return AttackResult(
                n=n,
                status=AttackStatus.FACTORED,
                factor_small=small,
                factor_large=n // small,
                delta_used=cand,
                convergent=hit.convergent,
                convergent_index=hit.index,
                candidates_tried=candidates_tried,
                gcd_tests=gcd_tests,
                elapsed=time.perf_counter() - started,
            )

    return AttackResult(
        n=n,
        status=AttackStatus.EXHAUSTED,
        factor_small=None,
        factor_large=None,
        delta_used=None,
        convergent=None,
        convergent_index=None,
        candidates_tried=candidates_tried,
        gcd_tests=gcd_tests,
        elapsed=time.perf_counter() - started,
    )


def recover_private_key(p: int, q: int, e: int) -> int:
    """Invert e modulo (p-1)(q-1): the RSA private exponent for the factor pair."""
    if p == q:
        raise ValueError("factors must be distinct primes")
    for prime in (p, q):
        if prime % 2 == 0 or not is_probable_prime(prime):
            raise ValueError(f"{prime} is not an odd prime")
    phi = (p - 1) * (q - 1)
    if gcd(e, phi) != 1:
        raise ValueError("e shares a factor with phi(n)")
    return pow(e, -1, phi)
