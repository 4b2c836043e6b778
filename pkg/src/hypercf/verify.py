"""Seeded property suites over the curve identities, the delta window, and the
ratio-sum conjecture. Shared by the CLI verify command and the test suite."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import curve
from .attack import delta_window, p4_ratio, test_delta
from .confrac import cf_expand, convergents
from .primes import odd_primes, random_prime


@dataclass
class PropertyCheck:
    name: str
    passed: bool
    trials: int
    counterexample: str | None = None
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" {self.detail}" if self.detail else ""
        bad = f" counterexample: {self.counterexample}" if self.counterexample else ""
        return f"{status} {self.name} (trials={self.trials}){extra}{bad}"


@dataclass
class _Run:
    """Collects per-property outcomes, stopping detail at the first failure."""

    checks: list[PropertyCheck] = field(default_factory=list)

    def record(self, name: str, trials: int, failure: str | None, detail: str = "") -> None:
        self.checks.append(
            PropertyCheck(
                name=name,
                passed=failure is None,
                trials=trials,
                counterexample=failure,
                detail=detail,
            )
        )


def _random_odd_prime(rng: random.Random, max_bits: int) -> int:
    bits = rng.randrange(3, max(4, max_bits + 1))
    prime = random_prime(bits, rng)
    while prime == 2:
        prime = random_prime(bits, rng)
    return prime


def random_semiprime(rng: random.Random, prime_bits: int) -> tuple[int, int, int]:
    """Distinct odd primes p < q of up to prime_bits bits, and n = p*q."""
    while True:
        p = _random_odd_prime(rng, prime_bits)
        q = _random_odd_prime(rng, prime_bits)
        if p != q:
            p, q = min(p, q), max(p, q)
            return p, q, p * q


def check_ratio_split_identities(trials: int, seed: int) -> list[PropertyCheck]:
    """Split of odd p into consecutive halves: sum, difference, coprimality,
    and the even-power identity ai^a - aj^a = p * delta for a in {2,4,6,8}."""
    rng = random.Random(seed)
    run = _Run()
    split_fail = power_fail = None
    for _ in range(trials):
        p = rng.randrange(3, 1 << 48, 2)
        ai, aj = curve.split_ratio(p)
        if not (ai + aj == p and ai - aj == 1 and gcd(ai, aj) == 1):
            split_fail = split_fail or f"p={p}"
        for a in (2, 4, 6, 8):
            delta = curve.power_identity_delta(ai, aj, a)
            if ai ** a - aj ** a != p * delta:
                power_fail = power_fail or f"p={p} a={a}"
    run.record("ratio_split_sum_diff_coprime", trials, split_fail)
    run.record("even_power_identity", trials * 4, power_fail)
    return run.checks


def check_prime_square_cardinality(count: int = 100) -> list[PropertyCheck]:
    """Squares of odd primes carry exactly three structural points."""
    run = _Run()
    failure = None
    for t in odd_primes(count):
        fact = curve.Factorization(((t, 2),))
        points = curve.enumerate_points(fact)
        if len(points) != 3:
            failure = failure or f"t={t} gave {len(points)} points"
            continue
        expected = sorted(
            [
                curve.Point(4 * t * t, 0),
                curve.Point(t * (t + 1) ** 2, t * (t * t - 1)),
                curve.Point((t * t + 1) ** 2, t ** 4 - 1),
            ]
        )
        if points != expected:
            failure = failure or f"t={t} wrong coordinates"
    run.record("prime_square_cardinality_3", count, failure)
    return run.checks


def check_group_laws(trials: int, seed: int, prime_bits: int = 16) -> list[PropertyCheck]:
    """Closure, identity, the two-prime sum law, parametrization inverse,
    ratio monotonicity, the totient identity, and the P,S system on random
    odd semiprimes."""
    rng = random.Random(seed)
    run = _Run()
    closure_fail = identity_fail = sum_fail = inverse_fail = None
    monotonic_fail = totient_fail = system_fail = cross_ratio_fail = None

    for _ in range(trials):
        p, q, n = random_semiprime(rng, prime_bits)
        fact = curve.Factorization.from_primes(p, q)
        points = curve.enumerate_points(fact)

        for a in points:
            for b in points:
                s = curve.add_points(n, a, b)
                if not curve.is_on_curve(n, s):
                    closure_fail = closure_fail or f"n={n} {a}+{b}"

        vertex = curve.Point(4 * n, 0)
        for a in points:
            if curve.add_points(n, vertex, a) != a:
                identity_fail = identity_fail or f"n={n} {a}"

        alpha2, alpha3 = (p - 1) // 2, (q - 1) // 2
        p2 = curve.point_from_alpha(n, alpha2)
        p3 = curve.point_from_alpha(n, alpha3)
        p4 = curve.point_from_alpha(n, (n - 1) // 2)
        if curve.add_points(n, p2, p3) != p4:
            sum_fail = sum_fail or f"n={n}"

        divisor_alphas = [(t - 1) // 2 for t in fact.divisors()]
        for alpha in divisor_alphas:
            pt = curve.point_from_alpha(n, alpha)
            if curve.alpha_from_point(pt) != alpha:
                inverse_fail = inverse_fail or f"n={n} alpha={alpha}"
            if not curve.scalar_orthogonality(alpha, pt):
                inverse_fail = inverse_fail or f"n={n} alpha={alpha} orthogonality"

        fractions = [Fraction(a, a + 1) for a in sorted(divisor_alphas)]
        if any(x >= y for x, y in zip(fractions, fractions[1:])):
            monotonic_fail = monotonic_fail or f"n={n}"
        ratios = [curve.ratio_of_point(pt) for pt in (p2, p3, p4)]
        if not ratios[0] > ratios[1] > ratios[2]:
            monotonic_fail = monotonic_fail or f"n={n} point ratios"

        if not curve.totient_identity_holds(p, q):
            totient_fail = totient_fail or f"n={n}"
        if not curve.verify_ps_system(alpha2, alpha3, n):
            system_fail = system_fail or f"n={n}"
        if curve.verify_ps_system(alpha2, alpha3, n + 2):
            system_fail = system_fail or f"n={n} accepted wrong modulus"

        cross = curve.Point((p + q) ** 2, q * q - p * p)
        expected = Fraction(alpha2 + alpha3 + 1, abs(alpha3 - alpha2))
        if curve.ratio_of_point(cross) != expected:
            cross_ratio_fail = cross_ratio_fail or f"n={n}"

    run.record("group_closure", trials, closure_fail)
    run.record("identity_point", trials, identity_fail)
    run.record("prime_points_sum_to_top", trials, sum_fail)
    run.record("alpha_parametrization_inverse", trials, inverse_fail)
    run.record("ratio_monotonicity", trials, monotonic_fail)
    run.record("totient_is_4_alpha2_alpha3", trials, totient_fail)
    run.record("ps_polynomial_system", trials, system_fail)
    run.record("cross_point_ratio_form", trials, cross_ratio_fail)
    return run.checks


def check_polynomial_coordinates(trials: int, seed: int, prime_bits: int = 16) -> list[PropertyCheck]:
    """The explicit polynomial coordinates agree with the parametrized points."""
    rng = random.Random(seed)
    run = _Run()
    failure = None
    for _ in range(trials):
        p, q, n = random_semiprime(rng, prime_bits)
        alpha2, alpha3 = (p - 1) // 2, (q - 1) // 2
        poly = curve.points_from_prime_alphas(alpha2, alpha3)
        expected = {
            0: curve.point_from_alpha(n, 0),
            1: curve.Point((p + q) ** 2, q * q - p * p),
            2: curve.point_from_alpha(n, alpha2),
            3: curve.point_from_alpha(n, alpha3),
            4: curve.point_from_alpha(n, (n - 1) // 2),
        }
        if poly != expected:
            failure = failure or f"n={n}"
    run.record("polynomial_coordinates", trials, failure)
    return run.checks


def theorem_suite(trials: int = 500, seed: int = 1, max_bits: int = 32) -> list[PropertyCheck]:
    """The full identity suite at spec-scale defaults."""
    prime_bits = max(3, max_bits // 2)
    checks = []
    checks += check_ratio_split_identities(trials, seed)
    checks += check_prime_square_cardinality(100)
    checks += check_group_laws(min(trials, 200), seed + 1, prime_bits)
    checks += check_polynomial_coordinates(min(trials, 100), seed + 2, prime_bits)
    return checks


def window_suite(trials: int = 200, seed: int = 1, max_bits: int = 32) -> list[PropertyCheck]:
    """Exact window upper bound always reveals a factor, satisfies the
    Legendre inequality, and the target ratio appears among the convergents."""
    prime_bits = max(3, min(16, max_bits // 2))
    rng = random.Random(seed)
    run = _Run()
    lemma_fail = hit_fail = legendre_fail = member_fail = None

    for _ in range(trials):
        p, q, n = random_semiprime(rng, prime_bits)
        alpha_j3 = (q - 1) // 2
        alpha_i3 = (q + 1) // 2
        alpha_j4 = (n - 1) // 2

        if not 3 * alpha_j3 < alpha_j4:
            lemma_fail = lemma_fail or f"n={n}"
            continue

        _, high = delta_window(alpha_j3, alpha_j4)
        r4 = p4_ratio(n)
        target_ratio = Fraction(alpha_i3, alpha_j3)

        if test_delta(n, r4, high) is None:
            hit_fail = hit_fail or f"n={n} delta={high}"

        if abs(r4 + high - target_ratio) >= Fraction(1, 2 * alpha_j3 ** 2):
            legendre_fail = legendre_fail or f"n={n}"

        if target_ratio not in (c.value for c in convergents(cf_expand(r4 + high))):
            member_fail = member_fail or f"n={n}"

    run.record("lemma_3aj3_below_aj4", trials, lemma_fail)
    run.record("window_upper_bound_reveals_factor", trials, hit_fail)
    run.record("legendre_inequality", trials, legendre_fail)
    run.record("target_ratio_is_convergent", trials, member_fail)
    return run.checks


def conjecture_suite(trials: int = 50, seed: int = 1, max_bits: int = 32) -> list[PropertyCheck]:
    """Empirical rate report for the ratio-sum observations; never fails."""
    prime_bits = max(3, max_bits // 2)
    rng = random.Random(seed)
    held = 0
    for _ in range(trials):
        p, q, _ = random_semiprime(rng, prime_bits)
        report = curve.check_conjecture(curve.Factorization.from_primes(p, q))
        if report.p1_sum_equals_p3_sum and report.sums_in_pqn:
            held += 1
    return [
        PropertyCheck(
            name="ratio_sum_conjecture",
            passed=True,
            trials=trials,
            detail=f"held on {held}/{trials} semiprimes",
        )
    ]


SUITES = {
    "theorems": theorem_suite,
    "window": window_suite,
    "conjecture": conjecture_suite,
}
