"""Integer points on the hyperbola y^2 = x^2 - 4nx with x >= 4n.

For an odd modulus n, every divisor t of n contributes the point with
parameter alpha = (t - 1) / 2:

    P(alpha) = (4n(alpha+1)^2 / (2alpha+1), 4n(alpha+1)alpha / (2alpha+1))

which is integral exactly when 2alpha+1 divides n. A semiprime n = p*q with
p < q carries one extra structural point ((p+q)^2, q^2 - p^2). The branch
supports a commutative addition with identity (4n, 0), under which the points
of the two prime divisors sum to the point of n itself.

Points are bare (x, y) pairs; the modulus is passed explicitly to every
operation that needs it so that points from different moduli can never be
mixed silently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .primes import is_probable_prime


class Point(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class Factorization:
    """A verified prime-power factorization ((p1, e1), (p2, e2), ...).

    Primes must be strictly increasing and actually prime; this is an input
    oracle for point enumeration, not the output of any factoring routine.
    """

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise ValueError("empty factorization")
        previous = 1
        for prime, exponent in self.factors:
            if prime <= previous:
                raise ValueError("primes must be strictly increasing")
            if exponent < 1:
                raise ValueError("exponents must be >= 1")
            if not is_probable_prime(prime):
                raise ValueError(f"{prime} is not prime")
            previous = prime

    @classmethod
    def from_primes(cls, *primes: int) -> "Factorization":
        """Build from a multiset of primes, e.g. from_primes(3, 3, 5) = 3^2 * 5."""
        counts: dict[int, int] = {}
        for p in primes:
            counts[p] = counts.get(p, 0) + 1
        return cls(tuple(sorted(counts.items())))

    @classmethod
    def parse(cls, text: str) -> "Factorization":
        """Parse "3,5" or "3^2,7" style factor lists."""
        factors = []
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            base, _, exp = part.partition("^")
            factors.append((int(base), int(exp) if exp else 1))
        return cls(tuple(sorted(factors)))

    @property
    def n(self) -> int:
        value = 1
        for prime, exponent in self.factors:
            value *= prime ** exponent
        return value

    @property
    def is_odd(self) -> bool:
        return self.factors[0][0] != 2

    @property
    def semiprime_pair(self) -> tuple[int, int] | None:
        """(p, q) with p < q if this is a product of two distinct primes."""
        if len(self.factors) == 2 and all(e == 1 for _, e in self.factors):
            return self.factors[0][0], self.factors[1][0]
        return None

    def divisors(self) -> list[int]:
        """All divisors of n, ascending."""
        axes = [
            [prime ** e for e in range(exponent + 1)]
            for prime, exponent in self.factors
        ]
        return sorted(
            _prod(combo) for combo in itertools.product(*axes)
        )


def _prod(values) -> int:
    out = 1
    for v in values:
        out *= v
    return out


def is_on_curve(n: int, pt: tuple[int, int]) -> bool:
    """True iff pt lies on y^2 = x^2 - 4nx with x >= 4n and y >= 0."""
    x, y = pt
    return x >= 4 * n and y >= 0 and y * y == x * x - 4 * n * x


def point_from_alpha(n: int, alpha: int) -> Point:
    """The curve point with parameter alpha; requires (2*alpha + 1) | n.

    The divisibility is also necessary: 2alpha+1 is odd and coprime to
    (alpha+1)^2, so nothing else in the numerator can absorb it.
    """
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    t = 2 * alpha + 1
    if n % t != 0:
        raise ValueError(f"alpha not admissible for n: {t} does not divide {n}")
    scale = 4 * (n // t)
    return Point(scale * (alpha + 1) ** 2, scale * (alpha + 1) * alpha)


def alpha_from_point(pt: tuple[int, int]) -> int:
    """Invert the parametrization: alpha = y / (x - y), exact or an error."""
    x, y = pt
    if x == y:
        raise ValueError("alpha undefined when x equals y")
    alpha, rem = divmod(y, x - y)
    if rem != 0:
        raise ValueError("point not alpha-parametrized")
    return alpha


def scalar_orthogonality(alpha: int, pt: tuple[int, int]) -> bool:
    """True iff (-alpha, alpha+1) is orthogonal to the point: -alpha*x + (alpha+1)*y = 0."""
    x, y = pt
    return -alpha * x + (alpha + 1) * y == 0


def add_points(n: int, p: tuple[int, int], q: tuple[int, int]) -> Point:
    """Commutative addition on the branch, identity (4n, 0).

    x = [(xP - 2n)(xQ - 2n) + yP*yQ] / 2n + 2n
    y = [yP(xQ - 2n) + yQ(xP - 2n)] / 2n

    Both divisions are exact for points of the same curve; a failed division
    means the inputs were not composable points for this n.
    """
    for pt in (p, q):
        if not is_on_curve(n, pt):
            raise ValueError(f"{tuple(pt)} is not on the curve for n={n}")
    xp, yp = p
    xq, yq = q
    half = 2 * n
    x_num = (xp - half) * (xq - half) + yp * yq
    y_num = yp * (xq - half) + yq * (xp - half)
    x, x_rem = divmod(x_num, half)
    y, y_rem = divmod(y_num, half)
    if x_rem or y_rem:
        raise ValueError("points not composable")
    return Point(x + half, y)


def enumerate_points(fact: Factorization) -> list[Point]:
    """All divisor-parametrized points of the curve for odd n, sorted by x.

    One point per divisor t of n via alpha = (t - 1) / 2; a semiprime p*q with
    p < q additionally contributes the cross point ((p+q)^2, q^2 - p^2). For
    primes, prime squares and semiprimes this is the entire branch.
    """
    if not fact.is_odd:
        raise ValueError("even modulus unsupported")
    n = fact.n
    points = [point_from_alpha(n, (t - 1) // 2) for t in fact.divisors()]
    pair = fact.semiprime_pair
    if pair is not None:
        p, q = pair
        points.append(Point((p + q) ** 2, q * q - p * p))
    return sorted(points)


def split_ratio(p: int) -> tuple[int, int]:
    """Split odd p >= 3 into ((p+1)/2, (p-1)/2).

    These are the reduced numerator/denominator of (p+1)/(p-1); they sum to p,
    differ by 1, and are coprime. Even p is rejected: gcd(p+1, p-1) = 1 there,
    so the fraction does not reduce.
    """
    if p % 2 == 0:
        raise ValueError("gcd(p+1, p-1) = 1 for even p; split undefined")
    if p < 3:
        raise ValueError("split requires p >= 3")
    return (p + 1) // 2, (p - 1) // 2


def power_identity_delta(alpha_i: int, alpha_j: int, a: int) -> int:
    """The cofactor delta with alpha_i^a - alpha_j^a = (alpha_i + alpha_j) * delta.

    Defined for even a = 2*beta as the geometric sum
    sum_{k=0}^{beta-1} alpha_i^(2(beta-1-k)) * alpha_j^(2k), valid whenever
    alpha_i - alpha_j = 1, which split_ratio guarantees.
    """
    if a % 2 != 0 or a < 2:
        raise ValueError("identity defined for even exponents >= 2")
    beta = a // 2
    return sum(
        alpha_i ** (2 * (beta - 1 - k)) * alpha_j ** (2 * k) for k in range(beta)
    )


def verify_ps_system(alpha2: int, alpha3: int, n: int) -> bool:
    """Check the symmetric system tying alpha2, alpha3 to the modulus.

    With P = alpha2*alpha3 and S = alpha2 + alpha3:
      (a) 4P + 2S + 1 = n
      (b) 16P^3 + 4S^3 + (32S+28)P^2 + (20P+10-n)S^2 + (34-2n)PS
          + (14-6n)P + (8-4n)S = n(n+1)^2/4 - n^2 + 2n - 2
      (c) [8P^2 + 4S^2 + 12PS + 10P + (6-n)S - n + 2](2P + S) = n(n^2-1)/4
    All three are evaluated exactly (both sides scaled by 4 to stay integral).
    """
    P = alpha2 * alpha3
    S = alpha2 + alpha3
    if 4 * P + 2 * S + 1 != n:
        return False
    lhs_b = (
        16 * P ** 3
        + 4 * S ** 3
        + (32 * S + 28) * P ** 2
        + (20 * P + 10 - n) * S ** 2
        + (34 - 2 * n) * P * S
        + (14 - 6 * n) * P
        + (8 - 4 * n) * S
    )
    if 4 * lhs_b != n * (n + 1) ** 2 - 4 * n ** 2 + 8 * n - 8:
        return False
    lhs_c = (
        8 * P ** 2 + 4 * S ** 2 + 12 * P * S + 10 * P + (6 - n) * S - n + 2
    ) * (2 * P + S)
    return 4 * lhs_c == n * (n ** 2 - 1)


def ratio_of_point(pt: tuple[int, int]) -> Fraction:
    """Reduced x/y of a point with y > 0."""
    x, y = pt
    if y == 0:
        raise ValueError("ratio undefined for y = 0")
    return Fraction(x, y)


def points_from_prime_alphas(alpha2: int, alpha3: int) -> dict[int, Point]:
    """The five structural points of n = (2*alpha2+1)(2*alpha3+1) as explicit
    polynomials in alpha2 and alpha3.

    Keyed 0..4 in the conventional order: vertex, cross point, the two prime
    points, and the point of n itself. The cross point's second coordinate is
    returned as an absolute value to stay on the y >= 0 branch.
    """
    a2, a3 = alpha2, alpha3
    p0 = Point(16 * a2 * a3 + 8 * a2 + 8 * a3 + 4, 0)
    p1 = Point(
        4 * a2 ** 2 + 8 * a2 * a3 + 4 * a3 ** 2 + 8 * a2 + 8 * a3 + 4,
        abs(4 * a2 ** 2 - 4 * a3 ** 2 + 4 * a2 - 4 * a3),
    )
    p2 = Point(
        8 * a2 * a3 ** 2 + 16 * a2 * a3 + 4 * a3 ** 2 + 8 * a2 + 8 * a3 + 4,
        8 * a2 * a3 ** 2 + 8 * a2 * a3 + 4 * a3 ** 2 + 4 * a3,
    )
    p3 = Point(
        8 * a2 ** 2 * a3 + 4 * a2 ** 2 + 16 * a2 * a3 + 8 * a2 + 8 * a3 + 4,
        8 * a2 ** 2 * a3 + 4 * a2 ** 2 + 8 * a2 * a3 + 4 * a2,
    )
    a4 = 2 * a2 * a3 + a2 + a3
    p4 = Point(4 * a4 ** 2 + 8 * a4 + 4, 4 * a4 ** 2 + 4 * a4)
    return {0: p0, 1: p1, 2: p2, 3: p3, 4: p4}


@dataclass(frozen=True)
class ConjectureReport:
    """Empirical outcome of the reduced-ratio observations on one semiprime.

    p1_sum_equals_p3_sum: the reduced x/y parts of the cross point and of the
    larger prime's point have equal sums. sums_in_pqn: every structural
    point's reduced ratio parts sum to p, q, or n. Reported, never assumed.
    """

    p1_sum_equals_p3_sum: bool
    sums_in_pqn: bool


def check_conjecture(fact: Factorization) -> ConjectureReport:
    """Evaluate both ratio-sum observations on an odd semiprime p*q, p < q."""
    pair = fact.semiprime_pair
    if pair is None or not fact.is_odd:
        raise ValueError("conjecture check requires an odd semiprime p*q with p < q")
    p, q = pair
    n = fact.n
    cross = Point((p + q) ** 2, q * q - p * p)
    prime_small = point_from_alpha(n, (p - 1) // 2)
    prime_large = point_from_alpha(n, (q - 1) // 2)
    top = point_from_alpha(n, (n - 1) // 2)

    def ratio_sum(pt: Point) -> int:
        r = ratio_of_point(pt)
        return r.numerator + r.denominator

    sums = [ratio_sum(pt) for pt in (cross, prime_small, prime_large, top)]
    return ConjectureReport(
        p1_sum_equals_p3_sum=sums[0] == sums[2],
        sums_in_pqn=all(s in (p, q, n) for s in sums),
    )


def totient_identity_holds(p: int, q: int) -> bool:
    """phi(pq) = (p-1)(q-1) = 4 * alpha2 * alpha3 for the prime parameters."""
    alpha2, alpha3 = (p - 1) // 2, (q - 1) // 2
    return (p - 1) * (q - 1) == 4 * alpha2 * alpha3


def coprime(a: int, b: int) -> bool:
    return gcd(a, b) == 1
