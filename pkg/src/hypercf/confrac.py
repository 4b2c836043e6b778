"""Exact rational arithmetic and finite continued fractions.

Rationals are plain `fractions.Fraction` values: arbitrary precision, always
stored reduced, denominator positive. Decimal-looking quantities elsewhere in
the package (0.007 and friends) are always exact fractions i/10^m, never
floats, so continued-fraction expansions are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple


def make_rational(num: int, den: int) -> Fraction:
    """Reduced fraction num/den with positive denominator."""
    if den == 0:
        raise ValueError("undefined rational")
    return Fraction(num, den)


def rat_add(a: Fraction, b: Fraction) -> Fraction:
    """Exact reduced sum of two rationals."""
    return a + b


class Convergent(NamedTuple):
    """The k-th convergent p/q of a continued fraction.

    Built by the standard recurrences p_k = a_k*p_{k-1} + p_{k-2},
    q_k = a_k*q_{k-1} + q_{k-2} seeded with p_{-2} = q_{-1} = 0 and
    p_{-1} = q_{-2} = 1, which keep p and q coprime automatically.
    """

    p: int
    q: int
    k: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


@dataclass(frozen=True)
class ContinuedFraction:
    """Canonical finite continued fraction [a0, a1, ..., an].

    Canonical means a_k >= 1 for every k >= 1 and, when there is more than one
    term, a_n >= 2. That makes the representation of each rational unique,
    which the Euclidean expansion below produces naturally.
    """

    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise ValueError("continued fraction needs at least one term")
        if any(a < 1 for a in self.terms[1:]):
            raise ValueError("partial quotients after the first must be >= 1")
        if len(self.terms) > 1 and self.terms[-1] < 2:
            raise ValueError("canonical form requires a final term >= 2")

    def value(self) -> Fraction:
        """Evaluate the expansion back to the rational it encodes."""
        acc = Fraction(self.terms[-1])
        for a in reversed(self.terms[:-1]):
            acc = a + 1 / acc
        return acc

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        return "[" + ", ".join(str(a) for a in self.terms) + "]"


def cf_expand(r: Fraction | int) -> ContinuedFraction:
    """Continued-fraction expansion of a rational, via the Euclidean algorithm.

    The final quotient of the Euclidean algorithm on a reduced fraction is
    always >= 2 (remainders strictly decrease), so the result is canonical
    without post-processing.
    """
    r = Fraction(r)
    num, den = r.numerator, r.denominator
    terms: list[int] = []
    while den:
        a, rem = divmod(num, den)
        terms.append(a)
        num, den = den, rem
    return ContinuedFraction(tuple(terms))


def convergents(cf: ContinuedFraction) -> Iterator[Convergent]:
    """Yield the convergents p_k/q_k of `cf` in order; the last equals cf.value()."""
    p_prev2, p_prev1 = 0, 1
    q_prev2, q_prev1 = 1, 0
    for k, a in enumerate(cf.terms):
        p = a * p_prev1 + p_prev2
        q = a * q_prev1 + q_prev2
        yield Convergent(p, q, k)
        p_prev2, p_prev1 = p_prev1, p
        q_prev2, q_prev1 = q_prev1, q


def convergent_stream(r: Fraction) -> Iterator[Convergent]:
    """Yield the convergents of a rational directly, without materializing terms.

    Fuses the Euclidean expansion with the convergent recurrences; equivalent
    to convergents(cf_expand(r)) but streams, which matters for long
    expansions scanned with early exit.
    """
    num, den = r.numerator, r.denominator
    p_prev2, p_prev1 = 0, 1
    q_prev2, q_prev1 = 1, 0
    k = 0
    while den:
        a, rem = divmod(num, den)
        p = a * p_prev1 + p_prev2
        q = a * q_prev1 + q_prev2
        yield Convergent(p, q, k)
        p_prev2, p_prev1 = p_prev1, p
        q_prev2, q_prev1 = q_prev1, q
        num, den = den, rem
        k += 1
