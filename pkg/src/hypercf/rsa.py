"""Toy RSA: seeded key generation, textbook encrypt/decrypt, Wiener baseline.

Study-scale only. Key sizes are capped at 128 bits, there is no padding, and
generation is fully deterministic per seed so test corpora reproduce exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .confrac import convergent_stream
from .primes import is_probable_prime, random_prime

MAX_KEY_BITS = 128

# Preferred public exponents, tried in order before falling back to random.
_E_LADDER = (65537, 257, 17, 5, 3)


@dataclass(frozen=True)
class RsaKeyPair:
    p: int
    q: int
    n: int
    e: int
    d: int
    phi: int

    def __post_init__(self) -> None:
        if self.p == self.q:
            raise ValueError("p and q must be distinct")
        for prime in (self.p, self.q):
            if not is_probable_prime(prime):
                raise ValueError(f"{prime} is not prime")
        if self.n != self.p * self.q:
            raise ValueError("n != p*q")
        if self.phi != (self.p - 1) * (self.q - 1):
            raise ValueError("phi != (p-1)(q-1)")
        if not 1 < self.e < self.phi or gcd(self.e, self.phi) != 1:
            raise ValueError("invalid public exponent")
        if (self.e * self.d) % self.phi != 1:
            raise ValueError("e*d != 1 mod phi")

    @property
    def public(self) -> tuple[int, int]:
        return self.n, self.e


def small_d_bound(n: int) -> int:
    """Largest d with 3*d below the fourth root of n (the Wiener regime)."""
    return isqrt(isqrt(n)) // 3


def keygen(bits: int, seed: int, small_d: bool = False) -> RsaKeyPair:
    """Deterministic toy key: two distinct primes of about bits/2 each.

    With small_d, the private exponent is drawn first with (3d)^4 < n and the
    public exponent derived as its inverse, which puts the key inside the
    classic Wiener recovery bound.
    """
    if bits < 8:
        raise ValueError("need at least 8 bits for two distinct primes")
    if bits > MAX_KEY_BITS:
        raise ValueError(f"toy harness caps keys at {MAX_KEY_BITS} bits")
    rng = random.Random(seed)
    p_bits = bits - bits // 2
    q_bits = bits // 2

    for _ in range(2000):
        p = random_prime(p_bits, rng)
        q = random_prime(q_bits, rng)
        if p == q:
            continue
        if p > q:
            p, q = q, p
        n = p * q
        phi = (p - 1) * (q - 1)

        if small_d:
            bound = small_d_bound(n)
            if bound < 2:
                continue
            d = 0
            for _ in range(200):
                candidate = rng.randrange(2, bound + 1)
                if gcd(candidate, phi) == 1:
                    d = candidate
                    break
            if d == 0:
                continue
            e = pow(d, -1, phi)
            if e <= 1:
                continue
            return RsaKeyPair(p=p, q=q, n=n, e=e, d=d, phi=phi)

        e = next((c for c in _E_LADDER if 1 < c < phi and gcd(c, phi) == 1), 0)
        while e == 0:
            candidate = rng.randrange(3, phi, 2)
            if gcd(candidate, phi) == 1:
                e = candidate
        return RsaKeyPair(p=p, q=q, n=n, e=e, d=pow(e, -1, phi), phi=phi)

    raise ValueError("bit size too small to find two distinct primes")


def encrypt(key_public: tuple[int, int], m: int) -> int:
    """c = m^e mod n for 0 <= m < n."""
    n, e = key_public
    if not 0 <= m < n:
        raise ValueError("message out of range")
    return pow(m, e, n)


def decrypt(key_private: tuple[int, int], c: int) -> int:
    """m = c^d mod n for 0 <= c < n."""
    n, d = key_private
    if not 0 <= c < n:
        raise ValueError("ciphertext out of range")
    return pow(c, d, n)


def wiener_attack(n: int, e: int) -> int | None:
    """Classic small-d recovery from the convergents of e/n.

    Each convergent k/d with k >= 1 proposes phi = (e*d - 1)/k; if the
    quadratic x^2 - (n - phi + 1)x + n splits over the integers, the modulus
    is factored and d is the private exponent. Complete for
    d < (1/3) n^(1/4); returns None outside the bound (barring lucky hits).
    """
    if e == 1:
        return 1  # d = 1 satisfies e*d = 1 unconditionally
    for conv in convergent_stream(Fraction(e, n)):
        k, d = conv.p, conv.q
        if k == 0:
            continue
        ed_minus_1 = e * d - 1
        if ed_minus_1 % k != 0:
            continue
        phi = ed_minus_1 // k
        s = n - phi + 1
        disc = s * s - 4 * n
        if disc < 0:
            continue
        t = isqrt(disc)
        if t * t != disc or (s + t) % 2 != 0:
            continue
        p = (s + t) // 2
        q = (s - t) // 2
        if p > 1 and q > 1 and p * q == n:
            return d
    return None
