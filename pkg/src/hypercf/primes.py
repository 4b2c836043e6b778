"""Primality testing, seeded prime generation, and perfect-power detection.

Everything here is deterministic: Miller-Rabin uses proven witness sets for
inputs below 3.3e24 and, above that, extra witnesses drawn from an RNG seeded
by the tested number itself, so repeated runs always agree.
"""

from __future__ import annotations

import random

# (limit, witnesses): the witness set is a proven Miller-Rabin certificate for
# every n below the limit.
_MR_DETERMINISTIC: tuple[tuple[int, tuple[int, ...]], ...] = (
    (2_047, (2,)),
    (1_373_653, (2, 3)),
    (9_080_191, (31, 73)),
    (25_326_001, (2, 3, 5)),
    (3_215_031_751, (2, 3, 5, 7)),
    (4_759_123_141, (2, 7, 61)),
    (1_122_004_669_633, (2, 13, 23, 1_662_803)),
    (2_152_302_898_747, (2, 3, 5, 7, 11)),
    (3_474_749_660_383, (2, 3, 5, 7, 11, 13)),
    (341_550_071_728_321, (2, 3, 5, 7, 11, 13, 17)),
    (3_825_123_056_546_413_051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (318_665_857_834_031_151_167_461, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
    (3_317_044_064_679_887_385_961_981, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)),
)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)

_EXTRA_WITNESSES = 24


def _is_witness(a: int, d: int, r: int, n: int) -> bool:
    """True if a proves n composite (n - 1 = d * 2^r with d odd)."""
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(r - 1):
        x = (x * x) % n
        if x == n - 1:
            return False
    return True


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin primality test, deterministic for any fixed input."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False

    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1

    for limit, witnesses in _MR_DETERMINISTIC:
        if n < limit:
            return not any(_is_witness(a, d, r, n) for a in witnesses)

    # Beyond the proven range: fixed small bases plus witnesses seeded by n.
    rng = random.Random(n)
    witnesses = list(_SMALL_PRIMES[:12])
    witnesses += [rng.randrange(2, n - 1) for _ in range(_EXTRA_WITNESSES)]
    return not any(_is_witness(a, d, r, n) for a in witnesses)


def random_prime(bits: int, rng: random.Random) -> int:
    """Random prime with exactly `bits` bits, by rejection sampling odd candidates."""
    if bits < 2:
        raise ValueError("prime needs at least 2 bits")
    if bits == 2:
        return rng.choice((2, 3))
    while True:
        candidate = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if is_probable_prime(candidate):
            return candidate


def odd_primes(count: int) -> list[int]:
    """The first `count` odd primes: 3, 5, 7, 11, ..."""
    found: list[int] = []
    candidate = 3
    while len(found) < count:
        if is_probable_prime(candidate):
            found.append(candidate)
        candidate += 2
    return found


def iroot(n: int, k: int) -> int:
    """Largest integer r with r**k <= n (n >= 0, k >= 1)."""
    if n < 0:
        raise ValueError("iroot of negative number")
    if n < 2 or k == 1:
        return n
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > n:
        x -= 1
    return x


def perfect_power_root(n: int) -> int | None:
    """If n = r**k for some k >= 2, return such an r; otherwise None.

    Only prime exponents need checking: any proper power is a power with a
    prime exponent.
    """
    if n < 4:
        return None
    for k in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127):
        if k > n.bit_length():
            break
        r = iroot(n, k)
        if r >= 2 and r ** k == n:
            return r
    return None
