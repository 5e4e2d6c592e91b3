"""Exact integer number theory: primality, orders, primitive roots, CRT,
Legendre symbols, and the Mersenne-cofactor gcd split.

Everything here is arbitrary-precision; nothing goes through floats.
"""

import math
import sys
from dataclasses import dataclass

# Strong-pseudoprime witnesses: deterministic for all n < 3.3e24,
# comfortably past the 2^64 guarantee this module promises.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def decimal_str(v: int) -> str:
    """Decimal form of an integer of any size.

    Lifts the interpreter's int-to-str digit cap for the duration of the
    conversion; reports serialize million-bit values through this.
    """
    try:
        return str(v)
    except ValueError:
        limit = sys.get_int_max_str_digits()
        sys.set_int_max_str_digits(0)
        try:
            return str(v)
        finally:
            sys.set_int_max_str_digits(limit)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (exact below 2^64)."""
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
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; meant for desk-scale n."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    d = 5
    while d * d <= n:
        for p in (d, d + 2):
            while n % p == 0:
                factors[p] = factors.get(p, 0) + 1
                n //= p
        d += 6
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def _carmichael(n: int) -> int:
    """Carmichael function lambda(n); every unit's order divides it."""
    lam = 1
    for p, e in factorize(n).items():
        if p == 2 and e >= 3:
            block = 2 ** (e - 2)
        else:
            block = (p - 1) * p ** (e - 1)
        lam = math.lcm(lam, block)
    return lam


def multiplicative_order(a: int, n: int) -> int:
    """Smallest t >= 1 with a^t = 1 (mod n)."""
    if n < 2:
        raise ValueError("modulus must be >= 2")
    a %= n
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    t = _carmichael(n)
    for p in factorize(t):
        while t % p == 0 and pow(a, t // p, n) == 1:
            t //= p
    return t


def is_primitive_root(g: int, p: int) -> bool:
    """True iff g generates the full multiplicative group modulo prime p."""
    if g % p == 0:
        return False
    phi = p - 1
    return all(pow(g, phi // r, p) != 1 for r in factorize(phi))


@dataclass(frozen=True)
class PrimePair:
    """Two distinct odd primes p < q."""

    p: int
    q: int

    def __post_init__(self):
        for v in (self.p, self.q):
            if v < 3 or v % 2 == 0:
                raise ValueError(f"{v} is not an odd prime")
            if not is_prime(v):
                raise ValueError(f"{v} is not an odd prime")
        if not self.p < self.q:
            raise ValueError(f"need p < q, got p={self.p}, q={self.q}")


def common_primitive_root(pair: PrimePair) -> int:
    """Smallest g >= 2 that is a primitive root modulo both p and q."""
    g = 2
    while True:
        if is_primitive_root(g, pair.p) and is_primitive_root(g, pair.q):
            return g
        g += 1


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> int:
    """Unique x in [0, m1*m2) with x = r1 (mod m1), x = r2 (mod m2)."""
    if math.gcd(m1, m2) != 1:
        raise ValueError("moduli must be coprime")
    t = (r1 - r2) * pow(m2, -1, m1) % m1
    return (r2 + m2 * t) % (m1 * m2)


def whiteman_x(pair: PrimePair, g: int) -> int:
    """CRT lift: the unique x in [0, pq) with x = g (mod p), x = 1 (mod q)."""
    return crt_pair(g % pair.p, pair.p, 1, pair.q)


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, 1} for an odd prime p."""
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


@dataclass(frozen=True)
class MersenneGcdSplit:
    gp: int
    gq: int


def mersenne_gcd_split(pair: PrimePair) -> MersenneGcdSplit:
    """gcd of each Mersenne factor 2^p-1, 2^q-1 against its cofactor in 2^pq-1.

    The p-side gcd always equals gcd(2^p-1, q) and the q-side one is 1
    for p < q; callers verify that identity rather than assume it.
    """
    p, q = pair.p, pair.q
    mp = (1 << p) - 1
    mq = (1 << q) - 1
    m = (1 << (p * q)) - 1
    return MersenneGcdSplit(
        gp=math.gcd(mp, m // mp),
        gq=math.gcd(mq, m // mq),
    )
