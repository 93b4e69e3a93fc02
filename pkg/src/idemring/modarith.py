"""Exact modular arithmetic: squarefree factorization, powers, gcd, CRT.

Residues are plain Python ints kept canonical in ``[0, n)``; every public
function reduces its inputs, so arbitrary integers are accepted.  Python's
arbitrary-precision ints make all intermediate products exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt, prod
from typing import Iterable

from .errors import ModuliNotCoprime, NotCoprime, NotFactorable, NotSquarefree

DEFAULT_TRIAL_BOUND = 10**6


def is_prime(k: int) -> bool:
    """Deterministic trial-division primality test for desk-scale k."""
    if k < 2:
        return False
    if k % 2 == 0:
        return k == 2
    d = 3
    top = isqrt(k)
    while d <= top:
        if k % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Modulus:
    """A squarefree modulus together with its verified prime factorization."""

    n: int
    primes: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("modulus must be at least 2")
        if list(self.primes) != sorted(set(self.primes)):
            raise ValueError("primes must be strictly ascending and distinct")
        if prod(self.primes) != self.n:
            raise ValueError(f"primes {self.primes} do not multiply to {self.n}")
        for p in self.primes:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")

    @property
    def m(self) -> int:
        return len(self.primes)

    def __str__(self) -> str:
        return f"{self.n} = " + " * ".join(str(p) for p in self.primes)


def factor_squarefree(n: int, bound: int = DEFAULT_TRIAL_BOUND) -> Modulus:
    """Factor n by trial division, insisting every prime appears exactly once.

    Raises NotSquarefree on a repeated prime factor and NotFactorable when a
    cofactor larger than bound**2 survives trial division up to bound (such a
    cofactor cannot be certified prime).
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if bound < 2:
        raise ValueError("bound must be at least 2")
    primes = []
    rem = n
    d = 2
    while d <= bound and d * d <= rem:
        if rem % d == 0:
            rem //= d
            if rem % d == 0:
                raise NotSquarefree(f"{d}^2 divides {n}")
            primes.append(d)
        d = 3 if d == 2 else d + 2
    if rem > 1:
        if rem > bound * bound:
            raise NotFactorable(f"cofactor {rem} of {n} exceeds {bound}^2")
        primes.append(rem)
    return Modulus(n, tuple(primes))


def mod_pow(a: int, k: int, n: int) -> int:
    """Canonical a**k mod n; k = 0 yields 1 for every a."""
    if n < 2:
        raise ValueError("modulus must be at least 2")
    if k < 0:
        raise ValueError("exponent must be non-negative")
    return pow(a % n, k, n)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = gcd(a, b) >= 0 and a*s + b*t = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def mod_inverse(a: int, n: int) -> int:
    """Inverse of a modulo n; raises NotCoprime when gcd(a, n) > 1."""
    if n < 2:
        raise ValueError("modulus must be at least 2")
    g, s, _ = ext_gcd(a % n, n)
    if g != 1:
        raise NotCoprime(f"gcd({a}, {n}) = {g}")
    return s % n


def crt_combine(system: Iterable[tuple[int, int]]) -> int:
    """Solve x = r_i (mod m_i) for pairwise coprime moduli m_i >= 2.

    Returns the unique solution in [0, prod(m_i)).
    """
    items = list(system)
    if not items:
        raise ValueError("empty congruence system")
    r0, m0 = items[0]
    if m0 < 2:
        raise ValueError("moduli must be at least 2")
    x = r0 % m0
    m = m0
    for r, mi in items[1:]:
        if mi < 2:
            raise ValueError("moduli must be at least 2")
        if gcd(m, mi) != 1:
            raise ModuliNotCoprime(f"moduli {m} and {mi} share a factor")
        k = ((r - x) * mod_inverse(m, mi)) % mi
        x += m * k
        m *= mi
    return x
