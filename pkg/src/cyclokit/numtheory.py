"""Multiplicative arithmetic functions, Jordan totients and Ramanujan sums.

Everything here is exact integer (or Fraction) arithmetic.  Factorization is
plain trial division against a cached prime sieve; inputs in this library stay
well below 10**9, so nothing fancier is warranted.  All functions memoize, and
the caches only ever grow, so concurrent readers are safe under the GIL.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, isqrt

from .errors import InputError

_prime_list: list[int] = [2, 3, 5, 7, 11, 13]
_prime_limit = 13


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit (shared list; treat as read-only)."""
    global _prime_list, _prime_limit
    if limit > _prime_limit:
        new_limit = max(limit, 2 * _prime_limit)
        sieve = bytearray([1]) * (new_limit + 1)
        sieve[0:2] = b"\x00\x00"
        for p in range(2, isqrt(new_limit) + 1):
            if sieve[p]:
                sieve[p * p :: p] = b"\x00" * len(range(p * p, new_limit + 1, p))
        _prime_list = [i for i in range(new_limit + 1) if sieve[i]]
        _prime_limit = new_limit
    return _prime_list


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((p, e), ...) with p strictly increasing."""
    if n < 1:
        raise InputError(f"factorize requires n >= 1, got {n}")
    out = []
    m = n
    for p in primes_up_to(isqrt(n) + 1):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
    if m > 1:
        out.append((m, 1))
    return tuple(out)


@dataclass(frozen=True)
class FactoredInt:
    """A positive integer together with its prime factorization."""

    value: int
    factors: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, n: int) -> "FactoredInt":
        return cls(n, factorize(n))

    def __post_init__(self):
        prod = reduce(lambda a, pe: a * pe[0] ** pe[1], self.factors, 1)
        if prod != self.value or any(e < 1 for _, e in self.factors):
            raise InputError(f"inconsistent factorization for {self.value}")
        ps = [p for p, _ in self.factors]
        if ps != sorted(set(ps)):
            raise InputError("primes must be strictly increasing")


def _check_positive(n: int, name: str = "n") -> None:
    if n < 1:
        raise InputError(f"{name} must be a positive integer, got {n}")


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    """Mobius function: (-1)^r on squarefree n with r prime factors, else 0."""
    _check_positive(n)
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    """Euler totient, phi(1) = 1."""
    _check_positive(n)
    out = 1
    for p, e in factorize(n):
        out *= p ** (e - 1) * (p - 1)
    return out


@lru_cache(maxsize=None)
def dedekind_psi(n: int) -> int:
    """Dedekind psi: n * prod_{p|n} (1 + 1/p), psi(1) = 1."""
    _check_positive(n)
    out = 1
    for p, e in factorize(n):
        out *= p ** (e - 1) * (p + 1)
    return out


@lru_cache(maxsize=None)
def prime_power_value(n: int) -> int:
    """p when n = p^k (k >= 1), else 1.

    This is exp(Lambda(n)) as an exact integer, i.e. the value of the n-th
    cyclotomic polynomial at 1 for n > 1.
    """
    _check_positive(n)
    fac = factorize(n)
    if len(fac) == 1:
        return fac[0][0]
    return 1


def is_prime_power(n: int) -> bool:
    return n > 1 and prime_power_value(n) > 1


@lru_cache(maxsize=None)
def jordan_totient(k: int, n: int) -> int:
    """Jordan totient J_k(n) = n^k * prod_{p|n} (1 - p^{-k}), exactly."""
    _check_positive(k, "k")
    _check_positive(n)
    out = 1
    for p, e in factorize(n):
        out *= p ** (k * (e - 1)) * (p ** k - 1)
    return out


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, ascending."""
    _check_positive(n)
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p ** i for d in divs for i in range(e + 1)]
    return tuple(sorted(divs))


@lru_cache(maxsize=None)
def ramanujan_sum(k: int, n: int) -> int:
    """Ramanujan sum r_k(n) via the divisor-sum form sum_{d | (n,k)} mu(n/d) d.

    k = 0 is accepted with (n, 0) = n, which yields r_0(n) = phi(n).
    """
    _check_positive(n)
    if k < 0:
        raise InputError(f"k must be >= 0, got {k}")
    g = n if k == 0 else gcd(n, k)
    return sum(mobius(n // d) * d for d in divisors(g))


@lru_cache(maxsize=None)
def ramanujan_sum_holder(k: int, n: int) -> int:
    """Ramanujan sum in closed form mu(n/(n,k)) * phi(n) / phi(n/(n,k))."""
    _check_positive(k, "k")
    _check_positive(n)
    m = n // gcd(n, k)
    return mobius(m) * euler_phi(n) // euler_phi(m)


def alpha(n: int) -> Fraction:
    """The index multiplier relating values of Phi_n at x and Phi_{n*alpha} at -x.

    2 for odd n, 1/2 when n == 2 (mod 4), 1 when 4 | n.
    """
    _check_positive(n)
    if n % 2 == 1:
        return Fraction(2)
    if n % 4 == 2:
        return Fraction(1, 2)
    return Fraction(1)


def n_alpha(n: int) -> int:
    """n * alpha(n), always a positive integer."""
    a = alpha(n) * n
    return a.numerator


_phi_sieve: list[int] = [0, 1]


def totient_sieve(limit: int) -> list[int]:
    """Totient table phi[0..limit] (shared list, grown geometrically; read-only)."""
    global _phi_sieve
    if limit >= len(_phi_sieve):
        size = max(limit + 1, 2 * len(_phi_sieve))
        phi = list(range(size))
        for p in range(2, size):
            if phi[p] == p:  # p prime
                for m in range(p, size, p):
                    phi[m] -= phi[m] // p
        _phi_sieve = phi
    return _phi_sieve
