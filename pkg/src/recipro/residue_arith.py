"""Exact modular arithmetic: primality, Legendre symbols, factorial products.

Python integers are arbitrary precision, so every product here is exact by
construction.  Legendre symbols are returned as the plain integers +1 / -1;
the value 0 never occurs because arguments must be coprime to the modulus
(anything else is a :class:`~recipro.errors.DomainError`).  Odd primes are
plain validated ints as well, see :func:`validate_odd_prime`.

Everything in this module is a pure, stateless function and safe to call
concurrently.
"""

from __future__ import annotations

from functools import lru_cache
from math import isqrt

from . import budget
from .errors import DomainError, InternalCheckError

_INT64_LIMIT = 1 << 64

# Deterministic Miller-Rabin witness set, valid for all n < 3.3e24 and in
# particular for the full 64-bit range this module accepts.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _check_int(n, name: str = "argument") -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"{name} must be an integer, got {n!r}")
    return n


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 2**64."""
    _check_int(n)
    if n < 0 or n >= _INT64_LIMIT:
        raise DomainError(f"is_prime expects 0 <= n < 2**64, got {n}")
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
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


def validate_odd_prime(p: int) -> int:
    """Return p unchanged after checking it is an odd prime >= 3."""
    _check_int(p)
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if p == 2:
        raise DomainError("2 is not odd")
    return p


def pow_mod(b: int, e: int, m: int) -> int:
    """b**e mod m for 0 <= b < m, e >= 0, m >= 2."""
    _check_int(b, "base")
    _check_int(e, "exponent")
    _check_int(m, "modulus")
    if m < 2:
        raise DomainError(f"modulus must be >= 2, got {m}")
    if not 0 <= b < m:
        raise DomainError(f"base must satisfy 0 <= b < {m}, got {b}")
    if e < 0:
        raise DomainError(f"exponent must be nonnegative, got {e}")
    return pow(b, e, m)


def _unit_mod(a: int, p: int) -> int:
    """a reduced into [1, p-1]; a multiple of p is out of contract."""
    _check_int(a)
    r = a % p
    if r == 0:
        raise DomainError(f"{a} is not a unit modulo {p}")
    return r


def legendre_euler(a: int, p: int) -> int:
    """Legendre symbol of a modulo the odd prime p, via a^((p-1)/2) mod p.

    Returns +1 or -1; a must be coprime to p.
    """
    p = validate_odd_prime(p)
    a = _unit_mod(a, p)
    r = pow(a, (p - 1) // 2, p)
    if r == 1:
        return 1
    if r == p - 1:
        return -1
    # unreachable for prime p: the half power of a unit is a square root of 1
    raise InternalCheckError(f"{a}^(({p}-1)/2) mod {p} gave {r}, expected 1 or {p - 1}")


@lru_cache(maxsize=64)
def _square_residues(p: int) -> frozenset[int]:
    return frozenset(x * x % p for x in range(1, (p - 1) // 2 + 1))


def legendre_oracle(a: int, p: int) -> int:
    """Legendre symbol by enumerating the nonzero squares modulo p.

    Independent of :func:`legendre_euler`; O(p), hence capped.
    """
    p = validate_odd_prime(p)
    budget.require_within(p, budget.SQUARE_ORACLE_CAP, "square enumeration")
    a = _unit_mod(a, p)
    return 1 if a in _square_residues(p) else -1


def factorial_mod(n: int, m: int) -> int:
    """n! mod m, reducing after every multiplication."""
    _check_int(n)
    _check_int(m, "modulus")
    if n < 0:
        raise DomainError(f"factorial argument must be nonnegative, got {n}")
    if m < 2:
        raise DomainError(f"modulus must be >= 2, got {m}")
    budget.require_within(n, budget.FACTORIAL_LOOP_CAP, "factorial loop")
    acc = 1
    for i in range(2, n + 1):
        acc = acc * i % m
    return acc


def wilson_check(p: int) -> bool:
    """True iff (p-1)! = -1 mod p, computed by the running product."""
    p = validate_odd_prime(p)
    return factorial_mod(p - 1, p) == p - 1


def euler_criterion_check(q: int, p: int) -> bool:
    """Check (q)(2q)...((p-1)/2 * q) = (q/p) * ((p-1)/2)!  (mod p).

    Both sides are computed independently: the left by accumulating the
    multiples of q directly, the right from legendre_euler and factorial_mod.
    """
    p = validate_odd_prime(p)
    qu = _unit_mod(q, p)
    half = (p - 1) // 2
    budget.require_within(half, budget.FACTORIAL_LOOP_CAP, "multiple product")
    left = 1
    term = 0
    for _ in range(half):
        term += qu
        if term >= p:
            term -= p
        left = left * term % p
    fact = factorial_mod(half, p)
    right = fact if legendre_euler(qu, p) == 1 else (p - fact) % p
    return left == right


def primes_up_to(n: int) -> list[int]:
    """All primes <= n, ascending (sieve of Eratosthenes)."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def odd_primes_up_to(n: int) -> list[int]:
    """All odd primes <= n, ascending."""
    return [p for p in primes_up_to(n) if p != 2]


def first_odd_primes(count: int) -> list[int]:
    """The first `count` odd primes, ascending."""
    if count < 0:
        raise DomainError(f"count must be nonnegative, got {count}")
    bound = 64
    while True:
        primes = odd_primes_up_to(bound)
        if len(primes) >= count:
            return primes[:count]
        bound *= 2
