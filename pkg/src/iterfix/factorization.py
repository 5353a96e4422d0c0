"""Prime sieve, trial-division factorization, and divisor enumeration.

All arithmetic is exact integer arithmetic. The factorizer accepts values up
to a configurable bound (default 10**7, overridable through the
ITERFIX_SIEVE_LIMIT environment variable) and rejects anything larger
instead of degrading silently. The trial-prime table is built once per
configured bound and is read-only afterwards, so concurrent use is safe;
a duplicate build under a race produces an identical table.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

U64_MAX = 2**64 - 1
DEFAULT_FACTOR_LIMIT = 10**7

_ENV_LIMIT = "ITERFIX_SIEVE_LIMIT"

# (configured limit, primes up to isqrt(limit)); rebuilt if the limit changes
_trial_cache: tuple[int, list[int]] | None = None
_limit_cache: int | None = None


def _resolve_limit() -> int:
    raw = os.environ.get(_ENV_LIMIT)
    if raw is None:
        return DEFAULT_FACTOR_LIMIT
    try:
        limit = int(raw)
    except ValueError:
        raise ValueError(f"{_ENV_LIMIT} must be an integer, got {raw!r}") from None
    if not 2 <= limit <= U64_MAX:
        raise ValueError(f"{_ENV_LIMIT} must be in [2, 2**64 - 1], got {limit}")
    return limit


def factor_limit() -> int:
    """Largest value the factorizer accepts.

    Resolved once per process from ITERFIX_SIEVE_LIMIT (default 10**7);
    factorize sits on hot paths, so the environment is not re-read per call.
    """
    global _limit_cache
    if _limit_cache is None:
        _limit_cache = _resolve_limit()
    return _limit_cache


def _reset_limit_cache() -> None:
    """Forget the resolved limit and trial primes (test hook)."""
    global _limit_cache, _trial_cache
    _limit_cache = None
    _trial_cache = None


def sieve_primes(limit: int) -> list[int]:
    """All primes <= limit, ascending; empty for limit < 2."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def _trial_primes() -> list[int]:
    global _trial_cache
    limit = factor_limit()
    cached = _trial_cache
    if cached is None or cached[0] != limit:
        cached = (limit, sieve_primes(isqrt(limit)))
        _trial_cache = cached
    return cached[1]


def is_prime(n: int) -> bool:
    """Exact primality by trial division; n must be within the factor limit."""
    if n < 2:
        return False
    if n > factor_limit():
        raise ValueError(f"{n} exceeds the factorization bound {factor_limit()}")
    for p in _trial_primes():
        if p * p > n:
            break
        if n % p == 0:
            return n == p
    return True


@dataclass(frozen=True)
class Factorization:
    """Canonical prime factorization: value equals the product of p**a."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.value < 1:
            raise ValueError(f"no factorization for {self.value}")
        prev = 1
        product = 1
        for p, a in self.factors:
            if p <= prev:
                raise ValueError("factor primes must be strictly increasing")
            if a < 1:
                raise ValueError("exponents must be >= 1")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            prev = p
            product *= p**a
        if product != self.value:
            raise ValueError(f"factors multiply to {product}, not {self.value}")


def factorize(n: int) -> Factorization:
    """Factor a positive integer.

    Rejects 0 (it has no prime factorization; callers must short-circuit it)
    and values beyond the configured factor limit.
    """
    if n == 0:
        raise ValueError("0 has no prime factorization")
    if n < 0:
        raise ValueError(f"cannot factorize negative value {n}")
    if n > factor_limit():
        raise ValueError(f"{n} exceeds the factorization bound {factor_limit()}")
    return _factorize_cached(n)


@lru_cache(maxsize=None)
def _factorize_cached(n: int) -> Factorization:
    factors = []
    rest = n
    for p in _trial_primes():
        if p * p > rest:
            break
        if rest % p == 0:
            a = 0
            while rest % p == 0:
                rest //= p
                a += 1
            factors.append((p, a))
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(n, tuple(factors))


def divisors(f: Factorization) -> list[int]:
    """All positive divisors of f.value, ascending, including 1 and the value."""
    out = [1]
    for p, a in f.factors:
        out = [d * p**k for d in out for k in range(a + 1)]
    out.sort()
    return out


def big_omega(f: Factorization) -> int:
    """Number of prime factors counted with multiplicity."""
    return sum(a for _, a in f.factors)
