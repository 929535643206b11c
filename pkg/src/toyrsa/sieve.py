"""Sieve of Eratosthenes and the prime table RSA primes are drawn from."""

import functools
import math
from dataclasses import dataclass

MAX_SIEVE_LIMIT = 10**8

# Inclusive bound holding the first 10,000 primes (the 10,000th is 104,729).
DEFAULT_SIEVE_LIMIT = 104_730


@dataclass(frozen=True)
class PrimeTable:
    limit: int
    primes: tuple

    def __len__(self):
        return len(self.primes)


def sieve_primes(limit):
    """All primes in ``[2, limit]``, marking composites from p*p upward."""
    if limit < 2:
        raise ValueError(f"sieve limit {limit} < 2")
    if limit > MAX_SIEVE_LIMIT:
        raise ValueError(f"sieve limit {limit} exceeds resource guard {MAX_SIEVE_LIMIT}")

    is_prime = bytearray([1]) * (limit + 1)
    is_prime[0] = is_prime[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    primes = tuple(i for i, flag in enumerate(is_prime) if flag)
    return PrimeTable(limit=limit, primes=primes)


@functools.lru_cache(maxsize=None)
def default_table():
    return sieve_primes(DEFAULT_SIEVE_LIMIT)


def nth_prime(table, index):
    # no negative indexing: index counts from the smallest prime
    if not 0 <= index < len(table.primes):
        raise IndexError(f"prime index {index} out of range [0, {len(table.primes)})")
    return table.primes[index]
