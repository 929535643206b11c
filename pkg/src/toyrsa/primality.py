"""Probabilistic primality tests: Fermat pre-filter, then Miller-Rabin.

Every probabilistic function takes an explicit ``random.Random`` so results
are reproducible from a seed. Concurrent callers need separate instances.
"""

import enum
import math
import random
from dataclasses import dataclass
from typing import NamedTuple, Optional

from toyrsa.modarith import modexp, mulmod

DEFAULT_FERMAT_ITERS = 5
DEFAULT_MR_ITERS = 20

TRIAL_DIVISION_LIMIT = 10**12


class Status(enum.Enum):
    COMPOSITE = "composite"
    PROBABLY_PRIME = "probably-prime"


@dataclass(frozen=True)
class Verdict:
    status: Status
    iterations_passed: int = 0
    # base that proved compositeness (Fermat or Miller-Rabin witness)
    witness: Optional[int] = None
    # nontrivial divisor, when one was found directly
    factor: Optional[int] = None

    @property
    def is_composite(self):
        return self.status is Status.COMPOSITE

    @property
    def is_probable_prime(self):
        return self.status is Status.PROBABLY_PRIME

    def __str__(self):
        return self.status.value


def _prime(iterations=0):
    return Verdict(Status.PROBABLY_PRIME, iterations_passed=iterations)


def _composite(witness=None, factor=None):
    return Verdict(Status.COMPOSITE, witness=witness, factor=factor)


class MrDecomposition(NamedTuple):
    s: int  # power of two
    t: int  # odd part


def decompose(n):
    """Write ``n - 1`` as ``2**s * t`` with ``t`` odd."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"decompose needs an odd n >= 3, got {n}")
    s, t = 0, n - 1
    while t % 2 == 0:
        t //= 2
        s += 1
    return MrDecomposition(s, t)


def _check_domain(n, iterations):
    if n < 2:
        raise ValueError(f"primality tests need n >= 2, got {n}")
    if iterations < 1:
        raise ValueError("iterations must be >= 1")


def _small(n):
    """Direct classification for n < 5, where [2, n-2] has no useful base."""
    if n in (2, 3):
        return _prime()
    return _composite(factor=2)


def fermat_passes(n, a):
    return modexp(a, n - 1, n) == 1


def is_mr_witness(n, a, decomposition=None):
    """True if base ``a`` proves odd ``n`` composite."""
    s, t = decomposition or decompose(n)
    x = modexp(a, t, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = mulmod(x, x, n)
        if x == n - 1:
            return False
        if x == 1:
            # nontrivial square root of 1
            return True
    return True


def fermat_test(n, iterations, rng):
    _check_domain(n, iterations)
    if n < 5:
        return _small(n)
    for _ in range(iterations):
        a = rng.randint(2, n - 2)
        if not fermat_passes(n, a):
            return _composite(witness=a)
    return _prime(iterations)


def miller_rabin(n, iterations, rng):
    _check_domain(n, iterations)
    if n < 5:
        return _small(n)
    if n % 2 == 0:
        return _composite(factor=2)
    decomposition = decompose(n)
    for _ in range(iterations):
        a = rng.randint(2, n - 2)
        if is_mr_witness(n, a, decomposition):
            return _composite(witness=a)
    return _prime(iterations)


def is_probable_prime(
    n, fermat_iters=DEFAULT_FERMAT_ITERS, mr_iters=DEFAULT_MR_ITERS, rng=None
):
    """Base-2 Fermat check, random-base Fermat rounds, then Miller-Rabin.

    The first composite verdict short-circuits the pipeline. A passing
    verdict reports the number of Miller-Rabin rounds survived.
    """
    if n < 2:
        raise ValueError(f"primality tests need n >= 2, got {n}")
    if rng is None:
        rng = random.Random()
    if n >= 5 and not fermat_passes(n, 2):
        return _composite(witness=2)
    verdict = fermat_test(n, fermat_iters, rng)
    if verdict.is_composite:
        return verdict
    return miller_rabin(n, mr_iters, rng)


def trial_division(n):
    """Definite primality by dividing by every integer up to sqrt(n)."""
    if not 2 <= n <= TRIAL_DIVISION_LIMIT:
        raise ValueError(f"trial division needs 2 <= n <= {TRIAL_DIVISION_LIMIT}, got {n}")
    for k in range(2, math.isqrt(n) + 1):
        if n % k == 0:
            return _composite(factor=k)
    return _prime()
