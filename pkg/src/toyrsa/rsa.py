"""Textbook RSA over small moduli: key generation, encryption, decryption.

Messages are plain integers in ``[0, n)``; there is no padding and no
byte encoding. None of this is secure.
"""

import random
from dataclasses import dataclass

from toyrsa.modarith import ExpMethod, gcd, mod_inverse, modexp, modexp_naive
from toyrsa.primality import DEFAULT_FERMAT_ITERS, DEFAULT_MR_ITERS, is_probable_prime
from toyrsa.sieve import default_table, nth_prime

MAX_MODULUS = 2**63 - 1
MAX_REDRAWS = 10**6


@dataclass(frozen=True)
class PublicKey:
    e: int
    n: int


@dataclass(frozen=True)
class PrivateKey:
    d: int
    n: int


@dataclass(frozen=True)
class KeyPair:
    public: PublicKey
    private: PrivateKey
    p: int
    q: int
    phi: int

    @property
    def n(self):
        return self.public.n

    @property
    def e(self):
        return self.public.e

    @property
    def d(self):
        return self.private.d


@dataclass(frozen=True)
class KeyGenParams:
    seed: int = 0
    index_min: int = 1000
    index_max: int = 9999
    fermat_iters: int = DEFAULT_FERMAT_ITERS
    mr_iters: int = DEFAULT_MR_ITERS

    def __post_init__(self):
        if not 0 <= self.index_min <= self.index_max < 10_000:
            raise ValueError(
                f"need 0 <= index_min <= index_max < 10000, "
                f"got [{self.index_min}, {self.index_max}]"
            )
        if self.fermat_iters < 1 or self.mr_iters < 1:
            raise ValueError("iteration counts must be >= 1")


def sample_prime_candidate(table, params, rng):
    """Draw table entries at random indices until one passes the primality pipeline."""
    for _ in range(MAX_REDRAWS):
        candidate = nth_prime(table, rng.randint(params.index_min, params.index_max))
        verdict = is_probable_prime(candidate, params.fermat_iters, params.mr_iters, rng)
        if verdict.is_probable_prime:
            return candidate
    raise RuntimeError(f"no prime candidate accepted after {MAX_REDRAWS} draws")


def _assemble(p, q, e, phi):
    n = p * q
    d = mod_inverse(e, phi)
    return KeyPair(PublicKey(e, n), PrivateKey(d, n), p, q, phi)


def generate_keypair(params=None, table=None):
    params = params or KeyGenParams()
    table = table or default_table()
    rng = random.Random(params.seed)

    p = sample_prime_candidate(table, params, rng)
    for _ in range(MAX_REDRAWS):
        q = sample_prime_candidate(table, params, rng)
        if q != p:
            break
    else:
        raise RuntimeError("could not draw a second prime distinct from p")

    phi = (p - 1) * (q - 1)
    for _ in range(MAX_REDRAWS):
        e = rng.randint(3, phi - 1)
        if gcd(e, phi) == 1:
            return _assemble(p, q, e, phi)
    raise RuntimeError("could not draw an exponent coprime to phi")


def keypair_from_primes(p, q, e):
    """Build the key pair for given primes and public exponent.

    Deterministic: this is how fixed published examples are replayed.
    """
    if p == q:
        raise ValueError("identical primes")
    if p * q > MAX_MODULUS:
        raise OverflowError(f"modulus {p}*{q} does not fit below 2**63")
    for x in (p, q):
        if x < 2 or not is_probable_prime(x, rng=random.Random(p * q)).is_probable_prime:
            raise ValueError(f"input not prime: {x}")
    phi = (p - 1) * (q - 1)
    if not 1 < e < phi:
        raise ValueError(f"exponent {e} outside (1, {phi})")
    if gcd(e, phi) != 1:
        raise ValueError("exponent not coprime to phi")
    return _assemble(p, q, e, phi)


def _power(base, exp, n, method):
    if method is ExpMethod.NAIVE:
        return modexp_naive(base, exp, n)
    return modexp(base, exp, n)


def encrypt(key, m, method=ExpMethod.SQUARE_MULTIPLY):
    if not 0 <= m < key.n:
        raise ValueError("message out of range")
    return _power(m, key.e, key.n, method)


def decrypt(key, c, method=ExpMethod.SQUARE_MULTIPLY):
    if not 0 <= c < key.n:
        raise ValueError("cipher out of range")
    return _power(c, key.d, key.n, method)
