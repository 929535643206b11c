"""Textbook RSA over 64-bit moduli, for teaching and benchmarking."""

from toyrsa.modarith import (
    ExpMethod,
    NotInvertibleError,
    ext_gcd,
    gcd,
    mod_inverse,
    modexp,
    modexp_naive,
    mulmod,
)
from toyrsa.primality import (
    Verdict,
    decompose,
    fermat_test,
    is_probable_prime,
    miller_rabin,
    trial_division,
)
from toyrsa.rsa import (
    KeyGenParams,
    KeyPair,
    PrivateKey,
    PublicKey,
    decrypt,
    encrypt,
    generate_keypair,
    keypair_from_primes,
    sample_prime_candidate,
)
from toyrsa.sieve import PrimeTable, nth_prime, sieve_primes

__version__ = "0.1.0"
