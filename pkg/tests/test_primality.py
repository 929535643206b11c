import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from toyrsa.primality import (
    MrDecomposition,
    decompose,
    fermat_passes,
    fermat_test,
    is_mr_witness,
    is_probable_prime,
    miller_rabin,
    trial_division,
)

from oracles import is_prime_brute

CARMICHAELS = (561, 1105, 1729)


def test_decompose():
    assert decompose(561) == MrDecomposition(s=4, t=35)
    assert decompose(3) == MrDecomposition(s=1, t=1)
    assert decompose(13) == MrDecomposition(s=2, t=3)
    for bad in (1, 2, 8, 100):
        with pytest.raises(ValueError):
            decompose(bad)


@given(st.integers(1, 2**62).map(lambda k: 2 * k + 1))
def test_decompose_property(n):
    s, t = decompose(n)
    assert t % 2 == 1 and s >= 1
    assert 2**s * t == n - 1


def test_fermat_on_primes():
    assert fermat_test(7, 5, random.Random(1)).is_probable_prime
    assert fermat_test(2, 1, random.Random(1)).is_probable_prime
    assert fermat_test(3, 1, random.Random(1)).is_probable_prime
    assert fermat_test(4, 1, random.Random(1)).is_composite


def test_fermat_fooled_by_carmichael_base_2():
    assert pow(2, 560, 561) == 1
    assert fermat_passes(561, 2)


def test_fermat_composite_verdict_discloses_witness():
    v = fermat_test(91, 20, random.Random(3))
    assert v.is_composite
    assert not fermat_passes(91, v.witness)


def test_miller_rabin_catches_561_with_base_2():
    # squarings from 2^35 mod 561 reach 1 without passing through 560
    assert [263, 166, 67, 1] == [pow(2, 35 * 2**r, 561) for r in range(4)]
    assert is_mr_witness(561, 2)


def test_miller_rabin_examples():
    assert miller_rabin(4, 1, random.Random(0)).is_composite
    assert miller_rabin(104729, 20, random.Random(0)).is_probable_prime
    assert miller_rabin(2, 1, random.Random(0)).is_probable_prime
    v = miller_rabin(561, 20, random.Random(0))
    assert v.is_composite and is_mr_witness(561, v.witness)


def test_zero_iterations_rejected():
    for fn in (fermat_test, miller_rabin):
        with pytest.raises(ValueError):
            fn(7, 0, random.Random(0))
    with pytest.raises(ValueError):
        miller_rabin(1, 5, random.Random(0))


def test_pipeline():
    assert is_probable_prime(62011, 5, 20, random.Random(0)).is_probable_prime
    assert is_probable_prime(561, 5, 20, random.Random(0)).is_composite
    for bad in (0, 1):
        with pytest.raises(ValueError):
            is_probable_prime(bad, 5, 20, random.Random(0))


def test_pipeline_rejects_carmichaels_for_every_seed():
    for n in CARMICHAELS:
        for seed in range(200):
            assert is_probable_prime(n, 5, 20, random.Random(seed)).is_composite


def test_carmichael_fermat_congruence_exhaustive():
    for n in CARMICHAELS:
        assert not is_prime_brute(n)
        for a in range(1, n):
            if math.gcd(a, n) == 1:
                assert pow(a, n - 1, n) == 1


def test_trial_division():
    assert trial_division(104729).is_probable_prime
    assert trial_division(4).is_composite
    v = trial_division(760812959)
    assert v.is_composite and v.factor == 12269
    with pytest.raises(ValueError):
        trial_division(1)
    with pytest.raises(ValueError):
        trial_division(10**12 + 1)


def test_trial_division_matches_brute_force():
    for n in range(2, 5000):
        assert trial_division(n).is_probable_prime == is_prime_brute(n)


def test_soundness_small_range():
    rng = random.Random(5)
    for n in range(2, 20000):
        v = miller_rabin(n, 20, rng)
        assert v.is_probable_prime == is_prime_brute(n), n
        if v.witness is not None:
            assert is_mr_witness(n, v.witness)


@settings(max_examples=200)
@given(st.integers(2, 10**9), st.integers(0, 2**64 - 1))
def test_determinism(n, seed):
    a = miller_rabin(n, 10, random.Random(seed))
    b = miller_rabin(n, 10, random.Random(seed))
    assert a == b
    assert is_probable_prime(n, 3, 10, random.Random(seed)) == is_probable_prime(n, 3, 10, random.Random(seed))
