"""Modular arithmetic primitives used by the rest of the package.

Python integers never overflow, so ``mulmod`` is exact for any modulus.
The naive exponentiation loop is the one exception: it is compiled to
64-bit machine arithmetic, which is why its modulus is capped.
"""

import enum

import numba

UINT64_MAX = 2**64 - 1

# floor(2**31.5): the largest n for which (n - 1)**2 still fits in a signed 64-bit int
NAIVE_MODULUS_LIMIT = 3_037_000_499


class ExpMethod(enum.Enum):
    NAIVE = "naive"
    SQUARE_MULTIPLY = "square-multiply"


def _check_modulus(n):
    if n == 0:
        raise ValueError("zero modulus")
    if n < 0 or n > UINT64_MAX:
        raise ValueError(f"modulus {n} outside uint64 range")


def mulmod(a, b, n):
    _check_modulus(n)
    return (a % n) * (b % n) % n


def modexp(base, exp, n):
    """Right-to-left binary square-and-multiply."""
    _check_modulus(n)
    if exp < 0:
        raise ValueError("negative exponent")
    result = 1 % n
    base %= n
    # inline mulmod: operands are already reduced and n validated
    while exp:
        if exp & 1:
            result = result * base % n
        base = base * base % n
        exp >>= 1
    return result


@numba.njit(cache=True)
def _naive_loop(base, exp, n):
    c = 1 % n
    for _ in range(exp):
        c = c * base % n
    return c


def modexp_naive(base, exp, n):
    """Compute base**exp mod n with ``exp`` sequential multiplications.

    This is the slow loop of a textbook C implementation, kept so its cost
    can be measured against :func:`modexp`. Runs in 64-bit arithmetic, so
    ``n`` must stay below :data:`NAIVE_MODULUS_LIMIT`.
    """
    _check_modulus(n)
    if n >= NAIVE_MODULUS_LIMIT:
        raise ValueError("modulus too large for naive path")
    if exp < 0:
        raise ValueError("negative exponent")
    if exp > 2**63 - 1:
        raise ValueError("exponent too large for naive path")
    return int(_naive_loop(base % n, exp, n))


def gcd(a, b):
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, a % b
    return a


def ext_gcd(a, b):
    """Return ``(g, x, y)`` with ``g = gcd(a, b)`` and ``a*x + b*y == g``."""
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_r, old_x, old_y


class NotInvertibleError(ValueError):
    pass


def mod_inverse(e, m):
    if m < 2:
        raise ValueError(f"modulus {m} < 2")
    g, x, _ = ext_gcd(e % m, m)
    if g != 1:
        raise NotInvertibleError(f"{e} is not invertible mod {m} (gcd {g})")
    return x % m
