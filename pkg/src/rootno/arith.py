"""Integer and rational arithmetic: p-adic valuations, quadratic residue
symbols, deterministic factoring, and the two shape tests (-3*r^2, -12*k^4)
the fibre machinery keys on.

Everything here is exact integer/Fraction arithmetic; no floats except the
math.inf sentinel for the valuation of zero.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

Number = Union[int, Fraction]

# Trial-division cutoff before handing composites to Brent's rho. Factors
# below this bound are found by sieved trial division; 2^16 keeps the worst
# case around 6.5k divisions per call.
_TRIAL_BOUND = 1 << 16


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i in range(limit + 1) if flags[i]]

_SMALL_PRIMES = _sieve(_TRIAL_BOUND)
_SMALL_PRIME_SET = set(_SMALL_PRIMES)


# --------------------------------------------------------------- primality

def _miller_rabin(n: int, bases: tuple[int, ...]) -> bool:
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    for a in bases:
        a %= n
        if a == 0:
            continue
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


def _lucas_spp(n: int) -> bool:
    # Strong Lucas probable prime test with Selfridge's parameters.
    D = 5
    while True:
        g = math.gcd(abs(D), n)
        if 1 < g < n:
            return False
        if jacobi(D, n) == -1:
            break
        D = -(D + 2) if D > 0 else -(D - 2)
    P = 1
    Q = (1 - D) // 4
    d = n + 1
    s = (d & -d).bit_length() - 1
    d >>= s
    inv2 = (n + 1) // 2  # inverse of 2 mod odd n
    U, V = 0, 2
    qk = 1
    for bit in bin(d)[2:]:
        U, V = U * V % n, (V * V - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            U, V = (P * U + V) * inv2 % n, (D * U + P * V) * inv2 % n
            qk = qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * qk) % n
        qk = qk * qk % n
        if V == 0:
            return True
    return False


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    """Deterministic below 2^64 (fixed Miller-Rabin bases); Baillie-PSW above."""
    if n < 2:
        return False
    if n < _TRIAL_BOUND:
        return n in _SMALL_PRIME_SET
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    if n < 1 << 64:
        return _miller_rabin(n, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37))
    if not _miller_rabin(n, (2,)):
        return False
    r = math.isqrt(n)
    if r * r == n:
        return False
    return _lucas_spp(n)


# --------------------------------------------------------------- valuation

def valuation(p: int, x: Number) -> tuple[int, Number]:
    """(nu, unit) with x = p**nu * unit and p dividing neither side of unit.

    x must be a nonzero int or Fraction; p must be prime. For Fraction input
    nu may be negative and unit is a Fraction.
    """
    _require_prime(p)
    if x == 0:
        raise ValueError("valuation of 0 is undefined here; see valuation_or_inf")
    if isinstance(x, Fraction):
        if x.denominator == 1:
            nu, unit = valuation(p, x.numerator)
            return nu, Fraction(unit)
        nn, nu_unit = _int_valuation(p, x.numerator)
        dn, de_unit = _int_valuation(p, x.denominator)
        return nn - dn, Fraction(nu_unit, de_unit)
    return _int_valuation(p, x)


def _int_valuation(p: int, x: int) -> tuple[int, int]:
    nu = 0
    while x % p == 0:
        x //= p
        nu += 1
    return nu, x


def valuation_or_inf(p: int, x: Number) -> tuple[Union[int, float], Number]:
    """Like valuation but maps 0 to (math.inf, 0)."""
    if x == 0:
        _require_prime(p)
        return math.inf, 0
    return valuation(p, x)


def _require_prime(p: int) -> None:
    if p < 2 or not is_prime(p):
        raise ValueError(f"p must be prime, got {p!r}")


# ----------------------------------------------------------------- symbols

def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p: 0 if p | a, else +-1."""
    if p == 2 or p < 3 or not is_prime(p):
        raise ValueError(f"legendre needs an odd prime modulus, got {p!r}")
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n (binary algorithm)."""
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"jacobi needs odd positive n, got {n!r}")
    a %= n
    result = 1
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def modified_jacobi(a: int, b: int, delta: int) -> int:
    """Product over primes p | b with p not dividing delta of
    legendre(a_p, p)**nu_p(b), where a_p is the p-free part of a.

    delta must be even (so the p = 2 factor never arises); a and b nonzero.
    Agrees with the classical Jacobi symbol (a/b) when b is odd positive and
    coprime to both a and delta.
    """
    if a == 0 or b == 0:
        raise ValueError("modified_jacobi needs nonzero a and b")
    if delta % 2 != 0:
        raise ValueError(f"delta must be even, got {delta!r}")
    result = 1
    for p, e in factorize(abs(b))[1]:
        if delta % p == 0:
            continue
        if e % 2 == 0:
            continue
        _, a_p = _int_valuation(p, a)
        result *= legendre(a_p, p)
    return result


# --------------------------------------------------------------- factoring

def _brent_rho(n: int, rng: random.Random) -> int:
    # Brent's cycle variant of Pollard rho with batched gcd.
    if n % 2 == 0:
        return 2
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int) -> tuple[int, list[tuple[int, int]]]:
    """(sign, [(p, e), ...]) with n = sign * prod(p**e), pairs sorted by p."""
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = 1
    if n < 0:
        sign = -1
        n = -n
    powers: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            powers[p] = e
    if n > 1:
        if n < _TRIAL_BOUND * _TRIAL_BOUND or is_prime(n):
            # any remaining cofactor below the square of the trial bound is prime
            powers[n] = powers.get(n, 0) + 1
        else:
            _split_cofactor(n, powers)
    return sign, sorted(powers.items())


def _split_cofactor(n: int, powers: dict) -> None:
    # sympy's factorint (ECM-backed) handles balanced 128-bit semiprimes
    # in seconds where bare rho needs sqrt(p) iterations; fall back to
    # rho so the module still works without it
    try:
        from sympy import factorint as _factorint
    except ImportError:
        _factorint = None
    if _factorint is not None:
        # trial division already happened above; sympy's own trial pass
        # costs ~0.2s per call on 128-bit inputs
        for p, e in _factorint(n, use_trial=False).items():
            powers[int(p)] = powers.get(int(p), 0) + int(e)
        return
    rng = random.Random(n)
    stack = [n]
    while stack:
        m = stack.pop()
        if is_prime(m):
            powers[m] = powers.get(m, 0) + 1
            continue
        d = m
        while d == m:
            d = _brent_rho(m, rng)
        stack.append(d)
        stack.append(m // d)


# ------------------------------------------------------------- shape tests

def as_minus_3_square(s: int) -> Optional[int]:
    """r >= 1 with s = -3 * r**2, or None."""
    if s >= 0 or s % 3 != 0:
        return None
    m = -s // 3
    r = math.isqrt(m)
    return r if r * r == m and r >= 1 else None


def as_minus_12_fourth(s: int) -> Optional[int]:
    """k >= 1 with s = -12 * k**4, or None."""
    if s >= 0 or s % 12 != 0:
        return None
    m = -s // 12
    k = math.isqrt(math.isqrt(m))
    for cand in (k, k + 1):
        if cand >= 1 and cand**4 == m:
            return cand
    return None
