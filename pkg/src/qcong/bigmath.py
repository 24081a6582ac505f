"""Arbitrary-precision integer and rational helpers.

Python ints are already exact sign/magnitude integers and
``fractions.Fraction`` is the canonical reduced rational (positive
denominator, gcd(|num|, den) = 1), so this module only adds the small
amount of number theory the verification checks need: binomials, an odd
prime sieve, modular inverses, and p-adic reduction of rationals.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DenominatorNotCoprime, NotInvertible


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0, with out-of-range k giving 0."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def central_binomial(k: int) -> int:
    """C(2k, k)."""
    if k < 0:
        raise ValueError(f"central_binomial needs k >= 0, got {k}")
    return math.comb(2 * k, k)


def mod_inverse(a: int, m: int) -> int:
    """The unique x in [0, m) with a*x = 1 (mod m)."""
    if m < 2:
        raise ValueError(f"mod_inverse needs m >= 2, got {m}")
    try:
        return pow(a, -1, m)
    except ValueError as exc:
        raise NotInvertible(f"{a} has no inverse modulo {m}") from exc


def rational_mod(r: Fraction | int, m: int) -> int:
    """Residue of a rational a/b modulo m, i.e. a * b^(-1) mod m, in [0, m).

    Defined only when gcd(b, m) = 1; otherwise the congruence has no
    meaning and DenominatorNotCoprime is raised.
    """
    if m < 2:
        raise ValueError(f"rational_mod needs m >= 2, got {m}")
    r = Fraction(r)
    if math.gcd(r.denominator, m) != 1:
        raise DenominatorNotCoprime(
            f"denominator {r.denominator} shares a factor with modulus {m}"
        )
    return r.numerator * mod_inverse(r.denominator, m) % m


def odd_primes_up_to(limit: int) -> list[int]:
    """All primes p with 3 <= p <= limit, ascending (2 is excluded)."""
    if limit < 3:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i in range(3, limit + 1) if sieve[i]]


def is_odd_prime(p: int) -> bool:
    """Trial-division primality for the modest p used in the scans."""
    if p < 3 or p % 2 == 0:
        return False
    for f in range(3, math.isqrt(p) + 1, 2):
        if p % f == 0:
            return False
    return True
