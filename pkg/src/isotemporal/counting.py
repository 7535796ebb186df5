"""Closed-form counts for n-gon classes, footprints and necklaces.

All arithmetic is exact. Intermediate values are Fractions (the n = 4k branch
has terms of 1/2 at n = 4 that cancel) and every result is checked to be an
integer before it is returned.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import ceil

from .errors import InexactDivision, OddInput


@lru_cache(maxsize=None)
def totient(d: int) -> int:
    """Euler's totient: how many of 1..d are coprime to d."""
    if d < 1:
        raise ValueError("totient is defined for d >= 1")
    result, m, p = d, d, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    if n < 1:
        raise ValueError("divisors are defined for n >= 1")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def _pow2(e: int) -> Fraction:
    return Fraction(2) ** e


def _exact(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise InexactDivision(f"{what} evaluated to non-integer {x}")
    return int(x)


def _require_n(n: int, lo: int = 3) -> None:
    if n < lo:
        raise ValueError(f"n must be >= {lo}, got {n}")


def _require_even(n: int) -> None:
    if n % 2:
        raise OddInput(f"n must be even, got {n}")
    _require_n(n, 4)


def _footprint_sum(n: int) -> int:
    return sum((2 ** (n // d - 1) - 1) * totient(d) for d in divisors(n))


def _half_skew_sum(n: int) -> int:
    """Sum over c | n/2 of 2^(n/2c - 1) * phi(2c)."""
    return sum(2 ** (n // (2 * c) - 1) * totient(2 * c) for c in divisors(n // 2))


def footprint_count(n: int) -> int:
    """Footprint count from the closed formula: the divisor sum over n, plus one
    when n is even."""
    _require_n(n)
    value = Fraction(_footprint_sum(n), n)
    if n % 2 == 0:
        value += 1
    return _exact(value, f"footprint_count({n})")


def mirror_footprint_count(n: int) -> int:
    """Half-footprints on one side of a mirror axis, up to reversal."""
    _require_even(n)
    tail = (n - 4) // 4 if n % 4 == 0 else (n - 6) // 4
    return _exact(_pow2((n - 4) // 2) + _pow2(tail), f"mirror_footprint_count({n})")


def skew_reflective_count(n: int) -> int:
    """Forms with skewed rotational symmetry and at least one reflection axis."""
    _require_even(n)
    if n % 4 == 2:
        return 2 ** ((n - 2) // 4)
    return _exact(
        _pow2((n - 4) // 4) + _pow2(ceil(Fraction(n - 4, 8))),
        f"skew_reflective_count({n})",
    )


def skewed_rotational_form_count(n: int) -> int:
    _require_even(n)
    value = (Fraction(2 * _half_skew_sum(n), n) + skew_reflective_count(n)) / 2
    return _exact(value, f"skewed_rotational_form_count({n})")


def isotemporal_class_count(n: int) -> int:
    """Number of isotemporal classes of the n-gon by the three-branch closed formula."""
    _require_n(n)
    if n % 2:
        return _exact(Fraction(_footprint_sum(n), n), f"isotemporal_class_count({n})")
    full = sum(2 ** (n // d - 1) * totient(d) for d in divisors(n))
    value = Fraction(full - _half_skew_sum(n), n) + _pow2((n - 4) // 2)
    if n % 4 == 0:
        value += _pow2((n - 8) // 4) - _pow2(ceil(Fraction(n - 4, 8)) - 1)
    return _exact(value, f"isotemporal_class_count({n})")


def necklace_sum(n: int) -> int:
    """Sum over d | n of phi(d) * 2^(n/d); always a multiple of n."""
    _require_n(n, 1)
    return sum(totient(d) * 2 ** (n // d) for d in divisors(n))


def binary_necklace_count(n: int) -> int:
    return _exact(Fraction(necklace_sum(n), n), f"binary_necklace_count({n})")


# Orbit counts by Burnside's lemma. These are the exact values that brute-force
# enumeration reproduces; the closed formulas above depart from them for even
# n >= 8.


def burnside_footprint_count(n: int) -> int:
    """Rotation orbits of nonempty even-size subsets of Z_n."""
    _require_n(n)
    total = 0
    for d in divisors(n):
        # a rotation of order d fixes subsets that repeat with period n/d;
        # their size is d * (block size), always even when d is
        fixed = 2 ** (n // d) if d % 2 == 0 else 2 ** (n // d - 1)
        total += totient(d) * (fixed - 1)
    return _exact(Fraction(total, n), f"burnside_footprint_count({n})")


def burnside_class_count(n: int) -> int:
    """Isotemporal classes as dihedral orbits of non-constant orientations.

    Rotations act on the n orientation bits cyclically; a reflection reverses
    the bit string and complements it. For odd n no reflection fixes a string;
    for even n the n/2 reflections without a fixed edge each fix 2^(n/2).
    """
    _require_n(n)
    total = necklace_sum(n)
    if n % 2 == 0:
        total += (n // 2) * 2 ** (n // 2)
    # the two constant strings form one orbit
    return _exact(Fraction(total, 2 * n), f"burnside_class_count({n})") - 1
