from math import gcd

import pytest

from isotemporal import counting
from isotemporal.counting import (
    binary_necklace_count,
    burnside_class_count,
    burnside_footprint_count,
    divisors,
    footprint_count,
    isotemporal_class_count,
    mirror_footprint_count,
    necklace_sum,
    skew_reflective_count,
    skewed_rotational_form_count,
    totient,
)
from isotemporal.errors import InexactDivision, OddInput


def totient_by_gcd(d):
    return sum(1 for k in range(1, d + 1) if gcd(k, d) == 1)


def necklaces_by_brute_force(n):
    seen = set()
    for m in range(1 << n):
        s = format(m, f"0{n}b")
        seen.add(min(s[k:] + s[:k] for k in range(n)))
    return len(seen)


class TestTotient:
    @pytest.mark.parametrize("d, phi", [(1, 1), (7, 6), (12, 4)])
    def test_examples(self, d, phi):
        assert totient(d) == phi

    def test_matches_gcd_count(self):
        for d in range(1, 600):
            assert totient(d) == totient_by_gcd(d)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            totient(0)


class TestDivisors:
    @pytest.mark.parametrize(
        "n, ds", [(1, [1]), (12, [1, 2, 3, 4, 6, 12]), (27, [1, 3, 9, 27]), (36, [1, 2, 3, 4, 6, 9, 12, 18, 36])]
    )
    def test_examples(self, n, ds):
        assert list(divisors(n)) == ds

    def test_matches_trial(self):
        for n in range(1, 500):
            assert list(divisors(n)) == [d for d in range(1, n + 1) if n % d == 0]


class TestFootprintCount:
    @pytest.mark.parametrize("n, m", [(3, 1), (4, 3), (5, 3), (6, 7)])
    def test_examples(self, n, m):
        assert footprint_count(n) == m

    def test_even_branch_value_at_eight(self):
        # 1 + (127*1 + 7*1 + 1*2 + 0*4) / 8
        assert footprint_count(8) == 18

    @pytest.mark.parametrize("n", range(3, 200))
    def test_division_is_exact(self, n):
        footprint_count(n)

    def test_burnside_version(self):
        # rotation orbits of even nonempty subsets, counted by hand for n = 8:
        # (127 + 15 + 2*3 + 4*1) / 8
        assert burnside_footprint_count(8) == 19
        for n in (3, 5, 7, 9, 11):
            assert burnside_footprint_count(n) == footprint_count(n)


class TestMirrorFootprints:
    @pytest.mark.parametrize("n, m", [(4, 2), (6, 3), (8, 6), (10, 10), (12, 20)])
    def test_examples(self, n, m):
        assert mirror_footprint_count(n) == m

    def test_odd_rejected(self):
        with pytest.raises(OddInput):
            mirror_footprint_count(7)

    def test_counts_half_footprints_up_to_reversal(self):
        # subsets of a path of (n-2)/2 edges, identified with their mirror image
        for n in range(4, 30, 2):
            h = (n - 2) // 2
            classes = {min(m, int(format(m, f"0{h}b")[::-1], 2)) for m in range(1 << h)}
            assert mirror_footprint_count(n) == len(classes)


class TestSkewedRotational:
    @pytest.mark.parametrize("n, m", [(4, 2), (6, 2), (8, 4), (10, 4), (12, 7), (14, 9), (16, 16)])
    def test_census_values(self, n, m):
        # values frozen from enumerate_pm_classes
        assert skewed_rotational_form_count(n) == m

    @pytest.mark.parametrize("n, lam", [(4, 2), (6, 2), (8, 4), (10, 4), (12, 6), (16, 12)])
    def test_reflective_part(self, n, lam):
        assert skew_reflective_count(n) == lam

    def test_odd_rejected(self):
        with pytest.raises(OddInput):
            skewed_rotational_form_count(9)

    @pytest.mark.parametrize("n", range(4, 200, 2))
    def test_division_is_exact(self, n):
        skewed_rotational_form_count(n)


class TestClassCount:
    def test_small_terms(self):
        assert [isotemporal_class_count(n) for n in range(3, 8)] == [1, 3, 3, 8, 9]

    def test_last_listed_term(self):
        assert isotemporal_class_count(27) == 2485533

    def test_n4_half_powers_cancel(self):
        assert isotemporal_class_count(4) == 3

    def test_formula_value_at_twelve(self):
        # (2112 - 48)/12 + 2^4 + 2^1 - 2^0; the published list has 188 here
        assert isotemporal_class_count(12) == 189

    @pytest.mark.parametrize("n", range(3, 300))
    def test_division_is_exact(self, n):
        isotemporal_class_count(n)

    def test_odd_branch_is_half_necklaces_minus_one(self):
        for n in range(3, 60, 2):
            assert 2 * (isotemporal_class_count(n) + 1) == binary_necklace_count(n)

    @pytest.mark.parametrize("n, exact", [(3, 1), (4, 3), (6, 8), (8, 21), (10, 61), (12, 191)])
    def test_burnside_class_count(self, n, exact):
        assert burnside_class_count(n) == exact

    def test_burnside_agrees_with_formula_for_odd_n(self):
        for n in range(3, 80, 2):
            assert burnside_class_count(n) == isotemporal_class_count(n)

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            isotemporal_class_count(2)


class TestNecklaces:
    @pytest.mark.parametrize("n, m", [(1, 2), (3, 4), (6, 14)])
    def test_examples(self, n, m):
        assert binary_necklace_count(n) == m

    def test_matches_brute_force(self):
        for n in range(1, 13):
            assert binary_necklace_count(n) == necklaces_by_brute_force(n)

    def test_sum_divisible(self):
        for n in range(1, 500):
            assert necklace_sum(n) % n == 0


def test_inexact_division_is_a_hard_error():
    with pytest.raises(InexactDivision):
        counting._exact(counting.Fraction(1, 2), "probe")
