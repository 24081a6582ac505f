"""The eight congruence claims: frozen residues, consistency, and path agreement."""

from fractions import Fraction

import pytest

from qcong.bigmath import odd_primes_up_to
from qcong.congruence import (
    check_eq1,
    check_eq2,
    check_eq3,
    check_eq4,
    check_eq5,
    check_eq6,
    check_eq7,
    check_eq8,
)
from qcong.errors import EvenN, NotOddPrime
from qcong.sums import double_sum


def test_eq7_frozen_instances():
    r = check_eq7(3)
    assert r.holds and r.lhs_residue == 3 and r.rhs_residue == 3  # -3/2 = -3*5 = 3 (mod 9)
    r = check_eq7(5)
    assert r.holds and r.lhs_residue == 10 and r.rhs_residue == 10  # 35/16 -> 35*11 (mod 25)
    assert r.modulus_description == "p^2 = 25"


def test_eq8_frozen_instances():
    r = check_eq8(3)
    assert r.holds and r.lhs_residue == 3  # sum = 30, 30 = 3 (mod 9)
    assert double_sum(3, Fraction(1, 4)) == 30
    r = check_eq8(5)
    assert r.holds and r.lhs_residue == 5  # sum = 155, 155 = 5 (mod 25)
    assert double_sum(5, Fraction(1, 4)) == 155
    r = check_eq8(7)
    assert r.holds and r.lhs_residue == 7  # sum = 448 = 7 + 9*49
    assert double_sum(7, Fraction(1, 4)) == 448


def test_eq5_eq6_vanish_mod_p():
    for p in odd_primes_up_to(60):
        assert check_eq5(p).holds
        assert check_eq6(p).holds
        assert check_eq5(p).lhs_residue == 0
        assert check_eq6(p).lhs_residue == 0


def test_mod_p_residues_are_reduced_mod_p2_residues():
    for p in odd_primes_up_to(60):
        assert check_eq5(p).lhs_residue == check_eq7(p).lhs_residue % p
        assert check_eq6(p).lhs_residue == check_eq8(p).lhs_residue % p


def test_non_odd_prime_instances_rejected():
    for check in (check_eq5, check_eq6, check_eq7, check_eq8):
        for bad in (2, 9, 15, 1, 0):
            with pytest.raises(NotOddPrime):
                check(bad)


def test_sum_denominators_are_powers_of_two():
    # guarantees the p-adic reduction is defined for every odd p
    for n in range(1, 60):
        for x in (Fraction(-1, 8), Fraction(1, 4)):
            den = double_sum(n, x).denominator
            assert den & (den - 1) == 0


def test_q_claims_hold_vacuously_at_n_1():
    for check in (check_eq1, check_eq2, check_eq3, check_eq4):
        r = check(1)
        assert r.holds and r.lhs_residue.is_zero
        assert r.modulus_description == "[1]"


def test_q_claims_small_odd_instances():
    assert check_eq1(3).holds
    assert check_eq2(5).holds
    assert check_eq3(3).holds
    assert check_eq4(5).holds


def test_q_claims_reject_even_n():
    for check in (check_eq1, check_eq2, check_eq3, check_eq4):
        with pytest.raises(EvenN):
            check(4)


def test_folded_and_reduced_paths_agree():
    # includes composite n = 9, where the unreduced common denominator
    # shares cyclotomic factors with [n] and reduction really matters
    for check in (check_eq1, check_eq2, check_eq3, check_eq4):
        for n in (1, 3, 5, 7, 9):
            fast = check(n, method="folded")
            slow = check(n, method="reduced")
            assert fast.holds == slow.holds == True, (check.__name__, n)
            assert fast.lhs_residue.is_zero and slow.lhs_residue.is_zero


def test_report_invariant_holds_iff_residues_match():
    reports = [check_eq7(3), check_eq8(5), check_eq1(3), check_eq3(9)]
    for r in reports:
        assert r.holds == (r.lhs_residue == r.rhs_residue)
        assert r.elapsed_ms >= 0


def test_unknown_method_rejected():
    with pytest.raises(ValueError):
        check_eq1(3, method="guess")
