"""Acceptance suite: one test per criterion, all checks exact, budgets enforced.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
pass lines and timings.
"""

import random
import time
from fractions import Fraction

from qcong.bigmath import odd_primes_up_to
from qcong.closedform import (
    closed_form,
    closed_form_numerator,
    reduced_double_sum_poly,
    special_q_neg_half,
    special_q_one,
)
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
from qcong.qring import (
    ONE,
    QPoly,
    QRat,
    cyclotomic,
    divrem,
    poly_gcd,
    q_integer,
    q_pochhammer,
)
from qcong.sums import (
    double_sum,
    inner_closed,
    inner_conv_sum,
    plain_conv_sum,
    weighted_conv_sum,
)


def _finish(name: str, start: float, budget: float) -> None:
    elapsed = time.perf_counter() - start
    print(f"PASS {name}: {elapsed:.2f}s (budget {budget:.0f}s)")
    assert elapsed < budget, f"{name} exceeded its {budget}s budget ({elapsed:.2f}s)"


def test_criterion_1_inner_convolution_equals_closed_form():
    start = time.perf_counter()
    for k in range(301):
        assert inner_conv_sum(k) == inner_closed(k), k
    _finish("criterion 1 (inner convolution = 4^k(9k^2+3k+2)/2, k <= 300)", start, 10)


def test_criterion_2_auxiliary_convolutions():
    start = time.perf_counter()
    for k in range(501):
        assert plain_conv_sum(k) == 4**k, k
        assert weighted_conv_sum(k) == 4**k * k * (k - 1) // 8, k
    _finish("criterion 2 (plain/weighted convolutions, k <= 500)", start, 30)


def test_criterion_3_closed_form_identity_and_sign_regression():
    start = time.perf_counter()
    for n in range(1, 65):
        assert closed_form(n) == QRat(reduced_double_sum_poly(n)), n
    for n in (1, 2, 5):
        printed = QRat(closed_form_numerator(n), 2 * QPoly([1, -1]) ** 3)
        assert printed.evaluate(Fraction(2)) == -closed_form(n).evaluate(Fraction(2)), n
        assert printed == QRat(-closed_form(n).num, closed_form(n).den), n
    _finish("criterion 3 (closed form = polynomial sum, n <= 64; sign regression)", start, 10)


def test_criterion_4_corollary_specializations():
    start = time.perf_counter()
    for n in range(1, 1001):
        assert double_sum(n, Fraction(-1, 8)) == special_q_neg_half(n), n
        assert double_sum(n, Fraction(1, 4)) == special_q_one(n), n
    _finish("criterion 4 (specializations at q=-1/2 and q=1, n <= 1000)", start, 60)


def test_criterion_5_supercongruences_mod_p_squared():
    start = time.perf_counter()
    primes = odd_primes_up_to(499)
    for p in primes:
        assert check_eq7(p).holds, p
        assert check_eq8(p).holds, p
    r7_3, r7_5 = check_eq7(3), check_eq7(5)
    assert (r7_3.lhs_residue, r7_3.rhs_residue) == (3, 3)
    assert (r7_5.lhs_residue, r7_5.rhs_residue) == (10, 10)
    assert double_sum(3, Fraction(1, 4)) == 30 and check_eq8(3).lhs_residue == 3
    assert double_sum(5, Fraction(1, 4)) == 155 and check_eq8(5).lhs_residue == 5
    _finish(f"criterion 5 (eq7/eq8 supercongruences, {len(primes)} odd primes < 500)", start, 30)


def test_criterion_6_mod_p_corollaries_consistent_with_mod_p_squared():
    start = time.perf_counter()
    primes = odd_primes_up_to(499)
    for p in primes:
        r5, r6 = check_eq5(p), check_eq6(p)
        assert r5.holds and r6.holds, p
        assert r5.lhs_residue == check_eq7(p).lhs_residue % p, p
        assert r6.lhs_residue == check_eq8(p).lhs_residue % p, p
    _finish(f"criterion 6 (eq5/eq6 mod-p corollaries, {len(primes)} odd primes < 500)", start, 30)


def test_criterion_7_q_congruences_both_paths():
    start = time.perf_counter()
    for n in range(1, 26, 2):
        for check in (check_eq1, check_eq2, check_eq3, check_eq4):
            fast = check(n, method="folded")
            slow = check(n, method="reduced")
            assert fast.holds, (check.__name__, n, "folded")
            assert slow.holds, (check.__name__, n, "reduced")
            assert fast.holds == slow.holds, (check.__name__, n)
    _finish("criterion 7 (eq1-eq4 mod [n], odd n <= 25, folded and reduced paths)", start, 120)


def test_criterion_8_ring_property_suite():
    start = time.perf_counter()
    rng = random.Random(20260810)

    def rand_poly(max_len, bound=30):
        return QPoly([rng.randint(-bound, bound) for _ in range(rng.randint(0, max_len))])

    # divrem reconstruction
    done = 0
    while done < 120:
        a, b = rand_poly(40), rand_poly(12)
        if b.is_zero:
            continue
        q, r = divrem(a, b)
        assert q * b + r == a and r.degree < b.degree
        done += 1

    # gcd divides both arguments, monic
    done = 0
    while done < 120:
        a, b = rand_poly(14), rand_poly(14)
        if a.is_zero and b.is_zero:
            continue
        g = poly_gcd(a, b)
        assert g.leading == 1
        for f in (a, b):
            if not f.is_zero:
                assert divrem(f, g)[1].is_zero
        done += 1

    # cyclotomic product over divisors d > 1 rebuilds [n]
    for n in range(2, 61):
        prod = ONE
        for d in range(2, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic(d)
        assert prod == q_integer(n), n

    # shifted-factorial degree formula
    for _ in range(120):
        sign = rng.choice((1, -1))
        e = rng.randint(0 if sign == -1 else 1, 9)
        step = rng.randint(1, 6)
        k = rng.randint(0, 12)
        assert q_pochhammer(sign, e, step, k).degree == e * k + step * k * (k - 1) // 2

    _finish("criterion 8 (ring property suite, 120 randomized instances each)", start, 30)
