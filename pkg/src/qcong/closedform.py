"""Closed forms for the weighted convolution sums.

The generating identity verified here: for every n >= 1,

    sum_{k<n} (q/4)^k sum_j C(2j,j) C(2k-2j,k-j) (6j+1)(6k-6j+1)
        = sum_{k<n} (9k^2/2 + 3k/2 + 1) q^k
        = [ (9n^2-15n+8) q^(n+2) - (18n^2-12n-8) q^(n+1)
            + (9n^2+3n+2) q^n - 2(2q+1)^2 ] / (2 (q-1)^3),

together with the geometric moment sums S_n = sum k q^k and
T_n = sum k^2 q^k that drive its proof, and the two specializations
q = -1/2 and q = 1.  The q = 1 point is a removable singularity of the
rational closed form and is served by the exact specialized value
instead of a limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import SingularPoint
from .qring import QPoly, QRat

_Q = QPoly([0, 1])
_ONE_MINUS_Q = QPoly([1, -1])


def geometric_S(n: int) -> QRat:
    """Sum over k < n of k q^k, via the closed rational form.

    Built as q(1-q^(n-1))/(1-q)^2 - q^n (n-1)/(1-q); the QRat reduction
    collapses it to the underlying polynomial.
    """
    if n < 1:
        raise ValueError(f"geometric_S needs n >= 1, got {n}")
    lead = QRat(_Q * (1 - QPoly.q_power(n - 1) if n > 1 else QPoly()), _ONE_MINUS_Q**2)
    tail = QRat(QPoly.q_power(n) * (n - 1), _ONE_MINUS_Q)
    return lead - tail


def geometric_T(n: int) -> QRat:
    """Sum over k < n of k^2 q^k, via the closed rational form."""
    if n < 1:
        raise ValueError(f"geometric_T needs n >= 1, got {n}")
    one_minus_qn1 = 1 - QPoly.q_power(n - 1) if n > 1 else QPoly()
    qn = QPoly.q_power(n)
    return (
        QRat(2 * _Q * one_minus_qn1, _ONE_MINUS_Q**3)
        - QRat(2 * qn * (n - 1), _ONE_MINUS_Q**2)
        - QRat(_Q * one_minus_qn1, _ONE_MINUS_Q**2)
        - QRat(qn * (n - 1) ** 2, _ONE_MINUS_Q)
    )


def geometric_S_direct(n: int) -> QPoly:
    """Sum over k < n of k q^k by direct construction."""
    if n < 1:
        raise ValueError(f"geometric_S_direct needs n >= 1, got {n}")
    return QPoly(range(n))


def geometric_T_direct(n: int) -> QPoly:
    """Sum over k < n of k^2 q^k by direct construction."""
    if n < 1:
        raise ValueError(f"geometric_T_direct needs n >= 1, got {n}")
    return QPoly(k * k for k in range(n))


def reduced_double_sum_poly(n: int) -> QPoly:
    """Sum over k < n of (9k^2 + 3k + 2)/2 * q^k, an exact integer polynomial."""
    if n < 1:
        raise ValueError(f"reduced_double_sum_poly needs n >= 1, got {n}")
    return QPoly._raw(tuple(3 * k * (3 * k + 1) // 2 + 1 for k in range(n)))


def closed_form_numerator(n: int) -> QPoly:
    """(9n^2-15n+8) q^(n+2) - (18n^2-12n-8) q^(n+1) + (9n^2+3n+2) q^n - 2(2q+1)^2."""
    if n < 1:
        raise ValueError(f"closed_form_numerator needs n >= 1, got {n}")
    nn = n * n
    poly = QPoly.q_power(n + 2) * (9 * nn - 15 * n + 8)
    poly -= QPoly.q_power(n + 1) * (18 * nn - 12 * n - 8)
    poly += QPoly.q_power(n) * (9 * nn + 3 * n + 2)
    poly -= QPoly([2, 8, 8])
    return poly


def closed_form(n: int) -> QRat:
    """The rational closed form of the weighted double sum.

    The denominator is 2(q-1)^3, not 2(1-q)^3: the direct sum equals 1
    at n=1 while the (1-q)^3 reading gives -1, and only the (q-1)^3
    reading reproduces the q = -1/2 and q = 1 specializations.  A
    regression test pins the other reading to -1 times this one.
    """
    if n < 1:
        raise ValueError(f"closed_form needs n >= 1, got {n}")
    return QRat(closed_form_numerator(n), 2 * QPoly([-1, 1]) ** 3)


def special_q_neg_half(n: int) -> Fraction:
    """Exact value (-1/2)^n n (1 - 3n) of the sum with weight (-1/8)^k."""
    if n < 1:
        raise ValueError(f"special_q_neg_half needs n >= 1, got {n}")
    return Fraction(-1, 2) ** n * n * (1 - 3 * n)


def special_q_one(n: int) -> Fraction:
    """Exact value n(3n^2 - 3n + 2)/2 of the sum with weight (1/4)^k."""
    if n < 1:
        raise ValueError(f"special_q_one needs n >= 1, got {n}")
    return Fraction(n * (3 * n * n - 3 * n + 2), 2)


@dataclass(frozen=True)
class ClosedFormValue:
    """A closed form together with an optional evaluation at one q-point."""

    as_qrat: QRat
    at_q: tuple[Fraction, Fraction] | None = None


def closed_form_at(n: int, q0) -> ClosedFormValue:
    """Closed form of order n evaluated at the rational point q0.

    q0 = 1 is a removable singularity of the rational expression; exact
    arithmetic cannot take the limit, so callers are redirected to
    special_q_one via SingularPoint.
    """
    q0 = Fraction(q0)
    form = closed_form(n)
    if q0 == 1:
        raise SingularPoint(
            "q = 1 is a removable singularity; use special_q_one(n) for the value"
        )
    return ClosedFormValue(as_qrat=form, at_q=(q0, form.evaluate(q0)))
