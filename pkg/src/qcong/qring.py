"""Exact polynomial and rational-function arithmetic in the formal variable q.

QPoly is a dense polynomial over the rationals stored ascending by
exponent with trailing zeros trimmed; coefficients are kept as Python
ints whenever they are integral and only become Fractions when a
genuinely rational value appears.  QRat is a reduced rational function
with a monic denominator.

On top of the ring operations the module provides the objects the
congruence checks are phrased in: the q-integer [n] = 1 + q + ... +
q^(n-1), q-shifted factorial products, cyclotomic polynomials, exponent
folding modulo q^n - 1 (valid before divisibility checks because [n]
divides q^n - 1), and the predicate "f = 0 (mod [n])" for rational
functions, which holds when [n] divides the numerator and is coprime to
the denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import BothZero, DenominatorNotCoprime, DivisionByZeroPoly

Coeff = int | Fraction


def _norm(c):
    """Collapse integral Fractions to int so integer inputs stay on the fast path."""
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return int(c)
    raise TypeError(f"coefficients must be int or Fraction, got {type(c).__name__}")


def _trim(cs: list) -> list:
    while cs and not cs[-1]:
        cs.pop()
    return cs


def _divisors(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    large.reverse()
    return small + large


def _binomial_cyclotomic_indices(sign: int, m: int) -> list[int]:
    """Cyclotomic indices d with Phi_d dividing (1 - sign*q^m), m >= 1.

    1 - q^m is the product of Phi_d over d | m; 1 + q^m = (1 - q^{2m}) /
    (1 - q^m) collects the d dividing 2m but not m.  Both products are
    squarefree, so every listed index has multiplicity one.
    """
    if sign == 1:
        return _divisors(m)
    return [d for d in _divisors(2 * m) if m % d]


# ---------------------------------------------------------------------------
# low-level integer-coefficient kernels
# ---------------------------------------------------------------------------


def _intpoly_mul(a: list[int], b: list[int]) -> list[int]:
    """Multiply integer coefficient lists by packing into one big int.

    Coefficients are offset into nonnegative byte-aligned chunks so the
    whole product is a single CPython big-int multiplication; chunk width
    is sized from the exact convolution bound, making recovery lossless.
    """
    amax = max(map(abs, a))
    bmax = max(map(abs, b))
    if amax == 0 or bmax == 0:
        return []
    bound = amax * bmax * min(len(a), len(b))
    bits = ((bound.bit_length() + 2 + 7) // 8) * 8
    half = 1 << (bits - 1)
    nbytes = bits // 8
    out_len = len(a) + len(b) - 1

    def pack(cs):
        raw = b"".join((c + half).to_bytes(nbytes, "little") for c in cs)
        packed = int.from_bytes(raw, "little")
        rep = ((1 << (bits * len(cs))) - 1) // ((1 << bits) - 1)
        return packed - half * rep

    x = pack(a) * pack(b)
    rep_out = ((1 << (bits * out_len)) - 1) // ((1 << bits) - 1)
    raw = (x + half * rep_out).to_bytes(out_len * nbytes, "little")
    return _trim(
        [
            int.from_bytes(raw[i * nbytes : (i + 1) * nbytes], "little") - half
            for i in range(out_len)
        ]
    )


def _all_int(cs) -> bool:
    return all(type(c) is int for c in cs)


def _list_mul(a: list, b: list) -> list:
    """Coefficient-list product; sparse-aware, big-int packed when profitable."""
    if not a or not b:
        return []
    nza = sum(1 for c in a if c)
    nzb = sum(1 for c in b if c)
    if nza > nzb:
        a, b = b, a
        nza, nzb = nzb, nza
    if nza == 0:
        return []
    if nza * len(b) > 4096 and _all_int(a) and _all_int(b):
        return _intpoly_mul(a, b)
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return _trim(out)


def _product_of_binomials(factors) -> list[int]:
    """Expand the product of (1 - s*q^m) factors given as (s, m) pairs."""
    c = [1]
    for s, m in factors:
        nc = list(c) + [0] * m
        if s == 1:
            for i, v in enumerate(c):
                if v:
                    nc[i + m] -= v
        else:
            for i, v in enumerate(c):
                if v:
                    nc[i + m] += v
        c = _trim(nc)
        if not c:
            break
    return c


def _int_divmod_unit_lead(a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    """divmod for integer coefficient lists where b has leading coefficient +-1."""
    db = len(b) - 1
    lead = b[-1]
    r = list(a)
    if len(r) <= db:
        return [], _trim(r)
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            c *= lead  # dividing by +-1
            q[i - db] = c
            r[i] = 0
            base = i - db
            for j in range(db):
                if b[j]:
                    r[base + j] -= c * b[j]
    del r[db:]
    return _trim(q), _trim(r)


def _fold_list(cs, n: int) -> list:
    """Coefficient list reduced modulo q^n - 1 by summing exponents mod n."""
    out = [0] * n
    for e, c in enumerate(cs):
        if c:
            out[e % n] += c
    return _trim(out)


# ---------------------------------------------------------------------------
# QPoly
# ---------------------------------------------------------------------------


class QPoly:
    """Dense polynomial in q over the rationals, ascending exponents.

    The zero polynomial is the empty coefficient tuple and reports
    degree -1.  Instances are immutable and safe to share.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_norm(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def _raw(cls, cs) -> "QPoly":
        """Wrap an already trimmed/normalized coefficient list (internal)."""
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", tuple(cs))
        return p

    @classmethod
    def q_power(cls, m: int) -> "QPoly":
        return cls._raw((0,) * m + (1,))

    @property
    def degree(self) -> int:
        """Degree, with the sentinel -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, e: int):
        return self.coeffs[e] if 0 <= e < len(self.coeffs) else 0

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _const(other)
        elif not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = _norm(out[i] + c)
        return QPoly._raw(_trim(out))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, QPoly) else -_const(other))

    def __rsub__(self, other):
        return _const(other) + (-self)

    def __neg__(self):
        return QPoly._raw([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return QPoly._raw([_norm(c * other) for c in self.coeffs])
        if not isinstance(other, QPoly):
            return NotImplemented
        return QPoly._raw([_norm(c) for c in _list_mul(list(self.coeffs), list(other.coeffs))])

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __divmod__(self, other):
        return divrem(self, other)

    def shift(self, m: int) -> "QPoly":
        """Multiply by q^m."""
        if self.is_zero or m == 0:
            return self
        return QPoly._raw((0,) * m + self.coeffs)

    def monic(self) -> "QPoly":
        if self.is_zero:
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return self * (1 / Fraction(lead))

    def __call__(self, x) -> Fraction:
        """Exact evaluation at a rational point."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return Fraction(acc)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _const(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = -c if c < 0 else c
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"QPoly({list(self.coeffs)!r})"


def _const(c) -> QPoly:
    c = _norm(c)
    return QPoly._raw((c,)) if c else ZERO


ZERO = QPoly._raw(())
ONE = QPoly._raw((1,))


def _as_qpoly(x) -> QPoly:
    if isinstance(x, QPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return _const(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as a polynomial")


# ---------------------------------------------------------------------------
# ring operations
# ---------------------------------------------------------------------------


def divrem(a: QPoly, b: QPoly) -> tuple[QPoly, QPoly]:
    """Quotient and remainder with a = q*b + r and degree(r) < degree(b)."""
    a, b = _as_qpoly(a), _as_qpoly(b)
    if b.is_zero:
        raise DivisionByZeroPoly("polynomial division by zero")
    if a.degree < b.degree:
        return ZERO, a
    bc = list(b.coeffs)
    if (bc[-1] == 1 or bc[-1] == -1) and _all_int(a.coeffs) and _all_int(bc):
        qc, rc = _int_divmod_unit_lead(list(a.coeffs), bc)
        return QPoly._raw(qc), QPoly._raw(rc)
    db = len(bc) - 1
    inv = 1 / Fraction(bc[-1])
    r = list(a.coeffs)
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            t = _norm(c * inv)
            q[i - db] = t
            r[i] = 0
            base = i - db
            for j in range(db):
                if bc[j]:
                    r[base + j] = _norm(r[base + j] - t * bc[j])
    del r[db:]
    return QPoly._raw(_trim(q)), QPoly._raw(_trim(r))


def poly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Monic greatest common divisor over the rationals."""
    a, b = _as_qpoly(a), _as_qpoly(b)
    if a.is_zero and b.is_zero:
        raise BothZero("gcd(0, 0) is undefined")
    while not b.is_zero:
        r = divrem(a, b)[1]
        a, b = b, (r.monic() if not r.is_zero else r)
    return a.monic()


def _poly_xgcd(a: QPoly, b: QPoly) -> tuple[QPoly, QPoly, QPoly]:
    """(g, s, t) with s*a + t*b = g, g the monic gcd (internal)."""
    r0, r1 = a, b
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while not r1.is_zero:
        q, r = divrem(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        raise BothZero("xgcd(0, 0) is undefined")
    scale = 1 / Fraction(r0.leading)
    return r0 * scale, s0 * scale, t0 * scale


def _poly_inverse_mod(f: QPoly, modulus: QPoly) -> QPoly:
    """Inverse of f modulo the given polynomial; f must be coprime to it."""
    g, s, _ = _poly_xgcd(f, modulus)
    if g.degree != 0:
        raise DenominatorNotCoprime(
            f"polynomial shares the factor {g} with the modulus"
        )
    return divrem(s, modulus)[1]


def q_integer(n: int) -> QPoly:
    """[n] = (1 - q^n)/(1 - q) = 1 + q + ... + q^(n-1); [0] is zero."""
    if n < 0:
        raise ValueError(f"q_integer needs n >= 0, got {n}")
    return QPoly._raw((1,) * n)


def q_pochhammer(sign: int, e: int, step: int, k: int) -> QPoly:
    """The shifted-factorial product over i < k of (1 - sign*q^(e + i*step))."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if e < 0 or step < 1 or k < 0:
        raise ValueError(f"need e >= 0, step >= 1, k >= 0, got ({e}, {step}, {k})")
    return QPoly._raw(_product_of_binomials((sign, e + i * step) for i in range(k)))


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> QPoly:
    """The n-th cyclotomic polynomial (monic, integer coefficients).

    Computed as (q^n - 1) divided by the cyclotomic polynomials of the
    proper divisors of n; the test suite cross-checks this against the
    Moebius product formula.
    """
    if n < 1:
        raise ValueError(f"cyclotomic needs n >= 1, got {n}")
    if n == 1:
        return QPoly._raw((-1, 1))
    rem = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        rem, r = _int_divmod_unit_lead(rem, list(cyclotomic(d).coeffs))
        assert not r, f"cyclotomic division left a remainder at n={n}, d={d}"
    return QPoly._raw(rem)


def fold_mod_qn_minus_1(f: QPoly, n: int) -> QPoly:
    """Remainder of f modulo q^n - 1, by summing coefficients of congruent exponents."""
    if n < 1:
        raise ValueError(f"fold needs n >= 1, got {n}")
    if f.degree < n:
        return f
    return QPoly._raw([_norm(c) for c in _fold_list(f.coeffs, n)])


# ---------------------------------------------------------------------------
# rational functions and the congruence predicate
# ---------------------------------------------------------------------------


class QRat:
    """Reduced rational function in q: gcd(num, den) is a unit, den is monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_qpoly(num)
        den = ONE if den is None else _as_qpoly(den)
        if den.is_zero:
            raise DivisionByZeroPoly("rational function with zero denominator")
        if num.is_zero:
            num, den = ZERO, ONE
        elif den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = divrem(num, g)[0]
                den = divrem(den, g)[0]
        num, den = _monic_den(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("QRat is immutable")

    @classmethod
    def _from_reduced(cls, num: QPoly, den: QPoly) -> "QRat":
        """Wrap parts already known coprime, normalizing the denominator (internal)."""
        if den.is_zero:
            raise DivisionByZeroPoly("rational function with zero denominator")
        if num.is_zero:
            num, den = ZERO, ONE
        num, den = _monic_den(num, den)
        r = object.__new__(cls)
        object.__setattr__(r, "num", num)
        object.__setattr__(r, "den", den)
        return r

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other):
        other = _as_qrat(other)
        if other is NotImplemented:
            return NotImplemented
        return QRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_qrat(other)
        if other is NotImplemented:
            return NotImplemented
        return QRat(self.num * other.den - other.num * self.den, self.den * other.den)

    def __rsub__(self, other):
        return _as_qrat(other) - self

    def __neg__(self):
        return QRat._from_reduced(-self.num, self.den)

    def __mul__(self, other):
        other = _as_qrat(other)
        if other is NotImplemented:
            return NotImplemented
        return QRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_qrat(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero:
            raise DivisionByZeroPoly("division by the zero rational function")
        return QRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_qrat(other) / self

    def __eq__(self, other):
        other = _as_qrat(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def evaluate(self, x) -> Fraction:
        """Exact value at a rational point; the denominator must not vanish there."""
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at q = {x}")
        return self.num(x) / d

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"QRat({self.num!r}, {self.den!r})"


def _monic_den(num: QPoly, den: QPoly) -> tuple[QPoly, QPoly]:
    lead = den.leading
    if lead != 1:
        inv = 1 / Fraction(lead)
        num, den = num * inv, den * inv
    return num, den


def _as_qrat(x):
    if isinstance(x, QRat):
        return x
    if isinstance(x, (QPoly, int, Fraction)):
        return QRat._from_reduced(_as_qpoly(x), ONE)
    return NotImplemented


@dataclass(frozen=True)
class Verdict:
    """Outcome of one divisibility check; holds is true iff residue is zero."""

    holds: bool
    modulus: object
    residue: object
    detail: str = ""


def congruent_zero_mod_qint(f, n: int) -> Verdict:
    """Decide whether f = 0 modulo [n] for a polynomial or rational function.

    The congruence holds when [n] divides the numerator and the
    denominator is coprime to [n]; a denominator sharing a factor with
    [n] makes the congruence undefined and raises DenominatorNotCoprime
    rather than returning a failing verdict.  Numerators of degree above
    4n are folded modulo q^n - 1 first, which leaves the remainder
    unchanged because [n] divides q^n - 1.
    """
    if n < 2:
        raise ValueError(f"congruence modulo [n] needs n >= 2, got {n}")
    if isinstance(f, QPoly):
        num, den = f, ONE
    elif isinstance(f, QRat):
        num, den = f.num, f.den
    else:
        num, den = _as_qpoly(f), ONE
    modulus = q_integer(n)
    if den.degree > 0 and poly_gcd(den, modulus).degree > 0:
        raise DenominatorNotCoprime(
            f"denominator {den} shares a factor with [{n}]"
        )
    if num.degree > 4 * n:
        num = fold_mod_qn_minus_1(num, n)
    residue = divrem(num, modulus)[1]
    return Verdict(
        holds=residue.is_zero,
        modulus=modulus,
        residue=residue,
        detail=f"numerator remainder modulo [{n}]",
    )
