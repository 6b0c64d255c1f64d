"""Exact arithmetic in Q(q).

Polynomials in q with integer coefficients are stored as dense tuples
``(c0, c1, ...)`` with no trailing zeros; the zero polynomial is ``()``.
A :class:`RatFunc` is a canonical fraction of two such polynomials:
coprime over the rationals, jointly content-free, denominator with
positive leading coefficient.  Equality of field elements is equality of
representations.  Negative powers of q live in the fraction field
(q^-1 is stored as 1/q).
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

from .errors import DivisionByZero, InvalidArgument, PoleAtPoint

IntPoly = tuple  # dense coefficient tuple, index = exponent

P_ZERO: IntPoly = ()
P_ONE: IntPoly = (1,)


def poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(a, b):
    n = max(len(a), len(b))
    return poly_trim(
        [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
    )


def poly_neg(a):
    return tuple(-x for x in a)


def poly_sub(a, b):
    return poly_add(a, poly_neg(b))


def poly_mul(a, b):
    if not a or not b:
        return P_ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return poly_trim(out)


def poly_scale(a, c):
    if c == 0:
        return P_ZERO
    return tuple(x * c for x in a)


def poly_content(a):
    g = 0
    for x in a:
        g = gcd(g, x)
    return g


def poly_valuation(a):
    """Index of the lowest nonzero coefficient (0 for the zero poly)."""
    for i, x in enumerate(a):
        if x:
            return i
    return 0


def poly_shift(a, e):
    """Multiply by q^e (e >= 0) or divide exactly by q^-e."""
    if not a:
        return P_ZERO
    if e >= 0:
        return (0,) * e + a
    assert all(x == 0 for x in a[:-e])
    return a[-e:]


def poly_eval(a, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def poly_divmod_q(a, b):
    """Quotient and remainder over the rationals, as Fraction lists."""
    r = [Fraction(x) for x in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lb = Fraction(b[-1])
    while len(r) >= len(b):
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(b):
            break
        coeff = r[-1] / lb
        deg = len(r) - len(b)
        q[deg] = coeff
        for i, y in enumerate(b):
            r[i + deg] -= coeff * y
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return q, r


def poly_divexact(a, b):
    """Exact division of integer polynomials; the result must be integral."""
    if not a:
        return P_ZERO
    q, r = poly_divmod_q(a, b)
    assert not r, "division is not exact"
    assert all(x.denominator == 1 for x in q), "quotient is not integral"
    return poly_trim([int(x) for x in q])


def poly_primitive(a):
    """Primitive part with positive leading coefficient."""
    if not a:
        return P_ZERO
    c = poly_content(a)
    if a[-1] < 0:
        c = -c
    return tuple(x // c for x in a)


def poly_gcd(a, b):
    """Primitive gcd over the rationals (positive leading coefficient)."""
    if not a:
        return poly_primitive(b)
    if not b:
        return poly_primitive(a)
    v = min(poly_valuation(a), poly_valuation(b))
    return _poly_gcd_shifted(a, b, v)


def _poly_gcd_shifted(a, b, v):
    """gcd of the q-valuation-stripped parts, times q^v."""
    a = poly_primitive(poly_shift(a, -poly_valuation(a)))
    b = poly_primitive(poly_shift(b, -poly_valuation(b)))
    while b != P_ZERO:
        _, r = poly_divmod_q(a, b)
        if not r:
            a, b = b, P_ZERO
            break
        den_lcm = 1
        for x in r:
            den_lcm = den_lcm * x.denominator // gcd(den_lcm, x.denominator)
        rint = poly_trim([int(x * den_lcm) for x in r])
        a, b = b, poly_primitive(rint)
    return poly_shift(poly_primitive(a), v)


_TERM_RE = re.compile(r"^([+-]?\d*)(?:\*?q(?:\^(-?\d+))?)?$")


def poly_to_string(a) -> str:
    if not a:
        return "0"
    parts = []
    for e in range(len(a) - 1, -1, -1):
        c = a[e]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if e == 0:
            body = str(c)
        else:
            var = "q" if e == 1 else f"q^{e}"
            body = var if c == 1 else f"{c}*{var}"
        parts.append((sign, body))
    sign, body = parts[0]
    out = body if sign == "+" else "-" + body
    for sign, body in parts[1:]:
        out += sign + body
    return out


def poly_from_string(s: str):
    s = s.replace(" ", "")
    if not s:
        raise InvalidArgument("empty polynomial string")
    terms = re.findall(r"[+-]?[^+-]+", s)
    coeffs: dict[int, int] = {}
    for term in terms:
        m = _TERM_RE.match(term)
        if not m:
            raise InvalidArgument(f"cannot parse term {term!r}")
        cs, es = m.groups()
        has_q = "q" in term
        if cs in ("", "+"):
            c = 1
        elif cs == "-":
            c = -1
        else:
            c = int(cs)
        if not has_q:
            e = 0
        else:
            e = 1 if es is None else int(es)
        if e < 0:
            raise InvalidArgument("negative exponents belong in the fraction field")
        coeffs[e] = coeffs.get(e, 0) + c
    if not coeffs:
        return P_ZERO
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return poly_trim(out)


class RatFunc:
    """A canonical element of the field Q(q)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=P_ONE, _canonical=False):
        if not _canonical:
            num, den = _canonicalize(num, den)
        self.num = num
        self.den = den

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_int(n: int) -> "RatFunc":
        return RatFunc((n,) if n else P_ZERO, P_ONE, _canonical=True)

    @staticmethod
    def from_fraction(x: Fraction) -> "RatFunc":
        x = Fraction(x)
        num = (x.numerator,) if x.numerator else P_ZERO
        return RatFunc(num, (x.denominator,), _canonical=True)

    @staticmethod
    def q_power(e: int) -> "RatFunc":
        if e >= 0:
            return RatFunc((0,) * e + (1,), P_ONE, _canonical=True)
        return RatFunc(P_ONE, (0,) * (-e) + (1,), _canonical=True)

    @staticmethod
    def from_string(s: str) -> "RatFunc":
        s = s.replace(" ", "")
        if "/" in s:
            m = re.fullmatch(r"\((.*)\)/\((.*)\)", s)
            if m is None:
                m = re.fullmatch(r"(.*)/\((.*)\)", s) or re.fullmatch(
                    r"\((.*)\)/(.*)", s
                )
            if m is None:
                num, den = s.split("/", 1)
            else:
                num, den = m.groups()
            return RatFunc(poly_from_string(num), poly_from_string(den))
        return RatFunc(poly_from_string(s))

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return self.num == P_ZERO

    def is_one(self) -> bool:
        return self.num == P_ONE and self.den == P_ONE

    # -- field operations ----------------------------------------------

    def __add__(self, other):
        other = as_ratfunc(other)
        if self.den == P_ONE and other.den == P_ONE:
            return RatFunc(poly_add(self.num, other.num), P_ONE, _canonical=True)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        num = poly_add(poly_mul(self.num, other.den), poly_mul(other.num, self.den))
        return RatFunc(num, poly_mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(poly_neg(self.num), self.den, _canonical=True)

    def __sub__(self, other):
        return self + (-as_ratfunc(other))

    def __rsub__(self, other):
        return as_ratfunc(other) + (-self)

    def __mul__(self, other):
        other = as_ratfunc(other)
        if self.is_zero() or other.is_zero():
            return RF_ZERO
        if self.den == P_ONE and other.den == P_ONE:
            return RatFunc(poly_mul(self.num, other.num), P_ONE)
        return RatFunc(
            poly_mul(self.num, other.num), poly_mul(self.den, other.den)
        )

    __rmul__ = __mul__

    def inv(self) -> "RatFunc":
        if self.is_zero():
            raise DivisionByZero("cannot invert zero")
        num, den = self.den, self.num
        if den[-1] < 0:
            num, den = poly_neg(num), poly_neg(den)
        return RatFunc(num, den, _canonical=True)

    def __truediv__(self, other):
        return self * as_ratfunc(other).inv()

    def __rtruediv__(self, other):
        return as_ratfunc(other) * self.inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        out = RF_ONE
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- misc ------------------------------------------------------------

    def specialize(self, q0) -> Fraction:
        q0 = Fraction(q0)
        d = poly_eval(self.den, q0)
        if d == 0:
            raise PoleAtPoint(f"denominator vanishes at q={q0}")
        return poly_eval(self.num, q0) / d

    def __eq__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den == P_ONE:
            return poly_to_string(self.num)
        return f"({poly_to_string(self.num)})/({poly_to_string(self.den)})"

    __repr__ = __str__


def _canonicalize(num, den):
    num = poly_trim(num)
    den = poly_trim(den)
    if den == P_ZERO:
        raise DivisionByZero("zero denominator")
    if num == P_ZERO:
        return P_ZERO, P_ONE
    # cancel common powers of q
    v = min(poly_valuation(num), poly_valuation(den))
    if v:
        num = poly_shift(num, -v)
        den = poly_shift(den, -v)
    den_is_monomial = all(c == 0 for c in den[:-1])
    if len(den) > 1 and len(num) > 1 and not den_is_monomial:
        g = _poly_gcd_shifted(num, den, 0)
        if len(g) > 1:
            num = poly_divexact(num, g)
            den = poly_divexact(den, g)
    cn = abs(poly_content(num))
    cd = abs(poly_content(den))
    c = gcd(cn, cd)
    if c > 1:
        num = tuple(x // c for x in num)
        den = tuple(x // c for x in den)
    if den[-1] < 0:
        num = poly_neg(num)
        den = poly_neg(den)
    return num, den


def as_ratfunc(x) -> RatFunc:
    """Coerce ints, Fractions, and strings to RatFunc."""
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, int):
        return RatFunc.from_int(x)
    if isinstance(x, Fraction):
        return RatFunc.from_fraction(x)
    if isinstance(x, str):
        return RatFunc.from_string(x)
    raise InvalidArgument(f"cannot coerce {x!r} to a rational function")


RF_ZERO = RatFunc(P_ZERO, P_ONE, _canonical=True)
RF_ONE = RatFunc(P_ONE, P_ONE, _canonical=True)
Q = RatFunc.q_power(1)
QINV = RatFunc.q_power(-1)


def rf_add(a: RatFunc, b: RatFunc) -> RatFunc:
    return a + b


def rf_mul(a: RatFunc, b: RatFunc) -> RatFunc:
    return a * b


def rf_neg(a: RatFunc) -> RatFunc:
    return -a


def rf_inv(a: RatFunc) -> RatFunc:
    return a.inv()


def specialize(f: RatFunc, q0) -> Fraction:
    return f.specialize(q0)


def quantum_integer(i: int) -> RatFunc:
    """1 + q^2 + ... + q^(2(i-1))."""
    if i < 1:
        raise InvalidArgument("quantum integer needs i >= 1")
    coeffs = [0] * (2 * (i - 1) + 1)
    for j in range(i):
        coeffs[2 * j] = 1
    return RatFunc(poly_trim(coeffs), P_ONE, _canonical=True)


def quantum_factorial(k: int) -> RatFunc:
    """[1][2]...[k]; the empty product for k = 0."""
    if k < 0:
        raise InvalidArgument("quantum factorial needs k >= 0")
    out = RF_ONE
    for i in range(1, k + 1):
        out = out * quantum_integer(i)
    return out
