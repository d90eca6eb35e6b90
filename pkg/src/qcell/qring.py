"""Exact arithmetic in Z[q^{+-1/2}] and its fraction field.

Exponents are stored doubled, so the key ``e`` of a term means ``q^(e/2)``
and every half-integer power is exact.  Coefficients are Python ints, so
growth during straightening is unbounded but safe.  The bar operation is
``q^{1/2} -> q^{-1/2}``.
"""
from __future__ import annotations

import math
import re

from .errors import NotLaurent


class HalfLaurent:
    """Sparse Laurent polynomial in v = q^{1/2} with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, int] | None = None) -> None:
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, c: int) -> HalfLaurent:
        return cls({0: c})

    @classmethod
    def q_power(cls, e2: int, c: int = 1) -> HalfLaurent:
        """c * q^(e2/2)."""
        return cls({e2: c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        if isinstance(other, HalfLaurent):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items())))

    def __add__(self, other: HalfLaurent) -> HalfLaurent:
        r = dict(self.terms)
        for e, c in other.terms.items():
            nc = r.get(e, 0) + c
            if nc:
                r[e] = nc
            else:
                del r[e]
        out = HalfLaurent.__new__(HalfLaurent)
        out.terms = r
        return out

    def __neg__(self) -> HalfLaurent:
        out = HalfLaurent.__new__(HalfLaurent)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other: HalfLaurent) -> HalfLaurent:
        return self + (-other)

    def __mul__(self, other: HalfLaurent) -> HalfLaurent:
        r: dict[int, int] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = ea + eb
                nc = r.get(e, 0) + ca * cb
                if nc:
                    r[e] = nc
                else:
                    del r[e]
        out = HalfLaurent.__new__(HalfLaurent)
        out.terms = r
        return out

    def scale(self, c: int) -> HalfLaurent:
        if not c:
            return HalfLaurent()
        out = HalfLaurent.__new__(HalfLaurent)
        out.terms = {e: cc * c for e, cc in self.terms.items()}
        return out

    def shift(self, e2: int) -> HalfLaurent:
        """Multiply by q^(e2/2)."""
        out = HalfLaurent.__new__(HalfLaurent)
        out.terms = {e + e2: c for e, c in self.terms.items()}
        return out

    def bar(self) -> HalfLaurent:
        out = HalfLaurent.__new__(HalfLaurent)
        out.terms = {-e: c for e, c in self.terms.items()}
        return out

    def min_exp(self) -> int:
        return min(self.terms)

    def max_exp(self) -> int:
        return max(self.terms)

    def is_integral_powers(self) -> bool:
        """True if only integer powers of q occur."""
        return all(e % 2 == 0 for e in self.terms)

    def in_q_inverse_ideal(self) -> bool:
        """True if the value lies in q^{-1} Z[q^{-1}]."""
        return all(e < 0 and e % 2 == 0 for e in self.terms)

    # -- dense conversions over v (used by gcd / division) --
    def _dense(self) -> tuple[list[int], int]:
        if not self.terms:
            return [0], 0
        lo = min(self.terms)
        hi = max(self.terms)
        p = [0] * (hi - lo + 1)
        for e, c in self.terms.items():
            p[e - lo] = c
        return p, lo

    @classmethod
    def _from_dense(cls, p: list[int], shift: int = 0) -> HalfLaurent:
        out = cls.__new__(cls)
        out.terms = {i + shift: c for i, c in enumerate(p) if c}
        return out

    def divexact(self, other: HalfLaurent) -> HalfLaurent:
        """Exact division in the Laurent ring; NotLaurent on remainder."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return HalfLaurent()
        pa, sa = self._dense()
        pb, sb = other._dense()
        try:
            q = _poly_divexact(pa, pb)
        except _Inexact as exc:
            raise NotLaurent(str(exc)) from exc
        return HalfLaurent._from_dense(q, sa - sb)

    def __str__(self) -> str:
        return render_scalar(RatFunc.from_laurent(self))

    def __repr__(self) -> str:
        return f"HalfLaurent({self.terms!r})"


HL_ZERO = HalfLaurent()
HL_ONE = HalfLaurent.const(1)


def qint(i: int) -> HalfLaurent:
    """[i]_q = q^{i-1} + q^{i-3} + ... + q^{1-i}."""
    if i < 1:
        raise ValueError("qint requires i >= 1")
    return HalfLaurent({e: 1 for e in range(-2 * (i - 1), 2 * i - 1, 4)})


def qfactorial(n: int) -> HalfLaurent:
    """[n]_q! = prod_{i=1..n} [i]_q."""
    if n < 0:
        raise ValueError("qfactorial requires n >= 0")
    r = HL_ONE
    for i in range(1, n + 1):
        r = r * qint(i)
    return r


def one_minus_q_pow(j: int) -> HalfLaurent:
    """1 - q^{-2j}."""
    return HalfLaurent({0: 1, -4 * j: -1})


# ------------------------------------------------------------------ dense poly helpers

class _Inexact(Exception):
    pass


def _poly_trim(p: list[int]) -> list[int]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_content(p: list[int]) -> int:
    g = 0
    for c in p:
        g = math.gcd(g, c)
    return g or 1


def _poly_primitive(p: list[int]) -> list[int]:
    g = _poly_content(p)
    return [c // g for c in p]


def _poly_pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while True:
        _poly_trim(a)
        if a == [0]:
            return a
        da, la = len(a) - 1, a[-1]
        if da < db:
            return a
        a = [c * lb for c in a]
        for i in range(db + 1):
            a[da - db + i] -= la * b[i]


def _poly_gcd(a: list[int], b: list[int]) -> list[int]:
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    if a == [0]:
        return _poly_primitive(b) if b != [0] else [1]
    if b == [0]:
        return _poly_primitive(a)
    ca, cb = _poly_content(a), _poly_content(b)
    a, b = _poly_primitive(a), _poly_primitive(b)
    while b != [0]:
        r = _poly_pseudo_rem(a, b)
        a, b = b, _poly_primitive(r) if r != [0] else [0]
    g = _poly_primitive(a)
    c = math.gcd(ca, cb)
    return [x * c for x in g]


def _poly_divexact(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    if a == [0]:
        return [0]
    db, lb = len(b) - 1, b[-1]
    da = len(a) - 1
    if da < db:
        raise _Inexact("degree too small")
    q = [0] * (da - db + 1)
    for i in range(da - db, -1, -1):
        num = a[i + db]
        if num % lb:
            raise _Inexact("leading coefficient does not divide")
        q[i] = num // lb
        for j in range(db + 1):
            a[i + j] -= q[i] * b[j]
    if any(a):
        raise _Inexact("nonzero remainder")
    return _poly_trim(q)


# ------------------------------------------------------------------ RatFunc

class RatFunc:
    """Reduced fraction of HalfLaurent values.

    Stored with the denominator shifted to have nonnegative valuation in v,
    positive leading coefficient, and gcd(num, den) a unit.  Equality is
    then plain structural equality and agrees with cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: HalfLaurent, den: HalfLaurent | None = None,
                 _reduced: bool = False) -> None:
        if den is None:
            den = HL_ONE
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    @classmethod
    def from_int(cls, c: int) -> RatFunc:
        return cls(HalfLaurent.const(c), HL_ONE, _reduced=True)

    @classmethod
    def from_laurent(cls, x: HalfLaurent) -> RatFunc:
        return cls(x, HL_ONE, _reduced=True)

    @classmethod
    def q_power(cls, e2: int, c: int = 1) -> RatFunc:
        return cls(HalfLaurent.q_power(e2, c), HL_ONE, _reduced=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = RatFunc.from_int(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __add__(self, other: RatFunc) -> RatFunc:
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    def __sub__(self, other: RatFunc) -> RatFunc:
        if self.den == other.den:
            return RatFunc(self.num - other.num, self.den)
        return RatFunc(self.num * other.den - other.num * self.den,
                       self.den * other.den)

    def __neg__(self) -> RatFunc:
        out = RatFunc.__new__(RatFunc)
        out.num = -self.num
        out.den = self.den
        return out

    def __mul__(self, other: RatFunc) -> RatFunc:
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: RatFunc) -> RatFunc:
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero")
        return RatFunc(self.num * other.den, self.den * other.num)

    def is_laurent(self) -> bool:
        return self.den == HL_ONE

    def __str__(self) -> str:
        return render_scalar(self)

    def __repr__(self) -> str:
        return f"RatFunc({self.num.terms!r}, {self.den.terms!r})"


RF_ZERO = RatFunc.from_int(0)
RF_ONE = RatFunc.from_int(1)


def _reduce(num: HalfLaurent, den: HalfLaurent) -> tuple[HalfLaurent, HalfLaurent]:
    if num.is_zero():
        return HL_ZERO, HL_ONE
    pn, sn = num._dense()
    pd, sd = den._dense()
    g = _poly_gcd(pn, pd)
    if len(g) > 1 or g[0] != 1:
        pn = _poly_divexact(pn, g)
        pd = _poly_divexact(pd, g)
    if pd[-1] < 0:
        pn = [-c for c in pn]
        pd = [-c for c in pd]
    # absorb the v-shift into the numerator; denominator gets valuation 0
    return (HalfLaurent._from_dense(pn, sn - sd), HalfLaurent._from_dense(pd, 0))


def bar(x: RatFunc) -> RatFunc:
    """The involution q^{1/2} -> q^{-1/2}, a ring homomorphism."""
    return RatFunc(x.num.bar(), x.den.bar())


def laurent_of(x: RatFunc) -> HalfLaurent:
    """The HalfLaurent equal to x; NotLaurent if the division is inexact."""
    if x.den == HL_ONE:
        return x.num
    return x.num.divexact(x.den)


# ------------------------------------------------------------------ canonical text form
# Terms render as "c*q^(e/2)" in decreasing exponent order, joined by " + ".
# This is the bit-exact form used by all JSON output.

_TERM_RE = re.compile(r"^(-?\d+)\*q\^\((-?\d+)/2\)$")


def render_laurent(x: HalfLaurent) -> str:
    if x.is_zero():
        return "0"
    return " + ".join(f"{c}*q^({e}/2)"
                      for e, c in sorted(x.terms.items(), reverse=True))


def render_scalar(x: RatFunc) -> str:
    s = render_laurent(x.num)
    if x.den == HL_ONE:
        return s
    return f"({s}) / ({render_laurent(x.den)})"


def parse_laurent(s: str) -> HalfLaurent:
    s = s.strip()
    if s == "0":
        return HalfLaurent()
    terms: dict[int, int] = {}
    for part in s.split(" + "):
        m = _TERM_RE.match(part.strip())
        if not m:
            raise ValueError(f"bad scalar term: {part!r}")
        c, e = int(m.group(1)), int(m.group(2))
        terms[e] = terms.get(e, 0) + c
    return HalfLaurent(terms)


def parse_scalar(s: str) -> RatFunc:
    s = s.strip()
    if s.startswith("("):
        m = re.match(r"^\((?P<num>.*)\) / \((?P<den>.*)\)$", s)
        if not m:
            raise ValueError(f"bad scalar: {s!r}")
        return RatFunc(parse_laurent(m.group("num")), parse_laurent(m.group("den")))
    return RatFunc.from_laurent(parse_laurent(s))
