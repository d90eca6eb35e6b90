"""Free algebra on e_0, e_1 with the weight grading and Lusztig's form.

Words are packed bit strings: a word of length d is the int with a sentinel
bit at position d and letter j (0 or 1) at bit p for the (p+1)-th letter
from the left.  The empty word is 1.

The bilinear form is determined by (1,1) = 1, (e_i, e_j) = d_ij/(1-q^{-2})
and the Hopf recursion against the twisted coproduct.  For words u, w of
common length d the value is P(u, w) / (1-q^{-2})^d with P an integer
Laurent polynomial; the P table is the memo that makes everything fast.
Equality in U^+ is decided by radical membership, never by rewriting.
"""
from __future__ import annotations

import itertools

from .qring import (HL_ONE, HalfLaurent, RatFunc, RF_ONE, RF_ZERO, bar,
                    one_minus_q_pow, qfactorial)

EMPTY_WORD = 1


def word_from_letters(letters) -> int:
    w = 0
    for p, letter in enumerate(letters):
        w |= letter << p
    return w | (1 << len(letters))


def word_letters(w: int) -> tuple[int, ...]:
    d = w.bit_length() - 1
    return tuple((w >> p) & 1 for p in range(d))


def word_len(w: int) -> int:
    return w.bit_length() - 1


def word_weight(w: int) -> tuple[int, int]:
    """(d0, d1) = (#e_0 letters, #e_1 letters)."""
    d = w.bit_length() - 1
    n1 = (w & ((1 << d) - 1)).bit_count()
    return d - n1, n1


def word_concat(w1: int, w2: int) -> int:
    d1 = w1.bit_length() - 1
    return (w2 << d1) | (w1 ^ (1 << d1))


def word_drop(w: int, p: int) -> int:
    """Remove the letter at position p (0-based from the left)."""
    low = w & ((1 << p) - 1)
    return ((w >> (p + 1)) << p) | low


def all_words(d0: int, d1: int) -> list[int]:
    base = [0] * d0 + [1] * d1
    return sorted({word_from_letters(p)
                   for p in itertools.permutations(base)})


# (alpha_i, alpha_j) table for the twist exponents, doubled
_FORM_AA = ((4, -4), (-4, 4))


# ------------------------------------------------------------------ elements

class FreeElement:
    """Finite RatFunc-combination of words, canonical sparse form."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, RatFunc] | None = None) -> None:
        self.terms = {w: c for w, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def generator(cls, i: int) -> FreeElement:
        return cls({word_from_letters((i,)): RF_ONE})

    @classmethod
    def one(cls) -> FreeElement:
        return cls({EMPTY_WORD: RF_ONE})

    def is_zero_strict(self) -> bool:
        """Zero as a free element (not just in the quotient)."""
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreeElement):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: FreeElement) -> FreeElement:
        r = dict(self.terms)
        for w, c in other.terms.items():
            nc = r.get(w, RF_ZERO) + c
            if nc.is_zero():
                r.pop(w, None)
            else:
                r[w] = nc
        out = FreeElement.__new__(FreeElement)
        out.terms = r
        return out

    def __sub__(self, other: FreeElement) -> FreeElement:
        return self + other.scale(RatFunc.from_int(-1))

    def __mul__(self, other: FreeElement) -> FreeElement:
        r: dict[int, RatFunc] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = word_concat(w1, w2)
                nc = r.get(w, RF_ZERO) + c1 * c2
                if nc.is_zero():
                    r.pop(w, None)
                else:
                    r[w] = nc
        out = FreeElement.__new__(FreeElement)
        out.terms = r
        return out

    def scale(self, c: RatFunc) -> FreeElement:
        if c.is_zero():
            return FreeElement()
        out = FreeElement.__new__(FreeElement)
        out.terms = {w: cc * c for w, cc in self.terms.items()}
        return out

    def bar_coeffs(self) -> FreeElement:
        """The algebra involution b: fixes words, bars coefficients."""
        out = FreeElement.__new__(FreeElement)
        out.terms = {w: bar(c) for w, c in self.terms.items()}
        return out

    def weight(self) -> tuple[int, int] | None:
        """Common weight (d0, d1) of all words; None for 0; error if mixed."""
        if not self.terms:
            return None
        weights = {word_weight(w) for w in self.terms}
        if len(weights) > 1:
            raise ValueError("element is not homogeneous")
        return weights.pop()

    def cleared(self) -> tuple[dict[int, HalfLaurent], HalfLaurent]:
        """(integer-coefficient terms, common denominator)."""
        den = HL_ONE
        for c in self.terms.values():
            if c.den != HL_ONE:
                den = den * c.den.divexact(_hl_gcd(den, c.den))
        out = {}
        for w, c in self.terms.items():
            out[w] = c.num * den.divexact(c.den)
        return out, den

    def __repr__(self) -> str:
        parts = [f"({c})*[{''.join(map(str, word_letters(w)))}]"
                 for w, c in sorted(self.terms.items())]
        return " + ".join(parts) if parts else "0"


def _hl_gcd(a: HalfLaurent, b: HalfLaurent) -> HalfLaurent:
    from .qring import _poly_gcd
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    pa, _ = a._dense()
    pb, _ = b._dense()
    return HalfLaurent._from_dense(_poly_gcd(pa, pb), 0)


E0 = FreeElement.generator(0)
E1 = FreeElement.generator(1)
ONE_ELEM = FreeElement.one()


def multiply(x: FreeElement, y: FreeElement) -> FreeElement:
    return x * y


def bar_free(x: FreeElement) -> FreeElement:
    return x.bar_coeffs()


# ------------------------------------------------------------------ pairing engine

class PairingTable:
    """Memoized word-pair values of the Lusztig form.

    value(u, w) = P(u, w) / (1 - q^{-2})^d.  The recursion splits off the
    first letter of w; an alternative recursion splitting off the last
    letter is kept as an independent cross-check path.
    """

    def __init__(self) -> None:
        self._memo: dict[tuple[int, int], HalfLaurent] = {}
        self._memo_last: dict[tuple[int, int], HalfLaurent] = {}
        self._den_pow: list[HalfLaurent] = [HL_ONE]

    def den(self, d: int) -> HalfLaurent:
        while len(self._den_pow) <= d:
            self._den_pow.append(self._den_pow[-1] * one_minus_q_pow(1))
        return self._den_pow[d]

    def P(self, u: int, w: int) -> HalfLaurent:
        if word_weight(u) != word_weight(w):
            return HalfLaurent()
        if u == EMPTY_WORD:
            return HL_ONE
        key = (u, w)
        v = self._memo.get(key)
        if v is not None:
            return v
        j = w & 1
        w2 = w >> 1
        total: dict[int, int] = {}
        d = word_len(u)
        # running twist: (wt(u_<p), alpha_j) doubled
        tw = 0
        aj0, aj1 = _FORM_AA[0][j], _FORM_AA[1][j]
        for p in range(d):
            letter = (u >> p) & 1
            if letter == j:
                sub = self.P(word_drop(u, p), w2)
                for e, c in sub.terms.items():
                    e2 = e + tw
                    nc = total.get(e2, 0) + c
                    if nc:
                        total[e2] = nc
                    else:
                        del total[e2]
            tw += aj0 if letter == 0 else aj1
        out = HalfLaurent.__new__(HalfLaurent)
        out.terms = total
        self._memo[key] = out
        return out

    def P_last(self, u: int, w: int) -> HalfLaurent:
        """Independent recursion on the last letter of w."""
        if word_weight(u) != word_weight(w):
            return HalfLaurent()
        if u == EMPTY_WORD:
            return HL_ONE
        key = (u, w)
        v = self._memo_last.get(key)
        if v is not None:
            return v
        d = word_len(w)
        j = (w >> (d - 1)) & 1
        w2 = w & ((1 << (d - 1)) - 1) | (1 << (d - 1))
        total: dict[int, int] = {}
        du = word_len(u)
        aj0, aj1 = _FORM_AA[0][j], _FORM_AA[1][j]
        # twist: (alpha_j, wt(u_>p)) doubled
        suffix = 0
        tws = [0] * du
        for p in range(du - 1, -1, -1):
            tws[p] = suffix
            letter = (u >> p) & 1
            suffix += aj0 if letter == 0 else aj1
        for p in range(du):
            if (u >> p) & 1 == j:
                sub = self.P_last(word_drop(u, p), w2)
                for e, c in sub.terms.items():
                    e2 = e + tws[p]
                    nc = total.get(e2, 0) + c
                    if nc:
                        total[e2] = nc
                    else:
                        del total[e2]
        out = HalfLaurent.__new__(HalfLaurent)
        out.terms = total
        self._memo_last[key] = out
        return out


_TABLE = PairingTable()


def lusztig_form(x: FreeElement, y: FreeElement, _last: bool = False) -> RatFunc:
    """Lusztig's bilinear form on U^+, computed on the free model."""
    xt, xden = x.cleared()
    yt, yden = y.cleared()
    acc: dict[int, int] = {}
    deg = -1
    pair = _TABLE.P_last if _last else _TABLE.P
    for u, cu in xt.items():
        wu = word_weight(u)
        for w, cw in yt.items():
            if word_weight(w) != wu:
                continue
            deg = max(deg, word_len(u))
            p = pair(u, w)
            if not p.terms:
                continue
            c = cu * cw
            for e0, c0 in c.terms.items():
                for e1, c1 in p.terms.items():
                    e = e0 + e1
                    nc = acc.get(e, 0) + c0 * c1
                    if nc:
                        acc[e] = nc
                    else:
                        del acc[e]
    if deg < 0 or not acc:
        return RF_ZERO
    num = HalfLaurent.__new__(HalfLaurent)
    num.terms = acc
    return RatFunc(num, xden * yden * _TABLE.den(deg))


def lusztig_form_last(x: FreeElement, y: FreeElement) -> RatFunc:
    return lusztig_form(x, y, _last=True)


# ------------------------------------------------------------------ coproduct

class TensorElement:
    """Finite combination of word pairs with the twisted multiplication."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], RatFunc] | None = None) -> None:
        self.terms = {k: c for k, c in (terms or {}).items() if not c.is_zero()}

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: TensorElement) -> TensorElement:
        r = dict(self.terms)
        for k, c in other.terms.items():
            nc = r.get(k, RF_ZERO) + c
            if nc.is_zero():
                r.pop(k, None)
            else:
                r[k] = nc
        return TensorElement(r)

    def __mul__(self, other: TensorElement) -> TensorElement:
        r: dict[tuple[int, int], RatFunc] = {}
        for (x1, x2), c1 in self.terms.items():
            b2 = word_weight(x2)
            for (y1, y2), c2 in other.terms.items():
                g1 = word_weight(y1)
                # q^{(beta2, gamma1)}, doubled exponent
                form_val = 2 * (b2[0] * g1[0] - b2[0] * g1[1]
                                - b2[1] * g1[0] + b2[1] * g1[1])
                k = (word_concat(x1, y1), word_concat(x2, y2))
                nc = r.get(k, RF_ZERO) + c1 * c2 * RatFunc.q_power(2 * form_val)
                if nc.is_zero():
                    r.pop(k, None)
                else:
                    r[k] = nc
        return TensorElement(r)


def coproduct(x: FreeElement) -> TensorElement:
    """r(x): algebra map with r(e_i) = e_i x 1 + 1 x e_i."""
    out = TensorElement()
    for w, c in x.terms.items():
        t = TensorElement({(EMPTY_WORD, EMPTY_WORD): c})
        for letter in word_letters(w):
            g = word_from_letters((letter,))
            step = TensorElement({(g, EMPTY_WORD): RF_ONE,
                                  (EMPTY_WORD, g): RF_ONE})
            t = t * step
        out = out + t
    return out


def lusztig_form_tensor(t: TensorElement, y: FreeElement, z: FreeElement) -> RatFunc:
    """(t, y x z) for t in the tensor square."""
    total = RF_ZERO
    for (w1, w2), c in t.terms.items():
        f1 = lusztig_form(FreeElement({w1: RF_ONE}), y)
        if f1.is_zero():
            continue
        f2 = lusztig_form(FreeElement({w2: RF_ONE}), z)
        if f2.is_zero():
            continue
        total = total + c * f1 * f2
    return total


# ------------------------------------------------------------------ quotient tests

def serre_element(i: int, j: int) -> FreeElement:
    """The quantum Serre combination for a_ij = -2 (coefficient [3]_q)."""
    if {i, j} != {0, 1}:
        raise ValueError("letters must be {0, 1}")
    ei = FreeElement.generator(i)
    ej = FreeElement.generator(j)
    c3 = RatFunc.from_laurent(HalfLaurent({4: 1, 0: 1, -4: 1}))
    ei2 = ei * ei
    ei3 = ei2 * ei
    return (ei3 * ej - (ei2 * ej * ei).scale(c3)
            + (ei * ej * ei2).scale(c3) - ej * ei3)


def derivative(x: FreeElement, j: int) -> FreeElement:
    """The letter-removal operator dual to left multiplication by e_j:

    (x, e_j w) = (e_j, e_j) * (derivative(x, j), w).
    """
    out: dict[int, RatFunc] = {}
    aj0, aj1 = _FORM_AA[0][j], _FORM_AA[1][j]
    for w, c in x.terms.items():
        tw = 0
        for p in range(word_len(w)):
            letter = (w >> p) & 1
            if letter == j:
                key = word_drop(w, p)
                nc = out.get(key, RF_ZERO) + c * RatFunc.q_power(tw)
                if nc.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = nc
            tw += aj0 if letter == 0 else aj1
    return FreeElement(out)


def radical_check(x: FreeElement) -> bool:
    """True iff x pairs to zero with every word of its weight (x = 0 in U^+)."""
    if not x.terms:
        return True
    if EMPTY_WORD in x.terms:
        if len(x.terms) == 1:
            return x.terms[EMPTY_WORD].is_zero()
        raise ValueError("element is not homogeneous")
    return (radical_check(derivative(x, 0))
            and radical_check(derivative(x, 1)))


def divided_power(x: FreeElement, r: int) -> FreeElement:
    p = ONE_ELEM
    for _ in range(r):
        p = p * x
    return p.scale(RF_ONE / RatFunc.from_laurent(qfactorial(r)))


# ------------------------------------------------------------------ text form
# words render as strings over {0,1} with their scalar, " ++ "-joined;
# the empty word renders as "[]"; parse is bit-exact

def render_free(x: FreeElement) -> str:
    from .qring import render_scalar
    if not x.terms:
        return "0"
    parts = []
    for w in sorted(x.terms):
        word = "".join(map(str, word_letters(w))) or "[]"
        parts.append(f"{word}:({render_scalar(x.terms[w])})")
    return " ++ ".join(parts)


def parse_free(s: str) -> FreeElement:
    from .qring import parse_scalar
    s = s.strip()
    if s == "0":
        return FreeElement()
    terms: dict[int, RatFunc] = {}
    for part in s.split(" ++ "):
        word_str, _, scalar = part.partition(":(")
        if not part.endswith(")") or not _:
            raise ValueError(f"bad term: {part!r}")
        letters = () if word_str == "[]" else tuple(int(c) for c in word_str)
        if any(c not in (0, 1) for c in letters):
            raise ValueError(f"bad word: {word_str!r}")
        w = word_from_letters(letters)
        c = parse_scalar(scalar[:-1])
        terms[w] = terms.get(w, RF_ZERO) + c
    return FreeElement(terms)
