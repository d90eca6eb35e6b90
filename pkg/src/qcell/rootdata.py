"""Affine A_1^(1) root and weight combinatorics for the word (s_0 s_1)^n.

Everything here is small integer arithmetic: the root lattice Q with its
bilinear form, the weight lattice P with fundamental weights, reflections,
the roots beta_k = k*alpha_0 + (k-1)*alpha_1 and Kostant partitions.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class QWeight:
    """Element d0*alpha_0 + d1*alpha_1 of the root lattice."""

    d0: int
    d1: int

    def __add__(self, other: QWeight) -> QWeight:
        return QWeight(self.d0 + other.d0, self.d1 + other.d1)

    def __sub__(self, other: QWeight) -> QWeight:
        return QWeight(self.d0 - other.d0, self.d1 - other.d1)

    def __neg__(self) -> QWeight:
        return QWeight(-self.d0, -self.d1)

    def scale(self, c: int) -> QWeight:
        return QWeight(c * self.d0, c * self.d1)

    def is_positive(self) -> bool:
        return self.d0 >= 0 and self.d1 >= 0 and (self.d0 or self.d1)

    def degree(self) -> int:
        return self.d0 + self.d1

    def form(self, other: QWeight) -> int:
        """(x, y) with (alpha_i, alpha_j) the A_1^(1) Cartan matrix."""
        return 2 * (self.d0 * other.d0 - self.d0 * other.d1
                    - self.d1 * other.d0 + self.d1 * other.d1)


ALPHA0 = QWeight(1, 0)
ALPHA1 = QWeight(0, 1)
DELTA = QWeight(1, 1)


@dataclass(frozen=True)
class PWeight:
    """p0*w_0 + p1*w_1 + qpart, with qpart a root-lattice correction.

    Reflections only ever add root-lattice terms, so this shape is closed
    under the Weyl group without introducing Lambda_0/delta coordinates.
    """

    p0: int
    p1: int
    qpart: QWeight = QWeight(0, 0)

    def __add__(self, other: PWeight) -> PWeight:
        return PWeight(self.p0 + other.p0, self.p1 + other.p1,
                       self.qpart + other.qpart)

    def __sub__(self, other: PWeight) -> PWeight:
        return PWeight(self.p0 - other.p0, self.p1 - other.p1,
                       self.qpart - other.qpart)

    def coroot_pairing(self, i: int) -> int:
        """<x, alpha_i^vee>, using <w_j, alpha_i^vee> = delta_ij."""
        p = self.p0 if i == 0 else self.p1
        if i == 0:
            return p + 2 * self.qpart.d0 - 2 * self.qpart.d1
        return p + 2 * self.qpart.d1 - 2 * self.qpart.d0

    def reflect(self, i: int) -> PWeight:
        """s_i(x) = x - <x, alpha_i^vee> alpha_i."""
        c = self.coroot_pairing(i)
        alpha = ALPHA0 if i == 0 else ALPHA1
        return PWeight(self.p0, self.p1, self.qpart - alpha.scale(c))

    def form_q(self, beta: QWeight) -> int:
        """(x, beta) for beta in Q, using (w_i, alpha_j) = delta_ij."""
        return (self.p0 * beta.d0 + self.p1 * beta.d1
                + self.qpart.form(beta))

    def as_qweight(self) -> QWeight:
        """Convert to Q; only valid when the w-parts vanish."""
        if self.p0 or self.p1:
            raise ValueError("weight is not in the root lattice")
        return self.qpart


OMEGA0 = PWeight(1, 0)
OMEGA1 = PWeight(0, 1)


def beta(k: int) -> QWeight:
    """The positive root beta_k = k*alpha_0 + (k-1)*alpha_1."""
    if k < 1:
        raise ValueError("beta index must be >= 1")
    return QWeight(k, k - 1)


def word_letter(j: int) -> int:
    """The j-th letter (1-based) of (s_0 s_1)^n: 0 for odd j, 1 for even."""
    return (j + 1) % 2


def word_action(prefix_len: int, x: PWeight) -> PWeight:
    """Apply s_{i_1} ... s_{i_prefix_len} to x, word (s_0 s_1)^n.

    The reflections compose left to right as written, i.e. the last letter
    of the prefix acts first.
    """
    for j in range(prefix_len, 0, -1):
        x = x.reflect(word_letter(j))
    return x


def minor_weight(b: int, d: int) -> QWeight:
    """Weight of the quantum minor D[b, d]: w_{<b} w_{i_b} - w_{<=d} w_{i_d}."""
    if not (1 <= b <= d) or (d - b) % 2:
        raise ValueError("need 1 <= b <= d with d - b even")
    lam_b = OMEGA0 if word_letter(b) == 0 else OMEGA1
    lam_d = OMEGA0 if word_letter(d) == 0 else OMEGA1
    diff = word_action(b - 1, lam_b) - word_action(d, lam_d)
    return diff.as_qweight()


def interval_partition(b: int, d: int, n: int) -> tuple[int, ...]:
    """Indicator pattern a_j = 1 for j in [b, d] with j = b mod 2."""
    return tuple(1 if (b <= j <= d and (j - b) % 2 == 0) else 0
                 for j in range(1, 2 * n + 1))


def kp_weight(a: tuple[int, ...]) -> QWeight:
    """Sum of a_k * beta_k."""
    d0 = sum(ak * k for k, ak in enumerate(a, start=1))
    d1 = sum(ak * (k - 1) for k, ak in enumerate(a, start=1))
    return QWeight(d0, d1)


def enumerate_kp(n: int, target: QWeight) -> list[tuple[int, ...]]:
    """All Kostant partitions of target over beta_1 .. beta_{2n}, lex order."""
    out: list[tuple[int, ...]] = []
    nroots = 2 * n

    def rec(k: int, rem0: int, rem1: int, acc: list[int]) -> None:
        if rem0 < 0 or rem1 < 0:
            return
        if k > nroots:
            if rem0 == 0 and rem1 == 0:
                out.append(tuple(acc))
            return
        amax = rem0 // k
        if k > 1:
            amax = min(amax, rem1 // (k - 1))
        for ak in range(amax + 1):
            acc.append(ak)
            rec(k + 1, rem0 - ak * k, rem1 - ak * (k - 1), acc)
            acc.pop()

    rec(1, target.d0, target.d1, [])
    return sorted(out)


def frozen_exponent(ell0: int, ell1: int, n: int, beta_wt: QWeight) -> int:
    """-(lambda + w_n lambda, beta) for lambda = ell0*w_0 + ell1*w_1."""
    lam = PWeight(ell0, ell1)
    wlam = word_action(2 * n, lam)
    return -((lam + wlam).form_q(beta_wt))
