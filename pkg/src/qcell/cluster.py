"""Quantum cluster seed, Berenstein-Zelevinsky mutation, Laurent checks.

A seed carries three synchronized layers: the exchange data (btilde,
lambda), the expansion of every cluster variable in the initial quantum
torus frame, and the realization of every cluster variable inside A_n.
Mutation updates all three; the realization route goes through an exact
linear solve of the quantum exchange relation, the torus route through
skew-Laurent division.  The mutation sign convention is certified by the
involution mutate . mutate = id and the q-commutation re-checks.
"""
from __future__ import annotations

import json
import math

from .aalg import DualCoords, dual_product, iota, qcommute_exponent, quantum_minor, solve_right_division
from .errors import DivisionFailed, SeedIncompatible
from .qring import RF_ZERO, RF_ONE, RatFunc

# ------------------------------------------------------------------ exchange data


def lambda_entry(k: int, l: int) -> int:
    """Lambda_{kl} = 2*ceil(k/2)*(floor(k/2) - floor(l/2)) for k < l."""
    if k == l:
        return 0
    if k < l:
        return 2 * math.ceil(k / 2) * (k // 2 - l // 2)
    return -lambda_entry(l, k)


def btilde_entry(k: int, l: int) -> int:
    """Banded exchange pattern: rows k = 1..2n, columns l = 1..2n-2."""
    if l == k + 2:
        return 1
    if l == k + 1:
        return -2
    if l == k - 1:
        return 2
    if l == k - 2:
        return -1
    return 0


class ExchangeData:
    """Exchange matrix and compatible skew form for rank n."""

    def __init__(self, n: int, btilde=None, lam=None) -> None:
        self.n = n
        size = 2 * n
        self.btilde = btilde if btilde is not None else [
            [btilde_entry(k, l) for l in range(1, size - 1)]
            for k in range(1, size + 1)]
        self.lam = lam if lam is not None else [
            [lambda_entry(k, l) for l in range(1, size + 1)]
            for k in range(1, size + 1)]

    def copy(self) -> ExchangeData:
        return ExchangeData(self.n, [row[:] for row in self.btilde],
                            [row[:] for row in self.lam])

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExchangeData):
            return NotImplemented
        return (self.n == other.n and self.btilde == other.btilde
                and self.lam == other.lam)

    def check_compatible(self) -> list[int]:
        """transpose(btilde) * lambda must be (positive diagonal | 0)."""
        size = 2 * self.n
        ncols = size - 2
        diag = []
        for j in range(ncols):
            for i in range(size):
                v = sum(self.btilde[r][j] * self.lam[r][i] for r in range(size))
                if i == j:
                    if v <= 0:
                        raise SeedIncompatible(
                            f"compatibility diagonal entry {v} at {j + 1}")
                    diag.append(v)
                elif v != 0:
                    raise SeedIncompatible(
                        f"compatibility off-diagonal entry {v} at ({j+1},{i+1})")
        return diag

    def check_skew(self) -> None:
        size = 2 * self.n
        for i in range(size):
            for j in range(size):
                if self.lam[i][j] != -self.lam[j][i]:
                    raise SeedIncompatible("lambda is not skew-symmetric")

    def mutate(self, k: int) -> ExchangeData:
        """Matrix mutation in direction k (1-based mutable index)."""
        size = 2 * self.n
        ncols = size - 2
        if not (1 <= k <= ncols):
            raise ValueError(f"direction {k} is not mutable")
        ki = k - 1
        b = self.btilde
        nb = [[0] * ncols for _ in range(size)]
        for i in range(size):
            for j in range(ncols):
                if i == ki or j == ki:
                    nb[i][j] = -b[i][j]
                else:
                    nb[i][j] = b[i][j] + _sgn(b[i][ki]) * max(0, b[i][ki] * b[ki][j])
        # lambda: E^T lam E with sign eps; certified independent of eps
        lams = []
        for eps in (1, -1):
            e = [[1 if i == j else 0 for j in range(size)] for i in range(size)]
            for i in range(size):
                e[i][ki] = -1 if i == ki else max(0, -eps * b[i][ki])
            lam2 = _mat_mul(_mat_mul(_transpose(e), self.lam), e)
            lams.append(lam2)
        if lams[0] != lams[1]:
            raise SeedIncompatible("lambda mutation depends on the sign choice")
        out = ExchangeData(self.n, nb, lams[0])
        out.check_skew()
        out.check_compatible()
        return out


def _sgn(x: int) -> int:
    return (x > 0) - (x < 0)


def _transpose(m):
    return [list(row) for row in zip(*m)]


def _mat_mul(a, b):
    return [[sum(a[i][r] * b[r][j] for r in range(len(b)))
             for j in range(len(b[0]))] for i in range(len(a))]


# ------------------------------------------------------------------ quantum torus

class TorusElement:
    """Skew-Laurent polynomial in the initial frame, basis M(c)."""

    __slots__ = ("lam", "terms")

    def __init__(self, lam, terms=None) -> None:
        self.lam = lam  # initial-frame skew form, shared list of lists
        self.terms = {c: v for c, v in (terms or {}).items() if not v.is_zero()}

    @classmethod
    def monomial(cls, lam, c: tuple[int, ...], coeff: RatFunc = RF_ONE):
        return cls(lam, {c: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: TorusElement) -> TorusElement:
        r = dict(self.terms)
        for c, v in other.terms.items():
            nv = r.get(c, RF_ZERO) + v
            if nv.is_zero():
                r.pop(c, None)
            else:
                r[c] = nv
        return TorusElement(self.lam, r)

    def __sub__(self, other: TorusElement) -> TorusElement:
        return self + other.scale(RatFunc.from_int(-1))

    def scale(self, v: RatFunc) -> TorusElement:
        if v.is_zero():
            return TorusElement(self.lam)
        return TorusElement(self.lam, {c: vv * v for c, vv in self.terms.items()})

    def _skew(self, a: tuple[int, ...], b: tuple[int, ...]) -> int:
        return sum(ai * self.lam[i][j] * bj
                   for i, ai in enumerate(a) if ai
                   for j, bj in enumerate(b) if bj)

    def __mul__(self, other: TorusElement) -> TorusElement:
        r: dict[tuple[int, ...], RatFunc] = {}
        for a, va in self.terms.items():
            for b, vb in other.terms.items():
                c = tuple(x + y for x, y in zip(a, b))
                # M(a) M(b) = q^{Lambda(a, b)/2} M(a + b)
                coeff = va * vb * RatFunc.q_power(self._skew(a, b))
                nv = r.get(c, RF_ZERO) + coeff
                if nv.is_zero():
                    r.pop(c, None)
                else:
                    r[c] = nv
        return TorusElement(self.lam, r)

    def divide(self, divisor: TorusElement, max_steps: int = 20000) -> TorusElement:
        """Exact right division: find z with z * divisor == self."""
        if divisor.is_zero():
            raise ZeroDivisionError
        rem = self
        out = TorusElement(self.lam)
        dmax = max(divisor.terms)
        dcoef = divisor.terms[dmax]
        steps = 0
        while not rem.is_zero():
            steps += 1
            if steps > max_steps:
                raise DivisionFailed("torus division does not terminate")
            rmax = max(rem.terms)
            e = tuple(x - y for x, y in zip(rmax, dmax))
            coeff = rem.terms[rmax] / (dcoef * RatFunc.q_power(self._skew(e, dmax)))
            term = TorusElement(self.lam, {e: coeff})
            out = out + term
            rem = rem - term * divisor
            if not rem.is_zero() and max(rem.terms) >= rmax:
                raise DivisionFailed("torus division stalls")
        return out

    def all_laurent(self) -> bool:
        return all(v.is_laurent() for v in self.terms.values())


# ------------------------------------------------------------------ seeds

class QuantumSeed:
    """Exchange data + torus expansions + A_n realization of the cluster."""

    def __init__(self, exchange: ExchangeData, torus_vars: list[TorusElement],
                 realization: list[DualCoords], history: tuple[int, ...] = ()) -> None:
        self.exchange = exchange
        self.torus_vars = torus_vars
        self.realization = realization
        self.history = history

    @property
    def n(self) -> int:
        return self.exchange.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuantumSeed):
            return NotImplemented
        return (self.exchange == other.exchange
                and self.torus_vars == other.torus_vars
                and self.realization == other.realization)

    def check_commutation(self) -> None:
        """Realization must satisfy X_k X_l = q^{Lambda_kl} X_l X_k."""
        size = 2 * self.n
        lam = self.exchange.lam
        for k in range(size):
            for l in range(k + 1, size):
                m = qcommute_exponent(self.realization[k], self.realization[l])
                if m != lam[k][l]:
                    raise SeedIncompatible(
                        f"vars {k + 1},{l + 1}: exponent {m} != Lambda {lam[k][l]}")


def initial_seed(n: int, check: bool = True) -> QuantumSeed:
    """The seed with X_k = Dt[1, k] (k odd) or Dt[2, k] (k even)."""
    ex = ExchangeData(n)
    ex.check_skew()
    ex.check_compatible()
    size = 2 * n
    torus = [TorusElement.monomial(ex.lam, tuple(1 if i == k else 0
                                                 for i in range(size)))
             for k in range(size)]
    real = [quantum_minor(n, 1 if (k + 1) % 2 else 2, k + 1)
            for k in range(size)]
    seed = QuantumSeed(ex, torus, real)
    if check:
        seed.check_commutation()
    return seed


def _ordered_monomial(factors: list, exponents: tuple[int, ...], lam,
                      one, mul):
    """Balanced monomial q^{-sum_{i<j} c_i c_j Lambda_ij / 2} X_1^{c_1} ...."""
    tw = 0
    for i in range(len(exponents)):
        if not exponents[i]:
            continue
        for j in range(i + 1, len(exponents)):
            if exponents[j]:
                tw -= exponents[i] * exponents[j] * lam[i][j]
    out = one
    for i, c in enumerate(exponents):
        for _ in range(c):
            out = mul(out, factors[i])
    return out, tw


def mutate(seed: QuantumSeed, k: int, check: bool = True) -> QuantumSeed:
    """BZ mutation in mutable direction k (1-based)."""
    n = seed.n
    size = 2 * n
    ex2 = seed.exchange.mutate(k)
    ki = k - 1
    col = [seed.exchange.btilde[i][ki] for i in range(size)]
    vplus = tuple(max(c, 0) for c in col)
    vminus = tuple(max(-c, 0) for c in col)
    lam = seed.exchange.lam

    def skew(a, b):
        return sum(ai * lam[i][j] * bj
                   for i, ai in enumerate(a) if ai
                   for j, bj in enumerate(b) if bj)

    ek = tuple(1 if i == ki else 0 for i in range(size))

    def rhs(factors, one, mul, scale):
        total = None
        for v in (vplus, vminus):
            mono, tw = _ordered_monomial(factors, v, lam, one, mul)
            # X'_k X_k = sum q^{Lambda(-e_k + v, e_k)/2} M(v)
            e = skew(tuple(vi - (1 if i == ki else 0) for i, vi in enumerate(v)),
                     ek)
            piece = scale(mono, RatFunc.q_power(e + tw))
            total = piece if total is None else total + piece
        return total

    rhs_real = rhs(seed.realization, DualCoords.one(n), dual_product,
                   lambda x, c: x.scale(c))
    new_real = solve_right_division(rhs_real, seed.realization[ki])

    # the torus expansions always live in the initial frame, so their
    # multiplication keeps the initial skew form
    rhs_torus = rhs(seed.torus_vars, TorusElement.monomial(
        seed.torus_vars[0].lam, (0,) * size),
        lambda a, b: a * b, lambda x, c: x.scale(c))
    new_torus = rhs_torus.divide(seed.torus_vars[ki])

    torus2 = list(seed.torus_vars)
    torus2[ki] = new_torus
    real2 = list(seed.realization)
    real2[ki] = new_real
    out = QuantumSeed(ex2, torus2, real2, seed.history + (k,))
    if check:
        out.check_commutation()
    return out


def verify_laurent(seed: QuantumSeed) -> dict:
    """Laurent-phenomenon report for the seed's torus expansions."""
    rows = []
    violations = 0
    for i, t in enumerate(seed.torus_vars, start=1):
        ok = t.all_laurent()
        if not ok:
            violations += 1
        rows.append({"var": i, "laurent": ok, "terms": len(t.terms)})
    return {"history": list(seed.history), "vars": rows,
            "violations": violations}


def reached_minors(n: int, depth: int) -> list[dict]:
    """Which interval minors Dt[b, d] appear among mutated cluster variables.

    Explores every mutation sequence of length <= depth from the initial
    seed and matches the produced variables against the interval-labelled
    basis elements.  The initial variables (the theorem-backed minors) are
    included at depth 0.
    """
    from .aalg import dual_canonical_element, minor_is_hypothesis
    from .rootdata import interval_partition

    targets = {}
    for b in range(1, 2 * n + 1):
        for d in range(b, 2 * n + 1, 2):
            a = interval_partition(b, d, n)
            targets[a] = (b, d)
    found = {}
    seen_seeds = set()

    def visit(seed: QuantumSeed, var_indices) -> None:
        for i in var_indices:
            x = seed.realization[i]
            try:
                w = x.weight()
            except ValueError:
                continue
            for a, (b, d) in targets.items():
                from .rootdata import kp_weight
                if kp_weight(a) != w:
                    continue
                if dual_canonical_element(n, a) == x:
                    found.setdefault((b, d), list(seed.history))

    seed0 = initial_seed(n)
    visit(seed0, range(2 * n))
    frontier = [seed0]
    for _ in range(depth):
        nxt = []
        for seed in frontier:
            for k in range(1, 2 * n - 1):
                s2 = mutate(seed, k, check=False)
                key = json.dumps(_seed_key(s2), sort_keys=True)
                if key in seen_seeds:
                    continue
                seen_seeds.add(key)
                visit(s2, [k - 1])
                nxt.append(s2)
        frontier = nxt
    return [{"b": b, "d": d, "history": hist,
             "hypothesis": minor_is_hypothesis(b, d)}
            for (b, d), hist in sorted(found.items())]


def _seed_key(seed: QuantumSeed):
    return [seed.exchange.btilde,
            [sorted((list(c), str(v)) for c, v in t.terms.items())
             for t in seed.torus_vars]]


def cluster_variable_weight(x: DualCoords):
    return x.weight()


def is_iota_fixed(x: DualCoords) -> bool:
    return iota(x) == x
