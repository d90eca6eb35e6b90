"""K-theory label layer and the expansion tables.

Rows expand each basis element in the rescaled dual PBW family; the
coefficient polynomials are simultaneously the expansion of the class of
the corresponding simple equivariant IC sheaf on the affine Grassmannian
in convolution classes of minuscule line bundles, and graded multiplicities
against the pushed-forward dominant line bundle classes on the nilpotent
cone.  The dominant-pair bijection itself is deliberately not computed;
rows are labeled by the GL_d weight that pins the class.
"""
from __future__ import annotations

import itertools

from . import pbw
from .aalg import dual_canonical_data
from .qring import render_scalar
from .rootdata import QWeight, enumerate_kp


def lambda_of(a: tuple[int, ...]) -> tuple[int, ...]:
    """GL_d weight containing n+1-k with multiplicity a_k; d = sum(a)."""
    n2 = len(a)
    n = n2 // 2
    vals: list[int] = []
    for k, ak in enumerate(a, start=1):
        vals.extend([n + 1 - k] * ak)
    return tuple(sorted(vals, reverse=True))


def lambda_to_partition(lam: tuple[int, ...], n: int) -> tuple[int, ...] | None:
    """Inverse of lambda_of onto KP coordinates; None if out of range."""
    a = [0] * (2 * n)
    for v in lam:
        k = n + 1 - v
        if not (1 <= k <= 2 * n):
            return None
        a[k - 1] += 1
    return tuple(a)


def delta_of(lam: tuple[int, ...]) -> int:
    """delta(lam) = (d(d-1) - sum_k m_k (m_k - 1)) / 2."""
    d = len(lam)
    mult: dict[int, int] = {}
    for v in lam:
        mult[v] = mult.get(v, 0) + 1
    return (d * (d - 1) - sum(m * (m - 1) for m in mult.values())) // 2


def delta_brute(lam: tuple[int, ...]) -> int:
    """min length of w with w(lam) antidominant, by enumeration of S_d."""
    d = len(lam)
    best = None
    for perm in itertools.permutations(range(d)):
        img = [lam[perm[i]] for i in range(d)]
        if all(img[i] <= img[i + 1] for i in range(d - 1)):
            inv = sum(1 for i in range(d) for j in range(i + 1, d)
                      if perm[i] > perm[j])
            best = inv if best is None else min(best, inv)
    return best


def pair_sum(a: tuple[int, ...]) -> int:
    """sum_{k < l} a_k a_l."""
    total = sum(a)
    return (total * total - sum(ak * ak for ak in a)) // 2


def minor_to_ic(n: int, b: int, d: int) -> tuple[int, int]:
    """The dictionary (b, d) -> (k, l) for the minuscule-orbit IC class."""
    if not (1 <= b <= d <= 2 * n) or (d - b) % 2:
        raise ValueError("need 1 <= b <= d <= 2n with d - b even")
    return 1 + (d - b) // 2, n + 1 - (b + d) // 2


def orbit_dim(n: int, nu: tuple[int, ...]) -> int:
    """dim of the orbit attached to nu: sum (n+1-2k) nu_k."""
    return sum((n + 1 - 2 * k) * v for k, v in enumerate(nu, start=1))


def partitions_into(d: int, parts: int) -> list[tuple[int, ...]]:
    """Weakly decreasing nonnegative tuples of the given length summing to d."""
    out: list[tuple[int, ...]] = []

    def rec(rem: int, maxv: int, acc: list[int]) -> None:
        if len(acc) == parts:
            if rem == 0:
                out.append(tuple(acc))
            return
        for v in range(min(rem, maxv), -1, -1):
            acc.append(v)
            rec(rem - v, v, acc)
            acc.pop()

    rec(d, d, [])
    return out


def dom_enumerate(n: int, d: int, mu_bound: int) -> list[dict]:
    """Dominant pairs (nu, mu) with nu a partition of d, mu in a window."""
    out = []
    for nu in partitions_into(d, n):
        blocks = []
        start = 0
        for i in range(1, n + 1):
            if i == n or nu[i] != nu[i - 1]:
                blocks.append((start, i))
                start = i
        ranges = range(-mu_bound, mu_bound + 1)
        block_choices = []
        for s, e in blocks:
            width = e - s
            block_choices.append(
                [c for c in itertools.product(ranges, repeat=width)
                 if all(c[i] >= c[i + 1] for i in range(width - 1))])
        for combo in itertools.product(*block_choices):
            mu = tuple(itertools.chain.from_iterable(combo))
            out.append({"nu": nu, "mu": mu, "dim": orbit_dim(n, nu)})
    out.sort(key=lambda r: (r["nu"], r["mu"]))
    return out


def _ic_row(n: int, a: tuple[int, ...], coords: dict, tag: str) -> dict:
    lam = lambda_of(a)
    return {
        "a": list(a),
        "lambda": list(lam),
        "delta": delta_of(lam),
        "coeffs": [{"ap": list(b), "p": render_scalar(c)}
                   for b, c in sorted(coords.items())],
        "minor_hypothesis_used": False,
        "braid_convention": tag,
    }


def ic_table(n: int, target: QWeight, jobs: int = 1) -> dict:
    """Expansion table at one weight: one row per Kostant partition.

    Rows are independent; with jobs > 1 they are assembled by a thread
    pool and merged back in lexicographic order, so the output bytes do
    not depend on the worker count.
    """
    rows, order, _ = dual_canonical_data(n, target)
    tag = pbw.root_table(2 * n).convention_tag
    keys = sorted(rows)
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            table_rows = list(pool.map(
                lambda a: _ic_row(n, a, rows[a], tag), keys))
    else:
        table_rows = [_ic_row(n, a, rows[a], tag) for a in keys]
    return {
        "n": n,
        "weight": [target.d0, target.d1],
        "solver_order": [list(a) for a in order],
        "rows": table_rows,
    }


def gram_table(n: int, target: QWeight) -> dict:
    """Gram matrix of the PBW basis at one weight (diagonal closed form)."""
    kps = enumerate_kp(n, target)
    entries = []
    for a in kps:
        for b in kps:
            value = pbw.gram(n, a, b)
            entries.append({"a": list(a), "b": list(b),
                            "value": render_scalar(value)})
    return {"n": n, "weight": [target.d0, target.d1],
            "partitions": [list(a) for a in kps], "entries": entries}
