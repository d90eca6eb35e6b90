"""Acceptance suite: one test per criterion, exact arithmetic throughout.

Every check is an equality of exact scalars or exact coordinate tables, so
the tolerance everywhere is zero.  Each test prints a single line so the
suite doubles as a human-readable report under pytest -s.
"""
import itertools
import json
import random

from qcell import aalg, cluster, ictables, pbw, verify
from qcell.cli import main
from qcell.qring import RF_ONE, RatFunc, bar, laurent_of
from qcell.rootdata import QWeight, enumerate_kp, frozen_exponent, kp_weight


def _weights(degmax):
    out = []
    for d0 in range(degmax + 1):
        for d1 in range(d0):
            if d0 + d1 <= degmax:
                out.append(QWeight(d0, d1))
    return out


def _report(name, ok):
    print(f"acceptance: {name}: {'PASS' if ok else 'FAIL'}")
    assert ok, name


def test_criterion_1_gram_closed_form():
    # (E(a), E(b)) = 0 for a != b and the product closed form on the diagonal,
    # n in {1,2,3}, every weight of degree <= 10; gram() raises on mismatch
    for n in (1, 2, 3):
        for w in _weights(10):
            kps = enumerate_kp(n, w)
            for a, b in itertools.combinations_with_replacement(kps, 2):
                pbw.gram(n, a, b)
                pbw.gram(n, b, a)
    _report("1 gram closed form (n<=3, deg<=10)", True)


def test_criterion_2_dual_pbw_identities():
    ok = True
    for n in (1, 2, 3):
        ok = ok and verify.check_dual_pbw_identities(n, 10)
    _report("2 dual PBW identities (n<=3, deg<=10)", ok)


def test_criterion_3_canonical_characterization():
    # iota-fixedness and q^{-1}Z[q^{-1}] unitriangularity re-verified by
    # paths independent of the solver: full iota re-application, membership
    # scan, and (n<=2) the transpose-inverse duality against the primal solve
    ok = True
    for n in (1, 2, 3):
        ok = ok and verify.check_canonical(n, 10)
    for n in (1, 2):
        for w in _weights(8):
            kps = enumerate_kp(n, w)
            if len(kps) < 2:
                continue
            primal = pbw.canonical_coords(n, w)
            dual, _, _ = aalg.dual_canonical_data(n, w)
            for a in kps:
                for b in kps:
                    s = sum((dual[a].get(c, RatFunc.from_int(0))
                             * primal[b].get(c, RatFunc.from_int(0))
                             for c in kps), start=RatFunc.from_int(0))
                    if s != (RF_ONE if a == b else RatFunc.from_int(0)):
                        ok = False
    _report("3 canonical characterization re-checks", ok)


def test_criterion_4_bar_matrix_involution():
    ok = True
    for n, degmax in ((1, 8), (2, 8), (3, 8)):
        for w in _weights(degmax):
            if not enumerate_kp(n, w):
                continue
            m = pbw.bar_matrix(n, w)
            ok = ok and m.check_involution()
    for n in (1, 2, 3):
        for w in _weights(10):
            if not enumerate_kp(n, w):
                continue
            ok = ok and aalg.check_iota_matrix_involution(n, w)
    _report("4 bar-matrix involution M bar(M) = I", ok)


def test_criterion_5_seed_certification():
    ok = True
    for n in (1, 2, 3):
        seed = cluster.initial_seed(n)   # raises on any failed q-commutation
        lam = seed.exchange.lam
        for k in range(2 * n):
            for l in range(2 * n):
                if k < l and lam[k][l] != cluster.lambda_entry(k + 1, l + 1):
                    ok = False
        diag = seed.exchange.check_compatible()
        ok = ok and all(d > 0 for d in diag)
    _report("5 seed certification (n<=3)", ok)


def test_criterion_6_mutation_closure():
    ok = True
    seed2 = cluster.initial_seed(2)
    seqs = [(k,) for k in (1, 2)] + list(itertools.product((1, 2), repeat=2))
    for seq in seqs:
        cur = seed2
        for k in seq:
            cur = cluster.mutate(cur, k)
        x = cur.realization[seq[-1] - 1]
        ok = ok and cluster.is_iota_fixed(x)
        basis = aalg.dual_canonical(2, x.weight())
        ok = ok and any(elem == x for elem in basis.values())
    seed3 = cluster.initial_seed(3)
    for k in (1, 2, 3, 4):
        cur = cluster.mutate(seed3, k)
        x = cur.realization[k - 1]
        ok = ok and cluster.is_iota_fixed(x)
        basis = aalg.dual_canonical(3, x.weight())
        ok = ok and any(elem == x for elem in basis.values())
    _report("6 mutation closure into the basis (n=2 depth 2, n=3 depth 1)", ok)


def test_criterion_7_frozen_laws():
    rng = random.Random(17)
    ok = True
    n = 2
    d0 = aalg.quantum_minor(n, 1, 2 * n - 1)
    d1 = aalg.quantum_minor(n, 2, 2 * n)
    frozen = {(1, 0): d0, (0, 1): d1, (1, 1): aalg.odot(d0, d1)}
    weights = [w for w in _weights(8) if enumerate_kp(n, w)]
    for _ in range(30):
        w = rng.choice(weights)
        kps = enumerate_kp(n, w)
        coords = {a: RatFunc.q_power(rng.randint(-4, 4), rng.randint(1, 5))
                  for a in kps if rng.random() < 0.75} or {kps[0]: RF_ONE}
        x = aalg.DualCoords(n, {(w.d0, w.d1): coords})
        for (l0, l1), dm in frozen.items():
            if aalg.qcommute_exponent(dm, x) != frozen_exponent(l0, l1, n, w):
                ok = False
    combined = aalg.odot(d0, d1)
    ok = ok and combined.weight() == kp_weight((1,) * (2 * n))
    for a in [(1, 0, 1, 0), (0, 2, 0, 0), (1, 1, 1, 1)]:
        elem = aalg.dual_canonical_element(n, a)
        loc = aalg.LocalizedElement(elem, 1, 1, normalize=False)
        ok = ok and aalg.loc_iota(loc) == loc
    # spot-check the same law at n = 3
    e0_3 = aalg.quantum_minor(3, 1, 5)
    e1_3 = aalg.quantum_minor(3, 2, 6)
    for a in [(1, 0, 0, 1, 0, 0), (0, 1, 1, 0, 0, 0)]:
        x = aalg.DualCoords.unit(3, a)
        w = kp_weight(a)
        ok = ok and aalg.qcommute_exponent(e0_3, x) \
            == frozen_exponent(1, 0, 3, w)
        ok = ok and aalg.qcommute_exponent(e1_3, x) \
            == frozen_exponent(0, 1, 3, w)
    _report("7 frozen-variable laws", ok)


def test_criterion_8_delta_identity():
    ok = True
    for d in range(1, 7):
        for lam in itertools.combinations_with_replacement(
                range(3, -4, -1), d):
            if ictables.delta_of(lam) != ictables.delta_brute(lam):
                ok = False
                break
    for n in (1, 2, 3):
        for w in _weights(10):
            for a in enumerate_kp(n, w):
                if ictables.delta_of(ictables.lambda_of(a)) \
                        != ictables.pair_sum(a):
                    ok = False
    _report("8 delta closed form == brute force (d<=6) and pair-sum rule", ok)


def test_criterion_9_label_layer():
    ok = True
    for n in (1, 2, 3):
        ok = ok and verify.check_labels(n, 10)
    for n in (2, 3):
        runs = [ictables.dom_enumerate(n, d, 2) for d in (1, 2, 3)]
        runs2 = [ictables.dom_enumerate(n, d, 2) for d in (1, 2, 3)]
        ok = ok and runs == runs2
    _report("9 label layer bijection, dims, stable Dom counts", ok)


def test_criterion_10_determinism(tmp_path):
    paths = [tmp_path / name for name in
             ("r1.json", "r2.json", "j2.json", "v1.json", "v2.json")]
    assert main(["ic-table", "--n", "2", "--beta", "6", "4", "--no-figure",
                 "--out", str(paths[0])]) == 0
    assert main(["ic-table", "--n", "2", "--beta", "6", "4", "--no-figure",
                 "--out", str(paths[1])]) == 0
    assert main(["ic-table", "--n", "2", "--beta", "6", "4", "--no-figure",
                 "--jobs", "4", "--out", str(paths[2])]) == 0
    ok = paths[0].read_bytes() == paths[1].read_bytes() == paths[2].read_bytes()
    assert main(["verify", "--n", "1", "--degree", "5", "--no-figure",
                 "--out", str(paths[3])]) == 0
    assert main(["verify", "--n", "1", "--degree", "5", "--no-figure",
                 "--out", str(paths[4])]) == 0
    ok = ok and paths[3].read_bytes() == paths[4].read_bytes()
    _report("10 byte-identical outputs across runs and --jobs", ok)
