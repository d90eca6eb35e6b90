import itertools

from qcell import aalg, ictables
from qcell.qring import laurent_of, parse_scalar
from qcell.rootdata import QWeight, enumerate_kp
import pytest


def test_lambda_of_examples():
    # a = e_k gives the one-entry weight (n + 1 - k)
    for n in (1, 2, 3):
        for k in range(1, 2 * n + 1):
            a = tuple(1 if j == k else 0 for j in range(1, 2 * n + 1))
            assert ictables.lambda_of(a) == (n + 1 - k,)
    assert ictables.lambda_of((1, 0, 1, 0)) == (2, 0)
    assert ictables.lambda_of((0,) * 4) == ()


def test_lambda_of_entries_in_range():
    for n in (1, 2, 3):
        for d0 in range(8):
            for d1 in range(8 - d0):
                for a in enumerate_kp(n, QWeight(d0, d1)):
                    lam = ictables.lambda_of(a)
                    assert all(1 - n <= v <= n for v in lam)
                    assert len(lam) == sum(a)
                    assert ictables.lambda_to_partition(lam, n) == a


def test_lambda_of_bijective_per_degree():
    # across all weights with fixed d = sum(a), the map is injective
    for n in (2, 3):
        seen = {}
        for d0 in range(9):
            for d1 in range(9 - d0):
                for a in enumerate_kp(n, QWeight(d0, d1)):
                    lam = ictables.lambda_of(a)
                    assert lam not in seen or seen[lam] == a
                    seen[lam] = a


def test_delta_examples():
    assert ictables.delta_of((2, 0)) == 1
    assert ictables.delta_of((3, 2, 1)) == 3
    assert ictables.delta_of((4, 4, 4)) == 0
    assert ictables.delta_of(()) == 0


def test_delta_closed_form_equals_brute_force():
    for d in range(1, 6):
        for lam in itertools.combinations_with_replacement(
                range(2, -3, -1), d):
            assert ictables.delta_of(lam) == ictables.delta_brute(lam)


def test_delta_equals_interaction_count():
    for n in (2, 3):
        for d0 in range(9):
            for d1 in range(9 - d0):
                for a in enumerate_kp(n, QWeight(d0, d1)):
                    lam = ictables.lambda_of(a)
                    assert ictables.delta_of(lam) == ictables.pair_sum(a)


def test_minor_to_ic_dictionary():
    n = 3
    for k in range(1, 2 * n + 1):
        assert ictables.minor_to_ic(n, k, k) == (1, n + 1 - k)
    assert ictables.minor_to_ic(n, 1, 2 * n - 1) == (n, 1)
    assert ictables.minor_to_ic(n, 2, 2 * n) == (n, 0)


def test_orbit_dim_on_fundamental_coweights():
    for n in (1, 2, 3, 4):
        for k in range(1, n + 1):
            nu = tuple(1 if i <= k else 0 for i in range(1, n + 1))
            assert ictables.orbit_dim(n, nu) == k * (n - k)


def test_dom_enumerate_small():
    doms = ictables.dom_enumerate(2, 2, 1)
    nus = {d["nu"] for d in doms}
    assert nus == {(2, 0), (1, 1)}
    dims = {d["nu"]: d["dim"] for d in doms}
    assert dims[(2, 0)] == 2 and dims[(1, 1)] == 0
    # mu window respected and dominance inside equal-nu blocks
    for d in doms:
        assert all(-1 <= m <= 1 for m in d["mu"])
        nu, mu = d["nu"], d["mu"]
        for i in range(1):
            if nu[i] == nu[i + 1]:
                assert mu[i] >= mu[i + 1]


def test_dom_enumerate_n1():
    doms = ictables.dom_enumerate(1, 3, 2)
    assert {d["nu"] for d in doms} == {(3,)}


def test_dom_enumerate_dim_parity_constant():
    for n in (2, 3):
        for d in (1, 2, 3):
            parities = {r["dim"] % 2 for r in ictables.dom_enumerate(n, d, 1)}
            assert len(parities) == 1


def test_dom_enumerate_deterministic():
    a = ictables.dom_enumerate(3, 3, 2)
    b = ictables.dom_enumerate(3, 3, 2)
    assert a == b


def test_ic_table_single_row():
    t = ictables.ic_table(2, QWeight(2, 1))
    assert len(t["rows"]) == 1
    row = t["rows"][0]
    assert row["coeffs"] == [{"ap": [0, 1, 0, 0], "p": "1*q^(0/2)"}]


def test_ic_table_two_rows_unitriangular():
    t = ictables.ic_table(2, QWeight(4, 2))
    assert [r["lambda"] for r in t["rows"]] == [[1, 1], [2, 0]]
    for row in t["rows"]:
        a = row["a"]
        assert row["delta"] == ictables.pair_sum(tuple(a))
        for c in row["coeffs"]:
            val = parse_scalar(c["p"])
            if c["ap"] == a:
                assert c["p"] == "1*q^(0/2)"
            else:
                assert laurent_of(val).in_q_inverse_ideal()


def test_ic_table_solver_order_emitted():
    t = ictables.ic_table(2, QWeight(4, 2))
    assert set(map(tuple, t["solver_order"])) \
        == {(0, 2, 0, 0), (1, 0, 1, 0)}
