import itertools

from qcell import pbw
from qcell.errors import NotInSubalgebra
from qcell.freealg import E0, E1, bar_free, lusztig_form, radical_check
from qcell.qring import RF_ONE, RatFunc, bar, laurent_of, one_minus_q_pow
from qcell.rootdata import QWeight, beta, enumerate_kp
import pytest


NORM = RF_ONE / RatFunc.from_laurent(one_minus_q_pow(1))


@pytest.fixture(scope="module")
def table():
    return pbw.root_table(6)


def test_first_root_vector_is_e0(table):
    assert table.vector(1) == E0


def test_root_vector_weights(table):
    for k in range(1, 7):
        assert table.vector(k).weight() == (k, k - 1)


def test_root_vector_norms(table):
    for k in range(1, 7):
        assert lusztig_form(table.vector(k), table.vector(k)) == NORM


def test_braid_apply_moves_up_the_ladder(table):
    assert pbw.braid_apply(0, table.vector(1)) == table.vector(2)
    assert pbw.braid_apply(1, table.vector(2)) == table.vector(3)


def test_pbw_monomial_unit_and_empty(table):
    from qcell.qring import qint
    assert pbw.pbw_monomial(table, (0, 0, 0, 0)) == pbw.pbw_monomial(table, ())
    assert pbw.pbw_monomial(table, (0, 1, 0, 0)) == table.vector(2)
    # divided square: E(b1)^2 / [2]_q
    sq = (table.vector(1) * table.vector(1)).scale(
        RF_ONE / RatFunc.from_laurent(qint(2)))
    assert pbw.pbw_monomial(table, (2, 0, 0, 0)) == sq


def test_gram_examples():
    assert pbw.gram(2, (0, 1, 0, 0), (0, 1, 0, 0)) == NORM
    assert pbw.gram(2, (0, 2, 0, 0), (1, 0, 1, 0)).is_zero()
    want = RF_ONE / RatFunc.from_laurent(one_minus_q_pow(1) * one_minus_q_pow(2))
    assert pbw.gram(2, (2, 0, 0, 0), (2, 0, 0, 0)) == want


def test_gram_closed_form_matches_pairing_small():
    # every pair at small degree, n = 2
    for d0 in range(7):
        for d1 in range(7 - d0):
            kps = enumerate_kp(2, QWeight(d0, d1))
            for a, b in itertools.product(kps, kps):
                pbw.gram(2, a, b)  # raises GramMismatch on any failure


def test_expand_pbw_unit_coordinates(table):
    for a in [(1, 0, 0, 0), (0, 1, 1, 0), (2, 0, 0, 1)]:
        mon = pbw.pbw_monomial(table, a)
        assert pbw.expand_pbw(mon, 2) == {a: RF_ONE}


def test_expand_pbw_adjacent_straightening(table):
    prod = table.vector(2) * table.vector(1)
    coords = pbw.expand_pbw(prod, 2)
    assert coords == {(1, 1, 0, 0): RatFunc.q_power(4)}


def test_expand_pbw_rejects_outside_elements():
    with pytest.raises(NotInSubalgebra):
        pbw.expand_pbw(E1, 2)


def test_ls_support_property(table):
    # E(b_l) E(b_k), k < l: supported between k and l, lead coefficient q^2
    for k, l in [(1, 2), (1, 3), (2, 4), (1, 4), (2, 3)]:
        coords = pbw.expand_pbw(table.vector(l) * table.vector(k), 2)
        lead = tuple(1 if j in (k, l) else 0 for j in range(1, 5))
        assert coords[lead] == RatFunc.q_power(4)
        for a in coords:
            assert all(a[j - 1] == 0 for j in range(1, 5) if not k <= j <= l)


def test_bar_matrix_unitriangular_involutive():
    for n, w in [(1, QWeight(3, 1)), (2, QWeight(4, 2)), (2, QWeight(5, 3)),
                 (2, QWeight(6, 4))]:
        m = pbw.bar_matrix(n, w)
        assert m.check_involution()
        pos = {a: i for i, a in enumerate(m.order)}
        for a, row in m.entries.items():
            assert row[a] == RF_ONE
            for b in row:
                assert pos[b] <= pos[a]


def test_bar_matrix_trivial_on_single_partition_weights():
    m = pbw.bar_matrix(2, beta(3))
    assert m.entries == {(0, 0, 1, 0): {(0, 0, 1, 0): RF_ONE}}


def test_canonical_coords_examples():
    rows = pbw.canonical_coords(2, beta(2))
    assert rows == {(0, 1, 0, 0): {(0, 1, 0, 0): RF_ONE}}
    rows = pbw.canonical_coords(2, QWeight(4, 2))
    assert rows[(1, 0, 1, 0)] == {(1, 0, 1, 0): RF_ONE}
    kappa = rows[(0, 2, 0, 0)]
    assert kappa[(0, 2, 0, 0)] == RF_ONE
    off = kappa[(1, 0, 1, 0)]
    assert laurent_of(off).in_q_inverse_ideal()


def test_canonical_rows_are_bar_fixed(table):
    # re-check via the transported involution, independent of the solver
    for w in [QWeight(4, 2), QWeight(5, 3)]:
        m = pbw.bar_matrix(2, w)
        rows = pbw.canonical_coords(2, w)
        for a, kappa in rows.items():
            img = {}
            for b, c in kappa.items():
                for c2, v in m.entries[b].items():
                    img[c2] = img.get(c2, RatFunc.from_int(0)) + bar(c) * v
            img = {k: v for k, v in img.items() if not v.is_zero()}
            assert img == kappa
