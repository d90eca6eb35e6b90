import random

from qcell.rootdata import (ALPHA0, ALPHA1, OMEGA0, OMEGA1, PWeight, QWeight,
                            beta, enumerate_kp, frozen_exponent,
                            interval_partition, kp_weight, minor_weight,
                            word_action, word_letter)
import pytest


def test_beta_values():
    assert beta(1) == ALPHA0
    assert beta(3) == QWeight(3, 2)


def test_beta_pairings_all_two():
    for k in range(1, 9):
        for l in range(1, 9):
            assert beta(k).form(beta(l)) == 2


def test_kp_weight_norm():
    rng = random.Random(0)
    for _ in range(100):
        a = tuple(rng.randint(0, 3) for _ in range(6))
        w = kp_weight(a)
        assert w.form(w) == 2 * sum(a) ** 2


def test_enumerate_kp_examples():
    assert enumerate_kp(1, ALPHA0) == [(1, 0)]
    assert enumerate_kp(2, QWeight(4, 2)) == [(0, 2, 0, 0), (1, 0, 1, 0)]
    assert enumerate_kp(2, ALPHA1) == []


def test_enumerate_kp_solves_the_equation():
    for n in (1, 2, 3):
        for d0 in range(9):
            for d1 in range(9 - d0):
                for a in enumerate_kp(n, QWeight(d0, d1)):
                    assert kp_weight(a) == QWeight(d0, d1)


def test_word_action_empty_prefix():
    assert word_action(0, OMEGA1) == OMEGA1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_word_action_full_word_differences(n):
    # w_i - w_n(w_i) is the sum of beta_k over k of matching parity
    d0 = OMEGA0 - word_action(2 * n, OMEGA0)
    odd = QWeight(0, 0)
    for k in range(1, 2 * n, 2):
        odd = odd + beta(k)
    assert d0.as_qweight() == odd
    d1 = OMEGA1 - word_action(2 * n, OMEGA1)
    even = QWeight(0, 0)
    for k in range(2, 2 * n + 1, 2):
        even = even + beta(k)
    assert d1.as_qweight() == even


def test_reflections_are_involutive():
    rng = random.Random(1)
    for _ in range(100):
        x = PWeight(rng.randint(-3, 3), rng.randint(-3, 3),
                    QWeight(rng.randint(-3, 3), rng.randint(-3, 3)))
        for i in (0, 1):
            assert x.reflect(i).reflect(i) == x


def test_word_prefixes_strictly_grow():
    # each prefix subtracts a new positive root from w_0, never cancelling
    n = 4
    prev = QWeight(0, 0)
    for j in range(1, 2 * n + 1):
        lam = OMEGA0 if word_letter(j) == 0 else OMEGA1
        diff = (lam - word_action(j, lam)).as_qweight()
        assert diff.d0 >= prev.d0 and diff.d1 >= prev.d1
        prev = diff


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_minor_weight_is_interval_sum(n):
    for b in range(1, 2 * n + 1):
        for d in range(b, 2 * n + 1, 2):
            want = kp_weight(interval_partition(b, d, n))
            assert minor_weight(b, d) == want


def test_minor_weight_examples():
    assert minor_weight(3, 3) == beta(3)
    assert minor_weight(2, 4) == QWeight(6, 4)
    n = 2
    d0_weight = (OMEGA0 - word_action(2 * n, OMEGA0)).as_qweight()
    assert minor_weight(1, 2 * n - 1) == d0_weight


def test_frozen_exponent_linearity():
    rng = random.Random(2)
    for _ in range(50):
        w = QWeight(rng.randint(0, 6), rng.randint(0, 6))
        for n in (1, 2, 3):
            s = frozen_exponent(1, 1, n, w)
            assert s == frozen_exponent(1, 0, n, w) + frozen_exponent(0, 1, n, w)
