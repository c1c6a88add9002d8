"""Wick engine: contraction examples, oracle/DP agreement, limit laws."""

import random
from itertools import product

import pytest

from quonstat import (
    CapExceeded,
    ContractViolation,
    ModeLabel,
    QPolynomial,
    all_permutations,
    delta_matrix,
    inversion_number,
    oracle_q_permanent,
    oracle_scalar_product,
    q_permanent,
    scalar_product,
)

K1, K2, K3 = ModeLabel("k1"), ModeLabel("k2"), ModeLabel("k3")
K = ModeLabel("k")


def test_scalar_product_two_distinct_same_order():
    assert scalar_product((K1, K2), (K1, K2)) == QPolynomial.one()


def test_scalar_product_two_distinct_swapped():
    assert scalar_product((K1, K2), (K2, K1)) == QPolynomial.q()


def test_scalar_product_repeated_label():
    assert scalar_product((K, K), (K, K)) == QPolynomial([1, 1])


def test_scalar_product_length_mismatch():
    assert scalar_product((K1, K2), (K1, K2, K3)) == QPolynomial.zero()
    assert oracle_scalar_product((K1,), ()) == QPolynomial.zero()


def test_empty_words():
    assert scalar_product((), ()) == QPolynomial.one()


def test_mode_label_delta_needs_both_fields():
    assert ModeLabel("x", "p1") != ModeLabel("x", "p2")
    assert ModeLabel("x", "p1") == ModeLabel("x", "p1")
    assert delta_matrix([ModeLabel("x", "p1")], [ModeLabel("x")]) == [[0]]


def test_q_permanent_examples():
    assert q_permanent([[1, 0], [0, 1]]) == QPolynomial.one()
    assert q_permanent([[1, 1], [1, 1]]) == QPolynomial([1, 1])
    assert q_permanent([[1] * 3 for _ in range(3)]) == QPolynomial([1, 2, 2, 1])


def test_q_permanent_rejects_non_square():
    with pytest.raises(ContractViolation):
        q_permanent([[1, 0], [1]])


def test_q_permanent_cap():
    with pytest.raises(CapExceeded):
        q_permanent([[1] * 17 for _ in range(17)])
    with pytest.raises(CapExceeded):
        oracle_q_permanent([[1] * 10 for _ in range(10)])


def test_q_permanent_zero_row_and_column():
    assert q_permanent([[0, 0], [1, 1]]) == QPolynomial.zero()
    assert q_permanent([[1, 0], [1, 0]]) == QPolynomial.zero()


def test_oracle_equivalence_exhaustive_small():
    for n in (1, 2):
        for bits in product((0, 1), repeat=n * n):
            matrix = [list(bits[i * n : (i + 1) * n]) for i in range(n)]
            assert q_permanent(matrix) == oracle_q_permanent(matrix)


def test_oracle_equivalence_sampled():
    rng = random.Random(20260810)
    for n in (3, 4, 5):
        for _ in range(60):
            matrix = [[rng.randint(0, 1) for _ in range(n)] for _ in range(n)]
            assert q_permanent(matrix) == oracle_q_permanent(matrix)


def test_scalar_product_matches_oracle_on_random_words():
    rng = random.Random(99)
    pool = [ModeLabel(i) for i in range(3)]
    for _ in range(120):
        length = rng.randint(0, 5)
        left = tuple(rng.choice(pool) for _ in range(length))
        right = tuple(rng.choice(pool) for _ in range(length))
        assert scalar_product(left, right) == oracle_scalar_product(left, right)


def test_permuted_distinct_word_gives_inversion_monomial():
    for n in range(1, 7):
        labels = tuple(ModeLabel(i) for i in range(n))
        for p in all_permutations(n):
            permuted = tuple(labels[i - 1] for i in p)
            expected = QPolynomial.monomial(inversion_number(p))
            assert scalar_product(labels, permuted) == expected


def test_identical_labels_word_gives_q_factorial():
    for n in range(1, 7):
        word = tuple(ModeLabel("k") for _ in range(n))
        q_factorial = QPolynomial.one()
        for m in range(1, n + 1):
            q_factorial = q_factorial * QPolynomial([1] * m)
        got = scalar_product(word, word)
        assert got == q_factorial
        if n <= 6:
            assert got == oracle_scalar_product(word, word)


def test_repeated_label_vanishes_at_fermi_point():
    rng = random.Random(7)
    pool = [ModeLabel(i) for i in range(4)]
    for _ in range(60):
        length = rng.randint(2, 6)
        left = [rng.choice(pool) for _ in range(length)]
        # force a repeat on the left side
        left[rng.randrange(length)] = left[rng.randrange(length)]
        while len(set(left)) == len(left):
            left[0] = left[1]
        right = [rng.choice(pool) for _ in range(length)]
        value = scalar_product(tuple(left), tuple(right)).evaluate(-1)
        assert value == 0


def test_squared_norms_nonnegative_inside_range():
    rng = random.Random(13)
    pool = [ModeLabel(i) for i in range(3)]
    points = [-1.0, -0.7, -0.3, 0.0, 0.4, 0.8, 1.0]
    for _ in range(40):
        length = rng.randint(1, 5)
        word = tuple(rng.choice(pool) for _ in range(length))
        norm = scalar_product(word, word)
        for x in points:
            assert norm.evaluate(x) >= -1e-12
