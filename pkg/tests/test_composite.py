"""Composite statistics: classification, the q^(n^2) exchange law, limits."""

import random
from fractions import Fraction
from itertools import permutations as bijections

import pytest

from quonstat import (
    CapExceeded,
    CompositeSpec,
    ContractViolation,
    ModeLabel,
    QPolynomial,
    block_swap,
    composite_word,
    cross_term_magnitude,
    effective_exponent,
    inversion_number,
    normalization_poly,
    preset_rep,
    random_rep,
    state_scalar_product,
    tensor,
    two_composite_scalar,
    weo_limit_check,
)
from quonstat.composite import _classified_scalar


def make_spec(n, rep=None):
    return CompositeSpec(
        n=n,
        internal_labels=tuple(range(1, n + 1)),
        rep=rep if rep is not None else preset_rep(n, "antisymmetric"),
    )


def literal_classified(spec, left_tags, right_tags):
    """Independent oracle: expand both product states and enumerate every
    one of the (2n)! pairings of each word pair literally."""
    n = spec.n
    left = tensor(composite_word(spec, left_tags[0]), composite_word(spec, left_tags[1]))
    right = tensor(composite_word(spec, right_tags[0]), composite_word(spec, right_tags[1]))
    buckets = {
        "direct": QPolynomial.zero(),
        "exchange": QPolynomial.zero(),
        "cross": QPolynomial.zero(),
    }
    for wl, cl in left.terms.items():
        for wr, cr in right.terms.items():
            for pairing in bijections(range(2 * n)):
                if any(wl[i] != wr[pairing[i]] for i in range(2 * n)):
                    continue
                first_images = pairing[:n]
                if all(j < n for j in first_images):
                    kind = "direct"
                elif all(j >= n for j in first_images):
                    kind = "exchange"
                else:
                    kind = "cross"
                inv = sum(
                    1
                    for i in range(2 * n)
                    for j in range(i + 1, 2 * n)
                    if pairing[i] > pairing[j]
                )
                buckets[kind] = buckets[kind] + cl * cr * QPolynomial.monomial(inv)
    return buckets


def full_scalar(spec, left_tags, right_tags):
    left = tensor(composite_word(spec, left_tags[0]), composite_word(spec, left_tags[1]))
    right = tensor(composite_word(spec, right_tags[0]), composite_word(spec, right_tags[1]))
    return state_scalar_product(left, right)


TAG_CONFIGS = [
    (("t1", "t2"), ("t1", "t2")),   # aligned
    (("t1", "t2"), ("t2", "t1")),   # swapped
    (("t1", "t2"), ("u1", "u2")),   # disjoint
    (("t1", "t2"), ("t1", "u2")),   # half aligned
    (("t", "t"), ("t", "t")),       # forced overlap
]


def test_composite_word_single_constituent():
    spec = make_spec(1, preset_rep(1, "symmetric"))
    state = composite_word(spec, "p")
    assert state.terms == {(ModeLabel(1, "p"),): 1}


def test_composite_word_antisymmetric_pair():
    spec = make_spec(2)
    state = composite_word(spec, "p1")
    assert state.terms == {
        (ModeLabel(1, "p1"), ModeLabel(2, "p1")): 1,
        (ModeLabel(2, "p1"), ModeLabel(1, "p1")): -1,
    }


def test_composite_word_symmetric_triple():
    spec = make_spec(3, preset_rep(3, "symmetric"))
    state = composite_word(spec, "x")
    assert len(state.terms) == 6
    assert set(state.terms.values()) == {Fraction(1)}


def test_spec_validation():
    with pytest.raises(ContractViolation):
        CompositeSpec(n=2, internal_labels=(1, 1), rep=preset_rep(2, "symmetric"))
    with pytest.raises(ContractViolation):
        CompositeSpec(n=2, internal_labels=(1, 2, 3), rep=preset_rep(2, "symmetric"))
    with pytest.raises(ContractViolation):
        CompositeSpec(n=3, internal_labels=(1, 2, 3), rep=preset_rep(2, "symmetric"))


def test_two_composite_rejects_equal_tags_on_one_side():
    spec = make_spec(2)
    with pytest.raises(ContractViolation):
        two_composite_scalar(spec, ("t", "t"), ("u1", "u2"))


def test_single_constituent_examples():
    spec = make_spec(1, preset_rep(1, "symmetric"))
    aligned = two_composite_scalar(spec, ("t1", "t2"), ("t1", "t2"))
    assert (aligned.direct, aligned.exchange, aligned.cross) == (
        QPolynomial.one(),
        QPolynomial.zero(),
        QPolynomial.zero(),
    )
    swapped = two_composite_scalar(spec, ("t1", "t2"), ("t2", "t1"))
    assert (swapped.direct, swapped.exchange, swapped.cross) == (
        QPolynomial.zero(),
        QPolynomial.q(),
        QPolynomial.zero(),
    )


def test_classified_matches_literal_oracle():
    rng = random.Random(41)
    for n in (1, 2):
        for rep in (
            preset_rep(n, "symmetric"),
            preset_rep(n, "antisymmetric"),
            random_rep(n, rng),
        ):
            spec = make_spec(n, rep)
            for left_tags, right_tags in TAG_CONFIGS:
                got = _classified_scalar(spec, left_tags, right_tags)
                want = literal_classified(spec, left_tags, right_tags)
                assert got.direct == want["direct"]
                assert got.exchange == want["exchange"]
                assert got.cross == want["cross"]


def test_classified_matches_literal_oracle_n3_overlap():
    spec = make_spec(3, preset_rep(3, "antisymmetric"))
    got = _classified_scalar(spec, ("t", "t"), ("t", "t"))
    want = literal_classified(spec, ("t", "t"), ("t", "t"))
    assert (got.direct, got.exchange, got.cross) == (
        want["direct"],
        want["exchange"],
        want["cross"],
    )


def test_decomposition_identity_all_configs():
    rng = random.Random(3)
    for n in (1, 2, 3):
        for rep in (
            preset_rep(n, "symmetric"),
            preset_rep(n, "antisymmetric"),
            random_rep(n, rng),
        ):
            spec = make_spec(n, rep)
            for left_tags, right_tags in TAG_CONFIGS:
                result = _classified_scalar(spec, left_tags, right_tags)
                assert result.total == full_scalar(spec, left_tags, right_tags)


@pytest.mark.parametrize("kind", ["symmetric", "antisymmetric"])
def test_decomposition_identity_n4_distinct_tags(kind):
    spec = make_spec(4, preset_rep(4, kind))
    for left_tags, right_tags in TAG_CONFIGS[:4]:
        result = _classified_scalar(spec, left_tags, right_tags)
        assert result.total == full_scalar(spec, left_tags, right_tags)


@pytest.mark.parametrize("kind", ["symmetric", "antisymmetric"])
def test_decomposition_identity_n4_forced_overlap(kind):
    spec = make_spec(4, preset_rep(4, kind))
    result = _classified_scalar(spec, ("t", "t"), ("t", "t"))
    assert result.total == full_scalar(spec, ("t", "t"), ("t", "t"))
    assert not result.cross.is_zero()


def test_exchange_law_small_n():
    rng = random.Random(8)
    for n in (1, 2, 3):
        reps = [
            preset_rep(n, "symmetric"),
            preset_rep(n, "antisymmetric"),
            random_rep(n, rng),
        ]
        for rep in reps:
            spec = make_spec(n, rep)
            aligned = two_composite_scalar(spec, ("t1", "t2"), ("t1", "t2"))
            swapped = two_composite_scalar(spec, ("t1", "t2"), ("t2", "t1"))
            assert swapped.exchange == QPolynomial.monomial(n * n) * aligned.direct
            p = normalization_poly(rep, [ModeLabel(i) for i in spec.internal_labels])
            assert aligned.direct == p * p


def test_effective_exponent_values():
    assert effective_exponent(make_spec(1, preset_rep(1, "symmetric"))) == 1
    assert effective_exponent(make_spec(2, preset_rep(2, "symmetric"))) == 4
    assert effective_exponent(make_spec(2)) == 4
    assert effective_exponent(make_spec(3)) == 9


def test_effective_exponent_random_rep():
    rng = random.Random(123)
    assert effective_exponent(make_spec(3, random_rep(3, rng))) == 9


def test_factorized_path_agrees_with_full_path_shape():
    # n=5 runs the factorized route; its components obey the same law
    spec = make_spec(5, preset_rep(5, "antisymmetric"))
    aligned = two_composite_scalar(spec, ("t1", "t2"), ("t1", "t2"))
    swapped = two_composite_scalar(spec, ("t1", "t2"), ("t2", "t1"))
    p = normalization_poly(spec.rep, [ModeLabel(i) for i in spec.internal_labels])
    assert aligned.direct == p * p
    assert aligned.exchange.is_zero() and aligned.cross.is_zero()
    assert swapped.exchange == QPolynomial.monomial(25) * p * p
    assert effective_exponent(spec) == 25


def test_composite_cap():
    spec = make_spec(7, preset_rep(7, "antisymmetric"))
    with pytest.raises(CapExceeded):
        two_composite_scalar(spec, ("t1", "t2"), ("t1", "t2"))


def test_block_swap_inversions():
    for n in range(1, 7):
        swap = block_swap(n)
        assert inversion_number(swap) == n * n


def test_cross_term_zero_for_distinct_tags():
    for n in (1, 2, 3):
        spec = make_spec(n)
        assert cross_term_magnitude(spec, shared_tags=False) == QPolynomial.zero()
    assert cross_term_magnitude(
        make_spec(5, preset_rep(5, "symmetric")), shared_tags=False
    ) == QPolynomial.zero()


def test_cross_term_single_constituent_overlap():
    spec = make_spec(1, preset_rep(1, "symmetric"))
    assert cross_term_magnitude(spec, shared_tags=True) == QPolynomial.zero()


def test_cross_term_two_constituents_overlap():
    spec = make_spec(2, preset_rep(2, "symmetric"))
    cross = cross_term_magnitude(spec, shared_tags=True)
    oracle = literal_classified(spec, ("t", "t"), ("t", "t"))["cross"]
    assert cross == oracle
    assert not cross.is_zero()


def test_weo_limit_table():
    assert weo_limit_check(2, "fermi") == "boson"
    assert weo_limit_check(7, "fermi") == "fermion"
    assert weo_limit_check(5, "bose") == "boson"
    for n in range(1, 9):
        expected = "fermion" if n % 2 else "boson"
        assert weo_limit_check(n, "fermi") == expected
        assert weo_limit_check(n, "bose") == "boson"
    with pytest.raises(ContractViolation):
        weo_limit_check(2, "anyon")
    with pytest.raises(ContractViolation):
        weo_limit_check(0, "bose")
