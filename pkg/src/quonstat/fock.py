"""Multi-quon state constructions built on the Wick engine.

A state is a rational linear combination of equal-length creation words.
The central objects here are the normalization polynomial of a
representation-weighted state, the Gram matrix of a word basis, a numeric
positive-semidefiniteness certificate, and the q-dependent weights of the
symmetric-group irreps inside the n-quon state.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

import numpy as np

from .errors import ContractViolation, UnsupportedError
from .permutations import (
    RepCoefficients,
    all_permutations,
    character_table,
)
from .qpoly import QPolynomial
from .wick import ModeLabel, Word, q_permanent, scalar_product


@dataclass(frozen=True)
class StateVector:
    """Linear combination of equal-length operator words; zero
    coefficients are never stored."""

    terms: Mapping[Word, Fraction]

    def __post_init__(self):
        cleaned = {}
        length = None
        for w, c in self.terms.items():
            w = tuple(w)
            if length is None:
                length = len(w)
            elif len(w) != length:
                raise ContractViolation("all words in a StateVector must have equal length")
            c = Fraction(c)
            if c:
                cleaned[w] = cleaned.get(w, Fraction(0)) + c
        object.__setattr__(
            self, "terms", {w: c for w, c in cleaned.items() if c}
        )

    def word_length(self) -> int:
        for w in self.terms:
            return len(w)
        return 0


def build_state(labels: Sequence[ModeLabel], rep: RepCoefficients) -> StateVector:
    """Representation-weighted combination: the word permuted by P enters
    with coefficient c(P), for every P with a nonzero coefficient."""
    labels = tuple(labels)
    if len(labels) != rep.n:
        raise ContractViolation(
            f"got {len(labels)} labels for a rep over S_{rep.n}"
        )
    terms: dict[Word, Fraction] = {}
    for p, c in rep.coeffs.items():
        permuted = tuple(labels[i - 1] for i in p)
        terms[permuted] = terms.get(permuted, Fraction(0)) + c
    return StateVector(terms)


def tensor(a: StateVector, b: StateVector) -> StateVector:
    """Concatenation product: words concatenate, coefficients multiply."""
    terms: dict[Word, Fraction] = {}
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            w = wa + wb
            terms[w] = terms.get(w, Fraction(0)) + ca * cb
    return StateVector(terms)


def state_scalar_product(left: StateVector, right: StateVector) -> QPolynomial:
    """Bilinear extension of the word scalar product.

    Scalar products depend on the words only through their delta pattern,
    so pairs sharing a pattern are evaluated once; accumulation stays
    exact and order-independent.
    """
    if not left.terms or not right.terms:
        return QPolynomial.zero()
    if left.word_length() != right.word_length():
        return QPolynomial.zero()
    m = left.word_length()

    ids: dict = {}
    left_words = [
        (tuple(ids.setdefault(lab, len(ids)) for lab in w), c)
        for w, c in left.terms.items()
    ]
    right_indexed = []
    for w, c in right.terms.items():
        masks: dict[int, int] = {}
        for j, lab in enumerate(w):
            lab_id = ids.setdefault(lab, len(ids))
            masks[lab_id] = masks.get(lab_id, 0) | (1 << j)
        right_indexed.append((masks, c))

    acc = [Fraction(0)] * (m * (m - 1) // 2 + 1)
    memo: dict[tuple[int, ...], tuple] = {}
    for wl, cl in left_words:
        for masks, cr in right_indexed:
            key = tuple(masks.get(lab, 0) for lab in wl)
            coeffs = memo.get(key)
            if coeffs is None:
                matrix = [[(row >> j) & 1 for j in range(m)] for row in key]
                coeffs = q_permanent(matrix).coefficients
                memo[key] = coeffs
            if coeffs:
                c = cl * cr
                for k, value in enumerate(coeffs):
                    if value:
                        acc[k] += c * value
    return QPolynomial(acc)


def normalization_poly(rep: RepCoefficients, labels: Sequence[ModeLabel]) -> QPolynomial:
    """Squared norm of ``build_state`` as a polynomial in q; for distinct
    labels its degree is at most n(n-1)/2.

    Repeated labels are refused: the degree bound tacitly assumes
    constituents in distinct internal states.
    """
    labels = tuple(labels)
    if len(set(labels)) != len(labels):
        raise UnsupportedError("normalization_poly requires distinct labels")
    state = build_state(labels, rep)
    return state_scalar_product(state, state)


@dataclass(frozen=True)
class GramMatrix:
    words: tuple[Word, ...]
    entries: tuple[tuple[QPolynomial, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.words)

    def evaluate(self, q_value: float) -> np.ndarray:
        return np.array(
            [[entry.evaluate(float(q_value)) for entry in row] for row in self.entries]
        )


def gram(words: Sequence[Word]) -> GramMatrix:
    """Gram matrix of scalar products; symmetric because a pairing and its
    inverse have the same inversion number."""
    words = tuple(tuple(w) for w in words)
    if words:
        length = len(words[0])
        if any(len(w) != length for w in words):
            raise ContractViolation("gram requires equal-length words")
    entries = []
    for i, wi in enumerate(words):
        row = []
        for j, wj in enumerate(words):
            if j < i:
                row.append(entries[j][i])
            else:
                row.append(scalar_product(wi, wj))
        entries.append(row)
    return GramMatrix(words=words, entries=tuple(tuple(row) for row in entries))


def permutation_basis(labels: Sequence[ModeLabel]) -> list[Word]:
    """All n! place-permuted words of ``labels``, lexicographic in the
    permutation."""
    labels = tuple(labels)
    return [
        tuple(labels[i - 1] for i in p) for p in all_permutations(len(labels))
    ]


@dataclass(frozen=True)
class PsdReport:
    passed: bool
    min_eigenvalue: float
    dimension: int
    q_value: float
    q_in_range: bool
    witness: Optional[np.ndarray]  # eigenvector of the minimum eigenvalue on failure

    def __str__(self) -> str:
        verdict = "pass" if self.passed else "fail"
        note = "" if self.q_in_range else " (q outside [-1, 1], convexity range)"
        return f"{verdict}: min eigenvalue {self.min_eigenvalue:.6e}{note}"


def check_psd(g: GramMatrix, q_value: float, tolerance: float | None = None) -> PsdReport:
    """Evaluate the Gram matrix at q and test the minimum eigenvalue
    against -tolerance (default 1e-10 per matrix dimension).

    q outside [-1, 1] is permitted but flagged: positivity is only
    guaranteed inside the convexity range.
    """
    if tolerance is None:
        tolerance = 1e-10 * max(g.dimension, 1)
    if tolerance <= 0:
        raise ContractViolation("tolerance must be positive")
    numeric = g.evaluate(q_value)
    eigenvalues, eigenvectors = np.linalg.eigh(numeric)
    min_index = int(np.argmin(eigenvalues))
    min_eig = float(eigenvalues[min_index])
    passed = min_eig >= -tolerance
    return PsdReport(
        passed=passed,
        min_eigenvalue=min_eig,
        dimension=g.dimension,
        q_value=float(q_value),
        q_in_range=-1.0 <= q_value <= 1.0,
        witness=None if passed else eigenvectors[:, min_index],
    )


def irrep_weight_polys(n: int) -> dict[str, QPolynomial]:
    """Exact weight of each S_n irrep in the n-quon state of n distinct
    labels, as a polynomial in q.

    The central idempotent of the irrep is applied to the canonical word
    and its squared norm computed through the Gram matrix of all n!
    permuted words.
    """
    table = character_table(n)
    base = [ModeLabel(i) for i in range(1, n + 1)]
    perms = list(all_permutations(n))
    basis = [tuple(base[i - 1] for i in p) for p in perms]
    g = gram(basis)
    n_fact = math.factorial(n)
    out: dict[str, QPolynomial] = {}
    for label, dim, _ in table.irreps:
        coeff = [
            Fraction(dim, n_fact) * table.character(label, p) for p in perms
        ]
        weight = QPolynomial.zero()
        for i, ci in enumerate(coeff):
            if not ci:
                continue
            for j, cj in enumerate(coeff):
                if not cj:
                    continue
                weight = weight + (ci * cj) * g.entries[i][j]
        out[label] = weight
    return out


def irrep_weights(n: int, q_value: float) -> dict[str, float]:
    """q-dependent probabilities of the S_n irreps for n distinct quons;
    reproduces (1+q)/2 and (1-q)/2 at n=2.  Requires -1 < q < 1."""
    if not 2 <= n <= 4:
        raise UnsupportedError(f"irrep weights are supported for n in 2..4, not n={n}")
    if not -1.0 < q_value < 1.0:
        raise ContractViolation("irrep weights require -1 < q < 1")
    polys = irrep_weight_polys(n)
    raw = {label: poly.evaluate(float(q_value)) for label, poly in polys.items()}
    total = sum(raw.values())
    return {label: value / total for label, value in raw.items()}
