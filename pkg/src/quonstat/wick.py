"""Vacuum scalar products of creation-operator words.

The contraction rule: put the left word on one line, the right word below,
and sum over all ways of pairing each left operator with a distinct right
operator.  A pairing is a bijection R, it contributes the product of its
label deltas weighted by q to the inversion number of R (the minimum
number of crossings of the contraction lines).  Words of different length
give zero because an operator is left over to annihilate the vacuum.

Two independent evaluation paths are provided on purpose:

* ``oracle_scalar_product`` / ``oracle_q_permanent`` enumerate all n!
  pairings literally and serve as the ground truth;
* ``scalar_product`` routes through ``q_permanent``, a dynamic program
  over subsets of used columns with O(2^n * n) polynomial operations.

Both return exact `QPolynomial` values and must agree identically.
"""

from itertools import permutations as _bijections
from typing import Hashable, NamedTuple, Sequence

from .errors import CapExceeded, ContractViolation
from .qpoly import QPolynomial

ORACLE_CAP = 9          # 9! pairings is the enumeration budget
Q_PERMANENT_CAP = 16    # 2^16 subset states


class ModeLabel(NamedTuple):
    """Mode of one creation operator.

    ``index`` is an opaque internal quantum number; ``tag`` optionally
    names the composite the operator belongs to (a center-of-mass
    stand-in).  Two labels contract iff both fields are equal;
    tuple semantics keep that comparison cheap in the inner loops.
    """

    index: Hashable
    tag: Hashable = None

    def __str__(self) -> str:
        return f"{self.tag}:{self.index}" if self.tag is not None else str(self.index)


Word = tuple[ModeLabel, ...]


def word(*labels: ModeLabel) -> Word:
    return tuple(labels)


def delta_matrix(left: Sequence[ModeLabel], right: Sequence[ModeLabel]) -> list[list[int]]:
    """0/1 matrix of label coincidences, entry (i, j) = delta(left_i, right_j)."""
    return [[1 if a == b else 0 for b in right] for a in left]


def q_permanent(matrix: Sequence[Sequence], cap: int = Q_PERMANENT_CAP) -> QPolynomial:
    """Permanent-like sum over bijections R weighted by q^(inversions of R).

    Subset dynamic program: rows are processed in order; a state is the
    set of used columns.  Assigning column j at row i adds one inversion
    for every already-used column greater than j, which reconstructs the
    inversion number of the full bijection.
    """
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ContractViolation("q_permanent requires a square matrix")
    if n == 0:
        return QPolynomial.one()
    if n > cap:
        raise CapExceeded(f"q_permanent cap is {cap} rows, got {n}")
    # zero row or column forces every bijection product to vanish
    if any(not any(row) for row in matrix):
        return QPolynomial.zero()
    if any(not any(matrix[i][j] for i in range(n)) for j in range(n)):
        return QPolynomial.zero()

    level: dict[int, list] = {0: [1]}
    for i in range(n):
        row = matrix[i]
        nxt: dict[int, list] = {}
        for mask, poly in level.items():
            for j in range(n):
                entry = row[j]
                if not entry or (mask >> j) & 1:
                    continue
                shift = (mask >> (j + 1)).bit_count()
                target = nxt.setdefault(mask | (1 << j), [])
                need = len(poly) + shift
                if len(target) < need:
                    target.extend([0] * (need - len(target)))
                if entry == 1:
                    for k, c in enumerate(poly):
                        if c:
                            target[k + shift] += c
                else:
                    for k, c in enumerate(poly):
                        if c:
                            target[k + shift] += c * entry
        level = nxt
        if not level:
            return QPolynomial.zero()
    (coeffs,) = level.values()
    return QPolynomial(coeffs)


def oracle_q_permanent(matrix: Sequence[Sequence], cap: int = ORACLE_CAP) -> QPolynomial:
    """Ground truth for ``q_permanent``: explicit sum over all n! bijections."""
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ContractViolation("q_permanent requires a square matrix")
    if n == 0:
        return QPolynomial.one()
    if n > cap:
        raise CapExceeded(f"oracle enumeration budget is {cap}!, got n={n}")
    coeffs = [0] * (n * (n - 1) // 2 + 1)
    for bijection in _bijections(range(n)):
        prod = 1
        for i, j in enumerate(bijection):
            entry = matrix[i][j]
            if not entry:
                prod = 0
                break
            prod *= entry
        if not prod:
            continue
        inv = 0
        for i in range(n):
            bi = bijection[i]
            for j in range(i + 1, n):
                if bi > bijection[j]:
                    inv += 1
        coeffs[inv] += prod
    return QPolynomial(coeffs)


def scalar_product(left: Word, right: Word) -> QPolynomial:
    """Vacuum scalar product of two creation words via the subset DP."""
    if len(left) != len(right):
        return QPolynomial.zero()
    return q_permanent(delta_matrix(left, right))


def oracle_scalar_product(left: Word, right: Word, cap: int = ORACLE_CAP) -> QPolynomial:
    """Vacuum scalar product by brute-force pairing enumeration."""
    if len(left) != len(right):
        return QPolynomial.zero()
    return oracle_q_permanent(delta_matrix(left, right), cap=cap)
