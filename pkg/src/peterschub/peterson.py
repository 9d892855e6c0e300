"""Fixed-point evaluations of Peterson classes and Monk structure constants.

Classes are indexed by subsets K of simple-root indices, fixed points by
subsets J; the class of K is evaluated at the fixed point of J as
p_{v_K}(w_J), where v_K is the Coxeter element of K (increasing-index
word) and w_J the longest element of J.  Evaluations vanish unless
K is contained in J, which makes the full evaluation grid triangular
under inclusion and lets products be expanded by back-substitution in
exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .billey import LocalizationValue, billey_eval_dp, inversion_heights
from .errors import InvariantViolation, Rejected
from .rootsys import RootSystem
from .weyl import (
    Word,
    _normalize_subset,
    element_matrix,
    is_reduced,
    longest_element_word,
)

Subset = frozenset[int]

StructureConstants = dict[Subset, tuple[Fraction, int]]


def coxeter_word(K: Iterable[int]) -> Word:
    """The increasing-index reduced word of a subset's Coxeter element.

    Each index appears exactly once, so the word is reduced in every
    ambient type containing the indices.

    >>> coxeter_word({3})
    (3,)
    >>> coxeter_word({3, 1})
    (1, 3)
    """
    word = tuple(sorted(set(K)))
    if not word:
        raise Rejected("subset must be nonempty")
    for j in word:
        if not isinstance(j, int) or j < 1:
            raise Rejected(f"subset entries must be positive integers, got {j!r}")
    return word


def full_subset(rs: RootSystem) -> Subset:
    """All simple-root indices of the system."""
    return frozenset(range(1, rs.rank + 1))


def _fixed_point_word(
    rs: RootSystem, J: Subset, word: Sequence[int] | None
) -> Word:
    """The canonical word of w_J, or a validated alternative word for it."""
    canonical = longest_element_word(rs, J)
    if word is None:
        return canonical
    word = tuple(word)
    if not is_reduced(rs, word):
        raise Rejected(f"alternative word {word} is not reduced")
    if element_matrix(rs, word) != element_matrix(rs, canonical):
        raise Rejected(
            f"alternative word {word} is not a reduced word "
            f"for the longest element of {sorted(J)}"
        )
    return word


def monk_eval(
    rs: RootSystem,
    i: int,
    J: Iterable[int] | None = None,
    *,
    word: Sequence[int] | None = None,
) -> LocalizationValue:
    """p_{s_i}(w_J): t times the sum of inversion heights at letter-i positions.

    J defaults to the full simple set.  When ``word`` is supplied it must
    be a reduced word of w_J; the value does not depend on the choice.
    An index i outside J gives coefficient 0 (the letter never occurs).

    >>> from peterschub.rootsys import build_root_system
    >>> monk_eval(build_root_system("A2"), 1)
    LocalizationValue(coeff=2, degree=1)
    """
    rs.check_index(i)
    J = full_subset(rs) if J is None else _normalize_subset(rs, J)
    w = _fixed_point_word(rs, J, word)
    heights = inversion_heights(rs, w)
    coeff = sum(h for letter, h in zip(w, heights) if letter == i)
    return LocalizationValue(coeff, 1)


def giambelli_eval(
    rs: RootSystem,
    K: Iterable[int] | None = None,
    *,
    word: Sequence[int] | None = None,
) -> LocalizationValue:
    """p_{v_K}(w_K), the self-evaluation of the subset's Coxeter class.

    >>> from peterschub.rootsys import build_root_system
    >>> giambelli_eval(build_root_system("A2"))
    LocalizationValue(coeff=2, degree=2)
    """
    K = full_subset(rs) if K is None else _normalize_subset(rs, K)
    v = coxeter_word(K)
    w = _fixed_point_word(rs, K, word)
    return billey_eval_dp(rs, v, w)


def giambelli_ratio(rs: RootSystem, K: Iterable[int] | None = None) -> Fraction:
    """The exact ratio (prod_{i in K} p_{s_i}(w_K)) / p_{v_K}(w_K).

    Relates the product of the degree-one classes over K to the Coxeter
    class of K; both sides are monomials of t-degree |K|, so the ratio
    is a single rational number.

    >>> from peterschub.rootsys import build_root_system
    >>> giambelli_ratio(build_root_system("A2"))
    Fraction(2, 1)
    >>> giambelli_ratio(build_root_system("A3"), {1, 3})
    Fraction(1, 1)
    """
    K = full_subset(rs) if K is None else _normalize_subset(rs, K)
    num = 1
    for i in sorted(K):
        num *= monk_eval(rs, i, K).coeff
    return Fraction(num, giambelli_eval(rs, K).coeff)


@lru_cache(maxsize=None)
def _class_eval(rs: RootSystem, K: Subset, J: Subset) -> LocalizationValue:
    """p_{v_K}(w_J) with the empty class equal to 1 at every fixed point.

    Vanishes whenever K is not contained in J: every reduced word of v_K
    uses all letters of K while w_J's words use only letters of J.
    """
    if not K:
        return LocalizationValue(1, 0)
    if not K <= J:
        return LocalizationValue(0, len(K))
    return billey_eval_dp(rs, coxeter_word(K), longest_element_word(rs, J))


def class_eval(rs: RootSystem, K: Iterable[int], J: Iterable[int]) -> LocalizationValue:
    """Public wrapper for p_{v_K}(w_J) accepting arbitrary index iterables."""
    return _class_eval(rs, _normalize_subset(rs, K), _normalize_subset(rs, J))


def _subsets_ordered(rank: int) -> list[Subset]:
    """All index subsets, by cardinality then lexicographic: inclusion-compatible."""
    universe = range(1, rank + 1)
    return [
        frozenset(combo)
        for size in range(rank + 1)
        for combo in combinations(universe, size)
    ]


@dataclass(frozen=True)
class EvaluationTable:
    """Evaluations p_{v_K'}(w_J) for all pairs K' within J.

    Entries with K' not contained in J are identically zero and are not
    stored; ``value`` supplies them.  The diagonal entries (K', K') have
    positive coefficient, which makes the table invertible by
    back-substitution along inclusion.
    """

    rank: int
    entries: Mapping[tuple[Subset, Subset], LocalizationValue]

    def value(self, class_index: Iterable[int], fixed_point: Iterable[int]) -> LocalizationValue:
        kp, j = frozenset(class_index), frozenset(fixed_point)
        if kp <= j:
            return self.entries[(kp, j)]
        return LocalizationValue(0, len(kp))


def build_evaluation_table(rs: RootSystem) -> EvaluationTable:
    """Evaluate every class at every fixed point containing its index set."""
    subsets = _subsets_ordered(rs.rank)
    entries = {
        (kp, j): _class_eval(rs, kp, j) for j in subsets for kp in subsets if kp <= j
    }
    return EvaluationTable(rank=rs.rank, entries=entries)


def monk_structure_constants(
    rs: RootSystem, i: int, K: Iterable[int]
) -> StructureConstants:
    """Expand p_{s_i} * p_{v_K} in Peterson classes via fixed-point evaluation.

    Solves for the constants c_{K'} in

        p_{s_i} * p_{v_K} = sum_{K'} c_{K'} * t^(1+|K|-|K'|) * p_{v_{K'}}

    by equating evaluations at all 2^rank fixed points w_J and
    back-substituting along the inclusion-triangular grid.  Every rhs term
    has t-degree 1+|K| like the product, so the system acts on
    coefficients alone.  Only nonzero constants are returned, each paired
    with its t-exponent.

    >>> from peterschub.rootsys import build_root_system
    >>> rs = build_root_system("A2")
    >>> {tuple(sorted(kp)): c for kp, c in monk_structure_constants(rs, 1, {2}).items()}
    {(1, 2): (Fraction(2, 1), 0)}
    >>> {tuple(sorted(kp)): c for kp, c in monk_structure_constants(rs, 1, {1}).items()}
    {(1,): (Fraction(1, 1), 1), (1, 2): (Fraction(1, 1), 0)}
    """
    rs.check_index(i)
    K = _normalize_subset(rs, K)
    solved: dict[Subset, Fraction] = {}
    for J in _subsets_ordered(rs.rank):
        acc = Fraction(monk_eval(rs, i, J).coeff * _class_eval(rs, K, J).coeff)
        for kp, c in solved.items():
            if c and kp < J:
                acc -= c * _class_eval(rs, kp, J).coeff
        diag = _class_eval(rs, J, J).coeff
        if diag <= 0:
            raise InvariantViolation(
                f"diagonal evaluation at {sorted(J)} is {diag}; grid not triangular"
            )
        solved[J] = acc / diag
    return {
        kp: (c, 1 + len(K) - len(kp)) for kp, c in solved.items() if c
    }


def expansion_residuals(
    rs: RootSystem,
    i: int,
    K: Iterable[int],
    constants: Mapping[Subset, tuple[Fraction, int]],
) -> dict[Subset, Fraction]:
    """Residual of the Monk expansion at every fixed point; all zero when exact.

    Recomputes both sides of the expansion from scratch at each w_J and
    returns lhs minus rhs coefficients.  Rejects a constants map whose
    t-exponents do not balance the degrees, since its residual would not
    be a comparison of like monomials.
    """
    rs.check_index(i)
    K = _normalize_subset(rs, K)
    for kp, (_, exponent) in constants.items():
        if exponent != 1 + len(K) - len(kp):
            raise Rejected(
                f"exponent {exponent} for {sorted(kp)} does not balance degrees"
            )
    out: dict[Subset, Fraction] = {}
    for J in _subsets_ordered(rs.rank):
        lhs = Fraction(monk_eval(rs, i, J).coeff * _class_eval(rs, K, J).coeff)
        rhs = sum(
            (c * _class_eval(rs, kp, J).coeff for kp, (c, _) in constants.items()),
            Fraction(0),
        )
        out[J] = lhs - rhs
    return out
