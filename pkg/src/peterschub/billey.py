"""Localization evaluations p_v(w), projected to a single parameter t.

The projection sends each positive root to (its height) * t.  Under it,
the evaluation of the class of v at the fixed point w becomes

    p_v(w) = t^{l(v)} * sum over index subsets of a reduced word of w
             that spell a reduced word of v, of the product of the
             inversion heights at those indices.

Values are held as an exact integer coefficient together with the t-degree
l(v).  Two evaluators are provided: a weighted-subsequence dynamic program
(fast; the default everywhere), and an explicit subword enumerator that
mirrors the definition and serves as its independent oracle.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .errors import Rejected
from .rootsys import RootSystem, height
from .weyl import Word, inversion_roots, is_reduced, reduced_words


@dataclass(frozen=True)
class LocalizationValue:
    """An exact value coeff * t^degree with coeff >= 0."""

    coeff: int
    degree: int

    def __str__(self) -> str:
        if self.degree == 0:
            return str(self.coeff)
        t = "t" if self.degree == 1 else f"t^{self.degree}"
        return f"{self.coeff}*{t}"


def inversion_heights(rs: RootSystem, word: Sequence[int]) -> list[int]:
    """Heights of the inversion roots of a reduced word, in position order.

    >>> from peterschub.rootsys import build_root_system
    >>> inversion_heights(build_root_system("A2"), (1, 2, 1))
    [1, 2, 1]
    """
    return [height(r) for r in inversion_roots(rs, word)]


def _check_pair(rs: RootSystem, v: Sequence[int], w: Sequence[int]) -> tuple[Word, Word]:
    v, w = tuple(v), tuple(w)
    if not is_reduced(rs, v):
        raise Rejected(f"class word {v} is not reduced")
    if not is_reduced(rs, w):
        raise Rejected(f"fixed-point word {w} is not reduced")
    return v, w


@lru_cache(maxsize=None)
def _patterns(rs: RootSystem, v: Word) -> tuple[Word, ...]:
    """Reduced words of v, cached: evaluations repeat v across many w."""
    return tuple(reduced_words(rs, v))


def _pattern_dp(pattern: Word, word: Word, weights: Sequence[int]) -> int:
    """Weighted count of embeddings of ``pattern`` as a subsequence of ``word``.

    dp[k] accumulates, over embeddings of the first k pattern letters into
    the prefix scanned so far, the product of the matched weights.
    """
    dp = [0] * (len(pattern) + 1)
    dp[0] = 1
    for letter, weight in zip(word, weights):
        for k in range(len(pattern), 0, -1):
            if pattern[k - 1] == letter and dp[k - 1]:
                dp[k] += dp[k - 1] * weight
    return dp[len(pattern)]


def billey_eval_dp(rs: RootSystem, v: Sequence[int], w: Sequence[int]) -> LocalizationValue:
    """Evaluate p_v(w) by dynamic programming over each pattern in R(v).

    Distinct patterns match disjoint families of index subsets (an index
    subset determines its letter sequence), so summing the per-pattern
    totals is exact.

    >>> from peterschub.rootsys import build_root_system
    >>> rs = build_root_system("A2")
    >>> billey_eval_dp(rs, (1, 2), (1, 2, 1))
    LocalizationValue(coeff=2, degree=2)
    """
    v, w = _check_pair(rs, v, w)
    weights = inversion_heights(rs, w)
    total = 0
    for pattern in _patterns(rs, v):
        total += _pattern_dp(pattern, w, weights)
    return LocalizationValue(coeff=total, degree=len(v))


def earliest_sound_window(rs: RootSystem, v: Sequence[int], w: Sequence[int]) -> int:
    """Smallest prefix length of ``w`` that provably loses no subwords of v.

    Every embedding of a pattern u ends at a position carrying u's final
    letter, so restricting to the prefix containing the last occurrence of
    every pattern's final letter (and at least l(v) positions) is safe.
    """
    v, w = _check_pair(rs, v, w)
    window = len(v)
    for pattern in _patterns(rs, v):
        if not pattern:
            continue
        last = pattern[-1]
        for pos in range(len(w), 0, -1):
            if w[pos - 1] == last:
                window = max(window, pos)
                break
    return window


def billey_eval_bruteforce(
    rs: RootSystem,
    v: Sequence[int],
    w: Sequence[int],
    window: int | None = None,
    full_subset_scan: bool = False,
) -> LocalizationValue:
    """Evaluate p_v(w) by explicit subword enumeration.

    Enumerates index subsets of size l(v) within the first ``window``
    positions of ``w`` whose letter sequence is a reduced word of v, and
    sums the products of inversion heights.  The default backtracks over
    letter positions; ``full_subset_scan=True`` instead tests every
    combination of ``window`` choose l(v) indices, which is faithful to
    the classical approach but exponentially slower.

    An explicit window must be sound: at least l(v), and no smaller than
    the last occurrence in ``w`` of any pattern's final letter.  Unsound
    windows are rejected with the earliest sound window in the diagnostic.
    """
    v, w = _check_pair(rs, v, w)
    if window is None:
        window = len(w)
    else:
        if window > len(w):
            raise Rejected(f"window {window} exceeds word length {len(w)}")
        sound = earliest_sound_window(rs, v, w)
        if window < sound:
            raise Rejected(
                f"window {window} may lose subwords of v; "
                f"earliest sound window is {sound}"
            )
    weights = inversion_heights(rs, w)
    patterns = _patterns(rs, v)
    if full_subset_scan:
        total = _subset_scan(w, weights, patterns, window, len(v))
    else:
        total = sum(_backtrack(p, w, weights, window) for p in patterns)
    return LocalizationValue(coeff=total, degree=len(v))


def _backtrack(pattern: Word, word: Word, weights: Sequence[int], window: int) -> int:
    """Sum of weight products over embeddings of ``pattern`` in ``word[:window]``."""
    if not pattern:
        return 1
    positions: dict[int, list[int]] = {}
    for pos in range(window):
        positions.setdefault(word[pos], []).append(pos)
    rows = [positions.get(letter, []) for letter in pattern]
    if any(not row for row in rows):
        return 0
    depth = len(pattern)
    total = 0

    def walk(k: int, start: int, prod: int) -> None:
        nonlocal total
        if k == depth:
            total += prod
            return
        row = rows[k]
        for idx in range(bisect_left(row, start), len(row)):
            pos = row[idx]
            if window - pos < depth - k:
                break
            walk(k + 1, pos + 1, prod * weights[pos])

    walk(0, 0, 1)
    return total


def _subset_scan(
    word: Word,
    weights: Sequence[int],
    patterns: Sequence[Word],
    window: int,
    size: int,
) -> int:
    """Literal scan over all index subsets of the window (oracle fidelity mode)."""
    wanted = set(patterns)
    total = 0
    for subset in combinations(range(window), size):
        if tuple(word[p] for p in subset) in wanted:
            prod = 1
            for p in subset:
                prod *= weights[p]
            total += prod
    return total
