"""Weyl group elements as words in the simple reflections.

Words are tuples of 1-based generator indices.  A word ``(j_1, ..., j_l)``
denotes the product ``s_{j_1} s_{j_2} ... s_{j_l}`` acting on roots from the
left, so the last letter acts first:

    act(word, beta) = s_{j_1}(s_{j_2}(... s_{j_l}(beta) ...)).

Internally an element is represented by its action on the simple-root
basis, stored as a tuple of columns: column j is the image of alpha_j in
simple-root coordinates.  This keeps every operation exact and makes the
two facts we lean on O(rank) reads:

  * appending letter j is length-increasing   iff  column j is positive;
  * the i-th inversion root of a reduced word is column ``j_i`` of the
    prefix element ``s_{j_1} ... s_{j_{i-1}}``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import Rejected
from .rootsys import Root, RootSystem, is_negative_root, is_positive_root, reflect

Word = tuple[int, ...]

# Element matrix: column j (0-based) is the image of alpha_{j+1}.
Matrix = tuple[Root, ...]

REDUCED_WORD_LIMIT = 10**6
_COUNT_MEMO_CAP = 300_000


def _check_word(rs: RootSystem, word: Sequence[int]) -> Word:
    word = tuple(word)
    for j in word:
        rs.check_index(j)
    return word


def identity_matrix(rank: int) -> Matrix:
    return tuple(
        tuple(1 if k == j else 0 for k in range(rank)) for j in range(rank)
    )


def _mul_right(rs: RootSystem, mat: Matrix, j: int) -> Matrix:
    """Right-multiply an element matrix by s_j (1-based j).

    Column j' of w*s_j is  col_{j'} - cartan[j][j'] * col_j.
    """
    row = rs.cartan[j - 1]
    col_j = mat[j - 1]
    n = rs.rank
    return tuple(
        col if row[jp] == 0
        else tuple(col[k] - row[jp] * col_j[k] for k in range(n))
        for jp, col in enumerate(mat)
    )


def element_matrix(rs: RootSystem, word: Sequence[int]) -> Matrix:
    """The matrix of the group element spelled by ``word``.

    >>> from peterschub.rootsys import build_root_system
    >>> rs = build_root_system("A2")
    >>> element_matrix(rs, (1, 2, 1)) == element_matrix(rs, (2, 1, 2))
    True
    """
    mat = identity_matrix(rs.rank)
    for j in _check_word(rs, word):
        mat = _mul_right(rs, mat, j)
    return mat


def act(rs: RootSystem, word: Sequence[int], root: Root) -> Root:
    """Apply the element of ``word`` to a root; the empty word is the identity.

    >>> from peterschub.rootsys import build_root_system
    >>> rs = build_root_system("A2")
    >>> act(rs, (1, 2), (1, 0))
    (0, 1)
    """
    word = _check_word(rs, word)
    for j in reversed(word):
        root = reflect(rs, j, root)
    return root


def inversion_root(rs: RootSystem, word: Sequence[int], i: int) -> Root:
    """The i-th inversion root of a reduced word (1-based position).

    For ``word = (j_1, ..., j_l)`` this is
    ``s_{j_1} ... s_{j_{i-1}} (alpha_{j_i})``, a positive root whenever the
    word is reduced.  A negative result proves the word was not reduced and
    is rejected.

    >>> from peterschub.rootsys import build_root_system
    >>> rs = build_root_system("A2")
    >>> inversion_root(rs, (1, 2, 1), 2)
    (1, 1)
    """
    word = _check_word(rs, word)
    if not (1 <= i <= len(word)):
        raise Rejected(f"position {i} out of range 1..{len(word)}")
    root = act(rs, word[: i - 1], rs.simple_root(word[i - 1]))
    if not is_positive_root(root):
        raise Rejected(
            f"inversion root at position {i} is negative: word {word} is not reduced"
        )
    return root


def inversion_roots(rs: RootSystem, word: Sequence[int]) -> list[Root]:
    """All inversion roots of a reduced word, in position order.

    Rejects non-reduced words (some inversion root would be negative).
    """
    word = _check_word(rs, word)
    mat = identity_matrix(rs.rank)
    roots: list[Root] = []
    for pos, j in enumerate(word, start=1):
        root = mat[j - 1]
        if not is_positive_root(root):
            raise Rejected(
                f"inversion root at position {pos} is negative: "
                f"word {word} is not reduced"
            )
        roots.append(root)
        mat = _mul_right(rs, mat, j)
    return roots


def is_reduced(rs: RootSystem, word: Sequence[int]) -> bool:
    """Whether each letter of ``word`` extends the prefix length-increasingly.

    Equivalently: all inversion roots are positive.

    >>> from peterschub.rootsys import build_root_system
    >>> rs = build_root_system("A2")
    >>> is_reduced(rs, (1, 1)), is_reduced(rs, (1, 2, 1)), is_reduced(rs, (1, 2, 1, 2))
    (False, True, False)
    """
    word = _check_word(rs, word)
    mat = identity_matrix(rs.rank)
    for j in word:
        if not is_positive_root(mat[j - 1]):
            return False
        mat = _mul_right(rs, mat, j)
    return True


def _normalize_subset(rs: RootSystem, subset: Iterable[int]) -> frozenset[int]:
    out = frozenset(subset)
    for j in out:
        rs.check_index(j)
    return out


def longest_element_word(rs: RootSystem, subset: Iterable[int]) -> Word:
    """Canonical reduced word for the longest element of a parabolic subgroup.

    Greedy: starting from the identity, repeatedly append the smallest
    index in ``subset`` whose appending is length-increasing.  The result
    has length equal to the number of positive roots supported on the
    subset, and every index of the subset is a descent of it.

    >>> from peterschub.rootsys import build_root_system
    >>> longest_element_word(build_root_system("A2"), {1, 2})
    (1, 2, 1)
    """
    subset = _normalize_subset(rs, subset)
    order = sorted(subset)
    mat = identity_matrix(rs.rank)
    word: list[int] = []
    while True:
        for j in order:
            if is_positive_root(mat[j - 1]):
                word.append(j)
                mat = _mul_right(rs, mat, j)
                break
        else:
            return tuple(word)


def _count_reduced_words(rs: RootSystem, mat: Matrix, limit: int) -> int:
    """Number of reduced words of the element ``mat``, capped at ``limit``.

    Memoized over the weak-order ideal below the element; rejects (rather
    than answers wrongly) when either the count or the memo size blows
    past its cap.
    """
    identity = identity_matrix(rs.rank)
    memo: dict[Matrix, int] = {identity: 1}

    def count(m: Matrix) -> int:
        cached = memo.get(m)
        if cached is not None:
            return cached
        total = 0
        for j in range(1, rs.rank + 1):
            if is_negative_root(m[j - 1]):
                total += count(_mul_right(rs, m, j))
        if total > limit:
            raise Rejected(
                f"element has more than {limit} reduced words; refusing to enumerate"
            )
        if len(memo) > _COUNT_MEMO_CAP:
            raise Rejected(
                "weak-order ideal below the element is too large to count "
                "reduced words; refusing to enumerate"
            )
        memo[m] = total
        return total

    return count(mat)


def reduced_words(rs: RootSystem, word: Sequence[int]) -> list[Word]:
    """All reduced words of the element spelled by a reduced word.

    Enumerates by recursion on right descents and returns the complete set
    in lexicographic order.  Rejects non-reduced input and elements with
    more than ``REDUCED_WORD_LIMIT`` reduced words.

    >>> from peterschub.rootsys import build_root_system
    >>> rs = build_root_system("A2")
    >>> reduced_words(rs, (1, 2, 1))
    [(1, 2, 1), (2, 1, 2)]
    """
    word = _check_word(rs, word)
    if not is_reduced(rs, word):
        raise Rejected(f"word {word} is not reduced")
    target = element_matrix(rs, word)
    _count_reduced_words(rs, target, REDUCED_WORD_LIMIT)

    identity = identity_matrix(rs.rank)
    out: list[Word] = []
    suffix: list[int] = []

    def walk(m: Matrix) -> None:
        if m == identity:
            out.append(tuple(reversed(suffix)))
            return
        for j in range(1, rs.rank + 1):
            if is_negative_root(m[j - 1]):
                suffix.append(j)
                walk(_mul_right(rs, m, j))
                suffix.pop()

    walk(target)
    out.sort()
    return out


def braid_variant(rs: RootSystem, word: Sequence[int]) -> Word | None:
    """A different reduced word of the same element, or None if unique.

    Applies the first available commutation (swap adjacent letters whose
    generators commute) or, failing that, the first short braid move
    aba -> bab between generators joined by a single bond.  Words related
    by such moves spell the same element, so the result is again reduced.

    >>> from peterschub.rootsys import build_root_system
    >>> braid_variant(build_root_system("A2"), (1, 2, 1))
    (2, 1, 2)
    >>> braid_variant(build_root_system("A2"), (1, 2)) is None
    True
    """
    word = _check_word(rs, word)
    cartan = rs.cartan
    for k in range(len(word) - 1):
        a, b = word[k], word[k + 1]
        if a != b and cartan[a - 1][b - 1] == 0:
            return word[:k] + (b, a) + word[k + 2 :]
    for k in range(len(word) - 2):
        a, b, c = word[k], word[k + 1], word[k + 2]
        if a == c and a != b and cartan[a - 1][b - 1] * cartan[b - 1][a - 1] == 1:
            return word[:k] + (b, a, b) + word[k + 3 :]
    return None


def element_words(
    rs: RootSystem,
    max_length: int | None = None,
    limit: int = 10**6,
) -> list[Word]:
    """One canonical reduced word for every group element, shortest first.

    Breadth-first walk of the right weak order.  Within each length the
    elements appear by lexicographic word, and each element's recorded
    word is the lexicographically smallest among its reduced words of
    minimal length (i.e. the lex-smallest reduced word).  A
    ``max_length`` bound truncates the walk; the element count is capped
    at ``limit`` since several types are astronomically large.

    >>> from peterschub.rootsys import build_root_system
    >>> element_words(build_root_system("A2"))
    [(), (1,), (2,), (1, 2), (2, 1), (1, 2, 1)]
    """
    identity = identity_matrix(rs.rank)
    seen: set[Matrix] = {identity}
    out: list[Word] = [()]
    frontier: list[tuple[Word, Matrix]] = [((), identity)]
    length = 0
    while frontier and (max_length is None or length < max_length):
        nxt: list[tuple[Word, Matrix]] = []
        for word, mat in frontier:
            for j in range(1, rs.rank + 1):
                if is_positive_root(mat[j - 1]):
                    m2 = _mul_right(rs, mat, j)
                    if m2 not in seen:
                        seen.add(m2)
                        nxt.append((word + (j,), m2))
                        if len(seen) > limit:
                            raise Rejected(
                                f"more than {limit} elements; refusing to enumerate"
                            )
        nxt.sort(key=lambda pair: pair[0])
        out.extend(word for word, _ in nxt)
        frontier = nxt
        length += 1
    return out
