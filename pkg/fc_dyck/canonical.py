"""
Decreasing segments T_i^m and canonical factorizations.

Every element of W has a unique normal form T^1_{i_1} T^2_{i_2} ... T^n_{i_n}
with 1 <= i_j <= j+1 (i_j = j+1 meaning an empty segment). A fully commutative
element is uniquely T_{i_1}^{m_1} ... T_{i_l}^{m_l} with strictly increasing
i's and m's.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Sequence, Tuple

from .config import LOGGER_NAME
from .coxeter import (
    Letters,
    Permutation,
    Word,
    commutation_class_letters,
    is_fully_commutative,
    is_reduced,
    word_to_perm,
)
from .exceptions import NotFullyCommutative

logger = logging.getLogger(LOGGER_NAME)


@dataclass(frozen=True, order=True)
class Segment:
    """T_i^m = [m, m-1, ..., i]. Empty segments are never stored."""

    i: int
    m: int

    def __post_init__(self):
        if not 1 <= self.i <= self.m:
            raise ValueError(f"Segment needs 1 <= i <= m, got i={self.i}, m={self.m}")

    @property
    def length(self) -> int:
        return self.m - self.i + 1

    @property
    def letters(self) -> Letters:
        return tuple(range(self.m, self.i - 1, -1))

    def __str__(self) -> str:
        return f"T_{self.i}^{self.m}"


def segment_word(s: Segment, rank: int = 0) -> Word:
    """The decreasing run from m down to i, as a word of the given rank (default m)."""
    return Word(s.letters, rank or s.m)


@dataclass(frozen=True)
class CanonicalForm:
    """Ordered segments with strictly increasing i's and m's, all m <= rank."""

    segments: Tuple[Segment, ...]
    rank: int

    def __post_init__(self):
        segments = tuple(self.segments)
        object.__setattr__(self, "segments", segments)
        for s in segments:
            if s.m > self.rank:
                raise ValueError(f"{s} does not fit in rank {self.rank}")
        for left, right in zip(segments, segments[1:]):
            if not (left.i < right.i and left.m < right.m):
                raise ValueError(
                    f"Segments must have strictly increasing i and m, got {left} then {right}"
                )

    @classmethod
    def from_pairs(cls, pairs: Sequence[Sequence[int]], rank: int) -> "CanonicalForm":
        return cls(tuple(Segment(i, m) for i, m in pairs), rank)

    @property
    def pairs(self) -> Tuple[Tuple[int, int], ...]:
        return tuple((s.i, s.m) for s in self.segments)

    @property
    def length(self) -> int:
        return sum(s.length for s in self.segments)

    def flatten(self) -> Word:
        return Word(tuple(letter for s in self.segments for letter in s.letters), self.rank)

    def __str__(self) -> str:
        return " ".join(str(s) for s in self.segments) or "[~]"

    def to_json(self) -> Dict[str, Any]:
        return {"segments": [list(pair) for pair in self.pairs], "rank": self.rank}


@dataclass(frozen=True)
class GeneralNormalForm:
    """Indices (i_1, ..., i_n) of T^1_{i_1} ... T^n_{i_n}, with i_j = j+1 for an empty segment."""

    indices: Tuple[int, ...]

    def __post_init__(self):
        for j, i in enumerate(self.indices, start=1):
            if not 1 <= i <= j + 1:
                raise ValueError(f"Index i_{j}={i} is outside 1..{j + 1}")

    @property
    def rank(self) -> int:
        return len(self.indices)

    @property
    def segments(self) -> Tuple[Segment, ...]:
        return tuple(Segment(i, j) for j, i in enumerate(self.indices, start=1) if i <= j)

    def word(self) -> Word:
        return Word(tuple(letter for s in self.segments for letter in s.letters), self.rank)


def normal_form_of_perm(p: Permutation) -> GeneralNormalForm:
    """
    Peel the last factor T^j_{i_j} = s_j ... s_{i_j} off repeatedly.

    Right-multiplying by T^j_i carries the value j+1 from position j+1 to position i,
    so i_j is simply where j+1 sits once the larger values are removed.
    """
    images = list(p.images)
    indices: List[int] = []
    for j in range(p.size - 1, 0, -1):
        position = images.index(j + 1)
        indices.append(position + 1)
        del images[position]
    return GeneralNormalForm(tuple(reversed(indices)))


def general_normal_form(w: Word) -> GeneralNormalForm:
    return normal_form_of_perm(word_to_perm(w))


def word_of_perm(p: Permutation) -> Word:
    """A reduced word for p, read off its normal form."""
    return normal_form_of_perm(p).word()


def all_normal_forms(rank: int) -> List[GeneralNormalForm]:
    """Every index tuple allowed by the normal-form lemma; there are (rank+1)! of them."""
    ranges = [range(1, j + 2) for j in range(1, rank + 1)]
    return [GeneralNormalForm(tuple(indices)) for indices in itertools.product(*ranges)]


def split_decreasing_runs(letters: Sequence[int]) -> List[Segment]:
    """Greedy split into maximal runs m, m-1, ..., i."""
    segments: List[Segment] = []
    start = 0
    for k in range(1, len(letters) + 1):
        if k == len(letters) or letters[k] != letters[k - 1] - 1:
            segments.append(Segment(letters[k - 1], letters[start]))
            start = k
    return segments


def canonical_form_of(w: Word) -> CanonicalForm:
    """
    The unique canonical factorization of a fully commutative element.

    The lexicographically smallest word of the commutation class always starts
    each block with its largest letter and walks down, so splitting it into
    maximal decreasing runs yields the segments. CanonicalForm re-checks the
    strict increase of i's and m's on construction.

    Raises:
        NotFullyCommutative: if w is not reduced or not fully commutative
    """
    if not is_reduced(w):
        raise NotFullyCommutative(f"Word {w} is not reduced, so it has no canonical form")
    if not is_fully_commutative(w):
        raise NotFullyCommutative(f"Word {w} is not fully commutative")
    smallest = commutation_class_letters(w.letters)[0]
    return CanonicalForm(tuple(split_decreasing_runs(smallest)), w.rank)


def _extend(
    rank: int, prefix: Tuple[Segment, ...], last_i: int, last_m: int, remaining: int
) -> Iterator[Tuple[Segment, ...]]:
    if remaining == 0:
        yield prefix
        return
    for i in range(last_i + 1, rank + 1):
        for m in range(max(i, last_m + 1), rank + 1):
            size = m - i + 1
            if size > remaining:
                break
            yield from _extend(rank, prefix + (Segment(i, m),), i, m, remaining - size)


def enumerate_fc(n: int, k: int) -> List[CanonicalForm]:
    """All canonical forms of rank n with k letters, in lexicographic order of their (i, m) pairs."""
    if n < 1:
        raise ValueError(f"Rank must be at least 1, got {n}")
    if k < 0:
        raise ValueError(f"Length must be non-negative, got {k}")
    forms = [CanonicalForm(segments, n) for segments in _extend(n, (), 0, 0, k)]
    forms.sort(key=lambda form: form.pairs)
    logger.debug(f"Enumerated {len(forms)} fully commutative elements of rank {n}, length {k}")
    return forms


def max_fc_length(n: int) -> int:
    """Longest fully commutative element of A_n has floor((n+1)^2 / 4) letters."""
    return (n + 1) ** 2 // 4


def count_fc(n: int) -> int:
    return sum(len(enumerate_fc(n, k)) for k in range(max_fc_length(n) + 1))
