"""
Weight graphs G_α, the homogeneity condition and homogeneous components.

Admissible transpositions swap adjacent letters that are neither equal nor
neighbors, which in type A is the same move as a commutation, so components
are computed with the commutation BFS from coxeter.
"""
import itertools
import logging
import time
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, Iterator, List, Set, Tuple

from .canonical import CanonicalForm, canonical_form_of, enumerate_fc
from .config import LOGGER_NAME, max_height
from .coxeter import Letters, Word, are_neighbors, commutation_class_letters, commute
from .exceptions import InvalidWord, NotHomogeneous, TooLarge

logger = logging.getLogger(LOGGER_NAME)


@dataclass(frozen=True)
class Content:
    """α = Σ c_i α_i ∈ Q_+; counts[i-1] is c_i."""

    counts: Tuple[int, ...]

    def __post_init__(self):
        counts = tuple(self.counts)
        if not counts:
            raise InvalidWord("Content needs a rank of at least 1")
        if any(c < 0 for c in counts):
            raise InvalidWord(f"Content coefficients must be non-negative, got {counts}")
        object.__setattr__(self, "counts", counts)

    @classmethod
    def of(cls, w: Word) -> "Content":
        return cls(tuple(w.letters.count(i) for i in range(1, w.rank + 1)))

    @property
    def rank(self) -> int:
        return len(self.counts)

    @property
    def height(self) -> int:
        return sum(self.counts)

    def to_json(self) -> Dict[str, int]:
        return {str(i): c for i, c in enumerate(self.counts, start=1) if c}


@dataclass(frozen=True)
class Component:
    """All reduced words of one fully commutative element, sorted, with its canonical form."""

    words: Tuple[Word, ...]
    canonical: CanonicalForm

    @property
    def rank(self) -> int:
        return self.canonical.rank

    @property
    def size(self) -> int:
        return len(self.words)

    @property
    def content(self) -> Content:
        return Content.of(self.canonical.flatten())

    @cached_property
    def positions(self) -> Dict[Word, int]:
        return {w: index for index, w in enumerate(self.words)}

    def __contains__(self, w: object) -> bool:
        return w in self.positions

    def to_json(self) -> Dict[str, Any]:
        return {
            "rank": self.rank,
            "canonical": self.canonical.flatten().to_json(),
            "segments": [list(pair) for pair in self.canonical.pairs],
            "size": self.size,
            "words": [w.to_json() for w in self.words],
        }


@dataclass(frozen=True)
class WeightGraphComponent:
    words: Tuple[Word, ...]
    homogeneous: bool


def is_homogeneous_word(w: Word) -> bool:
    """
    Every two consecutive occurrences of a letter must enclose at least two
    occurrences of its neighbors. Only the undirected diagram is consulted.
    """
    last_seen: Dict[int, int] = {}
    for s, letter in enumerate(w.letters):
        if letter in last_seen:
            r = last_seen[letter]
            between = sum(1 for t in range(r + 1, s) if are_neighbors(w.letters[t], letter))
            if between < 2:
                return False
        last_seen[letter] = s
    return True


def admissible_positions(w: Word) -> List[int]:
    """1-based r such that s_r swaps two letters that are neither equal nor neighbors."""
    return [r for r in range(1, len(w)) if commute(w.letters[r - 1], w.letters[r])]


def component_of(w: Word) -> Component:
    """
    The homogeneous component containing w.

    Raises:
        NotHomogeneous: if w violates the homogeneity condition
    """
    if not is_homogeneous_word(w):
        raise NotHomogeneous(f"Word {w} is not homogeneous")
    words = tuple(Word(letters, w.rank) for letters in commutation_class_letters(w.letters))
    return Component(words=words, canonical=canonical_form_of(w))


def words_with_content(a: Content) -> Iterator[Letters]:
    """⟨I⟩_α in lexicographic order."""
    counts = list(a.counts)
    word: List[int] = []

    def extend() -> Iterator[Letters]:
        if len(word) == a.height:
            yield tuple(word)
            return
        for index, count in enumerate(counts):
            if count:
                counts[index] -= 1
                word.append(index + 1)
                yield from extend()
                word.pop()
                counts[index] += 1

    yield from extend()


def check_height(height: int) -> None:
    limit = max_height()
    if height > limit:
        raise TooLarge(
            f"Height {height} exceeds the exhaustive-search guard {limit} (set FC_DYCK_MAX_HEIGHT)"
        )


def weight_graph_components(a: Content) -> List[WeightGraphComponent]:
    """
    Partition ⟨I⟩_α into connected components under admissible transpositions.

    Raises:
        TooLarge: if the height of α exceeds the configured guard
    """
    check_height(a.height)
    start = time.time()
    seen: Set[Letters] = set()
    result: List[WeightGraphComponent] = []
    for letters in words_with_content(a):
        if letters in seen:
            continue
        members = commutation_class_letters(letters)
        seen.update(members)
        words = tuple(Word(member, a.rank) for member in members)
        result.append(WeightGraphComponent(words=words, homogeneous=is_homogeneous_word(words[0])))
    logger.debug(
        f"Weight graph of {a.to_json()}: {len(seen)} words, {len(result)} components "
        f"in {time.time() - start:.2f}s"
    )
    return result


def contents_of_height(rank: int, height: int) -> Iterator[Content]:
    """Every α of the given rank and height."""
    for cut in itertools.combinations(range(height + rank - 1), rank - 1):
        bounds = (-1,) + cut + (height + rank - 1,)
        yield Content(tuple(bounds[j + 1] - bounds[j] - 1 for j in range(rank)))


def homogeneous_components(n: int, k: int) -> List[Component]:
    """All homogeneous components of rank n and height k, found through canonical forms."""
    return [component_of(form.flatten()) for form in enumerate_fc(n, k)]
