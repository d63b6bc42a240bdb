"""
Words in the generators of the type A_n Coxeter group W ≅ S_{n+1}, permutation
arithmetic, reducedness, full commutativity and the right action on roots.

Generators are 1-based (s_1, ..., s_n) and every Word carries its rank n.
"""
import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

from .config import LOGGER_NAME
from .exceptions import InvalidWord, NotReduced

logger = logging.getLogger(LOGGER_NAME)

Letters = Tuple[int, ...]


def _is_index(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def are_neighbors(a: int, b: int) -> bool:
    """Adjacent vertices of the Dynkin diagram 1 - 2 - ... - n."""
    return abs(a - b) == 1


def commute(a: int, b: int) -> bool:
    """s_a and s_b commute and are distinct (an admissible swap)."""
    return abs(a - b) >= 2


@dataclass(frozen=True)
class Word:
    """A finite sequence of generator indices in 1..rank."""

    letters: Letters
    rank: int

    def __post_init__(self):
        if not _is_index(self.rank) or self.rank < 1:
            raise InvalidWord(f"Rank must be a positive integer, got {self.rank!r}")
        letters = tuple(self.letters)
        for position, letter in enumerate(letters, start=1):
            if not _is_index(letter) or not 1 <= letter <= self.rank:
                raise InvalidWord(
                    f"Letter {letter!r} at position {position} is outside 1..{self.rank}"
                )
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, index):
        return self.letters[index]

    def __str__(self) -> str:
        if not self.letters:
            return "[~]"
        if self.rank < 10:
            return "".join(str(letter) for letter in self.letters)
        return "[" + ",".join(str(letter) for letter in self.letters) + "]"

    def to_json(self) -> List[int]:
        return list(self.letters)

    def swapped(self, r: int) -> "Word":
        """s_r acting on positions: swap letters r and r+1 (1-based)."""
        letters = list(self.letters)
        letters[r - 1], letters[r] = letters[r], letters[r - 1]
        return Word(tuple(letters), self.rank)


@dataclass(frozen=True)
class Permutation:
    """One-line notation of an element of S_{rank+1}: images[k-1] is the image of k."""

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, size: int) -> "Permutation":
        return cls(tuple(range(1, size + 1)))

    @property
    def size(self) -> int:
        return len(self.images)

    @property
    def inversions(self) -> int:
        images = self.images
        return sum(
            1
            for a in range(len(images))
            for b in range(a + 1, len(images))
            if images[a] > images[b]
        )

    def inverse(self) -> "Permutation":
        result = [0] * self.size
        for position, value in enumerate(self.images, start=1):
            result[value - 1] = position
        return Permutation(tuple(result))

    def to_json(self) -> List[int]:
        return list(self.images)


@dataclass(frozen=True)
class Root:
    """Integer coefficients over the simple roots: coeffs[i-1] is the coefficient of α_i."""

    coeffs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def simple(cls, i: int, rank: int) -> "Root":
        if not 1 <= i <= rank:
            raise InvalidWord(f"Simple root index {i} is outside 1..{rank}")
        return cls(tuple(1 if k == i else 0 for k in range(1, rank + 1)))

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def coefficient(self, i: int) -> int:
        if 1 <= i <= self.rank:
            return self.coeffs[i - 1]
        return 0

    def is_positive_root(self) -> bool:
        """In type A the positive roots are α_i + ... + α_j: a contiguous block of ones."""
        support = [k for k, c in enumerate(self.coeffs) if c != 0]
        if not support:
            return False
        if any(c not in (0, 1) for c in self.coeffs):
            return False
        return support == list(range(support[0], support[-1] + 1))

    def reflect(self, i: int) -> "Root":
        """s_i(β) = β − ⟨β, α_i^∨⟩ α_i."""
        if not 1 <= i <= self.rank:
            raise InvalidWord(f"Reflection index {i} is outside 1..{self.rank}")
        pairing = 2 * self.coefficient(i) - self.coefficient(i - 1) - self.coefficient(i + 1)
        coeffs = list(self.coeffs)
        coeffs[i - 1] -= pairing
        return Root(tuple(coeffs))

    def to_json(self) -> List[int]:
        return list(self.coeffs)


def word_to_perm(w: Word) -> Permutation:
    """
    Multiply out s_{w_1} s_{w_2} ... s_{w_d} left to right.

    Each s_i multiplies on the right, i.e. swaps positions i and i+1 of the
    one-line notation, so the inversion count grows by one exactly when the
    word stays reduced.
    """
    images = list(range(1, w.rank + 2))
    for letter in w.letters:
        images[letter - 1], images[letter] = images[letter], images[letter - 1]
    return Permutation(tuple(images))


def is_reduced(w: Word) -> bool:
    return len(w) == word_to_perm(w).inversions


@lru_cache(maxsize=8192)
def _commutation_class(letters: Letters) -> Tuple[Letters, ...]:
    seen = {letters}
    queue = deque([letters])
    while queue:
        current = queue.popleft()
        for r in range(len(current) - 1):
            a, b = current[r], current[r + 1]
            if abs(a - b) >= 2:
                neighbor = current[:r] + (b, a) + current[r + 2:]
                if neighbor not in seen:
                    seen.add(neighbor)
                    queue.append(neighbor)
    if len(seen) > 1000:
        logger.debug(f"Commutation class of {letters} has {len(seen)} words")
    return tuple(sorted(seen))


def commutation_class_letters(letters: Sequence[int]) -> Tuple[Letters, ...]:
    """
    Closure of a letter sequence under swaps of adjacent letters differing by at
    least 2, sorted lexicographically.

    This is the one BFS shared by full commutativity, canonical forms and the
    weight graph (admissible transpositions are exactly these swaps).
    """
    return _commutation_class(tuple(letters))


def commutation_class(w: Word) -> List[Word]:
    return [Word(letters, w.rank) for letters in _commutation_class(w.letters)]


def _has_braid_factor(letters: Letters) -> bool:
    return any(
        letters[r] == letters[r + 2] and are_neighbors(letters[r], letters[r + 1])
        for r in range(len(letters) - 2)
    )


def is_fully_commutative(w: Word) -> bool:
    """
    True iff no word commutation-equivalent to w contains [i, i±1, i].

    Raises:
        NotReduced: if w is not a reduced word
    """
    if not is_reduced(w):
        raise NotReduced(f"Word {w} is not reduced")
    return not any(_has_braid_factor(letters) for letters in _commutation_class(w.letters))


def root_action(r: Root, w: Word) -> Root:
    """Right action: apply s_{w_1} first, then s_{w_2}, and so on."""
    if r.rank != w.rank:
        raise InvalidWord(f"Root of rank {r.rank} cannot be acted on by a word of rank {w.rank}")
    for letter in w.letters:
        r = r.reflect(letter)
    return r


def inverse_word(w: Word) -> Word:
    return Word(tuple(reversed(w.letters)), w.rank)


def reverse_diagram(w: Word) -> Word:
    """Diagram automorphism i ↦ rank + 1 − i, letter by letter."""
    return Word(tuple(w.rank + 1 - letter for letter in w.letters), w.rank)

