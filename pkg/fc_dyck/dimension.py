"""
Dimensions of homogeneous modules from Dyck paths.

Every peak of height >= 2 owns an extended ascent: its ascent prolonged down to
the x-axis. Each block T_i^m lying on one gets a subpath P_D(i, m) and a hook
value p_D(i, m); when every ascent not starting on the axis has length 1, the
dimension is k! / ∏ p_D(i, m). Otherwise the path is mirrored, or the element
is inverted, and as a last resort the reduced words are counted.
"""
import logging
import math
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Tuple

from .bijection import phi, psi
from .canonical import CanonicalForm, canonical_form_of, enumerate_fc, max_fc_length
from .config import LOGGER_NAME, max_height
from .coxeter import Root, Word, are_neighbors, inverse_word, is_reduced, root_action
from .dyck import DOWN, UP, DyckPath, peak_block, peaks, reverse_path, statistic_k
from .exceptions import BlockNotOnAscent, IndexOutOfRange, NotReduced
from .homogeneity import component_of

logger = logging.getLogger(LOGGER_NAME)

FORMULA = "formula"
REVERSE = "reverse"
INVERSE = "inverse"
EXHAUSTIVE = "exhaustive"

METHODS = (FORMULA, REVERSE, INVERSE, EXHAUSTIVE)


@dataclass(frozen=True)
class AscentBlock:
    """Block T_i^m on the extended ascent of the owner-th designated peak (1-based)."""

    i: int
    m: int
    owner: int


@dataclass(frozen=True)
class Subpath:
    """A lattice path from (start, 0) back to the axis."""

    start: int
    steps: str

    @property
    def ascent_steps(self) -> int:
        return self.steps.count(UP)

    def points(self) -> List[Tuple[int, int]]:
        x, y = self.start, 0
        result = [(x, y)]
        for step in self.steps:
            x, y = x + 1, y + (1 if step == UP else -1)
            result.append((x, y))
        return result

    def to_json(self) -> Dict[str, Any]:
        return {"start": self.start, "steps": self.steps}


@dataclass(frozen=True)
class DimensionResult:
    value: int
    method: str
    p_values: Dict[Tuple[int, int], int] = field(default_factory=dict)
    evaluated_on: Optional[DyckPath] = None

    def to_json(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"value": str(self.value), "method": self.method}
        if self.method != EXHAUSTIVE:
            payload["p_values"] = [
                {"i": i, "m": m, "p": p} for (i, m), p in sorted(self.p_values.items())
            ]
        if self.evaluated_on is not None:
            payload["evaluated_on"] = self.evaluated_on.steps
        return payload


def _designated_peaks(d: DyckPath) -> List[Tuple[int, int, int, int]]:
    """(i, m, foot, apex height) for every peak of height >= 2, left to right."""
    result = []
    for peak in peaks(d):
        block = peak_block(peak)
        if block is not None:
            i, m = block
            result.append((i, m, peak.position - peak.height, peak.height))
    return result


def extended_ascent_blocks(d: DyckPath) -> List[AscentBlock]:
    return [
        AscentBlock(i, m, owner)
        for owner, (i, top, _, _) in enumerate(_designated_peaks(d), start=1)
        for m in range(i, top + 1)
    ]


def _find_block(d: DyckPath, i: int, m: int) -> AscentBlock:
    for block in extended_ascent_blocks(d):
        if block.i == i and block.m == m:
            return block
    raise BlockNotOnAscent(f"Block T_{i}^{m} is not on an extended ascent of {d.steps}")


def subpath_PD(d: DyckPath, i: int, m: int) -> Subpath:
    """
    P_D(i, m): climb from the axis to the top of block T_i^m, then descend; on
    meeting another extended ascent (below its apex) take one step up and keep
    descending; stop on the axis.
    """
    _find_block(d, i, m)
    foot = 2 * i - 2
    ascents = [(start, top) for _, _, start, top in _designated_peaks(d) if start != foot]

    def on_other_ascent(x: int, y: int) -> bool:
        return any(x - y == start and 0 <= y < top for start, top in ascents)

    steps = [UP] * (m - i + 2)
    x, y = foot + len(steps), len(steps)
    while True:
        x, y = x + 1, y - 1
        steps.append(DOWN)
        if y == 0:
            break
        if on_other_ascent(x, y):
            x, y = x + 1, y + 1
            steps.append(UP)
    return Subpath(start=foot, steps="".join(steps))


def p_value(d: DyckPath, i: int, m: int) -> int:
    return subpath_PD(d, i, m).ascent_steps - 1


def oracle_root(c: CanonicalForm, k_index: int, n_letter: int) -> Root:
    """
    β = α_n acted on from the right by T_{i_k}^{n-1} T_{i_{k+1}}^{m_{k+1}} ... T_{i_l}^{m_l}.

    Raises:
        IndexOutOfRange: unless 1 <= k_index <= l and i_k <= n_letter <= m_k
    """
    if not 1 <= k_index <= len(c.segments):
        raise IndexOutOfRange(f"Segment index {k_index} is outside 1..{len(c.segments)}")
    own = c.segments[k_index - 1]
    if not own.i <= n_letter <= own.m:
        raise IndexOutOfRange(f"Letter {n_letter} is outside {own.i}..{own.m} of {own}")
    letters = list(range(n_letter - 1, own.i - 1, -1))
    for later in c.segments[k_index:]:
        letters.extend(later.letters)
    return root_action(Root.simple(n_letter, c.rank), Word(tuple(letters), c.rank))


def p_value_oracle(c: CanonicalForm, k_index: int, n_letter: int) -> int:
    return oracle_root(c, k_index, n_letter).height


def satisfies_ascent_condition(d: DyckPath) -> bool:
    """Every maximal run of U steps that starts above the axis has length 1."""
    heights = d.heights()
    index = 0
    while index < len(d.steps):
        if d.steps[index] != UP:
            index += 1
            continue
        run_start = index
        while index < len(d.steps) and d.steps[index] == UP:
            index += 1
        if heights[run_start] > 0 and index - run_start > 1:
            return False
    return True


def is_dominant_minuscule(w: Word) -> bool:
    """
    Stembridge's criterion on a reduced expression: between consecutive
    occurrences of s_i sit exactly two non-commuting generators, and the last
    occurrence of s_i is followed by at most one.

    Raises:
        NotReduced: if w is not reduced
    """
    if not is_reduced(w):
        raise NotReduced(f"Word {w} is not reduced")
    letters = w.letters
    last_seen: Dict[int, int] = {}
    for s, letter in enumerate(letters):
        if letter in last_seen:
            between = sum(
                1 for t in range(last_seen[letter] + 1, s) if are_neighbors(letters[t], letter)
            )
            if between != 2:
                return False
        last_seen[letter] = s
    for letter, r in last_seen.items():
        after = sum(1 for t in range(r + 1, len(letters)) if are_neighbors(letters[t], letter))
        if after > 1:
            return False
    return True


def _formula(d: DyckPath) -> Optional[Tuple[int, Dict[Tuple[int, int], int]]]:
    if not satisfies_ascent_condition(d):
        return None
    p_values = {(b.i, b.m): p_value(d, b.i, b.m) for b in extended_ascent_blocks(d)}
    k = statistic_k(d)
    value, remainder = divmod(math.factorial(k), math.prod(p_values.values()))
    if remainder:
        raise ArithmeticError(f"{k}! is not divisible by the hook product of {d.steps}")
    return value, p_values


def _candidates(d: DyckPath) -> Iterator[Tuple[str, DyckPath]]:
    yield FORMULA, d
    yield REVERSE, reverse_path(d)
    yield INVERSE, phi(canonical_form_of(inverse_word(psi(d).flatten())))


def formula_dimensions(d: DyckPath) -> Dict[str, DimensionResult]:
    """Every hook-formula strategy that applies to D, keyed by method; all of them agree."""
    results: Dict[str, DimensionResult] = {}
    for method, candidate in _candidates(d):
        result = _formula(candidate)
        if result is not None:
            results[method] = DimensionResult(result[0], method, result[1], candidate)
    return results


def dimension(d: DyckPath) -> DimensionResult:
    """
    Dimension of the homogeneous module S(Ψ(D)).

    Tries, in this order: the hook formula on D, on the mirrored path, on the
    path of the inverse element, and finally counts the component's words.
    """
    for method, candidate in _candidates(d):
        result = _formula(candidate)
        if result is not None:
            return DimensionResult(result[0], method, result[1], candidate)

    element = psi(d)
    k = statistic_k(d)
    if k > max_height():
        logger.warning(f"Counting reduced words of a length-{k} element for {d.steps}")
    start = time.time()
    size = component_of(element.flatten()).size
    logger.debug(f"Exhaustive count for {d.steps}: {size} words in {time.time() - start:.2f}s")
    return DimensionResult(size, EXHAUSTIVE, {}, None)


def dimension_of_word(w: Word) -> DimensionResult:
    return dimension(phi(canonical_form_of(w)))


def method_census(n: int) -> Dict[str, int]:
    """How often each strategy decides the dimension, over all fully commutative elements of rank n."""
    counts: Counter = Counter()
    for k in range(max_fc_length(n) + 1):
        for form in enumerate_fc(n, k):
            counts[dimension(phi(form)).method] += 1
    logger.info(f"Dimension methods at rank {n}: {dict(counts)}")
    return {method: counts.get(method, 0) for method in METHODS}


def first_peak_formula(sub: Subpath) -> int:
    """(number of peaks) + (height of the first peak) - 2, an equivalent reading of p_D."""
    path = DyckPath(sub.steps)
    tops = peaks(path)
    return len(tops) + tops[0].height - 2
