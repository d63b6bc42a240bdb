"""
The homogeneous module S(C) as integer matrices, and a sweep over the ten
defining relations of the KLR algebra R_α.

Basis vectors v_w are indexed by the sorted words of the component. e(w')
projects onto v_{w'} (zero when w' lies outside C), y_r acts as zero and ψ_r
sends v_w to v_{s_r w} when s_r w stays in C.
"""
import logging
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx
import numpy as np

from .config import LOGGER_NAME
from .coxeter import Letters, Word, are_neighbors
from .exceptions import IndexOutOfRange, InvalidOrientation, NotHomogeneous
from .homogeneity import Component, Content, check_height, is_homogeneous_word, words_with_content

logger = logging.getLogger(LOGGER_NAME)

RELATION_NAMES: Dict[str, str] = {
    "1.1": "idempotents",
    "1.2": "y_idempotent",
    "1.3": "psi_idempotent",
    "1.4": "y_commute",
    "1.5": "y_psi_commute",
    "1.6": "y_psi_left",
    "1.7": "y_psi_right",
    "1.8": "psi_square",
    "1.9": "psi_commute",
    "1.10": "braid",
}


@dataclass(frozen=True)
class Quiver:
    """
    Orientation of the type-A diagram 1 - 2 - ... - rank.

    arrows[j-1] is True for j → j+1 and False for j ← j+1.
    """

    rank: int
    arrows: Tuple[bool, ...]

    def __post_init__(self):
        arrows = tuple(bool(a) for a in self.arrows)
        if self.rank < 1:
            raise InvalidOrientation(f"Quiver rank must be at least 1, got {self.rank}")
        if len(arrows) != self.rank - 1:
            raise InvalidOrientation(
                f"A rank-{self.rank} quiver has {self.rank - 1} edges, got {len(arrows)} directions"
            )
        object.__setattr__(self, "arrows", arrows)

    @classmethod
    def right(cls, rank: int) -> "Quiver":
        return cls(rank, (True,) * (rank - 1))

    @classmethod
    def left(cls, rank: int) -> "Quiver":
        return cls(rank, (False,) * (rank - 1))

    def points(self, a: int, b: int) -> bool:
        """True iff there is an arrow a → b."""
        if not are_neighbors(a, b):
            return False
        forward = self.arrows[min(a, b) - 1]
        return forward if a < b else not forward

    def __str__(self) -> str:
        return "".join(">" if a else "<" for a in self.arrows)

    def to_json(self) -> Dict[str, Any]:
        return {"rank": self.rank, "edges": str(self)}


@dataclass(frozen=True, eq=False)
class ModuleAction:
    """Operators of S(C); psi[r-1] is ψ_r and y[r-1] is y_r."""

    basis: Tuple[Word, ...]
    content: Content
    psi: Tuple[np.ndarray, ...]
    y: Tuple[np.ndarray, ...]
    index: Dict[Letters, int] = field(default_factory=dict, compare=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def height(self) -> int:
        return self.content.height

    def e(self, letters: Sequence[int]) -> np.ndarray:
        """e(w'): the projection onto v_{w'}, or zero when w' is not in C."""
        matrix = np.zeros((self.dim, self.dim), dtype=np.int64)
        position = self.index.get(tuple(letters))
        if position is not None:
            matrix[position, position] = 1
        return matrix

    def identity(self) -> np.ndarray:
        return np.eye(self.dim, dtype=np.int64)

    def zero(self) -> np.ndarray:
        return np.zeros((self.dim, self.dim), dtype=np.int64)


@dataclass(frozen=True)
class RelationResult:
    relation: str
    name: str
    passed: bool
    checks: int
    witness: Optional[Dict[str, Any]] = None

    def to_json(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "relation": self.relation,
            "name": self.name,
            "passed": self.passed,
            "checks": self.checks,
        }
        if self.witness is not None:
            payload["witness"] = self.witness
        return payload


@dataclass(frozen=True)
class VerificationReport:
    component: Tuple[Word, ...]
    quiver: Quiver
    results: Tuple[RelationResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[RelationResult]:
        return [r for r in self.results if not r.passed]

    def verdicts(self) -> Dict[str, bool]:
        return {r.relation: r.passed for r in self.results}

    def to_json(self) -> Dict[str, Any]:
        return {
            "component": [w.to_json() for w in self.component],
            "orientation": str(self.quiver),
            "passed": self.passed,
            "relations": [r.to_json() for r in self.results],
        }


def _require_homogeneous(c: Component) -> None:
    if not is_homogeneous_word(c.words[0]):
        raise NotHomogeneous(f"Component of {c.words[0]} is not homogeneous")


def build_module(c: Component, q: Quiver) -> ModuleAction:
    """
    Matrices of e, y and ψ on S(C).

    Raises:
        NotHomogeneous: if C is not a homogeneous component
        InvalidOrientation: if the quiver rank differs from the component's
    """
    _require_homogeneous(c)
    if q.rank != c.rank:
        raise InvalidOrientation(f"Quiver of rank {q.rank} does not match component rank {c.rank}")
    basis = tuple(c.words)
    index = {w.letters: position for position, w in enumerate(basis)}
    dim, height = len(basis), len(basis[0])
    psi: List[np.ndarray] = []
    for r in range(1, height):
        matrix = np.zeros((dim, dim), dtype=np.int64)
        for column, w in enumerate(basis):
            target = index.get(w.swapped(r).letters)
            if target is not None:
                matrix[target, column] = 1
        psi.append(matrix)
    y = tuple(np.zeros((dim, dim), dtype=np.int64) for _ in range(height))
    return ModuleAction(
        basis=basis, content=Content.of(basis[0]), psi=tuple(psi), y=y, index=index
    )


def psi_degree(w: Word, r: int, q: Quiver) -> int:
    """deg(ψ_r e(w)): −2 for equal letters, 1 for neighbors, 0 otherwise."""
    if not 1 <= r < len(w):
        raise IndexOutOfRange(f"Crossing index {r} is outside 1..{len(w) - 1}")
    a, b = w[r - 1], w[r]
    if a == b:
        return -2
    if are_neighbors(a, b):
        return 1
    return 0


class _Sweep:
    """Collects check outcomes for one relation, keeping the first counterexample."""

    def __init__(self, action: ModuleAction, relation: str):
        self.action = action
        self.relation = relation
        self.checks = 0
        self.witness: Optional[Dict[str, Any]] = None

    def expect(self, lhs: np.ndarray, rhs: np.ndarray, **where: Any) -> None:
        self.checks += 1
        if self.witness is not None or np.array_equal(lhs, rhs):
            return
        columns = np.nonzero(np.any(lhs != rhs, axis=0))[0]
        column = int(columns[0])
        self.witness = {
            **{key: list(value) if isinstance(value, tuple) else value for key, value in where.items()},
            "basis_vector": self.action.basis[column].to_json(),
            "lhs": lhs[:, column].tolist(),
            "rhs": rhs[:, column].tolist(),
        }

    def result(self) -> RelationResult:
        return RelationResult(
            relation=self.relation,
            name=RELATION_NAMES[self.relation],
            passed=self.witness is None,
            checks=self.checks,
            witness=self.witness,
        )


def _idempotents(a: ModuleAction, words: List[Letters], s: _Sweep) -> None:
    members = [w.letters for w in a.basis]
    for w in members:
        for v in members:
            expected = a.e(w) if w == v else a.zero()
            s.expect(a.e(w) @ a.e(v), expected, w=w, v=v)
    for w in words:
        if w not in a.index:
            s.expect(a.e(w), a.zero(), w=w)
    total = sum((a.e(w) for w in words), a.zero())
    s.expect(total, a.identity(), w="sum")


def _y_idempotent(a: ModuleAction, words: List[Letters], s: _Sweep) -> None:
    for k in range(1, a.height + 1):
        for w in words:
            s.expect(a.y[k - 1] @ a.e(w), a.e(w) @ a.y[k - 1], k=k, w=w)


def _psi_idempotent(a: ModuleAction, words: List[Letters], s: _Sweep) -> None:
    for k in range(1, a.height):
        for w in words:
            swapped = w[: k - 1] + (w[k], w[k - 1]) + w[k + 1:]
            s.expect(a.psi[k - 1] @ a.e(w), a.e(swapped) @ a.psi[k - 1], k=k, w=w)


def _y_commute(a: ModuleAction, words: List[Letters], s: _Sweep) -> None:
    for k in range(1, a.height + 1):
        for l in range(1, a.height + 1):
            s.expect(a.y[k - 1] @ a.y[l - 1], a.y[l - 1] @ a.y[k - 1], k=k, l=l)


def _y_psi_commute(a: ModuleAction, words: List[Letters], s: _Sweep) -> None:
    for k in range(1, a.height + 1):
        for l in range(1, a.height):
            if k not in (l, l + 1):
                s.expect(a.y[k - 1] @ a.psi[l - 1], a.psi[l - 1] @ a.y[k - 1], k=k, l=l)


def _equal_letters_or_zero(a: ModuleAction, w: Letters, k: int) -> np.ndarray:
    return a.e(w) if w[k - 1] == w[k] else a.zero()


def _y_psi_left(a: ModuleAction, words: List[Letters], s: _Sweep) -> None:
    for k in range(1, a.height):
        for w in words:
            lhs = (a.y[k] @ a.psi[k - 1] - a.psi[k - 1] @ a.y[k - 1]) @ a.e(w)
            s.expect(lhs, _equal_letters_or_zero(a, w, k), k=k, w=w)


def _y_psi_right(a: ModuleAction, words: List[Letters], s: _Sweep) -> None:
    for k in range(1, a.height):
        for w in words:
            lhs = (a.psi[k - 1] @ a.y[k] - a.y[k - 1] @ a.psi[k - 1]) @ a.e(w)
            s.expect(lhs, _equal_letters_or_zero(a, w, k), k=k, w=w)


def _psi_square(a: ModuleAction, words: List[Letters], s: _Sweep, q: Quiver) -> None:
    for k in range(1, a.height):
        square = a.psi[k - 1] @ a.psi[k - 1]
        for w in words:
            left, right = w[k - 1], w[k]
            if left == right:
                expected = a.zero()
            elif q.points(left, right):
                expected = (a.y[k - 1] - a.y[k]) @ a.e(w)
            elif q.points(right, left):
                expected = (a.y[k] - a.y[k - 1]) @ a.e(w)
            else:
                expected = a.e(w)
            s.expect(square @ a.e(w), expected, k=k, w=w)


def _psi_commute(a: ModuleAction, words: List[Letters], s: _Sweep) -> None:
    for k in range(1, a.height):
        for l in range(1, a.height):
            if abs(k - l) > 1:
                s.expect(a.psi[k - 1] @ a.psi[l - 1], a.psi[l - 1] @ a.psi[k - 1], k=k, l=l)


def _braid(a: ModuleAction, words: List[Letters], s: _Sweep, q: Quiver) -> None:
    for k in range(1, a.height - 1):
        p, p_next = a.psi[k - 1], a.psi[k]
        difference = p_next @ p @ p_next - p @ p_next @ p
        for w in words:
            expected = a.zero()
            if w[k + 1] == w[k - 1]:
                if q.points(w[k - 1], w[k]):
                    expected = a.e(w)
                elif q.points(w[k], w[k - 1]):
                    expected = -a.e(w)
            s.expect(difference @ a.e(w), expected, k=k, w=w)


def _checks(q: Quiver) -> Iterator[Tuple[str, Callable[[ModuleAction, List[Letters], _Sweep], None]]]:
    yield "1.1", _idempotents
    yield "1.2", _y_idempotent
    yield "1.3", _psi_idempotent
    yield "1.4", _y_commute
    yield "1.5", _y_psi_commute
    yield "1.6", _y_psi_left
    yield "1.7", _y_psi_right
    yield "1.8", lambda a, words, s: _psi_square(a, words, s, q)
    yield "1.9", _psi_commute
    yield "1.10", lambda a, words, s: _braid(a, words, s, q)


def verify_action(action: ModuleAction, q: Quiver) -> VerificationReport:
    """
    Check every relation, at every index, for every word of content α, on the
    given operators. Works on hand-modified actions too.

    Raises:
        TooLarge: if the height of α exceeds the configured guard
    """
    check_height(action.height)
    start = time.time()
    words = list(words_with_content(action.content))
    results = []
    for relation, check in _checks(q):
        sweep = _Sweep(action, relation)
        check(action, words, sweep)
        results.append(sweep.result())
    report = VerificationReport(component=action.basis, quiver=q, results=tuple(results))
    logger.debug(
        f"Verified {action.basis[0]} (dim {action.dim}, {len(words)} words) under {str(q) or 'rank 1'}: "
        f"{'pass' if report.passed else 'FAIL'} in {time.time() - start:.2f}s"
    )
    return report


def verify_relations(c: Component, q: Quiver) -> VerificationReport:
    return verify_action(build_module(c, q), q)


def verify_single_degree(c: Component, q: Quiver) -> bool:
    """Every ψ-move that stays inside C has degree 0, so S(C) sits in one degree."""
    _require_homogeneous(c)
    for w in c.words:
        for r in range(1, len(w)):
            if w.swapped(r) in c and psi_degree(w, r, q) != 0:
                return False
    return True


def _psi_graph(action: ModuleAction) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(action.dim))
    for matrix in action.psi:
        for row, column in zip(*np.nonzero(matrix)):
            graph.add_edge(int(column), int(row))
    return graph


def acts_transitively(action: ModuleAction) -> bool:
    """The ψ operators connect every basis line to every other one."""
    return nx.is_strongly_connected(_psi_graph(action))


def psi_edges(action: ModuleAction) -> Set[Tuple[Word, Word]]:
    """Unordered pairs of basis words joined by some ψ_r, smaller word first."""
    edges = set()
    for column, row in _psi_graph(action).edges():
        a, b = action.basis[column], action.basis[row]
        if a != b:
            edges.add((a, b) if a.letters < b.letters else (b, a))
    return edges
