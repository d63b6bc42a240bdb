"""
Internal resolver functions for turning loose user input into domain objects,
and the payload builders shared by the CLI and the MCP tools.
"""
import json
import logging
from typing import Any, Dict, List, Optional, Sequence, Union

from .bijection import phi, psi
from .canonical import canonical_form_of, enumerate_fc, max_fc_length
from .config import DEFAULT_ORIENTATION, LOGGER_NAME, ORIENTATION_ALIASES, STEP_ALIASES
from .coxeter import Word
from .dimension import dimension, method_census
from .dyck import (
    DyckPath,
    catalan,
    format_table,
    peaks,
    render_ascii,
    render_svg,
    statistic_k,
    t_table,
)
from .exceptions import InvalidOrientation, InvalidPath, InvalidWord
from .homogeneity import component_of, homogeneous_components
from .klr_verify import RELATION_NAMES, Quiver, verify_relations, verify_single_degree

logger = logging.getLogger(LOGGER_NAME)

WordInput = Union[str, Sequence[int]]

EMPTY_WORD_SPELLINGS = {"", "[~]", "~", "e", "id"}


def resolve_word(word: WordInput, rank: int) -> Word:
    """
    Internal: Resolve a word given as a JSON array, a list, "3,2,1" or compact digits "32143".

    Raises:
        InvalidWord: If the text cannot be read or a letter is outside 1..rank
    """
    if isinstance(word, str):
        text = word.strip()
        if text in EMPTY_WORD_SPELLINGS:
            letters: List[Any] = []
        elif text.startswith("["):
            try:
                letters = json.loads(text)
            except json.JSONDecodeError as e:
                raise InvalidWord(f"Word '{word}' is not a JSON array: {e.msg}")
            if not isinstance(letters, list):
                raise InvalidWord(f"Word '{word}' is not a JSON array")
        elif "," in text or " " in text:
            parts = [p for p in text.replace(",", " ").split() if p]
            if not all(p.isdigit() for p in parts):
                raise InvalidWord(f"Word '{word}' contains non-numeric letters")
            letters = [int(p) for p in parts]
        elif text.isdigit():
            if rank >= 10:
                raise InvalidWord(
                    f"Compact word '{word}' is ambiguous at rank {rank}; use a JSON array"
                )
            letters = [int(ch) for ch in text]
        else:
            raise InvalidWord(f"Word '{word}' is neither a JSON array nor a digit string")
    else:
        letters = list(word)
    resolved = Word(tuple(letters), rank)
    logger.debug(f"RESOLVED: word '{word}' -> {resolved.to_json()} (rank {rank})")
    return resolved


def resolve_path(path: str) -> DyckPath:
    """
    Internal: Resolve a step string; accepts U/D, N/S or N/E-S style letters and parentheses.

    Raises:
        InvalidPath: If a step is unknown or the path is not a Dyck path
    """
    steps = []
    for index, ch in enumerate(path.strip()):
        if ch.isspace():
            continue
        if ch not in STEP_ALIASES:
            raise InvalidPath(f"Step {ch!r} at index {index} is not a recognised step")
        steps.append(STEP_ALIASES[ch])
    return DyckPath("".join(steps))


def resolve_orientation(orientation: Optional[str], rank: int) -> Quiver:
    """
    Internal: Resolve an orientation name ("right", "left", "->", ...) or a per-edge
    string of '>' and '<' with one character per diagram edge.

    Raises:
        InvalidOrientation: If the spelling is unknown or has the wrong number of edges
    """
    text = (orientation or DEFAULT_ORIENTATION).strip()
    alias = ORIENTATION_ALIASES.get(text.lower())
    if alias == "right":
        return Quiver.right(rank)
    if alias == "left":
        return Quiver.left(rank)
    if text and set(text) <= {">", "<"}:
        if len(text) != rank - 1:
            raise InvalidOrientation(
                f"Orientation '{text}' has {len(text)} edges; rank {rank} needs {rank - 1}"
            )
        return Quiver(rank, tuple(ch == ">" for ch in text))
    raise InvalidOrientation(
        f"Orientation '{orientation}' not recognized. Valid options: right, left, or a '>'/'<' string"
    )


def table_logic(n_max: int) -> Dict[str, Any]:
    """T(n,k) rows 0..n_max, with each row sum checked against the Catalan number."""
    if n_max < 0:
        raise ValueError(f"Row bound must be non-negative, got {n_max}")
    rows = t_table(n_max)
    return {
        "rows": rows,
        "row_sums": [sum(row) for row in rows],
        "catalan": [catalan(n) for n in range(n_max + 1)],
        "text": format_table(rows),
    }


def enumerate_logic(rank: int, length: int, as_: str = "words") -> Dict[str, Any]:
    if as_ not in ("words", "paths"):
        raise ValueError(f"Unknown output form '{as_}'. Valid options: words, paths")
    forms = enumerate_fc(rank, length)
    if as_ == "words":
        elements = [
            {"word": form.flatten().to_json(), "segments": [list(p) for p in form.pairs]}
            for form in forms
        ]
    else:
        elements = [{"path": phi(form).steps} for form in forms]
    return {"rank": rank, "length": length, "count": len(forms), "elements": elements}


def path_of_logic(word: WordInput, rank: int) -> Dict[str, Any]:
    w = resolve_word(word, rank)
    form = canonical_form_of(w)
    path = phi(form)
    return {
        "word": w.to_json(),
        "rank": rank,
        "canonical": form.flatten().to_json(),
        "segments": [list(p) for p in form.pairs],
        "path": path.steps,
        "statistic": statistic_k(path),
    }


def word_of_logic(path: str) -> Dict[str, Any]:
    d = resolve_path(path)
    form = psi(d)
    return {
        "word": form.flatten().to_json(),
        "rank": form.rank,
        "segments": [list(p) for p in form.pairs],
    }


def component_logic(word: WordInput, rank: int) -> Dict[str, Any]:
    return component_of(resolve_word(word, rank)).to_json()


def dimension_logic(
    path: Optional[str] = None, word: Optional[WordInput] = None, rank: Optional[int] = None
) -> Dict[str, Any]:
    """Dimension of S(Ψ(D)) from a path, or from a fully commutative word and its rank."""
    if (path is None) == (word is None):
        raise ValueError("Give exactly one of a path or a word")
    if word is not None:
        if rank is None:
            raise ValueError("A word needs its rank")
        d = phi(canonical_form_of(resolve_word(word, rank)))
    else:
        d = resolve_path(path or "")
    result = dimension(d)
    payload = result.to_json()
    payload["path"] = d.steps
    payload["statistic"] = statistic_k(d)
    return payload


def verify_logic(rank: int, height: Optional[int] = None, orientation: Optional[str] = None) -> Dict[str, Any]:
    """
    Sweep every relation over every homogeneous component of the given rank
    (and height, or all heights when omitted).
    """
    quiver = resolve_orientation(orientation, rank)
    heights = [height] if height is not None else list(range(max_fc_length(rank) + 1))
    checks = {relation: 0 for relation in RELATION_NAMES}
    passed = {relation: True for relation in RELATION_NAMES}
    failures: List[Dict[str, Any]] = []
    single_degree = True
    components = 0
    for h in heights:
        for component in homogeneous_components(rank, h):
            components += 1
            report = verify_relations(component, quiver)
            for result in report.results:
                checks[result.relation] += result.checks
                passed[result.relation] = passed[result.relation] and result.passed
            if not report.passed:
                failures.append(report.to_json())
            single_degree = single_degree and verify_single_degree(component, quiver)
    logger.info(f"Verified {components} components at rank {rank} under {str(quiver) or 'rank 1'}")
    return {
        "rank": rank,
        "heights": heights,
        "orientation": str(quiver),
        "components": components,
        "passed": all(passed.values()) and single_degree,
        "single_degree": single_degree,
        "relations": [
            {"relation": r, "name": name, "passed": passed[r], "checks": checks[r]}
            for r, name in RELATION_NAMES.items()
        ],
        "failures": failures,
    }


def render_logic(path: str, svg: bool = False) -> Dict[str, Any]:
    d = resolve_path(path)
    return {
        "path": d.steps,
        "format": "svg" if svg else "ascii",
        "peaks": [p.to_json() for p in peaks(d)],
        "drawing": render_svg(d) if svg else render_ascii(d),
    }


def census_logic(rank: int) -> Dict[str, Any]:
    methods = method_census(rank)
    return {"rank": rank, "total": sum(methods.values()), "methods": methods}
