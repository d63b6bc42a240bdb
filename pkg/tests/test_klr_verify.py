"""
Tests for the homogeneous module operators and the KLR relation sweep
"""
import dataclasses

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fc_dyck.canonical import CanonicalForm, max_fc_length
from fc_dyck.coxeter import Word
from fc_dyck.exceptions import IndexOutOfRange, InvalidOrientation, NotHomogeneous, TooLarge
from fc_dyck.homogeneity import Component, component_of, homogeneous_components
from fc_dyck.klr_verify import (
    RELATION_NAMES,
    Quiver,
    acts_transitively,
    build_module,
    psi_degree,
    psi_edges,
    verify_action,
    verify_relations,
    verify_single_degree,
)

SMALL_COMPONENTS = [
    c for n in range(1, 5) for k in range(max_fc_length(n) + 1) for c in homogeneous_components(n, k)
]


def _w(letters: str) -> Word:
    return Word(tuple(int(ch) for ch in letters), 4)


def test_quiver_orientations():
    right, left = Quiver.right(3), Quiver.left(3)
    assert right.points(1, 2) and right.points(2, 3)
    assert not right.points(2, 1)
    assert left.points(2, 1) and not left.points(1, 2)
    assert not right.points(1, 3)
    assert str(Quiver(3, (True, False))) == "><"
    assert Quiver.right(1).arrows == ()


def test_quiver_validation():
    with pytest.raises(InvalidOrientation):
        Quiver(3, (True,))
    with pytest.raises(InvalidOrientation):
        Quiver(0, ())


def test_psi_degree():
    q = Quiver.right(3)
    assert psi_degree(Word((1, 1), 3), 1, q) == -2
    assert psi_degree(Word((1, 2), 3), 1, q) == 1
    assert psi_degree(Word((1, 3), 3), 1, q) == 0
    with pytest.raises(IndexOutOfRange):
        psi_degree(Word((1, 3), 3), 2, q)


def test_second_example_module(ex2_word):
    action = build_module(component_of(ex2_word), Quiver.right(4))
    assert action.dim == 2
    assert np.array_equal(action.psi[0], np.array([[0, 1], [1, 0]]))
    assert not action.psi[1].any()
    assert len(action.y) == 3 and not any(y.any() for y in action.y)
    assert np.array_equal(action.e((2, 4, 3)), np.array([[1, 0], [0, 0]]))
    assert not action.e((3, 2, 4)).any()


def test_singleton_module():
    component = component_of(Word((1,), 1))
    action = build_module(component, Quiver.right(1))
    assert action.psi == ()
    report = verify_relations(component, Quiver.right(1))
    assert report.passed
    assert report.verdicts()["1.1"]


def test_first_example_psi_edges(ex1_word):
    action = build_module(component_of(ex1_word), Quiver.right(4))
    edges = {(a.letters, b.letters) for a, b in psi_edges(action)}
    assert edges == {
        (_w("32143").letters, _w("32413").letters),
        (_w("32413").letters, _w("34213").letters),
        (_w("32413").letters, _w("32431").letters),
        (_w("32431").letters, _w("34231").letters),
        (_w("34213").letters, _w("34231").letters),
    }
    assert acts_transitively(action)


def test_second_example_passes_every_relation(ex2_word):
    report = verify_relations(component_of(ex2_word), Quiver.right(4))
    assert report.passed
    assert [r.relation for r in report.results] == list(RELATION_NAMES)
    # three letters leave no pair of crossings two apart
    checks = {r.relation: r.checks for r in report.results}
    assert checks.pop("1.9") == 0
    assert all(count > 0 for count in checks.values())
    assert report.to_json()["orientation"] == ">>>"


def test_first_example_exercises_every_relation(ex1_word):
    report = verify_relations(component_of(ex1_word), Quiver.left(4))
    assert report.passed
    assert all(r.checks > 0 for r in report.results)


def test_corrupted_crossing_breaks_psi_idempotent(ex2_word):
    action = build_module(component_of(ex2_word), Quiver.right(4))
    corrupted = dataclasses.replace(action, psi=(action.identity(),) + action.psi[1:])
    report = verify_action(corrupted, Quiver.right(4))
    failed = {r.relation for r in report.failures}
    assert "1.3" in failed
    witness = next(r for r in report.results if r.relation == "1.3").witness
    assert witness is not None
    assert witness["k"] == 1


@settings(deadline=None, max_examples=30)
@given(st.sampled_from([c for c in SMALL_COMPONENTS if len(c.words[0]) >= 2]), st.data())
def test_any_corrupted_crossing_is_caught(component, data):
    action = build_module(component, Quiver.right(component.rank))
    r = data.draw(st.integers(min_value=1, max_value=len(action.psi)))
    psi = list(action.psi)
    psi[r - 1] = action.identity()
    report = verify_action(dataclasses.replace(action, psi=tuple(psi)), Quiver.right(component.rank))
    assert not report.verdicts()["1.3"]


def test_psi_matrices_are_partial_permutations():
    for component in SMALL_COMPONENTS:
        action = build_module(component, Quiver.right(component.rank))
        for matrix in action.psi:
            assert set(np.unique(matrix)) <= {0, 1}
            assert (matrix.sum(axis=0) <= 1).all()


def test_single_degree(ex1_word, ex2_word):
    assert verify_single_degree(component_of(ex1_word), Quiver.right(4))
    assert verify_single_degree(component_of(ex2_word), Quiver.left(4))


def test_non_homogeneous_component_is_rejected():
    fake = Component(words=(Word((1, 2, 1), 2),), canonical=CanonicalForm((), 2))
    with pytest.raises(NotHomogeneous):
        verify_single_degree(fake, Quiver.right(2))
    with pytest.raises(NotHomogeneous):
        build_module(fake, Quiver.right(2))


def test_quiver_rank_must_match(ex2_word):
    with pytest.raises(InvalidOrientation):
        build_module(component_of(ex2_word), Quiver.right(3))


def test_sweep_respects_height_guard(monkeypatch, ex2_word):
    monkeypatch.setenv("FC_DYCK_MAX_HEIGHT", "2")
    with pytest.raises(TooLarge):
        verify_relations(component_of(ex2_word), Quiver.right(4))


@pytest.mark.slow
def test_every_small_component_passes_under_both_orientations():
    for component in SMALL_COMPONENTS:
        right = verify_relations(component, Quiver.right(component.rank))
        left = verify_relations(component, Quiver.left(component.rank))
        assert right.passed, right.to_json()
        assert left.passed, left.to_json()
        assert right.verdicts() == left.verdicts()
        assert verify_single_degree(component, Quiver.right(component.rank))
        assert acts_transitively(build_module(component, Quiver.right(component.rank)))
