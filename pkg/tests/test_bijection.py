"""
Tests for the bijection between canonical forms and Dyck paths
"""
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fc_dyck.bijection import BOTTOM, apex_of, phi, psi, segment_of_peak
from fc_dyck.canonical import CanonicalForm, Segment, enumerate_fc, max_fc_length
from fc_dyck.dyck import DyckPath, Peak, count_T, enumerate_paths, max_statistic, statistic_k
from fc_dyck.exceptions import CoordinateParity, InvalidPath

forms_up_to_rank_5 = st.sampled_from(
    [f for n in range(1, 6) for k in range(max_fc_length(n) + 1) for f in enumerate_fc(n, k)]
)


def test_phi_of_first_example(ex1_form):
    assert phi(ex1_form).steps == "UUUUDDUDDD"
    assert statistic_k(phi(ex1_form)) == 5


def test_psi_of_second_example():
    form = psi(DyckPath("UDUUDUUDDD"))
    assert form.flatten().letters == (2, 4, 3)
    assert form.rank == 4


def test_identity_maps_to_sawtooth():
    assert phi(CanonicalForm((), 4)).steps == "UDUDUDUDUD"
    assert psi(DyckPath.sawtooth(5)).segments == ()


def test_hook_path_reads_three_segments(hook_path):
    assert psi(hook_path).pairs == ((1, 3), (3, 4), (5, 5))


def test_segment_of_peak():
    assert segment_of_peak(Peak(4, 4)) == Segment(1, 3)
    assert segment_of_peak(Peak(1, 1)) is BOTTOM
    with pytest.raises(CoordinateParity):
        segment_of_peak(Peak(3, 2))


def test_apex_of():
    assert apex_of(Segment(1, 3)) == (4, 4)
    assert apex_of(Segment(3, 4)) == (7, 3)


def test_psi_needs_rank_at_least_one():
    with pytest.raises(InvalidPath):
        psi(DyckPath("UD"))
    with pytest.raises(InvalidPath):
        psi(DyckPath(""))


@given(forms_up_to_rank_5)
def test_psi_inverts_phi(form):
    d = phi(form)
    assert psi(d) == form
    assert d.semilength == form.rank + 1
    assert statistic_k(d) == form.length


@pytest.mark.parametrize("semilength", range(2, 7))
def test_phi_inverts_psi(semilength):
    for k in range(max_statistic(semilength) + 1):
        for d in enumerate_paths(semilength, k):
            assert phi(psi(d)) == d


@pytest.mark.slow
@pytest.mark.parametrize("n", range(1, 8))
def test_fc_elements_are_counted_by_the_triangle(n):
    for k in range(max_fc_length(n) + 2):
        forms = enumerate_fc(n, k)
        assert len(forms) == count_T(n + 1, k)
        for form in forms:
            assert psi(phi(form)) == form
