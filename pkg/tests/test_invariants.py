# tests/test_invariants.py
import pytest

from quotfib.algebra import BinaryForm
from quotfib.core import NotStablePairError, ShapeMismatchError
from quotfib.pairs import (
    DegreeProfile,
    FormMatrix,
    PairShape,
    act,
    deg3_invariant,
    edge_normal_form,
    equivalent,
    pair_invariant,
    random_aut_element,
    random_form_matrix,
)


def stable_sample(profile, field, rng):
    while True:
        mat = random_form_matrix(profile, field, rng)
        try:
            pair_invariant(mat)
        except NotStablePairError:
            continue
        return mat


def test_deg3_invariant(qq):
    mat = FormMatrix.parse([["x^2", "y^2"], ["x", "y"]], DegreeProfile.deg3(), qq)
    invariant = deg3_invariant(mat)
    assert invariant.shape == PairShape.DEG3
    assert str(invariant.det_class) == "x^2*y - x*y^2"
    assert invariant.beta_text() == "[1:0:0:1]"
    assert invariant.to_report() == {"det": "x^2*y - x*y^2", "beta": "[1:0:0:1]"}


def test_det_class_is_normalized(qq):
    mat = FormMatrix.parse([["x^2", "y^2"], ["2", "0"]], DegreeProfile.edge(2, 2), qq)
    invariant = pair_invariant(mat)
    assert invariant.det_class == BinaryForm.parse("y^2", 2, qq)
    assert invariant.beta_class == ((qq(1), qq(0)),)


def test_deg3_invariant_rejects_edge_profile(qq):
    mat = FormMatrix.parse([["x^2", "y^2"], ["1", "0"]], DegreeProfile.edge(2, 2), qq)
    with pytest.raises(ShapeMismatchError):
        deg3_invariant(mat)


@pytest.mark.parametrize("rows", [
    [["x^2", "x^2"], ["x", "x"]],
    [["x^2", "y^2"], ["0", "0"]],
])
def test_unstable_matrices(qq, rows):
    mat = FormMatrix.parse(rows, DegreeProfile.deg3(), qq)
    with pytest.raises(NotStablePairError):
        pair_invariant(mat)


def test_edge_normal_form(qq):
    profile = DegreeProfile.edge(2, 2)
    mat = FormMatrix.parse([["x^2 + x*y", "3*y^2"], ["2", "1"]], profile, qq)
    normal, invariant = edge_normal_form(mat, r=2, n=2)
    # beta = [1 : 1/2]; alpha_1 - alpha_0 / 2 made monic
    expected = FormMatrix.parse([["0", "x^2 + x*y - 6*y^2"], ["1", "1/2"]], profile, qq)
    assert normal == expected
    assert invariant == pair_invariant(normal)


def test_edge_normal_form_checks_shape(qq):
    mat = FormMatrix.parse([["x^2", "y^2"], ["1", "0"]], DegreeProfile.edge(2, 2), qq)
    with pytest.raises(ShapeMismatchError):
        edge_normal_form(mat, r=3)
    with pytest.raises(ShapeMismatchError):
        edge_normal_form(mat, n=1)
    deg3 = FormMatrix.parse([["x^2", "y^2"], ["x", "y"]], DegreeProfile.deg3(), qq)
    with pytest.raises(ShapeMismatchError):
        edge_normal_form(deg3)


@pytest.mark.parametrize("profile", [
    DegreeProfile.edge(2, 1),
    DegreeProfile.edge(2, 3),
    DegreeProfile.edge(3, 2),
    DegreeProfile.deg3(),
])
def test_invariant_constant_on_orbits(gf5, rng, profile):
    for _ in range(20):
        mat = stable_sample(profile, gf5, rng)
        moved = act(random_aut_element(profile, gf5, rng), mat)
        assert pair_invariant(moved) == pair_invariant(mat)
        assert equivalent(mat, moved)
        if profile.shape == PairShape.EDGE:
            assert edge_normal_form(moved)[0] == edge_normal_form(mat)[0]


def test_equivalent_needs_matching_profiles(qq):
    a = FormMatrix.parse([["x^2", "y^2"], ["1", "0"]], DegreeProfile.edge(2, 2), qq)
    b = FormMatrix.parse([["x^2", "y^2"], ["x", "y"]], DegreeProfile.deg3(), qq)
    with pytest.raises(ShapeMismatchError):
        equivalent(a, b)
