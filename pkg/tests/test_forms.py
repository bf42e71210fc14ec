# tests/test_forms.py
import pytest
from pydantic import ValidationError

from quotfib.algebra import BinaryForm
from quotfib.core import ShapeMismatchError
from quotfib.pairs import (
    AutElement,
    DegreeProfile,
    FormMatrix,
    PairShape,
    act,
    random_aut_element,
    random_form_matrix,
    scalar_form,
)


def test_degree_profiles():
    edge = DegreeProfile.edge(3, 2)
    assert edge.degrees == (2, 0, 0)
    assert edge.shape == PairShape.EDGE
    assert edge.phi_degree == 2
    assert edge.det_degree == 2
    assert str(edge) == "(2; 0, 0)"

    deg3 = DegreeProfile.deg3()
    assert deg3.shape == PairShape.DEG3
    assert deg3.phi_degree == 1
    assert deg3.det_degree == 3
    assert DegreeProfile(degrees=(3, 1)).shape is None


@pytest.mark.parametrize("degrees", [(2,), (2, 1, 0), (1, 2), (2, -1)])
def test_invalid_profiles(degrees):
    with pytest.raises(ValidationError):
        DegreeProfile(degrees=degrees)


def test_form_matrix_parse_and_determinant(qq):
    mat = FormMatrix.parse([["x^2", "y^2"], ["x", "y"]], DegreeProfile.deg3(), qq)
    assert mat.size == 2
    assert mat.entry(1, 0) == BinaryForm.parse("x", 1, qq)
    assert mat.determinant() == BinaryForm.parse("x^2*y - x*y^2", 3, qq)
    assert mat.lower_block() == [[qq(1), qq(0), qq(0), qq(1)]]
    assert str(mat) == "[x^2, y^2; x, y]"


def test_form_matrix_from_text(gf5):
    text = """
    # top row
    x^2 + y^2, 2*x*y
    1, 0   # beta
    """
    mat = FormMatrix.from_text(text, DegreeProfile.edge(2, 2), gf5)
    assert mat.field == gf5
    assert mat.entry(0, 1) == BinaryForm.from_coefficients([0, 2, 0], gf5)
    assert mat.entry(1, 0) == scalar_form(1, gf5)


def test_form_matrix_rejects_wrong_degrees(qq):
    with pytest.raises(ShapeMismatchError):
        FormMatrix.parse([["x", "y"], ["1", "0"]], DegreeProfile.edge(2, 2), qq)
    with pytest.raises(ShapeMismatchError):
        FormMatrix.parse([["x^2", "y^2"], ["1", "0"]], DegreeProfile.edge(3, 2), qq)


def test_profile_inferred_from_rows(qq):
    rows = [[BinaryForm.parse("x^2", 2, qq), BinaryForm.parse("y^2", 2, qq)],
            [scalar_form(1, qq), scalar_form(0, qq)]]
    assert FormMatrix(rows).profile == DegreeProfile.edge(2, 2)


def test_act_multiplies_determinant(qq):
    profile = DegreeProfile.deg3()
    mat = FormMatrix.parse([["x^2", "y^2"], ["x", "y"]], profile, qq)
    element = AutElement(
        gamma1=qq(2),
        gamma2=((qq(3),),),
        phi=(BinaryForm.parse("x + y", 1, qq),),
    )
    moved = act(element, mat)
    assert moved.profile == profile
    assert moved.entry(1, 0) == BinaryForm.parse("3*x", 1, qq)
    assert moved.entry(0, 0) == BinaryForm.parse("3*x^2 + x*y", 2, qq)
    assert moved.determinant() == mat.determinant() * qq(6)


def test_act_rejects_mismatched_element(qq):
    mat = FormMatrix.parse([["x", "y", "x"], ["1", "0", "0"], ["0", "1", "0"]], DegreeProfile.edge(3, 1), qq)
    element = AutElement(gamma1=qq(1), gamma2=((qq(1),),), phi=(BinaryForm.parse("x", 1, qq),))
    with pytest.raises(ShapeMismatchError):
        act(element, mat)


def test_random_elements_fit_profile(gf5, rng):
    profile = DegreeProfile.edge(3, 2)
    element = random_aut_element(profile, gf5, rng)
    assert not element.gamma1.is_zero()
    assert len(element.gamma2) == 2
    assert all(phi.degree == 2 for phi in element.phi)
    mat = random_form_matrix(profile, gf5, rng)
    assert act(element, mat).profile == profile
