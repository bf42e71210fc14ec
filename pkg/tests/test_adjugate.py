# tests/test_adjugate.py
import pytest

from quotfib.algebra import BinaryForm
from quotfib.birational import adjugate, adjugate_compose_check, determinant, random_form_matrix
from quotfib.core import ShapeMismatchError


def form(text, degree, field):
    return BinaryForm.parse(text, degree, field)


def test_worked_example(qq):
    mat = [[form("x^2", 2, qq), form("y^2", 2, qq)], [form("x", 1, qq), form("y", 1, qq)]]
    assert str(determinant(mat)) == "x^2*y - x*y^2"
    assert adjugate(mat)[0][1] == -form("y^2", 2, qq)
    verdict = adjugate_compose_check(mat)
    assert verdict.passed
    assert verdict.expected == "[x^2*y - x*y^2, 0; 0, x^2*y - x*y^2]"


def test_determinant_must_be_homogeneous(qq):
    mat = [[form("x^2", 2, qq), form("y", 1, qq)], [form("x", 1, qq), form("y", 1, qq)]]
    with pytest.raises(ShapeMismatchError):
        determinant(mat)
    with pytest.raises(ShapeMismatchError):
        adjugate([[form("x", 1, qq)]])


@pytest.mark.parametrize("degrees", [(2, 1), (1, 1), (3, 0)])
def test_random_matrices(gf5, rng, degrees):
    for _ in range(30):
        assert adjugate_compose_check(random_form_matrix(degrees, gf5, rng)).passed
