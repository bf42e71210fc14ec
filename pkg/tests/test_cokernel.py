# tests/test_cokernel.py
import pytest

from quotfib.algebra import BinaryForm
from quotfib.core import QuotfibError
from quotfib.pairs import (
    DegreeProfile,
    FormMatrix,
    cokernel_divisor,
    det_divisor,
    kernel_consistency,
    kernel_length,
    local_cokernel_length,
    local_form,
    projective_line,
)


@pytest.fixture
def double_point(gf5):
    """det = -y^2: a length-two cokernel at (1:0)."""
    return FormMatrix.parse([["x^2", "y^2"], ["1", "0"]], DegreeProfile.edge(2, 2), gf5)


@pytest.fixture
def three_points(gf5):
    """det = xy(x - y)."""
    return FormMatrix.parse([["x^2", "y^2"], ["x", "y"]], DegreeProfile.deg3(), gf5)


def test_projective_line():
    assert projective_line(3) == [(1, 0), (0, 1), (1, 1), (2, 1)]


def test_local_form(gf5):
    form = BinaryForm.parse("x^2 + y^2", 2, gf5)
    local = local_form(form, (2, 1), 3)
    assert local.valuation() == 1
    assert local_form(form, (1, 0), 3).is_unit()


def test_double_point(double_point):
    assert det_divisor(double_point) == [((1, 0), 2)]
    assert cokernel_divisor(double_point) == [((1, 0), 2)]
    assert local_cokernel_length(double_point, (0, 1)) == 0
    assert kernel_length(double_point, (1, 0)) == 2
    assert kernel_consistency(double_point)


def test_three_points(three_points):
    expected = [((1, 0), 1), ((0, 1), 1), ((1, 1), 1)]
    assert det_divisor(three_points) == expected
    assert cokernel_divisor(three_points) == expected
    assert local_cokernel_length(three_points, (0, 1)) == 1
    assert kernel_consistency(three_points)


def test_det_must_split(gf3):
    mat = FormMatrix.parse([["0", "x^2 + y^2"], ["1", "0"]], DegreeProfile.edge(2, 2), gf3)
    with pytest.raises(QuotfibError):
        det_divisor(mat)
    assert cokernel_divisor(mat) == []


def test_prime_field_required(qq):
    mat = FormMatrix.parse([["x^2", "y^2"], ["1", "0"]], DegreeProfile.edge(2, 2), qq)
    with pytest.raises(QuotfibError):
        cokernel_divisor(mat)


def test_kernel_length_needs_two_rows(gf5):
    mat = FormMatrix.parse([["x", "y", "0"], ["1", "0", "0"], ["0", "1", "1"]], DegreeProfile.edge(3, 1), gf5)
    with pytest.raises(QuotfibError):
        kernel_length(mat, (1, 0))
