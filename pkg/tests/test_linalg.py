# tests/test_linalg.py
from quotfib.modules import (
    express_in_basis,
    in_row_space,
    in_row_space_mod_p,
    rank,
    rank_mod_p,
    reduce_vector,
    rref,
    rref_mod_p,
)


def test_rref_drops_dependent_rows(qq):
    rows, pivots = rref([[1, 2, 3], [2, 4, 6], [0, 0, 1]], qq)
    assert pivots == [0, 2]
    assert rows == [(qq(1), qq(2), qq(0)), (qq(0), qq(0), qq(1))]
    assert rank([[1, 2], [2, 4]], qq) == 1
    assert rank([], qq) == 0


def test_row_space_membership(qq):
    rows, pivots = rref([[1, 0, 1], [0, 1, 1]], qq)
    member = [qq(2), qq(3), qq(5)]
    assert in_row_space(member, rows, pivots)
    assert express_in_basis(member, rows, pivots) == [qq(2), qq(3)]
    assert not in_row_space([qq(0), qq(0), qq(1)], rows, pivots)
    assert reduce_vector([qq(0), qq(0), qq(1)], rows, pivots) == [qq(0), qq(0), qq(1)]


def test_mod_p_variants_agree_with_exact(gf3, rng):
    for _ in range(25):
        rows = [[rng.randrange(3) for _ in range(4)] for _ in range(3)]
        exact_rows, exact_pivots = rref(rows, gf3, 4)
        int_rows, int_pivots = rref_mod_p(rows, 3, 4)
        assert exact_pivots == int_pivots
        assert [tuple(x.value for x in row) for row in exact_rows] == int_rows
        assert rank(rows, gf3, 4) == rank_mod_p(rows, 3, 4)


def test_in_row_space_mod_p():
    rows, pivots = rref_mod_p([[1, 1, 0], [0, 1, 1]], 2)
    assert in_row_space_mod_p([1, 0, 1], rows, pivots, 2)
    assert not in_row_space_mod_p([1, 0, 0], rows, pivots, 2)
