import itertools

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st
from sympy.matrices.normalforms import smith_normal_form

from torelli import (
    complete_basis,
    fs_connected,
    fs_dot,
    fs_edges,
    fs_h1_rank,
    fs_is_simplex,
    fs_vertices,
    is_primitive,
    matrix_rank,
    smith_invariants,
    snf,
    spans_summand,
)
from torelli.lattice import det, identity, mat_mul

from .oracles import minors_spans_summand

small_int = st.integers(min_value=-9, max_value=9)


def matrices(rows, cols):
    return st.lists(st.lists(small_int, min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows)


def test_det_and_rank_small_examples():
    assert det([[2, 0], [0, 3]]) == 6
    assert det([]) == 1
    assert det([[5]]) == 5
    assert det(identity(4)) == 1
    assert matrix_rank([[1, 2], [2, 4]]) == 1
    assert matrix_rank([[0, 0], [0, 0]]) == 0
    assert matrix_rank([]) == 0


@given(matrices(3, 3))
def test_det_matches_sympy(m):
    assert det(m) == sympy.Matrix(m).det()


@given(matrices(3, 4))
def test_rank_matches_sympy(m):
    assert matrix_rank(m) == sympy.Matrix(m).rank()


def test_snf_diagonal_example():
    res = snf([[2, 0], [0, 3]])
    assert [res.D[0][0], res.D[1][1]] == [1, 6]
    assert smith_invariants([[2, 0], [0, 3]]) == [1, 6]


def test_snf_transforms_verified():
    a = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
    res = snf(a)
    assert mat_mul(mat_mul(res.U, a), res.V) == res.D
    assert abs(det(res.U)) == 1
    assert abs(det(res.V)) == 1


@given(matrices(3, 3))
def test_snf_invariants_match_sympy(m):
    ours = smith_invariants(m)
    theirs = [abs(int(x)) for x in
              smith_normal_form(sympy.Matrix(m)).diagonal() if x != 0]
    assert ours == theirs


def test_snf_empty_and_zero():
    assert smith_invariants([[0, 0], [0, 0]]) == []
    res = snf([[0]])
    assert res.D == [[0]]


def test_is_primitive():
    assert is_primitive([1, 0, 0])
    assert is_primitive([2, 3])
    assert not is_primitive([2, 4])
    assert not is_primitive([0, 0])


def test_spans_summand_examples():
    assert spans_summand([])
    assert spans_summand([[1, 0], [0, 1]])
    assert spans_summand([[2, 3]])
    assert not spans_summand([[2, 4]])
    assert not spans_summand([[1, 0], [0, 2]])
    assert not spans_summand([[1, 0], [0, 1], [1, 1]])  # too many rows
    # (1,1) and (1,-1) span an index-2 sublattice
    assert not spans_summand([[1, 1], [1, -1]])


def test_spans_summand_exhaustive_n2():
    vecs = list(itertools.product(range(-2, 3), repeat=2))
    for k in (1, 2):
        for subset in itertools.combinations(vecs, k):
            rows = [list(v) for v in subset]
            assert spans_summand(rows) == minors_spans_summand(rows)


@given(st.lists(st.lists(small_int, min_size=3, max_size=3),
                min_size=1, max_size=3))
def test_spans_summand_matches_minors_oracle(rows):
    assert spans_summand(rows) == minors_spans_summand(rows)


@given(st.lists(st.lists(small_int, min_size=4, max_size=4),
                min_size=2, max_size=3))
def test_spans_summand_downward_closed(rows):
    if spans_summand(rows):
        assert spans_summand(rows[:-1])


def test_complete_basis_examples():
    assert complete_basis([], 3) == identity(3)
    out = complete_basis([[2, 3]], 2)
    assert out[0] == [2, 3]
    assert abs(det(out)) == 1
    out = complete_basis([[1, 0, 0], [0, 1, 0]], 3)
    assert out[0] == [1, 0, 0] and out[1] == [0, 1, 0]
    assert abs(det(out)) == 1


def test_complete_basis_rejects_non_summand():
    with pytest.raises(ValueError):
        complete_basis([[2, 4]], 2)
    with pytest.raises(ValueError):
        complete_basis([[1, 0], [0, 1], [1, 1]], 2)
    with pytest.raises(ValueError):
        complete_basis([[1, 0, 0]], 2)


@given(st.lists(st.lists(small_int, min_size=4, max_size=4),
                min_size=1, max_size=3))
def test_complete_basis_postconditions(rows):
    if not spans_summand(rows):
        return
    out = complete_basis(rows, 4)
    assert out[:len(rows)] == rows
    assert abs(det(out)) == 1


def test_fs_vertices_n2():
    assert fs_vertices(2, 1) == [(0, 1), (1, -1), (1, 0), (1, 1)]
    assert len(fs_vertices(3, 1)) == 13
    assert all(is_primitive(list(v)) for v in fs_vertices(3, 2))


def test_fs_edges_n2_bound1():
    edges = fs_edges(2, 1)
    assert len(edges) == 5
    assert ((1, -1), (1, 1)) not in edges  # determinant 2, not a summand


def test_fs_is_simplex_order_insensitive():
    verts = [(1, 0, 0), (0, 1, 0), (1, 1, 1)]
    for perm in itertools.permutations(verts):
        assert fs_is_simplex(list(perm))
    assert not fs_is_simplex([(1, 0, 0), (1, 0, 0)])
    # index-2 span: primitive vectors, but not a summand family
    assert not fs_is_simplex([(1, 0, 0), (0, 2, 1), (0, 0, 1)])


def test_fs_connected():
    assert fs_connected(2, 1)
    assert fs_connected(3, 1)


def test_fs_h1_small():
    # n = 2 has no triangles, so h1 is the cycle rank of the graph
    assert fs_h1_rank(2, 1) == len(fs_edges(2, 1)) - len(fs_vertices(2, 1)) + 1


def test_fs_dot_output():
    text = fs_dot(2, 1)
    assert text.startswith("graph fs {")
    assert '"0,1" -- "1,-1";' in text
    assert text.strip().endswith("}")
