import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from discgroups import present, present_zariski
from discgroups.errors import ConsistencyError
from discgroups.groups.abelian import abelianize, relation_matrix
from discgroups.groups.snf import (
    determinant,
    in_row_lattice,
    lattice_basis,
    matmul,
    smith_normal_form,
)

from helpers import fp

matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c),
                           min_size=r, max_size=r)
    )
)


def _sympy_diagonal(A):
    D = sympy_snf(Matrix(A), domain=ZZ)
    k = min(D.shape)
    return sorted((abs(int(D[i, i])) for i in range(k)), key=lambda x: (x == 0, x))


@settings(max_examples=150)
@given(matrices)
def test_snf_certificate_and_oracle(A):
    sf = smith_normal_form(A)
    sf.certify(A)
    assert matmul(matmul(sf.U, A), sf.V) == sf.D
    assert abs(determinant(sf.U)) == abs(determinant(sf.V)) == 1
    diag = sf.diagonal
    assert sorted(diag, key=lambda x: (x == 0, x)) == _sympy_diagonal(A)
    nz = [x for x in diag if x]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


def test_snf_examples():
    assert smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]).diagonal == [2, 6, 12]
    assert smith_normal_form([[0, 0], [0, 0]]).diagonal == [0, 0]


def test_certify_rejects_wrong_form():
    A = [[2, 0], [0, 3]]
    sf = smith_normal_form(A)
    with pytest.raises(ConsistencyError):
        sf.certify([[2, 0], [0, 5]])


def test_determinant():
    assert determinant([[1, 2], [3, 4]]) == -2
    assert determinant([[0, 1, 0], [1, 0, 0], [0, 0, 5]]) == -5
    assert determinant([]) == 1


@given(matrices)
def test_lattice_basis_spans_rows(A):
    basis = lattice_basis(A, len(A[0]))
    assert all(in_row_lattice(r, basis) for r in A)
    assert len(basis) == smith_normal_form(A).rank


def test_abelianize_examples(pres23):
    ab = abelianize(pres23)
    assert (list(ab.torsion), ab.free_rank) == ([12], 0)
    assert str(ab) == "Z/12"
    ab = abelianize(present((2, 3), "affine"))
    assert (list(ab.torsion), ab.free_rank) == ([], 1)
    assert str(ab) == "Z"
    assert str(abelianize(fp(2))) == "Z^2"
    assert abelianize(fp(2)).to_dict() == {"torsion": [], "free_rank": 2}


def test_abelian_strings():
    assert str(abelianize(fp(1, [1]))) == "1"
    assert str(abelianize(fp(2, [1, 1]))) == "Z x Z/2"
    assert str(abelianize(fp(2, [1, 1], [2, 2, 2]))) == "Z/6"
    assert list(abelianize(fp(2, [1, 1], [2, 2, 2, 2])).torsion) == [2, 4]


@pytest.mark.parametrize("d", range(2, 8))
def test_zariski_abelianization(d):
    a, b = abelianize(present_zariski(d)), abelianize(present((1, d)))
    assert str(a) == str(b) == f"Z/{2 * (d - 1)}"


def test_relation_matrix_rows(pres23):
    rows = relation_matrix(pres23)
    assert len(rows) == len(pres23.relations)
    assert rows[-1] == [3, 3, 3, 3]
