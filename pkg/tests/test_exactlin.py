import random
from fractions import Fraction as Q

import pytest

from bihomlie.algebra import ad_matrix
from bihomlie.catalog import make_sl2
from bihomlie.errors import DimensionMismatch, SingularMatrix
from bihomlie.exactlin import (
    MatrixQ,
    PolyQ,
    Subspace,
    basis_vector,
    char_poly,
    det,
    generalized_eigenspace,
    invert,
    kernel,
    rank,
    rational_roots,
    rref,
    sqrt_fraction,
)
from conftest import random_fraction, random_invertible

UNIPOTENT = MatrixQ([[1, 1, 0], [0, 1, 1], [0, 0, 1]])


def test_rref_identity():
    reduced, rk = rref(MatrixQ.identity(3))
    assert reduced == MatrixQ.identity(3)
    assert rk == 3


def test_rref_proportional_rows():
    reduced, rk = rref(MatrixQ([[1, 2], [2, 4]]))
    assert reduced == MatrixQ([[1, 2], [0, 0]])
    assert rk == 1


def test_rref_sl2_ad_h():
    # ad(h) built from the structure constants is diag(0, 2, -2), rank 2
    ad_h = ad_matrix(make_sl2(), basis_vector(3, 0))
    assert ad_h == MatrixQ.diagonal([0, 2, -2])
    assert rank(ad_h) == 2


def test_rref_idempotent():
    rng = random.Random(11)
    for _ in range(10):
        m = MatrixQ([[random_fraction(rng, 5) for _ in range(4)] for _ in range(3)])
        once, _ = rref(m)
        twice, _ = rref(once)
        assert once == twice


def test_kernel_identity_and_zero():
    assert kernel(MatrixQ.identity(3)).dim == 0
    full = kernel(MatrixQ.zeros(4, 4))
    assert full == Subspace.full(4)


def test_kernel_hand_example():
    ker = kernel(MatrixQ([[1, 1], [1, 1]]))
    assert ker.basis_rows == ((Q(1), Q(-1)),)


def test_rank_nullity():
    rng = random.Random(12)
    for _ in range(10):
        m = MatrixQ([[random_fraction(rng, 4) for _ in range(5)] for _ in range(3)])
        assert kernel(m).dim + rank(m) == m.cols


def test_invert_diagonal():
    m = MatrixQ.diagonal([1, 2, Q(1, 2)])
    assert invert(m) == MatrixQ.diagonal([1, Q(1, 2), 2])


def test_invert_unipotent_back_substitution():
    assert invert(UNIPOTENT) == MatrixQ([[1, -1, 1], [0, 1, -1], [0, 0, 1]])


def test_invert_singular():
    with pytest.raises(SingularMatrix):
        invert(MatrixQ.zeros(2, 2))


def test_invert_roundtrip():
    rng = random.Random(13)
    for _ in range(8):
        m = random_invertible(4, rng)
        assert m * invert(m) == MatrixQ.identity(4)
        assert invert(m) * m == MatrixQ.identity(4)


def test_char_poly_identity():
    assert char_poly(MatrixQ.identity(3)) == PolyQ.from_roots([1, 1, 1])


def test_char_poly_diagonal():
    assert char_poly(MatrixQ.diagonal([1, 2, Q(1, 2)])) == PolyQ.from_roots([1, 2, Q(1, 2)])
    assert char_poly(MatrixQ.diagonal([1, -1, -1])) == PolyQ.from_roots([1, -1, -1])


def test_cayley_hamilton():
    rng = random.Random(14)
    for n in (2, 3, 4):
        m = MatrixQ([[random_fraction(rng, 3) for _ in range(n)] for _ in range(n)])
        assert char_poly(m).eval_matrix(m).is_zero()


def test_rational_roots_cubed():
    roots, residual = rational_roots(PolyQ.from_roots([1, 1, 1]))
    assert roots == [(Q(1), 3)]
    assert residual.is_constant()


def test_rational_roots_pair():
    roots, residual = rational_roots(PolyQ([1, Q(-5, 2), 1]))
    assert roots == [(Q(1, 2), 1), (Q(2), 1)]
    assert residual.is_constant()


def test_rational_roots_none():
    p = PolyQ([1, 0, 1])
    roots, residual = rational_roots(p)
    assert roots == []
    assert residual == p


def test_rational_roots_multiplicity_bound():
    rng = random.Random(15)
    for _ in range(10):
        p = PolyQ([random_fraction(rng, 4) for _ in range(5)])
        if p.is_zero():
            continue
        roots, residual = rational_roots(p)
        total = sum(m for _, m in roots)
        assert total <= p.degree
        assert (total == p.degree) == residual.is_constant()


def test_generalized_eigenspace_unipotent():
    chain = generalized_eigenspace(UNIPOTENT, 1)
    assert [s.dim for s in chain] == [1, 2, 3]


def test_generalized_eigenspace_identity():
    chain = generalized_eigenspace(MatrixQ.identity(3), 1)
    assert [s.dim for s in chain] == [3]


def test_generalized_eigenspace_neg_pair():
    chain = generalized_eigenspace(MatrixQ.diagonal([1, -1, -1]), -1)
    assert [s.dim for s in chain] == [2]


def test_subspace_sum():
    left = Subspace(3, [basis_vector(3, 0)])
    right = Subspace(3, [basis_vector(3, 1)])
    assert left.sum(right) == Subspace(3, [basis_vector(3, 0), basis_vector(3, 1)])


def test_subspace_intersect():
    left = Subspace(3, [basis_vector(3, 0), basis_vector(3, 1)])
    right = Subspace(3, [basis_vector(3, 1), basis_vector(3, 2)])
    assert left.intersect(right) == Subspace(3, [basis_vector(3, 1)])


def test_subspace_contains_full():
    rng = random.Random(16)
    full = Subspace.full(4)
    for _ in range(5):
        v = tuple(random_fraction(rng, 6) for _ in range(4))
        assert full.contains(v)


def test_subspace_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        Subspace(3, [basis_vector(3, 0)]).sum(Subspace(2, [basis_vector(2, 0)]))


def test_det_matches_char_poly_constant():
    rng = random.Random(17)
    for _ in range(6):
        m = MatrixQ([[random_fraction(rng, 3) for _ in range(3)] for _ in range(3)])
        # det(xI - m) at x = 0 is (-1)^n det(m)
        assert char_poly(m)(0) == -det(m)


def test_sqrt_fraction():
    assert sqrt_fraction(Q(4, 9)) == Q(2, 3)
    assert sqrt_fraction(Q(2)) is None
    assert sqrt_fraction(Q(-4)) is None
