import random
from fractions import Fraction as Q

import pytest

from bihomlie.algebra import (
    BiHomAlgebra,
    StructureTensor,
    bracket,
    check_all,
    check_bihom_jacobi,
    check_bihom_skew,
    check_commuting,
    check_multiplicative,
    check_multiplicative_alpha,
    is_abelian,
    is_lie_algebra,
    is_regular,
)
from bihomlie.catalog import make_L1, make_L2, make_L3, make_sl2, sl2_bihom
from bihomlie.errors import DimensionMismatch
from bihomlie.exactlin import MatrixQ, basis_vector, vec_scale, zero_vector
from conftest import random_fraction


def test_bracket_l1_table_value():
    # [e1, e2] = 2b e2 at (a, b) = (2, 3)
    a = make_L1(2, 3)
    assert bracket(a, basis_vector(3, 0), basis_vector(3, 1)) == (Q(0), Q(6), Q(0))


def test_bracket_bilinear_zero():
    a = make_L1(2, 3)
    assert bracket(a, zero_vector(3), basis_vector(3, 1)) == zero_vector(3)


def test_bracket_sl2_e_f():
    assert make_sl2().bracket(basis_vector(3, 1), basis_vector(3, 2)) == basis_vector(3, 0)


def test_bracket_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        bracket(sl2_bihom(), (1, 0), (0, 1, 0))


def test_check_commuting_equal_maps():
    assert check_commuting(sl2_bihom()).ok


def test_check_commuting_diagonals():
    a = make_L1(2, 3)
    assert check_commuting(a).ok


def test_check_commuting_failure_witness():
    dummy = BiHomAlgebra(
        dim=2,
        tensor=StructureTensor.zero(2),
        alpha=MatrixQ([[0, 1], [0, 0]]),
        beta=MatrixQ([[1, 0], [1, 1]]),
    )
    result = check_commuting(dummy)
    assert not result.ok
    ab = dummy.alpha * dummy.beta
    ba = dummy.beta * dummy.alpha
    j = result.witness.indices[0]
    assert result.witness.lhs == ab.column(j) != ba.column(j) == result.witness.rhs


def test_check_multiplicative_l1():
    assert check_multiplicative(make_L1(2, 3)).ok


def test_check_multiplicative_identity_half():
    a = BiHomAlgebra(dim=3, tensor=make_sl2(), alpha=MatrixQ.identity(3),
                     beta=MatrixQ.diagonal([1, 2, 3]))
    assert check_multiplicative_alpha(a).ok


def test_check_multiplicative_failure():
    a = BiHomAlgebra(dim=3, tensor=make_sl2(), alpha=MatrixQ.diagonal([1, 2, 3]),
                     beta=MatrixQ.identity(3))
    result = check_multiplicative(a)
    assert not result.ok
    # the witness re-evaluates to a genuine inequality
    i, j = result.witness.indices
    lhs = a.alpha.apply(a.tensor.bracket_basis(i, j))
    rhs = a.tensor.bracket(a.alpha.column(i), a.alpha.column(j))
    assert lhs == result.witness.lhs
    assert rhs == result.witness.rhs
    assert lhs != rhs


def test_skew_ordinary_case():
    assert check_bihom_skew(sl2_bihom()).ok


def test_skew_l2_self_bracket():
    # BiHom skew-symmetry does not force [x, x] = 0
    a = make_L2()
    assert a.tensor.bracket_basis(1, 1) == (Q(-2), Q(0), Q(0))
    assert check_bihom_skew(a).ok


def test_skew_l1():
    assert check_bihom_skew(make_L1(2, 3)).ok


def test_jacobi_classical_case():
    assert check_bihom_jacobi(sl2_bihom()).ok


def test_jacobi_l1():
    assert check_bihom_jacobi(make_L1(2, 3)).ok


def test_jacobi_deliberate_violation():
    # flip the sign of [h, e] while leaving [e, h] alone
    broken = {
        (0, 1): (0, -2, 0),
        (1, 0): (0, -2, 0),
        (0, 2): (0, 0, -2),
        (2, 0): (0, 0, 2),
        (1, 2): (1, 0, 0),
        (2, 1): (-1, 0, 0),
    }
    a = BiHomAlgebra(dim=3, tensor=StructureTensor.from_brackets(3, broken),
                     alpha=MatrixQ.identity(3), beta=MatrixQ.identity(3))
    result = check_bihom_jacobi(a)
    assert not result.ok
    assert len(result.witness.indices) == 3


def test_check_all_l3():
    assert check_all(make_L3(3)).all_pass


def test_is_lie_algebra():
    assert is_lie_algebra(make_sl2()).ok
    assert is_lie_algebra(StructureTensor.zero(3)).ok
    result = is_lie_algebra(make_L2().tensor)
    assert not result.ok


def test_is_abelian():
    assert is_abelian(StructureTensor.zero(4))
    assert not is_abelian(make_sl2())
    assert not is_abelian(make_L1(2, 3).tensor)


def test_is_regular():
    assert is_regular(make_L1(2, 3))
    assert is_regular(sl2_bihom())
    singular = BiHomAlgebra(dim=3, tensor=make_sl2(),
                            alpha=MatrixQ([[1, 0, 0], [0, 1, 0], [0, 0, 0]]),
                            beta=MatrixQ.identity(3))
    assert not is_regular(singular)


def test_skew_on_random_vectors():
    # basis-level verdict extends to arbitrary rational combinations
    a = make_L1(2, 3)
    rng = random.Random(21)
    for _ in range(5):
        x = tuple(random_fraction(rng, 5) for _ in range(3))
        y = tuple(random_fraction(rng, 5) for _ in range(3))
        lhs = a.tensor.bracket(a.beta.apply(x), a.alpha.apply(y))
        rhs = vec_scale(-1, a.tensor.bracket(a.beta.apply(y), a.alpha.apply(x)))
        assert lhs == rhs


def test_identity_maps_reduce_to_lie():
    # with alpha = beta = identity, skew + jacobi hold iff the tensor is Lie
    solvable = StructureTensor.from_brackets(2, {(0, 1): (0, 1), (1, 0): (0, -1)})
    for tensor in (make_sl2(), StructureTensor.zero(3), make_L2().tensor, solvable):
        a = BiHomAlgebra(dim=tensor.dim, tensor=tensor,
                         alpha=MatrixQ.identity(tensor.dim),
                         beta=MatrixQ.identity(tensor.dim))
        both = check_bihom_skew(a).ok and check_bihom_jacobi(a).ok
        assert both == is_lie_algebra(tensor).ok
