"""Classification of 3-dimensional multiplicative simple BiHom-Lie algebras
into the three canonical families L1(a,b), L2, L3(a), with a self-certifying
change of basis.

Every returned label carries a change-of-basis matrix whose columns are the
coordinates (in the input basis) of a basis in which the whole 4-tuple
equals the catalog constructor's output exactly; the label is verified by
that conjugation before being returned, never inferred from invariants
alone.

Strategy: the induced Lie algebra of a simple input is a split form of sl2,
and both structure maps are automorphisms of it. An automorphism is either
diagonalizable with eigenvalues (1, a, 1/a) or a single full unipotent
Jordan block; the classifier builds an sl2 basis adapted to the maps
(eigenvector analysis in the diagonalizable cases, a Jordan chain plus a
commutant correction in the unipotent ones) and pattern-matches the pair of
canonical shapes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    BiHomAlgebra,
    StructureTensor,
    ad_matrix,
    conjugate_algebra,
)
from .analysis import is_semisimple_lie, is_simple
from .catalog import make_L1, make_L2, make_L3, unipotent_full
from .errors import (
    DimensionMismatch,
    IrrationalEigenvalues,
    NotAutomorphismShape,
    NotSemisimple,
    NotSimple,
    NotSplit,
    Unmatched,
)
from .exactlin import (
    MatrixQ,
    Q,
    Vector,
    as_fraction,
    basis_vector,
    char_poly,
    invert,
    kernel,
    lift_coordinates,
    rational_roots,
    restrict_operator,
    sqrt_fraction,
    vec_scale,
)
from .twist import induce_lie


@dataclass(frozen=True)
class Sl2Triple:
    """Coordinate vectors with [h,e]' = 2e, [h,f]' = -2f, [e,f]' = h."""

    h: Vector
    e: Vector
    f: Vector

    def basis_matrix(self) -> MatrixQ:
        return MatrixQ.from_columns([self.h, self.e, self.f])


@dataclass(frozen=True)
class Profile:
    """Canonical shape of a candidate sl2-automorphism.

    kind is one of DiagonalDistinct, Identity, UnipotentFull,
    UnipotentPartial, DiagNegPair, NegJordan; param carries the eigenvalue a
    for the diagonalizable kinds.
    """

    kind: str
    param: Fraction | None = None


@dataclass(frozen=True)
class ClassLabel:
    family: str  # "L1", "L2" or "L3"
    params: tuple[Fraction, ...]
    change_of_basis: MatrixQ


_GRID_COEFFS = (Q(1), Q(-1), Q(2), Q(-2), Q(1, 2), Q(-1, 2))


def _triple_relations_hold(t: StructureTensor, h, e, f) -> bool:
    return (t.bracket(h, e) == vec_scale(2, e)
            and t.bracket(h, f) == vec_scale(-2, f)
            and t.bracket(e, f) == h)


def _proportionality(v: Vector, w: Vector):
    """c with w = c*v, or None (v must be nonzero)."""
    pivot = next((i for i, x in enumerate(v) if x != 0), None)
    if pivot is None:
        return None
    c = w[pivot] / v[pivot]
    if tuple(c * x for x in v) != tuple(w):
        return None
    return c


def _complete_triple(t: StructureTensor, h0: Vector, e0: Vector, f0: Vector):
    """Scale a raw (h, +eigenvector, -eigenvector) into an exact sl2 triple,
    or return None when the data is inconsistent."""
    w = t.bracket(e0, f0)
    mu = _proportionality(h0, w)
    if mu is None or mu == 0:
        return None
    e = vec_scale(1 / mu, e0)
    if not _triple_relations_hold(t, h0, e, f0):
        return None
    return Sl2Triple(h=h0, e=e, f=f0)


def find_sl2_triple(t: StructureTensor) -> Sl2Triple:
    """Search for an sl2 triple of a split 3-dimensional semisimple Lie
    algebra.

    Candidate h runs over basis vectors and combinations with coefficients
    from a fixed grid, ordered by support size; a candidate is accepted when
    its adjoint map has characteristic polynomial x(x-c)(x+c) for a nonzero
    rational c. Raises NotSplit when the grid is exhausted.
    """
    if t.dim != 3:
        raise DimensionMismatch("sl2 triples live in dimension 3")
    if not is_semisimple_lie(t):
        raise NotSemisimple("not a semisimple Lie algebra")
    from itertools import combinations, product

    def candidates():
        for size in (1, 2, 3):
            for support in combinations(range(3), size):
                for coeffs in product(_GRID_COEFFS, repeat=size):
                    v = [Q(0)] * 3
                    for idx, c in zip(support, coeffs):
                        v[idx] = c
                    yield tuple(v)

    identity = MatrixQ.identity(3)
    for v in candidates():
        ad = ad_matrix(t, v)
        cp = char_poly(ad)
        # x^3 - c^2 x exactly
        if cp.coeffs[0] != 0 or cp.coeffs[2] != 0:
            continue
        k = -cp.coeffs[1]
        if k <= 0:
            continue
        c = sqrt_fraction(k)
        if c is None:
            continue
        h = vec_scale(Q(2) / c, v)
        ad_h = ad_matrix(t, h)
        plus = kernel(ad_h - identity.scale(2))
        minus = kernel(ad_h + identity.scale(2))
        if plus.dim != 1 or minus.dim != 1:
            continue
        triple = _complete_triple(t, h, plus.basis_vectors()[0], minus.basis_vectors()[0])
        if triple is not None:
            return triple
    raise NotSplit("no sl2 triple with rational adjoint eigenvalues "
                   "found within the search grid")


def alpha_profile(m: MatrixQ) -> Profile:
    """Canonical-shape profile of a 3x3 map expected to be an automorphism
    of sl2 (eigenvalue multiset {1, a, 1/a})."""
    if not (m.is_square and m.rows == 3):
        raise DimensionMismatch("profile is defined for 3x3 matrices")
    roots, residual = rational_roots(char_poly(m))
    if not residual.is_constant():
        raise IrrationalEigenvalues(
            f"eigenvalues are irrational (residual factor of degree {residual.degree})")
    eigen = []
    for value, mult in roots:
        eigen.extend([value] * mult)
    eigen.sort()
    if len(eigen) != 3:
        raise NotAutomorphismShape("expected three rational eigenvalues")
    identity = MatrixQ.identity(3)
    if eigen == [1, 1, 1]:
        if m == identity:
            return Profile("Identity")
        n = m - identity
        if not (n * n).is_zero():
            return Profile("UnipotentFull")
        return Profile("UnipotentPartial")
    if eigen == [-1, -1, 1]:
        if kernel(m + identity).dim == 2:
            return Profile("DiagNegPair", Q(-1))
        return Profile("NegJordan")
    if Q(1) not in eigen:
        raise NotAutomorphismShape(f"eigenvalue multiset {eigen} does not contain 1")
    pair = list(eigen)
    pair.remove(Q(1))
    a, b = pair
    if a * b != 1 or a in (1, -1):
        raise NotAutomorphismShape(f"eigenvalue multiset {eigen} is not of the "
                                   "form {1, a, 1/a}")
    chosen = max(pair, key=lambda r: (abs(r), r))
    return Profile("DiagonalDistinct", chosen)


def _adapted_triple_diagonal(t: StructureTensor, m: MatrixQ, r: Fraction) -> Sl2Triple:
    """sl2 triple in which a diagonalizable automorphism with eigenvalues
    (1, r, 1/r), r not in {1,-1}, becomes diag(1, r, 1/r)."""
    identity = MatrixQ.identity(3)
    fixed = kernel(m - identity)
    e_space = kernel(m - identity.scale(r))
    f_space = kernel(m - identity.scale(1 / r))
    if fixed.dim != 1 or e_space.dim != 1 or f_space.dim != 1:
        raise Unmatched("eigenspace dimensions do not match a diagonalizable "
                        "sl2 automorphism")
    h0 = fixed.basis_vectors()[0]
    e0 = e_space.basis_vectors()[0]
    f0 = f_space.basis_vectors()[0]
    c = _proportionality(e0, t.bracket(h0, e0))
    if c is None or c == 0:
        raise Unmatched("map eigenvectors are not root vectors of the fixed element")
    h = vec_scale(Q(2) / c, h0)
    if t.bracket(h, f0) != vec_scale(-2, f0):
        raise Unmatched("eigenvector for the inverse eigenvalue is not the "
                        "opposite root vector")
    triple = _complete_triple(t, h, e0, f0)
    if triple is None:
        raise Unmatched("adapted eigenvectors do not close into an sl2 triple")
    return triple


def _adapted_triple_negpair(t: StructureTensor, m: MatrixQ) -> Sl2Triple:
    """sl2 triple adapted to an involutive automorphism diag(1, -1, -1):
    root vectors are found inside the 2-dimensional (-1)-eigenspace."""
    identity = MatrixQ.identity(3)
    fixed = kernel(m - identity)
    minus = kernel(m + identity)
    if fixed.dim != 1 or minus.dim != 2:
        raise Unmatched("eigenspace dimensions do not match diag(1, -1, -1)")
    h0 = fixed.basis_vectors()[0]
    restricted = restrict_operator(ad_matrix(t, h0), minus)
    if restricted.trace() != 0:
        raise Unmatched("adjoint of the fixed element is not trace-free on "
                        "the (-1)-eigenspace")
    from .exactlin import det as _det
    c = sqrt_fraction(-_det(restricted))
    if c is None:
        raise NotSplit("adapted adjoint eigenvalues are irrational")
    if c == 0:
        raise Unmatched("fixed element is central on the (-1)-eigenspace")
    two = MatrixQ.identity(2)
    plus_coords = kernel(restricted - two.scale(c))
    minus_coords = kernel(restricted + two.scale(c))
    if plus_coords.dim != 1 or minus_coords.dim != 1:
        raise Unmatched("restricted adjoint is not split semisimple")
    e0 = lift_coordinates(minus, plus_coords.basis_vectors()[0])
    f0 = lift_coordinates(minus, minus_coords.basis_vectors()[0])
    h = vec_scale(Q(2) / c, h0)
    triple = _complete_triple(t, h, e0, f0)
    if triple is None:
        raise Unmatched("adapted eigenvectors do not close into an sl2 triple")
    return triple


def _jordan_basis(m: MatrixQ) -> MatrixQ:
    """Chain basis (N^2 v, N v, v) turning a full unipotent Jordan block
    into the canonical upper bidiagonal form."""
    n = m - MatrixQ.identity(3)
    n2 = n * n
    seed = None
    for j in range(3):
        col = basis_vector(3, j)
        if not all(x == 0 for x in n2.apply(col)):
            seed = col
            break
    if seed is None:
        raise Unmatched("map is not a full unipotent Jordan block")
    v2 = n.apply(seed)
    v1 = n.apply(v2)
    # the chain (N^2 v, N v, v) of a full block is always independent
    return MatrixQ.from_columns([v1, v2, seed])


def _case3_shape(t: StructureTensor):
    """Read the two free parameters of an sl2 realization on which the full
    unipotent block acts:

        [u1,u2] = x u1
        [u1,u3] = -(x/2) u1 + x u2
        [u2,u3] = y u1 + (x/2) u2 + x u3

    Returns (x, y), or None when the tensor has a different shape.
    """
    c = t.c
    zero = (Q(0),) * 3
    for i in range(3):
        if c[i][i] != zero:
            return None
    x = c[0][1][0]
    if x == 0:
        return None
    if c[0][1] != (x, Q(0), Q(0)) or c[1][0] != (-x, Q(0), Q(0)):
        return None
    if c[0][2] != (-x / 2, x, Q(0)) or c[2][0] != (x / 2, -x, Q(0)):
        return None
    y = c[1][2][0]
    if c[1][2] != (y, x / 2, x) or c[2][1] != (-y, -x / 2, -x):
        return None
    return x, y


def _toeplitz_unipotent_params(m: MatrixQ):
    """(s, p) for an upper triangular Toeplitz matrix [[s,a,p],[0,s,a],[0,0,s]]
    with s = 1, or None."""
    e = m.entries
    if e[1][0] != 0 or e[2][0] != 0 or e[2][1] != 0:
        return None
    if not (e[0][0] == e[1][1] == e[2][2] == 1):
        return None
    if e[0][1] != e[1][2]:
        return None
    return e[0][1], e[0][2]


def _diag_one_b_param(m: MatrixQ):
    """b for a matrix of the form diag(1, b, 1/b), or None."""
    e = m.entries
    for i in range(3):
        for j in range(3):
            if i != j and e[i][j] != 0:
                return None
    if e[0][0] != 1:
        return None
    b = e[1][1]
    if b == 0 or e[2][2] != 1 / b:
        return None
    return b


_FLIP = MatrixQ([[-1, 0, 0], [0, 0, 1], [0, 1, 0]])


def _l1_param_key(a: Fraction, b: Fraction):
    return (abs(a), a, abs(b), b)


def normalize_l1_params(a, b) -> tuple[Fraction, Fraction, bool]:
    """Canonical representative of {(a, b), (1/a, 1/b)} under the basis flip
    (h, e, f) -> (-h, f, e). Deterministic height rule: prefer the pair with
    larger |a|, then larger a, then larger |b|, then larger b. Returns
    (a, b, flipped)."""
    a = as_fraction(a)
    b = as_fraction(b)
    alt = (1 / a, 1 / b)
    if _l1_param_key(*alt) > _l1_param_key(a, b):
        return alt[0], alt[1], True
    return a, b, False


def _certify(a: BiHomAlgebra, basis: MatrixQ, expected: BiHomAlgebra,
             family: str, params: tuple) -> ClassLabel:
    conj = conjugate_algebra(a, basis)
    if conj.tensor != expected.tensor or conj.alpha != expected.alpha \
            or conj.beta != expected.beta:
        raise Unmatched(
            f"profiles matched family {family} but exact conjugation against "
            "the catalog algebra failed; the input is not isomorphic to "
            f"{family}{tuple(str(p) for p in params)}")
    return ClassLabel(family=family, params=tuple(params), change_of_basis=basis)


def _classify_diagonal_family(a: BiHomAlgebra, triple: Sl2Triple,
                              a_param: Fraction) -> ClassLabel:
    basis = triple.basis_matrix()
    beta_t = invert(basis) * a.beta * basis
    b_param = _diag_one_b_param(beta_t)
    if b_param is None:
        raise Unmatched(
            "alpha is diagonalizable in an adapted sl2 basis but beta is not "
            "diag(1, b, 1/b) there; no canonical family corresponds to this pair")
    a_n, b_n, flipped = normalize_l1_params(a_param, b_param)
    if flipped:
        basis = basis * _FLIP
    return _certify(a, basis, make_L1(a_n, b_n), "L1", (a_n, b_n))


def _classify_unipotent_family(a: BiHomAlgebra, induced: StructureTensor,
                               unipotent: MatrixQ, family: str) -> ClassLabel:
    """Shared L2/L3 path: Jordan-normalize the unipotent map, then correct
    by a commuting basis change so the induced tensor matches the catalog."""
    from .algebra import conjugate_tensor

    jordan = _jordan_basis(unipotent)
    tensor_j = conjugate_tensor(induced, jordan)
    shape = _case3_shape(tensor_j)
    if shape is None:
        raise Unmatched("induced bracket does not take the unipotent-adapted "
                        "canonical shape in the Jordan basis")
    x_in, y_in = shape
    if family == "L2":
        expected = make_L2()
    else:
        beta_j = invert(jordan) * a.beta * jordan
        params = _toeplitz_unipotent_params(beta_j)
        if params is None:
            raise Unmatched("beta does not commute with the unipotent alpha "
                            "in canonical Toeplitz form")
        a_param, p = params
        if p != (a_param * a_param - a_param) / 2:
            raise Unmatched("beta is unipotent but not of the canonical "
                            "companion shape")
        expected = make_L3(a_param)
    target_induced, _, _ = induce_lie(expected)
    x_t, y_t = _case3_shape(target_induced)
    # commutant correction g = s*I + u*N^2 keeps every polynomial in N fixed
    # and moves (x, y) to (s*x, s*y - 2*x*u)
    s = x_t / x_in
    u = (s * y_in - y_t) / (2 * x_in)
    n = unipotent_full() - MatrixQ.identity(3)
    g = MatrixQ.identity(3).scale(s) + (n * n).scale(u)
    basis = jordan * g
    if family == "L2":
        return _certify(a, basis, expected, "L2", ())
    return _certify(a, basis, expected, "L3", (expected.beta.entries[0][1],))


def classify3(a: BiHomAlgebra) -> ClassLabel:
    """Decide which canonical family a 3-dimensional multiplicative simple
    BiHom-Lie algebra belongs to and produce the witnessing change of basis.

    Diagonalizable-alpha inputs land in L1(a,b) (with beta forced diagonal
    in the adapted basis), identity alpha with full unipotent beta in L2,
    and full unipotent alpha with its commuting companion beta in L3(a).
    Profile pairs outside the three families are reported Unmatched; a
    fourth family is never invented.
    """
    if a.dim != 3:
        raise DimensionMismatch("classification is implemented for dimension 3")
    if not is_simple(a):
        raise NotSimple("the algebra is not simple")
    induced, _, _ = induce_lie(a)
    profile_a = alpha_profile(a.alpha)
    profile_b = alpha_profile(a.beta)

    if profile_a.kind == "DiagonalDistinct":
        triple = _adapted_triple_diagonal(induced, a.alpha, profile_a.param)
        return _classify_diagonal_family(a, triple, profile_a.param)
    if profile_a.kind == "DiagNegPair":
        triple = _adapted_triple_negpair(induced, a.alpha)
        return _classify_diagonal_family(a, triple, Q(-1))
    if profile_a.kind == "Identity":
        if profile_b.kind == "Identity":
            triple = find_sl2_triple(induced)
            return _classify_diagonal_family(a, triple, Q(1))
        if profile_b.kind == "DiagonalDistinct":
            triple = _adapted_triple_diagonal(induced, a.beta, profile_b.param)
            return _classify_diagonal_family(a, triple, Q(1))
        if profile_b.kind == "DiagNegPair":
            triple = _adapted_triple_negpair(induced, a.beta)
            return _classify_diagonal_family(a, triple, Q(1))
        if profile_b.kind == "UnipotentFull":
            return _classify_unipotent_family(a, induced, a.beta, "L2")
        raise Unmatched(f"identity alpha with beta profile {profile_b.kind} "
                        "corresponds to no canonical family")
    if profile_a.kind == "UnipotentFull":
        return _classify_unipotent_family(a, induced, a.alpha, "L3")
    raise Unmatched(f"alpha profile {profile_a.kind} is not realized by any "
                    "simple family (such brackets are never simple)")


def bihom_isomorphic3(a1: BiHomAlgebra, a2: BiHomAlgebra) -> MatrixQ | None:
    """Explicit isomorphism between two 3-dimensional simple algebras, or
    None. A returned f satisfies f o alpha1 = alpha2 o f,
    f o beta1 = beta2 o f and f([x,y]_1) = [f(x), f(y)]_2 exactly."""
    label1 = classify3(a1)
    label2 = classify3(a2)
    if label1.family != label2.family or label1.params != label2.params:
        return None
    f = label2.change_of_basis * invert(label1.change_of_basis)
    if f * a1.alpha != a2.alpha * f or f * a1.beta != a2.beta * f:
        raise Unmatched("certified labels agree but the intertwining "
                        "identities fail; inconsistent classification data")
    for i in range(3):
        for j in range(3):
            lhs = f.apply(a1.tensor.bracket_basis(i, j))
            rhs = a2.tensor.bracket(f.column(i), f.column(j))
            if lhs != rhs:
                raise Unmatched("certified labels agree but the bracket "
                                "identity fails; inconsistent classification data")
    return f
