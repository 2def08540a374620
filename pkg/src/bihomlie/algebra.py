"""Structure-constant representation of BiHom-Lie algebras and exact
verification of their defining axioms.

A BiHom-Lie algebra is a 4-tuple (L, [.,.], alpha, beta) of a vector space,
a bilinear bracket, and two commuting linear maps satisfying

  (1) alpha o beta = beta o alpha
  (2) alpha([x,y]) = [alpha(x), alpha(y)]  and the same for beta
  (3) [beta(x), alpha(y)] = -[beta(y), alpha(x)]
  (4) [beta^2(x), [beta(y), alpha(z)]] + [beta^2(y), [beta(z), alpha(x)]]
        + [beta^2(z), [beta(x), alpha(y)]] = 0

All checks run on basis tuples; multilinearity makes that complete.
Matrices act on coordinate columns: the map sends the j-th basis vector to
the j-th matrix column. Construction never validates the axioms, so invalid
data can be loaded on purpose to exercise the checkers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch
from .exactlin import (
    MatrixQ,
    Vector,
    basis_vector,
    invert,
    rank,
    vec_add,
    vec_is_zero,
    vec_scale,
    vector,
    zero_vector,
)


class StructureTensor:
    """Bracket data c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k.

    No symmetry is imposed: BiHom skew-symmetry is a twisted relation, not
    c[i][j][k] = -c[j][i][k].
    """

    __slots__ = ("dim", "c")

    def __init__(self, c):
        grid = tuple(tuple(vector(row) for row in plane) for plane in c)
        n = len(grid)
        if any(len(plane) != n for plane in grid) or any(
                len(row) != n for plane in grid for row in plane):
            raise DimensionMismatch("structure tensor must be dim x dim x dim")
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "c", grid)

    def __setattr__(self, name, value):
        raise AttributeError("StructureTensor is immutable")

    @classmethod
    def zero(cls, dim: int) -> "StructureTensor":
        z = zero_vector(dim)
        return cls([[z] * dim for _ in range(dim)])

    @classmethod
    def from_brackets(cls, dim: int, brackets: dict) -> "StructureTensor":
        """Build from a sparse {(i, j): coefficient list} table."""
        grid = [[list(zero_vector(dim)) for _ in range(dim)] for _ in range(dim)]
        for (i, j), coeffs in brackets.items():
            grid[i][j] = vector(coeffs)
        return cls(grid)

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self.c[i][j]

    def bracket(self, x: Vector, y: Vector) -> Vector:
        """Bilinear extension of the tensor to coordinate vectors."""
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("vector length does not match algebra dimension")
        out = list(zero_vector(self.dim))
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            row = self.c[i]
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                coeff = xi * yj
                ck = row[j]
                for k in range(self.dim):
                    if ck[k] != 0:
                        out[k] += coeff * ck[k]
        return tuple(out)

    def is_zero(self) -> bool:
        return all(vec_is_zero(row) for plane in self.c for row in plane)

    def __eq__(self, other):
        return isinstance(other, StructureTensor) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"StructureTensor(dim={self.dim})"


def default_basis_names(dim: int) -> tuple[str, ...]:
    return tuple(f"e{i + 1}" for i in range(dim))


@dataclass(frozen=True)
class BiHomAlgebra:
    """The 4-tuple (L, [.,.], alpha, beta) in a fixed basis."""

    dim: int
    tensor: StructureTensor
    alpha: MatrixQ
    beta: MatrixQ
    basis_names: tuple[str, ...] = ()

    def __post_init__(self):
        if self.tensor.dim != self.dim:
            raise DimensionMismatch("tensor dimension differs from algebra dimension")
        for name, m in (("alpha", self.alpha), ("beta", self.beta)):
            if not (m.is_square and m.rows == self.dim):
                raise DimensionMismatch(f"{name} must be {self.dim}x{self.dim}")
        if not self.basis_names:
            object.__setattr__(self, "basis_names", default_basis_names(self.dim))
        elif len(self.basis_names) != self.dim:
            raise DimensionMismatch("one basis name per dimension required")

    def bracket(self, x: Vector, y: Vector) -> Vector:
        return self.tensor.bracket(x, y)


def bracket(a: BiHomAlgebra, x, y) -> Vector:
    """Bracket of two coordinate vectors in the algebra's basis."""
    return a.tensor.bracket(vector(x), vector(y))


@dataclass(frozen=True)
class Witness:
    """Where an identity failed: basis indices plus both sides' coordinates."""

    indices: tuple[int, ...]
    lhs: Vector
    rhs: Vector
    detail: str = ""


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    witness: Witness | None = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class AxiomReport:
    commuting: CheckResult
    multiplicative_alpha: CheckResult
    multiplicative_beta: CheckResult
    skew: CheckResult
    jacobi: CheckResult

    @property
    def all_pass(self) -> bool:
        return all((self.commuting, self.multiplicative_alpha,
                    self.multiplicative_beta, self.skew, self.jacobi))

    def failures(self) -> list[str]:
        names = ("commuting", "multiplicative_alpha", "multiplicative_beta",
                 "skew", "jacobi")
        return [n for n in names if not getattr(self, n).ok]


def check_commuting(a: BiHomAlgebra) -> CheckResult:
    """Axiom (1): alpha and beta commute as matrices."""
    ab = a.alpha * a.beta
    ba = a.beta * a.alpha
    if ab == ba:
        return CheckResult(True)
    ij = next((i, j) for i in range(a.dim) for j in range(a.dim)
              if ab.entries[i][j] != ba.entries[i][j])
    return CheckResult(False, Witness(
        indices=(ij[1],),
        lhs=ab.column(ij[1]),
        rhs=ba.column(ij[1]),
        detail="alpha(beta(e_j)) != beta(alpha(e_j))"))


def _check_bracket_preserving(t: StructureTensor, m: MatrixQ, name: str) -> CheckResult:
    cols = [m.column(j) for j in range(t.dim)]
    for i in range(t.dim):
        for j in range(t.dim):
            lhs = m.apply(t.bracket_basis(i, j))
            rhs = t.bracket(cols[i], cols[j])
            if lhs != rhs:
                return CheckResult(False, Witness(
                    indices=(i, j), lhs=lhs, rhs=rhs,
                    detail=f"{name}([e_i,e_j]) != [{name}(e_i),{name}(e_j)]"))
    return CheckResult(True)


def check_multiplicative_alpha(a: BiHomAlgebra) -> CheckResult:
    """Axiom (2), alpha half."""
    return _check_bracket_preserving(a.tensor, a.alpha, "alpha")


def check_multiplicative_beta(a: BiHomAlgebra) -> CheckResult:
    """Axiom (2), beta half."""
    return _check_bracket_preserving(a.tensor, a.beta, "beta")


def check_multiplicative(a: BiHomAlgebra) -> CheckResult:
    """Axiom (2) for both maps; the witness names the failing map."""
    res = check_multiplicative_alpha(a)
    if not res.ok:
        return res
    return check_multiplicative_beta(a)


def check_bihom_skew(a: BiHomAlgebra) -> CheckResult:
    """Axiom (3) on basis pairs i <= j."""
    acols = [a.alpha.column(j) for j in range(a.dim)]
    bcols = [a.beta.column(j) for j in range(a.dim)]
    for i in range(a.dim):
        for j in range(i, a.dim):
            lhs = a.tensor.bracket(bcols[i], acols[j])
            rhs = vec_scale(-1, a.tensor.bracket(bcols[j], acols[i]))
            if lhs != rhs:
                return CheckResult(False, Witness(
                    indices=(i, j), lhs=lhs, rhs=rhs,
                    detail="[beta(e_i),alpha(e_j)] != -[beta(e_j),alpha(e_i)]"))
    return CheckResult(True)


def check_bihom_jacobi(a: BiHomAlgebra) -> CheckResult:
    """Axiom (4) on basis triples i <= j <= k.

    Sorted triples suffice in combination with axiom (3): the cyclic sum is
    invariant under cyclic permutations and, once the twisted skew-symmetry
    holds, changes sign under transpositions.
    """
    n = a.dim
    acols = [a.alpha.column(j) for j in range(n)]
    bcols = [a.beta.column(j) for j in range(n)]
    beta2 = a.beta * a.beta
    b2cols = [beta2.column(j) for j in range(n)]

    def term(i, j, k):
        inner = a.tensor.bracket(bcols[j], acols[k])
        return a.tensor.bracket(b2cols[i], inner)

    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                total = vec_add(vec_add(term(i, j, k), term(j, k, i)), term(k, i, j))
                if not vec_is_zero(total):
                    return CheckResult(False, Witness(
                        indices=(i, j, k), lhs=total, rhs=zero_vector(n),
                        detail="cyclic BiHom-Jacobi sum is nonzero"))
    return CheckResult(True)


def check_all(a: BiHomAlgebra) -> AxiomReport:
    """Run the four axiom checks and aggregate the verdicts."""
    return AxiomReport(
        commuting=check_commuting(a),
        multiplicative_alpha=check_multiplicative_alpha(a),
        multiplicative_beta=check_multiplicative_beta(a),
        skew=check_bihom_skew(a),
        jacobi=check_bihom_jacobi(a),
    )


def is_lie_algebra(t: StructureTensor) -> CheckResult:
    """Ordinary skew-symmetry and the classical Jacobi identity."""
    n = t.dim
    for i in range(n):
        for j in range(i, n):
            lhs = t.bracket_basis(i, j)
            rhs = vec_scale(-1, t.bracket_basis(j, i))
            if lhs != rhs:
                return CheckResult(False, Witness(
                    indices=(i, j), lhs=lhs, rhs=rhs,
                    detail="[e_i,e_j] != -[e_j,e_i]"))
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                total = vec_add(
                    vec_add(t.bracket(basis_vector(n, i), t.bracket_basis(j, k)),
                            t.bracket(basis_vector(n, j), t.bracket_basis(k, i))),
                    t.bracket(basis_vector(n, k), t.bracket_basis(i, j)))
                if not vec_is_zero(total):
                    return CheckResult(False, Witness(
                        indices=(i, j, k), lhs=total, rhs=zero_vector(n),
                        detail="classical Jacobi sum is nonzero"))
    return CheckResult(True)


def is_abelian(t: StructureTensor) -> bool:
    return t.is_zero()


def is_regular(a: BiHomAlgebra) -> bool:
    """True iff both structure maps are invertible."""
    return rank(a.alpha) == a.dim and rank(a.beta) == a.dim


def ad_matrix(t: StructureTensor, x) -> MatrixQ:
    """Matrix of w -> [x, w] (bracketing with x on the left)."""
    x = vector(x)
    return MatrixQ.from_columns(
        [t.bracket(x, basis_vector(t.dim, j)) for j in range(t.dim)])


def right_bracket_matrix(t: StructureTensor, x) -> MatrixQ:
    """Matrix of w -> [w, x] (bracketing with x on the right)."""
    x = vector(x)
    return MatrixQ.from_columns(
        [t.bracket(basis_vector(t.dim, j), x) for j in range(t.dim)])


def conjugate_tensor(t: StructureTensor, basis: MatrixQ) -> StructureTensor:
    """The tensor in the new basis whose vectors are the columns of `basis`
    (coordinates in the old basis)."""
    if not (basis.is_square and basis.rows == t.dim):
        raise DimensionMismatch("change of basis must be square of matching size")
    inv = invert(basis)
    cols = [basis.column(j) for j in range(t.dim)]
    grid = [[inv.apply(t.bracket(cols[i], cols[j])) for j in range(t.dim)]
            for i in range(t.dim)]
    return StructureTensor(grid)


def conjugate_algebra(a: BiHomAlgebra, basis: MatrixQ) -> BiHomAlgebra:
    """Rewrite the whole 4-tuple in the basis given by the columns of `basis`."""
    inv = invert(basis)
    return BiHomAlgebra(
        dim=a.dim,
        tensor=conjugate_tensor(a.tensor, basis),
        alpha=inv * a.alpha * basis,
        beta=inv * a.beta * basis,
        basis_names=a.basis_names,
    )
