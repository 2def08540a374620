"""Structural analysis: ideals, simplicity, semisimplicity of the induced
Lie algebra, simple-ideal decomposition, structure-map permutations, and
type-candidate enumeration.

Simplicity is decided by the Burnside criterion. A subspace is an ideal
exactly when it is invariant under bracketing against every basis vector
and under both structure maps; over an algebraically closed ground field
there is no proper common invariant subspace iff the unital matrix algebra
generated by those operators is the full endomorphism algebra, and the
rational dimension of that span equals its complex dimension because all
generators are rational.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    BiHomAlgebra,
    StructureTensor,
    ad_matrix,
    check_all,
    is_abelian,
    is_lie_algebra,
    right_bracket_matrix,
)
from .errors import (
    AxiomViolation,
    DimensionMismatch,
    IrrationalSplit,
    NotLie,
    NotPermuted,
    NotSemisimple,
)
from .exactlin import (
    MatrixQ,
    Q,
    SpanBuilder,
    Subspace,
    Vector,
    basis_vector,
    char_poly,
    det,
    kernel,
    lift_coordinates,
    rank,
    rational_roots,
    restrict_operator,
    vector,
)


@dataclass(frozen=True)
class IdealReport:
    subspace: Subspace
    is_subalgebra: bool
    is_ideal: bool
    failing_witness: tuple[int, Vector] | None = None


@dataclass(frozen=True)
class Decomposition:
    """Minimal ideals of the induced Lie algebra plus the permutations the
    structure maps induce on them."""

    ideals: tuple[Subspace, ...]
    sigma_alpha: tuple[int, ...]
    sigma_beta: tuple[int, ...]
    m: int

    @property
    def m_warning(self) -> bool:
        # m = 2 is structurally consistent in examples even though the
        # decomposition theory singles it out; flagged, never rejected.
        return self.m == 2


_SERIES_ORDER = ("A", "B", "C", "D", "G2", "F4", "E6", "E7", "E8")


@dataclass(frozen=True)
class TypeLabel:
    """Candidate (series, rank, m): m simple ideals of the given type."""

    series: str
    rank: int
    m: int

    def __str__(self):
        if self.series in ("G2", "F4", "E6", "E7", "E8"):
            return f"({self.series}, m={self.m})"
        return f"({self.series}{self.rank}, m={self.m})"


def _spin(tensor: StructureTensor, maps: list[MatrixQ], seeds: list[Vector]) -> Subspace:
    """Close the span of the seeds under left/right bracketing with every
    basis vector and under the given maps (deterministic worklist order)."""
    n = tensor.dim
    builder = SpanBuilder(n)
    work = []
    for s in seeds:
        if builder.add(s):
            work.append(s)
    basis = [basis_vector(n, k) for k in range(n)]
    while work:
        v = work.pop(0)
        images = []
        for b in basis:
            images.append(tensor.bracket(v, b))
            images.append(tensor.bracket(b, v))
        for m in maps:
            images.append(m.apply(v))
        for w in images:
            if builder.add(w):
                work.append(w)
    return builder.subspace()


def ideal_closure(a: BiHomAlgebra, v) -> Subspace:
    """Smallest subspace containing v that is stable under both structure
    maps and under bracketing with the whole algebra on either side."""
    report = check_all(a)
    if not report.all_pass:
        raise AxiomViolation("ideal_closure requires a verified algebra; failing: "
                             + ", ".join(report.failures()))
    return _spin(a.tensor, [a.alpha, a.beta], [vector(v)])


def is_ideal(a: BiHomAlgebra, s: Subspace) -> IdealReport:
    """Check map-stability and bracket-stability of s on basis generators."""
    if s.ambient_dim != a.dim:
        raise DimensionMismatch("subspace ambient dimension differs from algebra")
    gens = s.basis_vectors()
    for gi, g in enumerate(gens):
        for m in (a.alpha, a.beta):
            img = m.apply(g)
            if not s.contains(img):
                return IdealReport(s, False, False, (gi, img))
    # subalgebra: brackets of generators stay inside
    is_sub = True
    sub_witness = None
    for gi, g in enumerate(gens):
        for h in gens:
            for img in (a.tensor.bracket(g, h), a.tensor.bracket(h, g)):
                if not s.contains(img):
                    is_sub = False
                    sub_witness = (gi, img)
                    break
            if not is_sub:
                break
        if not is_sub:
            break
    if not is_sub:
        return IdealReport(s, False, False, sub_witness)
    # ideal: brackets against all basis vectors stay inside
    for gi, g in enumerate(gens):
        for k in range(a.dim):
            b = basis_vector(a.dim, k)
            for img in (a.tensor.bracket(g, b), a.tensor.bracket(b, g)):
                if not s.contains(img):
                    return IdealReport(s, True, False, (gi, img))
    return IdealReport(s, True, True, None)


def enveloping_dim(gens: list[MatrixQ]) -> int:
    """Dimension of the span of all finite products of the generators
    together with the identity (closure under left multiplication)."""
    if not gens:
        raise DimensionMismatch("at least one generator required")
    n = gens[0].rows
    for g in gens:
        if not (g.is_square and g.rows == n):
            raise DimensionMismatch("generators must be square of one size")
    builder = SpanBuilder(n * n)
    work = [MatrixQ.identity(n)]
    builder.add(work[0].flatten())
    while work:
        w = work.pop(0)
        for g in gens:
            p = g * w
            if builder.add(p.flatten()):
                work.append(p)
    return builder.dim


def burnside_generators(a: BiHomAlgebra) -> list[MatrixQ]:
    """Operators whose common invariant subspaces are exactly the ideals:
    bracketing against every basis vector (both sides, since the BiHom
    bracket is not symmetric) plus the two structure maps and the identity."""
    gens = []
    for k in range(a.dim):
        e_k = basis_vector(a.dim, k)
        gens.append(right_bracket_matrix(a.tensor, e_k))
        gens.append(ad_matrix(a.tensor, e_k))
    gens.extend([a.alpha, a.beta, MatrixQ.identity(a.dim)])
    return gens


def is_simple(a: BiHomAlgebra) -> bool:
    """No proper ideals and not abelian, decided by Burnside: the bracketing
    operators together with alpha, beta and the identity must generate the
    full matrix algebra."""
    report = check_all(a)
    if not report.all_pass:
        raise AxiomViolation("is_simple requires a verified algebra; failing: "
                             + ", ".join(report.failures()))
    if is_abelian(a.tensor):
        return False
    return enveloping_dim(burnside_generators(a)) == a.dim * a.dim


def killing_form(t: StructureTensor) -> MatrixQ:
    """K[i][j] = trace(ad(e_i) ad(e_j)) of an ordinary Lie algebra."""
    lie = is_lie_algebra(t)
    if not lie.ok:
        raise NotLie(f"killing_form needs a Lie algebra: {lie.witness.detail}")
    ads = [ad_matrix(t, basis_vector(t.dim, i)) for i in range(t.dim)]
    return MatrixQ([[ (ads[i] * ads[j]).trace() for j in range(t.dim)]
                    for i in range(t.dim)])


def is_semisimple_lie(t: StructureTensor) -> bool:
    """Cartan criterion: nondegenerate Killing form."""
    return det(killing_form(t)) != 0


def derived_series(t: StructureTensor) -> list[Subspace]:
    """L^(0) = L, L^(k+1) = [L^(k), L^(k)], until stabilization."""
    n = t.dim
    current = Subspace.full(n)
    series = [current]
    while True:
        gens = current.basis_vectors()
        nxt = Subspace(n, [t.bracket(x, y) for x in gens for y in gens])
        if nxt == current:
            break
        series.append(nxt)
        current = nxt
        if current.dim == 0:
            break
    return series


def _killing_complement_within(t: StructureTensor, killing: MatrixQ,
                               inner: Subspace, outer: Subspace) -> Subspace:
    """Killing-orthogonal complement of `inner` inside `outer`."""
    rows = [killing.apply(b) for b in inner.basis_vectors()]
    orth = kernel(MatrixQ(rows))
    return orth.intersect(outer)


def _commutant(ops: list[MatrixQ], d: int) -> list[MatrixQ]:
    """Basis of {z : z op = op z for all ops}, as d x d matrices."""
    rows = []
    for op in ops:
        for i in range(d):
            for j in range(d):
                # entry (i, j) of op*z - z*op as a linear form in z (row-major)
                row = [Q(0)] * (d * d)
                for k in range(d):
                    row[k * d + j] += op.entries[i][k]
                    row[i * d + k] -= op.entries[k][j]
                rows.append(row)
    basis = kernel(MatrixQ(rows)).basis_vectors()
    return [MatrixQ([v[i * d:(i + 1) * d] for i in range(d)]) for v in basis]


def decompose_semisimple(t: StructureTensor) -> list[Subspace]:
    """Minimal ideals of a semisimple Lie algebra.

    Spinning first: if some basis vector of a candidate ideal generates a
    proper sub-ideal, split against its Killing-orthogonal complement and
    recurse. Otherwise split along rational eigenvalues of a non-scalar
    commutant element of the restricted adjoint action; if the commutant is
    scalar the candidate is minimal. A split that exists only over an
    extension field raises IrrationalSplit instead of guessing.
    """
    if not is_semisimple_lie(t):
        raise NotSemisimple("Killing form is degenerate")
    n = t.dim
    killing = killing_form(t)
    ads = [ad_matrix(t, basis_vector(n, k)) for k in range(n)]

    def minimal_ideals(space: Subspace) -> list[Subspace]:
        # spinning pass
        for b in space.basis_vectors():
            sub = _spin(t, [], [b])
            if 0 < sub.dim < space.dim:
                rest = _killing_complement_within(t, killing, sub, space)
                if sub.dim + rest.dim != space.dim:
                    raise NotSemisimple("Killing complement does not split the ideal")
                return minimal_ideals(sub) + minimal_ideals(rest)
        # commutant pass
        restricted = [restrict_operator(ad, space) for ad in ads]
        comm = _commutant(restricted, space.dim)
        if len(comm) <= 1:
            return [space]
        identity = MatrixQ.identity(space.dim)
        for z in comm:
            if z.entries[0][0] != 0 and z == identity.scale(z.entries[0][0]):
                continue
            roots, residual = rational_roots(char_poly(z))
            for lam, _mult in roots:
                shifted = z - identity.scale(lam)
                ker = kernel(shifted)
                if 0 < ker.dim < space.dim:
                    piece = Subspace(n, [lift_coordinates(space, c)
                                         for c in ker.basis_vectors()])
                    rest = _killing_complement_within(t, killing, piece, space)
                    if piece.dim + rest.dim != space.dim:
                        raise NotSemisimple("Killing complement does not split the ideal")
                    return minimal_ideals(piece) + minimal_ideals(rest)
            if not residual.is_constant():
                raise IrrationalSplit(
                    "commutant element splits the ideal only over an extension "
                    f"field (residual factor of degree {residual.degree})")
        raise IrrationalSplit("commutant is non-scalar but yields no rational split")

    def pivot_key(s: Subspace):
        pivots = tuple(next(j for j, x in enumerate(row) if x != 0)
                       for row in s.basis_rows)
        return (pivots, s.basis_rows)

    ideals = minimal_ideals(Subspace.full(n))
    ideals.sort(key=pivot_key)
    return ideals


def automorphism_permutation(ideals: list[Subspace], m: MatrixQ) -> tuple[int, ...]:
    """sigma with m(ideals[i]) = ideals[sigma(i)] as subspace equality."""
    if not ideals:
        raise NotPermuted("empty ideal list")
    n = ideals[0].ambient_dim
    if not (m.is_square and m.rows == n):
        raise DimensionMismatch("map size does not match ambient dimension")
    if rank(m) != n:
        raise NotPermuted("map is not invertible")
    sigma = []
    for i, ideal in enumerate(ideals):
        image = Subspace(n, [m.apply(b) for b in ideal.basis_vectors()])
        target = next((j for j, other in enumerate(ideals) if other == image), None)
        if target is None:
            raise NotPermuted(f"image of ideal {i + 1} is not in the ideal list")
        sigma.append(target)
    if sorted(sigma) != list(range(len(ideals))):
        raise NotPermuted("images of the ideals do not permute the list")
    return tuple(sigma)


def decompose_bihom(a: BiHomAlgebra) -> Decomposition:
    """Decompose the induced Lie algebra into minimal ideals and read off the
    permutations the structure maps induce on them."""
    from .twist import induce_lie
    induced, alpha, beta = induce_lie(a)
    ideals = decompose_semisimple(induced)
    return Decomposition(
        ideals=tuple(ideals),
        sigma_alpha=automorphism_permutation(ideals, alpha),
        sigma_beta=automorphism_permutation(ideals, beta),
        m=len(ideals),
    )


def _series_rank_for(series: str, quotient: int) -> int | None:
    """Smallest-rank solution l of dim_formula(series, l) = quotient, or None."""
    if series == "A":
        # l(l+2) = q
        l = 1
        while l * (l + 2) < quotient:
            l += 1
        return l if l * (l + 2) == quotient else None
    if series in ("B", "C"):
        l = 2 if series == "B" else 3
        while l * (2 * l + 1) < quotient:
            l += 1
        return l if l * (2 * l + 1) == quotient else None
    if series == "D":
        # classical convention l >= 4 avoids the A/B/C overlaps
        l = 4
        while l * (2 * l - 1) < quotient:
            l += 1
        return l if l * (2 * l - 1) == quotient else None
    return None


_EXCEPTIONAL_DIMS = {"G2": 14, "F4": 52, "E6": 78, "E7": 133, "E8": 248}


def type_candidates(dim: int) -> list[TypeLabel]:
    """All (series, rank, m) whose dimension formula matches, ordered by
    increasing m and then by series."""
    if dim < 1:
        raise DimensionMismatch("dimension must be at least 1")
    out = []
    for m in range(1, dim + 1):
        if dim % m != 0:
            continue
        quotient = dim // m
        for series in _SERIES_ORDER:
            if series in _EXCEPTIONAL_DIMS:
                if quotient == _EXCEPTIONAL_DIMS[series]:
                    out.append(TypeLabel(series, 0, m))
            else:
                l = _series_rank_for(series, quotient)
                if l is not None:
                    out.append(TypeLabel(series, l, m))
    return out
