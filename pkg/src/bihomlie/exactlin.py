"""Exact linear algebra over arbitrary-precision rationals.

Everything here is pure and immutable: matrices are tuples of tuples of
``fractions.Fraction``, vectors are tuples of Fraction, and all algorithms
use exact arithmetic with deterministic pivoting (first nonzero by index),
so outputs are reproducible byte for byte.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DimensionMismatch, SingularMatrix

Q = Fraction

Vector = tuple[Fraction, ...]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def vector(values) -> Vector:
    return tuple(as_fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (Q(0),) * n


def basis_vector(n: int, i: int) -> Vector:
    return tuple(Q(1) if j == i else Q(0) for j in range(n))


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v: Vector) -> Vector:
    c = as_fraction(c)
    return tuple(c * a for a in v)


def vec_is_zero(v: Vector) -> bool:
    return all(a == 0 for a in v)


class MatrixQ:
    """Dense rational matrix. Acts on coordinate columns: the j-th column
    holds the image of the j-th basis vector."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        rows = tuple(tuple(as_fraction(x) for x in row) for row in entries)
        if not rows:
            raise DimensionMismatch("matrix needs at least one row")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("ragged matrix rows")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)

    def __setattr__(self, name, value):
        raise AttributeError("MatrixQ is immutable")

    @classmethod
    def identity(cls, n: int) -> "MatrixQ":
        return cls([[Q(1) if i == j else Q(0) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "MatrixQ":
        return cls([[Q(0)] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, values) -> "MatrixQ":
        vals = [as_fraction(v) for v in values]
        n = len(vals)
        return cls([[vals[i] if i == j else Q(0) for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns) -> "MatrixQ":
        cols = [vector(c) for c in columns]
        n = len(cols[0])
        if any(len(c) != n for c in cols):
            raise DimensionMismatch("columns of unequal length")
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(n)])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, MatrixQ) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"MatrixQ[{body}]"

    def __add__(self, other: "MatrixQ") -> "MatrixQ":
        self._same_shape(other)
        return MatrixQ([[a + b for a, b in zip(r1, r2)]
                        for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other: "MatrixQ") -> "MatrixQ":
        self._same_shape(other)
        return MatrixQ([[a - b for a, b in zip(r1, r2)]
                        for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self) -> "MatrixQ":
        return MatrixQ([[-a for a in row] for row in self.entries])

    def __mul__(self, other: "MatrixQ") -> "MatrixQ":
        if not isinstance(other, MatrixQ):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        ocols = list(zip(*other.entries))
        return MatrixQ([[sum(a * b for a, b in zip(row, col)) for col in ocols]
                        for row in self.entries])

    def scale(self, c) -> "MatrixQ":
        c = as_fraction(c)
        return MatrixQ([[c * a for a in row] for row in self.entries])

    def apply(self, v: Vector) -> Vector:
        """Matrix times coordinate column."""
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.rows}x{self.cols}")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)

    def transpose(self) -> "MatrixQ":
        return MatrixQ(list(zip(*self.entries)))

    def trace(self) -> Fraction:
        self._require_square()
        return sum((self.entries[i][i] for i in range(self.rows)), Q(0))

    def is_zero(self) -> bool:
        return all(a == 0 for row in self.entries for a in row)

    def flatten(self) -> Vector:
        return tuple(a for row in self.entries for a in row)

    def _same_shape(self, other: "MatrixQ"):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("matrix shapes differ")

    def _require_square(self):
        if not self.is_square:
            raise DimensionMismatch("square matrix required")


def rref(m: MatrixQ) -> tuple[MatrixQ, int]:
    """Reduced row-echelon form and rank. Pivot choice is the first nonzero
    entry by index, so the result is the unique canonical RREF."""
    work = [list(row) for row in m.entries]
    nrows, ncols = m.rows, m.cols
    pivot_row = 0
    for col in range(ncols):
        src = None
        for r in range(pivot_row, nrows):
            if work[r][col] != 0:
                src = r
                break
        if src is None:
            continue
        work[pivot_row], work[src] = work[src], work[pivot_row]
        inv = 1 / work[pivot_row][col]
        work[pivot_row] = [x * inv for x in work[pivot_row]]
        for r in range(nrows):
            if r != pivot_row and work[r][col] != 0:
                f = work[r][col]
                work[r] = [a - f * b for a, b in zip(work[r], work[pivot_row])]
        pivot_row += 1
        if pivot_row == nrows:
            break
    return MatrixQ(work), pivot_row


def rank(m: MatrixQ) -> int:
    return rref(m)[1]


class SpanBuilder:
    """Incrementally maintained RREF basis of a subspace of Q^n."""

    def __init__(self, ambient_dim: int):
        self.ambient_dim = ambient_dim
        self._rows: list[list[Fraction]] = []
        self._pivots: list[int] = []

    def _reduce(self, v):
        v = list(v)
        for row, p in zip(self._rows, self._pivots):
            if v[p] != 0:
                f = v[p]
                for j in range(p, self.ambient_dim):
                    v[j] -= f * row[j]
        return v

    def add(self, v) -> bool:
        """Add a vector to the span; return True if the dimension grew."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length does not match ambient dimension")
        v = self._reduce(v)
        pivot = next((j for j, x in enumerate(v) if x != 0), None)
        if pivot is None:
            return False
        inv = 1 / v[pivot]
        v = [x * inv for x in v]
        for row in self._rows:
            if row[pivot] != 0:
                f = row[pivot]
                for j in range(pivot, self.ambient_dim):
                    row[j] -= f * v[j]
        at = next((k for k, p in enumerate(self._pivots) if p > pivot), len(self._pivots))
        self._rows.insert(at, v)
        self._pivots.insert(at, pivot)
        return True

    def contains(self, v) -> bool:
        return all(x == 0 for x in self._reduce(v))

    @property
    def dim(self) -> int:
        return len(self._rows)

    def subspace(self) -> "Subspace":
        return Subspace._make(self.ambient_dim, tuple(tuple(r) for r in self._rows))


class Subspace:
    """A subspace of Q^n held by its unique RREF basis, one vector per row."""

    __slots__ = ("ambient_dim", "basis_rows")

    def __init__(self, ambient_dim: int, vectors=()):
        builder = SpanBuilder(ambient_dim)
        for v in vectors:
            builder.add(vector(v))
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis_rows", tuple(tuple(r) for r in builder._rows))

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def _make(cls, ambient_dim, rows):
        obj = object.__new__(cls)
        object.__setattr__(obj, "ambient_dim", ambient_dim)
        object.__setattr__(obj, "basis_rows", rows)
        return obj

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, [basis_vector(ambient_dim, i) for i in range(ambient_dim)])

    @property
    def dim(self) -> int:
        return len(self.basis_rows)

    @property
    def basis(self) -> MatrixQ | None:
        return MatrixQ(self.basis_rows) if self.basis_rows else None

    def basis_vectors(self) -> list[Vector]:
        return [tuple(r) for r in self.basis_rows]

    def contains(self, v: Vector) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector/ambient dimension mismatch")
        b = SpanBuilder(self.ambient_dim)
        for r in self.basis_rows:
            b.add(r)
        return b.contains(v)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis_vectors())

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.ambient_dim, list(self.basis_rows) + list(other.basis_rows))

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus-style intersection: null combinations of the stacked bases."""
        self._check(other)
        if not self.basis_rows or not other.basis_rows:
            return Subspace.zero(self.ambient_dim)
        r1, r2 = len(self.basis_rows), len(other.basis_rows)
        # columns are basis vectors of self and negated basis vectors of other
        stacked = MatrixQ([[self.basis_rows[i][k] for i in range(r1)]
                           + [-other.basis_rows[j][k] for j in range(r2)]
                           for k in range(self.ambient_dim)])
        vectors = []
        for combo in kernel(stacked).basis_vectors():
            v = zero_vector(self.ambient_dim)
            for i in range(r1):
                v = vec_add(v, vec_scale(combo[i], self.basis_rows[i]))
            vectors.append(v)
        return Subspace(self.ambient_dim, vectors)

    def __eq__(self, other):
        return (isinstance(other, Subspace)
                and self.ambient_dim == other.ambient_dim
                and self.basis_rows == other.basis_rows)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis_rows))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"

    def _check(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")


def kernel(m: MatrixQ) -> Subspace:
    """RREF basis of the null space of m."""
    reduced, rk = rref(m)
    pivots = []
    r = 0
    for j in range(m.cols):
        if r < rk and reduced.entries[r][j] == 1 and all(
                reduced.entries[i][j] == 0 for i in range(rk) if i != r):
            pivots.append(j)
            r += 1
    free = [j for j in range(m.cols) if j not in pivots]
    vectors = []
    for j in free:
        v = [Q(0)] * m.cols
        v[j] = Q(1)
        for r_idx, p in enumerate(pivots):
            v[p] = -reduced.entries[r_idx][j]
        vectors.append(v)
    return Subspace(m.cols, vectors)


def invert(m: MatrixQ) -> MatrixQ:
    """Exact inverse via Gauss-Jordan on [m | I]; SingularMatrix when rank < n."""
    m._require_square()
    n = m.rows
    work = [list(m.entries[i]) + [Q(1) if j == i else Q(0) for j in range(n)]
            for i in range(n)]
    for col in range(n):
        src = next((r for r in range(col, n) if work[r][col] != 0), None)
        if src is None:
            raise SingularMatrix(f"matrix is singular (rank deficient at column {col})")
        work[col], work[src] = work[src], work[col]
        inv = 1 / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                f = work[r][col]
                work[r] = [a - f * b for a, b in zip(work[r], work[col])]
    return MatrixQ([row[n:] for row in work])


def det(m: MatrixQ) -> Fraction:
    m._require_square()
    n = m.rows
    work = [list(row) for row in m.entries]
    result = Q(1)
    for col in range(n):
        src = next((r for r in range(col, n) if work[r][col] != 0), None)
        if src is None:
            return Q(0)
        if src != col:
            work[col], work[src] = work[src], work[col]
            result = -result
        result *= work[col][col]
        inv = 1 / work[col][col]
        for r in range(col + 1, n):
            if work[r][col] != 0:
                f = work[r][col] * inv
                work[r] = [a - f * b for a, b in zip(work[r], work[col])]
    return result


class PolyQ:
    """Univariate rational polynomial, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("PolyQ is immutable")

    @classmethod
    def from_roots(cls, roots) -> "PolyQ":
        """Monic polynomial with the given roots (with multiplicity)."""
        p = cls([1])
        for r in roots:
            p = p * cls([-as_fraction(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __call__(self, x) -> Fraction:
        x = as_fraction(x)
        acc = Q(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_matrix(self, m: MatrixQ) -> MatrixQ:
        m._require_square()
        acc = MatrixQ.zeros(m.rows, m.rows)
        for c in reversed(self.coeffs):
            acc = acc * m + MatrixQ.identity(m.rows).scale(c)
        return acc

    def __eq__(self, other):
        return isinstance(other, PolyQ) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __mul__(self, other: "PolyQ") -> "PolyQ":
        if self.is_zero() or other.is_zero():
            return PolyQ([])
        out = [Q(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyQ(out)

    def divide_linear(self, root) -> "PolyQ":
        """Synthetic division by (x - root); the root must be exact."""
        root = as_fraction(root)
        out = []
        acc = Q(0)
        for c in reversed(self.coeffs):
            acc = acc * root + c
            out.append(acc)
        remainder = out.pop()
        if remainder != 0:
            raise ValueError(f"{root} is not a root")
        return PolyQ(list(reversed(out)))

    def __repr__(self):
        if self.is_zero():
            return "PolyQ(0)"
        parts = [f"{c}*x^{i}" for i, c in enumerate(self.coeffs) if c != 0]
        return "PolyQ(" + " + ".join(parts) + ")"


def char_poly(m: MatrixQ) -> PolyQ:
    """Monic characteristic polynomial det(xI - m) by the Faddeev-LeVerrier
    recursion (exact over the rationals)."""
    m._require_square()
    n = m.rows
    coeffs_high_first = [Q(1)]
    mk = MatrixQ.zeros(n, n)
    c = Q(1)
    for k in range(1, n + 1):
        mk = m * (mk + MatrixQ.identity(n).scale(c))
        c = -mk.trace() / k
        coeffs_high_first.append(c)
    return PolyQ(list(reversed(coeffs_high_first)))


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: PolyQ) -> tuple[list[tuple[Fraction, int]], PolyQ]:
    """All rational roots with multiplicities, by the classical candidate
    search over divisors of the cleared constant and leading coefficients.
    Returns (roots, residual); the residual has no rational roots."""
    if p.is_zero():
        raise ValueError("rational_roots of the zero polynomial")
    roots: list[tuple[Fraction, int]] = []
    work = p
    # zero roots first
    zero_mult = 0
    while not work.is_constant() and work.coeffs[0] == 0:
        work = PolyQ(work.coeffs[1:])
        zero_mult += 1
    if zero_mult:
        roots.append((Q(0), zero_mult))
    if work.is_constant():
        return roots, work
    scale = math.lcm(*(c.denominator for c in work.coeffs))
    ints = [int(c * scale) for c in work.coeffs]
    g = math.gcd(*ints)
    ints = [c // g for c in ints]
    candidates = []
    for num in _divisors(ints[0]):
        for den in _divisors(ints[-1]):
            q = Fraction(num, den)
            for cand in (q, -q):
                if cand not in candidates:
                    candidates.append(cand)
    candidates.sort()
    for cand in candidates:
        mult = 0
        while not work.is_constant() and work(cand) == 0:
            work = work.divide_linear(cand)
            mult += 1
        if mult:
            roots.append((cand, mult))
    roots.sort(key=lambda rm: rm[0])
    return roots, work


def generalized_eigenspace(m: MatrixQ, lam) -> list[Subspace]:
    """Kernel chain of (m - lam*I)^k until stabilization; the dimension
    profile reveals the Jordan block structure at lam."""
    m._require_square()
    shifted = m - MatrixQ.identity(m.rows).scale(as_fraction(lam))
    chain = []
    power = shifted
    prev_dim = -1
    while True:
        ker = kernel(power)
        if ker.dim == prev_dim:
            break
        chain.append(ker)
        prev_dim = ker.dim
        if ker.dim == m.rows:
            break
        power = power * shifted
    return chain


def sqrt_fraction(q: Fraction):
    """Exact rational square root, or None when q is not a perfect square."""
    q = as_fraction(q)
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn != q.numerator or rd * rd != q.denominator:
        return None
    return Fraction(rn, rd)


def restrict_operator(op: MatrixQ, space: Subspace) -> MatrixQ:
    """Matrix of an operator that maps `space` into itself, written in the
    coordinates of the RREF basis of `space`. Raises DimensionMismatch when
    the operator does not preserve the subspace."""
    rows = space.basis_vectors()
    pivots = [next(j for j, x in enumerate(r) if x != 0) for r in rows]
    cols = []
    for b in rows:
        img = list(op.apply(b))
        coeffs = []
        for r, p in zip(rows, pivots):
            c = img[p]
            coeffs.append(c)
            if c != 0:
                for j in range(space.ambient_dim):
                    img[j] -= c * r[j]
        if any(x != 0 for x in img):
            raise DimensionMismatch("operator does not preserve the subspace")
        cols.append(coeffs)
    return MatrixQ.from_columns(cols)


def lift_coordinates(space: Subspace, coords) -> Vector:
    """Vector of Q^n given by coordinates in the RREF basis of `space`."""
    out = [Q(0)] * space.ambient_dim
    for c, r in zip(coords, space.basis_vectors()):
        if c != 0:
            for j in range(space.ambient_dim):
                out[j] += c * r[j]
    return tuple(out)
