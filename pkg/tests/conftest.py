"""Shared test helpers: seeded random rationals and invertible matrices."""

from fractions import Fraction

from bihomlie.exactlin import MatrixQ, Q


def random_fraction(rng, max_height=10, nonzero=False):
    while True:
        num = rng.randint(-max_height, max_height)
        den = rng.randint(1, max_height)
        q = Fraction(num, den)
        if not nonzero or q != 0:
            return q


def random_invertible(n, rng, spread=2):
    """Unit lower times unit upper triangular: always invertible, small entries."""
    lower = [[Q(1) if i == j else (Q(rng.randint(-spread, spread)) if i > j else Q(0))
              for j in range(n)] for i in range(n)]
    upper = [[Q(1) if i == j else (Q(rng.randint(-spread, spread)) if i < j else Q(0))
              for j in range(n)] for i in range(n)]
    return MatrixQ(lower) * MatrixQ(upper)
