"""Supports, coefficients, liftings, the Cayley embedding, and exact lattice arithmetic.

Everything combinatorial downstream (cell enumeration, circuit vectors, Gale
duals, binomial normal forms) routes its integer linear algebra through this
module.  All of it runs on Python ints, so exponent arithmetic is exact at any
magnitude; numpy never touches these code paths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import SingularExponentMatrix

Scalar = Union[int, float, Fraction]

IntMatrix = list[list[int]]


def log_abs(value: Scalar) -> float:
    """Natural log of ``abs(value)``.

    Fractions are split into integer numerator/denominator logs so that huge
    exact coefficients never overflow an intermediate float.
    """
    if isinstance(value, Fraction):
        if value == 0:
            raise ValueError("log of zero coefficient")
        return math.log(abs(value.numerator)) - math.log(value.denominator)
    v = abs(float(value))
    if v == 0.0:
        raise ValueError("log of zero coefficient")
    return math.log(v)


# ---------------------------------------------------------------------------
# Domain types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SupportSet:
    """An ordered set of distinct integer exponent vectors in Z^n."""

    points: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self) -> None:
        if not self.points:
            raise ValueError("support must contain at least one point")
        for p in self.points:
            if len(p) != self.n:
                raise ValueError(f"point {p} does not have dimension {self.n}")
            if not all(isinstance(c, int) for c in p):
                raise ValueError(f"point {p} has non-integer coordinates")
        if len(set(self.points)) != len(self.points):
            raise ValueError("support points must be distinct")

    def __len__(self) -> int:
        return len(self.points)


def support_set(points: Sequence[Sequence[int]]) -> SupportSet:
    """Build a SupportSet, inferring the ambient dimension from the points."""
    pts = tuple(tuple(int(c) for c in p) for p in points)
    if not pts:
        raise ValueError("empty support")
    return SupportSet(points=pts, n=len(pts[0]))


@dataclass(frozen=True)
class SupportSystem:
    """A square sparse system: n supports in Z^n with aligned nonzero coefficients."""

    supports: tuple[SupportSet, ...]
    coefficients: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self) -> None:
        if not self.supports:
            raise ValueError("system has no equations")
        n = self.supports[0].n
        if len(self.supports) != n:
            raise ValueError(
                f"system is not square: {len(self.supports)} supports in dimension {n}"
            )
        if len(self.coefficients) != len(self.supports):
            raise ValueError("one coefficient vector per support is required")
        for sup, coeffs in zip(self.supports, self.coefficients):
            if sup.n != n:
                raise ValueError("all supports must share one ambient dimension")
            if len(coeffs) != len(sup):
                raise ValueError("coefficient count must match support size")
            for c in coeffs:
                if c == 0:
                    raise ValueError("zero coefficient in support")

    @property
    def n(self) -> int:
        return self.supports[0].n


def support_system(
    supports: Sequence[Sequence[Sequence[int]]],
    coefficients: Sequence[Sequence[Scalar]],
) -> SupportSystem:
    return SupportSystem(
        supports=tuple(support_set(s) for s in supports),
        coefficients=tuple(tuple(cs) for cs in coefficients),
    )


@dataclass(frozen=True)
class CayleyConfig:
    """The Cayley embedding of n supports into Z^(2n-1) with block provenance.

    Point k originates from support ``block[k]`` at position ``origin_index[k]``;
    ordering is block-major and preserves the input order inside each block.
    """

    points: tuple[tuple[int, ...], ...]
    block: tuple[int, ...]
    origin_index: tuple[int, ...]
    n: int

    @property
    def m(self) -> int:
        return len(self.points)

    def block_indices(self, i: int) -> list[int]:
        return [k for k, b in enumerate(self.block) if b == i]

    def base_point(self, k: int) -> tuple[int, ...]:
        """The original exponent vector in Z^n (block tag stripped)."""
        return self.points[k][: self.n]


@dataclass(frozen=True)
class Lifting:
    """One real height per Cayley point."""

    values: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        for v in self.values:
            if isinstance(v, float) and not math.isfinite(v):
                raise ValueError("lifting values must be finite")

    def __len__(self) -> int:
        return len(self.values)

    def as_floats(self) -> list[float]:
        return [float(v) for v in self.values]

    def is_exact(self) -> bool:
        return all(isinstance(v, (int, Fraction)) for v in self.values)


# ---------------------------------------------------------------------------
# Cayley embedding and lifting construction
# ---------------------------------------------------------------------------

def _embed(point_lists: Sequence[Sequence[tuple[int, ...]]]) -> list[tuple[int, ...]]:
    # Block i >= 1 is tagged with e_{i-1} in Z^(k-1); e_0 is the empty tag.
    k = len(point_lists)
    out: list[tuple[int, ...]] = []
    for i, pts in enumerate(point_lists):
        tag = tuple(1 if j == i - 1 else 0 for j in range(k - 1))
        for p in pts:
            out.append(tuple(p) + tag)
    return out


def build_cayley(system: SupportSystem) -> CayleyConfig:
    """Stack the supports with standard-basis tags into one configuration.

    The result lives in Z^(2n-1) and is ordered block-major, so Cayley index
    equals the flat position of the matching coefficient.
    """
    n = system.n
    if len(system.supports) != n:
        raise ValueError("non-square system")
    points = _embed([s.points for s in system.supports])
    block: list[int] = []
    origin: list[int] = []
    for i, s in enumerate(system.supports):
        block.extend([i] * len(s))
        origin.extend(range(len(s)))
    return CayleyConfig(
        points=tuple(points),
        block=tuple(block),
        origin_index=tuple(origin),
        n=n,
    )


def log_abs_lifting(system: SupportSystem) -> Lifting:
    """The lifting log|c| per Cayley point, block-major."""
    values: list[float] = []
    for coeffs in system.coefficients:
        values.extend(log_abs(c) for c in coeffs)
    return Lifting(values=tuple(values))


# ---------------------------------------------------------------------------
# Exact integer linear algebra
# ---------------------------------------------------------------------------

def int_det(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    a = [[int(x) for x in row] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot_row is None:
                return 0
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _minor(matrix: Sequence[Sequence[int]], drop_row: int, drop_col: int) -> IntMatrix:
    return [
        [matrix[i][j] for j in range(len(matrix)) if j != drop_col]
        for i in range(len(matrix))
        if i != drop_row
    ]


def adjugate(matrix: Sequence[Sequence[int]]) -> IntMatrix:
    """Exact adjugate; ``adjugate(D) @ D == det(D) * I``."""
    n = len(matrix)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sign = -1 if (i + j) % 2 else 1
            adj[j][i] = sign * int_det(_minor(matrix, i, j))
    return adj


def solve_exact(matrix: Sequence[Sequence[int]], rhs: Sequence[Scalar]) -> list[Scalar]:
    """Solve an integer square system for a rational or float right-hand side.

    Uses the exact adjugate so that the only rounding is one multiply-add per
    entry when the right-hand side is float; Fraction input stays exact.
    """
    det = int_det(matrix)
    if det == 0:
        raise SingularExponentMatrix("singular exponent matrix")
    adj = adjugate(matrix)
    n = len(matrix)
    out: list[Scalar] = []
    for i in range(n):
        acc = sum(adj[i][j] * rhs[j] for j in range(n))
        if isinstance(acc, (int, Fraction)):
            out.append(Fraction(acc, det))
        else:
            out.append(acc / det)
    return out


def _row_hnf_upper(matrix: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix, list[int]]:
    """Row-style Hermite form: U @ M = H with H in echelon form, positive pivots.

    Returns (H, U, pivot_columns).  Works for any rectangular integer matrix;
    zero rows of H sit at the bottom and the matching rows of U span the left
    kernel of M as a lattice.
    """
    h = [[int(x) for x in row] for row in matrix]
    rows = len(h)
    cols = len(h[0]) if rows else 0
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        # Chase the column to a single nonzero entry at row r via gcd steps.
        while True:
            nz = [i for i in range(r, rows) if h[i][c] != 0]
            if not nz:
                break
            i_min = min(nz, key=lambda i: abs(h[i][c]))
            if i_min != r:
                h[r], h[i_min] = h[i_min], h[r]
                u[r], u[i_min] = u[i_min], u[r]
            done = True
            for i in range(r + 1, rows):
                if h[i][c] != 0:
                    q = h[i][c] // h[r][c]
                    for j in range(cols):
                        h[i][j] -= q * h[r][j]
                    for j in range(rows):
                        u[i][j] -= q * u[r][j]
                    if h[i][c] != 0:
                        done = False
            if done:
                break
        if h[r][c] == 0:
            continue
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = h[i][c] // h[r][c]
            if q != 0:
                for j in range(cols):
                    h[i][j] -= q * h[r][j]
                for j in range(rows):
                    u[i][j] -= q * u[r][j]
        pivots.append(c)
        r += 1
    return h, u, pivots


def hermite_normal_form(matrix: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Lower-triangular Hermite form of a nonsingular square integer matrix.

    Returns (H, U) with U @ matrix == H, |det U| == 1, H lower triangular with
    positive diagonal.  All arithmetic is exact; a singular input raises
    SingularExponentMatrix.
    """
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ValueError("matrix must be square")
    if int_det(matrix) == 0:
        raise SingularExponentMatrix("singular exponent matrix")
    # Conjugating by the order-reversing permutation swaps upper and lower
    # triangular forms: H_lower = J (upper HNF of J D J) J.
    rev = [[int(matrix[n - 1 - i][n - 1 - j]) for j in range(n)] for i in range(n)]
    h_up, u_up, _ = _row_hnf_upper(rev)
    h = [[h_up[n - 1 - i][n - 1 - j] for j in range(n)] for i in range(n)]
    u = [[u_up[n - 1 - i][n - 1 - j] for j in range(n)] for i in range(n)]
    return h, u


def kernel_basis(matrix: Sequence[Sequence[int]]) -> tuple[list[list[int]], int]:
    """Lattice basis of the right kernel of an integer matrix.

    Returns (basis_vectors, rank).  The basis vectors are rows; they generate
    the full integer kernel because they come from a unimodular transform.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    transposed = [[matrix[i][j] for i in range(rows)] for j in range(cols)]
    _, u, pivots = _row_hnf_upper(transposed)
    rank = len(pivots)
    return [u[i] for i in range(rank, cols)], rank


def signed_minor_dependence(rows: Sequence[Sequence[int]]) -> list[int]:
    """The affine-dependence vector of d+2 points given as homogenized rows.

    For a (d+1) x d integer matrix of rank d, the vector of alternating maximal
    minors spans its left kernel; entries are signed simplex volumes.
    """
    k = len(rows)
    out: list[int] = []
    for drop in range(k):
        sub = [list(rows[i]) for i in range(k) if i != drop]
        sign = -1 if drop % 2 else 1
        out.append(sign * int_det(sub))
    return out
