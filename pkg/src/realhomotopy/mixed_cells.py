"""Mixed cells of the lifted Cayley configuration and their circuit inequalities.

A candidate picks one edge (two points) per block.  It is a mixed cell of the
regular subdivision exactly when some vector gamma makes the lifted values
``<gamma, a> + w(a)`` agree on the two edge points of every block and stay
strictly below on all other points of that block (max / upper-face convention).

The stored ``normal`` is the negated gamma.  That orientation makes the normal
double as the branch exponent vector of the toric deformation: the start curve
``x * t**normal`` satisfies the deformed system to leading order as t -> 0.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import EmptySupport, SingularExponentMatrix, TieDegenerate
from .lattice import (
    CayleyConfig,
    Lifting,
    Scalar,
    int_det,
    signed_minor_dependence,
    solve_exact,
)

TIE_RTOL = 1e-12


@dataclass(frozen=True)
class MixedCell:
    """One edge per block, the cell normal, and the lattice volume.

    ``edges`` holds per-block point index pairs (indices into the originating
    support, 0-based).  The first index of each pair is the point with the
    smaller lifted value.  ``primitive_normal`` is the normal rescaled to a
    primitive integer vector when its direction is rational, else None.
    """

    edges: tuple[tuple[int, int], ...]
    normal: tuple[Scalar, ...]
    volume: int
    primitive_normal: tuple[int, ...] | None = None

    def cayley_indices(self, config: CayleyConfig) -> list[int]:
        out: list[int] = []
        for i, (p, q) in enumerate(self.edges):
            blk = config.block_indices(i)
            out.extend([blk[p], blk[q]])
        return out


@dataclass(frozen=True)
class CircuitInequality:
    """A primitive integer functional on liftings, supported on one circuit.

    ``coeffs`` maps Cayley point index to an integer coefficient; ``witness``
    is the excluded point whose position relative to the cell the circuit
    decides.  Orientation: the witness coefficient is negative, equivalently
    every lifting that induces the cell satisfies ``<coeffs, w> > 0``.
    """

    coeffs: dict[int, int]
    witness: int

    def nonzeros(self) -> int:
        return sum(1 for v in self.coeffs.values() if v != 0)

    def l1(self) -> int:
        return sum(abs(v) for v in self.coeffs.values())

    def dot(self, values: Sequence[Scalar]) -> Scalar:
        return sum(c * values[k] for k, c in self.coeffs.items())


@dataclass(frozen=True)
class MixedCellSet:
    """All mixed cells of one lifted configuration plus their circuit system."""

    cells: tuple[MixedCell, ...]
    inequalities: tuple[CircuitInequality, ...]
    lifting: Lifting

    def total_volume(self) -> int:
        return sum(c.volume for c in self.cells)


def mixed_cell_count_bound(n: int, t: int) -> int:
    """Cap on real zeros of a patchworked system: ``2^(n+1) * C(tn-n, n)``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if t < 2:
        raise ValueError("t must be at least 2")
    return 2 ** (n + 1) * math.comb(t * n - n, n)


def _primitive_direction(
    vec: Sequence[Scalar], rtol: float = 1e-9, max_den: int = 64
) -> tuple[int, ...] | None:
    """Rescale a vector to a primitive integer vector of the same direction.

    Returns None when no small-denominator rational direction matches within
    ``rtol``; exact rational input always succeeds.
    """
    if all(isinstance(v, (int, Fraction)) for v in vec):
        fracs = [Fraction(v) for v in vec]
        denom = math.lcm(*(f.denominator for f in fracs)) if fracs else 1
        ints = [int(f * denom) for f in fracs]
        if not any(ints):
            return None
        g = math.gcd(*ints)
        return tuple(v // g for v in ints)
    floats = [float(v) for v in vec]
    pivot = max(range(len(floats)), key=lambda i: abs(floats[i]))
    if floats[pivot] == 0.0:
        return None
    ratios = [Fraction(v / floats[pivot]).limit_denominator(max_den) for v in floats]
    denom = math.lcm(*(r.denominator for r in ratios))
    ints = [int(r * denom) for r in ratios]
    g = math.gcd(*ints)
    if g == 0:
        return None
    ints = [v // g for v in ints]
    if floats[pivot] < 0:
        ints = [-v for v in ints]
    scale = math.sqrt(sum(v * v for v in floats)) / math.sqrt(sum(v * v for v in ints))
    err = max(abs(f - scale * v) for f, v in zip(floats, ints))
    if err > rtol * max(abs(f) for f in floats):
        return None
    return tuple(ints)


def _order_edge(p: int, q: int, lifted: Sequence[Scalar]) -> tuple[int, int]:
    # Lower-lifted point first; deterministic tiebreak by index.
    if (lifted[p], p) <= (lifted[q], q):
        return p, q
    return q, p


def enumerate_mixed_cells(config: CayleyConfig, lifting: Lifting) -> MixedCellSet:
    """All mixed cells of the subdivision induced by ``lifting``.

    Exhausts every per-block edge tuple and decides each one by solving the
    n equality constraints for gamma exactly, then checking strict exclusion
    margins.  A margin inside the tie tolerance raises TieDegenerate; exact
    rational liftings use exact zero tests instead.
    """
    if len(lifting) != config.m:
        raise ValueError("lifting length must equal the Cayley point count")
    n = config.n
    values = list(lifting.values)
    exact = lifting.is_exact()
    scale = 1.0 + max(abs(float(v)) for v in values)
    blocks: list[list[int]] = [config.block_indices(i) for i in range(n)]
    for i, blk in enumerate(blocks):
        if len(blk) < 2:
            raise EmptySupport(f"support {i} has fewer than 2 points")

    base = [config.base_point(k) for k in range(config.m)]
    cells: list[MixedCell] = []
    candidates = itertools.product(
        *(itertools.combinations(range(len(blk)), 2) for blk in blocks)
    )
    for cand in candidates:
        edges = tuple(
            _order_edge(
                blk[p], blk[q], values
            )
            for blk, (p, q) in zip(blocks, cand)
        )
        rows = [
            [base[a][j] - base[b][j] for j in range(n)] for a, b in edges
        ]
        det = int_det(rows)
        if det == 0:
            continue
        rhs = [values[b] - values[a] for a, b in edges]
        gamma = solve_exact(rows, rhs)

        # A violated margin rejects the candidate outright; a tie only makes
        # the lifting degenerate when the candidate is otherwise feasible,
        # i.e. the tied point sits exactly on the candidate's face.
        feasible = True
        tied_point: int | None = None
        for i, blk in enumerate(blocks):
            a_top, _ = edges[i]
            face = sum(g * c for g, c in zip(gamma, base[a_top])) + values[a_top]
            for k in blk:
                if k == edges[i][0] or k == edges[i][1]:
                    continue
                margin = face - (
                    sum(g * c for g, c in zip(gamma, base[k])) + values[k]
                )
                if exact:
                    tie = margin == 0
                else:
                    tie = abs(float(margin)) < TIE_RTOL * scale
                if tie:
                    tied_point = k
                elif margin < 0:
                    feasible = False
                    break
            if not feasible:
                break
        if not feasible:
            continue
        if tied_point is not None:
            raise TieDegenerate(
                f"lifting ties on point {tied_point} against cell {edges}"
            )

        normal = tuple(-g for g in gamma)
        cells.append(
            MixedCell(
                edges=tuple(
                    (config.origin_index[a], config.origin_index[b]) for a, b in edges
                ),
                normal=normal,
                volume=abs(det),
                primitive_normal=_primitive_direction(normal),
            )
        )

    cells.sort(key=lambda c: c.edges)
    inequalities: list[CircuitInequality] = []
    for cell in cells:
        inequalities.extend(circuit_inequalities(cell, config))
    return MixedCellSet(
        cells=tuple(cells), inequalities=tuple(inequalities), lifting=lifting
    )


def circuit_inequalities(
    cell: MixedCell, config: CayleyConfig
) -> list[CircuitInequality]:
    """One circuit inequality per Cayley point excluded from the cell.

    Each vector is the unique affine dependence of the 2n cell points plus the
    excluded point, computed as alternating maximal minors of the homogenized
    point matrix (entries are signed simplex volumes), reduced to a primitive
    integer vector and oriented so the excluded point's entry is negative.
    """
    cell_idx = cell.cayley_indices(config)
    cell_rows = [list(config.points[k]) + [1] for k in cell_idx]
    out: list[CircuitInequality] = []
    cell_set = set(cell_idx)
    for alpha in range(config.m):
        if alpha in cell_set:
            continue
        rows = cell_rows + [list(config.points[alpha]) + [1]]
        dep = signed_minor_dependence(rows)
        g = math.gcd(*dep)
        if g == 0:
            raise SingularExponentMatrix("cell points are affinely dependent")
        dep = [v // g for v in dep]
        if dep[-1] > 0:
            dep = [-v for v in dep]
        coeffs = {k: v for k, v in zip(cell_idx + [alpha], dep) if v != 0}
        out.append(CircuitInequality(coeffs=coeffs, witness=alpha))
    return out
