"""Gale duality diagnostics: kernel bases, the contour map, and its tangents.

Nothing in the certificate path depends on this module; it exists to make the
geometry behind the certificate directly testable.  The contour map
``phi(z) = sum_i b(i) log|<b(i), z>|`` parametrizes the reduced discriminant
contour, and its tangent hyperplane at ``phi(z)`` has normal ``z`` and offset
``sum_i <b(i), z> log|<b(i), z>|``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateConfiguration, SingularDirection
from .lattice import CayleyConfig, kernel_basis

SINGULAR_RTOL = 1e-12


@dataclass(frozen=True)
class GaleDual:
    """Integer kernel basis of the homogenized configuration, rows per point.

    Shape is m x (m - rank); every column sums to zero because the all-ones
    row sits in the homogenized row space.
    """

    rows: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def codim(self) -> int:
        return len(self.rows[0]) if self.rows and self.rows[0] else 0


def gale_dual(config: CayleyConfig) -> GaleDual:
    """Exact lattice kernel of the homogenized Cayley matrix.

    Raises DegenerateConfiguration when the points do not affinely span, i.e.
    the homogenized rank falls below 2n.
    """
    dim = 2 * config.n - 1
    a_hom = [[p[r] for p in config.points] for r in range(dim)]
    a_hom.append([1] * config.m)
    basis, rank = kernel_basis(a_hom)
    if rank < dim + 1:
        raise DegenerateConfiguration(
            f"homogenized rank {rank} < {dim + 1}; points do not affinely span"
        )
    rows = tuple(
        tuple(basis[j][i] for j in range(len(basis))) for i in range(config.m)
    )
    return GaleDual(rows=rows)


def _pairings(dual: GaleDual, zeta: Sequence[float]) -> list[float]:
    if len(zeta) != dual.codim:
        raise ValueError(f"direction must have length {dual.codim}")
    zmax = max((abs(z) for z in zeta), default=0.0)
    out: list[float] = []
    for row in dual.rows:
        s = math.fsum(b * z for b, z in zip(row, zeta))
        if any(row):
            row_scale = sum(abs(b) for b in row) * zmax
            if abs(s) < SINGULAR_RTOL * (1.0 + row_scale):
                raise SingularDirection("direction annihilates a Gale dual row")
        out.append(s)
    return out


def horn_kapranov(dual: GaleDual, zeta: Sequence[float]) -> list[float]:
    """Evaluate the contour map; 0-homogeneous in the direction."""
    pairings = _pairings(dual, zeta)
    out = [0.0] * dual.codim
    for row, s in zip(dual.rows, pairings):
        if s == 0.0:
            continue
        log_s = math.log(abs(s))
        for j, b in enumerate(row):
            out[j] += b * log_s
    return out


def supporting_hyperplane_offset(dual: GaleDual, zeta: Sequence[float]) -> float:
    """Right-hand side of the tangent hyperplane at the contour point.

    Identically equal to ``<zeta, horn_kapranov(dual, zeta)>`` and bounded by
    the entropy estimate ``0.5 * |B zeta|_1 * log(m)`` in absolute value.
    """
    pairings = _pairings(dual, zeta)
    return math.fsum(s * math.log(abs(s)) for s in pairings if s != 0.0)
