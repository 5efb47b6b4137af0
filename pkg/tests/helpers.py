"""Shared system builders and pinned reference data for the test suite."""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from realhomotopy import SupportSystem, support_system

BASE = Fraction(9, 20)

CUBIC_SUPPORT = [
    [0, 3], [1, 2], [2, 1], [3, 0], [0, 2],
    [1, 1], [2, 0], [0, 1], [1, 0], [0, 0],
]
CUBIC_POWERS = [0, 1, 5, 12, 1, 4, 9, 5, 9, 12]
CUBIC_SIGNS = [1, -1, -1, 1, -1, 1, -1, -1, -1, 1]

CONIC_SUPPORT = [[0, 2], [1, 1], [2, 0], [0, 1], [1, 0], [0, 0]]
CONIC_POWERS = [8, 6, 6, 3, 2, 0]
CONIC_SIGNS = [1, -1, 1, -1, -1, 1]

# Published reference output for the cubic/conic instance.
EXPECTED_START_SOLUTIONS = [
    (4.938271604938272, 2.2222222222222223),
    (4.938271604938272, -0.20249999999999999),
    (4.938271604938272, -0.041006249999999994),
    (24.386526444139612, 10.973936899862824),
    (24.386526444139612, -1.0),
    (24.386526444139612, 0.09112500000000004),
]
EXPECTED_TRACKED_SOLUTIONS = [
    (4.20818, 2.41707),
    (7.12063, -0.138875),
    (6.94337, -0.0383256),
    (49.3211, 24.3919),
    (15.9697, -0.517115),
    (17.5735, 0.0244792),
]
KNOWN_CELL_EDGES_1BASED = ((2, 1), (5, 6))
KNOWN_CELL_PRIMITIVE_NORMAL = (-2, -1)

# First verified run of this implementation (cells oracle-checked beforehand);
# the certificate declines this instance, the slack log(16) dominates.
EXPECTED_CERT_VERDICT = False
EXPECTED_CERT_MIN_MARGIN = -22.136333348873421


def cubic_conic_system() -> SupportSystem:
    """Dense cubic and conic with signed powers of 9/20 as coefficients."""
    f_coeffs = [s * BASE**p for s, p in zip(CUBIC_SIGNS, CUBIC_POWERS)]
    g_coeffs = [s * BASE**p for s, p in zip(CONIC_SIGNS, CONIC_POWERS)]
    return support_system([CUBIC_SUPPORT, CONIC_SUPPORT], [f_coeffs, g_coeffs])


def quadratic_system(c0: float, c1: float, c2: float) -> SupportSystem:
    return support_system([[[0], [1], [2]]], [[c0, c1, c2]])


def dense_support(degree: int) -> list[list[int]]:
    return [
        [i, j]
        for i, j in itertools.product(range(degree + 1), repeat=2)
        if i + j <= degree
    ]


def dense_system(d1: int, d2: int, rng: np.random.Generator) -> SupportSystem:
    supports = [dense_support(d1), dense_support(d2)]
    coefficients = [
        [float(s) * float(np.exp(rng.uniform(-1.5, 1.5))) for s in rng.choice([-1.0, 1.0], len(sup))]
        for sup in supports
    ]
    return support_system(supports, coefficients)


def random_sparse_system(
    rng: np.random.Generator,
    n: int = 2,
    min_terms: int = 3,
    max_terms: int = 5,
    box: int = 4,
) -> SupportSystem:
    """Random square system with log-uniform coefficients, distinct supports."""
    supports = []
    for _ in range(n):
        k = int(rng.integers(min_terms, max_terms + 1))
        pts: set[tuple[int, ...]] = set()
        while len(pts) < k:
            pts.add(tuple(int(v) for v in rng.integers(0, box + 1, size=n)))
        supports.append(sorted(pts))
    coefficients = [
        [
            float(s) * float(np.exp(rng.uniform(-3.0, 3.0)))
            for s in rng.choice([-1.0, 1.0], len(sup))
        ]
        for sup in supports
    ]
    return support_system(supports, coefficients)
