from __future__ import annotations

import math

import numpy as np
import pytest

from helpers import (
    KNOWN_CELL_EDGES_1BASED,
    KNOWN_CELL_PRIMITIVE_NORMAL,
    dense_system,
    random_sparse_system,
)
from oracles import lp_mixed_cells
from realhomotopy import (
    EmptySupport,
    TieDegenerate,
    build_cayley,
    circuit_inequalities,
    enumerate_mixed_cells,
    log_abs_lifting,
    mixed_cell_count_bound,
    support_system,
)
from realhomotopy.lattice import Lifting


def _lifted(config, lifting, gamma, k):
    base = config.base_point(k)
    return sum(g * c for g, c in zip(gamma, base)) + float(lifting.values[k])


def _check_cell_normal(config, lifting, cell, rtol=1e-9):
    """Re-verify the defining equalities and strict margins of a cell."""
    gamma = [-float(v) for v in cell.normal]
    scale = 1.0 + max(abs(float(v)) for v in lifting.values)
    for i, (p, q) in enumerate(cell.edges):
        blk = config.block_indices(i)
        vp = _lifted(config, lifting, gamma, blk[p])
        vq = _lifted(config, lifting, gamma, blk[q])
        assert vp == pytest.approx(vq, abs=rtol * scale)
        for k in blk:
            if k in (blk[p], blk[q]):
                continue
            assert _lifted(config, lifting, gamma, k) < vp - 1e-12 * scale


class TestCubicConic:
    def test_six_unit_cells(self, cubic_conic):
        config = build_cayley(cubic_conic)
        cells = enumerate_mixed_cells(config, log_abs_lifting(cubic_conic))
        assert len(cells.cells) == 6
        assert all(c.volume == 1 for c in cells.cells)
        assert cells.total_volume() == 6

    def test_known_cell_and_normal(self, cubic_conic):
        config = build_cayley(cubic_conic)
        cells = enumerate_mixed_cells(config, log_abs_lifting(cubic_conic))
        match = [
            c
            for c in cells.cells
            if tuple((p + 1, q + 1) for p, q in c.edges) == KNOWN_CELL_EDGES_1BASED
        ]
        assert len(match) == 1
        cell = match[0]
        assert cell.volume == 1
        assert cell.primitive_normal == KNOWN_CELL_PRIMITIVE_NORMAL
        # Raw normal carries the log-lifting scale; direction is pinned.
        scale = abs(math.log(0.45))
        assert cell.normal == pytest.approx(
            tuple(scale * v for v in KNOWN_CELL_PRIMITIVE_NORMAL), rel=1e-12
        )

    def test_normal_certificates(self, cubic_conic):
        config = build_cayley(cubic_conic)
        lifting = log_abs_lifting(cubic_conic)
        cells = enumerate_mixed_cells(config, lifting)
        for cell in cells.cells:
            _check_cell_normal(config, lifting, cell)

    def test_deterministic(self, cubic_conic):
        config = build_cayley(cubic_conic)
        lifting = log_abs_lifting(cubic_conic)
        a = enumerate_mixed_cells(config, lifting)
        b = enumerate_mixed_cells(config, lifting)
        assert a.cells == b.cells


class TestSmallCases:
    def test_single_candidate_dimension_one(self):
        system = support_system([[[0], [1]]], [[3.0, -7.0]])
        config = build_cayley(system)
        lifting = log_abs_lifting(system)
        cells = enumerate_mixed_cells(config, lifting)
        assert len(cells.cells) == 1
        cell = cells.cells[0]
        assert cell.edges == ((0, 1),)
        assert cell.volume == 1
        # Branch-exponent orientation: w(1) - w(0).
        expected = float(lifting.values[1]) - float(lifting.values[0])
        assert cell.normal[0] == pytest.approx(expected, rel=1e-12)

    def test_tie_raises(self):
        system = support_system([[[0], [1], [2]]], [[1.0, 1.0, 1.0]])
        config = build_cayley(system)
        with pytest.raises(TieDegenerate):
            enumerate_mixed_cells(config, log_abs_lifting(system))

    def test_empty_support(self):
        system = support_system([[[0, 0], [1, 0], [0, 1]], [[0, 0]]] , [[1.0, 1.0, 1.0], [1.0]])
        config = build_cayley(system)
        with pytest.raises(EmptySupport):
            enumerate_mixed_cells(config, log_abs_lifting(system))

    def test_volume_sums_match_bezout(self, rng):
        for d1, d2 in [(1, 1), (2, 1), (2, 2), (3, 2)]:
            system = dense_system(d1, d2, rng)
            config = build_cayley(system)
            cells = enumerate_mixed_cells(config, log_abs_lifting(system))
            assert cells.total_volume() == d1 * d2


class TestOracleAgreement:
    def test_random_systems_match_lp(self, rng):
        for _ in range(30):
            system = random_sparse_system(rng)
            config = build_cayley(system)
            lifting = log_abs_lifting(system)
            cells = enumerate_mixed_cells(config, lifting)
            expected = lp_mixed_cells(config, lifting)
            got = {
                tuple(tuple(sorted(e)) for e in c.edges): c for c in cells.cells
            }
            assert set(got) == {e for e, _, _ in expected}
            for edges, gamma, volume in expected:
                cell = got[edges]
                assert cell.volume == volume
                ours = np.array([float(v) for v in cell.normal])
                ref = -gamma
                assert np.allclose(
                    ours / np.linalg.norm(ours),
                    ref / np.linalg.norm(ref),
                    atol=1e-7,
                )


class TestCircuits:
    def test_unique_univariate_circuit(self):
        system = support_system([[[0], [1], [2]]], [[1.0, 0.2, 1.0]])
        config = build_cayley(system)
        lifting = Lifting(values=(0.0, -1.0, 0.0))
        cells = enumerate_mixed_cells(config, lifting)
        assert len(cells.cells) == 1
        assert cells.cells[0].edges == ((0, 2),)
        ineqs = circuit_inequalities(cells.cells[0], config)
        assert len(ineqs) == 1
        zeta = ineqs[0]
        assert zeta.witness == 1
        assert zeta.coeffs == {0: 1, 1: -2, 2: 1}
        assert zeta.dot(lifting.values) > 0

    def test_circuit_properties_random(self, rng):
        for _ in range(10):
            system = random_sparse_system(rng)
            config = build_cayley(system)
            lifting = log_abs_lifting(system)
            cells = enumerate_mixed_cells(config, lifting)
            n = config.n
            t = max(len(s) for s in system.supports)
            for cell in cells.cells:
                ineqs = circuit_inequalities(cell, config)
                assert len(ineqs) == config.m - 2 * n
                assert len(ineqs) <= n * (t - 2)
                for zeta in ineqs:
                    assert zeta.nonzeros() <= 2 * n + 1
                    assert zeta.coeffs[zeta.witness] < 0
                    assert float(zeta.dot(lifting.values)) > 0
                    # The vector annihilates the homogenized configuration.
                    dim = 2 * n - 1
                    for r in range(dim):
                        assert (
                            sum(v * config.points[k][r] for k, v in zeta.coeffs.items())
                            == 0
                        )
                    assert sum(zeta.coeffs.values()) == 0

    def test_witness_entry_is_cell_volume(self, cubic_conic):
        # The excluded point's coefficient is the cell simplex volume up to
        # the primitive rescaling.
        config = build_cayley(cubic_conic)
        cells = enumerate_mixed_cells(config, log_abs_lifting(cubic_conic))
        for cell in cells.cells:
            for zeta in circuit_inequalities(cell, config):
                assert abs(zeta.coeffs[zeta.witness]) <= cell.volume


class TestCountBound:
    def test_reference_values(self):
        assert mixed_cell_count_bound(2, 8) == 728
        assert mixed_cell_count_bound(2, 8) < 2**12
        assert mixed_cell_count_bound(1, 2) == 4
        assert mixed_cell_count_bound(2, 3) == 48

    def test_domain(self):
        with pytest.raises(ValueError):
            mixed_cell_count_bound(0, 3)
        with pytest.raises(ValueError):
            mixed_cell_count_bound(2, 1)

    def test_bounds_cell_count(self, rng):
        for _ in range(10):
            system = random_sparse_system(rng)
            config = build_cayley(system)
            cells = enumerate_mixed_cells(config, log_abs_lifting(system))
            t = max(len(s) for s in system.supports)
            assert len(cells.cells) <= mixed_cell_count_bound(config.n, t)
