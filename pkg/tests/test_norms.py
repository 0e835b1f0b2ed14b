"""Tests for inner products and norms."""

from math import pi, sqrt

import numpy as np
import pytest

from prsplit.models import GraphGrayScottNorm, L2Norm, WeightedCaginalpNorm
from prsplit.norms import error_norm, inner, norm
from prsplit.spectral import LinearSymbol, State, apply_linear

KINDS = [L2Norm(), WeightedCaginalpNorm(ell=0.5), GraphGrayScottNorm(d1=1.0, d2=2.0)]


class TestNorms:
    """Tests for the three norm kinds."""

    def test_l2_of_constant(self, grid16) -> None:
        """Test |(1, 1)| = 2pi * sqrt(2) on (-pi, pi)^2."""
        u = State.constant(grid16, 1.0, 1.0)

        assert norm(L2Norm(), u) == pytest.approx(2 * pi * sqrt(2))

    def test_weighted_of_constant(self, grid16) -> None:
        """Test |(psi, phi)|^2 = |psi|^2 + l^2 |phi|^2."""
        u = State.constant(grid16, 1.0, 1.0)

        assert norm(WeightedCaginalpNorm(ell=0.5), u) == pytest.approx(2 * pi * sqrt(1.25))

    def test_graph_of_constant_equals_l2(self, grid16) -> None:
        """Test that the graph norm adds nothing for the zero mode."""
        u = State.constant(grid16, 0.7, -0.2)

        graph = norm(GraphGrayScottNorm(d1=8e-4, d2=4e-4), u)

        assert graph == pytest.approx(norm(L2Norm(), u), rel=1e-13)

    def test_graph_of_cosine(self, grid16) -> None:
        """Test |(cos x1, 0)|_A^2 = |Au|^2 + |u|^2 = 2 * 2pi^2 for d1 = 1."""
        x1, _ = grid16.coordinates()
        u = State.from_components(grid16, np.cos(x1), np.zeros(grid16.shape))

        assert norm(GraphGrayScottNorm(d1=1.0, d2=1.0), u) == pytest.approx(2 * pi, rel=1e-12)

    def test_graph_matches_physical_space(self, grid16, smooth_state) -> None:
        """Test the spectral graph product against (Au, Av) + (u, v) in physical space."""
        d1, d2 = 0.3, 0.7
        u, v = smooth_state(grid16), smooth_state(grid16)
        sym = LinearSymbol.diagonal(grid16, d1, d2)

        expected = inner(L2Norm(), apply_linear(sym, u), apply_linear(sym, v)) + inner(
            L2Norm(), u, v
        )

        assert inner(GraphGrayScottNorm(d1=d1, d2=d2), u, v) == pytest.approx(expected, rel=1e-11)

    def test_inner_is_symmetric(self, grid16, smooth_state) -> None:
        """Test (u, v) == (v, u) for every kind."""
        u, v = smooth_state(grid16), smooth_state(grid16)
        for kind in (L2Norm(), WeightedCaginalpNorm(ell=0.5), GraphGrayScottNorm(d1=1.0, d2=2.0)):
            assert inner(kind, u, v) == pytest.approx(inner(kind, v, u), rel=1e-12)

    def test_error_norm_of_equal_states(self, grid8, smooth_state) -> None:
        """Test that identical states have zero distance."""
        u = smooth_state(grid8)

        assert error_norm(GraphGrayScottNorm(d1=1.0, d2=1.0), u, u.copy()) == 0.0

    @pytest.mark.parametrize("kind", KINDS, ids=lambda k: k.tag)
    def test_inner_is_bilinear(self, grid16, rng, kind) -> None:
        """Test (a u + b v, z) == a (u, z) + b (v, z) on random states."""
        for _ in range(20):
            u, v, z = (State(rng.standard_normal((2, 16, 16)), grid16) for _ in range(3))
            a, b = rng.uniform(-3.0, 3.0, size=2)

            lhs = inner(kind, a * u + b * v, z)
            rhs = a * inner(kind, u, z) + b * inner(kind, v, z)

            scale = (abs(a) * norm(kind, u) + abs(b) * norm(kind, v)) * norm(kind, z)
            assert abs(lhs - rhs) <= 1e-12 * scale

    @pytest.mark.parametrize("kind", KINDS, ids=lambda k: k.tag)
    def test_inner_is_positive_definite(self, grid16, rng, kind) -> None:
        """Test (u, u) > 0 for nonzero u and (0, 0) == 0."""
        for _ in range(20):
            u = State(rng.standard_normal((2, 16, 16)), grid16)
            assert inner(kind, u, u) > 0.0

        single = State.zeros(grid16)
        single.data[1, 3, 5] = 1e-3
        assert inner(kind, single, single) > 0.0
        assert inner(kind, State.zeros(grid16), State.zeros(grid16)) == 0.0
