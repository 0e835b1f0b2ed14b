"""Tests for grids, states and spectral linear operators."""

from math import pi

import numpy as np
import pytest

from prsplit.errors import (
    GridConfigurationError,
    GridMismatchError,
    InvalidArgumentError,
    NonFiniteStateError,
)
from prsplit.models import L2Norm, WeightedCaginalpNorm
from prsplit.norms import norm
from prsplit.spectral import (
    LinearSymbol,
    State,
    apply_linear,
    cayley_amplification,
    linear_cayley,
    linear_resolvent,
    make_grid,
)

RESOLVENT_TAUS = [1 / 128, 1 / 64, 1 / 32, 1 / 16, 1 / 8, 1 / 4, 1 / 2]


def _random_state(grid, rng) -> State:
    return State(rng.standard_normal((2, *grid.shape)), grid)


class TestMakeGrid:
    """Tests for grid construction."""

    def test_grid_geometry(self) -> None:
        """Test spacing, coordinates and the Laplacian symbol on (-pi, pi)^2."""
        grid = make_grid(16)

        assert grid.dx == pytest.approx(2 * pi / 16)
        x1, x2 = grid.coordinates()
        assert x1[0, 0] == pytest.approx(-pi)
        assert x1[1, 0] - x1[0, 0] == pytest.approx(grid.dx)
        assert np.all(x1[:, 0] == x1[:, 5])
        assert np.all(x2[0, :] == x2[7, :])

        assert grid.laplacian_symbol[0, 0] == 0.0
        assert grid.laplacian_symbol[grid.mode_index(1, 0)] == pytest.approx(-1.0)
        assert grid.laplacian_symbol[grid.mode_index(-2, 3)] == pytest.approx(-13.0)
        assert np.all(grid.laplacian_symbol <= 0)

    def test_symbol_scales_with_domain(self) -> None:
        """Test lambda = -(k1^2 + k2^2)(pi/L)^2 for L != pi."""
        grid = make_grid(8, domain_half_width=2.0)

        assert grid.laplacian_symbol[grid.mode_index(1, 1)] == pytest.approx(-2 * (pi / 2.0) ** 2)

    def test_grids_are_cached(self) -> None:
        """Test that equal inputs return the same grid object."""
        assert make_grid(32) is make_grid(32)

    @pytest.mark.parametrize("n", [0, 3, 6, 2, 100])
    def test_invalid_sizes(self, n: int) -> None:
        """Test that non-powers of two and tiny grids are refused."""
        with pytest.raises(GridConfigurationError):
            make_grid(n)

    def test_invalid_domain(self) -> None:
        """Test that a nonpositive half-width is refused."""
        with pytest.raises(GridConfigurationError):
            make_grid(8, domain_half_width=0.0)

    def test_mode_index_out_of_range(self, grid8) -> None:
        """Test that modes beyond Nyquist are refused."""
        with pytest.raises(GridConfigurationError):
            grid8.mode_index(5, 0)

    def test_hermitian_weights(self, grid8) -> None:
        """Test weights 1 on self-conjugate columns and 2 elsewhere."""
        weights = grid8.hermitian_weights

        assert weights.shape == (8, 5)
        assert np.all(weights[:, 0] == 1.0)
        assert np.all(weights[:, 4] == 1.0)
        assert np.all(weights[:, 1:4] == 2.0)

    def test_symbol_is_read_only(self, grid8) -> None:
        """Test that grid tables cannot be modified."""
        with pytest.raises(ValueError):
            grid8.laplacian_symbol[0, 0] = 1.0


class TestState:
    """Tests for two-component states."""

    def test_transform_round_trip(self, grid16, smooth_state) -> None:
        """Test inverse(forward(u)) == u."""
        u = smooth_state(grid16)

        back = State.from_coefficients(grid16, u.coefficients())

        assert np.allclose(back.data, u.data, atol=1e-14)

    def test_shape_mismatch(self, grid8) -> None:
        """Test that data of the wrong shape is refused."""
        with pytest.raises(GridMismatchError):
            State(np.zeros((2, 4, 4)), grid8)

    def test_arithmetic_requires_same_grid(self, grid8, grid16) -> None:
        """Test that mixing grids raises GridMismatchError."""
        with pytest.raises(GridMismatchError):
            State.zeros(grid8) + State.zeros(grid16)

    def test_arithmetic(self, grid8) -> None:
        """Test +, -, scalar * and negation."""
        a = State.constant(grid8, 1.0, 2.0)
        b = State.constant(grid8, 0.5, 0.5)

        result = 2.0 * (a - b) + (-b)

        assert np.allclose(result.first, 0.5)
        assert np.allclose(result.second, 2.5)

    def test_view_is_read_only(self, grid8) -> None:
        """Test that views cannot be written and share memory."""
        u = State.constant(grid8, 1.0, 2.0)
        view = u.view()

        with pytest.raises(ValueError):
            view.data[0, 0, 0] = 5.0
        u.data[0, 0, 0] = 7.0
        assert view.first[0, 0] == 7.0

    def test_restrict_subsamples_shared_nodes(self) -> None:
        """Test that coarse nodes take the fine values at the same coordinates."""
        fine, coarse = make_grid(16), make_grid(8)
        x1, x2 = fine.coordinates()
        u = State.from_components(fine, np.sin(x1) + x2, np.cos(x2))

        restricted = u.restrict(coarse)
        c1, c2 = coarse.coordinates()

        assert np.allclose(restricted.first, np.sin(c1) + c2, atol=1e-14)
        assert np.allclose(restricted.second, np.cos(c2), atol=1e-14)

    def test_restrict_refuses_incompatible_grid(self) -> None:
        """Test that restriction onto a finer grid is refused."""
        with pytest.raises(GridMismatchError):
            State.zeros(make_grid(8)).restrict(make_grid(16))

    def test_check_finite(self, grid8) -> None:
        """Test that NaN is reported with the step index."""
        u = State.zeros(grid8)
        u.data[1, 2, 3] = np.nan

        assert not u.is_finite()
        with pytest.raises(NonFiniteStateError) as excinfo:
            u.check_finite(step=12)
        assert excinfo.value.step == 12


class TestLinearSymbol:
    """Tests for per-mode linear operators."""

    def test_lower_left_entry_refused(self, grid8) -> None:
        """Test that only upper-triangular mode matrices are accepted."""
        with pytest.raises(InvalidArgumentError):
            LinearSymbol.from_blocks(grid8, 1.0, 0.0, 1.0, 1.0)

    def test_caginalp_symbol(self, grid8) -> None:
        """Test lambda * [[1, -l], [0, 1]] at mode (1, 0)."""
        sym = LinearSymbol.caginalp(grid8, 0.5)

        matrix = sym.matrix(grid8.mode_index(1, 0))

        assert np.allclose(matrix, [[-1.0, 0.5], [0.0, -1.0]])

    def test_apply_linear_on_cosine(self, grid16) -> None:
        """Test that the Caginalp operator maps (0, cos x1) to (l cos x1, -cos x1)."""
        x1, _ = grid16.coordinates()
        u = State.from_components(grid16, np.zeros(grid16.shape), np.cos(x1))

        out = apply_linear(LinearSymbol.caginalp(grid16, 0.5), u)

        assert np.allclose(out.first, 0.5 * np.cos(x1), atol=1e-13)
        assert np.allclose(out.second, -np.cos(x1), atol=1e-13)

    def test_resolvent_identity(self, grid16, smooth_state) -> None:
        """Test (I - tau*A) resolvent(w) == w for both model symbols."""
        for sym in (LinearSymbol.caginalp(grid16, 0.5), LinearSymbol.diagonal(grid16, 8e-4, 4e-4)):
            for tau in (1 / 128, 1 / 8, 1 / 2):
                w = smooth_state(grid16)

                v = linear_resolvent(sym, tau, w)
                back = v - tau * apply_linear(sym, v)

                scale = max(1.0, np.max(np.abs(w.data)))
                assert np.max(np.abs(back.data - w.data)) <= 1e-12 * scale

    def test_resolvent_zero_tau_copies(self, grid8, smooth_state) -> None:
        """Test that tau = 0 returns an independent copy."""
        w = smooth_state(grid8)

        v = linear_resolvent(LinearSymbol.caginalp(grid8, 0.5), 0.0, w)

        assert np.array_equal(v.data, w.data)
        assert v.data is not w.data

    def test_negative_tau_refused(self, grid8) -> None:
        """Test that negative tau is refused."""
        with pytest.raises(InvalidArgumentError):
            linear_resolvent(LinearSymbol.zero(grid8), -0.1, State.zeros(grid8))

    def test_cayley_is_crank_nicolson(self, grid16) -> None:
        """Test that mode lambda = -1 with tau = 1/2 is damped by (1 - 1/2)/(1 + 1/2)."""
        x1, _ = grid16.coordinates()
        u = State.from_components(grid16, np.cos(x1), np.cos(x1))

        out = linear_cayley(LinearSymbol.diagonal(grid16, 1.0, 1.0), 0.5, u)

        assert np.allclose(out.data, u.data / 3.0, atol=1e-14)

    def test_cayley_amplification_entries(self, grid8) -> None:
        """Test the closed-form per-mode Cayley matrix of the Caginalp symbol."""
        ell, tau = 0.5, 0.25
        index = grid8.mode_index(1, 1)
        lam = grid8.laplacian_symbol[index]

        m11, m12, m22 = cayley_amplification(LinearSymbol.caginalp(grid8, ell), tau)

        g = np.array([[lam, -ell * lam], [0.0, lam]])
        expected = (np.eye(2) + tau * g) @ np.linalg.inv(np.eye(2) - tau * g)
        assert m11[index] == pytest.approx(expected[0, 0])
        assert m12[index] == pytest.approx(expected[0, 1])
        assert m22[index] == pytest.approx(expected[1, 1])

    def test_constant_state_fixed(self, grid8) -> None:
        """Test that constants are fixed by resolvent and Cayley map."""
        u = State.constant(grid8, 0.3, -1.2)
        sym = LinearSymbol.caginalp(grid8, 0.5)

        assert np.allclose(linear_resolvent(sym, 0.7, u).data, u.data, atol=1e-15)
        assert np.allclose(linear_cayley(sym, 0.7, u).data, u.data, atol=1e-15)

    def test_resolvent_identity_random_states(self, grid16, rng) -> None:
        """Test (I - tau*A) resolvent(w) == w over 100 rough states per model symbol."""
        for sym in (LinearSymbol.caginalp(grid16, 0.5), LinearSymbol.diagonal(grid16, 8e-4, 4e-4)):
            for i in range(100):
                tau = RESOLVENT_TAUS[i % len(RESOLVENT_TAUS)]
                w = _random_state(grid16, rng)

                v = linear_resolvent(sym, tau, w)
                back = v - tau * apply_linear(sym, v)

                scale = max(1.0, np.max(np.abs(w.data)))
                assert np.max(np.abs(back.data - w.data)) <= 1e-12 * scale

    def test_cayley_from_resolvent(self, grid16, rng) -> None:
        """Test cayley(w) == w + 2 tau A resolvent(w)."""
        for sym in (LinearSymbol.caginalp(grid16, 0.5), LinearSymbol.diagonal(grid16, 1.0, 0.5)):
            for tau in (0.01, 0.5, 10.0):
                w = _random_state(grid16, rng)

                expected = w + 2.0 * tau * apply_linear(sym, linear_resolvent(sym, tau, w))

                scale = max(1.0, np.max(np.abs(w.data)))
                out = linear_cayley(sym, tau, w)
                assert np.max(np.abs(out.data - expected.data)) <= 1e-12 * scale

    @pytest.mark.parametrize("ell", [0.5, 2.0])
    def test_cayley_nonexpansive_weighted(self, grid16, rng, ell) -> None:
        """Test |cayley(w)| <= |w| in the weighted norm for the Caginalp symbol."""
        sym = LinearSymbol.caginalp(grid16, ell)
        kind = WeightedCaginalpNorm(ell=ell)
        for i in range(100):
            tau = (0.01, 0.5, 10.0)[i % 3]
            w = _random_state(grid16, rng)

            assert norm(kind, linear_cayley(sym, tau, w)) <= norm(kind, w) * (1 + 1e-12)

    def test_cayley_nonexpansive_l2(self, grid16, rng) -> None:
        """Test |cayley(w)| <= |w| in L2 for a diagonal symbol."""
        sym = LinearSymbol.diagonal(grid16, 8e-4, 4e-4)
        for i in range(100):
            tau = (0.01, 0.5, 10.0)[i % 3]
            w = _random_state(grid16, rng)

            assert norm(L2Norm(), linear_cayley(sym, tau, w)) <= norm(L2Norm(), w) * (1 + 1e-12)
