"""Matrix realizations: determinant identities, lifts, and the FD route.

Determinants of the block function, its linearization, and the constant
system operator are all compared against the cleared scalar polynomial, so
the three realizations are pinned to one another through numpy's LU-based
determinant rather than through any shared eigensolver.
"""

import numpy as np
import pytest

from memspec import (
    ExponentialKernel,
    ModeCoefficients,
    ModePencil,
    cleared_mode_polynomial,
    dense_eigenvalues,
    discretize_1d,
    mode_eigenvalues,
    nonlinear_eigenvalues_fd,
)
from memspec.errors import RootFindingError


@pytest.fixture
def pencil_two(k_two):
    return ModePencil(30.0, 12.0, k_two)


class TestModePencil:
    def test_validation(self, k_one):
        with pytest.raises(ValueError):
            ModePencil(-1.0, 0.0, k_one)
        with pytest.raises(ValueError):
            ModePencil(1.0, -0.5, k_one)

    def test_coupling(self, k_two):
        mp = ModePencil(10.0, 4.0, k_two)
        want = np.sqrt(np.array([1.0 * 1.0, 0.2 * 1.5]) * 4.0)
        assert np.allclose(mp.coupling(), want, rtol=1e-14)

    def test_block_function_layout(self, pencil_two):
        lam = 0.3 + 1.1j
        big = pencil_two.block_function(lam)
        assert big.shape == (3, 3)
        assert big[0, 0] == pytest.approx(30.0 + lam * lam)
        assert np.allclose(big[0, 1:], big[1:, 0])
        assert big[1, 1] == pytest.approx(1.0 + lam)
        assert big[2, 2] == pytest.approx(1.5 + lam)
        assert big[1, 2] == big[2, 1] == 0.0

    def test_block_determinant_is_cleared_polynomial(self, pencil_two, k_two):
        m = ModeCoefficients(30.0, 12.0)
        poly = cleared_mode_polynomial(k_two, m)
        rng = np.random.default_rng(9)
        for _ in range(10):
            lam = complex(rng.normal(), rng.normal())
            det = np.linalg.det(pencil_two.block_function(lam))
            assert det == pytest.approx(poly(lam), rel=1e-10)

    def test_linearization_determinant(self, pencil_two, k_two):
        m = ModeCoefficients(30.0, 12.0)
        poly = cleared_mode_polynomial(k_two, m)
        rng = np.random.default_rng(13)
        for _ in range(10):
            lam = complex(rng.normal(), rng.normal())
            det = np.linalg.det(pencil_two.linearization(lam))
            assert det == pytest.approx(poly(lam), rel=1e-10)

    def test_equivalence_residual(self, pencil_two):
        rng = np.random.default_rng(17)
        for _ in range(10):
            lam = complex(rng.normal(scale=2.0), rng.normal(scale=2.0))
            res = pencil_two.equivalence_residual(lam)
            assert res <= 1e-12 * (1.0 + abs(lam) ** 2) * 31.0
        assert pencil_two.equivalence_residual(0.0) == 0.0

    def test_system_operator_char_poly(self, pencil_two, k_two):
        m = ModeCoefficients(30.0, 12.0)
        poly = cleared_mode_polynomial(k_two, m)
        sop = pencil_two.system_operator()
        sign = (-1.0) ** pencil_two.size
        for lam in (0.7, -1.2 + 0.4j, 2.5j):
            det = np.linalg.det(sop - lam * np.eye(pencil_two.size))
            assert det == pytest.approx(sign * poly(lam), rel=1e-10)

    def test_system_operator_spectrum_matches_modes(self, k_wave):
        mp = ModePencil(40.0, 20.0, k_wave)
        vals = dense_eigenvalues(mp.system_operator())
        want = mode_eigenvalues(k_wave, ModeCoefficients(40.0, 20.0))
        assert len(vals) == 3
        assert np.allclose(np.sort_complex(vals), np.sort_complex(want),
                           atol=1e-7)

    def test_lifts(self, k_two):
        m = ModeCoefficients(30.0, 12.0)
        mp = ModePencil(30.0, 12.0, k_two)
        for lam in mode_eigenvalues(k_two, m):
            v = mp.lift_to_block(lam, 1.0)
            res = np.linalg.norm(mp.block_function(lam) @ v)
            assert res <= 1e-9 * 31.0 * np.linalg.norm(v)
            w = mp.lift_to_linearization(lam, v)
            res2 = np.linalg.norm(mp.linearization(lam) @ w)
            assert res2 <= 1e-9 * 31.0 * (1.0 + abs(lam)) * np.linalg.norm(w)

    def test_lift_rejects_bad_input(self, pencil_two):
        with pytest.raises(ValueError):
            pencil_two.lift_to_block(1.0 + 1.0j, 0.0)
        with pytest.raises(ValueError):
            pencil_two.lift_to_block(-1.0, 1.0)  # at a kernel pole
        with pytest.raises(ValueError):
            pencil_two.lift_to_block(5.0, 1.0)  # not an eigenvalue
        with pytest.raises(ValueError):
            pencil_two.lift_to_linearization(1.0, np.zeros(3))
        with pytest.raises(ValueError):
            pencil_two.lift_to_linearization(1.0, np.ones(4))


class TestDenseEigenvalues:
    def test_symmetric_matches_eigvalsh(self):
        rng = np.random.default_rng(21)
        mat = rng.normal(size=(12, 12))
        mat = mat + mat.T
        vals = dense_eigenvalues(mat)
        assert np.allclose(np.sort(vals.real), np.linalg.eigvalsh(mat),
                           atol=1e-10)
        assert np.max(np.abs(vals.imag)) < 1e-12

    def test_sorted(self):
        vals = dense_eigenvalues(np.diag([3.0, -1.0, 2.0]))
        assert np.allclose(vals, [-1.0, 2.0, 3.0])

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            dense_eigenvalues(np.zeros((2, 3)))
        with pytest.raises(ValueError):
            dense_eigenvalues(np.zeros((2001, 2001)))

    def test_residual_gate(self):
        # an extreme tolerance makes the residual check fail on purpose
        rng = np.random.default_rng(23)
        mat = rng.normal(size=(8, 8))
        with pytest.raises(RootFindingError):
            dense_eigenvalues(mat, tol=1e-300)


class TestDiscretize:
    def test_stiffness_eigenvalues(self):
        # the 3-point Dirichlet stencil has eigenvalues
        # (2a/h^2) (1 - cos(k pi h)) on a unit interval
        n, a = 40, 1.7
        mat_a, _ = discretize_1d(a, np.full(n, 0.3), n)
        h = 1.0 / (n + 1)
        want = 2.0 * a / h ** 2 * (1.0 - np.cos(np.arange(1, n + 1) * np.pi * h))
        assert np.allclose(np.linalg.eigvalsh(mat_a), np.sort(want),
                           rtol=1e-12)

    def test_constant_profile_is_scalar_multiple(self):
        mat_a, mat_b = discretize_1d(2.0, np.full(25, 0.4), 25)
        assert np.allclose(mat_b, 0.4 * mat_a, atol=1e-12)

    def test_graded_profile_symmetric_psd(self):
        n = 30
        profile = 0.5 + 0.25 * np.linspace(0.0, 1.0, n)
        mat_a, mat_b = discretize_1d(1.0, profile, n)
        assert np.allclose(mat_b, mat_b.T)
        assert np.min(np.linalg.eigvalsh(mat_b)) > 0.0

    def test_validation(self):
        with pytest.raises(ValueError):
            discretize_1d(1.0, np.full(2, 0.1), 2)
        with pytest.raises(ValueError):
            discretize_1d(1.0, np.full(4, 0.1), 5)
        with pytest.raises(ValueError):
            discretize_1d(1.0, np.array([0.1, -0.2, 0.1]), 3)


class TestNonlinearFd:
    def test_constant_damping_matches_modal_route(self, k_wave):
        n = 12
        mat_a, mat_b = discretize_1d(1.0, np.full(n, 0.5), n)
        records = nonlinear_eigenvalues_fd(mat_a, mat_b, k_wave,
                                           imag_cap=np.inf)
        got = np.array([r.value for r in records])
        want = []
        for mu in np.linalg.eigvalsh(mat_a):
            m = ModeCoefficients(float(mu), 0.5 * float(mu))
            want.extend(mode_eigenvalues(k_wave, m))
        want = np.array(want)
        assert len(got) == len(want)
        dist = np.abs(got[:, None] - want[None, :])
        assert max(dist.min(axis=0).max(), dist.min(axis=1).max()) < 1e-8 * (
            1.0 + np.linalg.norm(mat_a, 2)
        )

    def test_imag_cap_filters(self, k_wave):
        n = 12
        mat_a, mat_b = discretize_1d(1.0, np.full(n, 0.5), n)
        capped = nonlinear_eigenvalues_fd(mat_a, mat_b, k_wave, imag_cap=50.0)
        assert all(abs(r.im) <= 50.0 for r in capped)
        assert all(r.branch in ("real", "complex-pair") for r in capped)
        res = [(r.re, r.im) for r in capped]
        assert res == sorted(res)

    def test_size_limit(self, k_wave):
        big = np.eye(700)
        with pytest.raises(ValueError):
            nonlinear_eigenvalues_fd(big, big, k_wave)
