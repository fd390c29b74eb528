import math

import numpy as np
import pytest

from lindosc import (CovDecomposition, GaussianState, ModelParams, compose,
                     evolve, heisenberg_slack, rhs_mean, rhs_sigma,
                     stationary_covariance, step_rk4)
from lindosc.errors import NotStable, PositivityLost

HBAR = 1.0


def iso(a):
    return 0.5 * HBAR * a * np.eye(2)


def params(**kw):
    base = dict(m=1.0, omega=1.0, mu=0.0, hbar=HBAR,
                D_qq=0.0, D_pp=0.0, D_pq=0.0, lam=0.0)
    base.update(kw)
    return ModelParams(**base)


ROTATION = np.array([[0.0, 1.0], [-1.0, 0.0]])


class TestRightHandSides:
    def test_rotation_preserves_isotropic_sigma(self):
        np.testing.assert_allclose(
            rhs_sigma(iso(1.0), ROTATION, np.zeros((2, 2))), np.zeros((2, 2)),
            atol=1e-16)

    def test_uniform_damping_with_diffusion(self):
        lam, delta = 0.7, 1.2
        out = rhs_sigma(iso(1.0), -lam * np.eye(2), iso(delta))
        np.testing.assert_allclose(out, (HBAR * delta - HBAR * lam) * np.eye(2))

    def test_pure_diffusion(self):
        sigma = np.array([[1.3, 0.4], [0.4, 0.8]])
        d = np.array([[0.2, 0.1], [0.1, 0.5]])
        np.testing.assert_allclose(rhs_sigma(sigma, np.zeros((2, 2)), d), 2 * d)

    def test_mean_rotation(self):
        np.testing.assert_allclose(rhs_mean(np.array([1.0, 0.0]), ROTATION),
                                   [0.0, -1.0])

    def test_mean_uniform_damping(self):
        np.testing.assert_allclose(rhs_mean(np.array([1.0, 1.0]), -np.eye(2)),
                                   [-1.0, -1.0])

    def test_mean_generic(self):
        y = np.array([[-1.0, 2.0], [-2.0, -1.0]])
        np.testing.assert_allclose(rhs_mean(np.array([2.0, 0.0]), y), [-2.0, -4.0])


class TestStepRK4:
    def test_zero_dt_is_identity(self):
        state = GaussianState(mean=[0.3, -0.2], sigma=iso(1.5))
        assert step_rk4(state, ROTATION, np.zeros((2, 2)), 0.0) is state

    def test_rotation_preserves_determinant_to_fifth_order(self):
        state = GaussianState(mean=[1.0, 0.0],
                              sigma=np.array([[0.9, 0.2], [0.2, 0.6]]))
        det0 = np.linalg.det(state.sigma)
        for dt in (0.1, 0.05):
            out = step_rk4(state, ROTATION, np.zeros((2, 2)), dt)
            assert abs(np.linalg.det(out.sigma) - det0) < 2.0 * dt ** 5

    def test_matches_closed_form_isotropic_relaxation(self):
        # For mu=0 with isotropic diffusion an isotropic covariance stays
        # isotropic and its area obeys a'(t) = -2*lam*a + 2*Delta.
        lam, delta = 0.8, 1.4
        p = params(lam=lam, D_qq=delta / 2, D_pp=delta / 2)
        state = GaussianState(mean=[0.0, 0.0], sigma=iso(1.0))
        traj = evolve(state, p, 1.0, 1e-3, sample_every=1000)
        a_exact = delta / lam + (1.0 - delta / lam) * math.exp(-2.0 * lam)
        assert traj.area[-1] == pytest.approx(a_exact, abs=1e-8)

    def test_blowup_raises_positivity_lost(self):
        state = GaussianState(mean=[0.0, 0.0],
                              sigma=np.array([[0.5, 0.49], [0.49, 0.5]]))
        drift = np.array([[-1.87, 0.12], [-6.98, -0.66]])
        with pytest.raises(PositivityLost):
            step_rk4(state, drift, np.zeros((2, 2)), 1.5)


class TestEvolve:
    def test_zero_time_single_sample(self):
        state = GaussianState(mean=[0.1, 0.2], sigma=iso(2.0))
        traj = evolve(state, params(), 0.0, 1e-3)
        assert len(traj) == 1 and traj.t[0] == 0.0
        np.testing.assert_array_equal(traj.sigma[0], state.sigma)

    def test_unitary_model_conserves_entropy(self):
        state = GaussianState(mean=[1.0, 0.0],
                              sigma=np.array([[0.9, 0.2], [0.2, 0.6]]))
        traj = evolve(state, params(), 5.0, 1e-3, sample_every=100)
        assert np.max(np.abs(traj.lin_entropy - traj.lin_entropy[0])) < 1e-10

    def test_damped_isotropic_approaches_stationary_area(self):
        lam, delta = 0.9, 1.8
        p = params(lam=lam, D_qq=delta / 2, D_pp=delta / 2)
        state = GaussianState(mean=[1.0, -1.0], sigma=iso(3.0))
        traj = evolve(state, p, 20.0 / lam, 2e-3, sample_every=100)
        assert traj.area[-1] == pytest.approx(delta / lam, abs=1e-7)

    def test_sampling_is_uniform(self):
        traj = evolve(GaussianState(mean=[0, 0], sigma=iso(1.0)),
                      params(), 1.0, 1e-2, sample_every=7)
        assert traj.dt_sample == pytest.approx(7e-2)
        np.testing.assert_allclose(np.diff(traj.t), traj.dt_sample, rtol=1e-12)

    def test_symmetry_preserved(self):
        p = params(lam=0.4, mu=0.2, D_qq=0.6, D_pp=0.9, D_pq=0.2)
        traj = evolve(GaussianState(mean=[1, 1], sigma=iso(2.0)),
                      p, 3.0, 1e-3, sample_every=10)
        assert np.max(np.abs(traj.sigma[:, 0, 1] - traj.sigma[:, 1, 0])) < 1e-12

    def test_failure_reports_time(self):
        p = params(lam=-3.0, D_qq=0.0, D_pp=0.0)  # anti-damped, no diffusion
        state = GaussianState(mean=[0, 0],
                              sigma=np.array([[0.5, 0.49], [0.49, 0.5]]))
        with pytest.raises(PositivityLost) as err:
            evolve(state, p, 50.0, 0.5)
        assert err.value.time is not None


def test_determinant_rate_identity():
    # d(det)/dt along the flow equals det * tr(sigma' @ sigma^-1).
    p = params(lam=0.5, mu=0.1, D_qq=0.7, D_pp=0.5, D_pq=0.1)
    traj = evolve(GaussianState(mean=[0.5, 0.0], sigma=iso(1.4)),
                  p, 0.2, 1e-4, sample_every=1)
    dets = traj.sigma[:, 0, 0] * traj.sigma[:, 1, 1] - traj.sigma[:, 0, 1] ** 2
    for i in range(1, len(traj) - 1, 50):
        fd = (dets[i + 1] - dets[i - 1]) / (2 * traj.dt_sample)
        sdot = rhs_sigma(traj.sigma[i], traj.drift, traj.diffusion)
        analytic = dets[i] * np.trace(sdot @ np.linalg.inv(traj.sigma[i]))
        assert fd == pytest.approx(analytic, rel=1e-6)


def test_rk4_order_of_convergence():
    p = params(lam=0.6, mu=0.3, D_qq=0.8, D_pp=0.4, D_pq=-0.1)
    state = GaussianState(mean=[1.0, -0.5], sigma=iso(1.2))

    def final_sigma(dt):
        n = int(round(1.0 / dt))
        return evolve(state, p, 1.0, dt, sample_every=n).sigma[-1]

    ref = final_sigma(1e-3 / 16)
    err_coarse = np.linalg.norm(final_sigma(2e-3) - ref)
    err_fine = np.linalg.norm(final_sigma(1e-3) - ref)
    assert err_coarse / err_fine == pytest.approx(16.0, rel=0.2)


def test_heisenberg_preserved_for_random_valid_models():
    from lindosc import LindbladCouplings, ModelParams
    rng = np.random.default_rng(42)
    for _ in range(30):
        c = LindbladCouplings(
            a1=complex(*rng.normal(size=2)), b1=complex(*rng.normal(size=2)),
            a2=complex(*rng.normal(size=2)), b2=complex(*rng.normal(size=2)))
        p = ModelParams.from_couplings(c, m=1.0, omega=rng.uniform(0.5, 2),
                                       mu=rng.uniform(-0.3, 0.3), hbar=HBAR)
        sigma0 = compose(CovDecomposition(A=1.0, aleph=rng.uniform(1, 3),
                                          theta=rng.uniform(0, np.pi)), HBAR)
        t_final = 10.0 / max(p.lam, p.omega)
        traj = evolve(GaussianState(mean=[0, 0], sigma=sigma0), p,
                      t_final, t_final / 2000, sample_every=10)
        slacks = np.array([heisenberg_slack(s, HBAR) for s in traj.sigma])
        assert slacks.min() >= -1e-9 * HBAR ** 2


class TestStationaryCovariance:
    def test_isotropic(self):
        lam, delta = 0.5, 1.5
        y = np.array([[-lam, 1.0], [-1.0, -lam]])
        d = iso(delta)
        np.testing.assert_allclose(stationary_covariance(y, d),
                                   iso(delta / lam), rtol=1e-12, atol=1e-14)

    def test_marginal_drift_not_stable(self):
        with pytest.raises(NotStable):
            stationary_covariance(ROTATION, iso(1.0))

    def test_random_hurwitz_residual(self):
        rng = np.random.default_rng(17)
        for _ in range(50):
            lam = rng.uniform(0.1, 2)
            mu = rng.uniform(-0.5, 0.5)
            omega = rng.uniform(0.6, 3)
            y = np.array([[-(lam - mu), omega], [-omega, -(lam + mu)]])
            d = np.array([[rng.uniform(0.1, 2), 0.0], [0.0, rng.uniform(0.1, 2)]])
            d[0, 1] = d[1, 0] = rng.uniform(-0.2, 0.2)
            sigma = stationary_covariance(y, d)
            residual = rhs_sigma(sigma, y, d)
            assert np.linalg.norm(residual) <= 1e-10 * np.linalg.norm(2 * d)


class TestHeisenbergSlack:
    def test_pure_state_equality(self):
        assert heisenberg_slack(iso(1.0), HBAR) == pytest.approx(0.0, abs=1e-16)

    def test_mixed(self):
        assert heisenberg_slack(HBAR * np.eye(2), HBAR) == pytest.approx(0.75 * HBAR ** 2)

    def test_unphysical_is_negative(self):
        assert heisenberg_slack(0.25 * HBAR * np.eye(2), HBAR) == pytest.approx(
            -3.0 / 16.0 * HBAR ** 2)
