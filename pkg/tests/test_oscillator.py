import math

import numpy as np
import pytest

from covosc import (
    CapabilityError,
    DomainError,
    OscillatorState,
    Rapidity,
    hermite_function,
    momentum_from_constituents,
    phi_momentum,
    phi_momentum_lightcone,
    psi_boosted,
    psi_boosted_lightcone,
    psi_full,
    psi_rest,
    separation_from_constituents,
)

LN2 = math.log(2.0)
INV_SQRT_PI = 1.0 / math.sqrt(math.pi)
SQRT2 = math.sqrt(2.0)


class TestState:
    def test_defaults(self):
        s = OscillatorState()
        assert (s.n_z, s.n_x, s.n_y, s.eta) == (0, 0, 0, 0.0)

    def test_accepts_rapidity_instance(self):
        s = OscillatorState(n_z=1, eta=Rapidity(0.5))
        assert s.eta == 0.5

    def test_with_rapidity(self):
        s = OscillatorState(n_z=2, n_x=1).with_rapidity(1.5)
        assert (s.n_z, s.n_x, s.n_y, s.eta) == (2, 1, 0, 1.5)

    def test_validation(self):
        with pytest.raises(DomainError):
            OscillatorState(n_z=-1)
        with pytest.raises(DomainError):
            OscillatorState(n_x=0.5)
        with pytest.raises(CapabilityError):
            OscillatorState(n_y=65)
        with pytest.raises(DomainError):
            OscillatorState(eta=51.0)


class TestSeparationCoords:
    def test_zero_constituents(self):
        sep = separation_from_constituents(np.zeros(4), np.zeros(4))
        np.testing.assert_array_equal(sep.X, np.zeros(4))
        np.testing.assert_array_equal(sep.x, np.zeros(4))

    def test_opposite_z_positions(self):
        # (t, x, y, z) ordering; separation scale is 1/(2 sqrt(2))
        sep = separation_from_constituents([0, 0, 1, 0], [0, 0, -1, 0])
        np.testing.assert_array_equal(sep.X, np.zeros(4))
        np.testing.assert_allclose(sep.x, [0, 0, 1 / SQRT2, 0], atol=1e-16)

    def test_coincident_constituents(self):
        w = np.array([1.0, 2.0, 3.0, 4.0])
        sep = separation_from_constituents(w, w)
        np.testing.assert_array_equal(sep.X, w)
        np.testing.assert_array_equal(sep.x, np.zeros(4))

    def test_shape_checked(self):
        with pytest.raises(DomainError):
            separation_from_constituents([0, 0, 0], [0, 0, 0, 0])


class TestMomentumCoords:
    def test_equal_momenta(self):
        p = np.array([3.0, 0.0, 0.0, 1.0])
        mom = momentum_from_constituents(p, p)
        np.testing.assert_array_equal(mom.q, np.zeros(4))
        assert mom.q_u == 0.0
        assert mom.q_v == 0.0

    def test_lightlike_difference(self):
        # p_a - p_b = (1, 0, 0, 1) in (E, x, y, z) order
        p_b = np.array([1.0, 0.5, 0.0, 2.0])
        p_a = p_b + np.array([1.0, 0.0, 0.0, 1.0])
        mom = momentum_from_constituents(p_a, p_b)
        np.testing.assert_allclose(mom.q, [SQRT2, 0.0, 0.0, SQRT2], atol=1e-15)
        assert mom.q_u == pytest.approx(2.0, abs=1e-15)
        assert mom.q_v == pytest.approx(0.0, abs=1e-15)

    def test_total_is_additive(self):
        rng = np.random.default_rng(3)
        p_a = rng.normal(size=4)
        p_b = rng.normal(size=4)
        mom = momentum_from_constituents(p_a, p_b)
        np.testing.assert_array_equal(mom.P, p_a + p_b)


class TestPsiRest:
    def test_ground_at_origin(self):
        assert psi_rest(OscillatorState(), 0.0, 0.0) == pytest.approx(INV_SQRT_PI, abs=1e-16)

    def test_ground_off_origin(self):
        want = INV_SQRT_PI * math.exp(-0.5)
        got = psi_rest(OscillatorState(), 1.0, 0.0)
        assert got == pytest.approx(want, abs=1e-15)
        assert got == pytest.approx(0.342198280312217, abs=1e-13)

    def test_first_excited_vanishes_at_z0(self):
        s = OscillatorState(n_z=1)
        for t in (-2.0, 0.0, 0.7, 5.0):
            assert psi_rest(s, 0.0, t) == 0.0

    def test_requires_rest_frame(self):
        with pytest.raises(DomainError):
            psi_rest(OscillatorState(eta=0.1), 0.0, 0.0)

    def test_time_factor_is_always_ground(self):
        # psi_rest / h_0(t) must not depend on t for any n_z
        t = np.linspace(-2.0, 2.0, 41)
        for n_z in (0, 2, 5):
            s = OscillatorState(n_z=n_z)
            ratio = psi_rest(s, 1.3, t) / hermite_function(0, t)
            np.testing.assert_allclose(ratio, ratio[0], rtol=1e-12)


class TestPsiBoosted:
    def test_identity_boost_matches_rest(self):
        rng = np.random.default_rng(11)
        z = rng.uniform(-6.0, 6.0, 100)
        t = rng.uniform(-6.0, 6.0, 100)
        for n_z in (0, 1, 3):
            s = OscillatorState(n_z=n_z)
            np.testing.assert_allclose(
                psi_boosted(s, z, t), psi_rest(s, z, t), rtol=0.0, atol=1e-15)

    def test_origin_value_is_frame_independent(self):
        for eta in (-3.0, 0.0, 0.8, 4.0):
            got = psi_boosted(OscillatorState(eta=eta), 0.0, 0.0)
            assert got == pytest.approx(INV_SQRT_PI, abs=1e-16)

    @pytest.mark.parametrize("eta", [0.3, LN2, 1.7])
    def test_lightlike_point_closed_form(self, eta):
        # at (z, t) = (1, 1): (z+t)^2 = 4, (z-t)^2 = 0
        want = INV_SQRT_PI * math.exp(-math.exp(-2.0 * eta))
        got = psi_boosted(OscillatorState(eta=eta), 1.0, 1.0)
        assert got == pytest.approx(want, rel=1e-14)

    def test_lightlike_point_at_ln2(self):
        got = psi_boosted(OscillatorState(eta=LN2), 1.0, 1.0)
        assert got == pytest.approx(INV_SQRT_PI * math.exp(-0.25), abs=1e-15)
        assert got == pytest.approx(0.439391289467722, abs=1e-13)

    def test_ground_closed_form_everywhere(self):
        rng = np.random.default_rng(5)
        z = rng.uniform(-3.0, 3.0, 200)
        t = rng.uniform(-3.0, 3.0, 200)
        for eta in (-1.0, 0.5, 2.0):
            s = OscillatorState(eta=eta)
            want = INV_SQRT_PI * np.exp(
                -0.25 * (np.exp(-2 * eta) * (z + t) ** 2 + np.exp(2 * eta) * (z - t) ** 2))
            np.testing.assert_allclose(psi_boosted(s, z, t), want, rtol=0.0, atol=1e-13)

    def test_lightcone_entry_point_agrees(self):
        rng = np.random.default_rng(6)
        z = rng.uniform(-3.0, 3.0, 50)
        t = rng.uniform(-3.0, 3.0, 50)
        s = OscillatorState(n_z=2, eta=1.2)
        u = (z + t) / SQRT2
        v = (z - t) / SQRT2
        np.testing.assert_allclose(
            psi_boosted_lightcone(s, u, v), psi_boosted(s, z, t), rtol=0.0, atol=1e-13)

    def test_normalization_is_eta_independent_scalar_type(self):
        value = psi_boosted(OscillatorState(eta=1.0), 0.3, -0.2)
        assert isinstance(value, float)


class TestPsiFull:
    def test_all_ground_origin(self):
        got = psi_full(OscillatorState(), 0.0, 0.0, 0.0, 0.0)
        assert got == pytest.approx(1.0 / math.pi, abs=1e-15)
        assert got == pytest.approx(0.318309886183791, abs=1e-13)

    def test_transverse_factor_boost_invariant(self):
        # evaluated at z = t = 0 the longitudinal factor is exactly 1/sqrt(pi)
        # in every frame, so the transverse factor is exposed bitwise
        rng = np.random.default_rng(8)
        xs = rng.uniform(-3.0, 3.0, 100)
        ys = rng.uniform(-3.0, 3.0, 100)
        rest = OscillatorState(n_x=1, n_y=1)
        fast = OscillatorState(n_x=1, n_y=1, eta=3.0)
        a = psi_full(rest, xs, ys, 0.0, 0.0)
        b = psi_full(fast, xs, ys, 0.0, 0.0)
        np.testing.assert_array_equal(a, b)

    def test_ratio_between_frames_independent_of_xy(self):
        rng = np.random.default_rng(9)
        xs = rng.uniform(-2.0, 2.0, 50)
        ys = rng.uniform(-2.0, 2.0, 50)
        s1 = OscillatorState(n_x=1, n_y=2, eta=0.0)
        s2 = OscillatorState(n_x=1, n_y=2, eta=2.0)
        z, t = 0.7, -0.4
        ratio = psi_full(s1, xs, ys, z, t) / psi_full(s2, xs, ys, z, t)
        np.testing.assert_allclose(ratio, ratio[0], rtol=1e-12)

    def test_transverse_node(self):
        s = OscillatorState(n_x=1)
        assert psi_full(s, 0.0, 1.0, 0.5, 0.5) == 0.0

    def test_transverse_factor_value(self):
        # h_0(1) = pi^(-1/4) e^(-1/2) regardless of the boost
        want = math.pi ** -0.25 * math.exp(-0.5)
        for eta in (0.0, 3.0):
            s = OscillatorState(eta=eta)
            full = psi_full(s, 1.0, 0.0, 0.0, 0.0)
            longitudinal = psi_boosted(s, 0.0, 0.0)
            transverse = full / (longitudinal * hermite_function(0, 0.0))
            assert transverse == pytest.approx(want, rel=1e-14)


class TestPhiMomentum:
    def test_origin(self):
        for eta in (0.0, 1.0, -2.5):
            assert phi_momentum(OscillatorState(eta=eta), 0.0, 0.0) == pytest.approx(
                INV_SQRT_PI, abs=1e-16)

    def test_rest_frame_is_round_gaussian(self):
        rng = np.random.default_rng(13)
        qz = rng.uniform(-3.0, 3.0, 100)
        q0 = rng.uniform(-3.0, 3.0, 100)
        want = INV_SQRT_PI * np.exp(-0.5 * (qz**2 + q0**2))
        np.testing.assert_allclose(
            phi_momentum(OscillatorState(), qz, q0), want, rtol=0.0, atol=1e-15)

    def test_boosted_value_at_ln2(self):
        got = phi_momentum(OscillatorState(eta=LN2), 1.0, 1.0)
        assert got == pytest.approx(INV_SQRT_PI * math.exp(-0.25), abs=1e-15)
        assert got == pytest.approx(0.439391289467722, abs=1e-13)

    def test_excited_states_rejected(self):
        with pytest.raises(CapabilityError):
            phi_momentum(OscillatorState(n_z=1), 0.0, 0.0)
        with pytest.raises(CapabilityError):
            phi_momentum_lightcone(OscillatorState(n_z=2), 0.0, 0.0)

    def test_position_momentum_duality(self):
        # psi and phi are the same function of their light-cone arguments
        rng = np.random.default_rng(17)
        a_u = rng.uniform(-3.0, 3.0, 500)
        a_v = rng.uniform(-3.0, 3.0, 500)
        for eta in (-1.5, 0.0, 0.7, 2.0):
            s = OscillatorState(eta=eta)
            z = (a_u + a_v) / SQRT2
            t = (a_u - a_v) / SQRT2
            q_0 = (a_u + a_v) / SQRT2
            q_z = (a_u - a_v) / SQRT2
            psi_vals = psi_boosted(s, z, t)
            phi_vals = phi_momentum(s, q_z, q_0)
            np.testing.assert_allclose(psi_vals, phi_vals, rtol=0.0, atol=1e-13)
