import math

import numpy as np
import pytest

from spinvdw import oracle
from spinvdw.response import EPS0, SpinningSphere, bst, polarizability
from spinvdw.spectral import (ConvergenceError, PairContext, QuadratureSpec,
                              aux_energy, energy_AB, energy_BA, general_energy,
                              integrate_spectrum, pair_quadrature_spec)

A = 60e-9
R = 180e-9


class TestIntegrateSpectrum:
    def test_lorentzian_normalization(self):
        # int gamma/pi/(w^2+gamma^2) = 1; the w^-4 tail model underestimates
        # the w^-2 remainder, so the window must carry most of the mass
        spec = QuadratureSpec(rel_tol=1e-8, abs_tol=1e-14, breakpoints=(0.0,),
                              window=1e9, seed_width=0.125)
        val = integrate_spectrum(lambda w: 1.0 / np.pi / (w * w + 1.0), spec)
        assert val.real == pytest.approx(1.0, rel=1e-8)
        assert val.imag == 0.0

    def test_odd_function_vanishes(self):
        spec = QuadratureSpec(rel_tol=1e-8, abs_tol=1e-13, breakpoints=(0.0,),
                              window=50.0, seed_width=0.1)
        val = integrate_spectrum(lambda w: w * np.exp(-w * w), spec)
        assert abs(val) < 1e-13

    def test_gaussian_reference(self):
        spec = QuadratureSpec(rel_tol=1e-10, abs_tol=1e-14, breakpoints=(0.0,),
                              window=40.0, seed_width=0.5)
        val = integrate_spectrum(lambda w: np.exp(-w * w), spec)
        assert val.real == pytest.approx(math.sqrt(math.pi), rel=1e-10)

    def test_im_alpha_sum_rule(self, material, w0):
        # int sgn(w) Im alpha = C*gamma*(1/c)*(pi/2 + atan(b/c)) with
        # b = w0^2 - gamma^2/2, c^2 = w0^2 gamma^2 - gamma^4/4 (x = w^2
        # substitution); equals pi*C/w0 to leading order in gamma/w0
        s = SpinningSphere(A, material, 0.0)
        g = material.gamma0
        c_num = 4.0 * np.pi * EPS0 * A**3 * material.f0 * material.omega_tilde0**2 / 3.0
        b = w0**2 - 0.5 * g * g
        c = math.sqrt(w0**2 * g * g - 0.25 * g**4)
        exact = c_num * g * (math.pi / 2.0 + math.atan(b / c)) / c

        spec = QuadratureSpec(rel_tol=1e-9, abs_tol=1e-16,
                              breakpoints=(-w0, 0.0, w0), window=100 * w0,
                              seed_width=g / 8.0)
        val = integrate_spectrum(
            lambda w: np.sign(w) * polarizability(s, w).imag, spec)
        assert val.real == pytest.approx(exact, rel=1e-8)
        assert exact == pytest.approx(math.pi * c_num / w0, rel=2.0 * g / w0)

    def test_half_line_domain(self):
        spec = QuadratureSpec(rel_tol=1e-9, abs_tol=1e-14, breakpoints=(0.0, 1.0),
                              window=200.0, seed_width=0.25, lo=0.0)
        val = integrate_spectrum(lambda w: 1.0 / (1.0 + w * w) ** 2, spec)
        assert val.real == pytest.approx(math.pi / 4.0, rel=1e-8)

    def test_convergence_error_carries_estimate(self):
        # |w|^(-1/2) kink not at any breakpoint, absurd tolerance, few levels
        spec = QuadratureSpec(rel_tol=1e-15, abs_tol=1e-300,
                              breakpoints=(0.0,), window=10.0, max_levels=4)
        with pytest.raises(ConvergenceError) as err:
            integrate_spectrum(lambda w: np.sqrt(np.abs(w - 0.4327)), spec)
        assert err.value.estimate > 0.0
        assert err.value.value is not None

    def test_breakpoints_outside_window_rejected(self):
        with pytest.raises(ValueError):
            QuadratureSpec(breakpoints=(0.0, 5.0), window=2.0)


class TestPairQuadratureSpec:
    def test_breakpoints_cover_doppler_images(self, ctx300, w0):
        om = 0.75 * w0
        spec = pair_quadrature_spec(ctx300, shifts=(om,))
        bps = np.array(spec.breakpoints)
        shift = om / w0
        for want in (0.0, 1.0, -1.0, 1.0 - shift, 1.0 + shift,
                     -1.0 + shift, -1.0 - shift):
            assert np.min(np.abs(bps - want)) < 1e-12
        assert spec.window >= np.abs(bps).max() + 10.0


class TestEnergyIntegrals:
    def test_small_gamma_matches_closed_form(self, ctx_smallgamma):
        mat = ctx_smallgamma.sphere_a.material
        w0s = 5.7e9 * math.sqrt(1.0 + 12.2 / 3.0)
        alpha0 = polarizability(ctx_smallgamma.sphere_a, 0.0).real
        pair = oracle.LorentzPair(alpha0, alpha0, w0s, w0s, R)
        got = energy_BA(ctx_smallgamma, 0.5 * w0s)
        want = oracle.eba_closed(pair, 0.5 * w0s)
        assert got == pytest.approx(want, rel=0.01)

    def test_symmetric_at_zero_shift(self, ctx300):
        assert energy_BA(ctx300, 0.0) == pytest.approx(energy_AB(ctx300, 0.0),
                                                       rel=1e-10)

    def test_identical_spheres_equal_contributions_small_gamma(self, ctx_smallgamma, w0):
        # the two driving directions coincide for identical spheres in the
        # nearly-undamped limit, at any rotation rate
        om = 1.4 * w0
        assert energy_AB(ctx_smallgamma, om) == pytest.approx(
            energy_BA(ctx_smallgamma, om), rel=1e-3)

    def test_small_gamma_convergence_rate(self, w0):
        # deviation from the undamped closed form shrinks ~linearly with
        # gamma away from resonance
        alpha0 = 0.8026315789473684 * 4.0 * np.pi * EPS0 * A**3
        pair = oracle.LorentzPair(alpha0, alpha0, w0, w0, R)
        want = oracle.aux_closed(pair, 0.5 * w0)
        devs = []
        for gamma_scale in (1e-1, 1e-2, 1e-3):
            sphere = SpinningSphere(A, bst(gamma_scale=gamma_scale), 0.0)
            ctx = PairContext(sphere, sphere, R)
            devs.append(abs(aux_energy(ctx, 0.5 * w0) / want - 1.0))
        assert devs[0] > devs[1] > devs[2]
        assert devs[0] / devs[1] == pytest.approx(10.0, rel=0.5)
        assert devs[1] / devs[2] == pytest.approx(10.0, rel=0.5)

    def test_ab_contributes_half_at_rest(self, ctx300):
        assert energy_AB(ctx300, 0.0) == pytest.approx(
            0.5 * aux_energy(ctx300, 0.0), rel=1e-10)

    def test_change_of_variables_identity(self, ctx300, w0):
        # moving the Doppler shift from eta_A onto alpha_B is a pure
        # substitution; evaluate the shifted-alpha form directly
        from spinvdw.response import _alpha_reduced, resonance_frequency
        from spinvdw.spectral import _eta_reduced, _integrate, _scaled_pair
        om = 0.8 * w0
        ws, mat_a, mat_b = _scaled_pair(ctx300)
        shift = om / ws
        eta_a = _eta_reduced(mat_a, ctx300.sphere_a.temperature, ws)
        spec = pair_quadrature_spec(ctx300, shifts=(om,))
        moved, _ = _integrate(
            lambda u: eta_a(u) * (_alpha_reduced(mat_b, u + shift)
                                  + _alpha_reduced(mat_b, u - shift)), spec)
        direct, _ = _integrate(
            lambda u: (eta_a(u + shift) + eta_a(u - shift))
            * _alpha_reduced(mat_b, u), spec)
        assert direct.real == pytest.approx(moved.real, rel=1e-8)

    def test_aux_even(self, ctx300, w0):
        for om in (0.4 * w0, 1.9 * w0):
            assert aux_energy(ctx300, om) == pytest.approx(
                aux_energy(ctx300, -om), rel=1e-12)

    def test_ratio_distance_independent(self, ctx300, w0):
        far = PairContext(ctx300.sphere_a, ctx300.sphere_b, 2.0 * R)
        r_near = aux_energy(ctx300, 1.3 * w0) / aux_energy(ctx300, 0.0)
        r_far = aux_energy(far, 1.3 * w0) / aux_energy(far, 0.0)
        assert abs(r_near / r_far - 1.0) < 1e-10

    def test_r_scaling_exponent(self, ctx300, w0):
        e1 = aux_energy(ctx300, 0.7 * w0)
        e2 = aux_energy(PairContext(ctx300.sphere_a, ctx300.sphere_b, 2.0 * R),
                        0.7 * w0)
        exponent = math.log(e2 / e1) / math.log(2.0)
        assert exponent == pytest.approx(-6.0, abs=1e-8)

    def test_exchange_symmetry(self, w0):
        # different radii and temperatures; swapping the spheres must not
        # change the total
        sa = SpinningSphere(50e-9, bst(), 300.0)
        sb = SpinningSphere(80e-9, bst(), 900.0)
        ctx = PairContext(sa, sb, R)
        e = aux_energy(ctx, 0.9 * w0)
        e_swapped = aux_energy(ctx.swapped(), 0.9 * w0)
        assert e_swapped == pytest.approx(e, rel=1e-9)

    def test_attractive_at_rest(self, ctx300):
        assert aux_energy(ctx300, 0.0) < 0.0


class TestGeneralEnergy:
    def test_at_rest_matches_12_aux(self, ctx300):
        gen = general_energy(ctx300)
        assert gen == pytest.approx(12.0 * aux_energy(ctx300, 0.0), rel=1e-8)

    def test_matches_rr_assembly(self, ctx300, w0):
        from spinvdw.configurations import Arrangement, energy_rr, general_context
        oa, ob = 1.4 * w0, -0.3 * w0
        gen = general_energy(general_context(ctx300, Arrangement("rr"), oa, ob))
        assert gen == pytest.approx(energy_rr(ctx300, oa, ob), rel=1e-6)

    def test_matches_uu_assembly(self, ctx300, w0):
        from spinvdw.configurations import Arrangement, energy_uu, general_context
        oa, ob = 1.4 * w0, -0.3 * w0
        gen = general_energy(general_context(ctx300, Arrangement("uu"), oa, ob))
        assert gen == pytest.approx(energy_uu(ctx300, oa, ob), rel=1e-6)

    def test_parity_exact(self, ctx300, w0):
        from spinvdw.configurations import Arrangement, general_context
        arr = Arrangement("uo")
        ep = general_energy(general_context(ctx300, arr, 1.1 * w0, 0.6 * w0))
        em = general_energy(general_context(ctx300, arr, -1.1 * w0, -0.6 * w0))
        assert em == pytest.approx(ep, rel=1e-9)


class TestPairContext:
    def test_geometry_validation(self, material):
        sphere = SpinningSphere(A, material, 300.0)
        with pytest.raises(ValueError):
            PairContext(sphere, sphere, 100e-9)     # overlapping
        with pytest.raises(ValueError):
            PairContext(sphere, sphere, 0.05)       # retarded regime
        with pytest.raises(ValueError):
            PairContext(sphere, sphere, R, rhat=(1.0, 1.0, 0.0))
