import math

import numpy as np
import pytest

from tabounds.linalg import DensityMatrix, hermitian_eigenvalues, kron, partial_trace, von_neumann_entropy
from tabounds.qubit import (
    QubitAttenuatorParams,
    QubitState,
    apply_attenuator,
    beamsplitter_unitary,
    coherent_information_qubit,
    complementary_output,
    dilated_state,
    extended_output,
    extended_output_closed_form,
    phase_damping,
    purified_environment,
    thermal_qubit,
    weak_complementary_closed_form,
    weak_complementary_output,
)


def random_state(rng):
    p = rng.uniform(0.0, 1.0)
    r = math.sqrt(rng.uniform(0.0, 1.0) * p * (1.0 - p))
    phi = rng.uniform(0.0, 2.0 * math.pi)
    return QubitState(p, r * complex(math.cos(phi), math.sin(phi)))


class TestTypes:
    def test_params_ranges(self):
        with pytest.raises(ValueError):
            QubitAttenuatorParams(1.2, 0.1)
        with pytest.raises(ValueError):
            QubitAttenuatorParams(0.5, 0.6)
        QubitAttenuatorParams(0.0, 0.0)
        QubitAttenuatorParams(1.0, 0.5)

    def test_state_coherence_bound(self):
        with pytest.raises(ValueError):
            QubitState(0.5, 0.6)
        with pytest.raises(ValueError):
            QubitState(1.0, 0.1)
        QubitState(0.5, 0.5)  # saturating a pure state is allowed

    def test_density_matrix_round_trip(self):
        s = QubitState(0.3, 0.1 - 0.2j)
        back = QubitState.from_density_matrix(s.to_density_matrix())
        assert back.p == pytest.approx(s.p, abs=1e-15)
        assert back.gamma == pytest.approx(s.gamma, abs=1e-15)


class TestChannelAction:
    def test_identity_at_full_transmissivity(self):
        out = apply_attenuator(QubitState(0.3, 0.1), QubitAttenuatorParams(1.0, 0.2))
        assert (out.p, out.gamma) == (0.3, 0.1)

    def test_full_replacement(self):
        out = apply_attenuator(QubitState(0.8, 0.3), QubitAttenuatorParams(0.0, 0.2))
        assert out.p == pytest.approx(0.2, abs=1e-15)
        assert out.gamma == 0.0

    def test_direct_evaluation(self):
        out = apply_attenuator(QubitState(0.5, 0.2), QubitAttenuatorParams(0.64, 0.25))
        assert out.p == pytest.approx(0.41, abs=1e-15)
        assert out.gamma == pytest.approx(0.16, abs=1e-15)

    def test_phase_damping(self):
        assert phase_damping(QubitState(0.3, 0.2), 1.0).gamma == 0.2
        assert phase_damping(QubitState(0.3, 0.2), 0.0).gamma == 0.0
        out = phase_damping(QubitState(0.3, 0.2), 0.8)
        assert (out.p, out.gamma) == (0.3, pytest.approx(0.16, abs=1e-15))
        with pytest.raises(ValueError):
            phase_damping(QubitState(0.3, 0.0), 1.5)


class TestEnvironment:
    def test_thermal_qubit(self):
        assert np.array_equal(thermal_qubit(0.0).matrix, np.diag([1.0, 0.0]))
        assert np.array_equal(thermal_qubit(0.5).matrix, np.eye(2) / 2)
        assert np.array_equal(thermal_qubit(0.1).matrix, np.diag([0.9, 0.1]))
        with pytest.raises(ValueError):
            thermal_qubit(0.7)

    def test_purified_environment_structure(self):
        ground = purified_environment(0.0).matrix
        assert ground[0, 0] == 1.0 and np.abs(ground).sum() == 1.0
        bell = purified_environment(0.5).matrix
        assert bell[0, 0] == pytest.approx(0.5) and bell[0, 3] == pytest.approx(0.5)
        assert purified_environment(0.1).matrix[0, 3] == pytest.approx(0.3, abs=1e-15)

    def test_purification_marginal_is_thermal(self):
        for noise in (0.0, 0.1, 0.37, 0.5):
            env = purified_environment(noise)
            marginal = partial_trace(env, {0})
            assert np.abs(marginal.matrix - thermal_qubit(noise).matrix).max() < 1e-12


class TestBeamsplitter:
    def test_identity_at_eta_one(self):
        assert np.abs(beamsplitter_unitary(1.0) - np.eye(4)).max() == 0.0

    def test_full_swap_rotation(self):
        u = beamsplitter_unitary(0.0)
        assert u[1, 2] == 1.0 and u[2, 1] == -1.0
        assert u[1, 1] == 0.0 and u[2, 2] == 0.0

    def test_balanced(self):
        u = beamsplitter_unitary(0.5)
        r = 1.0 / math.sqrt(2.0)
        want = np.array([[1, 0, 0, 0], [0, r, r, 0], [0, -r, r, 0], [0, 0, 0, 1]])
        assert np.abs(u - want).max() < 1e-15

    def test_unitarity(self):
        for eta in (0.0, 0.17, 0.5, 0.83, 1.0):
            u = beamsplitter_unitary(eta)
            assert np.abs(u @ u.conj().T - np.eye(4)).max() < 1e-12


class TestDilation:
    def test_eta_one_leaves_state_unchanged(self):
        s = QubitState(0.3, 0.1 + 0.2j)
        c = QubitAttenuatorParams(1.0, 0.2)
        rho = dilated_state(s, c)
        want = kron(s.to_density_matrix().matrix, purified_environment(0.2).matrix)
        assert np.abs(rho.matrix - want).max() < 1e-12

    def test_pure_environment_keeps_ancilla_pure(self):
        s = QubitState(0.3, 0.2)
        c = QubitAttenuatorParams(0.6, 0.0)
        rho = dilated_state(s, c)
        ancilla = partial_trace(rho, {2})
        assert np.abs(ancilla.matrix - np.diag([1.0, 0.0])).max() < 1e-12
        bf = partial_trace(rho, {0, 1})
        assert np.abs(rho.matrix - kron(bf.matrix, ancilla.matrix)).max() < 1e-12

    def test_system_marginal_matches_channel_action(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            s = random_state(rng)
            c = QubitAttenuatorParams(rng.uniform(0, 1), rng.uniform(0, 0.5))
            marginal = partial_trace(dilated_state(s, c), {0})
            want = apply_attenuator(s, c).to_density_matrix()
            assert np.abs(marginal.matrix - want.matrix).max() < 1e-12


class TestMarginals:
    def test_extended_at_eta_one(self):
        s = QubitState(0.3, 0.1)
        out = extended_output(s, QubitAttenuatorParams(1.0, 0.2))
        want = kron(s.to_density_matrix().matrix, np.diag([0.8, 0.2]))
        assert np.abs(out.matrix - want).max() < 1e-12

    def test_extended_corner_entries(self):
        rng = np.random.default_rng(12)
        for _ in range(50):
            s = random_state(rng)
            c = QubitAttenuatorParams(rng.uniform(0, 1), rng.uniform(0, 0.5))
            m = extended_output(s, c).matrix
            assert m[0, 0].real == pytest.approx((1 - c.noise) * (1 - s.p * c.eta), abs=1e-12)
            corner = (2 * s.p - 1) * math.sqrt((1 - c.noise) * c.noise * (1 - c.eta))
            assert m[0, 3].real == pytest.approx(corner, abs=1e-12)
            assert abs(m[0, 3].imag) < 1e-12

    def test_extended_matches_closed_form(self):
        rng = np.random.default_rng(13)
        for _ in range(200):
            s = random_state(rng)
            c = QubitAttenuatorParams(rng.uniform(0, 1), rng.uniform(0, 0.5))
            got = extended_output(s, c).matrix
            assert np.abs(got - extended_output_closed_form(s, c)).max() < 1e-12

    def test_weak_complementary_at_eta_one(self):
        out = weak_complementary_output(QubitState(0.3, 0.1), QubitAttenuatorParams(1.0, 0.2))
        assert np.abs(out.matrix - np.diag([0.8, 0.2])).max() < 1e-12

    def test_weak_complementary_full_swap(self):
        out = weak_complementary_output(QubitState(0.3), QubitAttenuatorParams(0.0, 0.2))
        assert np.abs(out.matrix - np.diag([0.7, 0.3])).max() < 1e-12

    def test_weak_complementary_off_diagonal_value(self):
        out = weak_complementary_output(QubitState(0.5, 0.2), QubitAttenuatorParams(0.5, 0.1))
        assert out.matrix[0, 1].real == pytest.approx(0.1131370849898476, abs=1e-12)

    def test_weak_complementary_matches_closed_form(self):
        rng = np.random.default_rng(14)
        for _ in range(200):
            s = random_state(rng)
            c = QubitAttenuatorParams(rng.uniform(0, 1), rng.uniform(0, 0.5))
            got = weak_complementary_output(s, c).matrix
            assert np.abs(got - weak_complementary_closed_form(s, c)).max() < 1e-12

    def test_complementary_with_pure_environment(self):
        s = QubitState(0.4, 0.15)
        c = QubitAttenuatorParams(0.7, 0.0)
        comp = complementary_output(s, c)
        ancilla = partial_trace(comp, {1})
        assert np.abs(ancilla.matrix - np.diag([1.0, 0.0])).max() < 1e-12
        f_part = partial_trace(comp, {0})
        assert np.abs(f_part.matrix - weak_complementary_output(s, c).matrix).max() < 1e-12

    def test_complementary_at_eta_one_f_thermal(self):
        comp = complementary_output(QubitState(0.4, 0.1), QubitAttenuatorParams(1.0, 0.2))
        f_part = partial_trace(comp, {0})
        assert np.abs(f_part.matrix - np.diag([0.8, 0.2])).max() < 1e-12

    def test_pure_input_entropy_balance(self):
        # Global output is pure for pure inputs, so the extended output and
        # the complement have identical spectra.
        rng = np.random.default_rng(15)
        for _ in range(25):
            p = rng.uniform(0, 1)
            phi = rng.uniform(0, 2 * math.pi)
            s = QubitState(p, math.sqrt(p * (1 - p)) * complex(math.cos(phi), math.sin(phi)))
            c = QubitAttenuatorParams(rng.uniform(0, 1), rng.uniform(0, 0.5))
            s_ext = von_neumann_entropy(extended_output(s, c))
            s_comp = von_neumann_entropy(weak_complementary_output(s, c))
            assert abs(s_ext - s_comp) < 1e-9


class TestCoherentInformation:
    def test_noiseless_channel_on_pure_input(self):
        s = QubitState(0.5, 0.5)
        c = QubitAttenuatorParams(1.0, 0.0)
        assert coherent_information_qubit(s, c, "direct") == pytest.approx(0.0, abs=1e-10)
        assert coherent_information_qubit(s, c, "extended") == pytest.approx(0.0, abs=1e-10)

    def test_identity_channel_recovers_input_entropy(self):
        s = QubitState(0.2)
        c = QubitAttenuatorParams(1.0, 0.3)
        want = von_neumann_entropy(s.to_density_matrix())
        assert coherent_information_qubit(s, c, "direct") == pytest.approx(want, abs=1e-10)
        assert coherent_information_qubit(s, c, "extended") == pytest.approx(want, abs=1e-10)

    def test_extended_is_minus_weak(self):
        # The extended channel and the weakly-complementary channel swap the
        # roles of output and complement, so their rates are opposite.
        rng = np.random.default_rng(16)
        for _ in range(50):
            s = random_state(rng)
            c = QubitAttenuatorParams(rng.uniform(0, 1), rng.uniform(0, 0.5))
            rho = dilated_state(s, c)
            j_ext = coherent_information_qubit(s, c, "extended")
            j_weak = von_neumann_entropy(partial_trace(rho, {1})) - von_neumann_entropy(
                partial_trace(rho, {0, 2})
            )
            assert abs(j_ext + j_weak) < 1e-10

    def test_variants_agree_with_pure_environment(self):
        rng = np.random.default_rng(17)
        for _ in range(100):
            s = random_state(rng)
            c = QubitAttenuatorParams(rng.uniform(0, 1), 0.0)
            d = coherent_information_qubit(s, c, "direct")
            e = coherent_information_qubit(s, c, "extended")
            assert abs(d - e) < 1e-10

    def test_rejects_unknown_variant(self):
        with pytest.raises(ValueError):
            coherent_information_qubit(QubitState(0.5), QubitAttenuatorParams(0.8, 0.1), "weird")


class TestStructuralProperties:
    def test_weak_degradability(self):
        rng = np.random.default_rng(18)
        for _ in range(300):
            s = random_state(rng)
            c = QubitAttenuatorParams(rng.uniform(0.5, 1), rng.uniform(0, 0.5))
            degraded = phase_damping(
                apply_attenuator(
                    apply_attenuator(s, c),
                    QubitAttenuatorParams((1 - c.eta) / c.eta, c.noise),
                ),
                1 - 2 * c.noise,
            )
            want = weak_complementary_output(s, c).matrix
            assert np.abs(degraded.to_density_matrix().matrix - want).max() < 1e-12

    def test_phase_flip_symmetry(self):
        rng = np.random.default_rng(19)
        for _ in range(50):
            s = random_state(rng)
            c = QubitAttenuatorParams(rng.uniform(0, 1), rng.uniform(0, 0.5))
            j_plus = coherent_information_qubit(s, c, "extended")
            j_minus = coherent_information_qubit(QubitState(s.p, -s.gamma), c, "extended")
            assert abs(j_plus - j_minus) < 1e-10

    def test_concavity_in_population(self):
        for eta, noise in ((0.7, 0.1), (0.9, 0.25), (0.55, 0.4)):
            c = QubitAttenuatorParams(eta, noise)
            ps = np.linspace(0.0, 1.0, 41)
            js = [coherent_information_qubit(QubitState(p), c, "extended") for p in ps]
            assert np.diff(js, 2).max() <= 1e-8

    def test_interaction_sign_convention_is_immaterial(self):
        # Flipping the sign of sqrt(1-eta) in the rotation block changes the
        # dilated state only by local phases: the channel output is entrywise
        # identical and every marginal spectrum (hence both rates) agrees.
        rng = np.random.default_rng(20)
        for _ in range(25):
            s = random_state(rng)
            c = QubitAttenuatorParams(rng.uniform(0, 1), rng.uniform(0, 0.5))
            r, t = math.sqrt(c.eta), math.sqrt(1 - c.eta)
            flipped = np.array(
                [[1, 0, 0, 0], [0, r, -t, 0], [0, t, r, 0], [0, 0, 0, 1]], dtype=complex
            )
            u = kron(flipped, np.eye(2))
            rho_in = kron(s.to_density_matrix().matrix, purified_environment(c.noise).matrix)
            rho = DensityMatrix(u @ rho_in @ u.conj().T, (2, 2, 2))

            b = partial_trace(rho, {0})
            assert np.abs(b.matrix - partial_trace(dilated_state(s, c), {0}).matrix).max() < 1e-12

            for keep, reference in (({0, 2}, extended_output), ({1}, weak_complementary_output)):
                got = hermitian_eigenvalues(partial_trace(rho, keep).matrix)
                want = hermitian_eigenvalues(reference(s, c).matrix)
                assert np.abs(got - want).max() < 1e-10

            j_ext_flipped = von_neumann_entropy(partial_trace(rho, {0, 2})) - von_neumann_entropy(
                partial_trace(rho, {1})
            )
            assert abs(j_ext_flipped - coherent_information_qubit(s, c, "extended")) < 1e-10
