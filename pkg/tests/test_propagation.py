##########################################################################################
# tests/test_propagation.py
##########################################################################################

import numpy as np
import scipy.linalg
import unittest

from dickepulse.dicke_core import DickeState, SystemParams, fidelity
from dickepulse.hamiltonian import PulseSpec, build_effective_hamiltonian
from dickepulse.propagation import (
    SimulationRecord,
    evolve_effective,
    evolve_full,
    fit_infidelity_slope,
    run_sequence,
    rwa_sweep,
)
from dickepulse.synthesis import (
    PulseSequence,
    synthesize,
    target_ghz_profile,
    target_uniform,
    target_w,
)

from dickepulse._exceptions import DickeDomainError as dde


def random_state(rng, n_dots):
    v = rng.normal(size=n_dots+1) + 1j * rng.normal(size=n_dots+1)
    return DickeState(n_dots, v / np.linalg.norm(v))


class Test_propagation(unittest.TestCase):

    def test_evolve_effective(self):

        params = SystemParams(3, 1000.)
        ground = DickeState.ground(3)

        # Zero duration is the identity
        self.assertIs(evolve_effective(ground, PulseSpec(0, 0.), params), ground)

        # A pi/2 pulse on step 0 makes the W state
        pulse = PulseSpec(0, np.pi / (2. * np.sqrt(3.)))
        state = evolve_effective(ground, pulse, params)
        self.assertAlmostEqual(state.populations[1], 1., delta=1.e-15)

        # A pulse on an empty step does nothing
        state = evolve_effective(ground, PulseSpec(1, 0.3, 1.), params)
        self.assertTrue(np.all(state.amplitudes == ground.amplitudes))

        # Phase convention: a_(i+1) gains -i e^(i phi) sin(theta) a_i
        pulse = PulseSpec(0, 0.4, 0.9)
        state = evolve_effective(DickeState.ground(1), pulse, SystemParams(1, 100.))
        self.assertAlmostEqual(state.amplitudes[1], -1j * np.exp(0.9j) * np.sin(0.4),
                               delta=1.e-15)
        self.assertAlmostEqual(state.amplitudes[0], np.cos(0.4), delta=1.e-15)

        self.assertRaises(dde, evolve_effective, ground, PulseSpec(3, 0.1), params)
        self.assertRaises(dde, evolve_effective, DickeState.ground(2), PulseSpec(0, 0.1),
                          params)

    def test_effective_versus_matrix_exponential(self):

        rng = np.random.default_rng(7)
        worst = 0.
        for count in range(1000):
            n_dots = int(rng.integers(1, 13))
            g = rng.uniform(0.1, 1.)
            params = SystemParams(n_dots, 100., g)
            pulse = PulseSpec(int(rng.integers(0, n_dots)), rng.uniform(0., 1.),
                              rng.uniform(0., 2. * np.pi), g)
            state = random_state(rng, n_dots)

            h = build_effective_hamiltonian(params, pulse).entries
            expected = scipy.linalg.expm(-1j * h * pulse.duration) @ state.amplitudes
            result = evolve_effective(state, pulse, params).amplitudes
            worst = max(worst, np.abs(result - expected).max())

        self.assertLessEqual(worst, 1.e-12)

    def test_evolve_full(self):

        rng = np.random.default_rng(8)

        # Zero duration is the identity
        params = SystemParams(4, 100.)
        state = random_state(rng, 4)
        self.assertIs(evolve_full(state, PulseSpec(2, 0.), params), state)

        # Unitarity for random pulses and states
        for count in range(200):
            n_dots = int(rng.integers(1, 13))
            params = SystemParams(n_dots, rng.uniform(1., 1000.), rng.uniform(0.1, 2.))
            pulse = PulseSpec(int(rng.integers(0, n_dots)), rng.uniform(0., 3.),
                              rng.uniform(0., 2. * np.pi), params.g_amplitude)
            state = random_state(rng, n_dots)
            for frame in (True, False):
                result = evolve_full(state, pulse, params, interaction_frame=frame)
                self.assertLessEqual(abs(result.norm - 1.), 1.e-10)

        # g = 0: populations unchanged; only diagonal phases in the lab frame
        params = SystemParams(3, 5., 0., validate=False)
        pulse = PulseSpec(1, 0.7, 0., 0.)
        state = random_state(rng, 3)
        result = evolve_full(state, pulse, params, interaction_frame=False)
        self.assertTrue(np.allclose(result.populations, state.populations,
                                    rtol=0., atol=1.e-14))
        k = np.arange(4)
        phases = np.exp(1j * 5. * (k - 1) * (k - 2) * 0.7)
        self.assertTrue(np.allclose(result.amplitudes, phases * state.amplitudes,
                                    rtol=0., atol=1.e-13))

        # ... and nothing at all in the interaction frame
        result = evolve_full(state, pulse, params)
        self.assertTrue(np.allclose(result.amplitudes, state.amplitudes,
                                    rtol=0., atol=1.e-13))

        # Spectator levels keep their amplitudes in the interaction frame as W grows
        state = DickeState(2, [np.sqrt(0.5), np.sqrt(0.5), 0.])
        pulse = PulseSpec(1, np.pi / (2. * np.sqrt(2.)))
        ideal = evolve_effective(state, pulse, SystemParams(2, 1.))
        errors = []
        for ratio in (1.e2, 1.e3, 1.e4):
            result = evolve_full(state, pulse, SystemParams(2, ratio))
            errors.append(1. - fidelity(ideal, result))
        self.assertTrue(errors[0] > errors[1] > errors[2])

        # Larger W/g, better transfer
        pulse = PulseSpec(0, np.pi / (2. * np.sqrt(2.)))
        ground = DickeState.ground(2)
        target = DickeState.basis(2, 1)
        f_low = fidelity(target, evolve_full(ground, pulse, SystemParams(2, 10.)))
        f_high = fidelity(target, evolve_full(ground, pulse, SystemParams(2, 1000.)))
        self.assertGreaterEqual(f_high, f_low)
        self.assertGreater(f_high, 1. - 1.e-4)

    def test_run_sequence(self):

        params = SystemParams(3, 1000.)
        ground = DickeState.ground(3)
        target = target_w(3)

        # Empty sequence
        record = run_sequence(ground, PulseSequence(params, []), 'effective', target)
        self.assertIsInstance(record, SimulationRecord)
        self.assertEqual(len(record.snapshots), 1)
        self.assertIs(record.final_state, ground)
        self.assertEqual(record.target_fidelity, 0.)
        self.assertEqual(record.leakage_per_pulse, [])

        # W state
        seq = synthesize(target, params)
        record = run_sequence(ground, seq, 'effective', target)
        self.assertEqual(record.mode, 'effective')
        self.assertAlmostEqual(record.target_fidelity, 1., delta=1.e-12)
        self.assertEqual([ordinal for (ordinal, _) in record.snapshots], [0, 1])
        self.assertEqual(record.populations.shape, (2, 4))

        # Full mode: worse than ideal, better with larger W
        full_high = run_sequence(ground, seq, 'full', target)
        seq_low = synthesize(target, SystemParams(3, 100.))
        full_low = run_sequence(ground, seq_low, 'full', target)
        self.assertLess(full_high.target_fidelity, 1.)
        self.assertGreater(full_high.target_fidelity, full_low.target_fidelity)
        self.assertEqual(len(full_high.leakage_per_pulse), 1)

        # No target, no fidelity
        self.assertIsNone(run_sequence(ground, seq).target_fidelity)

        # Composition: a manual left fold gives the same states
        rng = np.random.default_rng(9)
        target = random_state(rng, 5)
        params = SystemParams(5, 200.)
        seq = synthesize(target, params)
        for (mode, evolve) in (('effective', evolve_effective), ('full', evolve_full)):
            record = run_sequence(DickeState.ground(5), seq, mode)
            state = DickeState.ground(5)
            for (p, pulse) in enumerate(seq.pulses):
                state = evolve(state, pulse, params)
                self.assertTrue(np.all(record.snapshots[p+1][1].amplitudes ==
                                       state.amplitudes))

            # Leakage stays in [0,1]; every snapshot stays normalized
            for value in record.leakage_per_pulse:
                self.assertGreaterEqual(value, 0.)
                self.assertLessEqual(value, 1.)
            for (_, snapshot) in record.snapshots:
                self.assertLessEqual(abs(snapshot.norm - 1.), 1.e-9)

        self.assertRaises(dde, run_sequence, DickeState.ground(5), seq, 'exact')
        self.assertRaises(dde, run_sequence, DickeState.ground(4), seq)
        self.assertRaises(dde, run_sequence, DickeState.ground(5), seq, 'full',
                          DickeState.ground(4))

    def test_full_converges_to_effective(self):

        rng = np.random.default_rng(10)
        for count in range(20):
            n_dots = int(rng.integers(2, 5))
            target = random_state(rng, n_dots)
            ground = DickeState.ground(n_dots)

            seq_low = synthesize(target, SystemParams(n_dots, 10. * n_dots))
            seq_high = synthesize(target, SystemParams(n_dots, 10000.))
            f_low = run_sequence(ground, seq_low, 'full', target).target_fidelity
            f_high = run_sequence(ground, seq_high, 'full', target).target_fidelity
            self.assertGreater(f_high, f_low)

    def test_rwa_sweep(self):

        target = target_ghz_profile(4)
        params = SystemParams(4, 1.)
        points = rwa_sweep(target, params, [1.e2, 1.e3, 1.e4])

        self.assertEqual([p[0] for p in points], [1.e2, 1.e3, 1.e4])
        fidelities = [p[1] for p in points]
        self.assertTrue(fidelities[0] < fidelities[1] < fidelities[2])

        # Durations do not depend on W
        self.assertEqual(points[0][2], points[1][2])
        self.assertEqual(points[1][2], points[2][2])

        slope = fit_infidelity_slope(points)
        self.assertGreaterEqual(slope, 1.5)
        self.assertLessEqual(slope, 2.5)

        # Threads do not change the results or their order
        self.assertEqual(rwa_sweep(target, params, [1.e2, 1.e3, 1.e4], workers=3), points)

        self.assertEqual(len(rwa_sweep(target_uniform(2), SystemParams(2, 1.), [100.])), 1)

        self.assertRaises(dde, rwa_sweep, target, params, [])
        self.assertRaises(dde, rwa_sweep, target, params, [100., 10.])
        self.assertRaises(dde, rwa_sweep, target, params, [100., 100.])
        self.assertRaises(dde, rwa_sweep, target, params, [-1., 100.])

    def test_fit_infidelity_slope(self):

        points = [(r, 1. - 3. / r**2) for r in (10., 100., 1000.)]
        self.assertAlmostEqual(fit_infidelity_slope(points), 2., delta=1.e-6)

        # Perfect points are skipped
        points.append((1.e4, 1.))
        self.assertAlmostEqual(fit_infidelity_slope(points), 2., delta=1.e-6)

        self.assertRaises(dde, fit_infidelity_slope, [(10., 0.9)])
        self.assertRaises(dde, fit_infidelity_slope, [(10., 1.), (100., 1.)])

##########################################################################################
