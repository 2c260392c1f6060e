##########################################################################################
# dickepulse/propagation.py
##########################################################################################
"""Propagation of Dicke states through pulse sequences.

Two propagation modes are supported:
    "effective"     the closed-form two-level rotation of the rotating wave approximation.
    "full"          the exact exp(-i H tau) of the complete (N+1)-level pulse Hamiltonian,
                    which includes every off-resonant ladder transition.

Each pulse is evaluated in its own rotating frame and amplitudes carry over unchanged from
one pulse to the next; phases from switching the laser frequency are not modeled. In
"full" mode, levels that a pulse does not address keep their amplitudes apart from the
effects of the off-resonant couplings; see evolve_full().
"""
##########################################################################################

import numpy as np
from concurrent.futures import ThreadPoolExecutor

from dickepulse.dicke_core  import DickeState, fidelity
from dickepulse.hamiltonian import build_pulse_hamiltonian, effective_rabi
from dickepulse.synthesis   import synthesize
from dickepulse._exceptions import DickeDomainError
from dickepulse._utils      import _step_index

MODES = ('effective', 'full')

##########################################################################################
# SimulationRecord
##########################################################################################

class SimulationRecord(object):
    """The outcome of run_sequence().

    Attributes:
        mode                "effective" or "full".
        snapshots           list of (ordinal, DickeState); ordinal 0 is the initial state
                            and ordinal p the state after the p-th pulse.
        final_state         the last snapshot's state.
        target_fidelity     fidelity of the final state with the target, or None if no
                            target was given.
        leakage_per_pulse   for "full" mode, the population each pulse moved outside the
                            two levels it addresses; empty for "effective" mode.
    """

    def __init__(self, mode, snapshots, target_fidelity=None, leakage_per_pulse=()):

        self.mode = mode
        self.snapshots = list(snapshots)
        self.final_state = self.snapshots[-1][1]
        self.target_fidelity = target_fidelity
        self.leakage_per_pulse = list(leakage_per_pulse)

    @property
    def populations(self):
        """Array of shape (snapshots, N+1)."""
        return np.array([state.populations for (_, state) in self.snapshots])

##########################################################################################
# Single pulses
##########################################################################################

def _check_dots(state, params):
    if state.n_dots != params.n_dots:
        raise DickeDomainError(f'state has {state.n_dots} dots but the system has '
                               f'{params.n_dots}')


def evolve_effective(state, pulse, params):
    """Apply one pulse under the two-level effective Hamiltonian.

    With theta = Omega_i tau, the amplitudes a_i and a_(i+1) rotate as
        a_i     -> cos(theta) a_i - i e^(-i phi) sin(theta) a_(i+1)
        a_(i+1) -> -i e^(i phi) sin(theta) a_i + cos(theta) a_(i+1)
    and all other amplitudes are unchanged.
    """

    _check_dots(state, params)
    i = _step_index(params.n_dots, pulse.step_index)
    if pulse.duration == 0.:
        return state

    theta = effective_rabi(params.n_dots, i, pulse.amplitude) * pulse.duration
    (c, s) = (np.cos(theta), np.sin(theta))
    rotor = np.exp(1j * pulse.phase)

    amplitudes = np.array(state.amplitudes)
    (lower, upper) = (amplitudes[i], amplitudes[i+1])
    amplitudes[i]   = c * lower - 1j * rotor.conjugate() * s * upper
    amplitudes[i+1] = -1j * rotor * s * lower + c * upper

    return DickeState(params.n_dots, amplitudes, renormalize=False)


def evolve_full(state, pulse, params, *, interaction_frame=True):
    """Apply one pulse under the complete pulse Hamiltonian H, exp(-i H tau).

    Input:
        state               DickeState before the pulse.
        pulse               PulseSpec.
        params              SystemParams.
        interaction_frame   True to return the state in the interaction frame of the bare
                            level energies D = diag(H), i.e., to apply
                            exp(i D tau) exp(-i H tau). The two resonant levels have zero
                            bare energy, so this only removes the free precession of the
                            spectator levels, which grows with W and belongs to the frame
                            bookkeeping between pulses. False applies exp(-i H tau) as is.
    """

    _check_dots(state, params)
    if pulse.duration == 0.:
        _step_index(params.n_dots, pulse.step_index)
        return state

    hamiltonian = build_pulse_hamiltonian(params, pulse)
    amplitudes = hamiltonian.propagator(pulse.duration) @ state.amplitudes

    if interaction_frame:
        bare = np.diag(hamiltonian.entries).real
        amplitudes = np.exp(1j * bare * pulse.duration) * amplitudes

    return DickeState(params.n_dots, amplitudes, renormalize=False)


_EVOLVERS = {'effective': evolve_effective, 'full': evolve_full}

##########################################################################################
# Sequences
##########################################################################################

def _outside_population(populations, i):
    return max(float(np.sum(populations) - populations[i] - populations[i+1]), 0.)


def run_sequence(initial, seq, mode='effective', target=None):
    """Propagate a state through every pulse of a sequence.

    Input:
        initial     starting DickeState, usually DickeState.ground(N).
        seq         PulseSequence.
        mode        "effective" or "full".
        target      optional DickeState; if given, the final fidelity is computed.

    Return          a SimulationRecord.
    """

    try:
        evolve = _EVOLVERS[mode]
    except (KeyError, TypeError):
        raise DickeDomainError('mode must be "effective" or "full": ' + repr(mode))

    params = seq.params
    _check_dots(initial, params)
    if target is not None:
        _check_dots(target, params)

    state = initial
    snapshots = [(0, state)]
    leakage = []
    for (ordinal, pulse) in enumerate(seq.pulses, start=1):
        new_state = evolve(state, pulse, params)

        if mode == 'full':
            i = pulse.step_index
            gained = (_outside_population(new_state.populations, i)
                      - _outside_population(state.populations, i))
            leakage.append(min(max(gained, 0.), 1.))

        state = new_state
        snapshots.append((ordinal, state))

    target_fidelity = None if target is None else fidelity(target, state)
    return SimulationRecord(mode, snapshots, target_fidelity, leakage)

##########################################################################################
# RWA validity
##########################################################################################

def rwa_sweep(target, params_base, ratios, *, workers=None):
    """Full-mode fidelity of the synthesized schedule as a function of W/g.

    The pulse durations depend only on g, so each ratio re-synthesizes with the same g and
    W = ratio * g, then propagates the result from |J,-J> with the full Hamiltonian.

    Input:
        target          DickeState to prepare.
        params_base     SystemParams supplying N and g; its W is ignored.
        ratios          positive, strictly ascending values of W/g.
        workers         number of threads used to evaluate ratios concurrently; None or 1
                        for serial evaluation. The output order never depends on it.

    Return          list of tuples (ratio, fidelity, total duration).
    """

    ratios = [float(r) for r in ratios]
    if not ratios:
        raise DickeDomainError('at least one ratio is required')
    if any(not np.isfinite(r) or r <= 0. for r in ratios):
        raise DickeDomainError('ratios must be positive')
    if any(b <= a for (a, b) in zip(ratios[:-1], ratios[1:])):
        raise DickeDomainError('ratios must be strictly ascending')

    initial = DickeState.ground(params_base.n_dots)

    def point(ratio):
        params = params_base.with_coupling(ratio * params_base.g_amplitude)
        seq = synthesize(target, params)
        record = run_sequence(initial, seq, 'full', target)
        return (ratio, record.target_fidelity, seq.total_duration)

    if workers is None or workers <= 1:
        return [point(r) for r in ratios]

    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(point, ratios))


def fit_infidelity_slope(points):
    """Least-squares slope of log10(1 - F) versus log10(g/W).

    Input:
        points      sweep output, a list of (ratio, fidelity, ...) tuples. Points with
                    zero infidelity are ignored.

    Return          the slope; about 2 when the rotating wave approximation holds.
    """

    pairs = [(p[0], 1. - p[1]) for p in points if 1. - p[1] > 0.]
    if len(pairs) < 2:
        raise DickeDomainError('at least two points with nonzero infidelity are needed')

    x = -np.log10([r for (r, _) in pairs])
    y = np.log10([e for (_, e) in pairs])
    return float(np.polyfit(x, y, 1)[0])

##########################################################################################
