##########################################################################################
# dickepulse/records.py
##########################################################################################
"""Reading and writing dickepulse text documents and trajectory tables.

All quantities in documents are dimensionless: energies are in units of the laser
amplitude g, durations are given as g*tau, and detunings as dw/g. Reals are always written
with 17 significant digits and keys in a fixed order, so identical inputs produce
byte-identical documents.

Document types, identified by the FORMAT key:
    TARGET      N_DOTS, COEFFICIENTS = ( ( re im ) ... ), ordered from M = -J to +J.
    SCHEDULE    N_DOTS, W_OVER_G, REMOVED_GLOBAL_PHASE, PULSE_FIELDS, PULSES.
    RESULT      the outcome of propagating a schedule.
    SWEEP       fidelity versus W/g.
    VERIFY      product-space cross-check deviations.
"""
##########################################################################################

import numbers
import pathlib
import numpy as np
from pyparsing import ParseBaseException

from dickepulse.dicke_core      import DickeState, SystemParams
from dickepulse.hamiltonian     import PulseSpec, resonant_detuning
from dickepulse.record_pyparser import record_pyparser
from dickepulse.synthesis       import PulseSequence
from dickepulse._exceptions     import DickeDomainError, DickeParseException, \
                                       DickeResourceError
from dickepulse._warnings       import DickeNormalizationWarning, _warn

PULSE_FIELDS = ('STEP_INDEX', 'DETUNING_OVER_G', 'OMEGA_TAU', 'PHASE', 'DURATION_G')
SWEEP_FIELDS = ('W_OVER_G', 'FIDELITY', 'TOTAL_DURATION_G')

# Largest N_DOTS a document may declare; a full-mode Hamiltonian at this size is a
# dense 4097 x 4097 complex matrix
DOCUMENT_MAX_DOTS = 4096

# Relative agreement required between redundant schedule columns
_CONSISTENCY = 1.e-9

_PARSER = record_pyparser()

##########################################################################################
# Formatting
##########################################################################################

def format_float(x):
    """A real with 17 significant digits; negative zero is written as zero."""

    return '%.16e' % (float(x) + 0.)


def _format_value(value, indent):
    if isinstance(value, str):
        return "'" + value.replace("'", "''") + "'"
    if isinstance(value, (bool, np.bool_)):
        return "'TRUE'" if value else "'FALSE'"
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        return format_float(value)

    # A list of rows goes on separate lines; a flat list stays on one line
    items = list(value)
    if not items:
        return '( )'
    if all(isinstance(item, (list, tuple)) for item in items):
        pad = ' ' * (indent + 2)
        rows = [pad + _format_value(item, indent + 2) for item in items]
        return '(\n' + '\n'.join(rows) + '\n' + ' ' * indent + ')'

    return '( ' + ' '.join(_format_value(item, indent) for item in items) + ' )'


def format_document(title, pairs):
    """A complete document from a title comment and a list of (name, value) pairs."""

    width = max(len(name) for (name, _) in pairs)
    lines = ['# ' + title]
    for (name, value) in pairs:
        lines.append(f'{name:<{width}} = ' + _format_value(value, width + 3))

    return '\n'.join(lines) + '\n'


def format_target(state):
    """TARGET document for a DickeState."""

    coefficients = [(float(a.real), float(a.imag)) for a in state.amplitudes]
    return format_document('dickepulse target', [
        ('FORMAT', 'TARGET'),
        ('N_DOTS', state.n_dots),
        ('COEFFICIENTS', coefficients),
    ])


def format_schedule(seq):
    """SCHEDULE document for a PulseSequence; energies are expressed in units of g."""

    params = seq.params
    g = params.g_amplitude
    rows = []
    for (pulse, detuning, angle) in zip(seq.pulses, seq.detunings, seq.rotation_angles):
        rows.append((pulse.step_index, detuning / g, angle, pulse.phase,
                     pulse.duration * g))

    return format_document('dickepulse schedule', [
        ('FORMAT', 'SCHEDULE'),
        ('N_DOTS', params.n_dots),
        ('W_OVER_G', params.w_coupling / g),
        ('REMOVED_GLOBAL_PHASE', seq.removed_global_phase),
        ('PULSE_FIELDS', list(PULSE_FIELDS)),
        ('PULSES', rows),
    ])


def format_result(record, n_pulses):
    """RESULT document for a SimulationRecord."""

    final = record.final_state
    pairs = [
        ('FORMAT', 'RESULT'),
        ('MODE', record.mode.upper()),
        ('N_DOTS', final.n_dots),
        ('PULSE_COUNT', n_pulses),
        ('FINAL_AMPLITUDES', [(float(a.real), float(a.imag)) for a in final.amplitudes]),
        ('FINAL_POPULATIONS', [float(p) for p in final.populations]),
    ]
    if record.target_fidelity is not None:
        pairs.append(('TARGET_FIDELITY', record.target_fidelity))
        pairs.append(('TARGET_INFIDELITY', 1. - record.target_fidelity))
    pairs.append(('LEAKAGE', [float(x) for x in record.leakage_per_pulse]))

    return format_document('dickepulse result', pairs)


def format_sweep(n_dots, points, slope=None):
    """SWEEP document for rwa_sweep() output; durations are given as g*tau."""

    pairs = [
        ('FORMAT', 'SWEEP'),
        ('N_DOTS', n_dots),
        ('SWEEP_FIELDS', list(SWEEP_FIELDS)),
        ('POINTS', [tuple(float(x) for x in p) for p in points]),
    ]
    if slope is not None:
        pairs.append(('INFIDELITY_SLOPE', slope))

    return format_document('dickepulse sweep', pairs)


def format_verify(report, tolerance):
    """VERIFY document for a VerifyReport."""

    pairs = [('FORMAT', 'VERIFY'), ('N_DOTS', report.n_dots),
             ('TOLERANCE', tolerance)]
    pairs += [(name.upper() + '_DEVIATION', value) for (name, value) in report.items()]
    pairs.append(('PASSED', report.passed(tolerance)))

    return format_document('dickepulse verify', pairs)


def write_trajectory(record, path):
    """Write the populations of every snapshot as CSV: pulse ordinal, then p0 ... pN."""

    n_dots = record.final_state.n_dots
    ordinals = np.array([ordinal for (ordinal, _) in record.snapshots], dtype='float')
    table = np.column_stack([ordinals, record.populations])

    header = ','.join(['pulse'] + ['p%d' % k for k in range(n_dots + 1)])
    np.savetxt(path, table, fmt=['%d'] + ['%.16e'] * (n_dots + 1), delimiter=',',
               header=header, comments='')

##########################################################################################
# Parsing
##########################################################################################

def parse_document(text):
    """Parse document text into a dictionary name -> value, in document order.

    Arrays become (nested) lists. Syntax errors and repeated names raise
    DickeParseException.
    """

    try:
        parsed = _PARSER.parse_string(text).as_list()
    except ParseBaseException as err:
        raise DickeParseException(f'syntax error at line {err.lineno}, column '
                                  f'{err.col}: {err.msg}') from None

    document = {}
    for (name, value) in parsed:
        if name in document:
            raise DickeParseException(f'{name}: defined more than once')
        document[name] = value

    return document


def read_document(path):
    """Parse the document in a file, given as a string or Path."""

    data = pathlib.Path(path).read_bytes()
    try:
        text = data.decode('utf-8')
    except UnicodeDecodeError as err:
        raise DickeParseException(f'not UTF-8 text: invalid byte at position '
                                  f'{err.start}') from None

    return parse_document(text)


def _field(document, name, kind):
    """Fetch a required field and check its type; kind is 'int', 'real', 'str' or
    'list'.
    """

    if name not in document:
        raise DickeParseException(f'{name}: missing')

    value = document[name]
    ok = {
        'int' : isinstance(value, int),
        'real': isinstance(value, (int, float)),
        'str' : isinstance(value, str),
        'list': isinstance(value, list),
    }[kind]
    if not ok:
        raise DickeParseException(f'{name}: expected {kind}, got {value!r}')

    return float(value) if kind == 'real' else value


def _check_format(document, expected):
    found = _field(document, 'FORMAT', 'str')
    if found.upper() != expected:
        raise DickeParseException(f'FORMAT: expected {expected!r}, got {found!r}')


def _n_dots_field(document):
    n_dots = _field(document, 'N_DOTS', 'int')
    if n_dots < 1:
        raise DickeParseException(f'N_DOTS: must be a positive integer, got {n_dots}')
    if n_dots > DOCUMENT_MAX_DOTS:
        raise DickeResourceError(f'N_DOTS: {n_dots} exceeds the limit of '
                                 f'{DOCUMENT_MAX_DOTS} dots')
    return n_dots


def _is_real(value):
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def target_from_document(document):
    """DickeState from a parsed TARGET document.

    Coefficients whose squared norm is off by at most 1e-6 are renormalized and a
    DickeNormalizationWarning reports it; larger errors raise DickeParseException.
    """

    _check_format(document, 'TARGET')
    n_dots = _n_dots_field(document)
    coefficients = _field(document, 'COEFFICIENTS', 'list')

    if len(coefficients) != n_dots + 1:
        raise DickeParseException(f'COEFFICIENTS: {n_dots} dots need {n_dots + 1} '
                                  f'coefficients, got {len(coefficients)}')

    amplitudes = []
    for (k, pair) in enumerate(coefficients):
        if not isinstance(pair, list) or len(pair) != 2 or \
           not all(_is_real(x) for x in pair):
            raise DickeParseException(f'COEFFICIENTS[{k}]: expected ( re im ), '
                                      f'got {pair!r}')
        amplitudes.append(complex(pair[0], pair[1]))

    try:
        state = DickeState(n_dots, amplitudes)
    except DickeDomainError as err:
        raise DickeParseException('COEFFICIENTS: ' + str(err)) from None

    if state.renormalized:
        _warn('target coefficients renormalized; squared norm was off by %.3e'
              % state.deviation, DickeNormalizationWarning)

    return state


def schedule_from_document(document):
    """PulseSequence from a parsed SCHEDULE document, with g = 1."""

    _check_format(document, 'SCHEDULE')
    n_dots = _n_dots_field(document)
    w_over_g = _field(document, 'W_OVER_G', 'real')
    removed_phase = _field(document, 'REMOVED_GLOBAL_PHASE', 'real')

    fields = _field(document, 'PULSE_FIELDS', 'list')
    if [str(f).upper() for f in fields] != list(PULSE_FIELDS):
        raise DickeParseException('PULSE_FIELDS: expected ' + repr(PULSE_FIELDS))

    try:
        params = SystemParams(n_dots, w_over_g, 1.)
    except DickeDomainError as err:
        raise DickeParseException('W_OVER_G: ' + str(err)) from None

    rows = _field(document, 'PULSES', 'list')
    pulses = []
    for (p, row) in enumerate(rows):
        where = f'PULSES[{p}]'
        if not isinstance(row, list) or len(row) != len(PULSE_FIELDS) or \
           not all(_is_real(x) for x in row):
            raise DickeParseException(f'{where}: expected {len(PULSE_FIELDS)} numbers, '
                                      f'got {row!r}')

        (step, detuning, angle, phase, duration) = row
        if not isinstance(step, int) or not 0 <= step < n_dots:
            raise DickeParseException(f'{where}.STEP_INDEX: must be an integer '
                                      f'0..{n_dots - 1}, got {step!r}')
        try:
            pulse = PulseSpec(step, duration, phase, 1.)
        except DickeDomainError as err:
            raise DickeParseException(f'{where}: ' + str(err)) from None

        expected = resonant_detuning(n_dots, step, w_over_g)
        if abs(detuning - expected) > _CONSISTENCY * max(1., abs(expected)):
            raise DickeParseException(f'{where}.DETUNING_OVER_G: step {step} is resonant '
                                      f'at {expected!r}, got {detuning!r}')

        if abs(angle - pulse.rotation_angle(n_dots)) > _CONSISTENCY * max(1., abs(angle)):
            raise DickeParseException(f'{where}.OMEGA_TAU: inconsistent with DURATION_G')

        pulses.append(pulse)

    try:
        return PulseSequence(params, pulses, removed_global_phase=removed_phase)
    except DickeDomainError as err:
        raise DickeParseException('PULSES: ' + str(err)) from None


def load_target(path):
    """DickeState from a TARGET file."""

    return target_from_document(read_document(path))


def load_schedule(path):
    """PulseSequence from a SCHEDULE file."""

    return schedule_from_document(read_document(path))

##########################################################################################
