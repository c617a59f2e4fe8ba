"""
Minimal dense state-vector engine: preparation, diagonal phases, Hadamard
layers, QFT and seeded measurement. Particle i acts on bit (i - 1).
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from .conf import check_width, oracle_setting
from .exceptions import OracleError, ResourceLimitError, WidthError
from .reports import Histogram
from .spectrum import fwht

logger = logging.getLogger(__name__)

NORM_TOL = 1e-9
_SQRT_HALF = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True, eq=False)
class StateVector:
    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        check_width(self.n)
        amplitudes = np.array(self.amplitudes, dtype=np.complex128, copy=True)
        if amplitudes.shape != (1 << self.n,):
            raise WidthError(f"expected {1 << self.n} amplitudes, got {amplitudes.size}")
        total = float(np.vdot(amplitudes, amplitudes).real)
        if abs(total - 1.0) > NORM_TOL:
            raise OracleError(f"state is not normalized: sum |a|^2 = {total!r}")
        amplitudes.setflags(write=False)
        object.__setattr__(self, 'amplitudes', amplitudes)

    def __len__(self):
        return self.amplitudes.size


def _same_width(a, b):
    if a.n != b.n:
        raise WidthError(f"width mismatch: {a.n} vs {b.n}")


def uniform(n):
    check_width(n)
    return StateVector(n, np.full(1 << n, 2.0 ** (-n / 2.0), dtype=np.complex128))


def basis_state(n, index):
    check_width(n)
    if not 0 <= index < (1 << n):
        raise WidthError(f"basis index {index} outside [0, 2^{n})")
    amplitudes = np.zeros(1 << n, dtype=np.complex128)
    amplitudes[index] = 1.0
    return StateVector(n, amplitudes)


def probabilities(sv):
    return np.abs(sv.amplitudes) ** 2


def norm(sv):
    return float(math.sqrt(probabilities(sv).sum()))


def apply_phases(sv, p):
    _same_width(sv, p)
    return StateVector(sv.n, sv.amplitudes * np.exp(1j * p.phases))


def apply_hadamard(sv, i):
    if not 1 <= i <= sv.n:
        raise WidthError(f"particle index {i} outside [1, {sv.n}]")
    view = sv.amplitudes.reshape(-1, 2, 1 << (i - 1))
    out = np.empty_like(view)
    out[:, 0, :] = (view[:, 0, :] + view[:, 1, :]) * _SQRT_HALF
    out[:, 1, :] = (view[:, 0, :] - view[:, 1, :]) * _SQRT_HALF
    return StateVector(sv.n, out.reshape(-1))


def hadamard_all(sv):
    """H on every particle: the normalized Walsh-Hadamard transform."""
    return StateVector(sv.n, fwht(sv.amplitudes) * 2.0 ** (-sv.n / 2.0))


def bit_reverse_indices(n):
    index = np.arange(1 << n, dtype=np.int64)
    reversed_index = np.zeros_like(index)
    for b in range(n):
        reversed_index |= ((index >> b) & 1) << (n - 1 - b)
    return reversed_index


def apply_qft(sv, inverse=False, bit_reversal=True):
    """
    Dense QFT: a'[y] = q^(-1/2) sum_x exp(+-2 pi i x y / q) a[x].

    With bit_reversal (default) this is the transform as written. Without it,
    the register index is bit-reversed on the input side (after the inverse
    transform when inverse=True), which is what the interleaved Hadamard /
    controlled-phase schedule realizes when x_1 is the least significant bit.
    """
    limit = oracle_setting('QFT_MAX_WIDTH')
    if sv.n > limit:
        raise ResourceLimitError(f"dense QFT limited to n <= {limit}, got {sv.n}")
    a = sv.amplitudes
    if inverse:
        out = np.fft.fft(a, norm='ortho')
        if not bit_reversal:
            out = out[bit_reverse_indices(sv.n)]
    else:
        if not bit_reversal:
            a = a[bit_reverse_indices(sv.n)]
        out = np.fft.ifft(a, norm='ortho')
    return StateVector(sv.n, out)


def measure(sv, shots, seed=None):
    """
    Draw i.i.d. basis outcomes from |a|^2.

    ``seed`` may be an int, a numpy Generator (consumed in place) or None.
    """
    if shots < 1:
        raise OracleError(f"shots must be >= 1, got {shots}")
    rng = np.random.default_rng(seed)
    p = probabilities(sv)
    outcomes = rng.choice(p.size, size=shots, p=p / p.sum())
    values, counts = np.unique(outcomes, return_counts=True)
    return Histogram(shots=shots, counts={int(v): int(c) for v, c in zip(values, counts)})


def fidelity(a, b):
    _same_width(a, b)
    overlap = abs(np.vdot(a.amplitudes, b.amplitudes)) ** 2
    return float(min(max(overlap, 0.0), 1.0))
