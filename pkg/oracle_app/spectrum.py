"""
Compilation of target phase functions into Hamiltonian coupling sets.

A coupling set stores the dimensionless products w_S * tau for every nonempty
particle subset S (mask bit i-1 set <=> particle i in S) plus the global phase
phi. The diagonal of the evolution is

    phase(x) = phi - sum_{S != 0} theta[S] * (-1)^popcount(x & S)

so compiling a phase vector is one Walsh-Hadamard transform and
reconstructing it (see evolution.phases_of) is another.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from .boolfn import (
    PromiseClass,
    check_modulus,
    classify_promise,
    make_modexp_table,
    mask_particles,
    modexp_squares,
    parity,
    popcount,
)
from .conf import check_width, oracle_setting
from .exceptions import ArithmeticDomainError, PromiseError, TableFormatError, WidthError

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


def wrap_angle(angles):
    """Map angles onto the canonical interval (-pi, pi]."""
    wrapped = math.pi - np.mod(math.pi - np.asarray(angles, dtype=np.float64), TWO_PI)
    return np.where(wrapped <= -math.pi, wrapped + TWO_PI, wrapped)


def _width_of(size):
    if size < 2 or size & (size - 1):
        raise WidthError(f"length {size} is not a power of two >= 2")
    return size.bit_length() - 1


def _readonly(array):
    array = np.array(array, copy=True)
    array.setflags(write=False)
    return array


def fwht(values):
    """
    Unnormalized fast Walsh-Hadamard transform.

    out[S] = sum_x (-1)^popcount(x & S) * v[x], computed with n in-place
    butterfly passes over contiguous halves, O(n 2^n). Complex input stays
    complex.
    """
    a = np.array(values, dtype=np.result_type(np.asarray(values).dtype, np.float64), copy=True)
    if a.ndim != 1:
        raise WidthError("fwht expects a one-dimensional vector")
    size = a.shape[0]
    _width_of(size)
    h = 1
    while h < size:
        view = a.reshape(-1, 2, h)
        top = view[:, 0, :] + view[:, 1, :]
        view[:, 1, :] = view[:, 0, :] - view[:, 1, :]
        view[:, 0, :] = top
        h *= 2
    return a


# ----------------------------
# Value types
# ----------------------------
@dataclass(frozen=True, eq=False)
class PhaseVector:
    n: int
    phases: np.ndarray

    def __post_init__(self):
        check_width(self.n)
        phases = np.asarray(self.phases, dtype=np.float64)
        if phases.shape != (1 << self.n,):
            raise WidthError(f"expected {1 << self.n} phases, got {phases.size}")
        if not np.all(np.isfinite(phases)):
            raise WidthError("phases must be finite")
        object.__setattr__(self, 'phases', _readonly(phases))

    def __len__(self):
        return self.phases.size

    def __neg__(self):
        return PhaseVector(self.n, -self.phases)

    def __add__(self, other):
        if not isinstance(other, PhaseVector):
            return NotImplemented
        if other.n != self.n:
            raise WidthError(f"width mismatch: {self.n} vs {other.n}")
        return PhaseVector(self.n, self.phases + other.phases)


@dataclass(frozen=True, eq=False)
class CouplingSet:
    """
    Compiled Hamiltonian: global phase phi and the angle w_S * tau per subset.

    ``theta`` is dense and indexed by subset mask; slot 0 is unused and always
    zero, so ``theta[mask]`` reads a coefficient directly.
    """

    n: int
    phi: float
    theta: np.ndarray

    def __post_init__(self):
        check_width(self.n)
        theta = np.asarray(self.theta, dtype=np.float64)
        if theta.shape != (1 << self.n,):
            raise WidthError(f"expected {1 << self.n} coefficient slots, got {theta.size}")
        if theta[0] != 0.0:
            raise WidthError("slot 0 of theta is reserved and must be zero")
        if not (math.isfinite(self.phi) and np.all(np.isfinite(theta))):
            raise WidthError("coupling angles must be finite")
        object.__setattr__(self, 'phi', float(self.phi))
        object.__setattr__(self, 'theta', _readonly(theta))

    @classmethod
    def zero(cls, n):
        return cls(n, 0.0, np.zeros(1 << n))

    @classmethod
    def from_terms(cls, n, phi, terms):
        """Densify a sparse {mask: angle} mapping."""
        check_width(n)
        theta = np.zeros(1 << n)
        for mask, angle in terms.items():
            if not 0 < mask < (1 << n):
                raise WidthError(f"subset mask {mask} outside [1, 2^{n})")
            theta[mask] = angle
        return cls(n, phi, theta)

    def __getitem__(self, mask):
        if not 0 < mask < (1 << self.n):
            raise WidthError(f"subset mask {mask} outside [1, 2^{self.n})")
        return float(self.theta[mask])

    def coefficients(self):
        """Walsh coefficients c with phase(x) = sum_S c[S] (-1)^popcount(x & S)."""
        c = -self.theta.copy()
        c[0] = self.phi
        return c

    def canonical(self):
        theta = wrap_angle(self.theta)
        theta[0] = 0.0
        return CouplingSet(self.n, float(wrap_angle(self.phi)), theta)

    def nonzero_masks(self, threshold=None):
        threshold = oracle_setting('ZERO_THRESHOLD') if threshold is None else threshold
        masks = np.flatnonzero(np.abs(self.theta) > threshold)
        return masks[masks != 0]

    def order_report(self, threshold=None):
        """Nonzero term counts keyed by interaction order |S|."""
        orders, counts = np.unique(popcount(self.nonzero_masks(threshold)), return_counts=True)
        return {int(k): int(v) for k, v in zip(orders, counts)}

    def allclose(self, other, atol=1e-9, rtol=0.0):
        return (
            self.n == other.n
            and math.isclose(self.phi, other.phi, abs_tol=atol, rel_tol=rtol)
            and np.allclose(self.theta, other.theta, atol=atol, rtol=rtol)
        )

    def to_json(self, eps=None):
        eps = oracle_setting('JSON_EPS') if eps is None else eps
        terms = [
            {'mask': int(mask), 'particles': mask_particles(mask), 'angle': float(self.theta[mask])}
            for mask in range(1, 1 << self.n)
            if abs(self.theta[mask]) >= eps
        ]
        return {'n': self.n, 'phi': self.phi, 'terms': terms}

    @classmethod
    def from_json(cls, data):
        try:
            n = int(data['n'])
            phi = float(data['phi'])
            raw_terms = data.get('terms', [])
        except (KeyError, TypeError, ValueError) as e:
            raise TableFormatError(f"malformed coupling-set JSON: {e}") from None
        check_width(n)
        terms = {}
        for term in raw_terms:
            try:
                mask = int(term['mask'])
                angle = float(term['angle'])
            except (KeyError, TypeError, ValueError) as e:
                raise TableFormatError(f"malformed term {term!r}: {e}") from None
            if 'particles' in term and sorted(term['particles']) != mask_particles(mask):
                raise TableFormatError(
                    f"term particles {term['particles']} disagree with mask {mask}"
                )
            if mask in terms:
                raise TableFormatError(f"duplicate term for mask {mask}")
            terms[mask] = angle
        return cls.from_terms(n, phi, terms)


# ----------------------------
# Generic compilation
# ----------------------------
def compile_phase_function(p):
    c = fwht(p.phases) / float(1 << p.n)
    theta = -c
    theta[0] = 0.0
    return CouplingSet(p.n, float(c[0]), theta)


def boolean_scale(m):
    """pi / 2^(m-1): pi for Boolean tables, the Simon phase step otherwise."""
    return math.pi / (1 << (m - 1))


def compile_boolean(tt, scale=None):
    scale = boolean_scale(tt.m) if scale is None else scale
    return compile_phase_function(tt.phases(scale))


def reduce_balanced(tt):
    """
    Balanced-function coupling set without the n-particle term.

    Compiles (-1)^(x_1+...+x_n) (f(x) - 2 N_x) with N_x = x_1 x_2; its phases
    agree with pi f(x) modulo 2 pi and the full-mask coefficient vanishes.
    """
    if classify_promise(tt) is not PromiseClass.BALANCED:
        raise PromiseError("reduce_balanced requires a balanced Boolean table")
    if tt.n < 2:
        raise WidthError("balanced reduction uses particles 1 and 2, so n must be >= 2")
    x = np.arange(1 << tt.n, dtype=np.int64)
    sign = 1.0 - 2.0 * parity(x)
    n_x = (x & 1) & ((x >> 1) & 1)
    substituted = sign * (tt.values.astype(np.float64) - 2.0 * n_x)
    cs = compile_phase_function(PhaseVector(tt.n, math.pi * substituted))
    logger.debug("balanced reduction n=%d, top-order residue %.3e", tt.n, cs.theta[-1])
    return cs


# ----------------------------
# Closed forms
# ----------------------------
def grover_couplings(n, t):
    check_width(n)
    if not 0 <= t < (1 << n):
        raise WidthError(f"marked index t={t} outside [0, 2^{n})")
    step = math.pi / (1 << n)
    masks = np.arange(1 << n, dtype=np.int64)
    theta = -step * (1.0 - 2.0 * parity(masks & t))
    theta[0] = 0.0
    return CouplingSet(n, step, theta)


def _check_register(N, n):
    check_width(n)
    if (1 << n) < N * N:
        raise ArithmeticDomainError(f"register too small: 2^{n} < N^2 = {N * N}")


def shor_couplings(a, N, n):
    """
    Closed product form for the phases (pi/2N) * prod_i lambda_i^x_i.

    Uses lambda^x = (1 + lambda)/2 + (1 - lambda)/2 * (-1)^x per particle, so
    the Walsh coefficients are the Kronecker product of the per-particle pairs.
    """
    check_modulus(a, N)
    _check_register(N, n)
    c = np.ones(1)
    for lam in modexp_squares(a, N, n):
        c = np.concatenate([c * (1 + lam) / 2.0, c * (1 - lam) / 2.0])
    c *= math.pi / (2 * N)
    theta = -c
    theta[0] = 0.0
    return CouplingSet(n, float(c[0]), theta)


def shor_product_phases(a, N, n):
    """(pi/2N) * prod_i lambda_i^x_i as an integer product, no reduction mod N."""
    check_modulus(a, N)
    _check_register(N, n)
    product = np.ones(1)
    for lam in modexp_squares(a, N, n):
        product = np.concatenate([product, product * lam])
    return PhaseVector(n, math.pi / (2 * N) * product)


def modexp_phases(a, N, n):
    """(pi/2N) * (a^x mod N), the phase encoding of the modular exponentiation."""
    return make_modexp_table(a, N, n).phases(math.pi / (2 * N))


def _check_pair(j, k, n):
    check_width(n)
    if not 1 <= j < k <= n:
        raise WidthError(f"need 1 <= j < k <= n, got j={j}, k={k}, n={n}")


def cps_angle(j, k):
    return math.pi / (1 << (k - j))


def cps_couplings(j, k, n):
    """
    Controlled-phase-shift S_jk = exp(i theta x_j x_k), theta = pi / 2^(k-j).

    theta x_j x_k = theta/4 [1 - (-1)^x_j - (-1)^x_k + (-1)^(x_j + x_k)].
    """
    _check_pair(j, k, n)
    quarter = cps_angle(j, k) / 4.0
    bj, bk = 1 << (j - 1), 1 << (k - 1)
    return CouplingSet.from_terms(n, quarter, {bj: quarter, bk: quarter, bj | bk: -quarter})


def literal_cps_couplings(j, k, n):
    """Coefficient values taken literally: 2w_jk t = theta, 2w_j t = 2w_k t = -theta, phi = 0."""
    _check_pair(j, k, n)
    half = cps_angle(j, k) / 2.0
    bj, bk = 1 << (j - 1), 1 << (k - 1)
    return CouplingSet.from_terms(n, 0.0, {bj: -half, bk: -half, bj | bk: half})


def cps_product_couplings(l, l_hi, n):
    """Single evolution realizing S_{l,l_hi} ... S_{l,l+1}."""
    _check_pair(l, l_hi, n)
    cs = CouplingSet.zero(n)
    for m in range(l + 1, l_hi + 1):
        cs = compose(cs, cps_couplings(l, m, n))
    return cs


def literal_cps_product_couplings(l, l_hi, n):
    """
    Literal values for S_{l,l_hi} ... S_{l,l+1}: 2w_lm t = theta_lm, 2w_m t = -theta_lm
    and 2w_l t = -sum_m theta_lm, phi = 0.
    """
    _check_pair(l, l_hi, n)
    theta = np.zeros(1 << n)
    bl = 1 << (l - 1)
    for m in range(l + 1, l_hi + 1):
        half = cps_angle(l, m) / 2.0
        bm = 1 << (m - 1)
        theta[bl] -= half
        theta[bm] -= half
        theta[bl | bm] += half
    return CouplingSet(n, 0.0, theta)


# ----------------------------
# Algebra)
# ----------------------------
def compose(a, b):
    if a.n != b.n:
        raise WidthError(f"width mismatch: {a.n} vs {b.n}")
    return CouplingSet(a.n, a.phi + b.phi, a.theta + b.theta).canonical()


def negate(cs):
    """Inverse evolution: every angle negated, no re-wrapping."""
    return CouplingSet(cs.n, -cs.phi, -cs.theta)
