"""
One-time evolution of a compiled coupling set: the phase profile of the
diagonal unitary, its verification against a target, and the term structure.
"""
import logging
import math

import numpy as np

from .boolfn import parity, popcount
from .conf import check_width, oracle_setting
from .exceptions import WidthError
from .reports import ResourceReport, VerifyReport
from .spectrum import TWO_PI, PhaseVector, fwht

logger = logging.getLogger(__name__)


def phases_of(cs):
    """phase(x) = phi - sum_S theta[S] (-1)^popcount(x & S), via one FWHT."""
    return PhaseVector(cs.n, fwht(cs.coefficients()))


def phases_of_naive(cs):
    """Direct double loop over (x, S); test oracle for phases_of."""
    check_width(cs.n, limit=oracle_setting('NAIVE_MAX_WIDTH'))
    masks = np.arange(1 << cs.n, dtype=np.int64)
    phases = np.empty(1 << cs.n)
    for x in range(1 << cs.n):
        signs = 1.0 - 2.0 * parity(masks & x)
        phases[x] = cs.phi - float(np.dot(cs.theta[1:], signs[1:]))
    return PhaseVector(cs.n, phases)


def circle_distance(a, b):
    """Elementwise distance between angles on the circle, in [0, pi]."""
    d = np.mod(np.asarray(a, dtype=np.float64) - np.asarray(b, dtype=np.float64), TWO_PI)
    return np.minimum(d, TWO_PI - d)


def verify(cs, target, tol=None):
    tol = oracle_setting('TOL') if tol is None else tol
    if cs.n != target.n:
        raise WidthError(f"width mismatch: couplings n={cs.n}, target n={target.n}")
    reconstructed = phases_of(cs).phases
    distance = circle_distance(reconstructed, target.phases)
    max_error = float(min(distance.max(), math.pi))
    notes = []
    raw_error = float(np.max(np.abs(reconstructed - target.phases)))
    if raw_error > tol and max_error < tol:
        notes.append(f"equal modulo 2pi only (raw max difference {raw_error:.6g})")
    if max_error >= tol:
        worst = int(np.argmax(distance))
        notes.append(f"largest deviation at x={worst}")
    report = VerifyReport(max_circle_error=max_error, exact_pass=max_error < tol, notes=notes)
    logger.debug("verify n=%d max_circle_error=%.3e pass=%s", cs.n, max_error, report.exact_pass)
    return report


def resources(cs, evolutions=1, threshold=None):
    per_order = cs.order_report(threshold)
    return ResourceReport(
        n=cs.n,
        nonzero_terms=sum(per_order.values()),
        max_order=max(per_order, default=0),
        per_order=per_order,
        evolutions=evolutions,
    )


def schedule_resources(n, coupling_sets, threshold=None):
    """
    Term structure over a QFT schedule: union of the masks any stage uses.

    The evolution count is n, one per stage, as the stage-wise accounting
    counts it (the last stage's evolution is empty).
    """
    used = np.zeros(1 << n, dtype=bool)
    for cs in coupling_sets:
        used[cs.nonzero_masks(threshold)] = True
    orders, counts = np.unique(popcount(np.flatnonzero(used)), return_counts=True)
    per_order = {int(k): int(v) for k, v in zip(orders, counts)}
    return ResourceReport(
        n=n,
        nonzero_terms=sum(per_order.values()),
        max_order=max(per_order, default=0),
        per_order=per_order,
        evolutions=n,
    )


def global_phase_free_error(cs, target):
    """Max circle error after aligning the two profiles at x = 0."""
    delta = phases_of(cs).phases - target.phases
    return float(circle_distance(delta, delta[0]).max())
