"""
Resource accounting: sequential gate-count scaling laws next to the term
structure of the concurrent (single-evolution) implementation.

Only asymptotic laws exist for the sequential side, so every estimate uses
the unit constant c = 1 and carries its symbolic law; these are not measured
gate counts.
"""
import logging
import math

import numpy as np

from .algorithms import qft_schedule
from .boolfn import TruthTable, make_balanced, make_simon_function
from .conf import check_width
from .evolution import resources, schedule_resources
from .exceptions import OracleError, WidthError
from .reports import GateEstimate, ResourceReport
from .spectrum import (
    CouplingSet,
    compile_boolean,
    cps_couplings,
    grover_couplings,
    reduce_balanced,
    shor_couplings,
)

logger = logging.getLogger(__name__)

# kind -> (symbolic law, sequential count with c = 1)
LAWS = {
    'general_boolean': ('n*2^n', lambda n, m: n * 2 ** n),
    'deutsch_jozsa': ('n*2^n', lambda n, m: n * 2 ** n),
    'grover': ('n', lambda n, m: n),
    'shor': ('n^3', lambda n, m: n ** 3),
    'simon': ('m*n*2^n', lambda n, m: m * n * 2 ** n),
    'cps': ('1', lambda n, m: 1),
    'qft': ('n^2', lambda n, m: n * n),
}
KINDS = tuple(LAWS)


def _full_structure(n, top):
    return {k: math.comb(n, k) for k in range(1, top + 1)}


def table_structure(kind, n):
    """Term structure of the concurrent implementation as the scaling table lists it."""
    evolutions = 1
    if kind in ('general_boolean', 'grover', 'shor', 'simon'):
        per_order = _full_structure(n, n)
    elif kind == 'deutsch_jozsa':
        # balanced functions drop the n-particle term; n = 1 keeps its single term
        per_order = _full_structure(n, max(n - 1, 1))
    elif kind == 'cps':
        per_order = {1: 2, 2: 1}
    else:
        per_order = {1: n, 2: n * (n - 1) // 2} if n >= 2 else {}
        evolutions = n
    return ResourceReport(
        n=n,
        nonzero_terms=sum(per_order.values()),
        max_order=max(per_order, default=0),
        per_order=per_order,
        evolutions=evolutions,
    )


def _check_kind(kind, n, m):
    if kind not in LAWS:
        raise OracleError(f"unknown kind {kind!r}, expected one of {', '.join(KINDS)}")
    if n < 1:
        raise WidthError(f"n must be >= 1, got {n}")
    if kind == 'simon' and m is None:
        raise WidthError("simon estimates need the output width m")
    if kind == 'simon' and m < n:
        raise WidthError(f"Simon functions need m >= n, got m={m} < n={n}")
    if kind == 'cps' and n < 2:
        raise WidthError("a controlled-phase shift needs n >= 2")


def sequential_gate_estimate(kind, n, m=None, instance=None):
    """
    Scaling-law estimate for one kind.

    Parameters:
        kind: one of KINDS
        n, m: register and output widths (m only for simon)
        instance: optional compiled CouplingSet, or a QFT schedule (list of
            steps); when given, the concurrent side is counted from it

    Returns:
        GateEstimate
    """
    _check_kind(kind, n, m)
    law, count = LAWS[kind]
    if instance is None:
        concurrent = table_structure(kind, n)
        source = 'table'
    elif isinstance(instance, CouplingSet):
        concurrent = resources(instance)
        source = 'instance'
    else:
        sets = [step for step in instance if isinstance(step, CouplingSet)]
        concurrent = schedule_resources(n, sets)
        source = 'instance'
    return GateEstimate(
        kind=kind,
        n=n,
        m=m if kind == 'simon' else None,
        law=law,
        constant=1,
        sequential_gates=count(n, m),
        concurrent=concurrent,
        concurrent_source=source,
    )


def _shor_instance_modulus(n):
    """Largest odd N >= 3 with N^2 <= 2^n, paired with the smallest coprime a >= 2."""
    N = math.isqrt(1 << n)
    if N % 2 == 0:
        N -= 1
    if N < 3:
        raise WidthError(f"no odd N >= 3 fits a {n}-bit register")
    a = next(a for a in range(2, N) if math.gcd(a, N) == 1)
    return a, N


def build_instance(kind, n, m=None, seed=0):
    """Representative compiled instance of a kind, for --instance estimates."""
    _check_kind(kind, n, m)
    check_width(n)
    rng = np.random.default_rng(seed)
    if kind == 'general_boolean':
        return compile_boolean(TruthTable(n, 1, rng.integers(0, 2, size=1 << n)))
    if kind == 'deutsch_jozsa':
        table = make_balanced(n, seed)
        return reduce_balanced(table) if n >= 2 else compile_boolean(table)
    if kind == 'grover':
        return grover_couplings(n, int(rng.integers(0, 1 << n)))
    if kind == 'shor':
        a, N = _shor_instance_modulus(n)
        logger.debug("shor instance for n=%d uses a=%d N=%d", n, a, N)
        return shor_couplings(a, N, n)
    if kind == 'simon':
        s = int(rng.integers(1, 1 << n))
        return compile_boolean(make_simon_function(n, m, s, seed))
    if kind == 'cps':
        return cps_couplings(1, 2, n)
    return qft_schedule(n)


def estimate_all(n, m=None, instances=False, seed=0):
    """One estimate per kind; simon is skipped when m is not given."""
    estimates = []
    for kind in KINDS:
        if kind == 'simon' and m is None:
            continue
        if kind == 'cps' and n < 2:
            continue
        instance = None
        if instances:
            try:
                instance = build_instance(kind, n, m, seed)
            except WidthError as e:
                logger.warning("no %s instance at n=%d, using the table row: %s", kind, n, e)
        estimates.append(sequential_gate_estimate(kind, n, m, instance))
    return estimates
