"""
Access to the ``ORACLE`` settings dict with built-in defaults.

The numeric modules only read their limits through ``oracle_setting`` so they
can also be imported and used without a configured Django project.
"""
import operator

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

from .exceptions import ResourceLimitError, WidthError

HARD_MAX_WIDTH = 24

DEFAULTS = {
    'MAX_WIDTH': HARD_MAX_WIDTH,
    'GUARD_WIDTH': 20,
    'TOL': 1e-9,
    'ZERO_THRESHOLD': 1e-12,
    'JSON_EPS': 1e-15,
    'SHOR_MAX_N': 21,
    'QFT_MAX_WIDTH': 20,
    'SCHEDULE_MAX_WIDTH': 12,
    'NAIVE_MAX_WIDTH': 12,
    'GROVER_MAX_WIDTH': 20,
    'SIMON_SAMPLES_PER_BIT': 50,
}


def oracle_setting(name):
    if name not in DEFAULTS:
        raise KeyError(f"unknown ORACLE setting: {name}")
    try:
        configured = getattr(settings, 'ORACLE', {})
    except ImproperlyConfigured:
        configured = {}
    value = configured.get(name, DEFAULTS[name])
    # the dense cap can be configured down, never up
    if name in ('MAX_WIDTH', 'GUARD_WIDTH'):
        value = min(int(value), HARD_MAX_WIDTH)
    return value


def max_width():
    return oracle_setting('MAX_WIDTH')


def check_width(n, limit=None, what='n'):
    """
    Validate a bit-width against the dense-storage cap.

    Parameters:
        n: requested width
        limit: optional tighter bound for the calling operation

    Raises:
        WidthError when n < 1, ResourceLimitError when n exceeds the cap.
    """
    try:
        n = operator.index(n)
    except TypeError:
        raise WidthError(f"{what} must be an integer, got {n!r}") from None
    if n < 1:
        raise WidthError(f"{what} must be >= 1, got {n}")
    cap = max_width() if limit is None else min(limit, max_width())
    if n > cap:
        raise ResourceLimitError(f"{what}={n} exceeds the dense limit {cap}")
    return n


def check_guard(n, force=False):
    """CLI/API guard: n above GUARD_WIDTH is refused unless forced (up to MAX_WIDTH)."""
    limit = max_width() if force else oracle_setting('GUARD_WIDTH')
    if n > limit:
        hint = '' if force else ' (use --force to lift the guard up to %d)' % max_width()
        raise ResourceLimitError(f"n={n} exceeds the width guard {limit}{hint}")
    return n
