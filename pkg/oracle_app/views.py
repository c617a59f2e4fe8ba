"""
Read-only JSON endpoints mirroring the ``run`` and ``bench`` commands.
"""
import functools
import logging

from django.http import JsonResponse
from django.views.decorators.http import require_GET

from .algorithms import grover_search, qft_check, shor_order_finding
from .bench import build_instance, estimate_all, sequential_gate_estimate
from .conf import check_guard
from .exceptions import OracleError
from .spectrum import grover_couplings

logger = logging.getLogger(__name__)


def _int_param(request, name, default=None):
    raw = request.GET.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise OracleError(f"query parameter {name!r} must be an integer, got {raw!r}") from None


def json_api(view):
    """Serialize a report (or list of reports) and map library errors to status codes."""

    @require_GET
    @functools.wraps(view)
    def wrapper(request, *args, **kwargs):
        try:
            result = view(request, *args, **kwargs)
        except OracleError as e:
            return JsonResponse({'error': str(e)}, status=400)
        except Exception as e:
            logger.exception("unexpected failure in %s", view.__name__)
            return JsonResponse({'error': str(e)}, status=500)
        if isinstance(result, list):
            return JsonResponse([r.as_dict() for r in result], safe=False)
        return JsonResponse(result if isinstance(result, dict) else result.as_dict())

    return wrapper


@json_api
def run_grover_api(request, n, t):
    check_guard(n)
    return grover_search(n, t, _int_param(request, 'iters'))


@json_api
def run_shor_api(request, a, N):
    return shor_order_finding(
        a,
        N,
        shots=_int_param(request, 'shots', 1000),
        seed=_int_param(request, 'seed'),
        phase_source=request.GET.get('phase_source', 'product'),
    )


@json_api
def run_qft_api(request, n):
    return qft_check(n, seed=_int_param(request, 'seed', 0))


@json_api
def bench_api(request, kind, n):
    m = _int_param(request, 'm')
    instance = request.GET.get('instance') in ('1', 'true')
    seed = _int_param(request, 'seed', 0)
    if instance:
        check_guard(n)
    if kind == 'all':
        return estimate_all(n, m, instances=instance, seed=seed)
    return sequential_gate_estimate(kind, n, m, build_instance(kind, n, m, seed) if instance else None)


@json_api
def grover_couplings_api(request, n, t):
    check_guard(n)
    return grover_couplings(n, t).to_json()
