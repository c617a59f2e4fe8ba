from oracle_app.bench import KINDS, build_instance, estimate_all, sequential_gate_estimate
from oracle_app.conf import check_guard

from ._base import OracleCommand


class Command(OracleCommand):
    help = "Sequential gate-count laws next to the concurrent term structure."

    def add_command_arguments(self, parser):
        parser.add_argument('kind', choices=KINDS + ('all',))
        parser.add_argument('n', type=int)
        parser.add_argument('m', type=int, nargs='?', default=None)
        parser.add_argument(
            '--instance',
            action='store_true',
            help='count the concurrent side from a compiled instance',
        )

    def run(self, **options):
        kind, n, m = options['kind'], options['n'], options['m']
        seed = options['seed'] or 0
        if options['instance']:
            check_guard(n, options['force'])
        if kind == 'all':
            return estimate_all(n, m, instances=options['instance'], seed=seed)
        instance = build_instance(kind, n, m, seed) if options['instance'] else None
        return sequential_gate_estimate(kind, n, m, instance)
