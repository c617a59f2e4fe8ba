import argparse

from oracle_app.algorithms import (
    deutsch_jozsa,
    grover_search,
    qft_check,
    qft_schedule,
    shor_order_finding,
    simon_run,
)
from oracle_app.conf import check_guard
from oracle_app.evolution import schedule_resources
from oracle_app.spectrum import CouplingSet

from ._base import OracleCommand


class Command(OracleCommand):
    help = "Run one of the algorithm pipelines on the state-vector simulator."

    def add_command_arguments(self, parser):
        subparsers = parser.add_subparsers(dest='algorithm', required=True)

        dj = subparsers.add_parser('dj', help='Deutsch-Jozsa on a Boolean truth table')
        dj.add_argument('table_file')
        dj.add_argument('--no-reduce', action='store_true', help='skip the balanced reduction')

        grover = subparsers.add_parser('grover', help='Grover search for one marked index')
        grover.add_argument('n', type=int)
        grover.add_argument('t', type=int)
        grover.add_argument('--iters', type=int, default=None)

        simon = subparsers.add_parser('simon', help="Simon's hidden-mask recovery")
        simon.add_argument('table_file')
        simon.add_argument('--seed', type=int, default=argparse.SUPPRESS)
        simon.add_argument('--max-samples', type=int, default=None)

        shor = subparsers.add_parser('shor', help='phase-encoded order finding')
        shor.add_argument('a', type=int)
        shor.add_argument('N', type=int)
        shor.add_argument('--shots', type=int, default=1000)
        shor.add_argument('--seed', type=int, default=argparse.SUPPRESS)
        shor.add_argument('--phase-source', choices=('product', 'modexp'), default='product')

        qft = subparsers.add_parser('qft', help='interleaved QFT schedule')
        qft.add_argument('n', type=int)
        qft.add_argument(
            '--check-dense', action='store_true', help='compare with the dense transform'
        )

    def run(self, **options):
        handler = getattr(self, f"run_{options['algorithm']}")
        return handler(**options)

    def run_dj(self, **options):
        tt = self.load_table(options['table_file'], options['force'])
        return deutsch_jozsa(tt, reduce=not options['no_reduce'])

    def run_grover(self, **options):
        check_guard(options['n'], options['force'])
        return grover_search(options['n'], options['t'], options['iters'])

    def run_simon(self, **options):
        tt = self.load_table(options['table_file'], options['force'])
        return simon_run(tt, max_samples=options['max_samples'], seed=options.get('seed'))

    def run_shor(self, **options):
        return shor_order_finding(
            options['a'],
            options['N'],
            shots=options['shots'],
            seed=options.get('seed'),
            phase_source=options['phase_source'],
        )

    def run_qft(self, **options):
        n = options['n']
        check_guard(n, options['force'])
        if options['check_dense']:
            report = qft_check(n, seed=options.get('seed') or 0)
            self.failed = not report.matches
            return report
        steps = qft_schedule(n)
        return schedule_resources(n, [s for s in steps if isinstance(s, CouplingSet)])
