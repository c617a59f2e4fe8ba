import json
import logging
import math
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from oracle_app.boolfn import make_modexp_table, parse_truth_table
from oracle_app.conf import check_guard
from oracle_app.exceptions import OracleError, ResourceLimitError, TableFormatError
from oracle_app.reports import FORMATS, emit_report
from oracle_app.spectrum import CouplingSet, boolean_scale

logger = logging.getLogger('oracle_app.commands')

EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE_LIMIT = 3


class OracleCommand(BaseCommand):
    """
    Shared plumbing for the oracle subcommands.

    Subclasses implement ``add_command_arguments`` and ``run``; ``run`` returns
    a report (or a list of them, or raw bytes) and may set ``self.failed`` to
    request exit code 1 after the output is written.
    """

    def add_arguments(self, parser):
        parser.add_argument('--format', choices=FORMATS, default='json')
        parser.add_argument('--seed', type=int, default=None)
        parser.add_argument(
            '--force', action='store_true', help='lift the n > 20 width guard (up to 24)'
        )
        parser.add_argument('--tol', type=float, default=None)
        parser.add_argument('--out', default=None, help='write output here instead of stdout')
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def run(self, **options):
        raise NotImplementedError

    def handle(self, *args, **options):
        self.failed = False
        try:
            result = self.run(**options)
        except ResourceLimitError as e:
            raise CommandError(str(e), returncode=EXIT_RESOURCE_LIMIT)
        except OracleError as e:
            raise CommandError(str(e), returncode=EXIT_USAGE)
        except OSError as e:
            raise CommandError(f"cannot read input: {e}", returncode=EXIT_USAGE)
        payload = result if isinstance(result, bytes) else emit_report(result, options['format'])
        self.write_output(payload, options.get('out'))
        if self.failed:
            raise CommandError("verification failed", returncode=EXIT_VERIFICATION_FAILED)

    def write_output(self, payload, out=None):
        if out:
            Path(out).write_bytes(payload)
            self.stderr.write(self.style.SUCCESS(f"wrote {out}"))
        else:
            self.stdout.write(payload.decode('utf-8'), ending='')

    # ----------------------------
    # Input helpers
    # ----------------------------
    def load_table(self, path, force=False):
        tt = parse_truth_table(Path(path).read_text(encoding='utf-8'))
        check_guard(tt.n, force)
        return tt

    def load_couplings(self, path, force=False):
        try:
            data = json.loads(Path(path).read_text(encoding='utf-8'))
        except json.JSONDecodeError as e:
            raise TableFormatError(f"{path}: not valid JSON ({e})") from None
        cs = CouplingSet.from_json(data)
        check_guard(cs.n, force)
        return cs


def add_scale_arguments(parser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument('--scale', type=float, default=None, help='phase per unit of f, radians')
    group.add_argument('--boolean', action='store_true', help='scale pi')
    group.add_argument('--simon', action='store_true', help='scale pi / 2^(m-1)')
    group.add_argument(
        '--shor', nargs=2, type=int, metavar=('A', 'N'), default=None, help='scale pi / 2N'
    )


def resolve_scale(tt, options):
    if options.get('scale') is not None:
        return options['scale']
    if options.get('boolean'):
        return math.pi
    if options.get('shor'):
        a, N = options['shor']
        if make_modexp_table(a, N, tt.n) != tt:
            raise TableFormatError(
                f"table is not the modular exponentiation {a}^x mod {N} on {tt.n} bits"
            )
        return math.pi / (2 * N)
    return boolean_scale(tt.m)
