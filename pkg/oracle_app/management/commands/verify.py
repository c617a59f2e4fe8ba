from oracle_app.evolution import verify

from ._base import OracleCommand, add_scale_arguments, resolve_scale


class Command(OracleCommand):
    help = "Check that a coupling set reproduces the phases of a truth table."

    def add_command_arguments(self, parser):
        parser.add_argument('table_file')
        parser.add_argument('couplings_file')
        add_scale_arguments(parser)

    def run(self, **options):
        tt = self.load_table(options['table_file'], options['force'])
        cs = self.load_couplings(options['couplings_file'], options['force'])
        report = verify(cs, tt.phases(resolve_scale(tt, options)), options['tol'])
        self.failed = not report.exact_pass
        return report
