from oracle_app.evolution import resources

from ._base import OracleCommand


class Command(OracleCommand):
    help = "Count the nonzero terms of a coupling set by interaction order."

    def add_command_arguments(self, parser):
        parser.add_argument('couplings_file')

    def run(self, **options):
        return resources(self.load_couplings(options['couplings_file'], options['force']))
