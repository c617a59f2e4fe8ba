import json

from oracle_app.spectrum import compile_boolean, reduce_balanced

from ._base import OracleCommand, add_scale_arguments, logger, resolve_scale


class Command(OracleCommand):
    help = "Compile a truth table into a coupling set (JSON)."

    def add_command_arguments(self, parser):
        parser.add_argument('table_file')
        add_scale_arguments(parser)
        parser.add_argument(
            '--reduce-balanced',
            action='store_true',
            help='balanced Boolean tables only: drop the n-particle term',
        )

    def run(self, **options):
        tt = self.load_table(options['table_file'], options['force'])
        if options['reduce_balanced']:
            cs = reduce_balanced(tt)
        else:
            cs = compile_boolean(tt, resolve_scale(tt, options))
        logger.info("compiled %s: n=%d terms=%d", options['table_file'], cs.n, len(cs.nonzero_masks()))
        return (json.dumps(cs.to_json(), indent=2) + '\n').encode('utf-8')
