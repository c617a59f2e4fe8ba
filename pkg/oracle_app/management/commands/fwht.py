import json
from pathlib import Path

import numpy as np

from oracle_app.conf import check_guard
from oracle_app.exceptions import TableFormatError
from oracle_app.spectrum import fwht

from ._base import OracleCommand


def parse_vector(text):
    """One real number per line; blank lines and '#' comments are skipped."""
    values = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        try:
            values.append(float(line))
        except ValueError:
            raise TableFormatError(f"line {lineno}: not a number: {line!r}") from None
    return np.array(values, dtype=np.float64)


class Command(OracleCommand):
    help = "Unnormalized Walsh-Hadamard transform of a vector of length 2^n."

    def add_command_arguments(self, parser):
        parser.add_argument('vector_file')

    def run(self, **options):
        values = parse_vector(Path(options['vector_file']).read_text(encoding='utf-8'))
        if values.size:
            check_guard(values.size.bit_length() - 1, options['force'])
        out = fwht(values)
        if options['format'] == 'json':
            return (json.dumps({'values': out.tolist()}, indent=2) + '\n').encode('utf-8')
        header = 'index,value\n' if options['format'] == 'csv' else ''
        sep = ',' if options['format'] == 'csv' else ': '
        lines = ''.join(f"{i}{sep}{v!r}\n" for i, v in enumerate(out.tolist()))
        return (header + lines).encode('utf-8')
