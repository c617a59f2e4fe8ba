"""
Truth tables for the function families encoded as phase oracles.

Bit convention shared by every module: particle i (1-indexed) is bit (i - 1)
of the basis index, so x = sum_i 2^(i-1) x_i and x_1 is the least
significant bit.
"""
import enum
import logging
import math
import re
from dataclasses import dataclass

import numpy as np

from .conf import check_width
from .exceptions import ArithmeticDomainError, PromiseError, TableFormatError, WidthError

logger = logging.getLogger(__name__)

_HEADER = re.compile(r'^([0-9]+) ([0-9]+)$')
_BYTE_POPCOUNT = np.array([bin(i).count('1') for i in range(256)], dtype=np.uint8)


def popcount(values):
    """Vectorized popcount for non-negative integers below 2^32."""
    v = np.asarray(values, dtype=np.uint32)
    return (
        _BYTE_POPCOUNT[v & 0xFF]
        + _BYTE_POPCOUNT[(v >> 8) & 0xFF]
        + _BYTE_POPCOUNT[(v >> 16) & 0xFF]
        + _BYTE_POPCOUNT[(v >> 24) & 0xFF]
    ).astype(np.int64)


def parity(values):
    return popcount(values) & 1


def mask_particles(mask):
    """1-indexed particles in a subset mask, ascending."""
    return [i + 1 for i in range(int(mask).bit_length()) if (mask >> i) & 1]


def particles_mask(particles):
    mask = 0
    for p in particles:
        mask |= 1 << (int(p) - 1)
    return mask


def _frozen(array):
    array = np.array(array, copy=True)
    array.setflags(write=False)
    return array


class PromiseClass(enum.Enum):
    CONSTANT_ZERO = 'ConstantZero'
    CONSTANT_ONE = 'ConstantOne'
    BALANCED = 'Balanced'
    NEITHER = 'Neither'

    @property
    def is_constant(self):
        return self in (PromiseClass.CONSTANT_ZERO, PromiseClass.CONSTANT_ONE)


@dataclass(frozen=True, eq=False)
class TruthTable:
    """n-input function with m-bit unsigned outputs, 2^n values in index order."""

    n: int
    m: int
    values: np.ndarray

    def __post_init__(self):
        check_width(self.n)
        if self.m < 1 or self.m > 63:
            raise WidthError(f"output width m must be in [1, 63], got {self.m}")
        values = np.asarray(self.values)
        if values.shape != (1 << self.n,):
            raise TableFormatError(f"expected {1 << self.n} values, got {values.size}")
        if values.size and (values.min() < 0 or int(values.max()) >= (1 << self.m)):
            raise TableFormatError(f"value outside codomain [0, 2^{self.m})")
        object.__setattr__(self, 'values', _frozen(values.astype(np.uint64)))

    def __eq__(self, other):
        if not isinstance(other, TruthTable):
            return NotImplemented
        return self.n == other.n and self.m == other.m and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash((self.n, self.m, self.values.tobytes()))

    def __len__(self):
        return self.values.size

    def phases(self, scale):
        from .spectrum import PhaseVector

        return PhaseVector(self.n, scale * self.values.astype(np.float64))

    def ones(self):
        return int(np.count_nonzero(self.values))


# ----------------------------
# Generators
# ----------------------------
def make_constant(n, bit):
    check_width(n)
    if bit not in (0, 1):
        raise WidthError(f"constant bit must be 0 or 1, got {bit}")
    return TruthTable(n, 1, np.full(1 << n, bit, dtype=np.uint64))


def make_grover_marker(n, t):
    check_width(n)
    if not 0 <= t < (1 << n):
        raise WidthError(f"marked index t={t} outside [0, 2^{n})")
    values = np.zeros(1 << n, dtype=np.uint64)
    values[t] = 1
    return TruthTable(n, 1, values)


def make_simon_function(n, m, s, seed=0):
    """
    Seeded Simon-promise function: f(x) = f(y) exactly when y in {x, x ^ s}.

    Each pair {x, x ^ s} gets a distinct label drawn without replacement from
    [0, 2^m), so equal seeds reproduce the same table.
    """
    check_width(n)
    if m < n:
        raise WidthError(f"Simon functions need m >= n, got m={m} < n={n}")
    if m > 63:
        raise WidthError(f"output width m must be <= 63, got {m}")
    if not 0 < s < (1 << n):
        raise WidthError(f"hidden mask s must be a nonzero {n}-bit value, got {s}")
    rng = np.random.default_rng(seed)
    x = np.arange(1 << n, dtype=np.int64)
    representative = np.minimum(x, x ^ s)
    _, pair_index = np.unique(representative, return_inverse=True)
    pairs = 1 << (n - 1)
    if m <= 30:
        labels = rng.choice(1 << m, size=pairs, replace=False)
    else:
        # sample distinct labels without materializing a 2^m range
        labels = np.unique(rng.integers(0, 1 << m, size=2 * pairs, dtype=np.uint64))
        while labels.size < pairs:
            extra = rng.integers(0, 1 << m, size=pairs, dtype=np.uint64)
            labels = np.unique(np.concatenate([labels, extra]))
        labels = rng.permutation(labels)[:pairs]
    return TruthTable(n, m, np.asarray(labels, dtype=np.uint64)[pair_index])


def make_balanced(n, seed=0):
    check_width(n)
    rng = np.random.default_rng(seed)
    values = np.zeros(1 << n, dtype=np.uint64)
    values[rng.choice(1 << n, size=1 << (n - 1), replace=False)] = 1
    return TruthTable(n, 1, values)


def check_modulus(a, N):
    if N < 3 or N % 2 == 0:
        raise ArithmeticDomainError(f"N must be odd and >= 3, got {N}")
    if a < 1:
        raise ArithmeticDomainError(f"a must be a positive integer, got {a}")
    if math.gcd(a, N) != 1:
        raise ArithmeticDomainError(f"a={a} and N={N} are not coprime")


def modexp_squares(a, N, n):
    """lambda_i = a^(2^(i-1)) mod N for i = 1..n."""
    squares = []
    value = a % N
    for _ in range(n):
        squares.append(value)
        value = value * value % N
    return squares


def make_modexp_table(a, N, n):
    check_modulus(a, N)
    check_width(n)
    if (1 << n) < N * N:
        raise ArithmeticDomainError(f"register too small: 2^{n} < N^2 = {N * N}")
    # a^x mod N = prod over set bits of lambda_i, reduced mod N at each step
    values = np.ones(1 << n, dtype=np.int64)
    index = np.arange(1 << n, dtype=np.int64)
    for i, lam in enumerate(modexp_squares(a, N, n)):
        bit = ((index >> i) & 1).astype(bool)
        values[bit] = values[bit] * lam % N
    m = max(1, (N - 1).bit_length())
    return TruthTable(n, m, values)


# ----------------------------
# Text format
# ----------------------------
def parse_truth_table(text):
    """
    Parse the plain-text table format.

    First line "n m", then exactly 2^n decimal values in index order. Lines
    starting with '#' are ignored.
    """
    lines = [line.strip() for line in text.split('\n')]
    lines = [line for line in lines if line and not line.startswith('#')]
    if not lines:
        raise TableFormatError("empty truth table")
    header = _HEADER.match(lines[0])
    if header is None:
        raise TableFormatError(f"malformed header {lines[0]!r}, expected 'n m'")
    n, m = int(header.group(1)), int(header.group(2))
    check_width(n)
    rows = lines[1:]
    if len(rows) != (1 << n):
        raise TableFormatError(f"expected {1 << n} rows for n={n}, got {len(rows)}")
    values = []
    for lineno, row in enumerate(rows, start=2):
        if not re.fullmatch(r'[0-9]+', row):
            raise TableFormatError(f"row {lineno}: {row!r} is not a non-negative decimal")
        value = int(row)
        if value >= (1 << m):
            raise TableFormatError(f"row {lineno}: value {value} outside codomain [0, 2^{m})")
        values.append(value)
    return TruthTable(n, m, np.array(values, dtype=np.uint64))


def serialize_truth_table(tt):
    body = '\n'.join(str(int(v)) for v in tt.values)
    return f"{tt.n} {tt.m}\n{body}\n"


def classify_promise(tt):
    if tt.m != 1:
        raise PromiseError(f"promise classification needs a Boolean table, got m={tt.m}")
    ones = tt.ones()
    if ones == 0:
        return PromiseClass.CONSTANT_ZERO
    if ones == len(tt):
        return PromiseClass.CONSTANT_ONE
    if 2 * ones == len(tt):
        return PromiseClass.BALANCED
    return PromiseClass.NEITHER
