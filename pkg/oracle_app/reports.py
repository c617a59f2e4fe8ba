"""
Structured run and verification records, and their json / csv / text emission.
"""
import json
import math
from typing import Literal, Optional

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, model_validator

from .exceptions import ReportFormatError

FORMATS = ('json', 'csv', 'text')


class Report(BaseModel):
    model_config = ConfigDict(frozen=True)

    def as_dict(self):
        # round trip through JSON so dict keys and floats match what is emitted
        return json.loads(self.model_dump_json())


class ResourceReport(Report):
    n: int
    nonzero_terms: int
    max_order: int
    per_order: dict[int, int] = Field(default_factory=dict)
    evolutions: int = 1

    @model_validator(mode='after')
    def _consistent(self):
        if self.nonzero_terms != sum(self.per_order.values()):
            raise ValueError("nonzero_terms must equal the sum of per_order counts")
        if not 0 <= self.max_order <= self.n:
            raise ValueError(f"max_order {self.max_order} outside [0, {self.n}]")
        return self


class VerifyReport(Report):
    max_circle_error: float = Field(ge=0.0, le=math.pi)
    exact_pass: bool
    notes: list[str] = Field(default_factory=list)


class Histogram(Report):
    shots: int
    counts: dict[int, int]

    @model_validator(mode='after')
    def _total(self):
        if sum(self.counts.values()) != self.shots:
            raise ValueError("histogram counts must sum to shots")
        return self

    def most_common(self):
        return max(self.counts.items(), key=lambda kv: kv[1])[0]


class DJVerdict(Report):
    verdict: Literal['Constant', 'Balanced']
    prob_zero: float
    n: int
    reduced: bool = False
    resources: Optional[ResourceReport] = None


class GroverRun(Report):
    n: int
    t: int
    iterations: int
    success_prob: float
    closed_form_prob: float
    norm: float = 1.0


class SimonRun(Report):
    n: int
    samples: list[int]
    recovered_s: Optional[int] = None
    discarded_zero: int = 0
    rounds: int = 0
    rank: int = 0
    orthogonality_violations: Optional[int] = None


class OrderCandidate(Report):
    r: int
    verified: bool
    count: int


class ShorRun(Report):
    a: int
    N: int
    n: int
    shots: int
    phase_source: Literal['product', 'modexp'] = 'product'
    measurements: dict[int, int]
    order_candidates: list[OrderCandidate]
    order: Optional[int] = None
    classical_order: int
    empirical_success_rate: float
    factors: Optional[tuple[int, int]] = None
    max_phase_gap: float = 0.0
    gap_count: int = 0
    notes: list[str] = Field(default_factory=list)


class QFTCheck(Report):
    n: int
    hadamards: int
    coupling_sets: int
    evolutions: int
    max_error: float
    matches: bool
    resources: ResourceReport
    notes: list[str] = Field(default_factory=list)


class GateEstimate(Report):
    kind: Literal['general_boolean', 'deutsch_jozsa', 'grover', 'shor', 'simon', 'cps', 'qft']
    n: int
    m: Optional[int] = None
    law: str
    constant: int = 1
    sequential_gates: int = Field(ge=0)
    concurrent: ResourceReport
    concurrent_source: Literal['table', 'instance'] = 'table'


# ----------------------------
# Emission
# ----------------------------
def _records(report):
    reports = report if isinstance(report, (list, tuple)) else [report]
    return [r.as_dict() if isinstance(r, Report) else dict(r) for r in reports]


def emit_report(report, format='json'):
    """
    Serialize one report (or a list of them) to bytes.

    json keeps the declaration order of fields; csv writes one row per report
    with nested fields flattened to dotted columns; text is one "key: value"
    line per flattened field, reports separated by a blank line.
    """
    if format not in FORMATS:
        raise ReportFormatError(f"unknown format {format!r}, expected one of {', '.join(FORMATS)}")
    records = _records(report)
    if format == 'json':
        payload = records[0] if not isinstance(report, (list, tuple)) else records
        return (json.dumps(payload, indent=2) + '\n').encode('utf-8')
    frame = pd.json_normalize(records)
    if format == 'csv':
        return frame.to_csv(index=False, lineterminator='\n').encode('utf-8')
    blocks = []
    for _, row in frame.iterrows():
        lines = [f"{key}: {value}" for key, value in row.items() if not _is_missing(value)]
        blocks.append('\n'.join(lines))
    return ('\n\n'.join(blocks) + '\n').encode('utf-8')


def _is_missing(value):
    try:
        return bool(pd.isna(value))
    except (TypeError, ValueError):
        return False
