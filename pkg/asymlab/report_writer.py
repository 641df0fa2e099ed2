"""Deterministic rendering of reports.

CSV columns, in order:
  AsymmetryReport  kind, n, total, nontrivial, proportion_num,
                   proportion_den, histogram (order:count pairs joined
                   by ';', empty when there are none)
  FixStats         kind, n, fixed_points, fixed_objects, orbit_count,
                   total_objects
  SrgParams        v, k, lambda, mu
  FamilyResult     family, parameter, v, k, lambda, mu, least, expected
"""
from __future__ import annotations

import csv
import io
from typing import Any, Dict, List, Sequence, Tuple, Union

from beautifultable import BeautifulTable

from asymlab.asymmetry import AsymmetryReport, FixStats
from asymlab.permanent import LogScalar
from asymlab.permanent.log_scalar import ctx
from asymlab.srg import FamilyResult, SrgParams
from asymlab.structures.io import dumps_json

FORMATS = ('json', 'csv', 'table')

Report = Union[AsymmetryReport, FixStats, SrgParams, FamilyResult]
Rows = Tuple[List[str], List[List[str]]]


def log_text(value: LogScalar) -> str:
    """Natural log of a bound, as text."""
    if value.sign == 0:
        return '-inf'
    return ctx.nstr(value.ln(), 20)


def _histogram_text(histogram: Dict[int, int]) -> str:
    return ';'.join(f'{order}:{count}' for order, count in histogram.items())


def _optional(x: Any) -> str:
    return '' if x is None else str(x)


# region Documents
def to_document(report: Report) -> Dict[str, Any]:
    if isinstance(report, AsymmetryReport):
        return {
            'kind': report.kind,
            'n': report.n,
            'total': str(report.total),
            'with_nontrivial_aut': str(report.with_nontrivial_aut),
            'proportion': str(report.proportion),
            'proportion_num': str(report.proportion.numerator),
            'proportion_den': str(report.proportion.denominator),
            'aut_order_histogram': {
                str(order): str(count)
                for order, count in report.aut_order_histogram.items()
            },
            'class_count': str(report.class_count),
        }
    if isinstance(report, FixStats):
        doc: Dict[str, Any] = {
            'kind': report.kind,
            'n': report.n,
            'fixed_points': report.fixed_points,
            'fixed_objects': report.fixed_objects,
            'orbit_count': report.orbit_count,
            'total_objects': report.total_objects,
            'bound_values': {
                name: log_text(value)
                for name, value in report.bound_values.items()
            },
        }
        if report.extra_fixed_blocks is not None:
            doc['extra_fixed_blocks'] = report.extra_fixed_blocks
        if report.subsquare_order is not None:
            doc['subsquare_order'] = report.subsquare_order
        return doc
    if isinstance(report, SrgParams):
        return report.to_dict()
    return {
        'family': report.family,
        'parameter': report.parameter,
        'params': report.params.to_dict(),
        'least_eigenvalue': round(report.least, 9),
        'expected': report.expected,
        'ok': report.ok,
    }
# endregion


# region Rows
def to_rows(report: Report) -> Rows:
    if isinstance(report, AsymmetryReport):
        return (
            ['kind', 'n', 'total', 'nontrivial', 'proportion_num',
             'proportion_den', 'histogram'],
            [[report.kind, str(report.n), str(report.total),
              str(report.with_nontrivial_aut),
              str(report.proportion.numerator),
              str(report.proportion.denominator),
              _histogram_text(report.aut_order_histogram)]],
        )
    if isinstance(report, FixStats):
        return (
            ['kind', 'n', 'fixed_points', 'fixed_objects', 'orbit_count',
             'total_objects'],
            [[report.kind, str(report.n), _optional(report.fixed_points),
              str(report.fixed_objects), str(report.orbit_count),
              str(report.total_objects)]],
        )
    if isinstance(report, SrgParams):
        return (
            ['v', 'k', 'lambda', 'mu'],
            [[str(report.v), str(report.k), str(report.lam),
              str(report.mu)]],
        )
    p = report.params
    return (
        ['family', 'parameter', 'v', 'k', 'lambda', 'mu', 'least',
         'expected'],
        [[report.family, str(report.parameter), str(p.v), str(p.k),
          str(p.lam), str(p.mu), f'{report.least:.9f}',
          str(report.expected)]],
    )


def _merge_rows(reports: Sequence[Report]) -> Rows:
    header: List[str] = []
    rows: List[List[str]] = []
    for report in reports:
        header, part = to_rows(report)
        rows.extend(part)
    return header, rows
# endregion


def write_csv(header: List[str], rows: List[List[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def write_table(header: List[str], rows: List[List[str]]) -> str:
    tab = BeautifulTable()
    tab.columns.header = header
    for row in rows:
        tab.rows.append(row)
    return f'{tab}\n'


def write_report(
    report: Union[Report, Sequence[Report]], fmt: str = 'json'
) -> str:
    """Render one report, or a list of reports of one type."""
    reports = list(report) if isinstance(report, list) else [report]
    if fmt == 'json':
        docs = [to_document(r) for r in reports]  # type: ignore
        payload = docs if isinstance(report, list) else docs[0]
        return dumps_json(payload) + '\n'
    header, rows = _merge_rows(reports)  # type: ignore
    if fmt == 'csv':
        return write_csv(header, rows)
    if fmt == 'table':
        return write_table(header, rows)
    raise ValueError(f'unknown format {fmt!r}')
