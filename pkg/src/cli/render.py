"""Text, JSON and LaTeX rendering of tables, series and reports."""

import json
from fractions import Fraction
from typing import List, Optional, Sequence, Union

import pandas as pd

from ..arith.finite_field import FieldParams, format_fp_poly, make_field
from ..arith.polynomial import parse_poly
from ..arith.ratfunc import RatFunc
from ..arith.rational import rational_parts, rational_to_latex
from ..carlitz.numbers import CARLITZ_TABLE_KINDS, CarlitzNumberTable
from ..classical.cauchy import ClassicalTable
from ..series.power_series import Series
from ..verification.report import IdentityReport

Value = Union[RatFunc, Fraction, int]
Table = Union[CarlitzNumberTable, ClassicalTable]

TRIANGULAR_KINDS = ("stf_C", "sts_C", "stirling1", "stirling2")


def value_text(value: Value) -> str:
    if isinstance(value, RatFunc):
        return str(value)
    return str(Fraction(value))


def value_parts(value: Value):
    """(num, den) strings: canonical polynomials, or decimal integers for rationals."""
    if isinstance(value, RatFunc):
        return str(value.num), str(value.den)
    return rational_parts(value)


def value_latex(value: Value) -> str:
    if isinstance(value, RatFunc):
        return value.to_latex()
    return rational_to_latex(value)


def _table_frame(table: Table, fmt: str) -> pd.DataFrame:
    render = value_latex if fmt == "latex" else value_text
    records = []
    for n, k, value in table.rows():
        record = {'n': n}
        if table.kind in TRIANGULAR_KINDS:
            record['k'] = k
        record['value'] = render(value)
        records.append(record)
    return pd.DataFrame(records)


def table_payload(table: Table, field: Optional[FieldParams]) -> dict:
    """JSON document of a table; field entries are null for classical kinds."""
    values = []
    for n, k, value in table.rows():
        num, den = value_parts(value)
        values.append({'n': n, 'k': k if table.kind in TRIANGULAR_KINDS else None, 'num': num, 'den': den})
    return {
        'p': field.p if field else None,
        'e': field.e if field else None,
        'r': field.r if field else None,
        'modulus': _modulus_text(field),
        'kind': table.kind,
        'order': table.order,
        'values': values,
    }


def _modulus_text(field: Optional[FieldParams]) -> Optional[str]:
    if field is None or field.modulus is None:
        return None
    return format_fp_poly(field.modulus, "x")


def render_table(table: Table, fmt: str, field: Optional[FieldParams] = None) -> str:
    if fmt == "json":
        return json.dumps(table_payload(table, field), indent=2)
    frame = _table_frame(table, fmt)
    if fmt == "latex":
        columns = list(frame.columns)
        lines = ["\\begin{tabular}{" + "r" * (len(columns) - 1) + "l}", " & ".join(columns) + " \\\\", "\\hline"]
        for row in frame.itertuples(index=False):
            cells = [str(c) for c in row[:-1]] + [f"${row[-1]}$"]
            lines.append(" & ".join(cells) + " \\\\")
        lines.append("\\end{tabular}")
        return "\n".join(lines)
    return frame.to_string(index=False)


def table_from_json(text: str) -> Table:
    """Rebuild a table from its JSON dump."""
    data = json.loads(text)
    kind = data['kind']
    if kind in CARLITZ_TABLE_KINDS:
        field = make_field(data['p'], data['e'], data.get('modulus'))
        table = CarlitzNumberTable(kind=kind, r=field.r, order=data.get('order', 1))
        parse = lambda num, den: RatFunc(parse_poly(field, num), parse_poly(field, den))
    else:
        table = ClassicalTable(kind=kind, order=data.get('order', 1))
        parse = lambda num, den: Fraction(int(num), int(den))
    for entry in data['values']:
        index = (entry['n'], entry['k']) if entry.get('k') is not None else entry['n']
        table.values[index] = parse(entry['num'], entry['den'])
    return table


def field_from_json(text: str) -> Optional[FieldParams]:
    data = json.loads(text)
    if data.get('p') is None:
        return None
    return make_field(data['p'], data['e'], data.get('modulus'))


def render_series(series: Series, fmt: str, name: str = "", field: Optional[FieldParams] = None) -> str:
    """One line per nonzero term, exponent ascending."""
    terms = list(series.terms())
    if fmt == "json":
        payload = {
            'name': name,
            'p': field.p if field else None,
            'e': field.e if field else None,
            'r': field.r if field else None,
            'prec': series.prec,
            'terms': [
                {'exponent': n, 'num': value_parts(c)[0], 'den': value_parts(c)[1]} for n, c in terms
            ],
        }
        return json.dumps(payload, indent=2)
    if fmt == "latex":
        return "\n".join(f"z^{{{n}}}: {value_latex(c)}" for n, c in terms)
    return "\n".join(f"z^{n}: {value_text(c)}" for n, c in terms)


def render_reports(reports: Sequence[IdentityReport], fmt: str) -> str:
    if fmt == "json":
        return "\n".join(json.dumps(report.to_dict()) for report in reports)
    frame = pd.DataFrame(
        [
            {
                'identity': report.identity_id,
                'r': report.params.get('r', '-'),
                'f': report.params.get('f', ''),
                'status': report.status,
                'cases': report.cases_checked,
                'seconds': f"{report.elapsed:.2f}",
            }
            for report in reports
        ]
    )
    lines: List[str] = [frame.to_string(index=False)] if len(frame) else []
    for report in reports:
        for failure in report.failures:
            lines.append(
                f"FAIL {report.identity_id} {list(failure.indices)}: expected {failure.expected}, got {failure.actual}"
            )
    return "\n".join(lines)
