"""Serialization of verification reports and the Table 3 audit.

JSON is the canonical form; CSV and Markdown are built from the same
dictionaries.
"""

import csv
import io
import json
from dataclasses import fields
from fractions import Fraction

from .verifier import TABLE3, TABLE3_ORDERS, VerificationReport

__all__ = [
    "REPORT_FIELDS",
    "report_to_dict",
    "reports_to_csv",
    "reports_to_json",
    "reports_to_markdown",
    "table3_to_csv",
    "table3_to_dict",
    "table3_to_json",
    "table3_to_markdown",
]

REPORT_FIELDS = tuple(f.name for f in fields(VerificationReport))


def _plain(value):
    if isinstance(value, Fraction):
        return str(value)
    if hasattr(value, "value") and not isinstance(value, (int, float)):
        return value.value
    return value


def report_to_dict(report):
    return {name: _plain(getattr(report, name)) for name in REPORT_FIELDS}


def reports_to_json(reports, indent=2):
    return json.dumps([report_to_dict(r) for r in reports], indent=indent)


def _csv(rows, header):
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: "" if row[k] is None else row[k] for k in header})
    return buf.getvalue()


def reports_to_csv(reports):
    return _csv([report_to_dict(r) for r in reports], REPORT_FIELDS)


def _cell(value):
    if value is None:
        return "-"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def reports_to_markdown(reports):
    lines = [
        "| " + " | ".join(REPORT_FIELDS) + " |",
        "|" + "---|" * len(REPORT_FIELDS),
    ]
    for r in reports:
        d = report_to_dict(r)
        lines.append("| " + " | ".join(_cell(d[k]) for k in REPORT_FIELDS) + " |")
    return "\n".join(lines) + "\n"


def _families():
    return sorted({f for f, _ in TABLE3})


def table3_to_dict(grid, discrepancies):
    return {
        "printed": [
            {"family": f"B{f}", "n": n, "value": TABLE3[(f, n)]}
            for f in _families() for n in TABLE3_ORDERS
        ],
        "computed": [
            {"family": f"B{f}", "n": n, "value": grid[(f, n)]}
            for f in _families() for n in TABLE3_ORDERS
        ],
        "discrepancies": [
            {
                "family": d.family,
                "n": d.n,
                "printed": d.printed,
                "computed": d.computed,
                "swap_partner": d.swap_partner,
                "candidates": list(d.candidates),
                "note": d.note,
            }
            for d in discrepancies
        ],
    }


def table3_to_json(grid, discrepancies, indent=2):
    return json.dumps(table3_to_dict(grid, discrepancies), indent=indent)


def table3_to_csv(grid, discrepancies):
    flagged = {(d.family, d.n): d for d in discrepancies}
    header = ("family", "n", "printed", "computed", "match", "swap_partner")
    rows = []
    for f in _families():
        for n in TABLE3_ORDERS:
            d = flagged.get((f"B{f}", n))
            rows.append({
                "family": f"B{f}",
                "n": n,
                "printed": TABLE3[(f, n)],
                "computed": grid[(f, n)],
                "match": d is None,
                "swap_partner": d.swap_partner if d else None,
            })
    return _csv(rows, header)


def table3_to_markdown(grid, discrepancies):
    """Table 3 in its printed layout; flagged cells show the oracle value."""
    flagged = {(int(d.family[1:]), d.n): d for d in discrepancies}
    fams = _families()
    lines = [
        "| n | " + " | ".join(f"B{f}" for f in fams) + " |",
        "|---|" + "---|" * len(fams),
    ]
    for n in TABLE3_ORDERS:
        cells = []
        for f in fams:
            d = flagged.get((f, n))
            if d is None:
                cells.append(str(TABLE3[(f, n)]))
            else:
                cells.append(f"{d.printed} [oracle {d.computed}]")
        lines.append(f"| {n} | " + " | ".join(cells) + " |")
    lines.append("")
    lines.append(f"{len(discrepancies)} of {len(TABLE3)} printed entries disagree with the oracle.")
    for d in discrepancies:
        lines.append(f"- {d.family}, n={d.n}: printed {d.printed}, oracle {d.computed}; {d.note}")
    return "\n".join(lines) + "\n"
