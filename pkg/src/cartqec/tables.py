"""Rows of CSS / Steane comparison tables and their text, CSV and JSON forms."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .errors import BoundUndefined, KTooSmall
from .footprint import ProductSpec, enlarge_guarantee, tau_lower_bound
from .quantum import GvClass, QuantumParams, css_params, gv_classify, steane_params

CSV_FIELDS = [
    "delta",
    "n",
    "css_k",
    "steane_k",
    "d",
    "css_gv",
    "steane_gv",
    "prop4",
    "cor1",
    "cor1_exact",
    "actual",
]


@dataclass(frozen=True)
class TableRow:
    """One table line.

    ``d`` is the distance guaranteed for both codes of the row (the Steane
    bound, which never exceeds the CSS distance).  ``prop4`` and ``cor1`` are
    None when the corresponding closed-form bound does not apply.
    """

    delta: int
    css: QuantumParams
    css_gv: GvClass | None
    steane: QuantumParams
    steane_gv: GvClass | None
    prop4_increase: int | None
    cor1_bound: int | None
    cor1_exact: bool | None
    actual_increase: int

    @property
    def d(self) -> int:
        return self.steane.d

    def record(self) -> dict:
        return {
            "delta": self.delta,
            "n": self.css.n,
            "css_k": self.css.k,
            "steane_k": self.steane.k,
            "d": self.d,
            "css_gv": self.css_gv.verdict.value if self.css_gv else None,
            "steane_gv": self.steane_gv.verdict.value if self.steane_gv else None,
            "prop4": self.prop4_increase,
            "cor1": self.cor1_bound,
            "cor1_exact": self.cor1_exact,
            "actual": self.actual_increase,
        }


def _classify(params: QuantumParams) -> GvClass | None:
    try:
        return gv_classify(params)
    except KTooSmall:
        return None


def table_row(spec: ProductSpec, delta: int) -> TableRow:
    """Build a row; raises a HypothesisError subclass when ``delta`` is inadmissible."""
    css = css_params(spec, delta)
    st = steane_params(spec, delta)
    try:
        bound = tau_lower_bound(spec, delta - 1)
        cor1, exact = bound.bound, bound.exact
    except BoundUndefined:
        cor1, exact = None, None
    return TableRow(
        delta=delta,
        css=css,
        css_gv=_classify(css),
        steane=st.params,
        steane_gv=_classify(st.params),
        prop4_increase=enlarge_guarantee(spec, delta),
        cor1_bound=cor1,
        cor1_exact=exact,
        actual_increase=st.increase,
    )


def _cell(params: QuantumParams, gv: GvClass | None) -> str:
    base = f"[[{params.n},{params.k},{params.d}]]"
    return f"{base} {gv.marker}".rstrip() if gv else base


def _num(x) -> str:
    return "-" if x is None else str(x)


def render_text(rows: list[TableRow | str]) -> str:
    """Aligned table; plain strings in ``rows`` are emitted as ``#`` comments."""
    header = ["delta", "CSS", "Steane", "prop4", "cor1", "actual"]
    body = []
    for row in rows:
        if isinstance(row, str):
            body.append(row)
            continue
        cor1 = _num(row.cor1_bound) + ("*" if row.cor1_exact else "")
        body.append(
            [
                str(row.delta),
                _cell(row.css, row.css_gv),
                _cell(row.steane, row.steane_gv),
                _num(row.prop4_increase),
                cor1,
                str(row.actual_increase),
            ]
        )
    cells = [header] + [b for b in body if not isinstance(b, str)]
    widths = [max(len(c[i]) for c in cells) for i in range(len(header))]

    def fmt(c):
        left = [c[0].rjust(widths[0]), c[1].ljust(widths[1]), c[2].ljust(widths[2])]
        right = [c[i].rjust(widths[i]) for i in range(3, len(c))]
        return "  ".join(left + right).rstrip()

    lines = [fmt(header)]
    lines += [f"# {b}" if isinstance(b, str) else fmt(b) for b in body]
    return "\n".join(lines) + "\n"


def _csv_value(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render_csv(rows: list[TableRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for row in rows:
        rec = row.record()
        w.writerow([_csv_value(rec[k]) for k in CSV_FIELDS])
    return buf.getvalue()


def render_json(rows: list[TableRow]) -> str:
    return "".join(json.dumps(row.record()) + "\n" for row in rows)


def parse_csv(text: str) -> list[dict]:
    """Inverse of :func:`render_csv` at the record level."""
    out = []
    for raw in csv.DictReader(io.StringIO(text)):
        rec = {}
        for k in CSV_FIELDS:
            v = raw[k]
            if v == "":
                rec[k] = None
            elif k in ("css_gv", "steane_gv"):
                rec[k] = v
            elif k == "cor1_exact":
                rec[k] = v == "true"
            else:
                rec[k] = int(v)
        out.append(rec)
    return out
