"""
JSON-lines and CSV encodings of reports, family rows and scan results.

Integers are written as decimal strings so nothing is lost to float
conversion downstream.
"""

from __future__ import annotations

import csv
import io
import json

from .families import FamilyMember
from .jks import JksPrimeAnalysis, MonogenicityReport
from .polycore import Trinomial
from .scan import TAGS, ScanResult

SCHEMA_VERSION = "1"

FAMILY_COLUMNS = ("k", "delta", "A", "B", "discriminant", "delta_squarefree", "in_family_set")
SEARCH_COLUMNS = ("A", "B", "discriminant", "verdict", "cyclic", "family", "k", "tags")


def _jsonable(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def dumps(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"), ensure_ascii=True)


def record(command: str, input: dict, result: dict) -> str:
    return dumps(
        {
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "input": _jsonable(input),
            "result": result,
        }
    )


def trinomial_payload(t: Trinomial) -> dict:
    return {"N": str(t.N), "M": str(t.M), "A": str(t.A), "B": str(t.B), "text": str(t)}


def analysis_payload(a: JksPrimeAnalysis) -> dict:
    out = {"q": str(a.q), "case": a.case.value}
    if a.index_free is not None:
        out["index_free"] = a.index_free
    if a.witnesses:
        out["witnesses"] = _jsonable(a.witnesses)
    return out


def report_payload(r: MonogenicityReport) -> dict:
    out = {
        "trinomial": trinomial_payload(r.trinomial),
        "irreducible": r.irreducible.value,
        "discriminant": str(r.discriminant),
    }
    if r.discriminant_square_root is not None:
        out["discriminant_square_root"] = str(r.discriminant_square_root)
    if r.cyclic_cubic is not None:
        out["cyclic_cubic"] = r.cyclic_cubic
    out["prime_analyses"] = [analysis_payload(a) for a in r.prime_analyses]
    out["verdict"] = r.verdict.value
    if r.reason:
        out["reason"] = r.reason
    return out


def member_payload(m: FamilyMember) -> dict:
    return {
        "family": m.family.value,
        "k": str(m.k),
        "delta": str(m.delta),
        "trinomial": trinomial_payload(m.trinomial),
        "discriminant": str(m.discriminant),
        "delta_squarefree": m.delta_squarefree,
        "in_family_set": m.in_family_set,
    }


def scan_payload(s: ScanResult) -> dict:
    out = {"trinomial": trinomial_payload(s.trinomial), "report": report_payload(s.report)}
    if s.family is not None:
        out["family"] = {"family": s.family[0].value, "k": str(s.family[1])}
    out["tags"] = [t for t in TAGS if t in s.tags]
    return out


def member_row(m: FamilyMember) -> list:
    t = m.trinomial
    return [m.k, m.delta, t.A, t.B, m.discriminant, m.delta_squarefree, m.in_family_set]


def scan_row(s: ScanResult) -> list:
    r = s.report
    fam, k = (s.family[0].value, s.family[1]) if s.family else ("", "")
    return [
        s.trinomial.A,
        s.trinomial.B,
        r.discriminant,
        r.verdict.value,
        "" if r.cyclic_cubic is None else r.cyclic_cubic,
        fam,
        k,
        " ".join(t for t in TAGS if t in s.tags),
    ]


def csv_lines(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(["true" if v is True else "false" if v is False else v for v in row])
    return buf.getvalue()
