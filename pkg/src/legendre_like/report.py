"""Verification reports and their JSON/CSV encodings."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Mapping, Sequence

import mpmath

from .precision import context, is_mpf

__all__ = [
    "VerificationReport",
    "exact_report",
    "tolerance_report",
    "encode_value",
    "decode_value",
    "reports_to_json",
    "reports_from_json",
    "reports_to_csv",
    "sort_reports",
]


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking one identity at one parameter tuple.

    ``details`` holds one mapping per checked index, normally
    ``{"index": k, "routes": {route_name: value, ...}}``.
    """

    identity: str
    parameters: Mapping[str, Any]
    passed: bool
    max_abs_deviation: Any = Fraction(0)
    tolerance: Any = Fraction(0)
    details: Sequence[Mapping[str, Any]] = field(default_factory=tuple)
    note: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def failing_indices(self) -> list:
        return [d.get("index") for d in self.details if d.get("ok") is False]

    def to_dict(self) -> dict:
        out = {
            "identity": self.identity,
            "params": {k: encode_value(v) for k, v in self.parameters.items()},
            "status": self.status,
            "deviation": encode_value(self.max_abs_deviation),
            "tolerance": encode_value(self.tolerance),
            "details": [_encode_tree(d) for d in self.details],
        }
        if self.note:
            out["note"] = self.note
        return out

    def sort_key(self) -> tuple:
        return (self.identity, tuple((k, _sortable(v)) for k, v in sorted(self.parameters.items())))


def _sortable(v):
    if isinstance(v, (list, tuple)):
        return tuple(_sortable(x) for x in v)
    if isinstance(v, (int, Fraction, float)):
        return (0, v, "")
    if is_mpf(v):
        return (0, float(v), "")
    return (1, 0, str(v))


def _row_deviation(values: Sequence) -> Any:
    """Largest pairwise gap between the route values of one row."""
    if len(values) < 2:
        return Fraction(0)
    ref = values[0]
    return max(abs(v - ref) for v in values[1:])


def exact_report(
    identity: str,
    parameters: Mapping[str, Any],
    rows: Iterable[tuple[Any, Mapping[str, Any]]],
    note: str = "",
) -> VerificationReport:
    """Zero-tolerance report; every row's route values must coincide exactly."""
    details = []
    worst = Fraction(0)
    for index, routes in rows:
        dev = _row_deviation(list(routes.values()))
        worst = max(worst, dev)
        details.append({"index": index, "routes": dict(routes), "ok": dev == 0})
    return VerificationReport(identity, dict(parameters), worst == 0, worst, Fraction(0), tuple(details), note)


def tolerance_report(
    identity: str,
    parameters: Mapping[str, Any],
    rows: Iterable[tuple[Any, Mapping[str, Any]]],
    abs_tol: float = 0.0,
    rel_tol: float = 0.0,
    note: str = "",
) -> VerificationReport:
    """Rows pass when ``|route - first route| <= abs_tol + rel_tol*|first|``.

    The first route in each row is the reference (usually the exact one).
    The reported tolerance is the loosest per-row bound that was applied.
    """
    details = []
    worst = 0.0
    loosest = 0.0
    ok_all = True
    for index, routes in rows:
        values = list(routes.values())
        ref = values[0]
        dev = _row_deviation(values)
        bound = abs_tol + rel_tol * abs(ref)
        ok = dev <= bound
        ok_all &= bool(ok)
        worst = max(worst, dev)
        loosest = max(loosest, bound)
        details.append({"index": index, "routes": dict(routes), "ok": bool(ok), "deviation": dev})
    return VerificationReport(identity, dict(parameters), ok_all, worst, loosest, tuple(details), note)


def encode_value(v: Any) -> Any:
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, int):
        return {"num": str(v), "den": "1"}
    if isinstance(v, Fraction):
        return {"num": str(v.numerator), "den": str(v.denominator)}
    if is_mpf(v):
        return {"value": mpmath.nstr(v, v.context.dps, strip_zeros=False), "precision": v.context.dps}
    if isinstance(v, float):
        return {"value": repr(v), "precision": 17}
    if isinstance(v, (list, tuple)):
        return [encode_value(x) for x in v]
    if isinstance(v, Mapping):
        return {str(k): encode_value(x) for k, x in v.items()}
    return str(v)


def decode_value(v: Any) -> Any:
    """Inverse of :func:`encode_value`; rationals come back as identical Fractions."""
    if isinstance(v, Mapping):
        if set(v) == {"num", "den"}:
            return Fraction(int(v["num"]), int(v["den"]))
        if set(v) == {"value", "precision"}:
            prec = int(v["precision"])
            if prec <= 17:
                return float(v["value"])
            return _mp_at(v["value"], prec)
        return {k: decode_value(x) for k, x in v.items()}
    if isinstance(v, list):
        return [decode_value(x) for x in v]
    return v


def _mp_at(text: str, dps: int):
    return context(dps).mpf(text)


def _encode_tree(d: Mapping[str, Any]) -> dict:
    return {str(k): encode_value(v) for k, v in d.items()}


def sort_reports(reports: Iterable[VerificationReport]) -> list[VerificationReport]:
    return sorted(reports, key=VerificationReport.sort_key)


def reports_to_json(reports: Sequence[VerificationReport], indent: int | None = 2) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=indent)


def reports_from_json(text: str) -> list[dict]:
    """Parse JSON emitted by :func:`reports_to_json`, decoding exact values."""
    return [decode_value(item) for item in json.loads(text)]


def _param_string(params: Mapping[str, Any]) -> str:
    parts = []
    for k, v in params.items():
        if isinstance(v, (list, tuple)):
            v = "[" + ",".join(str(x) for x in v) + "]"
        parts.append(f"{k}={v}")
    return ";".join(parts)


def reports_to_csv(reports: Sequence[VerificationReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["name", "params", "status", "deviation"])
    for r in reports:
        dev = r.max_abs_deviation
        if is_mpf(dev):
            dev = mpmath.nstr(dev, 17)
        writer.writerow([r.identity, _param_string(r.parameters), r.status, str(dev)])
    return buf.getvalue()
