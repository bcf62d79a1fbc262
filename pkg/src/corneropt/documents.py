"""Instance documents: JSON text with exact rationals.

Rationals travel as strings like ``"3/4"`` (or plain integers); decimal
literals are rejected outright since they cannot round-trip exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from .errors import DocumentError
from .inverse import NormSpec
from .lp import IpInstance


def parse_rational(value: Any, where: str) -> Fraction:
    if isinstance(value, bool):
        raise DocumentError(f"{where}: expected a rational, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise DocumentError(
            f"{where}: decimal literals are not exact; write rationals as strings like \"3/4\""
        )
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError(f"{where}: malformed rational {value!r} ({exc})") from None
    raise DocumentError(f"{where}: expected a rational, got {type(value).__name__}")


def format_rational(value: Fraction) -> int | str:
    """Canonical document form: plain int when integral, \"p/q\" otherwise."""
    if value.denominator == 1:
        return int(value)
    return str(value)


def _parse_int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{where}: expected an integer, got {value!r}")
    return value


def _parse_int_list(value: Any, where: str) -> list[int]:
    if not isinstance(value, list):
        raise DocumentError(f"{where}: expected a list")
    return [_parse_int(v, f"{where}[{i}]") for i, v in enumerate(value)]


def _parse_rational_list(value: Any, where: str) -> tuple[Fraction, ...]:
    if not isinstance(value, list):
        raise DocumentError(f"{where}: expected a list")
    return tuple(parse_rational(v, f"{where}[{i}]") for i, v in enumerate(value))


@dataclass(frozen=True)
class InstanceDocument:
    """A parsed instance plus its optional named attachments."""

    instance: IpInstance
    x0: Optional[tuple[Fraction, ...]] = None
    norm: Optional[NormSpec] = None
    bases: Optional[tuple[tuple[int, ...], ...]] = None
    box: Optional[tuple[int, ...]] = None
    target: Optional[tuple[Fraction, ...]] = None


def parse_norm(data: Any, where: str = "norm") -> NormSpec:
    if not isinstance(data, dict):
        raise DocumentError(f"{where}: expected an object")
    kind = data.get("kind", "l1")
    if kind not in ("l1", "linf"):
        raise DocumentError(f"{where}.kind: expected \"l1\" or \"linf\", got {kind!r}")
    omega = None
    if data.get("omega") is not None:
        omega = _parse_rational_list(data["omega"], f"{where}.omega")
    return NormSpec(kind=kind, omega=omega)


def parse_instance_dict(data: Any) -> InstanceDocument:
    if not isinstance(data, dict):
        raise DocumentError("document root must be an object")
    for key in ("A", "b", "c"):
        if key not in data:
            raise DocumentError(f"missing required field {key!r}")
    a_raw = data["A"]
    if not isinstance(a_raw, list) or not a_raw:
        raise DocumentError("A: expected a non-empty list of rows")
    a_rows = [_parse_int_list(row, f"A[{i}]") for i, row in enumerate(a_raw)]
    widths = {len(row) for row in a_rows}
    if len(widths) != 1:
        raise DocumentError("A: rows have inconsistent lengths")
    b = _parse_int_list(data["b"], "b")
    c = _parse_rational_list(data["c"], "c")
    try:
        instance = IpInstance.create(a_rows, b, c)
    except DocumentError:
        raise
    except Exception as exc:  # dimension and rank problems carry their own message
        raise type(exc)(f"instance invalid: {exc}") from None

    x0 = None
    if data.get("x0") is not None:
        x0 = _parse_rational_list(data["x0"], "x0")
    norm = parse_norm(data["norm"]) if data.get("norm") is not None else None
    bases = None
    if data.get("bases") is not None:
        if not isinstance(data["bases"], list):
            raise DocumentError("bases: expected a list of index lists")
        bases = tuple(
            tuple(_parse_int_list(entry, f"bases[{i}]")) for i, entry in enumerate(data["bases"])
        )
    box = None
    if data.get("box") is not None:
        box = tuple(_parse_int_list(data["box"], "box"))
    target = None
    if data.get("target") is not None:
        target = _parse_rational_list(data["target"], "target")
    return InstanceDocument(instance, x0, norm, bases, box, target)


def parse_instance(text: str) -> InstanceDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    return parse_instance_dict(data)


def document_to_dict(doc: InstanceDocument) -> dict[str, Any]:
    out: dict[str, Any] = {
        "A": doc.instance.a.to_rows(),
        "b": list(doc.instance.b),
        "c": [format_rational(v) for v in doc.instance.c],
    }
    if doc.x0 is not None:
        out["x0"] = [format_rational(v) for v in doc.x0]
    if doc.norm is not None:
        norm: dict[str, Any] = {"kind": doc.norm.kind}
        if doc.norm.omega is not None:
            norm["omega"] = [format_rational(v) for v in doc.norm.omega]
        out["norm"] = norm
    if doc.bases is not None:
        out["bases"] = [list(basis) for basis in doc.bases]
    if doc.box is not None:
        out["box"] = list(doc.box)
    if doc.target is not None:
        out["target"] = [format_rational(v) for v in doc.target]
    return out


def serialize_instance(doc: InstanceDocument) -> str:
    return json.dumps(document_to_dict(doc), indent=2) + "\n"
