"""JSON and CSV emission.

Polynomials serialize as arrays of decimal coefficient strings in
ascending degree; Gaussian integers as two-element ["re", "im"] arrays.
JSON payloads carry a top-level schema tag.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Sequence

from .classgroup import FeasibilityReport
from .curves import FamilyInstance
from .gaussian import GaussInt
from .polynomials import GaussPoly, IntPoly
from .primes import PrimeProfile

SCHEMA = "twotorsion/1"


def poly_to_json(p: IntPoly) -> list[str]:
    return [str(c) for c in p.coeffs]


def poly_from_json(data: Sequence[str]) -> IntPoly:
    return IntPoly([int(c) for c in data])


def gauss_to_json(z: GaussInt) -> list[str]:
    return [str(z.re), str(z.im)]


def gauss_from_json(data: Sequence[str]) -> GaussInt:
    return GaussInt(int(data[0]), int(data[1]))


def gausspoly_to_json(p: GaussPoly) -> list[list[str]]:
    return [gauss_to_json(c) for c in p.coeffs]


def gausspoly_from_json(data: Sequence[Sequence[str]]) -> GaussPoly:
    return GaussPoly([gauss_from_json(c) for c in data])


def profile_to_dict(pr: PrimeProfile) -> dict:
    return {
        "p": pr.p,
        "a": pr.a16,
        "b": pr.b16,
        "a64": pr.a64,
        "c64": pr.c64,
        "label": pr.label.value,
        "p1star": pr.in_p1_star,
    }


PROFILE_COLUMNS = ("p", "a", "b", "label", "p1star")


def profile_row(pr: PrimeProfile) -> list:
    return [pr.p, pr.a16, pr.b16, pr.label.value, pr.in_p1_star]


def feasibility_to_dict(r: FeasibilityReport) -> dict:
    return {
        "p": r.p,
        "g": r.g,
        "h2": r.h2,
        "bound_ok": r.bound_ok,
        "p1star_required": r.p1star_required,
        "p1star_ok": r.p1star_ok,
        "feasible": r.feasible,
    }


INSTANCE_COLUMNS = ("family", "params", "m", "n", "conductor", "prime_pair", "delta_C")


def instance_to_dict(inst: FamilyInstance) -> dict:
    return {
        "family": inst.family,
        "params": list(inst.params),
        "m": inst.m,
        "n": inst.n,
        "conductor": inst.conductor,
        "gcd_ok": inst.gcd_ok,
        "prime_pair": inst.prime_pair,
        "delta_C": inst.model.delta_C,
        "delta_F": inst.model.delta_F,
        "Q": poly_to_json(inst.model.Q),
        "P": poly_to_json(inst.model.P),
        "F": poly_to_json(inst.model.F),
        "f": poly_to_json(inst.model.f),
        "h": gausspoly_to_json(inst.model.h),
    }


def instance_row(inst: FamilyInstance) -> list:
    return [
        inst.family,
        " ".join(str(v) for v in inst.params),
        inst.m,
        inst.n,
        inst.conductor,
        inst.prime_pair,
        inst.model.delta_C,
    ]


def emit_json(command: str, rows: list[Any], **extra) -> str:
    payload = {"schema": SCHEMA, "command": command, "rows": rows}
    payload.update(extra)
    return json.dumps(payload, indent=2, sort_keys=False)


def emit_csv(columns: Sequence[str], rows: list[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def emit_pretty(columns: Sequence[str], rows: list[Sequence]) -> str:
    table = [[str(c) for c in columns]] + [[str(v) for v in row] for row in rows]
    widths = [max(len(r[k]) for r in table) for k in range(len(columns))]
    lines = []
    for idx, row in enumerate(table):
        lines.append("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip())
        if idx == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)


def emit(mode: str, command: str, columns: Sequence[str], rows: list[Sequence],
         dict_rows: list[dict] | None = None, **extra) -> str:
    if mode == "json":
        return emit_json(command, dict_rows if dict_rows is not None else
                         [dict(zip(columns, row)) for row in rows], **extra)
    if mode == "csv":
        return emit_csv(columns, rows)
    if mode == "pretty":
        return emit_pretty(columns, rows)
    raise ValueError(f"unknown emit mode {mode!r}")
