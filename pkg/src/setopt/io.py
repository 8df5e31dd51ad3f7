"""JSON problem, candidate and report files.

Rationals are written as JSON integers when integral and as ``"p/q"``
strings otherwise; both forms are accepted on input.
"""

from __future__ import annotations

import json
import re
from typing import Any, Optional

from .core import ScalarCertificate, SetOptReport, SolutionVerdict
from .errors import InputError
from .lp import LinearProgram, LPOutcome
from .polyhedra import ConeSpec, VRep
from .rational import Vector, format_rational, parse_rational
from .relaxation import PreSolution, UpperImage
from .setcalc import ProblemInstance


class FormatError(InputError):
    """A problem or candidate file that cannot be used; carries a line number."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def _key_line(text: str, key: str) -> Optional[int]:
    m = re.search(r'"%s"\s*:' % re.escape(key), text)
    return text.count("\n", 0, m.start()) + 1 if m else None


def _decode(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg} (column {exc.colno})", exc.lineno) from None


def _vector(raw, what: str, size: Optional[int] = None) -> Vector:
    if not isinstance(raw, list):
        raise InputError(f"{what} must be an array")
    if size is not None and len(raw) != size:
        raise InputError(f"{what} has {len(raw)} entries, expected {size}")
    try:
        return tuple(parse_rational(a) for a in raw)
    except InputError as exc:
        raise InputError(f"{what}: {exc}") from None


def _matrix(raw, what: str, rows: int, cols: int):
    if not isinstance(raw, list):
        raise InputError(f"{what} must be an array of rows")
    if len(raw) != rows:
        raise InputError(f"{what} has {len(raw)} rows, expected {rows}")
    return tuple(_vector(r, f"{what} row {i + 1}", cols) for i, r in enumerate(raw))


def problem_from_dict(data: Any, text: str = "") -> ProblemInstance:
    if not isinstance(data, dict):
        raise FormatError("top level must be a JSON object", 1)

    def fail(key, exc):
        raise FormatError(str(exc), _key_line(text, key)) from None

    dims = {}
    for key in ("n", "q", "m", "p"):
        val = data.get(key)
        if not isinstance(val, int) or isinstance(val, bool) or val < 0:
            raise FormatError(f"'{key}' must be a nonnegative integer", _key_line(text, key) or 1)
        dims[key] = val
    n, q, m, p = dims["n"], dims["q"], dims["m"], dims["p"]
    arrays = {}
    for key, shape in (("A", (m, n)), ("B", (m, q)), ("Z", (q, p))):
        if key not in data:
            raise FormatError(f"missing '{key}'", 1)
        try:
            arrays[key] = _matrix(data[key], key, *shape)
        except InputError as exc:
            fail(key, exc)
    if "b" not in data:
        raise FormatError("missing 'b'", 1)
    try:
        b = _vector(data["b"], "b", m)
    except InputError as exc:
        fail("b", exc)
    options = data.get("options") or {}
    if not isinstance(options, dict):
        raise FormatError("'options' must be an object", _key_line(text, "options"))
    gc = options.get("gc_values", False)
    if not isinstance(gc, bool):
        raise FormatError("'options.gc_values' must be a boolean", _key_line(text, "gc_values"))
    try:
        cone = ConeSpec(arrays["Z"])
    except InputError as exc:
        fail("Z", exc)
    return ProblemInstance(arrays["A"], arrays["B"], b, cone, n=n, q=q, gc_values=gc)


def load_problem(path: str) -> ProblemInstance:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return problem_from_dict(_decode(text), text)


def _fmt_vec(v) -> list:
    return [format_rational(a) for a in v]


def _fmt_mat(m) -> list:
    return [_fmt_vec(r) for r in m]


def problem_to_dict(inst: ProblemInstance) -> dict:
    return {
        "n": inst.n,
        "q": inst.q,
        "m": inst.m,
        "p": inst.p,
        "A": _fmt_mat(inst.A),
        "B": _fmt_mat(inst.B),
        "b": _fmt_vec(inst.b),
        "Z": _fmt_mat(inst.Z),
        "options": {"gc_values": inst.gc_values},
    }


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def candidate_from_json(text: str, n: int) -> list[Vector]:
    """Candidate points: an array of x-vectors, of ``{"x": ...}`` objects, or a full report."""
    data = _decode(text)
    if isinstance(data, dict) and "solution" in data:
        data = data["solution"]
    if not isinstance(data, list):
        raise FormatError("candidate file must hold an array of points", 1)
    out = []
    for i, item in enumerate(data):
        if isinstance(item, dict):
            item = item.get("x")
        out.append(_vector(item, f"candidate point {i + 1}", n))
    return out


def certificate_to_dict(c: ScalarCertificate) -> dict:
    d = {"w": _fmt_vec(c.w), "gamma": format_rational(c.gamma),
         "alpha": format_rational(c.alpha), "beta": format_rational(c.beta)}
    if c.improving_x is not None:
        d["improving_x"] = _fmt_vec(c.improving_x)
    return d


def vrep_to_dict(v: VRep) -> dict:
    return {"vertices": _fmt_mat(v.points), "directions": _fmt_mat(v.directions)}


def presolution_to_list(pre: PreSolution) -> list:
    return [{"x": _fmt_vec(x), "y": _fmt_vec(y)} for x, y in pre.entries]


def report_to_dict(report: SetOptReport) -> dict:
    out = {
        "status": report.status.value,
        "solution": [
            {"x": _fmt_vec(x), "certificates": [certificate_to_dict(c) for c in certs]}
            for x, certs in zip(report.solution, report.certificates)
        ],
        "infimum": vrep_to_dict(report.infimum) if report.infimum is not None else None,
        "presolution": presolution_to_list(report.presolution) if report.presolution else [],
        "stats": report.stats(),
        "certificate": None,
    }
    if report.unbounded_direction is not None:
        out["certificate"] = {"direction": _fmt_vec(report.unbounded_direction)}
    if report.verified is not None:
        out["verified"] = report.verified
    return out


def relaxation_to_dict(status: str, ui: Optional[UpperImage] = None,
                       pre: Optional[PreSolution] = None, direction=None) -> dict:
    out = {"status": status, "presolution": presolution_to_list(pre) if pre else []}
    if ui is not None:
        out["upper_image"] = vrep_to_dict(ui.v)
        out["upper_image"]["facets"] = [
            {"normal": _fmt_vec(w), "offset": format_rational(g)} for w, g in ui.h.rows()]
    out["certificate"] = {"direction": _fmt_vec(direction)} if direction is not None else None
    return out


def verdict_to_dict(verdict: SolutionVerdict) -> dict:
    return {
        "is_solution": verdict.is_solution,
        "is_infimizer": verdict.is_infimizer,
        "non_minimizers": [
            {"x": _fmt_vec(x), "certificates": [certificate_to_dict(c) for c in certs]}
            for x, certs in verdict.non_minimizers
        ],
        "outside_domain": _fmt_mat(verdict.outside_domain),
    }


def lp_log_line(lp: LinearProgram, out: LPOutcome) -> str:
    rec = {"vars": lp.var_count, "constraints": lp.row_count, "status": out.status.value,
           "value": format_rational(out.value) if out.value is not None else None}
    return json.dumps(rec)
