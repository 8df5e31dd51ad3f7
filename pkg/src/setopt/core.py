"""Phase 2 and the complete two-phase driver.

For a point x of the pre-solution, every facet ``w.y <= gamma`` of
F(x) + C gives a scalar LP: maximize ``w.y`` over all (x', y) with
``y in F(x')`` and ``F(x') ⪯ F(x)``. Its optimal value ``alpha`` is never
below ``beta = max w.y`` over F(x). When ``alpha = beta`` on every facet, x
is a minimizer. Otherwise the LP's x-part strictly improves on x and the
facet scan restarts from there.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .errors import ContractError, EmptySetError, EmptyValueError, LPAnomalyError
from .lp import LinearProgram, LPOutcome, lp_solve
from .polyhedra import VRep, dd_v_to_h, is_subset
from .rational import Vector, canonical_direction, dot, matvec, neg, sub, zeros
from .relaxation import (
    PreSolution,
    UpperImage,
    boundedness_check,
    check_feasible,
    extract_presolution,
    upper_image,
)
from .setcalc import ProblemInstance, SetValue, infimum, value_of

log = logging.getLogger(__name__)

LPCallback = Callable[[LinearProgram, LPOutcome], None]


class Status(enum.Enum):
    SOLVED = "solved"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class ScalarCertificate:
    """Outcome of one facet LP; ``w.y <= gamma`` is the facet of F(x) + C."""

    w: Vector
    gamma: Fraction
    alpha: Fraction
    beta: Fraction
    improving_x: Optional[Vector] = None

    @property
    def certifies(self) -> bool:
        return self.alpha == self.beta


@dataclass
class PointTrace:
    """What happened while minimizing one pre-solution point."""

    start: Vector
    result: Vector
    certificates: list[ScalarCertificate] = field(default_factory=list)
    # one entry per while-pass that ended with alpha > beta: (point before, point after)
    descents: list[tuple[Vector, Vector]] = field(default_factory=list)
    normals_seen: int = 0
    lp_count: int = 0

    @property
    def while_restarts(self) -> int:
        return len(self.descents)


@dataclass
class SetOptReport:
    status: Status
    solution: list[Vector] = field(default_factory=list)
    certificates: list[list[ScalarCertificate]] = field(default_factory=list)
    infimum: Optional[VRep] = None
    presolution: Optional[PreSolution] = None
    traces: list[PointTrace] = field(default_factory=list)
    skipped: list[int] = field(default_factory=list)
    unbounded_direction: Optional[Vector] = None
    verified: Optional[bool] = None

    @property
    def lp_count(self) -> int:
        return sum(t.lp_count for t in self.traces)

    def stats(self) -> dict:
        return {
            "lp_count": self.lp_count,
            "while_restarts": [t.while_restarts for t in self.traces],
            "skipped": list(self.skipped),
            "normals_seen": [t.normals_seen for t in self.traces],
        }


def build_scalar_lp(inst: ProblemInstance, w: Vector, vertices: Sequence[Vector]) -> LinearProgram:
    """LP over (x, y, c^1..c^s): max w.y with y in F(x) and y^i - c^i in F(x), c^i in C.

    Has n + q(s+1) variables and m + ms + ps constraints.
    """
    n, q, s = inst.n, inst.q, len(vertices)
    nvars = n + q * (s + 1)
    zc = zeros(q)
    rows, rhs = [], []
    for a, bb, g in zip(inst.A, inst.B, inst.b):
        rows.append(tuple(a) + tuple(bb) + zc * s)
        rhs.append(g)
    for i, y in enumerate(vertices):
        shifted = sub(inst.b, matvec(inst.B, y))
        for a, bb, g in zip(inst.A, inst.B, shifted):
            rows.append(tuple(a) + zc + zc * i + neg(bb) + zc * (s - i - 1))
            rhs.append(g)
    zt = list(zip(*inst.Z))
    for i in range(s):
        for col in zt:
            rows.append(zeros(n) + zc + zc * i + tuple(col) + zc * (s - i - 1))
            rhs.append(Fraction(0))
    objective = zeros(n) + tuple(w) + zc * s
    assert len(objective) == nvars
    return LinearProgram(objective, tuple(rows), tuple(rhs))


def build_scalar_lp_gc(inst: ProblemInstance, w: Vector, vertices: Sequence[Vector]) -> LinearProgram:
    """Reduced LP over (x, y) for maps with F(x) = F(x) + C.

    Here ``F(x') ⊇ F(x)`` reduces to ``A x' >= max_i (b - B y^i)``, giving
    n + q variables and 2m constraints.
    """
    if not inst.gc_values:
        raise ContractError("build_scalar_lp_gc needs an instance flagged gc_values")
    n, q = inst.n, inst.q
    shifted = [sub(inst.b, matvec(inst.B, y)) for y in vertices]
    bound = tuple(max(col) for col in zip(*shifted))
    rows = [tuple(a) + tuple(bb) for a, bb in zip(inst.A, inst.B)]
    rows += [tuple(a) + zeros(q) for a in inst.A]
    return LinearProgram(zeros(n) + tuple(w), tuple(rows), tuple(inst.b) + bound)


def beta_of(w: Vector, vertices: Sequence[Vector]) -> Fraction:
    return max(dot(w, y) for y in vertices)


def facets(value: SetValue) -> list[tuple[Vector, Fraction]]:
    """Facets of F(x) + C as ``(w, gamma)`` meaning ``w.y <= gamma``, w canonical."""
    out = []
    for nrm, off in value.h_plus.rows():
        w = canonical_direction(neg(nrm))
        k = next(a / b for a, b in zip(w, nrm) if b)
        out.append((w, k * off))
    return out


def _solve_facet_lp(inst, w, vertices, gc, on_lp) -> LPOutcome:
    lp = build_scalar_lp_gc(inst, w, vertices) if gc else build_scalar_lp(inst, w, vertices)
    out = lp_solve(lp)
    if on_lp is not None:
        on_lp(lp, out)
    if not out.optimal:
        raise LPAnomalyError(f"facet LP for w = {w} is {out.status.value}; is the problem bounded?")
    return out


def minimize_point(
    inst: ProblemInstance,
    x0: Sequence,
    *,
    gc_values: Optional[bool] = None,
    on_lp: Optional[LPCallback] = None,
) -> PointTrace:
    """Descend from ``x0`` to a minimizer, following the phase-2 loop literally.

    The current point is overwritten by each LP solution, including on
    facets where ``alpha = beta``.
    """
    gc = inst.gc_values if gc_values is None else gc_values
    x = tuple(Fraction(a) for a in x0)
    trace = PointTrace(start=x, result=x)
    seen: set[Vector] = set()
    while True:
        value = value_of(inst, x)
        vertices = value.v_plus.points
        pass_start = x
        improved = False
        for w, gamma in facets(value):
            key = canonical_direction(w)
            if key in seen:
                continue
            seen.add(key)
            out = _solve_facet_lp(inst, w, vertices, gc, on_lp)
            trace.lp_count += 1
            x = out.point[:inst.n]
            alpha = out.value
            beta = beta_of(w, vertices)
            trace.certificates.append(
                ScalarCertificate(w, gamma, alpha, beta, x if alpha > beta else None))
            if alpha > beta:
                improved = True
                break
        if not improved:
            break
        trace.descents.append((pass_start, x))
        log.debug("descent %s -> %s", pass_start, x)
    trace.result = x
    trace.normals_seen = len(seen)
    return trace


def is_minimizer(
    inst: ProblemInstance,
    x: Sequence,
    *,
    gc_values: Optional[bool] = None,
    on_lp: Optional[LPCallback] = None,
) -> tuple[bool, list[ScalarCertificate]]:
    """Solve the facet LP for every facet of F(x) + C; minimal iff alpha = beta on all."""
    gc = inst.gc_values if gc_values is None else gc_values
    value = value_of(inst, x)
    vertices = value.v_plus.points
    certs = []
    for w, gamma in facets(value):
        out = _solve_facet_lp(inst, w, vertices, gc, on_lp)
        alpha, beta = out.value, beta_of(w, vertices)
        certs.append(ScalarCertificate(w, gamma, alpha, beta,
                                       out.point[:inst.n] if alpha > beta else None))
    return all(c.certifies for c in certs), certs


def attains(ui: UpperImage, values: Sequence[SetValue]) -> bool:
    """Whether the infimum over ``values`` equals the upper image."""
    if not values:
        return ui.v.is_empty
    inf = infimum(values)
    return is_subset(inf, ui.h) and is_subset(ui.v, dd_v_to_h(inf))


def setopt_solve(
    inst: ProblemInstance,
    *,
    skip_rule: bool = True,
    gc_values: Optional[bool] = None,
    verify: bool = False,
    on_lp: Optional[LPCallback] = None,
) -> SetOptReport:
    """Run both phases and return a solution of the set optimization problem."""
    if gc_values is not None and gc_values != inst.gc_values:
        inst = inst.with_gc_values(gc_values)
    if not check_feasible(inst):
        return SetOptReport(Status.INFEASIBLE)
    ui = upper_image(inst)
    d = boundedness_check(ui, inst.cone)
    if d is not None:
        return SetOptReport(Status.UNBOUNDED, infimum=ui.v, unbounded_direction=d)
    pre = extract_presolution(inst, ui)

    report = SetOptReport(Status.SOLVED, infimum=ui.v, presolution=pre)
    finished: list[SetValue] = []
    for j, (x, y) in enumerate(pre.entries):
        if skip_rule and any(val.contains_plus(y) for val in finished):
            report.skipped.append(j)
            continue
        trace = minimize_point(inst, x, on_lp=on_lp)
        report.traces.append(trace)
        finished.append(value_of(inst, trace.result))

    for trace in report.traces:
        if trace.result not in report.solution:
            report.solution.append(trace.result)
            report.certificates.append(trace.certificates)

    if verify:
        report.verified = all(is_minimizer(inst, x)[0] for x in report.solution) and attains(
            ui, [value_of(inst, x) for x in report.solution])
        if not report.verified:
            log.warning("self-check failed for the computed solution")
    return report


@dataclass
class SolutionVerdict:
    is_infimizer: bool
    non_minimizers: list[tuple[Vector, list[ScalarCertificate]]]
    outside_domain: list[Vector]

    @property
    def is_solution(self) -> bool:
        return self.is_infimizer and not self.non_minimizers and not self.outside_domain


def check_solution(inst: ProblemInstance, candidate: Sequence[Sequence]) -> SolutionVerdict:
    """Test whether ``candidate`` is a finite infimizer made of minimizers."""
    if not check_feasible(inst):
        raise EmptySetError("the problem is infeasible")
    ui = upper_image(inst)
    if boundedness_check(ui, inst.cone) is not None:
        raise ContractError("check_solution needs a bounded problem")
    values, non_min, outside = [], [], []
    for x in candidate:
        x = tuple(Fraction(a) for a in x)
        try:
            values.append(value_of(inst, x))
        except EmptyValueError:
            outside.append(x)
            continue
        ok, certs = is_minimizer(inst, x)
        if not ok:
            non_min.append((x, [c for c in certs if not c.certifies]))
    return SolutionVerdict(attains(ui, values), non_min, outside)
