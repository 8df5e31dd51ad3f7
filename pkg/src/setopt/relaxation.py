"""Phase 1: the vectorial relaxation.

The relaxation minimizes y over gr F with respect to C. Its upper image
``proj_y(gr F) + C`` is the common infimum of the set problem and the
relaxation. It is computed here by enumerating generators of gr F, dropping
the x-coordinates and adding the rays of C.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import EmptySetError
from .lp import feasible_point
from .polyhedra import ConeSpec, HRep, VRep, add_cone, cone_rays, dd_h_to_v, dd_v_to_h, project_generators
from .rational import Vector, matvec, sub
from .setcalc import ProblemInstance


@dataclass(frozen=True)
class UpperImage:
    v: VRep
    h: HRep
    graph: Optional[VRep] = None


@dataclass(frozen=True)
class PreSolution:
    entries: tuple[tuple[Vector, Vector], ...]

    @property
    def points(self) -> list[Vector]:
        return [x for x, _ in self.entries]

    def __len__(self):
        return len(self.entries)


def check_feasible(inst: ProblemInstance) -> bool:
    if inst.graph_trivially_empty():
        return False
    g = inst.graph_hrep()
    return feasible_point(g.normals, g.offsets, g.dim) is not None


def upper_image(inst: ProblemInstance) -> UpperImage:
    if inst.graph_trivially_empty():
        raise EmptySetError("gr F is empty")
    graph = dd_h_to_v(inst.graph_hrep())
    if graph.is_empty:
        raise EmptySetError("gr F is empty")
    projected = project_generators(graph, range(inst.n, inst.n + inst.q))
    v = add_cone(projected, cone_rays(inst.cone))
    return UpperImage(v, dd_v_to_h(v), graph)


def boundedness_check(ui: UpperImage, cone: ConeSpec) -> Optional[Vector]:
    """Return None when the problem is bounded, else a direction of the
    upper image that does not lie in C."""
    for d in ui.v.directions:
        if not cone.contains(d):
            return d
    return None


def extract_presolution(inst: ProblemInstance, ui: UpperImage) -> PreSolution:
    """Pair every vertex y of the upper image with some x such that y is in F(x)."""
    n = inst.n
    entries = []
    for y in ui.v.points:
        x = None
        if ui.graph is not None:
            x = next((p[:n] for p in ui.graph.points if p[n:] == y), None)
        if x is None:
            # fallback: any x with A x >= b - B y
            x = feasible_point(inst.A, sub(inst.b, matvec(inst.B, y)), n)
            if x is None:
                raise EmptySetError(f"no x carries the vertex {y}")
        entries.append((x, y))
    return PreSolution(tuple(entries))
