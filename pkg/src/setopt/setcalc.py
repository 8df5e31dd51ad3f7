"""Values F(x), the set relation, and the lattice infimum.

``P ⪯ Q`` holds when ``P + C ⊇ Q + C``. Every :class:`SetValue` keeps the raw
value F(x) and, computed on first use, the closure F(x) + C in both
representations.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import EmptyValueError, InputError
from .polyhedra import (
    ConeSpec,
    HRep,
    VRep,
    add_cone,
    cone_rays,
    contains_direction,
    contains_point,
    dd_h_to_v,
    dd_v_to_h,
    minimize_vrep,
    remove_redundancy,
)
from .rational import Matrix, Vector, is_zero, matvec, ncols, sub


@dataclass(frozen=True)
class ProblemInstance:
    """gr F = {(x, y) : A x + B y >= b} together with the ordering cone C.

    ``gc_values`` asserts that F(x) = F(x) + C for every x, which enables the
    smaller scalar LPs.
    """

    A: Matrix
    B: Matrix
    b: Vector
    cone: ConeSpec
    n: int = -1
    q: int = -1
    gc_values: bool = False

    def __post_init__(self):
        m = len(self.b)
        if len(self.A) != m or len(self.B) != m:
            raise InputError(f"A has {len(self.A)} rows, B has {len(self.B)}, b has {m}")
        n = ncols(self.A, self.n)
        q = ncols(self.B, self.q)
        if n < 0 or q < 0:
            raise InputError("cannot infer n or q from an empty constraint matrix")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "q", q)
        for name, mat, width in (("A", self.A, n), ("B", self.B, q)):
            for i, row in enumerate(mat):
                if len(row) != width:
                    raise InputError(f"row {i} of {name} has {len(row)} entries, expected {width}")
        if self.cone.q != q:
            raise InputError(f"cone lives in dimension {self.cone.q} but B has {q} columns")

    @property
    def m(self) -> int:
        return len(self.b)

    @property
    def p(self) -> int:
        return self.cone.p

    @property
    def Z(self) -> Matrix:
        return self.cone.Z

    def with_gc_values(self, flag: bool = True) -> "ProblemInstance":
        return replace(self, gc_values=flag)

    def graph_hrep(self) -> HRep:
        """H-representation of gr F in R^(n+q) with all-zero rows dropped.

        A dropped row ``0 >= b_i`` with ``b_i > 0`` makes the graph empty; see
        :meth:`graph_trivially_empty`.
        """
        normals, offsets = [], []
        for a, bb, g in zip(self.A, self.B, self.b):
            row = tuple(a) + tuple(bb)
            if not is_zero(row):
                normals.append(row)
                offsets.append(g)
        return HRep(tuple(normals), tuple(offsets), self.n + self.q)

    def graph_trivially_empty(self) -> bool:
        return any(is_zero(a) and is_zero(bb) and g > 0 for a, bb, g in zip(self.A, self.B, self.b))


@dataclass(frozen=True, eq=False)
class SetValue:
    """F(x) for one x, with lazily computed representations."""

    inst: ProblemInstance = field(repr=False)
    owner_x: Vector
    h: HRep
    v: VRep

    @cached_property
    def v_plus(self) -> VRep:
        return add_cone(self.v, cone_rays(self.inst.cone))

    @cached_property
    def h_plus(self) -> HRep:
        return remove_redundancy(dd_v_to_h(self.v_plus))

    def contains(self, y: Vector) -> bool:
        """y in F(x)."""
        return contains_point(self.h, y)

    def contains_plus(self, y: Vector) -> bool:
        """y in F(x) + C."""
        return contains_point(self.h_plus, y)


def value_of(inst: ProblemInstance, x: Sequence) -> SetValue:
    """Evaluate F(x) = {y : B y >= b - A x}; raises EmptyValueError outside dom F."""
    x = tuple(Fraction(a) for a in x)
    if len(x) != inst.n:
        raise InputError(f"x has dimension {len(x)}, expected {inst.n}")
    rhs = sub(inst.b, matvec(inst.A, x))
    normals, offsets = [], []
    for row, g in zip(inst.B, rhs):
        if is_zero(row):
            if g > 0:
                raise EmptyValueError(x)
            continue
        normals.append(tuple(row))
        offsets.append(g)
    h = HRep(tuple(normals), tuple(offsets), inst.q)
    v = dd_h_to_v(h)
    if v.is_empty:
        raise EmptyValueError(x)
    return SetValue(inst, x, h, v)


def preceq(P: SetValue, Q: SetValue) -> bool:
    """P ⪯ Q, i.e. P + C contains every generator of Q + C."""
    if P.inst.q != Q.inst.q:
        raise InputError("values live in different spaces")
    return (all(contains_point(P.h_plus, y) for y in Q.v_plus.points)
            and all(contains_direction(P.h_plus, d) for d in Q.v_plus.directions))


def strictly_less(P: SetValue, Q: SetValue) -> bool:
    return preceq(P, Q) and not preceq(Q, P)


def equivalent(P: SetValue, Q: SetValue) -> bool:
    return preceq(P, Q) and preceq(Q, P)


def infimum(values: Sequence[SetValue], dim: int | None = None) -> VRep:
    """conv of the union of all F(x) + C; the empty set for an empty family."""
    if not values:
        if dim is None:
            raise InputError("infimum of an empty family needs an explicit dimension")
        return VRep.empty(dim)
    q = values[0].inst.q
    points = {p for val in values for p in val.v_plus.points}
    directions = {d for val in values for d in val.v_plus.directions}
    return minimize_vrep(VRep(tuple(sorted(points)), tuple(sorted(directions)), q))
