"""Polyhedral convex sets in H- and V-representation.

All conversions go through one routine, :func:`cone_generators`, which
runs the double description method on a homogeneous cone
``{z : M z >= 0}`` and returns its lineality space together with the
extreme rays of the pointed part. A polyhedron ``{y : W y >= g}`` is lifted
to the cone ``{(t, y) : t >= 0, -g t + W y >= 0}``; rays with ``t > 0``
give points and rays with ``t = 0`` give directions. The reverse
conversion applies the same routine to the dual cone of the generators.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import EmptySetError, InputError, ValidationError
from .lp import LinearProgram, feasible_point, lp_solve
from .rational import (
    Matrix,
    Vector,
    canonical_direction,
    dot,
    format_rational,
    is_zero,
    neg,
    rank,
    transpose,
    zeros,
)

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class HRep:
    """The set ``{y : normals y >= offsets}``."""

    normals: Matrix
    offsets: Vector
    dim: int

    def __post_init__(self):
        if len(self.normals) != len(self.offsets):
            raise InputError(f"{len(self.normals)} normals but {len(self.offsets)} offsets")
        for i, row in enumerate(self.normals):
            if len(row) != self.dim:
                raise InputError(f"normal {i} has dimension {len(row)}, expected {self.dim}")
            if is_zero(row):
                raise InputError(f"normal {i} is the zero vector")

    def __len__(self):
        return len(self.normals)

    def rows(self):
        return zip(self.normals, self.offsets)

    def __str__(self):
        return "\n".join(
            " ".join(str(format_rational(a)) for a in w) + " >= " + str(format_rational(g))
            for w, g in self.rows())


@dataclass(frozen=True)
class VRep:
    """The set ``conv(points) + cone(directions)``; no points means the empty set."""

    points: tuple[Vector, ...]
    directions: tuple[Vector, ...]
    dim: int

    def __post_init__(self):
        for p in self.points:
            if len(p) != self.dim:
                raise InputError(f"point of dimension {len(p)} in a {self.dim}-dimensional VRep")
        for d in self.directions:
            if len(d) != self.dim:
                raise InputError(f"direction of dimension {len(d)} in a {self.dim}-dimensional VRep")
            if is_zero(d):
                raise InputError("zero direction in VRep")

    @property
    def is_empty(self) -> bool:
        return not self.points

    @classmethod
    def empty(cls, dim: int) -> "VRep":
        return cls((), (), dim)

    def __str__(self):
        lines = ["point " + " ".join(str(format_rational(a)) for a in p) for p in self.points]
        lines += ["direction " + " ".join(str(format_rational(a)) for a in d) for d in self.directions]
        return "\n".join(lines)


@dataclass(frozen=True)
class ConeSpec:
    """Ordering cone ``C = {y : Z^T y >= 0}`` with ``Z`` of shape ``q x p``.

    Construction validates that ``C`` is pointed and has nonempty interior.
    """

    Z: Matrix

    def __post_init__(self):
        if not self.Z or not self.Z[0]:
            raise ValidationError("cone matrix Z must have at least one row and one column")
        q = len(self.Z)
        cols = transpose(self.Z)
        for j, col in enumerate(cols):
            if len(col) != q:
                raise ValidationError("ragged cone matrix Z")
            if is_zero(col):
                raise ValidationError(f"column {j} of Z is zero")
        if rank(cols) != q:
            raise ValidationError("ordering cone is not pointed (Z^T has a nontrivial kernel)")
        # max s subject to Z^T y >= s 1, s <= 1
        lp = LinearProgram(
            objective=zeros(q) + (ONE,),
            constraints=tuple(tuple(col) + (-ONE,) for col in cols) + (zeros(q) + (-ONE,),),
            rhs=zeros(len(cols)) + (-ONE,),
        )
        out = lp_solve(lp)
        if not out.optimal or out.value <= 0:
            raise ValidationError("ordering cone has empty interior")

    @property
    def q(self) -> int:
        return len(self.Z)

    @property
    def p(self) -> int:
        return len(self.Z[0])

    def as_hrep(self) -> HRep:
        return HRep(transpose(self.Z), zeros(self.p), self.q)

    def contains(self, d: Vector) -> bool:
        return all(dot(col, d) >= 0 for col in transpose(self.Z))


def cone_generators(constraints: Sequence[Sequence[Fraction]], d: int):
    """Double description of ``{z in R^d : a.z >= 0 for every row a}``.

    Returns ``(lines, rays)``: a basis of the lineality space and the extreme
    rays of the cone modulo that space, all in canonical integer form.
    Constraints are processed in the given order.
    """
    lines = [tuple(ONE if i == j else ZERO for j in range(d)) for i in range(d)]
    rays: list[tuple[Vector, frozenset]] = []
    processed: list[int] = []

    for k, a in enumerate(constraints):
        if is_zero(a):
            continue
        pi = next((i for i, l in enumerate(lines) if dot(a, l)), None)
        if pi is not None:
            pivot = lines[pi]
            al = dot(a, pivot)
            if al < 0:
                pivot, al = neg(pivot), -al
            new_lines = []
            for i, l in enumerate(lines):
                if i == pi:
                    continue
                t = dot(a, l) / al
                l2 = tuple(x - t * y for x, y in zip(l, pivot)) if t else l
                new_lines.append(canonical_direction(l2))
            new_rays = []
            for r, z in rays:
                t = dot(a, r) / al
                r2 = tuple(x - t * y for x, y in zip(r, pivot)) if t else r
                new_rays.append((canonical_direction(r2), z | {k}))
            new_rays.append((canonical_direction(pivot), frozenset(processed)))
            lines, rays = new_lines, new_rays
        else:
            vals = [dot(a, r) for r, _ in rays]
            pos = [i for i, v in enumerate(vals) if v > 0]
            neg_ = [i for i, v in enumerate(vals) if v < 0]
            zer = [i for i, v in enumerate(vals) if v == 0]
            need = d - len(lines) - 2
            new_rays = [rays[i] for i in pos]
            new_rays += [(rays[i][0], rays[i][1] | {k}) for i in zer]
            for i in pos:
                ri, zi = rays[i]
                for j in neg_:
                    rj, zj = rays[j]
                    common = zi & zj
                    if len(common) < need:
                        continue
                    if any(h != i and h != j and common <= rays[h][1] for h in range(len(rays))):
                        continue
                    vi, vj = vals[i], vals[j]
                    r = tuple(vi * y - vj * x for x, y in zip(ri, rj))
                    new_rays.append((canonical_direction(r), common | {k}))
            rays = new_rays
        processed.append(k)

    return lines, [r for r, _ in rays]


def _sorted_unique(vectors: Iterable[Vector]) -> tuple[Vector, ...]:
    return tuple(sorted(set(vectors)))


def dd_h_to_v(h: HRep) -> VRep:
    """Minimal V-representation of ``h``; the empty VRep when ``h`` is infeasible."""
    q = h.dim
    lifted = {canonical_direction((-g,) + tuple(w)) for w, g in h.rows()}
    rows = [(ONE,) + zeros(q)] + sorted(lifted)
    lines, rays = cone_generators(rows, q + 1)
    points = []
    directions = []
    for r in rays:
        if r[0] > 0:
            points.append(tuple(x / r[0] for x in r[1:]))
        else:
            directions.append(canonical_direction(r[1:]))
    if not points:
        return VRep.empty(q)
    for l in lines:
        d = canonical_direction(l[1:])
        directions += [d, neg(d)]
    return VRep(_sorted_unique(points), _sorted_unique(directions), q)


def dd_v_to_h(v: VRep) -> HRep:
    """Irredundant H-representation of ``conv(points) + cone(directions)``."""
    if v.is_empty:
        raise EmptySetError("the empty set has no H-representation here")
    q = v.dim
    gens = [(ONE,) + tuple(p) for p in v.points] + [(ZERO,) + tuple(d) for d in v.directions]
    gens = sorted({canonical_direction(g) for g in gens})
    lines, rays = cone_generators(gens, q + 1)
    ineqs = set()
    for u in rays:
        if not is_zero(u[1:]):
            ineqs.add(canonical_direction(u))
    for l in lines:
        ineqs.add(canonical_direction(l))
        ineqs.add(canonical_direction(neg(l)))
    ineqs = sorted(ineqs)
    h = HRep(tuple(u[1:] for u in ineqs), tuple(-u[0] for u in ineqs), q)
    if lines:
        # equality pairs can make facet rows redundant; certify by LP
        h = remove_redundancy(h)
    return h


def contains_point(h: HRep, y: Vector) -> bool:
    if len(y) != h.dim:
        raise InputError(f"point of dimension {len(y)} tested against a {h.dim}-dimensional set")
    return all(dot(w, y) >= g for w, g in h.rows())


def contains_direction(h: HRep, d: Vector) -> bool:
    if len(d) != h.dim:
        raise InputError(f"direction of dimension {len(d)} tested against a {h.dim}-dimensional set")
    return all(dot(w, d) >= 0 for w in h.normals)


def is_subset(inner: VRep, outer: HRep) -> bool:
    if inner.dim != outer.dim:
        raise InputError(f"dimension mismatch: {inner.dim} vs {outer.dim}")
    return (all(contains_point(outer, p) for p in inner.points)
            and all(contains_direction(outer, d) for d in inner.directions))


def same_set(a: VRep, b: VRep) -> bool:
    """Mutual inclusion of two V-represented sets."""
    if a.is_empty or b.is_empty:
        return a.is_empty and b.is_empty
    return is_subset(a, dd_v_to_h(b)) and is_subset(b, dd_v_to_h(a))


def remove_redundancy(h: HRep) -> HRep:
    """Drop rows implied by the others, one LP per row.

    Row ``i`` is kept when ``min w_i.y`` over the remaining rows (capped by
    ``w_i.y >= g_i - 1`` to stay bounded) falls below ``g_i``.
    """
    q = h.dim
    if feasible_point(h.normals, h.offsets, q) is None:
        raise EmptySetError("remove_redundancy called on an empty set")
    keep = list(range(len(h)))
    for i in range(len(h)):
        w, g = h.normals[i], h.offsets[i]
        others = [j for j in keep if j != i]
        lp = LinearProgram(
            objective=neg(w),
            constraints=tuple(h.normals[j] for j in others) + (w,),
            rhs=tuple(h.offsets[j] for j in others) + (g - 1,),
        )
        out = lp_solve(lp)
        if -out.value >= g:
            keep.remove(i)
    return HRep(tuple(h.normals[j] for j in keep), tuple(h.offsets[j] for j in keep), q)


def minimize_vrep(v: VRep) -> VRep:
    """Drop generators that are combinations of the others."""
    if v.is_empty:
        return v
    return dd_h_to_v(dd_v_to_h(v))


@functools.lru_cache(maxsize=64)
def cone_rays(c: ConeSpec) -> tuple[Vector, ...]:
    """Extreme rays of the ordering cone, canonical and sorted."""
    return dd_h_to_v(c.as_hrep()).directions


def project_generators(v: VRep, keep: Sequence[int]) -> VRep:
    """V-representation of the coordinate projection onto ``keep`` (0-based)."""
    for k in keep:
        if not 0 <= k < v.dim:
            raise InputError(f"coordinate index {k} out of range for dimension {v.dim}")
    keep = list(keep)
    if v.is_empty:
        return VRep.empty(len(keep))
    points = _sorted_unique(tuple(p[k] for k in keep) for p in v.points)
    directions = []
    for d in v.directions:
        pd = tuple(d[k] for k in keep)
        if not is_zero(pd):
            directions.append(canonical_direction(pd))
    return minimize_vrep(VRep(points, _sorted_unique(directions), len(keep)))


def add_cone(v: VRep, rays: Iterable[Vector]) -> VRep:
    """Minimized V-representation of ``v + cone(rays)``."""
    if v.is_empty:
        return v
    directions = _sorted_unique(list(v.directions) + [canonical_direction(r) for r in rays])
    return minimize_vrep(VRep(v.points, directions, v.dim))
