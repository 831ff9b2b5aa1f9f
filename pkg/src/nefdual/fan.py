"""Face fans of polytopes and integral convex piecewise-linear functions.

The face fan of a full-dimensional polytope with the origin inside has one
maximal cone per facet: the cone over that facet. A piecewise-linear
function on the fan is stored as one linear functional per maximal cone,
solved exactly from prescribed vertex values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    DimensionMismatch,
    InvariantViolation,
    NotConvex,
    NotFullDimensional,
    NotPiecewiseLinear,
    ZeroNotInterior,
)
from .linalg import Inconsistent, Underdetermined
from .polytope import Point, Polytope, hull, pair, solve_linear


@dataclass(frozen=True)
class Cone:
    """Maximal cone of a face fan: the cone over one facet of the base."""

    index: int
    normal: Point
    offset: Fraction
    vertex_indices: tuple[int, ...]


class FaceFan:
    """Complete fan whose maximal cones are cones over the facets of ``base``."""

    __slots__ = ("base", "cones")

    def __init__(self, base: Polytope):
        if not base.is_full_dimensional:
            raise NotFullDimensional("face fan needs a full-dimensional polytope")
        if not base.has_zero_interior:
            raise ZeroNotInterior("face fan needs the origin strictly inside")
        self.base = base
        self.cones = tuple(
            Cone(i, f.normal, f.offset, f.incidence)
            for i, f in enumerate(base.facets)
        )

    def cone_contains(self, cone: Cone, x: Point) -> bool:
        """Exact membership of ``x`` in the (closed) maximal cone."""
        if x.is_zero():
            return True
        s = pair(x, cone.normal)
        if s >= 0:
            # every nonzero cone point pairs strictly negatively with the facet normal
            return False
        scaled = x.scale(-cone.offset / s)
        return self.base.contains(scaled)

    def locate(self, x: Point) -> Cone:
        """First maximal cone containing ``x``; the fan is complete, so one exists."""
        for cone in self.cones:
            if self.cone_contains(cone, x):
                return cone
        raise InvariantViolation("complete fan failed to contain a point", witness=x)

    def __len__(self) -> int:
        return len(self.cones)

    def __iter__(self):
        return iter(self.cones)

    def __eq__(self, other) -> bool:
        return isinstance(other, FaceFan) and self.base == other.base

    def __hash__(self) -> int:
        return hash(("FaceFan", self.base))

    def __repr__(self) -> str:
        return f"FaceFan({self.base!r}, {len(self.cones)} maximal cones)"


def face_fan(base: Polytope) -> FaceFan:
    return FaceFan(base)


class PLFunction:
    """Piecewise-linear function on a face fan, linear on each maximal cone.

    ``vertex_values[i]`` is the value at the i-th canonical vertex of the
    base polytope; ``functionals[j]`` is the dual-space functional realizing
    the function on the j-th maximal cone.
    """

    __slots__ = ("fan", "vertex_values", "functionals", "is_convex", "is_integral")

    def __init__(
        self,
        fan: FaceFan,
        vertex_values: tuple[Fraction, ...],
        functionals: tuple[Point, ...],
    ):
        self.fan = fan
        self.vertex_values = vertex_values
        self.functionals = functionals
        self.is_integral = all(u.is_lattice() for u in functionals)
        self.is_convex = self.first_convexity_violation() is None

    def first_convexity_violation(self):
        """First (vertex_index, cone_index) where a functional exceeds the value."""
        for vi, v in enumerate(self.fan.base.vertices):
            val = self.vertex_values[vi]
            for ci, u in enumerate(self.functionals):
                if pair(v, u) > val:
                    return (vi, ci)
        return None

    def first_nonintegral_cone(self):
        for ci, u in enumerate(self.functionals):
            if not u.is_lattice():
                return ci
        return None

    def evaluate(self, x: Point) -> Fraction:
        """Value at ``x``; for convex functions, asserted against the max formula."""
        cone = self.fan.locate(x)
        value = pair(x, self.functionals[cone.index])
        if self.is_convex:
            best = max(pair(x, u) for u in self.functionals)
            if best != value:
                raise InvariantViolation(
                    "convex evaluation disagrees with max of functionals",
                    witness=(x, value, best),
                )
        return value

    def __call__(self, x: Point) -> Fraction:
        return self.evaluate(x)

    def __add__(self, other: "PLFunction") -> "PLFunction":
        if not isinstance(other, PLFunction):
            return NotImplemented
        if self.fan != other.fan:
            raise DimensionMismatch("can only add PL functions on the same fan")
        values = tuple(a + b for a, b in zip(self.vertex_values, other.vertex_values))
        funcs = tuple(a + b for a, b in zip(self.functionals, other.functionals))
        return PLFunction(self.fan, values, funcs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PLFunction)
            and self.fan == other.fan
            and self.vertex_values == other.vertex_values
        )

    def __hash__(self) -> int:
        return hash((self.fan, self.vertex_values))

    def __repr__(self) -> str:
        flags = []
        if self.is_convex:
            flags.append("convex")
        if self.is_integral:
            flags.append("integral")
        return f"PLFunction({', '.join(flags) or 'general'}, values={self.vertex_values})"


def pl_from_vertex_values(fan: FaceFan, values: Sequence) -> PLFunction:
    """Extend prescribed vertex values linearly on every maximal cone.

    ``values`` aligns with the canonical vertex order of ``fan.base``. On
    each cone the facet's vertices pin down a unique linear functional
    because they span the ambient space; if the (overdetermined) system of a
    non-simplicial facet is unsolvable, raises NotPiecewiseLinear naming the
    cone.
    """
    verts = fan.base.vertices
    if len(values) != len(verts):
        raise DimensionMismatch(
            f"{len(verts)} vertices but {len(values)} prescribed values"
        )
    vals = tuple(Fraction(v) for v in values)
    functionals = []
    for cone in fan.cones:
        system = [(verts[i], vals[i]) for i in cone.vertex_indices]
        u = solve_linear(system)
        if u is Inconsistent:
            raise NotPiecewiseLinear(cone.index)
        if u is Underdetermined:
            raise InvariantViolation(
                "facet vertices failed to span the ambient space",
                witness=cone.index,
            )
        functionals.append(u)
    return PLFunction(fan, vals, tuple(functionals))


def support_polytope(f: PLFunction) -> Polytope:
    """Hull of the negated cone functionals of a convex PL function.

    This is the polytope whose support function recovers ``f``:
    ``{y : <x, y> >= -f(x) for all x}``. Each generator is guarded against
    every vertex constraint before hulling.
    """
    if not f.is_convex:
        raise NotConvex("support polytope needs a convex PL function")
    verts = f.fan.base.vertices
    gens = []
    for u in f.functionals:
        g = -u
        for vi, v in enumerate(verts):
            if pair(v, g) < -f.vertex_values[vi]:
                raise InvariantViolation(
                    "support generator violates a vertex constraint",
                    witness=(g, v, f.vertex_values[vi]),
                )
        gens.append(g)
    return hull(gens)
