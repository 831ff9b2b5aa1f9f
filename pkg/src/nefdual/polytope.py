"""Lattice polytopes over exact rationals: hulls, polars, Minkowski sums.

Points and polytopes are tagged with one of two mutually dual spaces, "M"
and "N"; the pairing is only defined between a point of each. Polytopes are
immutable, canonically ordered (vertices sorted lexicographically), and
carry an irredundant facet system with primitive integer normals. A facet
stores the inequality ``<x, normal> >= -offset``. Lower-dimensional
polytopes are first class: their affine span is recorded as a list of
equality constraints and facets are facets within that span.

Two polytopes are equal exactly when they live in the same space and have
the same canonical vertex list.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatch,
    InvariantViolation,
    NotFullDimensional,
    ZeroNotInterior,
)
from .linalg import (
    SolveFailure,
    nullspace,
    primitivize,
    rank,
    solve,
)

SPACE_M = "M"
SPACE_N = "N"


def dual_space(space: str) -> str:
    return SPACE_N if space == SPACE_M else SPACE_M


def _dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


class Point:
    """An exact rational point in M or N.

    Immutable by convention; arithmetic stays within one space, the pairing
    crosses between the two.
    """

    __slots__ = ("coords", "space")

    def __init__(self, coords: Iterable, space: str = SPACE_M):
        if space not in (SPACE_M, SPACE_N):
            raise ValueError(f"unknown space tag {space!r}")
        self.coords = tuple(Fraction(c) for c in coords)
        self.space = space

    @property
    def dim(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_lattice(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def _check_compatible(self, other: "Point") -> None:
        if not isinstance(other, Point):
            raise TypeError(f"expected Point, got {type(other).__name__}")
        if other.space != self.space or other.dim != self.dim:
            raise DimensionMismatch(
                f"cannot combine point in {self.space}^{self.dim} "
                f"with point in {other.space}^{other.dim}"
            )

    def __add__(self, other: "Point") -> "Point":
        self._check_compatible(other)
        return Point((a + b for a, b in zip(self.coords, other.coords)), self.space)

    def __sub__(self, other: "Point") -> "Point":
        self._check_compatible(other)
        return Point((a - b for a, b in zip(self.coords, other.coords)), self.space)

    def __neg__(self) -> "Point":
        return Point((-c for c in self.coords), self.space)

    def scale(self, factor) -> "Point":
        f = Fraction(factor)
        return Point((f * c for c in self.coords), self.space)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Point)
            and self.space == other.space
            and self.coords == other.coords
        )

    def __hash__(self) -> int:
        return hash((self.space, self.coords))

    def __lt__(self, other: "Point") -> bool:
        self._check_compatible(other)
        return self.coords < other.coords

    def __le__(self, other: "Point") -> bool:
        self._check_compatible(other)
        return self.coords <= other.coords

    def __repr__(self) -> str:
        return f"Point(({', '.join(str(c) for c in self.coords)}), {self.space})"


def origin(dim: int, space: str = SPACE_M) -> Point:
    return Point((0,) * dim, space)


def pair(x: Point, y: Point) -> Fraction:
    """Canonical pairing between a point of M and a point of N."""
    if x.space == y.space:
        raise DimensionMismatch(
            f"pairing needs one point from each space, got two from {x.space}"
        )
    if x.dim != y.dim:
        raise DimensionMismatch(f"pairing dimension mismatch: {x.dim} vs {y.dim}")
    return _dot(x.coords, y.coords)


@dataclass(frozen=True)
class Facet:
    """One facet inequality ``<x, normal> >= -offset``.

    The normal is a primitive integer vector in the dual space; incidence
    lists the indices of the vertices lying on the facet.
    """

    normal: Point
    offset: Fraction
    incidence: tuple[int, ...]


@dataclass(frozen=True)
class LinearEquality:
    """One affine-span constraint ``<x, normal> = value``."""

    normal: Point
    value: Fraction


class Polytope:
    """Bounded convex hull of finitely many rational points.

    Construct through :func:`hull`; the constructor trusts its arguments.
    """

    __slots__ = ("ambient_dim", "space", "vertices", "affine_span", "facets")

    def __init__(
        self,
        ambient_dim: int,
        space: str,
        vertices: tuple[Point, ...],
        affine_span: tuple[LinearEquality, ...],
        facets: tuple[Facet, ...],
    ):
        self.ambient_dim = ambient_dim
        self.space = space
        self.vertices = vertices
        self.affine_span = affine_span
        self.facets = facets

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.affine_span)

    @property
    def is_full_dimensional(self) -> bool:
        return not self.affine_span

    @property
    def has_zero_interior(self) -> bool:
        """Whether the origin lies strictly inside (forces full dimension)."""
        return self.is_full_dimensional and all(f.offset > 0 for f in self.facets)

    def contains(self, point: Point) -> bool:
        if point.space != self.space or point.dim != self.ambient_dim:
            raise DimensionMismatch(
                f"point in {point.space}^{point.dim} against polytope "
                f"in {self.space}^{self.ambient_dim}"
            )
        for eq in self.affine_span:
            if pair(point, eq.normal) != eq.value:
                return False
        for f in self.facets:
            if pair(point, f.normal) < -f.offset:
                return False
        return True

    def __contains__(self, point: Point) -> bool:
        return self.contains(point)

    def is_lattice(self) -> bool:
        return all(v.is_lattice() for v in self.vertices)

    def is_reflexive(self) -> bool:
        """Lattice, full-dimensional, origin interior, all facets at lattice distance 1."""
        return (
            self.is_full_dimensional
            and self.is_lattice()
            and self.has_zero_interior
            and all(f.offset == 1 for f in self.facets)
        )

    def polar_dual(self) -> "Polytope":
        """The polar polytope ``{y : <x, y> >= -1 for all x here}``.

        Its vertices are the facet normals scaled by the facet offsets.
        """
        if not self.is_full_dimensional:
            raise NotFullDimensional("polar dual needs a full-dimensional polytope")
        if not self.has_zero_interior:
            raise ZeroNotInterior("polar dual needs the origin strictly inside")
        target = dual_space(self.space)
        gens = [
            Point((c / f.offset for c in f.normal.coords), target) for f in self.facets
        ]
        return hull(gens)

    def lattice_points(self) -> list[Point]:
        """All lattice points, in lexicographic order."""
        if not self.is_lattice():
            raise ValueError("lattice point enumeration needs a lattice polytope")
        los = []
        his = []
        for j in range(self.ambient_dim):
            vals = [v.coords[j] for v in self.vertices]
            los.append(ceil(min(vals)))
            his.append(floor(max(vals)))
        found = []
        for tup in itertools.product(*(range(lo, hi + 1) for lo, hi in zip(los, his))):
            p = Point(tup, self.space)
            if self.contains(p):
                found.append(p)
        return found

    def vertex_index(self, point: Point) -> int:
        """Index of ``point`` in the canonical vertex list, or raise ValueError."""
        for i, v in enumerate(self.vertices):
            if v == point:
                return i
        raise ValueError(f"{point!r} is not a vertex")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polytope)
            and self.space == other.space
            and self.ambient_dim == other.ambient_dim
            and self.vertices == other.vertices
        )

    def __hash__(self) -> int:
        return hash((self.space, self.ambient_dim, self.vertices))

    def __repr__(self) -> str:
        return (
            f"Polytope({self.space}, dim {self.dim} in R^{self.ambient_dim}, "
            f"{len(self.vertices)} vertices)"
        )


def _independent_direction_subset(dirs: list[tuple[Fraction, ...]], k: int):
    """First k directions, in order, that are linearly independent."""
    chosen: list[list[Fraction]] = []
    for v in dirs:
        if len(chosen) == k:
            break
        if rank(chosen + [list(v)]) > len(chosen):
            chosen.append(list(v))
    if len(chosen) != k:
        raise InvariantViolation("direction set does not span the affine hull")
    return chosen


def _plane_through(pts, verts: frozenset, dim: int, interior):
    """Hyperplane (n, c) through the given points, oriented so <interior, n> > c."""
    rows = [list(pts[i]) + [Fraction(-1)] for i in sorted(verts)]
    basis = nullspace(rows, dim + 1)
    if len(basis) != 1:
        raise InvariantViolation("degenerate facet candidate", witness=sorted(verts))
    vec = basis[0]
    nv, c = vec[:dim], vec[dim]
    s = _dot(interior, nv)
    if s == c:
        raise InvariantViolation("interior point on facet plane", witness=sorted(verts))
    if s < c:
        nv = tuple(-x for x in nv)
        c = -c
    return (tuple(nv), c, frozenset(verts))


def _beneath_beyond_planes(pts, k: int):
    """Facet planes of the full-dimensional hull of distinct k-dim points.

    Incremental insertion with simplicial facets; coplanar pieces of one
    geometric facet are merged by the caller. Returns (normal, c) pairs with
    the hull satisfying ``<x, normal> >= c``.
    """
    n = len(pts)
    simplex = [0]
    dirs: list[list[Fraction]] = []
    for i in range(1, n):
        v = [a - b for a, b in zip(pts[i], pts[simplex[0]])]
        if rank(dirs + [v]) > len(dirs):
            dirs.append(v)
            simplex.append(i)
            if len(simplex) == k + 1:
                break
    if len(simplex) != k + 1:
        raise InvariantViolation("points do not span the expected dimension")
    interior = tuple(
        sum(pts[i][j] for i in simplex) / (k + 1) for j in range(k)
    )
    facets = [
        _plane_through(pts, frozenset(simplex) - {simplex[excl]}, k, interior)
        for excl in range(k + 1)
    ]
    in_simplex = set(simplex)
    for i in range(n):
        if i in in_simplex:
            continue
        p = pts[i]
        vis_idx = {ix for ix, f in enumerate(facets) if _dot(p, f[0]) < f[1]}
        if not vis_idx:
            continue
        ridge_count: dict[frozenset, int] = {}
        for ix in vis_idx:
            verts = facets[ix][2]
            for excl in verts:
                ridge = verts - {excl}
                ridge_count[ridge] = ridge_count.get(ridge, 0) + 1
        new_facets = [
            _plane_through(pts, ridge | {i}, k, interior)
            for ridge, cnt in ridge_count.items()
            if cnt == 1
        ]
        facets = [f for ix, f in enumerate(facets) if ix not in vis_idx] + new_facets
    return [(nv, c) for nv, c, _ in facets]


def hull(points: Iterable[Point]) -> Polytope:
    """Convex hull with irredundant canonical vertex and facet data.

    Accepts any finite nonempty collection of points of one space; duplicates
    and non-extreme points are dropped. Lower-dimensional input is fine: the
    affine span becomes equality constraints and the facet system lives
    within the span, with normals canonicalized along the span's direction
    space.
    """
    pts = list(points)
    if not pts:
        raise ValueError("hull needs at least one point")
    space = pts[0].space
    d = pts[0].dim
    for p in pts[1:]:
        if p.space != space or p.dim != d:
            raise DimensionMismatch("hull input points disagree on space or dimension")
    uniq = sorted(set(pts))
    p0 = uniq[0]

    dirs = [tuple(a - b for a, b in zip(q.coords, p0.coords)) for q in uniq[1:]]
    eq_vecs = sorted(nullspace([list(v) for v in dirs], d))
    target = dual_space(space)
    equalities = tuple(
        LinearEquality(Point(v, target), _dot(v, p0.coords)) for v in eq_vecs
    )
    k = d - len(eq_vecs)

    if k == 0:
        return Polytope(d, space, (p0,), equalities, ())

    if k == d:
        basis = None
        work = [q.coords for q in uniq]
    else:
        basis = _independent_direction_subset(dirs, k)
        mat = [[basis[col][j] for col in range(k)] for j in range(d)]
        work = []
        for q in uniq:
            rhs = [a - b for a, b in zip(q.coords, p0.coords)]
            t = solve(mat, rhs)
            if isinstance(t, SolveFailure):
                raise InvariantViolation("span coordinates must exist", witness=q)
            work.append(t)

    if k == 1:
        ts = [w[0] for w in work]
        planes = [((Fraction(1),), min(ts)), ((Fraction(-1),), -max(ts))]
    else:
        planes = _beneath_beyond_planes(work, k)

    merged = {}
    for nv, c in planes:
        prim, scl = primitivize(nv)
        merged[(prim, c * scl)] = True

    raw_facets: list[tuple[tuple[Fraction, ...], Fraction]] = []
    if basis is None:
        for nv, c in merged:
            raw_facets.append((nv, -c))
    else:
        btb = [[_dot(basis[a], basis[b]) for b in range(k)] for a in range(k)]
        for nv, c in merged:
            z = solve(btb, list(nv))
            if isinstance(z, SolveFailure):
                raise InvariantViolation("span basis Gram matrix must be invertible")
            amb = tuple(
                sum(z[col] * basis[col][j] for col in range(k)) for j in range(d)
            )
            prim, scl = primitivize(amb)
            raw_facets.append((prim, -((c + _dot(amb, p0.coords)) * scl)))

    # Fail fast on any algorithmic slip: every input point satisfies every facet.
    for q in uniq:
        for nv, off in raw_facets:
            if _dot(q.coords, nv) < -off:
                raise InvariantViolation(
                    "hull facet violated by an input point", witness=(q, nv, off)
                )

    vertices = []
    for q in uniq:
        active = [list(nv) for nv, off in raw_facets if _dot(q.coords, nv) == -off]
        active.extend(list(v) for v in eq_vecs)
        if rank(active) == d:
            vertices.append(q)
    vtuple = tuple(vertices)

    facets = []
    for nv, off in sorted(raw_facets):
        inc = tuple(
            i for i, v in enumerate(vtuple) if _dot(v.coords, nv) == -off
        )
        facets.append(Facet(Point(nv, target), off, inc))

    return Polytope(d, space, vtuple, equalities, tuple(facets))


def minkowski_sum(p: Polytope, q: Polytope) -> Polytope:
    """Minkowski sum, as the hull of pairwise vertex sums."""
    if p.space != q.space or p.ambient_dim != q.ambient_dim:
        raise DimensionMismatch(
            f"cannot add polytope in {p.space}^{p.ambient_dim} "
            f"to polytope in {q.space}^{q.ambient_dim}"
        )
    return hull([a + b for a in p.vertices for b in q.vertices])


def solve_linear(system: Iterable[tuple[Point, object]]):
    """Solve ``<p, u> = value`` for ``u`` in the dual space of the points.

    ``system`` is an iterable of (point, value) pairs. Returns the unique
    solution Point, or ``Inconsistent`` / ``Underdetermined``.
    """
    items = list(system)
    if not items:
        raise ValueError("empty linear system")
    space = items[0][0].space
    d = items[0][0].dim
    for p, _ in items:
        if p.space != space or p.dim != d:
            raise DimensionMismatch("linear system points disagree on space or dimension")
    res = solve([list(p.coords) for p, _ in items], [Fraction(v) for _, v in items])
    if isinstance(res, SolveFailure):
        return res
    return Point(res, dual_space(space))
