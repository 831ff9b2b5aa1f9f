"""Nef-partitions of reflexive polytopes: validation, enumeration, relations.

A partition of the vertex set of a reflexive polytope is a nef-partition
when the indicator values of every part extend to an integral convex
piecewise-linear function on the face fan. Validation either returns the
fully populated :class:`NefPartition` or a :class:`Rejection` that names the
first reason and an exact witness; re-validating the same input always
yields the identical rejection.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from .errors import (
    InvariantViolation,
    NotPiecewiseLinear,
    NotReflexive,
)
from .fan import FaceFan, PLFunction, face_fan, pl_from_vertex_values, support_polytope
from .linalg import SolveFailure, solve
from .polytope import Point, Polytope, hull, origin, pair

NOT_DISJOINT = "NotDisjoint"
NOT_COVERING = "NotCovering"
EMPTY_PART = "EmptyPart"
NOT_PIECEWISE_LINEAR = "NotPiecewiseLinear"
NOT_CONVEX = "NotConvex"
NOT_INTEGRAL = "NotIntegral"


@dataclass(frozen=True)
class Rejection:
    """Why a candidate partition is not a nef-partition.

    ``reason`` is one of the module constants; the optional fields pin down
    the first offending part / cone / vertex in canonical order.
    """

    reason: str
    part: int | None = None
    cone: int | None = None
    vertex: int | None = None
    detail: str = ""

    def __str__(self) -> str:
        bits = [self.reason]
        if self.part is not None:
            bits.append(f"part {self.part}")
        if self.vertex is not None:
            bits.append(f"vertex {self.vertex}")
        if self.cone is not None:
            bits.append(f"cone {self.cone}")
        if self.detail:
            bits.append(self.detail)
        return ": ".join([bits[0], ", ".join(bits[1:])]) if len(bits) > 1 else bits[0]


@dataclass(frozen=True)
class NefPartition:
    """A validated nef-partition with its cached geometric data.

    ``parts`` holds vertex-index sets in the order given at validation time
    (labels are preserved for I/O); ``phi[i]`` is the integral convex PL
    function extending the indicator of part i, ``delta_parts[i]`` the hull
    of the origin with part i, and ``nabla_parts[i]`` the support polytope
    of ``phi[i]``.
    """

    delta: Polytope
    parts: tuple[frozenset[int], ...]
    fan: FaceFan
    phi: tuple[PLFunction, ...]
    delta_parts: tuple[Polytope, ...]
    nabla_parts: tuple[Polytope, ...]

    @property
    def r(self) -> int:
        return len(self.parts)

    def canonical_parts(self) -> tuple[tuple[int, ...], ...]:
        """Parts as sorted index tuples, ordered by smallest member."""
        return tuple(sorted(tuple(sorted(p)) for p in self.parts))

    def unlabeled(self) -> frozenset[frozenset[int]]:
        return frozenset(self.parts)

    def part_vertices(self, i: int) -> list[Point]:
        return [self.delta.vertices[j] for j in sorted(self.parts[i])]

    def __repr__(self) -> str:
        return (
            f"NefPartition(r={self.r}, parts={[sorted(p) for p in self.parts]}, "
            f"delta={self.delta!r})"
        )


def delta_parts(np: NefPartition) -> tuple[Polytope, ...]:
    return np.delta_parts


def nabla_parts(np: NefPartition) -> tuple[Polytope, ...]:
    return np.nabla_parts


def _hrep_vertices(
    inequalities: list[tuple[tuple[Fraction, ...], Fraction]],
    equalities: list[tuple[tuple[Fraction, ...], Fraction]],
    dim: int,
) -> list[tuple[Fraction, ...]]:
    """Vertices of a bounded region {x : <x,a> >= b, <x,e> = c} by brute force.

    Every vertex has some d linearly independent active constraints, so all
    d-subsets of the combined system are solved as equalities and filtered
    for feasibility. Intended for small systems only.
    """
    rows = [(list(a), b) for a, b in equalities] + [(list(a), b) for a, b in inequalities]
    found: set[tuple[Fraction, ...]] = set()
    for subset in itertools.combinations(range(len(rows)), dim):
        mat = [rows[i][0] for i in subset]
        rhs = [rows[i][1] for i in subset]
        sol = solve(mat, rhs)
        if isinstance(sol, SolveFailure):
            continue
        if any(
            sum(a * x for a, x in zip(eq_a, sol)) != eq_b for eq_a, eq_b in equalities
        ):
            continue
        if any(
            sum(a * x for a, x in zip(in_a, sol)) < in_b for in_a, in_b in inequalities
        ):
            continue
        found.add(sol)
    return sorted(found)


def _intersection_is_origin(p: Polytope, q: Polytope):
    """Exact check that two polytopes containing the origin meet only there."""
    d = p.ambient_dim
    ineqs = []
    eqs = []
    for poly in (p, q):
        for f in poly.facets:
            ineqs.append((f.normal.coords, -f.offset))
        for eq in poly.affine_span:
            eqs.append((eq.normal.coords, eq.value))
    verts = _hrep_vertices(ineqs, eqs, d)
    zero = tuple(Fraction(0) for _ in range(d))
    if not verts:
        raise InvariantViolation("intersection of parts lost the origin")
    witnesses = [v for v in verts if v != zero]
    if witnesses:
        return False, witnesses[0]
    return True, None


def validate_partition(delta: Polytope, parts: Iterable[Iterable[int]]):
    """Check a vertex partition of a reflexive polytope for nef-ness.

    Returns a fully populated :class:`NefPartition`, or a :class:`Rejection`
    with the first failure in part order: structural problems first, then
    per part no-linear-extension, non-integral functional, or a convexity
    violation. Raises :class:`NotReflexive` if ``delta`` is not reflexive
    and ``IndexError`` on out-of-range vertex indices.
    """
    if not delta.is_reflexive():
        raise NotReflexive("nef-partitions are defined on reflexive polytopes")
    nverts = len(delta.vertices)
    norm_parts = [frozenset(int(i) for i in part) for part in parts]
    for part in norm_parts:
        for i in part:
            if i < 0 or i >= nverts:
                raise IndexError(f"vertex index {i} out of range 0..{nverts - 1}")

    for pi, part in enumerate(norm_parts):
        if not part:
            return Rejection(EMPTY_PART, part=pi)
    seen: dict[int, int] = {}
    for pi, part in enumerate(norm_parts):
        for i in sorted(part):
            if i in seen:
                return Rejection(
                    NOT_DISJOINT,
                    part=pi,
                    vertex=i,
                    detail=f"also in part {seen[i]}",
                )
            seen[i] = pi
    missing = [i for i in range(nverts) if i not in seen]
    if missing:
        return Rejection(NOT_COVERING, vertex=missing[0])

    fan = face_fan(delta)
    phis: list[PLFunction] = []
    for pi, part in enumerate(norm_parts):
        values = [Fraction(1 if i in part else 0) for i in range(nverts)]
        try:
            f = pl_from_vertex_values(fan, values)
        except NotPiecewiseLinear as exc:
            return Rejection(NOT_PIECEWISE_LINEAR, part=pi, cone=exc.cone_index)
        bad_cone = f.first_nonintegral_cone()
        if bad_cone is not None:
            return Rejection(NOT_INTEGRAL, part=pi, cone=bad_cone)
        if not f.is_convex:
            vi, ci = f.first_convexity_violation()
            return Rejection(NOT_CONVEX, part=pi, vertex=vi, cone=ci)
        phis.append(f)

    zero = origin(delta.ambient_dim, delta.space)
    dparts = tuple(
        hull([zero] + [delta.vertices[i] for i in sorted(part)]) for part in norm_parts
    )
    nparts = tuple(support_polytope(f) for f in phis)
    np = NefPartition(delta, tuple(norm_parts), fan, tuple(phis), dparts, nparts)
    _assert_partition_invariants(np)
    return np


def _assert_partition_invariants(np: NefPartition) -> None:
    """Identities every valid nef-partition satisfies; failure is a library bug."""
    delta = np.delta
    zero = origin(delta.ambient_dim, delta.space)
    polar = delta.polar_dual()
    total = reduce(lambda a, b: a + b, np.phi)
    if any(v != 1 for v in total.vertex_values):
        raise InvariantViolation(
            "indicator functions do not sum to 1 on the vertices",
            witness=total.vertex_values,
        )
    if support_polytope(total) != polar:
        raise InvariantViolation("sum of the phi functions does not support the polar")

    covered = hull([v for part_poly in np.delta_parts for v in part_poly.vertices])
    if covered != delta:
        raise InvariantViolation("hull of the delta parts is not the base polytope")
    for i, dp in enumerate(np.delta_parts):
        if not dp.contains(zero):
            raise InvariantViolation(f"delta part {i} misses the origin")
    for i, j in itertools.combinations(range(np.r), 2):
        ok, witness = _intersection_is_origin(np.delta_parts[i], np.delta_parts[j])
        if not ok:
            raise InvariantViolation(
                f"delta parts {i} and {j} overlap beyond the origin", witness=witness
            )

    dual_zero = origin(delta.ambient_dim, polar.space)
    for i, nb in enumerate(np.nabla_parts):
        if not nb.is_lattice():
            raise InvariantViolation(f"nabla part {i} is not a lattice polytope")
        if not nb.contains(dual_zero):
            raise InvariantViolation(f"nabla part {i} misses the origin")
        for v in nb.vertices:
            if not polar.contains(v):
                raise InvariantViolation(
                    f"nabla part {i} leaves the polar polytope", witness=v
                )


def _set_partitions(n: int, r: int):
    """All partitions of range(n) into exactly r nonempty unlabeled blocks.

    Restricted-growth strings; blocks come out ordered by smallest member.
    """
    if r < 1 or r > n:
        return
    code = [0] * n

    def rec(i: int, nblocks: int):
        if i == n:
            if nblocks == r:
                blocks: list[list[int]] = [[] for _ in range(r)]
                for idx, b in enumerate(code):
                    blocks[b].append(idx)
                yield [tuple(b) for b in blocks]
            return
        # cannot finish if even opening a new block at every remaining slot is too few
        for b in range(min(nblocks + 1, r)):
            new_blocks = nblocks if b < nblocks else nblocks + 1
            if new_blocks + (n - i - 1) >= r:
                code[i] = b
                yield from rec(i + 1, new_blocks)

    yield from rec(1, 1)


def enumerate_nef_partitions(
    delta: Polytope, r: int, threads: int = 1
) -> list[NefPartition]:
    """All nef-partitions of ``delta`` into exactly ``r`` unlabeled parts.

    Candidates are every set partition of the vertex indices; no symmetry
    reduction is applied. The result is sorted by canonical part lists.
    ``threads`` > 1 validates candidates on a thread pool; the merge order
    is deterministic either way.
    """
    if not delta.is_reflexive():
        raise NotReflexive("nef-partitions are defined on reflexive polytopes")
    candidates = list(_set_partitions(len(delta.vertices), r))

    def check(cand):
        res = validate_partition(delta, cand)
        return res if isinstance(res, NefPartition) else None

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(check, candidates))
    else:
        results = [check(c) for c in candidates]
    found = [np for np in results if np is not None]
    found.sort(key=lambda np: np.canonical_parts())
    return found


@dataclass(frozen=True)
class RelationReport:
    """Pairing minima between delta part vertices and nabla part vertices.

    ``matrix[j][i]`` is the minimum of ``<x, y>`` over vertices x of delta
    part j and vertices y of nabla part i; a valid nef-partition gives -1 on
    the diagonal and 0 off it, with no pairing below that bound.
    """

    matrix: tuple[tuple[Fraction, ...], ...]
    passed: bool
    violations: tuple[tuple[int, int, Fraction], ...]
    phi_consistent: bool

    def __bool__(self) -> bool:
        return self.passed and self.phi_consistent


def check_relations(np: NefPartition) -> RelationReport:
    """Verify the pairing relations between the delta and nabla parts.

    Also re-derives every ``phi_i`` vertex value as the negated minimum of
    the pairing against nabla part i, confirming the two descriptions agree.
    """
    r = np.r
    matrix = []
    violations = []
    for j in range(r):
        row = []
        for i in range(r):
            pairs = [
                pair(x, y)
                for x in np.delta_parts[j].vertices
                for y in np.nabla_parts[i].vertices
            ]
            m = min(pairs)
            row.append(m)
            expected = Fraction(-1 if i == j else 0)
            if m != expected or any(p < expected for p in pairs):
                violations.append((j, i, m))
        matrix.append(tuple(row))
    phi_ok = True
    for i, f in enumerate(np.phi):
        for vi, x in enumerate(np.delta.vertices):
            derived = -min(pair(x, y) for y in np.nabla_parts[i].vertices)
            if derived != f.vertex_values[vi]:
                phi_ok = False
    return RelationReport(
        matrix=tuple(matrix),
        passed=not violations,
        violations=tuple(violations),
        phi_consistent=phi_ok,
    )
