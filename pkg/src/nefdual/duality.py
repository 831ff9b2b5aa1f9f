"""The mirror construction on nef-partitions and its verification suite.

From a nef-partition of a reflexive polytope this module builds the nabla
polytope (hull of the union of the nabla parts), the dual nef-partition
living on it, and exact pass/fail checks for the identities that tie the
two sides together: the polar of each side is the Minkowski sum of the
other side's parts, nabla is reflexive, the pairing relations hold on both
sides, the delta parts are recovered as support polytopes of the dual's PL
functions, and applying the construction twice is the identity.

All checks are exact; a returned CheckResult carries a witness on failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Mapping

from .errors import InvariantViolation
from .nefpart import NefPartition, Rejection, check_relations, validate_partition
from .polytope import Polytope, hull, minkowski_sum, pair


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one exact verification."""

    name: str
    passed: bool
    witness: object = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.passed


@dataclass(frozen=True)
class DualityResult:
    """Everything run_full_duality computed: both sides plus the check record."""

    source: NefPartition
    nabla: Polytope
    dual: NefPartition
    checks: Mapping[str, CheckResult]

    @property
    def psi(self):
        """The dual side's PL functions, one per part."""
        return self.dual.phi

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks.values())


def nabla(np: NefPartition) -> Polytope:
    """Hull of the union of the nabla parts, confirmed to sit inside the polar."""
    nb = hull([v for part in np.nabla_parts for v in part.vertices])
    polar = np.delta.polar_dual()
    for v in nb.vertices:
        if not polar.contains(v):
            raise InvariantViolation("nabla vertex escapes the polar", witness=v)
    return nb


def verify_polar_is_nabla_sum(np: NefPartition) -> CheckResult:
    """Polar of the base polytope equals the Minkowski sum of the nabla parts."""
    polar = np.delta.polar_dual()
    total = reduce(minkowski_sum, np.nabla_parts)
    if polar == total:
        return CheckResult("polar_is_nabla_sum", True)
    return CheckResult(
        "polar_is_nabla_sum",
        False,
        witness={
            "polar_vertices": [v.coords for v in polar.vertices],
            "sum_vertices": [v.coords for v in total.vertices],
        },
    )


def verify_nabla_polar_is_delta_sum(np: NefPartition) -> CheckResult:
    """Polar of nabla equals the Minkowski sum of the delta parts, and is lattice."""
    nb = nabla(np)
    polar = nb.polar_dual()
    total = reduce(minkowski_sum, np.delta_parts)
    detail = "nabla polar is a lattice polytope" if polar.is_lattice() else ""
    if polar == total and polar.is_lattice():
        return CheckResult("nabla_polar_is_delta_sum", True, detail=detail)
    return CheckResult(
        "nabla_polar_is_delta_sum",
        False,
        witness={
            "nabla_polar_vertices": [v.coords for v in polar.vertices],
            "sum_vertices": [v.coords for v in total.vertices],
        },
    )


def verify_nabla_reflexive(np: NefPartition) -> CheckResult:
    nb = nabla(np)
    if nb.is_reflexive():
        return CheckResult("nabla_reflexive", True)
    return CheckResult(
        "nabla_reflexive",
        False,
        witness=[v.coords for v in nb.vertices],
    )


def dual_nef_partition(np: NefPartition) -> NefPartition:
    """The mirror nef-partition on the nabla polytope.

    Part i of the dual collects the nonzero vertices of nabla part i; the
    origin, which can be a genuine vertex of a nabla part, carries no
    indicator weight and is excluded. The resulting partition is validated
    on nabla from scratch, and each dual PL function is cross-checked
    against the pairing formula: psi_i at a vertex y equals the negated
    minimum of <x, y> over delta part i, and every cone functional of
    psi_i is the negative of a vertex of delta part i.
    """
    nb = nabla(np)
    index_of = {v: i for i, v in enumerate(nb.vertices)}
    parts = []
    for i, part_poly in enumerate(np.nabla_parts):
        idxs = set()
        for v in part_poly.vertices:
            if v.is_zero():
                continue
            if v not in index_of:
                raise InvariantViolation(
                    f"nonzero vertex of nabla part {i} is not a vertex of nabla",
                    witness=v,
                )
            idxs.add(index_of[v])
        parts.append(frozenset(idxs))

    result = validate_partition(nb, parts)
    if isinstance(result, Rejection):
        raise InvariantViolation(
            "dual partition failed validation", witness=str(result)
        )

    for i, psi in enumerate(result.phi):
        delta_part_verts = np.delta_parts[i].vertices
        for vi, y in enumerate(nb.vertices):
            derived = -min(pair(x, y) for x in delta_part_verts)
            if psi.vertex_values[vi] != derived:
                raise InvariantViolation(
                    "dual PL value disagrees with the pairing formula",
                    witness=(i, y, psi.vertex_values[vi], derived),
                )
        vert_set = set(delta_part_verts)
        for u in psi.functionals:
            if -u not in vert_set:
                raise InvariantViolation(
                    "dual cone functional is not the negative of a delta part vertex",
                    witness=(i, u),
                )
    return result


def verify_delta_parts_from_dual(
    np: NefPartition, dual: NefPartition | None = None
) -> CheckResult:
    """Each delta part is recovered as the support polytope of the dual's psi_i."""
    if dual is None:
        dual = dual_nef_partition(np)
    for i in range(np.r):
        if dual.nabla_parts[i] != np.delta_parts[i]:
            return CheckResult(
                "delta_parts_from_dual",
                False,
                witness={
                    "part": i,
                    "recovered": [v.coords for v in dual.nabla_parts[i].vertices],
                    "expected": [v.coords for v in np.delta_parts[i].vertices],
                },
            )
    return CheckResult("delta_parts_from_dual", True)


def verify_involution(np: NefPartition, dual: NefPartition | None = None) -> CheckResult:
    """Applying the construction twice returns the original datum.

    The base polytopes must agree exactly and the part families must agree
    as unlabeled families of vertex-index sets.
    """
    if dual is None:
        dual = dual_nef_partition(np)
    double = dual_nef_partition(dual)
    if double.delta != np.delta:
        return CheckResult(
            "involution",
            False,
            witness={
                "original_vertices": [v.coords for v in np.delta.vertices],
                "double_dual_vertices": [v.coords for v in double.delta.vertices],
            },
        )
    if double.unlabeled() != np.unlabeled():
        return CheckResult(
            "involution",
            False,
            witness={
                "original_parts": sorted(sorted(p) for p in np.parts),
                "double_dual_parts": sorted(sorted(p) for p in double.parts),
            },
        )
    return CheckResult("involution", True)


def run_full_duality(np: NefPartition) -> DualityResult:
    """Build the dual datum and run every check, collecting exact results."""
    nb = nabla(np)
    dual = dual_nef_partition(np)

    rel_src = check_relations(np)
    rel_dual = check_relations(dual)
    relations = CheckResult(
        "pairing_relations",
        bool(rel_src) and bool(rel_dual),
        witness=None
        if bool(rel_src) and bool(rel_dual)
        else {
            "source_matrix": [[str(x) for x in row] for row in rel_src.matrix],
            "dual_matrix": [[str(x) for x in row] for row in rel_dual.matrix],
        },
        detail="pairing minima on both sides",
    )

    checks = {
        "polar_is_nabla_sum": verify_polar_is_nabla_sum(np),
        "nabla_polar_is_delta_sum": verify_nabla_polar_is_delta_sum(np),
        "nabla_reflexive": verify_nabla_reflexive(np),
        "pairing_relations": relations,
        "delta_parts_from_dual": verify_delta_parts_from_dual(np, dual),
        "involution": verify_involution(np, dual),
    }
    return DualityResult(source=np, nabla=nb, dual=dual, checks=checks)
