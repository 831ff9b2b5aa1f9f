"""The mirror construction: nabla, the dual partition, and the check suite."""

from fractions import Fraction

from nefdual.duality import (
    dual_nef_partition,
    nabla,
    run_full_duality,
    verify_delta_parts_from_dual,
    verify_involution,
    verify_nabla_polar_is_delta_sum,
    verify_nabla_reflexive,
    verify_polar_is_nabla_sum,
)
from nefdual.nefpart import NefPartition, validate_partition
from nefdual.polytope import Point, SPACE_N, hull, minkowski_sum

F = Fraction

CHECK_KEYS = (
    "polar_is_nabla_sum",
    "nabla_polar_is_delta_sum",
    "nabla_reflexive",
    "pairing_relations",
    "delta_parts_from_dual",
    "involution",
)


def P(*coords):
    return Point(coords)


def N(*coords):
    return Point(coords, SPACE_N)


CROSS = hull([P(1, 0), P(0, 1), P(-1, 0), P(0, -1)])
OCTA = hull([P(1, 0, 0), P(0, 1, 0), P(0, 0, 1), P(-1, 0, 0), P(0, -1, 0), P(0, 0, -1)])
HEXAGON = hull([P(1, 0), P(0, 1), P(1, 1), P(-1, 0), P(0, -1), P(-1, -1)])

CROSS_N = hull([N(1, 0), N(0, 1), N(-1, 0), N(0, -1)])
HEXAGON_N = hull([N(1, 0), N(0, 1), N(1, 1), N(-1, 0), N(0, -1), N(-1, -1)])


def part_of(base, *coord_tuples):
    return frozenset(base.vertex_index(P(*c)) for c in coord_tuples)


def axis_partition():
    return validate_partition(
        CROSS, [part_of(CROSS, (1, 0), (-1, 0)), part_of(CROSS, (0, 1), (0, -1))]
    )


def diagonal_partition():
    return validate_partition(
        CROSS, [part_of(CROSS, (1, 0), (0, 1)), part_of(CROSS, (-1, 0), (0, -1))]
    )


def octa_single_vertex_partition():
    rest = [(0, 1, 0), (0, 0, 1), (-1, 0, 0), (0, -1, 0), (0, 0, -1)]
    return validate_partition(
        OCTA, [part_of(OCTA, (1, 0, 0)), part_of(OCTA, *rest)]
    )


def dual_part_vertex_sets(dual):
    return {
        frozenset(dual.delta.vertices[i] for i in part) for part in dual.parts
    }


def test_nabla_axis_is_self_mirror():
    assert nabla(axis_partition()) == CROSS_N


def test_nabla_diagonal_is_hexagon():
    assert nabla(diagonal_partition()) == HEXAGON_N


def test_nabla_single_part_is_polar(corpus):
    for entry in corpus:
        if not entry.reflexive:
            continue
        poly = entry.polytope
        np_ = validate_partition(poly, [range(len(poly.vertices))])
        assert nabla(np_) == poly.polar_dual()


def test_polar_is_nabla_sum_axis():
    np_ = axis_partition()
    check = verify_polar_is_nabla_sum(np_)
    assert check.passed
    seg_sum = minkowski_sum(*np_.nabla_parts)
    assert seg_sum == hull([N(1, 1), N(1, -1), N(-1, 1), N(-1, -1)])


def test_nabla_polar_is_delta_sum_octahedron():
    np_ = octa_single_vertex_partition()
    assert verify_nabla_polar_is_delta_sum(np_).passed
    expected = minkowski_sum(np_.delta_parts[0], np_.delta_parts[1])
    assert nabla(np_).polar_dual() == expected
    assert expected.is_lattice()


def test_nabla_reflexive_examples():
    assert verify_nabla_reflexive(axis_partition()).passed
    assert verify_nabla_reflexive(diagonal_partition()).passed
    assert verify_nabla_reflexive(octa_single_vertex_partition()).passed


def test_dual_partition_axis_is_same_combinatorial_datum():
    dual = dual_nef_partition(axis_partition())
    assert dual.delta == CROSS_N
    assert dual_part_vertex_sets(dual) == {
        frozenset({N(-1, 0), N(1, 0)}),
        frozenset({N(0, -1), N(0, 1)}),
    }


def test_dual_partition_hexagon_parts_exclude_origin():
    dual = dual_nef_partition(diagonal_partition())
    assert dual.delta == HEXAGON_N
    assert dual_part_vertex_sets(dual) == {
        frozenset({N(-1, -1), N(-1, 0), N(0, -1)}),
        frozenset({N(1, 1), N(1, 0), N(0, 1)}),
    }


def test_dual_partition_single_part_is_polar_duality(corpus_by_name):
    poly = corpus_by_name["triangle"].polytope
    np_ = validate_partition(poly, [range(len(poly.vertices))])
    dual = dual_nef_partition(np_)
    assert dual.delta == poly.polar_dual()
    assert dual.parts == (frozenset(range(len(dual.delta.vertices))),)


def test_dual_partition_octahedron_excludes_zero_vertex():
    """0 is a vertex of the first nabla part here, but never of nabla itself."""
    np_ = octa_single_vertex_partition()
    zero = N(0, 0, 0)
    assert zero in np_.nabla_parts[0].vertices
    dual = dual_nef_partition(np_)
    assert zero not in dual.delta.vertices
    sizes = sorted(len(part) for part in dual.parts)
    assert sizes == [1, 8]
    assert dual_part_vertex_sets(dual) >= {frozenset({N(-1, 0, 0)})}


def test_delta_parts_recovered_from_dual():
    for np_ in (axis_partition(), diagonal_partition(), octa_single_vertex_partition()):
        assert verify_delta_parts_from_dual(np_).passed

    dual = dual_nef_partition(diagonal_partition())
    assert dual.nabla_parts[0] == hull([P(0, 0), P(1, 0), P(0, 1)])


def test_involution_examples():
    assert verify_involution(axis_partition()).passed
    assert verify_involution(diagonal_partition()).passed
    assert verify_involution(octa_single_vertex_partition()).passed


def test_involution_from_the_hexagon_side():
    """Running the construction on the mirror datum lands back on the cross."""
    np_ = validate_partition(
        HEXAGON,
        [part_of(HEXAGON, (1, 0), (0, 1), (1, 1)),
         part_of(HEXAGON, (-1, 0), (0, -1), (-1, -1))],
    )
    assert isinstance(np_, NefPartition)
    dual = dual_nef_partition(np_)
    assert dual.delta == CROSS_N
    assert dual_part_vertex_sets(dual) == {
        frozenset({N(-1, 0), N(0, -1)}),
        frozenset({N(1, 0), N(0, 1)}),
    }
    assert verify_involution(np_).passed


def test_run_full_duality_reports_all_checks():
    result = run_full_duality(octa_single_vertex_partition())
    assert tuple(result.checks.keys()) == CHECK_KEYS
    assert result.all_passed
    assert all(result.checks[k].name == k for k in CHECK_KEYS)
    assert result.nabla == nabla(result.source)
    assert len(result.psi) == result.source.r
