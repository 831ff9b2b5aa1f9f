"""Validating vertex partitions of a reflexive polytope.

A partition of the vertices is a nef-partition when each part's indicator
extends to an integral convex PL function on the face fan. The validator
either returns the full datum (with the Minkowski summands already
computed) or a rejection naming the first part and cone that fail.
"""

from nefdual import NefPartition, Point, check_relations, hull, validate_partition

def fmt(point):
    return "(" + ", ".join(str(c) for c in point.coords) + ")"


cross = hull([Point(c) for c in [(1, 0), (0, 1), (-1, 0), (0, -1)]])
idx = {tuple(v.coords): i for i, v in enumerate(cross.vertices)}


def attempt(label, parts_by_coords):
    parts = [[idx[c] for c in part] for part in parts_by_coords]
    out = validate_partition(cross, parts)
    print(f"{label}: ", end="")
    if isinstance(out, NefPartition):
        print(f"valid, r={out.r}")
        for i, nab in enumerate(out.nabla_parts):
            print(f"  nabla part {i}:", " ".join(fmt(v) for v in nab.vertices))
        rel = check_relations(out)
        rows = "; ".join(" ".join(str(x) for x in row) for row in rel.matrix)
        print(f"  pairing matrix: [{rows}]")
    else:
        print(out)
    print()
    return out


attempt("axis split {e1,-e1} | {e2,-e2}",
        [[(1, 0), (-1, 0)], [(0, 1), (0, -1)]])
attempt("diagonal split {e1,e2} | {-e1,-e2}",
        [[(1, 0), (0, 1)], [(-1, 0), (0, -1)]])

# structural failures are reported before any geometry runs
attempt("overlapping parts", [[(1, 0), (0, 1)], [(0, 1), (-1, 0), (0, -1)]])
attempt("missing a vertex", [[(1, 0)], [(0, 1), (-1, 0)]])

# the square has no nef-partition with two parts at all: every bipartition
# of its vertices hits a non-integral cone functional
square = hull([Point((x, y)) for x in (-1, 1) for y in (-1, 1)])
out = validate_partition(square, [[3], [0, 1, 2]])
print("square corner vs rest:", out)
