"""The mirror construction and its involution.

From a nef-partition of Delta the construction produces nabla, the hull of
the Minkowski summands, and a dual nef-partition on it. Applying the same
construction to the dual datum returns the original one. run_full_duality
bundles all the identity checks and reports each one separately.
"""

from nefdual import corpus_entry, run_full_duality, validate_partition


def fmt(point):
    return "(" + ", ".join(str(c) for c in point.coords) + ")"


def canonical_parts(entry, file_parts):
    from nefdual.fileio import file_to_canonical_map

    mapping = file_to_canonical_map(entry.polytope, list(entry.file_points))
    return [[mapping[i] for i in part] for part in file_parts]


def demo(title, entry_name, file_parts):
    print(f"== {title}")
    entry = corpus_entry(entry_name)
    np_ = validate_partition(entry.polytope, canonical_parts(entry, file_parts))
    result = run_full_duality(np_)
    print("nabla vertices:", " ".join(fmt(v) for v in result.nabla.vertices))
    for i, part in enumerate(result.dual.parts):
        coords = " ".join(fmt(result.dual.delta.vertices[k]) for k in sorted(part))
        print(f"dual part {i}: {coords}")
    for name, check in result.checks.items():
        print(f"  {name}: {'pass' if check.passed else 'FAIL'}")
    print()


# file order of the 2d cross: 0=(1,0) 1=(0,1) 2=(-1,0) 3=(0,-1)
demo("axis split of the cross is its own mirror", "cross2d", [[0, 2], [1, 3]])
demo("diagonal split gives the hexagon with parts 3+3", "cross2d", [[0, 1], [2, 3]])

# octahedron with a single-vertex part: nabla part 0 is Conv{0, -e1}, so 0
# is one of its vertices; the dual part keeps only the nonzero one
demo("octahedron, E_1 = {e1}", "octahedron", [[0], [1, 2, 3, 4, 5]])

entry = corpus_entry("octahedron")
np_ = validate_partition(entry.polytope, canonical_parts(entry, [[0], [1, 2, 3, 4, 5]]))
result = run_full_duality(np_)
print("nabla part 0 vertices:",
      " ".join(fmt(v) for v in np_.nabla_parts[0].vertices))
print("involution check on this datum:", result.checks["involution"].passed)
