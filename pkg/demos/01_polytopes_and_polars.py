"""Tour of the exact polytope kernel.

Builds a few lattice polytopes, inspects vertices and facets, and shows
polar duality round-tripping without any numerical error. Everything is a
``fractions.Fraction``, so ``==`` below means actual equality, not
closeness.

Run as: python3 demos/01_polytopes_and_polars.py
"""

from nefdual import Point, hull, minkowski_sum


def fmt(point):
    return "(" + ", ".join(str(c) for c in point.coords) + ")"


def show(label, poly):
    print(f"{label}: {len(poly.vertices)} vertices")
    print("  vertices:", " ".join(fmt(v) for v in poly.vertices))
    for f in poly.facets:
        print(f"  facet: <x, {fmt(f.normal)}> >= -{f.offset}")


def main():
    square = hull([Point((x, y)) for x in (-1, 1) for y in (-1, 1)])
    show("square [-1,1]^2", square)

    cross = square.polar_dual()
    show("its polar (the 2d cross-polytope)", cross)
    print("polar of the polar returns the square exactly:",
          cross.polar_dual() == square)
    print()

    # reflexive: lattice vertices, 0 interior, every facet at lattice distance 1
    print("square reflexive:", square.is_reflexive())
    big = hull([Point((2 * x, 2 * y)) for x in (-1, 1) for y in (-1, 1)])
    print("[-2,2]^2 reflexive:", big.is_reflexive())
    print("  because its polar has vertices",
          " ".join(fmt(v) for v in big.polar_dual().vertices))
    print()

    print("lattice points of the cross:",
          " ".join(fmt(p) for p in cross.lattice_points()))
    print()

    seg_x = hull([Point((-1, 0)), Point((1, 0))])
    seg_y = hull([Point((0, -1)), Point((0, 1))])
    print("segment + segment = square:",
          minkowski_sum(seg_x, seg_y) == square)


if __name__ == "__main__":
    main()
