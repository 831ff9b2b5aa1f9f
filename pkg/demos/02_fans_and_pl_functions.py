"""Face fans and integral convex piecewise-linear functions.

The face fan of a polytope with interior origin has one full-dimensional
cone per facet. A function assigning a value to each vertex extends to a
PL function when the values on each facet cone come from a single linear
functional; that functional is solved for exactly, cone by cone.
"""

from nefdual import Point, face_fan, hull, pl_from_vertex_values, support_polytope


def fmt(point):
    return "(" + ", ".join(str(c) for c in point.coords) + ")"


cross = hull([Point(c) for c in [(1, 0), (0, 1), (-1, 0), (0, -1)]])
fan = face_fan(cross)
print(f"face fan of the cross: {len(fan)} cones")
for cone in fan:
    gens = " ".join(fmt(cross.vertices[i]) for i in cone.vertex_indices)
    print(f"  cone {cone.index}: generated by {gens}")
print()

# indicator of {e1, e2}: 1 on those vertices, 0 on the others
# canonical vertex order is lexicographic: (-1,0), (0,-1), (0,1), (1,0)
phi = pl_from_vertex_values(fan, [0, 0, 1, 1])
print("indicator of {e1, e2} on the cross:")
print("  functionals per cone:", " ".join(fmt(u) for u in phi.functionals))
print("  integral:", phi.is_integral, " convex:", phi.is_convex)
for point in [(1, 0), (2, 3), (-1, -1)]:
    print(f"  value at {point}: {phi.evaluate(Point(point))}")
print()

supp = support_polytope(phi)
print("support polytope {y : <x,y> >= -phi(x)}:",
      " ".join(fmt(v) for v in supp.vertices))
print()

# same game on the square fails: the corner indicator needs a half-integral
# functional, so it is PL and convex but not integral
square = hull([Point((x, y)) for x in (-1, 1) for y in (-1, 1)])
sq_fan = face_fan(square)
corner = pl_from_vertex_values(sq_fan, [0, 0, 0, 1])
print("corner indicator on the square:")
print("  integral:", corner.is_integral, " convex:", corner.is_convex)
bad = corner.first_nonintegral_cone()
print("  first non-integral cone:", bad,
      "with functional", fmt(corner.functionals[bad]))
