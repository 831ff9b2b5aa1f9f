"""Plain-text polytope files and partition specs.

A polytope file has a header line ``d n`` (dimension, point count) followed
by n lines of d whitespace-separated coordinates, each an integer or an
exact rational ``p/q``. Lines starting with ``#`` and blank lines are
ignored. The order of the points in the file is kept as the user-facing
index order; the parsed polytope itself is canonical.

A partition spec is ``i1,i2,...;j1,j2,...`` with zero-based indices into
the file order.
"""

from __future__ import annotations

from fractions import Fraction

from .polytope import Point, Polytope, SPACE_M, hull


class PolytopeParseError(ValueError):
    """Malformed polytope file or partition spec."""


def _parse_rational(token: str) -> Fraction:
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise PolytopeParseError(f"bad coordinate {token!r}") from exc
    return value


def parse_polytope_text(text: str, space: str = SPACE_M):
    """Parse a polytope file.

    Returns ``(polytope, file_points)`` where ``file_points`` preserves the
    order the points appear in the file.
    """
    lines = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise PolytopeParseError("empty polytope file")
    header = lines[0].split()
    if len(header) != 2:
        raise PolytopeParseError(f"header must be 'd n', got {lines[0]!r}")
    try:
        dim, count = int(header[0]), int(header[1])
    except ValueError as exc:
        raise PolytopeParseError(f"header must be 'd n', got {lines[0]!r}") from exc
    if dim < 1:
        raise PolytopeParseError(f"dimension must be positive, got {dim}")
    if count < 1:
        raise PolytopeParseError(f"point count must be positive, got {count}")
    body = lines[1:]
    if len(body) != count:
        raise PolytopeParseError(
            f"expected {count} coordinate lines, found {len(body)}"
        )
    points = []
    for line in body:
        tokens = line.split()
        if len(tokens) != dim:
            raise PolytopeParseError(
                f"expected {dim} coordinates per line, got {line!r}"
            )
        points.append(Point((_parse_rational(t) for t in tokens), space))
    return hull(points), points


def parse_polytope_file(path, space: str = SPACE_M):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_polytope_text(fh.read(), space)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def write_polytope_text(p: Polytope) -> str:
    """Serialize in canonical vertex order; parsing the result round-trips."""
    lines = [f"{p.ambient_dim} {len(p.vertices)}"]
    for v in p.vertices:
        lines.append(" ".join(format_rational(c) for c in v.coords))
    return "\n".join(lines) + "\n"


def parse_partition_spec(text: str, n_points: int) -> list[list[int]]:
    """Parse ``i1,i2,...;j1,j2,...`` into index lists over the file order.

    Rejects syntax errors, out-of-range indices, and indices repeated
    within or across parts.
    """
    spec = text.strip()
    if not spec:
        raise PolytopeParseError("empty partition spec")
    parts = []
    seen: set[int] = set()
    for chunk in spec.split(";"):
        chunk = chunk.strip()
        if not chunk:
            raise PolytopeParseError("empty part in partition spec")
        indices = []
        for tok in chunk.split(","):
            tok = tok.strip()
            if not tok or not (tok.isdigit() or (tok[0] == "-" and tok[1:].isdigit())):
                raise PolytopeParseError(f"bad index {tok!r} in partition spec")
            idx = int(tok)
            if idx < 0 or idx >= n_points:
                raise PolytopeParseError(
                    f"index {idx} out of range 0..{n_points - 1}"
                )
            if idx in seen:
                raise PolytopeParseError(f"index {idx} repeated in partition spec")
            seen.add(idx)
            indices.append(idx)
        parts.append(indices)
    return parts


def file_to_canonical_map(polytope: Polytope, file_points: list[Point]) -> list[int]:
    """Map file order to canonical vertex indices.

    Every file point must be a distinct vertex of the polytope, otherwise
    partition indices would be ambiguous.
    """
    seen: set[int] = set()
    mapping = []
    for k, p in enumerate(file_points):
        try:
            idx = polytope.vertex_index(p)
        except ValueError as exc:
            raise PolytopeParseError(
                f"file point #{k} {tuple(str(c) for c in p.coords)} is not a vertex"
            ) from exc
        if idx in seen:
            raise PolytopeParseError(f"file point #{k} repeats an earlier vertex")
        seen.add(idx)
        mapping.append(idx)
    return mapping
