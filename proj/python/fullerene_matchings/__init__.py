"""Perfect matchings of fullerene graphs."""

from ._core import (
    FullereneError,
    FullereneGraph,
    PlanarGraph,
    analyze,
    brute_enumerate,
    build_from_rotation,
    count_perfect_matchings,
    dodecahedron,
    emit_rotation_text,
    encode_planar_code,
    leapfrog,
    lower_bounds,
    parse_planar_code,
    parse_rotation_text,
    select_witnesses,
    validate_fullerene,
)

__all__ = [
    "FullereneError",
    "FullereneGraph",
    "PlanarGraph",
    "analyze",
    "brute_enumerate",
    "build_from_rotation",
    "count_perfect_matchings",
    "dodecahedron",
    "emit_rotation_text",
    "encode_planar_code",
    "leapfrog",
    "lower_bounds",
    "parse_planar_code",
    "parse_rotation_text",
    "select_witnesses",
    "validate_fullerene",
]
