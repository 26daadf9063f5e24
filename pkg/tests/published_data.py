"""Frozen reference values for the six-vertex alternating-cycle example and
the two-vertex chain-extension example.

Families are written in per-vertex digit shorthand ("" empty, "12" = {1,2});
subdimension vectors and inequality supports are plain tuples.
"""

# The 59 intersecting positions of expected dimension zero in the ambient
# ({1,2},...,{1,2}), one representative per symmetry orbit.  Representatives
# minimize (cardinality vector, per-vertex subset bitmasks).
HEXAGON_EDIM0_FAMILIES = [
    ("", "", "", "", "", ""),
    ("", "", "", "", "", "1"),
    ("", "", "", "", "", "12"),
    ("", "", "", "1", "", "1"),
    ("", "", "", "1", "", "12"),
    ("", "", "", "1", "2", "2"),
    ("", "", "", "2", "1", "2"),
    ("", "", "", "1", "2", "12"),
    ("", "", "", "2", "1", "12"),
    ("", "", "", "12", "", "12"),
    ("", "", "", "12", "1", "12"),
    ("", "", "", "12", "12", "12"),
    ("", "1", "", "1", "", "1"),
    ("", "1", "", "1", "", "12"),
    ("", "1", "", "1", "2", "2"),
    ("", "1", "", "2", "1", "2"),
    ("", "1", "", "1", "2", "12"),
    ("", "1", "", "2", "1", "12"),
    ("", "1", "", "12", "", "12"),
    ("", "1", "", "12", "1", "12"),
    ("", "1", "", "12", "12", "12"),
    ("", "1", "2", "2", "", "12"),
    ("", "2", "1", "2", "", "12"),
    ("", "1", "2", "2", "2", "2"),
    ("", "2", "1", "2", "2", "2"),
    ("", "2", "2", "1", "2", "2"),
    ("", "1", "2", "2", "2", "12"),
    ("", "2", "1", "2", "2", "12"),
    ("", "2", "2", "1", "2", "12"),
    ("", "2", "2", "2", "1", "12"),
    ("", "1", "2", "12", "", "12"),
    ("", "2", "1", "12", "", "12"),
    ("", "1", "2", "12", "1", "2"),
    ("", "1", "2", "12", "2", "1"),
    ("", "2", "1", "12", "1", "2"),
    ("", "1", "2", "12", "1", "12"),
    ("", "2", "1", "12", "1", "12"),
    ("", "1", "2", "12", "12", "12"),
    ("", "2", "1", "12", "12", "12"),
    ("", "12", "", "12", "", "12"),
    ("", "12", "", "12", "1", "12"),
    ("", "12", "", "12", "12", "12"),
    ("", "12", "1", "2", "2", "12"),
    ("", "12", "2", "1", "2", "12"),
    ("", "12", "1", "12", "1", "12"),
    ("", "12", "1", "12", "12", "12"),
    ("", "12", "12", "12", "12", "12"),
    ("2", "2", "2", "2", "2", "2"),
    ("1", "2", "2", "2", "2", "12"),
    ("2", "1", "2", "2", "2", "12"),
    ("2", "2", "1", "2", "2", "12"),
    ("1", "2", "2", "12", "1", "12"),
    ("2", "1", "2", "12", "1", "12"),
    ("1", "2", "2", "12", "12", "12"),
    ("2", "1", "2", "12", "12", "12"),
    ("1", "12", "1", "12", "1", "12"),
    ("1", "12", "1", "12", "12", "12"),
    ("1", "12", "12", "12", "12", "12"),
    ("12", "12", "12", "12", "12", "12"),
]

# The 39 generic subdimension vectors of (2,...,2), one per symmetry orbit,
# lexicographically least representatives.
HEXAGON_SCHOFIELD_VECTORS = [
    (0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 1),
    (0, 0, 0, 0, 0, 2),
    (0, 0, 0, 1, 0, 1),
    (0, 0, 0, 1, 0, 2),
    (0, 0, 0, 1, 1, 1),
    (0, 0, 0, 1, 1, 2),
    (0, 0, 0, 2, 0, 2),
    (0, 0, 0, 2, 1, 2),
    (0, 0, 0, 2, 2, 2),
    (0, 1, 0, 1, 0, 1),
    (0, 1, 0, 1, 0, 2),
    (0, 1, 0, 1, 1, 1),
    (0, 1, 0, 1, 1, 2),
    (0, 1, 0, 2, 0, 2),
    (0, 1, 0, 2, 1, 2),
    (0, 1, 0, 2, 2, 2),
    (0, 1, 1, 1, 0, 2),
    (0, 1, 1, 1, 1, 1),
    (0, 1, 1, 1, 1, 2),
    (0, 1, 1, 2, 0, 2),
    (0, 1, 1, 2, 1, 1),
    (0, 1, 1, 2, 1, 2),
    (0, 1, 1, 2, 2, 2),
    (0, 2, 0, 2, 0, 2),
    (0, 2, 0, 2, 1, 2),
    (0, 2, 0, 2, 2, 2),
    (0, 2, 1, 1, 1, 2),
    (0, 2, 1, 2, 1, 2),
    (0, 2, 1, 2, 2, 2),
    (0, 2, 2, 2, 2, 2),
    (1, 1, 1, 1, 1, 1),
    (1, 1, 1, 1, 1, 2),
    (1, 1, 1, 2, 1, 2),
    (1, 1, 1, 2, 2, 2),
    (1, 2, 1, 2, 1, 2),
    (1, 2, 1, 2, 2, 2),
    (1, 2, 2, 2, 2, 2),
    (2, 2, 2, 2, 2, 2),
]

# The minimal defining inequalities of the weight cone, up to symmetry,
# beyond the dominance rows, the sign rows (level 2 nonnegative at odd
# vertices, level 1 nonpositive at even vertices), and the trace equality.
# Each entry lists the (vertex, level) pairs with coefficient one; "A" means
# both levels of that vertex.
HEXAGON_FACET_SUPPORTS = [
    (("1", 1), ("2", 2), ("6", 2)),
    (("1", 2), ("2", 1), ("6", 2)),
    (("1", 1), ("2", 2), ("3", 2), ("4", 2), ("6", 2)),
    (("1", 2), ("2", 1), ("3", 2), ("4", 2), ("6", 2)),
    (("1", 2), ("2", 1), ("4", 2), ("5", 2), ("6", 2)),
    (("1", "A"), ("2", "A"), ("6", "A")),
    (("1", 1), ("2", "A"), ("3", 1), ("4", 2), ("6", 2)),
    (("1", 1), ("2", "A"), ("3", 2), ("4", 1), ("6", 2)),
    (("1", 2), ("2", "A"), ("3", 2), ("4", 1), ("6", 1)),
    (("1", 1), ("2", "A"), ("3", 2), ("4", 2), ("5", 2), ("6", 2)),
    (("1", 1), ("2", 2), ("3", 2), ("4", "A"), ("5", 2), ("6", 2)),
    (("1", 2), ("2", "A"), ("3", 2), ("4", 1), ("5", 2), ("6", 2)),
    (("1", "A"), ("2", "A"), ("3", 1), ("4", 2), ("5", 2), ("6", "A")),
    (("1", "A"), ("2", "A"), ("3", 2), ("4", 1), ("5", 2), ("6", "A")),
]

# The 7 positions inside K = ({1,2}, {1,2}) on the single-arrow quiver whose
# generic intersection is one point, and the 12 generic subdimension vectors
# with the single-point property on the chain extension, in coordinate order
# ((a,1), (a,2), (b,2), (b,1)).
SINGLE_ARROW_POINT_FAMILIES = [
    ("", ""),
    ("", "1"),
    ("", "12"),
    ("1", "2"),
    ("1", "12"),
    ("2", "1"),
    ("12", "12"),
]

SINGLE_ARROW_EXTENSION_POINT_VECTORS = [
    (0, 0, 0, 0),
    (0, 0, 1, 1),
    (0, 0, 2, 0),
    (0, 0, 2, 1),
    (0, 1, 1, 1),
    (0, 2, 2, 0),
    (0, 2, 2, 1),
    (1, 1, 1, 0),
    (1, 1, 2, 0),
    (1, 1, 2, 1),
    (1, 2, 2, 0),
    (1, 2, 2, 1),
]


def parse_shorthand_tuple(parts, vertices):
    return {v: tuple(int(c) for c in part) for v, part in zip(vertices, parts)}
