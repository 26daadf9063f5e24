"""Chain-extension bridge: filtered positions as ordinary subdimension vectors.

Extending each vertex x by a chain of new vertices carrying the flag steps of
V_x turns a Schubert-position query on the original quiver into a plain
subdimension-vector query on the extended quiver.  Both decision paths must
agree; the comparison is the strongest internal consistency check in the
package.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Quiver, SubsetFamily, check_family, normalize_family
from .errors import DomainError
from .horn import schofield_member


@dataclass(frozen=True)
class AugmentedQuiver:
    """The extended quiver, its dimension vector (value i at chain level i),
    and the map sending each extended vertex to the original vertex it refines.
    """

    quiver: Quiver
    dims: dict[str, int]
    origin: dict[str, str]


def chain_vertex(x: str, i: int) -> str:
    return f"({x},{i})"


def augment(q: Quiver, n) -> AugmentedQuiver:
    """Insert, for every vertex x with n_x >= 1, the chain
    (x,1) -> ... -> (x,n_x-1) -> x, and set the dimension at level i to i.
    Chain vertices precede their terminal vertex in the vertex order.
    """
    from .core import check_dimension_vector

    nn = check_dimension_vector(q, n, "n")
    vertices: list[str] = []
    arrows: list[tuple[str, str]] = []
    dims: dict[str, int] = {}
    origin: dict[str, str] = {}
    for x in q.vertices:
        chain = [chain_vertex(x, i) for i in range(1, nn[x])]
        for name in chain:
            if name in q.vertices:
                raise DomainError(f"chain vertex name {name!r} collides with an original vertex")
        vertices.extend(chain)
        vertices.append(x)
        for i, name in enumerate(chain, start=1):
            dims[name] = i
            origin[name] = x
        dims[x] = nn[x]
        origin[x] = x
        arrows.extend(zip(chain, chain[1:] + [x]))
    arrows.extend(q.arrows)
    return AugmentedQuiver(Quiver(vertices, arrows), dims, origin)


def lift_family(k: SubsetFamily, j: SubsetFamily) -> dict[str, int]:
    """Subdimension vector of a position K in a standard ambient J = {1..n_x}:
    the value at chain level i of x is |K_x ∩ {1..i}|.  Satisfies the
    one-step jump condition by construction.
    """
    kn = normalize_family(k, "K")
    jn = normalize_family(j, "J")
    if set(kn) != set(jn):
        raise DomainError("families are defined on different vertex sets")
    out: dict[str, int] = {}
    for x, js in jn.items():
        n_x = len(js)
        if js != tuple(range(1, n_x + 1)):
            raise DomainError(
                f"J[{x!r}] = {js} is not the standard ambient {{1..{n_x}}}; canonicalize positions first"
            )
        if not set(kn[x]) <= set(js):
            raise DomainError(f"K[{x!r}] is not contained in J[{x!r}]")
        for i in range(1, n_x):
            out[chain_vertex(x, i)] = sum(1 for e in kn[x] if e <= i)
        out[x] = len(kn[x])
    return out


def cross_check(q: Quiver, k: SubsetFamily, j: SubsetFamily) -> bool:
    """Decide the position query through the extended quiver: K is
    intersecting in J iff its lift is a valid generic subdimension vector of
    the extension.  Must agree with the direct recursion.
    """
    kn = check_family(q, k, "K")
    jn = check_family(q, j, "J")
    n = {v: len(jn[v]) for v in q.vertices}
    aug = augment(q, n)
    alpha = lift_family(kn, jn)
    return schofield_member(aug.quiver, alpha, aug.dims)


def satisfies_jump_condition(aug: AugmentedQuiver, beta) -> bool:
    """Whether a subdimension vector on the extension increases by at most one
    along every chain (the shape of vectors that arise as lifts of positions).
    """
    for x in set(aug.origin.values()):
        n_x = aug.dims[x]
        seq = [beta[chain_vertex(x, i)] for i in range(1, n_x)] + [beta[x]]
        prev = 0
        for val in seq:
            if val < prev or val > prev + 1:
                return False
            prev = val
    return True
