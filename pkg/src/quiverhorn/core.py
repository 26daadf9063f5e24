"""Quivers, subset families, filtration profiles, and their numeric invariants.

Everything here is combinatorial: a filtered vector space is represented only
through the positions its distinguished subsets occupy, and every quantity
(Euler form, Schubert dimension, expected dimension, filtered hom dimension)
is an exact integer computed from those positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .errors import CapacityError, ContainmentError, DomainError, ProfileError

# Per-vertex data is keyed by vertex identifier (a string).  A dimension
# vector maps vertices to nonnegative ints, a subset family maps vertices to
# strictly increasing tuples of positive ints, and a filtration profile maps
# vertices to nondecreasing dimension sequences starting at 0.
DimensionVector = Mapping[str, int]
SubsetFamily = Mapping[str, Sequence[int]]
FiltrationProfile = Mapping[str, Sequence[int]]


@dataclass(frozen=True)
class Quiver:
    """A finite directed multigraph; loops and parallel arrows are allowed.

    Arrow order is part of the data: it fixes basis order in every matrix
    built downstream.
    """

    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str], ...]

    def __init__(self, vertices: Iterable[str], arrows: Iterable[tuple[str, str]]):
        object.__setattr__(self, "vertices", tuple(vertices))
        object.__setattr__(self, "arrows", tuple((str(s), str(t)) for s, t in arrows))
        if len(set(self.vertices)) != len(self.vertices):
            raise DomainError("vertex identifiers must be unique")
        declared = set(self.vertices)
        for s, t in self.arrows:
            if s not in declared or t not in declared:
                raise DomainError(f"arrow ({s!r}, {t!r}) has an undeclared endpoint")

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def arrow_index_pairs(self) -> tuple[tuple[int, int], ...]:
        ix = self.vertex_index
        return tuple((ix[s], ix[t]) for s, t in self.arrows)

    @cached_property
    def shape_key(self) -> tuple[int, tuple[tuple[int, int], ...]]:
        """Structural fingerprint: vertex count plus the sorted arrow index pairs."""
        return (len(self.vertices), tuple(sorted(self.arrow_index_pairs)))

    def is_acyclic(self) -> bool:
        indeg = [0] * len(self.vertices)
        for _, t in self.arrow_index_pairs:
            indeg[t] += 1
        stack = [v for v, d in enumerate(indeg) if d == 0]
        seen = 0
        while stack:
            v = stack.pop()
            seen += 1
            for s, t in self.arrow_index_pairs:
                if s == v:
                    indeg[t] -= 1
                    if indeg[t] == 0:
                        stack.append(t)
        return seen == len(self.vertices)


@dataclass(frozen=True)
class Automorphism:
    """A vertex permutation of a quiver that preserves the arrow multiset."""

    quiver: Quiver
    mapping: tuple[str, ...]  # image of vertices[i] is mapping[i]

    def __call__(self, vertex: str) -> str:
        return self.mapping[self.quiver.vertex_index[vertex]]

    @property
    def is_identity(self) -> bool:
        return self.mapping == self.quiver.vertices

    def apply_to_family(self, fam: SubsetFamily) -> dict[str, tuple[int, ...]]:
        """Push a per-vertex family forward: the image at sigma(x) is the set at x."""
        return {self(v): tuple(fam[v]) for v in self.quiver.vertices}

    def apply_to_vector(self, vec: Mapping[str, int]) -> dict[str, int]:
        return {self(v): vec[v] for v in self.quiver.vertices}


# ---------------------------------------------------------------------------
# validation helpers


def check_dimension_vector(q: Quiver, n: DimensionVector, name: str = "n") -> dict[str, int]:
    if set(n) != set(q.vertices):
        raise DomainError(f"{name} must be defined exactly on the quiver's vertices")
    out = {}
    for v in q.vertices:
        d = int(n[v])
        if d < 0:
            raise DomainError(f"{name}[{v!r}] is negative")
        out[v] = d
    return out


def normalize_family(fam: SubsetFamily, name: str = "family") -> dict[str, tuple[int, ...]]:
    out = {}
    for v, elems in fam.items():
        t = tuple(sorted(int(e) for e in elems))
        if any(e <= 0 for e in t):
            raise DomainError(f"{name}[{v!r}] must contain positive integers")
        if len(set(t)) != len(t):
            raise DomainError(f"{name}[{v!r}] has repeated elements")
        out[v] = t
    return out


def check_family(q: Quiver, fam: SubsetFamily, name: str = "family") -> dict[str, tuple[int, ...]]:
    if set(fam) != set(q.vertices):
        raise DomainError(f"{name} must be defined exactly on the quiver's vertices")
    return normalize_family(fam, name)


def check_containment(k: SubsetFamily, j: SubsetFamily) -> None:
    """Require K to be a componentwise subset of J, on the same vertex set."""
    if set(k) != set(j):
        raise ContainmentError("families are defined on different vertex sets")
    for v in j:
        if not set(k[v]) <= set(j[v]):
            raise ContainmentError(f"K[{v!r}] = {tuple(k[v])} is not a subset of J[{v!r}] = {tuple(j[v])}")


def check_profile(prof: FiltrationProfile, name: str = "profile") -> dict[str, tuple[int, ...]]:
    out = {}
    for v, seq in prof.items():
        t = tuple(int(d) for d in seq)
        if not t or t[0] != 0:
            raise ProfileError(f"{name}[{v!r}] must start at 0")
        for a, b in zip(t, t[1:]):
            if b < a or b > a + 1:
                raise ProfileError(f"{name}[{v!r}] must be nondecreasing with steps of at most 1")
        out[v] = t
    return out


def position(e: int, s: Sequence[int]) -> int:
    """1-based rank of element e in the increasing sequence s."""
    try:
        return list(s).index(e) + 1
    except ValueError:
        raise DomainError(f"{e} does not occur in {tuple(s)}") from None


# ---------------------------------------------------------------------------
# numeric quantities


def euler_form(q: Quiver, alpha: DimensionVector, beta: DimensionVector) -> int:
    """<alpha, beta> = sum_x alpha_x beta_x - sum_{a: x->y} alpha_x beta_y."""
    a = check_dimension_vector(q, alpha, "alpha")
    b = check_dimension_vector(q, beta, "beta")
    total = sum(a[v] * b[v] for v in q.vertices)
    total -= sum(a[s] * b[t] for s, t in q.arrows)
    return total


def schubert_dim(k: SubsetFamily, j: SubsetFamily) -> int:
    """Dimension of the Schubert variety of position K inside the flag on V(J).

    Per vertex this is the sum over the a-th smallest element of K of
    (its rank in J) - a.
    """
    kn = normalize_family(k, "K")
    jn = normalize_family(j, "J")
    check_containment(kn, jn)
    total = 0
    for v, elems in kn.items():
        ranks = {e: i + 1 for i, e in enumerate(jn[v])}
        total += sum(ranks[e] - a for a, e in enumerate(elems, start=1))
    return total


def edim(q: Quiver, k: SubsetFamily, j: SubsetFamily) -> int:
    """Expected dimension of the generic intersection variety for (K, J).

    schubert_dim(K, J) minus sum over arrows x->y of |K_x| (|J_y| - |K_y|).
    """
    kn = check_family(q, k, "K")
    jn = check_family(q, j, "J")
    total = schubert_dim(kn, jn)
    total -= sum(len(kn[s]) * (len(jn[t]) - len(kn[t])) for s, t in q.arrows)
    return total


def sub_profile(k: SubsetFamily, j: SubsetFamily) -> dict[str, tuple[int, ...]]:
    """Dimension profile of V(K) under the filtration inherited from V(J)."""
    kn = normalize_family(k, "K")
    jn = normalize_family(j, "J")
    check_containment(kn, jn)
    out = {}
    for v, js in jn.items():
        ks = set(kn[v])
        d, seq = 0, [0]
        for e in js:
            if e in ks:
                d += 1
            seq.append(d)
        out[v] = tuple(seq)
    return out


def quotient_profile(k: SubsetFamily, j: SubsetFamily) -> dict[str, tuple[int, ...]]:
    """Dimension profile of V(J)/V(K) under the quotient filtration."""
    sub = sub_profile(k, j)
    return {v: tuple(i - d for i, d in enumerate(seq)) for v, seq in sub.items()}


def full_profile(j: SubsetFamily) -> dict[str, tuple[int, ...]]:
    """Profile of V(J) itself: the complete standard flag (0, 1, ..., |J_x|)."""
    jn = normalize_family(j, "J")
    return {v: tuple(range(len(js) + 1)) for v, js in jn.items()}


def extend_profile(prof: FiltrationProfile, lengths: Mapping[str, int]) -> dict[str, tuple[int, ...]]:
    """Pad each vertex's profile to the requested number of steps by repeating
    its final value; the underlying filtration is unchanged (extra steps add
    the whole space again).
    """
    out = {}
    for v, seq in check_profile(prof).items():
        want = int(lengths[v]) + 1
        if want < len(seq):
            raise ProfileError(f"cannot shorten profile at {v!r} from {len(seq) - 1} to {lengths[v]} steps")
        out[v] = tuple(seq) + (seq[-1],) * (want - len(seq))
    return out


def align_profiles(f: FiltrationProfile, g: FiltrationProfile):
    """Pad two profiles to a common per-vertex length (filtrations may always
    be compared after extending the shorter one by its final space)."""
    fn, gn = check_profile(f), check_profile(g)
    if set(fn) != set(gn):
        raise ProfileError("profiles are defined on different vertex sets")
    lengths = {v: max(len(fn[v]), len(gn[v])) - 1 for v in fn}
    return extend_profile(fn, lengths), extend_profile(gn, lengths)


def _jump_levels(f: Sequence[int]) -> list[int]:
    """First index where the profile reaches each of 1..f[-1]."""
    levels, want = [], 1
    for i, d in enumerate(f):
        while d >= want:
            levels.append(i)
            want += 1
    return levels


def dim_filtered_hom(f: FiltrationProfile, g: FiltrationProfile) -> int:
    """Dimension of the space of filtration-respecting linear map families.

    Per vertex, with i_1 < ... < i_r the first levels where f reaches
    1, ..., r, this contributes sum_a g(i_a).
    """
    fn = check_profile(f, "source profile")
    gn = check_profile(g, "target profile")
    if set(fn) != set(gn):
        raise ProfileError("profiles are defined on different vertex sets")
    total = 0
    for v, fs in fn.items():
        gs = gn[v]
        if len(fs) != len(gs):
            raise ProfileError(f"profiles at {v!r} have different lengths")
        total += sum(gs[i] for i in _jump_levels(fs))
    return total


def filtered_euler(
    q: Quiver,
    f: FiltrationProfile,
    g: FiltrationProfile,
    dim_v: DimensionVector,
    dim_w: DimensionVector,
) -> int:
    """dim of filtered homs minus dim of the arrow-wise hom space."""
    dv = check_dimension_vector(q, dim_v, "dim_v")
    dw = check_dimension_vector(q, dim_w, "dim_w")
    fn = check_profile(f, "source profile")
    gn = check_profile(g, "target profile")
    if set(fn) != set(q.vertices) or set(gn) != set(q.vertices):
        raise DomainError("profiles must be defined exactly on the quiver's vertices")
    for v in q.vertices:
        if fn[v][-1] != dv[v]:
            raise DomainError(f"source profile at {v!r} ends at {fn[v][-1]}, expected {dv[v]}")
        if gn[v][-1] != dw[v]:
            raise DomainError(f"target profile at {v!r} ends at {gn[v][-1]}, expected {dw[v]}")
    hom = dim_filtered_hom(fn, gn)
    return hom - sum(dv[s] * dw[t] for s, t in q.arrows)


def quiver_automorphisms(q: Quiver, max_vertices: int = 10) -> list[Automorphism]:
    """All vertex permutations preserving the arrow multiset, by exhaustive search.

    The identity is always included.  Refuses quivers with more than
    max_vertices vertices.
    """
    n = len(q.vertices)
    if n > max_vertices:
        raise CapacityError(f"automorphism search limited to {max_vertices} vertices, got {n}")
    arrows = sorted(q.arrow_index_pairs)
    found = []
    for perm in permutations(range(n)):
        if sorted((perm[s], perm[t]) for s, t in q.arrow_index_pairs) == arrows:
            found.append(Automorphism(q, tuple(q.vertices[i] for i in perm)))
    return found
