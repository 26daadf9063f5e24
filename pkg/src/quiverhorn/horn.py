"""Recursive Horn-type decision procedure for quiver Schubert intersection.

A query asks whether the Schubert position K inside the ambient family J is
intersecting for the quiver: every representation admits a subrepresentation
in the closed Schubert variety of K.  The test is the inductive one: K = J is
accepted; otherwise the expected dimension must be nonnegative and no
accepted subposition L of K with edim(L, K) = 0 may have edim(L, J) < 0.

The recursion works on canonicalized position data (only the ranks of K's
elements inside J matter), is memoized process-wide, and pre-screens the
exponentially many candidate subfamilies with vectorized expected-dimension
tensors so that the recursive membership test only runs on potential
witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import NamedTuple, Sequence

import numpy as np

from .core import (
    Automorphism,
    DimensionVector,
    Quiver,
    SubsetFamily,
    check_containment,
    check_dimension_vector,
    check_family,
    quiver_automorphisms,
)
from .errors import CapacityError, DomainError, QueryError


class CanonicalKey(NamedTuple):
    """Position-only key: two queries with equal keys have equal answers."""

    quiver_shape: tuple[int, tuple[tuple[int, int], ...]]
    restricted: tuple[tuple[int, int], ...]
    ambient_sizes: tuple[int, ...]
    positions: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class HornQuery:
    """An intersection query: candidate K inside ambient J, optionally with a
    set of arrows along which all subfamilies must have matching cardinalities.
    """

    quiver: Quiver
    ambient: dict[str, tuple[int, ...]]
    family: dict[str, tuple[int, ...]]
    restricted_arrows: tuple[int, ...] = ()

    def __init__(self, quiver, ambient, family, restricted_arrows=()):
        object.__setattr__(self, "quiver", quiver)
        object.__setattr__(self, "ambient", check_family(quiver, ambient, "J"))
        object.__setattr__(self, "family", check_family(quiver, family, "K"))
        object.__setattr__(self, "restricted_arrows", tuple(sorted(set(int(i) for i in restricted_arrows))))
        try:
            check_containment(self.family, self.ambient)
        except DomainError as exc:
            raise QueryError(str(exc)) from None
        arrows = quiver.arrows
        for i in self.restricted_arrows:
            if not 0 <= i < len(arrows):
                raise QueryError(f"restricted arrow index {i} out of range")
            s, t = arrows[i]
            if len(self.ambient[s]) != len(self.ambient[t]):
                raise QueryError(
                    f"restricted arrow {i} requires |J_{s}| = |J_{t}|, "
                    f"got {len(self.ambient[s])} and {len(self.ambient[t])}"
                )


def canonicalize(query: HornQuery) -> CanonicalKey:
    """Forget element values, keeping only per-vertex ranks within the ambient."""
    q = query.quiver
    pairs = q.arrow_index_pairs
    sizes = tuple(len(query.ambient[v]) for v in q.vertices)
    positions = []
    for v in q.vertices:
        ranks = {e: i + 1 for i, e in enumerate(query.ambient[v])}
        positions.append(tuple(ranks[e] for e in query.family[v]))
    restricted = tuple(sorted(pairs[i] for i in query.restricted_arrows))
    return CanonicalKey(q.shape_key, restricted, sizes, tuple(positions))


# ---------------------------------------------------------------------------
# position-space engine

_CACHE: dict[tuple, bool] = {}


def clear_cache() -> None:
    _CACHE.clear()


def cache_size() -> int:
    return len(_CACHE)


def _edim_pos(arrows, kpos, jcards) -> int:
    total = 0
    for pos in kpos:
        total += sum(pos) - len(pos) * (len(pos) + 1) // 2
    for x, y in arrows:
        total -= len(kpos[x]) * (jcards[y] - len(kpos[y]))
    return total


def _mask_tables(kpos_x: tuple[int, ...]):
    """Per subset mask of K_x: cardinality, rank-sum within K, rank-sum within J.

    Rank sums already have the triangular term subtracted, so summing them
    over vertices gives the Schubert-dimension part of edim directly.
    """
    k = len(kpos_x)
    m = 1 << k
    c = np.zeros(m, dtype=np.int64)
    s_in_k = np.zeros(m, dtype=np.int64)
    s_in_j = np.zeros(m, dtype=np.int64)
    for mask in range(1, m):
        low = mask & -mask
        i = low.bit_length() - 1
        prev = mask ^ low
        c[mask] = c[prev] + 1
        s_in_k[mask] = s_in_k[prev] + i + 1
        s_in_j[mask] = s_in_j[prev] + kpos_x[i]
    tri = c * (c + 1) // 2
    return c, s_in_k - tri, s_in_j - tri


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        i += 1
        mask >>= 1


class _Engine:
    """Memoized membership test for one quiver structure and arrow restriction."""

    def __init__(self, quiver: Quiver, restricted_arrows: tuple[int, ...] = (), max_masks: int = 1 << 20):
        pairs = quiver.arrow_index_pairs
        self.arrows = pairs
        self.restricted = tuple(sorted(pairs[i] for i in restricted_arrows))
        self.base_key = (quiver.shape_key, self.restricted)
        self.max_masks = max_masks

    def _cards_ok(self, cards: Sequence[int]) -> bool:
        return all(cards[x] == cards[y] for x, y in self.restricted)

    def member(self, kpos: tuple[tuple[int, ...], ...], jcards: tuple[int, ...]) -> bool:
        return self._decide(kpos, jcards, want_witness=False) is True

    def witness(self, kpos, jcards):
        """None if K is accepted, else a subfamily (as positions within J)
        certifying rejection; for failures of the edim or cardinality
        condition on K itself, K is returned.
        """
        out = self._decide(kpos, jcards, want_witness=True)
        return None if out is True else out

    def _decide(self, kpos, jcards, want_witness: bool):
        kcards = tuple(len(p) for p in kpos)
        if kcards == jcards:
            return True
        key = (self.base_key, jcards, kpos)
        if not want_witness:
            cached = _CACHE.get(key)
            if cached is not None:
                return cached
        if not self._cards_ok(kcards) or _edim_pos(self.arrows, kpos, jcards) < 0:
            _CACHE[key] = False
            return kpos if want_witness else False

        shape = tuple(1 << c for c in kcards)
        total = 1
        for m in shape:
            total *= m
        if total > self.max_masks:
            raise CapacityError(f"subfamily universe of size {total} exceeds the bound {self.max_masks}")

        nv = len(kpos)

        def bc(arr, axis):
            return arr.reshape(tuple(shape[axis] if i == axis else 1 for i in range(nv)))

        tables = [_mask_tables(p) for p in kpos]
        edim_lk = np.zeros(shape, dtype=np.int64)
        edim_lj = np.zeros(shape, dtype=np.int64)
        for x in range(nv):
            edim_lk = edim_lk + bc(tables[x][1], x)
            edim_lj = edim_lj + bc(tables[x][2], x)
        for x, y in self.arrows:
            cx = bc(tables[x][0], x)
            cy = bc(tables[y][0], y)
            edim_lk = edim_lk - cx * (kcards[y] - cy)
            edim_lj = edim_lj - cx * (jcards[y] - cy)

        candidates = (edim_lk == 0) & (edim_lj < 0)
        for x, y in self.restricted:
            candidates &= bc(tables[x][0], x) == bc(tables[y][0], y)
        candidates[tuple(m - 1 for m in shape)] = False

        result: bool | tuple = True
        if candidates.any():
            for idx in np.argwhere(candidates):
                l_in_k = tuple(tuple(i + 1 for i in _bits(int(m))) for m in idx)
                if self._decide(l_in_k, kcards, want_witness=False) is True:
                    if want_witness:
                        l_in_j = tuple(
                            tuple(kpos[x][i] for i in _bits(int(m))) for x, m in enumerate(idx)
                        )
                        result = l_in_j
                    else:
                        result = False
                    break
        _CACHE[key] = result is True
        return result


# ---------------------------------------------------------------------------
# public operations


def horn_member(query: HornQuery, max_masks: int = 1 << 20) -> bool:
    """True iff the query's Schubert position is intersecting for its quiver."""
    engine = _Engine(query.quiver, query.restricted_arrows, max_masks)
    key = canonicalize(query)
    return engine.member(key.positions, key.ambient_sizes)


def find_witness(query: HornQuery, max_masks: int = 1 << 20):
    """None if the query is accepted; otherwise a rejecting subfamily of K,
    mapped back to element values of the ambient J.
    """
    engine = _Engine(query.quiver, query.restricted_arrows, max_masks)
    key = canonicalize(query)
    wit = engine.witness(key.positions, key.ambient_sizes)
    if wit is None:
        return None
    q = query.quiver
    return {
        v: tuple(query.ambient[v][p - 1] for p in wit[q.vertex_index[v]])
        for v in q.vertices
    }


def family_sort_key(q: Quiver, fam: SubsetFamily):
    """Total order on families: first by the cardinality vector, then by the
    per-vertex subsets compared as bitmasks (colex), vertices in declared
    order.  Orbit representatives under this order project onto the
    lexicographically least subdimension vector of their orbit.
    """
    cards = tuple(len(fam[v]) for v in q.vertices)
    masks = tuple(sum(1 << e for e in fam[v]) for v in q.vertices)
    return (cards, masks)


def _symmetries_preserving(q: Quiver, fam: dict[str, tuple[int, ...]]) -> list[Automorphism]:
    return [a for a in quiver_automorphisms(q) if a.apply_to_family(fam) == fam]


def orbit_representative(q: Quiver, fam: dict[str, tuple[int, ...]], autos: Sequence[Automorphism]):
    images = [a.apply_to_family(fam) for a in autos]
    return min(images, key=lambda f: family_sort_key(q, f))


def enumerate_intersecting(
    q: Quiver,
    j: SubsetFamily,
    edim_zero_only: bool = False,
    up_to_symmetry: bool = False,
    max_universe: int = 1 << 20,
) -> list[dict[str, tuple[int, ...]]]:
    """All intersecting subfamilies K of J, sorted; optionally only those of
    expected dimension zero, optionally reduced to least orbit representatives
    under the quiver symmetries that fix J.
    """
    jn = check_family(q, j, "J")
    universe = 1
    for v in q.vertices:
        universe <<= len(jn[v])
    if universe > max_universe:
        raise CapacityError(f"family universe of size {universe} exceeds the bound {max_universe}")

    engine = _Engine(q, (), max_universe)
    jcards = tuple(len(jn[v]) for v in q.vertices)
    per_vertex = []
    for v in q.vertices:
        elems = jn[v]
        subs = []
        for mask in range(1 << len(elems)):
            pos = tuple(i + 1 for i in _bits(mask))
            subs.append((pos, tuple(elems[i - 1] for i in pos)))
        per_vertex.append(subs)

    autos = _symmetries_preserving(q, jn) if up_to_symmetry else None
    found = []
    for combo in product(*per_vertex):
        kpos = tuple(c[0] for c in combo)
        if edim_zero_only and _edim_pos(engine.arrows, kpos, jcards) != 0:
            continue
        if not engine.member(kpos, jcards):
            continue
        fam = {v: combo[i][1] for i, v in enumerate(q.vertices)}
        if autos is not None and orbit_representative(q, fam, autos) != fam:
            continue
        found.append(fam)
    found.sort(key=lambda f: family_sort_key(q, f))
    return found


def _top_family(n: dict[str, int], alpha: dict[str, int]):
    j = {v: tuple(range(1, n[v] + 1)) for v in n}
    k = {v: tuple(range(n[v] - alpha[v] + 1, n[v] + 1)) for v in n}
    return k, j


def schofield_member(q: Quiver, alpha: DimensionVector, n: DimensionVector) -> bool:
    """True iff every representation of dimension n has a subrepresentation of
    dimension alpha; tested as intersection of the full-Grassmannian position.
    """
    an = check_dimension_vector(q, alpha, "alpha")
    nn = check_dimension_vector(q, n, "n")
    for v in q.vertices:
        if an[v] > nn[v]:
            raise DomainError(f"alpha[{v!r}] = {an[v]} exceeds n[{v!r}] = {nn[v]}")
    k, j = _top_family(nn, an)
    return horn_member(HornQuery(q, j, k))


def enumerate_schofield(
    q: Quiver, n: DimensionVector, up_to_symmetry: bool = False
) -> list[dict[str, int]]:
    """All subdimension vectors alpha <= n admitting subrepresentations of every
    representation, sorted lexicographically in vertex order.
    """
    nn = check_dimension_vector(q, n, "n")
    autos = None
    if up_to_symmetry:
        autos = [a for a in quiver_automorphisms(q) if a.apply_to_vector(nn) == nn]
    found = []
    for combo in product(*(range(nn[v] + 1) for v in q.vertices)):
        alpha = dict(zip(q.vertices, combo))
        if not schofield_member(q, alpha, nn):
            continue
        if autos is not None:
            least = min(
                (tuple(a.apply_to_vector(alpha)[v] for v in q.vertices) for a in autos),
            )
            if least != combo:
                continue
        found.append(alpha)
    found.sort(key=lambda a: tuple(a[v] for v in q.vertices))
    return found


def star_quiver(s: int) -> Quiver:
    """s source vertices, one common sink, one arrow from each source."""
    vertices = [str(i) for i in range(1, s + 2)]
    arrows = [(str(i), str(s + 1)) for i in range(1, s + 1)]
    return Quiver(vertices, arrows)


def belkale_member(s: int, r: int, n: int, k: Sequence[Sequence[int]]) -> bool:
    """True iff the s+1 Schubert classes indexed by k intersect in Gr(r, n).

    Each of the s+1 components of k must be an r-element subset of {1..n}.
    Decided on the star quiver with all arrows cardinality-restricted.
    """
    subsets = [tuple(sorted(int(e) for e in part)) for part in k]
    if len(subsets) != s + 1:
        raise QueryError(f"expected {s + 1} subsets, got {len(subsets)}")
    for part in subsets:
        if len(part) != r or len(set(part)) != r:
            raise QueryError(f"each subset must have exactly {r} distinct elements")
        if part and (part[0] < 1 or part[-1] > n):
            raise QueryError(f"subset {part} is not contained in 1..{n}")
    q = star_quiver(s)
    j = {v: tuple(range(1, n + 1)) for v in q.vertices}
    fam = {str(i + 1): subsets[i] for i in range(s + 1)}
    return horn_member(HornQuery(q, j, fam, tuple(range(s))))
