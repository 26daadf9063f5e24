"""Exact computation of the highest-weight cone attached to a quiver.

The cone lives in coordinates lambda_x(i) for each vertex x of the quiver and
each level i = 1..n_x.  Its defining system consists of one trace equality,
the dominance (antichain) inequalities per vertex, and one inequality per
intersecting position of expected dimension zero.  Conversion to extreme rays
and irredundant facets is done by exact double description; no floating point
enters this module.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Sequence

from . import dd
from .core import Automorphism, DimensionVector, Quiver, check_dimension_vector, quiver_automorphisms
from .errors import CapacityError, DomainError
from .horn import enumerate_intersecting, enumerate_schofield

Coordinate = tuple[str, int]


@dataclass(frozen=True)
class ConeDescription:
    """Exact H-form (and optionally V-form) of a rational polyhedral cone.

    Inequality rows are read as row . x <= 0 and are GCD-reduced; equality
    rows are sign-canonical.  sources tags each inequality with where it came
    from, parallel to the inequalities tuple.
    """

    coords: tuple[Coordinate, ...]
    equalities: tuple[tuple[int, ...], ...]
    inequalities: tuple[tuple[int, ...], ...]
    sources: tuple[tuple, ...] = ()
    rays: tuple[tuple[int, ...], ...] | None = None
    warnings: tuple[str, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.coords)

    def kernel(self) -> list[tuple[int, ...]]:
        """Integer basis of the solution space of the equalities."""
        if not self.equalities:
            return [tuple(1 if i == j else 0 for j in range(self.dim)) for i in range(self.dim)]
        return dd.kernel_basis(self.equalities, self.dim)

    def row_modulo_equalities(self, row: Sequence[int]) -> tuple[int, ...]:
        """Canonical form of a linear functional on the equality subspace:
        its pairing with the fixed kernel basis, GCD-reduced.  Two rows are
        equivalent modulo the equalities iff these forms coincide.
        """
        basis = self.kernel()
        return dd.primitive(tuple(sum(a * b for a, b in zip(row, vec)) for vec in basis))


def _standard_coords(q: Quiver, n: dict[str, int]) -> tuple[Coordinate, ...]:
    return tuple((v, i) for v in q.vertices for i in range(1, n[v] + 1))


def generate_system(q: Quiver, n: DimensionVector, max_universe: int = 1 << 20) -> ConeDescription:
    """The complete (redundant) inequality system of the highest-weight cone:
    zero total trace, dominance within every vertex, and one row per
    intersecting position with expected dimension zero.
    """
    nn = check_dimension_vector(q, n, "n")
    coords = _standard_coords(q, nn)
    index = {c: i for i, c in enumerate(coords)}
    dim = len(coords)
    warnings = ()
    if not q.is_acyclic():
        warnings = (
            "quiver has directed cycles: the polyhedral computation is well-defined, "
            "but the weight-multiplicity reading of the cone is not",
        )

    equalities = (tuple(1 for _ in coords),) if dim else ()

    inequalities: list[tuple[int, ...]] = []
    sources: list[tuple] = []
    for v in q.vertices:
        for i in range(1, nn[v]):
            row = [0] * dim
            row[index[(v, i + 1)]] = 1
            row[index[(v, i)]] = -1
            inequalities.append(tuple(row))
            sources.append(("dominance", v, i))

    j = {v: tuple(range(1, nn[v] + 1)) for v in q.vertices}
    for fam in enumerate_intersecting(q, j, edim_zero_only=True, max_universe=max_universe):
        row = [0] * dim
        for v in q.vertices:
            for e in fam[v]:
                row[index[(v, e)]] = 1
        if not any(row):
            continue
        inequalities.append(tuple(row))
        sources.append(("family", tuple((v, fam[v]) for v in q.vertices)))

    return ConeDescription(coords, equalities, tuple(inequalities), tuple(sources), None, warnings)


MAX_CONE_DIM = 16
MAX_CONE_ROWS = 2000


def extreme_rays(desc: ConeDescription, max_dim: int = MAX_CONE_DIM, max_rows: int = MAX_CONE_ROWS) -> list[tuple[int, ...]]:
    """All extreme rays of the cone, as primitive integer vectors in the
    original coordinates, deduplicated and sorted.  The equalities are
    eliminated by substitution into a kernel basis before double description.
    """
    if desc.dim > max_dim:
        raise CapacityError(f"cone dimension {desc.dim} exceeds the bound {max_dim}")
    if len(desc.inequalities) > max_rows:
        raise CapacityError(f"{len(desc.inequalities)} inequality rows exceed the bound {max_rows}")
    basis = desc.kernel()
    k = len(basis)
    if k == 0:
        return []
    reduced = [
        tuple(sum(a * b for a, b in zip(row, vec)) for vec in basis)
        for row in desc.inequalities
    ]
    inner = dd.extreme_rays_dd(reduced, k)
    restored = {
        dd.primitive(tuple(sum(r[t] * basis[t][i] for t in range(k)) for i in range(desc.dim)))
        for r in inner
    }
    return sorted(restored)


def with_rays(desc: ConeDescription) -> ConeDescription:
    return replace(desc, rays=tuple(extreme_rays(desc)))


@dataclass(frozen=True)
class Facet:
    """One codimension-1 face: a representative input row, its canonical form
    modulo the equalities, and the indices of the rays it supports.
    """

    row: tuple[int, ...]
    reduced: tuple[int, ...]
    tight_rays: tuple[int, ...]
    source: tuple


def facet_data(desc: ConeDescription) -> list[Facet]:
    """Classify the input inequalities: one Facet per distinct codimension-1
    supporting hyperplane (identified by its set of tight extreme rays).
    """
    rays = desc.rays if desc.rays is not None else tuple(extreme_rays(desc))
    cone_dim = dd.rank_rows(rays) if rays else 0
    sources = desc.sources if desc.sources else tuple(("row", i) for i in range(len(desc.inequalities)))
    seen: dict[tuple[int, ...], Facet] = {}
    for row, src in zip(desc.inequalities, sources):
        tight = tuple(i for i, r in enumerate(rays) if sum(a * x for a, x in zip(row, r)) == 0)
        if not tight or dd.rank_rows([rays[i] for i in tight]) != cone_dim - 1:
            continue
        if tight not in seen:
            seen[tight] = Facet(row, desc.row_modulo_equalities(row), tight, src)
    return sorted(seen.values(), key=lambda f: f.reduced)


def irredundant_facets(desc: ConeDescription) -> list[tuple[int, ...]]:
    """One representative input row per facet.  When the cone is
    full-dimensional modulo the stated equalities this is the inclusion-minimal
    subset of the inequalities defining the same cone; otherwise the rows from
    implicit_equalities are needed alongside.
    """
    return [f.row for f in facet_data(desc)]


def implicit_equalities(desc: ConeDescription) -> list[tuple[int, ...]]:
    """Input inequalities that vanish on the whole cone without being
    combinations of the stated equalities; they cut the cone's affine hull
    out of the equality slice.
    """
    rays = desc.rays if desc.rays is not None else tuple(extreme_rays(desc))
    out = []
    seen = set()
    for row in desc.inequalities:
        reduced = desc.row_modulo_equalities(row)
        if not any(reduced) or reduced in seen:
            continue
        if all(sum(a * x for a, x in zip(row, r)) == 0 for r in rays):
            seen.add(reduced)
            out.append(row)
    return out


def sigma_restriction(q: Quiver, n: DimensionVector, up_to_symmetry: bool = False) -> ConeDescription:
    """Restriction of the weight cone to one weight per vertex: the equality
    n . w = 0 together with one inequality alpha . w <= 0 per generic
    subdimension vector alpha of n (zero rows dropped).
    """
    nn = check_dimension_vector(q, n, "n")
    coords = tuple((v, 0) for v in q.vertices)
    equalities = (tuple(nn[v] for v in q.vertices),) if q.vertices else ()
    inequalities: list[tuple[int, ...]] = []
    sources: list[tuple] = []
    seen = set()
    for alpha in enumerate_schofield(q, nn, up_to_symmetry=up_to_symmetry):
        row = dd.primitive(tuple(alpha[v] for v in q.vertices))
        if not any(row) or row in seen:
            continue
        seen.add(row)
        inequalities.append(row)
        sources.append(("subdimension", tuple(alpha[v] for v in q.vertices)))
    warnings = ()
    if not q.is_acyclic():
        warnings = ("quiver has directed cycles: the semi-invariant reading of this cone is not available",)
    return ConeDescription(coords, equalities, tuple(inequalities), tuple(sources), None, warnings)


def coordinate_permutation(coords: Sequence[Coordinate], auto: Automorphism) -> list[int]:
    """Index permutation induced on cone coordinates by a vertex symmetry:
    coordinate (x, i) is sent to (sigma(x), i)."""
    index = {c: i for i, c in enumerate(coords)}
    perm = []
    for (v, i) in coords:
        target = (auto(v), i)
        if target not in index:
            raise DomainError(f"symmetry does not preserve the coordinate grid at {target}")
        perm.append(index[target])
    return perm


def orbit_reduce(
    items: Sequence[Sequence[int]],
    autos: Sequence[Automorphism],
    coords: Sequence[Coordinate],
) -> list[tuple[tuple[int, ...], int]]:
    """Group integer vectors (rows or rays) into orbits under the coordinate
    permutations induced by the quiver symmetries; returns the
    lexicographically least representative of each orbit with its orbit size,
    in sorted order.
    """
    perms = [coordinate_permutation(coords, a) for a in autos]
    remaining = {tuple(int(x) for x in item) for item in items}
    out = []
    while remaining:
        item = min(remaining)
        orbit = set()
        for perm in perms:
            image = [0] * len(item)
            for i, x in enumerate(item):
                image[perm[i]] = x
            orbit.add(tuple(image))
        out.append((min(orbit), len(orbit)))
        remaining -= orbit
    return sorted(out)
