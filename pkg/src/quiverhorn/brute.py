"""Exhaustive finite-field ground truth at tiny sizes.

Enumerates every point of a product of Grassmannians over a small prime
field, intersects with closed Schubert conditions, and counts the families
stable under sampled representations.  Counting gives hard evidence for
intersection (a stable family exists for every sampled point) and a heuristic
for the single-point property (the generic count is 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from . import gf
from .core import Quiver, SubsetFamily, check_family, normalize_family, position
from .errors import CapacityError, DomainError
from .horn import HornQuery, horn_member

MAX_AMBIENT_DIM = 4
MAX_FIELD = 13
MAX_PRODUCT = 10**7


@dataclass(frozen=True)
class SmallFieldSubspace:
    """A subspace of F_q^n given by its reduced-row-echelon basis (unique)."""

    field: int
    ambient: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> np.ndarray:
        if not self.basis:
            return np.zeros((0, self.ambient), dtype=np.int64)
        return np.array(self.basis, dtype=np.int64)


@dataclass(frozen=True)
class CountReport:
    """Stable-family counts per trial, with the combiners used downstream."""

    counts: tuple[int, ...]
    mode: int
    minimum: int
    trials: int
    field: int
    seed: int


def _check_field(q: int) -> None:
    if q > MAX_FIELD or not gf.is_prime(q):
        raise CapacityError(f"field size must be a prime <= {MAX_FIELD}, got {q}")


def enumerate_subspaces(n: int, r: int, q: int) -> list[SmallFieldSubspace]:
    """All q-rational points of Gr(r, n), each exactly once, via RREF shapes.

    For each choice of pivot columns, the free entries are those strictly to
    the right of the row's pivot and not in a pivot column.
    """
    if not 0 <= r <= n <= MAX_AMBIENT_DIM:
        raise CapacityError(f"need 0 <= r <= n <= {MAX_AMBIENT_DIM}, got r={r}, n={n}")
    _check_field(q)
    out = []
    for pivots in combinations(range(n), r):
        free = [
            (i, c)
            for i in range(r)
            for c in range(n)
            if c > pivots[i] and c not in pivots
        ]
        for values in product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(r)]
            for i, pc in enumerate(pivots):
                rows[i][pc] = 1
            for (i, c), val in zip(free, values):
                rows[i][c] = val
            out.append(SmallFieldSubspace(q, n, tuple(tuple(row) for row in rows)))
    return out


def schubert_contains(s: SmallFieldSubspace, k_x, j_x) -> bool:
    """Whether s lies in the closed Schubert variety of position k_x in j_x,
    with coordinates ordered by j_x: dim(s ∩ first-m coordinates) >= a for the
    a-th smallest element of k_x at rank m in j_x.
    """
    ks = tuple(sorted(k_x))
    js = tuple(sorted(j_x))
    if len(ks) != s.dim:
        raise DomainError(f"subspace rank {s.dim} does not match |K_x| = {len(ks)}")
    if len(js) != s.ambient:
        raise DomainError(f"ambient dim {s.ambient} does not match |J_x| = {len(js)}")
    mat = s.matrix()
    for a, e in enumerate(ks, start=1):
        m = position(e, js)
        # dim(S ∩ span(e_1..e_m)) = r - rank of the last n-m columns
        if s.dim - gf.rank_mod(mat[:, m:], s.field) < a:
            return False
    return True


def _schubert_points(k_x, j_x, q):
    pts = enumerate_subspaces(len(j_x), len(k_x), q)
    return [s for s in pts if schubert_contains(s, k_x, j_x)]


def count_stable_points(
    q_: Quiver,
    k: SubsetFamily,
    j: SubsetFamily,
    field_q: int = 11,
    trials: int = 5,
    seed: int = 0,
) -> CountReport:
    """Sample representations over F_q uniformly and count, per trial, the
    families in the closed Schubert variety of (K, J) that they stabilize.
    """
    kn = check_family(q_, k, "K")
    jn = check_family(q_, j, "J")
    _check_field(field_q)
    for v in q_.vertices:
        if len(jn[v]) > MAX_AMBIENT_DIM:
            raise CapacityError(f"|J_{v}| = {len(jn[v])} exceeds brute-force bound {MAX_AMBIENT_DIM}")
    points = {v: _schubert_points(kn[v], jn[v], field_q) for v in q_.vertices}
    universe = 1
    for v in q_.vertices:
        universe *= len(points[v])
    if universe > MAX_PRODUCT:
        raise CapacityError(f"product of Schubert point counts {universe} exceeds {MAX_PRODUCT}")

    ix = q_.vertex_index
    rrefs = {
        v: [gf.rref_mod(s.matrix(), field_q) if s.dim else (None, ()) for s in points[v]]
        for v in q_.vertices
    }
    counts = []
    for trial in range(trials):
        rng = np.random.default_rng([int(seed) & 0xFFFFFFFF, trial])
        maps = [
            rng.integers(0, field_q, size=(len(jn[t]), len(jn[s])), dtype=np.int64)
            for s, t in q_.arrows
        ]
        # per arrow, which (source point, target point) pairs are compatible
        ok = []
        for a, (s, t) in enumerate(q_.arrows):
            table = np.zeros((len(points[s]), len(points[t])), dtype=bool)
            for i_s, ps in enumerate(points[s]):
                if ps.dim == 0:
                    table[i_s, :] = True
                    continue
                image = (maps[a] @ ps.matrix().T).T % field_q
                for i_t, pt in enumerate(points[t]):
                    rref, piv = rrefs[t][i_t]
                    if pt.dim == 0:
                        table[i_s, i_t] = not image.any()
                    else:
                        table[i_s, i_t] = all(
                            gf.in_row_space(row, rref, piv, field_q) for row in image
                        )
            ok.append(((ix[s], ix[t]), table))
        count = 0
        for combo in product(*(range(len(points[v])) for v in q_.vertices)):
            if all(table[combo[xs], combo[xt]] for (xs, xt), table in ok):
                count += 1
        counts.append(count)

    tally: dict[int, int] = {}
    for c in counts:
        tally[c] = tally.get(c, 0) + 1
    mode = min(sorted(tally), key=lambda c: (-tally[c], c))
    return CountReport(tuple(counts), mode, min(counts), trials, field_q, seed)


def estimate_p_membership(
    q_: Quiver,
    k: SubsetFamily,
    j: SubsetFamily,
    field_q: int = 11,
    trials: int = 5,
    seed: int = 0,
) -> bool:
    """Heuristic for the single-point property: most frequent stable count is
    1 and the position is intersecting.  Evidence, not certification.
    """
    report = count_stable_points(q_, k, j, field_q=field_q, trials=trials, seed=seed)
    if report.mode != 1:
        return False
    return horn_member(HornQuery(q_, normalize_family(j), normalize_family(k)))
