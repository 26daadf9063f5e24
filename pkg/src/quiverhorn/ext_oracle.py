"""Randomized algebraic intersection oracle over a large prime field.

The filtered hom and ext dimensions of a generic representation pair are
attained off a proper Zariski-closed locus, so evaluating the rank of the
commutator-style map Phi -> Phi v - w Phi at uniformly random points over a
large prime field recovers them with overwhelming probability.  Minima over
independent trials are exact upper bounds for ext (and hom), which makes the
"intersecting" verdict one-sided: ext = 0 is certain, ext > 0 holds with high
probability.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import gf
from .core import (
    DimensionVector,
    FiltrationProfile,
    Quiver,
    SubsetFamily,
    _jump_levels,
    check_dimension_vector,
    check_profile,
    normalize_family,
    quotient_profile,
    sub_profile,
)
from .errors import DomainError

# Largest default that keeps single-word modular arithmetic safe; the failure
# probability of one trial is bounded by (total degree)/p, negligible at desk
# scale.
DEFAULT_PRIME = 2147483629
DEFAULT_TRIALS = 5


@dataclass(frozen=True)
class PrimeFieldMatrix:
    """A dense matrix with entries reduced modulo a prime."""

    modulus: int
    data: np.ndarray

    def __post_init__(self):
        if not gf.is_prime(self.modulus):
            raise DomainError(f"modulus {self.modulus} is not prime")

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def rank(self) -> int:
        return gf.rank_mod(self.data, self.modulus)


@dataclass(frozen=True)
class RepresentationSample:
    """Per-arrow matrices for one source/target representation pair.

    v_maps[a] has shape (dimV_y, dimV_x) and w_maps[a] shape (dimW_y, dimW_x)
    for the a-th arrow x -> y.  Entries are uniform in [0, prime) and fully
    reproducible from (seed, trial).
    """

    prime: int
    seed: int
    trial: int
    v_maps: tuple[np.ndarray, ...]
    w_maps: tuple[np.ndarray, ...]


def draw_sample(
    q: Quiver,
    dim_v: DimensionVector,
    dim_w: DimensionVector,
    prime: int = DEFAULT_PRIME,
    seed: int = 0,
    trial: int = 0,
) -> RepresentationSample:
    """Sample one representation pair; v matrices are drawn before w matrices,
    each in arrow order, so samples are reproducible bit for bit.
    """
    dv = check_dimension_vector(q, dim_v, "dim_v")
    dw = check_dimension_vector(q, dim_w, "dim_w")
    rng = np.random.default_rng([int(seed) & 0xFFFFFFFF, int(trial)])
    v_maps = tuple(
        rng.integers(0, prime, size=(dv[t], dv[s]), dtype=np.int64) for s, t in q.arrows
    )
    w_maps = tuple(
        rng.integers(0, prime, size=(dw[t], dw[s]), dtype=np.int64) for s, t in q.arrows
    )
    return RepresentationSample(prime, seed, trial, v_maps, w_maps)


def _free_columns(q, f, g, dv, dw):
    """Free coordinates of a filtered morphism family, in vertex order and
    row-major within each block.  Entry (r, c) of the block at x is free iff
    placing a unit there maps each filtration step into its target step.
    """
    cols = []
    for x, v in enumerate(q.vertices):
        levels = _jump_levels(f[v])
        bounds = [g[v][i] for i in levels]  # per source basis vector
        for r in range(dw[v]):
            for c in range(dv[v]):
                if r < bounds[c]:
                    cols.append((x, r, c))
    return cols


def build_delta(
    q: Quiver,
    f_prof: FiltrationProfile,
    g_prof: FiltrationProfile,
    dim_v: DimensionVector,
    dim_w: DimensionVector,
    sample: RepresentationSample,
) -> PrimeFieldMatrix:
    """Matrix of Phi -> Phi v - w Phi from filtered morphisms to the arrow hom
    space.  Columns are the free coordinates of Phi; rows are the arrow-block
    coordinates, row-major per arrow.
    """
    dv = check_dimension_vector(q, dim_v, "dim_v")
    dw = check_dimension_vector(q, dim_w, "dim_w")
    f = check_profile(f_prof, "source profile")
    g = check_profile(g_prof, "target profile")
    for v in q.vertices:
        if f[v][-1] != dv[v] or g[v][-1] != dw[v]:
            raise DomainError(f"profiles at {v!r} do not end at the stated dimensions")
        if len(f[v]) != len(g[v]):
            raise DomainError(f"profiles at {v!r} have different lengths")
    for a, (s, t) in enumerate(q.arrows):
        if sample.v_maps[a].shape != (dv[t], dv[s]) or sample.w_maps[a].shape != (dw[t], dw[s]):
            raise DomainError(f"sample shapes for arrow {a} do not match the dimension vectors")

    p = sample.prime
    ix = q.vertex_index
    cols = _free_columns(q, f, g, dv, dw)
    col_of = {key: i for i, key in enumerate(cols)}

    row_base = []
    nrows = 0
    for s, t in q.arrows:
        row_base.append(nrows)
        nrows += dv[s] * dw[t]

    m = np.zeros((nrows, len(cols)), dtype=np.int64)
    for a, (s, t) in enumerate(q.arrows):
        xs, xt = ix[s], ix[t]
        base = row_base[a]
        va, wa = sample.v_maps[a], sample.w_maps[a]
        # (Phi_y v_a)[i, j] picks up Phi_y[i, k] with coefficient v_a[k, j]
        for (x, r, c) in cols:
            if x == xt:
                for jcol in range(dv[s]):
                    m[base + r * dv[s] + jcol, col_of[(x, r, c)]] += va[c, jcol]
            if x == xs:
                for irow in range(dw[t]):
                    m[base + irow * dv[s] + c, col_of[(x, r, c)]] -= wa[irow, r]
    return PrimeFieldMatrix(p, m % p)


def _space_dims(q, f, g, dv, dw):
    for v in q.vertices:
        if len(f[v]) != len(g[v]):
            raise DomainError(f"profiles at {v!r} have different lengths")
        if f[v][-1] != dv[v] or g[v][-1] != dw[v]:
            raise DomainError(f"profiles at {v!r} do not end at the stated dimensions")
    gdim = sum(
        sum(g[v][i] for i in _jump_levels(f[v])) for v in q.vertices
    )
    hdim = sum(dv[s] * dw[t] for s, t in q.arrows)
    return gdim, hdim


def _trial_ranks(q, f, g, dv, dw, trials, seed, prime, threads):
    def one(trial):
        sample = draw_sample(q, dv, dw, prime, seed, trial)
        return build_delta(q, f, g, dv, dw, sample).rank()

    if trials < 1:
        raise DomainError("trials must be at least 1")
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(one, range(trials)))
    return [one(t) for t in range(trials)]


def generic_ext(
    q: Quiver,
    f_prof: FiltrationProfile,
    g_prof: FiltrationProfile,
    dim_v: DimensionVector,
    dim_w: DimensionVector,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    prime: int = DEFAULT_PRIME,
    threads: int = 1,
) -> int:
    """Generic cokernel dimension of the delta map: min over independent
    samples of (arrow hom dimension - rank).
    """
    dv = check_dimension_vector(q, dim_v, "dim_v")
    dw = check_dimension_vector(q, dim_w, "dim_w")
    f = check_profile(f_prof)
    g = check_profile(g_prof)
    _, hdim = _space_dims(q, f, g, dv, dw)
    ranks = _trial_ranks(q, f, g, dv, dw, trials, seed, prime, threads)
    return min(hdim - r for r in ranks)


def generic_hom(
    q: Quiver,
    f_prof: FiltrationProfile,
    g_prof: FiltrationProfile,
    dim_v: DimensionVector,
    dim_w: DimensionVector,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    prime: int = DEFAULT_PRIME,
    threads: int = 1,
) -> int:
    """Generic kernel dimension of the delta map.  With the same seed and
    trial count, generic_hom - generic_ext equals the filtered Euler number
    exactly, because both minima are attained at the same maximal-rank sample.
    """
    dv = check_dimension_vector(q, dim_v, "dim_v")
    dw = check_dimension_vector(q, dim_w, "dim_w")
    f = check_profile(f_prof)
    g = check_profile(g_prof)
    gdim, _ = _space_dims(q, f, g, dv, dw)
    ranks = _trial_ranks(q, f, g, dv, dw, trials, seed, prime, threads)
    return min(gdim - r for r in ranks)


def oracle_is_intersecting(
    q: Quiver,
    k: SubsetFamily,
    j: SubsetFamily,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    prime: int = DEFAULT_PRIME,
    threads: int = 1,
) -> bool:
    """Randomized check that the position K in J is intersecting, via
    vanishing of the generic ext between V(K) and V(J)/V(K) with their
    inherited filtrations.  A True answer is certain; False is correct with
    high probability.
    """
    kn = normalize_family(k, "K")
    jn = normalize_family(j, "J")
    f = sub_profile(kn, jn)
    g = quotient_profile(kn, jn)
    dv = {v: len(kn[v]) for v in jn}
    dw = {v: len(jn[v]) - len(kn[v]) for v in jn}
    return generic_ext(q, f, g, dv, dw, trials=trials, seed=seed, prime=prime, threads=threads) == 0
