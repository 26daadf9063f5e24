"""Exact double-description conversion for rational polyhedral cones.

Everything runs over arbitrary-precision integers (with Fractions only inside
rank and kernel computations), so results are exact.  The incremental
algorithm keeps a basis of the current lineality space alongside the ray
list; a cone is reported ray-by-ray only when it is pointed.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DomainError


def primitive(vec) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries (direction kept)."""
    g = 0
    for x in vec:
        g = gcd(g, abs(x))
    if g <= 1:
        return tuple(vec)
    return tuple(x // g for x in vec)


def sign_canonical(vec) -> tuple[int, ...]:
    """Primitive vector scaled so the first nonzero entry is positive."""
    v = primitive(vec)
    for x in v:
        if x:
            return v if x > 0 else tuple(-y for y in v)
    return v


def rank_rows(rows) -> int:
    """Rank of a list of integer (or Fraction) row vectors, exactly."""
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return 0
    cols = len(mat[0])
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        r += 1
        if r == len(mat):
            break
    return r


def kernel_basis(rows, dim: int) -> list[tuple[int, ...]]:
    """Integer basis of the rational solution space of rows . x = 0."""
    mat = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(dim):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for c in free:
        vec = [Fraction(0)] * dim
        vec[c] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -mat[i][c]
        lcm = 1
        for x in vec:
            lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        basis.append(sign_canonical(tuple(int(x * lcm) for x in vec)))
    return basis


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def extreme_rays_dd(inequalities, dim: int) -> list[tuple[int, ...]]:
    """Extreme rays of {x in R^dim : a . x <= 0 for all rows a}.

    Raises DomainError when the cone contains a line (no extreme rays then).
    Constraints are inserted sparsest-first, the standard heuristic against
    intermediate blowup.
    """
    if dim == 0:
        return []
    rows = [tuple(int(x) for x in a) for a in inequalities if any(a)]
    rows.sort(key=lambda a: (sum(1 for x in a if x), a))

    lineality: list[tuple[int, ...]] = [
        tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)
    ]
    rays: list[tuple[tuple[int, ...], int]] = []  # (vector, tight-set bitmask)
    processed = 0

    for a in rows:
        bit = 1 << processed
        slacks_lin = [_dot(a, b) for b in lineality]
        pivot = next((i for i, s in enumerate(slacks_lin) if s), None)
        if pivot is not None:
            b = lineality.pop(pivot)
            c = slacks_lin[pivot]
            if c > 0:
                b = tuple(-x for x in b)
                c = -c
            lineality = [
                sign_canonical(tuple(l_i * c - b_i * _dot(a, l) for l_i, b_i in zip(l, b)))
                for l in lineality
            ]
            new_rays = []
            for r, z in rays:
                s = _dot(a, r)
                vec = primitive(tuple(r_i * (-c) + b_i * s for r_i, b_i in zip(r, b)))
                new_rays.append((vec, z | bit))  # projected rays are tight for a
            all_tight = bit - 1
            new_rays.append((primitive(b), all_tight))
            rays = new_rays
        else:
            signed = [(r, z, _dot(a, r)) for r, z in rays]
            masks = [z for _, z, _ in signed]
            combos = []
            for ip, (rp, zp, sp) in enumerate(signed):
                if sp <= 0:
                    continue
                for im, (rn, zn, sn) in enumerate(signed):
                    if sn >= 0:
                        continue
                    common = zp & zn
                    # combinatorial adjacency: no third ray is tight on every
                    # constraint tight at both rp and rn
                    if any(
                        io not in (ip, im) and zo | common == zo
                        for io, zo in enumerate(masks)
                    ):
                        continue
                    vec = primitive(tuple(sp * n_i - sn * p_i for p_i, n_i in zip(rp, rn)))
                    combos.append((vec, common | bit))
            rays = [
                (r, z | bit if s == 0 else z) for r, z, s in signed if s <= 0
            ] + combos
        processed += 1

    if lineality:
        raise DomainError("cone contains a line; extreme rays are undefined")
    out = sorted({r for r, _ in rays})
    return [tuple(r) for r in out]
