from __future__ import annotations

import random
from itertools import product

import pytest

from quiverhorn import (
    CapacityError,
    HornQuery,
    QueryError,
    Quiver,
    belkale_member,
    canonicalize,
    edim,
    enumerate_intersecting,
    enumerate_schofield,
    find_witness,
    horn_member,
    schofield_member,
)
from quiverhorn.horn import clear_cache, family_sort_key


def all_subfamilies(ambient):
    per_vertex = []
    for v, elems in ambient.items():
        per_vertex.append(
            [(v, tuple(e for i, e in enumerate(elems) if mask >> i & 1)) for mask in range(1 << len(elems))]
        )
    for combo in product(*per_vertex):
        yield dict(combo)


def test_square_worked_example(square, square_ambient, square_good, square_bad, square_witness):
    assert horn_member(HornQuery(square, square_ambient, square_good))
    assert not horn_member(HornQuery(square, square_ambient, square_bad))
    # the rejected family is fine as its own ambient
    assert horn_member(HornQuery(square, square_bad, square_witness))
    assert not horn_member(HornQuery(square, square_ambient, square_witness))
    assert edim(square, square_witness, square_bad) == 0
    assert edim(square, square_witness, square_ambient) == -1


def test_witness_properties(square, square_ambient, square_bad):
    wit = find_witness(HornQuery(square, square_ambient, square_bad))
    assert wit == {"1": (1,), "2": (3,), "3": (2,), "4": (1, 2)}
    assert horn_member(HornQuery(square, square_bad, wit))
    assert edim(square, wit, square_bad) == 0
    assert edim(square, wit, square_ambient) < 0
    assert find_witness(HornQuery(square, square_ambient, square_ambient)) is None


def test_base_cases(square, square_ambient):
    assert horn_member(HornQuery(square, square_ambient, square_ambient))
    empty = {v: () for v in square.vertices}
    assert horn_member(HornQuery(square, square_ambient, empty))


def test_query_validation(square, square_ambient):
    bad = dict(square_ambient)
    bad["1"] = (1, 3)
    with pytest.raises(QueryError):
        HornQuery(square, square_ambient, bad)
    with pytest.raises(QueryError):
        HornQuery(square, square_ambient, square_ambient, restricted_arrows=(9,))
    # arrow 0 joins vertices with |J| = 2 and 3: restriction is ill-posed
    with pytest.raises(QueryError):
        HornQuery(square, square_ambient, square_ambient, restricted_arrows=(0,))


def test_square_enumeration_counts(square, square_ambient):
    fams = enumerate_intersecting(square, square_ambient)
    assert len(fams) == 172
    vectors = {tuple(len(f[v]) for v in square.vertices) for f in fams}
    assert len(vectors) == 46
    schofield = enumerate_schofield(square, {"1": 2, "2": 3, "3": 3, "4": 2})
    assert len(schofield) == 46
    assert vectors == {tuple(a[v] for v in square.vertices) for a in schofield}


def test_enumeration_is_sorted_and_deterministic(square, square_ambient):
    fams = enumerate_intersecting(square, square_ambient)
    keys = [family_sort_key(square, f) for f in fams]
    assert keys == sorted(keys)
    assert fams == enumerate_intersecting(square, square_ambient)


def test_enumeration_capacity(square):
    huge = {v: tuple(range(1, 8)) for v in square.vertices}
    with pytest.raises(CapacityError):
        enumerate_intersecting(square, huge, max_universe=1 << 20)


def test_up_to_symmetry_expands_back(square, square_ambient):
    from quiverhorn import quiver_automorphisms

    reps = enumerate_intersecting(square, square_ambient, up_to_symmetry=True)
    autos = quiver_automorphisms(square)
    expanded = set()
    for fam in reps:
        for a in autos:
            img = a.apply_to_family(fam)
            expanded.add(tuple(img[v] for v in square.vertices))
    full = enumerate_intersecting(square, square_ambient)
    assert expanded == {tuple(f[v] for v in square.vertices) for f in full}


def test_necessity_on_accepted_families(square, square_ambient):
    for fam in enumerate_intersecting(square, square_ambient):
        assert edim(square, fam, square_ambient) >= 0


def test_transitivity_exhaustive(square, square_ambient):
    # accepted inside an accepted ambient implies accepted in the big ambient
    members = {}
    for k in all_subfamilies(square_ambient):
        key = tuple(k[v] for v in square.vertices)
        members[key] = horn_member(HornQuery(square, square_ambient, k))
    for k in all_subfamilies(square_ambient):
        k_key = tuple(k[v] for v in square.vertices)
        for l in all_subfamilies(k):
            if horn_member(HornQuery(square, k, l)) and members[k_key]:
                assert members[tuple(l[v] for v in square.vertices)]


def test_schofield_examples(square, hexagon):
    n6 = {v: 2 for v in hexagon.vertices}
    assert schofield_member(hexagon, {"1": 1, "2": 1, "3": 1, "4": 2, "5": 1, "6": 2}, n6)
    assert schofield_member(hexagon, {v: 0 for v in hexagon.vertices}, n6)
    assert schofield_member(hexagon, n6, n6)
    n4 = {"1": 2, "2": 3, "3": 3, "4": 2}
    count = sum(
        schofield_member(square, dict(zip(square.vertices, combo)), n4)
        for combo in product(range(3), range(4), range(4), range(3))
    )
    assert count == 46


def test_schofield_domain_error(square):
    with pytest.raises(Exception):
        schofield_member(square, {"1": 3, "2": 0, "3": 0, "4": 0}, {"1": 2, "2": 3, "3": 3, "4": 2})


def test_belkale_examples():
    assert belkale_member(2, 1, 2, [(2,), (2,), (2,)])
    assert not belkale_member(2, 1, 2, [(1,), (1,), (2,)])
    assert belkale_member(2, 2, 2, [(1, 2), (1, 2), (1, 2)])
    with pytest.raises(QueryError):
        belkale_member(2, 1, 2, [(1,), (1, 2), (2,)])
    with pytest.raises(QueryError):
        belkale_member(2, 1, 2, [(1,), (2,)])


def test_restricted_equals_unrestricted_on_matching_cardinalities():
    # on the three-vertex star with equal ambient sizes, the restricted set is
    # exactly the unrestricted one cut to constant-cardinality families
    from quiverhorn import star_quiver

    q = star_quiver(2)
    for n in (2, 3):
        j = {v: tuple(range(1, n + 1)) for v in q.vertices}
        for k in all_subfamilies(j):
            cards = {len(k[v]) for v in q.vertices}
            if len(cards) != 1:
                continue
            plain = horn_member(HornQuery(q, j, k))
            restricted = horn_member(HornQuery(q, j, k, restricted_arrows=(0, 1)))
            assert plain == restricted, k


def test_belkale_edim_specialization():
    # the star-quiver expected dimension collapses to the classical formula
    from quiverhorn import star_quiver

    rng = random.Random(23)
    q = star_quiver(2)
    for _ in range(200):
        n = rng.randint(1, 4)
        r = rng.randint(0, n)
        j = {v: tuple(range(1, n + 1)) for v in q.vertices}
        k = {v: tuple(sorted(rng.sample(range(1, n + 1), r))) for v in q.vertices}
        expected = sum(e - a for v in q.vertices for a, e in enumerate(k[v], 1)) - 2 * r * (n - r)
        assert edim(q, k, j) == expected


def test_canonicalize_examples():
    q = Quiver(["a"], [])
    key1 = canonicalize(HornQuery(q, {"a": (1, 3)}, {"a": (3,)}))
    key2 = canonicalize(HornQuery(q, {"a": (1, 2)}, {"a": (2,)}))
    assert key1 == key2
    full = canonicalize(HornQuery(q, {"a": (1, 2)}, {"a": (1, 2)}))
    empty = canonicalize(HornQuery(q, {"a": (1, 2)}, {"a": ()}))
    assert full != empty
    q2 = Quiver(["z"], [])  # relabeled vertex, same structure
    assert canonicalize(HornQuery(q2, {"z": (1, 2)}, {"z": (2,)})) == key2


def test_memoization_soundness(square, square_ambient):
    rng = random.Random(29)
    queries = []
    for _ in range(100):
        k = {
            v: tuple(sorted(rng.sample(square_ambient[v], rng.randint(0, len(square_ambient[v])))))
            for v in square.vertices
        }
        queries.append(k)
    clear_cache()
    cold = [horn_member(HornQuery(square, square_ambient, k)) for k in queries]
    warm = [horn_member(HornQuery(square, square_ambient, k)) for k in queries]
    assert cold == warm
    clear_cache()
    per_query = []
    for k in queries:
        clear_cache()
        per_query.append(horn_member(HornQuery(square, square_ambient, k)))
    assert per_query == cold
