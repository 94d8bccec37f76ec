import itertools
import random

import pytest

from tetrahedral.monomial_ideal import (
    EDGES,
    MonomialIdeal,
    contains,
    edge_power_ideal,
    intersect,
    localize_delete,
    max_exponents,
    permute_exponent,
    permute_ideal,
    tetra_ideal,
)
from tetrahedral.tetra import all_permutations, permute_curve


def in_edge_power(e, i, j, a):
    return e[i - 1] + e[j - 1] >= a


def brute_tetra_member(a, e):
    return all(in_edge_power(e, i, j, ak) for (i, j), ak in zip(EDGES, a))


def gens(*exps):
    return frozenset(exps)


def test_edge_power_examples():
    assert edge_power_ideal(1, 2, 2).generators == gens((2, 0, 0, 0), (1, 1, 0, 0), (0, 2, 0, 0))
    assert edge_power_ideal(3, 4, 0).generators == gens((0, 0, 0, 0))
    assert edge_power_ideal(1, 2, 1).generators == gens((1, 0, 0, 0), (0, 1, 0, 0))


@pytest.mark.parametrize("i,j", [(1, 1), (0, 2), (2, 5)])
def test_edge_power_rejects_bad_edges(i, j):
    with pytest.raises(ValueError):
        edge_power_ideal(i, j, 1)


def test_intersect_example_against_membership():
    m, n = edge_power_ideal(1, 2, 1), edge_power_ideal(3, 4, 1)
    got = intersect(m, n)
    assert got.generators == gens((1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1))
    for e in itertools.product(range(3), repeat=4):
        assert contains(got, e) == (contains(m, e) and contains(n, e))


def test_intersect_identity_and_idempotence():
    m = tetra_ideal((2, 0, 1, 1, 0, 2))
    assert intersect(m, MonomialIdeal.unit(4)) == m
    assert intersect(m, m) == m


def test_intersect_num_vars_mismatch():
    with pytest.raises(ValueError):
        intersect(MonomialIdeal.unit(3), MonomialIdeal.unit(4))


def test_tetra_ideal_examples():
    assert tetra_ideal((1, 0, 0, 0, 0, 1)).generators == gens(
        (1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)
    )
    assert tetra_ideal((1, 0, 0, 0, 0, 0)).generators == gens((1, 0, 0, 0), (0, 1, 0, 0))
    with pytest.raises(ValueError):
        tetra_ideal((0,) * 6)


def test_tetra_ideal_matches_brute_force_membership():
    a = (2, 0, 1, 1, 0, 2)
    ideal = tetra_ideal(a)
    for e in itertools.product(range(7), repeat=4):
        assert contains(ideal, e) == brute_tetra_member(a, e)
    # each minimal generator is a member none of whose divisors is
    for g in ideal.generators:
        assert brute_tetra_member(a, g)
        for k in range(4):
            if g[k]:
                smaller = tuple(x - (i == k) for i, x in enumerate(g))
                assert not brute_tetra_member(a, smaller)


def test_minimality_random():
    rng = random.Random(7)
    for _ in range(200):
        a = tuple(rng.randint(0, 3) for _ in range(6))
        if not any(a):
            continue
        g = tetra_ideal(a).generators
        for x, y in itertools.permutations(g, 2):
            assert not all(p <= q for p, q in zip(x, y))


def test_intersection_correctness_random():
    rng = random.Random(11)
    for _ in range(40):
        m = MonomialIdeal(4, frozenset(tuple(rng.randint(0, 2) for _ in range(4)) for _ in range(3)))
        n = MonomialIdeal(4, frozenset(tuple(rng.randint(0, 2) for _ in range(4)) for _ in range(3)))
        hi = [a + b for a, b in zip(max_exponents(m), max_exponents(n))]
        mn = intersect(m, n)
        for e in itertools.product(*(range(h + 1) for h in hi)):
            assert contains(mn, e) == (contains(m, e) and contains(n, e))


def test_contains_examples():
    x1x2 = edge_power_ideal(1, 2, 1)
    assert contains(x1x2, (1, 5, 0, 0))
    assert not contains(x1x2, (0, 0, 3, 3))
    assert contains(tetra_ideal((1, 0, 0, 0, 0, 1)), (1, 0, 1, 0))
    with pytest.raises(ValueError):
        contains(x1x2, (-1, 0, 0, 0))


def test_localize_delete_examples():
    m = tetra_ideal((1, 0, 0, 0, 0, 1))
    assert localize_delete(m, {1}) == edge_power_ideal(3, 4, 1)
    assert localize_delete(m, set()) == m
    assert localize_delete(m, {1, 2, 3, 4}).is_unit
    with pytest.raises(ValueError):
        localize_delete(m, {5})


def test_max_exponents_examples():
    assert max_exponents(tetra_ideal((1, 0, 0, 0, 0, 1))) == (1, 1, 1, 1)
    assert max_exponents(edge_power_ideal(1, 2, 2)) == (2, 2, 0, 0)
    assert max_exponents(MonomialIdeal.unit(4)) == (0, 0, 0, 0)


def test_unit_and_zero_representation():
    assert MonomialIdeal.unit(4).generators == gens((0, 0, 0, 0))
    with pytest.raises(ValueError):
        MonomialIdeal(4, frozenset())


def test_tetra_ideal_commutes_with_vertex_permutations():
    rng = random.Random(3)
    for _ in range(30):
        a = tuple(rng.randint(0, 3) for _ in range(6))
        if not any(a):
            continue
        for perm in all_permutations():
            assert tetra_ideal(permute_curve(a, perm)) == permute_ideal(tetra_ideal(a), perm)


def test_permute_exponent():
    assert permute_exponent((5, 6, 7, 8), (2, 1, 3, 4)) == (6, 5, 7, 8)
