import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tetrahedral import tetra
from tetrahedral.s_module import ZERO, beg_end_diam, enumerate_s, hilbert_function, in_s, k_direct, module_action, witness


def k_by_definition(s):
    """Smallest k with every degree-k monomial killing every point (brute force over beta)."""
    a = s.curve
    bound = (a[0] - 1) + (a[5] - 1) + 1
    for k in range(bound + 2):
        betas = [b for b in itertools.product(range(k + 1), repeat=4) if sum(b) == k]
        if all(module_action(s, alpha, b) is ZERO for alpha in s.points for b in betas):
            return k
    raise AssertionError("bound too small")


def test_enumerate_examples():
    assert enumerate_s((1, 0, 0, 0, 0, 1)).points == ((0, 0, 0, 0),)
    assert set(enumerate_s((2, 0, 1, 1, 0, 2)).points) == {(1, 0, 1, 0), (0, 1, 0, 1)}
    assert enumerate_s((1, 1, 1, 1, 1, 1)).points == ()
    assert enumerate_s((3, 0, 0, 0, 0, 0)).points == ()
    with pytest.raises(ValueError):
        enumerate_s((0, 2, 0, 0, 2, 0))


def test_enumerate_matches_predicate():
    for a in [(2, 1, 0, 0, 1, 3), (3, 1, 2, 0, 1, 3), (4, 2, 1, 1, 2, 4)]:
        want = [y for y in itertools.product(range(5), repeat=4) if in_s(a, y)]
        assert list(enumerate_s(a).points) == want


def test_hilbert_function_examples():
    assert hilbert_function(enumerate_s((1, 0, 0, 0, 0, 1))) == {0: 1}
    assert hilbert_function(enumerate_s((2, 0, 1, 1, 0, 2))) == {2: 2}
    assert hilbert_function(enumerate_s((1, 1, 1, 1, 1, 1))) == {}


def test_beg_end_diam_examples():
    assert beg_end_diam(enumerate_s((1, 0, 0, 0, 0, 1))) == (0, 0, 1)
    assert beg_end_diam(enumerate_s((2, 1, 0, 0, 1, 3))) == (2, 3, 2)
    assert beg_end_diam(enumerate_s((1, 1, 1, 1, 1, 1))) == (None, None, 0)


def test_module_action_examples():
    s = enumerate_s((2, 0, 0, 0, 0, 2))
    assert len(s) == 9
    assert module_action(s, (0, 0, 0, 0), (1, 0, 0, 0)) == (1, 0, 0, 0)
    assert module_action(s, (1, 0, 0, 0), (1, 0, 0, 0)) is ZERO
    for alpha in s.points:
        assert module_action(s, alpha, (0, 0, 0, 0)) == alpha
    one = enumerate_s((1, 0, 0, 0, 0, 1))
    assert module_action(one, (0, 0, 0, 0), (1, 0, 0, 0)) is ZERO
    with pytest.raises(ValueError):
        module_action(one, (1, 0, 0, 0), (0, 0, 0, 0))


def test_k_direct_examples():
    assert k_direct(enumerate_s((1, 0, 0, 0, 0, 1))) == 1
    assert k_direct(enumerate_s((2, 0, 0, 0, 0, 2))) == 3
    assert k_direct(enumerate_s((1, 1, 1, 1, 1, 1))) == 0


@pytest.mark.parametrize("a", [(1, 0, 0, 0, 0, 1), (2, 0, 0, 0, 0, 2), (2, 1, 0, 0, 1, 3), (3, 1, 0, 1, 1, 3), (3, 0, 1, 1, 0, 3)])
def test_k_direct_matches_definition(a):
    s = enumerate_s(a)
    assert k_direct(s) == k_by_definition(s)


curves = st.tuples(*[st.integers(0, 4)] * 6).filter(any).map(lambda a: tetra.normalize_star(a)[0])


@given(curves)
def test_witness_lands_in_top_degree(a):
    s = enumerate_s(a)
    if not s.points:
        return
    for alpha in s.by_degree[tetra.script_a(a)]:
        w = witness(s, alpha)
        assert w in s and sum(w) == a[0] + a[5] - 2
        assert module_action(s, alpha, tuple(x - y for x, y in zip(w, alpha))) == w


@given(curves)
def test_buchsbaum_means_single_degree_and_trivial_action(a):
    if tetra.is_acm(a) or not tetra.is_buchsbaum(a):
        return
    s = enumerate_s(a)
    assert len(s.by_degree) == 1
    for alpha in s.points:
        for i in range(4):
            assert module_action(s, alpha, tuple(int(i == j) for j in range(4))) is ZERO


@given(curves)
def test_no_gap(a):
    degs = list(hilbert_function(enumerate_s(a)))
    assert degs == list(tetra.feasible_degrees(a))
