import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fatpoints.lattice import DivisorClass, parse_class
from fatpoints.oracle import Oracle
from fatpoints.reductions import (
    InconsistentOracleError,
    alpha_from_dim,
    append_simple,
    clamp,
    dim_from_alpha,
    effective_test,
    format_multiplicities,
    h0_of_class,
    normalize,
    parse_multiplicities,
)

ORACLE = Oracle()


def test_clamp_examples():
    assert clamp(parse_class("0;0,0,-2")) == parse_class("0;0,0,0")
    assert clamp(parse_class("4;2,-1,3")).m == (2, 0, 3)
    assert clamp(parse_class("5;1,1")) == parse_class("5;1,1")
    assert clamp(parse_class("-2;-1")).t == -2


def test_normalize_examples():
    assert normalize((1, 3, 0, 2, -4)) == (3, 2, 1)
    assert normalize(()) == ()
    assert normalize((2, 2, 2)) == (2, 2, 2)


def test_append_simple_examples():
    assert append_simple((2, 2), 3) == (2, 2, 1, 1, 1)
    assert append_simple((2, 2), 0) == (2, 2)
    assert append_simple((), 2) == (1, 1)
    with pytest.raises(ValueError):
        append_simple((1,), -1)


def test_parse_multiplicities():
    assert parse_multiplicities("2^5") == (2, 2, 2, 2, 2)
    assert parse_multiplicities("3, 2^2,1") == (3, 2, 2, 1)
    assert parse_multiplicities("") == ()
    assert parse_multiplicities("1,-4") == (1, -4)
    assert parse_multiplicities("7^0,1") == (1,)
    assert format_multiplicities(parse_multiplicities("2^3")) == "2,2,2"
    for bad in ["a", "2^", "1,,2", "^3", "2^-1"]:
        with pytest.raises(ValueError):
            parse_multiplicities(bad)


def test_dim_from_alpha_examples():
    assert dim_from_alpha((2, 2), 2, ORACLE.alpha) == 1
    assert dim_from_alpha((1,), 1, ORACLE.alpha) == 2
    assert dim_from_alpha((3, 3), 2, ORACLE.alpha) == 0
    assert dim_from_alpha((), 2, ORACLE.alpha) == 6


def test_dim_from_alpha_rejects_inconsistent_oracle():
    with pytest.raises(InconsistentOracleError):
        dim_from_alpha((1,), 2, lambda m: 0)


def test_alpha_from_dim_examples():
    assert alpha_from_dim((1, 1), ORACLE.dim) == 1
    assert alpha_from_dim((2, 2, 2), ORACLE.dim) == 3
    assert alpha_from_dim((), ORACLE.dim) == 0
    with pytest.raises(InconsistentOracleError):
        alpha_from_dim((2, 1), lambda m, t: 0)


def test_h0_of_class_examples():
    assert h0_of_class(parse_class("4;2,-1,2,2,2,2"), ORACLE.dim) == 1
    assert h0_of_class(parse_class("-1;0,0"), ORACLE.dim) == 0
    assert h0_of_class(parse_class("2;1,1"), ORACLE.dim) == 4


def test_effective_test_examples():
    assert effective_test(parse_class("2;2,2"), ORACLE.alpha)
    assert not effective_test(parse_class("1;1,1,1"), ORACLE.alpha)
    assert effective_test(parse_class("0;"), ORACLE.alpha)
    assert not effective_test(parse_class("-1;"), ORACLE.alpha)
    assert effective_test(parse_class("0;0,-3"), ORACLE.alpha)


raw = st.lists(st.integers(-3, 4), max_size=7)


@given(raw)
def test_normalize_idempotent_and_permutation_invariant(m):
    n = normalize(m)
    assert normalize(n) == n
    assert all(x > 0 for x in n)
    assert list(n) == sorted(n, reverse=True)
    assert normalize(list(reversed(m))) == n


@given(st.integers(-5, 5), raw)
def test_clamp_idempotent(t, m):
    c = DivisorClass(t, tuple(m))
    assert clamp(clamp(c)) == clamp(c)


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(1, 3), max_size=5), st.integers(0, 6), st.randoms())
def test_dim_is_permutation_invariant(m, t, rnd):
    perm = list(m)
    rnd.shuffle(perm)
    c1 = DivisorClass(t, tuple(m))
    c2 = DivisorClass(t, tuple(perm))
    assert h0_of_class(c1, ORACLE.dim) == h0_of_class(c2, ORACLE.dim)


def partitions(n, top=None):
    top = n if top is None else top
    if n == 0:
        yield ()
        return
    for first in range(min(n, top), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


@pytest.mark.parametrize("total", range(0, 7))
def test_equivalence_round_trip_small(total):
    # the full range (sum <= 10, t <= 8) runs in the acceptance module
    for m in partitions(total):
        for t in range(0, 7):
            assert dim_from_alpha(m, t, ORACLE.alpha) == ORACLE.dim(m, t)


def test_alpha_from_dim_agrees_with_direct_scan():
    for r in range(0, 6):
        for m in itertools.combinations_with_replacement((3, 2, 1), r):
            assert alpha_from_dim(m, ORACLE.dim) == ORACLE.alpha(m)


def test_drop_by_one_small():
    for m in [(), (1,), (2, 2), (3, 1, 1), (2, 2, 2, 2, 2)]:
        for t in range(0, 7):
            k = ORACLE.dim(m, t)
            if k > 0:
                assert ORACLE.dim(append_simple(m, 1), t) == k - 1
