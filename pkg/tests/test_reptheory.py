import cmath
import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import lens_spaces, torus_elements
from lenstorsion.lens import LensSpace
from lenstorsion.reptheory import (
    HighestWeight,
    TorusElement,
    character,
    check_f1_factorization,
    check_generating_identity,
    check_richardson_littlewood,
    complete_homogeneous,
    elementary_symmetric,
    fixed_dim,
    fixed_dims,
    graded_characters,
)


def e_oracle(t, j):
    z = t.coords()
    return sum(np.prod([z[k] for k in c]) for c in itertools.combinations(range(len(z)), j))


def h_oracle(t, q):
    z = t.coords()
    return sum(np.prod([z[k] for k in c]) for c in itertools.combinations_with_replacement(range(len(z)), q))


def average_oracle(lam, L, u):
    """Group average with the float character, no group-ring arithmetic."""
    mu = L.mu
    tot = sum(
        character(lam, TorusElement.gamma_power(L, ell)) * cmath.exp(2j * math.pi * u * ell / mu)
        for ell in range(mu)
    )
    return tot / mu


weights = st.integers(1, 3).flatmap(
    lambda n: st.lists(st.integers(-4, 4), min_size=n + 1, max_size=n + 1).map(
        lambda xs: HighestWeight(tuple(sorted(xs, reverse=True)))
    )
)


def test_highest_weight_runs():
    lam = HighestWeight.from_runs([(1, 3), (0, 2), (-1, 2)])
    assert lam.entries == (1, 1, 1, 0, 0, -1, -1)
    assert HighestWeight.from_runs([(2, 1), (1, 0), (0, 2)]).entries == (2, 0, 0)
    with pytest.raises(ValueError):
        HighestWeight((0, 1))
    assert HighestWeight.block(3, 5, 1, 1, 2).entries == (5, 1, -1, -2)
    assert HighestWeight.block(4, 5, 1, 1, 2).entries == (5, 1, 0, -1, -2)
    with pytest.raises(ValueError):
        HighestWeight.block(2, 1, 1, 1, 1)


def test_elementary_examples():
    assert elementary_symmetric(TorusElement.identity(2), 2) == 3
    t = TorusElement(5, (1, 2, 3))
    assert elementary_symmetric(t, 0) == 1
    assert abs(elementary_symmetric(TorusElement(4, (1, 3)), 1)) < 1e-15
    with pytest.raises(IndexError):
        elementary_symmetric(t, 4)


def test_complete_homogeneous_examples():
    assert complete_homogeneous(TorusElement.identity(1), 3) == 4
    assert complete_homogeneous(TorusElement(5, (1, 2)), 0) == 1
    assert complete_homogeneous(TorusElement(2, (1, 1)), 2) == pytest.approx(3)


@given(torus_elements(n_max=3, mu_max=16), st.integers(0, 4))
def test_elementary_matches_subset_enumeration(t, j):
    if j > t.n + 1:
        return
    assert abs(elementary_symmetric(t, j) - e_oracle(t, j)) < 1e-11


@given(torus_elements(n_max=3, mu_max=16), st.integers(0, 6))
def test_complete_matches_monomial_enumeration(t, q):
    assert abs(complete_homogeneous(t, q) - h_oracle(t, q)) < 1e-10


def test_character_examples():
    t = TorusElement(7, (1, 3, 6))
    assert character(HighestWeight((1, 0, 0)), t) == pytest.approx(elementary_symmetric(t, 1))
    assert character(HighestWeight((4, 0, 0)), t) == pytest.approx(complete_homogeneous(t, 4))
    assert character(HighestWeight((1, 1, 0)), TorusElement.identity(2)) == pytest.approx(3)


def ssyt_count(lam, m):
    """Semistandard tableaux of shape lam with entries in 1..m (brute force)."""
    cells = [(r, c) for r, row in enumerate(lam) for c in range(row)]
    count = 0
    for fill in itertools.product(range(1, m + 1), repeat=len(cells)):
        T = dict(zip(cells, fill))
        if all(T[(r, c)] <= T[(r, c + 1)] for (r, c) in cells if (r, c + 1) in T) and all(
            T[(r, c)] < T[(r + 1, c)] for (r, c) in cells if (r + 1, c) in T
        ):
            count += 1
    return count


@pytest.mark.parametrize("lam", [(1, 0, 0), (2, 1, 0), (2, 2, 0), (3, 1, 0), (1, 1, 1), (2, 1, 1), (3, 0)])
def test_dimension_counts_tableaux(lam):
    w = HighestWeight(lam)
    assert w.dimension() == ssyt_count(lam, len(lam))
    assert character(w, TorusElement.identity(w.n)) == pytest.approx(w.dimension())


@given(weights)
def test_dimension_is_character_at_identity(lam):
    assert abs(character(lam, TorusElement.identity(lam.n)) - lam.dimension()) < 1e-8 * lam.dimension()


@given(weights, st.integers(0, 10))
def test_determinant_twist(lam, m):
    # V(lam + m) = V(lam) (x) det^m
    t = TorusElement(9, tuple(range(1, lam.n + 2)))
    shifted = HighestWeight(tuple(x + m for x in lam.entries))
    det = cmath.exp(2j * math.pi * sum(t.exps) * m / t.mu)
    assert abs(character(shifted, t) - det * character(lam, t)) < 1e-9 * max(1, lam.dimension())


@given(weights, torus_elements(mu_max=12))
def test_dual_is_conjugate(lam, t):
    if t.n != lam.n:
        return
    dual = HighestWeight(tuple(-x for x in reversed(lam.entries)))
    assert abs(character(dual, t) - character(lam, t).conjugate()) < 1e-9 * max(1, lam.dimension())


def test_fixed_dim_examples():
    L = LensSpace(1, 2, (1, 1))
    v = HighestWeight((1, 0))
    assert fixed_dim(v, L, 1) == 2
    assert fixed_dim(v, L, 0) == 0
    S = LensSpace.sphere(2)
    lam = HighestWeight((3, 1, -2))
    assert fixed_dim(lam, S, 0) == lam.dimension()
    with pytest.raises(ValueError):
        fixed_dim(HighestWeight((1, 0, 0)), L, 0)


def test_graded_character_sphere_is_dimension():
    rows = [(2, 0, -1), (5, 1, 1), (0, 0, -3)]
    c = graded_characters(rows, (1, 1, 1), 1)
    assert [int(x) for x in c[:, 0]] == [HighestWeight(r).dimension() for r in rows]


@given(lens_spaces(n_max=3, mu_max=9), st.data())
def test_fixed_dim_agrees_with_float_average(L, data):
    xs = data.draw(st.lists(st.integers(-5, 5), min_size=L.n + 1, max_size=L.n + 1))
    lam = HighestWeight(tuple(sorted(xs, reverse=True)))
    for u in range(L.mu):
        avg = average_oracle(lam, L, u)
        assert abs(avg - fixed_dim(lam, L, u)) < 1e-8


@given(lens_spaces(), st.data())
def test_fixed_dims_partition_dimension(L, data):
    xs = data.draw(st.lists(st.integers(-8, 8), min_size=L.n + 1, max_size=L.n + 1))
    lam = HighestWeight(tuple(sorted(xs, reverse=True)))
    row = fixed_dims([lam.entries], L)[0]
    assert (row >= 0).all()
    assert int(row.sum()) == lam.dimension()


@given(lens_spaces(), st.data())
def test_fixed_dim_dual_swaps_character(L, data):
    xs = data.draw(st.lists(st.integers(-6, 6), min_size=L.n + 1, max_size=L.n + 1))
    lam = HighestWeight(tuple(sorted(xs, reverse=True)))
    dual = HighestWeight(tuple(-x for x in reversed(lam.entries)))
    for u in range(L.mu):
        assert fixed_dim(lam, L, u) == fixed_dim(dual, L, -u)


def test_large_weights_use_exact_arithmetic():
    L = LensSpace(3, 11, (1, 2, 3, 5))
    lam = HighestWeight((60, 20, -15, -60))
    row = fixed_dims([lam.entries], L)[0]
    assert int(row.sum()) == lam.dimension()


def test_richardson_littlewood_examples():
    assert check_richardson_littlewood(TorusElement.identity(2), 2, 1) < 1e-10
    assert check_richardson_littlewood(TorusElement(4, (1, 3)), 1, 1) < 1e-10
    with pytest.raises(ValueError):
        check_richardson_littlewood(TorusElement.identity(2), 0, 1)


@given(torus_elements(), st.integers(1, 12), st.integers(1, 4))
def test_richardson_littlewood(t, q, j):
    if j > t.n:
        return
    assert check_richardson_littlewood(t, q, j) <= 1e-10


def test_generating_identity_examples():
    assert check_generating_identity(TorusElement.identity(1), 0.5) <= 1e-8
    assert check_generating_identity(TorusElement(7, (1, 2, 4, 6)), 0.3) <= 1e-8
    assert check_generating_identity(TorusElement(5, (1, 2)), 1e-9) <= 1e-8


@given(torus_elements(), st.floats(1e-6, 0.9))
def test_generating_identity(t, X):
    assert check_generating_identity(t, X) <= 1e-8


@given(torus_elements(), st.floats(0, 1))
def test_f1_factorization(t, X):
    assert check_f1_factorization(t, X) <= 1e-12
