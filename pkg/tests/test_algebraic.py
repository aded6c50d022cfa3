import random
from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from octahedron import CornerGrid, SquareArray
from octahedron.algebraic import (
    bareiss_determinant,
    condensation_determinant,
    dodgson_defects,
    dodgson_determinant,
    dodgson_propagate,
    extract_G,
    extract_H,
    genetic_from_G,
    genetic_to_pyramid,
    is_A_polarized,
    is_totally_positive_solid,
    matrix_from_genetic,
    solid_minor_pyramid,
)
from octahedron.errors import DivisionByZero, SizeLimitExceeded
from octahedron.pyramid import Pyramid, enumerate_points
from oracles import cofactor_det, path_count, random_rational_matrix

IDENTITY2 = SquareArray([[1, 0], [0, 1]])


def positive_genetic(rng, n):
    return SquareArray([[Fraction(rng.randint(1, 9), rng.randint(1, 4)) for _ in range(n)] for _ in range(n)])


def test_identity_minors():
    F = solid_minor_pyramid(IDENTITY2)
    assert F[2, 2, 2] == 1
    assert F[1, 1, 1] == F[3, 3, 1] == 1
    assert F[1, 3, 1] == F[3, 1, 1] == 0


def test_minors_against_cofactor_oracle():
    rng = random.Random(11)
    X = random_rational_matrix(rng, 4)
    F = solid_minor_pyramid(X)
    for i, j, k in enumerate_points(4):
        if k == 0:
            assert F[i, j, k] == 1
            continue
        r0, c0 = (i - k) // 2, (j - k) // 2
        sub = [[X[r0 + a, c0 + b] for b in range(1, k + 1)] for a in range(1, k + 1)]
        assert F[i, j, k] == cofactor_det(sub)
    # level 1 is the matrix itself, the apex its determinant
    assert all(F[2 * r - 1, 2 * c - 1, 1] == X[r, c] for r, c in X.cells())
    assert F.apex == cofactor_det(X.tolist())
    assert F[2, 2, 2] == cofactor_det([[X[1, 1], X[1, 2]], [X[2, 1], X[2, 2]]])
    assert F[4, 4, 2] == cofactor_det([[X[2, 2], X[2, 3]], [X[3, 2], X[3, 3]]])


def test_minor_pyramids_are_polarized():
    rng = random.Random(1)
    for _ in range(50):
        assert is_A_polarized(solid_minor_pyramid(random_rational_matrix(rng, 4)))


def test_perturbed_pyramid_is_not_polarized():
    F = solid_minor_pyramid(SquareArray([[2, 1, 1], [1, 2, 1], [1, 1, 2]]))
    values = dict(F.items())
    values[3, 3, 1] += 1
    G = Pyramid(3, values)
    assert not is_A_polarized(G)
    assert next(dodgson_defects(G)) is not None


def test_n1_is_vacuously_polarized():
    assert is_A_polarized(Pyramid.from_function(1, lambda i, j, k: 1 if k == 0 else 7))
    assert not is_A_polarized(Pyramid.from_function(1, lambda i, j, k: 2))


def test_propagation_reproduces_minors_of_tp_matrix():
    rng = random.Random(5)
    for n in range(1, 5):
        X = matrix_from_genetic(positive_genetic(rng, n))
        F = solid_minor_pyramid(X)
        assert dodgson_propagate(extract_G(F)) == F


def test_unit_gauss_data_give_pascal_minors():
    # G = 1 everywhere is the Gauss data of W = 1, whose matrix counts lattice paths
    n = 4
    F = dodgson_propagate(CornerGrid.from_function(n, lambda i, j: 1))
    pascal = SquareArray.from_function(n, path_count)
    assert F == solid_minor_pyramid(pascal)
    assert F == genetic_to_pyramid(SquareArray.from_function(n, lambda i, j: 1))
    assert F[3, 3, 1] == 2
    assert F.apex == 1


def test_zero_gauss_corner_raises():
    G = CornerGrid.from_function(2, lambda i, j: 0 if (i, j) == (1, 1) else 1)
    with pytest.raises(DivisionByZero) as info:
        dodgson_propagate(G)
    assert tuple(info.value.point) == (1, 1, 1)


def test_propagation_needs_unit_boundary():
    with pytest.raises(ValueError):
        dodgson_propagate(CornerGrid.from_function(2, lambda i, j: 2))


def test_two_path_value():
    W = SquareArray([[2, 3], [5, 7]])
    F = genetic_to_pyramid(W)
    assert F[3, 3, 1] == W[1, 2] * W[1, 1] * W[2, 1] + W[1, 2] * W[2, 2] * W[2, 1]


def test_unit_genetic_array_counts_paths():
    n = 5
    F = genetic_to_pyramid(SquareArray.from_function(n, lambda i, j: 1))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            assert F[2 * i - 1, 2 * j - 1, 1] == path_count(i, j)


def test_genetic_n1():
    assert genetic_to_pyramid(SquareArray([[Fraction(3, 4)]]))[1, 1, 1] == Fraction(3, 4)
    assert matrix_from_genetic(SquareArray([[5]])) == SquareArray([[5]])


def test_unique_path_entry():
    W = SquareArray([[2, 3, 1], [5, 7, 1], [1, 1, 1]])
    assert matrix_from_genetic(W)[2, 1] == W[2, 1] * W[1, 1]


def test_genetic_size_guard():
    with pytest.raises(SizeLimitExceeded):
        genetic_to_pyramid(SquareArray.zeros(7))
    with pytest.raises(SizeLimitExceeded):
        matrix_from_genetic(SquareArray.zeros(7))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_lindstrom(n):
    rng = random.Random(n)
    for _ in range(5):
        W = random_rational_matrix(rng, n)
        assert genetic_to_pyramid(W) == solid_minor_pyramid(matrix_from_genetic(W))


def test_identity_gauss_data():
    G = extract_G(solid_minor_pyramid(IDENTITY2))
    assert G[1, 1] == 1 and G[2, 2] == 1 and G[2, 1] == 0
    assert all(G[i, j] == 1 for i, j in G.cells(boundary=True) if i * j == 0)


def test_gauss_data_are_rectangle_products():
    rng = random.Random(3)
    W = positive_genetic(rng, 4)
    G = extract_G(genetic_to_pyramid(W))
    for i, j in G.cells():
        assert G[i, j] == prod(W[a, b] for a in range(1, i + 1) for b in range(1, j + 1))


def test_apex_shared_by_both_faces():
    X = random_rational_matrix(random.Random(8), 4)
    F = solid_minor_pyramid(X)
    assert extract_G(F)[4, 4] == extract_H(F)[4, 4] == cofactor_det(X.tolist())


def test_recover_genetic_array():
    rng = random.Random(9)
    for n in range(1, 5):
        for _ in range(5):
            W = positive_genetic(rng, n)
            assert genetic_from_G(extract_G(genetic_to_pyramid(W))) == W


def test_recover_unit_and_scalar():
    assert genetic_from_G(CornerGrid.from_function(3, lambda i, j: 1)) == SquareArray.from_function(3, lambda i, j: 1)
    assert genetic_from_G(CornerGrid([[1, 1], [1, 2]])) == SquareArray([[2]])


def test_recover_rejects_zero():
    with pytest.raises(DivisionByZero):
        genetic_from_G(CornerGrid([[1, 1, 1], [1, 0, 1], [1, 1, 1]]))


def test_total_positivity():
    rng = random.Random(4)
    for n in range(1, 5):
        assert is_totally_positive_solid(matrix_from_genetic(positive_genetic(rng, n)))
    assert not is_totally_positive_solid(IDENTITY2)
    assert not is_totally_positive_solid(SquareArray([[1, 1], [-1, 1]]))


def test_small_determinants():
    assert dodgson_determinant(IDENTITY2) == 1
    assert dodgson_determinant(SquareArray([[1, 2], [3, 4]])) == -2
    assert dodgson_determinant(SquareArray([[Fraction(1, 2)]])) == Fraction(1, 2)


def test_random_determinants_against_cofactors():
    rng = random.Random(2024)
    for t in range(200):
        rows = [[rng.randint(-9, 9) for _ in range(5)] for _ in range(5)]
        if t % 4 == 0:
            rows[4] = [a + b for a, b in zip(rows[0], rows[1])]
        want = cofactor_det(rows)
        assert dodgson_determinant(SquareArray(rows)) == want
        assert bareiss_determinant(rows) == want


def test_zero_pivot_falls_back():
    ones = SquareArray.from_function(4, lambda i, j: 1)
    notes = []
    assert dodgson_determinant(ones, fallback=notes) == 0
    assert len(notes) == 1
    swap = SquareArray([[1, 0, 0], [0, 0, 1], [0, 1, 0]])
    with pytest.raises(DivisionByZero):
        condensation_determinant(swap)
    assert dodgson_determinant(swap) == -1


def test_rational_determinant():
    X = random_rational_matrix(random.Random(6), 5)
    assert dodgson_determinant(X) == cofactor_det(X.tolist())


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_determinant_property(rows):
    assert dodgson_determinant(SquareArray(rows)) == cofactor_det(rows)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(1, 6), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_positive_genetic_round_trip_property(rows):
    W = SquareArray(rows)
    F = genetic_to_pyramid(W)
    assert is_A_polarized(F)
    assert dodgson_propagate(extract_G(F)) == F
    assert genetic_from_G(extract_G(F)) == W
