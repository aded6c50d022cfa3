import pytest

from octahedron.pyramid import (
    Pyramid,
    alpha,
    beta,
    enumerate_centers,
    enumerate_points,
    is_center,
    is_point,
    on_alpha_faces,
    on_beta_faces,
    wavefront_order,
)
from oracles import brute_centers, brute_points


def test_smallest_pyramid():
    assert set(enumerate_points(1)) == {(0, 0, 0), (2, 0, 0), (0, 2, 0), (2, 2, 0), (1, 1, 1)}


@pytest.mark.parametrize("n,count", [(1, 5), (2, 14), (3, 30)])
def test_point_counts(n, count):
    assert len(enumerate_points(n)) == count


@pytest.mark.parametrize("n", range(1, 9))
def test_points_match_box_scan(n):
    pts = enumerate_points(n)
    assert len(set(pts)) == len(pts)
    assert set(pts) == brute_points(n)
    assert [p.k for p in pts] == sorted(p.k for p in pts)
    assert len(pts) == sum((n - k + 1) ** 2 for k in range(n + 1))
    assert all(is_point(n, p) for p in pts)


def test_bad_size():
    with pytest.raises(ValueError):
        enumerate_points(0)


@pytest.mark.parametrize("n,count", [(1, 0), (2, 1), (3, 5), (4, 14)])
def test_center_counts(n, count):
    assert len(enumerate_centers(n)) == count


def test_single_center_n2():
    assert [tuple(c) for c in enumerate_centers(2)] == [(2, 2, 1)]


@pytest.mark.parametrize("n", range(1, 8))
def test_centers_match_octahedra_that_fit(n):
    centers = enumerate_centers(n)
    assert {tuple(c) for c in centers} == brute_centers(n)
    assert all(is_center(n, c) for c in centers)
    assert not is_center(n, (1, 1, 1))


def test_alpha_examples():
    assert alpha(3, 3, 3) == (3, 3, 3)
    assert alpha(3, 2, 1) == (3, 1, 1)
    for j in range(4):
        assert alpha(3, 0, j) == (0, 2 * j, 0)


def test_beta_examples():
    assert beta(3, 3, 3) == (3, 3, 3)
    assert beta(3, 0, 0) == (6, 6, 0)
    assert beta(3, 2, 1) == (3, 5, 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_embeddings_injective_onto_faces(n):
    cells = [(i, j) for i in range(n + 1) for j in range(n + 1)]
    a = [alpha(n, i, j) for i, j in cells]
    b = [beta(n, i, j) for i, j in cells]
    assert len(set(a)) == len(b) == len(set(b)) == (n + 1) ** 2
    pts = brute_points(n)
    assert set(a) == {p for p in pts if p[0] == p[2] or p[1] == p[2]}
    assert set(b) == {p for p in pts if 2 * n - p[0] == p[2] or 2 * n - p[1] == p[2]}
    assert all(on_alpha_faces(n, p) for p in a)
    assert all(on_beta_faces(n, p) for p in b)
    assert alpha(n, n, n) == beta(n, n, n) == (n, n, n)


def test_schedule_small():
    assert wavefront_order(1) == ()
    ((center, unknown),) = wavefront_order(2)
    assert center == (2, 2, 1) and unknown == (3, 3, 1)


@pytest.mark.parametrize("n", range(1, 8))
@pytest.mark.parametrize("direction", ["forward", "backward"])
def test_schedule_solves_each_point_once_from_known_ones(n, direction):
    face = on_alpha_faces if direction == "forward" else on_beta_faces
    known = {p for p in brute_points(n) if p[2] == 0 or face(n, p)}
    order = wavefront_order(n, direction)
    for center, unknown in order:
        assert unknown == (center.high if direction == "forward" else center.low)
        assert all(v in known for v in center.vertices() if v != unknown)
        assert unknown not in known
        known.add(unknown)
    assert known == brute_points(n)
    assert len(order) == len(enumerate_centers(n))


def test_bad_direction():
    with pytest.raises(ValueError):
        wavefront_order(3, "sideways")


def test_pyramid_levels_roundtrip():
    f = Pyramid.from_function(3, lambda i, j, k: 100 * k + 10 * i + j)
    assert Pyramid.from_levels(f.levels()) == f
    assert f.level(3) == [[333]]
    assert f.apex == 333
    assert f[1, 1, 1] == 111
