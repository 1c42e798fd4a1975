import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sinrhyper.geometry import (
    G_HALF_WIDTH,
    GeometryError,
    Point2,
    PolarPoint,
    apply_scaling,
    cart_to_polar,
    dist,
    g_delta,
    g_delta_chord,
    max_pairwise_distance_in_sector,
    minimize_g,
    polar_to_cart,
    radial_project,
)

G_ZERO = (3 + math.sqrt(5)) / 5
coord = st.floats(-10, 10, allow_nan=False)


def test_dist_basic():
    assert dist((0, 0), (1, 0)) == 1
    assert dist((1, 0), (0, 1)) == pytest.approx(math.sqrt(2), abs=1e-15)
    assert dist(Point2(3, 4), Point2(3, 4)) == 0


def test_dist_chord_on_unit_circle():
    a = 2 * math.pi / 5
    # chord formula 2 sin(angle/2), cross-checked by coordinates
    expected = 2 * math.sin(math.pi / 5)
    assert expected == pytest.approx(1.1755705045849463, abs=1e-12)
    assert dist((1, 0), (math.cos(a), math.sin(a))) == pytest.approx(expected, abs=1e-12)


def test_point_rejects_non_finite():
    with pytest.raises(GeometryError):
        Point2(float("nan"), 0.0)
    with pytest.raises(GeometryError):
        Point2(0.0, float("inf"))


@pytest.mark.parametrize(
    "r, theta, xy",
    [(1, 0, (1, 0)), (1, math.pi / 2, (0, 1)), (2, math.pi, (-2, 0))],
)
def test_polar_to_cart(r, theta, xy):
    p = polar_to_cart(PolarPoint(r, theta))
    assert p.x == pytest.approx(xy[0], abs=1e-12)
    assert p.y == pytest.approx(xy[1], abs=1e-12)


def test_polar_angle_normalized():
    assert PolarPoint(1, 3 * math.pi).theta == pytest.approx(math.pi)
    assert PolarPoint(1, -math.pi).theta == pytest.approx(math.pi)
    with pytest.raises(GeometryError):
        PolarPoint(-1, 0)


def test_cart_to_polar_origin():
    with pytest.raises(GeometryError):
        cart_to_polar((0, 0))


@given(coord, coord)
def test_polar_round_trip(x, y):
    if x == 0 and y == 0:
        return
    q = polar_to_cart(cart_to_polar((x, y)))
    assert q.x == pytest.approx(x, abs=1e-12 * max(1, abs(x), abs(y)))
    assert q.y == pytest.approx(y, abs=1e-12 * max(1, abs(x), abs(y)))


def test_apply_scaling_examples():
    assert apply_scaling([(1, 0)], 2) == [Point2(2, 0)]
    assert apply_scaling([(0, 0), (1, 1)], 0.5) == [Point2(0, 0), Point2(0.5, 0.5)]
    pts = [Point2(0.3, -1.2), Point2(5, 7)]
    assert apply_scaling(pts, 1) == pts
    with pytest.raises(GeometryError):
        apply_scaling(pts, 0)
    with pytest.raises(GeometryError):
        apply_scaling(pts, -1)


@given(coord, coord, coord, coord, st.floats(0.01, 100))
def test_scaling_multiplies_distances(x1, y1, x2, y2, rho):
    p, q = apply_scaling([(x1, y1), (x2, y2)], rho)
    assert dist(p, q) == pytest.approx(rho * dist((x1, y1), (x2, y2)), abs=1e-12 * max(1, rho) * 30)


def test_radial_project_examples():
    assert radial_project([(0.5, 0)]) == [Point2(1, 0)]
    on_circle = [Point2(math.cos(t), math.sin(t)) for t in (0.1, 2.0, -2.5)]
    for p, q in zip(radial_project(on_circle), on_circle):
        assert dist(p, q) <= 1e-15
    with pytest.raises(GeometryError):
        radial_project([(0, 0)])
    with pytest.raises(GeometryError):
        radial_project([(1.2, 0)])


def test_radial_project_pair_example():
    a = 2 * math.pi / 5
    pts = [Point2(1, 0), Point2(0.8 * math.cos(a), 0.8 * math.sin(a))]
    before = dist(*pts)
    after = dist(*radial_project(pts))
    # both computed directly: 2 sin(pi/5) vs the law-of-cosines value at radius 0.8
    assert before == pytest.approx(math.sqrt(1 + 0.64 - 1.6 * math.cos(a)), abs=1e-12)
    assert after == pytest.approx(2 * math.sin(math.pi / 5), abs=1e-12)
    assert before > 1 and after >= before


@settings(max_examples=300)
@given(st.lists(st.tuples(st.floats(0.05, 1.0), st.floats(-math.pi, math.pi)), min_size=2, max_size=5))
def test_radial_projection_monotone(polar):
    pts = [polar_to_cart(PolarPoint(r, t)) for r, t in polar]
    pairs = [(i, j) for i in range(len(pts)) for j in range(i + 1, len(pts))]
    if any(dist(pts[i], pts[j]) <= 1 for i, j in pairs):
        return
    proj = radial_project(pts)
    for i, j in pairs:
        assert dist(proj[i], proj[j]) >= dist(pts[i], pts[j]) - 1e-12
    for p, (r, t) in zip(proj, polar):
        assert p.norm() == pytest.approx(1.0, abs=1e-15)


def test_g_at_zero():
    assert g_delta(0.0) == pytest.approx(G_ZERO, abs=1e-12)
    assert G_ZERO == pytest.approx(1.0472136, abs=1e-7)


def test_g_endpoint_matches_chord_form():
    # two independent evaluations of the same quantity
    for d in (G_HALF_WIDTH, -G_HALF_WIDTH, 0.1, 0.0):
        assert g_delta(d) == pytest.approx(g_delta_chord(d), abs=1e-12)
    assert g_delta(G_HALF_WIDTH) == pytest.approx(g_delta(-G_HALF_WIDTH), abs=1e-12)
    # frozen value from the chord form at delta = pi/15: chords at 7pi/15 and pi/3
    expected = (2 * math.sin(7 * math.pi / 30)) ** -4 + 1.0
    assert g_delta(G_HALF_WIDTH) == pytest.approx(expected, abs=1e-12)


def test_g_domain():
    with pytest.raises(GeometryError):
        g_delta(0.3)
    with pytest.raises(GeometryError):
        g_delta_chord(-0.3)


def test_g_even_and_convex_on_grid():
    grid = np.linspace(-G_HALF_WIDTH, G_HALF_WIDTH, 2001)
    vals = g_delta(grid)
    assert np.max(np.abs(vals - vals[::-1])) <= 1e-12
    assert np.min(vals[2:] - 2 * vals[1:-1] + vals[:-2]) >= -1e-9


def test_g_second_derivative_positive():
    # finite-difference oracle for the closed-form second derivative being positive
    h = 1e-4
    for d in np.linspace(-G_HALF_WIDTH + h, G_HALF_WIDTH - h, 41):
        assert (g_delta(d + h) - 2 * g_delta(d) + g_delta(d - h)) / h**2 > 0


def test_minimize_g():
    d, g = minimize_g(1001)
    assert d == 0.0
    assert g == pytest.approx(G_ZERO, abs=1e-9)
    d3, g3 = minimize_g(3)
    assert d3 == 0.0 and g3 == pytest.approx(g_delta(0.0), abs=1e-15)
    grid = np.linspace(-G_HALF_WIDTH, G_HALF_WIDTH, 1001)
    assert np.all(g_delta(grid) > 1)
    with pytest.raises(ValueError):
        minimize_g(2)


def test_sector_examples():
    assert max_pairwise_distance_in_sector([PolarPoint(1, 0), PolarPoint(1, math.pi / 3)]) == pytest.approx(1.0, abs=1e-12)
    assert max_pairwise_distance_in_sector([PolarPoint(0.5, 0.2)]) == 0
    with pytest.raises(GeometryError):
        max_pairwise_distance_in_sector([PolarPoint(1, 1.2)])
    with pytest.raises(GeometryError):
        max_pairwise_distance_in_sector([PolarPoint(1.1, 0.2)])


def test_sector_random_samples():
    rng = np.random.default_rng(5)
    samples = [PolarPoint(float(np.sqrt(u)), float(t)) for u, t in zip(rng.random(10_000), rng.uniform(0, math.pi / 3, 10_000))]
    got = max_pairwise_distance_in_sector(samples)
    # exhaustive pairwise oracle on a subsample must not exceed the reported maximum
    xy = np.array([[p.r * math.cos(p.theta), p.r * math.sin(p.theta)] for p in samples[:500]])
    sub = np.sqrt(((xy[:, None] - xy[None]) ** 2).sum(-1)).max()
    assert sub <= got <= 1 + 1e-12
