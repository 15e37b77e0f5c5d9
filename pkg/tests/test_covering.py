import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helicover.covering import (SampledPath, circle_path, deck_transform, lift_path,
                                monodromy_check, random_arc_loop, winding_number)
from helicover.errors import AmbiguousWinding, NotClosed, StepTooLarge, ZeroMagnitude
from helicover.numerics import complex_exp

TWO_PI = 2 * math.pi


def analytic_winding(center, radius, turns):
    # a circle winds about 0 iff it encloses it
    return turns if abs(center) < radius else 0


def assert_lift_exact(path, lifted):
    for base, z in zip(path.points, lifted.points):
        assert abs(complex_exp(z) - base) <= 1e-12 * max(1, abs(base)) * (1 + abs(z.imag))


def test_constant_path():
    path = SampledPath((1 + 0j,) * 5)
    lifted = lift_path(path, 0)
    assert lifted.points == (0j,) * 5
    assert lifted.end_sheet == 0


def test_unit_circle_lift():
    path = circle_path(samples=64)
    assert path.closed and len(path) == 65
    lifted = lift_path(path, 0)
    assert lifted.points[-1] == pytest.approx(TWO_PI * 1j, abs=1e-12)
    assert lifted.end_sheet == 1
    assert_lift_exact(path, lifted)
    for a, b in zip(lifted.points, lifted.points[1:]):
        assert abs(b.imag - a.imag) < math.pi


def test_double_clockwise_circle():
    path = circle_path(radius=2, samples=128, turns=-2)
    assert analytic_winding(0, 2, -2) == -2
    assert lift_path(path, 0).end_sheet == -2
    assert winding_number(path) == -2
    assert monodromy_check(path) == -2


def test_winding_examples():
    assert winding_number(circle_path()) == 1
    assert winding_number(SampledPath((2 - 1j,) * 4, closed=True)) == 0
    with pytest.raises(NotClosed):
        winding_number(SampledPath((1, 1j)))


@pytest.mark.parametrize("center, radius, turns", [(3, 1, 1), (0, 1, 1), (0, 0.5, 3), (-0.2j, 1, -1),
                                                   (1 + 1j, 0.5, 4)])
def test_monodromy_matches_analytic_winding(center, radius, turns):
    path = circle_path(center, radius, samples=64 * abs(turns), turns=turns)
    assert monodromy_check(path, 5) == analytic_winding(center, radius, turns)


def test_path_validation():
    with pytest.raises(ZeroMagnitude):
        SampledPath((1, 0, 1j))
    with pytest.raises(StepTooLarge):
        SampledPath((1, -1))
    with pytest.raises(StepTooLarge):
        SampledPath((1, complex(math.cos(3.1), math.sin(3.1))))
    SampledPath((1, complex(math.cos(3.0), math.sin(3.0))))
    with pytest.raises(NotClosed):
        SampledPath((1, 1j, -1), closed=True)
    with pytest.raises(StepTooLarge):
        circle_path(samples=2)


def test_ambiguous_winding_is_an_error():
    # closure is only checked to abs_eps; a looser tolerance admits a gap
    from helicover.numerics import Tolerance

    pts = tuple(complex(math.cos(t), math.sin(t)) for t in np.linspace(0, TWO_PI - 1e-6, 80))
    path = SampledPath(pts, closed=True, tol=Tolerance(1e-3, 1e-3))
    with pytest.raises(AmbiguousWinding):
        winding_number(path)


def test_deck_transform():
    z = 0.3 - 1.7j
    assert deck_transform(z, 0) == z
    assert deck_transform(0, 1) == TWO_PI * 1j
    rng = np.random.default_rng(0)
    for u, v, k in zip(rng.uniform(-5, 5, 50), rng.uniform(-20, 20, 50), rng.integers(-5, 6, 50)):
        z = complex(u, v)
        w = complex_exp(deck_transform(z, int(k)))
        assert abs(w - complex_exp(z)) <= 1e-12 * abs(w) * (1 + abs(v) + abs(k) * TWO_PI)


@settings(max_examples=60, deadline=None)
@given(st.integers(-5, 5), st.integers(0, 2**32 - 1))
def test_random_loops_monodromy_equals_winding(w, seed):
    loop = random_arc_loop(np.random.default_rng(seed), w)
    assert winding_number(loop) == w
    assert monodromy_check(loop, 0) == w
    assert_lift_exact(loop, lift_path(loop, 0))


@settings(max_examples=40, deadline=None)
@given(st.integers(-5, 5), st.integers(-10, 10), st.integers(-10, 10), st.integers(0, 2**32 - 1))
def test_lifts_from_different_sheets_differ_by_deck(w, k1, k2, seed):
    loop = random_arc_loop(np.random.default_rng(seed), w)
    l1, l2 = lift_path(loop, k1), lift_path(loop, k2)
    shift = TWO_PI * (k1 - k2)
    for a, b in zip(l1.points, l2.points):
        assert a.real == b.real
        assert abs((a.imag - b.imag) - shift) <= 1e-12 * max(1, abs(a.imag), abs(b.imag))
    assert l1.end_sheet - l2.end_sheet == k1 - k2


@settings(max_examples=40, deadline=None)
@given(st.integers(-4, 4), st.integers(-4, 4), st.integers(0, 2**32 - 1))
def test_monodromy_is_additive(w1, w2, seed):
    rng = np.random.default_rng(seed)
    a = random_arc_loop(rng, w1)
    # second loop rebased to start where the first does
    b = random_arc_loop(rng, w2)
    rot = a.points[0] / b.points[0]
    b = SampledPath(tuple(p * rot for p in b.points[:-1]) + (a.points[0],), closed=True)
    both = a.concat(b)
    assert monodromy_check(both) == monodromy_check(a) + monodromy_check(b) == w1 + w2
