import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helicover.errors import ExpOverflow, NonFiniteValue, ZeroMagnitude
from helicover.numerics import (GridSpec, Tolerance, complex_exp, default_tolerance, make_grid,
                                principal_arg)

# mpmath, 40 digits
E = 2.7182818284590452354


@pytest.mark.parametrize("w, expected", [(1, 0.0), (-1, math.pi), (-2j, -math.pi / 2)])
def test_principal_arg_examples(w, expected):
    assert principal_arg(w) == expected


def test_principal_arg_cut_closed_at_plus_pi():
    assert principal_arg(complex(-1.0, -0.0)) == math.pi
    assert principal_arg(complex(-1.0, 0.0)) == math.pi


def test_principal_arg_rejects_puncture():
    with pytest.raises(ZeroMagnitude):
        principal_arg(0)
    with pytest.raises(ZeroMagnitude):
        principal_arg(1e-13)
    with pytest.raises(ZeroMagnitude):
        principal_arg(1e-3, Tolerance(1e-2, 1e-12))


def test_complex_exp_examples():
    assert complex_exp(0) == 1
    w = complex_exp(1j * math.pi)
    assert w.real == -1 and abs(w.imag) < 1e-15
    assert complex_exp(1) == pytest.approx(E, rel=1e-15)


def test_complex_exp_refuses_out_of_range():
    with pytest.raises(ExpOverflow):
        complex_exp(710)
    with pytest.raises(ExpOverflow):
        complex_exp(-720 + 1j)
    complex_exp(709)


@pytest.mark.parametrize("bad", [float("nan"), complex(0, float("inf")), "x"])
def test_non_finite_rejected(bad):
    with pytest.raises(NonFiniteValue):
        complex_exp(bad)


@given(st.floats(min_value=-math.pi, max_value=math.pi, exclude_min=True))
def test_arg_of_unit_exp_recovers_angle(v):
    assert principal_arg(complex_exp(1j * v)) == pytest.approx(v, abs=1e-12)


@given(st.floats(-300, 300), st.floats(-1e4, 1e4))
def test_exp_modulus(u, v):
    assert abs(complex_exp(complex(u, v))) == pytest.approx(math.exp(u), rel=1e-12)


def test_make_grid_corners():
    spec = GridSpec(0, 1, 0, 1, 2, 2)
    assert make_grid(spec) == [0, 1j, 1, 1 + 1j]
    assert len(make_grid(spec)) == 4


def test_make_grid_centre_sample():
    pts = make_grid(GridSpec(-1, 1, -1, 1, 3, 3))
    assert pts[4] == 0
    assert 0 in pts


def test_make_grid_is_pure():
    spec = GridSpec(-0.3, 2.7, -5.1, 1.9, 17, 23)
    assert make_grid(spec) == make_grid(GridSpec(-0.3, 2.7, -5.1, 1.9, 17, 23))
    assert len(make_grid(spec)) == spec.size == 17 * 23


def test_make_grid_uniform_spacing():
    pts = make_grid(GridSpec(0, 3, -2, 2, 4, 5))
    us = sorted({p.real for p in pts})
    vs = sorted({p.imag for p in pts})
    assert us == [0, 1, 2, 3]
    assert vs == [-2, -1, 0, 1, 2]


@pytest.mark.parametrize("args", [
    (1, 0, 0, 1, 2, 2), (0, 1, 1, 1, 2, 2), (0, 1, 0, 1, 1, 2), (0, 1, 0, 1, 2, 2.5),
])
def test_gridspec_validation(args):
    with pytest.raises(ValueError):
        GridSpec(*args)


def test_tolerance_policy(monkeypatch):
    t = Tolerance()
    assert (t.abs_eps, t.rel_eps) == (1e-12, 1e-12)
    assert t.bound(0) == 1e-12 and t.bound(1e3) == pytest.approx(1e-9)
    with pytest.raises(ValueError):
        Tolerance(0, 1e-12)
    monkeypatch.setenv("HELICOVER_EPS", "1e-8")
    assert default_tolerance() == Tolerance(1e-8, 1e-8)
    monkeypatch.setenv("HELICOVER_EPS", "nope")
    with pytest.raises(ValueError):
        default_tolerance()
