"""Solver checks.  Closed-form oracles come first: the quadrature value
of the kink energy and the symbolic residual of the kink profile are
established independently before the integrator is trusted."""

import math

import numpy as np
import pytest
import sympy
from scipy.integrate import quad

from z22field import sim


# ----------------------------------------------------------------------
# oracles
# ----------------------------------------------------------------------

def test_oracle_kink_solves_the_reduced_equation():
    x, t, a, v = sympy.symbols("x t alpha v", real=True)
    gamma = 1 / sympy.sqrt(1 - v ** 2)
    phi = 2 * sympy.atan(sympy.exp(a * gamma * (x - v * t)))
    res = (sympy.diff(phi, t, 2) - sympy.diff(phi, x, 2)
           + sympy.Rational(1, 2) * a ** 2 * sympy.sin(2 * phi))
    assert sympy.simplify(res) == 0


@pytest.mark.parametrize("alpha", [0.5, 1.0, 2.0])
def test_oracle_kink_energy_by_quadrature(alpha):
    def density(x):
        phi = 2.0 * math.atan(math.exp(alpha * x))
        dphi = alpha / math.cosh(alpha * x)
        return 0.5 * dphi ** 2 + 0.5 * alpha ** 2 * math.sin(phi) ** 2

    val, err = quad(density, -80.0 / alpha, 80.0 / alpha, limit=400)
    assert err < 1e-9
    assert abs(val - sim.kink_energy(alpha)) < 1e-9
    assert abs(val - 2.0 * alpha) < 1e-9


# ----------------------------------------------------------------------
# configuration and initial data
# ----------------------------------------------------------------------

def test_config_rejects_cfl_violation():
    with pytest.raises(ValueError):
        sim.SimConfig(dx=0.1, dt=0.2)


def test_config_rejects_unknown_names():
    with pytest.raises(ValueError):
        sim.SimConfig(model="kdv")
    with pytest.raises(ValueError):
        sim.SimConfig(boundary="absorbing")
    with pytest.raises(ValueError):
        sim.SimConfig(initial="breather")


def test_config_default_timestep():
    cfg = sim.SimConfig(dx=0.1)
    assert cfg.dt == pytest.approx(0.04)


def test_kink_profile_rejects_superluminal_speed():
    cfg = sim.SimConfig(initial="kink", params={"v": 1.0})
    with pytest.raises(ValueError):
        sim.init_profile(cfg)


def test_kink_profile_matches_closed_form():
    cfg = sim.SimConfig(alpha=1.0, dx=0.1, initial="kink",
                        params={"v": 0.5, "x0": 1.0})
    state = sim.init_profile(cfg)
    phi, pi = sim.kink_closed_form(state.x, 0.0, 1.0, 0.5, 1.0)
    assert np.array_equal(state.phi00, phi)
    assert np.array_equal(state.pi00, pi)
    assert not state.phi11.any()


def test_state_check_catches_nan():
    cfg = sim.SimConfig(initial="zero")
    state = sim.init_profile(cfg)
    state.phi00[3] = math.nan
    with pytest.raises(RuntimeError):
        state.check()


# ----------------------------------------------------------------------
# update map
# ----------------------------------------------------------------------

def test_run_is_deterministic():
    cfg = sim.SimConfig(dx=0.1, t_end=2.0, initial="kink",
                        params={"v": 0.3})
    t1 = sim.run(cfg)
    t2 = sim.run(cfg)
    assert np.array_equal(t1.final.phi00, t2.final.phi00)
    assert np.array_equal(t1.energies, t2.energies)


def test_second_sector_stays_zero():
    cfg = sim.SimConfig(dx=0.1, t_end=5.0, initial="kink")
    traj = sim.run(cfg)
    assert not traj.final.phi11.any()
    assert not traj.final.pi11.any()


def test_exchange_symmetry_is_exact():
    rep = sim.exchange_symmetry_study(dx=0.1, dt=0.04, t_end=4.0)
    assert rep["max_asymmetry"] == 0.0


def test_alpha_zero_gives_free_waves():
    # d'Alembert: a standing gaussian splits into two half-amplitude
    # packets moving at unit speed
    cfg = sim.SimConfig(alpha=0.0, dx=0.05, dt=0.02, x_min=-30.0,
                        x_max=30.0, t_end=8.0, initial="gaussian",
                        params={"amplitude": 1.0, "width": 1.0})
    traj = sim.run(cfg)
    x = traj.final.x
    expected = 0.5 * (np.exp(-(x - 8.0) ** 2) + np.exp(-(x + 8.0) ** 2))
    assert np.max(np.abs(traj.final.phi00 - expected)) < 2e-3


def test_periodic_wrap():
    cfg = sim.SimConfig(alpha=0.0, dx=0.1, dt=0.04, x_min=-5.0, x_max=5.0,
                        t_end=10.0, boundary="periodic", initial="gaussian",
                        params={"amplitude": 0.1, "width": 0.5})
    traj = sim.run(cfg)
    # after one full circuit the two packets recombine near the start
    assert abs(traj.final.phi00[len(traj.final.x) // 2]
               - 0.1) < 5e-3


# ----------------------------------------------------------------------
# acceptance studies at their stated tolerances
# ----------------------------------------------------------------------

def test_convergence_is_second_order():
    rep = sim.convergence_study()
    for ratio in rep["ratios"]:
        assert 3.5 <= ratio <= 4.5, rep


def test_energy_drift_small():
    rep = sim.energy_drift_study(t_end=20.0)
    assert rep["max_relative_drift"] < 1e-5
    assert abs(rep["initial_energy"] - 2.0) < 5e-3


def test_boosted_kink_arrives_on_time():
    rep = sim.boosted_kink_study(t_end=10.0, span=(-15.0, 15.0))
    assert rep["position_error"] < rep["dx"]


def test_dispersion_relation():
    rep = sim.dispersion_study()
    assert rep["relative_error"] < 0.01


def test_energy_converges_to_continuum_value():
    # trapezoidal energy of the lattice kink against the quadrature value
    for dx, tol in ((0.1, 2e-3), (0.05, 5e-4)):
        cfg = sim.SimConfig(alpha=1.0, dx=dx, t_end=0.0, initial="kink")
        state = sim.init_profile(cfg)
        e = sim.total_energy(state, cfg)
        assert abs(e - 2.0) < tol, dx
