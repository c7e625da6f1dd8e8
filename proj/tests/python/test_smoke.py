import math

import numpy as np
import pytest

import pmgroup as pm


def test_generators_and_bracket():
    assert pm.GENERATORS == ["B", "Ex", "Ey", "H", "Px", "Py", "Kx", "Ky", "J"]
    alg = pm.LieAlgebra(2.0)
    px, py = np.eye(9)[4], np.eye(9)[5]
    out = alg.bracket(px, py)
    assert out[0] == -1.0 and np.count_nonzero(out) == 1
    assert np.array_equal(alg.ad_matrix("J"), alg.ad_matrix(9))


def test_exponentials_agree():
    alg = pm.LieAlgebra(1.0)
    for g in pm.GENERATORS:
        closed = pm.exp_ad_closed(g, 0.7)
        generic = pm.exp_matrix_generic(0.7 * alg.ad_matrix(g))
        assert np.abs(closed - generic).max() < 1e-12


def test_casimirs_and_classify():
    xi = np.zeros(9)
    xi[0] = 1.0
    xi[3] = 2.0
    k = pm.eval_casimirs(xi)
    assert (k.c0, k.c1, k.c2) == (-1.0, 4.0, 2.0)
    assert pm.classify(xi)["tag"] == "TwoSheetPlus"
    assert pm.classify(np.zeros(9))["tag"] == "PoincareDegenerate"
    assert max(pm.kernel_residual(np.random.default_rng(0).uniform(-2, 2, 9))) < 1e-10


def test_coadjoint_preserves_casimirs():
    rng = np.random.default_rng(1)
    xi = rng.uniform(-2, 2, 9)
    g = rng.uniform(-1, 1, 9)
    a, b = pm.eval_casimirs(xi), pm.eval_casimirs(pm.coad_apply(g, xi))
    assert abs(a.c1 - b.c1) < 1e-9 * (1 + abs(a.c1))


def test_chart_round_trip_and_errors():
    xi = np.array([1.5, 0.2, -0.3, 1.0, 0.4, 0.1, -0.7, 0.9, 0.2])
    p = pm.chart_project(xi)
    assert np.allclose(pm.chart_embed(p), xi, atol=1e-12)
    lam = pm.poisson_matrix(p)
    om = pm.symplectic_matrix(p)
    assert np.abs(om @ lam - np.eye(6)).max() < 1e-9
    with pytest.raises(pm.ChartSingularError):
        pm.chart_project(np.zeros(9))
    assert issubclass(pm.ChartSingularError, pm.DomainError)


def test_orbit_flow():
    p = pm.chart_project(np.array([1.0, 0.1, 0.0, 1.0, 0.5, 0.0, 0.0, 0.0, 0.0]))
    tr = pm.orbit_flow(p, 10.0, samples=50)
    assert tr["coords"].shape == (50, 6)
    assert tr["max_deviation"] < 1e-8


def test_particle_and_equivalence():
    pp = pm.ParticleParams(q=1.0, m0=1.0, c=1.0)
    s = pm.PhaseState()
    s.Px = 1.0
    s.B = 1.0
    assert math.isclose(pm.hamiltonian(s, pp), math.sqrt(2.0))
    assert np.allclose(pm.moment_map(s, pp), [1, 0, 0, math.sqrt(2), 1, 0, 0, 0, 0])
    tr = pm.integrate_lorentz(s, pp, 5.0, samples=20)
    assert tr["states"].shape == (20, 11)
    assert tr["energy_drift"] < 1e-9
    rep = pm.equivalence_check(s, pp, 10.0)
    assert max(rep.values()) < 1e-7
    r, t, r0, t0 = pm.measure_cyclotron(pp, 1.0, 1.0)
    assert abs(r - 1.0) < 1e-6 and abs(t / (2 * math.pi * math.sqrt(2)) - 1) < 1e-6


def test_reports():
    assert all(ok for _, ok, _, _ in pm.algebra_check(seed=3))
    assert pm.bracket_table_check(10, 5, pm.ParticleParams()) < 1e-10
