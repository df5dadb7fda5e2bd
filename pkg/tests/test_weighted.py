import math
from fractions import Fraction

import numpy as np
import pytest

from spexcess import fixtures as fx
from spexcess.pipeline import analyze_graph


def _ga(name):
    return analyze_graph(fx.named(name))


def test_weighted_matrices_regular_equal_unweighted():
    ga = _ga("petersen")
    for a_star, a_i in zip(ga.wm.astar, ga.dd.distance_matrices):
        assert np.abs(a_star - a_i).max() <= 1e-10
    assert np.abs(ga.wm.jstar - 1.0).max() <= 1e-10


def test_weighted_matrices_k23_entries():
    ga = _ga("k23")
    # degree-3 vertices are 0 and 1, at distance 2 from each other
    assert ga.wm.astar[2][0, 1] == pytest.approx(5 / 4, rel=1e-10)
    assert ga.wm.astar[2][0, 0] == 0.0
    # A*_0 = diag(alpha_u^2), the weighted identity
    assert np.abs(ga.wm.astar[0] - np.diag(ga.perron.alpha ** 2)).max() <= 1e-12


def test_weighted_partition_identity():
    for name in ("k23", "p3", "c8_12", "petersen"):
        ga = _ga(name)
        total = np.sum(ga.wm.astar, axis=0)
        assert np.abs(total - ga.wm.jstar).max() <= 1e-12
        assert np.abs(ga.wm.sstar[-1] - ga.wm.jstar).max() <= 1e-12
        assert np.abs(ga.wm.sstar_at(ga.D + 3) - ga.wm.jstar).max() <= 1e-12


def test_ball_norms_saturate_at_n():
    for name in ("k23", "p3", "c6"):
        ga = _ga(name)
        for u in range(ga.n):
            ecc = ga.local_spectra[u].eccentricity
            assert ga.stats.ball_norm_at(u, ecc) == pytest.approx(ga.n, rel=1e-12)
        assert np.abs(ga.stats.ball_norms[:, -1] - ga.n).max() <= 1e-9


def test_ball_plus_last_sphere():
    ga = _ga("k23")
    d = ga.D
    lhs = ga.stats.ball_norms[:, d - 1]
    rhs = ga.n - ga.stats.sphere_norms[:, d]
    assert np.abs(lhs - rhs).max() <= 1e-10


def test_k23_headline_numbers():
    ga = _ga("k23")
    assert ga.stats.spectral_excess == pytest.approx(1.5, rel=1e-9)
    assert ga.stats.n_minus_harmonic == pytest.approx(float(Fraction(25, 17)), rel=1e-9)
    assert ga.stats.delta_star[-1] == pytest.approx(float(Fraction(35, 24)), rel=1e-9)
    assert ga.stats.harmonic_means[1] == pytest.approx(float(Fraction(60, 17)), rel=1e-9)
    # strict ordering of the chain
    assert ga.stats.spectral_excess > ga.stats.n_minus_harmonic > ga.stats.delta_star[-1]


def test_petersen_excess_equality():
    ga = _ga("petersen")
    assert ga.stats.delta_star[2] == pytest.approx(6.0, rel=1e-9)
    assert ga.stats.spectral_excess == pytest.approx(6.0, rel=1e-9)


def test_avg_weighted_degree_is_lambda0():
    for name in ("k23", "p3", "petersen", "c8_12", "k13"):
        g = fx.named(name) if name != "k13" else fx.star(3)
        ga = analyze_graph(g)
        assert np.abs(ga.stats.avg_weighted_degree - ga.lambda0).max() <= 1e-9


def test_delta_star_equals_matrix_norm():
    # two computation paths: statistics vs (1/n) tr((A*_D)^2)
    for name in ("k23", "p3", "petersen", "c8_12"):
        ga = _ga(name)
        a_star_d = ga.wm.astar[-1]
        via_trace = float(np.sum(a_star_d * a_star_d)) / ga.n
        assert ga.stats.delta_star[-1] == pytest.approx(via_trace, rel=1e-9)


def test_delta_star_regular_is_average_excess():
    for name in ("petersen", "c6", "c8_12"):
        ga = _ga(name)
        k_d = np.mean([len(ga.dd.sphere(u, ga.D)) for u in range(ga.n)])
        assert ga.stats.delta_star[-1] == pytest.approx(k_d, rel=1e-9)


def test_harmonic_means_monotone():
    for name in ("k23", "p3", "c8", "c8_12", "petersen"):
        ga = _ga(name)
        h = ga.stats.harmonic_means
        assert np.all(np.diff(h) >= -1e-12)
        assert h[-1] == pytest.approx(ga.n, rel=1e-12)
        assert ga.stats.harmonic_at(ga.D + 5) == pytest.approx(ga.n, rel=1e-12)


def test_harmonic_vs_arithmetic_chain():
    for name in ("k23", "p3", "c8_12", "k13", "p5"):
        g = (fx.star(3) if name == "k13"
             else fx.path(5) if name == "p5" else fx.named(name))
        ga = analyze_graph(g)
        assert ga.stats.n_minus_harmonic >= ga.stats.delta_star[-1] - 1e-10


def test_excess_stats_requires_global_sequence():
    from spexcess.weighted import excess_stats
    ga = _ga("k23")
    with pytest.raises(ValueError):
        excess_stats(ga.dd, ga.perron, ga.local_seqs[0])
