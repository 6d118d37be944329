import math

import numpy as np
import pytest

from mim.bayes import (ALPHA_EPS, ChernoffExponent, GaussianHypothesis as G, HypothesisEnsemble,
                       bayes_error_oracle_binary, chernoff_alpha, chernoff_bound_gaussian,
                       golden_section, k_alpha, mary_error_bound, mary_error_oracle,
                       optimal_alpha_gaussian, plugin_decision_error, separation)
from mim.errors import ModelMismatch, OutOfRange


def q_tail(z):
    return 0.5 * math.erfc(z / math.sqrt(2))


def threshold_error(w_true, w_design, mu0, mu1, sigma):
    """Analytic error of the likelihood-ratio rule with a single threshold (equal sigmas)."""
    if mu0 == mu1:
        return min(w_true, 1 - w_true) if w_design == w_true else (
            1 - w_true if w_design > 0.5 else w_true)
    s = 1.0 if mu1 > mu0 else -1.0
    # decide H0 on the mu0 side of t
    t = 0.5 * (mu0 + mu1) + sigma ** 2 * math.log(w_design / (1 - w_design)) / (mu1 - mu0)
    miss0 = q_tail(s * (t - mu0) / sigma)
    miss1 = q_tail(s * (mu1 - t) / sigma)
    return w_true * miss0 + (1 - w_true) * miss1


def random_config(rng):
    return (float(rng.uniform(0.01, 0.99)), float(rng.uniform(-3, 3)),
            float(rng.uniform(-3, 3)), float(rng.uniform(0.3, 2.5)))


def test_hypothesis_validation():
    with pytest.raises(OutOfRange):
        G(0.0, 0.0)
    with pytest.raises(OutOfRange):
        G(float("inf"), 1.0)
    with pytest.raises(OutOfRange):
        HypothesisEnsemble((0.5, 0.6), (G(0), G(1)))
    with pytest.raises(OutOfRange):
        HypothesisEnsemble((1.0,), (G(0),))
    with pytest.raises(OutOfRange):
        HypothesisEnsemble((0.5, 0.5), (G(0), G(1)), minority_index=2)
    with pytest.raises(OutOfRange):
        HypothesisEnsemble((0.5, 0.5), (G(0), G(1), G(2)))


def test_k_alpha_values():
    assert k_alpha(0.5, 0.5, 2) == pytest.approx(math.log(0.5) - 0.5, abs=1e-15)
    assert k_alpha(0.5, 0.5, 2) == pytest.approx(-1.1931, abs=1e-4)
    assert k_alpha(0.3, 0.2, 0) == pytest.approx(0.3 * math.log(0.2) + 0.7 * math.log(0.8))
    assert k_alpha(0.5, 0.5, 0) == pytest.approx(math.log(0.5))
    for args in [(0.0, 0.5, 1), (1.0, 0.5, 1), (0.5, 1.0, 1), (0.5, 0.5, -1)]:
        with pytest.raises(OutOfRange):
            k_alpha(*args)


def test_optimal_alpha():
    for beta in (0.1, 1.0, 7.0):
        a = optimal_alpha_gaussian(0.5, beta)
        assert a == ChernoffExponent(0.5, False)
    a = optimal_alpha_gaussian(0.1, 2)
    assert a.clamped and a.alpha == 1 - ALPHA_EPS
    a = optimal_alpha_gaussian(0.9, 2)
    assert a.clamped and a.alpha == ALPHA_EPS
    with pytest.raises(OutOfRange):
        optimal_alpha_gaussian(0.3, 0.0)


def test_optimal_alpha_clamped_matches_grid():
    ks = [k_alpha(float(a), 0.1, 2) for a in np.linspace(1e-6, 1 - 1e-6, 10001)]
    assert int(np.argmin(ks)) == len(ks) - 1


def test_minority_alpha_above_half(rng):
    for _ in range(200):
        w0 = float(rng.uniform(0.01, 0.49))
        a = optimal_alpha_gaussian(w0, float(rng.uniform(0.1, 20)))
        if not a.clamped:
            assert a.alpha > 0.5


def test_closed_form_matches_golden(rng):
    for _ in range(200):
        w0, beta = float(rng.uniform(0.05, 0.95)), float(rng.uniform(0.5, 10))
        a = optimal_alpha_gaussian(w0, beta)
        _, kmin = golden_section(lambda x: k_alpha(x, w0, beta), ALPHA_EPS, 1 - ALPHA_EPS)
        assert abs(k_alpha(a.alpha, w0, beta) - kmin) < 1e-9


def test_golden_section_quadratic():
    x, fx = golden_section(lambda t: (t - 0.3) ** 2 + 1, 0.0, 1.0, tol=1e-10)
    assert x == pytest.approx(0.3, abs=1e-6)
    assert fx == pytest.approx(1.0, abs=1e-15)


def test_chernoff_symmetric_example():
    assert chernoff_bound_gaussian(0.5, G(0, 1), G(2, 1)) == pytest.approx(0.30326, abs=1e-5)
    assert chernoff_bound_gaussian(0.5, G(0, 1), G(2, 1)) == pytest.approx(
        math.exp(math.log(0.5) - 0.5), rel=1e-14)


def test_chernoff_identical_hypotheses():
    assert chernoff_bound_gaussian(0.5, G(0, 1), G(0, 1)) == pytest.approx(0.5, abs=1e-8)
    assert chernoff_bound_gaussian(0.2, G(1, 2), G(1, 2)) == pytest.approx(0.2, abs=1e-8)
    assert chernoff_alpha(0.2, 0.0).clamped


def test_chernoff_model_mismatch():
    with pytest.raises(ModelMismatch):
        chernoff_bound_gaussian(0.5, G(0, 1), G(1, 2))
    with pytest.raises(ModelMismatch):
        separation(G(0, 1), G(1, 1.5))


def test_oracle_values():
    assert bayes_error_oracle_binary(0.5, G(0, 1), G(2, 1)) == pytest.approx(0.15866, abs=1e-5)
    assert bayes_error_oracle_binary(0.5, G(0, 1), G(2, 1)) == pytest.approx(q_tail(1), abs=1e-9)
    for w in (0.05, 0.3, 0.8):
        assert bayes_error_oracle_binary(w, G(1, 2), G(1, 2)) == pytest.approx(min(w, 1 - w), abs=1e-9)
    assert bayes_error_oracle_binary(0.1, G(0, 1), G(2, 1)) <= chernoff_bound_gaussian(0.1, G(0, 1), G(2, 1))


def test_oracle_matches_analytic(rng):
    for _ in range(100):
        w0, m0, m1, s = random_config(rng)
        exact = threshold_error(w0, w0, m0, m1, s)
        assert bayes_error_oracle_binary(w0, G(m0, s), G(m1, s)) == pytest.approx(exact, abs=1e-8)


def test_oracle_unequal_sigma_against_dense_grid():
    w0, h0, h1 = 0.2, G(0.0, 0.5), G(1.0, 2.0)
    xs = np.linspace(-25, 25, 2_000_001)
    f = np.minimum(w0 * h0.pdf(xs), (1 - w0) * h1.pdf(xs))
    dense = float(np.sum((f[1:] + f[:-1]) * 0.5 * np.diff(xs)))
    assert bayes_error_oracle_binary(w0, h0, h1) == pytest.approx(dense, abs=1e-8)


def test_bound_dominance(rng):
    for _ in range(200):
        w0, m0, m1, s = random_config(rng)
        h0, h1 = G(m0, s), G(m1, s)
        oracle = bayes_error_oracle_binary(w0, h0, h1)
        bound = chernoff_bound_gaussian(w0, h0, h1)
        assert oracle <= bound <= min(w0, 1 - w0) + 1e-9


def test_swap_symmetry(rng):
    for _ in range(50):
        w0, m0, m1, s = random_config(rng)
        h0, h1 = G(m0, s), G(m1, s)
        assert bayes_error_oracle_binary(w0, h0, h1) == pytest.approx(
            bayes_error_oracle_binary(1 - w0, h1, h0), abs=1e-10)
        assert chernoff_bound_gaussian(w0, h0, h1) == pytest.approx(
            chernoff_bound_gaussian(1 - w0, h1, h0), abs=1e-10)


@pytest.mark.parametrize("w0", [0.02, 0.3, 0.5])
def test_oracle_monotone_in_separation(w0):
    errs = [bayes_error_oracle_binary(w0, G(0, 1), G(d, 1)) for d in np.linspace(0, 6, 31)]
    assert all(b <= a + 1e-12 for a, b in zip(errs, errs[1:]))


def test_plugin_error(rng):
    h0, h1 = G(0, 1), G(3, 1)
    for _ in range(50):
        wt, wd = float(rng.uniform(0.001, 0.5)), float(rng.uniform(0.001, 0.5))
        err = plugin_decision_error(wt, wd, h0, h1)
        assert err == pytest.approx(threshold_error(wt, wd, 0.0, 3.0, 1.0), abs=1e-9)
        assert err >= bayes_error_oracle_binary(wt, h0, h1) - 1e-12
    assert plugin_decision_error(0.04, 0.04, h0, h1) == pytest.approx(
        bayes_error_oracle_binary(0.04, h0, h1), abs=1e-12)


def test_mary_two_class_reduction(rng):
    for _ in range(30):
        w0, m0, m1, s = random_config(rng)
        h0, h1 = G(m0, s), G(m1, s)
        e = HypothesisEnsemble((w0, 1 - w0), (h0, h1))
        assert mary_error_bound(e) == pytest.approx(chernoff_bound_gaussian(w0, h0, h1), abs=1e-6)
        assert mary_error_oracle(e) == pytest.approx(bayes_error_oracle_binary(w0, h0, h1), abs=1e-8)


def test_mary_three_class_example():
    e = HypothesisEnsemble((0.05, 0.475, 0.475), (G(-4), G(0), G(4)))
    oracle, bound = mary_error_oracle(e), mary_error_bound(e)
    assert 0 < oracle <= bound
    # the minority sits far from both others; only the N(0,1) neighbour matters
    assert oracle == pytest.approx(threshold_error(0.05 / 0.525, 0.05 / 0.525, -4, 0, 1) * 0.525,
                                   abs=1e-9)


def test_mary_identical_hypotheses():
    e = HypothesisEnsemble((0.1, 0.5, 0.4), (G(1, 2),) * 3)
    assert mary_error_oracle(e) == pytest.approx(0.1, abs=1e-9)
    assert mary_error_bound(e) >= 0.1 - 1e-9


def test_mary_minority_index():
    a = HypothesisEnsemble((0.1, 0.6, 0.3), (G(-2), G(0), G(1.5)), minority_index=0)
    b = HypothesisEnsemble((0.6, 0.3, 0.1), (G(0), G(1.5), G(-2)), minority_index=2)
    assert mary_error_oracle(a) == pytest.approx(mary_error_oracle(b), abs=1e-10)
    assert mary_error_bound(a) == pytest.approx(mary_error_bound(b), abs=1e-10)


def test_mary_oracle_vanishes_with_prior():
    vals = [mary_error_oracle(HypothesisEnsemble((w, (1 - w) / 2, (1 - w) / 2),
                                                 (G(0), G(1), G(2))))
            for w in (1e-2, 1e-4, 1e-6)]
    assert vals[0] > vals[1] > vals[2]
    assert vals[2] <= 1e-6 + 1e-12
