import math

import pytest

import lolab


def test_exact_probability_axis():
    cfg = lolab.Configuration.from_rational(1, [(1, 0), (0, 1), (0, 1), (0, 1)])
    r = lolab.exact_probability(cfg, 2.0)
    assert r.count_inside == 12
    assert r.total == 16
    assert r.prob_lower == 0.75


def test_angles_list_is_accepted_directly():
    r = lolab.exact_probability([0.0, math.pi / 2], 2.0)
    assert r.total == 4
    assert r.prob_upper == 1.0


def test_naive_matches_exact():
    angles = [0.1, 0.7, 2.2, 4.0, 5.5]
    a = lolab.naive_probability(angles, 1.3)
    b = lolab.exact_probability(angles, 1.3)
    assert (a.count_inside, a.count_uncertain) == (b.count_inside, b.count_uncertain)


def test_mc_is_deterministic():
    a = lolab.mc_probability([0.0] * 8, 4.0, 20000, seed=42)
    b = lolab.mc_probability([0.0] * 8, 4.0, 20000, seed=42)
    assert a.point == b.point
    assert a.generator == "splitmix64-counter"


def test_certify_is_sound_and_structured():
    angles = [0.0, math.pi / 2, math.pi / 2, math.pi / 2]
    cert = lolab.certify(angles)
    exact = lolab.exact_probability(angles, 2.0)
    assert 0.0 < cert["bound"] <= exact.prob_upper
    assert cert["branch"] == "CloseEvenOdd"
    assert len(cert["trace"]) > 0


def test_axis_profile():
    prof = lolab.axis_profile(4, 2.0)
    assert prof["argmin_t"] == 2
    assert prof["per_t"][1]["num"] == "3"
    assert prof["per_t"][1]["den"] == "4"


def test_axis_probability_rational():
    num, den, val = lolab.axis_probability(4, 1, 2.0)
    assert (num, den) == ("3", "4")
    assert val == pytest.approx(0.75)


def test_search_min():
    res = lolab.search_min(4, 2.0, seed=1, iterations=100, restarts=5)
    assert res["probability"] <= 0.25 + 1e-12


def test_q_and_lemmas():
    q = lolab.exact_q([0.0], 1.0)
    assert q.prob_lower == 0.5
    suites = lolab.run_lemma_suites(2000, seed=7)
    assert all(s["violations"] == 0 for s in suites)


def test_invalid_input_raises():
    with pytest.raises(ValueError):
        lolab.Configuration.from_rational(2, [(1, 1)])
    with pytest.raises(ValueError):
        lolab.mc_probability([0.0], 1.0, 0, seed=1)
