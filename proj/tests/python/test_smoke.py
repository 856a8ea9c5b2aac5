import math

import pytest


def test_schedule_and_density(qrace):
    s = qrace.grover_schedule(1_000_000)
    assert len(s) == 784
    probs = s.probs
    assert all(b > a for a, b in zip(probs, probs[1:]))
    d = qrace.density_report(s)
    assert d.ell <= math.pi / 2
    assert qrace.convexity_report(s).is_convex


def test_schedule_rejects_bad_input(qrace):
    with pytest.raises(Exception):
        qrace.custom_schedule([0.6, 0.3])
    with pytest.raises(Exception):
        qrace.custom_schedule([0.3])


def test_equilibrium_and_bounds(qrace):
    s = qrace.grover_schedule(1_000_000)
    sol = qrace.coinciding_equilibrium(s)
    assert sol.payoff_row == pytest.approx(sol.payoff_col)
    assert sol.payoff_row <= qrace.PAYOFF_CAP
    d = qrace.density_report(s)
    assert qrace.payoff_bounds_check(sol, s, d).all_hold()
    assert qrace.collision_bounds_check(sol, s, d).all_hold()
    col = qrace.collision_analytics(sol, s)
    z = 1.0 / sol.payoff_row
    assert 2 / z + col.tie_probability + col.no_winner_probability == pytest.approx(1.0)


def test_tiny_race_closed_form(qrace):
    s = qrace.custom_schedule([0.3, 0.6])
    sol = qrace.coinciding_equilibrium(s)
    assert sol.row.weights == pytest.approx([2 / 9, 7 / 9])
    assert sol.payoff_row == pytest.approx(0.28)


def test_multiplayer(qrace):
    s = qrace.grover_schedule(100_000)
    d = qrace.density_report(s)
    for n in (2, 3, 5):
        sol = qrace.multi_coinciding_equilibrium(s, n)
        assert sol.per_player_payoff < 1 / n
        ties = qrace.multi_tie_check(sol, s, d)
        assert ties.applicable and ties.total_holds
        regret = qrace.multi_approx_check(sol, s, d)
        assert regret.applicable and regret.holds


def test_verify_well_supported(qrace):
    s = qrace.grover_schedule(10_000)
    d = qrace.density_report(s)
    sol = qrace.coinciding_equilibrium(s)
    verdict = qrace.verify_race_profile(
        s, s, qrace.Variant.TIE_SPLITTING, sol.row, sol.col
    )
    bound = 7 * (math.sqrt(2) - 1) * d.ell / len(s)
    assert verdict.epsilon_well_supported <= bound


def test_simulation_determinism(qrace):
    s = qrace.grover_schedule(1_000)
    sol = qrace.coinciding_equilibrium(s)
    cfg = qrace.RaceConfig(2, s, qrace.Variant.STINGY)
    a = qrace.run_simulation(cfg, [sol.row, sol.col], 50_000, 77)
    b = qrace.run_simulation(cfg, [sol.row, sol.col], 50_000, 77)
    assert a.win_counts == b.win_counts
    assert a.tie_counts == b.tie_counts
    se = math.sqrt(sol.payoff_row * (1 - sol.payoff_row) / 50_000)
    assert abs(a.win_frequency(0) - sol.payoff_row) <= 4 * se


def test_bitcoin_params(qrace):
    params = qrace.bitcoin_schedule_params(7e12)
    assert 0.5e11 <= params.strategy_count <= 2e11
    assert params.epsilon_multiplayer < 3e-10
    assert not params.materializable
