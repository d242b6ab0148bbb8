import math

import numpy as np
import pytest

from steerbh.errors import InvalidArgumentError, TransitionNotFoundError
from steerbh.oracle import PRINTED_TAGS, transition_temperature
from steerbh.sweep import (
    SweepConfig,
    argmax_temperature,
    boundary_row,
    evaluate_point,
    find_transition,
    run_sweep,
    sweep_squeezing,
    verify_oracle,
)

LN_COSH_2 = math.log(math.cosh(2.0))
T_STAR_S1 = 0.997880477701214691623616183899973


@pytest.fixture(scope="module")
def default_rows():
    return run_sweep(SweepConfig(1.0, 1.0, 0.05, 3.0, 60))


@pytest.mark.parametrize("kwargs", [
    dict(T_min=0.0), dict(T_min=2.0, T_max=1.0), dict(n_points=1), dict(n_points=2.5),
    dict(s=-1.0), dict(omega=0.0), dict(tolerance=0.0), dict(T_max=math.inf),
])
def test_config_validation(kwargs):
    with pytest.raises(InvalidArgumentError):
        SweepConfig(**kwargs)


def test_rows_ascending_and_consistent(default_rows):
    temps = [row.T for row in default_rows]
    assert len(temps) == 60 and temps == sorted(temps)
    for row in default_rows:
        sinh2 = math.sinh(row.r) ** 2
        assert sinh2 * math.expm1(1.0 / row.T) == pytest.approx(1.0, abs=1e-10)


def test_first_row_near_small_r_limit(default_rows):
    assert default_rows[0].report.G("A->B") == pytest.approx(LN_COSH_2, abs=0.02)


def test_collective_column_constant(default_rows):
    for row in default_rows:
        assert row.report.G("A->BBbar") == pytest.approx(LN_COSH_2, abs=1e-10)


def test_deficits_nonnegative(default_rows):
    for row in default_rows:
        assert min(row.report.deficits.values()) >= -1e-10


def test_monotone_columns(default_rows):
    cols = {k: np.array([row.values()[k] for row in default_rows])
            for k in ("G_A_to_B", "G_AB_to_Bbar", "G_B_to_Bbar", "D12_B_ABbar")}
    assert np.all(np.diff(cols["G_A_to_B"]) <= 1e-12)
    for k in ("G_AB_to_Bbar", "G_B_to_Bbar", "D12_B_ABbar"):
        assert np.all(np.diff(cols[k]) >= -1e-12), k


def test_deterministic(default_rows):
    again = run_sweep(SweepConfig(1.0, 1.0, 0.05, 3.0, 60))
    assert [r.values() for r in again] == [r.values() for r in default_rows]


def test_boundary_row():
    row = boundary_row(1.0)
    assert row.T == 0.0 and row.r == 0.0
    assert row.report.G("A->B") == pytest.approx(LN_COSH_2, abs=1e-12)


def test_evaluate_point_matches_sweep_row(default_rows):
    row = default_rows[7]
    assert evaluate_point(1.0, 1.0, row.T).values() == row.values()


def test_squeezing_axis_sweep():
    rows = sweep_squeezing(1.0, 1.0, [0.9, 0.0, 0.3])
    assert [r.r for r in rows] == [0.0, 0.3, 0.9]
    assert rows[0].T == 0.0
    for row in rows[1:]:
        assert evaluate_point(1.0, 1.0, row.T).report.G("AB->Bbar") == pytest.approx(
            row.report.G("AB->Bbar"), abs=1e-12)


@pytest.mark.parametrize("s", [0.25, 1.0])
def test_transitions_agree(s):
    death = find_transition(s, 1.0, "death")
    birth = find_transition(s, 1.0, "birth")
    assert abs(death - birth) <= 1e-8
    assert death == pytest.approx(transition_temperature(s, 1.0), abs=1e-8)


def test_transition_s1():
    assert find_transition(1.0, 1.0) == pytest.approx(T_STAR_S1, abs=1e-9)


def test_transition_bracket_expansion():
    # T* is about 0.11 here, below the default lower bracket end
    T = find_transition(0.01, 1.0, bracket=(1.0, 10.0))
    assert T == pytest.approx(transition_temperature(0.01, 1.0), abs=1e-8)
    # T* = 50 for omega = 100 sits above the default upper end
    T = find_transition(1.0, 50.0)
    assert T == pytest.approx(transition_temperature(1.0, 50.0), rel=1e-9)


def test_transition_errors():
    with pytest.raises(InvalidArgumentError):
        find_transition(0.0, 1.0)
    with pytest.raises(InvalidArgumentError):
        find_transition(1.0, 1.0, "rebirth")
    with pytest.raises(TransitionNotFoundError):
        find_transition(1.0, 1e9)


def test_verify_default_grid():
    rep = verify_oracle(SweepConfig())
    assert rep.passed
    assert set(rep.deviations) == set(PRINTED_TAGS)
    assert max(rep.deviations.values()) <= 1e-9
    assert max(rep.companion_deviations.values()) <= 1e-9
    assert rep.symmetry_gap <= 1e-9
    d = rep.to_dict()
    assert d["passed"] and d["n_points"] == 60


def test_verify_vacuum_input():
    """A vacuum A is never steered; the channel alone makes B, Bbar a squeezed pair."""
    rep = verify_oracle(SweepConfig(s=0.0))
    assert rep.passed
    assert max(rep.deviations.values()) <= 1e-13
    for row in run_sweep(SweepConfig(s=0.0, n_points=5)):
        for d in ("A->B", "B->A", "A->Bbar", "Bbar->A", "BBbar->A", "A->BBbar"):
            assert row.report.G(d) == 0.0, d
        assert row.report.G("B->Bbar") == pytest.approx(math.log(math.cosh(2 * row.r)), abs=1e-12)


def test_verify_fails_with_tight_tolerance():
    rep = verify_oracle(SweepConfig(s=1.5, T_max=5.0, tolerance=1e-18))
    assert not rep.passed


FINE = SweepConfig(1.0, 1.0, 0.05, 3.0, 600)


@pytest.fixture(scope="module")
def fine_rows():
    return run_sweep(FINE)


def test_asymmetry_peak_near_transition(fine_rows):
    step = FINE.temperatures()[1] - FINE.temperatures()[0]
    assert abs(argmax_temperature(fine_rows, "Dasym_AB_Bbar") - T_STAR_S1) <= step


def test_asymmetry_peak_not_at_literal_printed_condition(fine_rows):
    """The alternative reading s = arccosh(cosh^2 r / (1 - sinh^2 r)) puts the peak elsewhere."""
    # cosh(s) = (1 + u) / (1 - u) with u = sinh^2 r
    u = (math.cosh(1.0) - 1) / (math.cosh(1.0) + 1)
    t_literal = 1.0 / math.log1p(1 / u)
    peak = argmax_temperature(fine_rows, "Dasym_AB_Bbar")
    assert abs(peak - t_literal) > 0.3
