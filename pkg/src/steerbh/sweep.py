"""Hawking-temperature sweeps, transition detection and oracle verification."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidArgumentError, TransitionNotFoundError
from .hawking import hawking_extend, initial_tmsv, squeezing_from_temperature, temperature_from_squeezing
from .oracle import ALL_TAGS, PRINTED_TAGS, closed_form_steering
from .steering import SteeringReport, ckw_report, gaussian_steering

DEFAULT_TOLERANCE = 1e-9

# (steerer -> steered) pairs compared for 1->2 versus 2->1 symmetry
COLLECTIVE_PAIRS = (("A->BBbar", "BBbar->A"), ("B->ABbar", "ABbar->B"), ("Bbar->AB", "AB->Bbar"))


@dataclass(frozen=True)
class SweepConfig:
    s: float = 1.0
    omega: float = 1.0
    T_min: float = 0.05
    T_max: float = 3.0
    n_points: int = 60
    tolerance: float = DEFAULT_TOLERANCE

    def __post_init__(self):
        if not self.s >= 0:
            raise InvalidArgumentError(f"initial squeezing must be nonnegative, got {self.s}")
        if not self.omega > 0:
            raise InvalidArgumentError(f"frequency must be positive, got {self.omega}")
        if not 0 < self.T_min < self.T_max or not math.isfinite(self.T_max):
            raise InvalidArgumentError(
                f"need 0 < T_min < T_max, got T_min={self.T_min}, T_max={self.T_max}")
        if int(self.n_points) != self.n_points or self.n_points < 2:
            raise InvalidArgumentError(f"n_points must be an integer >= 2, got {self.n_points}")
        if not self.tolerance > 0:
            raise InvalidArgumentError("tolerance must be positive")

    def temperatures(self) -> np.ndarray:
        return np.linspace(self.T_min, self.T_max, int(self.n_points))


@dataclass
class SweepRow:
    T: float
    r: float
    report: SteeringReport
    sigma: np.ndarray = field(repr=False, compare=False)

    def values(self) -> dict[str, float]:
        return {"T": self.T, "r": self.r, **self.report.values()}


def _row(s: float, T: float, r: float) -> SweepRow:
    sigma = hawking_extend(initial_tmsv(s), r)
    return SweepRow(float(T), float(r), ckw_report(sigma), sigma)


def evaluate_point(s: float, omega: float, T: float) -> SweepRow:
    """Full report at one temperature; ``T = 0`` gives the unsqueezed channel."""
    return _row(s, T, squeezing_from_temperature(T, omega))


def boundary_row(s: float, omega: float = 1.0) -> SweepRow:
    """Zero-temperature row (``r = 0``), kept out of temperature grids."""
    return evaluate_point(s, omega, 0.0)


def run_sweep(config: SweepConfig) -> list[SweepRow]:
    """One row per grid temperature, in ascending order."""
    return [evaluate_point(config.s, config.omega, T) for T in config.temperatures()]


def sweep_squeezing(s: float, omega: float, r_values: Iterable[float]) -> list[SweepRow]:
    """Rows on a grid of channel squeezings instead of temperatures."""
    return [_row(s, temperature_from_squeezing(r, omega), r) for r in sorted(r_values)]


def argmax_temperature(rows: Sequence[SweepRow], key: str) -> float:
    vals = [row.values()[key] for row in rows]
    return rows[int(np.argmax(vals))].T


_TRANSITIONS = {
    # name: (direction, steering is present above the transition)
    "death": ("A->B", False),
    "birth": ("Bbar->B", True),
}


def find_transition(s: float, omega: float = 1.0, direction: str = "death",
                    bracket: tuple[float, float] = (1e-3, 10.0), tol: float = 1e-10) -> float:
    """Bisect the temperature where a 1->1 steering switches on or off.

    ``direction`` is ``"death"`` (A->B vanishes) or ``"birth"`` (Bbar->B
    appears). The search runs on the numerical pipeline, not the closed forms.
    The bracket is widened by decades until it contains the switch.
    """
    if direction not in _TRANSITIONS:
        raise InvalidArgumentError(f"direction must be 'death' or 'birth', got {direction!r}")
    if not s > 0:
        raise InvalidArgumentError(f"initial squeezing must be positive, got {s}")
    steer, on_above = _TRANSITIONS[direction]
    sigma_ab = initial_tmsv(s)

    def above(T: float) -> bool:
        sigma = hawking_extend(sigma_ab, squeezing_from_temperature(T, omega))
        return (gaussian_steering(sigma, steer) > 0.0) == on_above

    lo, hi = bracket
    for _ in range(12):
        if not above(lo):
            break
        lo /= 10.0
    else:
        raise TransitionNotFoundError(f"no {direction} transition above T={lo}")
    for _ in range(6):
        if above(hi):
            break
        hi *= 10.0
    else:
        raise TransitionNotFoundError(f"no {direction} transition below T={hi}")

    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if above(mid):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


@dataclass
class OracleReport:
    """Worst-case numeric-vs-closed-form deviations over a sweep."""

    deviations: dict[str, float]
    companion_deviations: dict[str, float]
    symmetry_gap: float
    tolerance: float
    n_points: int

    @property
    def passed(self) -> bool:
        return (all(d <= self.tolerance for d in self.deviations.values())
                and self.symmetry_gap <= self.tolerance)

    def to_dict(self) -> dict:
        return {
            "tolerance": self.tolerance,
            "n_points": self.n_points,
            "max_deviation": dict(self.deviations),
            "companion_max_deviation": dict(self.companion_deviations),
            "collective_symmetry_gap": self.symmetry_gap,
            "passed": self.passed,
        }


def verify_oracle(config: SweepConfig) -> OracleReport:
    """Compare the numerical pipeline with the closed forms on the sweep grid.

    Pass/fail covers the printed closed forms and the collective 1->2 versus
    2->1 symmetry; the derived companion forms are reported alongside.
    """
    dev = dict.fromkeys(ALL_TAGS, 0.0)
    gap = 0.0
    rows = run_sweep(config)
    for row in rows:
        for tag in ALL_TAGS:
            exact = closed_form_steering(tag, config.s, row.r)
            dev[tag] = max(dev[tag], abs(row.report.G(tag) - exact))
        for fwd, rev in COLLECTIVE_PAIRS:
            gap = max(gap, abs(row.report.G(fwd) - row.report.G(rev)))
    printed = {t: dev[t] for t in PRINTED_TAGS}
    companions = {t: dev[t] for t in ALL_TAGS if t not in PRINTED_TAGS}
    return OracleReport(printed, companions, gap, config.tolerance, len(rows))
