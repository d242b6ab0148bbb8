"""Gaussian EPR steering, monogamy deficits and monogamy asymmetry.

The steering from party ``x`` to party ``y`` is

    G(x -> y) = max{0, -sum_{nu_j < 1} ln nu_j}

where ``nu_j`` are the symplectic eigenvalues of the Schur complement of the
``x`` block in the reduced covariance matrix of ``x`` and ``y``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidArgumentError
from .symplectic import (
    THREE_PARTY,
    PartyMap,
    _parse_labels,
    _schur,
    n_modes,
    quadrature_indices,
    symplectic_eigenvalues,
)

# values below this are reported as exact zeros
ZERO_CUTOFF = 1e-12
CKW_TOL = 1e-10


@dataclass(frozen=True)
class SteeringDirection:
    steerer: tuple[str, ...]
    steered: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "steerer", _parse_labels(self.steerer))
        object.__setattr__(self, "steered", _parse_labels(self.steered))
        if not self.steerer or not self.steered:
            raise InvalidArgumentError("steerer and steered parties must be nonempty")
        if set(self.steerer) & set(self.steered):
            raise InvalidArgumentError(f"overlapping parties in {self}")

    @classmethod
    def parse(cls, text: str) -> "SteeringDirection":
        """Parse ``"AB->Bbar"`` or ``"AB_to_Bbar"``."""
        for sep in ("->", "_to_"):
            if sep in text:
                x, y = text.split(sep)
                return cls(x, y)
        raise InvalidArgumentError(f"cannot parse steering direction {text!r}")

    def key(self, party_map: PartyMap = THREE_PARTY) -> str:
        order = {lab: i for i, lab in enumerate(party_map.labels)}
        x = "".join(sorted(self.steerer, key=order.__getitem__))
        y = "".join(sorted(self.steered, key=order.__getitem__))
        return f"{x}_to_{y}"

    def __str__(self):
        return f"{''.join(self.steerer)}->{''.join(self.steered)}"


def _direction(d, steered=None) -> SteeringDirection:
    if isinstance(d, SteeringDirection):
        return d
    if steered is not None:
        return SteeringDirection(d, steered)
    return SteeringDirection.parse(d)


def gaussian_steering(sigma: np.ndarray, direction, steered=None,
                      party_map: PartyMap = THREE_PARTY) -> float:
    """Gaussian steering ``G(x -> y)`` in nats.

    ``direction`` is a :class:`SteeringDirection`, a string like ``"A->BBbar"``,
    or the steering party when ``steered`` is given separately.
    """
    d = _direction(direction, steered)
    x = party_map.indices(d.steerer)
    y = party_map.indices(d.steered)
    n = n_modes(sigma)
    if max(x + y) >= n:
        raise InvalidArgumentError(f"direction {d} needs more than {n} modes")
    m = _schur(np.asarray(sigma, dtype=float), quadrature_indices(x), quadrature_indices(y))
    nu = symplectic_eigenvalues(m)
    value = -float(np.sum(np.log(nu[nu < 1.0])))
    return value if value > ZERO_CUTOFF else 0.0


def deficit_2to1(sigma, x, y, z, party_map: PartyMap = THREE_PARTY) -> float:
    """``G(xy -> z) - G(x -> z) - G(y -> z)``, unclamped."""
    xy = tuple(_parse_labels(x)) + tuple(_parse_labels(y))
    return (gaussian_steering(sigma, xy, z, party_map)
            - gaussian_steering(sigma, x, z, party_map)
            - gaussian_steering(sigma, y, z, party_map))


def deficit_1to2(sigma, x, y, z, party_map: PartyMap = THREE_PARTY) -> float:
    """``G(x -> yz) - G(x -> y) - G(x -> z)``, unclamped."""
    yz = tuple(_parse_labels(y)) + tuple(_parse_labels(z))
    return (gaussian_steering(sigma, x, yz, party_map)
            - gaussian_steering(sigma, x, y, party_map)
            - gaussian_steering(sigma, x, z, party_map))


def monogamy_asymmetry(sigma, x, y, z, party_map: PartyMap = THREE_PARTY) -> float:
    """``|D(xy : z) - D(z : xy)|``."""
    return abs(deficit_2to1(sigma, x, y, z, party_map)
               - deficit_1to2(sigma, z, x, y, party_map))


# Fixed orderings shared with the CSV/JSON output.
DIRECTIONS = tuple(SteeringDirection(x, y) for x, y in [
    ("A", "B"), ("B", "A"),
    ("A", "Bbar"), ("Bbar", "A"),
    ("B", "Bbar"), ("Bbar", "B"),
    ("AB", "Bbar"), ("ABbar", "B"), ("BBbar", "A"),
    ("A", "BBbar"), ("B", "ABbar"), ("Bbar", "AB"),
])

# (pair, single) splits: pair -> single for 2->1 deficits, single -> pair for 1->2
SPLITS = ((("A", "B"), "Bbar"), (("A", "Bbar"), "B"), (("B", "Bbar"), "A"))

STEERING_KEYS = tuple("G_" + d.key() for d in DIRECTIONS)
DEFICIT_KEYS = (
    tuple(f"D21_{''.join(p)}_{q}" for p, q in SPLITS)
    + tuple(f"D12_{q}_{''.join(p)}" for p, q in reversed(SPLITS))
)
ASYMMETRY_KEYS = tuple(f"Dasym_{''.join(p)}_{q}" for p, q in SPLITS)


@dataclass
class SteeringReport:
    """All directional steerings, deficits and asymmetries of a three-mode state."""

    steering: dict[str, float]
    deficits: dict[str, float]
    asymmetry: dict[str, float]
    tolerance: float = CKW_TOL
    passed: bool = field(init=False)

    def __post_init__(self):
        self.passed = all(v >= -self.tolerance for v in self.deficits.values())

    def G(self, direction: str) -> float:
        """Look up a steering value, e.g. ``report.G("Bbar->AB")``."""
        return self.steering["G_" + _direction(direction).key()]

    def values(self) -> dict[str, float]:
        """Flat mapping in output column order."""
        return {**self.steering, **self.deficits, **self.asymmetry}


def ckw_report(sigma: np.ndarray, tolerance: float = CKW_TOL) -> SteeringReport:
    """Evaluate every steering direction and both families of CKW-type deficits."""
    steering = {k: gaussian_steering(sigma, d) for k, d in zip(STEERING_KEYS, DIRECTIONS)}

    def G(x, y):
        return steering["G_" + SteeringDirection(x, y).key()]

    d21, d12 = {}, {}
    for (a, b), c in SPLITS:
        d21[(a, b, c)] = G(a + b, c) - G(a, c) - G(b, c)
    for (a, b), c in reversed(SPLITS):
        d12[(c, a, b)] = G(c, a + b) - G(c, a) - G(c, b)
    deficits = dict(zip(DEFICIT_KEYS, [*d21.values(), *d12.values()]))
    asymmetry = {
        key: abs(d21[(a, b, c)] - d12[(c, a, b)])
        for key, ((a, b), c) in zip(ASYMMETRY_KEYS, SPLITS)
    }
    return SteeringReport(steering, deficits, asymmetry, tolerance)
