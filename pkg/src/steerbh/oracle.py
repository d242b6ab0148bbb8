"""Closed-form steering values for the Hawking-degraded two-mode squeezed state.

With ``c = cosh(2s)``, ``u = sinh(r)**2`` and the local variances

    b = c (1 + u) + u        (mode B)
    x = (1 + u) + c u        (mode Bbar)

every single-mode entropy is ``ln`` of the variance and the global state is
pure, so each steering value is a log-ratio of ``c``, ``b`` and ``x``.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .errors import InvalidArgumentError

# Forms printed in the original derivation; the rest follow from purity.
PRINTED_TAGS = ("AB->Bbar", "A->Bbar", "B->Bbar", "A->BBbar", "A->B")
COMPANION_TAGS = ("B->A", "Bbar->B", "Bbar->A", "ABbar->B", "BBbar->A", "B->ABbar", "Bbar->AB")
ALL_TAGS = PRINTED_TAGS + COMPANION_TAGS


def _variances(s: float, r: float) -> tuple[float, float, float]:
    c = math.cosh(2 * s)
    u = math.sinh(r) ** 2
    return c, c * (1 + u) + u, 1 + u + c * u


def _log_ratio(num: float, den: float) -> float:
    return max(0.0, math.log(num / den))


def closed_form_steering(tag: str, s: float, r: float) -> float:
    """Steering for direction ``tag`` (e.g. ``"AB->Bbar"``) at squeezings ``s``, ``r``."""
    if not (s >= 0 and r >= 0):
        raise InvalidArgumentError("squeezing parameters must be nonnegative")
    c, b, x = _variances(s, r)
    ch2, sh2 = math.cosh(r) ** 2, math.sinh(r) ** 2
    forms = {
        "AB->Bbar": lambda: _log_ratio(ch2 + c * sh2, 1.0),
        "A->Bbar": lambda: _log_ratio(c, sh2 + c * ch2),
        "B->Bbar": lambda: _log_ratio(ch2 + sh2 / c, 1.0),
        "A->BBbar": lambda: _log_ratio(c, 1.0),
        "A->B": lambda: _log_ratio(c, ch2 + c * sh2),
        "B->A": lambda: _log_ratio(b, x),
        "Bbar->B": lambda: _log_ratio(x, c),
        "Bbar->A": lambda: _log_ratio(x, b),
        "ABbar->B": lambda: _log_ratio(b, 1.0),
        "BBbar->A": lambda: _log_ratio(c, 1.0),
        "B->ABbar": lambda: _log_ratio(b, 1.0),
        "Bbar->AB": lambda: _log_ratio(x, 1.0),
    }
    try:
        return forms[tag]()
    except KeyError:
        raise InvalidArgumentError(f"unknown closed-form direction {tag!r}") from None


class TransitionPoint(NamedTuple):
    value: float
    boundary: bool = False


def transition_squeezing(s: float) -> TransitionPoint:
    """Channel squeezing ``r*`` at which A->B steering dies: ``sinh r* = tanh s``.

    For ``s = 0`` there is no steering to lose; ``(0.0, boundary=True)`` is returned.
    """
    if not s >= 0:
        raise InvalidArgumentError(f"initial squeezing must be nonnegative, got {s}")
    if s == 0:
        return TransitionPoint(0.0, True)
    return TransitionPoint(math.asinh(math.tanh(s)))


def transition_temperature(s: float, omega: float = 1.0) -> float:
    """``T* = omega / ln(1 + 1/tanh(s)**2)``, the A->B death / Bbar->B birth temperature."""
    if not s > 0:
        raise InvalidArgumentError(f"initial squeezing must be positive, got {s}")
    if not omega > 0:
        raise InvalidArgumentError(f"frequency must be positive, got {omega}")
    return omega / math.log1p(1.0 / math.tanh(s) ** 2)
