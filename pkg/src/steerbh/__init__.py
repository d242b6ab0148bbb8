"""Gaussian EPR-steering monogamy of a two-mode squeezed state under the Hawking effect."""

from .errors import (
    InvalidArgumentError,
    NumericalDegeneracyError,
    SingularBlockError,
    SteerBHError,
    TransitionNotFoundError,
)
from .hawking import (
    HawkingParams,
    black_hole_state,
    hawking_extend,
    initial_tmsv,
    squeezing_from_temperature,
    temperature_from_squeezing,
    temperature_from_surface_gravity,
)
from .oracle import closed_form_steering, transition_squeezing, transition_temperature
from .steering import (
    SteeringDirection,
    SteeringReport,
    ckw_report,
    deficit_1to2,
    deficit_2to1,
    gaussian_steering,
    monogamy_asymmetry,
)
from .sweep import SweepConfig, SweepRow, find_transition, run_sweep, verify_oracle
from .symplectic import (
    PartyMap,
    check_physical,
    conjugate,
    reduce,
    renyi2_entropy,
    schur_complement,
    symplectic_eigenvalues,
    symplectic_form,
    two_mode_squeezer,
)

__version__ = "0.1.0"
