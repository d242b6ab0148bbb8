"""Symplectic linear algebra for Gaussian covariance matrices.

Conventions (fixed for the whole package):

* quadratures are interleaved, ``(x1, p1, x2, p2, ..., xn, pn)``;
* the vacuum covariance matrix is the identity (no factor of 1/2).

Covariance matrices are plain ``numpy`` float arrays of shape ``(2n, 2n)``.
Parties are addressed through a :class:`PartyMap`, which maps labels such as
``"A"``, ``"B"`` and ``"Bbar"`` to mode indices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

import numpy as np

from .errors import InvalidArgumentError, NumericalDegeneracyError, SingularBlockError

SYMMETRY_TOL = 1e-12
PHYSICAL_TOL = 1e-9

OMEGA_1 = np.array([[0.0, 1.0], [-1.0, 0.0]])
Z2 = np.diag([1.0, -1.0])
I2 = np.eye(2)

_LABEL_RE = re.compile(r"Bbar|[A-Za-z]")

PartySpec = Union[str, Iterable[str]]


def _parse_labels(parties: PartySpec) -> tuple[str, ...]:
    if isinstance(parties, str):
        labels = tuple(_LABEL_RE.findall(parties))
        if "".join(labels) != parties:
            raise InvalidArgumentError(f"cannot parse party string {parties!r}")
        return labels
    return tuple(parties)


@dataclass(frozen=True)
class PartyMap:
    """Assignment of party labels to mode indices.

    Party subsets may be given as an iterable of labels or as a concatenated
    string, e.g. ``"ABbar"`` is ``("A", "Bbar")``.
    """

    modes: Mapping[str, int] = field(default_factory=lambda: {"A": 0, "B": 1, "Bbar": 2})

    def __post_init__(self):
        idx = list(self.modes.values())
        if len(set(idx)) != len(idx):
            raise InvalidArgumentError("parties must map to distinct modes")
        if any(i < 0 for i in idx):
            raise InvalidArgumentError("mode indices must be nonnegative")

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.modes)

    def indices(self, parties: PartySpec) -> list[int]:
        """Sorted mode indices of a nonempty party subset."""
        labels = _parse_labels(parties)
        if not labels:
            raise InvalidArgumentError("party subset must be nonempty")
        if len(set(labels)) != len(labels):
            raise InvalidArgumentError(f"repeated party in {labels}")
        try:
            return sorted(self.modes[lab] for lab in labels)
        except KeyError as exc:
            raise InvalidArgumentError(f"unknown party {exc.args[0]!r}") from None


THREE_PARTY = PartyMap()
TWO_PARTY = PartyMap({"A": 0, "B": 1})


def quadrature_indices(modes: Sequence[int]) -> list[int]:
    """Row/column indices of the (x, p) pairs of the given modes."""
    return [q for m in modes for q in (2 * int(m), 2 * int(m) + 1)]


def n_modes(sigma: np.ndarray) -> int:
    sigma = np.asarray(sigma)
    if sigma.ndim != 2 or sigma.shape[0] != sigma.shape[1] or sigma.shape[0] % 2:
        raise InvalidArgumentError(f"expected a square even-dimensional matrix, got {sigma.shape}")
    return sigma.shape[0] // 2


def _resolve_modes(sigma, parties, party_map: PartyMap | None) -> list[int]:
    n = n_modes(sigma)
    if isinstance(parties, str) or (
        not isinstance(parties, np.ndarray)
        and any(isinstance(p, str) for p in parties)
    ):
        idx = (party_map or THREE_PARTY).indices(parties)
    else:
        idx = sorted(int(i) for i in parties)
        if not idx:
            raise InvalidArgumentError("party subset must be nonempty")
        if len(set(idx)) != len(idx):
            raise InvalidArgumentError("repeated mode index")
    if idx[0] < 0 or idx[-1] >= n:
        raise InvalidArgumentError(f"mode indices {idx} out of range for {n} modes")
    return idx


def symplectic_form(n: int) -> np.ndarray:
    """Direct sum of ``n`` copies of ``[[0, 1], [-1, 0]]``."""
    if int(n) != n or n < 1:
        raise InvalidArgumentError(f"number of modes must be a positive integer, got {n}")
    return _symplectic_form(int(n)).copy()


@lru_cache(maxsize=None)
def _symplectic_form(n: int) -> np.ndarray:
    omega = np.kron(np.eye(n), OMEGA_1)
    omega.flags.writeable = False
    return omega


def direct_sum(*blocks: np.ndarray) -> np.ndarray:
    dim = sum(b.shape[0] for b in blocks)
    out = np.zeros((dim, dim))
    k = 0
    for b in blocks:
        m = b.shape[0]
        out[k:k + m, k:k + m] = b
        k += m
    return out


def is_symmetric(sigma: np.ndarray, tol: float = SYMMETRY_TOL) -> bool:
    return bool(np.max(np.abs(sigma - sigma.T), initial=0.0) <= tol)


def is_symplectic(S: np.ndarray, tol: float = SYMMETRY_TOL) -> bool:
    """Check ``S Omega S^T = Omega`` entrywise and ``det S = 1``."""
    omega = _symplectic_form(n_modes(S))
    if np.max(np.abs(S @ omega @ S.T - omega)) > tol:
        return False
    return abs(np.linalg.det(S) - 1.0) <= 1e-10


def reduce(sigma: np.ndarray, parties: PartySpec | Sequence[int],
           party_map: PartyMap | None = None) -> np.ndarray:
    """Principal submatrix of ``sigma`` on the modes of ``parties``.

    ``parties`` is either a label subset resolved through ``party_map``
    (default A, B, Bbar -> 0, 1, 2) or a sequence of mode indices.
    """
    idx = quadrature_indices(_resolve_modes(sigma, parties, party_map))
    return np.asarray(sigma, dtype=float)[idx][:, idx]


def _mode_groups(M: np.ndarray) -> list[list[int]]:
    """Partition the modes of ``M`` into groups with exactly zero cross blocks."""
    m = M.shape[0] // 2
    if m == 1:
        return [[0]]
    if m == 2:
        return [[0, 1]] if M[0:2, 2:4].any() or M[2:4, 0:2].any() else [[0], [1]]
    coupled = np.abs(M).reshape(m, 2, m, 2).sum(axis=(1, 3)) != 0.0
    groups, seen = [], set()
    for start in range(m):
        if start in seen:
            continue
        stack, group = [start], []
        seen.add(start)
        while stack:
            k = stack.pop()
            group.append(k)
            for j in np.flatnonzero(coupled[k]):
                if j not in seen:
                    seen.add(int(j))
                    stack.append(int(j))
        groups.append(sorted(group))
    return groups


def _inv_2x2(block: np.ndarray) -> np.ndarray:
    a, b, c, d = block[0, 0], block[0, 1], block[1, 0], block[1, 1]
    det = a * d - b * c
    if not det > 0.0:
        raise SingularBlockError(f"steering block has determinant {det}")
    return np.array([[d, -b], [-c, a]]) / det


def _inv_spd(block: np.ndarray) -> np.ndarray:
    if block.shape == (2, 2):
        return _inv_2x2(block)
    out = np.zeros_like(block)
    for group in _mode_groups(block):
        idx = quadrature_indices(group)
        sub = block[idx][:, idx]
        if len(idx) == 2:
            out[np.ix_(idx, idx)] = _inv_2x2(sub)
            continue
        try:
            inv = np.linalg.solve(sub, np.eye(len(idx)))
        except np.linalg.LinAlgError as exc:
            raise SingularBlockError(str(exc)) from None
        if not np.all(np.isfinite(inv)):
            raise SingularBlockError("steering block is numerically singular")
        out[np.ix_(idx, idx)] = inv
    return out


def schur_complement(sigma: np.ndarray, steerer: PartySpec | Sequence[int],
                     party_map: PartyMap | None = None) -> np.ndarray:
    """Conditional covariance ``sigma_y - E^T sigma_x^{-1} E`` of the remaining modes.

    ``steerer`` selects the modes ``x`` that are conditioned on; the result
    lives on all other modes of ``sigma`` in ascending mode order.
    """
    n = n_modes(sigma)
    x_modes = _resolve_modes(sigma, steerer, party_map)
    y_modes = [m for m in range(n) if m not in x_modes]
    if not y_modes:
        raise InvalidArgumentError("steering party must be a proper subset of the modes")
    return _schur(np.asarray(sigma, dtype=float),
                  quadrature_indices(x_modes), quadrature_indices(y_modes))


def _schur(sigma: np.ndarray, ix: list[int], iy: list[int]) -> np.ndarray:
    rows_x = sigma[ix]
    e = rows_x[:, iy]
    m = sigma[iy][:, iy] - e.T @ _inv_spd(rows_x[:, ix]) @ e
    return 0.5 * (m + m.T)


def symplectic_eigenvalues(M: np.ndarray) -> np.ndarray:
    """Symplectic spectrum of a positive-definite ``2m x 2m`` matrix, ascending.

    Exactly decoupled groups of modes are treated separately. A single mode
    gives ``sqrt(det)``; larger groups use the real symmetric matrix
    ``K Omega^T M Omega K`` with ``K = M^{1/2}``, whose eigenvalues are the
    squared symplectic eigenvalues, each appearing twice.
    """
    M = np.asarray(M, dtype=float)
    n_modes(M)
    if not is_symmetric(M, 1e-9 * max(1.0, np.max(np.abs(M)))):
        raise InvalidArgumentError("matrix is not symmetric")
    if M.shape == (2, 2):
        return _group_spectrum(M)
    nu = []
    for group in _mode_groups(M):
        idx = quadrature_indices(group)
        nu.extend(_group_spectrum(M[idx][:, idx]))
    return np.sort(np.array(nu))


def _group_spectrum(M: np.ndarray) -> np.ndarray:
    m = M.shape[0] // 2
    if m == 1:
        det = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
        if not (M[0, 0] > 0.0 and det > 0.0):
            raise InvalidArgumentError("matrix is not positive definite")
        return np.array([np.sqrt(det)])
    w, v = np.linalg.eigh(M)
    if w[0] <= 0.0:
        raise InvalidArgumentError("matrix is not positive definite")
    K = (v * np.sqrt(w)) @ v.T
    omega = _symplectic_form(m)
    A = K @ omega.T @ M @ omega @ K
    mu = np.linalg.eigvalsh(0.5 * (A + A.T))
    return np.sqrt(np.clip(mu[::2], 0.0, None))


def renyi2_entropy(sigma: np.ndarray) -> float:
    """Renyi-2 entropy ``0.5 * ln det sigma`` in nats."""
    sign, logdet = np.linalg.slogdet(np.asarray(sigma, dtype=float))
    if sign <= 0:
        raise NumericalDegeneracyError("covariance matrix has nonpositive determinant")
    return 0.5 * logdet


class PhysicalCheck(NamedTuple):
    physical: bool
    min_symplectic_eigenvalue: float


def check_physical(sigma: np.ndarray, tol: float = PHYSICAL_TOL) -> PhysicalCheck:
    """Bona fide test: every symplectic eigenvalue must be at least ``1 - tol``."""
    sigma = np.asarray(sigma, dtype=float)
    if np.linalg.eigvalsh(0.5 * (sigma + sigma.T))[0] <= 0.0:
        return PhysicalCheck(False, 0.0)
    nu_min = float(symplectic_eigenvalues(sigma)[0])
    return PhysicalCheck(nu_min >= 1.0 - tol, nu_min)


def two_mode_squeezer(r: float) -> np.ndarray:
    """Symplectic matrix ``[[cosh r I, sinh r Z], [sinh r Z, cosh r I]]``."""
    if not r >= 0:
        raise InvalidArgumentError(f"squeezing must be nonnegative, got {r}")
    ch, sh = np.cosh(r), np.sinh(r)
    return np.block([[ch * I2, sh * Z2], [sh * Z2, ch * I2]])


def embed(S: np.ndarray, target_modes: Sequence[int], n: int) -> np.ndarray:
    """Act with ``S`` on ``target_modes`` of an ``n``-mode system, identity elsewhere."""
    idx = quadrature_indices(target_modes)
    if S.shape != (len(idx), len(idx)):
        raise InvalidArgumentError(
            f"transform of shape {S.shape} does not match {len(target_modes)} target modes")
    full = np.eye(2 * n)
    full[np.ix_(idx, idx)] = S
    return full


def conjugate(sigma: np.ndarray, S: np.ndarray, target_modes: PartySpec | Sequence[int],
              party_map: PartyMap | None = None) -> np.ndarray:
    """Congruence ``S_full sigma S_full^T`` with ``S`` embedded on ``target_modes``.

    ``target_modes`` keeps its given order, so ``S``'s first mode acts on the
    first listed target.
    """
    n = n_modes(sigma)
    if isinstance(target_modes, str) or any(isinstance(t, str) for t in target_modes):
        pm = party_map or THREE_PARTY
        targets = [pm.modes[lab] for lab in _parse_labels(target_modes)]
    else:
        targets = [int(t) for t in target_modes]
    if len(set(targets)) != len(targets) or min(targets) < 0 or max(targets) >= n:
        raise InvalidArgumentError(f"invalid target modes {targets} for {n} modes")
    full = embed(np.asarray(S, dtype=float), targets, n)
    out = full @ np.asarray(sigma, dtype=float) @ full.T
    return 0.5 * (out + out.T)
