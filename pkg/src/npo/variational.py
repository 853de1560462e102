"""Dense symmetric eigensolution and the outer minimization over A.

For any A >= -1/4 the ordered eigenvalues of the projected Hamiltonian are
rigorous upper bounds to the true eigenvalues in the same channel, so every
probe of the one-dimensional search produces a valid bound and the located
minimum is simply the tightest one seen.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConvergenceError, DomainError
from .matrix_elements import build_ritz
from .model import ChannelSpec, PotentialParams

#: Golden-section convergence window on A.
_A_TOL = 1e-6

#: Number of points in the coarse scan preceding golden-section refinement.
_COARSE_POINTS = 25


@dataclass(frozen=True)
class BoundResult:
    """Outcome of a variational bound computation for one level."""

    level: int
    energy: float
    optimal_A: float
    D: int
    history: list = field(default_factory=list)  # [(D, E), ...] at optimal_A


def sym_eigenvalues(H: np.ndarray) -> np.ndarray:
    """All eigenvalues of a symmetric real matrix, ascending."""
    H = np.asarray(H, dtype=float)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise DomainError(f"matrix must be square, got shape {H.shape}")
    if not np.all(np.isfinite(H)):
        raise DomainError("matrix contains non-finite entries")
    if not np.allclose(H, H.T, rtol=0.0, atol=1e-12 * (1.0 + np.abs(H).max())):
        raise DomainError("matrix is not symmetric")
    try:
        return np.linalg.eigvalsh(H)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - pathological input
        raise ConvergenceError(f"symmetric eigensolver failed: {exc}") from exc


def bound_at_A(
    k: int,
    D: int,
    A: float,
    gamma: float,
    potential: PotentialParams,
    B: float = 1.0,
) -> float:
    """The (k+1)-th smallest eigenvalue of the D x D projected Hamiltonian:
    an upper bound to the k-th exact level of the gamma channel."""
    if k < 0:
        raise DomainError(f"level must be >= 0, got {k}")
    if k >= D:
        raise DomainError(f"level k={k} needs basis size D > k, got D={D}")
    channel = ChannelSpec(gamma=gamma, A=A, B=B)
    return float(sym_eigenvalues(build_ritz(D, channel, potential).H)[k])


def _lowest_valid_A(gamma: float) -> float:
    """Smallest admissible A: at least -1/4, and strictly above the value
    where zeta reaches 1 (the r^-2 element diverges there)."""
    zeta_floor = -((gamma + 0.5) ** 2)
    if zeta_floor >= -0.25:
        return zeta_floor + 1e-9
    return -0.25


def minimize_over_A(
    k: int,
    D: int,
    gamma: float,
    potential: PotentialParams,
    B: float = 1.0,
    A_max: float = 10.0,
    with_history: bool = True,
) -> BoundResult:
    """Minimize bound_at_A over A in [-1/4, A_max]: a 25-point coarse scan
    followed by golden-section refinement to |dA| <= 1e-6.

    Every probed A yields a rigorous upper bound, so the returned minimum is
    itself a valid bound regardless of optimizer quality.
    """
    lo_limit = _lowest_valid_A(gamma)
    if A_max <= lo_limit:
        raise DomainError(f"A_max = {A_max} leaves an empty search box")

    def f(A: float) -> float:
        return bound_at_A(k, D, A, gamma, potential, B)

    grid = np.linspace(lo_limit, A_max, _COARSE_POINTS)
    values = [f(A) for A in grid]
    i_min = int(np.argmin(values))
    a = grid[max(0, i_min - 1)]
    b = grid[min(_COARSE_POINTS - 1, i_min + 1)]

    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc = f(c)
    fd = f(d)
    best = min((values[i_min], grid[i_min]), (fc, c), (fd, d))
    while b - a > _A_TOL:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = f(c)
            best = min(best, (fc, c))
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = f(d)
            best = min(best, (fd, d))
    a_mid = 0.5 * (a + b)
    best = min(best, (f(a_mid), a_mid))
    energy, optimal_A = best

    history = []
    if with_history:
        history = [
            (d_, bound_at_A(k, d_, optimal_A, gamma, potential, B))
            for d_ in range(k + 1, D + 1)
        ]
    return BoundResult(level=k, energy=energy, optimal_A=float(optimal_A), D=D, history=history)
