"""Independent numerical ground truth.

Two routes that never touch the closed-form element code:

* adaptive Gauss-Kronrod quadrature (QUADPACK) of the explicit integrands
  built from the basis wavefunctions, and
* a Numerov shooting solver for the radial equation with node-counting
  bisection on the energy.

These back the oracle-equivalence tests and generate the pinned JSON
fixtures; the production bound path only calls the quadrature as the
documented small-g fallback.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy import integrate
from scipy.special import eval_genlaguerre

from .errors import ConvergenceError, DomainError
from .model import ChannelSpec, PotentialParams

GENERATOR_VERSION = "1"

_QUAD_KINDS = ("nonpoly", "inv_r2", "overlap")


def _wavefunction(n: int, zeta: float, beta: float, r):
    """Basis function via generalized Laguerre polynomials (a route separate
    from the package's own terminating-series evaluation):
    1F1(-n; zeta; x) = n! / (zeta)_n * L_n^{(zeta-1)}(x)."""
    log_norm_sq = (
        math.log(2.0)
        + zeta * math.log(beta)
        + math.lgamma(zeta + n)
        - math.lgamma(n + 1)
        - 2.0 * math.lgamma(zeta)
    )
    # fold the 1F1 <-> Laguerre conversion into the prefactor
    log_conv = math.lgamma(n + 1) + math.lgamma(zeta) - math.lgamma(zeta + n)
    sign = -1.0 if n % 2 else 1.0
    pref = sign * math.exp(0.5 * log_norm_sq + log_conv)
    x = beta * r * r
    return pref * r ** (zeta - 0.5) * np.exp(-0.5 * x) * eval_genlaguerre(n, zeta - 1.0, x)


def quad_matrix_element(kind: str, m: int, n: int, channel: ChannelSpec, g: float = None) -> float:
    """Adaptive quadrature of <psi_m| O |psi_n> with O one of r^2/(1+g r^2)
    ("nonpoly"), r^{-2} ("inv_r2") or the identity ("overlap")."""
    if kind not in _QUAD_KINDS:
        raise DomainError(f"unknown matrix-element kind {kind!r}; choose from {_QUAD_KINDS}")
    if kind == "nonpoly" and (g is None or g <= 0):
        raise DomainError("the nonpoly element needs a positive coupling g")
    zeta = channel.zeta
    beta = channel.beta
    if kind == "inv_r2" and zeta <= 1.0:
        raise DomainError("the r^-2 integral diverges for zeta <= 1")

    def integrand(r):
        p = _wavefunction(m, zeta, beta, r) * _wavefunction(n, zeta, beta, r)
        if kind == "nonpoly":
            return p * r * r / (1.0 + g * r * r)
        if kind == "inv_r2":
            return p / (r * r)
        return p

    value, err = integrate.quad(
        integrand, 0.0, np.inf, epsabs=1e-13, epsrel=1e-13, limit=400
    )
    if not math.isfinite(value):
        raise ConvergenceError(f"quadrature returned {value} for {kind}({m},{n})")
    if err > 1e-9 * max(1.0, abs(value)):
        raise ConvergenceError(
            f"quadrature error estimate {err:.2e} too large for {kind}({m},{n})"
        )
    return value


# ---------------------------------------------------------------------------
# shooting solver
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ShootingConfig:
    """Numerical knobs of the outward Numerov integration (B = 1)."""

    r_min: float = 1e-6
    r_max: float = 12.0
    n_steps: int = 8000
    bisect_tol: float = 1e-10
    refine_tol: float = 1e-9  # grid-halving acceptance on E

    def __post_init__(self):
        if not (0 < self.r_min < self.r_max):
            raise DomainError("need 0 < r_min < r_max")
        if self.n_steps < 100:
            raise DomainError("n_steps too small for a meaningful sweep")
        if self.bisect_tol <= 0 or self.refine_tol <= 0:
            raise DomainError("tolerances must be positive")


def _node_count(E: float, V_eff: np.ndarray, r: np.ndarray, gamma: float) -> int:
    """Nodes of the outward Numerov solution at energy E."""
    h = r[1] - r[0]
    c = h * h / 12.0
    f = V_eff - E
    # two-term series psi ~ r^{gamma+1} (1 + c2 r^2) seeds the first two points
    c2 = -E / (4.0 * gamma + 6.0)
    u_prev = r[0] ** (gamma + 1.0) * (1.0 + c2 * r[0] * r[0])
    u_cur = r[1] ** (gamma + 1.0) * (1.0 + c2 * r[1] * r[1])
    t_prev = 1.0 - c * f[0]
    t_cur = 1.0 - c * f[1]
    nodes = 0
    for i in range(2, r.shape[0]):
        t_next = 1.0 - c * f[i]
        u_next = ((12.0 - 10.0 * t_cur) * u_cur - t_prev * u_prev) / t_next
        if (u_next < 0.0 and u_cur > 0.0) or (u_next > 0.0 and u_cur < 0.0):
            nodes += 1
        if abs(u_next) > 1e250:
            u_next *= 1e-250
            u_cur *= 1e-250
        u_prev, u_cur = u_cur, u_next
        t_prev, t_cur = t_cur, t_next
    return nodes


def _shoot_on_grid(k, gamma, potential, config, n_steps):
    r = np.linspace(max(config.r_min, config.r_max / n_steps), config.r_max, n_steps)
    V_eff = r * r + potential.lam * r * r / (1.0 + potential.g * r * r)
    cf = gamma * (gamma + 1.0)
    if cf != 0.0:
        V_eff = V_eff + cf / (r * r)

    count = lambda E: _node_count(E, V_eff, r, gamma)
    E_lo = float(min(V_eff.min(), 0.0)) - 1.0
    E_hi = 2.0 * (2.0 * k + abs(gamma + 0.5) + 1.0) + 2.0
    for _ in range(60):
        if count(E_hi) >= k + 1:
            break
        E_hi = 2.0 * E_hi + 10.0
    else:
        raise ConvergenceError(
            f"no upper bracket for level {k}: node count at E = {E_hi} "
            f"is {count(E_hi)}"
        )
    if count(E_lo) > k:
        raise ConvergenceError(
            f"lower bracket failure: {count(E_lo)} nodes already at E = {E_lo}"
        )
    while E_hi - E_lo > config.bisect_tol:
        E_mid = 0.5 * (E_lo + E_hi)
        if count(E_mid) > k:
            E_hi = E_mid
        else:
            E_lo = E_mid
    return 0.5 * (E_lo + E_hi)


def shoot_eigenvalue(
    k: int,
    gamma: float,
    potential: PotentialParams,
    config: ShootingConfig = None,
) -> float:
    """k-th eigenvalue of the gamma channel (B = 1) by node-counting bisection
    on the outward Numerov integration; the grid is refined until two
    successive resolutions agree to config.refine_tol."""
    if k < 0:
        raise DomainError(f"level must be >= 0, got {k}")
    if gamma < -1.0:
        raise DomainError(f"gamma must be >= -1, got {gamma}")
    cfg = config or ShootingConfig()
    # push the endpoint out for high levels so the decaying tail is resolved
    turning = math.sqrt(max(4.0 * k + 2.0 * abs(gamma) + 8.0, abs(potential.lam) / potential.g + 8.0))
    if cfg.r_max < turning + 6.0:
        cfg = ShootingConfig(
            r_min=cfg.r_min,
            r_max=turning + 8.0,
            n_steps=cfg.n_steps,
            bisect_tol=cfg.bisect_tol,
            refine_tol=cfg.refine_tol,
        )
    steps = cfg.n_steps
    value = _shoot_on_grid(k, gamma, potential, cfg, steps)
    last_change = math.inf
    for _ in range(3):
        finer = _shoot_on_grid(k, gamma, potential, cfg, 2 * steps)
        last_change = abs(finer - value)
        if last_change <= cfg.refine_tol * max(1.0, abs(finer)):
            return finer
        steps *= 2
        value = finer
    raise ConvergenceError(
        f"eigenvalue did not settle under grid refinement (last change "
        f"{last_change:.2e})"
    )


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------

def fixtures_dir() -> Path:
    """Fixture directory: $NPO_FIXTURES, else ./fixtures."""
    return Path(os.environ.get("NPO_FIXTURES", "fixtures"))


def write_fixture(path: Path, kind: str, params: dict, value: float, error_estimate: float):
    record = {
        "kind": kind,
        "params": params,
        "value": value,
        "error_estimate": error_estimate,
        "generator_version": GENERATOR_VERSION,
    }
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as fh:
        json.dump(record, fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_fixture(path: Path) -> dict:
    with open(path) as fh:
        return json.load(fh)


def load_all_fixtures(directory: Path = None) -> dict:
    """All fixture records in the directory, keyed by file stem."""
    directory = Path(directory) if directory is not None else fixtures_dir()
    records = {}
    for path in sorted(directory.glob("*.json")):
        records[path.stem] = load_fixture(path)
    return records
