"""First-order perturbation energies from the closed-form diagonal elements.

E_n ~= 2 beta (2n + zeta) + lam * <psi_n| r^2/(1+g r^2) |psi_n> - A beta/(zeta-1).

The diagonal element is evaluated on the extended-precision path, which keeps
all fifteen tabulated digits of the coefficient exact.
"""

from __future__ import annotations

from .errors import DomainError
from .matrix_elements import me_inv_r2, me_nonpoly
from .model import ChannelSpec, PotentialParams


def first_order_coefficient(n: int, channel: ChannelSpec, g: float) -> float:
    """Coefficient of lam in the first-order expansion (A = 0 context):
    the diagonal element <psi_n| r^2/(1+g r^2) |psi_n>."""
    if n < 0:
        raise DomainError(f"state index must be >= 0, got {n}")
    return me_nonpoly(n, n, channel, g)


def first_order_energy(n: int, channel: ChannelSpec, potential: PotentialParams) -> float:
    """Unperturbed energy plus the diagonal first-order shifts."""
    if n < 0:
        raise DomainError(f"state index must be >= 0, got {n}")
    energy = 2.0 * channel.beta * (2 * n + channel.zeta)
    energy += potential.lam * me_nonpoly(n, n, channel, potential.g)
    if channel.A != 0.0:
        energy -= channel.A * me_inv_r2(n, n, channel)
    return energy
