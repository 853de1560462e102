"""Physical and basis parameters, plus the exactly solvable reference system.

The radial problem in N spatial dimensions with angular momentum l is
described by the single combined parameter gamma = l + (N - 3)/2; the
centrifugal strength is gamma*(gamma+1).  The variational basis is generated
by the singular-oscillator Hamiltonian

    H0 = -d^2/dr^2 + B r^2 + (gamma*(gamma+1) + A) / r^2,

whose spectrum is 2*beta*(2n + zeta) with beta = sqrt(B) and
zeta = 1 + sqrt(A + (gamma + 1/2)^2), and whose normalized eigenfunctions are
Laguerre-type polynomials times r^{zeta-1/2} e^{-beta r^2/2}.  The dummy
strength A >= -1/4 deforms the basis without changing the target operator and
is minimized over by the variational layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError
from .specfun import hyp1f1_terminating


def zeta_of(A: float, gamma: float) -> float:
    """Basis exponent zeta = 1 + sqrt(A + (gamma + 1/2)^2)."""
    radicand = A + (gamma + 0.5) ** 2
    if radicand < 0:
        raise DomainError(
            f"A + (gamma+1/2)^2 = {radicand} is negative; no real basis exponent"
        )
    return 1.0 + math.sqrt(radicand)


@dataclass(frozen=True)
class PotentialParams:
    """Couplings of the rational perturbation lam * r^2 / (1 + g r^2)."""

    lam: float
    g: float

    def __post_init__(self):
        if not self.g > 0:
            raise DomainError(f"coupling g must be positive, got {self.g}")


@dataclass(frozen=True)
class ChannelSpec:
    """Angular/dimension channel plus basis parameters.

    gamma is the canonical parameter; integer (N, l) problems enter through
    :meth:`from_dimension`.  A is the dummy basis-deformation strength and B
    the oscillator coefficient (beta = sqrt(B)).
    """

    gamma: float
    A: float = 0.0
    B: float = 1.0

    def __post_init__(self):
        if self.gamma < -1.0:
            raise DomainError(f"gamma must be >= -1, got {self.gamma}")
        if self.A < -0.25:
            raise DomainError(f"A must be >= -1/4, got {self.A}")
        if not self.B > 0:
            raise DomainError(f"B must be positive, got {self.B}")
        if self.A + (self.gamma + 0.5) ** 2 < 0:
            raise DomainError("A + (gamma+1/2)^2 must be nonnegative")

    @classmethod
    def from_dimension(cls, N: int, l: int, A: float = 0.0, B: float = 1.0) -> "ChannelSpec":
        """Channel for integer dimension N >= 1 and angular momentum l >= 0."""
        if N < 1 or int(N) != N:
            raise DomainError(f"dimension N must be an integer >= 1, got {N}")
        if l < 0 or int(l) != l:
            raise DomainError(f"angular momentum l must be an integer >= 0, got {l}")
        if N == 1 and l != 0:
            raise DomainError("the one-dimensional problem only supports l = 0")
        return cls(gamma=l + (N - 3) / 2.0, A=A, B=B)

    @property
    def beta(self) -> float:
        return math.sqrt(self.B)

    @property
    def zeta(self) -> float:
        return zeta_of(self.A, self.gamma)

    @property
    def attractive_singular(self) -> bool:
        """True in the -1 <= gamma < -1/2 regime (small-r exponent below 1/2);
        permitted, but flagged in run metadata."""
        return self.gamma < -0.5

    def with_A(self, A: float) -> "ChannelSpec":
        return ChannelSpec(gamma=self.gamma, A=A, B=self.B)


@dataclass(frozen=True)
class GKState:
    """Radial eigenstate of the reference Hamiltonian H0."""

    n: int
    channel: ChannelSpec = field(default_factory=lambda: ChannelSpec(0.0))

    def __post_init__(self):
        if self.n < 0 or int(self.n) != self.n:
            raise DomainError(f"radial quantum number must be >= 0, got {self.n}")

    @property
    def energy(self) -> float:
        return gk_energy(self.n, self.channel)


def gk_energy(n: int, channel: ChannelSpec) -> float:
    """Reference-system eigenvalue 2*beta*(2n + zeta)."""
    if n < 0:
        raise DomainError(f"radial quantum number must be >= 0, got {n}")
    return 2.0 * channel.beta * (2 * n + channel.zeta)


def gk_wavefunction(n: int, channel: ChannelSpec, r: float) -> float:
    """Normalized radial eigenfunction of H0 at r > 0:

        psi_n(r) = (-1)^n sqrt(2 beta^zeta (zeta)_n / (n! Gamma(zeta)))
                   * r^{zeta-1/2} e^{-beta r^2/2} 1F1(-n; zeta; beta r^2)
    """
    if r <= 0:
        raise DomainError(f"r must be positive, got {r}")
    beta = channel.beta
    zeta = channel.zeta
    # log of the squared norm constant, to dodge overflow at large n
    log_norm_sq = (
        math.log(2.0)
        + zeta * math.log(beta)
        + math.lgamma(zeta + n)
        - math.lgamma(n + 1)
        - 2.0 * math.lgamma(zeta)
    )
    sign = -1.0 if n % 2 else 1.0
    poly = hyp1f1_terminating(n, zeta, beta * r * r)
    return (
        sign
        * math.exp(0.5 * log_norm_sq + (zeta - 0.5) * math.log(r) - 0.5 * beta * r * r)
        * poly
    )
