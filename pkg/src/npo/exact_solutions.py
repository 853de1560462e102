"""Quasi-exact eigenpairs of the non-polynomial oscillator.

For B = 1 the ansatz psi = r^{gamma+1} e^{-r^2/2} sum_{i=0}^n alpha_i r^{2i}
solves the radial equation exactly provided the couplings satisfy

    lam = g (E - 4n - 2gamma - 3)

together with a vanishing (n+1) x (n+1) tridiagonal determinant.  With lam
eliminated, the determinant rows read

    a_{j-1} alpha_{j-1} + b_j alpha_j + c_{j+1} alpha_{j+1} = 0,

    a_k = 4 g (n - k),          (independent of E after elimination)
    b_k = E - 4k - 2gamma - 3 + g c_k,
    c_k = 2k (2k + 2gamma + 1),

so the subdiagonal entry of row k is a_{k-1} and the superdiagonal is
c_{k+1}; the pivot chain is u_k = b_k - c_k a_{k-1} / u_{k-1} with u_0 = b_0.
Root finding works on the denominator-cleared continuant

    P_k = b_k P_{k-1} - c_k a_{k-1} P_{k-2},   P_{-1} = 1, P_0 = b_0,

which has no poles.  P_n has n+1 simple real roots (the off-diagonal
products a_{k-1} c_k are positive, so the matrix is similar to a symmetric
tridiagonal one).  Exactly one root sits at E = 4n + 2gamma + 3 with lam = 0:
the unperturbed oscillator state, which is not a genuine solution of the
coupled family and is filtered out.  The n remaining roots all carry lam < 0.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import (
    DomainError,
    InconsistentSolutionError,
    PivotPoleError,
    RootScanWarning,
)

#: Number of subdivisions of the default root-scan interval.
_SCAN_POINTS = 400

#: Relative tolerance for the secant polish of each root.
_ROOT_RTOL = 1e-12


@dataclass(frozen=True)
class TridiagCoeffs:
    """Coefficient functions of the determinant condition at fixed (n, gamma, g),
    with lam already eliminated through the coupling constraint."""

    n: int
    gamma: float
    g: float

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"polynomial order n must be >= 1, got {self.n}")
        if not self.g > 0:
            raise DomainError(f"g must be positive, got {self.g}")
        if self.gamma < -1.0:
            raise DomainError(f"gamma must be >= -1, got {self.gamma}")

    def a(self, k: int) -> float:
        """Subdiagonal coefficient a_k = 4 g (n - k)."""
        return 4.0 * self.g * (self.n - k)

    def b(self, k: int, E: float) -> float:
        return E - 4.0 * k - 2.0 * self.gamma - 3.0 + self.g * self.c(k)

    def c(self, k: int) -> float:
        return 2.0 * k * (2.0 * k + 2.0 * self.gamma + 1.0)

    def lam_of(self, E: float) -> float:
        """Coupling constraint lam = g (E - 4n - 2gamma - 3)."""
        return self.g * (E - 4.0 * self.n - 2.0 * self.gamma - 3.0)

    def trivial_root(self) -> float:
        """The lam = 0 root E = 4n + 2gamma + 3 (pure oscillator state)."""
        return 4.0 * self.n + 2.0 * self.gamma + 3.0


@dataclass(frozen=True)
class ExactSolution:
    """One closed-form eigenpair of the coupled (lam, g) family."""

    n: int
    gamma: float
    g: float
    energy: float
    lam: float
    alphas: tuple
    nodes: int

    @property
    def level_label(self) -> str:
        return "ground state" if self.nodes == 0 else f"excited state {self.nodes}"


def det_condition(n: int, gamma: float, g: float, E: float) -> float:
    """Pivot product prod_{k=1}^{n} u_k of the eliminated tridiagonal system.

    Vanishes exactly at the quasi-exact energies.  Raises PivotPoleError when
    an intermediate pivot is zero (E is a root of a lower-order condition).
    """
    coeffs = TridiagCoeffs(n=n, gamma=gamma, g=g)
    u = coeffs.b(0, E)
    product = 1.0
    for k in range(1, n + 1):
        if u == 0.0:
            raise PivotPoleError(
                f"pivot u_{k-1} vanished at E = {E}; use the continuant form"
            )
        u = coeffs.b(k, E) - coeffs.c(k) * coeffs.a(k - 1) / u
        product *= u
    return product


def _continuant(coeffs: TridiagCoeffs, E: float) -> float:
    """P_n(E), the denominator-cleared determinant (degree n+1 polynomial)."""
    p_prev = 1.0
    p_cur = coeffs.b(0, E)
    for k in range(1, coeffs.n + 1):
        p_next = coeffs.b(k, E) * p_cur - coeffs.c(k) * coeffs.a(k - 1) * p_prev
        p_prev, p_cur = p_cur, p_next
    return p_cur


def default_scan_interval(n: int, gamma: float, g: float) -> tuple:
    """Scan box for the nontrivial roots; the lam = 0 root sits exactly at
    the upper endpoint and the lower end widens with the g-shifts in b_k."""
    base = 2.0 * gamma + 3.0
    lo = base - 4.0 * n - 8.0 * g * n * (n + gamma + 2.0)
    hi = base + 4.0 * n
    return lo, hi


def _polish_root(coeffs: TridiagCoeffs, lo: float, hi: float) -> float:
    """Bisection to a narrow bracket, then secant to relative 1e-12."""
    f_lo = _continuant(coeffs, lo)
    f_hi = _continuant(coeffs, hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        f_mid = _continuant(coeffs, mid)
        if f_mid == 0.0:
            return mid
        if (f_lo < 0.0) != (f_mid < 0.0):
            hi, f_hi = mid, f_mid
        else:
            lo, f_lo = mid, f_mid
        if hi - lo <= _ROOT_RTOL * max(1.0, abs(mid)):
            break
    x0, x1 = lo, hi
    f0, f1 = f_lo, f_hi
    for _ in range(60):
        if f1 == f0:
            break
        x2 = x1 - f1 * (x1 - x0) / (f1 - f0)
        if not (min(lo, hi) - 1.0 <= x2 <= max(lo, hi) + 1.0):
            break
        x0, f0 = x1, f1
        x1, f1 = x2, _continuant(coeffs, x2)
        if abs(x1 - x0) <= _ROOT_RTOL * max(1.0, abs(x1)):
            break
    return x1


def recover_alphas(n: int, gamma: float, g: float, E: float) -> list:
    """Polynomial coefficients alpha_0..alpha_n (alpha_0 = 1) at energy E.

    Forward three-term recursion; the terminal row must close to ~1e-8,
    otherwise E is not actually a solution.
    """
    coeffs = TridiagCoeffs(n=n, gamma=gamma, g=g)
    alphas = [1.0]
    # row j = 0: b_0 alpha_0 + c_1 alpha_1 = 0
    alphas.append(-coeffs.b(0, E) / coeffs.c(1))
    for j in range(1, n):
        num = coeffs.a(j - 1) * alphas[j - 1] + coeffs.b(j, E) * alphas[j]
        alphas.append(-num / coeffs.c(j + 1))
    residual = coeffs.a(n - 1) * alphas[n - 1] + coeffs.b(n, E) * alphas[n]
    scale = max(1.0, max(abs(x) for x in alphas)) * max(1.0, abs(E), coeffs.g)
    if abs(residual) > 1e-8 * scale:
        raise InconsistentSolutionError(
            f"terminal recursion row fails to close (residual {residual:.3e}); "
            f"E = {E} does not satisfy the order-{n} determinant condition"
        )
    return alphas


def count_nodes(alphas) -> int:
    """Positive real roots of sum_i alpha_i x^i (x = r^2), i.e. the node count
    of the radial eigenfunction on (0, infinity)."""
    if len(alphas) == 0 or alphas[0] == 0.0:
        raise DomainError("alpha_0 must be nonzero")
    coeffs = np.array(alphas, dtype=float)
    deg = len(coeffs) - 1
    if deg == 0:
        return 0
    roots = np.polynomial.polynomial.polyroots(coeffs)
    scale = max(1.0, np.abs(roots).max())
    count = 0
    for root in roots:
        if abs(root.imag) <= 1e-9 * scale and root.real > 1e-12 * scale:
            count += 1
    return count


def exact_spectrum(n: int, gamma: float, g: float) -> list:
    """All closed-form eigenpairs of order n: the real roots of the
    determinant condition with the trivial lam = 0 oscillator root removed.

    Each root is packaged with its coupling lam = g(E - 4n - 2gamma - 3),
    its polynomial coefficients, and its node count.  Emits RootScanWarning
    when fewer than n nontrivial roots are located in the scan box.
    """
    coeffs = TridiagCoeffs(n=n, gamma=gamma, g=g)
    lo, hi = default_scan_interval(n, gamma, g)
    # nudge past the trivial root parked exactly at the upper endpoint
    grid = np.linspace(lo, hi + 1e-9 * max(1.0, abs(hi)), _SCAN_POINTS + 1)
    values = [_continuant(coeffs, E) for E in grid]
    roots = []
    for i in range(_SCAN_POINTS):
        v0, v1 = values[i], values[i + 1]
        if v0 == 0.0:
            roots.append(grid[i])
        elif (v0 < 0.0) != (v1 < 0.0):
            roots.append(_polish_root(coeffs, grid[i], grid[i + 1]))
    # deduplicate and drop the trivial oscillator root
    trivial = coeffs.trivial_root()
    span = max(1.0, hi - lo)
    unique = []
    for root in sorted(roots):
        if unique and abs(root - unique[-1]) < 1e-9 * span:
            continue
        unique.append(root)
    nontrivial = [E for E in unique if abs(E - trivial) > 1e-7 * max(1.0, abs(trivial))]
    if len(nontrivial) < n:
        warnings.warn(
            f"found {len(nontrivial)} of the expected {n} nontrivial roots in "
            f"[{lo}, {hi}]; the scan may have missed sign changes",
            RootScanWarning,
            stacklevel=2,
        )
    solutions = []
    for E in nontrivial:
        alphas = recover_alphas(n, gamma, g, E)
        solutions.append(
            ExactSolution(
                n=n,
                gamma=gamma,
                g=g,
                energy=E,
                lam=coeffs.lam_of(E),
                alphas=tuple(alphas),
                nodes=count_nodes(alphas),
            )
        )
    return solutions


def exact_energy_order1(gamma: float, g: float) -> float:
    """Closed form of the single order-1 energy: (3 + 2 gamma)(1 - 2 g)."""
    return (3.0 + 2.0 * gamma) * (1.0 - 2.0 * g)


def exact_energies_order2(gamma: float, g: float) -> tuple:
    """Closed form of the order-2 pair:
    E_pm = 5 + 2 gamma - g (13 + 6 gamma) +- sqrt(g^2 (7+2gamma)^2 + g(8 gamma - 4) + 4).
    """
    disc = g * g * (7.0 + 2.0 * gamma) ** 2 + g * (8.0 * gamma - 4.0) + 4.0
    root = math.sqrt(disc)
    center = 5.0 + 2.0 * gamma - g * (13.0 + 6.0 * gamma)
    return center + root, center - root
