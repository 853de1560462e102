"""Closed-form Hamiltonian matrix elements in the oscillator basis.

The only nontrivial element is

    M[m][n] = <psi_m | r^2 / (1 + g r^2) | psi_n>,

for which a single-incomplete-gamma form exists:

    M[m][n] = (-1)^{m+n} sqrt((zeta)_n (zeta)_m / (n! m!)) * (T1 - T2),

    T1 = zeta beta^zeta e^{x} g^{-(zeta+1)} Gamma(-zeta, x)
         * 1F1(-n; zeta; -x) * 1F1(-m; zeta; -x),            x = beta/g,
    T2 = (1 / (beta Gamma(zeta)))
         * sum_{i<=n} sum_{j<=m} sum_{k=1}^{i+j}
             (-n)_i (-m)_j Gamma(zeta+i+j+1-k) (-x)^k / ((zeta)_i (zeta)_j i! j!).

T1 and T2 cancel severely: the surviving value is O(1/g) while both terms
grow like x^{m+n} and Gamma(zeta + m + n).  All accumulation therefore runs
on gmpy2 big floats, with the working precision chosen a priori from the
gamma growth plus the x^{m+n} amplification and verified a posteriori by a
max-term/result monitor; the precision escalates (and, past a hard cap,
falls back to adaptive quadrature) whenever fewer than ~17 clean digits
survive.

The r^{-2} element has an elementary closed form (valid for zeta > 1) and
needs no extended precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import gmpy2
import numpy as np
from gmpy2 import mpfr

from .errors import DomainError
from .model import ChannelSpec, PotentialParams
from .specfun import extended_context, gamma_upper_ext

#: Hard cap on working precision before the quadrature fallback engages.
_MAX_PREC_BITS = 6000

#: Clean decimal digits required to survive the cancellation.
_CLEAN_DIGITS = 17


def _prec_bits(nmax: int, zeta: float, x: float) -> int:
    """A-priori working precision (bits) for entries up to index nmax."""
    smax = 2 * nmax + 1
    growth = math.lgamma(zeta + smax + 1) / math.log(10.0)
    amplification = smax * math.log10(x) if x > 1.0 else 0.0
    digits = growth + amplification + 2 * _CLEAN_DIGITS
    return max(128, int(math.ceil(3.4 * digits)))


def _nonpoly_block(pairs, nmax: int, zeta: float, beta: float, g: float, bits: int):
    """Evaluate the closed form for the requested (m <= n) index pairs.

    Returns ({(m, n): float}, worst_digits_lost).
    """
    with extended_context(bits):
        zeta_e = mpfr(zeta)
        beta_e = mpfr(beta)
        g_e = mpfr(g)
        x = beta_e / g_e
        # w[n][i] = (-n)_i / ((zeta)_i i!); F[n] = 1F1(-n; zeta; -x)
        w = []
        F = []
        for n in range(nmax + 1):
            row = [mpfr(1)]
            t = mpfr(1)
            acc = mpfr(1)
            for i in range(1, n + 1):
                t *= mpfr(-(n - i + 1)) / ((zeta_e + i - 1) * i)
                row.append(t)
                acc += t * (-x) ** i
            w.append(row)
            F.append(acc)
        # Gamma(zeta + t) for t = 1 .. 2 nmax + 1
        gam = [mpfr(0), gmpy2.gamma(zeta_e + 1)]
        for t_ in range(2, 2 * nmax + 2):
            gam.append(gam[-1] * (zeta_e + t_ - 1))
        # G[s] = sum_{k=1..s} (-x)^k Gamma(zeta + s + 1 - k)
        G = [mpfr(0)] * (2 * nmax + 1)
        for s in range(1, 2 * nmax + 1):
            acc = mpfr(0)
            p = mpfr(1)
            for k in range(1, s + 1):
                p *= -x
                acc += p * gam[s + 1 - k]
            G[s] = acc
        # the incomplete gamma is evaluated once for the whole block
        c1 = (
            zeta_e
            * beta_e ** zeta_e
            * gmpy2.exp(x)
            / g_e ** (zeta_e + 1)
            * gamma_upper_ext(-zeta_e, x)
        )
        inv_bgam = 1 / (beta_e * gmpy2.gamma(zeta_e))
        # sqrt((zeta)_n / n!) prefactors
        nf = [mpfr(1)]
        for n in range(1, nmax + 1):
            nf.append(nf[-1] * (zeta_e + n - 1) / n)
        nf = [gmpy2.sqrt(v) for v in nf]

        out = {}
        worst_lost = 0.0
        for (m, n) in pairs:
            s2 = mpfr(0)
            peak = mpfr(0)
            for s in range(1, n + m + 1):
                conv = mpfr(0)
                for i in range(max(0, s - m), min(n, s) + 1):
                    conv += w[n][i] * w[m][s - i]
                term = conv * G[s]
                s2 += term
                if abs(term) > peak:
                    peak = abs(term)
            t1 = c1 * F[n] * F[m]
            t2 = s2 * inv_bgam
            value = t1 - t2
            sign = -1.0 if (m + n) % 2 else 1.0
            scale = nf[n] * nf[m]
            me = scale * value
            big = max(abs(t1), abs(t2), peak * inv_bgam) * scale
            if me != 0 and big > abs(me):
                worst_lost = max(worst_lost, float(gmpy2.log10(big / abs(me))))
            out[(m, n)] = sign * float(me)
        return out, worst_lost


def _nonpoly_entries(pairs, nmax: int, zeta: float, beta: float, g: float):
    """Entries with automatic precision escalation and quadrature fallback."""
    bits = _prec_bits(nmax, zeta, beta / g)
    while True:
        values, lost = _nonpoly_block(pairs, nmax, zeta, beta, g, bits)
        clean = bits / 3.33 - lost
        if clean >= _CLEAN_DIGITS:
            return values
        bits = max(2 * bits, int(3.4 * (lost + 2 * _CLEAN_DIGITS)))
        if bits > _MAX_PREC_BITS:
            return _quadrature_entries(pairs, zeta, beta, g)


def _quadrature_entries(pairs, zeta: float, beta: float, g: float):
    """Last-resort evaluation by adaptive quadrature of the defining integral."""
    from .oracle import quad_matrix_element

    A = (zeta - 1.0) ** 2 - 0.25  # channel with gamma = 0 carrying this zeta
    channel = ChannelSpec(gamma=0.0, A=A, B=beta * beta)
    return {
        (m, n): quad_matrix_element("nonpoly", m, n, channel, g) for (m, n) in pairs
    }


def me_nonpoly(m: int, n: int, channel: ChannelSpec, g: float) -> float:
    """<psi_m | r^2/(1 + g r^2) | psi_n> in the channel's basis."""
    if m < 0 or n < 0:
        raise DomainError("basis indices must be nonnegative")
    if not g > 0:
        raise DomainError(f"coupling g must be positive, got {g}")
    lo, hi = (m, n) if m <= n else (n, m)
    values = _nonpoly_entries([(lo, hi)], hi, channel.zeta, channel.beta, g)
    return values[(lo, hi)]


def me_inv_r2(m: int, n: int, channel: ChannelSpec) -> float:
    """<psi_m | r^{-2} | psi_n>; requires zeta > 1."""
    if m < 0 or n < 0:
        raise DomainError("basis indices must be nonnegative")
    zeta = channel.zeta
    if zeta <= 1.0:
        raise DomainError(
            f"r^-2 matrix elements need zeta > 1 (got zeta = {zeta}); "
            "the diagonal closed form divides by zeta - 1"
        )
    beta = channel.beta
    if m == n:
        return beta / (zeta - 1.0)
    lo, hi = (m, n) if m < n else (n, m)
    # sqrt(hi! (zeta)_lo / (lo! (zeta)_hi)) via log-gammas
    log_ratio = (
        math.lgamma(hi + 1)
        - math.lgamma(lo + 1)
        + math.lgamma(zeta + lo)
        - math.lgamma(zeta + hi)
    )
    sign = -1.0 if (m + n) % 2 else 1.0
    return sign * beta / (zeta - 1.0) * math.exp(0.5 * log_ratio)


@dataclass(frozen=True)
class RitzProblem:
    """A D x D symmetric Hamiltonian matrix in the channel's basis."""

    D: int
    channel: ChannelSpec
    potential: PotentialParams
    H: np.ndarray

    def __post_init__(self):
        if not np.all(np.isfinite(self.H)):
            raise DomainError("Hamiltonian matrix contains non-finite entries")


def nonpoly_matrix(D: int, channel: ChannelSpec, g: float) -> np.ndarray:
    """The full D x D matrix of r^2/(1+g r^2) elements."""
    if D < 1:
        raise DomainError(f"basis size must be >= 1, got {D}")
    pairs = [(m, n) for m in range(D) for n in range(m, D)]
    values = _nonpoly_entries(pairs, D - 1, channel.zeta, channel.beta, g)
    M = np.empty((D, D))
    for (m, n), v in values.items():
        M[m, n] = M[n, m] = v
    return M


def build_ritz(D: int, channel: ChannelSpec, potential: PotentialParams) -> RitzProblem:
    """Assemble H[m][n] = 2 beta (2n+zeta) delta_mn + lam*M_np[m][n] - A*M_r2[m][n].

    The r^{-2} term is skipped entirely when A = 0; otherwise zeta > 1 is
    required.  The result is symmetrized exactly.
    """
    if D < 1:
        raise DomainError(f"basis size must be >= 1, got {D}")
    beta = channel.beta
    zeta = channel.zeta
    H = potential.lam * nonpoly_matrix(D, channel, potential.g)
    H[np.diag_indices(D)] += 2.0 * beta * (2.0 * np.arange(D) + zeta)
    if channel.A != 0.0:
        inv = np.empty((D, D))
        for m in range(D):
            for n in range(m, D):
                inv[m, n] = inv[n, m] = me_inv_r2(m, n, channel)
        H -= channel.A * inv
    H = 0.5 * (H + H.T)
    return RitzProblem(D=D, channel=channel, potential=potential, H=H)
