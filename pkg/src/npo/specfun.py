"""Scalar special functions with explicit precision contracts.

Everything here is needed by the closed-form Hamiltonian matrix elements:
the shifted factorial (a)_n, log-gamma, the upper incomplete gamma function
Gamma(a, z) for arbitrary real order (including a <= 0), and the terminating
confluent hypergeometric sum 1F1(-n; b; z).

Gamma(a, z) for a > 0 uses the classical series / continued-fraction split at
z = a + 1.  For a <= 0 the order is lifted by the smallest integer n with
a + n in (0, 1] and unwound with the downward form of the recurrence
Gamma(a+1, z) = a Gamma(a, z) + z^a e^{-z}; when a is a nonpositive integer
the shifted factorials in that unwinding vanish, so the exponential-integral
family is used instead via Gamma(-m, z) = z^{-m} E_{m+1}(z).

All internal accumulation runs on gmpy2 arbitrary-precision floats (the
"extended real" carrier).  Public functions return ordinary doubles; the
``*_ext`` variants return gmpy2.mpfr at the caller's active context precision
and exist for the matrix-element code, whose alternating sums need far more
than double precision.
"""

from __future__ import annotations

import math

import gmpy2
from gmpy2 import mpfr

from .errors import DomainError

#: Minimum number of significant decimal digits carried while accumulating
#: alternating extended-precision sums.
EXTENDED_MIN_DIGITS = 30

#: Bits corresponding to EXTENDED_MIN_DIGITS, with headroom.
EXTENDED_MIN_BITS = 128


def extended_context(bits: int = EXTENDED_MIN_BITS) -> "gmpy2.context":
    """A gmpy2 context manager carrying at least the requested precision."""
    return gmpy2.context(precision=max(bits, EXTENDED_MIN_BITS))


def pochhammer(a, n: int):
    """Shifted factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.

    Works for any numeric type supporting multiplication (float, mpfr,
    Fraction), so exact-arithmetic identities can be tested directly.
    """
    if n < 0:
        raise DomainError("pochhammer order must be a nonnegative integer")
    result = a - a + 1  # multiplicative identity in the input's type
    for k in range(n):
        result = result * (a + k)
    return result


def ln_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0."""
    if x <= 0:
        raise DomainError(f"ln_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def hyp1f1_terminating(n: int, b, z):
    """Terminating confluent hypergeometric sum
    1F1(-n; b; z) = sum_{k=0}^{n} (-n)_k z^k / ((b)_k k!).

    Exact termination at k = n; generic over float/mpfr arguments.
    """
    if n < 0:
        raise DomainError("polynomial degree n must be a nonnegative integer")
    term = z - z + 1  # 1 in the arithmetic of z
    total = term
    for k in range(n):
        # ratio of consecutive terms: (-n+k) z / ((b+k)(k+1))
        term = term * (-(n - k)) * z / ((b + k) * (k + 1))
        total = total + term
    return total


# ---------------------------------------------------------------------------
# upper incomplete gamma
# ---------------------------------------------------------------------------

def _eps() -> mpfr:
    return mpfr(2) ** (-gmpy2.get_context().precision + 4)


def _gamma_upper_positive(a: mpfr, z: mpfr) -> mpfr:
    """Gamma(a, z) for a > 0, z > 0 at the active context precision."""
    one = mpfr(1)
    eps = _eps()
    if z < a + 1:
        # lower series gamma(a, z) = z^a e^{-z} sum_k z^k / (a (a+1)...(a+k))
        term = one / a
        total = term
        k = 1
        while abs(term) > eps * abs(total):
            term *= z / (a + k)
            total += term
            k += 1
            if k > 100000:
                raise ArithmeticError("incomplete-gamma series did not converge")
        return gmpy2.gamma(a) - gmpy2.exp(a * gmpy2.log(z) - z) * total
    return gmpy2.exp(a * gmpy2.log(z) - z) * _lentz_cf(a, z)


def _lentz_cf(a: mpfr, z: mpfr) -> mpfr:
    """Modified-Lentz continued fraction for e^z z^{-a} Gamma(a, z)."""
    one = mpfr(1)
    eps = _eps()
    tiny = mpfr(2) ** (-4 * gmpy2.get_context().precision)
    b = z + 1 - a
    c = one / tiny
    d = one / b
    h = d
    for k in range(1, 100000):
        an = -k * (k - a)
        b += 2
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = one / d
        delta = d * c
        h *= delta
        if abs(delta - one) < eps:
            return h
    raise ArithmeticError("incomplete-gamma continued fraction did not converge")


def _expint_e1(z: mpfr) -> mpfr:
    """E_1(z) = Gamma(0, z) for z > 0 at the active context precision."""
    eps = _eps()
    if z > 6:
        return gmpy2.exp(-z) * _lentz_cf(mpfr(0), z)
    total = mpfr(0)
    term = mpfr(1)
    k = 1
    while True:
        term *= -z / k
        add = -term / k
        total += add
        if abs(add) < eps * (abs(total) + 1):
            break
        k += 1
    return total - gmpy2.const_euler() - gmpy2.log(z)


def gamma_upper_ext(a, z) -> mpfr:
    """Gamma(a, z) = int_z^inf t^{a-1} e^{-t} dt for any real a and z > 0,
    evaluated at the caller's active gmpy2 context precision.
    """
    a = mpfr(a)
    z = mpfr(z)
    if z <= 0:
        raise DomainError(f"gamma_upper requires z > 0, got {float(z)}")
    if a > 0:
        return _gamma_upper_positive(a, z)
    if a == gmpy2.rint(a):
        # nonpositive integer order: seed with E_1 and recurse downward
        m = int(-a)
        g = _expint_e1(z)
        ez = gmpy2.exp(-z)
        for j in range(1, m + 1):
            g = (g - z ** mpfr(-j) * ez) / mpfr(-j)
        return g
    # lift to a + n in (0, 1], then unwind the recurrence downward
    n = int(math.ceil(-float(a)))
    if a + n <= 0:
        n += 1
    g = _gamma_upper_positive(a + n, z)
    ez = gmpy2.exp(-z)
    for j in range(n - 1, -1, -1):
        aj = a + j
        g = (g - gmpy2.exp(aj * gmpy2.log(z)) * ez) / aj
    return g


def gamma_upper(a: float, z: float) -> float:
    """Gamma(a, z) as a double; relative error well below 1e-12 on the
    working box a in [-50, 200], z in (0, 700]."""
    with extended_context(160):
        return float(gamma_upper_ext(a, z))
