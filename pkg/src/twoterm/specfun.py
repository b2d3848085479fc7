"""Self-contained special functions used by the closed-form machinery.

Covers Pochhammer symbols, the terminating Gauss hypergeometric polynomial,
the Euler-integral form of 2F1, generalized Laguerre polynomials, the Kummer
function 1F1, and the lower incomplete gamma function.

Conventions: all arguments are real.  Alternating sums whose terms can grow
to ~1e5 before cancelling (Laguerre with order parameters up to ~35) are
accumulated with exact summation; generalized binomials go through log-gamma
differences to avoid overflow.
"""

from __future__ import annotations

import math

from scipy.integrate import quad

from .errors import ConvergenceError, DomainError

__all__ = [
    "pochhammer",
    "hyp2f1_series_coefficients",
    "hyp2f1_terminating",
    "hyp2f1_euler",
    "laguerre_coefficients",
    "laguerre",
    "hyp1f1",
    "lower_incomplete_gamma",
]

_QUAD_ABS_TOL = 1e-12
_SERIES_TERM_CUTOFF = 1e-16
_SERIES_TERM_CAP = 10_000


def pochhammer(x: float, k: int) -> float:
    """Rising factorial (x)_k = x (x+1) ... (x+k-1); the empty product is 1."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    out = 1.0
    for i in range(k):
        out *= x + i
    return out


def hyp2f1_series_coefficients(n: int, b: float, c: float) -> list:
    """Coefficients c_k = (-n)_k (b)_k / ((c)_k k!) of the degree-n polynomial
    2F1(-n, b; c; z), for k = 0..n."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    _check_denominator(n, c)
    coeffs = [1.0]
    term = 1.0
    for k in range(n):
        term *= (-n + k) * (b + k) / ((c + k) * (k + 1))
        coeffs.append(term)
    return coeffs


def _check_denominator(n: int, c: float) -> None:
    # (c)_k vanishes inside the truncated sum iff c is one of 0, -1, .., -(n-1)
    if c <= 0.0 and c == int(c) and -c <= n - 1:
        raise DomainError(f"c = {c} gives a zero denominator within the degree-{n} sum")


def hyp2f1_terminating(n: int, b: float, c: float, z: float) -> float:
    """2F1(-n, b; c; z) summed exactly as a polynomial of degree n."""
    coeffs = hyp2f1_series_coefficients(n, b, c)
    zk = 1.0
    terms = []
    for ck in coeffs:
        terms.append(ck * zk)
        zk *= z
    return math.fsum(terms)


def hyp2f1_euler(a: float, b: float, c: float, z: float) -> float:
    """2F1(a, b; c; z) by adaptive quadrature of the Euler integral

        Gamma(c)/(Gamma(b) Gamma(c-b)) * Int_0^1 t^{b-1} (1-t)^{c-b-1} (1-t z)^{-a} dt.

    Requires c > b > 0.  For z < 1 the integrand is real for any a; at z = 1
    it stays integrable only when c - b - a > 0.  Arguments beyond that are
    rejected rather than analytically continued.
    """
    if not c > b > 0.0:
        raise DomainError(f"Euler integral needs c > b > 0, got b={b}, c={c}")
    if z > 1.0:
        raise DomainError(f"Euler integral not real-valued for z = {z} > 1")
    if z == 1.0 and not c - b - a > 0.0:
        raise DomainError("non-integrable endpoint at t = 1 for z = 1")

    log_coef = math.lgamma(c) - math.lgamma(b) - math.lgamma(c - b)

    bm1 = b - 1.0
    cbm1 = c - b - 1.0

    def integrand(t: float) -> float:
        if t <= 0.0 or t >= 1.0:
            return 0.0
        return math.exp(bm1 * math.log(t) + cbm1 * math.log1p(-t)
                        - a * math.log1p(-t * z))

    value, estimate = quad(integrand, 0.0, 1.0, epsabs=_QUAD_ABS_TOL,
                           epsrel=_QUAD_ABS_TOL, limit=200)
    if not math.isfinite(value):
        raise DomainError("Euler integral diverged")
    del estimate
    return math.exp(log_coef) * value


def laguerre_coefficients(n: int, sigma: float) -> list:
    """Coefficients d_k = (-1)^k C(n+sigma, n-k) / k! of L_n^sigma(x) = sum d_k x^k."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    if sigma <= -1.0:
        raise DomainError("sigma must exceed -1 for the gamma-ratio binomials")
    coeffs = []
    for k in range(n + 1):
        # C(n+sigma, n-k) via log-gamma; all three arguments are positive
        log_binom = (math.lgamma(n + sigma + 1.0) - math.lgamma(n - k + 1.0)
                     - math.lgamma(sigma + k + 1.0))
        coeffs.append((-1.0) ** k * math.exp(log_binom) / math.factorial(k))
    return coeffs


def laguerre(n: int, sigma: float, x: float) -> float:
    """Generalized Laguerre polynomial L_n^sigma(x)."""
    coeffs = laguerre_coefficients(n, sigma)
    xk = 1.0
    terms = []
    for dk in coeffs:
        terms.append(dk * xk)
        xk *= x
    return math.fsum(terms)


def hyp1f1(a: float, b: float, z: float) -> float:
    """Kummer function 1F1(a; b; z) by direct series summation."""
    if b <= 0.0 and b == int(b):
        raise DomainError(f"b = {b} is a non-positive integer")
    total = 1.0
    term = 1.0
    for k in range(_SERIES_TERM_CAP):
        term *= (a + k) * z / ((b + k) * (k + 1))
        total += term
        if abs(term) <= _SERIES_TERM_CUTOFF * abs(total):
            return total
    raise ConvergenceError(
        f"1F1({a}; {b}; {z}) did not converge within {_SERIES_TERM_CAP} terms"
    )


def lower_incomplete_gamma(a: float, x: float) -> float:
    """gamma(a, x) = Int_0^x t^{a-1} e^{-t} dt = x^a e^{-x} 1F1(1; 1+a; x) / a."""
    if a <= 0.0:
        raise DomainError("a must be positive")
    if x < 0.0:
        raise DomainError("x must be nonnegative")
    if x == 0.0:
        return 0.0
    return math.exp(a * math.log(x) - x) * hyp1f1(1.0, 1.0 + a, x) / a
