"""Analytic radial wave functions, normalization, and node counting.

Two families are covered:

* two-term: R(r) = N z^{A1} (1-z)^{A2} 2F1(-n, b; c; z), z = q e^{-beta r},
  living on r > r_s (z in (0, 1)).
* generalized Morse: R(r) = N e^{-B1 z / 2} z^{B2/2} L_n^{B2}(B1 z),
  z = e^{-beta r}.  With the depth mapping used here the well minimum sits
  at r = 0 and the closed form is the full-line oscillator solution, so R
  is evaluated for any real r and its n nodes may straddle r = 0.

Two normalization conventions coexist.  The physical one enforces
Int |R(r)|^2 dr = 1 over r in (r_s, infinity) (r in (0, infinity) for the
Morse family).  The tabulated-convention one enforces the dimensionless
integral in the variable xi = z/q over (0, 1) instead, which is only
real-valued for q <= 1; q > 1 callers are directed to normalize_physical.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .errors import DomainError, UnsupportedConventionError
from .potentials import TwoTermPotential
from .specfun import (
    hyp2f1_euler,
    hyp2f1_series_coefficients,
    laguerre_coefficients,
    lower_incomplete_gamma,
)
from .spectra import (
    MorseParams,
    WaveParams,
    energy_morse_reduced,
    energy_two_term,
    exactly_solved_potential,
    morse_params,
    wave_params,
)
from .units import ReducedHamiltonian

__all__ = [
    "BoundState",
    "two_term_state",
    "morse_state",
    "radial_two_term",
    "radial_morse",
    "radial",
    "sample_radial",
    "normalize_physical",
    "normalize_paper",
    "count_nodes",
    "node_grid",
]

_NODE_GRID_POINTS = 10_000
_PHYSICAL_QUAD_TOL = 1e-10


@dataclass(frozen=True)
class BoundState:
    """A bound state with its analytic wave-function parameters.

    ``potential`` is the two-term potential this state diagonalizes exactly
    (for q != 1 that is the companion potential with core strength q^2 V1;
    see spectra).  ``norm`` multiplies the bare shape function.
    """

    kind: str  # "two-term" | "morse"
    n: int
    l: int
    energy: float
    params: object  # WaveParams | MorseParams
    potential: TwoTermPotential
    norm: float = 1.0
    norm_convention: str = "physical"


def two_term_state(n: int, l: int, h: ReducedHamiltonian, beta: float,
                   convention: str = "physical") -> BoundState:
    """Build and normalize a two-term bound state."""
    energy = energy_two_term(n, l, h)
    params = wave_params(n, l, h)
    state = BoundState(kind="two-term", n=n, l=l, energy=energy, params=params,
                       potential=exactly_solved_potential(h, beta),
                       norm=1.0, norm_convention=convention)
    norm = normalize_physical(state) if convention == "physical" else normalize_paper(state)
    return dataclasses.replace(state, norm=norm)


def morse_state(n: int, v0: float, v1: float, e_scale: float, beta: float,
                convention: str = "physical") -> BoundState:
    """Build and normalize a generalized Morse bound state."""
    energy = energy_morse_reduced(n, v0, v1, e_scale)
    params = morse_params(n, v0, v1, e_scale)
    pot = TwoTermPotential(V0=v0 * e_scale, V1=v1 * e_scale, beta=beta, q=0.0)
    state = BoundState(kind="morse", n=n, l=0, energy=energy, params=params,
                       potential=pot, norm=1.0, norm_convention=convention)
    norm = normalize_physical(state) if convention == "physical" else normalize_paper(state)
    return dataclasses.replace(state, norm=norm)


def _two_term_shape(state: BoundState, z):
    """Bare z-space amplitude z^{A1} (1-z)^{A2} 2F1(-n, b; c; z), without norm."""
    p: WaveParams = state.params
    coeffs = hyp2f1_series_coefficients(state.n, p.b, p.c)
    z = np.asarray(z, dtype=float)
    poly = np.zeros_like(z)
    zk = np.ones_like(z)
    for ck in coeffs:
        poly += ck * zk
        zk = zk * z
    return np.power(z, p.A1) * np.power(1.0 - z, p.A2) * poly


def _morse_shape(state: BoundState, z):
    p: MorseParams = state.params
    coeffs = laguerre_coefficients(state.n, p.B2)
    z = np.asarray(z, dtype=float)
    y = p.B1 * z
    poly = np.zeros_like(z)
    yk = np.ones_like(z)
    for dk in coeffs:
        poly += dk * yk
        yk = yk * y
    return np.exp(-0.5 * p.B1 * z) * np.power(z, 0.5 * p.B2) * poly


def radial_two_term(state: BoundState, r: float) -> float:
    """Normalized amplitude at radius r (r must lie above the inner wall)."""
    if state.kind != "two-term":
        raise DomainError("state is not of the two-term kind")
    pot = state.potential
    if r <= pot.inner_boundary():
        raise DomainError(f"r = {r} is outside the physical domain")
    z = pot.q * math.exp(-pot.beta * r)
    return state.norm * float(_two_term_shape(state, z))


def radial_morse(state: BoundState, r: float) -> float:
    """Normalized amplitude at any real r (full-line Morse oscillator)."""
    if state.kind != "morse":
        raise DomainError("state is not of the morse kind")
    z = math.exp(-state.potential.beta * r)
    return state.norm * float(_morse_shape(state, z))


def radial(state: BoundState, r: float) -> float:
    return radial_two_term(state, r) if state.kind == "two-term" else radial_morse(state, r)


def sample_radial(state: BoundState, r) -> np.ndarray:
    """Vectorized normalized amplitude over an array of radii."""
    r = np.asarray(r, dtype=float)
    z = state.potential.q * np.exp(-state.potential.beta * r) \
        if state.kind == "two-term" else np.exp(-state.potential.beta * r)
    shape = _two_term_shape(state, z) if state.kind == "two-term" \
        else _morse_shape(state, z)
    return state.norm * shape


def normalize_physical(state: BoundState) -> float:
    """Constant N = 1/sqrt(Int R^2 dr) for the state's current amplitude,
    the integral running over the physical radial domain.

    Uses the substitution z = q e^{-beta r} (dr = -dz/(beta z)), so the
    integrand is |R(z)|^2 / (beta z) on z in (0, z_hi), z_hi = min(q, 1);
    the Morse family integrates z in (0, 1), i.e. r in (0, infinity).
    """
    pot = state.potential
    beta = pot.beta
    if state.kind == "two-term":
        z_hi = min(pot.q, 1.0)
        shape = lambda z: float(_two_term_shape(state, z))
    else:
        z_hi = 1.0
        shape = lambda z: float(_morse_shape(state, z))

    def integrand(z: float) -> float:
        if z <= 0.0:
            return 0.0
        amp = state.norm * shape(z)
        return amp * amp / (beta * z)

    total, err = quad(integrand, 0.0, z_hi, epsabs=_PHYSICAL_QUAD_TOL,
                      epsrel=1e-12, limit=300)
    if not (math.isfinite(total) and total > 0.0):
        raise DomainError("normalization integral is not finite and positive")
    del err
    return 1.0 / math.sqrt(total)


def normalize_paper(state: BoundState) -> float:
    """Normalization constant in the tabulated (dimensionless-integral) convention.

    two-term (q <= 1 only):
        N^-2 = q^{1+2 A1} sum_{k,l} c_k c_l q^{k+l} I_{k+l},
        I_j = Int_0^1 xi^{2 A1 + j} (1 - q xi)^{2 A2} dxi,
    with c_k the series coefficients of the terminating hypergeometric
    factor.  I_j is evaluated through the Euler-integral 2F1 (Beta form)
    and falls back to direct quadrature if that form's preconditions fail.

    morse:
        N^-2 = sum_{k,l} d_k d_l B1^{-(1+B2+k+l)} gamma(1+B2+k+l, B1),
    with d_k the Laguerre coefficients times B1^k (measure dz on (0, 1)).
    """
    if state.kind == "two-term":
        q = state.potential.q
        if q > 1.0:
            raise UnsupportedConventionError(
                "the dimensionless-integral convention is undefined for q > 1 "
                "(the integrand's (1 - q xi)^{2 A2} factor leaves the real "
                "axis); use normalize_physical instead"
            )
        p: WaveParams = state.params
        c = hyp2f1_series_coefficients(state.n, p.b, p.c)
        inv_n2_terms = []
        for k in range(state.n + 1):
            for m in range(state.n + 1):
                j = k + m
                inv_n2_terms.append(c[k] * c[m] * q**j * _xi_moment(p, q, j))
        inv_n2 = q ** (1.0 + 2.0 * p.A1) * math.fsum(inv_n2_terms)
    else:
        p: MorseParams = state.params
        d = laguerre_coefficients(state.n, p.B2)
        dk = [d[k] * p.B1**k for k in range(state.n + 1)]
        inv_n2_terms = []
        for k in range(state.n + 1):
            for m in range(state.n + 1):
                a = 1.0 + p.B2 + k + m
                inv_n2_terms.append(
                    dk[k] * dk[m] * p.B1 ** (-a) * lower_incomplete_gamma(a, p.B1)
                )
        inv_n2 = math.fsum(inv_n2_terms)
    if not (math.isfinite(inv_n2) and inv_n2 > 0.0):
        raise DomainError("normalization sum is not finite and positive")
    return 1.0 / math.sqrt(inv_n2)


def _xi_moment(p: WaveParams, q: float, j: int) -> float:
    """I_j = Int_0^1 xi^{2 A1 + j} (1 - q xi)^{2 A2} dxi."""
    b = 2.0 * p.A1 + j + 1.0
    try:
        return hyp2f1_euler(-2.0 * p.A2, b, b + 1.0, q) / b
    except DomainError:
        f = lambda xi: xi ** (2.0 * p.A1 + j) * (1.0 - q * xi) ** (2.0 * p.A2)
        value, _ = quad(f, 0.0, 1.0, epsabs=1e-12, epsrel=1e-12, limit=200)
        return value


def node_grid(state: BoundState) -> np.ndarray:
    """Sampling grid for node counting.

    two-term: geometric offsets from the inner wall, spanning 1e-6/beta to
    50/beta, which resolves both the wall and the exponential tail.
    morse: uniform in r from the outermost Laguerre zero's radius (which may
    be negative) out to 50/beta; uniform r is geometric in z = e^{-beta r}.
    """
    beta = state.potential.beta
    if state.kind == "two-term":
        edge = state.potential.inner_boundary()
        offsets = np.geomspace(1e-6 / beta, 50.0 / beta, _NODE_GRID_POINTS)
        return edge + offsets
    p: MorseParams = state.params
    z_top = (4.0 * state.n + 2.0 * p.B2 + 4.0) / p.B1
    r_lo = -math.log(z_top) / beta
    return np.linspace(r_lo, 50.0 / beta, _NODE_GRID_POINTS)


def count_nodes(state: BoundState) -> int:
    """Strict sign changes of R over the node grid; equals n for a true state."""
    values = sample_radial(state, node_grid(state))
    count = 0
    prev = 0.0
    for v in values:
        if v != 0.0:
            if prev != 0.0 and (v < 0.0) != (prev < 0.0):
                count += 1
            prev = v
    return count
