"""Closed-form bound-state energies of the two-term family.

The general spectrum, with s = sqrt(1/4 + l(l+1)/q + v1), is

    E(n, l) = -e_scale * [ (n^2 + (2n+1)(s + 1/2) + (l(l+1) - v0)/q)
                           / (2n + 1 + 2 s) ]^2,

valid for q > 0 and for every n that keeps the bracket negative (that sign
condition is exactly the requirement of a positive decay exponent A1).
Setting q = 1 recovers the Manning-Rosen and Hulthen forms; the q = 0
(generalized Morse) spectrum is a separate Laguerre-based formula.

One subtlety is resolved here once and for all.  Writing the radial problem
in the variable z = q e^{-beta r} turns the potential's core term into
v1 z^2 / (q^2 (1-z)^2), so the hypergeometric equation actually being
diagonalized carries v1 without an internal 1/q^2 only if the core coupling
of the radial potential is q^2 V1.  The formula above (and the wave
functions built from it) therefore corresponds exactly to the two-term
potential with core strength q^2 V1; for q = 1 that is the input potential
itself.  ``exactly_solved_potential`` returns that companion potential so
the integrator can cross-check the closed forms as a strict identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, NoBoundStateError
from .potentials import TwoTermPotential
from .units import PhysicalConstants, ReducedHamiltonian, reduce_potential

__all__ = [
    "WaveParams",
    "MorseParams",
    "wave_params",
    "morse_params",
    "energy_two_term",
    "count_bound_states",
    "energy_manning_rosen",
    "energy_hulthen",
    "energy_coulomb",
    "energy_morse",
    "energy_morse_reduced",
    "count_bound_states_morse",
    "exactly_solved_potential",
    "manning_rosen_reduced",
    "hulthen_reduced",
]


@dataclass(frozen=True)
class WaveParams:
    """Exponents and hypergeometric parameters of a two-term bound state.

    A1 is the decay exponent (A1^2 = -E/e_scale), A2 the boundary exponent
    taken as the root >= 1 of A2(A2-1) = l(l+1)/q + v1, and (a, b, c) are
    the parameters of the terminating hypergeometric factor.
    """

    A1: float
    A2: float
    A2prime: float
    a: float
    b: float
    c: float


@dataclass(frozen=True)
class MorseParams:
    """Laguerre parameters of a generalized Morse bound state."""

    B1: float
    B2: float

    @property
    def sigma_bar(self) -> float:
        return self.B2


def _a2prime(l: int, h: ReducedHamiltonian) -> float:
    if h.q <= 0.0:
        raise DomainError("q must be positive for the two-term closed form; "
                          "the q = 0 member is energy_morse")
    disc = 0.25 + l * (l + 1) / h.q + h.v1
    if disc < 0.0:
        raise DomainError(
            f"1/4 + l(l+1)/q + v1 = {disc} < 0: boundary exponent is complex"
        )
    return math.sqrt(disc)


def _a1(n: int, l: int, h: ReducedHamiltonian) -> float:
    s = _a2prime(l, h)
    bracket = n * n + (2 * n + 1) * (s + 0.5) + (l * (l + 1) - h.v0) / h.q
    return -bracket / (2 * n + 1 + 2 * s)


def energy_two_term(n: int, l: int, h: ReducedHamiltonian) -> float:
    """General closed-form energy; always negative for an admitted (n, l)."""
    if n < 0 or l < 0:
        raise DomainError("quantum numbers must be nonnegative")
    a1 = _a1(n, l, h)
    if a1 <= 0.0:
        raise NoBoundStateError(
            f"(n={n}, l={l}) is not bound: only {count_bound_states(l, h)} "
            f"state(s) exist for this l"
        )
    return -h.e_scale * a1 * a1


def count_bound_states(l: int, h: ReducedHamiltonian) -> int:
    """Number of n >= 0 with n^2 + (2n+1)(s+1/2) < (v0 - l(l+1))/q."""
    if l < 0:
        raise DomainError("l must be nonnegative")
    s = _a2prime(l, h)
    limit = (h.v0 - l * (l + 1)) / h.q
    n = 0
    while n * n + (2 * n + 1) * (s + 0.5) < limit:
        n += 1
    return n


def wave_params(n: int, l: int, h: ReducedHamiltonian) -> WaveParams:
    """Wave-function parameters for an admitted state (raises if unbound)."""
    a1 = _a1(n, l, h)
    if a1 <= 0.0:
        raise NoBoundStateError(f"(n={n}, l={l}) is not bound")
    s = _a2prime(l, h)
    a2 = s + 0.5
    return WaveParams(A1=a1, A2=a2, A2prime=s,
                      a=float(-n), b=n + 2.0 * a1 + 2.0 * a2, c=1.0 + 2.0 * a1)


def exactly_solved_potential(h: ReducedHamiltonian, beta: float) -> TwoTermPotential:
    """Two-term potential whose radial problem the closed form solves exactly.

    Its core (second) term carries strength q^2 * v1 * e_scale; see the
    module docstring.  Identical to the nominal potential at q = 1.
    """
    V0, V1 = h.potential_couplings()
    return TwoTermPotential(V0=V0, V1=h.q * h.q * V1, beta=beta, q=h.q)


def manning_rosen_reduced(A: float, b: float, alpha: float) -> ReducedHamiltonian:
    """Reduced couplings of the Manning-Rosen potential (atomic units)."""
    if b <= 0.0:
        raise DomainError("b must be positive")
    bb = 2.0 * b * b
    return reduce_potential(A / bb, alpha * (alpha - 1.0) / bb, 1.0 / b, 1.0, 1.0)


def hulthen_reduced(v0: float, e_scale: float) -> ReducedHamiltonian:
    return ReducedHamiltonian(v0=v0, v1=0.0, q=1.0, e_scale=e_scale)


def energy_manning_rosen(n: int, l: int, A: float, b: float, alpha: float) -> float:
    """Manning-Rosen eigenvalue in atomic units,

        E = -(1/2b^2) [ (n^2 + (2n+1)(1/2 + s) + l(l+1) - A) / (2n+1+2s) ]^2

    with s = sqrt(1/4 + l(l+1) + alpha(alpha-1)).
    """
    disc = 0.25 + l * (l + 1) + alpha * (alpha - 1.0)
    if disc < 0.0:
        raise DomainError("1/4 + l(l+1) + alpha(alpha-1) < 0")
    s = math.sqrt(disc)
    num = n * n + (2 * n + 1) * (0.5 + s) + l * (l + 1) - A
    if num >= 0.0:
        raise NoBoundStateError(f"(n={n}, l={l}) is not bound for A={A}, b={b}")
    return -(num / (2 * n + 1 + 2 * s)) ** 2 / (2.0 * b * b)


def energy_hulthen(n: int, l: int, v0: float, e_scale: float) -> float:
    """Hulthen eigenvalue, E = -e_scale [((n+l)(n+l+2) + 1 - v0) / (2(n+1+l))]^2."""
    N = n + l + 1
    if not N * N < v0:
        raise NoBoundStateError(f"(n+l+1)^2 = {N * N} >= v0 = {v0}: not bound")
    num = (n + l) * (n + l + 2) + 1 - v0
    return -e_scale * (num / (2.0 * N)) ** 2


def energy_coulomb(n: int, l: int, Z: float) -> float:
    """Coulomb spectrum -Z^2 / (2 (n+l+1)^2) in atomic units."""
    if Z <= 0.0:
        raise DomainError("Z must be positive")
    if n < 0 or l < 0:
        raise DomainError("quantum numbers must be nonnegative")
    N = n + l + 1
    return -Z * Z / (2.0 * N * N)


def energy_morse_reduced(n: int, v0: float, v1: float, e_scale: float) -> float:
    """Generalized Morse eigenvalue from reduced couplings:

        E = -(e_scale/4) (2n + 1 - v0/sqrt(v1))^2.
    """
    if v1 <= 0.0:
        raise DomainError("v1 must be positive for the Morse closed form")
    width = v0 / math.sqrt(v1)
    if not 2 * n + 1 < width:
        raise NoBoundStateError(
            f"2n+1 = {2 * n + 1} >= v0/sqrt(v1) = {width:.6f}: not bound"
        )
    return -0.25 * e_scale * (2 * n + 1 - width) ** 2


def count_bound_states_morse(v0: float, v1: float) -> int:
    """Number of n with 2n + 1 < v0/sqrt(v1)."""
    if v1 <= 0.0:
        raise DomainError("v1 must be positive")
    width = v0 / math.sqrt(v1)
    if width <= 1.0:
        return 0
    return int(math.ceil((width - 1.0) / 2.0 - 1e-12))


def energy_morse(n: int, V0: float, V1: float, beta: float, m: float,
                 consts: PhysicalConstants | None = None) -> float:
    """Generalized Morse eigenvalue from raw strengths,

        E = -(beta^2 hbar^2 / 8m) [2n + 1 - (V0/(beta hbar)) sqrt(2m/V1)]^2.

    Unit regime follows reduce_potential: atomic when consts is None.
    """
    h = reduce_potential(V0, V1, beta, 0.0, m, consts)
    return energy_morse_reduced(n, h.v0, h.v1, h.e_scale)


def morse_params(n: int, v0: float, v1: float, e_scale: float) -> MorseParams:
    """Laguerre parameters B1 = sqrt(4 v1), B2 = 2 sqrt(-E/e_scale) of state n."""
    energy = energy_morse_reduced(n, v0, v1, e_scale)
    return MorseParams(B1=2.0 * math.sqrt(v1), B2=2.0 * math.sqrt(-energy / e_scale))
