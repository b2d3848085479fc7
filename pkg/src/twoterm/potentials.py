"""The two-term diatomic potential, its named special cases, and centrifugal terms.

The general form is

    V(r) = -V0 e^{-beta r} / (1 - q e^{-beta r}) + V1 e^{-2 beta r} / (1 - q e^{-beta r})^2,

equivalently -V0/w + V1/w^2 with w = e^{beta r} - q.  For q >= 1 the
denominator vanishes at r_s = ln(q)/beta; with V1 > 0 the second term is an
infinite repulsive wall there and the physical domain is r > r_s.  For q < 1
the domain is r > 0.  q = 0 is the generalized Morse potential.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .units import MoleculeParams

__all__ = [
    "TwoTermPotential",
    "ManningRosenPotential",
    "HulthenPotential",
    "CoulombPotential",
    "GeneralizedMorsePotential",
    "from_molecule",
    "centrifugal_exact",
    "centrifugal_greene_aldrich",
    "potential_from_dict",
]


@dataclass(frozen=True)
class TwoTermPotential:
    V0: float
    V1: float
    beta: float
    q: float

    def __post_init__(self):
        if self.beta <= 0.0:
            raise DomainError("beta must be positive")
        if self.q < 0.0:
            raise DomainError("q must be nonnegative")

    def singular_radius(self) -> float | None:
        """Radius of the denominator zero: ln(q)/beta for q >= 1, else None.

        For q = 1 the singularity sits at the origin, which is already the
        natural boundary of the radial problem.
        """
        if self.q > 1.0:
            return math.log(self.q) / self.beta
        if self.q == 1.0:
            return 0.0
        return None

    def inner_boundary(self) -> float:
        """Lower end of the physical domain (0 when there is no singularity)."""
        rs = self.singular_radius()
        return rs if rs is not None else 0.0

    def __call__(self, r: float) -> float:
        return self.eval(r)

    def eval(self, r: float) -> float:
        """Potential value at radius r (energy units of V0/V1)."""
        rs = self.inner_boundary()
        if r <= rs:
            if self.singular_radius() is not None:
                raise DomainError(
                    f"r = {r} is at or below the singular radius r_s = {rs}"
                )
            raise DomainError(f"r = {r} is outside the physical domain r > 0")
        # e^{beta r} - q, written to stay accurate near the q = 1 singularity
        w = math.expm1(self.beta * r) + (1.0 - self.q)
        return -self.V0 / w + self.V1 / (w * w)


def from_molecule(mol: MoleculeParams, q: float) -> TwoTermPotential:
    """Depth parameterization V1 = D0 (e^mu - q), V0 = 2 V1, beta = mu/r0."""
    if q < 0.0:
        raise DomainError("q must be nonnegative")
    expmu = math.exp(mol.mu)
    if expmu <= q:
        raise DomainError(
            f"{mol.name}: e^mu = {expmu:.6f} <= q = {q}; depth mapping undefined"
        )
    V1 = mol.D0 * (expmu - q)
    return TwoTermPotential(V0=2.0 * V1, V1=V1, beta=mol.mu / mol.r0, q=q)


def centrifugal_exact(l: int, r: float) -> float:
    """l(l+1)/r^2, in inverse length squared."""
    if r <= 0.0:
        raise DomainError("r must be positive")
    return l * (l + 1) / (r * r)


def centrifugal_greene_aldrich(l: int, beta: float, q: float, r: float) -> float:
    """Exponential-family replacement for the centrifugal term:

        l(l+1) beta^2 e^{beta r} / (e^{beta r} - q)^2.

    Agrees with l(l+1)/r^2 to O((beta r)^0) for q = 1 and small beta r.
    """
    rs = math.log(q) / beta if q >= 1.0 else None
    if rs is not None and r <= rs:
        raise DomainError(f"r = {r} is at or below the singular radius r_s = {rs}")
    if rs is None and r <= 0.0:
        raise DomainError("r must be positive")
    w = math.expm1(beta * r) + (1.0 - q)
    return l * (l + 1) * beta**2 * math.exp(beta * r) / (w * w)


@dataclass(frozen=True)
class ManningRosenPotential:
    """-(A/2b^2)/(e^{r/b}-1) + (alpha(alpha-1)/2b^2)/(e^{r/b}-1)^2, atomic units."""

    A: float
    b: float
    alpha: float

    def __post_init__(self):
        if self.b <= 0.0:
            raise DomainError("b must be positive")

    def to_two_term(self) -> TwoTermPotential:
        bb = 2.0 * self.b**2
        return TwoTermPotential(V0=self.A / bb, V1=self.alpha * (self.alpha - 1.0) / bb,
                                beta=1.0 / self.b, q=1.0)

    def eval(self, r: float) -> float:
        return self.to_two_term().eval(r)


@dataclass(frozen=True)
class HulthenPotential:
    """-V0 e^{-beta r} / (1 - e^{-beta r}), the q = 1, V1 = 0 member."""

    V0: float
    beta: float

    def to_two_term(self) -> TwoTermPotential:
        return TwoTermPotential(V0=self.V0, V1=0.0, beta=self.beta, q=1.0)

    def eval(self, r: float) -> float:
        return self.to_two_term().eval(r)


@dataclass(frozen=True)
class CoulombPotential:
    """-Z/r in atomic units, represented by its screened (Hulthen) limit.

    The screening wavenumber defaults to a value small enough that the
    screened form is indistinguishable from -Z/r over any radius of
    practical interest; the closed-form Coulomb spectrum lives in spectra.
    """

    Z: float
    screening_beta: float = 1e-6

    def __post_init__(self):
        if self.Z <= 0.0:
            raise DomainError("Z must be positive")
        if self.screening_beta <= 0.0:
            raise DomainError("screening_beta must be positive")

    def to_two_term(self) -> TwoTermPotential:
        return TwoTermPotential(V0=self.Z * self.screening_beta, V1=0.0,
                                beta=self.screening_beta, q=1.0)

    def eval(self, r: float) -> float:
        return self.to_two_term().eval(r)


@dataclass(frozen=True)
class GeneralizedMorsePotential:
    """V1 e^{-2 beta r} - V0 e^{-beta r}, the q = 0 member."""

    V0: float
    V1: float
    beta: float

    def to_two_term(self) -> TwoTermPotential:
        return TwoTermPotential(V0=self.V0, V1=self.V1, beta=self.beta, q=0.0)

    def eval(self, r: float) -> float:
        return self.to_two_term().eval(r)


def potential_from_dict(spec: dict):
    """Build a potential from a tagged JSON object.

    {"kind": "two-term", "V0": .., "V1": .., "beta": .., "q": ..}
    {"kind": "manning-rosen", "A": .., "b": .., "alpha": ..}
    {"kind": "hulthen", "V0": .., "beta": ..}
    {"kind": "coulomb", "Z": .., "screening_beta": optional}
    {"kind": "morse", "V0": .., "V1": .., "beta": ..}
    """
    kind = spec.get("kind")
    try:
        if kind == "two-term":
            return TwoTermPotential(V0=spec["V0"], V1=spec["V1"],
                                    beta=spec["beta"], q=spec["q"])
        if kind == "manning-rosen":
            return ManningRosenPotential(A=spec["A"], b=spec["b"], alpha=spec["alpha"])
        if kind == "hulthen":
            return HulthenPotential(V0=spec["V0"], beta=spec["beta"])
        if kind == "coulomb":
            return CoulombPotential(Z=spec["Z"],
                                    screening_beta=spec.get("screening_beta", 1e-6))
        if kind == "morse":
            return GeneralizedMorsePotential(V0=spec["V0"], V1=spec["V1"],
                                             beta=spec["beta"])
    except KeyError as exc:
        raise DomainError(f"missing potential parameter: {exc}") from exc
    raise DomainError(f"unknown potential kind: {kind!r}")
