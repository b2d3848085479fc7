"""Physical constants, molecule parameters, and reduction to dimensionless couplings.

Two unit regimes are supported:

* molecular: energies in eV, lengths in Angstrom, masses in amu.  The
  combination 2m/hbar^2 is formed from hbar*c and the amu rest energy.
* atomic: hbar = 1 and the mass is given in electron masses, so
  2m/hbar^2 = 2m.  This is the regime of the Manning-Rosen, Hulthen and
  Coulomb special cases.

A reduced Hamiltonian carries only the dimensionless couplings

    v0 = 2 m V0 / (beta^2 hbar^2),   v1 = 2 m V1 / (beta^2 hbar^2),

the shape parameter q, and the energy prefactor e_scale = beta^2 hbar^2 / 2m.
For the molecule mapping beta = mu/r0 this gives e_scale = mu^2 E0 / 2 with
E0 = hbar^2/(m r0^2).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "PhysicalConstants",
    "CODATA",
    "MoleculeParams",
    "BUILTIN_MOLECULES",
    "ReducedHamiltonian",
    "derive_E0",
    "reduce_potential",
    "reduced_from_molecule",
    "two_m_over_hbar2_molecular",
    "load_molecules",
]


@dataclass(frozen=True)
class PhysicalConstants:
    """hbar*c in eV*Angstrom and the amu rest energy in eV."""

    hbar_c: float = 1973.269804
    amu_to_energy: float = 9.3149410242e8

    def __post_init__(self):
        if not (1973.2 <= self.hbar_c <= 1973.4):
            raise DomainError(f"hbar_c = {self.hbar_c} outside plausible range")
        if not (9.314e8 <= self.amu_to_energy <= 9.316e8):
            raise DomainError(f"amu_to_energy = {self.amu_to_energy} outside plausible range")


CODATA = PhysicalConstants()


def derive_E0(m: float, r0: float, consts: PhysicalConstants = CODATA) -> float:
    """Characteristic energy hbar^2/(m r0^2) in eV, with m in amu and r0 in Angstrom."""
    if m <= 0.0 or r0 <= 0.0:
        raise DomainError(f"m and r0 must be positive, got m={m}, r0={r0}")
    return consts.hbar_c**2 / (m * consts.amu_to_energy * r0**2)


@dataclass(frozen=True)
class MoleculeParams:
    """Empirical constants of one diatomic species.

    E0 is stored explicitly so that tabulated reference energies can be
    reproduced digit for digit; it must agree with hbar^2/(m r0^2) derived
    from the physical constants to 1e-4 relative.
    """

    name: str
    D0: float  # potential depth, eV
    r0: float  # equilibrium separation, Angstrom
    m: float   # reduced mass, amu
    mu: float  # dimensionless shape exponent
    E0: float  # hbar^2/(m r0^2), eV

    def __post_init__(self):
        for field in ("D0", "r0", "m", "mu", "E0"):
            if getattr(self, field) <= 0.0:
                raise DomainError(f"{self.name}: {field} must be positive")
        derived = derive_E0(self.m, self.r0)
        if abs(derived / self.E0 - 1.0) > 1e-4:
            raise DomainError(
                f"{self.name}: stored E0 = {self.E0} disagrees with derived "
                f"{derived} beyond 1e-4 relative"
            )

    @classmethod
    def create(cls, name, D0, r0, m, mu, E0=None) -> "MoleculeParams":
        """Build a molecule, deriving E0 from the constants when not supplied."""
        if E0 is None:
            E0 = derive_E0(m, r0)
        return cls(name=name, D0=D0, r0=r0, m=m, mu=mu, E0=E0)


BUILTIN_MOLECULES = {
    "H2": MoleculeParams("H2", D0=4.744600, r0=0.741600, m=0.503910,
                         mu=1.440558, E0=1.508343932e-2),
    "LiH": MoleculeParams("LiH", D0=2.515287, r0=1.595600, m=0.8801221,
                          mu=1.7998368, E0=1.865528199e-3),
}


def load_molecules(path) -> dict:
    """Read extra molecules from a JSON array of objects.

    Keys: name, D0_eV, r0_angstrom, m_amu, mu, optional E0_eV.
    """
    with open(path, encoding="utf-8") as fh:
        entries = json.load(fh)
    registry = {}
    for entry in entries:
        mol = MoleculeParams.create(
            name=entry["name"],
            D0=entry["D0_eV"],
            r0=entry["r0_angstrom"],
            m=entry["m_amu"],
            mu=entry["mu"],
            E0=entry.get("E0_eV"),
        )
        registry[mol.name] = mol
    return registry


@dataclass(frozen=True)
class ReducedHamiltonian:
    """Dimensionless couplings of the radial problem plus its energy scale."""

    v0: float
    v1: float
    q: float
    e_scale: float  # beta^2 hbar^2 / 2m, in the caller's energy unit

    def __post_init__(self):
        if self.e_scale <= 0.0:
            raise DomainError("e_scale must be positive")
        if self.q < 0.0:
            raise DomainError("shape parameter q must be nonnegative")

    def potential_couplings(self) -> tuple:
        """Undo the reduction: (V0, V1) = (v0, v1) * e_scale."""
        return self.v0 * self.e_scale, self.v1 * self.e_scale


def two_m_over_hbar2_molecular(m: float, consts: PhysicalConstants = CODATA) -> float:
    """2m/hbar^2 in 1/(eV Angstrom^2) for a reduced mass in amu."""
    if m <= 0.0:
        raise DomainError("mass must be positive")
    return 2.0 * m * consts.amu_to_energy / consts.hbar_c**2


def reduce_potential(V0: float, V1: float, beta: float, q: float, m: float,
                     consts: PhysicalConstants | None = None) -> ReducedHamiltonian:
    """Nondimensionalize raw potential strengths.

    With consts=None the atomic regime is assumed (hbar = 1, m in electron
    masses); passing PhysicalConstants selects the eV/Angstrom/amu regime.
    """
    if beta <= 0.0:
        raise DomainError("beta must be positive")
    if m <= 0.0:
        raise DomainError("mass must be positive")
    if consts is None:
        two_m = 2.0 * m
    else:
        two_m = two_m_over_hbar2_molecular(m, consts)
    factor = two_m / beta**2
    return ReducedHamiltonian(v0=V0 * factor, v1=V1 * factor, q=q, e_scale=1.0 / factor)


def reduced_from_molecule(mol: MoleculeParams, q: float) -> ReducedHamiltonian:
    """Reduced couplings for the molecule mapping V1 = D0(e^mu - q), V0 = 2 V1.

    Uses the molecule's stored E0 (e_scale = mu^2 E0 / 2) so that reference
    tables are reproduced independently of the constants' last digits.
    """
    expmu = math.exp(mol.mu)
    if expmu <= q:
        raise DomainError(
            f"{mol.name}: e^mu = {expmu:.6f} <= q = {q}; depth mapping undefined"
        )
    e_scale = 0.5 * mol.mu**2 * mol.E0
    V1 = mol.D0 * (expmu - q)
    return ReducedHamiltonian(v0=2.0 * V1 / e_scale, v1=V1 / e_scale, q=q, e_scale=e_scale)
