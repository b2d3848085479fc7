"""Independent Numerov eigensolver for the radial equation u'' = f(r) u,

    f(r) = (2m/hbar^2) (V(r) - E) + centrifugal(r),

with the centrifugal term taken exactly (l(l+1)/r^2), in the
exponential-family (Greene-Aldrich) form, or omitted.

Algorithm
---------
For a trial energy the equation is integrated with the three-point Numerov
scheme outward from the inner boundary and inward from the outer boundary,
meeting at the outermost classical turning point.  The sweep yields the
interior node count nu and the log-derivative mismatch D between the two
branches.  D is strictly decreasing in E between its poles and vanishes
exactly at eigenvalues, so

    N(E) = nu + [D < 0]

counts the eigenvalues below E (a Sturm count).  find_eigenvalue brackets
the target n by scanning a geometric energy ladder, bisects the Sturm count
until the bracket endpoints count n and n+1 (which guarantees a pole-free
defect sign change), then bisects the defect to 1e-10 relative.  The grid
is then doubled until the eigenvalue is stable to 1e-8 relative.

Inner boundary handling: next to an infinite potential wall the outward
march is self-correcting and starts from (0, eps); on domains reaching the
origin the start follows the regular solution r^p (1 + c1 r), with the
indicial power p and the Coulomb slope c1 estimated from the potential
itself.  The first grid point moves off a steep wall until h^2 |f|/12 is
small enough for the scheme to be meaningful there.

The sequential sweeps are JIT-compiled with numba when available; a pure
Python fallback keeps the module importable (and merely slow) without it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import ConvergenceError, DomainError, NoBoundStateError

__all__ = [
    "RadialProblem",
    "EigenResult",
    "numerov_sweep",
    "find_eigenvalue",
    "spectrum",
    "auto_outer_radius",
    "problem_for_potential",
]

_RESCALE_LIMIT = 1e100
_DEFECT_REL_TOL = 1e-10
_REFINE_REL_TOL = 1e-8
_MAX_REFINEMENTS = 5
_LADDER_POINTS = 64
_WALL_CRITERION = 2.4  # keep h^2 |f(r_min)| below this (h^2 f / 12 <= 0.2)


def _sweep_impl(f, h, u0, u1, m):
    """Two-sided Numerov march; returns (nodes, defect).

    Nodes are the strict interior sign changes of the outward branch on
    (r_min, r_m] plus those of the inward branch on [r_m, r_max); the kink
    at the match point is not counted.  The defect is the difference of
    outward and inward logarithmic derivatives at r_m.
    """
    n = f.shape[0]
    T = h * h / 12.0

    uo_prev = u0
    uo_mid = u1
    uo_next = 0.0
    nodes = 0
    sprev = 0
    if u0 != 0.0:
        sprev = 1 if u0 > 0.0 else -1
    if u1 != 0.0:
        s = 1 if u1 > 0.0 else -1
        if sprev != 0 and s != sprev:
            nodes += 1
        sprev = s
    uo_m_minus = u0 if m == 1 else 0.0
    uo_m = 0.0
    for i in range(1, m + 1):
        uo_next = ((2.0 + 10.0 * T * f[i]) * uo_mid
                   - (1.0 - T * f[i - 1]) * uo_prev) / (1.0 - T * f[i + 1])
        if abs(uo_next) > _RESCALE_LIMIT:
            uo_next *= 1e-100
            uo_mid *= 1e-100
            uo_m_minus *= 1e-100
        uo_prev = uo_mid
        uo_mid = uo_next
        if i + 1 <= m and uo_next != 0.0:
            s = 1 if uo_next > 0.0 else -1
            if sprev != 0 and s != sprev:
                nodes += 1
            sprev = s
        if i + 1 == m:
            uo_m_minus = uo_prev  # holds u at m-1 after the shift
    # after the loop: uo_mid = u(m+1), uo_prev = u(m)
    uo_m = uo_prev
    uo_m_plus = uo_mid

    kappa_h = math.sqrt(f[n - 1]) * h if f[n - 1] > 0.0 else 0.0
    if kappa_h > 100.0:
        kappa_h = 100.0
    ui_next = 1e-30
    ui_mid = 1e-30 * math.exp(kappa_h)
    sprev = 1
    ui_m_plus = ui_next if m == n - 3 else 0.0
    ui_m = 0.0
    for i in range(n - 2, m - 1, -1):
        ui_prev = ((2.0 + 10.0 * T * f[i]) * ui_mid
                   - (1.0 - T * f[i + 1]) * ui_next) / (1.0 - T * f[i - 1])
        if abs(ui_prev) > _RESCALE_LIMIT:
            ui_prev *= 1e-100
            ui_mid *= 1e-100
            ui_m_plus *= 1e-100
        ui_next = ui_mid
        ui_mid = ui_prev
        if i - 1 >= m and ui_prev != 0.0:
            s = 1 if ui_prev > 0.0 else -1
            if sprev != 0 and s != sprev:
                nodes += 1
            sprev = s
        if i - 1 == m:
            ui_m_plus = ui_next  # holds u at m+1 after the shift
    # after the loop: ui_mid = u(m-1), ui_next = u(m)
    ui_m = ui_next
    ui_m_minus = ui_mid

    if uo_m != 0.0:
        d_out = (uo_m_plus - uo_m_minus) / (2.0 * h * uo_m)
    else:
        d_out = math.inf
    if ui_m != 0.0:
        d_in = (ui_m_plus - ui_m_minus) / (2.0 * h * ui_m)
    else:
        d_in = -math.inf
    return nodes, d_out - d_in


try:  # pragma: no cover - exercised implicitly everywhere
    from numba import njit

    _sweep_kernel = njit(cache=True)(_sweep_impl)
except ImportError:  # pragma: no cover
    _sweep_kernel = _sweep_impl


@dataclass(frozen=True)
class EigenResult:
    n: int
    energy: float
    converged: bool
    residual: float
    grid_points_used: int


@dataclass(frozen=True)
class RadialProblem:
    """One radial eigenproblem for the Numerov solver.

    ``potential`` maps radius to energy; ``two_m_over_hbar2`` carries the
    unit regime (2m in atomic units with m in electron masses, or
    2 m c^2/(hbar c)^2 in the eV/Angstrom regime).  ``inner_edge`` marks an
    infinite-wall inner boundary (the start there is a bare (0, eps));
    leave it None for domains that reach the origin, where the regular
    power-series start is used instead.
    """

    potential: Callable[[float], float]
    l: int
    two_m_over_hbar2: float
    r_min: float
    r_max: float
    centrifugal_mode: str = "exact"  # "exact" | "greene-aldrich" | "none"
    ga_beta: Optional[float] = None
    ga_q: float = 1.0
    grid_points: int = 4001
    inner_edge: Optional[float] = None

    def __post_init__(self):
        if self.grid_points < 2000:
            raise DomainError("grid_points must be at least 2000")
        if self.r_max <= self.r_min:
            raise DomainError("r_max must exceed r_min")
        if self.two_m_over_hbar2 <= 0.0:
            raise DomainError("2m/hbar^2 must be positive")
        if self.centrifugal_mode not in ("exact", "greene-aldrich", "none"):
            raise DomainError(f"unknown centrifugal mode {self.centrifugal_mode!r}")
        if self.centrifugal_mode == "greene-aldrich" and self.ga_beta is None:
            raise DomainError("greene-aldrich mode needs ga_beta (and ga_q)")

    def centrifugal(self, r: float) -> float:
        ll = self.l * (self.l + 1)
        if ll == 0 or self.centrifugal_mode == "none":
            return 0.0
        if self.centrifugal_mode == "exact":
            return ll / (r * r)
        b, q = self.ga_beta, self.ga_q
        w = math.expm1(b * r) + (1.0 - q)
        return ll * b * b * math.exp(b * r) / (w * w)

    def effective_potential(self, r: float) -> float:
        """V(r) plus the centrifugal term expressed in energy units."""
        return self.potential(r) + self.centrifugal(r) / self.two_m_over_hbar2


class _Discretized:
    """Grid arrays and start values for one (problem, grid_points) pair."""

    def __init__(self, p: RadialProblem, grid_points: int):
        r_min = p.r_min
        r = np.linspace(r_min, p.r_max, grid_points)
        h = r[1] - r[0]
        # keep the first point off any steep wall: h^2 |f| must stay small
        edge = p.inner_edge if p.inner_edge is not None else p.r_min - (p.r_max - p.r_min)
        guard = 0
        while (h * h * abs(p.two_m_over_hbar2 * p.potential(r_min) + p.centrifugal(r_min))
               > _WALL_CRITERION) and guard < 200:
            r_min = edge + (r_min - edge) * 1.5 if p.inner_edge is not None else r_min + 2 * h
            r = np.linspace(r_min, p.r_max, grid_points)
            h = r[1] - r[0]
            guard += 1
        self.r = r
        self.h = float(h)
        self.grid_points = grid_points
        self.two_m = p.two_m_over_hbar2
        self.veff = np.fromiter((p.effective_potential(x) for x in r),
                                dtype=float, count=grid_points)
        self.u0, self.u1 = self._start_values(p)

    def _start_values(self, p: RadialProblem):
        if p.inner_edge is not None:
            return 0.0, 1e-6
        # regular series u ~ r^p (1 + c1 r): indicial power from the r^-2
        # strength, slope from the r^-1 (Coulomb) strength, both estimated
        # from the potential near the first grid point
        x0 = float(self.r[0])
        x1 = float(self.r[1])
        g0 = p.two_m_over_hbar2 * p.potential(x0) + p.centrifugal(x0)
        g1 = p.two_m_over_hbar2 * p.potential(2.0 * x0) + p.centrifugal(2.0 * x0)
        y0, y1 = g0 * x0, g1 * (2.0 * x0)
        inv0, inv1 = 1.0 / x0, 0.5 / x0
        c2 = (y0 - y1) / (inv0 - inv1)
        coul = y0 - c2 * inv0
        power = 0.5 + math.sqrt(max(0.25 + c2, 0.0))
        slope = coul / (2.0 * power)
        u0 = x0**power * (1.0 + slope * x0)
        u1 = x1**power * (1.0 + slope * x1)
        scale = max(abs(u0), abs(u1), 1e-300)
        return u0 / scale * 1e-6, u1 / scale * 1e-6

    def match_index(self, f: np.ndarray) -> int:
        inside = np.flatnonzero((f[:-1] <= 0.0) & (f[1:] > 0.0))
        m = int(inside[-1]) if inside.size else int(np.argmin(self.veff))
        return min(max(m, 2), self.grid_points - 3)

    def sweep(self, E: float):
        f = self.two_m * (self.veff - E)
        m = self.match_index(f)
        nodes, defect = _sweep_kernel(f, self.h, self.u0, self.u1, m)
        return nodes, defect

    def sturm_count(self, E: float):
        nodes, defect = self.sweep(E)
        return nodes + (1 if defect < 0.0 else 0), defect


def numerov_sweep(p: RadialProblem, E: float):
    """Single two-sided sweep: (interior node count, log-derivative defect)."""
    if E >= 0.0:
        raise DomainError("trial energy must lie below the asymptotic value 0")
    disc = _Discretized(p, p.grid_points)
    return disc.sweep(E)


def _bracket_from_ladder(disc: _Discretized, n: int, lo_hint=None, hi_hint=None):
    """Energy bracket [lo, hi] with Sturm counts (<= n, > n)."""
    if lo_hint is not None and hi_hint is not None:
        if disc.sturm_count(lo_hint)[0] <= n < disc.sturm_count(hi_hint)[0]:
            return lo_hint, hi_hint
    vmin = float(disc.veff.min())
    if vmin >= 0.0:
        raise NoBoundStateError("potential has no negative region: no bound states")
    ladder = -np.geomspace(abs(vmin) * 0.999, abs(vmin) * 1e-8, _LADDER_POINTS)
    prev_E = float(ladder[0])
    prev_c = disc.sturm_count(prev_E)[0]
    if prev_c > n:
        raise NoBoundStateError(
            f"state n = {n} lies below the energy ladder (count {prev_c} at bottom)"
        )
    for E in ladder[1:]:
        c = disc.sturm_count(float(E))[0]
        if prev_c <= n < c:
            return prev_E, float(E)
        prev_E, prev_c = float(E), c
    raise NoBoundStateError(f"no state with n = {n} nodes in the scanned range")


def _solve_on_grid(disc: _Discretized, n: int, lo_hint=None, hi_hint=None):
    lo, hi = _bracket_from_ladder(disc, n, lo_hint, hi_hint)
    # narrow by Sturm count until the endpoints count exactly n and n+1,
    # which guarantees the defect crosses zero once, pole-free, in between
    lo_c = disc.sturm_count(lo)[0]
    hi_c = disc.sturm_count(hi)[0]
    for _ in range(120):
        if lo_c == n and hi_c == n + 1:
            break
        mid = 0.5 * (lo + hi)
        c = disc.sturm_count(mid)[0]
        if c <= n:
            lo, lo_c = mid, c
        else:
            hi, hi_c = mid, c
    # defect bisection (defect is decreasing: positive below the eigenvalue)
    defect = math.inf
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        count, defect = disc.sturm_count(mid)
        if count <= n:
            lo = mid
        else:
            hi = mid
        if abs(hi - lo) <= _DEFECT_REL_TOL * abs(mid):
            break
    energy = 0.5 * (lo + hi)
    nodes, defect = disc.sweep(energy)
    return energy, nodes, defect


def find_eigenvalue(p: RadialProblem, n: int) -> EigenResult:
    """Locate the n-node eigenvalue, refining the grid until stable.

    Raises NoBoundStateError when no such state exists in the well.
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    grid_points = p.grid_points
    energy_prev = None
    energy = nodes = defect = None
    grid_points_used = grid_points
    converged = False
    for _level in range(_MAX_REFINEMENTS + 1):
        disc = _Discretized(p, grid_points)
        lo_hint = hi_hint = None
        if energy_prev is not None:
            width = 1e-4 * abs(energy_prev)
            for _expand in range(8):
                lo_try = energy_prev - width
                hi_try = min(energy_prev + width, -1e-300)
                if disc.sturm_count(lo_try)[0] <= n < disc.sturm_count(hi_try)[0]:
                    lo_hint, hi_hint = lo_try, hi_try
                    break
                width *= 8.0
        energy, nodes, defect = _solve_on_grid(disc, n, lo_hint, hi_hint)
        grid_points_used = grid_points
        if energy_prev is not None and abs(energy - energy_prev) <= _REFINE_REL_TOL * abs(energy):
            converged = nodes == n
            break
        energy_prev = energy
        grid_points = 2 * grid_points - 1
    return EigenResult(n=n, energy=float(energy), converged=converged,
                       residual=float(defect), grid_points_used=grid_points_used)


def spectrum(p: RadialProblem, n_max: int) -> list:
    """find_eigenvalue mapped over n = 0..n_max, skipping absent states."""
    out = []
    for n in range(n_max + 1):
        try:
            out.append(find_eigenvalue(p, n))
        except NoBoundStateError:
            continue
    return out


def auto_outer_radius(veff: Callable[[float], float], two_m: float, e_est: float,
                      r_lo: float, decay: float = 30.0) -> float:
    """Outer radius with ``decay`` WKB e-foldings beyond the outermost
    classically allowed point at energy e_est."""
    if e_est >= 0.0:
        raise DomainError("e_est must be negative")
    kappa = math.sqrt(two_m * abs(e_est))
    step = 0.25 / kappa
    r = r_lo + step
    phase = 0.0
    seen_allowed = False
    for _ in range(400_000):
        v = veff(r)
        if v < e_est:
            seen_allowed = True
            phase = 0.0
        elif seen_allowed:
            phase += math.sqrt(two_m * (v - e_est)) * step
            if phase >= decay:
                return r
        r += step
    if not seen_allowed:
        return r_lo + decay / kappa
    raise ConvergenceError("could not place the outer boundary")


def problem_for_potential(potential, l: int, two_m: float, e_est: float,
                          centrifugal_mode: str = "exact",
                          grid_points: int = 4001) -> RadialProblem:
    """Standard problem setup for the package's potential objects.

    The domain starts at the singular radius (plus 1e-6/beta) for walled
    potentials, at 1e-6/beta above the origin otherwise; for the q = 0
    family it extends to negative r far enough into the exponential wall
    for the amplitude there to be negligible.  The outer radius places 30
    decay lengths beyond the outermost turning point at e_est.
    """
    from .potentials import TwoTermPotential  # local to avoid cycles

    if not isinstance(potential, TwoTermPotential):
        potential = potential.to_two_term()
    beta = potential.beta
    ga_beta, ga_q = beta, potential.q
    rs = potential.singular_radius()
    if rs is not None:
        r_min = rs + 1e-6 / beta
        inner_edge = rs
    elif potential.q == 0.0 and potential.V1 > 0.0:
        # full-line oscillator: continue into the exponential wall until the
        # potential towers over the well by many orders of magnitude
        r_min = -math.log(1e9 * max(abs(e_est), 1e-300) / potential.V1) / (2.0 * beta)
        inner_edge = r_min - 1.0 / beta
    else:
        r_min = 1e-6 / beta
        inner_edge = None

    if potential.q == 0.0:
        veff = lambda r: (potential.V1 * math.exp(-2.0 * beta * r)
                          - potential.V0 * math.exp(-beta * r))
    else:
        def veff(r):
            base = potential.eval(r)
            if centrifugal_mode == "greene-aldrich" and l > 0:
                w = math.expm1(beta * r) + (1.0 - ga_q)
                base += (l * (l + 1) * beta * beta * math.exp(beta * r)
                         / (w * w) / two_m)
            elif centrifugal_mode == "exact" and l > 0:
                base += l * (l + 1) / (r * r) / two_m
            return base

    r_max = auto_outer_radius(veff, two_m, e_est, r_min)
    if potential.q == 0.0:
        pot_callable = lambda r: (potential.V1 * math.exp(-2.0 * beta * r)
                                  - potential.V0 * math.exp(-beta * r))
    else:
        pot_callable = potential.eval
    return RadialProblem(potential=pot_callable, l=l, two_m_over_hbar2=two_m,
                         r_min=r_min, r_max=r_max,
                         centrifugal_mode=centrifugal_mode,
                         ga_beta=ga_beta, ga_q=ga_q,
                         grid_points=grid_points, inner_edge=inner_edge)
