"""Independent numerical verification of the analytic constructions.

Everything here consumes only potentials, grids and boundary samples; no
series coefficients, asymptotic parameters or closed-form exponents enter
any code path, so agreement with the analytic modules is meaningful.

The reduced radial equation is integrated as y'' = f(r) y with

    f(r) = V(r) + (lam^2 - 1/4)/r^2 - kappa

using the Numerov method on uniform grids and a fourth-order one-step
(Runge-Kutta) scheme on non-uniform ones.  Bound-state energies are found
by bisection on the matching defect between outward and inward sweeps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Tuple

import numpy as np

from .errors import (BracketError, DomainError, IntegrationDiverged,
                     NoConvergence)
from .potentials import PotentialTerms, evaluate_terms, term_with_power

_OVERFLOW_LIMIT = 1e250
_MAX_BISECTIONS = 200


class Spacing(Enum):
    UNIFORM = "uniform"
    LOG = "log"


class Direction(Enum):
    OUTWARD = "outward"
    INWARD = "inward"


@dataclass(frozen=True)
class RadialGrid:
    """Strictly increasing radial nodes with both singular endpoints excluded."""

    r_min: float
    r_max: float
    n_points: int
    spacing: Spacing = Spacing.UNIFORM

    def __post_init__(self):
        if self.r_min <= 0.0:
            raise DomainError("r_min must be positive")
        if self.r_max <= self.r_min:
            raise DomainError("r_max must exceed r_min")
        if int(self.n_points) != self.n_points or self.n_points < 16:
            raise DomainError("n_points must be an integer >= 16")

    def nodes(self) -> np.ndarray:
        if self.spacing is Spacing.UNIFORM:
            return np.linspace(self.r_min, self.r_max, self.n_points)
        return np.geomspace(self.r_min, self.r_max, self.n_points)


@dataclass(frozen=True)
class ShootingResult:
    energy: float
    match_defect: float
    iterations: int
    converged: bool


def _f_callable(terms: PotentialTerms, kappa: float, lam: float) -> Callable:
    cent = lam * lam - 0.25

    def f(r):
        return evaluate_terms(terms, r) + cent / np.asarray(r, dtype=float) ** 2 - kappa

    return f


def _numerov(r: np.ndarray, fvals: np.ndarray, y0: float, y1: float,
             raise_on_overflow: bool) -> np.ndarray:
    """Numerov sweep over an increasing uniform grid (rescales on overflow
    unless asked to raise, since only ratios matter to callers that allow it)."""
    h = r[1] - r[0]
    h2 = h * h / 12.0
    n = len(r)
    y = np.empty(n)
    y[0], y[1] = y0, y1
    for i in range(1, n - 1):
        y[i + 1] = ((2.0 + 10.0 * h2 * fvals[i]) * y[i]
                    - (1.0 - h2 * fvals[i - 1]) * y[i - 1]) / (1.0 - h2 * fvals[i + 1])
        if not math.isfinite(y[i + 1]):
            raise IntegrationDiverged("integration overflowed", i, float(r[i]))
        if abs(y[i + 1]) > _OVERFLOW_LIMIT:
            if raise_on_overflow:
                raise IntegrationDiverged("integration overflowed", i + 1, float(r[i + 1]))
            y[: i + 2] /= _OVERFLOW_LIMIT
    return y


def _rk4_step(f: Callable, r: float, h: float, y: float, dy: float) -> Tuple[float, float]:
    def rhs(rr, state):
        return np.array([state[1], f(rr) * state[0]])

    state = np.array([y, dy])
    k1 = rhs(r, state)
    k2 = rhs(r + 0.5 * h, state + 0.5 * h * k1)
    k3 = rhs(r + 0.5 * h, state + 0.5 * h * k2)
    k4 = rhs(r + h, state + h * k3)
    out = state + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return float(out[0]), float(out[1])


def _onestep(r: np.ndarray, f: Callable, y0: float, y1: float) -> np.ndarray:
    """Fourth-order one-step sweep for non-uniform (increasing) grids.

    The initial slope is recovered from the two seed values by linearity of
    the equation in the initial data: one step is integrated with slopes 0
    and 1 and the combination reproducing y1 is solved for.
    """
    h0 = r[1] - r[0]
    ya, _ = _rk4_step(f, r[0], h0, y0, 0.0)
    yb, _ = _rk4_step(f, r[0], h0, 0.0, 1.0)
    if yb == 0.0:
        raise DomainError("cannot recover the initial slope from the seeds")
    dy0 = (y1 - ya) / yb
    n = len(r)
    y = np.empty(n)
    y[0] = y0
    yi, di = y0, dy0
    for i in range(n - 1):
        yi, di = _rk4_step(f, float(r[i]), float(r[i + 1] - r[i]), yi, di)
        if not math.isfinite(yi) or abs(yi) > _OVERFLOW_LIMIT:
            raise IntegrationDiverged("integration overflowed", i + 1, float(r[i + 1]))
        y[i + 1] = yi
    return y


def integrate_radial(terms: PotentialTerms, kappa: float, lam: float,
                     grid: RadialGrid, direction: Direction,
                     seeds: Tuple[float, float]) -> np.ndarray:
    """Integrate y'' = (V + (lam^2 - 1/4)/r^2 - kappa) y across the grid.

    ``seeds`` are the solution values at the first two nodes in the travel
    direction (the two largest radii for INWARD).  The returned array is
    ordered like ``grid.nodes()`` regardless of direction.
    """
    y0, y1 = seeds
    if not (math.isfinite(y0) and math.isfinite(y1)) or (y0 == 0.0 and y1 == 0.0):
        raise DomainError("seeds must be finite and not both zero")
    r = grid.nodes()
    f = _f_callable(terms, kappa, lam)
    if direction is Direction.OUTWARD:
        if grid.spacing is Spacing.UNIFORM:
            return _numerov(r, f(r), y0, y1, raise_on_overflow=True)
        return _onestep(r, f, y0, y1)
    # inward: mirror the axis so the sweep still runs over increasing values
    rr = r[::-1]
    if grid.spacing is Spacing.UNIFORM:
        axis = np.linspace(0.0, r[-1] - r[0], len(r))  # only the spacing matters
        y = _numerov(axis, f(r)[::-1], y0, y1, raise_on_overflow=True)
        return y[::-1]
    mirrored = lambda x: f(rr[0] + rr[-1] - np.asarray(x))
    y = _onestep((rr[0] + rr[-1]) - rr, mirrored, y0, y1)
    return y[::-1]


def finite_difference_residual(r: np.ndarray, y: np.ndarray,
                               terms: PotentialTerms, kappa: float,
                               lam: float) -> float:
    """Max over interior nodes of |y'' - f y| / max(1, |y|) with a central
    second difference; requires a uniform grid with at least 5 points."""
    r = np.asarray(r, dtype=float)
    y = np.asarray(y)
    if len(r) < 5:
        raise DomainError("need at least 5 grid points")
    h = np.diff(r)
    if np.max(np.abs(h - h[0])) > 1e-12 * abs(h[0]):
        raise DomainError("finite-difference residual requires a uniform grid")
    f = _f_callable(terms, kappa, lam)(r)
    ypp = (y[2:] - 2.0 * y[1:-1] + y[:-2]) / h[0] ** 2
    res = np.abs(ypp - f[1:-1] * y[1:-1]) / np.maximum(1.0, np.abs(y[1:-1]))
    return float(np.max(res))


def _match_index(terms: PotentialTerms, lam: float, r: np.ndarray) -> int:
    veff = evaluate_terms(terms, r) + (lam * lam - 0.25) / r**2
    return int(np.clip(np.argmin(veff), 5, len(r) - 6))


def _matching_defect(terms: PotentialTerms, lam: float, energy: float,
                     r: np.ndarray, imatch: int, inner_decay: float) -> float:
    """Normalized Wronskian of the outward and inward sweeps at the match node.

    Seeds are the generic decay forms exp(-inner_decay / r) at the origin
    and exp(-sqrt(-E) r) at infinity, never the closed-form wavefunction.
    """
    h = r[1] - r[0]
    f = evaluate_terms(terms, r) + (lam * lam - 0.25) / r**2 - energy
    out = _numerov(r[: imatch + 3], f[: imatch + 3],
                   math.exp(inner_decay * (1.0 / r[1] - 1.0 / r[0])), 1.0,
                   raise_on_overflow=False)
    decay = math.sqrt(-energy)
    rev = _numerov(np.linspace(0.0, r[-1] - r[imatch - 2], len(r) - imatch + 2),
                   f[imatch - 2:][::-1],
                   math.exp(-decay * (r[-1] - r[-2])), 1.0,
                   raise_on_overflow=False)
    inn = rev[::-1]  # inn[k] is the inward solution at r[imatch - 2 + k]
    j = 2
    d_out = (-out[imatch + 2] + 8.0 * out[imatch + 1]
             - 8.0 * out[imatch - 1] + out[imatch - 2]) / (12.0 * h)
    d_in = (-inn[j + 2] + 8.0 * inn[j + 1] - 8.0 * inn[j - 1] + inn[j - 2]) / (12.0 * h)
    wronskian = d_out * inn[j] - d_in * out[imatch]
    norm = math.sqrt((d_out**2 + out[imatch] ** 2) * (d_in**2 + inn[j] ** 2))
    return wronskian / norm


def shoot_ground_energy(terms: PotentialTerms, bracket: Tuple[float, float],
                        grid: RadialGrid, tolerance: float = 1e-10) -> ShootingResult:
    """Bisect the matching defect for the bound-state energy in the bracket.

    The bracket must satisfy E_lo < E_hi < 0 and contain a sign change of
    the defect; the match node sits at the minimum of the effective
    potential.  Requires a uniform grid.
    """
    e_lo, e_hi = bracket
    if not (e_lo < e_hi < 0.0):
        raise DomainError("bracket must satisfy E_lo < E_hi < 0")
    if grid.spacing is not Spacing.UNIFORM:
        raise DomainError("shooting requires a uniform grid")
    r = grid.nodes()
    imatch = _match_index(terms, 0.0, r)
    a4 = term_with_power(terms, 4.0)
    if a4 <= 0.0:
        raise DomainError("shooting seeds need a repulsive r^-4 term")
    inner_decay = math.sqrt(a4)

    def defect(energy: float) -> float:
        return _matching_defect(terms, 0.0, energy, r, imatch, inner_decay)

    g_lo, g_hi = defect(e_lo), defect(e_hi)
    if not (math.isfinite(g_lo) and math.isfinite(g_hi)) or g_lo * g_hi > 0.0:
        raise BracketError("matching defect has no sign change in the bracket")
    e_mid, g_mid = e_lo, g_lo
    for iteration in range(1, _MAX_BISECTIONS + 1):
        e_mid = 0.5 * (e_lo + e_hi)
        g_mid = defect(e_mid)
        if abs(g_mid) <= tolerance or (e_hi - e_lo) < 1e-14 * abs(e_mid):
            break
        if g_lo * g_mid <= 0.0:
            e_hi, g_hi = e_mid, g_mid
        else:
            e_lo, g_lo = e_mid, g_mid
    else:
        raise NoConvergence("bisection exhausted its iteration budget")
    return ShootingResult(energy=e_mid, match_defect=g_mid,
                          iterations=iteration, converged=abs(g_mid) <= tolerance)
