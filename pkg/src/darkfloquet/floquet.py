"""Floquet analysis: quasi-energies and modes from the monodromy matrix,
period-averaged populations, dark-mode detection, and drive-strength sweeps
with branch tracking."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError
from .evolve import PropagationSettings, propagator_samples
from .linalg import unitary_eigen
from .model import DrivenSystem, canonical_system

__all__ = [
    "FloquetMode",
    "FloquetSpectrum",
    "DarkModeResult",
    "fold_quasi_energy",
    "floquet_spectrum",
    "dark_mode",
    "quasi_energy_sweep",
    "SweepResult",
]


@dataclass(frozen=True)
class FloquetMode:
    """One Floquet mode: quasi-energy in the first Brillouin zone, the t=0
    eigenvector of the monodromy matrix, and period-averaged populations."""

    quasi_energy: float
    eigenvector: np.ndarray
    avg_populations: np.ndarray


@dataclass(frozen=True)
class FloquetSpectrum:
    modes: tuple[FloquetMode, ...]
    system: DrivenSystem
    settings: PropagationSettings


@dataclass(frozen=True)
class DarkModeResult:
    mode: FloquetMode | None
    ambiguous: bool = False


def fold_quasi_energy(eps: float, omega: float) -> float:
    """Fold a quasi-energy into the first Brillouin zone (-omega/2, omega/2]."""
    r = eps % omega
    if r > 0.5 * omega:
        r -= omega
    return r


def floquet_spectrum(system: DrivenSystem,
                     settings: PropagationSettings = PropagationSettings()
                     ) -> FloquetSpectrum:
    """Quasi-energies and modes of the driven system.

    Eigenphases of the monodromy matrix give the quasi-energies; each mode's
    populations are averaged over one period with the trapezoidal rule on
    the integrator grid.
    """
    _, us = propagator_samples(system, settings)
    dec = unitary_eigen(us[-1])
    t_period = system.period
    modes = []
    for k in range(system.n):
        eps = fold_quasi_energy(-np.angle(dec.eigenvalues[k]) / t_period,
                                system.omega)
        vec = dec.eigenvectors[:, k]
        pops = _period_averaged_populations(us, vec)
        modes.append(FloquetMode(quasi_energy=float(eps), eigenvector=vec,
                                 avg_populations=pops))
    modes.sort(key=lambda m: m.quasi_energy)
    return FloquetSpectrum(modes=tuple(modes), system=system, settings=settings)


def _period_averaged_populations(us: np.ndarray, vec: np.ndarray) -> np.ndarray:
    traj = us @ vec  # (steps+1, n)
    p = np.abs(traj) ** 2
    # trapezoid on the uniform grid
    avg = (0.5 * (p[0] + p[-1]) + p[1:-1].sum(axis=0)) / (p.shape[0] - 1)
    return avg


def dark_mode(spectrum: FloquetSpectrum, eps_tol: float | None = None,
              pop_tol: float = 0.02) -> DarkModeResult:
    """Find the dark Floquet mode: zero quasi-energy and negligible
    period-averaged population on every even site.

    Returns an empty result if no mode qualifies, and an ambiguous empty
    result if more than one does (even-n degeneracy points).
    """
    omega = spectrum.system.omega
    if eps_tol is None:
        eps_tol = 1e-4 * omega
    if eps_tol <= 0 or pop_tol <= 0:
        raise ConfigError("tolerances must be positive")
    even_sites = np.arange(1, spectrum.system.n, 2)  # sites 2, 4, ... (1-based)
    matches = [m for m in spectrum.modes
               if abs(m.quasi_energy) <= eps_tol
               and np.all(m.avg_populations[even_sites] <= pop_tol)]
    if len(matches) == 1:
        return DarkModeResult(mode=matches[0])
    if len(matches) > 1:
        return DarkModeResult(mode=None, ambiguous=True)
    return DarkModeResult(mode=None)


@dataclass(frozen=True)
class SweepResult:
    """Branch-tracked Floquet data over a grid of A/omega values.

    quasi_energies[i, k] and avg_populations[i, k, :] belong to branch k at
    ratios[i]; branch identity follows maximal eigenvector overlap between
    adjacent grid points.
    """

    ratios: np.ndarray
    quasi_energies: np.ndarray      # (n_ratios, n)
    avg_populations: np.ndarray     # (n_ratios, n, n)
    eigenvectors: np.ndarray        # (n_ratios, n, n), column k = branch k
    system_template: DrivenSystem
    settings: PropagationSettings


def quasi_energy_sweep(n: int, v: float, omega: float, ratios,
                       settings: PropagationSettings = PropagationSettings()
                       ) -> SweepResult:
    """Floquet spectra over a grid of drive ratios A/omega, with mode
    branches matched across adjacent grid points by eigenvector overlap."""
    ratios = np.asarray(ratios, dtype=float)
    if ratios.ndim != 1 or len(ratios) == 0:
        raise ConfigError("ratios must be a non-empty 1-D sequence")
    if np.any(~np.isfinite(ratios)) or np.any(ratios < 0):
        raise ConfigError("ratios must be finite and >= 0")
    eps = np.empty((len(ratios), n))
    pops = np.empty((len(ratios), n, n))
    vecs = np.empty((len(ratios), n, n), dtype=complex)
    prev = None
    template = canonical_system(n, v, 0.0, omega)
    for i, r in enumerate(ratios):
        system = canonical_system(n, v, r * omega, omega)
        spec = floquet_spectrum(system, settings)
        e = np.array([m.quasi_energy for m in spec.modes])
        p = np.stack([m.avg_populations for m in spec.modes])
        w = np.stack([m.eigenvector for m in spec.modes], axis=1)
        if prev is not None:
            perm = _match_branches(prev, w, eps[i - 1], e)
            e, p, w = e[perm], p[perm], w[:, perm]
        eps[i] = e
        pops[i] = p
        vecs[i] = w
        prev = w
    return SweepResult(ratios=ratios, quasi_energies=eps, avg_populations=pops,
                       eigenvectors=vecs, system_template=template,
                       settings=settings)


def _match_branches(w_prev: np.ndarray, w_next: np.ndarray,
                    e_prev: np.ndarray, e_next: np.ndarray) -> np.ndarray:
    """Greedy assignment maximizing |<w_prev_k | w_next_j>|, ties broken by
    quasi-energy proximity. Returns perm with w_next[:, perm[k]] ~ branch k."""
    n = w_prev.shape[1]
    overlap = np.abs(w_prev.conj().T @ w_next)  # (k_prev, j_next)
    perm = np.full(n, -1)
    used = np.zeros(n, dtype=bool)
    flat = [(-overlap[k, j], abs(e_prev[k] - e_next[j]), k, j)
            for k in range(n) for j in range(n)]
    flat.sort()
    assigned = 0
    for _, _, k, j in flat:
        if perm[k] == -1 and not used[j]:
            perm[k] = j
            used[j] = True
            assigned += 1
            if assigned == n:
                break
    return perm
