"""Cost of truncating the addressing integrals below the full half period.

The test state is the two-branch entangled superposition
``prod cos(w_n t) + prod sin(w_n t)``.  Addressing its first (highest
frequency) qubit with integrals cut at ``tau`` yields a reconstruction error
``delta(tau)`` and a sine/cosine probability ratio ``r(tau)``; both recover
their exact values only once ``tau`` reaches the half period, and the half
period doubles with every qubit entangled, which is the exponential resource
signature this module quantifies.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .addressing import generator_kernel
from .errors import SizeError
from .spectral import build_ladder
from .waveform import Waveform

DEFAULT_POINTS = 64
MIN_TAU_FRACTION = 1.0 / 512.0


@dataclass(frozen=True, eq=False)
class TruncationSeries:
    """One sweep of a truncation diagnostic over increasing cutoffs.

    ``taus`` are in grid time units and end exactly at the half period;
    undefined points (zero denominators at tiny cutoffs) hold NaN.
    """

    n_entangled: int
    qubit: int
    kind: str
    taus: np.ndarray
    values: np.ndarray
    full_interval: float


def ghz_like_state(n_entangled: int, grid) -> Waveform:
    """Normalized ``prod cos + prod sin`` over all qubits of the grid."""
    if not 2 <= n_entangled <= 10:
        raise SizeError(f"n_entangled must be in 2..10, got {n_entangled}")
    if grid.ladder.n_qubits != n_entangled:
        raise SizeError("grid qubit count does not match n_entangled")
    t = grid.times
    cos_part = np.ones(grid.m)
    sin_part = np.ones(grid.m)
    for f in grid.ladder.freqs:
        cos_part *= np.cos(f * t)
        sin_part *= np.sin(f * t)
    return Waveform(grid, (cos_part + sin_part) / np.sqrt(2.0))


def default_taus(grid, points: int = DEFAULT_POINTS) -> np.ndarray:
    """Log-spaced cutoffs plus the exact half-period endpoint."""
    half = grid.period / 2.0
    taus = np.geomspace(half * MIN_TAU_FRACTION, half, points)
    taus[-1] = half
    return taus


def _sweep(n_entangled: int, n: int, taus, oversample: int, state=None):
    ladder, grid = build_ladder(n_entangled, oversample)
    psi = state if state is not None else ghz_like_state(n_entangled, grid)
    half = grid.period / 2.0
    taus = default_taus(grid) if taus is None else np.asarray(taus, dtype=float)
    if taus.ndim != 1 or len(taus) == 0 or np.any(np.diff(taus) <= 0):
        raise ValueError("taus must be a strictly increasing 1-D array")
    if taus[0] <= 0.0:
        raise ValueError("cutoffs must be positive")
    if taus[-1] > half + 1e-12:
        raise ValueError(f"cutoffs must not exceed the half period {half}")
    kern = generator_kernel(grid, n).samples
    w_n = ladder.frequency(n)
    t = grid.times
    q_c = np.cos(w_n * t) * psi.samples
    q_s = np.sin(w_n * t) * psi.samples
    return grid, psi, taus, kern, q_c, q_s, half


def delta_curve(
    n_entangled: int,
    n: int = 1,
    taus=None,
    oversample: int = 2,
    state: Waveform | None = None,
) -> TruncationSeries:
    """Squared reconstruction error of truncated addressing.

    For each cutoff: normalize the state over the window, form the truncated
    coefficient functions, recombine, renormalize the reconstruction over the
    same window, and integrate the squared deviation.  Exact addressing at
    the half period drives the final value to zero.
    """
    grid, psi, taus, kern, q_c, q_s, half = _sweep(
        n_entangled, n, taus, oversample, state
    )
    dt = grid.dt
    w_n = grid.ladder.frequency(n)
    t = grid.times
    cos_n, sin_n = np.cos(w_n * t), np.sin(w_n * t)
    values = np.empty(len(taus))
    for i, tau in enumerate(taus):
        n_t = max(1, min(grid.m // 2, int(round(tau / dt))))
        state_norm = np.sqrt(np.sum(np.abs(psi.samples[:n_t]) ** 2) * dt)
        if state_norm == 0.0:
            values[i] = np.nan
            continue
        tilde = psi.samples[:n_t] / state_norm
        # correlation is linear in the state, so normalize afterwards
        f_c = _kernels.windowed_correlation(q_c, kern, n_t) / state_norm
        f_s = _kernels.windowed_correlation(q_s, kern, n_t) / state_norm
        recon = f_c * cos_n + f_s * sin_n
        recon_norm = np.sqrt(np.sum(np.abs(recon[:n_t]) ** 2) * dt)
        if recon_norm == 0.0:
            values[i] = np.nan
            continue
        diff = tilde - recon[:n_t] / recon_norm
        values[i] = float(np.sum(np.abs(diff) ** 2) * dt)
    return TruncationSeries(n_entangled, n, "delta", taus, values, half)


def ratio_curve(
    n_entangled: int,
    n: int = 1,
    taus=None,
    oversample: int = 2,
    state: Waveform | None = None,
) -> TruncationSeries:
    """Truncated sine/cosine probability ratio.

    ``r(tau)`` divides the windowed power of the truncated sine-branch
    function by the cosine-branch one.  A vanishing denominator is reported
    as a NaN point rather than an error.
    """
    grid, psi, taus, kern, q_c, q_s, half = _sweep(
        n_entangled, n, taus, oversample, state
    )
    dt = grid.dt
    values = np.empty(len(taus))
    for i, tau in enumerate(taus):
        n_t = max(1, min(grid.m // 2, int(round(tau / dt))))
        f_c = _kernels.windowed_correlation(q_c, kern, n_t)
        f_s = _kernels.windowed_correlation(q_s, kern, n_t)
        num = float(np.sum(np.abs(f_s[:n_t]) ** 2) * dt)
        den = float(np.sum(np.abs(f_c[:n_t]) ** 2) * dt)
        values[i] = num / den if den > 0.0 else np.nan
    return TruncationSeries(n_entangled, n, "ratio", taus, values, half)


def knee(series: TruncationSeries, threshold: float = 1e-3) -> float | None:
    """First cutoff where the series drops below ``threshold`` after having
    been above it; None when the curve never exhibits that drop."""
    seen_above = False
    for tau, value in zip(series.taus, series.values):
        if not np.isfinite(value):
            continue
        if value >= threshold:
            seen_above = True
        elif seen_above:
            return float(tau)
    return None


def knee_in_common_units(series: TruncationSeries, threshold: float = 1e-3) -> float | None:
    """Knee position in time units where the first qubit's frequency is 1.

    With the first qubit's rate held fixed across register sizes, the half
    period doubles per added qubit; comparing knees in these units exposes
    the exponential growth of the required integration interval.
    """
    k = knee(series, threshold)
    if k is None:
        return None
    return k * (2 ** (series.n_entangled - 1))
