"""Sampled register states and their exact product-basis analysis.

A register state is one complex waveform sampled over a full fundamental
period.  Because the grid is finer than twice the highest frequency appearing
in any product of two basis functions, rectangle-rule sums over full and half
periods are exact integrals, and the map between waveform samples and the
``2^N`` product-basis amplitudes is an invertible linear transform that can be
evaluated through a single FFT plus one 2x2 rotation per qubit axis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GridMismatchError, NonOrthogonalBasisError, SizeError
from .spectral import (
    COS,
    SIN,
    FrequencyLadder,
    SampleGrid,
    index_bits,
)


@dataclass(frozen=True, eq=False)
class Waveform:
    """Complex samples of a register state on its grid."""

    grid: SampleGrid
    samples: np.ndarray

    def __post_init__(self):
        s = np.ascontiguousarray(self.samples, dtype=np.complex128)
        if s.shape != (self.grid.m,):
            raise SizeError(
                f"expected {self.grid.m} samples, got shape {self.samples.shape}"
            )
        if not np.all(np.isfinite(s.view(np.float64))):
            raise SizeError("waveform samples must be finite")
        s.flags.writeable = False
        object.__setattr__(self, "samples", s)

    @property
    def n_qubits(self) -> int:
        return self.grid.ladder.n_qubits


@dataclass(frozen=True, eq=False)
class CoefficientVector:
    """Amplitudes over the product basis, indexed by bitstring.

    Bit ``b_n = 0`` selects ``sin(w_n t)`` and ``b_n = 1`` selects
    ``cos(w_n t)``; qubit 1 is the most significant bit of the index.
    """

    n_qubits: int
    amps: np.ndarray

    def __post_init__(self):
        a = np.ascontiguousarray(self.amps, dtype=np.complex128)
        if a.shape != (2**self.n_qubits,):
            raise SizeError(
                f"expected {2**self.n_qubits} amplitudes, got shape {self.amps.shape}"
            )
        a.flags.writeable = False
        object.__setattr__(self, "amps", a)

    def norm_squared(self) -> float:
        return float(np.sum(np.abs(self.amps) ** 2))


def basis_waveform(grid: SampleGrid, n: int, kind: str) -> Waveform:
    """Single-qubit basis function ``sin(w_n t)`` or ``cos(w_n t)``."""
    w = grid.ladder.frequency(n)
    t = grid.times
    if kind == SIN:
        return Waveform(grid, np.sin(w * t).astype(np.complex128))
    if kind == COS:
        return Waveform(grid, np.cos(w * t).astype(np.complex128))
    raise ValueError(f"kind must be 'sin' or 'cos', got {kind!r}")


def product_basis_samples(grid: SampleGrid, j: int) -> np.ndarray:
    """Real samples of the product-basis function with index ``j``."""
    ladder = grid.ladder
    if not 0 <= j < 2**ladder.n_qubits:
        raise SizeError(f"basis index {j} out of range for {ladder.n_qubits} qubits")
    t = grid.times
    out = np.ones(grid.m)
    for f, b in zip(ladder.freqs, index_bits(j, ladder.n_qubits)):
        out *= np.cos(f * t) if b else np.sin(f * t)
    return out


def product_basis_waveform(grid: SampleGrid, j: int) -> Waveform:
    """Product of the per-qubit basis functions selected by index ``j``."""
    return Waveform(grid, product_basis_samples(grid, j).astype(np.complex128))


def _window_samples(grid: SampleGrid, interval) -> int:
    if interval == "full":
        return grid.m
    if interval == "half":
        return grid.m // 2
    tau = float(interval)
    if not 0.0 < tau <= grid.period + 1e-12:
        raise ValueError(f"truncation point {tau} outside (0, {grid.period}]")
    return max(1, min(grid.m, int(round(tau / grid.dt))))


def inner_product(w1: Waveform, w2: Waveform, interval="full") -> complex:
    """Rectangle-rule inner product ``sum conj(w1) * w2 * dt`` over an interval.

    ``interval`` is ``'full'`` (one period), ``'half'`` (half period), or a
    float upper limit ``tau``.  Over full and half periods the sum equals the
    exact integral for every band-limited integrand arising here.
    """
    if not w1.grid.compatible_with(w2.grid):
        raise GridMismatchError("waveforms live on different grids")
    n_t = _window_samples(w1.grid, interval)
    return complex(np.vdot(w1.samples[:n_t], w2.samples[:n_t]) * w1.grid.dt)


def waveform_norm_squared(w: Waveform, interval="full") -> float:
    n_t = _window_samples(w.grid, interval)
    return float(np.sum(np.abs(w.samples[:n_t]) ** 2) * w.grid.dt)


# Per-qubit change of basis between (sin, cos) amplitudes and the coefficients
# of (e^{-iwt}, e^{+iwt}).  _EXP_FROM_SC maps basis amplitudes to exponential
# coefficients; its inverse is 2x the conjugate transpose.
_EXP_FROM_SC = np.array([[0.5j, 0.5], [-0.5j, 0.5]])
_SC_FROM_EXP = 2.0 * _EXP_FROM_SC.conj().T


def _spectrum_bins(ladder: FrequencyLadder, m: int) -> np.ndarray:
    """FFT bin of each signed-sum frequency, indexed by sign pattern.

    Flat index ``s`` encodes per-qubit signs with qubit 1 as the most
    significant bit; a set bit selects ``+w_n``.
    """
    n = ladder.n_qubits
    freqs = np.asarray(ladder.freqs, dtype=np.int64)
    patterns = np.arange(2**n, dtype=np.int64)
    bits = (patterns[:, None] >> np.arange(n - 1, -1, -1)[None, :]) & 1
    omegas = (2 * bits - 1) @ freqs
    return (omegas // ladder.fund) % m


def _axis_transform(cube: np.ndarray, mat: np.ndarray, n_qubits: int) -> np.ndarray:
    for axis in range(n_qubits):
        cube = np.moveaxis(
            np.tensordot(mat, cube, axes=([1], [axis])), 0, axis
        )
    return cube


def analyze(w: Waveform) -> CoefficientVector:
    """Project a waveform onto the product basis.

    Equals ``<H_j, w> / <H_j, H_j>`` for every index ``j`` (rectangle-rule
    inner products over the full period), evaluated as an FFT followed by one
    2x2 inverse rotation per qubit axis.  Requires a unique spectrum; with a
    redundant one the product basis is not orthogonal and no unambiguous
    amplitude assignment exists.
    """
    ladder = w.grid.ladder
    if not ladder.unique_spectrum:
        raise NonOrthogonalBasisError(
            "analysis requires a unique spectrum; this ladder has redundant "
            "or vanishing signed-sum frequencies"
        )
    n = ladder.n_qubits
    spec = np.fft.fft(w.samples) / w.grid.m
    cube = spec[_spectrum_bins(ladder, w.grid.m)].reshape([2] * n)
    cube = _axis_transform(cube, _SC_FROM_EXP, n)
    return CoefficientVector(n, cube.reshape(-1))


def synthesize(c: CoefficientVector, grid: SampleGrid) -> Waveform:
    """Waveform of ``sum_j amps[j] * H_j`` sampled on the grid."""
    ladder = grid.ladder
    if c.n_qubits != ladder.n_qubits:
        raise SizeError(
            f"coefficient vector has {c.n_qubits} qubits, grid has {ladder.n_qubits}"
        )
    n = ladder.n_qubits
    cube = _axis_transform(c.amps.reshape([2] * n), _EXP_FROM_SC, n)
    spec = np.zeros(grid.m, dtype=np.complex128)
    np.add.at(spec, _spectrum_bins(ladder, grid.m), cube.reshape(-1))
    return Waveform(grid, np.fft.ifft(spec) * grid.m)


def basis_matrix(grid: SampleGrid) -> np.ndarray:
    """All ``2^N`` product-basis functions as rows of a real matrix."""
    ladder = grid.ladder
    n = ladder.n_qubits
    t = grid.times
    rows = np.ones((1, grid.m))
    for f in ladder.freqs:
        pair = np.stack([np.sin(f * t), np.cos(f * t)])
        rows = (rows[:, None, :] * pair[None, :, :]).reshape(-1, grid.m)
    assert rows.shape[0] == 2**n
    return rows


def gram_matrix(
    ladder: FrequencyLadder, grid: SampleGrid, interval="full"
) -> np.ndarray:
    """Matrix of pairwise basis inner products over the chosen interval."""
    if ladder.n_qubits > 10:
        raise SizeError("gram_matrix supports at most 10 qubits")
    if ladder.freqs != grid.ladder.freqs:
        raise GridMismatchError("grid was built for a different ladder")
    n_t = _window_samples(grid, interval)
    rows = basis_matrix(grid)[:, :n_t]
    return (rows @ rows.T) * grid.dt
