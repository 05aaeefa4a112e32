"""Per-qubit measurement, collapse, qubit removal, and register histograms.

Measurement probabilities come from the half-period integrals of the two
addressed coefficient functions.  The max-rule outcome is the branch with the
higher probability (ties broken by the supplied generator); born mode samples
the distribution.  Collapse replaces the measured qubit's factor with the
outcome basis function and renormalizes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .addressing import address_fast
from .errors import NullStateError, ProtocolError, SizeError
from .spectral import COS, SIN, build_custom_ladder
from .waveform import (
    CoefficientVector,
    Waveform,
    analyze,
    synthesize,
    waveform_norm_squared,
)

TIE_TOL = 1e-12


@dataclass(frozen=True)
class MeasurementRecord:
    qubit: int
    p_sin: float
    p_cos: float
    outcome: str
    mode: str


def probabilities(psi: Waveform, n: int) -> tuple[float, float]:
    """Normalized (p_sin, p_cos) for qubit ``n`` of the state."""
    pair = address_fast(psi, n)
    w_s = waveform_norm_squared(pair.f_s, "half")
    w_c = waveform_norm_squared(pair.f_c, "half")
    total = w_s + w_c
    if total <= 0.0 or not np.isfinite(total):
        raise NullStateError("cannot measure a zero-norm state")
    return w_s / total, w_c / total


def pick_outcome(p_sin: float, p_cos: float, mode: str, rng) -> str:
    """Shared outcome rule so waveform and oracle backends draw identically."""
    if mode == "max_rule":
        if abs(p_sin - p_cos) < TIE_TOL:
            return SIN if rng.random() < 0.5 else COS
        return SIN if p_sin > p_cos else COS
    if mode == "born":
        return SIN if rng.random() < p_sin else COS
    raise ValueError(f"mode must be 'max_rule' or 'born', got {mode!r}")


def _renormalized(psi: Waveform) -> Waveform:
    ladder = psi.grid.ladder
    basis_norm2 = (0.5**ladder.n_qubits) * psi.grid.period
    amp_norm2 = waveform_norm_squared(psi) / basis_norm2
    if amp_norm2 <= 0.0:
        raise NullStateError("state collapsed to zero norm")
    return Waveform(psi.grid, psi.samples / math.sqrt(amp_norm2))


def measure(
    psi: Waveform, n: int, mode: str = "max_rule", rng=None
) -> tuple[MeasurementRecord, Waveform]:
    """Measure qubit ``n``; returns the record and the collapsed state."""
    if rng is None:
        rng = np.random.default_rng()
    p_sin, p_cos = probabilities(psi, n)
    outcome = pick_outcome(p_sin, p_cos, mode, rng)
    pair = address_fast(psi, n)
    w_n = psi.grid.ladder.frequency(n)
    t = psi.grid.times
    if outcome == SIN:
        samples = pair.f_s.samples * np.sin(w_n * t)
    else:
        samples = pair.f_c.samples * np.cos(w_n * t)
    record = MeasurementRecord(n, p_sin, p_cos, outcome, mode)
    return record, _renormalized(Waveform(psi.grid, samples))


def remove_qubit(psi: Waveform, n: int, outcome: str, collapse_tol: float = 1e-8) -> Waveform:
    """Drop a collapsed qubit, rebuilding the state on the reduced ladder.

    The remaining frequencies are divided by their gcd and a fresh grid is
    built at the same oversample; the new coefficient vector is the
    (renormalized) slice of the old one at the outcome bit.  Removing a qubit
    that has not collapsed to ``outcome`` is a protocol violation.
    """
    ladder = psi.grid.ladder
    if ladder.n_qubits < 2:
        raise SizeError("cannot remove the last remaining qubit")
    if outcome not in (SIN, COS):
        raise ValueError(f"outcome must be 'sin' or 'cos', got {outcome!r}")
    p_sin, p_cos = probabilities(psi, n)
    residual = p_cos if outcome == SIN else p_sin
    if residual > collapse_tol:
        raise ProtocolError(
            f"qubit {n} still carries probability {residual:.3g} on the "
            f"other branch; measure before removing"
        )
    coeffs = analyze(psi)
    cube = coeffs.amps.reshape([2] * ladder.n_qubits)
    kept = np.take(cube, 1 if outcome == COS else 0, axis=n - 1).reshape(-1)
    norm = np.linalg.norm(kept)
    if norm == 0.0:
        raise NullStateError("conditional state has zero norm")
    kept = kept / norm
    reduced = [f for i, f in enumerate(ladder.freqs) if i != n - 1]
    g = math.gcd(*reduced) if len(reduced) > 1 else reduced[0]
    _, grid = build_custom_ladder([f // g for f in reduced], psi.grid.oversample)
    return synthesize(CoefficientVector(ladder.n_qubits - 1, kept), grid)


def histogram(psi: Waveform, qubits) -> dict[str, float]:
    """Joint outcome distribution marginalized onto ``qubits`` (listed order).

    Keys are bitstrings over the listed qubits, first listed = most
    significant, with 1 denoting the cosine branch.
    """
    qubits = list(qubits)
    ladder = psi.grid.ladder
    if len(set(qubits)) != len(qubits):
        raise SizeError(f"duplicate qubits in {qubits}")
    if any(q < 1 or q > ladder.n_qubits for q in qubits):
        raise SizeError(f"qubits {qubits} out of range for {ladder.n_qubits}")
    probs = np.abs(analyze(psi).amps.reshape([2] * ladder.n_qubits)) ** 2
    drop = tuple(ax for ax in range(ladder.n_qubits) if ax + 1 not in qubits)
    if drop:
        probs = probs.sum(axis=drop)
    kept_axes = [ax + 1 for ax in range(ladder.n_qubits) if ax + 1 in qubits]
    order = [kept_axes.index(q) for q in qubits]
    probs = np.transpose(probs, order).reshape(-1)
    k = len(qubits)
    return {format(v, f"0{k}b"): float(p) for v, p in enumerate(probs)}


def histogram_array(hist: dict[str, float]) -> np.ndarray:
    """Histogram dict as a probability array indexed by outcome value."""
    size = 2 ** len(next(iter(hist)))
    out = np.zeros(size)
    for bits, p in hist.items():
        out[int(bits, 2)] = p
    return out
