"""Frequency ladders, sample grids, and the Fourier structure of product states.

Qubit ``n`` (1-based) is carried by the harmonic pair ``sin(w_n t)`` /
``cos(w_n t)``.  All frequencies are exact integers in units of the register's
fundamental rate, so gcd arithmetic, spectrum uniqueness, and periodicity are
integer computations rather than floating-point ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import SizeError

MAX_QUBITS = 20

#: basis labels: bit 0 of an index is the sine branch, bit 1 the cosine branch
SIN, COS = "sin", "cos"


@dataclass(frozen=True)
class FrequencyLadder:
    """Integer qubit frequencies plus their derived spectrum facts.

    ``freqs[n-1]`` is the frequency of qubit ``n``.  ``fund`` is the gcd of
    all frequencies (the fundamental), ``omega_max`` their sum (the largest
    Fourier frequency any product state can contain), and ``unique_spectrum``
    records whether all ``2^(N-1)`` signed frequency sums are distinct and
    nonzero, which is what makes the product basis orthogonal.
    """

    n_qubits: int
    freqs: tuple[int, ...]
    fund: int
    omega_max: int
    unique_spectrum: bool

    def frequency(self, n: int) -> int:
        """Frequency of qubit ``n`` (1-based)."""
        if not 1 <= n <= self.n_qubits:
            raise SizeError(f"qubit index {n} out of range 1..{self.n_qubits}")
        return self.freqs[n - 1]


@dataclass(frozen=True)
class FourierSpectrum:
    """The signed-sum frequencies of a ladder with the first sign fixed +1.

    ``components`` holds ``2^(N-1)`` pairs ``(Omega, signs)``; ``multiplicities``
    counts occurrences of each ``|Omega|``.  A multiplicity above one (or a
    zero frequency) marks a redundant, non-orthogonal ladder.
    """

    components: tuple[tuple[int, tuple[int, ...]], ...]
    multiplicities: dict[int, int]


@dataclass(frozen=True, eq=False)
class SampleGrid:
    """Uniform grid of ``m`` samples over one full period ``2*pi/fund``.

    ``m`` is a power of two exceeding twice the largest integrand frequency
    ``2*omega_max`` (times ``oversample/2``), which makes the rectangle rule
    an exact quadrature for every trigonometric polynomial this package
    integrates over full or half periods.
    """

    ladder: FrequencyLadder
    m: int
    oversample: int

    def __post_init__(self):
        t = np.arange(self.m) * (self.period / self.m)
        t.flags.writeable = False
        object.__setattr__(self, "_times", t)

    @property
    def period(self) -> float:
        return 2.0 * np.pi / self.ladder.fund

    @property
    def dt(self) -> float:
        return self.period / self.m

    @property
    def times(self) -> np.ndarray:
        return self._times

    def compatible_with(self, other: "SampleGrid") -> bool:
        return self.ladder.freqs == other.ladder.freqs and self.m == other.m


def _signed_sums(freqs: tuple[int, ...]) -> np.ndarray:
    """All 2^(N-1) signed sums with the first sign fixed +1."""
    n = len(freqs)
    if n == 1:
        return np.array([freqs[0]], dtype=np.int64)
    rest = np.asarray(freqs[1:], dtype=np.int64)
    patterns = np.arange(2 ** (n - 1), dtype=np.int64)
    # bit n-2-i of the pattern selects the sign of freqs[i+1]; bit set = +1
    bits = (patterns[:, None] >> np.arange(n - 2, -1, -1)[None, :]) & 1
    signs = 2 * bits - 1
    return freqs[0] + signs @ rest


def _spectrum_is_unique(freqs: tuple[int, ...]) -> bool:
    sums = np.abs(_signed_sums(freqs))
    if np.any(sums == 0):
        return False
    return len(np.unique(sums)) == len(sums)


def _grid_samples(omega_max: int, fund: int, oversample: int) -> int:
    target = 2 * (2 * omega_max) // fund
    m = 1
    while m <= target:
        m *= 2
    return m * (oversample // 2)


def _validate_oversample(oversample: int) -> None:
    if oversample < 2 or oversample & (oversample - 1):
        raise SizeError(f"oversample must be a power of two >= 2, got {oversample}")


def _make_ladder(freqs: tuple[int, ...]) -> FrequencyLadder:
    fund = math.gcd(*freqs) if len(freqs) > 1 else freqs[0]
    return FrequencyLadder(
        n_qubits=len(freqs),
        freqs=freqs,
        fund=fund,
        omega_max=sum(freqs),
        unique_spectrum=_spectrum_is_unique(freqs),
    )


def build_ladder(n_qubits: int, oversample: int = 2) -> tuple[FrequencyLadder, SampleGrid]:
    """Standard octave ladder: qubit ``n`` gets frequency ``2^(N-n)``.

    Successive halving guarantees a unique spectrum, a fundamental of 1, and
    therefore an orthogonal product basis.
    """
    if not 1 <= n_qubits <= MAX_QUBITS:
        raise SizeError(f"n_qubits must be in 1..{MAX_QUBITS}, got {n_qubits}")
    _validate_oversample(oversample)
    freqs = tuple(2 ** (n_qubits - n) for n in range(1, n_qubits + 1))
    ladder = _make_ladder(freqs)
    grid = SampleGrid(ladder, _grid_samples(ladder.omega_max, ladder.fund, oversample), oversample)
    return ladder, grid


def build_custom_ladder(
    freqs: list[int] | tuple[int, ...], oversample: int = 2
) -> tuple[FrequencyLadder, SampleGrid]:
    """Ladder with caller-chosen positive integer frequencies.

    The spectrum may be redundant (repeated or vanishing signed sums); the
    ladder then stays usable for synthesis and Gram-matrix studies but is
    rejected by analysis and addressing operations.
    """
    freqs = tuple(int(f) for f in freqs)
    if not freqs:
        raise SizeError("frequency list must be nonempty")
    if len(freqs) > MAX_QUBITS:
        raise SizeError(f"at most {MAX_QUBITS} qubits supported, got {len(freqs)}")
    if any(f < 1 for f in freqs):
        raise SizeError(f"frequencies must be positive integers, got {freqs}")
    _validate_oversample(oversample)
    ladder = _make_ladder(freqs)
    grid = SampleGrid(ladder, _grid_samples(ladder.omega_max, ladder.fund, oversample), oversample)
    return ladder, grid


def fourier_spectrum(ladder: FrequencyLadder) -> FourierSpectrum:
    """Enumerate the ladder's signed-sum frequencies (first sign fixed +1)."""
    n = ladder.n_qubits
    components = []
    multiplicities: dict[int, int] = {}
    for pattern in range(2 ** (n - 1)):
        signs = (1,) + tuple(
            1 if (pattern >> (n - 2 - i)) & 1 else -1 for i in range(n - 1)
        )
        omega = sum(s * f for s, f in zip(signs, ladder.freqs))
        components.append((omega, signs))
        multiplicities[abs(omega)] = multiplicities.get(abs(omega), 0) + 1
    return FourierSpectrum(tuple(components), multiplicities)


def index_bits(j: int, n_qubits: int) -> tuple[int, ...]:
    """Per-qubit bits of basis index ``j``; qubit 1 is the most significant."""
    return tuple((j >> (n_qubits - n)) & 1 for n in range(1, n_qubits + 1))


def bits_to_index(bits) -> int:
    j = 0
    for b in bits:
        j = (j << 1) | (1 if b else 0)
    return j


def index_to_bitstring(j: int, n_qubits: int) -> str:
    return format(j, f"0{n_qubits}b")


def appendix_expansion(
    j: int, ladder: FrequencyLadder
) -> list[tuple[int, str, Fraction]]:
    """Exact harmonic decomposition of product-basis function ``j``.

    Expanding each sin/cos factor into complex exponentials and pairing
    conjugate sign patterns leaves ``2^(N-1)`` components, each a single sine
    or cosine at a signed-sum frequency with coefficient ``+-1/2^(N-1)``.
    Components sharing a frequency (redundant ladders) are merged by summing
    coefficients.  Returns ``(Omega, kind, coefficient)`` sorted by descending
    frequency; entries that cancel exactly are dropped.
    """
    n = ladder.n_qubits
    if n > 10:
        raise SizeError("appendix_expansion supports at most 10 qubits")
    bits = index_bits(j, n)
    n_sin = bits.count(0)
    kind = COS if n_sin % 2 == 0 else SIN
    parity = 1 if n_sin % 4 in (0, 1) else -1
    base = Fraction(1, 2 ** (n - 1))
    merged: dict[tuple[int, str], Fraction] = {}
    for pattern in range(2 ** (n - 1)):
        signs = (1,) + tuple(
            1 if (pattern >> (n - 2 - i)) & 1 else -1 for i in range(n - 1)
        )
        omega = sum(s * f for s, f in zip(signs, ladder.freqs))
        sign_product = 1
        for s, b in zip(signs, bits):
            if b == 0:
                sign_product *= s
        coeff = base * parity * sign_product
        if omega < 0:
            # canonicalize: cos is even, sin is odd
            omega = -omega
            if kind == SIN:
                coeff = -coeff
        key = (omega, kind)
        merged[key] = merged.get(key, Fraction(0)) + coeff
    out = [(om, kd, c) for (om, kd), c in merged.items() if c != 0]
    out.sort(key=lambda item: -item[0])
    return out


def expansion_inner_product(
    e1: list[tuple[int, str, Fraction]],
    e2: list[tuple[int, str, Fraction]],
    fund: int,
) -> float:
    """Full-period inner product of two expansions, computed formally.

    Each unit component integrates to ``pi/fund`` against itself (``2*pi/fund``
    for the zero-frequency cosine, zero for the zero-frequency sine), and
    distinct components are orthogonal, so the inner product is a weighted
    dot product of matching coefficients.
    """
    lookup = {(om, kd): c for om, kd, c in e2}
    total = Fraction(0)
    for om, kd, c in e1:
        other = lookup.get((om, kd))
        if other is None:
            continue
        if om == 0:
            if kd == SIN:
                continue
            total += c * other * 2
        else:
            total += c * other
    return float(total) * np.pi / fund
