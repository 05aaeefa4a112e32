"""End-to-end period-finding factorization on the waveform simulator.

Two register layouts: the Fourier-transform route sizes the first register to
``ceil(log2 N^2)`` so the transform resolves the period uniquely, while the
simplified classical route reads the first register's full distribution
directly (no transform) and only needs ``ceil(log2 N)`` qubits per register.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import SizeError
from .gates import build_qft, hadamard_op, qft_output_order, run_circuit, Circuit
from .measure import histogram, histogram_array, measure, remove_qubit
from .spectral import COS, build_ladder
from .waveform import CoefficientVector, Waveform, synthesize


@dataclass
class ShorReport:
    n_to_factor: int
    base: int
    mode: str
    seed: int
    status: str
    n1: int = 0
    n2: int = 0
    total_qubits: int = 0
    second_register_value: int | None = None
    second_register_bits: str | None = None
    measurements: list = field(default_factory=list)
    histogram: list = field(default_factory=list)
    top_outcomes: list = field(default_factory=list)
    peak_centers: list = field(default_factory=list)
    support: list = field(default_factory=list)
    period: int | None = None
    factors: tuple[int, int] | None = None

    def to_dict(self) -> dict:
        return {
            "n": self.n_to_factor,
            "a": self.base,
            "mode": self.mode,
            "seed": self.seed,
            "status": self.status,
            "n1": self.n1,
            "n2": self.n2,
            "total_qubits": self.total_qubits,
            "second_register_value": self.second_register_value,
            "second_register_bits": self.second_register_bits,
            "measurements": [
                {
                    "qubit": rec.qubit,
                    "p_sin": rec.p_sin,
                    "p_cos": rec.p_cos,
                    "outcome": rec.outcome,
                    "mode": rec.mode,
                }
                for rec in self.measurements
            ],
            "top_outcomes": [[int(x), float(p)] for x, p in self.top_outcomes],
            "peak_centers": [float(c) for c in self.peak_centers],
            "support": [int(x) for x in self.support],
            "period": self.period,
            "factors": list(self.factors) if self.factors else None,
        }


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in range(2, int(math.isqrt(n)) + 1):
        if n % p == 0:
            return False
    return True


class NotAmenableError(SizeError):
    """The modulus has a classical shortcut; carries the trivial factor."""

    def __init__(self, reason: str, factor: int | None = None):
        self.reason = reason
        self.factor = factor
        super().__init__(reason)


def register_sizes(n_to_factor: int) -> tuple[int, int]:
    """Minimum register widths: ``ceil(log2 N^2)`` and ``ceil(log2 N)``."""
    if n_to_factor < 3:
        raise SizeError(f"modulus must be >= 3, got {n_to_factor}")
    if n_to_factor % 2 == 0:
        raise NotAmenableError(f"{n_to_factor} is even", factor=2)
    if _is_prime(n_to_factor):
        raise NotAmenableError(f"{n_to_factor} is prime")
    n2 = (n_to_factor - 1).bit_length()
    n1 = (n_to_factor**2 - 1).bit_length()
    return n1, n2


def modexp_amplitudes(n1: int, n2: int, a: int, n_to_factor: int) -> np.ndarray:
    """Coefficient vector of ``sum_x |x>|a^x mod N>`` over both registers."""
    if n_to_factor >= 2**n2:
        raise SizeError(f"second register of {n2} qubits cannot hold {n_to_factor}")
    amps = np.zeros(2 ** (n1 + n2), dtype=np.complex128)
    count = 2**n1
    for x in range(count):
        value = pow(a, x, n_to_factor)
        amps[(x << n2) | value] = 1.0
    return amps / math.sqrt(count)


def modexp_entangle(grid, a: int, n_to_factor: int) -> Waveform:
    """Entangled post-arithmetic state sampled on the register grid."""
    total = grid.ladder.n_qubits
    n2 = (n_to_factor - 1).bit_length()
    n1 = total - n2
    if n1 < 1:
        raise SizeError(f"grid of {total} qubits too small for modulus {n_to_factor}")
    amps = modexp_amplitudes(n1, n2, a, n_to_factor)
    return synthesize(CoefficientVector(total, amps), grid)


def factors_from_period(a: int, p: int, n_to_factor: int) -> tuple[int, int] | None:
    """gcd(a^{p/2} +- 1, N) if the period is usable, else None (retry)."""
    if p % 2:
        return None
    half = pow(a, p // 2, n_to_factor)
    if half == n_to_factor - 1:  # a^{p/2} = -1 (mod N)
        return None
    f1 = math.gcd(half + 1, n_to_factor)
    f2 = math.gcd(half - 1, n_to_factor)
    found = sorted(f for f in (f1, f2) if 1 < f < n_to_factor)
    if not found:
        return None
    lo = found[0]
    return (lo, n_to_factor // lo)


def _convergent_denominators(x: int, m: int, bound: int) -> list[int]:
    """Denominators (<= bound) of the continued-fraction convergents of x/m."""
    out = []
    h_prev, h = 1, 0
    k_prev, k = 0, 1
    num, den = x, m
    while den:
        q = num // den
        num, den = den, num - q * den
        h_prev, h = h, q * h + h_prev
        k_prev, k = k, q * k + k_prev
        if k > bound:
            break
        if k > 1:
            out.append(k)
    return out


def infer_period(
    probs: np.ndarray, n1: int, n_to_factor: int, a: int | None = None
) -> int | None:
    """Recover the period from the first-register distribution.

    Each high-probability outcome ``x`` approximates ``kappa/p * 2^n1``;
    continued fractions of ``x / 2^n1`` yield candidate denominators, which
    are combined by least common multiple and validated against
    ``a^p = 1 (mod N)`` when the base is known, or against peak consistency
    otherwise.  Returns None if nothing validates.
    """
    m = 2**n1
    probs = np.asarray(probs, dtype=float)
    order = np.argsort(probs)[::-1]
    top = [int(x) for x in order[:12] if probs[x] > 1e-6 and x != 0]
    if not top:
        return None
    denominators: set[int] = set()
    for x in top:
        frac = Fraction(x, m).limit_denominator(n_to_factor)
        if frac.denominator > 1:
            denominators.add(frac.denominator)
        denominators.update(_convergent_denominators(x, m, n_to_factor))
    candidates = set(denominators)
    for d1 in denominators:
        for d2 in denominators:
            l = math.lcm(d1, d2)
            if l <= n_to_factor:
                candidates.add(l)

    def consistent(p: int) -> bool:
        spacing = m / p
        return all(
            min(abs(x - round(x / spacing) * spacing), m - abs(x - round(x / spacing) * spacing)) <= 1.0
            for x in top
        )

    for p in sorted(candidates):
        if a is not None:
            if pow(a, p, n_to_factor) == 1:
                return p
        elif consistent(p):
            return p
    return None


def _measure_second_register(psi, n1, n2, rng, order="msb"):
    """Sequential per-qubit max-rule measurement of register 2."""
    qubits = list(range(n1 + 1, n1 + n2 + 1))
    if order == "lsb":
        qubits = qubits[::-1]
    records = []
    for q in qubits:
        rec, psi = measure(psi, q, mode="max_rule", rng=rng)
        records.append(rec)
    bits = {rec.qubit: rec.outcome for rec in records}
    value = 0
    for q in range(n1 + 1, n1 + n2 + 1):
        value = (value << 1) | (1 if bits[q] == COS else 0)
    return psi, records, value


def _prepare_entangled(n1, n2, a, n_to_factor, oversample):
    """Hadamard the first register, then apply the arithmetic entangler.

    The modular-exponentiation gate is realized by direct synthesis of its
    output state; the Hadamard stage runs through the gate engine so the
    pipeline exercises real transforms at full register width.
    """
    _, grid = build_ladder(n1 + n2, oversample)
    zero = np.zeros(2 ** (n1 + n2), dtype=np.complex128)
    zero[0] = 1.0  # all qubits on the sine branch
    psi = synthesize(CoefficientVector(n1 + n2, zero), grid)
    prep = Circuit(n1 + n2, tuple(hadamard_op(q) for q in range(1, n1 + 1)))
    psi, _ = run_circuit(psi, prep)
    return modexp_entangle(grid, a, n_to_factor)


def _screen(n_to_factor: int, a: int, mode: str, seed: int) -> ShorReport | None:
    try:
        register_sizes(n_to_factor)
    except NotAmenableError as exc:
        factors = None
        if exc.factor:
            factors = (exc.factor, n_to_factor // exc.factor)
            status = "trivial_even"
        else:
            status = "prime"
        return ShorReport(
            n_to_factor, a, mode, seed, status=status, factors=factors
        )
    if math.gcd(a, n_to_factor) != 1:
        raise SizeError(
            f"base {a} shares factor {math.gcd(a, n_to_factor)} with {n_to_factor}"
        )
    return None


def run_shor(
    n_to_factor: int,
    a: int,
    seed: int = 0,
    mode: str = "qft",
    oversample: int = 2,
) -> ShorReport:
    """Full factoring run; ``mode`` selects the transform or simplified route."""
    if mode == "simplified":
        return run_simplified(n_to_factor, a, seed, oversample)
    if mode != "qft":
        raise ValueError(f"mode must be 'qft' or 'simplified', got {mode!r}")
    screened = _screen(n_to_factor, a, mode, seed)
    if screened:
        return screened
    n1, n2 = register_sizes(n_to_factor)
    report = ShorReport(
        n_to_factor, a, mode, seed, status="ok", n1=n1, n2=n2, total_qubits=n1 + n2
    )
    rng = np.random.default_rng(seed)
    psi = _prepare_entangled(n1, n2, a, n_to_factor, oversample)
    psi, records, value = _measure_second_register(psi, n1, n2, rng)
    report.measurements = records
    report.second_register_value = value
    report.second_register_bits = format(value, f"0{n2}b")
    outcome_of = {rec.qubit: rec.outcome for rec in records}
    for q in range(n1 + n2, n1, -1):
        psi = remove_qubit(psi, q, outcome_of[q])
    qft = build_qft(list(range(1, n1 + 1)))
    psi, _ = run_circuit(psi, qft)
    hist = histogram(psi, qft_output_order(range(1, n1 + 1)))
    probs = histogram_array(hist)
    report.histogram = probs.tolist()
    order = np.argsort(probs)[::-1][:12]
    report.top_outcomes = [(int(x), float(probs[x])) for x in order]
    period = infer_period(probs, n1, n_to_factor, a)
    if period is None:
        report.status = "inference_failed"
        return report
    report.period = period
    report.peak_centers = [k * (2**n1) / period for k in range(period)]
    factors = factors_from_period(a, period, n_to_factor)
    if factors is None:
        report.status = "retry"
    else:
        report.factors = factors
    return report


def run_simplified(
    n_to_factor: int, a: int, seed: int = 0, oversample: int = 2
) -> ShorReport:
    """No-transform variant: both registers sized ``ceil(log2 N)``.

    After the second-register measurement the first register's distribution
    is read in full; its support is an arithmetic progression whose spacing
    is the period.
    """
    screened = _screen(n_to_factor, a, "simplified", seed)
    if screened:
        return screened
    n2 = (n_to_factor - 1).bit_length()
    n1 = n2
    report = ShorReport(
        n_to_factor,
        a,
        "simplified",
        seed,
        status="ok",
        n1=n1,
        n2=n2,
        total_qubits=n1 + n2,
    )
    rng = np.random.default_rng(seed)
    psi = _prepare_entangled(n1, n2, a, n_to_factor, oversample)
    psi, records, value = _measure_second_register(psi, n1, n2, rng)
    report.measurements = records
    report.second_register_value = value
    report.second_register_bits = format(value, f"0{n2}b")
    outcome_of = {rec.qubit: rec.outcome for rec in records}
    for q in range(n1 + n2, n1, -1):
        psi = remove_qubit(psi, q, outcome_of[q])
    hist = histogram(psi, list(range(1, n1 + 1)))
    probs = histogram_array(hist)
    report.histogram = probs.tolist()
    support = [int(x) for x in np.nonzero(probs > probs.max() * 0.5)[0]]
    report.support = support
    order = np.argsort(probs)[::-1][: len(support)]
    report.top_outcomes = [(int(x), float(probs[x])) for x in sorted(order)]
    spacings = set(np.diff(support).tolist())
    if len(support) < 2 or len(spacings) != 1:
        report.status = "inference_failed"
        return report
    period = int(spacings.pop())
    if pow(a, period, n_to_factor) != 1:
        report.status = "inference_failed"
        return report
    report.period = period
    factors = factors_from_period(a, period, n_to_factor)
    if factors is None:
        report.status = "retry"
    else:
        report.factors = factors
    return report
