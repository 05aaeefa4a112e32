"""Textual output formats: CSV for series and histograms, JSON for reports.

Every writer is a pure function of its inputs (no timestamps, fixed key
order, shortest round-trip float formatting), so identical inputs produce
byte-identical files.
"""

from __future__ import annotations

import json

import numpy as np

from .measure import histogram_array
from .truncation import TruncationSeries
from .waveform import CoefficientVector, Waveform


def _fmt(x: float) -> str:
    return repr(float(x))


def write_waveform_csv(w: Waveform, path) -> None:
    """Columns: index, t, re, im."""
    t = w.grid.times
    with open(path, "w", newline="\n") as fh:
        fh.write("index,t,re,im\n")
        for i, (ti, s) in enumerate(zip(t, w.samples)):
            fh.write(f"{i},{_fmt(ti)},{_fmt(s.real)},{_fmt(s.imag)}\n")


def write_coefficients_json(c: CoefficientVector, path) -> None:
    """Map bitstring -> [re, im] over the full index space."""
    payload = {
        format(j, f"0{c.n_qubits}b"): [float(a.real), float(a.imag)]
        for j, a in enumerate(c.amps)
    }
    with open(path, "w", newline="\n") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def write_histogram_csv(hist: dict[str, float], path) -> None:
    """Columns: bitstring, value, probability."""
    with open(path, "w", newline="\n") as fh:
        fh.write("bitstring,value,probability\n")
        for bits in sorted(hist, key=lambda b: int(b, 2)):
            fh.write(f"{bits},{int(bits, 2)},{_fmt(hist[bits])}\n")


def write_histogram_json(hist: dict[str, float], path) -> None:
    payload = {bits: float(hist[bits]) for bits in sorted(hist, key=lambda b: int(b, 2))}
    with open(path, "w", newline="\n") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def write_outcome_csv(probs, path) -> None:
    """Columns: x, probability (integer-indexed register distribution)."""
    probs = np.asarray(probs, dtype=float)
    with open(path, "w", newline="\n") as fh:
        fh.write("x,probability\n")
        for x, p in enumerate(probs):
            fh.write(f"{x},{_fmt(p)}\n")


def write_truncation_csv(series_list: list[TruncationSeries], path) -> None:
    """Columns: ne, tau_over_full, value; NaN points are skipped."""
    with open(path, "w", newline="\n") as fh:
        fh.write("ne,tau_over_full,value\n")
        for series in series_list:
            for tau, value in zip(series.taus, series.values):
                if not np.isfinite(value):
                    continue
                fh.write(
                    f"{series.n_entangled},{_fmt(tau / series.full_interval)},{_fmt(value)}\n"
                )


def write_report_json(report: dict, path) -> None:
    with open(path, "w", newline="\n") as fh:
        json.dump(report, fh, indent=2)
        fh.write("\n")


def histogram_csv_rows(hist: dict[str, float]):
    """(bitstring, value, probability) rows in value order, for display."""
    arr = histogram_array(hist)
    k = len(next(iter(hist)))
    return [(format(v, f"0{k}b"), v, float(p)) for v, p in enumerate(arr)]
