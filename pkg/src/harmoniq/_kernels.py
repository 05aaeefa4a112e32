"""Hot numeric kernels with a numba fast path and a pure-numpy fallback.

The one loop that dominates runtime is the windowed circular correlation

    out[k] = sum_{i < n_t} q[i] * kern[(i - k) mod m]

behind every direct and truncated addressing integral.  The default backend
compiles the literal double loop with numba; setting ``HARMONIQ_NUMBA=0`` (or
running without numba installed) switches to a numpy path that evaluates the
identical sum by masking ``q`` outside the window and correlating via FFT.
Full-period correlations are always FFT-based on both backends.
"""

from __future__ import annotations

import os

import numpy as np


def _flag_disabled() -> bool:
    return os.environ.get("HARMONIQ_NUMBA", "1").strip().lower() in (
        "0",
        "false",
        "no",
        "off",
    )


_direct_numba = None
if not _flag_disabled():
    try:
        import numba

        @numba.njit(
            "complex128[:](complex128[:], float64[:], int64)",
            parallel=True,
            cache=True,
        )
        def _direct_numba_impl(q, kern, n_t):  # pragma: no cover - compiled
            m = q.shape[0]
            out = np.empty(m, dtype=np.complex128)
            for k in numba.prange(m):
                acc = 0.0 + 0.0j
                for i in range(n_t):
                    acc += q[i] * kern[(i - k) % m]
                out[k] = acc
            return out

        _direct_numba = _direct_numba_impl
    except ImportError:  # pragma: no cover - numba is a declared dependency
        _direct_numba = None


def backend_name() -> str:
    return "numba" if _direct_numba is not None else "numpy"


def masked_fft_correlation(q: np.ndarray, kern: np.ndarray, n_t: int) -> np.ndarray:
    """Windowed correlation via FFT: algebraically the same sum as the loop."""
    qm = np.zeros_like(q, dtype=np.complex128)
    qm[:n_t] = q[:n_t]
    return np.fft.ifft(np.fft.fft(qm) * np.conj(np.fft.fft(kern)))


def windowed_correlation(q: np.ndarray, kern: np.ndarray, n_t: int) -> np.ndarray:
    """out[k] = sum_{i<n_t} q[i] * kern[(i-k) mod m] on the active backend."""
    q = np.ascontiguousarray(q, dtype=np.complex128)
    kern = np.ascontiguousarray(kern, dtype=np.float64)
    if not 0 <= n_t <= q.shape[0]:
        raise ValueError(f"window length {n_t} outside 0..{q.shape[0]}")
    if _direct_numba is not None:
        return _direct_numba(q, kern, np.int64(n_t))
    return masked_fft_correlation(q, kern, n_t)


def full_correlation(q: np.ndarray, kern: np.ndarray) -> np.ndarray:
    """Full-period circular correlation, FFT-based on every backend."""
    q = np.ascontiguousarray(q, dtype=np.complex128)
    kern = np.ascontiguousarray(kern, dtype=np.float64)
    return np.fft.ifft(np.fft.fft(q) * np.conj(np.fft.fft(kern)))
