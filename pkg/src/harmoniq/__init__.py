"""Simulator of quantum computation over harmonic-waveform qubit registers.

An N-qubit register is a single complex waveform sampled over one fundamental
period; each qubit owns a frequency, gates address qubits through projector
inner products, and measurement reads branch powers.  A dense state-vector
oracle, a factoring pipeline, and truncation-cost studies are included.
"""

from . import _kernels
from .addressing import (
    AddressedPair,
    GeneratorKernel,
    address_direct,
    address_fast,
    address_truncated,
    generator_kernel,
    recombine,
)
from .errors import (
    CircuitError,
    CircuitSyntaxError,
    GateError,
    GridMismatchError,
    HarmoniqError,
    NonOrthogonalBasisError,
    NullStateError,
    ProtocolError,
    SizeError,
)
from .gates import (
    HADAMARD,
    IDENTITY,
    NOT,
    Circuit,
    CircuitOp,
    Unitary2,
    apply_controlled,
    apply_single,
    build_qft,
    cnot_op,
    controlled_op,
    hadamard_op,
    measure_op,
    parse_circuit,
    phase_op,
    phase_unitary,
    qft_output_order,
    random_circuit,
    remove_op,
    run_circuit,
    unitary_op,
)
from .measure import (
    MeasurementRecord,
    histogram,
    histogram_array,
    measure,
    probabilities,
    remove_qubit,
)
from .oracle import (
    DenseState,
    assert_equivalent,
    dense_apply,
    dense_measure,
    dense_probabilities,
    dense_remove,
    dense_run_circuit,
    qft_matrix,
    run_differential_suite,
)
from .shor import (
    ShorReport,
    factors_from_period,
    infer_period,
    modexp_amplitudes,
    modexp_entangle,
    register_sizes,
    run_shor,
    run_simplified,
)
from .spectral import (
    COS,
    SIN,
    FourierSpectrum,
    FrequencyLadder,
    SampleGrid,
    appendix_expansion,
    bits_to_index,
    build_custom_ladder,
    build_ladder,
    expansion_inner_product,
    fourier_spectrum,
    index_bits,
    index_to_bitstring,
)
from .truncation import (
    TruncationSeries,
    delta_curve,
    ghz_like_state,
    knee,
    knee_in_common_units,
    ratio_curve,
)
from .waveform import (
    CoefficientVector,
    Waveform,
    analyze,
    basis_matrix,
    basis_waveform,
    gram_matrix,
    inner_product,
    product_basis_waveform,
    synthesize,
    waveform_norm_squared,
)

kernel_backend = _kernels.backend_name

__version__ = "0.1.0"
