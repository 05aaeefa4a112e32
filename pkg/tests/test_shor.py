import json
import math

import numpy as np
import pytest

import harmoniq as hq
from harmoniq.errors import SizeError
from harmoniq.shor import NotAmenableError


class TestRegisterSizes:
    def test_twenty_one(self):
        assert hq.register_sizes(21) == (9, 5)

    def test_fifteen(self):
        assert hq.register_sizes(15) == (8, 4)

    def test_even_shortcut(self):
        with pytest.raises(NotAmenableError) as err:
            hq.register_sizes(6)
        assert err.value.factor == 2

    def test_prime_shortcut(self):
        with pytest.raises(NotAmenableError) as err:
            hq.register_sizes(7)
        assert err.value.factor is None

    def test_too_small(self):
        with pytest.raises(SizeError):
            hq.register_sizes(2)


class TestModexp:
    def test_x_zero_carries_one(self):
        amps = hq.modexp_amplitudes(5, 5, 2, 21)
        assert amps[(0 << 5) | 1] != 0.0

    def test_period_six_returns_to_one(self):
        assert pow(2, 6, 21) == 1
        amps = hq.modexp_amplitudes(5, 5, 2, 21)
        assert amps[(6 << 5) | 1] != 0.0

    def test_second_register_support_is_orbit(self):
        amps = hq.modexp_amplitudes(5, 5, 2, 21)
        values = {j & 0b11111 for j in np.nonzero(amps)[0]}
        assert values == {1, 2, 4, 8, 16, 11}

    def test_normalized(self):
        amps = hq.modexp_amplitudes(5, 5, 2, 21)
        assert np.linalg.norm(amps) == pytest.approx(1.0)

    def test_register_too_small(self):
        with pytest.raises(SizeError):
            hq.modexp_amplitudes(5, 4, 2, 21)

    def test_waveform_entangles(self):
        _, grid = hq.build_ladder(10)
        psi = hq.modexp_entangle(grid, 2, 21)
        amps = hq.analyze(psi).amps
        nz = np.nonzero(np.abs(amps) > 1e-9)[0]
        assert len(nz) == 32
        for j in nz:
            x, v = j >> 5, j & 0b11111
            assert pow(2, int(x), 21) == v

    def test_conditional_support_after_measurement(self):
        # every surviving first-register value maps to the measured one
        _, grid = hq.build_ladder(10)
        psi = hq.modexp_entangle(grid, 2, 21)
        rng = np.random.default_rng(3)
        for q in range(6, 11):
            _, psi = hq.measure(psi, q, rng=rng)
        amps = hq.analyze(psi).amps.reshape(32, 32)
        v = int(np.abs(amps).sum(axis=0).argmax())
        for x in np.nonzero(np.abs(amps[:, v]) > 1e-8)[0]:
            assert pow(2, int(x), 21) == v


class TestFactorsFromPeriod:
    def test_canonical_case(self):
        assert hq.factors_from_period(2, 6, 21) == (3, 7)

    def test_fifteen(self):
        assert hq.factors_from_period(7, 4, 15) == (3, 5)

    def test_odd_period_retries(self):
        assert hq.factors_from_period(2, 3, 21) is None

    def test_self_inverse_retries(self):
        # a^{p/2} = -1 (mod N) yields only trivial divisors
        assert hq.factors_from_period(14, 2, 15) is None


class TestInferPeriod:
    def test_synthetic_peaks(self):
        probs = np.zeros(512)
        for k in range(8):
            probs[k * 64] = 1 / 8
        assert hq.infer_period(probs, 9, 21) == 8

    def test_zero_peak_alone_uninformative(self):
        probs = np.zeros(512)
        probs[0] = 1.0
        assert hq.infer_period(probs, 9, 21) is None

    def test_canonical_histogram(self):
        probs = np.zeros(512)
        for k, c in enumerate([0.0, 85.33, 170.67, 256.0, 341.33, 426.67]):
            lo = int(np.floor(c))
            probs[lo % 512] += 0.08
            probs[(lo + 1) % 512] += 0.08
        assert hq.infer_period(probs, 9, 21, a=2) == 6

    def test_modular_validation_rejects_half_period(self):
        # a peak exactly at half the range alone gives p=2, which fails a^p=1
        probs = np.zeros(512)
        probs[256] = 0.5
        probs[85] = 0.3
        assert hq.infer_period(probs, 9, 21, a=2) == 6


class TestRunSimplified:
    def test_factors_and_layout(self):
        report = hq.run_simplified(21, 2, seed=1)
        assert report.status == "ok"
        assert report.total_qubits == 10
        assert (report.n1, report.n2) == (5, 5)
        assert report.period == 6
        assert report.factors == (3, 7)

    def test_support_is_arithmetic_progression(self):
        report = hq.run_simplified(21, 2, seed=1)
        diffs = set(np.diff(report.support).tolist())
        assert diffs == {6}

    def test_support_heights_equal(self):
        report = hq.run_simplified(21, 2, seed=1)
        probs = np.asarray(report.histogram)
        heights = probs[report.support]
        spread = heights.max() - heights.min()
        assert spread < 1e-6 * heights.max()

    def test_measured_value_in_orbit(self):
        for seed in (0, 1, 2):
            report = hq.run_simplified(21, 2, seed=seed)
            assert report.second_register_value in {1, 2, 4, 8, 16, 11}

    def test_deterministic_given_seed(self):
        a = json.dumps(hq.run_simplified(21, 2, seed=9).to_dict())
        b = json.dumps(hq.run_simplified(21, 2, seed=9).to_dict())
        assert a == b


class TestRunShor:
    def test_factors_21(self):
        report = hq.run_shor(21, 2, seed=1, mode="qft")
        assert report.status == "ok"
        assert report.period == 6
        assert report.factors == (3, 7)
        assert report.total_qubits == 14

    def test_kappa_three_peak_at_256(self):
        report = hq.run_shor(21, 2, seed=1, mode="qft")
        probs = np.asarray(report.histogram)
        assert probs.argmax() in (0, 256)
        assert probs[256] == pytest.approx(probs[0], rel=1e-6)
        assert 256.0 in report.peak_centers

    def test_measured_value_in_orbit(self):
        report = hq.run_shor(21, 2, seed=1, mode="qft")
        assert report.second_register_value in {1, 2, 4, 8, 16, 11}

    def test_trivial_even(self):
        report = hq.run_shor(6, 5, seed=0)
        assert report.status == "trivial_even"
        assert report.factors == (2, 3)

    def test_prime_status(self):
        report = hq.run_shor(7, 2, seed=0)
        assert report.status == "prime"
        assert report.factors is None

    def test_non_coprime_base_rejected(self):
        with pytest.raises(SizeError):
            hq.run_shor(21, 6, seed=0)

    def test_mode_dispatch(self):
        report = hq.run_shor(21, 2, seed=1, mode="simplified")
        assert report.mode == "simplified"
        assert report.factors == (3, 7)


class TestModeAgreement:
    @pytest.mark.parametrize(
        "n,a,expected_p",
        [(21, 2, 6), (15, 2, 4), (15, 7, 4)],
    )
    def test_same_period_both_modes(self, n, a, expected_p):
        qft = hq.run_shor(n, a, seed=1, mode="qft")
        simple = hq.run_simplified(n, a, seed=1)
        assert qft.period == expected_p
        assert simple.period == expected_p
        assert qft.factors == simple.factors

    def test_order_divides_euler_phi(self):
        # sanity on the classical arithmetic behind the runs
        for n, a in [(21, 2), (15, 2), (15, 7)]:
            p = hq.run_simplified(n, a, seed=0).period
            assert pow(a, p, n) == 1
            assert math.gcd(a, n) == 1
