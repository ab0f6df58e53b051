import math
from math import comb

import numpy as np
import pytest

from dickeprep.krawtchouk import abs_column_sum, matrix
from dickeprep.symfunc import (
    SymmetricBooleanFunction,
    c_of_n,
    c_profile,
    optimal_function,
    reduced_walsh_spectrum,
    spectrum_value,
)


def naive_walsh(f, omega):
    """W_f(omega) straight from the definition, one point."""
    table = [f.bits[bin(x).count("1")] for x in range(1 << f.n)]
    return sum(
        (-1) ** (table[x] ^ (bin(x & omega).count("1") % 2)) for x in range(1 << f.n)
    )


def full_walsh_by_weight(f):
    """Brute-force oracle: expand the truth table over all 2^n inputs, run the
    full 2^n-point transform (butterfly), and check the spectrum really is
    constant on each weight class before grouping."""
    n = f.n
    a = np.array([(-1) ** f.bits[bin(x).count("1")] for x in range(1 << n)], dtype=np.int64)
    step = 1
    while step < a.size:
        block = a.reshape(-1, 2, step)
        a = np.stack([block[:, 0, :] + block[:, 1, :], block[:, 0, :] - block[:, 1, :]], axis=1)
        a = a.reshape(-1)
        step *= 2
    wt = np.array([bin(x).count("1") for x in range(1 << n)])
    by_weight = []
    for k in range(n + 1):
        cls = a[wt == k]
        assert np.all(cls == cls[0]), "spectrum not constant on a weight class"
        by_weight.append(int(cls[0]))
    return by_weight


def test_walsh_oracle_matches_definition():
    rng = np.random.default_rng(3)
    for n in range(1, 7):
        f = SymmetricBooleanFunction.from_value(n, int(rng.integers(0, 1 << (n + 1))))
        grouped = full_walsh_by_weight(f)
        for omega in range(1 << n):
            assert naive_walsh(f, omega) == grouped[bin(omega).count("1")]


class TestSymmetricBooleanFunction:
    def test_validation(self):
        with pytest.raises(ValueError):
            SymmetricBooleanFunction(n=3, bits=(0, 1, 0))
        with pytest.raises(ValueError):
            SymmetricBooleanFunction(n=2, bits=(0, 2, 0))

    def test_hex_convention(self):
        # bit string f_n ... f_1 f_0 read as an unsigned integer
        f = SymmetricBooleanFunction.from_hex(4, "02")
        assert f.bits == (0, 1, 0, 0, 0)
        assert SymmetricBooleanFunction(n=6, bits=(0, 0, 1, 1, 1, 0, 0)).to_hex() == "1C"
        assert SymmetricBooleanFunction.from_hex(4, "0").to_hex() == "0"

    def test_hex_round_trip(self):
        for n in range(0, 7):
            for value in range(1 << (n + 1)):
                f = SymmetricBooleanFunction.from_value(n, value)
                assert SymmetricBooleanFunction.from_hex(n, f.to_hex()) == f
        rng = np.random.default_rng(11)
        for _ in range(200):
            n = int(rng.integers(1, 40))
            f = SymmetricBooleanFunction.from_value(n, int(rng.integers(0, 1 << (n + 1))))
            assert SymmetricBooleanFunction.from_hex(n, f.to_hex()) == f

    def test_from_value_range(self):
        with pytest.raises(ValueError):
            SymmetricBooleanFunction.from_value(3, 16)
        with pytest.raises(ValueError):
            SymmetricBooleanFunction.from_hex(3, "-1")


class TestSpectrum:
    def test_worked_example(self):
        f = SymmetricBooleanFunction(n=6, bits=(0, 0, 1, 1, 1, 0, 0))
        assert reduced_walsh_spectrum(f).values[2] == 12

    def test_constant_function(self):
        for n in (1, 4, 9):
            f = SymmetricBooleanFunction(n=n, bits=(0,) * (n + 1))
            values = reduced_walsh_spectrum(f).values
            assert values[0] == 2**n
            assert all(v == 0 for v in values[1:])

    def test_against_full_transform(self):
        cases = [SymmetricBooleanFunction(n=4, bits=(0, 1, 0, 0, 1))]
        rng = np.random.default_rng(5)
        for n in range(1, 13):
            cases.append(SymmetricBooleanFunction.from_value(n, int(rng.integers(0, 1 << (n + 1)))))
        for f in cases:
            assert list(reduced_walsh_spectrum(f).values) == full_walsh_by_weight(f)

    def test_parseval_random(self):
        rng = np.random.default_rng(23)
        for n in range(1, 17):
            kmat = np.array(matrix(n).entries, dtype=np.int64)  # |K| <= C(16,8)
            values = rng.integers(0, 1 << (n + 1), size=1000)
            bits = (values[:, None] >> np.arange(n + 1)[None, :]) & 1
            signs = (1 - 2 * bits).astype(np.int64)
            rw = signs @ kmat  # (1000, n+1)
            weights = np.array([comb(n, k) for k in range(n + 1)], dtype=np.int64)
            parseval = (weights[None, :] * rw * rw).sum(axis=1)
            assert np.all(parseval == 1 << (2 * n))


class TestOptimalFunction:
    def test_worked_example(self):
        assert optimal_function(6, 2).bits == (0, 0, 1, 1, 1, 0, 0)

    def test_trivial_weights(self):
        for n in (1, 5, 10):
            f = optimal_function(n, 0)
            assert f.bits == (0,) * (n + 1)
            assert spectrum_value(f, 0) == 2**n

    def test_peak_equals_abs_column_sum(self):
        for n in range(1, 30):
            for w in range(n + 1):
                f = optimal_function(n, w)
                assert spectrum_value(f, w) == abs_column_sum(w, n)

    def test_free_entries_at_zeros(self):
        # column 3 of the n=6 matrix vanishes at odd degrees; those f_i stay 0
        f = optimal_function(6, 3)
        assert spectrum_value(f, 3) == 8
        assert f.bits[1] == f.bits[3] == f.bits[5] == 0
        # exhaustive oracle: no symmetric function beats the sign rule
        best = max(
            abs(spectrum_value(SymmetricBooleanFunction.from_value(6, v), 3))
            for v in range(1 << 7)
        )
        assert best == 8

    def test_optimality_exhaustive(self):
        for n in range(1, 11):
            kmat = np.array(matrix(n).entries, dtype=np.int64)
            values = np.arange(1 << (n + 1))
            bits = (values[:, None] >> np.arange(n + 1)[None, :]) & 1
            signs = (1 - 2 * bits).astype(np.int64)
            rw = signs @ kmat
            for w in range(n + 1):
                assert int(np.abs(rw[:, w]).max()) == abs_column_sum(w, n)

    def test_domain_error(self):
        with pytest.raises(ValueError, match="w="):
            optimal_function(5, 6)


class TestCofN:
    def test_trivial(self):
        assert c_of_n(1) == 1.0

    def test_small_values(self):
        # frozen from exact integer ratios
        assert c_of_n(2) == pytest.approx(math.sqrt(2) / 2, abs=1e-15)
        assert c_of_n(4) == pytest.approx(0.75, abs=1e-15)

    def test_profile_mirror(self):
        for n in (3, 8, 13):
            prof = c_profile(n)
            assert len(prof) == n + 1
            assert prof == prof[::-1]

    def test_domain(self):
        with pytest.raises(ValueError, match="n="):
            c_of_n(0)

    def test_profile_term(self):
        n, w = 6, 2
        s = abs_column_sum(w, n)
        expected = comb(n, w) * s * s / 4**n * math.sqrt(n)
        assert c_profile(n)[w] == pytest.approx(expected, rel=1e-15)
