"""Test root-of-unity arithmetic and Gauss sums"""

from fractions import Fraction

import numpy as np
import pytest

from equifuse.arith import (
    EIGHTH_ROOT,
    Tolerance,
    gauss_sum,
    gauss_sum_reciprocal,
    q_power,
    quantum_integer,
    reciprocity_residual,
    ribbon_squared,
    root_of_unity,
    theta,
)
from equifuse.exceptions import InvalidParameter


class TestRootOfUnity:
    """Test q = exp(i pi / kappa) and its powers"""

    def test_root_of_unity(self):
        """Test q at kappa = 10"""
        assert root_of_unity(10) == pytest.approx(np.exp(1j * np.pi / 10), abs=1e-12)

    def test_power_is_periodic(self):
        """Test q^(2 kappa) = 1"""
        assert q_power(20, 10) == pytest.approx(1, abs=1e-12)
        assert q_power(-3, 10) == pytest.approx(q_power(17, 10), abs=1e-12)

    def test_half_integer_exponent(self):
        """Test a Fraction exponent"""
        expected = np.exp(1j * np.pi * 1.5 / 10)
        assert q_power(Fraction(3, 2), 10) == pytest.approx(expected, abs=1e-12)

    def test_kappa_must_be_at_least_three(self):
        """Test invalid kappa"""
        with pytest.raises(InvalidParameter):
            root_of_unity(2)


class TestQuantumInteger:
    """Test [n] = sin(n pi/kappa) / sin(pi/kappa)"""

    @pytest.mark.parametrize(
        "n, expected",
        [(1, 1.0), (2, 1.902113032590), (3, 2.618033988750), (5, 3.236067977500), (9, 1.0)],
    )
    def test_values_at_kappa_10(self, n, expected):
        """Test [n] at kappa = 10"""
        assert quantum_integer(n, 10) == pytest.approx(expected, abs=1e-9)

    def test_vanishes_at_kappa(self):
        """Test [kappa] = 0"""
        assert quantum_integer(10, 10) == pytest.approx(0, abs=1e-12)

    @pytest.mark.parametrize("kappa", [10, 18, 26])
    def test_reflection_symmetry(self, kappa):
        """Test [n] = [kappa - n] for 1 <= n <= kappa - 1"""
        for n in range(1, kappa):
            assert quantum_integer(n, kappa) == pytest.approx(
                quantum_integer(kappa - n, kappa), abs=1e-9
            )


class TestTwists:
    """Test the ribbon twists theta_i = q^(i(i+2)/2)"""

    def test_trivial_twist(self):
        """Test theta_0 = 1"""
        assert theta(0, 10) == pytest.approx(1, abs=1e-12)

    def test_theta_2(self):
        """Test theta_2 = q^4"""
        assert theta(2, 10) == pytest.approx(np.exp(4j * np.pi / 10), abs=1e-12)

    def test_theta_odd_is_half_integer_power(self):
        """Test theta_1 = q^(3/2)"""
        assert theta(1, 10) == pytest.approx(np.exp(1.5j * np.pi / 10), abs=1e-12)

    def test_out_of_range(self):
        """Test indices outside 0..delta"""
        with pytest.raises(InvalidParameter):
            theta(9, 10)

    @pytest.mark.parametrize("kappa", [10, 18, 26])
    def test_unit_modulus(self, kappa):
        """Test |theta_i| = 1 for every i in 0..kappa - 2"""
        for i in range(kappa - 1):
            assert abs(theta(i, kappa)) == pytest.approx(1, abs=1e-12)

    def test_ribbon_squared(self):
        """Test the double braiding scalar"""
        expected = theta(1, 10) / (theta(2, 10) * theta(3, 10))
        assert ribbon_squared(2, 3, 1, 10) == pytest.approx(expected, abs=1e-12)


class TestGaussSum:
    """Test direct and reciprocal Gauss sums"""

    def test_s_10_8(self):
        """Test S(10, 8) = -2 sqrt(2) (1 + i)"""
        expected = -2 * np.sqrt(2) * (1 + 1j)
        assert gauss_sum(10, 8) == pytest.approx(expected, abs=1e-9)

    def test_s_8_10(self):
        """Test S(8, 10) = -sqrt(20)"""
        assert gauss_sum(8, 10) == pytest.approx(-np.sqrt(20), abs=1e-9)

    def test_trivial_sum(self):
        """Test S(1, 1) = exp(i pi) = -1"""
        assert gauss_sum(1, 1) == pytest.approx(-1, abs=1e-12)

    @pytest.mark.parametrize("a, b", [(8, 10), (8, 18), (8, 26), (3, 4), (2, 7)])
    def test_reciprocity(self, a, b):
        """Test the reciprocity law against direct summation"""
        assert gauss_sum_reciprocal(a, b) == pytest.approx(gauss_sum(a, b), abs=1e-9)
        assert reciprocity_residual(a, b) < 1e-9

    def test_reciprocity_grid(self):
        """Test the reciprocity law for every a, b <= 64 with ab even"""
        worst = max(
            reciprocity_residual(a, b)
            for a in range(1, 65)
            for b in range(1, 65)
            if (a * b) % 2 == 0
        )
        assert worst < 1e-9

    def test_reciprocity_needs_even_product(self):
        """Test ab odd is rejected"""
        with pytest.raises(InvalidParameter):
            gauss_sum_reciprocal(3, 5)

    def test_b_must_be_positive(self):
        """Test b = 0"""
        with pytest.raises(InvalidParameter):
            gauss_sum(1, 0)

    def test_eighth_root(self):
        """Test (1 + i)/sqrt(2) is a primitive eighth root of unity"""
        assert EIGHTH_ROOT**8 == pytest.approx(1, abs=1e-12)
        assert EIGHTH_ROOT**4 == pytest.approx(-1, abs=1e-12)


class TestTolerance:
    """Test the tolerance config"""

    def test_default(self):
        """Test the default eps"""
        assert Tolerance().eps == 1e-9

    def test_must_be_positive(self):
        """Test a zero tolerance is rejected"""
        with pytest.raises(InvalidParameter):
            Tolerance(0)
