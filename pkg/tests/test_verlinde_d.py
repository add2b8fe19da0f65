"""Test the Verlinde algebra of rep U_q(sl2)"""

import itertools

import numpy as np
import pytest

from equifuse.exceptions import InvalidParameter, ResidualError
from equifuse.utils import symmetry_residual, unitarity_residual
from equifuse.verlinde_d import (
    ModularDataD,
    dimension_s_residual,
    dual,
    fusion_coeff_n,
    n_associativity_residual,
    n_closed_form,
    normalization,
    qdim,
    recover_integer,
    s_from_twists,
    s_matrix_d,
    sl2_relation_residual,
    verlinde_coeff,
    verlinde_residual,
    verlinde_value,
)


class TestFusionRules:
    """Test the closed-form Clebsch-Gordan rule"""

    def test_chi2_chi3(self):
        """Test chi_2 x chi_3 = chi_1 + chi_3 + chi_5 at delta = 8"""
        row = [n_closed_form(2, 3, k, 8) for k in range(9)]
        assert row == [0, 1, 0, 1, 0, 1, 0, 0, 0]

    def test_truncation(self):
        """Test the level truncation k <= 2 delta - (i + j)"""
        assert n_closed_form(7, 7, 2, 8) == 1
        assert n_closed_form(7, 7, 4, 8) == 0

    def test_unit_and_duality(self, d10):
        """Test N^k_0j = delta_jk and N^0_ij = delta_ij"""
        identity = np.eye(d10.rank, dtype=int)
        assert np.array_equal(d10.n_tensor[0], identity)
        assert np.array_equal(d10.n_tensor[:, :, 0], identity)
        assert all(dual(i) == i for i in range(d10.rank))

    def test_fusion_coeff_lookup(self, d10):
        """Test fusion_coeff_n lookups"""
        assert fusion_coeff_n(2, 3, 5, d10) == 1
        assert fusion_coeff_n(2, 3, 4, d10) == 0

    def test_index_out_of_range(self, d10):
        """Test indices outside 0..delta"""
        with pytest.raises(InvalidParameter):
            fusion_coeff_n(9, 0, 0, d10)


class TestModularData:
    """Test s, t, dimensions and the normalization"""

    def test_build_rejects_small_kappa(self):
        """Test kappa < 3"""
        with pytest.raises(InvalidParameter):
            ModularDataD.build(2)

    def test_for_m(self):
        """Test the kappa = 4m + 2 shortcut"""
        data = ModularDataD.for_m(2)
        assert data.kappa == 10
        assert data.delta == 8
        assert data.rank == 9

    def test_s_entries(self, d10):
        """Test closed-form s entries"""
        assert s_matrix_d(0, 0, d10) == pytest.approx(0.138196601125, abs=1e-9)
        assert s_matrix_d(4, 1, d10) == pytest.approx(0, abs=1e-12)
        assert s_matrix_d(4, 4, d10) == pytest.approx(0.447213595500, abs=1e-9)

    def test_s_is_symmetric_unitary(self, d10, d18):
        """Test s is a real orthogonal symmetric matrix"""
        for data in (d10, d18):
            assert unitarity_residual(data.s) < 1e-9
            assert symmetry_residual(data.s) < 1e-9

    def test_dimensions(self, d10):
        """Test d_i = [i + 1]"""
        assert qdim(0, d10) == pytest.approx(1, abs=1e-12)
        assert qdim(1, d10) == pytest.approx(1.902113032590, abs=1e-9)
        assert qdim(8, d10) == pytest.approx(1, abs=1e-9)

    @pytest.mark.parametrize("kappa", [10, 18, 26])
    def test_dimensions_from_s(self, kappa):
        """Test d_i = s_0i / s_00 and D s_0i = d_i for every i"""
        data = ModularDataD.build(kappa)
        assert dimension_s_residual(data) < 1e-9
        np.testing.assert_allclose(data.dims, data.s[0] / data.s[0, 0], atol=1e-9)
        np.testing.assert_allclose(data.big_d * data.s[0], data.dims, atol=1e-9)

    @pytest.mark.parametrize("kappa", [10, 18, 26])
    def test_n_associativity(self, kappa):
        """Test sum_r N^r_ij N^l_rk = sum_r N^r_jk N^l_ir"""
        assert n_associativity_residual(ModularDataD.build(kappa)) == 0

    def test_n_associativity_detects_damage(self):
        """Test a corrupted fusion tensor gives a nonzero residual"""
        data = ModularDataD.build(10)
        damaged = data.n_tensor.copy()
        damaged[1, 1, 2] = 0
        broken = ModularDataD(
            kappa=10,
            n_tensor=damaged,
            s=data.s,
            twists=data.twists,
            dims=data.dims,
            p_plus=data.p_plus,
            p_minus=data.p_minus,
            big_d=data.big_d,
        )
        assert n_associativity_residual(broken) > 0

    def test_equality_is_identity(self, d10):
        """Test comparing modular data does not compare arrays elementwise"""
        assert d10 == d10
        assert ModularDataD.build(10) != ModularDataD.build(10)
        assert len({d10, d10}) == 1

    def test_global_dimension(self, d10):
        """Test D = 7.236068 at kappa = 10"""
        p_plus, p_minus, big_d = normalization(d10)
        assert big_d == pytest.approx(7.236067977500, abs=1e-9)
        assert abs(p_plus) == pytest.approx(big_d, abs=1e-9)
        assert p_minus == pytest.approx(np.conj(p_plus), abs=1e-9)

    def test_twists_diagonal(self, d10):
        """Test t = diag(theta)"""
        assert np.allclose(np.diag(d10.t), d10.twists)

    def test_modular_relation(self, d10, d18):
        """Test (st)^3 = (p+/D) s^2"""
        for data in (d10, d18):
            residual = sl2_relation_residual(data.s, data.twists, data.p_plus, data.big_d)
            assert residual < 1e-9

    def test_arrays_are_read_only(self, d10):
        """Test the built data cannot be mutated"""
        with pytest.raises(ValueError):
            d10.s[0, 0] = 1


class TestVerlindeFormula:
    """Test the classical Verlinde formula"""

    @pytest.mark.parametrize("kappa", [10, 18, 26])
    def test_reproduces_closed_form(self, kappa):
        """Test every triple against the closed form"""
        data = ModularDataD.build(kappa)
        assert verlinde_residual(data) < 1e-9

    def test_single_coefficients(self, d10):
        """Test chi_2 x chi_3 coefficients"""
        assert verlinde_coeff(2, 3, 3, d10) == pytest.approx(1, abs=1e-9)
        assert verlinde_coeff(2, 3, 4, d10) == pytest.approx(0, abs=1e-9)

    def test_all_triples_are_integers(self, d10):
        """Test verlinde_coeff never raises at kappa = 10"""
        for i, j, k in itertools.product(range(9), repeat=3):
            assert verlinde_coeff(i, j, k, d10) == pytest.approx(
                fusion_coeff_n(i, j, k, d10), abs=1e-9
            )

    def test_value_and_recovery(self, d10):
        """Test raw values and integer recovery"""
        assert recover_integer(verlinde_value(2, 3, 5, d10)) == 1
        assert recover_integer(1.5) is None


class TestSFromTwists:
    """Test the twist formula for s"""

    @pytest.mark.parametrize("i, j", [(0, 0), (1, 1), (2, 3), (4, 4), (8, 1)])
    def test_matches_closed_form(self, d10, i, j):
        """Test theta_i^-1 theta_j^-1 sum_k N theta_k d_k / D against s"""
        assert s_from_twists(i, j, d10) == pytest.approx(d10.s[i, j], abs=1e-9)


class TestResidualError:
    """Test integer recovery failures"""

    def test_non_integer_raises(self, mocker, d10):
        """Test verlinde_coeff raises when the sum is not an integer"""
        mocker.patch("equifuse.verlinde_d.verlinde_value", return_value=0.5)
        with pytest.raises(ResidualError):
            verlinde_coeff(2, 3, 3, d10)
