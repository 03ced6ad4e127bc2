import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from magnomech import (Mode, ModePair, ParameterError, PhysicalityError,
                       ReducedCovariance, build_diffusion, build_drift,
                       entanglement_at, log_negativity, reduce_covariance,
                       solve_lyapunov, symplectic_eigenvalues,
                       thermal_occupations)
from magnomech.entanglement import EN_FLOOR

from conftest import OMEGA_1, entangling_params


def two_mode_squeezed(r):
    c, s = math.cosh(2.0 * r) / 2.0, math.sinh(2.0 * r) / 2.0
    return ReducedCovariance(b1=c * np.eye(2), b2=c * np.eye(2),
                             e=s * np.diag([1.0, -1.0]))


def thermal_product(n1, n2):
    return ReducedCovariance(b1=(2 * n1 + 1) / 2.0 * np.eye(2),
                             b2=(2 * n2 + 1) / 2.0 * np.eye(2),
                             e=np.zeros((2, 2)))


def rotation(theta):
    return np.array([[math.cos(theta), math.sin(theta)],
                     [-math.sin(theta), math.cos(theta)]])


def eta_minus_oracle(psi):
    """Generic route: minimum symplectic eigenvalue of the partial transpose."""
    flip = np.diag([1.0, 1.0, 1.0, -1.0])
    return float(symplectic_eigenvalues(flip @ psi.psi @ flip).min())


class TestModes:
    def test_block_slices(self):
        assert Mode.M1.block == slice(0, 2)
        assert Mode.MAGNON.block == slice(6, 8)

    @pytest.mark.parametrize("label,mode", [("m1", Mode.M1), ("M2", Mode.M2),
                                            (" cavity ", Mode.CAVITY),
                                            ("MAGNON", Mode.MAGNON)])
    def test_label_parsing(self, label, mode):
        assert Mode.from_label(label) is mode

    def test_unknown_label_rejected(self):
        with pytest.raises(ParameterError, match="unknown mode"):
            Mode.from_label("laser")

    def test_pair_must_be_distinct(self):
        with pytest.raises(ParameterError):
            ModePair(Mode.M1, Mode.M1)

    def test_pair_is_canonically_ordered(self):
        pair = ModePair(Mode.CAVITY, Mode.M1)
        assert (pair.first, pair.second) == (Mode.M1, Mode.CAVITY)
        assert pair == ModePair(Mode.M1, Mode.CAVITY)
        assert pair.labels() == ("m1", "cavity")

    def test_from_labels(self):
        assert ModePair.from_labels("magnon", "m2") \
            == ModePair(Mode.M2, Mode.MAGNON)


class TestReduce:
    def test_extracts_blocks(self):
        v = np.arange(64, dtype=float).reshape(8, 8)
        v = 0.5 * (v + v.T) + 10.0 * np.eye(8)
        psi = reduce_covariance(v, ModePair(Mode.M1, Mode.CAVITY))
        assert np.array_equal(psi.b1, v[0:2, 0:2])
        assert np.array_equal(psi.b2, v[4:6, 4:6])
        assert np.array_equal(psi.e, v[0:2, 4:6])

    def test_block_diagonal_covariance_has_zero_cross_block(self):
        v = np.diag([1.0, 1.0, 2.0, 2.0, 3.0, 3.0, 4.0, 4.0])
        psi = reduce_covariance(v, ModePair(Mode.M2, Mode.MAGNON))
        assert np.array_equal(psi.e, np.zeros((2, 2)))

    def test_pair_order_does_not_matter(self):
        p = entangling_params()
        v = solve_lyapunov(build_drift(p),
                           build_diffusion(p, thermal_occupations(p)))
        one = reduce_covariance(v, ModePair(Mode.M1, Mode.CAVITY))
        two = reduce_covariance(v, ModePair(Mode.CAVITY, Mode.M1))
        assert np.array_equal(one.psi, two.psi)

    def test_rejects_wrong_block_shape(self):
        with pytest.raises(ParameterError):
            ReducedCovariance(b1=np.eye(3), b2=np.eye(2), e=np.zeros((2, 2)))

    def test_rejects_asymmetric_local_block(self):
        b = np.array([[1.0, 0.2], [0.1, 1.0]])
        with pytest.raises(ParameterError):
            ReducedCovariance(b1=b, b2=np.eye(2), e=np.zeros((2, 2)))

    def test_rejects_sub_vacuum_local_block(self):
        with pytest.raises(PhysicalityError):
            ReducedCovariance(b1=0.1 * np.eye(2), b2=np.eye(2),
                              e=np.zeros((2, 2)))


class TestLogNegativity:
    def test_two_mode_vacuum(self):
        psi = thermal_product(0.0, 0.0)
        assert log_negativity(psi) == 0.0
        assert eta_minus_oracle(psi) == pytest.approx(0.5, rel=1e-12)

    @pytest.mark.parametrize("r", [0.1, 0.5, 1.0])
    def test_two_mode_squeezed_negativity_is_2r(self, r):
        assert log_negativity(two_mode_squeezed(r)) == pytest.approx(2.0 * r,
                                                                     abs=1e-9)

    @pytest.mark.parametrize("n", [0.0, 0.5, 5.0, 50.0])
    def test_thermal_product_is_separable(self, n):
        assert log_negativity(thermal_product(n, 2.0 * n + 0.1)) == 0.0

    def test_floor_reports_exact_zero(self):
        psi = two_mode_squeezed(1e-10)   # true E_N = 2e-10, below the floor
        assert log_negativity(psi) == 0.0

    @pytest.mark.parametrize("r", [0.1, 0.6, 1.3])
    def test_matches_partial_transpose_oracle(self, r):
        psi = two_mode_squeezed(r)
        eta = math.exp(-log_negativity(psi)) / 2.0
        assert eta == pytest.approx(eta_minus_oracle(psi), rel=1e-10)

    @given(r=st.floats(0.0, 1.5), theta1=st.floats(0.0, 2 * math.pi),
           theta2=st.floats(0.0, 2 * math.pi),
           n1=st.floats(0.0, 3.0), n2=st.floats(0.0, 3.0))
    @settings(max_examples=60)
    def test_random_states_match_oracle(self, r, theta1, theta2, n1, n2):
        # physical two-mode state: thermal core, two-mode squeezer, local
        # rotations, all applied as congruences
        core = np.diag([2 * n1 + 1.0, 2 * n1 + 1.0,
                        2 * n2 + 1.0, 2 * n2 + 1.0]) / 2.0
        c, s = math.cosh(r), math.sinh(r)
        squeezer = np.array([[c, 0.0, s, 0.0],
                             [0.0, c, 0.0, -s],
                             [s, 0.0, c, 0.0],
                             [0.0, -s, 0.0, c]])
        local = np.zeros((4, 4))
        local[0:2, 0:2] = rotation(theta1)
        local[2:4, 2:4] = rotation(theta2)
        transform = local @ squeezer
        matrix = transform @ core @ transform.T
        psi = ReducedCovariance(b1=matrix[0:2, 0:2], b2=matrix[2:4, 2:4],
                                e=matrix[0:2, 2:4])
        en = log_negativity(psi)
        expected = max(0.0, -math.log(2.0 * eta_minus_oracle(psi)))
        assert en == pytest.approx(expected, abs=1e-10)

    @pytest.mark.parametrize("theta", [0.3, 1.2, 2.8])
    def test_local_rotation_invariance(self, theta):
        psi = two_mode_squeezed(0.8)
        rot = rotation(theta)
        rotated = ReducedCovariance(b1=rot @ psi.b1 @ rot.T, b2=psi.b2,
                                    e=rot @ psi.e)
        assert log_negativity(rotated) == pytest.approx(
            log_negativity(psi), abs=1e-10)

    def test_negative_determinant_rejected(self):
        psi = ReducedCovariance(b1=0.5 * np.eye(2), b2=0.5 * np.eye(2),
                                e=np.diag([5.0, 0.0]))
        with pytest.raises(PhysicalityError, match="determinant"):
            log_negativity(psi)

    def test_negative_discriminant_rejected(self):
        # symmetric matrix with det Psi > 0 whose partial transpose has a
        # complex symplectic spectrum (found by randomized search)
        matrix = np.array([[-1.8859, 0.3447, 0.5397, -1.1320],
                           [0.3447, -0.5748, -0.0492, 0.1055],
                           [0.5397, -0.0492, 2.3410, -1.0971],
                           [-1.1320, 0.1055, -1.0971, 1.1049]])
        psi = ReducedCovariance(b1=matrix[:2, :2], b2=matrix[2:, 2:],
                                e=matrix[:2, 2:])
        with pytest.raises(PhysicalityError, match="discriminant"):
            log_negativity(psi)


class TestEntanglementAt:
    def test_entangled_reference_point(self, mech_pair):
        point = entanglement_at(entangling_params(), mech_pair)
        assert point.stable
        assert point.margin < 0.0
        assert point.en > 0.25

    def test_pair_order_invariance(self, photon_mech_pair):
        p = entangling_params()
        one = entanglement_at(p, photon_mech_pair)
        two = entanglement_at(p, ModePair(Mode.M1, Mode.CAVITY))
        assert one == two

    def test_unstable_point_reports_zero_with_flag(self, mech_pair):
        point = entanglement_at(entangling_params(G_c=1.2 * OMEGA_1), mech_pair)
        assert point == (0.0, False, point.margin)
        assert point.margin > 0.0

    def test_no_coulomb_coupling_means_no_mechanical_entanglement(self, mech_pair):
        # resonator 2 decouples structurally: E_N is identically zero
        for delta_c in (-OMEGA_1, 0.0, OMEGA_1):
            point = entanglement_at(entangling_params(G_c=0.0, delta_c=delta_c),
                                    mech_pair)
            assert point.stable
            assert point.en == 0.0

    def test_floor_applied_to_results(self, mech_pair):
        point = entanglement_at(entangling_params(), mech_pair)
        assert point.en == 0.0 or point.en >= EN_FLOOR
