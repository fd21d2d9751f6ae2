import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from clearfom.constants import CODATA_2018, PhysicalConstants
from clearfom.errors import DomainError
from clearfom.limits import (
    bremermann_rate,
    heisenberg_min_length,
    landauer_energy,
    make_limit_set,
    margolus_levitin_rate,
    minimum_device_pair_mass,
    time_of_flight_rate_limit,
)
from clearfom.metric import Level

# Independent oracle values, computed from raw CODATA literals (not via the
# package's constants table).
_C = 299792458.0
_H = 6.62607015e-34
_K = 1.380649e-23
_ME = 9.1093837015e-31
_BREMERMANN_1KG = _C ** 2 / _H  # 1.3563924896521321e+50


def test_constants_reduced_planck_relation():
    pc = CODATA_2018
    assert abs(pc.reduced_planck - pc.planck_h / (2 * math.pi)) <= 1e-12 * pc.reduced_planck


def test_constants_reject_inconsistent_reduced_planck():
    with pytest.raises(DomainError):
        PhysicalConstants(reduced_planck=1.06e-34)


class TestLandauer:
    def test_room_temperature_value(self):
        assert landauer_energy(300.0) == pytest.approx(2.87e-21, rel=0.01)

    def test_zero_temperature(self):
        assert landauer_energy(0.0) == 0.0

    def test_linear_in_temperature(self):
        assert landauer_energy(600.0) == 2.0 * landauer_energy(300.0)

    def test_negative_temperature_rejected(self):
        with pytest.raises(DomainError):
            landauer_energy(-1.0)

    @given(st.floats(min_value=1e-3, max_value=1e4),
           st.floats(min_value=1e-3, max_value=1e3))
    def test_degree_one_homogeneity(self, temperature, scale):
        scaled = landauer_energy(temperature * scale)
        assert scaled == pytest.approx(scale * landauer_energy(temperature), rel=1e-12)


class TestMargolusLevitin:
    def test_exceeds_sixteen_thz_at_landauer_energy(self):
        rate = margolus_levitin_rate(landauer_energy(300.0))
        assert rate > 1.6e13
        assert 1.6e13 < rate < 1.8e13

    def test_quarter_planck_gives_one_hertz(self):
        assert margolus_levitin_rate(CODATA_2018.planck_h / 4.0) == pytest.approx(1.0, rel=1e-12)

    def test_doubling_energy_doubles_rate(self):
        assert margolus_levitin_rate(2e-21) == 2.0 * margolus_levitin_rate(1e-21)

    def test_non_positive_energy_rejected(self):
        with pytest.raises(DomainError):
            margolus_levitin_rate(0.0)

    @given(st.floats(min_value=1e-25, max_value=1e-15),
           st.floats(min_value=1e-3, max_value=1e3))
    def test_degree_one_homogeneity(self, energy, scale):
        assert margolus_levitin_rate(energy * scale) == pytest.approx(
            scale * margolus_levitin_rate(energy), rel=1e-12)


class TestHeisenberg:
    def test_room_temperature_electron(self):
        length = heisenberg_min_length(300.0, CODATA_2018.electron_mass)
        assert length == pytest.approx(1.5e-9, rel=0.05)

    def test_quadruple_mass_halves_length(self):
        base = heisenberg_min_length(300.0, _ME)
        assert heisenberg_min_length(300.0, 4.0 * _ME) == pytest.approx(base / 2.0, rel=1e-12)

    def test_quadruple_temperature_halves_length(self):
        base = heisenberg_min_length(300.0, _ME)
        assert heisenberg_min_length(1200.0, _ME) == pytest.approx(base / 2.0, rel=1e-12)

    def test_non_positive_inputs_rejected(self):
        with pytest.raises(DomainError):
            heisenberg_min_length(0.0, _ME)
        with pytest.raises(DomainError):
            heisenberg_min_length(300.0, 0.0)

    @given(st.floats(min_value=1.0, max_value=1e4))
    def test_sqrt_temperature_product_constant(self, temperature):
        reference = heisenberg_min_length(300.0, _ME) * math.sqrt(300.0)
        value = heisenberg_min_length(temperature, _ME) * math.sqrt(temperature)
        assert value == pytest.approx(reference, rel=1e-9)


class TestBremermann:
    def test_one_kilogram(self):
        assert bremermann_rate(1.0) == pytest.approx(_BREMERMANN_1KG, rel=1e-12)

    def test_two_minimum_silicon_cubes_exceed_1e16(self):
        mass = minimum_device_pair_mass(300.0, CODATA_2018.electron_mass)
        assert bremermann_rate(mass) > 1e16

    def test_linear_in_mass(self):
        assert bremermann_rate(10.0) == pytest.approx(10.0 * bremermann_rate(1.0), rel=1e-12)

    def test_non_positive_mass_rejected(self):
        with pytest.raises(DomainError):
            bremermann_rate(-1e-3)

    @given(st.floats(min_value=1e-27, max_value=1e3),
           st.floats(min_value=1e-3, max_value=1e3))
    def test_degree_one_homogeneity(self, mass, scale):
        assert bremermann_rate(mass * scale) == pytest.approx(
            scale * bremermann_rate(mass), rel=1e-12)


class TestTimeOfFlight:
    def test_hundred_micron_near_one_thz(self):
        assert time_of_flight_rate_limit(100e-6, 3.0) == pytest.approx(1e12, rel=1e-3)

    def test_decade_steps_with_length(self):
        r1 = time_of_flight_rate_limit(100e-6, 3.0)
        r2 = time_of_flight_rate_limit(1e-3, 3.0)
        r3 = time_of_flight_rate_limit(1e-2, 3.0)
        assert r1 / r2 == pytest.approx(10.0, rel=1e-12)
        assert r2 / r3 == pytest.approx(10.0, rel=1e-12)

    def test_light_second_is_one_hertz(self):
        assert time_of_flight_rate_limit(_C, 1.0) == pytest.approx(1.0, rel=1e-12)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            time_of_flight_rate_limit(0.0, 3.0)
        with pytest.raises(DomainError):
            time_of_flight_rate_limit(1e-3, 0.5)


class TestMakeLimitSet:
    def test_device_level_values(self):
        limits = make_limit_set(300.0, level=Level.DEVICE)
        assert limits.min_energy_j_per_bit == pytest.approx(2.87e-21, rel=0.01)
        assert limits.min_length_m == pytest.approx(1.5e-9, rel=0.05)
        assert limits.min_area_m2 == limits.min_length_m ** 2
        assert limits.cost_efficiency_axis == 1e10

    def test_link_energy_doubles_exactly(self):
        device = make_limit_set(300.0, level=Level.DEVICE)
        link = make_limit_set(300.0, level=Level.LINK)
        assert link.min_energy_j_per_bit == 2.0 * device.min_energy_j_per_bit
        assert link.min_area_m2 == 2.0 * device.min_area_m2

    def test_link_area_matches_doubled_heisenberg_square(self):
        link = make_limit_set(300.0, level=Level.LINK)
        side = heisenberg_min_length(300.0, CODATA_2018.electron_mass)
        assert link.min_area_m2 == 2.0 * side ** 2
        # The rounded nominal 1.5 nm side puts the figure near 4.5e-18 m^2.
        assert link.min_area_m2 == pytest.approx(4.5e-18, rel=0.07)

    def test_link_capacity_is_two_cube_bound(self):
        link = make_limit_set(300.0, level=Level.LINK)
        mass = minimum_device_pair_mass(300.0, CODATA_2018.electron_mass)
        assert link.max_capacity_bps == bremermann_rate(mass)

    def test_tof_ceiling_follows_link_length(self):
        short = make_limit_set(300.0, link_length=1e-4, level=Level.LINK)
        long = make_limit_set(300.0, link_length=1e-2, level=Level.LINK)
        assert short.max_tof_rate_hz / long.max_tof_rate_hz == pytest.approx(100.0, rel=1e-12)

    def test_margolus_levitin_window(self):
        limits = make_limit_set(300.0)
        assert 1.6e13 <= limits.max_rate_hz <= 1.8e13

    def test_rejects_zero_temperature(self):
        with pytest.raises(DomainError):
            make_limit_set(0.0)
