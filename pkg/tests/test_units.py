import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qmorse.errors import DomainError
from qmorse.units import UNITS, dissociation_energy_eV, hbar2_over_2mu


def test_constants_are_pinned_exactly():
    assert UNITS.amu_to_eV_per_c2 == 931.502e6
    assert UNITS.wavenumber_to_eV == 1.23985e-4
    assert UNITS.hbar_c == 1973.29


def test_wavenumber_conversion_co():
    assert dissociation_energy_eV(90540.0) == pytest.approx(11.2256, abs=5e-5)
    assert dissociation_energy_eV(90540.0) == 90540.0 * 1.23985e-4


def test_wavenumber_conversion_hcl():
    assert dissociation_energy_eV(37255.0) == pytest.approx(4.61906, abs=5e-6)


@pytest.mark.parametrize("bad", [0.0, -1.0, -90540.0])
def test_nonpositive_wavenumber_rejected(bad):
    with pytest.raises(DomainError):
        dissociation_energy_eV(bad)


def test_nonpositive_mass_rejected():
    with pytest.raises(DomainError):
        hbar2_over_2mu(0.0)
    with pytest.raises(DomainError):
        hbar2_over_2mu(-0.5)


def test_doubling_mass_halves_result_exactly():
    assert hbar2_over_2mu(2.0 * 0.50391) == hbar2_over_2mu(0.50391) / 2.0


def test_co_mass_positive_finite():
    value = hbar2_over_2mu(6.8606719)
    assert value > 0.0 and math.isfinite(value)


@given(st.floats(min_value=1e-3, max_value=1e3))
def test_hbar2_identity(mu):
    # hbar2_over_2mu(mu) * (2 mu amu) must reconstruct (hbar c)^2 to machine precision
    value = hbar2_over_2mu(mu) * (2.0 * mu * UNITS.amu_to_eV_per_c2)
    assert value == pytest.approx(UNITS.hbar_c**2, rel=1e-14)


@given(st.floats(min_value=1e-6, max_value=1e6))
def test_conversions_are_deterministic(d0):
    assert dissociation_energy_eV(d0) == dissociation_energy_eV(d0)
