"""Special parameterizations of the deformed Morse well.

Four named reductions of the general three-strength well, including two
non-Hermitian complex-parameter variants.  Energies follow the closed forms;
the first PT-symmetric type has a genuinely non-real spectrum and is computed
in complex arithmetic without taking a real part.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .spectrum import EPS_TIE_TOL, QuantumState, SpectrumResult
from .units import UNITS, UnitSystem, hbar2_over_2mu

CASE_IDS = ("generalized_vibrational", "non_pt", "pt_type1", "pt_type2")


@dataclass(frozen=True)
class GeneralizedVibrationalCase:
    """V1 = D, V2 = 2 q D, V3 = 0; vibrational well with deformation q."""

    D: float
    alpha: float
    q: float
    mu: float
    r_e: float

    def __post_init__(self):
        if self.D <= 0 or self.alpha <= 0 or self.mu <= 0 or self.r_e <= 0:
            raise DomainError("D, alpha, mu and r_e must all be positive")


@dataclass(frozen=True)
class NonPtCase:
    """Complex strengths V1 = (A1 + i B1)^2, V2 = (2 C1 + 1)(A1 + i B1), alpha = 1.

    Parameterized by the real well scale D and coupling d_hat of
    V(x) = -D [exp(-2x) + i d_hat exp(-x)].
    """

    D: float
    d_hat: float
    mu: float
    r_e: float

    def __post_init__(self):
        if self.D <= 0 or self.mu <= 0 or self.r_e <= 0:
            raise DomainError("D, mu and r_e must be positive")


@dataclass(frozen=True)
class PtType1Case:
    """Same strengths as the non-PT case but alpha = i: V(x) = -D [exp(-2ix) + i d_hat exp(-ix)]."""

    D: float
    d_hat: float
    mu: float
    r_e: float

    def __post_init__(self):
        if self.D <= 0 or self.mu <= 0 or self.r_e <= 0:
            raise DomainError("D, mu and r_e must be positive")


@dataclass(frozen=True)
class PtType2Case:
    """V1 = omega^2, V2 = D, V3 = 0 with alpha -> i alpha: V(x) = -omega^2 e^{-2 i a x} + D e^{-i a x}."""

    D: float
    omega: float
    alpha: float
    mu: float
    r_e: float

    def __post_init__(self):
        if self.D <= 0 or self.omega == 0 or self.alpha <= 0 or self.mu <= 0 or self.r_e <= 0:
            raise DomainError("D, alpha, mu, r_e must be positive and omega nonzero")


def energy_scale(mu: float, r_e: float, units: UnitSystem = UNITS) -> float:
    """E0 = hbar^2 / (2 mu r_e^2) in eV."""
    return hbar2_over_2mu(mu, units) / r_e**2


def _kappa(mu: float, r_e: float, D: float, units: UnitSystem) -> float:
    """(r_e / hbar) sqrt(2 mu D), dimensionless in the eV/Angstrom system."""
    return r_e * math.sqrt(2.0 * mu * units.amu_to_eV_per_c2 * D) / units.hbar_c


def gv_lambda(case: GeneralizedVibrationalCase, units: UnitSystem = UNITS) -> float:
    e0 = energy_scale(case.mu, case.r_e, units)
    return math.sqrt(case.D / (case.alpha**2 * e0))


def gv_energy(case: GeneralizedVibrationalCase, n: int, units: UnitSystem = UNITS) -> SpectrumResult:
    """E_n = -alpha^2 E0 [lambda q - n - 1/2]^2, bound while lambda q > n + 1/2."""
    e0 = energy_scale(case.mu, case.r_e, units)
    lam = gv_lambda(case, units)
    eps = lam * case.q - n - 0.5
    energy = -(case.alpha**2) * e0 * eps**2
    return SpectrumResult(
        state=QuantumState(n, 0), energy=energy, eps_nl=eps, variant="special_case:generalized_vibrational",
        bound=eps > EPS_TIE_TOL, q=case.q,
    )


def non_pt_energy(case: NonPtCase, n: int, units: UnitSystem = UNITS) -> SpectrumResult:
    """Real spectrum of the complex well: E_n = -E0 [d_hat kappa/2 - n - 1/2]^2."""
    e0 = energy_scale(case.mu, case.r_e, units)
    kappa1 = _kappa(case.mu, case.r_e, case.D, units)
    eps = 0.5 * case.d_hat * kappa1 - n - 0.5
    energy = -e0 * eps**2
    return SpectrumResult(
        state=QuantumState(n, 0), energy=energy, eps_nl=eps, variant="special_case:non_pt",
        bound=eps > EPS_TIE_TOL,
    )


def pt_type1_energy(case: PtType1Case, n: int, units: UnitSystem = UNITS) -> SpectrumResult:
    """Non-real spectrum: E_n = +E0 [d_hat kappa2/2 - n - 1/2]^2 with imaginary kappa2.

    kappa2 = (r_e / i hbar) sqrt(2 mu D) = -i (r_e/hbar) sqrt(2 mu D).  The
    result is complex and deliberately returned as such; bound is False.
    """
    e0 = energy_scale(case.mu, case.r_e, units)
    kappa2 = -1j * _kappa(case.mu, case.r_e, case.D, units)
    eps = 0.5 * case.d_hat * kappa2 - n - 0.5
    energy = e0 * eps**2
    return SpectrumResult(
        state=QuantumState(n, 0), energy=energy, eps_nl=None, variant="special_case:pt_type1",
        bound=False,
    )


def pt_type2_energy(case: PtType2Case, n: int, units: UnitSystem = UNITS) -> SpectrumResult:
    """Real spectrum: E_n = +E0 [ (sqrt(D)/omega) kappa3 / 2 - n - 1/2 ]^2."""
    e0 = energy_scale(case.mu, case.r_e, units)
    kappa3 = _kappa(case.mu, case.r_e, case.D, units)
    eps = 0.5 * (math.sqrt(case.D) / case.omega) * kappa3 - n - 0.5
    energy = e0 * eps**2
    return SpectrumResult(
        state=QuantumState(n, 0), energy=energy, eps_nl=eps, variant="special_case:pt_type2",
        bound=eps > EPS_TIE_TOL,
    )


def special_case_spectrum(case_id: str, case, n: int, units: UnitSystem = UNITS) -> SpectrumResult:
    """Dispatch on case_id; pt_type1 yields a complex energy flagged unbound."""
    if case_id == "generalized_vibrational":
        return gv_energy(case, n, units)
    if case_id == "non_pt":
        return non_pt_energy(case, n, units)
    if case_id == "pt_type1":
        return pt_type1_energy(case, n, units)
    if case_id == "pt_type2":
        return pt_type2_energy(case, n, units)
    raise DomainError(f"unknown special case {case_id!r}; available: {', '.join(CASE_IDS)}")


def is_non_real(result: SpectrumResult, tol: float = 0.0) -> bool:
    energy = result.energy
    return isinstance(energy, complex) and abs(energy.imag) > tol


__all__ = [
    "CASE_IDS",
    "GeneralizedVibrationalCase",
    "NonPtCase",
    "PtType1Case",
    "PtType2Case",
    "energy_scale",
    "gv_lambda",
    "gv_energy",
    "non_pt_energy",
    "pt_type1_energy",
    "pt_type2_energy",
    "special_case_spectrum",
    "is_non_real",
]
