"""Closed-form rovibrational bound-state energies.

Three routes are provided:

* the varying-mass spectrum (delta > 0), via the quadratic-reduction strength
  parameters beta1, beta2 and the quantized eps_nl;
* the constant-mass limit (delta = 0), written out with the centrifugal
  polynomial exactly as in the confluent closed form;
* the s-wave ladder (l = 0) in the eta/kappa parameterization, together with
  the bound-state count.

Energies returned by the molecule-level functions are referenced to the
separated-atoms limit (the constant offset q^2 D_e of the squared-bracket
well form is removed); the ``*_params`` functions return the literal formula
value including that offset.  The two conventions differ by exactly v3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, NoRealSolutionError, ThresholdStateError
from .molecules import MoleculeRecord, builtin
from .pekeris import composite_spq, pekeris_coefficients
from .potential import MassModel, PotentialParams
from .units import UNITS, UnitSystem, hbar2_over_2mu

#: below this delta the varying-mass closed form is numerically ill-conditioned
#: (xi diverges like 1/delta); such calls are routed to the constant-mass branch.
DELTA_CROSSOVER = 1e-10

#: eps at or below this is classified unbound (ties count as unbound).
EPS_TIE_TOL = 1e-12


@dataclass(frozen=True)
class QuantumState:
    """Vibrational and rotational quantum numbers."""

    n: int
    l: int = 0

    def __post_init__(self):
        if self.n < 0 or self.n != int(self.n):
            raise DomainError(f"n must be a non-negative integer, got {self.n}")
        if self.l < 0 or self.l != int(self.l):
            raise DomainError(f"l must be a non-negative integer, got {self.l}")


@dataclass(frozen=True)
class BetaParameters:
    """Strength composites and the per-state quantized parameters."""

    beta1: float
    beta2: float
    eps_nl: float
    xi: float | None


@dataclass(frozen=True)
class SpectrumResult:
    """One bound-state (or flagged unbound) energy with provenance."""

    state: QuantumState
    energy: float | complex
    eps_nl: float | None
    variant: str
    bound: bool
    xi: float | None = None
    molecule: str | None = None
    q: float = 1.0
    delta: float = 0.0
    zero: str = "dissociation"


def beta_static(
    p: PotentialParams, mm: MassModel, l: int, units: UnitSystem = UNITS
) -> tuple[float, float]:
    """The state-independent strength composites (beta1, beta2).

    beta1 = (2 m0 V1 / hbar^2 + gamma a2)/a^2 + P delta + Q delta^2
    beta2 = (2 m0 V2 / hbar^2 - gamma a1)/a^2 + S delta
    """
    h22m = hbar2_over_2mu(mm.m0, units)
    big_k = h22m * p.a**2
    pc = pekeris_coefficients(p.alpha)
    spq = composite_spq(p, l)
    gamma = l * (l + 1) / p.r_e**2
    beta1 = (p.v1 + h22m * gamma * pc.a2) / big_k + spq.P * mm.delta + spq.Q * mm.delta**2
    beta2 = (p.v2 - h22m * gamma * pc.a1) / big_k + spq.S * mm.delta
    return beta1, beta2


def beta_parameters(
    p: PotentialParams, mm: MassModel, state: QuantumState, units: UnitSystem = UNITS
) -> BetaParameters:
    """Strength composites plus the quantized (eps_nl, xi) of one state."""
    beta1, beta2 = beta_static(p, mm, state.l, units)
    if mm.delta < DELTA_CROSSOVER:
        eps = epsilon_constant_mass(state.n, beta1, beta2)
        return BetaParameters(beta1=beta1, beta2=beta2, eps_nl=eps, xi=None)
    eps = epsilon_pdm(state.n, beta1, beta2, mm.delta)
    return BetaParameters(
        beta1=beta1, beta2=beta2, eps_nl=eps, xi=xi_value(beta1, beta2, eps, mm.delta)
    )


def epsilon_pdm(n: int, beta1: float, beta2: float, delta: float) -> float:
    """Quantized eps_nl of the varying-mass problem.

        eps = (1/2) [n(n+1) delta - 2(n+1/2) sqrt(beta1) + beta2]
                    / [sqrt(beta1) - (n+1/2) delta]
    """
    if not delta > 0.0:
        raise DomainError("epsilon_pdm requires delta > 0; use the constant-mass branch")
    if beta1 < 0.0:
        raise NoRealSolutionError("no real NU solution: beta1 < 0", beta1)
    sqrt_b1 = math.sqrt(beta1)
    den = sqrt_b1 - (n + 0.5) * delta
    if abs(den) <= 1e-14 * max(1.0, sqrt_b1):
        raise ThresholdStateError(
            f"state n={n} sits at the varying-mass threshold (vanishing denominator)"
        )
    num = n * (n + 1) * delta - 2.0 * (n + 0.5) * sqrt_b1 + beta2
    return 0.5 * num / den


def epsilon_constant_mass(n: int, beta1: float, beta2: float) -> float:
    """Constant-mass limit: eps = beta2 / (2 sqrt(beta1)) - (n + 1/2)."""
    if beta1 <= 0.0:
        raise NoRealSolutionError("no real solution: beta1 <= 0", beta1)
    return beta2 / (2.0 * math.sqrt(beta1)) - (n + 0.5)


def xi_value(beta1: float, beta2: float, eps: float, delta: float) -> float:
    """xi = sqrt(1 + 4 eps^2 + (4/delta)(beta1/delta - beta2)), delta > 0."""
    inside = 1.0 + 4.0 * eps**2 + (4.0 / delta) * (beta1 / delta - beta2)
    if inside < 0.0:
        raise NoRealSolutionError("no real NU solution: xi^2 < 0", inside)
    return math.sqrt(inside)


def energy_from_epsilon(
    p: PotentialParams, mm: MassModel, l: int, eps: float, units: UnitSystem = UNITS
) -> float:
    """Invert the eps definition: E = V3 + gamma a0 hbar^2/2m0 - (hbar^2 a^2/2m0) eps^2."""
    h22m = hbar2_over_2mu(mm.m0, units)
    gamma = l * (l + 1) / p.r_e**2
    a0 = pekeris_coefficients(p.alpha).a0
    return p.v3 + h22m * gamma * a0 - h22m * p.a**2 * eps**2


def energy_pdm_params(
    p: PotentialParams, mm: MassModel, state: QuantumState, units: UnitSystem = UNITS
) -> SpectrumResult:
    """Varying-mass closed form, literal well convention (offset included).

    Evaluates the explicit squared-bracket form; delta below DELTA_CROSSOVER
    is routed to the constant-mass branch.
    """
    if mm.delta < DELTA_CROSSOVER:
        return energy_constant_mass_params(p, mm, state, units)
    beta1, beta2 = beta_static(p, mm, state.l, units)
    if beta1 < 0.0:
        raise NoRealSolutionError("no real NU solution: beta1 < 0", beta1)
    h22m = hbar2_over_2mu(mm.m0, units)
    gamma = state.l * (state.l + 1) / p.r_e**2
    a0 = pekeris_coefficients(p.alpha).a0
    sqrt_b1 = math.sqrt(beta1)
    den = sqrt_b1 - (state.n + 0.5) * mm.delta
    if abs(den) <= 1e-14 * max(1.0, sqrt_b1):
        raise ThresholdStateError(
            f"state n={state.n} sits at the varying-mass threshold"
        )
    bracket = (
        state.n * (state.n + 1) * mm.delta - 2.0 * (state.n + 0.5) * sqrt_b1 + beta2
    ) / den
    energy = p.v3 + h22m * gamma * a0 - (h22m * p.a**2 / 4.0) * bracket**2
    eps = 0.5 * bracket
    xi = xi_value(beta1, beta2, eps, mm.delta)
    # normalizable states need eps > 0 on the positive branch (den > 0); past
    # the denominator flip the formula's positive eps is spurious
    bound = eps > EPS_TIE_TOL and den > 0.0
    return SpectrumResult(
        state=state, energy=energy, eps_nl=eps, xi=xi, variant="pdm",
        bound=bound, q=p.q, delta=mm.delta, zero="potential",
    )


def energy_constant_mass_params(
    p: PotentialParams, mm: MassModel, state: QuantumState, units: UnitSystem = UNITS
) -> SpectrumResult:
    """Constant-mass closed form written out with the centrifugal polynomial.

    E = V3 + (hbar^2/2mu r_e^2) l(l+1) (1 - 3/(a r_e) + 3/(a r_e)^2)
        - (hbar^2 a^2/2mu) [ (V2/2 - (hbar^2/2mu r_e^2) l(l+1) (2/(a r_e) - 3/(a r_e)^2))
                             / sqrt(hbar^2 a^2/2mu) / sqrt(V1 - ...) - (n+1/2) ]^2
    """
    h22m = hbar2_over_2mu(mm.m0, units)
    big_k = h22m * p.a**2
    are = p.alpha
    shift = h22m * state.l * (state.l + 1) / p.r_e**2
    a0_poly = 1.0 - 3.0 / are + 3.0 / are**2
    under_root = p.v1 - shift * (1.0 / are - 3.0 / are**2)
    if under_root <= 0.0:
        raise NoRealSolutionError("no real solution: negative under the root", under_root)
    numerator = p.v2 / 2.0 - shift * (2.0 / are - 3.0 / are**2)
    eps = numerator / math.sqrt(big_k * under_root) - (state.n + 0.5)
    energy = p.v3 + shift * a0_poly - big_k * eps**2
    return SpectrumResult(
        state=state, energy=energy, eps_nl=eps, xi=None, variant="constant_mass",
        bound=eps > EPS_TIE_TOL, q=p.q, delta=0.0, zero="potential",
    )


def _mol_result(
    res: SpectrumResult, mol: MoleculeRecord, v3: float, from_dissociation: bool
) -> SpectrumResult:
    energy = res.energy - v3 if from_dissociation else res.energy
    return SpectrumResult(
        state=res.state, energy=energy, eps_nl=res.eps_nl, xi=res.xi,
        variant=res.variant, bound=res.bound, molecule=mol.name, q=res.q,
        delta=res.delta, zero="dissociation" if from_dissociation else "potential",
    )


def energy_pdm(
    mol: MoleculeRecord,
    q: float,
    delta: float,
    state: QuantumState,
    units: UnitSystem = UNITS,
    from_dissociation: bool = True,
) -> SpectrumResult:
    """Varying-mass energy for a molecule, referenced to the dissociation limit."""
    p = PotentialParams.from_molecule(mol, q, units)
    mm = MassModel.from_molecule(mol, delta)
    res = energy_pdm_params(p, mm, state, units)
    return _mol_result(res, mol, p.v3, from_dissociation)


def energy_constant_mass(
    mol: MoleculeRecord,
    q: float,
    state: QuantumState,
    units: UnitSystem = UNITS,
    from_dissociation: bool = True,
) -> SpectrumResult:
    """Constant-mass energy for a molecule, referenced to the dissociation limit."""
    p = PotentialParams.from_molecule(mol, q, units)
    mm = MassModel.from_molecule(mol, 0.0)
    res = energy_constant_mass_params(p, mm, state, units)
    return _mol_result(res, mol, p.v3, from_dissociation)


def energy_s_wave(
    mol: MoleculeRecord,
    q: float,
    n: int,
    units: UnitSystem = UNITS,
    from_dissociation: bool = True,
) -> SpectrumResult:
    """s-wave ladder energy E_n = V3 - (1/4 kappa^2) [1 + 2n - eta kappa]^2.

    eta = V2/sqrt(V1), kappa = sqrt(2 mu)/(hbar a).  Unbound states (eps <= 0)
    are flagged but their formula value is still reported for diagnostics.
    """
    p = PotentialParams.from_molecule(mol, q, units)
    h22m = hbar2_over_2mu(mol.mu_amu, units)
    kappa = 1.0 / math.sqrt(h22m * p.a**2)
    eta = p.v2 / math.sqrt(p.v1)
    energy = p.v3 - (1.0 / (4.0 * kappa**2)) * (1.0 + 2.0 * n - eta * kappa) ** 2
    eps = 0.5 * eta * kappa - n - 0.5
    if from_dissociation:
        energy -= p.v3
    return SpectrumResult(
        state=QuantumState(n, 0), energy=energy, eps_nl=eps, xi=None,
        variant="s_wave", bound=eps > EPS_TIE_TOL, molecule=mol.name, q=q,
        delta=0.0, zero="dissociation" if from_dissociation else "potential",
    )


def n_max(mol: MoleculeRecord, q: float = 1.0, units: UnitSystem = UNITS) -> int:
    """Total number of normalizable s-wave levels.

    The largest normalizable index is n_max - 1; the closed form evaluated at
    n = n_max gives the near-continuum edge energy reported by
    ``near_threshold_state``.  Returns 0 (no bound branch) when V2 <= 0.
    """
    p = PotentialParams.from_molecule(mol, q, units)
    if p.v2 <= 0.0:
        return 0
    h22m = hbar2_over_2mu(mol.mu_amu, units)
    kappa = 1.0 / math.sqrt(h22m * p.a**2)
    s = 0.5 * p.v2 / math.sqrt(p.v1) * kappa
    if s - 0.5 <= EPS_TIE_TOL:
        return 0
    return int(math.floor(s - 0.5 - EPS_TIE_TOL)) + 1


def near_threshold_state(
    mol: MoleculeRecord, q: float = 1.0, units: UnitSystem = UNITS
) -> SpectrumResult:
    """Formula value at index n = n_max: the ladder entry nearest the continuum.

    This index is already non-normalizable (eps < 0); its closed-form energy
    is the conventional 'last state' figure quoted with the bound-state count.
    """
    return energy_s_wave(mol, q, n_max(mol, q, units), units)


def s_wave_ladder(
    mol: MoleculeRecord,
    q: float = 1.0,
    units: UnitSystem = UNITS,
    include_edge: bool = True,
) -> list[SpectrumResult]:
    """Full s-wave ladder n = 0 .. n_max-1, optionally with the edge entry."""
    top = n_max(mol, q, units)
    ladder = [energy_s_wave(mol, q, n, units) for n in range(top)]
    if include_edge and top > 0:
        ladder.append(energy_s_wave(mol, q, top, units))
    return ladder


def resolve_reported_ladder(units: UnitSystem = UNITS) -> dict[str, tuple[int, float, float]]:
    """Computational resolution of the LiH/HCl ladder-figure assignment.

    The two reported (count, edge-energy) pairs for LiH and HCl carry
    contradictory orderings in the source material.  For each molecule the
    closed form is evaluated at the candidate indices {n_max - 1, n_max} and
    matched against the two reported energies; the winner determines the
    assignment.  Computation gives LiH -> 29 (the formula value at the count
    index) and HCl -> 24 (the last normalizable index).

    Returns {name: (index, energy, relative_mismatch)}.
    """
    from .reference import AMBIGUOUS_LADDER_ENERGIES

    out: dict[str, tuple[int, float, float]] = {}
    for name in ("LiH", "HCl"):
        mol = builtin(name)
        count = n_max(mol, 1.0, units)
        best: tuple[int, float, float] | None = None
        for idx in (count - 1, count):
            energy = energy_s_wave(mol, 1.0, idx, units).energy
            for ref in AMBIGUOUS_LADDER_ENERGIES:
                rel = abs(energy - ref) / abs(ref)
                if best is None or rel < best[2]:
                    best = (idx, energy, rel)
        assert best is not None
        out[name] = best
    return out


def reduced_coefficients(
    p: PotentialParams, mm: MassModel, l: int, units: UnitSystem = UNITS
) -> tuple[float, float, float]:
    """(beta1, beta2, c0) of the reduced quadratic problem.

    The transformed equation the closed form solves is, in r-space,

        -u'' + a^2 (beta1 z^2 - beta2 z + c0) / (1 - delta z)^2 u
            = (2 m(r) E / hbar^2) u,

    with c0 = (gamma a0 + 2 m0 V3 / hbar^2)/a^2 the state-independent part of
    eps^2.  Used by the oracle's pekeris/pekeris varying-mass mode.
    """
    beta1, beta2 = beta_static(p, mm, l, units)
    h22m = hbar2_over_2mu(mm.m0, units)
    gamma = l * (l + 1) / p.r_e**2
    a0 = pekeris_coefficients(p.alpha).a0
    c0 = (gamma * a0 + p.v3 / h22m) / p.a**2
    return beta1, beta2, c0
