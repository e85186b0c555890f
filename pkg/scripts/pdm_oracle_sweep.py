#!/usr/bin/env python3
"""Varying-mass oracle sweep: reduced problem vs plain substitution.

Two finite-difference checks of the varying-mass closed form:

* ``reduced`` mode discretizes the quadratic-reduction problem itself, which
  the closed form solves exactly - agreement at the discretization level
  (~1e-7 eV) confirms the quantization algebra end to end;
* ``substituted`` mode plugs the exponential expansions straight into the
  untransformed effective potential.  The quadratic reduction discards
  delta-weighted cubic and quartic cross terms, so the closed form deviates
  from this variant by a real amount that grows with delta - measured here.

Run: python scripts/pdm_oracle_sweep.py
"""

from qmorse import builtin
from qmorse.oracle import compare, solve, suggest_config
from qmorse.potential import MassModel, PotentialParams
from qmorse.spectrum import QuantumState, energy_pdm_params

DELTAS = (0.05, 0.1, 0.2, 0.3, 0.4, 0.5)


def bound_ladder(p, mm, l):
    out = []
    n = 0
    while True:
        res = energy_pdm_params(p, mm, QuantumState(n, l))
        if not res.bound:
            return out
        out.append(res)
        n += 1


def main() -> None:
    mol = builtin("H2")
    p = PotentialParams.from_molecule(mol, 1.0)
    print(f"molecule = {mol.name}, l = 0, all bound levels per delta")
    print(f"{'delta':>6} {'levels':>7} {'reduced max|dE|':>17} {'substituted max|dE|':>21}")
    for delta in DELTAS:
        mm = MassModel.from_molecule(mol, delta)
        closed = bound_ladder(p, mm, 0)
        row = [f"{delta:>6.2f}", f"{len(closed):>7d}"]
        for reduced in (True, False):
            cfg = suggest_config(p, mm, 0, mass_mode="pdm", k_target=0.08,
                                 pdm_reduced=reduced)
            report = compare(closed, solve(p, mm, 0, cfg))
            row.append(f"{report.max_deviation:>17.3e}" if reduced
                       else f"{report.max_deviation:>21.3e}")
        print(" ".join(row))
    print("\nreduced-mode agreement is pure discretization error; the")
    print("substituted-mode gap is the size of the discarded cross terms.")


if __name__ == "__main__":
    main()
