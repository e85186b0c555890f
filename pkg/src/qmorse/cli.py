"""Command-line front-end.

Subcommands: spectrum, table3, nmax, wavefunction, oracle-compare,
special-case.  Exit codes: 0 success, 1 numeric failure, 2 usage or domain
error, 3 golden-value mismatch (table3).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import special_cases
from .errors import DomainError
from .molecules import MoleculeRecord, builtin, load_molecules
from .oracle import OracleConfig, compare, solve, suggest_config
from .potential import MassModel, PotentialParams, mass
from .reference import (
    REFERENCE_MINUS_E,
    TABLE_MOLECULE,
    cell_decimals,
    cell_matches,
)
from .spectrum import (
    QuantumState,
    energy_constant_mass,
    energy_constant_mass_params,
    energy_pdm,
    energy_pdm_params,
    energy_s_wave,
    n_max,
    near_threshold_state,
    s_wave_ladder,
)
from .units import UNITS
from .wavefunctions import (
    constant_mass_wavefunction,
    pdm_normalization,
    pdm_wavefunction,
)

ENV_MOLECULE_PATH = "MORSE_MOLECULE_PATH"


def _constants_dict() -> dict:
    return {
        "amu_to_eV_per_c2": UNITS.amu_to_eV_per_c2,
        "wavenumber_to_eV": UNITS.wavenumber_to_eV,
        "hbar_c_eV_A": UNITS.hbar_c,
    }


def _resolve_molecule(name: str, molecule_file: str | None) -> MoleculeRecord:
    records: dict[str, MoleculeRecord] = {}
    path = molecule_file or os.environ.get(ENV_MOLECULE_PATH)
    if path:
        with open(path, "r", encoding="utf-8") as handle:
            for rec in load_molecules(handle.read()):
                records[rec.name.lower()] = rec
    if name.lower() in records:
        return records[name.lower()]
    return builtin(name)


def _parse_int_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise DomainError(f"expected a comma-separated integer list, got {text!r}") from exc
    if not values:
        raise DomainError("empty quantum-number list")
    if any(v < 0 for v in values):
        raise DomainError("quantum numbers must be non-negative")
    return values


def _emit(table: dict, args, stream) -> None:
    fmt = args.format
    digits = args.digits
    rows = table["rows"]
    columns = table["columns"]

    def fnum(value) -> str:
        if isinstance(value, bool):
            return str(value).lower()
        if isinstance(value, (int, np.integer)):
            return str(int(value))
        if isinstance(value, complex):
            return f"{value.real:.{digits}g}{value.imag:+.{digits}g}j"
        if isinstance(value, float):
            return f"{value:.{digits}g}"
        return str(value)

    if fmt == "json":
        payload = {
            "params": table["params"],
            "constants": _constants_dict(),
            "columns": columns,
            "rows": [[_json_safe(v) for v in row] for row in rows],
        }
        stream.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        return
    if fmt == "csv":
        for key in sorted(table["params"]):
            stream.write(f"# {key} = {table['params'][key]}\n")
        for key, value in sorted(_constants_dict().items()):
            stream.write(f"# {key} = {value!r}\n")
        stream.write(",".join(columns) + "\n")
        for row in rows:
            stream.write(",".join(fnum(v) for v in row) + "\n")
        return
    # text
    widths = [
        max(len(col), max((len(fnum(row[i])) for row in rows), default=0))
        for i, col in enumerate(columns)
    ]
    stream.write("  ".join(col.rjust(w) for col, w in zip(columns, widths)) + "\n")
    for row in rows:
        stream.write("  ".join(fnum(v).rjust(w) for v, w in zip(row, widths)) + "\n")


def _json_safe(value):
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    return value


def cmd_spectrum(args, stream) -> int:
    mol = _resolve_molecule(args.molecule, args.molecule_file)
    n_list = _parse_int_list(args.n)
    l_list = _parse_int_list(args.l)
    rows = []
    for n in n_list:
        for l in l_list:
            state = QuantumState(n, l)
            if args.delta > 0.0:
                res = energy_pdm(mol, args.q, args.delta, state)
            else:
                res = energy_constant_mass(mol, args.q, state)
            rows.append([n, l, res.eps_nl, res.energy, -res.energy, res.bound])
    table = {
        "params": {
            "molecule": mol.name, "q": args.q, "delta": args.delta,
            "n": args.n, "l": args.l, "energy_zero": "dissociation",
        },
        "columns": ["n", "l", "eps_nl", "E_eV", "minus_E", "bound"],
        "rows": rows,
    }
    _emit(table, args, stream)
    return 0


def cmd_table3(args, stream) -> int:
    rows = []
    all_ok = True
    for block in ("H2", "LiH", "CO", "HCl"):
        mol = builtin(TABLE_MOLECULE[block])
        for (n, l), printed in sorted(REFERENCE_MINUS_E[block].items()):
            res = energy_constant_mass(mol, 1.0, QuantumState(n, l))
            minus_e = -res.energy
            ok = cell_matches(minus_e, printed)
            all_ok &= ok
            dev = minus_e - float(printed)
            rows.append([block, n, l, printed, round(minus_e, cell_decimals(printed)), dev, ok])
    table = {
        "params": {
            "q": 1.0, "delta": 0.0, "energy_zero": "dissociation",
            "H2_parameter_set": TABLE_MOLECULE["H2"],
        },
        "columns": ["block", "n", "l", "reference", "computed", "deviation", "match"],
        "rows": rows,
    }
    _emit(table, args, stream)
    matched = sum(1 for r in rows if r[-1])
    stream.write(f"{matched}/{len(rows)} cells matched\n")
    return 0 if all_ok else 3


def cmd_nmax(args, stream) -> int:
    names = [s.strip() for s in args.molecules.split(",") if s.strip()]
    rows = []
    ladder_rows = []
    for name in names:
        mol = _resolve_molecule(name, args.molecule_file)
        count = n_max(mol, args.q)
        edge = near_threshold_state(mol, args.q)
        last_bound = energy_s_wave(mol, args.q, count - 1) if count > 0 else None
        rows.append([
            mol.name, count,
            edge.energy,
            last_bound.energy if last_bound else float("nan"),
        ])
        if args.full:
            for res in s_wave_ladder(mol, args.q, include_edge=True):
                ladder_rows.append([mol.name, res.state.n, res.energy, res.bound])
    params = {"molecules": args.molecules, "q": args.q,
              "note": "n_max = number of normalizable s-wave levels; "
                      "E_edge = formula value at index n_max (nearest the continuum); "
                      "E_last_bound = level n_max - 1"}
    _emit({
        "params": params,
        "columns": ["molecule", "n_max", "E_edge_eV", "E_last_bound_eV"],
        "rows": rows,
    }, args, stream)
    if ladder_rows:
        stream.write("\n")
        _emit({
            "params": params,
            "columns": ["molecule", "n", "E_eV", "bound"],
            "rows": ladder_rows,
        }, args, stream)
    return 0


def cmd_wavefunction(args, stream) -> int:
    mol = _resolve_molecule(args.molecule, args.molecule_file)
    p = PotentialParams.from_molecule(mol, args.q)
    state = QuantumState(args.n, args.l)
    r_lo = args.r_min if args.r_min is not None else max(1e-3, p.r_e - 4.0 / p.a)
    r_hi = args.r_max if args.r_max is not None else p.r_e + 12.0 / p.a
    grid = np.linspace(r_lo, r_hi, args.points)
    if args.delta > 0.0:
        mm = MassModel.from_molecule(mol, args.delta)
        norm = pdm_normalization(p, mm, state)
        u = pdm_wavefunction(p, mm, state, grid, kind="u", normalization=norm.quadrature)
        m_of_r, _, _ = mass(mm, p, grid)
        psi = u * np.sqrt(m_of_r / mm.m0) / grid
        note = f"normalization=quadrature ({norm.quadrature:.9g}); series note: {norm.note or 'ok'}"
    else:
        u = constant_mass_wavefunction(p, mol.mu_amu, args.n, grid, l=args.l, normalized=True)
        psi = u / grid
        note = "normalization=quadrature (log domain)"
    rows = [[float(r), float(uu), float(pp)] for r, uu, pp in zip(grid, u, psi)]
    table = {
        "params": {
            "molecule": mol.name, "q": args.q, "delta": args.delta,
            "n": args.n, "l": args.l, "r_min": r_lo, "r_max": r_hi,
            "points": args.points, "note": note,
        },
        "columns": ["r_A", "u", "psi"],
        "rows": rows,
    }
    _emit(table, args, stream)
    return 0


def cmd_oracle_compare(args, stream) -> int:
    mol = _resolve_molecule(args.molecule, args.molecule_file)
    p = PotentialParams.from_molecule(mol, args.q)
    mm = MassModel.from_molecule(mol, args.delta)
    mass_mode = "pdm" if args.delta > 0.0 else "constant"
    cfg = suggest_config(
        p, mm, args.l,
        centrifugal_mode=args.centrifugal,
        inverse_r_mode=args.inverse_r or args.centrifugal,
        mass_mode=mass_mode,
        richardson=args.richardson,
    )
    if args.grid is not None:
        cfg = OracleConfig(
            r_min=cfg.r_min, r_max=cfg.r_max, grid_points=args.grid,
            centrifugal_mode=cfg.centrifugal_mode, inverse_r_mode=cfg.inverse_r_mode,
            mass_mode=cfg.mass_mode, richardson=cfg.richardson,
        )
    spectrum_oracle = solve(p, mm, args.l, cfg)
    closed = []
    n = 0
    while True:
        try:
            if args.delta > 0.0:
                res = energy_pdm_params(p, mm, QuantumState(n, args.l))
            else:
                res = energy_constant_mass_params(p, mm, QuantumState(n, args.l))
        except Exception:
            break
        if not res.bound:
            break
        closed.append(res)
        n += 1
        if args.n_levels is not None and n >= args.n_levels:
            break
    report = compare(closed, spectrum_oracle)
    if args.format == "json":
        stream.write(report.to_json() + "\n")
    else:
        stream.write(
            f"molecule={mol.name} q={args.q} delta={args.delta} l={args.l} "
            f"centrifugal={cfg.centrifugal_mode} inverse_r={cfg.inverse_r_mode} "
            f"grid={cfg.grid_points} domain=[{cfg.r_min:.4f},{cfg.r_max:.4f}]\n"
        )
        stream.write(report.to_text() + "\n")
    return 0


def cmd_special_case(args, stream) -> int:
    case_id = args.case.replace("-", "_")
    if case_id == "generalized_vibrational":
        case = special_cases.GeneralizedVibrationalCase(
            D=args.D, alpha=args.alpha, q=args.q, mu=args.mu, r_e=args.re)
    elif case_id == "non_pt":
        case = special_cases.NonPtCase(D=args.D, d_hat=args.dhat, mu=args.mu, r_e=args.re)
    elif case_id == "pt_type1":
        case = special_cases.PtType1Case(D=args.D, d_hat=args.dhat, mu=args.mu, r_e=args.re)
    elif case_id == "pt_type2":
        case = special_cases.PtType2Case(
            D=args.D, omega=args.omega, alpha=args.alpha, mu=args.mu, r_e=args.re)
    else:
        raise DomainError(f"unknown case {args.case!r}")
    rows = []
    for n in range(args.levels):
        res = special_cases.special_case_spectrum(case_id, case, n)
        energy = res.energy
        non_real = special_cases.is_non_real(res)
        if isinstance(energy, complex):
            rows.append([n, energy.real, energy.imag, res.bound, non_real])
        else:
            rows.append([n, energy, 0.0, res.bound, non_real])
    table = {
        "params": {"case": case_id, **{k: v for k, v in vars(args).items()
                   if k in ("D", "alpha", "q", "mu", "re", "dhat", "omega") and v is not None}},
        "columns": ["n", "Re_E_eV", "Im_E_eV", "bound", "non_real"],
        "rows": rows,
    }
    _emit(table, args, stream)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qmorse",
        description="Bound-state energies and wavefunctions of deformed Morse oscillators.",
    )
    parser.add_argument("--show-constants", action="store_true",
                        help="print the three unit constants and exit")
    sub = parser.add_subparsers(dest="command")

    def add_common(sp):
        sp.add_argument("--format", choices=("text", "csv", "json"), default="text")
        sp.add_argument("--output", default=None, help="write to this path instead of stdout")
        sp.add_argument("--digits", type=int, default=6, help="significant digits (default 6)")
        sp.add_argument("--molecule-file", default=None,
                        help=f"molecule definition file (default: ${ENV_MOLECULE_PATH})")

    sp = sub.add_parser("spectrum", help="closed-form energies over n/l ranges")
    add_common(sp)
    sp.add_argument("--molecule", required=True)
    sp.add_argument("--q", type=float, default=1.0)
    sp.add_argument("--delta", type=float, default=0.0)
    sp.add_argument("--n", required=True, help="comma-separated vibrational numbers")
    sp.add_argument("--l", required=True, help="comma-separated rotational numbers")
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser(
        "table3",
        help="reproduce the bundled reference energy table and check every cell",
    )
    add_common(sp)
    sp.set_defaults(func=cmd_table3)

    sp = sub.add_parser("nmax", help="bound-state counts and ladder-edge energies")
    add_common(sp)
    sp.add_argument("--molecules", default="H2,LiH,HCl,CO")
    sp.add_argument("--q", type=float, default=1.0)
    sp.add_argument("--full", action="store_true", help="print the full s-wave ladder")
    sp.set_defaults(func=cmd_nmax)

    sp = sub.add_parser("wavefunction", help="dump a sampled radial wavefunction")
    add_common(sp)
    sp.add_argument("--molecule", required=True)
    sp.add_argument("--q", type=float, default=1.0)
    sp.add_argument("--delta", type=float, default=0.0)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--l", type=int, default=0)
    sp.add_argument("--r-min", type=float, default=None)
    sp.add_argument("--r-max", type=float, default=None)
    sp.add_argument("--points", type=int, default=400)
    sp.set_defaults(func=cmd_wavefunction)

    sp = sub.add_parser("oracle-compare", help="finite-difference check of the closed forms")
    add_common(sp)
    sp.add_argument("--molecule", required=True)
    sp.add_argument("--q", type=float, default=1.0)
    sp.add_argument("--delta", type=float, default=0.0)
    sp.add_argument("--l", type=int, default=0)
    sp.add_argument("--centrifugal", choices=("exact", "pekeris"), default="pekeris")
    sp.add_argument("--inverse-r", choices=("exact", "pekeris"), default=None)
    sp.add_argument("--grid", type=int, default=None)
    sp.add_argument("--richardson", action=argparse.BooleanOptionalAction, default=True)
    sp.add_argument("--n-levels", type=int, default=None)
    sp.set_defaults(func=cmd_oracle_compare)

    sp = sub.add_parser("special-case", help="closed forms of the named special wells")
    add_common(sp)
    sp.add_argument("--case", required=True,
                    choices=("generalized-vibrational", "generalized_vibrational",
                             "non-pt", "non_pt", "pt-type1", "pt_type1",
                             "pt-type2", "pt_type2"))
    sp.add_argument("--D", type=float, required=True, help="well scale (eV)")
    sp.add_argument("--alpha", type=float, default=1.0, help="dimensionless range")
    sp.add_argument("--q", type=float, default=1.0)
    sp.add_argument("--mu", type=float, required=True, help="reduced mass (amu)")
    sp.add_argument("--re", type=float, required=True, help="equilibrium separation (A)")
    sp.add_argument("--dhat", type=float, default=None, help="coupling of the complex wells")
    sp.add_argument("--omega", type=float, default=None)
    sp.add_argument("--levels", type=int, default=6)
    sp.set_defaults(func=cmd_special_case)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.show_constants:
        for key, value in sorted(_constants_dict().items()):
            print(f"{key} = {value!r}")
        return 0
    if not getattr(args, "command", None):
        parser.print_help()
        return 2
    try:
        if getattr(args, "output", None):
            with open(args.output, "w", encoding="utf-8", newline="\n") as handle:
                return args.func(args, handle)
        return args.func(args, sys.stdout)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # numeric or internal failure
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
