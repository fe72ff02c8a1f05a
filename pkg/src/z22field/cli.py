"""Command-line front end.

One binary, subcommand per task: algebra and table verification, the
Lagrangian pipeline, currents and invariance, the matrix realization,
potential handling, the finite-difference solver, and a batch mode that
runs the whole suite and writes a manifest.  Output is deterministic:
maps are emitted in sorted order and rationals in lowest terms, so
identical invocations produce byte-identical artifacts.
"""

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from .core import GaussianRational, coord, field
from .expr import GradedExpr, gexp, scalar
from . import serialize
from .derivations import verify_structure_constants, verify_jacobi
from .superfield import (closure_report, degree_audit, dimension_audit,
                         reality_check)
from .potential import parse_potential, potential_components, series_pair
from .action import (berezin_layer, lagrangian, lagrangian_audit,
                     clifford_report, lorentz_spinor_report,
                     measure_invariance_report, nilpotency_report,
                     product_covariance_report)
from .variational import (current_comparison, generic_eom_report,
                          invariance_report, quadratic_eom_report,
                          sine_gordon_reduction, table_comparison_report,
                          trig_eom_report)
from .dmodule import dmodule_report
from . import sim
from . import reference

FORMATS = ("json", "latex", "text", "csv")


# ----------------------------------------------------------------------
# deterministic serialization of report payloads
# ----------------------------------------------------------------------

def _plain(obj, fmt: str = "text"):
    """Recursively convert a report payload to json-safe data."""
    if isinstance(obj, GradedExpr):
        return serialize.latex(obj) if fmt == "latex" else str(obj)
    if isinstance(obj, GaussianRational):
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {_key(k): _plain(v, fmt) for k, v in sorted(
            obj.items(), key=lambda kv: _key(kv[0]))}
    if isinstance(obj, (list, tuple)):
        return [_plain(v, fmt) for v in obj]
    if isinstance(obj, (bool, int, float, str)) or obj is None:
        return obj
    return str(obj)


def _key(k) -> str:
    if isinstance(k, tuple):
        return ",".join(str(p) for p in k)
    return str(k)


def _flat_rows(payload: dict, prefix: str = "") -> List[Tuple[str, str]]:
    rows = []
    for k in sorted(payload):
        v = payload[k]
        name = f"{prefix}{k}"
        if isinstance(v, dict):
            rows.extend(_flat_rows(v, name + "."))
        else:
            rows.append((name, json.dumps(v) if isinstance(v, list) else str(v)))
    return rows


def _emit_report(ok: bool, payload: dict, fmt: str, out) -> None:
    data = _plain(payload, fmt)
    if fmt == "json":
        print(json.dumps({"ok": ok, "report": data}, sort_keys=True,
                         indent=2), file=out)
    elif fmt == "csv":
        print("check,value", file=out)
        for name, val in _flat_rows(data):
            print(f"{name},{val}", file=out)
        print(f"ok,{ok}", file=out)
    else:
        for name, val in _flat_rows(data):
            print(f"{name}: {val}", file=out)
        print(f"ok: {ok}", file=out)


# ----------------------------------------------------------------------
# check runners: each returns (ok, payload)
# ----------------------------------------------------------------------

def run_verify_algebra(args) -> Tuple[bool, dict]:
    sc = verify_structure_constants()
    jac = verify_jacobi()
    clo = closure_report("y")
    half = scalar(Fraction(1, 2))
    probe = (gexp(coord("th10")) * gexp(coord("th01")) * gexp(coord("z"))
             * gexp(field("A00", 0, 0, "y")))
    int_ok = berezin_layer(probe) == half * gexp(field("A00", 0, 0, "y"))
    audits = {
        "superfield_real": reality_check(),
        "degree_audit_clean": not degree_audit("y") and not degree_audit("x"),
        "dimension_audit_clean": (not dimension_audit("y")
                                  and not dimension_audit("x")),
        "measure_invariance": measure_invariance_report()["ok"],
        "nilpotency": nilpotency_report()["ok"],
        "product_covariance": product_covariance_report()["ok"],
        "clifford": clifford_report()["ok"],
        "lorentz_spinors": lorentz_spinor_report()["ok"],
        "integration_map_half_A00": int_ok,
    }
    payload = {
        "structure_constants": {r["relation"]: r["status"] for r in sc},
        "jacobi": {r["relation"]: r["status"] for r in jac},
        "variation_closure": {r["pair"]: r["status"] for r in clo},
        "audits": audits,
    }
    ok = (all(r["status"] == "ok" for r in sc + jac + clo)
          and all(audits.values()))
    return ok, payload


def run_verify_tables(args) -> Tuple[bool, dict]:
    rep = table_comparison_report()
    ok = all(entry["ok"] for entry in rep.values())
    return ok, rep


def run_derive_lagrangian(args) -> Tuple[bool, dict]:
    V = None if args.generic else parse_potential(args.potential)
    lag = lagrangian(V=V, eliminate=args.eliminate_aux)
    audit = lagrangian_audit(lag)
    payload = {"lagrangian": lag, "audit": audit,
               "potential": "abstract" if V is None else V.name,
               "eliminated": bool(args.eliminate_aux)}
    return bool(audit["ok"]), payload


def run_check_potential(args) -> Tuple[bool, dict]:
    V = parse_potential(args.potential)
    pair = potential_components(V, stage="x",
                                truncation_order=args.truncation)
    ser = series_pair(V, stage="x", truncation_order=args.truncation)
    payload = {
        "potential": V.name,
        "closed": pair.closed,
        "v00": pair.v00, "v11": pair.v11,
        "series_v00": ser.v00, "series_v11": ser.v11,
    }
    ok = True
    if V.kind == "cos":
        spec = reference.trigonometric_specialization()
        ok = pair.v00 == spec["V00"] and pair.v11 == spec["V11"]
        payload["matches_display"] = ok
    return ok, payload


def run_check_currents(args) -> Tuple[bool, dict]:
    inv = invariance_report(eliminate=not args.generic)
    cur = current_comparison()
    cur_ok = all(e["conserved"]
                 and (e["matches_reference"]
                      or e.get("improvement_conserved", False))
                 for e in cur.values())
    inv_ok = all(e["ok"] for e in inv.values())
    payload = {
        "invariance": {n: {"ok": e["ok"]} for n, e in inv.items()},
        "currents": {n: {k: v for k, v in e.items()
                         if k not in ("improvement",)}
                     for n, e in cur.items()},
    }
    return inv_ok and cur_ok, payload


def run_verify_dmodule(args) -> Tuple[bool, dict]:
    rep = dmodule_report()
    ok = (all(rep["relations_printed"].values())
          and all(rep["relations_canonical"].values())
          and rep["canonical_matches_printed"]
          and rep["tables_reconstructed"])
    return ok, rep


def run_check_examples(args) -> Tuple[bool, dict]:
    gen = generic_eom_report()
    quad = quadratic_eom_report()
    trig = trig_eom_report()
    sg = sine_gordon_reduction()
    payload = {
        "generic": {b: {"scale": e["scale"], "exact": e["exact"]}
                    for b, e in gen.items()},
        "quadratic": {b: {"scale": e["scale"], "exact": e["exact"]}
                      for b, e in quad.items()},
        "trigonometric": {b: {"scale": e["scale"], "exact": e["exact"],
                              "residual_fermionic": e["residual_fermionic"]}
                          for b, e in trig.items()},
        "sine_gordon": {b: {"scale": e["scale"], "exact": e["exact"]}
                        for b, e in sg.items()},
    }
    ok = (all(e["exact"] for e in gen.values())
          and all(e["exact"] for e in quad.values())
          and all(e["exact"] or e["residual_fermionic"]
                  for e in trig.values())
          and all(e["exact"] for e in sg.values()))
    return ok, payload


def run_numerics(args) -> Tuple[bool, dict]:
    conv = sim.convergence_study()
    drift = sim.energy_drift_study()
    boost = sim.boosted_kink_study()
    exch = sim.exchange_symmetry_study()
    disp = sim.dispersion_study()
    checks = {
        "convergence_second_order": all(3.5 <= r <= 4.5
                                        for r in conv["ratios"]),
        "energy_drift_bounded": drift["max_relative_drift"] < 1e-5,
        "boosted_kink_position": boost["position_error"] < boost["dx"],
        "exchange_symmetry": exch["max_asymmetry"] < 1e-12,
        "dispersion_relation": disp["relative_error"] < 0.01,
    }
    payload = {"convergence": conv, "drift": drift, "boosted_kink": boost,
               "exchange": exch, "dispersion": disp, "checks": checks}
    return all(checks.values()), payload


# ----------------------------------------------------------------------
# simulate subcommand
# ----------------------------------------------------------------------

_SIM_KEYS = ("alpha", "dx", "dt", "x_min", "x_max", "t_end", "boundary",
             "model", "initial", "output_stride")
_SIM_STR = ("boundary", "model", "initial")


def _read_config_file(path: str) -> Dict[str, str]:
    out: Dict[str, str] = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"bad config line {raw!r}")
        key, val = (p.strip() for p in line.split("=", 1))
        out[key.replace("-", "_")] = val
    return out


def build_sim_config(args) -> sim.SimConfig:
    values: dict = {}
    if args.config:
        for key, val in _read_config_file(args.config).items():
            if key == "param" or key.startswith("param."):
                name = key.split(".", 1)[1] if "." in key else val.split("=")[0]
                values.setdefault("params", {})[name] = float(
                    val.split("=", 1)[1] if "." not in key else val)
            elif key in _SIM_STR:
                values[key] = val
            elif key in _SIM_KEYS:
                values[key] = int(val) if key == "output_stride" else float(val)
            else:
                raise ValueError(f"unknown config key {key!r}")
    for key in _SIM_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    params = values.setdefault("params", {})
    for item in args.param or ():
        if "=" not in item:
            raise ValueError(f"--param wants name=value, got {item!r}")
        name, val = item.split("=", 1)
        params[name.strip()] = float(val)
    return sim.SimConfig(**values)


def _write_snapshot(path: Path, state: sim.FieldState) -> None:
    with path.open("w") as fh:
        fh.write("x,phi00,phi11,pi00,pi11\n")
        for k in range(len(state.x)):
            row = (state.x[k], state.phi00[k], state.phi11[k],
                   state.pi00[k], state.pi11[k])
            fh.write(",".join(repr(float(v)) for v in row) + "\n")


def run_simulate(args) -> int:
    cfg = build_sim_config(args)
    traj = sim.run(cfg)
    lines = ["time,energy"]
    lines += [f"{float(t)!r},{float(e)!r}"
              for t, e in zip(traj.times, traj.energies)]
    body = "\n".join(lines) + "\n"
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / "trajectory.csv").write_text(body)
        if cfg.output_stride:
            for idx, snap in enumerate(traj.snapshots):
                _write_snapshot(out_dir / f"snapshot_{idx:04d}.csv", snap)
        if args.profile_dump:
            final = traj.final
            rows = [f"{float(final.x[k])!r} {float(final.phi00[k])!r} "
                    f"{float(final.phi11[k])!r}"
                    for k in range(len(final.x))]
            (out_dir / "profile.dat").write_text(
                "# x phi00 phi11\n" + "\n".join(rows) + "\n")
    else:
        sys.stdout.write(body)
    return 0


# ----------------------------------------------------------------------
# report-all
# ----------------------------------------------------------------------

CHECKS: List[Tuple[str, Callable]] = [
    ("verify-algebra", run_verify_algebra),
    ("verify-tables", run_verify_tables),
    ("derive-lagrangian", run_derive_lagrangian),
    ("check-potential", run_check_potential),
    ("check-currents", run_check_currents),
    ("verify-dmodule", run_verify_dmodule),
    ("check-examples", run_check_examples),
    ("numerics", run_numerics),
]


def run_report_all(args) -> int:
    out_dir = Path(args.out or "reports")
    out_dir.mkdir(parents=True, exist_ok=True)
    manifest = []
    all_ok = True
    for name, runner in CHECKS:
        ok, payload = runner(args)
        all_ok = all_ok and ok
        artifact = out_dir / f"{name}.json"
        artifact.write_text(json.dumps(
            {"ok": ok, "report": _plain(payload, "text")},
            sort_keys=True, indent=2) + "\n")
        manifest.append({"check": name, "status": "pass" if ok else "fail",
                         "artifact": str(artifact)})
    (out_dir / "manifest.json").write_text(
        json.dumps(manifest, indent=2) + "\n")
    for row in manifest:
        print(f"{row['check']}: {row['status']}  ({row['artifact']})")
    return 0 if all_ok else 1


# ----------------------------------------------------------------------
# argument parsing and dispatch
# ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="z22field",
        description="verification and simulation suite for the graded "
                    "two-dimensional multiplet")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=FORMATS, default="text")
        p.add_argument("--potential", default="abstract",
                       help="abstract | cos | sin | poly:c0,c1,...")
        p.add_argument("--truncation", type=int, default=4)
        p.add_argument("--eliminate-aux", action="store_true")
        p.add_argument("--generic", action="store_true")
        p.add_argument("--out", default=None)
        return p

    for name, _ in CHECKS:
        if name == "numerics":
            continue
        common(sub.add_parser(name))
    common(sub.add_parser("report-all"))

    s = sub.add_parser("simulate")
    s.add_argument("--format", choices=FORMATS, default="csv")
    s.add_argument("--config", default=None,
                   help="key = value text file with SimConfig fields")
    s.add_argument("--alpha", type=float, default=None)
    s.add_argument("--dx", type=float, default=None)
    s.add_argument("--dt", type=float, default=None)
    s.add_argument("--x-min", dest="x_min", type=float, default=None)
    s.add_argument("--x-max", dest="x_max", type=float, default=None)
    s.add_argument("--t-end", dest="t_end", type=float, default=None)
    s.add_argument("--boundary", choices=sim.BOUNDARIES, default=None)
    s.add_argument("--model", choices=sim.MODELS, default=None)
    s.add_argument("--initial", choices=sim.PROFILES, default=None)
    s.add_argument("--output-stride", dest="output_stride", type=int,
                   default=None)
    s.add_argument("--param", action="append", default=[],
                   help="profile parameter name=value, repeatable")
    s.add_argument("--profile-dump", action="store_true",
                   help="write a gnuplot-readable final profile")
    s.add_argument("--out", default=None)
    return top


_RUNNERS = {name: runner for name, runner in CHECKS if name != "numerics"}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "simulate":
            return run_simulate(args)
        if args.command == "report-all":
            return run_report_all(args)
        runner = _RUNNERS[args.command]
        ok, payload = runner(args)
        if args.command == "derive-lagrangian" and args.format in (
                "latex", "text"):
            print(serialize.render(payload["lagrangian"], args.format))
        else:
            _emit_report(ok, payload, args.format, sys.stdout)
        return 0 if ok else 1
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2 if isinstance(exc, ValueError) else 1


if __name__ == "__main__":
    sys.exit(main())
