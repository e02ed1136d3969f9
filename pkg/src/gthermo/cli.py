"""Command-line interface: scenario runner, sweeps and verification.

Verbs:

* ``run <scenario.json> [--out PATH]``: full ledger as a JSON document;
* ``sweep <scenario.json> --axis NAME [--from A --to B --steps N] [--out PATH]``:
  deterministic CSV over one parameter axis;
* ``verify <scenario.json> --mode closed_form|fock``: compare the ledger
  against a registered closed form or against the Fock oracle;
* ``schema``: print the scenario JSON schema.

Exit codes: 0 success, 2 validation failure, 3 physicality rejection,
4 Fock truncation overflow.  ``GTHERMO_TOL`` overrides the comparison
tolerance of ``verify`` for exploratory runs.
"""

from __future__ import annotations

import argparse
import cmath
import json
import math
import sys
from dataclasses import replace
from importlib import resources

import jsonschema

from . import fock
from .core import is_entangled, renyi2_mutual_information
from .errors import (
    CoherentSystemSignal,
    DomainError,
    EnvelopeExceeded,
    NonPhysical,
    NumericalDomain,
    TruncationOverflow,
    UnknownScenario,
)
from .extraction import net_work
from .states import (
    PREDICTORS,
    CorrelatedSpec,
    SingleModeSpec,
    build_state,
    predict,
    type1_pa_negative_heat_threshold,
)
from .thermo import ledger, ledger_quantities, tol_num
from .transforms import FC, PA, BilinearTransform, apply

_CSV_COLUMNS = [
    "dE_A",
    "dE_B",
    "W",
    "dQ",
    "dW_A",
    "netW",
    "I2_in",
    "I2_out",
    "entangled_in",
    "entangled_out",
    "T_A_in",
    "T_B_in",
    "T_A_out",
    "T_B_out",
]

_REPORT_FIELDS = [
    "dE_A",
    "dE_B",
    "W",
    "dQ",
    "dW_A",
    "dB_A",
    "dB_B",
    "dF_A",
    "dF_B",
    "dS_A",
    "dS_B",
    "dI",
    "dI2",
    "T_A_in",
    "T_B_in",
    "T_A_out",
    "T_B_out",
    "clausius_residual",
]


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def schema_text() -> str:
    return resources.files("gthermo").joinpath("scenario_schema.json").read_text()


def load_scenario(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    jsonschema.validate(doc, json.loads(schema_text()))
    return doc


def _complex_from(obj) -> complex:
    if obj is None:
        return 0j
    return complex(obj["re"], obj["im"])


def _single_mode_from(obj) -> SingleModeSpec:
    return SingleModeSpec(
        N=obj["N"],
        r=obj.get("r", 0.0),
        theta_sq=obj.get("theta_sq", 0.0),
        alpha=_complex_from(obj.get("alpha")),
        omega=obj.get("omega", 1.0),
    )


def state_spec_from(obj):
    kind = obj["kind"]
    if kind == "product":
        return _single_mode_from(obj["mode_a"]), _single_mode_from(obj["mode_b"])
    if kind == "tmsv":
        return CorrelatedSpec(
            "tmsv",
            r=obj["r"],
            omega_a=obj.get("omega_a", 1.0),
            omega_b=obj.get("omega_b", 1.0),
        )
    return CorrelatedSpec(
        kind,
        N_A=obj.get("N_A", 0.0),
        N_B=obj.get("N_B", 0.0),
        c=obj.get("c", 0.0),
        alpha=_complex_from(obj.get("alpha")),
        delta=_complex_from(obj.get("delta")),
        omega_a=obj.get("omega_a", 1.0),
        omega_b=obj.get("omega_b", 1.0),
        custom_eps=tuple(map(tuple, obj["eps"])) if kind == "custom" else None,
    )


def transform_from(obj) -> BilinearTransform:
    return BilinearTransform(obj["kind"], obj["angle"], obj.get("phase", 0.0))


def _report_dict(report) -> dict:
    return {name: getattr(report, name) for name in _REPORT_FIELDS}


def _with_axis(scenario: dict, axis: str, value: float):
    """Scenario objects with one swept parameter replaced by ``value``."""
    t = transform_from(scenario["transform"])
    spec = state_spec_from(scenario["state"])
    if axis in ("theta", "phi"):
        if t.kind != FC:
            raise DomainError(f"axis {axis!r} requires a frequency-converter transform")
        t = BilinearTransform(FC, value if axis == "theta" else t.angle, value if axis == "phi" else t.phase)
    elif axis in ("r", "psi"):
        if t.kind != PA:
            raise DomainError(f"axis {axis!r} requires a parametric-amplifier transform")
        t = BilinearTransform(PA, value if axis == "r" else t.angle, value if axis == "psi" else t.phase)
    elif axis == "c":
        if not isinstance(spec, CorrelatedSpec) or spec.family not in ("type1", "type2"):
            raise DomainError("axis 'c' requires a type1 or type2 state")
        spec = replace(spec, c=value)
    elif axis in ("N_A", "N_B"):
        if isinstance(spec, CorrelatedSpec):
            spec = replace(spec, **{axis: value})
        else:
            a, b = spec
            spec = (replace(a, N=value), b) if axis == "N_A" else (a, replace(b, N=value))
    elif axis == "delta_abs":
        if isinstance(spec, CorrelatedSpec):
            phase = cmath.phase(spec.delta) if spec.delta != 0 else 0.0
            spec = replace(spec, delta=value * cmath.exp(1j * phase))
        else:
            a, b = spec
            phase = cmath.phase(b.alpha) if b.alpha != 0 else 0.0
            spec = (a, replace(b, alpha=value * cmath.exp(1j * phase)))
    else:
        raise DomainError(f"unknown sweep axis {axis!r}")
    return t, spec


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_run(args) -> int:
    scenario = load_scenario(args.scenario)
    t = transform_from(scenario["transform"])
    state = build_state(state_spec_from(scenario["state"]))
    report = ledger(t, state)
    doc = {"scenario": scenario, "report": _report_dict(report)}
    if scenario.get("extract", False):
        res = net_work(t, state)
        doc["extraction"] = {
            "net_gain": res.net_gain,
            "dF_A": res.dF_A,
            "W": res.W,
            "dE_B": res.dE_B,
            "dB_A": res.dB_A,
        }
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


def _sweep_rows(scenario: dict, axis: str, lo: float, hi: float, steps: int):
    for k in range(steps):
        value = lo + (hi - lo) * k / (steps - 1)
        t, spec = _with_axis(scenario, axis, value)
        state = build_state(spec)
        report = ledger(t, state)
        out = apply(t, state)
        cells = [
            _fmt(value),
            _fmt(report.dE_A),
            _fmt(report.dE_B),
            _fmt(report.W),
            _fmt(report.dQ),
            _fmt(report.dW_A),
            _fmt(report.net_gain),
            _fmt(renyi2_mutual_information(state.cov)),
            _fmt(renyi2_mutual_information(out.cov)),
            "true" if is_entangled(state.cov) else "false",
            "true" if is_entangled(out.cov) else "false",
            _fmt(report.T_A_in),
            _fmt(report.T_B_in),
            _fmt(report.T_A_out),
            _fmt(report.T_B_out),
        ]
        yield ",".join(cells)


def cmd_sweep(args) -> int:
    scenario = load_scenario(args.scenario)
    sweep = scenario.get("sweep", {})
    axis = args.axis or sweep.get("parameter")
    if axis is None:
        raise DomainError("no sweep axis given (flag --axis or scenario.sweep.parameter)")
    lo = args.start if args.start is not None else sweep.get("from")
    hi = args.stop if args.stop is not None else sweep.get("to")
    steps = args.steps if args.steps is not None else sweep.get("steps")
    if lo is None or hi is None or steps is None:
        raise DomainError("sweep needs from/to/steps (flags or scenario.sweep)")
    if steps < 2:
        raise DomainError("sweep needs at least 2 steps")
    lines = [",".join([axis] + _CSV_COLUMNS)]
    lines.extend(_sweep_rows(scenario, axis, float(lo), float(hi), int(steps)))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _verify_closed_form(scenario: dict, out) -> int:
    verify = scenario.get("verify", {})
    tag = verify.get("predictor")
    if tag is None or tag not in PREDICTORS:
        raise UnknownScenario(
            f"verify.predictor must name a registered closed form, got {tag!r}; "
            f"known: {', '.join(sorted(PREDICTORS))}"
        )
    t = transform_from(scenario["transform"])
    spec = state_spec_from(scenario["state"])
    predicted = predict(tag, t, spec)
    actual = ledger_quantities(t, build_state(spec))
    tol = tol_num()
    print(f"closed-form check: {tag}", file=out)
    worst = 0.0
    for name, value in sorted(predicted.items()):
        if name == "cooling_threshold_N_B":
            # root prediction: the ledger heat must vanish at the threshold
            t2, spec2 = transform_from(scenario["transform"]), state_spec_from(scenario["state"])
            a, b = spec2
            residual = abs(ledger(t2, build_state((a, replace(b, N=max(value, 0.0))))).dQ)
            worst = max(worst, residual)
            status = "ok" if residual <= max(tol, 1e-8) else "MISMATCH"
            print(
                f"  {name:<22} predicted {_fmt(value):>20}  ledger dQ at threshold"
                f" {residual:.3e}  {status}",
                file=out,
            )
            continue
        if name not in actual:
            print(f"  {name:<22} predicted {_fmt(value)} (no ledger counterpart)", file=out)
            continue
        diff = abs(value - actual[name])
        rel = diff / max(1.0, abs(value), abs(actual[name]))
        worst = max(worst, rel)
        status = "ok" if rel <= tol else "MISMATCH"
        print(
            f"  {name:<22} predicted {_fmt(value):>20}  ledger {_fmt(actual[name]):>20}"
            f"  |diff| {diff:.3e}  {status}",
            file=out,
        )
    if tag == "pa_type1_heat" and isinstance(spec, CorrelatedSpec):
        c_m = math.sqrt(spec.N_A * spec.N_B)
        threshold = type1_pa_negative_heat_threshold(spec.N_A, spec.N_B, t.angle)
        window = "non-empty" if threshold < c_m else "empty"
        print(
            f"  bath-cooling window: |c| > {_fmt(threshold)} (admissible max c_M = {_fmt(c_m)};"
            f" window {window})",
            file=out,
        )
    print(f"  max relative deviation: {worst:.3e} (tolerance {tol:g})", file=out)
    return 0 if worst <= tol else 2


def _verify_fock(scenario: dict, out) -> int:
    t = transform_from(scenario["transform"])
    state = build_state(state_spec_from(scenario["state"]))
    gauss = ledger(t, state)
    oracle = fock.oracle_report(t, state)
    print("fock-oracle check", file=out)
    worst = 0.0
    for name in _REPORT_FIELDS:
        g_val, f_val = getattr(gauss, name), getattr(oracle, name)
        diff = abs(g_val - f_val)
        worst = max(worst, diff)
        print(
            f"  {name:<18} gauss {_fmt(g_val):>20}  fock {_fmt(f_val):>20}  |diff| {diff:.3e}",
            file=out,
        )
    print(f"  max abs deviation: {worst:.3e}", file=out)
    return 0


def cmd_verify(args) -> int:
    scenario = load_scenario(args.scenario)
    if args.mode == "closed_form":
        return _verify_closed_form(scenario, sys.stdout)
    return _verify_fock(scenario, sys.stdout)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gthermo",
        description="Quantum thermodynamics of two bosonic Gaussian modes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="evaluate one scenario and emit the JSON ledger")
    p_run.add_argument("scenario")
    p_run.add_argument("--out", default=None)
    p_run.set_defaults(func=cmd_run)

    p_sweep = sub.add_parser("sweep", help="sweep one parameter and emit CSV")
    p_sweep.add_argument("scenario")
    p_sweep.add_argument("--axis", default=None)
    p_sweep.add_argument("--from", dest="start", type=float, default=None)
    p_sweep.add_argument("--to", dest="stop", type=float, default=None)
    p_sweep.add_argument("--steps", type=int, default=None)
    p_sweep.add_argument("--out", default=None)
    p_sweep.set_defaults(func=cmd_sweep)

    p_verify = sub.add_parser("verify", help="check the ledger against a closed form or the Fock oracle")
    p_verify.add_argument("scenario")
    p_verify.add_argument("--mode", choices=["closed_form", "fock"], required=True)
    p_verify.set_defaults(func=cmd_verify)

    p_schema = sub.add_parser("schema", help="print the scenario JSON schema")
    p_schema.set_defaults(func=lambda args: (sys.stdout.write(schema_text()), 0)[1])

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (json.JSONDecodeError, jsonschema.ValidationError) as exc:
        print(f"error: invalid scenario: {exc}", file=sys.stderr)
        return 2
    except (DomainError, UnknownScenario, CoherentSystemSignal, EnvelopeExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NonPhysical, NumericalDomain) as exc:
        print(f"error: unphysical input: {exc}", file=sys.stderr)
        return 3
    except TruncationOverflow as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
