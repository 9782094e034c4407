"""Command-line front end: device configs in, CSV/JSON out.

Subcommands: airy-check, scatter, resonances, sweep, limit-check.
Exit codes: 0 success, 2 config/usage error, 3 physics-domain error
(evanescent leads).  Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .airy import wronskian_sweep
from .errors import ConfigError, EvanescentLeadError
from .limits import LimitKind, delta_transmission, single_layer_limit
from .potential import (
    EV_TO_INVNM2,
    LayerSpec,
    StructureSpec,
    ev_to_invnm2,
    invnm2_to_ev,
    realize,
)
from .resonance import (
    ResonanceEquation,
    find_resonances_deltaprime_2layer,
    find_resonances_transistor_deltaprime,
    resonances_delta_barrier_well,
    resonances_transistor_delta,
)
from .scattering import scatter
from .sweep import SweepRequest, run_sweep, sweep_to_csv, sweep_to_json
from .transfer import structure_matrix

SCENARIOS = ("fig3_barrier_well", "fig5_transistor", "custom")

# power assignments the two figure templates use, per layer position
_TEMPLATE_POWERS = {
    "fig3_barrier_well": ((1.0, 1.0), (2.0, 1.0)),
    "fig5_transistor": ((1.0, 1.0), (2.0, 0.0), (1.0, 1.0)),
}

_EQ_FOR_SCENARIO = {
    "fig3_barrier_well": {
        ResonanceEquation.EQ73_DELTA_BARRIER_WELL,
        ResonanceEquation.EQ69_DELTAPRIME_2LAYER,
    },
    "fig5_transistor": {
        ResonanceEquation.EQ76_TRANSISTOR_DELTA,
        ResonanceEquation.EQ83_TRANSISTOR_DELTAPRIME,
    },
}


class DeviceConfig:
    """Validated config with all energies converted to nm^-2."""

    def __init__(self, spec: StructureSpec, energy: float, scenario: str, sweep: dict | None):
        self.spec = spec
        self.energy = energy
        self.scenario = scenario
        self.sweep = sweep


def _require_keys(obj: dict, allowed: set[str], where: str):
    unknown = set(obj) - allowed
    if unknown:
        raise ConfigError(f"unknown key(s) {sorted(unknown)} in {where}")


def _unit_factor(units: str) -> float:
    if units == "eV":
        return EV_TO_INVNM2
    if units == "invnm2":
        return 1.0
    raise ConfigError(f'units must be "eV" or "invnm2", got {units!r}')


def load_config(path: str) -> DeviceConfig:
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(raw, dict):
        raise ConfigError("config root must be an object")
    _require_keys(raw, {"units", "layers", "leads", "scenario", "sweep", "energy"}, "config")
    for key in ("units", "layers", "energy"):
        if key not in raw:
            raise ConfigError(f"missing required key {key!r}")
    scale = _unit_factor(raw["units"])
    scenario = raw.get("scenario", "custom")
    if scenario not in SCENARIOS:
        raise ConfigError(f"scenario must be one of {SCENARIOS}, got {scenario!r}")

    layers_raw = raw["layers"]
    if not isinstance(layers_raw, list) or not layers_raw:
        raise ConfigError("layers must be a non-empty list")
    template = _TEMPLATE_POWERS.get(scenario)
    if template is not None and len(layers_raw) != len(template):
        raise ConfigError(
            f"scenario {scenario!r} needs exactly {len(template)} layers"
        )
    layers = []
    for i, entry in enumerate(layers_raw):
        if not isinstance(entry, dict):
            raise ConfigError(f"layers[{i}] must be an object")
        _require_keys(entry, {"a", "b", "d", "mu", "nu"}, f"layers[{i}]")
        for key in ("a", "b", "d"):
            if key not in entry:
                raise ConfigError(f"layers[{i}] missing {key!r}")
        if template is not None:
            mu, nu = template[i]
            mu = entry.get("mu", mu)
            nu = entry.get("nu", nu)
        else:
            if "mu" not in entry or "nu" not in entry:
                raise ConfigError(f"layers[{i}] needs mu and nu for custom scenario")
            mu, nu = entry["mu"], entry["nu"]
        try:
            layers.append(
                LayerSpec(entry["a"] * scale, entry["b"] * scale, entry["d"], mu, nu)
            )
        except ValueError as exc:
            raise ConfigError(f"layers[{i}]: {exc}") from exc

    leads = raw.get("leads", {})
    _require_keys(leads, {"v_left", "v_right"}, "leads")
    v_left = leads.get("v_left", 0.0) * scale
    v_right = leads.get("v_right")
    if v_right is not None:
        v_right = v_right * scale
    spec = StructureSpec(tuple(layers), v_left, v_right)

    sweep = raw.get("sweep")
    if sweep is not None:
        _require_keys(
            sweep,
            {"tuned_layer", "tuned_sign", "lo", "hi", "points", "epsilons", "peak_floor"},
            "sweep",
        )
        for key in ("tuned_layer", "lo", "hi"):
            if key not in sweep:
                raise ConfigError(f"sweep missing {key!r}")
        sweep = dict(sweep)
        sweep["lo"] = sweep["lo"] * scale
        sweep["hi"] = sweep["hi"] * scale
    return DeviceConfig(spec, raw["energy"] * scale, scenario, sweep)


def cmd_airy_check(args) -> int:
    worst, per_regime = wronskian_sweep()
    if args.inject_fault:
        worst += 1e-6
    if args.verbose:
        for name in sorted(per_regime):
            print(f"{name}: {per_regime[name]:.3e}", file=sys.stderr)
    print(f"max wronskian deviation: {worst:.3e}")
    return 0 if worst < 1e-10 else 1


def cmd_scatter(args) -> int:
    cfg = load_config(args.config)
    energy = ev_to_invnm2(args.energy) if args.energy is not None else cfg.energy
    matrix = structure_matrix(realize(cfg.spec, args.epsilon), energy)
    v_l, v_r = cfg.spec.lead_potentials()
    res = scatter(matrix, v_l, v_r, energy)
    doc = {
        "energy_invnm2": energy,
        "epsilon": args.epsilon,
        "lambda": [[matrix.l11, matrix.l12], [matrix.l21, matrix.l22]],
        "det": matrix.det(),
        "R_L": [res.r_left.real, res.r_left.imag],
        "T_L": [res.t_left.real, res.t_left.imag],
        "R_R": [res.r_right.real, res.r_right.imag],
        "T_R": [res.t_right.real, res.t_right.imag],
        "reflection": res.refl_prob,
        "transmission": res.trans_prob,
        "k_left": res.k_left,
        "k_right": res.k_right,
    }
    print(json.dumps(doc, sort_keys=True, indent=2))
    return 0


def _resolve_equation(name: str) -> ResonanceEquation:
    for eq in ResonanceEquation:
        if eq.value == name or eq.value.startswith(name):
            return eq
    raise ConfigError(f"unknown equation {name!r}")


def cmd_resonances(args) -> int:
    cfg = load_config(args.config)
    eq = _resolve_equation(args.equation)
    allowed = _EQ_FOR_SCENARIO.get(cfg.scenario, set())
    if eq not in allowed:
        raise ConfigError(f"equation {eq.value} does not apply to scenario {cfg.scenario!r}")
    scale = _unit_factor(args.units)
    lo, hi = args.interval[0] * scale, args.interval[1] * scale
    layers = cfg.spec.layers
    if eq is ResonanceEquation.EQ73_DELTA_BARRIER_WELL:
        rset = resonances_delta_barrier_well(
            layers[1].a, layers[1].d, (lo, hi),
            a1=layers[0].a, d1=layers[0].d, energy=cfg.energy,
        )
    elif eq is ResonanceEquation.EQ69_DELTAPRIME_2LAYER:
        rset = find_resonances_deltaprime_2layer(
            layers[0].a, layers[1].a, layers[0].d, layers[1].d, (lo, hi),
            b2=layers[1].b, energy=cfg.energy,
        )
    elif eq is ResonanceEquation.EQ76_TRANSISTOR_DELTA:
        rset = resonances_transistor_delta(
            layers[1].d, hi,
            a1=layers[0].a, a3=layers[2].a, d1=layers[0].d, d3=layers[2].d,
            v_cb=-layers[2].b, energy=cfg.energy,
        )
        rset = type(rset)(rset.equation, tuple(r for r in rset.roots if r.value >= lo))
    else:
        rset = find_resonances_transistor_deltaprime(
            layers[0].a, layers[2].a, layers[0].d, layers[1].d, layers[2].d,
            -layers[2].b, (lo, hi), energy=cfg.energy,
        )
    print("n,value_eV,value_invnm2,theta,alpha,T_n,admissible")
    for root in rset.roots:
        theta = "" if root.theta is None else repr(root.theta)
        trans = "" if root.trans_prob is None else repr(root.trans_prob)
        print(
            f"{root.n},{invnm2_to_ev(root.value)!r},{root.value!r},"
            f"{theta},{root.alpha!r},{trans},{int(root.admissible)}"
        )
    return 0


def cmd_sweep(args) -> int:
    cfg = load_config(args.config)
    if cfg.sweep is None:
        raise ConfigError("config has no sweep block")
    epsilons = (
        tuple(float(e) for e in args.epsilons.split(","))
        if args.epsilons
        else tuple(cfg.sweep.get("epsilons", (0.5, 0.25, 0.1)))
    )
    req = SweepRequest(
        structure=cfg.spec,
        tuned_layer=cfg.sweep["tuned_layer"],
        grid_lo=cfg.sweep["lo"],
        grid_hi=cfg.sweep["hi"],
        grid_points=int(cfg.sweep.get("points", 2001)),
        epsilons=epsilons,
        energy=cfg.energy,
        tuned_sign=float(cfg.sweep.get("tuned_sign", -1.0)),
        peak_floor=float(cfg.sweep.get("peak_floor", 0.01)),
    )
    if min(epsilons) < 0.02:
        print(
            "note: epsilon < 0.02 drives Airy arguments to |z| ~ 1e4; "
            "scaled evaluation is in effect",
            file=sys.stderr,
        )
    roots: tuple[float, ...] = ()
    layers = cfg.spec.layers
    if cfg.scenario == "fig3_barrier_well":
        rset = resonances_delta_barrier_well(
            layers[1].a, layers[1].d,
            (-req.grid_hi, -req.grid_lo) if req.tuned_sign < 0 else (req.grid_lo, req.grid_hi),
            a1=layers[0].a, d1=layers[0].d,
        )
        roots = tuple(req.tuned_sign * r.value for r in rset.roots)
    elif cfg.scenario == "fig5_transistor":
        rset = resonances_transistor_delta(
            layers[1].d, req.grid_hi,
            a1=layers[0].a, a3=layers[2].a, d1=layers[0].d, d3=layers[2].d,
            v_cb=-layers[2].b,
        )
        roots = tuple(r.value for r in rset.roots if r.value >= req.grid_lo)
    result = run_sweep(req, reference_roots=tuple(sorted(roots)))
    csv_text = sweep_to_csv(result)
    json_text = sweep_to_json(result)
    if args.out:
        with open(args.out + ".csv", "w") as fh:
            fh.write(csv_text)
        with open(args.out + ".json", "w") as fh:
            fh.write(json_text)
        print(f"wrote {args.out}.csv and {args.out}.json", file=sys.stderr)
    else:
        sys.stdout.write(csv_text)
    for eps, pk, conv in zip(
        req.epsilons, result.peaks, result.convergence or [()] * len(result.peaks)
    ):
        peaks_ev = ", ".join(f"{invnm2_to_ev(p):.6f}" for p in pk)
        errs = ", ".join(f"{invnm2_to_ev(c):.6f}" for c in conv)
        print(f"eps={eps}: peaks(eV) [{peaks_ev}] root-errors(eV) [{errs}]", file=sys.stderr)
    return 0


def cmd_limit_check(args) -> int:
    """Squeezing-convergence check for the delta-point limit."""
    layer = LayerSpec(
        a=ev_to_invnm2(0.3), b=ev_to_invnm2(-0.1), d=1.0, mu=1.0, nu=1.0
    )
    energy = ev_to_invnm2(0.3)
    epsilons = (0.5, 0.25, 0.1, 0.05)
    limit = single_layer_limit(layer, epsilon_probe=epsilons, energy=energy)
    assert limit.kind is LimitKind.DELTA
    k = math.sqrt(energy)
    k_r = math.sqrt(energy - layer.b)
    t_formula = delta_transmission(limit.alpha, k, k_r)
    print("epsilon,T_exact,T_limit,abs_error")
    errors = []
    for eps, t_eps, t_lim in limit.probe:
        err = abs(t_eps - t_lim)
        errors.append(err)
        print(f"{eps!r},{t_eps!r},{t_lim!r},{err!r}")
    print(f"closed-form T = {t_formula!r}", file=sys.stderr)
    decreasing = all(a > b for a, b in zip(errors, errors[1:]))
    ok = decreasing and errors[-1] < 0.01
    print(f"convergence {'ok' if ok else 'FAILED'}", file=sys.stderr)
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="airystack",
        description="Quantum transmission through squeezed biased multilayers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("airy-check", help="Wronskian sweep of the Airy evaluator")
    p.add_argument("--verbose", action="store_true", help="per-regime deviation table")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_airy_check)

    p = sub.add_parser("scatter", help="transfer matrix and R/T for one energy")
    p.add_argument("config")
    p.add_argument("--energy", type=float, help="override config energy (eV)")
    p.add_argument("--epsilon", type=float, default=1.0)
    p.set_defaults(func=cmd_scatter)

    p = sub.add_parser("resonances", help="resonance set of the device template")
    p.add_argument("config")
    p.add_argument("--equation", required=True,
                   help="EQ69_DELTAPRIME_2LAYER | EQ73_DELTA_BARRIER_WELL | "
                        "EQ76_TRANSISTOR_DELTA | EQ83_TRANSISTOR_DELTAPRIME")
    p.add_argument("--interval", type=float, nargs=2, required=True,
                   metavar=("LO", "HI"))
    p.add_argument("--units", default="eV", choices=("eV", "invnm2"))
    p.set_defaults(func=cmd_resonances)

    p = sub.add_parser("sweep", help="transmission curves over the tuned bias")
    p.add_argument("config")
    p.add_argument("--epsilons", help="comma-separated, overrides config")
    p.add_argument("--out", help="output prefix for .csv/.json files")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("limit-check", help="delta-limit squeezing convergence table")
    p.set_defaults(func=cmd_limit_check)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except EvanescentLeadError as exc:
        print(f"physics error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
