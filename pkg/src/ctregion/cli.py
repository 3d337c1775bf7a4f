"""Command-line front end.

Subcommands: ``region``, ``minimize``, ``block-power`` and ``verify``.
Options may also come from a JSON file given with ``--config``; explicit
flags override it. Exit status: 0 on success, 1 when ``verify`` finds
disagreements, 2 on bad input, 3 when a numerical step fails.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import blockpower, optimize, oracle, output, regions
from .channels import (
    GbcParams, GicParams, GmacParams, Load, PiecewiseLinearRegion, Regime, UnsupportedRegime,
    gic_regime,
)
from .mapping import TimePair

log = logging.getLogger("ctregion")

COMMANDS = ("region", "minimize", "block-power", "verify")
DEFAULTS = {"samples": regions.DEFAULT_SAMPLES, "grid": None, "seed": 0, "w": None,
            "svg": None, "out_dir": ".", "bounds": None}
SLACK = 1e-7


class UsageError(Exception):
    pass


class NumericalError(Exception):
    def __init__(self, op, exc):
        super().__init__(f"{op}: {exc}")
        self.op = op


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file with option values")
    common.add_argument("--channel", choices=("gmac", "gbc", "gic"))
    for name in ("p1", "p2", "h1", "h2", "p", "a", "b", "w"):
        common.add_argument(f"--{name}", type=float)
    common.add_argument("--tau", help="loads as 'tau1,tau2'")
    common.add_argument("--samples", type=int, help="boundary samples per curve")
    common.add_argument("--grid", type=int, help="grid size (block-power ratios or verify cells per axis)")
    common.add_argument("--seed", type=int)
    common.add_argument("--svg", help="also write an SVG plot to this path")
    common.add_argument("--out-dir", dest="out_dir")
    common.add_argument("--bounds", help="JSON file with inner/outer rate-region halfplanes (interference channel)")
    common.add_argument("-v", "--verbose", action="store_true")

    ap = argparse.ArgumentParser(prog="ctregion", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    for cmd in COMMANDS:
        sub.add_parser(cmd, parents=[common])
    return ap


def _merge(ns) -> dict:
    cfg = {}
    if ns.config:
        try:
            with open(ns.config, encoding="utf-8") as fh:
                cfg = json.load(fh)
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read config {ns.config}: {exc}")
        if not isinstance(cfg, dict):
            raise UsageError("config file must hold a JSON object")
        cfg = {k.replace("-", "_"): v for k, v in cfg.items()}
    for key, val in vars(ns).items():
        if key in ("config", "command", "verbose"):
            continue
        if val is not None:
            cfg[key] = val
    for key, val in DEFAULTS.items():
        cfg.setdefault(key, val)
    return cfg


def _tau(raw) -> Load:
    if raw is None:
        raise UsageError("--tau is required")
    if isinstance(raw, str):
        parts = raw.split(",")
    else:
        parts = list(raw)
    if len(parts) != 2:
        raise UsageError(f"--tau needs two values, got {raw!r}")
    try:
        return Load(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise UsageError(f"bad --tau: {exc}")


def _need(cfg, *names):
    missing = [n for n in names if cfg.get(n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + n for n in missing))
    return [float(cfg[n]) for n in names]


def _load_bounds(path):
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
        return PiecewiseLinearRegion(raw["inner"]), PiecewiseLinearRegion(raw["outer"])
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read bounds {path}: {exc}")


def _channel(cfg):
    kind = cfg.get("channel")
    try:
        if kind == "gmac":
            return GmacParams(*_need(cfg, "p1", "p2"))
        if kind == "gbc":
            return GbcParams(*_need(cfg, "h1", "h2", "p"))
        if kind == "gic":
            return GicParams(*_need(cfg, "p1", "p2", "a", "b"))
    except ValueError as exc:
        raise UsageError(str(exc))
    raise UsageError("--channel must be one of gmac, gbc, gic")


def _describe(params, load):
    base = {"tau1": load.tau1, "tau2": load.tau2}
    if isinstance(params, GmacParams):
        base.update(channel="gmac", p1=params.p1, p2=params.p2)
    elif isinstance(params, GbcParams):
        # report gains in the caller's order
        h1, h2 = (params.h2, params.h1) if params.swapped else (params.h1, params.h2)
        base.update(channel="gbc", h1=h1, h2=h2, p=params.p)
    else:
        base.update(channel="gic", p1=params.p1, p2=params.p2, a=params.a, b=params.b,
                    regime=gic_regime(params).value)
    return base


def _pair(d: TimePair):
    return [d.d1, d.d2]


def _step(op, fn, *args, **kw):
    try:
        return fn(*args, **kw)
    except (ValueError, ArithmeticError, RuntimeError, AssertionError) as exc:
        raise NumericalError(op, exc)


def _curves(params, load, cfg):
    """``[(name, BoundaryCurve, dashed)]`` for the configured channel."""
    n = int(cfg["samples"])
    if n < 2:
        raise UsageError("--samples must be >= 2")
    if isinstance(params, GmacParams):
        return [("boundary", _step("gmac_region_boundary", regions.gmac_region_boundary, params, load, n), False)]
    if isinstance(params, GbcParams):
        return [("boundary", _step("gbc_region_boundary", regions.gbc_region_boundary, params, load, n), False)]
    bounds = _load_bounds(cfg["bounds"]) if cfg.get("bounds") else None
    try:
        regime = gic_regime(params)
    except UnsupportedRegime as exc:
        raise UsageError(str(exc))
    if regime is Regime.MIXED and bounds is None:
        raise UsageError("mixed interference needs --bounds")
    res = _step("gic_region_boundary", regions.gic_region_boundary, params, load, n, bounds)
    if isinstance(res, tuple):
        return [("boundary_inner", res[0], False), ("boundary_outer", res[1], True)]
    return [("boundary", res, False)]


def _cmd_region(params, load, cfg, out):
    curves = _curves(params, load, cfg)
    payload = {"input": _describe(params, load), "samples": int(cfg["samples"]), "curves": {}}
    for name, curve, _ in curves:
        output.emit_boundary_csv(curve, os.path.join(out, f"{name}.csv"))
        payload["curves"][name] = {k: _pair(p) for k, p in curve.knots}
    if isinstance(params, GmacParams):
        payload["case"] = regions.gmac_case(params, load).value
    if isinstance(params, GbcParams):
        payload["p1c"] = regions.gbc_solve_p1c(params, load)
        payload["p1c_user"] = 2 if params.swapped else 1
    output.emit_json(payload, os.path.join(out, "region.json"))
    if cfg.get("svg"):
        output.emit_region_svg([(c, dashed) for _, c, dashed in curves], cfg["svg"])
    return 0


def _cmd_minimize(params, load, cfg, out):
    if cfg.get("w") is None:
        raise UsageError("minimize needs --w")
    try:
        obj = optimize.WeightedObjective(float(cfg["w"]))
    except ValueError as exc:
        raise UsageError(str(exc))
    payload = {"input": _describe(params, load), "w": obj.w}
    if isinstance(params, GmacParams):
        res = {"minimizer": _step("gmac_min_weighted", optimize.gmac_min_weighted, params, load, obj)}
    elif isinstance(params, GbcParams):
        res = {"minimizer": _step("gbc_min_weighted", optimize.gbc_min_weighted, params, load, obj)}
    else:
        curves = _curves(params, load, cfg)
        res = {}
        for name, curve, _ in curves:
            key = "minimizer" if name == "boundary" else name.replace("boundary", "minimizer")
            res[key] = _step("generic_min_weighted", optimize.generic_min_weighted, curve, obj)
    for key, m in res.items():
        payload[key] = {"d": _pair(m.d), "objective": m.objective_value, "branch": m.active_branch}
    output.emit_json(payload, os.path.join(out, "minimizer.json"))
    return 0


def _cmd_block(params, load, cfg, out):
    n = int(cfg["grid"] if cfg.get("grid") is not None else blockpower.DEFAULT_GRID)
    if n < 2:
        raise UsageError("--grid must be >= 2")
    if isinstance(params, GmacParams):
        trace = _step("gmac_block_boundary", blockpower.gmac_block_boundary, params, load, n)
        ref = _step("gmac_region_boundary", regions.gmac_region_boundary, params, load, int(cfg["samples"]))
    elif isinstance(params, GbcParams):
        trace = _step("gbc_block_boundary", blockpower.gbc_block_boundary, params, load, n)
        ref = _step("gbc_region_boundary", regions.gbc_region_boundary, params, load, int(cfg["samples"]))
    else:
        raise UsageError("block-power supports gmac and gbc only")
    output.emit_block_csv(trace, os.path.join(out, "block_power.csv"))
    if cfg.get("svg"):
        output.emit_block_svg(trace, ref, cfg["svg"])
    return 0


def _box(curve):
    lo = TimePair(0.8 * curve.d_b.d1, 0.8 * curve.d_a.d2)
    hi = TimePair(1.2 * curve.d_a.d1, 1.2 * curve.d_b.d2)
    return lo, hi


def _report_json(rep: oracle.GridReport):
    far = rep.far(SLACK)
    return {
        "grid_dims": list(rep.grid_dims),
        "agreements": rep.agreements,
        "disagreements": len(rep.disagreements),
        "far_disagreements": [
            {"d": _pair(d), "closed_form": a, "oracle": b, "boundary_distance": dist}
            for d, a, b, dist in far
        ],
    }


def _cmd_verify(params, load, cfg, out):
    n = int(cfg["grid"] if cfg.get("grid") is not None else 100)
    if n < 1:
        raise UsageError("--grid must be >= 1")
    curves = _curves(params, load, cfg)
    seed = int(cfg["seed"])
    checks = []
    if isinstance(params, GicParams) and len(curves) == 2:
        bounds = _load_bounds(cfg["bounds"]) if cfg.get("bounds") else None
        pair = oracle.gic_oracle(params, load, bounds)
        for idx, (name, curve, _) in enumerate(curves):
            orc = (lambda k: (lambda d: pair(d)[k]))(idx)
            checks.append((name, curve, orc))
    else:
        if isinstance(params, GmacParams):
            orc = oracle.gmac_oracle(params, load)
        elif isinstance(params, GbcParams):
            orc = oracle.gbc_oracle(params, load)
        else:
            orc = oracle.gic_oracle(params, load)
        checks.append((curves[0][0], curves[0][1], orc))
    payload = {"input": _describe(params, load), "slack": SLACK, "seed": seed, "checks": {}}
    failed = False
    for name, curve, orc in checks:
        rep = _step("compare_on_grid", oracle.compare_on_grid, curve.member, orc, _box(curve), (n, n))
        within = _step("convexity_probe", oracle.convexity_probe, curve.member, 200, seed, mode="within")
        entry = _report_json(rep)
        entry["subregion_convexity_witnesses"] = len(within)
        payload["checks"][name] = entry
        failed = failed or bool(entry["far_disagreements"]) or bool(within)
    output.emit_json(payload, os.path.join(out, "grid_report.json"))
    return 1 if failed else 0


_DISPATCH = {"region": _cmd_region, "minimize": _cmd_minimize, "block-power": _cmd_block,
             "verify": _cmd_verify}


def run(argv=None) -> int:
    ap = _parser()
    try:
        ns = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = _merge(ns)
        params = _channel(cfg)
        load = _tau(cfg.get("tau"))
        out = cfg["out_dir"]
        os.makedirs(out, exist_ok=True)
        return _DISPATCH[ns.command](params, load, cfg, out)
    except UsageError as exc:
        print(f"ctregion: error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"ctregion: numerical failure in {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"ctregion: I/O failure: {exc}", file=sys.stderr)
        return 3


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
