"""Command-line front door.

Subcommands: eval, table, grad-check, props, experiment (regression |
classification), landscape, plot. All randomness flows from --seed (or the
AF_SEED environment variable; the flag wins). Exit codes: 0 success,
1 check failure, 2 usage error, 3 training divergence.
"""

import argparse
import csv
import json
import os
import sys

import numpy as np

from . import catalog, composite, experiments, gradients
from .context import EvalContext
from .errors import ActivationError, TrainingDivergedError, UnknownKindError

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_DIVERGED = 3


class UsageError(Exception):
    pass


def _fail_usage(message):
    raise UsageError(message)


def _resolve_seed(args):
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get("AF_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            _fail_usage(f"AF_SEED: not an integer: {env!r}")
    return 0


def _parse_params(pairs):
    out = {}
    for item in pairs or []:
        if "=" not in item:
            _fail_usage(f"--param: expected name=value, got {item!r}")
        name, _, raw = item.partition("=")
        try:
            out[name.strip()] = float(raw)
        except ValueError:
            _fail_usage(f"--param: value for {name.strip()!r} is not a number: {raw!r}")
    return out


def _resolve_kind(name):
    try:
        return catalog.canonical_name(name)
    except UnknownKindError:
        _fail_usage(f"--fn: unknown activation {name!r}")


def _fixed_digits(v, digits=12):
    # fixed significant digits, trailing zeros kept
    v = float(v)
    if v == 0 or not np.isfinite(v):
        return f"{v:.{digits}f}" if np.isfinite(v) else str(v)
    exponent = int(np.floor(np.log10(abs(v))))
    decimals = digits - 1 - exponent
    if decimals < 0:
        return f"{v:.{digits}g}"
    return f"{v:.{decimals}f}"


def _ctx_for(args, seed):
    if getattr(args, "mode", "eval") == "train":
        return EvalContext.train(seed)
    return EvalContext.eval_mode()


def cmd_eval(args):
    kind = _resolve_kind(args.fn)
    params = _parse_params(args.param)
    if args.x is None:
        _fail_usage("--x: an input point is required")
    try:
        value = catalog.evaluate(kind, args.x, params, _ctx_for(args, _resolve_seed(args)))
    except ActivationError as err:
        _fail_usage(str(err))
    print(_fixed_digits(value))
    return EXIT_OK


def _table_rows(kind, params, lo, hi, step, subgradient, ctx):
    n = int(np.floor((hi - lo) / step + 1e-9)) + 1
    xs = lo + step * np.arange(n)
    rows = []
    for x in xs:
        g = gradients.grad(kind, float(x), params, ctx, subgradient=subgradient)
        rows.append((float(x), g.value, g.d_dx))
    return rows


def cmd_table(args):
    kind = _resolve_kind(args.fn)
    params = _parse_params(args.param)
    if args.lo is None or args.hi is None:
        _fail_usage("--from/--to: a range is required")
    if args.lo >= args.hi:
        _fail_usage("--from: range start must be below --to")
    if args.step <= 0:
        _fail_usage("--step: must be > 0")
    ctx = _ctx_for(args, _resolve_seed(args))
    try:
        p = catalog.effective_params(kind, params, ctx)
        kinks = [k for k in catalog.descriptor(kind, p).kinks if args.lo <= k <= args.hi]
        rows = _table_rows(kind, params, args.lo, args.hi, args.step,
                           args.subgradient, ctx)
    except ActivationError as err:
        _fail_usage(str(err))
    lines = ["x,value,d_dx"]
    for k in kinks:
        lines.append(f"# kink at x={k!r}; d_dx at kinks uses subgradient "
                     f"convention c={args.subgradient!r}")
    for x, v, d in rows:
        lines.append(f"{x!r},{v!r},{d!r}")
    text = "\n".join(lines) + "\n"
    _write_text(args.out, text)
    return EXIT_OK


def _write_text(out, text):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _check_one_kind(kind, tol, n, domain):
    reports = [gradients.grad_check(kind, ps, domain=domain, n=n, tol=tol)
               for ps in gradients.param_sets_for(kind)]
    worst = max(reports, key=lambda r: r.max_rel_err)
    return worst, all(r.passed for r in reports)


def cmd_grad_check(args):
    tol = args.tol
    names = []
    if args.all:
        names = catalog.kind_names()
    elif args.fn:
        names = [_resolve_kind(args.fn)]
    else:
        _fail_usage("--fn or --all: choose a kind to check")
    results = []
    for kind in names:
        worst, ok = _check_one_kind(kind, tol, args.samples, (-5.0, 5.0))
        results.append((f"kind:{kind}", worst, ok))
    if args.all:
        for obj in composite.default_instances() + composite.perturbed_instances():
            r = gradients.check_composite(obj, n=args.samples, tol=tol)
            results.append((f"composite:{obj.name}", r, r.passed))
    # order-independent assembly: sort by label
    results.sort(key=lambda t: t[0])
    all_ok = True
    for label, rep, ok in results:
        all_ok &= ok
        status = "PASS" if ok else "FAIL"
        targets = " ".join(f"{t}={e:.2e}" for t, e in sorted(rep.target_errors.items()))
        kinks = (" excluded_kinks=" + ",".join(f"{k:g}" for k in rep.excluded_kinks)
                 if rep.excluded_kinks else "")
        print(f"{status} {label:30s} max_rel_err={rep.max_rel_err:.3e} "
              f"worst={rep.worst_target}@x={rep.worst_x:+.5f} samples={rep.samples} "
              f"[{targets}]{kinks}")
    print(f"{'all passed' if all_ok else 'FAILURES PRESENT'} (tol={tol:g})")
    return EXIT_OK if all_ok else EXIT_CHECK_FAILED


def cmd_props(args):
    names = catalog.kind_names() if args.all or not args.fn else [_resolve_kind(args.fn)]

    def bound(v):
        return None if not np.isfinite(v) else v   # null marks an infinite end

    payload = []
    for kind in names:
        d = catalog.descriptor(kind)
        payload.append({
            "name": d.name, "group": d.group, "family": d.family,
            "range": {"lo": bound(d.output_range.lo), "hi": bound(d.output_range.hi),
                      "lo_closed": d.output_range.lo_closed,
                      "hi_closed": d.output_range.hi_closed},
            "monotonic": d.monotonic, "smooth": d.smooth, "bounded": d.bounded,
            "stochastic": d.stochastic,
            "has_learnable_params": d.has_learnable_params,
            "kinks": list(d.kinks),
            "defaults": catalog.default_params(kind),
        })
    if args.format == "json":
        text = json.dumps(payload if len(payload) > 1 else payload[0],
                          sort_keys=True, indent=2, default=float) + "\n"
    else:
        lines = ["name,group,family,lo,hi,monotonic,smooth,bounded,stochastic,learnable"]
        for d in payload:
            lo = d["range"]["lo"] if d["range"]["lo"] is not None else "-inf"
            hi = d["range"]["hi"] if d["range"]["hi"] is not None else "inf"
            lines.append(",".join(str(v) for v in (
                d["name"], d["group"], d["family"], lo, hi,
                d["monotonic"], d["smooth"], d["bounded"], d["stochastic"],
                d["has_learnable_params"])))
        text = "\n".join(lines) + "\n"
    _write_text(args.out, text)
    return EXIT_OK


def cmd_experiment(args):
    kind = _resolve_kind(args.fn)
    params = _parse_params(args.param)
    seed = _resolve_seed(args)
    out_dir = args.out or f"{args.task}-{kind}-seed{seed}"
    if args.task == "regression":
        cfg = experiments.RegressionConfig(seed=seed, rounds=args.rounds)
    else:
        cfg = experiments.ClassificationConfig(seed=seed, rounds=args.rounds)
    try:
        resolved = catalog.validate_params(kind, params)
    except ActivationError as err:
        _fail_usage(str(err))
    config = dict(cfg.to_dict(), activation=kind, activation_params=resolved)
    try:
        if args.task == "regression":
            res = experiments.run_regression(kind, params, cfg)
            experiments.write_run_dir(out_dir, config, metrics=res.metrics)
        else:
            res = experiments.run_classification(kind, params, cfg)
            experiments.write_run_dir(out_dir, config, metrics=res.metrics,
                                      confusion=res.confusion, boundary=res.boundary)
    except TrainingDivergedError as err:
        experiments.write_run_dir(out_dir, config,
                                  status=f"diverged: {err}")
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DIVERGED
    print(out_dir)
    return EXIT_OK


def cmd_landscape(args):
    kind = _resolve_kind(args.fn)
    params = _parse_params(args.param)
    seed = _resolve_seed(args)
    cfg = experiments.LandscapeConfig(seed=seed, resolution=args.resolution,
                                      width=args.width)
    out_dir = args.out or f"landscape-{kind}-seed{seed}"
    try:
        grid = experiments.output_landscape(kind, params, cfg)
    except ActivationError as err:
        _fail_usage(str(err))
    config = dict(cfg.to_dict(), activation=kind,
                  activation_params=catalog.validate_params(kind, params))
    experiments.write_run_dir(out_dir, config, landscape=grid,
                              landscape_extent=(cfg.lo, cfg.hi))
    if args.svg:
        from . import svgplot
        header, cols = _read_csv_columns(os.path.join(out_dir, "landscape.csv"))
        text = svgplot.heat_map_svg(cols[0], cols[1], cols[2],
                                    title=f"{kind} landscape (seed {seed})")
        with open(os.path.join(out_dir, "landscape.svg"), "w") as fh:
            fh.write(text)
    print(out_dir)
    return EXIT_OK


def _read_csv_columns(path):
    """Numeric columns of a CSV table, skipping '#' comment lines.

    Non-numeric columns (e.g. row labels) are dropped; if the first column is
    one of them, the row index stands in as x.
    """
    with open(path) as fh:
        rows = [r for r in csv.reader(fh)
                if r and not r[0].lstrip().startswith("#")]
    if len(rows) < 2:
        raise ValueError("CSV table has no data rows")
    header, data = rows[0], rows[1:]
    names, cols = [], []
    for i, name in enumerate(header):
        try:
            cols.append([float(r[i]) for r in data])
            names.append(name if name else f"col{i}")
        except (ValueError, IndexError):
            if i == 0:
                cols.append([float(j) for j in range(len(data))])
                names.append("row")
    if not cols or (len(cols) < 2):
        raise ValueError("CSV table has no numeric series to plot")
    return names, cols


def cmd_plot(args):
    try:
        header, cols = _read_csv_columns(args.input)
    except (OSError, ValueError, IndexError) as err:
        _fail_usage(f"input: cannot read CSV table: {err}")
    from . import svgplot
    if [h.strip().lower() for h in header] == ["x", "y", "value"]:
        text = svgplot.heat_map_svg(cols[0], cols[1], cols[2], title=args.input)
    else:
        text = svgplot.line_plot_svg(header, cols, title=args.input)
    out = args.out or (os.path.splitext(args.input)[0] + ".svg")
    with open(out, "w") as fh:
        fh.write(text)
    print(out)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="actlab",
                                description="activation-function laboratory")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fn=True):
        if fn:
            sp.add_argument("--fn", help="activation kind name")
            sp.add_argument("--param", action="append", metavar="NAME=VALUE",
                            help="override one parameter (repeatable)")
        sp.add_argument("--seed", type=int, default=None,
                        help="root seed (default: AF_SEED or 0)")
        sp.add_argument("--mode", choices=["train", "eval"], default="eval")
        sp.add_argument("--out", default=None)

    sp = sub.add_parser("eval", help="print one function value")
    common(sp)
    sp.add_argument("--x", type=float, default=None)
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("table", help="CSV of x,value,d_dx over a range")
    common(sp)
    sp.add_argument("--from", dest="lo", type=float, default=None)
    sp.add_argument("--to", dest="hi", type=float, default=None)
    sp.add_argument("--step", type=float, default=0.1)
    sp.add_argument("--subgradient", type=float, default=0.0,
                    help="derivative convention at kinks, in [0, 1]")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("grad-check", help="verify analytic derivatives against "
                        "central differences")
    common(sp)
    sp.add_argument("--all", action="store_true",
                    help="sweep every kind (plus composites) with default and "
                         "perturbed parameter sets")
    sp.add_argument("--tol", type=float, default=1e-5)
    sp.add_argument("--samples", type=int, default=1000)
    sp.set_defaults(func=cmd_grad_check)

    sp = sub.add_parser("props", help="print catalog metadata")
    common(sp)
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--format", choices=["csv", "json"], default="json")
    sp.set_defaults(func=cmd_props)

    sp = sub.add_parser("experiment", help="run a training experiment")
    sp.add_argument("task", choices=["regression", "classification"])
    common(sp)
    sp.add_argument("--rounds", type=int, default=50)
    sp.set_defaults(func=cmd_experiment)

    sp = sub.add_parser("landscape", help="output-landscape grid of a random net")
    common(sp)
    sp.add_argument("--resolution", type=int, default=200)
    sp.add_argument("--width", type=int, default=16)
    sp.add_argument("--svg", action="store_true", help="also render a heat map")
    sp.set_defaults(func=cmd_landscape)

    sp = sub.add_parser("plot", help="render a CSV produced by this tool as SVG")
    sp.add_argument("input")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_plot)

    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return EXIT_USAGE if exc.code not in (0,) else 0
    try:
        return args.func(args)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except ActivationError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
