"""Command-line interface: run, convergence, compare, selfcheck."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import Weno7Error
from .harness import (RunConfig, compare, convergence_study, run,
                      write_convergence_csv)
from .kernels import SCHEMES, backend_name
from .problems import PROBLEM_NAMES
from .selfcheck import format_results, run_selfcheck


def _add_overrides(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--scheme", choices=SCHEMES, default=None)
    parser.add_argument("--n", type=int, default=None, help="cells per axis")
    parser.add_argument("--out", default=None, help="output directory")
    parser.add_argument("--faithful", action="store_true",
                        help="reference protocol: 8-stage linear integrator at CFL-based dt")
    parser.add_argument("--dt-mode", choices=["cfl_based", "spatial_order_scaled"],
                        default=None)
    parser.add_argument("--cfl", type=float, default=None)
    parser.add_argument("--t-final", type=float, default=None)
    parser.add_argument("--epsilon", type=float, default=None)
    parser.add_argument("--xi1", type=float, default=None)
    parser.add_argument("--xi2", type=float, default=None)
    parser.add_argument("--s-exp", type=int, default=None)
    parser.add_argument("--p-exp", type=int, default=None)
    parser.add_argument("--emit", default=None,
                        help="comma list: solution,errors,weights,indicators")


def _overrides(args) -> dict:
    out = {
        "scheme": args.scheme,
        "n": args.n,
        "output_dir": args.out,
        "cfl": args.cfl,
        "dt_mode": args.dt_mode,
        "t_final": args.t_final,
        "epsilon": args.epsilon,
        "xi1": args.xi1,
        "xi2": args.xi2,
        "s_exp": args.s_exp,
        "p_exp": args.p_exp,
    }
    if args.faithful:
        out["faithful"] = True
    if args.emit is not None:
        out["emit"] = tuple(args.emit.split(","))
    return out


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="weno7",
        description="Seventh-order WENO solver for 1D/2D conservation laws "
                    f"(active kernel backend: {backend_name()})")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute one configured run")
    p_run.add_argument("config", help="JSON config file or problem name")
    _add_overrides(p_run)

    p_conv = sub.add_parser("convergence", help="error sweep over grid sizes")
    p_conv.add_argument("problem", choices=PROBLEM_NAMES)
    p_conv.add_argument("--n", default="10,20,40,80,160",
                        help="comma list of cell counts")
    p_conv.add_argument("--scheme", choices=SCHEMES, default="ns7")
    p_conv.add_argument("--s-exp", type=int, default=None)
    p_conv.add_argument("--p-exp", type=int, default=None)
    p_conv.add_argument("--faithful", action="store_true")
    p_conv.add_argument("--dt-mode",
                        choices=["cfl_based", "spatial_order_scaled"],
                        default=None)
    p_conv.add_argument("--out", default="out")

    p_cmp = sub.add_parser("compare", help="run several configs, merge by x")
    p_cmp.add_argument("configs", nargs="+", help="JSON config files")
    p_cmp.add_argument("--out", default=None)

    sub.add_parser("selfcheck", help="coefficient and tableau oracles")

    args = parser.parse_args(argv)
    try:
        if args.command == "run":
            if args.config.endswith(".json"):
                config = RunConfig.from_json(args.config, **_overrides(args))
            else:
                config = RunConfig(problem=args.config,
                                   **{k: v for k, v in _overrides(args).items()
                                      if v is not None})
            result = run(config)
            print(f"wrote {result.manifest_path}")
            if result.solution_path is not None:
                print(f"wrote {result.solution_path}")
            for path in result.extra_paths.values():
                print(f"wrote {path}")
        elif args.command == "convergence":
            n_list = [int(v) for v in args.n.split(",")]
            config = RunConfig(problem=args.problem, scheme=args.scheme,
                               s_exp=args.s_exp, p_exp=args.p_exp,
                               faithful=args.faithful, dt_mode=args.dt_mode,
                               output_dir=args.out)
            rows = convergence_study(config, n_list)
            out = Path(args.out)
            out.mkdir(parents=True, exist_ok=True)
            path = out / f"{args.problem}_{args.scheme}_convergence.csv"
            write_convergence_csv(path, rows)
            print(f"{'N':>6} {'L1_error':>14} {'L1_order':>9} "
                  f"{'Linf_error':>14} {'Linf_order':>10}")
            for r in rows:
                l1o = "--" if r.l1_order is None else f"{r.l1_order:.2f}"
                lio = "--" if r.linf_order is None else f"{r.linf_order:.2f}"
                print(f"{r.n:>6} {r.l1_err:>14.4e} {l1o:>9} "
                      f"{r.linf_err:>14.4e} {lio:>10}")
            print(f"wrote {path}")
        elif args.command == "compare":
            configs = [RunConfig.from_json(c) for c in args.configs]
            path = compare(configs, args.out)
            print(f"wrote {path}")
        else:  # selfcheck
            results = run_selfcheck()
            print(format_results(results))
            if not all(r.ok for r in results):
                return 1
    except Weno7Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
