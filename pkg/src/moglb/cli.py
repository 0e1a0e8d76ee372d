"""Command-line entry point: instance generation, experiment execution,
confidence-width grid search, and report emission.

Exit codes: 0 success, 1 validation error, 2 runtime or generation failure.
A flat JSON config file (--config) supplies defaults; explicit flags win.
The output directory defaults to $MOGLB_OUT_DIR or ./moglb_out.
"""

import argparse
import json
import os
import sys
from dataclasses import fields

import numpy as np

from .environment import GenerationError, generate_instance
from .harness import (
    ALGO_IDS,
    ExperimentConfig,
    run_experiment,
    summary_to_text,
    tune_gamma,
    write_records_csv,
)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_RUNTIME = 2

_CONFIG_FIELDS = {f.name for f in fields(ExperimentConfig)}


class CliValidationError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliValidationError(message)


def default_out_dir() -> str:
    return os.environ.get("MOGLB_OUT_DIR", "moglb_out")


def build_parser() -> _Parser:
    parser = _Parser(prog="moglb", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_common(p):
        p.add_argument("--config", help="flat JSON config file; flags override its values")
        p.add_argument("--d", type=int, help="context dimension (>= 2)")
        p.add_argument("--m", type=int, help="number of objectives")
        p.add_argument("--seed", type=int, help="base seed")
        p.add_argument("--out-dir", help="output directory")

    gen = sub.add_parser("generate", help="generate and serialize a problem instance")
    add_common(gen)
    gen.add_argument("--out", help="instance file path (default <out-dir>/instance.json)")
    gen.add_argument("--max-attempts", type=int, default=1000)

    run = sub.add_parser("run", help="run the benchmark experiment")
    add_common(run)
    _add_run_flags(run)

    tune = sub.add_parser("tune-gamma", help="grid-search the tuned confidence-width multiplier")
    add_common(tune)
    _add_run_flags(tune)
    tune.add_argument("--grid", default="0.001,0.01,0.1,1.0", help="comma-separated c values")

    return parser


def _add_run_flags(p):
    p.add_argument("--T", type=int, help="horizon")
    p.add_argument("--trials", type=int, help="number of trials")
    p.add_argument("--algos", help=f"comma-separated roster from {sorted(ALGO_IDS)}")
    p.add_argument("--gamma-mode", choices=["theoretical", "tuned"])
    p.add_argument("--gamma-c", type=float, help="tuned-mode width multiplier in [1e-3, 1]")
    p.add_argument("--delta", type=float, help="confidence level parameter in (0, 1)")
    p.add_argument("--lam", type=float, help="explicit regularizer (default max(1, kappa/2))")
    p.add_argument("--instance", help="pin one serialized instance across all trials")
    p.add_argument("--jobs", type=int, help="parallel trial workers")
    p.add_argument("--csv", help="records CSV path (default <out-dir>/records.csv)")
    p.add_argument("--summary", help="summary path (default <out-dir>/summary.txt)")


def load_config_file(path: str) -> dict:
    with open(path) as fh:
        payload = json.load(fh)
    if not isinstance(payload, dict):
        raise ValueError("config file must hold a flat JSON object")
    return payload


def build_experiment_config(args) -> ExperimentConfig:
    base = {}
    if getattr(args, "config", None):
        base = ExperimentConfig.from_file_dict(load_config_file(args.config)).__dict__.copy()
    overrides = {
        "d": args.d,
        "m": args.m,
        "base_seed": args.seed,
        "T": getattr(args, "T", None),
        "trials": getattr(args, "trials", None),
        "gamma_mode": getattr(args, "gamma_mode", None),
        "gamma_c": getattr(args, "gamma_c", None),
        "delta": getattr(args, "delta", None),
        "lam": getattr(args, "lam", None),
        "instance_path": getattr(args, "instance", None),
        "jobs": getattr(args, "jobs", None),
    }
    if getattr(args, "algos", None):
        overrides["algorithms"] = tuple(name.strip() for name in args.algos.split(",") if name.strip())
    merged = {k: v for k, v in base.items() if k in _CONFIG_FIELDS}
    merged.update({k: v for k, v in overrides.items() if v is not None})
    return ExperimentConfig(**merged).validate()


def cmd_generate(args) -> int:
    d = args.d if args.d is not None else 10
    m = args.m if args.m is not None else 5
    seed = args.seed if args.seed is not None else 0
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    out_dir = args.out_dir or default_out_dir()
    out = args.out or os.path.join(out_dir, "instance.json")
    rng = np.random.default_rng(seed)
    instance = generate_instance(d, m, rng, max_attempts=args.max_attempts, seed=seed)
    os.makedirs(os.path.dirname(os.path.abspath(out)), exist_ok=True)
    instance.save(out)
    print(f"instance written to {out}")
    print(f"K={instance.K} front_size={instance.true_front.size} links={','.join(instance.links)}")
    return EXIT_OK


def cmd_run(args) -> int:
    config = build_experiment_config(args)
    out_dir = args.out_dir or default_out_dir()
    csv_path = args.csv or os.path.join(out_dir, "records.csv")
    summary_path = args.summary or os.path.join(out_dir, "summary.txt")
    records, summary = run_experiment(config)
    os.makedirs(os.path.dirname(os.path.abspath(csv_path)), exist_ok=True)
    os.makedirs(os.path.dirname(os.path.abspath(summary_path)), exist_ok=True)
    write_records_csv(records, csv_path)
    with open(summary_path, "w") as fh:
        fh.write(summary_to_text(summary, config))
    print(f"records written to {csv_path} ({len(records)} rows)")
    print(f"summary written to {summary_path}")
    print(summary_to_text(summary, config), end="")
    return EXIT_OK


def cmd_tune_gamma(args) -> int:
    config = build_experiment_config(args)
    grid = [float(v) for v in args.grid.split(",") if v.strip()]
    best_c, table = tune_gamma(config, grid)
    print("c,mean_final_pareto_regret,best")
    for c, regret in table:
        marker = "*" if c == best_c else ""
        print(f"{c:.9g},{regret:.9g},{marker}")
    print(f"best_c={best_c:.9g}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "generate":
            return cmd_generate(args)
        if args.command == "run":
            return cmd_run(args)
        return cmd_tune_gamma(args)
    except (CliValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (GenerationError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
