"""Command-line interface: compute, sweep, and gen subcommands.

Results go to stdout (or ``--output``); diagnostics go to stderr so reports
can be piped cleanly. Exit codes: 0 success, 1 usage or validation problem,
2 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import SweepConfig, run_sweep, write_csv
from .dataset import Dataset, GeneratorConfig, load_dataset, write_generated
from .distance import CostModel, EvalCounter, decode, load_cost_model
from .perturb import approximate_median


class _Parser(argparse.ArgumentParser):
    # Usage problems are exit code 1; argparse's default of 2 is reserved
    # for I/O failures here.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_io_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--input", required=True, help="dataset file, one string per line")
    sub.add_argument("--cost", default="freeman",
                     help="cost model: 'freeman', 'unit', or a JSON file path")
    sub.add_argument("--alphabet", type=int, default=None,
                     help="alphabet size (default: 8 for freeman, inferred for unit)")
    sub.add_argument("--allow-empty", action="store_true",
                     help="accept blank lines as empty sequences")
    sub.add_argument("--output", default=None, help="write the result here instead of stdout")


def _add_algorithm_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--unweighted-pivots", action="store_true",
                     help="ignore pivot weights in the refinement objective")
    sub.add_argument("--dedupe-median", action="store_true",
                     help="skip the set median's own occurrence during pivot selection")
    sub.add_argument("--count-mad", action="store_true",
                     help="include the final MAD evaluation in the operation count")
    sub.add_argument("--max-rounds", type=int, default=0,
                     help="cap refinement rounds (0 = run to local optimum)")


def build_parser() -> _Parser:
    parser = _Parser(prog="pivotmedian",
                     description="Approximate median strings under weighted edit "
                                 "distance, optionally via sparse pivot selection.")
    commands = parser.add_subparsers(dest="command", required=True,
                                     parser_class=_Parser)

    compute = commands.add_parser("compute", help="approximate the median of one dataset")
    _add_io_options(compute)
    compute.add_argument("--alpha", type=float, default=None,
                         help="pivot separation fraction; omit to refine on the full set")
    _add_algorithm_options(compute)
    compute.set_defaults(func=cmd_compute)

    sweep = commands.add_parser("sweep", help="run an alpha sweep and emit a CSV report")
    _add_io_options(sweep)
    sweep.add_argument("--alpha-start", type=float, default=0.30)
    sweep.add_argument("--alpha-end", type=float, default=0.02)
    sweep.add_argument("--alpha-step", type=float, default=0.005)
    sweep.add_argument("--no-reference", action="store_true",
                       help="skip the full-set reference row")
    sweep.add_argument("--threads", type=int, default=1,
                       help="worker threads for independent sweep points")
    sweep.add_argument("--name", default=None, help="dataset label for the CSV")
    _add_algorithm_options(sweep)
    sweep.set_defaults(func=cmd_sweep)

    gen = commands.add_parser("gen", help="generate a clustered synthetic dataset")
    gen.add_argument("--output", required=True, help="dataset file to write")
    gen.add_argument("--clusters", type=int, required=True)
    gen.add_argument("--size", type=int, required=True, help="strings per cluster")
    gen.add_argument("--len", type=int, required=True, dest="length",
                     help="seed string length")
    gen.add_argument("--alphabet", type=int, default=8)
    gen.add_argument("--noise", type=float, default=0.1,
                     help="per-position mutation rate in [0, 1]")
    gen.add_argument("--seed", type=int, default=0, help="generator seed")
    gen.set_defaults(func=cmd_gen)

    return parser


def _resolve(args) -> tuple[CostModel, Dataset]:
    alphabet = args.alphabet
    if alphabet is None and args.cost == "unit":
        probe = load_dataset(args.input, len("0123456789abcdefghijklmnopqrstuvwxyz"),
                             allow_empty=args.allow_empty)
        alphabet = max((max(s) + 1 for s in probe.sequences if s), default=1)
    model = load_cost_model(args.cost, alphabet)
    dataset = load_dataset(args.input, model.alphabet_size,
                           allow_empty=args.allow_empty,
                           name=getattr(args, "name", None) or Path(args.input).stem)
    return model, dataset


def cmd_compute(args) -> int:
    model, dataset = _resolve(args)
    result = approximate_median(
        dataset, model, args.alpha, EvalCounter(),
        weighted_pivots=not args.unweighted_pivots,
        dedupe_median=args.dedupe_median,
        count_mad=args.count_mad,
        max_rounds=args.max_rounds,
    )
    doc = result.to_json()
    doc["dataset"] = dataset.name
    doc["mode"] = "full" if args.alpha is None else "pivots"
    if result.pivot_set is not None:
        doc["pivot_pct"] = 100.0 * len(result.pivot_set) / len(dataset.sequences)
    print(decode(result.median))
    text = json.dumps(doc, indent=2, sort_keys=True)
    if args.output:
        Path(args.output).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return 0


def cmd_sweep(args) -> int:
    model, dataset = _resolve(args)
    cfg = SweepConfig(alpha_start=args.alpha_start, alpha_end=args.alpha_end,
                      alpha_step=args.alpha_step,
                      include_reference=not args.no_reference)
    records = run_sweep(
        dataset, model, cfg,
        weighted_pivots=not args.unweighted_pivots,
        dedupe_median=args.dedupe_median,
        count_mad=args.count_mad,
        threads=args.threads,
    )
    if args.output:
        write_csv(records, args.output)
    else:
        write_csv(records, sys.stdout)
    return 0


def cmd_gen(args) -> int:
    cfg = GeneratorConfig(
        cluster_count=args.clusters,
        per_cluster_size=args.size,
        seed_length=args.length,
        alphabet_size=args.alphabet,
        mutation_rate=args.noise,
        rng_seed=args.seed,
    )
    dataset = write_generated(cfg, args.output)
    print(f"wrote {len(dataset)} strings to {args.output}", file=sys.stderr)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"pivotmedian: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"pivotmedian: i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
