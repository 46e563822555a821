"""``bench`` command line: run the benchmark, generate data, render tables."""

import argparse
import sys
from pathlib import Path

from ..exceptions import BadSpec, ParseError
from .datasets import DESK_SCALE, MadelonSpec, make_madelon
from .io import write_csv, write_svmlight
from .runner import parse_config, read_records, render_table, run_bench


def _cmd_run(args):
    text = Path(args.config).read_text(encoding="utf-8")
    if args.full:
        text += "\nfull = true\n"
    config = parse_config(text)
    if args.output:
        config.output = args.output
    records, table = run_bench(config)
    sys.stdout.write(table)
    if config.output:
        print(f"records written to {config.output}")
    failed = [r for r in records if r.status != "ok"]
    return 1 if failed else 0


def _cmd_generate(args):
    if not args.madelon:
        raise BadSpec("only --madelon generation is supported")
    base = MadelonSpec() if args.full else DESK_SCALE
    overrides = {"seed": args.seed}
    if args.n_samples is not None:
        overrides["n_samples"] = args.n_samples
    if args.n_features is not None:
        overrides["n_features"] = args.n_features
    spec = MadelonSpec(**{**base.__dict__, **overrides})
    X, y = make_madelon(spec)
    if Path(args.out).suffix.lower() in (".svm", ".svmlight", ".libsvm"):
        write_svmlight(args.out, X, y)
    else:
        write_csv(args.out, X, y)
    print(f"wrote {X.shape[0]}x{X.shape[1]} Madelon-style data to {args.out}")
    return 0


def _cmd_table(args):
    sys.stdout.write(render_table(read_records(args.records)))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="bench", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="time every configured algorithm")
    run.add_argument("--config", required=True, help="flat key = value config file")
    run.add_argument("--output", help="NDJSON record file (overrides the config)")
    run.add_argument("--full", action="store_true", help="full 4400x500 Madelon instead of 1100x125")
    run.set_defaults(func=_cmd_run)

    gen = sub.add_parser("generate", help="write a synthetic dataset")
    gen.add_argument("--madelon", action="store_true", required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True, help=".csv or .svm output path")
    gen.add_argument("--full", action="store_true", help="full 4400x500 shape")
    gen.add_argument("--n-samples", type=int)
    gen.add_argument("--n-features", type=int)
    gen.set_defaults(func=_cmd_generate)

    table = sub.add_parser("table", help="render a table from an NDJSON record file")
    table.add_argument("--records", required=True)
    table.set_defaults(func=_cmd_table)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (BadSpec, ParseError, OSError) as exc:
        print(f"bench: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
