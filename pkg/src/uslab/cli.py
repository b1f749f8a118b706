"""Command-line entry point: ``uslab --suite NAME [options]``."""
from __future__ import annotations

import argparse
import sys

from uslab.reports import SUITES, ConfigError, SuiteConfig, UnknownSuiteError, run_suite, save_report


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="uslab", description="Exact checks for U(sl_{n+1}), its W-algebra and modules.")
    p.add_argument("--suite", default="all", help=f"one of {', '.join(SUITES)}, all")
    p.add_argument("--n", type=int, default=2, help="rank parameter (2..4)")
    p.add_argument("--degree", type=int, default=4, help="polynomial truncation degree")
    p.add_argument("--window", type=int, default=3, help="lattice window radius")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--c", default=None, help='parameter c as "p/q" (symbolic when omitted)')
    p.add_argument("--mu", default=None, help='comma-separated "p/q" entries (sampled when omitted)')
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    p.add_argument("--timing", action="store_true", help="record elapsed seconds (breaks byte-identity)")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = SuiteConfig(
            suite=args.suite, n=args.n, degree=args.degree, window=args.window, seed=args.seed,
            c=args.c, mu=None if args.mu is None else [m.strip() for m in args.mu.split(",")],
            format=args.format, timing=args.timing,
        )
    except (UnknownSuiteError, ConfigError) as exc:
        print(f"uslab: error: {exc}", file=sys.stderr)
        return 2
    report = run_suite(cfg)
    if args.out:
        save_report(report, args.out, args.format)
    else:
        sys.stdout.write(report.render(args.format))
    return 1 if report.failed else 0


if __name__ == "__main__":
    sys.exit(main())
