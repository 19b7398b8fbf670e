"""Command-line front end: ``tamegl verify <suite>``."""
from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence

from ..fqbun import SUPPORTED_Q
from ..report import CheckReport

SUITES = ("spectral", "sl2rep", "hecke", "fqbun", "dictionary")


def run_suite(name: str, q: int = 3, dmax: int = 3, cutoff: int = 10) -> CheckReport:
    if name == "spectral":
        from .. import spectral
        return spectral.run_all()
    if name == "sl2rep":
        from .. import sl2rep
        return sl2rep.run_all(cutoff=cutoff)
    if name == "hecke":
        from .. import heckewaki
        return heckewaki.run_all()
    if name == "fqbun":
        from ..fqbun import suite
        return suite.run_all(q, dmax)
    if name == "dictionary":
        from . import checks
        return checks.run_all(q, dmax, cutoff)
    raise ValueError(f"unknown suite {name!r}")


def run_suites(names: Sequence[str], q: int = 3, dmax: int = 3, cutoff: int = 10,
               jobs: int = 1) -> List[CheckReport]:
    """Run suites, in parallel when jobs > 1; results come back in the order given."""
    if jobs <= 1 or len(names) == 1:
        return [run_suite(n, q, dmax, cutoff) for n in names]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(run_suite, n, q, dmax, cutoff) for n in names]
        return [f.result() for f in futures]


def combine(reports: Sequence[CheckReport]) -> CheckReport:
    out = CheckReport("all")
    for r in reports:
        out.extend(r, f"{r.suite}.")
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tamegl", description="Run the verification suites.")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run one suite or all of them")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("--q", type=int, default=3, choices=SUPPORTED_Q)
    v.add_argument("--dmax", type=int, default=3)
    v.add_argument("--cutoff", type=int, default=10)
    v.add_argument("--format", choices=("json", "text"), default="text")
    v.add_argument("--out", default=None, help="write the report here instead of stdout")
    v.add_argument("--jobs", type=int, default=1)
    return p


def run_cli(args: argparse.Namespace) -> int:
    if args.dmax < 0 or args.cutoff < 1 or args.jobs < 1:
        print("tamegl: error: --dmax >= 0, --cutoff >= 1 and --jobs >= 1 are required",
              file=sys.stderr)
        return 2
    names = SUITES if args.suite == "all" else (args.suite,)
    reports = run_suites(names, args.q, args.dmax, args.cutoff, args.jobs)
    report = combine(reports) if args.suite == "all" else reports[0]
    text = report.to_json() if args.format == "json" else report.to_text()
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report.passed else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    return run_cli(args)


if __name__ == "__main__":
    sys.exit(main())
