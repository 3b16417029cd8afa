"""Command-line entry points: verify, table2, strata."""

from __future__ import annotations

import argparse
import sys
import time

from .config import Tolerances
from .errors import GrasslieError
from .groups import parse_group_code
from .harness import (DEFAULT_GROUP_CODES, CampaignConfig, emit_strata,
                      emit_table2, run_campaign, write_report)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grasslie",
        description="property verification for Grassmannian group realizations")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run the property campaign")
    verify.add_argument("--groups", nargs="+", default=list(DEFAULT_GROUP_CODES),
                        metavar="CODE", help="group codes (default: all ten families)")
    verify.add_argument("--trials", type=int, default=20)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--out", required=True, help="JSON report path")
    verify.add_argument("--tol-rank", type=float, default=Tolerances().rank)
    verify.add_argument("--tol-membership", type=float,
                        default=Tolerances().membership)
    verify.add_argument("--tol-angle", type=float, default=Tolerances().angle)

    table2 = sub.add_parser("table2", help="emit the dimension audit CSV")
    table2.add_argument("--max-n", type=int, default=4)
    table2.add_argument("--out", required=True, help="CSV path")

    strata = sub.add_parser("strata", help="emit the boundary stratum survey CSV")
    strata.add_argument("--group", required=True, metavar="CODE")
    strata.add_argument("--seed", type=int, default=0)
    strata.add_argument("--out", required=True, help="CSV path")
    return parser


def _cmd_verify(args) -> int:
    config = CampaignConfig(
        groups=tuple(args.groups),
        trials=args.trials,
        seed=args.seed,
        tolerances=Tolerances(rank=args.tol_rank, membership=args.tol_membership,
                              angle=args.tol_angle),
    )
    started = time.time()
    report = run_campaign(config)
    elapsed = time.time() - started
    write_report(report, args.out)
    failed = [r for r in report.results if not r.passed]
    print(f"{len(report.results)} property records over {len(config.groups)} "
          f"groups in {elapsed:.1f}s -> {args.out}")
    for record in failed:
        print(f"FAIL {record.property_id} [{record.group}] "
              f"defect {record.max_defect:.3e} > {record.tolerance:.1e}")
    print("all pass" if report.all_pass else f"{len(failed)} failures")
    return 0 if report.all_pass else 1


def _cmd_table2(args) -> int:
    rows = emit_table2(args.max_n, args.out)
    bad = [r for r in rows if r["pass"] != "true"]
    print(f"{len(rows)} audit rows -> {args.out}; "
          + ("all pass" if not bad else f"{len(bad)} failures"))
    return 0 if not bad else 1


def _cmd_strata(args) -> int:
    spec = parse_group_code(args.group)
    rows = emit_strata(spec, args.seed, args.out)
    print(f"{len(rows)} stratum rows for {spec.code()} -> {args.out}")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {"verify": _cmd_verify, "table2": _cmd_table2,
                "strata": _cmd_strata}
    try:
        return handlers[args.command](args)
    except GrasslieError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
