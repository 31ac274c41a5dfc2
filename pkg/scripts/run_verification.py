#!/usr/bin/env python3
"""Run the full desk-scale verification campaign and write a JSONL report.

All six checks over every connected first factor on 2..5 vertices crossed
with every dense second factor on 3..5 vertices.  Exit status: 0 all pass,
1 counterexample found, 2 inconclusive instances only.
"""

import argparse
import sys
import time

from tensorcut.harness import CHECK_NAMES, CampaignConfig, run_campaign, write_csv, write_jsonl


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-g-order", type=int, default=5)
    parser.add_argument("--max-h-order", type=int, default=5)
    parser.add_argument("--budget", type=int, default=5_000_000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--checks", default=",".join(CHECK_NAMES))
    parser.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    parser.add_argument("--output", "-o", default="verification_report.jsonl")
    args = parser.parse_args()

    config = CampaignConfig(
        max_g_order=args.max_g_order,
        max_h_order=args.max_h_order,
        enumeration_budget=args.budget,
        seed=args.seed,
        checks=tuple(c.strip() for c in args.checks.split(",")),
    )
    t0 = time.perf_counter()
    report = run_campaign(config)
    elapsed = time.perf_counter() - t0

    writer = write_csv if args.format == "csv" else write_jsonl
    with open(args.output, "w", encoding="utf-8") as fh:
        writer(report, fh)

    s = report.summary
    print(
        f"{s['instances']} instances in {elapsed:.1f}s | "
        f"mismatches={s['mismatches']} inconclusive={s['inconclusive']} "
        f"exceptional_sightings={s['exceptional_sightings']} -> {args.output}"
    )
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
