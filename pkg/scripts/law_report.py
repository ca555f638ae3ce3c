"""Verify the full law catalog and emit one JSON record per rule.

Every directed rewrite rule and classical-algebra rule is checked
exhaustively over its variables; the expected-failure demonstrations are
appended with their expectation tags. Records go to stdout (or --output)
as JSON lines; a summary goes to stderr.

Run from the repository root:

    python3 scripts/law_report.py
    python3 scripts/law_report.py --output laws.jsonl
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from asymlogic import catalog, classical_rules, demonstrations, verify_rule


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--output", help="write JSON lines here instead of stdout"
    )
    args = parser.parse_args(argv)

    start = time.perf_counter()
    records = []
    statuses: dict[str, int] = {}
    for rule in catalog() + classical_rules():
        report = verify_rule(rule)
        statuses[report.status] = statuses.get(report.status, 0) + 1
        records.append(report.record())
    for demo in demonstrations():
        record = verify_rule(demo).record()
        record["kind"] = "demonstration"
        record["expected"] = demo.expect
        records.append(record)
    elapsed = time.perf_counter() - start

    lines = "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(lines)
    else:
        sys.stdout.write(lines)

    proven = statuses.get("Proven", 0)
    refuted = statuses.get("Refuted", 0)
    print(
        f"{proven} proven, {refuted} refuted,"
        f" {len(demonstrations())} demonstrations in {elapsed:.2f}s",
        file=sys.stderr,
    )
    return 1 if refuted else 0


if __name__ == "__main__":
    raise SystemExit(main())
