"""Command-line front end: ``fano3 list`` and ``fano3 verify``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .catalog import REGISTRY, ClaimResult, UnknownClaimError, run_all
from .config import DEFAULT_PRIME, SECOND_PRIME, RunConfig

SEED_ENV = "FANO3_SEED"
REPORT_KEYS = ("claim_id", "description", "paper_ref", "status", "expected", "computed",
               "elapsed_ms", "seed", "prime")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 2 with usage on stderr
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fano3", description="Re-derive the catalogued numerical and algebraic claims.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    ls = sub.add_parser("list", help="print the claim registry")
    ls.add_argument("--format", choices=("text", "json", "markdown"), default="text")
    v = sub.add_parser("verify", help="run claims and print a report")
    v.add_argument("--claim", action="append", dest="claims", metavar="ID",
                   help="claim id to run (repeatable); default: all fast claims")
    v.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    v.add_argument("--second-prime", type=int, default=SECOND_PRIME)
    v.add_argument("--seed", type=int, default=None,
                   help=f"base seed (default: ${SEED_ENV} or 0)")
    v.add_argument("--trials", type=int, default=3)
    v.add_argument("--include-slow", action="store_true")
    v.add_argument("--format", choices=("text", "json", "markdown"), default="text")
    v.add_argument("--timings", action="store_true",
                   help="report elapsed_ms (makes output run-dependent)")
    v.add_argument("--jobs", type=int, default=1)
    return p


def resolve_seed(flag: int | None, environ: dict | None = None) -> int:
    """Explicit flag wins, then the environment variable, then 0."""
    if flag is not None:
        return flag
    env = (os.environ if environ is None else environ).get(SEED_ENV)
    if env is None or env.strip() == "":
        return 0
    try:
        return int(env)
    except ValueError:
        raise ValueError(f"{SEED_ENV} must be an integer, got {env!r}") from None


def _cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, str):
        return value
    return json.dumps(value, sort_keys=True)


def emit_report(results: Sequence[ClaimResult], fmt: str = "text", timings: bool = False) -> bytes:
    rows = sorted((r.to_json_dict(timings) for r in results),
                  key=lambda row: (row["claim_id"], json.dumps(row, sort_keys=True)))
    if fmt == "json":
        return (json.dumps(rows, indent=2, ensure_ascii=False) + "\n").encode()
    if fmt == "markdown":
        lines = ["| " + " | ".join(REPORT_KEYS) + " |", "|" + "---|" * len(REPORT_KEYS)]
        for row in rows:
            cells = [_cell(row[k]).replace("|", "\\|") for k in REPORT_KEYS]
            lines.append("| " + " | ".join(cells) + " |")
        return ("\n".join(lines) + "\n").encode()
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = []
    for row in rows:
        extra = [f"expected={_cell(row['expected'])}", f"computed={_cell(row['computed'])}"]
        for k in ("seed", "prime", "elapsed_ms"):
            if row[k] is not None:
                extra.append(f"{k}={row[k]}")
        lines.append(f"{row['status'].upper():8s} {row['claim_id']}  {row['description']}  "
                     f"[{row['paper_ref']}]  " + " ".join(extra))
    passed = sum(r["status"] == "pass" for r in rows)
    lines.append(f"{passed}/{len(rows)} passed")
    return ("\n".join(lines) + "\n").encode()


def exit_code(results: Sequence[ClaimResult]) -> int:
    return 1 if any(r.status in ("fail", "unstable") for r in results) else 0


def emit_registry(fmt: str) -> bytes:
    claims = [REGISTRY[k] for k in sorted(REGISTRY)]
    if fmt == "json":
        data = [{"id": c.id, "description": c.description, "paper_ref": c.paper_ref,
                 "kind": c.kind, "expected": c.expected, "cost": c.cost,
                 "entry_point": c.entry_point, "parameters": c.parameters} for c in claims]
        return (json.dumps(data, indent=2) + "\n").encode()
    if fmt == "markdown":
        lines = ["| id | kind | cost | paper_ref | description |", "|---|---|---|---|---|"]
        lines += [f"| {c.id} | {c.kind} | {c.cost} | {c.paper_ref} | {c.description} |"
                  for c in claims]
        return ("\n".join(lines) + "\n").encode()
    width = max(len(c.id) for c in claims)
    lines = [f"{c.id:{width}s}  {c.kind:10s} {c.cost:5s} {c.paper_ref}" for c in claims]
    return ("\n".join(lines) + "\n").encode()


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = sys.stdout.buffer
    if args.command == "list":
        out.write(emit_registry(args.format))
        out.flush()
        return 0
    try:
        config = RunConfig(prime=args.prime, second_prime=args.second_prime,
                           seed=resolve_seed(args.seed), trials=args.trials,
                           include_slow=args.include_slow,
                           claims=tuple(args.claims) if args.claims else None,
                           format=args.format, timings=args.timings, jobs=args.jobs)
        if config.claims:
            unknown = [c for c in config.claims if c not in REGISTRY]
            if unknown:
                raise UnknownClaimError(", ".join(unknown))
    except UnknownClaimError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"fano3: error: unknown claim id: {exc.args[0]}\n")
        return 2
    except ValueError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"fano3: error: {exc}\n")
        return 2
    results = run_all(config)
    out.write(emit_report(results, config.format, config.timings))
    out.flush()
    return exit_code(results)


if __name__ == "__main__":
    sys.exit(main())
