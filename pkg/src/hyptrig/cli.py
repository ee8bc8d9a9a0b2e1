"""Command-line front end.

    hyptrig list
    hyptrig show 4.123.6
    hyptrig verify 4.119 --param p=1 --param q=1
    hyptrig audit --samples 25 --seed 17 --report audit_report.json

Exit codes: 0 on success, 1 when any unexpected verification failure
occurred, 2 for usage errors or unknown entries.  HYPTRIG_REPORT_DIR
overrides the directory reports are written into.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional

from .errors import DomainError, UnknownEntryError
from . import catalog
from . import auditor


def _parse_params(items: Optional[List[str]]):
    params = {}
    for item in items or []:
        if "=" not in item:
            raise DomainError(f"--param expects name=value, got {item!r}")
        name, _, raw = item.partition("=")
        try:
            params[name.strip()] = float(raw)
        except ValueError:
            raise DomainError(f"--param {name}: {raw!r} is not a number") from None
    return params


def _read_config_file(path: str) -> dict:
    # flat key=value lines; '#' starts a comment
    out = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise DomainError(f"config line without '=': {line!r}")
            key, _, raw = line.partition("=")
            out[key.strip()] = raw.strip()
    return out


def _build_config(args) -> auditor.AuditConfig:
    cfg = auditor.AuditConfig()
    if getattr(args, "config", None):
        raw = _read_config_file(args.config)
        if "samples" in raw:
            cfg.samples = int(raw["samples"])
        if "seed" in raw:
            cfg.seed = int(raw["seed"])
        if "pass_tol" in raw:
            cfg.pass_tol = float(raw["pass_tol"])
        if "entries" in raw and raw["entries"]:
            cfg.entries = [e.strip() for e in raw["entries"].split(",")]
        if "report_path" in raw:
            cfg.report_path = raw["report_path"]
    if args.samples is not None:
        cfg.samples = args.samples
    if args.seed is not None:
        cfg.seed = args.seed
    if args.tol is not None:
        cfg.pass_tol = args.tol
    if getattr(args, "entries", None):
        cfg.entries = [e.strip() for e in args.entries.split(",")]
    if getattr(args, "report", None):
        cfg.report_path = args.report
    report_dir = os.environ.get("HYPTRIG_REPORT_DIR")
    if report_dir and not os.path.isabs(cfg.report_path):
        cfg.report_path = os.path.join(report_dir, cfg.report_path)
    return cfg


def _cmd_list(args) -> int:
    print(f"{'entry':<14s} {'flags':<18s} note")
    print("-" * 100)
    for e in catalog.list_entries():
        flags = ",".join(sorted(e.flags)) or "-"
        note = e.provenance_note.split(";")[0]
        print(f"{e.id:<14s} {flags:<18s} {note}")
    return 0


def _cmd_show(args) -> int:
    e = catalog.get_entry(args.entry)
    print(f"entry:   {e.id}")
    print(f"params:  {', '.join(e.param_names) or '(none)'}")
    print(f"flags:   {', '.join(sorted(e.flags)) or '(none)'}")
    print("domain:")
    for predicate, _ in e.validity:
        print(f"  {predicate}")
    print(f"note:    {e.provenance_note}")
    return 0


def _cmd_verify(args) -> int:
    params = _parse_params(args.param)
    tol = args.tol if args.tol is not None else 1e-9
    entry = catalog.get_entry(args.entry)
    conventions = [None]
    if "dual_convention" in entry.flags:
        conventions = [None, "printed"]
    exit_code = 0
    for conv in conventions:
        rec = auditor.verify_entry(args.entry, params, tol, convention=conv)
        tag = f"[{conv}]" if conv else ""
        print(f"{rec.verdict:<9s} {rec.entry_id}{tag} params={rec.params} "
              f"closed={rec.closed!r} numeric={rec.numeric.value!r} "
              f"rel_diff={rec.rel_diff:.3e}"
              + (f" ratio={rec.ratio_fit:.12g}" if rec.ratio_fit is not None else ""))
        if rec.note:
            print(f"  note: {rec.note}")
        unexpected = (rec.verdict != auditor.PASS) != rec.expected_fail
        if unexpected:
            exit_code = 1
    return exit_code


def _cmd_audit(args) -> int:
    cfg = _build_config(args)
    report = auditor.audit_all(cfg)
    auditor.save_report(report, cfg.report_path)
    print(auditor.format_table(report))
    print(f"report written to {cfg.report_path}")
    return 0 if report.overall_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyptrig",
        description="Closed forms and quadrature audit for hyperbolic-"
                    "trigonometric definite integrals.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="print the entry table with flags")

    p_show = sub.add_parser("show", help="describe one entry")
    p_show.add_argument("entry")

    p_verify = sub.add_parser("verify", help="verify one parameter point")
    p_verify.add_argument("entry")
    p_verify.add_argument("--param", action="append", metavar="NAME=VALUE")
    p_verify.add_argument("--tol", type=float, default=None)

    p_audit = sub.add_parser("audit", help="run the sampled sweep")
    p_audit.add_argument("--samples", type=int, default=None)
    p_audit.add_argument("--seed", type=int, default=None)
    p_audit.add_argument("--tol", type=float, default=None)
    p_audit.add_argument("--entries", default=None,
                         help="comma-separated entry ids")
    p_audit.add_argument("--report", default=None, help="report file path")
    p_audit.add_argument("--config", default=None,
                         help="flat key=value config file")
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors
        return int(exc.code or 0)
    try:
        if args.command == "list":
            return _cmd_list(args)
        if args.command == "show":
            return _cmd_show(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_audit(args)
    except UnknownEntryError as exc:
        print(f"unknown entry: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"invalid arguments: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
