"""Sampling, verification, and report assembly.

The audit draws seeded parameter points from each entry's validity
domain, integrates the entry's integrand with the shape-matched engine,
compares against the closed form, and classifies the outcome.  Suspect
entries are expected to fail and are counted separately; an unexpected
PASS there would indicate an integrand transcription error and fails the
run.  Reports are deterministic functions of the configuration.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, asdict
from typing import Dict, List, Optional, Sequence

from .errors import DomainError, UnknownEntryError
from . import catalog
from .catalog import EntryDescriptor, ParamPoint, cf_3_532_1
from .quad import QuadResult, integrate, STATUS_CONVERGED, STATUS_DIVERGENT

PASS = "PASS"
FAIL = "FAIL"
SUSPECT = "SUSPECT"
DIVERGENT = "DIVERGENT"
SKIPPED = "SKIPPED"

SUSPECT_BAND_HIGH = 1e-5


@dataclass
class AuditConfig:
    samples: int = 25
    seed: int = 17
    pass_tol: float = 1e-9
    entries: Optional[List[str]] = None  # None = every entry
    report_path: str = "audit_report.json"

    def __post_init__(self):
        if self.samples < 1:
            raise DomainError("samples must be >= 1")
        if not (0.0 < self.pass_tol < 1.0):
            raise DomainError("pass_tol must lie in (0, 1)")


@dataclass
class VerificationRecord:
    entry_id: str
    params: ParamPoint
    numeric: QuadResult
    closed: float
    abs_diff: float
    rel_diff: float
    verdict: str
    ratio_fit: Optional[float] = None
    convention: Optional[str] = None
    expected_fail: bool = False
    note: str = ""


@dataclass
class AuditReport:
    records: List[VerificationRecord]
    summary: Dict[str, Dict]
    config_echo: Dict
    overall_ok: bool


def sample_params(entry: EntryDescriptor, n: int, seed: int) -> List[ParamPoint]:
    """n deterministic points from the entry's validity domain.

    Scale-like parameters are drawn log-uniformly; per-entry guard zones
    (pole bands, resolvability constraints) are honoured by the entry's
    own sampler.  Zero-parameter entries yield a single empty point.
    """
    if n < 1:
        raise DomainError("sample_params needs n >= 1")
    if not entry.param_names:
        return [{}]
    rng = random.Random(f"{seed}|{entry.id}")
    out = []
    for i in range(n):
        pp = entry.sampler(rng, i)
        entry.validate(pp)
        out.append(pp)
    return out


def _closed_value(entry: EntryDescriptor, params: ParamPoint,
                  convention: Optional[str]) -> float:
    if convention is None:
        return entry.closed_form(params)
    if "dual_convention" not in entry.flags:
        raise DomainError(f"{entry.id} has no convention variants")
    return cf_3_532_1(params["n"], params["a"], params["b"], convention)


def verify_entry(entry_id: str, params: ParamPoint, pass_tol: float,
                 convention: Optional[str] = None) -> VerificationRecord:
    """Integrate one parameter point and compare against the closed form.

    The quadrature tolerance is pass_tol/10 scaled by the closed-form
    magnitude, so the PASS comparison stays a genuinely relative test
    even for small-valued samples.
    """
    entry = catalog.get_entry(entry_id)
    entry.validate(params)
    closed = _closed_value(entry, params, convention)
    f, spec = entry.integrand_factory(params)
    tol = max(abs(closed) * pass_tol / 10.0, 1e-14)
    numeric = integrate(f, spec, tol)
    expected_fail = "suspect" in entry.flags or convention == "printed"

    if numeric.status == STATUS_DIVERGENT:
        verdict = DIVERGENT
        abs_diff = math.inf
        rel_diff = math.inf
    elif numeric.status != STATUS_CONVERGED:
        verdict = SKIPPED
        abs_diff = abs(numeric.value - closed) if math.isfinite(numeric.value) else math.inf
        rel_diff = abs_diff / max(abs(closed), 1e-300)
    else:
        abs_diff = abs(numeric.value - closed)
        rel_diff = abs_diff / max(abs(closed), 1e-300)
        if rel_diff <= pass_tol:
            verdict = PASS
        elif rel_diff <= SUSPECT_BAND_HIGH:
            verdict = SUSPECT
        else:
            verdict = FAIL

    ratio = None
    if verdict in (FAIL, SUSPECT) and closed != 0.0 and math.isfinite(numeric.value):
        ratio = numeric.value / closed
    return VerificationRecord(
        entry_id=entry_id, params=dict(params), numeric=numeric, closed=closed,
        abs_diff=abs_diff, rel_diff=rel_diff, verdict=verdict, ratio_fit=ratio,
        convention=convention, expected_fail=expected_fail,
        note=entry.provenance_note if expected_fail else "")


def ratio_diagnose(records: Sequence[VerificationRecord]) -> Optional[float]:
    """Constant numeric/closed ratio across failing records, if one exists.

    Needs at least 3 FAIL records; returns the fitted constant when the
    relative spread is below 1e-6, else None.  This is the detector for
    wrong constant prefactors, the most common table-error mode.
    """
    ratios = [r.ratio_fit for r in records
              if r.verdict == FAIL and r.ratio_fit is not None]
    if len(ratios) < 3:
        return None
    mean = sum(ratios) / len(ratios)
    if mean == 0.0:
        return None
    spread = (max(ratios) - min(ratios)) / abs(mean)
    return mean if spread <= 1e-6 else None


def audit_all(config: AuditConfig) -> AuditReport:
    """Full sweep: every selected entry, `samples` points each.

    Per-record failures are data, not exceptions.  Records keep
    (entry order, sample order, convention order), so two runs with the
    same config produce identical reports.
    """
    wanted = config.entries
    entries = [e for e in catalog.list_entries()
               if wanted is None or e.id in wanted]
    if wanted is not None:
        unknown = set(wanted) - {e.id for e in entries}
        if unknown:
            raise UnknownEntryError(", ".join(sorted(unknown)))

    records: List[VerificationRecord] = []
    for entry in entries:
        for params in sample_params(entry, config.samples, config.seed):
            records.append(verify_entry(entry.id, params, config.pass_tol))
            if "dual_convention" in entry.flags:
                records.append(verify_entry(entry.id, params, config.pass_tol,
                                            convention="printed"))

    summary: Dict[str, Dict] = {}
    overall_ok = True
    for entry in entries:
        recs = [r for r in records if r.entry_id == entry.id]
        normal = [r for r in recs if not r.expected_fail]
        expected = [r for r in recs if r.expected_fail]
        counts: Dict[str, int] = {}
        for r in recs:
            key = r.verdict if r.convention is None else f"{r.verdict}[{r.convention}]"
            counts[key] = counts.get(key, 0) + 1
        entry_ok = all(r.verdict == PASS for r in normal) and \
            not any(r.verdict == PASS for r in expected)
        overall_ok = overall_ok and entry_ok
        summary[entry.id] = {
            "flags": sorted(entry.flags),
            "counts": dict(sorted(counts.items())),
            "pass": sum(1 for r in normal if r.verdict == PASS),
            "total": len(normal),
            "expected_fail_records": len(expected),
            "ok": entry_ok,
            "ratio_fit": ratio_diagnose(expected if expected else recs),
        }

    config_echo = {"samples": config.samples, "seed": config.seed,
                   "pass_tol": config.pass_tol,
                   "entries": sorted(e.id for e in entries)}
    return AuditReport(records=records, summary=summary,
                       config_echo=config_echo, overall_ok=overall_ok)


def _json_safe(obj):
    if isinstance(obj, float):
        if math.isnan(obj):
            return "nan"
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        return obj
    if isinstance(obj, dict):
        return {k: _json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_safe(v) for v in obj]
    return obj


def report_to_json(report: AuditReport) -> str:
    payload = {
        "config": _json_safe(report.config_echo),
        "overall_ok": report.overall_ok,
        "summary": _json_safe(report.summary),
        "records": [_json_safe(asdict(r)) for r in report.records],
    }
    return json.dumps(payload, indent=2)


def save_report(report: AuditReport, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(report_to_json(report))
        fh.write("\n")


def format_table(report: AuditReport) -> str:
    """Fixed-width per-entry summary for the console."""
    lines = []
    lines.append(f"{'entry':<14s} {'flags':<16s} {'pass':>5s} {'total':>5s} "
                 f"{'verdicts':<38s} {'ok':<3s}")
    lines.append("-" * 86)
    for eid, s in report.summary.items():
        flags = ",".join(s["flags"]) or "-"
        verdicts = " ".join(f"{k}:{v}" for k, v in s["counts"].items())
        lines.append(f"{eid:<14s} {flags:<16s} {s['pass']:>5d} {s['total']:>5d} "
                     f"{verdicts:<38s} {'yes' if s['ok'] else 'NO'}")
    lines.append("-" * 86)
    lines.append(f"overall: {'ok' if report.overall_ok else 'FAILED'}")
    return "\n".join(lines)
