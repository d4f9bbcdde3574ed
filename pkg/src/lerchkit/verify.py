"""Sampling, tolerance and reporting engine for the identity registry.

Verdict rules per sample:
  - both sides below 1e-12 in magnitude: compare absolutely at base_tol
    (identities with exact zeros would otherwise divide noise by noise),
  - cancellation factor kappa above 1e4: skip("ill-conditioned"),
  - otherwise pass iff rel_err <= base_tol * min(kappa, 1e4), after
    branch-defect correction when the identity is branch sensitive.
Reports are deterministic: identical (id, seed, count) give identical bytes.
"""
from __future__ import annotations

import cmath
import json
import math
import random
from dataclasses import dataclass, field

from .errors import EvaluationError, SamplerExhaustedError
from .identities import (Assignment, IdentityDescriptor, ParamSchema,
                         evaluate_side, find)

KAPPA_CAP = 1e4
TINY_MAGNITUDE = 1e-12
RETRY_CAP = 1000
_REL_FLOOR = 1e-300


def sample(schema: ParamSchema, seed: int, count: int) -> list[Assignment]:
    """Deterministic rejection sampling: `count` assignments satisfying all
    schema constraints, at most RETRY_CAP retries each."""
    if count < 1:
        raise ValueError("count must be >= 1")
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        for _attempt in range(RETRY_CAP):
            asn = schema.draw(rng)
            if all(pred(asn) for _, pred in schema.constraints):
                out.append(asn)
                break
        else:
            raise SamplerExhaustedError(
                f"no valid assignment in {RETRY_CAP} retries")
    return out


def tolerance(base_tol: float, kappa: float) -> float | None:
    """base_tol * min(kappa, 1e4); None signals skip for kappa beyond the cap."""
    kappa = max(kappa, 1.0)
    if kappa > KAPPA_CAP:
        return None
    return base_tol * kappa


def branch_defect(lhs: complex, rhs: complex, exponent_scale: complex,
                  tol: float = 1e-6) -> int | None:
    """Integer d with |d| <= 8 minimizing |lhs/(rhs exp(2 pi i d w)) - 1|.

    Returned only when that minimum is at most tol; d = 0 means exact
    principal-branch agreement.  Ties resolve toward smaller |d|.
    """
    if lhs == 0 or rhs == 0:
        return None
    best_d = None
    best_err = math.inf
    for d in sorted(range(-8, 9), key=lambda q: (abs(q), q)):
        try:
            corr = rhs * cmath.exp(2j * math.pi * d * exponent_scale)
        except OverflowError:
            continue
        if corr == 0 or not _finite(corr):
            continue
        err = abs(lhs / corr - 1.0)
        if err < best_err:
            best_err = err
            best_d = d
    return best_d if best_err <= tol else None


def _finite(z: complex) -> bool:
    return math.isfinite(z.real) and math.isfinite(z.imag)


@dataclass(frozen=True)
class SampleRecord:
    identity: str
    parameters: Assignment
    lhs: complex | None
    rhs: complex | None
    rel_err: float | None
    cancellation: float | None
    branch_defect: int | None
    verdict: str                      # pass | fail | skip
    skip_reason: str | None = None
    raw_pass: bool | None = None      # principal-branch verdict, branch-sensitive only
    tags: tuple[str, ...] = ()


@dataclass
class VerificationReport:
    identity: str
    seed: int
    samples: int
    passes: int
    fails: int
    skips: int
    worst_rel_err: float
    worst_adjusted_rel_err: float
    kappa_summary: dict
    branch_defect_histogram: dict
    tag_counts: dict
    records: list[SampleRecord] = field(default_factory=list)


def _rel_err(lhs: complex, rhs: complex) -> float:
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), _REL_FLOOR)


def run(identity_id: str, seed: int, count: int,
        tol_scale: float = 1.0) -> VerificationReport:
    """Verify one identity over `count` seeded samples.

    Identities without free parameters are evaluated once regardless of the
    requested count.
    """
    d = find(identity_id)
    if not d.schema.params:
        count = 1
    assignments = sample(d.schema, seed, count)
    base = d.base_tol * tol_scale
    records: list[SampleRecord] = []
    for asn in assignments:
        tags = d.tags(asn)
        try:
            lhs, kl = evaluate_side(d, "lhs", asn)
            rhs, kr = evaluate_side(d, "rhs", asn)
        except EvaluationError as exc:
            records.append(SampleRecord(d.id, asn, None, None, None, None, None,
                                        "skip", skip_reason=str(exc.cause), tags=tags))
            continue
        if not (_finite(lhs) and _finite(rhs)):
            records.append(SampleRecord(d.id, asn, None, None, None, None, None,
                                        "skip", skip_reason="non-finite side", tags=tags))
            continue
        kappa = min(max(kl, kr, 1.0), 1e300)
        raw_rel = _rel_err(lhs, rhs)
        eff_tol = base * min(kappa, KAPPA_CAP)
        defect = None
        rel = raw_rel
        raw_pass = None
        if d.branch_sensitive:
            raw_pass = raw_rel <= eff_tol
            scale = d.exponent_scale(asn)
            defect = branch_defect(lhs, rhs, scale, tol=max(eff_tol, 1e-6))
            if defect is not None:
                rel = _rel_err(lhs, rhs * cmath.exp(2j * math.pi * defect * scale))
        if abs(lhs) < TINY_MAGNITUDE and abs(rhs) < TINY_MAGNITUDE:
            verdict = "pass" if abs(lhs - rhs) <= base else "fail"
        elif kappa > KAPPA_CAP:
            records.append(SampleRecord(d.id, asn, lhs, rhs, rel, kappa, defect,
                                        "skip", skip_reason="ill-conditioned",
                                        raw_pass=raw_pass, tags=tags))
            continue
        else:
            verdict = "pass" if rel <= eff_tol else "fail"
        records.append(SampleRecord(d.id, asn, lhs, rhs, rel, kappa, defect,
                                    verdict, raw_pass=raw_pass, tags=tags))
    return _aggregate(d, seed, records)


def _aggregate(d: IdentityDescriptor, seed: int,
               records: list[SampleRecord]) -> VerificationReport:
    passes = sum(r.verdict == "pass" for r in records)
    fails = sum(r.verdict == "fail" for r in records)
    skips = sum(r.verdict == "skip" for r in records)
    judged = [r for r in records if r.verdict != "skip" and r.rel_err is not None]
    worst = max((r.rel_err for r in judged), default=0.0)
    worst_adj = max((r.rel_err / min(max(r.cancellation or 1.0, 1.0), KAPPA_CAP)
                     for r in judged), default=0.0)
    kappas = sorted(r.cancellation for r in records if r.cancellation is not None)
    if kappas:
        kappa_summary = {"min": kappas[0], "median": kappas[len(kappas) // 2],
                         "max": kappas[-1]}
    else:
        kappa_summary = {"min": None, "median": None, "max": None}
    histogram: dict[str, int] = {}
    if d.branch_sensitive:
        for r in records:
            key = "none" if r.branch_defect is None else str(r.branch_defect)
            histogram[key] = histogram.get(key, 0) + 1
    tag_counts: dict[str, dict[str, int]] = {}
    for r in records:
        for tag in r.tags:
            bucket = tag_counts.setdefault(tag, {"pass": 0, "fail": 0, "skip": 0})
            bucket[r.verdict] += 1
    return VerificationReport(
        identity=d.id, seed=seed, samples=len(records), passes=passes,
        fails=fails, skips=skips, worst_rel_err=worst,
        worst_adjusted_rel_err=worst_adj, kappa_summary=kappa_summary,
        branch_defect_histogram=histogram, tag_counts=tag_counts,
        records=records,
    )


def _encode(value):
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, float) and not math.isfinite(value):
        return repr(value)
    return value


def report_to_dict(report: VerificationReport) -> dict:
    return {
        "identity": report.identity,
        "seed": report.seed,
        "samples": report.samples,
        "passes": report.passes,
        "fails": report.fails,
        "skips": report.skips,
        "worst_rel_err": _encode(report.worst_rel_err),
        "worst_adjusted_rel_err": _encode(report.worst_adjusted_rel_err),
        "kappa_summary": {k: _encode(v) for k, v in report.kappa_summary.items()},
        "branch_defect_histogram": report.branch_defect_histogram,
        "tag_counts": report.tag_counts,
        "records": [
            {
                "parameters": {k: _encode(v) for k, v in r.parameters.items()},
                "lhs": _encode(r.lhs),
                "rhs": _encode(r.rhs),
                "rel_err": _encode(r.rel_err),
                "cancellation": _encode(r.cancellation),
                "branch_defect": r.branch_defect,
                "verdict": r.verdict,
                "skip_reason": r.skip_reason,
                "raw_pass": r.raw_pass,
                "tags": list(r.tags),
            }
            for r in report.records
        ],
    }


def serialize_report(report: VerificationReport) -> str:
    """Stable JSON form; byte-identical for identical (id, seed, count)."""
    return json.dumps(report_to_dict(report), sort_keys=True, indent=2) + "\n"
