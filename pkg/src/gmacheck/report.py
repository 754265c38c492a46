"""Batch runner: execute scenario checks and emit machine-readable reports.

A run is described by a :class:`RunConfig`; :func:`run` executes it and
returns an exit code with the rendered report.  JSON reports follow a fixed
schema (see :func:`validate_report`) and are byte-identical across repeated
runs of the same configuration except for the ``elapsed_ms`` timing fields,
which is what makes warm-cache reruns diffable.

Exit codes: 0 all claims pass, 1 at least one claim fails or errors,
2 configuration problem (unknown scenario, unusable coefficient domain).
"""

import hashlib
import json
import os
import tempfile
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from . import cache
from .coeffs import DomainError, parse_domain
from .scenarios import CLAIM_KINDS, ScenarioError, catalog, run_scenario

__all__ = ["RunConfig", "run", "render_text", "validate_report", "TOOL_VERSION"]

TOOL_VERSION = "0.1.0"

_STATUSES = ("pass", "fail", "error")


@dataclass
class RunConfig:
    """What to verify and how to report it."""

    ids: Sequence[str] = ("all",)
    coeff: Optional[str] = None
    max_degree: Optional[int] = None
    witnesses: bool = False
    fmt: str = "json"
    out: Optional[str] = None
    cache_dir: Optional[str] = None
    jobs: int = 1

    def canonical(self):
        """The run-identity payload: everything that can change results."""
        return {
            "ids": list(self.ids),
            "coeff": self.coeff,
            "max_degree": self.max_degree,
            "witnesses": self.witnesses,
            "tool_version": TOOL_VERSION,
        }


def _run_id(config):
    blob = json.dumps(config.canonical(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def _resolve_ids(ids):
    cat = catalog()
    ids = list(ids) if ids else ["all"]
    if ids == ["all"]:
        return list(cat)
    unknown = [i for i in ids if i not in cat]
    if unknown:
        raise ScenarioError("unknown scenario %r" % unknown[0])
    # run in catalog order regardless of how the selection was spelled
    picked = set(ids)
    return [sid for sid in cat if sid in picked]


def run(config):
    """Execute a run: returns (exit_code, rendered_report_string).

    Scenarios are scheduled one task each across a bounded thread pool
    (claims inside a scenario share a memoized environment, so they stay
    together); the report is assembled in catalog order afterwards, so the
    output is independent of scheduling.  When ``config.out`` is set the
    report is also written there atomically.
    """
    if config.fmt not in ("json", "text"):
        return 2, _error_out(config, "unknown report format %r" % (config.fmt,))
    try:
        if config.coeff is not None:
            parse_domain(config.coeff)
        ids = _resolve_ids(config.ids)
    except (ScenarioError, DomainError, ValueError) as exc:
        return 2, _error_out(config, str(exc))
    if config.cache_dir:
        cache.configure(config.cache_dir)
    try:
        with ThreadPoolExecutor(max_workers=max(1, config.jobs)) as pool:
            futures = {
                sid: pool.submit(
                    run_scenario,
                    sid,
                    coeff=config.coeff,
                    max_degree=config.max_degree,
                    witnesses=config.witnesses,
                )
                for sid in ids
            }
            results = {sid: f.result() for sid, f in futures.items()}
    except ScenarioError as exc:
        return 2, _error_out(config, str(exc))
    doc = {
        "run_id": _run_id(config),
        "tool_version": TOOL_VERSION,
        "coeff": config.coeff,
        "scenarios": [
            {"id": sid, "claims": [r.as_dict() for r in results[sid]]} for sid in ids
        ],
    }
    statuses = [c["status"] for s in doc["scenarios"] for c in s["claims"]]
    code = 0 if all(s == "pass" for s in statuses) else 1
    rendered = render_text(doc) if config.fmt == "text" else _render_json(doc)
    if config.out:
        _atomic_write(config.out, rendered)
    return code, rendered


def _render_json(doc):
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _error_out(config, message):
    if config.fmt == "text":
        rendered = "error: %s\n" % message
    else:
        rendered = _render_json({"error": message})
    if config.out:
        _atomic_write(config.out, rendered)
    return rendered


def _atomic_write(path, text):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def render_text(doc):
    """Human-oriented rendering with the same (scenario, claim, status) rows."""
    lines = [
        "run %s" % doc["run_id"],
        "tool %s  coeff %s" % (doc["tool_version"], doc["coeff"] or "default"),
    ]
    tally = {"pass": 0, "fail": 0, "error": 0}
    for sc in doc["scenarios"]:
        lines.append("scenario %s" % sc["id"])
        for c in sc["claims"]:
            tally[c["status"]] += 1
            lines.append(
                "  %-5s %-32s [%s, %s, %d ms]"
                % (c["status"], c["id"], c["kind"], c["coeff"], c["elapsed_ms"])
            )
            if c.get("message"):
                lines.append("        %s" % c["message"])
    lines.append(
        "total: %d claims, %d pass, %d fail, %d error"
        % (sum(tally.values()), tally["pass"], tally["fail"], tally["error"])
    )
    return "\n".join(lines) + "\n"


def validate_report(doc):
    """Check a parsed JSON report against the fixed schema; raise ValueError."""

    def fail(msg):
        raise ValueError("report schema: %s" % msg)

    if not isinstance(doc, dict):
        fail("document must be an object")
    if set(doc) != {"run_id", "tool_version", "coeff", "scenarios"}:
        fail("top-level keys must be run_id, tool_version, coeff, scenarios")
    if not (isinstance(doc["run_id"], str) and len(doc["run_id"]) == 64):
        fail("run_id must be a sha256 hex string")
    int(doc["run_id"], 16)
    if not isinstance(doc["tool_version"], str):
        fail("tool_version must be a string")
    if not (doc["coeff"] is None or isinstance(doc["coeff"], str)):
        fail("coeff must be a string or null")
    if not isinstance(doc["scenarios"], list):
        fail("scenarios must be a list")
    for sc in doc["scenarios"]:
        if set(sc) != {"id", "claims"}:
            fail("scenario keys must be id, claims")
        if not isinstance(sc["id"], str):
            fail("scenario id must be a string")
        if not isinstance(sc["claims"], list) or not sc["claims"]:
            fail("claims must be a non-empty list")
        for c in sc["claims"]:
            required = {"id", "kind", "status", "coeff", "elapsed_ms", "paper_ref"}
            if not required <= set(c):
                fail("claim %r missing keys %r" % (c.get("id"), required - set(c)))
            if set(c) - required - {"witness", "message"}:
                fail("claim %r has unexpected keys" % (c.get("id"),))
            if c["kind"] not in CLAIM_KINDS:
                fail("unknown claim kind %r" % (c["kind"],))
            if c["status"] not in _STATUSES:
                fail("bad status %r" % (c["status"],))
            if not isinstance(c["elapsed_ms"], int) or c["elapsed_ms"] < 0:
                fail("elapsed_ms must be a non-negative integer")
            for key in ("id", "coeff", "paper_ref"):
                if not isinstance(c[key], str):
                    fail("claim %s must be a string" % key)
            if "message" in c and not isinstance(c["message"], str):
                fail("message must be a string")
    return True
