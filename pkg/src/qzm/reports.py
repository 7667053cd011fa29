"""Machine-readable verification reports.

Schema "qzm-report/1": tool version, epsilon-convention tag, a config
echo, one record per check (name, params, result, provenance, sizes,
timing, optional certificate reference) and summary counts.  Reports are
deterministic for a fixed config and seed, except for the timing fields.

Every record carries a provenance of expectation so failures triage
correctly: "documented-claim" (the underlying theory asserts it),
"derived-oracle" (expected value computed by an independent method) or
"exploratory" (beyond the documented cases; outcomes are findings, never
suite failures).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

SCHEMA = "qzm-report/1"

DOCUMENTED = "documented-claim"
DERIVED = "derived-oracle"
EXPLORATORY = "exploratory"

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"
BUDGET = "budget"


@dataclass
class CheckRecord:
    name: str
    params: dict
    result: str
    provenance: str
    sizes: dict = field(default_factory=dict)
    seconds: float = 0.0
    certificate: str | None = None
    detail: str | None = None

    def to_dict(self):
        return {
            "name": self.name,
            "params": self.params,
            "result": self.result,
            "provenance": self.provenance,
            "sizes": self.sizes,
            "seconds": round(self.seconds, 6),
            "certificate": self.certificate,
            "detail": self.detail,
        }


@dataclass
class Report:
    tool_version: str
    eps_convention: str
    config: dict
    checks: list

    def summary(self):
        out = {PASS: 0, FAIL: 0, SKIPPED: 0, BUDGET: 0}
        for c in self.checks:
            out[c.result] += 1
        out["total"] = len(self.checks)
        return out

    def documented_claim_failures(self):
        return [c for c in self.checks
                if c.result == FAIL and c.provenance == DOCUMENTED]

    def to_dict(self):
        return {
            "schema": SCHEMA,
            "tool_version": self.tool_version,
            "eps_convention": self.eps_convention,
            "config": self.config,
            "checks": [c.to_dict() for c in self.checks],
            "summary": self.summary(),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["name", "result", "provenance", "seconds",
                         "params", "sizes", "detail"])
        for c in self.checks:
            writer.writerow([
                c.name, c.result, c.provenance, f"{c.seconds:.6f}",
                json.dumps(c.params, sort_keys=True),
                json.dumps(c.sizes, sort_keys=True),
                c.detail or "",
            ])
        return buf.getvalue()

    def to_text(self):
        lines = []
        cfg = json.dumps(self.config, sort_keys=True)
        lines.append(f"qzm {self.tool_version}  [{self.eps_convention}]  config: {cfg}")
        lines.append("-" * 78)
        for c in self.checks:
            params = json.dumps(c.params, sort_keys=True)
            mark = {PASS: "ok", FAIL: "FAIL", SKIPPED: "skip", BUDGET: "BUDGET"}[c.result]
            line = f"{mark:6s} {c.name:34s} {params}"
            if c.detail:
                line += f"  -- {c.detail}"
            lines.append(line)
        s = self.summary()
        lines.append("-" * 78)
        lines.append(
            f"total {s['total']}: {s[PASS]} pass, {s[FAIL]} fail, "
            f"{s[SKIPPED]} skipped, {s[BUDGET]} over budget")
        return "\n".join(lines) + "\n"


def strip_timing(report_dict):
    """Copy of a report dict with timing fields nulled (for byte comparisons)."""
    out = json.loads(json.dumps(report_dict))
    for rec in out.get("checks", ()):
        rec["seconds"] = None
    return out
