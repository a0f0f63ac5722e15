"""Aggregated verdicts and their stable JSON / text rendering."""

import json
from dataclasses import dataclass, field

REPORT_SCHEMA = "hsos.sos-report/1"
SEARCH_SCHEMA = "hsos.search-result/1"


@dataclass
class SosReport:
    n: int
    m: int
    iplus: list
    iminus: list
    containment: bool | None = None
    colon: bool | None = None
    inertia: object = None
    scaling: object = None
    rho: int | None = None
    classification: str | None = None
    stages: list = field(default_factory=list)
    verified: bool = False

    def to_json(self):
        sc = self.scaling
        scaling = None
        if sc is not None:
            scaling = {
                "status": sc.status,
                "C": None if sc.C is None else str(sc.C),
                "path": [{"C": str(c), "psd": ok} for c, ok in sc.path],
            }
            cert = sc.certificate
            if cert is not None:
                scaling["certificate"] = {"kind": cert.kind, "diagonal": [str(x) for x in cert.diagonal]}
        return {
            "schema": REPORT_SCHEMA,
            "inputs": {"n": self.n, "m": self.m, "iplus": self.iplus, "iminus": self.iminus},
            "containment": self.containment,
            "colon_equals_m": self.colon,
            "inertia": None if self.inertia is None else list(self.inertia),
            "scaling": scaling,
            "rho": self.rho,
            "classification": self.classification,
            "stages": self.stages,
            "verified": self.verified,
        }


def dumps(obj):
    """Byte-stable JSON."""
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def render_text(report):
    lines = [f"n = {report.n}, m = {report.m}",
             f"I+ = <{', '.join(report.iplus)}>",
             f"I- = <{', '.join(report.iminus)}>"]
    for k, s in enumerate(report.stages, 1):
        lines.append(f"  {k}. {s['stage']:<20} {'PASS' if s['passed'] else 'FAIL'}  {s['detail']}")
    lines.append("verified" if report.verified else "NOT verified")
    return "\n".join(lines)
