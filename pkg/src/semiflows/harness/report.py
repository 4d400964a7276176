"""Line-oriented reports.

::

    semiflow-report 1
    instance ex1_3(N=20)
    claim tt Fails exact=true
      U: [1]
      V: [0]
      reason: N(U,V) is empty
    claim equi_points {a,b} exact=true scale floor=1/4

Certificates are indented blocks of ``key: value`` lines; nested mappings
indent further. Keys are sorted, so the output is byte-stable.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ..properties import Claim

HEADER = "semiflow-report 1"


class ReportParseError(ValueError):
    pass


def _scalar(v: Any) -> str:
    if isinstance(v, (list, tuple, frozenset, set)):
        items = sorted(v, key=str) if isinstance(v, (set, frozenset)) else v
        return "[" + ", ".join(_scalar(x) for x in items) + "]"
    if hasattr(v, "value") and hasattr(v, "exact"):  # nested verdict
        return f"{v.value} exact={str(v.exact).lower()}"
    return str(v)


def _block(d: dict, indent: int) -> list[str]:
    out = []
    pad = "  " * indent
    for k in sorted(d, key=str):
        v = d[k]
        if isinstance(v, dict):
            out.append(f"{pad}{k}:")
            out.extend(_block(v, indent + 1))
        elif isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
            out.append(f"{pad}{k}:")
            for i, item in enumerate(v):
                out.append(f"{pad}  - {i}:")
                out.extend(_block(item, indent + 2))
        else:
            out.append(f"{pad}{k}: {_scalar(v)}")
    return out


def format_claim(c: Claim) -> list[str]:
    head = f"claim {c.id} {c.value} exact={str(c.exact).lower()}"
    if c.scale:
        head += " scale " + " ".join(f"{k}={v}" for k, v in sorted(c.scale.items()))
    return [head] + _block(c.certificate, 1)


def format_report(instance_name: str, claims: list[Claim], notes: list[str] = ()) -> str:
    lines = [HEADER, f"instance {instance_name or '-'}"]
    for c in claims:
        lines.extend(format_claim(c))
    for n in notes:
        lines.append(f"note {n}")
    return "\n".join(lines) + "\n"


@dataclass
class ParsedClaim:
    id: str
    value: str
    exact: bool
    scale: str
    certificate: list[str] = field(default_factory=list)


def parse_report(text: str) -> tuple[str, list[ParsedClaim]]:
    lines = text.splitlines()
    if not lines or lines[0] != HEADER:
        raise ReportParseError(f"first line must be {HEADER!r}")
    name = ""
    claims: list[ParsedClaim] = []
    for line in lines[1:]:
        if line.startswith("instance "):
            name = line[len("instance "):]
        elif line.startswith("claim "):
            parts = line.split(" ")
            if len(parts) < 4 or not parts[3].startswith("exact="):
                raise ReportParseError(f"malformed claim line {line!r}")
            scale = " ".join(parts[5:]) if len(parts) > 4 and parts[4] == "scale" else ""
            claims.append(ParsedClaim(parts[1], parts[2], parts[3] == "exact=true", scale))
        elif line.startswith("  "):
            if not claims:
                raise ReportParseError("certificate line before any claim")
            claims[-1].certificate.append(line[2:])
        elif line.startswith("note ") or line.startswith("#") or not line.strip():
            continue
        else:
            raise ReportParseError(f"unexpected line {line!r}")
    return name, claims


def explain(text: str, claim_id: str) -> str:
    name, claims = parse_report(text)
    matches = [c for c in claims if c.id == claim_id]
    if not matches:
        raise KeyError(f"no claim {claim_id!r} in report for {name}")
    out = []
    for c in matches:
        out.append(f"{c.id} on {name}: {c.value}" + ("" if c.exact else " (horizon-limited)"))
        if c.scale:
            out.append(f"  at scale {c.scale}")
        if c.certificate:
            out.append("  certificate:" if c.value != "Fails" else "  witness:")
            out.extend("    " + line for line in c.certificate)
        else:
            out.append("  no certificate recorded")
    return "\n".join(out) + "\n"
