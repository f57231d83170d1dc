"""Machine-readable reports (schema ``octavic-report/1``) and their text rendering.

Exact numbers are written as strings ("3/2", "1+2*i") so that nothing is
lost to floating point.  Output is deterministic: no timestamps, and timing
is only included on request.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .covariants import AbsoluteInvariants, InvariantVector
from .dihedral import DihedralTuple
from .exact import ExactPoly, ExactScalar, MoebiusMap

SCHEMA = "octavic-report/1"


def to_jsonable(x):
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, float):
        return x
    if isinstance(x, (ExactScalar, Fraction, ExactPoly, DihedralTuple)):
        return str(x)
    if isinstance(x, MoebiusMap):
        return [str(v) for v in x.matrix]
    if isinstance(x, InvariantVector):
        return {k: str(v) for k, v in x.as_dict().items()}
    if isinstance(x, AbsoluteInvariants):
        return {f"i{k + 1}": str(v) for k, v in enumerate(x.as_tuple())}
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    if hasattr(x, "as_dict"):
        return to_jsonable(x.as_dict())
    return str(x)


@dataclass
class Report:
    command: str
    inputs: dict
    config: dict
    results: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)
    timing: dict | None = None
    exit_code: int = 0

    def as_dict(self) -> dict:
        out = {
            "schema": SCHEMA,
            "command": self.command,
            "inputs": to_jsonable(self.inputs),
            "config": to_jsonable(self.config),
            "results": to_jsonable(self.results),
            "warnings": to_jsonable(self.warnings),
        }
        if self.timing is not None:
            out["timing"] = {k: round(v, 4) for k, v in self.timing.items()}
        return out

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        lines = [f"{self.command}"]
        for k, v in to_jsonable(self.inputs).items():
            lines.append(f"  input {k}: {v}")
        _render(to_jsonable(self.results), lines, 1)
        for w in self.warnings:
            lines.append(f"warning: {w}")
        if self.timing is not None:
            for k, v in self.timing.items():
                lines.append(f"time {k}: {v:.3f}s")
        return "\n".join(lines)


def _render(x, lines: list, depth: int):
    pad = "  " * depth
    if isinstance(x, dict):
        for k, v in x.items():
            if _inline(v):
                lines.append(f"{pad}{k}: [{', '.join(_scalar_text(u) for u in v)}]")
            elif isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                _render(v, lines, depth + 1)
            else:
                lines.append(f"{pad}{k}: {_scalar_text(v)}")
    elif isinstance(x, list):
        for v in x:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                _render(v, lines, depth + 1)
            else:
                lines.append(f"{pad}- {_scalar_text(v)}")
    else:
        lines.append(f"{pad}{_scalar_text(x)}")


def _inline(v) -> bool:
    return (isinstance(v, list) and 0 < len(v) <= 16
            and all(isinstance(u, (int, str)) and len(str(u)) <= 12 for u in v))


def _scalar_text(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, dict)) and not v:
        return "none"
    return str(v)


__all__ = ["Report", "SCHEMA", "to_jsonable"]
