"""Dual-rendered command reports: human text and lossless JSON."""

from __future__ import annotations

import dataclasses
import enum
import json
from dataclasses import dataclass
from typing import Any

from .density import AchievableSet
from .extreal import ExtNonneg
from .measure import MaxMeasure, MeasurableFn, SetFunctionTable, SigmaIdeal
from .pseudomul import PseudoMul
from .quotient import AdditiveMeasure, QuotientClass, QuotientLattice
from .spaces import Space, SubsetB

__all__ = ["Report", "jsonable", "render_text"]


def jsonable(value: Any) -> Any:
    """Convert library values to plain JSON types (strings for rationals)."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, float):
        return value
    if isinstance(value, ExtNonneg):
        return str(value)
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, SubsetB):
        return sorted(value.labels)
    if isinstance(value, Space):
        return {"atoms": list(value.atoms)}
    if isinstance(value, (MaxMeasure, MeasurableFn)):
        return {a: str(v) for a, v in value.as_dict().items()}
    if isinstance(value, AdditiveMeasure):
        return {a: str(v) for a, v in zip(value.space.atoms, value.masses)}
    if isinstance(value, SigmaIdeal):
        return {"top": sorted(value.top.labels)}
    if isinstance(value, QuotientClass):
        return sorted(value.representative.labels)
    if isinstance(value, QuotientLattice):
        return {"non_null_atoms": sorted(value.non_null_atoms.labels),
                "class_count": value.count}
    if isinstance(value, SetFunctionTable):
        return {",".join(sorted(SubsetB(value.space, m).labels)) or "∅": str(v)
                for m, v in enumerate(value.values)}
    if isinstance(value, AchievableSet):
        return {"display": str(value), "lower": str(value.lower), "upper": str(value.upper),
                "lower_attained": value.lower_attained,
                "explicit": (sorted(str(v) for v in value.explicit_values)
                             if value.explicit_values is not None else None)}
    if isinstance(value, PseudoMul):
        return value.describe()
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {f.name: jsonable(getattr(value, f.name)) for f in dataclasses.fields(value)}
    if isinstance(value, (frozenset, set)):
        return sorted(jsonable(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    return str(value)


def render_text(value: Any, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {render_scalar(v)}")
        return "\n".join(lines)
    if isinstance(value, list):
        if all(not isinstance(v, (dict, list)) for v in value):
            return f"{pad}[{', '.join(render_scalar(v) for v in value)}]"
        blocks = []
        for v in value:
            blocks.append(f"{pad}-")
            blocks.append(render_text(v, indent + 1))
        return "\n".join(blocks)
    return pad + render_scalar(value)


def render_scalar(v: Any) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return "[" + ", ".join(render_scalar(x) for x in v) + "]"
    return str(v)


@dataclass
class Report:
    """One command's outcome; body holds only plain JSON types."""

    command: str
    body: dict
    negative_verdict: bool = False

    def to_jsonable(self) -> dict:
        return {"command": self.command,
                "negative_verdict": self.negative_verdict,
                "body": self.body}

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable(), indent=2, ensure_ascii=False, sort_keys=True)

    def render(self) -> str:
        head = f"== {self.command} =="
        return head + "\n" + render_text(self.body)
