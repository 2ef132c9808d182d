"""Parsing and rendering of spec documents (the CLI exchange format).

A document is JSON with string-encoded exact rationals ("2", "1/3",
"0.25") or "inf"; raw JSON floats are rejected to keep the interface
drift-free.  Example::

    {
      "space": {"atoms": ["a", "b"]},
      "pseudo_mul": "times",
      "measures": {"tau": {"a": "2", "b": "inf"}},
      "functions": {"f": {"a": "1", "b": "2"}},
      "ideals": {"I": [["a"]]}
    }

``pseudo_mul`` is "times", "min", or {"chain": {"carrier": [...],
"table": [[...]], "identity": "1"}} (identity optional when the table
determines it).  Custom continuous operations are library-only.

Parsing collects every located problem and raises SpecValidationError
with the full list; rendering is canonical, so parse ∘ render ∘ parse
is the identity on valid documents.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Optional

from .errors import SpecIssue, SpecValidationError
from .extreal import ExtNonneg
from .measure import MaxMeasure, MeasurableFn, SigmaIdeal
from .pseudomul import DiscreteChain, Minimum, PseudoMul, StandardProduct
from .spaces import Space

__all__ = ["SpecDoc", "parse_spec", "render_spec", "load_spec"]


@dataclass
class SpecDoc:
    space: Space
    pseudo_mul: Optional[PseudoMul] = None
    measures: dict = field(default_factory=dict)
    functions: dict = field(default_factory=dict)
    ideals: dict = field(default_factory=dict)

    def to_jsonable(self) -> dict:
        doc: dict = {"space": {"atoms": list(self.space.atoms)}}
        if self.pseudo_mul is not None:
            doc["pseudo_mul"] = _render_pm(self.pseudo_mul)
        if self.measures:
            doc["measures"] = {name: {a: str(v) for a, v in m.as_dict().items()}
                               for name, m in self.measures.items()}
        if self.functions:
            doc["functions"] = {name: {a: str(v) for a, v in f.as_dict().items()}
                                for name, f in self.functions.items()}
        if self.ideals:
            doc["ideals"] = {name: [sorted(g.labels) for g in (i.generators or (i.top,))]
                             for name, i in self.ideals.items()}
        return doc

    def render(self) -> str:
        return json.dumps(self.to_jsonable(), indent=2, sort_keys=True)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpecDoc):
            return NotImplemented
        return (self.space == other.space
                and _pm_equal(self.pseudo_mul, other.pseudo_mul)
                and self.measures == other.measures
                and self.functions == other.functions
                and self.ideals == other.ideals)


def _pm_equal(a: Optional[PseudoMul], b: Optional[PseudoMul]) -> bool:
    if a is None or b is None:
        return a is b
    if type(a) is not type(b):
        return False
    if isinstance(a, DiscreteChain):
        return (a.carrier == b.carrier and a._table == b._table
                and a.identity == b.identity)
    return True


def _render_pm(pm: PseudoMul):
    if isinstance(pm, StandardProduct):
        return "times"
    if isinstance(pm, Minimum):
        return "min"
    if isinstance(pm, DiscreteChain):
        carrier = list(pm.carrier)
        return {"chain": {
            "carrier": [str(c) for c in carrier],
            "table": [[str(pm._table[(a, b)]) for b in carrier] for a in carrier],
            "identity": str(pm.identity),
        }}
    raise ValueError(f"{pm.describe()} has no file representation (library-only)")


def _parse_mass(raw, path: str, issues: list) -> Optional[ExtNonneg]:
    if isinstance(raw, float):
        issues.append(SpecIssue(path, f"float {raw!r} not allowed; use a string like \"1/3\""))
        return None
    if isinstance(raw, bool) or not isinstance(raw, (str, int)):
        issues.append(SpecIssue(path, f"expected a rational string or \"inf\", got {raw!r}"))
        return None
    try:
        return ExtNonneg(raw)
    except (ValueError, TypeError) as exc:
        issues.append(SpecIssue(path, str(exc)))
        return None


def _parse_atom_map(raw, space: Space, path: str, issues: list) -> Optional[dict]:
    if not isinstance(raw, dict):
        issues.append(SpecIssue(path, "expected an object mapping atoms to values"))
        return None
    out = {}
    ok = True
    for atom in space.atoms:
        if atom not in raw:
            issues.append(SpecIssue(f"{path}.{atom}", "missing value for this atom"))
            ok = False
    for key, value in raw.items():
        if key not in space.atoms:
            issues.append(SpecIssue(f"{path}.{key}", "unknown atom"))
            ok = False
            continue
        v = _parse_mass(value, f"{path}.{key}", issues)
        if v is None:
            ok = False
        else:
            out[key] = v
    return out if ok else None


def _parse_chain(raw, path: str, issues: list) -> Optional[DiscreteChain]:
    if not isinstance(raw, dict):
        issues.append(SpecIssue(path, "chain spec must be an object"))
        return None
    carrier_raw = raw.get("carrier")
    table_raw = raw.get("table")
    if not isinstance(carrier_raw, list) or not carrier_raw:
        issues.append(SpecIssue(f"{path}.carrier", "expected a nonempty list"))
        return None
    carrier = []
    for i, c in enumerate(carrier_raw):
        v = _parse_mass(c, f"{path}.carrier[{i}]", issues)
        if v is None:
            return None
        carrier.append(v)
    if len(set(carrier)) != len(carrier):
        issues.append(SpecIssue(f"{path}.carrier", "carrier elements must be distinct"))
        return None
    if not isinstance(table_raw, list) or len(table_raw) != len(carrier):
        issues.append(SpecIssue(
            f"{path}.table", f"expected {len(carrier)} rows, got "
            f"{len(table_raw) if isinstance(table_raw, list) else type(table_raw).__name__}"))
        return None
    order = sorted(carrier)
    # table rows follow the carrier as written; remap onto the sorted order
    pos = {c: i for i, c in enumerate(carrier)}
    table = {}
    for i, row in enumerate(table_raw):
        if not isinstance(row, list) or len(row) != len(carrier):
            issues.append(SpecIssue(f"{path}.table[{i}]",
                                    f"expected {len(carrier)} entries"))
            return None
        for j, cell in enumerate(row):
            v = _parse_mass(cell, f"{path}.table[{i}][{j}]", issues)
            if v is None:
                return None
            if v not in pos:
                issues.append(SpecIssue(f"{path}.table[{i}][{j}]",
                                        f"value {v} is not a carrier element"))
                return None
            table[(carrier[i], carrier[j])] = v
    identity_raw = raw.get("identity")
    if identity_raw is not None:
        identity = _parse_mass(identity_raw, f"{path}.identity", issues)
        if identity is None:
            return None
    else:
        # infer: the unique carrier element acting as a left identity
        candidates = [e for e in order
                      if all(table[(e, t)] == t for t in order)]
        if not candidates:
            issues.append(SpecIssue(path, "table has no left identity; give one explicitly"))
            return None
        if len(candidates) > 1:
            issues.append(SpecIssue(
                path, f"table has several left identities "
                      f"({', '.join(str(c) for c in candidates)}); give one explicitly"))
            return None
        identity = candidates[0]
    try:
        return DiscreteChain(order, table, identity)
    except ValueError as exc:
        issues.append(SpecIssue(path, str(exc)))
        return None


def _parse_pseudo_mul(raw, path: str, issues: list) -> Optional[PseudoMul]:
    if isinstance(raw, str):
        if raw == "times":
            return StandardProduct()
        if raw == "min":
            return Minimum()
        issues.append(SpecIssue(path, f"unknown pseudo-multiplication {raw!r} "
                                      f"(expected \"times\", \"min\", or a chain object)"))
        return None
    if isinstance(raw, dict) and set(raw) == {"chain"}:
        return _parse_chain(raw["chain"], f"{path}.chain", issues)
    issues.append(SpecIssue(path, "expected \"times\", \"min\", or {\"chain\": {...}}"))
    return None


def _reject_duplicates(pairs):
    seen = {}
    for key, value in pairs:
        if key in seen:
            raise ValueError(f"duplicate key {key!r}")
        seen[key] = value
    return seen


def parse_spec(source) -> SpecDoc:
    """Parse a spec document from a dict, JSON text, or file path.

    Returns a fully validated SpecDoc or raises SpecValidationError
    carrying every located issue.
    """
    issues: list = []
    if isinstance(source, dict):
        data = source
    else:
        text = source
        if isinstance(source, (str, os.PathLike)) and os.path.exists(str(source)):
            with open(source, "r", encoding="utf-8") as fh:
                text = fh.read()
        try:
            data = json.loads(text, object_pairs_hook=_reject_duplicates)
        except (ValueError, TypeError) as exc:
            raise SpecValidationError([SpecIssue("$", f"not valid JSON: {exc}")])
    if not isinstance(data, dict):
        raise SpecValidationError([SpecIssue("$", "document must be a JSON object")])

    unknown = set(data) - {"space", "pseudo_mul", "measures", "functions", "ideals"}
    for key in sorted(unknown):
        issues.append(SpecIssue(key, "unknown section"))

    space_raw = data.get("space")
    space = None
    if not isinstance(space_raw, dict) or "atoms" not in space_raw:
        issues.append(SpecIssue("space", "expected {\"atoms\": [...]}"))
    else:
        atoms = space_raw["atoms"]
        if (not isinstance(atoms, list) or not atoms
                or not all(isinstance(a, str) and a for a in atoms)):
            issues.append(SpecIssue("space.atoms", "expected a nonempty list of labels"))
        elif len(set(atoms)) != len(atoms):
            issues.append(SpecIssue("space.atoms", "atom labels must be distinct"))
        else:
            space = Space(atoms)
    if space is None:
        raise SpecValidationError(issues)

    pm = None
    if "pseudo_mul" in data:
        pm = _parse_pseudo_mul(data["pseudo_mul"], "pseudo_mul", issues)

    measures = {}
    for name, raw in (data.get("measures") or {}).items():
        masses = _parse_atom_map(raw, space, f"measures.{name}", issues)
        if masses is not None:
            measures[name] = MaxMeasure(space, masses)
    functions = {}
    for name, raw in (data.get("functions") or {}).items():
        values = _parse_atom_map(raw, space, f"functions.{name}", issues)
        if values is not None:
            functions[name] = MeasurableFn(space, values)
    ideals = {}
    for name, raw in (data.get("ideals") or {}).items():
        path = f"ideals.{name}"
        gens = None
        if isinstance(raw, list) and all(isinstance(g, str) for g in raw):
            raw = [raw]
        if isinstance(raw, list) and all(isinstance(g, list) for g in raw):
            gens = []
            for i, g in enumerate(raw):
                bad = [a for a in g if a not in space.atoms]
                if bad:
                    issues.append(SpecIssue(f"{path}[{i}]", f"unknown atoms {bad}"))
                    gens = None
                    break
                gens.append(space.subset(g))
        else:
            issues.append(SpecIssue(path, "expected a list of generator sets (lists of atoms)"))
        if gens is not None:
            ideals[name] = SigmaIdeal.from_generators(space, gens)

    if issues:
        raise SpecValidationError(issues)
    return SpecDoc(space, pm, measures, functions, ideals)


def render_spec(doc: SpecDoc) -> str:
    return doc.render()


def load_spec(path) -> SpecDoc:
    return parse_spec(path)
