"""JSON files for structures and bisemimodules."""

from __future__ import annotations

import json
from pathlib import Path

from .errors import InputError
from .structures import KINDS, KINDS_WITH_ADD, KINDS_WITH_ONE, FiniteStructure, normalize, validate

STRUCTURE_KEYS = ("kind", "order", "zero", "one", "add", "mul")


def structure_to_json(S: FiniteStructure) -> dict:
    data = {"kind": S.kind, "order": S.order, "zero": S.zero}
    if S.one is not None:
        data["one"] = S.one
    if S.add is not None:
        data["add"] = S.add.tolist()
    data["mul"] = S.mul.tolist()
    return data


def structure_from_json(data: dict, check: bool = True) -> FiniteStructure:
    """Build a structure from its JSON object, moving zero/one to indices 0/1.

    With ``check`` the declared kind's axioms are validated and a failure
    raises :class:`InputError` naming the first broken axiom.
    """
    if not isinstance(data, dict):
        raise InputError("structure file must hold a JSON object")
    unknown = set(data) - set(STRUCTURE_KEYS)
    if unknown:
        raise InputError(f"unknown keys in structure file: {sorted(unknown)}")
    for key in ("kind", "order", "zero", "mul"):
        if key not in data:
            raise InputError(f"structure file is missing {key!r}")
    kind = data["kind"]
    if kind not in KINDS:
        raise InputError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    if (kind in KINDS_WITH_ONE) != ("one" in data):
        raise InputError(f"kind {kind} {'needs' if kind in KINDS_WITH_ONE else 'does not take'} 'one'")
    if (kind in KINDS_WITH_ADD) != ("add" in data):
        raise InputError(f"kind {kind} {'needs' if kind in KINDS_WITH_ADD else 'does not take'} 'add'")
    order = data["order"]
    if not isinstance(order, int) or isinstance(order, bool):
        raise InputError("order must be an integer")
    if len(data["mul"]) != order:
        raise InputError(f"declared order {order} does not match the mul table")
    S = normalize(kind, data["mul"], data.get("add"), data["zero"], data.get("one"))
    if check:
        report = validate(S)
        if not report.valid:
            axiom, witness = report.failures[0]
            raise InputError(f"not a valid {kind}: {axiom} fails at {list(witness)}")
    return S


def load_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise InputError(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def load_structure(path, check: bool = True) -> FiniteStructure:
    return structure_from_json(load_json(path), check=check)


def dumps(data) -> str:
    """Canonical JSON text used for every report (stable key order, no timestamps)."""
    return json.dumps(data, sort_keys=False, separators=(", ", ": ")) + "\n"


def save_structure(S: FiniteStructure, path) -> None:
    Path(path).write_text(dumps(structure_to_json(S)), encoding="utf-8")
