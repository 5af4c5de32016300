"""Counterexample search: first enumerated structure satisfying a boolean property expression."""

from __future__ import annotations

import ast
from dataclasses import dataclass

from ..errors import InputError
from ..properties import PROPERTY_NAMES, check
from ..structures import FiniteStructure
from .enumeration import EnumerationSpec, enumerate_structures


def parse_expression(expr: str) -> ast.expr:
    """Parse ``expr`` built from property names, ``and``, ``or``, ``not`` and parentheses."""
    try:
        tree = ast.parse(expr.strip(), mode="eval").body
    except SyntaxError as exc:
        raise InputError(f"cannot parse expression {expr!r}: {exc.msg}") from None
    for node in ast.walk(tree):
        if isinstance(node, ast.Name):
            if node.id not in PROPERTY_NAMES:
                raise InputError(f"unknown property {node.id!r}; known: {', '.join(PROPERTY_NAMES)}")
        elif not isinstance(node, (ast.BoolOp, ast.And, ast.Or, ast.UnaryOp, ast.Not, ast.Load)):
            raise InputError(f"unsupported syntax in expression: {type(node).__name__}")
    return tree


def evaluate_expression(tree: ast.expr, S: FiniteStructure, degree: int = 2) -> bool:
    cache: dict[str, bool] = {}

    def value(node) -> bool:
        if isinstance(node, ast.Name):
            if node.id not in cache:
                cache[node.id] = check(S, node.id, degree=degree).holds
            return cache[node.id]
        if isinstance(node, ast.UnaryOp):
            return not value(node.operand)
        parts = (value(v) for v in node.values)
        return all(parts) if isinstance(node.op, ast.And) else any(parts)

    return value(tree)


@dataclass
class HuntResult:
    expression: str
    kind: str
    found: FiniteStructure | None
    order: int | None
    scanned: int

    def to_json(self) -> dict:
        from ..io import structure_to_json

        return {"expression": self.expression, "kind": self.kind,
                "found": None if self.found is None else structure_to_json(self.found),
                "order": self.order, "scanned": self.scanned, "exhausted": self.found is None}


def find_counterexample(expr: str, kind: str, max_order: int, min_order: int = 2, big: bool = False,
                        degree: int = 2) -> HuntResult:
    """Scan isomorphism classes in increasing order; the first match is the smallest-order example."""
    tree = parse_expression(expr)
    scanned = 0
    for n in range(min_order, max_order + 1):
        for S in enumerate_structures(EnumerationSpec(kind, n, up_to_iso=True, big=big)):
            scanned += 1
            if evaluate_expression(tree, S, degree):
                return HuntResult(expr, kind, S, n, scanned)
    return HuntResult(expr, kind, None, None, scanned)
