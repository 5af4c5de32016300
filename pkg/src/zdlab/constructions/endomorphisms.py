"""Semiring endomorphisms and the endomorphism PN-semiring of a unital magma."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..errors import InputError, ResourceError
from ..structures import PN_RIGHT, SEMIRING, FiniteStructure, as_table, from_elements, identity_witness

MAX_ENUM_ORDER = 6


def endomorphism_violation(S: FiniteStructure, f: Sequence[int]) -> str | None:
    """Describe the first semiring-endomorphism equation ``f`` breaks, if any."""
    f = np.asarray(f, dtype=np.int64)
    n = S.order
    if f.shape != (n,) or (f < 0).any() or (f >= n).any():
        return "map is not a function on the carrier"
    if f[0] != 0:
        return "f(0) != 0"
    if S.one is not None and f[S.one] != S.one:
        return "f(1) != 1"
    for name, t in (("+", S.add), ("*", S.mul)):
        if t is None:
            continue
        bad = np.argwhere(f[t] != t[np.ix_(f, f)])
        if len(bad):
            x, y = (int(v) for v in bad[0])
            return f"f({x} {name} {y}) != f({x}) {name} f({y})"
    return None


def endomorphisms(S: FiniteStructure) -> list[tuple[int, ...]]:
    """All maps preserving ``+``, ``*``, 0 and 1, in lexicographic order."""
    if S.kind != SEMIRING:
        raise InputError("endomorphisms are enumerated for semirings")
    n = S.order
    if n > MAX_ENUM_ORDER:
        raise ResourceError(f"endomorphism enumeration is limited to order {MAX_ENUM_ORDER}")
    out = []
    for rest in itertools.product(range(n), repeat=n - 2):
        f = (0, 1) + rest
        if endomorphism_violation(S, f) is None:
            out.append(f)
    return out


def is_injective(f: Sequence[int]) -> bool:
    return len(set(f)) == len(f)


def kernel(f: Sequence[int]) -> frozenset:
    return frozenset(i for i, v in enumerate(f) if v == 0)


@dataclass(frozen=True)
class ClosureFailure:
    """``f + g`` is not a magma endomorphism: it breaks additivity at ``x + y``."""

    f: tuple[int, ...]
    g: tuple[int, ...]
    x: int
    y: int

    def to_json(self) -> dict:
        return {"closure_failure": {"f": list(self.f), "g": list(self.g), "x": self.x, "y": self.y}}


def magma_endomorphisms(table) -> list[tuple[int, ...]]:
    """Maps ``f`` with ``f(0) = 0`` and ``f(x + y) = f(x) + f(y)``."""
    A = as_table(table, name="magma")
    n = A.shape[0]
    if n > MAX_ENUM_ORDER - 1:
        raise ResourceError(f"magma endomorphism enumeration is limited to order {MAX_ENUM_ORDER - 1}")
    out = []
    for rest in itertools.product(range(n), repeat=n - 1):
        f = np.array((0,) + rest)
        if (f[A] == A[np.ix_(f, f)]).all():
            out.append(tuple(int(v) for v in f))
    return out


def _additivity_break(A: np.ndarray, h: np.ndarray):
    bad = np.argwhere(h[A] != A[np.ix_(h, h)])
    return None if len(bad) == 0 else tuple(int(v) for v in bad[0])


def endomorphism_pn_semiring(table, check: bool = True) -> FiniteStructure | ClosureFailure:
    """``E_0(M)`` with pointwise ``+`` and composition, or where it is not closed.

    ``table`` is the addition of a unital magma with neutral element 0.  The
    result is validated as a right PN-semiring; elements are labelled by
    their image tuples and composition is ``(f o g)(m) = f(g(m))``.
    """
    A = as_table(table, name="magma")
    w = identity_witness(A, 0)
    if w is not None:
        raise InputError(f"0 is not neutral in the magma (fails at {w})")
    ends = magma_endomorphisms(A)
    arrays = [np.array(f) for f in ends]
    members = set(ends)
    for f, fa in zip(ends, arrays):
        for g, ga in zip(ends, arrays):
            h = A[fa, ga]
            if tuple(int(v) for v in h) not in members:
                x, y = _additivity_break(A, h)
                return ClosureFailure(f, g, x, y)
    n = A.shape[0]
    zero = (0,) * n
    ident = tuple(range(n))

    def add(f, g):
        return tuple(int(A[a, b]) for a, b in zip(f, g))

    def compose(f, g):
        return tuple(f[v] for v in g)

    return from_elements(PN_RIGHT, ends, compose, add, zero, ident, check=check)
