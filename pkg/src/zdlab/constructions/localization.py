"""Classical semiring of fractions at a set of central cancellable elements."""

from __future__ import annotations

import itertools
from typing import Iterable, NamedTuple

import numpy as np

from ..errors import InputError
from ..structures import SEMIRING, FiniteStructure, from_elements


class Fraction(NamedTuple):
    """``denominator^-1 * numerator``."""

    denominator: int
    numerator: int


def _central_cancellable(S: FiniteStructure, u: int) -> str | None:
    mul = S.mul
    bad = np.flatnonzero(mul[u, :] != mul[:, u])
    if len(bad):
        return f"{u} is not central: fails against {int(bad[0])}"
    for side, line in (("left", mul[u, :]), ("right", mul[:, u])):
        seen: dict[int, int] = {}
        for x, v in enumerate(line.tolist()):
            if v in seen:
                return f"{u} is not {side} cancellable: {seen[v]} and {x} give the same product"
            seen[v] = x
    return None


def denominator_violation(S: FiniteStructure, O: Iterable[int]) -> str | None:
    """Why ``O`` cannot serve as a denominator set, or None.

    Requires ``1 in O``, closure under multiplication, centrality and
    two-sided cancellability (``ux = uy => x = y`` and ``xu = yu => x = y``).
    """
    O = sorted(set(int(u) for u in O))
    if S.kind != SEMIRING:
        return "localization needs a semiring"
    if any(not 0 <= u < S.order for u in O):
        return "denominators must be elements"
    if S.one not in O:
        return "1 is not a denominator"
    members = set(O)
    for u in O:
        for v in O:
            if int(S.mul[u, v]) not in members:
                return f"not multiplicatively closed: {u} * {v} = {S.mul[u, v]}"
    for u in O:
        why = _central_cancellable(S, u)
        if why is not None:
            return why
    return None


def valid_denominator_sets(S: FiniteStructure) -> list[frozenset]:
    """Every valid denominator set, ordered by size then members."""
    others = [u for u in range(2, S.order) if _central_cancellable(S, u) is None]
    out = []
    for r in range(len(others) + 1):
        for combo in itertools.combinations(others, r):
            O = frozenset((1,) + combo)
            if denominator_violation(S, O) is None:
                out.append(O)
    return out


def localize(S: FiniteStructure, O: Iterable[int], check: bool = True) -> FiniteStructure:
    """``O^-1 S`` on classes of :class:`Fraction` under ``s1 u2 = s2 u1``.

    Each class is labelled by its lexicographically least ``(u, s)``.
    """
    O = sorted(set(int(u) for u in O))
    why = denominator_violation(S, O)
    if why is not None:
        raise InputError(why)
    mul, add = S.mul, S.add

    def equivalent(p: Fraction, q: Fraction) -> bool:
        return mul[p.numerator, q.denominator] == mul[q.numerator, p.denominator]

    reps: list[Fraction] = []
    rep_of: dict[Fraction, Fraction] = {}
    for u in O:
        for s in range(S.order):
            p = Fraction(u, s)
            for r in reps:
                if equivalent(p, r):
                    rep_of[p] = r
                    break
            else:
                reps.append(p)
                rep_of[p] = p

    def cls(u, s):
        return rep_of[Fraction(int(u), int(s))]

    def f_add(p: Fraction, q: Fraction) -> Fraction:
        return cls(mul[p.denominator, q.denominator],
                   add[mul[p.numerator, q.denominator], mul[q.numerator, p.denominator]])

    def f_mul(p: Fraction, q: Fraction) -> Fraction:
        return cls(mul[p.denominator, q.denominator], mul[p.numerator, q.numerator])

    return from_elements(SEMIRING, reps, f_mul, f_add, cls(1, 0), cls(1, 1), check=check)


def fraction_embedding(S: FiniteStructure, L: FiniteStructure) -> list[int]:
    """Indices in ``L = localize(S, O)`` of the classes ``1^-1 s``."""
    images = []
    for s in range(S.order):
        hit = [i for i, p in enumerate(L.labels) if S.mul[s, p.denominator] == p.numerator]
        if len(hit) != 1:
            raise InputError(f"{s} does not have a unique class in the localization")
        images.append(hit[0])
    return images


def embedding_violation(S: FiniteStructure, L: FiniteStructure) -> str | None:
    """Check that ``s -> 1^-1 s`` is an injective semiring homomorphism."""
    phi = np.array(fraction_embedding(S, L))
    if len(set(phi.tolist())) != S.order:
        return "canonical map is not injective"
    for name, t, u in (("+", S.add, L.add), ("*", S.mul, L.mul)):
        bad = np.argwhere(phi[t] != u[np.ix_(phi, phi)])
        if len(bad):
            x, y = (int(v) for v in bad[0])
            return f"canonical map does not preserve {x} {name} {y}"
    if phi[0] != 0 or phi[1] != 1:
        return "canonical map does not fix 0 and 1"
    return None
