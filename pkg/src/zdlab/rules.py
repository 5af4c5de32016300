"""Countable carriers given by rules plus a bounded element enumerator.

Properties of a :class:`RuleStructure` are only ever semi-decided: a search
over ``enumerate(bound)`` can find witnesses, and registered *hooks* encode
exact mathematical arguments that settle membership questions conclusively.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Hashable

import numpy as np

from .errors import InputError

Element = Hashable

# Hook signature: element -> True (conclusively a member), False (conclusively
# not a member) or None (no argument available).
MembershipHook = Callable[[Element], "bool | None"]


@dataclass(frozen=True)
class RuleStructure:
    name: str
    zero: Element
    mul: Callable[[Element, Element], Element]
    enumerate: Callable[[int], list]
    one: Element | None = None
    add: Callable[[Element, Element], Element] | None = None
    # keys: "left_zero_divisor", "right_zero_divisor"
    hooks: dict[str, MembershipHook] = field(default_factory=dict)
    notes: dict[str, str] = field(default_factory=dict)

    def elements(self, bound: int) -> list:
        elems = list(self.enumerate(bound))
        if self.zero not in elems:
            raise InputError(f"{self.name}: enumerator({bound}) omits the zero")
        if self.one is not None and self.one not in elems:
            raise InputError(f"{self.name}: enumerator({bound}) omits the one")
        return elems

    def hook(self, name: str, x: Element):
        fn = self.hooks.get(name)
        return None if fn is None else fn(x)


class BoundedView:
    """Finite window ``enumerate(bound)`` of a rule structure.

    Products that leave the window are recorded as ``-1`` in ``mul`` (the
    element exists but has no index at this bound).
    """

    def __init__(self, R: RuleStructure, bound: int):
        self.structure = R
        self.bound = bound
        self.elements = R.elements(bound)
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.zero = self.index[R.zero]
        n = len(self.elements)
        mul = np.full((n, n), -1, dtype=np.int64)
        iszero = np.zeros((n, n), dtype=bool)
        for i, x in enumerate(self.elements):
            for j, y in enumerate(self.elements):
                p = R.mul(x, y)
                iszero[i, j] = p == R.zero
                mul[i, j] = self.index.get(p, -1)
        self.mul = mul
        self.is_zero_product = iszero

    def __len__(self):
        return len(self.elements)

    def product(self, x: Any, y: Any):
        return self.structure.mul(x, y)


def check_enumerator_monotone(R: RuleStructure, bounds) -> tuple[int, int] | None:
    """First consecutive bound pair violating ``enumerate(b) <= enumerate(b')``."""
    bounds = sorted(bounds)
    for b1, b2 in zip(bounds, bounds[1:]):
        if not set(R.enumerate(b1)) <= set(R.enumerate(b2)):
            return (b1, b2)
    return None


def check_zero_absorbing(R: RuleStructure, bound: int) -> Element | None:
    for x in R.elements(bound):
        if R.mul(R.zero, x) != R.zero or R.mul(x, R.zero) != R.zero:
            return x
    return None


# Upper-triangular 2x2 matrices [[a, b], [0, c]] with a in N0 and b, c in Z2,
# multiplied formally:  [[a,b],[0,c]] [[x,y],[0,z]] = [[ax, ay + bz],[0, cz]],
# where N0 acts on Z2 by n.y = ny mod 2.  Elements are encoded as (a, b, c).

def _tri_mul(p, q):
    a, b, c = p
    x, y, z = q
    return (a * x, (a * y + b * z) % 2, (c * z) % 2)


def _tri_enumerate(bound: int) -> list:
    return [(a, b, c) for a in range(bound + 1) for b in (0, 1) for c in (0, 1)]


def _tri_right_zero_divisor(d):
    # W d = 0 with W = (x, y, z): x*a = 0 in N0 and z*c = 0, y*c = x*b (mod 2).
    # If a = 0, W = (2, 0, 0) kills d; if c = 0, W = (0, 1, 0) does.  If a != 0
    # then x = 0 (N0 has no zero-divisors), and c = 1 forces y = z = 0.
    a, _, c = d
    if a == 0 or c == 0:
        return True
    return False


def _tri_left_zero_divisor(d):
    # d W = 0: a*x = 0, a*y + b*z = 0, c*z = 0 (mod 2 for the last two).
    # W = (0, 1, 0) works whenever a is even; otherwise x = 0, y = b z mod 2
    # and W = (0, b, 1) works iff c = 0.
    a, b, c = d
    if a % 2 == 0:
        return True
    return c == 0


def triangular_n0_z2() -> RuleStructure:
    """The semigroup ``[[N0, Z2], [0, Z2]]`` under formal matrix multiplication."""
    return RuleStructure(
        name="triangular_n0_z2",
        zero=(0, 0, 0),
        one=(1, 0, 1),
        mul=_tri_mul,
        enumerate=_tri_enumerate,
        hooks={
            "right_zero_divisor": _tri_right_zero_divisor,
            "left_zero_divisor": _tri_left_zero_divisor,
        },
        notes={
            "right_zero_divisor": "x*a = 0 in N0 with a != 0 forces x = 0 (e.g. 2x = 0 => x = 0); "
                                  "then c = 1 forces y = z = 0",
            "left_zero_divisor": "(0,1,0) is annihilated on the right by every d with a even",
        },
    )


def from_finite(S) -> RuleStructure:
    """Wrap a finite structure as a rule structure (no hooks).  Used for cross-checks."""
    n = S.order
    add = None
    if S.add is not None:
        add = lambda x, y: int(S.add[x, y])  # noqa: E731
    return RuleStructure(
        name=f"finite_{S.kind}_{n}",
        zero=0,
        one=S.one,
        mul=lambda x, y: int(S.mul[x, y]),
        add=add,
        enumerate=lambda bound: list(range(max(2, min(n, bound)))),
    )
