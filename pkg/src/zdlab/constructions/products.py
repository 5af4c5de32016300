from __future__ import annotations

import itertools
import math
from typing import Sequence

from ..errors import InputError, ResourceError
from ..structures import KINDS_WITH_ADD, KINDS_WITH_ONE, MAX_ORDER, SEMIRING, FiniteStructure, from_elements


def direct_product(factors: Sequence[FiniteStructure], check: bool = True) -> FiniteStructure:
    """Componentwise product of finitely many structures of one kind."""
    factors = list(factors)
    if not factors:
        raise InputError("direct product of an empty family")
    kind = factors[0].kind
    if any(F.kind != kind for F in factors):
        raise InputError("all factors must have the same kind")
    order = math.prod(F.order for F in factors)
    if order > MAX_ORDER:
        raise ResourceError(f"product order {order} exceeds {MAX_ORDER}")
    elems = list(itertools.product(*(range(F.order) for F in factors)))
    muls = [F.mul for F in factors]

    def mul(x, y):
        return tuple(int(t[a, b]) for t, a, b in zip(muls, x, y))

    add = None
    if kind in KINDS_WITH_ADD:
        adds = [F.add for F in factors]

        def add(x, y):
            return tuple(int(t[a, b]) for t, a, b in zip(adds, x, y))

    zero = (0,) * len(factors)
    one = (1,) * len(factors) if kind in KINDS_WITH_ONE else None
    return from_elements(kind, elems, mul, add, zero, one, check=check)


def matrix_semiring(S: FiniteStructure, n: int = 2, check: bool = True) -> FiniteStructure:
    """``M_n(S)``: n-by-n matrices (row-major tuples) with entrywise + and matrix product."""
    if S.kind != SEMIRING:
        raise InputError("matrix semirings need a semiring")
    if n < 1:
        raise InputError("matrix size must be positive")
    order = S.order ** (n * n)
    if order > MAX_ORDER:
        raise ResourceError(f"M_{n} over an order-{S.order} semiring has {order} elements")
    add_t, mul_t = S.add, S.mul

    def add(A, B):
        return tuple(int(add_t[a, b]) for a, b in zip(A, B))

    def mul(A, B):
        out = []
        for i in range(n):
            for j in range(n):
                c = 0
                for k in range(n):
                    c = add_t[c, mul_t[A[i * n + k], B[k * n + j]]]
                out.append(int(c))
        return tuple(out)

    elems = list(itertools.product(range(S.order), repeat=n * n))
    zero = (0,) * (n * n)
    one = tuple(1 if i == j else 0 for i in range(n) for j in range(n))
    return from_elements(SEMIRING, elems, mul, add, zero, one, check=check)


def matrix(rows) -> tuple:
    """Row-major label of a square matrix, for :meth:`FiniteStructure.index`."""
    return tuple(int(v) for row in rows for v in row)
