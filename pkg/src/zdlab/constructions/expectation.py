"""Triangular matrix semirings and (sigma-)expectation semirings."""

from __future__ import annotations

from typing import Sequence

from ..errors import InputError, ResourceError
from ..structures import MAX_ORDER, SEMIRING, FiniteStructure, from_elements
from .bisemimodule import Bisemimodule, regular_bisemimodule, validate_bisemimodule
from .endomorphisms import endomorphism_violation


def _require_valid(M: Bisemimodule):
    report = validate_bisemimodule(M)
    if not report.valid:
        axiom, witness = report.failures[0]
        raise InputError(f"bisemimodule axiom {axiom} fails at {witness}")


def triangular_semiring(S: FiniteStructure, M: Bisemimodule, T: FiniteStructure | None = None,
                        check: bool = True) -> FiniteStructure:
    """Matrices ``[[s, m], [0, t]]`` labelled ``(s, m, t)``.

    ``(s1, m1, t1)(s2, m2, t2) = (s1 s2, s1 m2 + m1 t2, t1 t2)``.
    """
    T = M.T if T is None else T
    if M.S != S or M.T != T:
        raise InputError("bisemimodule is over different semirings")
    order = S.order * M.module_order * T.order
    if order > MAX_ORDER:
        raise ResourceError(f"triangular semiring of order {order} exceeds {MAX_ORDER}")
    _require_valid(M)
    A, L, R = M.module_add, M.left_action, M.right_action
    Sa, Sm, Ta, Tm = S.add, S.mul, T.add, T.mul

    def add(x, y):
        return (int(Sa[x[0], y[0]]), int(A[x[1], y[1]]), int(Ta[x[2], y[2]]))

    def mul(x, y):
        s1, m1, t1 = x
        s2, m2, t2 = y
        return (int(Sm[s1, s2]), int(A[L[s1, m2], R[m1, t2]]), int(Tm[t1, t2]))

    elems = [(s, m, t) for s in range(S.order) for m in range(M.module_order) for t in range(T.order)]
    return from_elements(SEMIRING, elems, mul, add, (0, 0, 0), (1, 0, 1), check=check)


def expectation_semiring(S: FiniteStructure, M: Bisemimodule | None = None,
                         check: bool = True) -> FiniteStructure:
    """``S (+) M`` with ``(s1, m1)(s2, m2) = (s1 s2, s1 m2 + m1 s2)``; ``M`` defaults to ``S``."""
    M = regular_bisemimodule(S) if M is None else M
    if M.S != S or M.T != S:
        raise InputError("expectation semirings need an (S, S)-bisemimodule")
    _require_valid(M)
    A, L, R = M.module_add, M.left_action, M.right_action

    def add(x, y):
        return (int(S.add[x[0], y[0]]), int(A[x[1], y[1]]))

    def mul(x, y):
        return (int(S.mul[x[0], y[0]]), int(A[L[x[0], y[1]], R[x[1], y[0]]]))

    elems = [(s, m) for s in range(S.order) for m in range(M.module_order)]
    return from_elements(SEMIRING, elems, mul, add, (0, 0), (1, 0), check=check)


def sigma_expectation(S: FiniteStructure, sigma: Sequence[int], check: bool = True) -> FiniteStructure:
    """``(S (+) S)_sigma`` with ``(s1, m1)(s2, m2) = (s1 s2, sigma(s1) m2 + m1 s2)``."""
    if S.kind != SEMIRING:
        raise InputError("sigma-expectation semirings need a semiring")
    if not S.is_commutative():
        raise InputError("sigma-expectation semirings need a commutative semiring")
    sigma = [int(v) for v in sigma]
    bad = endomorphism_violation(S, sigma)
    if bad is not None:
        raise InputError(f"sigma is not a semiring endomorphism: {bad}")
    if S.order ** 2 > MAX_ORDER:
        raise ResourceError("sigma-expectation semiring too large")
    add_t, mul_t = S.add, S.mul

    def add(x, y):
        return (int(add_t[x[0], y[0]]), int(add_t[x[1], y[1]]))

    def mul(x, y):
        return (int(mul_t[x[0], y[0]]), int(add_t[mul_t[sigma[x[0]], y[1]], mul_t[x[1], y[0]]]))

    elems = [(s, m) for s in range(S.order) for m in range(S.order)]
    return from_elements(SEMIRING, elems, mul, add, (0, 0), (1, 0), check=check)
