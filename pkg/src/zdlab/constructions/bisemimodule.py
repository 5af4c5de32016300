"""(S, T)-bisemimodules given by an addition table and two action tables."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import InputError
from ..structures import (
    SEMIRING,
    FiniteStructure,
    ValidationReport,
    as_table,
    associativity_witness,
    commutativity_witness,
    identity_witness,
)


def _first(mask):
    hits = np.argwhere(mask)
    return None if len(hits) == 0 else tuple(int(v) for v in hits[0])


@dataclass(frozen=True, eq=False)
class Bisemimodule:
    """Commutative monoid ``M`` with a left ``S``-action and a right ``T``-action.

    ``left_action[s, m] = s m`` and ``right_action[m, t] = m t``; the neutral
    element of ``M`` is 0.
    """

    S: FiniteStructure
    T: FiniteStructure
    module_add: np.ndarray
    left_action: np.ndarray
    right_action: np.ndarray

    def __post_init__(self):
        for R in (self.S, self.T):
            if R.kind != SEMIRING:
                raise InputError("bisemimodules are over semirings")
        add = as_table(self.module_add, name="module_add")
        k = add.shape[0]
        object.__setattr__(self, "module_add", add)
        object.__setattr__(self, "left_action",
                           as_table(self.left_action, rows=self.S.order, cols=k, values=k, name="left_action"))
        object.__setattr__(self, "right_action",
                           as_table(self.right_action, rows=k, cols=self.T.order, values=k, name="right_action"))

    @property
    def module_order(self) -> int:
        return self.module_add.shape[0]

    def to_json(self) -> dict:
        return {
            "module_order": self.module_order,
            "module_add": self.module_add.tolist(),
            "left_action": self.left_action.tolist(),
            "right_action": self.right_action.tolist(),
        }

    @classmethod
    def from_json(cls, data: dict, S: FiniteStructure, T: FiniteStructure) -> "Bisemimodule":
        keys = {"module_order", "module_add", "left_action", "right_action"}
        if not keys <= set(data):
            raise InputError(f"bisemimodule file needs keys {sorted(keys)}")
        M = cls(S, T, data["module_add"], data["left_action"], data["right_action"])
        if M.module_order != data["module_order"]:
            raise InputError("module_order does not match module_add")
        return M

    def key(self) -> tuple:
        return (self.S.key(), self.T.key(), self.module_add.tobytes(),
                self.left_action.tobytes(), self.right_action.tobytes())


def regular_bisemimodule(S: FiniteStructure) -> Bisemimodule:
    """``S`` as an ``(S, S)``-bisemimodule over itself."""
    return Bisemimodule(S, S, S.add, S.mul, S.mul)


def module_failures(A: np.ndarray) -> list:
    """Commutative-monoid axioms of the module addition (neutral element 0)."""
    checks = [("module_add_associativity", associativity_witness(A)),
              ("module_add_commutativity", commutativity_witness(A)),
              ("module_add_neutral_zero", identity_witness(A, 0))]
    return [(name, w) for name, w in checks if w is not None]


def left_action_failures(S: FiniteStructure, A: np.ndarray, L: np.ndarray) -> list:
    """Left semimodule axioms; witnesses ``(s, m, n)`` or ``(s, s', m)``."""
    k = A.shape[0]
    checks = [
        ("left_distributes_over_module_add", _first(L[:, A] != A[L[:, :, None], L[:, None, :]])),
        ("left_scalar_add", _first(L[S.add] != A[L[:, None, :], L[None, :, :]])),
        ("left_scalar_mul", _first(L[S.mul] != L[:, L])),
        ("left_kills_module_zero", _first(L[:, 0] != 0)),
        ("left_zero_scalar", _first(L[0, :] != 0)),
        ("left_unit", _first(L[1, :] != np.arange(k))),
    ]
    return [(name, w) for name, w in checks if w is not None]


def right_action_failures(T: FiniteStructure, A: np.ndarray, R: np.ndarray) -> list:
    """Right semimodule axioms; witnesses ``(m, n, t)`` or ``(m, t, t')``."""
    k = A.shape[0]
    checks = [
        ("right_distributes_over_module_add", _first(R[A] != A[R[:, None, :], R[None, :, :]])),
        ("right_scalar_add", _first(R[:, T.add] != A[R[:, :, None], R[:, None, :]])),
        ("right_scalar_mul", _first(R[:, T.mul] != R[R])),
        ("right_kills_module_zero", _first(R[0, :] != 0)),
        ("right_zero_scalar", _first(R[:, 0] != 0)),
        ("right_unit", _first(R[:, 1] != np.arange(k))),
    ]
    return [(name, w) for name, w in checks if w is not None]


def compatibility_witness(L: np.ndarray, R: np.ndarray):
    """First ``(s, m, t)`` with ``(s m) t != s (m t)``."""
    return _first(R[L] != L[:, R])


def validate_bisemimodule(M: Bisemimodule) -> ValidationReport:
    """Semimodule axioms on both sides plus ``(s m) t = s (m t)``."""
    A, L, R = M.module_add, M.left_action, M.right_action
    failures = module_failures(A) + left_action_failures(M.S, A, L) + right_action_failures(M.T, A, R)
    w = compatibility_witness(L, R)
    if w is not None:
        failures.append(("compatibility", w))
    return ValidationReport(not failures, failures)


def module_zero_divisors(M: Bisemimodule) -> tuple[frozenset, frozenset]:
    """``(Z_S(M), Z_T(M))``: scalars killing some nonzero module element."""
    ZS = np.flatnonzero((M.left_action[:, 1:] == 0).any(axis=1))
    ZT = np.flatnonzero((M.right_action[1:, :] == 0).any(axis=0))
    return frozenset(ZS.tolist()), frozenset(ZT.tolist())
