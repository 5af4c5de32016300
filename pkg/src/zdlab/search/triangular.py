"""Zero-divisors of triangular semirings: brute force against the stated characterizations.

Elements ``X = (s, m, t)`` are indexed ``s*|M|*|T| + m*|T| + t`` and
``X X' = (s s', s m' + m t', t t')``.  For each element the brute-force
left/right zero-divisor membership (the oracle) is compared with

* the printed conditions: left ``(a) s in Z_l(S)``, ``(b) s in Z_l(S)-{0},
  t in Z_l(T), some t'' != 0 with t t'' = 0 and m t'' = 0``, ``(c) s in
  Z_l(S)-{0}, t in Z_l(T)-{0}, some m'' != 0 with s m'' = 0``; right: the
  same with ``Z_r`` and ``t'' t = 0`` in (b);
* the corrected conditions read off the one-nonzero-entry annihilators
  ``(s', 0, 0)``, ``(0, m', 0)``, ``(0, 0, t')``: left ``s in Z_l(S)`` or
  ``some t' != 0 with t t' = 0 = m t'`` or ``some m' != 0 with s m' = 0``;
  right ``t in Z_r(T)`` or ``some s' != 0 with s' s = 0 = s' m`` or
  ``some m' != 0 with m' t = 0``.

Both readings of the hypothesis on ``m`` are tallied: ``nonzero_m`` (only
elements with ``m != 0``) and ``all_m``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..constructions.bisemimodule import (
    Bisemimodule,
    compatibility_witness,
    left_action_failures,
    module_zero_divisors,
    right_action_failures,
)
from ..errors import ResourceError
from ..properties import zero_divisor_sets
from ..structures import SEMIRING, FiniteStructure
from .enumeration import commutative_monoid_tables, corpus

MAX_TRIANGULAR = 4096
READINGS = ("nonzero_m", "all_m")
SIDES = ("left", "right")
CONDITION_SETS = ("printed", "corrected")


def zero_product_matrix(M: Bisemimodule) -> np.ndarray:
    """``Z[x, y]`` is True iff ``X_x X_y = 0`` in the triangular semiring."""
    S, T = M.S, M.T
    k, q = M.module_order, T.order
    N = S.order * k * q
    if N > MAX_TRIANGULAR:
        raise ResourceError(f"triangular semiring of order {N} exceeds {MAX_TRIANGULAR}")
    s, m, t = (a.ravel() for a in np.meshgrid(np.arange(S.order), np.arange(k), np.arange(q), indexing="ij"))
    A, L, R = M.module_add, M.left_action, M.right_action
    first = S.mul[s[:, None], s[None, :]] == 0
    middle = A[L[s[:, None], m[None, :]], R[m[:, None], t[None, :]]] == 0
    last = T.mul[t[:, None], t[None, :]] == 0
    return first & middle & last


def _elements(M: Bisemimodule):
    k, q = M.module_order, M.T.order
    return [(s, m, t) for s in range(M.S.order) for m in range(k) for t in range(q)]


def _any_nonzero(mask: np.ndarray) -> np.ndarray:
    """Row-wise: some nonzero column index is True."""
    return mask[:, 1:].any(axis=1)


def printed_conditions(M: Bisemimodule, side: str) -> np.ndarray:
    """Per-element boolean matrix [element, case] for cases (a), (b), (c) as printed."""
    S, T = M.S, M.T
    zS, zT = zero_divisor_sets(S), zero_divisor_sets(T)
    ZS = zS.left if side == "left" else zS.right
    ZT = zT.left if side == "left" else zT.right
    L, R = M.left_action, M.right_action
    rows = []
    for s, m, t in _elements(M):
        a = s in ZS
        if side == "left":
            tt = [u for u in range(1, T.order) if T.mul[t, u] == 0]
        else:
            tt = [u for u in range(1, T.order) if T.mul[u, t] == 0]
        b = s in ZS and s != 0 and t in ZT and any(R[m, u] == 0 for u in tt)
        c = s in ZS and s != 0 and t in ZT and t != 0 and any(L[s, n] == 0 for n in range(1, M.module_order))
        rows.append((a, b, c))
    return np.array(rows, dtype=bool)


def corrected_conditions(M: Bisemimodule, side: str) -> np.ndarray:
    """Per-element boolean matrix [element, case] for the corrected conditions (a'), (b'), (c')."""
    S, T, L, R = M.S, M.T, M.left_action, M.right_action
    rows = []
    for s, m, t in _elements(M):
        if side == "left":
            a = bool((S.mul[s, 1:] == 0).any())
            b = any(T.mul[t, u] == 0 and R[m, u] == 0 for u in range(1, T.order))
            c = bool((L[s, 1:] == 0).any())
        else:
            a = bool((T.mul[1:, t] == 0).any())
            b = any(S.mul[u, s] == 0 and L[u, m] == 0 for u in range(1, S.order))
            c = bool((R[1:, t] == 0).any())
        rows.append((a, b, c))
    return np.array(rows, dtype=bool)


def _proof_witness(M: Bisemimodule, side: str, conditions: str, case: int, X) -> tuple | None:
    """The annihilating element the proof builds for ``case`` (0,1,2 = a,b,c), or None if none exists."""
    s, m, t = X
    S, T, L, R = M.S, M.T, M.left_action, M.right_action
    if conditions == "printed":
        if side == "left":
            cands = [[(u, 0, 0) for u in range(1, S.order) if S.mul[s, u] == 0],
                     [(0, 0, u) for u in range(1, T.order) if T.mul[t, u] == 0 and R[m, u] == 0],
                     [(0, n, 0) for n in range(1, M.module_order) if L[s, n] == 0]]
        else:
            cands = [[(u, 0, 0) for u in range(1, S.order) if S.mul[u, s] == 0],
                     [(0, 0, u) for u in range(1, T.order) if T.mul[u, t] == 0 and R[m, u] == 0],
                     [(0, n, 0) for n in range(1, M.module_order) if L[s, n] == 0]]
    else:
        if side == "left":
            cands = [[(u, 0, 0) for u in range(1, S.order) if S.mul[s, u] == 0],
                     [(0, 0, u) for u in range(1, T.order) if T.mul[t, u] == 0 and R[m, u] == 0],
                     [(0, n, 0) for n in range(1, M.module_order) if L[s, n] == 0]]
        else:
            cands = [[(0, 0, u) for u in range(1, T.order) if T.mul[u, t] == 0],
                     [(u, 0, 0) for u in range(1, S.order) if S.mul[u, s] == 0 and L[u, m] == 0],
                     [(0, n, 0) for n in range(1, M.module_order) if R[n, t] == 0]]
    return cands[case][0] if cands[case] else None


def triangular_product(M: Bisemimodule, X, Y) -> tuple[int, int, int]:
    (s1, m1, t1), (s2, m2, t2) = X, Y
    A, L, R = M.module_add, M.left_action, M.right_action
    return (int(M.S.mul[s1, s2]), int(A[L[s1, m2], R[m1, t2]]), int(M.T.mul[t1, t2]))


@dataclass
class TriangularComparison:
    """Per-element oracle and stated verdicts plus direction tallies for one ``(S, M, T)``."""

    M: Bisemimodule
    elements: list
    oracle: dict            # side -> bool array
    stated: dict            # (conditions, side) -> bool array (any case)
    cases: dict             # (conditions, side) -> bool [element, case]
    proof_failures: dict    # (conditions, side) -> list of (X, case, X', product)

    def mismatches(self, conditions: str, side: str, direction: str, reading: str) -> list[int]:
        """Element indices where ``direction`` ("2=>1" or "1=>2") fails under ``reading``."""
        st, orc = self.stated[conditions, side], self.oracle[side]
        bad = st & ~orc if direction == "2=>1" else orc & ~st
        if reading == "nonzero_m":
            bad = bad & np.array([m != 0 for _, m, _ in self.elements])
        return np.flatnonzero(bad).tolist()

    def tallies(self) -> dict:
        out = {}
        for cond in CONDITION_SETS:
            for side in SIDES:
                for reading in READINGS:
                    key = f"{cond}/{side}/{reading}"
                    considered = len(self.elements) if reading == "all_m" else sum(
                        m != 0 for _, m, _ in self.elements)
                    out[key] = {
                        "elements": considered,
                        "2=>1_mismatches": len(self.mismatches(cond, side, "2=>1", reading)),
                        "1=>2_mismatches": len(self.mismatches(cond, side, "1=>2", reading)),
                    }
        return out

    def to_json(self) -> dict:
        rows = []
        for i, X in enumerate(self.elements):
            rows.append({
                "element": list(X),
                "left_zero_divisor": bool(self.oracle["left"][i]),
                "right_zero_divisor": bool(self.oracle["right"][i]),
                "printed_left": [bool(v) for v in self.cases["printed", "left"][i]],
                "printed_right": [bool(v) for v in self.cases["printed", "right"][i]],
                "corrected_left": [bool(v) for v in self.cases["corrected", "left"][i]],
                "corrected_right": [bool(v) for v in self.cases["corrected", "right"][i]],
            })
        return {"elements": rows, "tallies": self.tallies(),
                "proof_witness_failures": {f"{c}/{s}": [[list(X), "abc"[k], list(Y), list(P)] for X, k, Y, P in v]
                                           for (c, s), v in self.proof_failures.items()}}


def compare_triangular_characterization(S: FiniteStructure, M: Bisemimodule,
                                        T: FiniteStructure | None = None) -> TriangularComparison:
    T = M.T if T is None else T
    if M.S != S or M.T != T:
        raise ValueError("bisemimodule is over different semirings")
    Z = zero_product_matrix(M)
    oracle = {"left": _any_nonzero(Z), "right": _any_nonzero(Z.T)}
    elements = _elements(M)
    cases, stated, proof_failures = {}, {}, {}
    for cond, fn in (("printed", printed_conditions), ("corrected", corrected_conditions)):
        for side in SIDES:
            C = fn(M, side)
            cases[cond, side] = C
            stated[cond, side] = C.any(axis=1)
            failures = []
            for i, X in enumerate(elements):
                for case in np.flatnonzero(C[i]).tolist():
                    Y = _proof_witness(M, side, cond, case, X)
                    if Y is None:
                        failures.append((X, case, (), ()))
                        continue
                    P = triangular_product(M, X, Y) if side == "left" else triangular_product(M, Y, X)
                    if P != (0, 0, 0):
                        failures.append((X, case, Y, P))
            proof_failures[cond, side] = failures
    return TriangularComparison(M, elements, oracle, stated, cases, proof_failures)


def triangular_eversible_claim(M: Bisemimodule) -> tuple[bool, bool, bool]:
    """(hypothesis holds, triangular eversible, S and T eversible)."""
    Z = zero_product_matrix(M)
    ZS, ZT = module_zero_divisors(M)
    hyp = ZS == frozenset({0}) and ZT == frozenset({0})
    tri = bool((_any_nonzero(Z) == _any_nonzero(Z.T)).all())
    sets = [zero_divisor_sets(R) for R in (M.S, M.T)]
    comps = all(z.left == z.right for z in sets)
    return hyp, tri, comps


# ------------------------------------------------------------------- corpus


def _free_action_tables(rows: int, cols: int, left: bool) -> list[np.ndarray]:
    """Action tables with the forced zero/unit rows (left) or columns (right) filled in."""
    base = np.zeros((rows, cols), dtype=np.int64)
    if left:  # rows = scalars, cols = module elements
        base[1, :] = np.arange(cols)
        cells = [(i, j) for i in range(2, rows) for j in range(1, cols)]
    else:     # rows = module elements, cols = scalars
        base[:, 1] = np.arange(rows)
        cells = [(i, j) for i in range(1, rows) for j in range(2, cols)]
    values = cols if left else rows
    out = []
    for combo in itertools.product(range(values), repeat=len(cells)):
        t = base.copy()
        for (i, j), v in zip(cells, combo):
            t[i, j] = v
        out.append(t)
    return out


@lru_cache(maxsize=None)
def module_additions(max_order: int = 3) -> tuple[np.ndarray, ...]:
    """Commutative monoids of orders 2..max_order with neutral 0, one per isomorphism class."""
    out, seen = [], set()
    for n in range(2, max_order + 1):
        for A in commutative_monoid_tables(n):
            key = min(_relabel(A, p).tobytes() for p in _perms_fixing_zero(n))
            if key not in seen:
                seen.add(key)
                out.append(A)
    return tuple(out)


def _perms_fixing_zero(n):
    for rest in itertools.permutations(range(1, n)):
        yield np.array((0,) + rest)


def _relabel(A, p):
    inv = np.argsort(p)
    return p[A[np.ix_(inv, inv)]]


def bisemimodules(S: FiniteStructure, T: FiniteStructure, A: np.ndarray):
    """Every valid (S, T)-bisemimodule on the commutative monoid ``A``, in lexicographic order."""
    k = A.shape[0]
    lefts = [L for L in _free_action_tables(S.order, k, True) if not left_action_failures(S, A, L)]
    rights = [R for R in _free_action_tables(k, T.order, False) if not right_action_failures(T, A, R)]
    for L in lefts:
        for R in rights:
            if compatibility_witness(L, R) is None:
                yield Bisemimodule(S, T, A, L, R)


def triangular_corpus(max_order: int = 3) -> list[Bisemimodule]:
    """All ``(S, M, T)`` with S, T semirings and M a commutative monoid, component orders 2..max_order."""
    semirings = corpus(SEMIRING, max_order)
    out = []
    for S in semirings:
        for T in semirings:
            for A in module_additions(max_order):
                out.extend(bisemimodules(S, T, A))
    return out
