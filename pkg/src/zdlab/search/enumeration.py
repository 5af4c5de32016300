"""Exhaustive and random generation of small structures by pruned backtracking.

Tables are filled cell by cell in row-major order.  Unassigned cells hold the
sentinel value ``n`` and the padded table has a sentinel row and column, so a
single vectorized scan checks every axiom instance whose operands are all
known.  Multiplicative tables start with the absorbing zero (and the identity)
fixed; additive tables start with the neutral zero fixed.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator, Sequence

import numpy as np

from ..errors import InputError, ResourceError
from ..properties import check
from ..structures import (
    MONOID,
    PN_DISTRIBUTIVE,
    PN_LEFT,
    PN_RIGHT,
    SEMIGROUP,
    SEMIRING,
    FiniteStructure,
    canonical_form,
    canonical_key,
)

CAPS = {SEMIGROUP: 4, MONOID: 4, PN_RIGHT: 4, PN_LEFT: 4, PN_DISTRIBUTIVE: 4, SEMIRING: 4}
BIG_CAP = 5
RANDOM_CAPS = {SEMIGROUP: 16, MONOID: 16}
# Above this order, random semigroups and monoids are assembled from smaller random blocks.
DIRECT_SEARCH_MAX = 7
RANDOM_CAP_DEFAULT = 6

Check = Callable[[np.ndarray], bool]


@dataclass(frozen=True)
class EnumerationSpec:
    kind: str
    order: int
    up_to_iso: bool = True
    filters: tuple[str, ...] = field(default_factory=tuple)
    big: bool = False

    def __post_init__(self):
        if self.kind not in CAPS:
            raise InputError(f"unknown kind {self.kind!r}")
        if self.order < 2:
            raise InputError("structures have at least two elements")
        cap = BIG_CAP if self.big else CAPS[self.kind]
        if self.order > cap:
            hint = "" if self.big else " (use --big for order 5)"
            raise ResourceError(f"exhaustive {self.kind} enumeration is capped at order {cap}{hint}")
        object.__setattr__(self, "filters", tuple(self.filters))


# ------------------------------------------------------------ partial checks


def _padded(n: int) -> np.ndarray:
    return np.full((n + 1, n + 1), n, dtype=np.int64)


def _assoc_ok(P: np.ndarray) -> bool:
    n = P.shape[0] - 1
    T = P[:n, :n]
    left = P[T][:, :, :n]                      # (xy)z
    right = P[np.arange(n)[:, None, None], T[None, :, :]]  # x(yz)
    return not ((left != right) & (left != n) & (right != n)).any()


def _right_dist_ok(P: np.ndarray, Mpad: np.ndarray) -> bool:
    """(u+v)w = uw+vw with additive table ``P`` partially known and ``Mpad`` complete."""
    n = P.shape[0] - 1
    M = Mpad[:n, :n]
    left = Mpad[P[:n, :n]][:, :, :n]
    right = P[M[:, None, :], M[None, :, :]]
    return not ((left != right) & (left != n) & (right != n)).any()


def _left_dist_ok(P: np.ndarray, Mpad: np.ndarray) -> bool:
    """u(v+w) = uv+uw."""
    n = P.shape[0] - 1
    M = Mpad[:n, :n]
    left = Mpad[np.arange(n)[:, None, None], P[None, :n, :n]]
    right = P[M[:, :, None], M[:, None, :]]
    return not ((left != right) & (left != n) & (right != n)).any()


# -------------------------------------------------------------- backtracking


def _backtrack(P: np.ndarray, cells: Sequence[tuple[int, int]], ok: Check, symmetric: bool = False,
               rng: np.random.Generator | None = None, budget: list[int] | None = None) -> Iterator[np.ndarray]:
    """Yield every completion of ``P`` over ``cells`` accepted by ``ok`` after each assignment."""
    n = P.shape[0] - 1
    depth = len(cells)

    def go(k):
        if k == depth:
            yield P[:n, :n].copy()
            return
        i, j = cells[k]
        values = range(n) if rng is None else _random_order(rng, n)
        for v in values:
            if budget is not None:
                budget[0] -= 1
                if budget[0] < 0:
                    raise ResourceError("random search budget exhausted; try a smaller order")
            P[i, j] = v
            if symmetric:
                P[j, i] = v
            if ok(P):
                yield from go(k + 1)
        P[i, j] = n
        if symmetric:
            P[j, i] = n

    yield from go(0)


def _random_order(rng: np.random.Generator, n: int) -> list[int]:
    """Random value order that tries 0 first half of the time.

    Zero entries never create new associativity constraints, so the bias keeps
    randomized search out of dead ends at larger orders.
    """
    values = rng.permutation(n).tolist()
    if rng.random() < 0.5:
        values.remove(0)
        values.insert(0, 0)
    return values


def _mul_start(n: int, with_one: bool) -> tuple[np.ndarray, list[tuple[int, int]]]:
    P = _padded(n)
    P[0, :n] = 0
    P[:n, 0] = 0
    first = 1
    if with_one:
        P[1, :n] = np.arange(n)
        P[:n, 1] = np.arange(n)
        P[1, 0] = P[0, 1] = 0
        first = 2
    cells = [(i, j) for i in range(first, n) for j in range(first, n)]
    return P, cells


def _add_start(n: int, commutative: bool) -> tuple[np.ndarray, list[tuple[int, int]]]:
    P = _padded(n)
    P[0, :n] = np.arange(n)
    P[:n, 0] = np.arange(n)
    cells = [(i, j) for i in range(1, n) for j in range(1, n) if not commutative or i <= j]
    return P, cells


def mul_tables(n: int, with_one: bool, rng=None, budget=None) -> Iterator[np.ndarray]:
    """Associative tables with absorbing 0 (and identity 1), lexicographic order."""
    P, cells = _mul_start(n, with_one)
    return _backtrack(P, cells, _assoc_ok, rng=rng, budget=budget)


def commutative_monoid_tables(n: int) -> Iterator[np.ndarray]:
    """Commutative associative tables with neutral 0."""
    P, cells = _add_start(n, commutative=True)
    return _backtrack(P, cells, _assoc_ok, symmetric=True)


def unital_magma_tables(n: int) -> Iterator[np.ndarray]:
    """Every table with neutral 0 (no further axioms)."""
    P, cells = _add_start(n, commutative=False)
    return _backtrack(P, cells, lambda _: True)


def add_tables_for(kind: str, mul: np.ndarray, rng=None, budget=None) -> Iterator[np.ndarray]:
    """Additions making ``(add, mul)`` a structure of ``kind`` (distributivity propagated cell by cell)."""
    n = mul.shape[0]
    Mpad = _padded(n)
    Mpad[:n, :n] = mul
    laws = []
    if kind in (PN_RIGHT, PN_DISTRIBUTIVE, SEMIRING):
        laws.append(lambda P: _right_dist_ok(P, Mpad))
    if kind in (PN_LEFT, PN_DISTRIBUTIVE, SEMIRING):
        laws.append(lambda P: _left_dist_ok(P, Mpad))
    if kind == SEMIRING:
        laws.append(_assoc_ok)

    def ok(P):
        return all(law(P) for law in laws)

    P, cells = _add_start(n, commutative=kind == SEMIRING)
    return _backtrack(P, cells, ok, symmetric=kind == SEMIRING, rng=rng, budget=budget)


# --------------------------------------------------------------- enumeration


def _structure(kind: str, mul: np.ndarray, add: np.ndarray | None) -> FiniteStructure:
    one = None if kind == SEMIGROUP else 1
    return FiniteStructure(kind, mul, add=add, zero=0, one=one)


def _tasks(kind: str, n: int) -> list:
    """Independent work units, in output order: multiplication tables, or semigroup row prefixes."""
    if kind in (SEMIGROUP, MONOID):
        P, cells = _mul_start(n, kind == MONOID)
        head = cells[:min(2, len(cells))]
        return [P[:n, :n].copy() for P in _prefixes(P, head)]
    return list(mul_tables(n, with_one=True))


def _prefixes(P, head):
    n = P.shape[0] - 1
    for values in itertools.product(range(n), repeat=len(head)):
        Q = P.copy()
        for (i, j), v in zip(head, values):
            Q[i, j] = v
        if _assoc_ok(Q):
            yield Q


def _run_task(args) -> list[tuple[list, list | None]]:
    kind, n, task = args
    out = []
    if kind in (SEMIGROUP, MONOID):
        P = _padded(n)
        P[:n, :n] = task
        cells = [(i, j) for i, j in zip(*np.nonzero(task == n))]
        cells.sort()
        for mul in _backtrack(P, cells, _assoc_ok):
            out.append((mul.tolist(), None))
    else:
        for add in add_tables_for(kind, task):
            out.append((task.tolist(), add.tolist()))
    return out


def enumerate_structures(spec: EnumerationSpec, jobs: int = 1) -> Iterator[FiniteStructure]:
    """Every valid structure of ``spec.kind`` and ``spec.order`` in a fixed order.

    With ``up_to_iso`` each isomorphism class is emitted once, as its
    canonical form, at the position of its first labelled member.  Results
    do not depend on ``jobs``.
    """
    n, kind = spec.order, spec.kind
    tasks = [(kind, n, t) for t in _tasks(kind, n)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_task, tasks))
    else:
        chunks = map(_run_task, tasks)
    seen = set()
    for chunk in chunks:
        for mul, add in chunk:
            S = _structure(kind, np.array(mul), None if add is None else np.array(add))
            if spec.up_to_iso:
                key = canonical_key(S)
                if key in seen:
                    continue
                seen.add(key)
                S = canonical_form(S)
            if all(check(S, p).holds for p in spec.filters):
                yield S


@lru_cache(maxsize=None)
def corpus(kind: str, max_order: int, min_order: int = 2, up_to_iso: bool = True) -> tuple[FiniteStructure, ...]:
    """All structures of ``kind`` with orders in ``[min_order, max_order]`` (cached per process)."""
    out = []
    for n in range(min_order, max_order + 1):
        out.extend(enumerate_structures(EnumerationSpec(kind, n, up_to_iso)))
    return tuple(out)


# ------------------------------------------------------------------- random


def random_structure(kind: str, order: int, seed: int = 0, budget: int = 200_000) -> FiniteStructure:
    """A valid structure found by randomized backtracking; deterministic per seed.

    Randomized search restarts with a doubled step allowance whenever an
    attempt stalls, so a single unlucky early choice cannot eat the budget.
    Semigroups and monoids beyond ``DIRECT_SEARCH_MAX`` elements, where direct
    search stalls, are built as 0-direct unions of random blocks (with an
    identity adjoined for monoids) under a random relabeling.
    """
    if kind not in CAPS:
        raise InputError(f"unknown kind {kind!r}")
    cap = RANDOM_CAPS.get(kind, RANDOM_CAP_DEFAULT)
    if not 2 <= order <= cap:
        raise ResourceError(f"random {kind} generation supports orders 2..{cap}")
    rng = np.random.default_rng(seed)
    if kind in (SEMIGROUP, MONOID) and order > DIRECT_SEARCH_MAX:
        return _random_composite(kind, order, rng, budget)
    remaining, allowance = budget, 1_000
    while remaining > 0:
        step = min(allowance, remaining)
        try:
            return _random_attempt(kind, order, rng, [step])
        except ResourceError:
            remaining -= step
            allowance *= 2
    raise ResourceError("random search budget exhausted; try a smaller order")


def _random_attempt(kind: str, order: int, rng: np.random.Generator, left: list[int]) -> FiniteStructure:
    if kind in (SEMIGROUP, MONOID):
        mul = next(mul_tables(order, kind == MONOID, rng=rng, budget=left))
        return _structure(kind, mul, None)
    while True:
        mul = next(mul_tables(order, True, rng=rng, budget=left))
        add = next(add_tables_for(kind, mul, rng=rng, budget=left), None)
        if add is not None:
            return _structure(kind, mul, add)


def _random_composite(kind: str, order: int, rng: np.random.Generator, budget: int) -> FiniteStructure:
    """0-direct union of random semigroup blocks: products across blocks are 0."""
    first = 2 if kind == MONOID else 1
    mul = np.zeros((order, order), dtype=np.int64)
    start, remaining = first, order - first
    while remaining:
        size = int(rng.integers(1, min(DIRECT_SEARCH_MAX - 1, remaining) + 1))
        block = random_structure(SEMIGROUP, size + 1, int(rng.integers(2**32)), budget)
        relabel = np.concatenate(([0], np.arange(start, start + size)))
        idx = np.arange(start, start + size)
        mul[np.ix_(idx, idx)] = relabel[block.mul[1:, 1:]]
        start += size
        remaining -= size
    if kind == MONOID:
        mul[1, :] = np.arange(order)
        mul[:, 1] = np.arange(order)
        mul[1, 0] = mul[0, 1] = 0
    perm = np.concatenate((np.arange(first), first + rng.permutation(order - first)))
    inv = np.argsort(perm)
    return _structure(kind, perm[mul[np.ix_(inv, inv)]], None)
