"""Finite operation-table structures and their axiom validators.

Every finite structure lives on the carrier ``{0, ..., n-1}`` in normal form:
element 0 is the zero and, for kinds that carry an identity, element 1 is
the one.  Tables are read-only ``numpy`` arrays, ``table[i, j] = i o j``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import ClosureError, InputError, ResourceError

SEMIGROUP = "semigroup_with_zero"
MONOID = "monoid_with_zero"
PN_RIGHT = "pn_semiring_right"
PN_LEFT = "pn_semiring_left"
PN_DISTRIBUTIVE = "pn_semiring_distributive"
SEMIRING = "semiring"

KINDS = (SEMIGROUP, MONOID, PN_RIGHT, PN_LEFT, PN_DISTRIBUTIVE, SEMIRING)
PN_KINDS = (PN_RIGHT, PN_LEFT, PN_DISTRIBUTIVE)
KINDS_WITH_ONE = (MONOID,) + PN_KINDS + (SEMIRING,)
KINDS_WITH_ADD = PN_KINDS + (SEMIRING,)

MAX_ORDER = 4096

# triple scans are chunked so that no intermediate exceeds this many cells
_CHUNK_CELLS = 1 << 22
# brute-force canonical forms stop here
_MAX_CANON_PERMUTATIONS = 40320


@dataclass
class ValidationReport:
    valid: bool
    failures: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "failures": [{"axiom": a, "witness": list(w)} for a, w in self.failures],
        }

    def __bool__(self) -> bool:
        return self.valid


def as_table(table, rows: int | None = None, cols: int | None = None,
             values: int | None = None, name: str = "table") -> np.ndarray:
    """Coerce ``table`` to a read-only integer array, checking shape and range."""
    try:
        arr = np.array(table, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise InputError(f"{name}: not a rectangular integer grid") from exc
    if arr.ndim != 2:
        raise InputError(f"{name}: expected a 2-d grid, got {arr.ndim} dimensions")
    if rows is None:
        rows = arr.shape[0]
    cols = rows if cols is None else cols
    values = rows if values is None else values
    if arr.shape != (rows, cols):
        raise InputError(f"{name}: expected shape {(rows, cols)}, got {arr.shape}")
    if rows > MAX_ORDER or cols > MAX_ORDER:
        raise ResourceError(f"{name}: order exceeds {MAX_ORDER}")
    bad = np.argwhere((arr < 0) | (arr >= values))
    if len(bad):
        i, j = bad[0]
        raise InputError(f"{name}: entry [{i}][{j}] = {arr[i, j]} out of range 0..{values - 1}")
    arr.setflags(write=False)
    return arr


def _first(mask: np.ndarray) -> tuple[int, ...] | None:
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(v) for v in hits[0])


def first_triple(n: int, violated) -> tuple[int, int, int] | None:
    """Lexicographically smallest (a, b, c) where ``violated(a_block)`` is True.

    ``violated`` receives an index slice over the first coordinate and returns a
    boolean array of shape ``(len(slice), n, n)``.
    """
    step = max(1, _CHUNK_CELLS // max(1, n * n))
    for start in range(0, n, step):
        block = slice(start, min(n, start + step))
        hit = _first(violated(block))
        if hit is not None:
            return (hit[0] + start, hit[1], hit[2])
    return None


def associativity_witness(t: np.ndarray):
    n = t.shape[0]
    return first_triple(n, lambda blk: t[t[blk]] != t[blk][:, t])


def absorbing_witness(t: np.ndarray, zero: int):
    n = t.shape[0]
    bad = (t[zero, :] != zero) | (t[:, zero] != zero)
    hit = _first(bad)
    return None if hit is None else hit


def identity_witness(t: np.ndarray, one: int):
    idx = np.arange(t.shape[0])
    hit = _first((t[one, :] != idx) | (t[:, one] != idx))
    return hit


def commutativity_witness(t: np.ndarray):
    return _first(t != t.T)


def right_distributivity_witness(add: np.ndarray, mul: np.ndarray):
    """(u+v)w = uw+vw."""
    n = add.shape[0]
    return first_triple(
        n, lambda blk: mul[add[blk]] != add[mul[blk][:, None, :], mul[None, :, :]])


def left_distributivity_witness(add: np.ndarray, mul: np.ndarray):
    """u(v+w) = uv+uw."""
    n = add.shape[0]
    return first_triple(
        n, lambda blk: mul[blk][:, add] != add[mul[blk][:, :, None], mul[blk][:, None, :]])


def _order_check(t: np.ndarray) -> None:
    if t.shape[0] < 2:
        raise InputError("a structure needs at least two elements")


def _index_check(n: int, **indices: int | None) -> None:
    for name, value in indices.items():
        if value is not None and not 0 <= value < n:
            raise InputError(f"{name} = {value} is not an element of an order-{n} carrier")


def validate_semigroup_with_zero(mul, zero: int = 0) -> ValidationReport:
    mul = as_table(mul, name="mul")
    _order_check(mul)
    _index_check(mul.shape[0], zero=zero)
    failures = []
    w = associativity_witness(mul)
    if w is not None:
        failures.append(("associativity", w))
    w = absorbing_witness(mul, zero)
    if w is not None:
        failures.append(("zero_absorbing", w))
    return ValidationReport(not failures, failures)


def validate_monoid_with_zero(mul, zero: int = 0, one: int = 1) -> ValidationReport:
    report = validate_semigroup_with_zero(mul, zero)
    mul = as_table(mul, name="mul")
    _index_check(mul.shape[0], one=one)
    if one == zero:
        report.failures.append(("one_ne_zero", (one,)))
    else:
        w = identity_witness(mul, one)
        if w is not None:
            report.failures.append(("identity", w))
    report.valid = not report.failures
    return report


def _neutral_witness(add: np.ndarray, zero: int):
    return identity_witness(add, zero)


def validate_pn_tables(add, mul, zero: int = 0, one: int = 1, side: str = "right") -> ValidationReport:
    """Axioms of a PN-semiring given raw tables.

    Addition only needs ``zero`` as a two-sided neutral element; neither
    associativity nor commutativity of ``+`` is checked.
    """
    if side not in ("left", "right", "both"):
        raise InputError(f"side must be left, right or both, not {side!r}")
    mul = as_table(mul, name="mul")
    add = as_table(add, rows=mul.shape[0], name="add")
    report = validate_monoid_with_zero(mul, zero, one)
    failures = report.failures
    w = _neutral_witness(add, zero)
    if w is not None:
        failures.append(("add_neutral_zero", w))
    if side in ("right", "both"):
        w = right_distributivity_witness(add, mul)
        if w is not None:
            failures.append(("right_distributivity", w))
    if side in ("left", "both"):
        w = left_distributivity_witness(add, mul)
        if w is not None:
            failures.append(("left_distributivity", w))
    return ValidationReport(not failures, failures)


def validate_semiring_tables(add, mul, zero: int = 0, one: int = 1) -> ValidationReport:
    report = validate_pn_tables(add, mul, zero, one, side="both")
    add = as_table(add, name="add")
    failures = report.failures
    w = associativity_witness(add)
    if w is not None:
        failures.append(("add_associativity", w))
    w = commutativity_witness(add)
    if w is not None:
        failures.append(("add_commutativity", w))
    failures.sort(key=lambda f: _AXIOM_ORDER.index(f[0]))
    return ValidationReport(not failures, failures)


_AXIOM_ORDER = [
    "associativity", "zero_absorbing", "one_ne_zero", "identity", "add_neutral_zero",
    "right_distributivity", "left_distributivity", "add_associativity", "add_commutativity",
]

_PN_SIDE = {PN_RIGHT: "right", PN_LEFT: "left", PN_DISTRIBUTIVE: "both"}


@dataclass(frozen=True, eq=False)
class FiniteStructure:
    """A semigroup/monoid with zero, PN-semiring or semiring given by tables.

    ``labels`` optionally names the elements (e.g. the matrices of a matrix
    semiring); it does not take part in equality.
    """

    kind: str
    mul: np.ndarray
    add: np.ndarray | None = None
    zero: int = 0
    one: int | None = None
    labels: tuple | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InputError(f"unknown kind {self.kind!r}")
        mul = as_table(self.mul, name="mul")
        object.__setattr__(self, "mul", mul)
        n = mul.shape[0]
        _order_check(mul)
        if self.kind in KINDS_WITH_ADD:
            if self.add is None:
                raise InputError(f"kind {self.kind} needs an add table")
            object.__setattr__(self, "add", as_table(self.add, rows=n, name="add"))
        elif self.add is not None:
            raise InputError(f"kind {self.kind} has no add table")
        if self.zero != 0:
            raise InputError("structures are stored with zero = 0; use normalize()")
        if self.kind in KINDS_WITH_ONE:
            if self.one != 1:
                raise InputError("structures with an identity are stored with one = 1; use normalize()")
        elif self.one is not None:
            raise InputError(f"kind {self.kind} has no designated one")
        if self.labels is not None and len(self.labels) != n:
            raise InputError("labels must name every element")

    @property
    def order(self) -> int:
        return self.mul.shape[0]

    @property
    def has_add(self) -> bool:
        return self.add is not None

    def key(self) -> tuple:
        add = b"" if self.add is None else self.add.tobytes()
        return (self.kind, self.order, self.mul.tobytes(), add)

    def __eq__(self, other):
        if not isinstance(other, FiniteStructure):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"FiniteStructure(kind={self.kind!r}, order={self.order})"

    def index(self, label) -> int:
        """Element index carrying ``label``."""
        if self.labels is None:
            raise InputError("structure has no labels")
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f"no element labelled {label!r}") from None

    def is_commutative(self) -> bool:
        return commutativity_witness(self.mul) is None

    def with_kind(self, kind: str) -> "FiniteStructure":
        """The same tables viewed as a (weaker) kind, dropping unused parts."""
        add = self.add if kind in KINDS_WITH_ADD else None
        one = self.one if kind in KINDS_WITH_ONE else None
        if kind in KINDS_WITH_ONE and one is None:
            raise InputError(f"cannot view a {self.kind} as {kind}: no identity")
        return FiniteStructure(kind, self.mul, add, 0, one, self.labels)


def validate(S: FiniteStructure) -> ValidationReport:
    """Validate ``S`` against the axioms of its declared kind."""
    if S.kind == SEMIGROUP:
        return validate_semigroup_with_zero(S.mul, S.zero)
    if S.kind == MONOID:
        return validate_monoid_with_zero(S.mul, S.zero, S.one)
    if S.kind in PN_KINDS:
        return validate_pn_semiring(S, _PN_SIDE[S.kind])
    return validate_semiring(S)


def validate_pn_semiring(S: FiniteStructure, side: str = "right") -> ValidationReport:
    if S.add is None or S.one is None:
        raise InputError("a PN-semiring needs add and mul tables and a one")
    return validate_pn_tables(S.add, S.mul, S.zero, S.one, side)


def validate_semiring(S: FiniteStructure) -> ValidationReport:
    if S.add is None or S.one is None:
        raise InputError("a semiring needs add and mul tables and a one")
    return validate_semiring_tables(S.add, S.mul, S.zero, S.one)


def relabel(S: FiniteStructure, perm: Sequence[int]) -> FiniteStructure:
    """Image of ``S`` under the bijection ``old i -> new perm[i]``."""
    perm = np.asarray(perm, dtype=np.int64)
    n = S.order
    if sorted(perm.tolist()) != list(range(n)):
        raise InputError("relabel needs a permutation of the carrier")
    inv = np.empty(n, dtype=np.int64)
    inv[perm] = np.arange(n)

    def move(t):
        return None if t is None else perm[t[np.ix_(inv, inv)]]

    labels = None if S.labels is None else tuple(S.labels[i] for i in inv)
    return FiniteStructure(S.kind, move(S.mul), move(S.add), 0, S.one, labels)


def normalize(kind: str, mul, add=None, zero: int = 0, one: int | None = None,
              labels=None) -> FiniteStructure:
    """Build a structure from tables whose zero/one sit at arbitrary indices."""
    mul = as_table(mul, name="mul")
    n = mul.shape[0]
    if add is not None:
        add = as_table(add, rows=n, name="add")
    _index_check(n, zero=zero, one=one)
    if kind in KINDS_WITH_ONE and one is None:
        raise InputError(f"kind {kind} needs a one")
    if one is not None and one == zero:
        raise InputError("one must differ from zero")
    front = [zero] + ([one] if kind in KINDS_WITH_ONE else [])
    rest = [i for i in range(n) if i not in front]
    order = front + rest  # new index -> old index
    perm = np.empty(n, dtype=np.int64)
    perm[order] = np.arange(n)
    inv = np.asarray(order)

    def move(t):
        return None if t is None else perm[t[np.ix_(inv, inv)]]

    new_labels = None if labels is None else tuple(labels[i] for i in order)
    return FiniteStructure(kind, move(mul), move(add) if kind in KINDS_WITH_ADD else None,
                           0, 1 if kind in KINDS_WITH_ONE else None, new_labels)


def from_elements(kind: str, elements: Sequence, mul, add=None, zero=None, one=None,
                  check: bool = True) -> FiniteStructure:
    """Tabulate a structure from hashable element values and Python operations.

    ``mul``/``add`` are binary callables on element values; ``zero``/``one``
    are element values.  The result is labelled by the element values and, if
    ``check`` is set, validated against ``kind`` (raising on failure).
    """
    elements = list(elements)
    n = len(elements)
    if n > MAX_ORDER:
        raise ResourceError(f"carrier of {n} elements exceeds {MAX_ORDER}")
    if kind in KINDS_WITH_ONE:
        front = [zero, one]
    else:
        front = [zero]
    ordered = front + [e for e in elements if e not in front]
    if len(ordered) != n or len(set(ordered)) != n:
        raise InputError("zero/one must be carrier elements and elements must be distinct")
    pos = {e: i for i, e in enumerate(ordered)}

    def tab(op):
        out = np.empty((n, n), dtype=np.int64)
        for i, x in enumerate(ordered):
            row = out[i]
            for j, y in enumerate(ordered):
                try:
                    row[j] = pos[op(x, y)]
                except KeyError:
                    raise ClosureError(f"{x!r} o {y!r} leaves the carrier", (i, j)) from None
        return out

    S = FiniteStructure(kind, tab(mul), tab(add) if kind in KINDS_WITH_ADD else None,
                        0, 1 if kind in KINDS_WITH_ONE else None, tuple(ordered))
    if check:
        report = validate(S)
        if not report.valid:
            raise InputError(f"constructed {kind} fails validation: {report.failures[:3]}")
    return S


def substructure(S: FiniteStructure, subset: Iterable[int], kind: str | None = None) -> FiniteStructure:
    """Induced structure on ``subset``, optionally viewed as a weaker ``kind``."""
    kind = S.kind if kind is None else kind
    if kind not in KINDS:
        raise InputError(f"unknown kind {kind!r}")
    if kind in KINDS_WITH_ADD and S.add is None:
        raise InputError(f"{S.kind} has no addition to induce a {kind}")
    sub = sorted(set(int(x) for x in subset))
    if any(not 0 <= x < S.order for x in sub):
        raise InputError("subset contains non-elements")
    if 0 not in sub:
        raise InputError("subset must contain the zero")
    if kind in KINDS_WITH_ONE:
        if S.one is None or S.one not in sub:
            raise InputError(f"a {kind} substructure must contain the one")
    front = [0] + ([1] if kind in KINDS_WITH_ONE else [])
    ordered = front + [x for x in sub if x not in front]
    members = set(ordered)
    tables = [("mul", S.mul)] + ([("add", S.add)] if kind in KINDS_WITH_ADD else [])
    for name, t in tables:
        for a in ordered:
            for b in ordered:
                if int(t[a, b]) not in members:
                    raise ClosureError(f"subset not closed under {name}: {a} o {b} = {t[a, b]}", (a, b))
    pos = {x: i for i, x in enumerate(ordered)}
    idx = np.asarray(ordered)

    def induce(t):
        return np.vectorize(pos.__getitem__, otypes=[np.int64])(t[np.ix_(idx, idx)])

    labels = tuple(S.labels[i] for i in ordered) if S.labels is not None else tuple(ordered)
    T = FiniteStructure(kind, induce(S.mul), induce(S.add) if kind in KINDS_WITH_ADD else None,
                        0, 1 if kind in KINDS_WITH_ONE else None, labels)
    report = validate(T)
    if not report.valid:
        raise InputError(f"induced {kind} fails validation: {report.failures[:3]}")
    return T


def _fixed_points(S: FiniteStructure) -> list[int]:
    return [0, 1] if S.one is not None else [0]


def canonical_form(S: FiniteStructure) -> FiniteStructure:
    """Lexicographically least relabelling of ``S`` fixing zero (and one).

    The comparison key is the row-major ``mul`` table followed by ``add``.
    """
    n = S.order
    fixed = _fixed_points(S)
    free = list(range(len(fixed), n))
    count = 1
    for k in range(2, len(free) + 1):
        count *= k
        if count > _MAX_CANON_PERMUTATIONS:
            raise ResourceError(f"canonical form by brute force is limited to order {len(fixed) + 8}")
    # each row of `invs` maps new index -> old index
    invs = np.array([fixed + list(p) for p in itertools.permutations(free)], dtype=np.int64)
    perms = np.empty_like(invs)
    rows = np.arange(len(invs))[:, None]
    perms[rows, invs] = np.arange(n)[None, :]

    def images(t):
        moved = t[invs[:, :, None], invs[:, None, :]].reshape(len(invs), -1)
        return np.take_along_axis(perms, moved, axis=1)

    keys = images(S.mul)
    if S.add is not None:
        keys = np.concatenate([keys, images(S.add)], axis=1)
    # lexsort sorts by the last key first
    best = int(np.lexsort(keys.T[::-1])[0])
    inv = invs[best]
    labels = None if S.labels is None else tuple(S.labels[i] for i in inv)
    mul = keys[best, : n * n].reshape(n, n)
    add = keys[best, n * n:].reshape(n, n) if S.add is not None else None
    return FiniteStructure(S.kind, mul, add, 0, S.one, labels)


def canonical_key(S: FiniteStructure) -> tuple:
    return canonical_form(S).key()


def is_isomorphic(S: FiniteStructure, T: FiniteStructure) -> bool:
    if S.kind != T.kind or S.order != T.order:
        return False
    return canonical_key(S) == canonical_key(T)
