"""Decision procedures for zero-divisor properties, with witnesses.

Finite structures get exact two-valued answers from vectorised table scans.
Rule structures are searched inside ``enumerate(bound)``; a property is only
reported as failing when a concrete witness (or a registered exact argument)
settles it, and is otherwise ``unknown_at_bound``.

Witness tuples are element indices; for rule structures they index the
bounded window ``R.elements(bound)``.  Ties are broken by taking the
lexicographically smallest tuple.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable

import numpy as np

from .errors import ClosureError, InputError
from .rules import BoundedView, RuleStructure
from .structures import (
    KINDS_WITH_ONE,
    PN_DISTRIBUTIVE,
    SEMIRING,
    FiniteStructure,
    commutativity_witness,
    first_triple,
)


class Verdict(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown_at_bound"


@dataclass(frozen=True)
class PropertyReport:
    property: str
    verdict: Verdict
    witness: tuple | None = None
    bound: int | None = None
    # free-text explanation; not part of the JSON payload
    detail: str | None = field(default=None, compare=False)

    @property
    def holds(self) -> bool:
        return self.verdict == Verdict.HOLDS

    @property
    def fails(self) -> bool:
        return self.verdict == Verdict.FAILS

    def to_json(self) -> dict:
        return {
            "property": self.property,
            "verdict": self.verdict.value,
            "witness": None if self.witness is None else [_plain(w) for w in self.witness],
            "bound": self.bound,
        }

    @classmethod
    def from_json(cls, data: dict) -> "PropertyReport":
        if set(data) != {"property", "verdict", "witness", "bound"}:
            raise InputError(f"not a property report: keys {sorted(data)}")
        witness = data["witness"]
        return cls(data["property"], Verdict(data["verdict"]),
                   None if witness is None else tuple(witness), data["bound"])


def _plain(w):
    if isinstance(w, (np.integer,)):
        return int(w)
    if isinstance(w, (tuple, list)):
        return [_plain(x) for x in w]
    return w


def _holds(name, bound=None, detail=None):
    return PropertyReport(name, Verdict.HOLDS, None, bound, detail)


def _fails(name, witness, bound=None, detail=None):
    return PropertyReport(name, Verdict.FAILS, tuple(int(x) for x in witness), bound, detail)


def _unknown(name, bound, detail=None):
    return PropertyReport(name, Verdict.UNKNOWN, None, bound, detail)


def _first(mask: np.ndarray):
    hits = np.argwhere(mask)
    return None if len(hits) == 0 else tuple(int(v) for v in hits[0])


def _is_rule(S) -> bool:
    return isinstance(S, RuleStructure)


def _need_bound(S, bound):
    if bound is None:
        raise InputError(f"{S.name}: rule structures need a bound")
    return BoundedView(S, bound)


# ---------------------------------------------------------------- zero-divisors


@dataclass(frozen=True)
class ZeroDivisorSets:
    left: frozenset
    right: frozenset
    # rule backend: elements of the window whose membership is undecided
    unknown_left: frozenset = frozenset()
    unknown_right: frozenset = frozenset()

    @property
    def all(self) -> frozenset:
        return self.left | self.right

    @property
    def proper(self) -> frozenset:
        return self.all - {self.zero_element}

    zero_element: object = 0


def _left_right_masks(S: FiniteStructure):
    Z = S.mul == 0
    left = Z[:, 1:].any(axis=1)
    right = Z[1:, :].any(axis=0)
    return left, right


def zero_divisor_sets(S, bound: int | None = None) -> ZeroDivisorSets:
    """Left and right zero-divisors.

    For rule structures the sets hold element encodings; an element lands in
    ``left``/``right`` when a nonzero partner exists in the window or a hook
    proves membership, and in ``unknown_*`` when neither search nor hook
    decides it.
    """
    if _is_rule(S):
        return _rule_zero_divisor_sets(S, bound)
    left, right = _left_right_masks(S)
    return ZeroDivisorSets(frozenset(np.flatnonzero(left).tolist()),
                           frozenset(np.flatnonzero(right).tolist()))


def _rule_membership(R: RuleStructure, V: BoundedView):
    """Per window element: (left, right) each True/False/None, plus partners."""
    Z = V.is_zero_product.copy()
    Z[:, V.zero] = False
    left_partner = [int(np.argmax(row)) if row.any() else None for row in Z]
    Zt = V.is_zero_product.copy()
    Zt[V.zero, :] = False
    right_partner = [int(np.argmax(col)) if col.any() else None for col in Zt.T]
    left, right = [], []
    for i, x in enumerate(V.elements):
        left.append(True if left_partner[i] is not None else R.hook("left_zero_divisor", x))
        right.append(True if right_partner[i] is not None else R.hook("right_zero_divisor", x))
    return left, right, left_partner, right_partner


def _rule_zero_divisor_sets(R: RuleStructure, bound) -> ZeroDivisorSets:
    V = _need_bound(R, bound)
    left, right, _, _ = _rule_membership(R, V)
    E = V.elements
    return ZeroDivisorSets(
        left=frozenset(E[i] for i, v in enumerate(left) if v),
        right=frozenset(E[i] for i, v in enumerate(right) if v),
        unknown_left=frozenset(E[i] for i, v in enumerate(left) if v is None),
        unknown_right=frozenset(E[i] for i, v in enumerate(right) if v is None),
        zero_element=R.zero,
    )


def annihilators(S: FiniteStructure, s: int) -> tuple[frozenset, frozenset]:
    """``(Ann_l(s), Ann_r(s)) = ({x : xs = 0}, {x : sx = 0})``."""
    left = np.flatnonzero(S.mul[:, s] == 0)
    right = np.flatnonzero(S.mul[s, :] == 0)
    return frozenset(left.tolist()), frozenset(right.tolist())


# ------------------------------------------------------------- binary properties


def is_reversible(S, bound: int | None = None) -> PropertyReport:
    """st = 0 implies ts = 0."""
    name = "reversible"
    if _is_rule(S):
        V = _need_bound(S, bound)
        Z = V.is_zero_product
        w = _first(Z & ~Z.T)
        return _fails(name, w, bound) if w else _unknown(name, bound)
    Z = S.mul == 0
    w = _first(Z & ~Z.T)
    return _fails(name, w) if w else _holds(name)


def is_eversible(S, bound: int | None = None) -> PropertyReport:
    """Z_l(S) = Z_r(S).

    The witness is ``(x, y)``: ``x`` lies in exactly one of Z_l, Z_r and ``y``
    is a nonzero partner on the side where it does (``xy = 0`` if ``x`` is a
    left zero-divisor, else ``yx = 0``).
    """
    name = "eversible"
    if _is_rule(S):
        V = _need_bound(S, bound)
        left, right, lp, rp = _rule_membership(S, V)
        for i in range(len(V)):
            if left[i] is True and right[i] is False and lp[i] is not None:
                return _fails(name, (i, lp[i]), bound, "left but provably not right zero-divisor")
            if right[i] is True and left[i] is False and rp[i] is not None:
                return _fails(name, (i, rp[i]), bound, "right but provably not left zero-divisor")
        return _unknown(name, bound)
    Z = S.mul == 0
    left, right = _left_right_masks(S)
    bad = np.flatnonzero(left != right)
    if len(bad) == 0:
        return _holds(name)
    x = int(bad[0])
    if left[x]:
        y = int(np.flatnonzero(Z[x, 1:])[0]) + 1
    else:
        y = int(np.flatnonzero(Z[1:, x])[0]) + 1
    return _fails(name, (x, y))


def is_entire(S, bound: int | None = None) -> PropertyReport:
    """ab = 0 implies a = 0 or b = 0."""
    name = "entire"
    if _is_rule(S):
        V = _need_bound(S, bound)
        Z = V.is_zero_product.copy()
        Z[V.zero, :] = False
        Z[:, V.zero] = False
        w = _first(Z)
        return _fails(name, w, bound) if w else _unknown(name, bound)
    Z = S.mul == 0
    Z[0, :] = False
    Z[:, 0] = False
    w = _first(Z)
    return _fails(name, w) if w else _holds(name)


def _all_middle_zero(mul: np.ndarray) -> np.ndarray:
    """M[a, b] = True iff a s b = 0 for every s."""
    n = mul.shape[0]
    out = np.empty((n, n), dtype=bool)
    step = max(1, (1 << 22) // (n * n))
    for start in range(0, n, step):
        blk = slice(start, min(n, start + step))
        # mul[mul[a, s], b] indexed [a, s, b]
        out[blk] = (mul[mul[blk]] == 0).all(axis=1)
    return out


def is_prime(S, bound: int | None = None) -> PropertyReport:
    """asb = 0 for all s implies a = 0 or b = 0."""
    name = "prime"
    if _is_rule(S):
        return _unknown(name, bound, "needs a universal over an infinite carrier")
    M = _all_middle_zero(S.mul)
    M[0, :] = False
    M[:, 0] = False
    w = _first(M)
    return _fails(name, w) if w else _holds(name)


def is_semiprime(S, bound: int | None = None) -> PropertyReport:
    """asa = 0 for all s implies a = 0."""
    name = "semiprime"
    if _is_rule(S):
        return _unknown(name, bound, "needs a universal over an infinite carrier")
    d = np.diagonal(_all_middle_zero(S.mul)).copy()
    d[0] = False
    w = _first(d)
    return _fails(name, w) if w else _holds(name)


def is_nilpotent_free(S, bound: int | None = None) -> PropertyReport:
    """s^2 = 0 implies s = 0."""
    name = "nilpotent_free"
    if _is_rule(S):
        V = _need_bound(S, bound)
        d = np.diagonal(V.is_zero_product).copy()
        d[V.zero] = False
        w = _first(d)
        return _fails(name, w, bound) if w else _unknown(name, bound)
    d = np.diagonal(S.mul) == 0
    d = d.copy()
    d[0] = False
    w = _first(d)
    return _fails(name, w) if w else _holds(name)


def is_symmetric(S, bound: int | None = None) -> PropertyReport:
    """rst = 0 implies srt = 0."""
    name = "symmetric"
    if _is_rule(S):
        V = _need_bound(S, bound)
        R, E = S, V.elements
        for r, s, t in itertools.product(range(len(E)), repeat=3):
            if R.mul(R.mul(E[r], E[s]), E[t]) == R.zero and R.mul(R.mul(E[s], E[r]), E[t]) != R.zero:
                return _fails(name, (r, s, t), bound)
        return _unknown(name, bound)
    mul = S.mul
    w = first_triple(S.order, lambda blk: (mul[mul[blk]] == 0)
                     & (mul[mul[:, blk]].transpose(1, 0, 2) != 0))
    return _fails(name, w) if w else _holds(name)


def is_commutative(S, bound: int | None = None) -> PropertyReport:
    name = "commutative"
    if _is_rule(S):
        V = _need_bound(S, bound)
        E = V.elements
        for i, j in itertools.combinations(range(len(E)), 2):
            if S.mul(E[i], E[j]) != S.mul(E[j], E[i]):
                return _fails(name, (i, j), bound)
        return _unknown(name, bound)
    w = commutativity_witness(S.mul)
    return _fails(name, w) if w else _holds(name)


def is_zerosumfree(S, bound: int | None = None) -> PropertyReport:
    """s + t = 0 implies s = t = 0."""
    name = "zerosumfree"
    if _is_rule(S):
        if S.add is None:
            raise InputError(f"{S.name} has no addition")
        V = _need_bound(S, bound)
        E = V.elements
        for i, j in itertools.product(range(len(E)), repeat=2):
            if (i, j) != (V.zero, V.zero) and S.add(E[i], E[j]) == S.zero:
                return _fails(name, (i, j), bound)
        return _unknown(name, bound)
    if S.add is None:
        raise InputError(f"{S.kind} has no addition")
    Z = S.add == 0
    Z[0, 0] = False
    w = _first(Z)
    return _fails(name, w) if w else _holds(name)


# ------------------------------------------------------------------ nilpotents


def nilpotent_elements(S: FiniteStructure) -> list[tuple[int, int]]:
    """``(s, k)`` for every nilpotent ``s`` with ``k`` the least power giving 0.

    Powers are followed up to the carrier order: the sequence s, s^2, ...
    takes at most ``order`` distinct values before it cycles and 0 is fixed.
    """
    n = S.order
    index = np.zeros(n, dtype=np.int64)
    p = np.arange(n)
    base = np.arange(n)
    for k in range(1, n + 1):
        newly = (p == 0) & (index == 0)
        index[newly] = k
        p = S.mul[p, base]
    return [(int(s), int(index[s])) for s in np.flatnonzero(index)]


def nilpotent_mask(S: FiniteStructure) -> np.ndarray:
    mask = np.zeros(S.order, dtype=bool)
    for s, _ in nilpotent_elements(S):
        mask[s] = True
    return mask


# --------------------------------------------------------------------- ideals

SIDEDNESS = ("left", "right", "two_sided")


@dataclass(frozen=True)
class IdealDescriptor:
    generators: frozenset
    closure: frozenset
    sidedness: str


def _closure_step(S: FiniteStructure, mask: np.ndarray, sidedness: str) -> np.ndarray:
    idx = np.flatnonzero(mask)
    new = mask.copy()
    if S.add is not None:
        new[S.add[np.ix_(idx, idx)].ravel()] = True
    if sidedness in ("right", "two_sided"):
        new[S.mul[idx, :].ravel()] = True
    if sidedness in ("left", "two_sided"):
        new[S.mul[:, idx].ravel()] = True
    return new


def ideal_closure(S: FiniteStructure, generators: Iterable[int], sidedness: str = "right") -> IdealDescriptor:
    """Least subset containing ``generators`` closed under the ideal operations.

    Closure is under ``+`` (when the structure has an addition) and under
    multiplication by arbitrary elements on the side(s) ``sidedness`` asks for.
    """
    if sidedness not in SIDEDNESS:
        raise InputError(f"sidedness must be one of {SIDEDNESS}")
    gens = frozenset(int(g) for g in generators)
    if not gens:
        raise InputError("an ideal needs at least one generator")
    mask = np.zeros(S.order, dtype=bool)
    mask[list(gens)] = True
    while True:
        new = _closure_step(S, mask, sidedness)
        if (new == mask).all():
            break
        mask = new
    return IdealDescriptor(gens, frozenset(np.flatnonzero(mask).tolist()), sidedness)


def ideal_escape(S: FiniteStructure, members: Iterable[int], sidedness: str):
    """First ``(op, x, y)`` whose result leaves ``members``, or None."""
    members = sorted(set(members))
    inside = set(members)
    checks = []
    if S.add is not None:
        checks.append(("add", [(a, b) for a in members for b in members], S.add))
    if sidedness in ("right", "two_sided"):
        checks.append(("mul", [(a, s) for a in members for s in range(S.order)], S.mul))
    if sidedness in ("left", "two_sided"):
        checks.append(("mul", [(s, a) for s in range(S.order) for a in members], S.mul))
    for op, pairs, table in checks:
        for x, y in pairs:
            if int(table[x, y]) not in inside:
                return (op, x, y)
    return None


def is_nil_ideal(S: FiniteStructure, ideal: IdealDescriptor) -> PropertyReport:
    esc = ideal_escape(S, ideal.closure, ideal.sidedness)
    if esc is not None:
        op, x, y = esc
        raise ClosureError(f"not a {ideal.sidedness} ideal: {x} {op} {y} escapes", (x, y))
    nil = nilpotent_mask(S)
    for a in sorted(ideal.closure):
        if not nil[a]:
            return _fails("nil_ideal", (a,))
    return _holds("nil_ideal")


def verify_cohn(S: FiniteStructure) -> PropertyReport:
    """Consequences of Cohn's theorem, checked on a reversible structure.

    * for every nilpotent ``a`` the right-ideal closure of ``{a}``, when nil, is
      also a left ideal (and it must be nil outside the PN-semiring kinds);
    * for semirings, the nilpotent set is closed under ``+`` and every
      ``a s b`` with ``s`` nilpotent is nilpotent.

    Non-reversible structures hold vacuously.  Failure witnesses:
    ``(a, r)`` non-nil closure, ``(a, s, r)`` with ``s r`` outside the
    closure, ``(s, t)`` with ``s + t`` not nilpotent, ``(a, s, b)`` with
    ``a s b`` not nilpotent.
    """
    name = "cohn"
    if not is_reversible(S).holds:
        return _holds(name, detail="vacuous: not reversible")
    nil = nilpotent_mask(S)
    demand_nil = S.kind not in ("pn_semiring_right", "pn_semiring_left", PN_DISTRIBUTIVE)
    for a in np.flatnonzero(nil).tolist():
        R = ideal_closure(S, {a}, "right").closure
        members = sorted(R)
        bad = [r for r in members if not nil[r]]
        if bad:
            if demand_nil:
                return _fails(name, (a, bad[0]), detail="right ideal closure of a nilpotent is not nil")
            continue
        for s in range(S.order):
            for r in members:
                if int(S.mul[s, r]) not in R:
                    return _fails(name, (a, s, r), detail="nil right ideal is not a left ideal")
    if S.kind == SEMIRING:
        N = np.flatnonzero(nil)
        sums = S.add[np.ix_(N, N)]
        w = _first(~nil[sums])
        if w is not None:
            return _fails(name, (N[w[0]], N[w[1]]), detail="nilpotents not closed under +")
        for s in N.tolist():
            # a s b indexed [a, b]
            sandwich = S.mul[S.mul[:, s][:, None], np.arange(S.order)[None, :]]
            w = _first(~nil[sandwich])
            if w is not None:
                return _fails(name, (w[0], s, w[1]), detail="a s b not nilpotent")
    return _holds(name)


# ------------------------------------------------------- eversibility criterion


def eversible_condition2(S: FiniteStructure, quantifier: str = "restricted") -> PropertyReport:
    """Zero-product criterion for eversibility of distributive PN-semirings.

    For every pair with ``ab = 0`` there must be ``c != 0`` with either
    ``bc = 0 = ca`` or ``bc != 0, ca != 0, bca = 0``.  ``quantifier`` selects
    the pairs: ``"restricted"`` uses pairs with ``a, b`` both nonzero,
    ``"literal"`` uses every pair.  Witness: the first failing ``(a, b)``.
    """
    if S.kind not in (PN_DISTRIBUTIVE, SEMIRING):
        raise InputError(f"the criterion needs a distributive PN-semiring, not {S.kind}")
    if quantifier not in ("restricted", "literal"):
        raise InputError("quantifier must be 'restricted' or 'literal'")
    name = "eversible_condition2" + ("_literal" if quantifier == "literal" else "")
    mul = S.mul
    Z = mul == 0
    Zc = Z[:, 1:].astype(np.int64)  # c ranges over nonzero elements
    # case (a): some c != 0 with bc = 0 and ca = 0; indexed [b, a]
    case_a = (Zc @ Z[1:, :].astype(np.int64)) > 0
    # case (b): some c != 0 with bc != 0, ca != 0 and (bc)a = 0; [b, c, a]
    bca_zero = mul[mul[:, 1:]] == 0
    case_b = ((~Z[:, 1:])[:, :, None] & (~Z[1:, :])[None, :, :] & bca_zero).any(axis=1)
    ok = case_a | case_b  # [b, a]
    bad = Z & ~ok.T  # [a, b]
    if quantifier == "restricted":
        bad[0, :] = False
        bad[:, 0] = False
    w = _first(bad)
    return _fails(name, w) if w else _holds(name)


# --------------------------------------------------------- polynomial checks


def is_armendariz_bounded(S: FiniteStructure, degree: int = 2, samples: int | None = None,
                          seed: int = 0) -> PropertyReport:
    """Armendariz condition for polynomials of degree <= ``degree``.

    Every pair ``f, g`` with ``fg = 0`` must have ``a_i b_j = 0`` for all
    coefficient indices (index 0 included).  Witness: ``(*f, *g, i, j)``.
    """
    from .constructions.polynomials import zero_product_pairs

    if S.kind != SEMIRING:
        raise InputError("the Armendariz check needs a semiring")
    name = "armendariz"
    for f, g in zero_product_pairs(S, degree, samples=samples, seed=seed):
        cross = S.mul[np.asarray(f)[:, None], np.asarray(g)[None, :]]
        w = _first(cross != 0)
        if w is not None:
            return _fails(name, (*f, *g, *w), bound=degree)
    return _holds(name, bound=degree, detail=f"holds up to degree {degree}")


# ------------------------------------------------------------------ registry

PropertyFn = Callable[..., PropertyReport]

PROPERTIES: dict[str, PropertyFn] = {
    "reversible": is_reversible,
    "eversible": is_eversible,
    "entire": is_entire,
    "prime": is_prime,
    "semiprime": is_semiprime,
    "nilpotent_free": is_nilpotent_free,
    "symmetric": is_symmetric,
    "commutative": is_commutative,
    "zerosumfree": is_zerosumfree,
}


def _poly_reversible(S, degree: int = 2, **_):
    from .constructions.polynomials import poly_reversible_bounded
    return poly_reversible_bounded(S, degree)


def _series_reversible(S, degree: int = 2, **_):
    from .constructions.polynomials import series_reversible_truncated
    return series_reversible_truncated(S, degree + 1)


def _laurent_reversible(S, degree: int = 2, **_):
    from .constructions.polynomials import laurent_zero_product_check
    return laurent_zero_product_check(S, degree)


def _connected(S, **_):
    from .zdgraph import connected_report
    return connected_report(S)


def _diameter_le_3(S, **_):
    from .zdgraph import diameter_report
    return diameter_report(S, 3)


EXTRA_PROPERTIES: dict[str, PropertyFn] = {
    "armendariz": lambda S, degree=2, **_: is_armendariz_bounded(S, degree),
    "cohn": lambda S, **_: verify_cohn(S),
    "eversible_condition2": lambda S, **_: eversible_condition2(S, "restricted"),
    "eversible_condition2_literal": lambda S, **_: eversible_condition2(S, "literal"),
    "poly_reversible": _poly_reversible,
    "series_reversible": _series_reversible,
    "laurent_reversible": _laurent_reversible,
    "connected": _connected,
    "diameter_le_3": _diameter_le_3,
}

PROPERTY_NAMES = tuple(PROPERTIES) + tuple(EXTRA_PROPERTIES)


def kind_has_one(S) -> bool:
    return getattr(S, "kind", None) in KINDS_WITH_ONE


def check(S, name: str, *, bound: int | None = None, degree: int = 2) -> PropertyReport:
    """Evaluate the property called ``name`` on ``S``."""
    if name in PROPERTIES:
        return PROPERTIES[name](S, bound=bound)
    if name in EXTRA_PROPERTIES:
        if _is_rule(S):
            return _unknown(name, bound, "not available on the rule backend")
        return EXTRA_PROPERTIES[name](S, degree=degree)
    raise InputError(f"unknown property {name!r}; known: {', '.join(PROPERTY_NAMES)}")


def recheck_witness(S: FiniteStructure, report: PropertyReport) -> bool:
    """True iff the failing witness really violates the property's formula."""
    if not report.fails:
        raise InputError("only failing reports carry witnesses")
    w = report.witness
    m = lambda x, y: int(S.mul[x, y])  # noqa: E731
    n = S.order
    name = report.property
    if name == "reversible":
        s, t = w
        return m(s, t) == 0 and m(t, s) != 0
    if name == "eversible":
        x, y = w
        left, right = _left_right_masks(S)
        if y == 0:
            return False
        return (m(x, y) == 0 and not right[x]) or (m(y, x) == 0 and not left[x])
    if name == "entire":
        a, b = w
        return a != 0 and b != 0 and m(a, b) == 0
    if name == "prime":
        a, b = w
        return a != 0 and b != 0 and all(m(m(a, s), b) == 0 for s in range(n))
    if name == "semiprime":
        (a,) = w
        return a != 0 and all(m(m(a, s), a) == 0 for s in range(n))
    if name == "nilpotent_free":
        (s,) = w
        return s != 0 and m(s, s) == 0
    if name == "symmetric":
        r, s, t = w
        return m(m(r, s), t) == 0 and m(m(s, r), t) != 0
    if name == "commutative":
        a, b = w
        return m(a, b) != m(b, a)
    if name == "zerosumfree":
        s, t = w
        return (s, t) != (0, 0) and int(S.add[s, t]) == 0
    if name.startswith("eversible_condition2"):
        a, b = w
        if m(a, b) != 0:
            return False
        for c in range(1, n):
            if m(b, c) == 0 and m(c, a) == 0:
                return False
            if m(b, c) != 0 and m(c, a) != 0 and m(m(b, c), a) == 0:
                return False
        return True
    if name == "armendariz":
        k = (len(w) - 2) // 2
        f, g, (i, j) = w[:k], w[k:2 * k], w[2 * k:]
        from .constructions.polynomials import poly_mul
        return all(c == 0 for c in poly_mul(S, f, g)) and m(f[i], g[j]) != 0
    raise InputError(f"no witness re-check for {name!r}")
