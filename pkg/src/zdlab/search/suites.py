"""Theorem-verification suites: implications evaluated over corpora of small structures.

A suite is data: a corpus recipe plus a list of :class:`Claim` rows.  A claim
reads "for every corpus member satisfying ``hypotheses``, every structure
produced by ``construction`` satisfies ``conclusion``" — or, with
``same_as``, "the conclusion's verdict on the derived structure equals the
verdict of ``same_as`` on the base structure".  Literals are property names,
optionally prefixed by ``not ``.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .. import properties as P
from ..constructions import (
    ClosureFailure,
    direct_product,
    embedding_violation,
    endomorphism_pn_semiring,
    endomorphisms,
    expectation_semiring,
    is_injective,
    localize,
    matrix_semiring,
    sigma_expectation,
    valid_denominator_sets,
)
from ..errors import InputError
from ..io import structure_to_json
from ..properties import PropertyReport, Verdict
from ..structures import (
    MONOID,
    PN_DISTRIBUTIVE,
    PN_LEFT,
    PN_RIGHT,
    SEMIGROUP,
    SEMIRING,
    FiniteStructure,
    validate,
)
from . import triangular as tri
from .enumeration import commutative_monoid_tables, corpus, unital_magma_tables

ALL_KINDS = (SEMIGROUP, MONOID, PN_RIGHT, PN_LEFT, PN_DISTRIBUTIVE, SEMIRING)


# ------------------------------------------------------------ constructions


@dataclass(frozen=True)
class Derived:
    tag: str
    structure: FiniteStructure
    base: FiniteStructure


def _itself(S):
    return [Derived("S", S, S)]


def _matrix2(S):
    return [Derived("M2(S)", matrix_semiring(S, 2), S)]


def _expectation(S):
    return [Derived("S(+)S", expectation_semiring(S), S)]


def _sigma_injective(S):
    return [Derived(f"(S(+)S)_sigma sigma={list(f)}", sigma_expectation(S, f), S)
            for f in endomorphisms(S) if is_injective(f)]


def _swap_double(E):
    S = direct_product([E, E])
    swap = [S.index((b, a)) for a, b in S.labels]
    return [Derived("(E+E (+) E+E)_swap", sigma_expectation(S, swap), E)]


def _localizations(S):
    return [Derived(f"O^-1 S O={sorted(O)}", localize(S, O), S) for O in valid_denominator_sets(S)]


def _square(S):
    return [Derived("S x S", direct_product([S, S]), S)]


CONSTRUCTIONS: dict[str, Callable[[FiniteStructure], list[Derived]]] = {
    "matrix2": _matrix2,
    "expectation": _expectation,
    "sigma_injective": _sigma_injective,
    "swap_double": _swap_double,
    "localizations": _localizations,
    "square": _square,
}


# ----------------------------------------------------- suite-only predicates


def _one_plus_one_nonzero(S, base):
    return P._holds("one_plus_one_nonzero") if S.add[1, 1] != 0 else P._fails("one_plus_one_nonzero", (1, 1))


def _valid(S, base):
    report = validate(S)
    if report.valid:
        return P._holds("valid")
    axiom, w = report.failures[0]
    return P._fails("valid", w, detail=axiom)


def _embedding(S, base):
    why = embedding_violation(base, S)
    return P._holds("fraction_embedding") if why is None else P._fails("fraction_embedding", (), detail=why)


def _nilpotent_listing(S, base):
    """nilpotent_elements is {(0, 1)} exactly when nilpotent-free."""
    only_zero = P.nilpotent_elements(S) == [(0, 1)]
    if only_zero == P.is_nilpotent_free(S).holds:
        return P._holds("nilpotent_listing_agrees")
    return P._fails("nilpotent_listing_agrees", (), detail=str(P.nilpotent_elements(S)))


def _cohn_generated(S, base):
    """For reversible S: the two-sided ideal generated by each nilpotent is nil."""
    if not P.is_reversible(S).holds:
        return P._holds("cohn_generated", detail="vacuous: not reversible")
    nil = P.nilpotent_mask(S)
    for a in np.flatnonzero(nil).tolist():
        closure = P.ideal_closure(S, {a}, "two_sided").closure
        bad = [r for r in sorted(closure) if not nil[r]]
        if bad:
            return P._fails("cohn_generated", (a, bad[0]))
    return P._holds("cohn_generated")


SUITE_PREDICATES = {
    "one_plus_one_nonzero": _one_plus_one_nonzero,
    "valid": _valid,
    "fraction_embedding": _embedding,
    "nilpotent_listing_agrees": _nilpotent_listing,
    "cohn_generated": _cohn_generated,
}


def evaluate(literal: str, S: FiniteStructure, base: FiniteStructure, degree: int = 2) -> tuple[bool, PropertyReport]:
    """(truth of the literal, underlying report)."""
    negate = literal.startswith("not ")
    name = literal[4:] if negate else literal
    if name in SUITE_PREDICATES:
        report = SUITE_PREDICATES[name](S, base)
    else:
        report = P.check(S, name, degree=degree)
    if report.verdict == Verdict.UNKNOWN:
        raise InputError(f"{name} is undecided on a finite structure")
    return report.holds != negate, report


# ------------------------------------------------------------------- claims


@dataclass(frozen=True)
class Claim:
    name: str
    conclusion: str
    hypotheses: tuple[str, ...] = ()
    construction: str | None = None
    same_as: str | None = None
    kinds: tuple[str, ...] = ALL_KINDS


@dataclass(frozen=True)
class CorpusPart:
    kind: str
    max_order: int
    min_order: int = 2
    hypotheses: tuple[str, ...] = ()


@dataclass(frozen=True)
class Suite:
    name: str
    corpus: tuple[CorpusPart, ...]
    claims: tuple[Claim, ...]
    notes: tuple[tuple[str, str], ...] = ()  # (label, literal): count of corpus members where it holds


def _parts(kinds, order, **kw):
    return tuple(CorpusPart(k, order, **kw) for k in kinds)


SUITES: dict[str, Suite] = {}


def _register(suite: Suite):
    SUITES[suite.name] = suite


_register(Suite("matrix-nonreversible", _parts([SEMIRING], 3), (
    Claim("M2(S) is not reversible", "not reversible", construction="matrix2"),
)))

_register(Suite("reversible-equivalences", _parts([SEMIGROUP, MONOID], 4), (
    Claim("entire => prime", "prime", ("entire",)),
    Claim("entire => reversible", "reversible", ("entire",)),
    Claim("prime and reversible => entire", "entire", ("prime", "reversible")),
    Claim("nilpotent-free => semiprime", "semiprime", ("nilpotent_free",), kinds=(MONOID,)),
    Claim("nilpotent-free => reversible", "reversible", ("nilpotent_free",), kinds=(MONOID,)),
    Claim("semiprime and reversible => nilpotent-free", "nilpotent_free", ("semiprime", "reversible"),
          kinds=(MONOID,)),
    Claim("reversible => eversible", "eversible", ("reversible",)),
    Claim("nilpotent listing agrees with nilpotent-free", "nilpotent_listing_agrees"),
)))

_register(Suite("symmetric-chain", _parts([SEMIGROUP, MONOID], 4), (
    Claim("nilpotent-free => symmetric", "symmetric", ("nilpotent_free",)),
    Claim("symmetric => reversible", "reversible", ("symmetric",), kinds=(MONOID,)),
)))

_register(Suite("cohn", _parts(ALL_KINDS, 4), (
    Claim("reversible => nil right ideals are two-sided nil ideals", "cohn", ("reversible",)),
), notes=(("two-sided ideal generated by a nilpotent is nil (reversible)", "cohn_generated"),)))

_register(Suite("eversible-criterion", _parts([PN_DISTRIBUTIVE], 3), (
    Claim("eversible => condition (2)", "eversible_condition2", ("eversible",)),
    Claim("condition (2) => eversible", "eversible", ("eversible_condition2",)),
), notes=(("eversible", "eversible"),
          ("restricted condition (2)", "eversible_condition2"),
          ("literal condition (2)", "eversible_condition2_literal"))))

_register(Suite("armendariz", _parts([SEMIRING], 3), (
    Claim("zerosumfree => Armendariz (bounded degree)", "armendariz", ("zerosumfree",)),
)))

_register(Suite("poly-reversible", _parts([SEMIRING], 3), (
    Claim("Armendariz and reversible => S[X] reversible", "poly_reversible", ("armendariz", "reversible")),
    Claim("S[X] reversible => reversible", "reversible", ("poly_reversible",)),
    Claim("zerosumfree and reversible => S[X] reversible", "poly_reversible", ("zerosumfree", "reversible")),
    Claim("zerosumfree and reversible => S[[X]] reversible", "series_reversible", ("zerosumfree", "reversible")),
    Claim("zerosumfree and reversible => S[X;X^-1] reversible", "laurent_reversible",
          ("zerosumfree", "reversible")),
    Claim("zerosumfree => Laurent verdict equals polynomial verdict", "laurent_reversible", ("zerosumfree",),
          same_as="poly_reversible"),
)))

_register(Suite("expectation", _parts([SEMIRING], 3), (
    Claim("nilpotent-free => S(+)S reversible", "reversible", ("nilpotent_free",), construction="expectation"),
    Claim("commutative entire, injective sigma => (S(+)S)_sigma reversible", "reversible",
          ("commutative", "entire"), construction="sigma_injective"),
    Claim("commutative entire E => (E+E (+) E+E)_swap eversible", "eversible", ("commutative", "entire"),
          construction="swap_double"),
    Claim("commutative entire E, 1+1 != 0 => (E+E (+) E+E)_swap not reversible", "not reversible",
          ("commutative", "entire", "one_plus_one_nonzero"), construction="swap_double"),
)))

_register(Suite("localization", _parts([SEMIRING], 4, hypotheses=("commutative",)), (
    Claim("O^-1 S is a semiring", "valid", construction="localizations"),
    Claim("s -> 1^-1 s is an injective homomorphism", "fraction_embedding", construction="localizations"),
    Claim("O^-1 S reversible iff S reversible", "reversible", construction="localizations", same_as="reversible"),
    Claim("O^-1 S eversible iff S eversible", "eversible", construction="localizations", same_as="eversible"),
)))

_register(Suite("laurent", _parts([SEMIRING], 3), (
    Claim("S[X;X^-1] bounded verdict equals S[X] bounded verdict", "laurent_reversible",
          same_as="poly_reversible"),
)))

_register(Suite("graph", _parts(ALL_KINDS, 4), (
    Claim("zero-divisor graph connected iff eversible", "connected", same_as="eversible"),
    Claim("connected => diameter at most 3", "diameter_le_3", ("connected",)),
)))

_register(Suite("products", _parts([SEMIGROUP, SEMIRING], 3), (
    Claim("S x S reversible iff S reversible", "reversible", construction="square", same_as="reversible"),
)))


# -------------------------------------------------------------- evaluation


def _member_ok(part: CorpusPart, S: FiniteStructure) -> bool:
    return all(evaluate(h, S, S)[0] for h in part.hypotheses)


def build_corpus(suite: Suite, order: int | None = None) -> list[FiniteStructure]:
    out = []
    for part in suite.corpus:
        top = part.max_order if order is None else order
        out.extend(S for S in corpus(part.kind, top, part.min_order) if _member_ok(part, S))
    return out


def _check_member(args) -> tuple[list[dict], dict]:
    suite_name, S, degree = args
    suite = SUITES[suite_name]
    violations, counts = [], {}
    for claim in suite.claims:
        if S.kind not in claim.kinds:
            continue
        if not all(evaluate(h, S, S, degree)[0] for h in claim.hypotheses):
            continue
        counts[claim.name] = counts.get(claim.name, 0) + 1
        derived = CONSTRUCTIONS[claim.construction](S) if claim.construction else _itself(S)
        for D in derived:
            ok, report = evaluate(claim.conclusion, D.structure, S, degree)
            detail = report.detail
            if claim.same_as is not None:
                base_ok, base_report = evaluate(claim.same_as, S, S, degree)
                if ok == base_ok:
                    continue
                witness = report.witness if report.fails else base_report.witness
                detail = f"{claim.conclusion}={ok} on {D.tag} but {claim.same_as}={base_ok} on S"
            elif ok:
                continue
            else:
                witness = report.witness if report.fails else None
                if claim.construction:
                    detail = f"on {D.tag}" + (f": {detail}" if detail else "")
            violations.append({"structure": structure_to_json(S), "claim": claim.name,
                               "witness": None if witness is None else list(witness),
                               "detail": detail})
            break
    notes = {label: int(evaluate(lit, S, S, degree)[0]) for label, lit in suite.notes}
    return violations, {"claims": counts, "notes": notes}


@dataclass
class SuiteReport:
    suite: str
    structures_checked: int
    violations: list[dict]
    notes: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        """Deterministic payload; ``elapsed`` is deliberately left out."""
        return {"suite": self.suite, "structures_checked": self.structures_checked,
                "violations": self.violations, "notes": self.notes}


def _pmap(fn, items: Sequence, jobs: int):
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))
    return [fn(x) for x in items]


def run_suite(name: str, structures: Iterable[FiniteStructure] | None = None, *, order: int | None = None,
              jobs: int = 1, degree: int = 2) -> SuiteReport:
    """Evaluate suite ``name`` over ``structures`` (default: its registered corpus)."""
    start = time.perf_counter()
    if name in SPECIAL_SUITES:
        if structures is not None:
            raise InputError(f"suite {name} builds its own corpus; use --order instead of --corpus")
        report = SPECIAL_SUITES[name](order=order, jobs=jobs)
        report.elapsed = time.perf_counter() - start
        return report
    if name not in SUITES:
        raise InputError(f"unknown suite {name!r}; known: {', '.join(suite_names())}")
    suite = SUITES[name]
    members = build_corpus(suite, order) if structures is None else list(structures)
    kinds = {p.kind for p in suite.corpus}
    for S in members:
        if S.kind not in kinds:
            raise InputError(f"suite {name} does not take {S.kind} structures")
    results = _pmap(_check_member, [(name, S, degree) for S in members], jobs)
    violations = [v for vs, _ in results for v in vs]
    claim_counts = {c.name: 0 for c in suite.claims}
    note_counts = {label: 0 for label, _ in suite.notes}
    for _, tally in results:
        for k, v in tally["claims"].items():
            claim_counts[k] += v
        for k, v in tally["notes"].items():
            note_counts[k] += v
    notes = {"hypothesis_holds": claim_counts}
    if suite.notes:
        notes["property_counts"] = note_counts
    if name == "eversible-criterion":
        notes["literal_agreement"] = _literal_agreement(members)
    return SuiteReport(name, len(members), violations, notes, time.perf_counter() - start)


def _literal_agreement(members) -> dict:
    agree = sum(P.eversible_condition2(S, "literal").holds == P.is_eversible(S).holds for S in members)
    return {"agree": agree, "structures": len(members),
            "rate": round(agree / len(members), 6) if members else None}


# ----------------------------------------------------------- special suites


def _triangular_case(args) -> tuple[list[dict], dict]:
    M, conditions = args
    cmp = tri.compare_triangular_characterization(M.S, M, M.T)
    case_json = {"S": structure_to_json(M.S), "T": structure_to_json(M.T), "M": M.to_json()}
    violations = []
    sides = ("left", "right")
    labels = {"left": "left zero-divisor", "right": "right zero-divisor"}
    for side in sides:
        bad = cmp.mismatches(conditions, side, "2=>1", "all_m")
        if bad:
            X = cmp.elements[bad[0]]
            fails = [f for f in cmp.proof_failures[conditions, side] if f[0] == X]
            detail = f"{len(bad)} element(s) meet the {conditions} conditions but are not a {labels[side]}"
            if fails:
                _, case, Y, prod = fails[0]
                detail += f"; case ({'abc'[case]}) witness {list(Y)} gives product {list(prod)}"
            violations.append({"structure": case_json, "claim": f"{conditions} {side} condition (2) => (1)",
                               "witness": list(X), "detail": detail})
    hyp, tri_ev, comps = tri.triangular_eversible_claim(M)
    if conditions == "printed" and hyp and tri_ev and not comps:
        violations.append({"structure": case_json, "claim": "trivial Z_S(M), Z_T(M) and eversible => S, T eversible",
                           "witness": None, "detail": "S or T not eversible"})
    return violations, {"tallies": cmp.tallies(), "gexp3_hypothesis": int(hyp and tri_ev)}


def _run_triangular(conditions: str, order: int | None, jobs: int) -> SuiteReport:
    cases = tri.triangular_corpus(order or 3)
    results = _pmap(_triangular_case, [(M, conditions) for M in cases], jobs)
    violations = [v for vs, _ in results for v in vs]
    table: dict[str, dict] = {}
    for _, t in results:
        for key, row in t["tallies"].items():
            if not key.startswith(conditions):
                continue
            agg = table.setdefault(key, {"cases": 0, "elements": 0, "2=>1_mismatches": 0, "1=>2_mismatches": 0,
                                         "cases_with_2=>1_mismatch": 0, "cases_with_1=>2_mismatch": 0})
            agg["cases"] += 1
            agg["elements"] += row["elements"]
            for d in ("2=>1", "1=>2"):
                agg[f"{d}_mismatches"] += row[f"{d}_mismatches"]
                agg[f"cases_with_{d}_mismatch"] += row[f"{d}_mismatches"] > 0
    notes = {"agreement": table}
    if conditions == "printed":
        notes["gexp3_hypothesis_cases"] = sum(t["gexp3_hypothesis"] for _, t in results)
    return SuiteReport(f"triangular{'' if conditions == 'printed' else '-corrected'}", len(cases), violations, notes)


def _endomorphism_case(args) -> tuple[list[dict], dict]:
    A = np.array(args)
    result = endomorphism_pn_semiring(A)
    commutative = bool((A == A.T).all())
    if isinstance(result, ClosureFailure):
        v = {"structure": {"magma_add": A.tolist()}, "claim": "E_0(M) is closed under pointwise +",
             "witness": list(result.f) + list(result.g) + [result.x, result.y],
             "detail": "commutative magma" if commutative else "noncommutative magma"}
        return [v], {"commutative": commutative, "closed": False}
    return [], {"commutative": commutative, "closed": True}


def _run_endomorphism(order: int | None, jobs: int) -> SuiteReport:
    tables = [A.tolist() for n in range(2, (order or 3) + 1) for A in unital_magma_tables(n)]
    results = _pmap(_endomorphism_case, tables, jobs)
    violations = [v for vs, _ in results for v in vs]
    counts = {"closed": 0, "not_closed": 0, "commutative_not_closed": 0}
    for _, t in results:
        counts["closed" if t["closed"] else "not_closed"] += 1
        counts["commutative_not_closed"] += (not t["closed"]) and t["commutative"]
    mon = [A for n in range(2, (order or 3) + 1) for A in commutative_monoid_tables(n)]
    counts["commutative_monoids"] = len(mon)
    counts["commutative_monoids_not_closed"] = sum(
        isinstance(endomorphism_pn_semiring(A), ClosureFailure) for A in mon)
    return SuiteReport("endomorphism-closure", len(tables), violations, {"counts": counts})


SPECIAL_SUITES = {
    "triangular": lambda order=None, jobs=1: _run_triangular("printed", order, jobs),
    "triangular-corrected": lambda order=None, jobs=1: _run_triangular("corrected", order, jobs),
    "endomorphism-closure": lambda order=None, jobs=1: _run_endomorphism(order, jobs),
}


def suite_names() -> list[str]:
    return list(SUITES) + list(SPECIAL_SUITES)
