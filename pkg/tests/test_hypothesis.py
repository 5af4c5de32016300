"""Property-based tests over random tables and relabelings."""

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from zdlab import properties as P
from zdlab.constructions import poly_mul
from zdlab.io import structure_from_json, structure_to_json
from zdlab.search import corpus, random_structure
from zdlab.structures import (
    KINDS,
    SEMIGROUP,
    SEMIRING,
    canonical_form,
    relabel,
    validate_semigroup_with_zero,
)
from zdlab.zdgraph import build_graph, connectivity

from . import oracles

SETTINGS = settings(max_examples=60, deadline=None)


@st.composite
def zero_tables(draw, max_order=4):
    n = draw(st.integers(2, max_order))
    t = [[0] * n for _ in range(n)]
    for i in range(1, n):
        for j in range(1, n):
            t[i][j] = draw(st.integers(0, n - 1))
    return t


@st.composite
def structures(draw, kinds=KINDS):
    kind = draw(st.sampled_from(kinds))
    return random_structure(kind, draw(st.integers(2, 4)), seed=draw(st.integers(0, 10_000)))


@st.composite
def relabelings(draw, S):
    fixed = 2 if S.one is not None else 1
    rest = draw(st.permutations(list(range(fixed, S.order))))
    return list(range(fixed)) + list(rest)


@SETTINGS
@given(zero_tables())
def test_associativity_validator_matches_oracle(t):
    assert validate_semigroup_with_zero(t).valid == oracles.assoc(t)


@SETTINGS
@given(structures(), st.data())
def test_properties_and_canonical_form_are_isomorphism_invariant(S, data):
    p = data.draw(relabelings(S))
    T = relabel(S, p)
    assert canonical_form(S) == canonical_form(T)
    for name in P.PROPERTIES:
        if name == "zerosumfree" and S.add is None:
            continue
        assert P.check(S, name).holds == P.check(T, name).holds, name
    assert sorted(k for _, k in P.nilpotent_elements(S)) == sorted(k for _, k in P.nilpotent_elements(T))


@SETTINGS
@given(structures())
def test_reversible_implies_eversible(S):
    if P.is_reversible(S).holds:
        assert P.is_eversible(S).holds


@SETTINGS
@given(structures())
def test_failing_witnesses_recheck(S):
    for name in ("reversible", "eversible", "entire", "prime", "semiprime", "nilpotent_free", "symmetric"):
        r = P.check(S, name)
        if r.fails:
            assert P.recheck_witness(S, r)


@SETTINGS
@given(structures())
def test_json_round_trip(S):
    assert structure_from_json(structure_to_json(S)) == S


@SETTINGS
@given(structures())
def test_strong_connectivity_tracks_eversibility(S):
    assert connectivity(build_graph(S), "strong") == P.is_eversible(S).holds


@SETTINGS
@given(st.sampled_from([S for S in corpus(SEMIRING, 3)]), st.data())
def test_polynomial_product_is_associative(S, data):
    coeffs = st.lists(st.integers(0, S.order - 1), min_size=1, max_size=3)
    f, g, h = data.draw(coeffs), data.draw(coeffs), data.draw(coeffs)
    assert poly_mul(S, poly_mul(S, f, g), h) == poly_mul(S, f, poly_mul(S, g, h))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from([5, 7, 12, 16]))
def test_random_semigroups_are_valid(seed, n):
    S = random_structure(SEMIGROUP, n, seed=seed)
    assert oracles.assoc(S.mul.tolist()) and oracles.absorbing(S.mul.tolist())
    assert np.array_equal(S.mul, random_structure(SEMIGROUP, n, seed=seed).mul)
