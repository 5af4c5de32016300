import itertools

import numpy as np
import pytest

from zdlab import properties as P
from zdlab.builtins import boolean, residues
from zdlab.constructions import (
    Bisemimodule,
    ClosureFailure,
    direct_product,
    endomorphism_pn_semiring,
    endomorphisms,
    expectation_semiring,
    fraction_embedding,
    localize,
    matrix,
    matrix_semiring,
    poly_mul,
    power_series_truncated,
    regular_bisemimodule,
    sigma_expectation,
    triangular_semiring,
    valid_denominator_sets,
    validate_bisemimodule,
    zero_product_pairs,
)
from zdlab.errors import InputError
from zdlab.search import corpus
from zdlab.search.enumeration import commutative_monoid_tables
from zdlab.structures import PN_RIGHT, SEMIGROUP, SEMIRING, is_isomorphic, validate

from . import oracles

B = boolean()
Z4 = residues(4)


# --------------------------------------------------------------- products


def test_b_times_b():
    S = direct_product([B, B])
    assert S.order == 4 and validate(S).valid and P.is_reversible(S).holds


def test_singleton_product_is_isomorphic():
    assert is_isomorphic(direct_product([Z4]), Z4)


def test_product_of_reversible_semigroups_is_reversible():
    rev = [S for S in corpus(SEMIGROUP, 3) if P.is_reversible(S).holds]
    for S, T in itertools.product(rev[:6], repeat=2):
        assert P.is_reversible(direct_product([S, T])).holds


def test_product_table_matches_componentwise_oracle():
    S = direct_product([B, Z4])
    for x, y in itertools.product(range(S.order), repeat=2):
        (a, b), (c, d) = S.labels[x], S.labels[y]
        assert S.labels[S.mul[x, y]] == (B.mul[a, c], Z4.mul[b, d])
        assert S.labels[S.add[x, y]] == (B.add[a, c], Z4.add[b, d])


# ---------------------------------------------------------------- matrices


def test_matrix_semiring_never_reversible_order3():
    for S in corpus(SEMIRING, 3):
        M = matrix_semiring(S, 2)
        assert validate(M).valid
        assert P.is_reversible(M).fails


def test_identity_matrix_is_neutral():
    M = matrix_semiring(B, 2)
    I = M.index(matrix([[1, 0], [0, 1]]))
    assert I == M.one
    assert (M.mul[I, :] == np.arange(M.order)).all() and (M.mul[:, I] == np.arange(M.order)).all()


def test_matrix_product_oracle():
    M = matrix_semiring(Z4, 2)
    for x, y in [(5, 77), (200, 13), (255, 255)]:
        a, b = np.array(M.labels[x]).reshape(2, 2), np.array(M.labels[y]).reshape(2, 2)
        assert M.labels[M.mul[x, y]] == tuple((a @ b % 4).ravel())


# ------------------------------------------------------------ bisemimodules


def test_regular_bisemimodule_valid():
    assert validate_bisemimodule(regular_bisemimodule(B)).valid


def test_broken_bisemimodule_names_axiom():
    L = B.mul.copy()
    L[1, 1] = 0
    M = Bisemimodule(B, B, B.add, L, B.mul)
    report = validate_bisemimodule(M)
    assert not report.valid
    assert report.failures[0][0] == "left_unit"
    with pytest.raises(InputError, match="left_unit"):
        triangular_semiring(B, M, B)


def test_triangular_over_b_is_order8_semiring():
    T = triangular_semiring(B, regular_bisemimodule(B), B)
    assert T.order == 8 and validate(T).valid
    x, y = T.index((1, 1, 0)), T.index((0, 1, 1))
    assert T.labels[T.mul[x, y]] == (0, 1, 0)


# ---------------------------------------------------------- expectations


def test_expectation_reversible_for_nilpotent_free_order3():
    for S in corpus(SEMIRING, 3):
        if P.is_nilpotent_free(S).holds:
            assert P.is_reversible(expectation_semiring(S)).holds


def test_expectation_over_z4_is_recorded():
    E = expectation_semiring(Z4)
    assert validate(E).valid and E.order == 16
    assert P.is_reversible(E).verdict.value in ("holds", "fails")


def test_sigma_identity_is_expectation():
    for S in corpus(SEMIRING, 3):
        if S.is_commutative():
            assert sigma_expectation(S, list(range(S.order))) == expectation_semiring(S)


def test_sigma_must_be_endomorphism():
    with pytest.raises(InputError):
        sigma_expectation(Z4, [0, 2, 1, 3])


def test_sigma_injective_over_entire_commutative_reversible():
    for S in corpus(SEMIRING, 3):
        if S.is_commutative() and P.is_entire(S).holds:
            for f in endomorphisms(S):
                if len(set(f)) == len(f):
                    assert P.is_reversible(sigma_expectation(S, f)).holds


def test_swap_sigma_expectation_over_b():
    S = direct_product([B, B])
    swap = [S.index((b, a)) for a, b in S.labels]
    assert tuple(swap) in endomorphisms(S)
    T = sigma_expectation(S, swap)
    assert T.order == 16
    assert P.is_eversible(T).holds
    assert P.eversible_condition2(T).holds
    assert P.is_reversible(T).fails


# ---------------------------------------------------------- endomorphisms


def test_endomorphisms_of_b():
    assert endomorphisms(B) == [(0, 1)]


def test_endomorphisms_match_oracle():
    for S in corpus(SEMIRING, 3):
        n = S.order
        naive = [f for f in itertools.product(range(n), repeat=n)
                 if f[0] == 0 and f[1] == 1
                 and all(f[S.mul[x, y]] == S.mul[f[x], f[y]] and f[S.add[x, y]] == S.add[f[x], f[y]]
                         for x in range(n) for y in range(n))]
        assert sorted(endomorphisms(S)) == naive


def test_e0_of_z2():
    E = endomorphism_pn_semiring([[0, 1], [1, 0]])
    assert not isinstance(E, ClosureFailure)
    assert E.kind == PN_RIGHT and E.order == 2 and validate(E).valid


def test_e0_closed_for_commutative_monoids_order4():
    for n in (2, 3, 4):
        for A in commutative_monoid_tables(n):
            E = endomorphism_pn_semiring(A)
            assert not isinstance(E, ClosureFailure), A.tolist()
            assert validate(E).valid


def test_e0_closure_failure_needs_more_than_commutativity():
    A = [[0, 1, 2], [1, 0, 0], [2, 0, 1]]  # commutative, 0 neutral, not associative
    assert oracles.commutative(A) and not oracles.assoc(A)
    r = endomorphism_pn_semiring(A)
    assert isinstance(r, ClosureFailure)
    h = [A[a][b] for a, b in zip(r.f, r.g)]
    assert h[A[r.x][r.y]] != A[h[r.x]][h[r.y]]


# ------------------------------------------------------------- polynomials


def test_poly_zero_products_over_b_degree1():
    for f, g in zero_product_pairs(B, 1):
        assert not any(f) or not any(g)


def test_poly_mul_oracle():
    f, g = (1, 2, 3), (3, 1)
    naive = [0, 0, 0, 0]
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            naive[i + j] = (naive[i + j] + a * b) % 4
    assert list(poly_mul(Z4, f, g)) == naive


def test_series_k1_is_isomorphic():
    assert is_isomorphic(power_series_truncated(Z4, 1), Z4)


def test_series_k3_valid():
    S = power_series_truncated(B, 3)
    assert S.order == 8 and validate(S).valid


# ------------------------------------------------------------- localization


def test_localize_at_one_is_identity():
    assert is_isomorphic(localize(Z4, [1]), Z4)


def test_localize_z4_at_units():
    L = localize(Z4, [1, 3])
    assert L.order == 4 and is_isomorphic(L, Z4)
    emb = fraction_embedding(Z4, L)
    assert len(set(emb)) == 4


def test_localize_rejects_zero_divisor_denominator():
    with pytest.raises(InputError):
        localize(Z4, [1, 2])


def test_valid_denominators_of_z4():
    assert set(map(frozenset, valid_denominator_sets(Z4))) == {frozenset({1}), frozenset({1, 3})}
