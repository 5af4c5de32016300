import itertools

import numpy as np

from zdlab import properties as P
from zdlab.builtins import boolean, residues
from zdlab.constructions import regular_bisemimodule, triangular_semiring, validate_bisemimodule
from zdlab.search import corpus
from zdlab.search.triangular import (
    bisemimodules,
    compare_triangular_characterization,
    module_additions,
    triangular_corpus,
    triangular_eversible_claim,
    zero_product_matrix,
)
from zdlab.structures import SEMIRING

B = boolean()
BBB = regular_bisemimodule(B)


def test_zero_product_matrix_matches_constructed_semiring():
    for M in [BBB, regular_bisemimodule(residues(3))] + triangular_corpus(2)[:10]:
        T = triangular_semiring(M.S, M, M.T)
        Z = zero_product_matrix(M)
        # the matrix indexes (s, m, t) lexicographically; the semiring puts zero and one first
        elems = list(itertools.product(range(M.S.order), range(M.module_order), range(M.T.order)))
        pos = np.array([T.index(X) for X in elems])
        assert (Z == (T.mul[np.ix_(pos, pos)] == 0)).all()


def test_bbb_table_covers_eight_elements():
    cmp = compare_triangular_characterization(B, BBB, B)
    assert len(cmp.elements) == 8
    data = cmp.to_json()
    assert len(data["elements"]) == 8
    assert data["tallies"]["printed/left/all_m"]["elements"] == 8
    assert data["tallies"]["printed/left/nonzero_m"]["elements"] == 4


def test_zero_element_in_both():
    cmp = compare_triangular_characterization(B, BBB, B)
    i = cmp.elements.index((0, 0, 0))
    assert cmp.oracle["left"][i] and cmp.oracle["right"][i]


def test_oracle_is_brute_force_membership():
    T = triangular_semiring(B, BBB, B)
    cmp = compare_triangular_characterization(B, BBB, B)
    z = P.zero_divisor_sets(T)
    for i, X in enumerate(cmp.elements):
        assert cmp.oracle["left"][i] == (T.index(X) in z.left)
        assert cmp.oracle["right"][i] == (T.index(X) in z.right)


def test_printed_left_two_implies_one_over_bbb():
    cmp = compare_triangular_characterization(B, BBB, B)
    assert cmp.mismatches("printed", "left", "2=>1", "all_m") == []


def test_printed_right_condition_a_counterexample():
    """X = (0, 1, 1) over B: s = 0 lies in Z_r(S) but X is not a right zero-divisor."""
    cmp = compare_triangular_characterization(B, BBB, B)
    i = cmp.elements.index((0, 1, 1))
    assert cmp.cases["printed", "right"][i][0]
    assert not cmp.oracle["right"][i]
    # direct check: Y X = (s' 0, s' 1 + m' 1, t' 1) vanishes only for Y = 0
    for s, m, t in itertools.product(range(2), repeat=3):
        prod = (B.mul[s, 0], B.add[B.mul[s, 1], B.mul[m, 1]], B.mul[t, 1])
        assert (prod == (0, 0, 0)) == ((s, m, t) == (0, 0, 0))
    assert i in cmp.mismatches("printed", "right", "2=>1", "nonzero_m")


def test_corrected_conditions_sufficient_on_small_corpus():
    for M in triangular_corpus(2):
        cmp = compare_triangular_characterization(M.S, M, M.T)
        for side in ("left", "right"):
            assert cmp.mismatches("corrected", side, "2=>1", "all_m") == []
            assert cmp.proof_failures["corrected", side] == []


def test_module_additions_are_commutative_monoids_up_to_iso():
    adds = module_additions(3)
    assert [A.shape[0] for A in adds].count(2) == 2  # Z_2 and the 2-element semilattice
    for A in adds:
        n = A.shape[0]
        assert (A == A.T).all() and (A[0] == np.arange(n)).all()
        assert all(A[A[a, b], c] == A[a, A[b, c]] for a in range(n) for b in range(n) for c in range(n))


def test_bisemimodules_are_valid_and_complete_for_b():
    A = B.add
    found = list(bisemimodules(B, B, A))
    assert all(validate_bisemimodule(M).valid for M in found)
    # the only (B, B)-bisemimodule on the semilattice {0, 1} is B itself
    assert len(found) == 1 and (found[0].left_action == B.mul).all()


def test_third_triangular_claim_on_bbb():
    # Z_S(M) = Z_T(M) = {0}, but the triangular semiring over B is not eversible: the claim is vacuous
    hyp, tri, comps = triangular_eversible_claim(BBB)
    assert hyp and not tri and comps
    T = triangular_semiring(B, BBB, B)
    assert P.is_eversible(T).holds == tri


def test_triangular_corpus_size():
    assert len(triangular_corpus(3)) == 166
    assert all(M.S.kind == M.T.kind == SEMIRING for M in triangular_corpus(3))
    assert len(corpus(SEMIRING, 3)) == 8
