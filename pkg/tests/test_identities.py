import itertools
import json

import pytest

from dysonct.combi import (
    Permutation, Tournament, ZeroOneMatrix, all_compositions,
    all_tournaments, left_justified_from_rows, partial_sums, sort_desc,
)
from dysonct.identities import (
    D_vlambda, c_w, contributing_perms, lemma_sym_check,
    poincare_W, poincare_single_product, reduction_check, rhs_bg_alternating,
    rhs_bg_general, rhs_kadell, rhs_kadell_t, rhs_lxz,
    rhs_qdyson, rhs_sills, rhs_strict, rhs_tournament, solve_column_relation,
    usum_cleared_sides, verify_bg_general,
    verify_equal_collapse, verify_kadell, verify_kadell_t, verify_lxz,
    verify_poincare, verify_prop_kappa, verify_prop_vnu, verify_prop_zero,
    verify_qdyson, verify_sills, verify_strict, verify_tournament, verify_usum,
    verify_usum_k, verify_wtd,
)
from dysonct.mpoly import table_kernel, tkernel
from dysonct.qpoly import IntPoly, qbinom, qmultinom


class TestQDyson:
    def test_small_cases(self):
        assert verify_qdyson((1, 1)).equal
        assert verify_qdyson((2, 1)).equal
        assert verify_qdyson((0, 0, 0)).equal
        assert rhs_qdyson((0, 0)) == IntPoly.const(1)

    def test_three_factor_kernel(self):
        r = verify_qdyson((2, 1))
        assert r.lhs == str(qmultinom((2, 1)))


class TestPoincare:
    def test_cw_identity_permutation(self):
        for a in [(1, 1), (2, 1, 1), (3, 2, 1)]:
            sigma = partial_sums(a)
            expected = IntPoly.const(1)
            for i, s in enumerate(sigma):
                expected = expected * qbinom(s - 1, a[i] - 1)
            assert c_w(a, Permutation.identity(len(a))) == expected

    def test_cw_transposition(self):
        assert c_w((1, 1), Permutation((2, 1))) == IntPoly.const(1)

    def test_cw_substitution_sums_to_qmultinom(self):
        # sum_w c_w(a) q^{sum of a_j over R(w)} telescopes back to q-Dyson
        for a in [(1, 1), (2, 1), (1, 2, 1), (2, 2, 1)]:
            n = len(a)
            total = IntPoly()
            for w in Permutation.all_perms(n):
                shift = sum(a[j - 1] for _, j in w.recording_set())
                total = total + c_w(a, w).shifted(shift)
            assert total == qmultinom(a)

    def test_full_expansion_small(self):
        r = verify_poincare((1, 1))
        assert r.equal
        assert json.loads(r.lhs) == {"1": "1", "t[1,2]": "1"}
        assert verify_poincare((2, 1, 1)).equal

    def test_t_zero_reduces_to_bg(self):
        # substituting t = 0 into the expansion leaves prod qbinom(s_i-1, a_i-1)
        for a in [(1, 1), (2, 1, 2)]:
            table = table_kernel(len(a))
            ct = tkernel(a, table).ct_x().subst_t_zero()
            expected = c_w(a, Permutation.identity(len(a)))
            assert ct.to_intpoly() == expected

    def test_equal_parameter_collapse(self):
        assert verify_equal_collapse(3, 1).equal
        assert verify_equal_collapse(3, 2).equal

    def test_poincare_w_small(self):
        assert poincare_W(1).collapse_t_single() == IntPoly.const(1)
        t2 = poincare_W(2)
        assert str(t2) == "1 + t[1,2]"
        assert poincare_W(3).collapse_t_single() == IntPoly(
            {0: 1, 1: 2, 2: 2, 3: 1})
        assert poincare_single_product(3) == IntPoly({0: 1, 1: 2, 2: 2, 3: 1})

    def test_wtd(self):
        for n in (1, 2, 3, 4):
            assert verify_wtd(n).equal


class TestBressoudGoulden:
    def test_empty_index_set_is_qdyson(self):
        a = (2, 1)
        assert rhs_bg_general(a, set()) == qmultinom(a)
        assert verify_bg_general(a, set()).equal

    def test_full_index_set_rebalances(self):
        for a in [(1, 1), (2, 1), (2, 3, 1)]:
            n = len(a)
            expected = c_w(a, Permutation.identity(n))
            assert rhs_bg_general(a, set(range(1, n + 1))) == expected

    def test_general_cases(self):
        for a in [(2, 1), (1, 2, 1)]:
            n = len(a)
            for size in range(n + 1):
                for I in itertools.combinations(range(1, n + 1), size):
                    assert verify_bg_general(a, set(I)).equal

    def test_alternating_equal_parameters_vanish(self):
        r = rhs_bg_alternating((1, 1))
        assert r.is_zero

    def test_alternating_cases(self):
        for a in [(1, 1), (2, 1), (1, 2), (2, 1, 3)]:
            from dysonct.identities import verify_bg_alternating
            assert verify_bg_alternating(a).equal


class TestTournaments:
    def test_three_cycle_vanishes(self):
        t = Tournament(3, {(1, 2), (2, 3), (3, 1)})
        assert rhs_tournament(t, (1, 1, 1)).is_zero
        assert verify_tournament(t, (1, 1, 1)).equal

    def test_natural_order(self):
        t = Tournament.natural(3)
        a = (2, 1, 1)
        assert rhs_tournament(t, a) == c_w(a, Permutation.identity(3))

    def test_all_n3(self):
        transitive = 0
        for t in all_tournaments(3):
            assert verify_tournament(t, (1, 1, 1)).equal
            if t.is_transitive():
                transitive += 1
        assert transitive == 6


class TestKadell:
    def test_homogeneity_zero(self):
        assert D_vlambda((1, 0), (2,), (1, 1), "qa").is_zero

    def test_zero_multiplicity_kills(self):
        # a_k = 0 and v_k != 0 forces the constant term to vanish
        assert D_vlambda((0, 1), (1,), (1, 0), "qa").is_zero
        assert rhs_kadell((0, 1), (1, 0)).is_zero

    def test_one_variable_reduces_to_hook_content(self):
        for a in (1, 2, 3):
            for m in (1, 2, 3):
                lhs = D_vlambda((m,), (m,), (a,), "qa").to_intpoly()
                assert lhs == qbinom(a + m - 1, m)
                assert rhs_kadell((m,), (a,)) == qbinom(a + m - 1, m)

    def test_spread_out_v_vanishes(self):
        assert rhs_kadell((1, 1), (1, 1)).is_zero
        assert verify_kadell((1, 1), (1, 1)).equal

    def test_grid_n2(self):
        for a in itertools.product((0, 1, 2), repeat=2):
            for m in (1, 2, 3):
                for v in all_compositions(m, 2):
                    assert verify_kadell(v, a).equal, (v, a)

    def test_kadell_t_small(self):
        assert verify_kadell_t(1, 1, (1, 1)).equal
        assert verify_kadell_t(2, 1, (1, 1)).equal
        assert verify_kadell_t(2, 2, (2, 1)).equal

    def test_kadell_t_qa_substitution_recovers_plain(self):
        # t[i,j] -> q^{a_j} in the symbolic closed form gives the plain one
        for a in [(1, 1), (2, 1), (1, 2, 1)]:
            n = len(a)
            powers = {(i, j): a[j - 1] for i in range(1, n)
                      for j in range(i + 1, n + 1)}
            for k in range(1, n + 1):
                for m in (1, 2):
                    v = (0,) * (k - 1) + (m,) + (0,) * (n - k)
                    sym = rhs_kadell_t(k, m, a).subst_t_qpowers(powers)
                    assert sym.to_intpoly() == rhs_kadell(v, a)

    def test_kadell_t_m_zero_rejected(self):
        with pytest.raises(ValueError):
            rhs_kadell_t(1, 0, (1, 1))

    def test_reduction_identity(self):
        for a in [(0, 1, 2), (2, 0, 1), (0, 0, 2)]:
            for m in (1, 2):
                for v in all_compositions(m, 3):
                    assert reduction_check(v, a, m)


class TestStrict:
    def test_identity_permutation(self):
        assert verify_strict((1, 0), (1, 1), Permutation.identity(2)).equal

    def test_longest_element_matches_strict_formula(self):
        lam, a = (2, 0), (2, 1)
        w0 = Permutation.longest(2)
        r = verify_strict(lam, a, w0)
        assert r.equal
        # the explicit product of the longest-element case
        lam_t, a_t = lam, a
        expected = (qbinom(lam_t[0] + a_t[0] + a_t[1] - 1, a_t[0] - 1)
                    * qbinom(lam_t[1] + a_t[1] - 1, a_t[1] - 1)).shifted(a_t[1])
        assert rhs_strict(lam, a, w0) == expected

    def test_all_w_n2(self):
        for lam in [(1, 0), (2, 0), (2, 1), (3, 1)]:
            for a in itertools.product((1, 2), repeat=2):
                for w in Permutation.all_perms(2):
                    assert verify_strict(lam, a, w).equal

    def test_non_strict_rejected(self):
        with pytest.raises(ValueError):
            rhs_strict((2, 2), (1, 1), Permutation.identity(2))


class TestUSum:
    def test_trivial(self):
        lhs, rhs = usum_cleared_sides(1)
        assert lhs == rhs

    def test_small(self):
        for n in (1, 2, 3):
            assert verify_usum(n).equal
            for k in range(1, n + 1):
                assert verify_usum_k(n, k).equal


class TestMatrixPropositions:
    def test_solve_column_relation(self):
        kappa = left_justified_from_rows((1, 0), 2)
        sols = solve_column_relation(kappa, 2)
        assert ((1,), Permutation.identity(2)) in sols

    def test_prop_kappa_instances(self):
        for a in itertools.product((1, 2), repeat=2):
            for kappa in [left_justified_from_rows((1, 0), 2),
                          left_justified_from_rows((2, 1), 2),
                          ZeroOneMatrix(((0, 1), (1, 0)))]:
                for lam, w in solve_column_relation(kappa, 2):
                    assert verify_prop_kappa(kappa, lam, w, a).equal

    def test_prop_zero_non_left_justified(self):
        kappa = ZeroOneMatrix(((0, 1), (1, 0)))
        assert not kappa.is_left_justified()
        for lam, w in solve_column_relation(kappa, 2):
            assert verify_prop_zero(kappa, lam, (1, 1)).equal

    def test_prop_vnu_instance(self):
        assert verify_prop_vnu((1, 0), (1, 1), 2).equal
        assert verify_prop_vnu((2, 1), (2, 1), 2).equal

    def test_kadell_null_derivation_instance(self):
        # c(kappa) = (1,1), r(kappa) = (1,1): max v < m forces zero
        kappa = ZeroOneMatrix(((1, 0), (0, 1)))
        sols = solve_column_relation(kappa, 2)
        assert (((2,), Permutation.identity(2)) in sols)
        assert not kappa.is_left_justified()
        assert verify_prop_zero(kappa, (2,), (1, 1)).equal
        lhs = D_vlambda((1, 1), (2,), (1, 1), "symbolic")
        assert lhs.is_zero

    def test_lemma_sym_covariance(self):
        for a in [(1, 1), (2, 1)]:
            for v in all_compositions(2, 2):
                lam = tuple(x for x in sort_desc(v) if x)
                for w in Permutation.all_perms(2):
                    assert lemma_sym_check(v, lam, a, w)

    def test_lemma_sym_covariance_n3(self):
        for a in [(1, 1, 1), (2, 1, 1)]:
            for v in all_compositions(2, 3):
                lam = tuple(x for x in sort_desc(v) if x)
                for w in Permutation.all_perms(3):
                    assert lemma_sym_check(v, lam, a, w)

    def test_contributing_permutations_worked_example(self):
        perms = contributing_perms((0, 1, 3, 3), (1, 1, 1, 1), 3)
        assert [p.word for p in perms] == [
            (1, 5, 2, 6, 7, 3, 4), (1, 5, 2, 6, 7, 4, 3)]


class TestSillsLXZ:
    def test_empty_J_term_vanishes(self):
        # J = {} contributes a factor 1 - q^0 = 0; the sum starts at |J| = 1
        assert rhs_lxz((1, -1), (0, 1)) == rhs_lxz((1, -1), (0, 1))
        v, a = (1, -1), (2, 1)
        assert verify_lxz(v, a).equal

    def test_sills_two_variables(self):
        assert verify_sills((1, 1), 2, 1).equal
        assert rhs_sills((1, 1), 2, 1) == IntPoly.const(-1)

    def test_sills_cyclic_interval(self):
        # r < s wraps around and picks up chi(r < s)
        for a in [(1, 1, 1), (2, 1, 1), (1, 2, 3)]:
            for r, s in itertools.permutations((1, 2, 3), 2):
                assert verify_sills(a, r, s).equal, (a, r, s)

    def test_sills_is_lxz_special_case(self):
        # s = 1: the LXZ sum with v = e_1 - e_r has a single J = {1} term
        for a in [(1, 1, 1), (2, 1, 2)]:
            for r in (2, 3):
                v = tuple(1 if i == 1 else (-1 if i == r else 0)
                          for i in range(1, 4))
                assert rhs_lxz(v, a) == rhs_sills(a, r, 1)

    def test_lxz_grid(self):
        for a in itertools.product((1, 2), repeat=3):
            for v in [(1, -1, 0), (1, 0, -1), (1, 1, -2)]:
                assert verify_lxz(v, a).equal

    def test_lxz_precondition(self):
        with pytest.raises(ValueError):
            rhs_lxz((0, 1, -1), (1, 1, 1))
        with pytest.raises(ValueError):
            rhs_lxz((2, -2), (1, 1))


class TestVerifyReport:
    def test_json_schema(self):
        r = verify_qdyson((1, 1))
        data = json.loads(r.to_json())
        assert set(data) == {"identity", "params", "lhs", "rhs", "equal", "millis"}
        assert data["equal"] is True
        assert data["identity"] == "q-dyson"

    def test_text_line(self):
        r = verify_qdyson((1, 1))
        assert r.text_line().startswith("PASS q-dyson")
        assert "millis" not in r.text_line()
