import itertools
import random

import pytest

from coxchar.character import (
    alcove_reduce,
    char_at_coxeter,
    coxeter_lift_order,
    fs_indicator,
    regularity_test,
    rho_central_character,
    verify_principal_cocharacter,
)
from coxchar.errors import InternalCheckError
from coxchar.rootdata import build
from coxchar.weyl import duality_involution

ALL_SIMPLE = (
    [f"A{n}" for n in range(1, 9)]
    + [f"B{n}" for n in range(2, 9)]
    + [f"C{n}" for n in range(2, 9)]
    + [f"D{n}" for n in range(4, 9)]
    + ["E6", "E7", "E8", "F4", "G2"]
)


class TestRegularity:
    def test_zero_weight_always_regular(self):
        for t in ["A1", "B3", "E8", "A2xG2"]:
            ok, witness = regularity_test(build(t), (0,) * build(t).rank)
            assert ok and witness is None

    def test_a2_standard_blocked(self):
        ok, witness = regularity_test(build("A2"), (1, 0))
        assert not ok
        assert witness.pair.coroot == (1, 1)
        assert witness.pairing_mod_h == 0

    def test_a2_adjoint_regular(self):
        ok, _ = regularity_test(build("A2"), (1, 1))
        assert ok

    def test_rejects_nondominant(self):
        with pytest.raises(ValueError):
            regularity_test(build("A2"), (1, -1))


class TestAlcoveReduce:
    def test_rho_fixed(self):
        rd = build("B3")
        assert alcove_reduce(rd, rd.rho) == (rd.rho, 1, 0)

    def test_a1_sym2(self):
        assert alcove_reduce(build("A1"), (3,)) == ((1,), -1, 1)

    def test_a2_adjoint(self):
        assert alcove_reduce(build("A2"), (2, 2)) == ((1, 1), -1, 1)

    def test_rejects_non_strictly_dominant(self):
        with pytest.raises(ValueError):
            alcove_reduce(build("A2"), (0, 1))

    def test_endpoint_always_rho_randomized(self):
        rng = random.Random(99)
        for t in ["A3", "B3", "C4", "D4", "F4", "G2", "E6"]:
            rd = build(t)
            h = rd.coxeter_numbers[0]
            found = 0
            while found < 25:
                lam = tuple(rng.randint(0, 2 * h) for _ in range(rd.rank))
                if not regularity_test(rd, lam)[0]:
                    continue
                found += 1
                mu = tuple(c + 1 for c in lam)
                endpoint, sign, steps = alcove_reduce(rd, mu)
                assert endpoint == rd.rho
                assert sign == (-1) ** (steps % 2)


class TestCharAtCoxeter:
    def test_trivial_rep_is_one_everywhere(self):
        for t in ALL_SIMPLE:
            rd = build(t)
            assert char_at_coxeter(rd, (0,) * rd.rank).value == 1

    def test_a1_cycle(self):
        rd = build("A1")
        values = [char_at_coxeter(rd, (k,)).value for k in range(12)]
        assert values == [1, 0, -1, 0] * 3

    def test_a2_standard_and_adjoint(self):
        rd = build("A2")
        assert char_at_coxeter(rd, (1, 0)).value == 0
        assert char_at_coxeter(rd, (1, 1)).value == -1

    def test_report_invariants_on_sweep(self):
        for t in ["A2", "B2", "G2", "A1xB2"]:
            rd = build(t)
            for lam in itertools.product(range(4), repeat=rd.rank):
                rep = char_at_coxeter(rd, lam)
                assert rep.value in (-1, 0, 1)
                assert (rep.value == 0) == (not rep.regular)
                assert (rep.blocking_coroot is not None) == (rep.value == 0)
                if rep.value != 0:
                    assert rep.endpoint_is_rho is True
                    assert rep.value == (-1) ** rep.sign_parity

    def test_product_multiplies(self):
        rd = build("A1xA1")
        assert char_at_coxeter(rd, (2, 2)).value == 1
        assert char_at_coxeter(rd, (2, 0)).value == -1
        assert char_at_coxeter(rd, (1, 2)).value == 0

    def test_product_each_blocked_factor_gets_own_witness(self):
        rd = build("A1xA1")
        rep = char_at_coxeter(rd, (1, 1))  # both factors singular
        assert rep.value == 0
        witnesses = [f.blocking_coroot for f in rep.factors]
        assert witnesses[0].factor == 0 and witnesses[1].factor == 1
        assert witnesses[0].pair.coroot == (1, 0)
        assert witnesses[1].pair.coroot == (0, 1)
        assert rep.blocking_coroot == witnesses[0]

    def test_e8_runs_fast_path(self):
        rd = build("E8")
        # (1,...,1) is singular mod 30: mu = 2*rho meets the height-15 coroot
        assert char_at_coxeter(rd, (1,) * 8).value == 0
        rng = random.Random(4)
        found = 0
        while found < 5:
            lam = tuple(rng.randint(0, 40) for _ in range(8))
            if not regularity_test(rd, lam)[0]:
                continue
            found += 1
            rep = char_at_coxeter(rd, lam)
            assert rep.value in (-1, 1)
            assert rep.endpoint_is_rho

    def test_rejects_bad_weights(self):
        rd = build("A2")
        with pytest.raises(ValueError):
            char_at_coxeter(rd, (1,))
        with pytest.raises(ValueError):
            char_at_coxeter(rd, (-1, 0))


class TestRhoCentralCharacter:
    def test_a1_nontrivial(self):
        cc = rho_central_character(build("A1"))
        assert cc.values == (-1,) and cc.order == 2

    def test_e8_trivial(self):
        assert rho_central_character(build("E8")).order == 1

    @pytest.mark.parametrize("n", range(2, 10))
    def test_c_family_rule(self, n):
        # nontrivial iff n = 1, 2 mod 4: the (-1)^(n(n+1)/2) pattern
        cc = rho_central_character(build(f"C{n}"))
        assert cc.is_trivial == (n % 4 in (0, 3))

    @pytest.mark.parametrize("n", range(2, 10))
    def test_b_family_always_nontrivial(self, n):
        assert rho_central_character(build(f"B{n}")).order == 2

    def test_product(self):
        cc = rho_central_character(build("A1xC3"))
        assert cc.order == 2  # A1 side contributes the sign


class TestCoxeterLiftOrder:
    def test_a1(self):
        (rep,) = coxeter_lift_order(build("A1"))
        assert rep.lift_order == 4 and not rep.matches_h

    def test_e8(self):
        (rep,) = coxeter_lift_order(build("E8"))
        assert rep.lift_order == 30 and rep.matches_h

    def test_c3_matches(self):
        (rep,) = coxeter_lift_order(build("C3"))
        assert rep.lift_order == 6 and rep.matches_h

    def test_b3_mismatch(self):
        (rep,) = coxeter_lift_order(build("B3"))
        assert rep.lift_order == 12 and not rep.matches_h

    @pytest.mark.parametrize("t", ALL_SIMPLE)
    def test_biconditional(self, t):
        rd = build(t)
        (rep,) = coxeter_lift_order(rd)
        assert rep.matches_h == rho_central_character(rd).is_trivial
        assert rep.lift_order in (rep.coxeter_number, 2 * rep.coxeter_number)

    def test_product_reports_per_factor(self):
        reps = coxeter_lift_order(build("A1xE8"))
        assert [r.matches_h for r in reps] == [False, True]


class TestFsIndicator:
    def test_trivial_rep(self):
        assert fs_indicator(build("D4"), (0, 0, 0, 0)) == 1

    def test_a1_standard_symplectic(self):
        assert fs_indicator(build("A1"), (1,)) == -1

    def test_not_self_dual_is_zero(self):
        rd = build("A2")
        assert fs_indicator(rd, (1, 0)) == 0
        assert fs_indicator(rd, (2, 1)) == 0

    @pytest.mark.parametrize("n", range(2, 10))
    def test_b_family_spin_rule(self, n):
        # orthogonal exactly for n = 0, 3 mod 4
        lam = (0,) * (n - 1) + (1,)
        expect = 1 if n % 4 in (0, 3) else -1
        assert fs_indicator(build(f"B{n}"), lam) == expect

    def test_matches_duality_involution(self):
        for t in ["A2", "B2", "C3", "D4", "G2"]:
            rd = build(t)
            for lam in itertools.product(range(3), repeat=rd.rank):
                fs = fs_indicator(rd, lam)
                dual = duality_involution(rd, lam)
                assert fs == fs_indicator(rd, dual)
                assert (fs != 0) == (dual == tuple(lam))

    def test_d4_vector_and_spinors(self):
        rd = build("D4")
        # all three 8-dimensional representations are orthogonal
        for lam in [(1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]:
            assert fs_indicator(rd, lam) == 1


class TestPrincipalCocharacter:
    @pytest.mark.parametrize("t", ALL_SIMPLE)
    def test_all_checks_pass(self, t):
        rd = build(t)
        for rep in verify_principal_cocharacter(rd):
            assert rep.rho_pairings_all_one
            assert rep.adjoint_order == rep.coxeter_number
            assert rep.regular
            assert rep.passed

    def test_g2_f4_examples(self):
        assert verify_principal_cocharacter(build("G2"))[0].adjoint_order == 6
        assert verify_principal_cocharacter(build("F4"))[0].adjoint_order == 12
        assert verify_principal_cocharacter(build("A1"))[0].adjoint_order == 2

    def test_product(self):
        reps = verify_principal_cocharacter(build("A1xG2"))
        assert [r.adjoint_order for r in reps] == [2, 6]
