"""Group zeta polynomials, supplement sums, odd supplement indices and
the chief factorization."""

from fractions import Fraction

import pytest

from pzeta import (
    Budget,
    DirichletPolynomial,
    chief_factorization,
    chief_steps,
    generating_probability,
    generating_probability_bruteforce,
    minimal_odd_index_table,
    odd_supplement_indices,
    predicted_minimal_odd_index,
    prime_projection,
    probabilistic_zeta,
    supplement_zeta,
    verify_shift_coefficients,
    zeta_report,
)
from pzeta.rationality import check_sml_conditions
from helpers import group, psl2

D = DirichletPolynomial


KNOWN_ZETAS = {
    "C7": D({1: 1, 7: -1}),
    "S3": D({1: 1, 2: -1, 3: -3, 6: 3}),
    "C2xC2": D({1: 1, 2: -3, 4: 2}),
    "A5": D({1: 1, 5: -5, 6: -6, 10: -10, 20: 20, 30: 60, 60: -60}),
}


class TestZetaPolynomial:
    @pytest.mark.parametrize("name", sorted(KNOWN_ZETAS))
    def test_known_values(self, name):
        assert probabilistic_zeta(group(name)) == KNOWN_ZETAS[name]

    def test_constant_term_is_one(self):
        for name in ["S4", "Q8", "C12", "A5xC2", "D8"]:
            assert probabilistic_zeta(group(name)).coefficient(1) == 1

    def test_report_carries_stats(self):
        rep = zeta_report(group("S3"))
        assert rep.subgroup_count == 6 and rep.class_count == 4
        assert rep.zeta == KNOWN_ZETAS["S3"]

    def test_a5_two_generation_probability(self):
        # classical value for the alternating group on 5 points
        assert probabilistic_zeta(group("A5")).evaluate(2) == Fraction(19, 30)


class TestGenerationOracle:
    def test_s3_pairs(self):
        assert generating_probability(group("S3"), 2) == Fraction(1, 2)

    def test_c2_single(self):
        assert generating_probability(group("C2"), 1) == Fraction(1, 2)

    @pytest.mark.parametrize("name,k", [("S3", 2), ("C6", 2), ("Q8", 2), ("C2xC2", 1), ("D8", 2)])
    def test_lattice_oracle_matches_bruteforce(self, name, k):
        assert generating_probability(group(name), k) == generating_probability_bruteforce(group(name), k)

    def test_matches_zeta_evaluation_on_a5(self):
        g = group("A5")
        for k in (1, 2, 3):
            assert probabilistic_zeta(g).evaluate(k) == generating_probability(g, k)


class TestFrattiniInvariance:
    @pytest.mark.parametrize("name", ["C4", "C8", "C9", "C12", "Q8"])
    def test_zeta_ignores_frattini_quotient(self, name):
        g = group(name)
        lat = g.subgroup_lattice()
        frat = lat.frattini_node_id()
        assert frat != lat.trivial_id, f"{name} should have nontrivial Frattini subgroup"
        q = lat.quotient_group(frat)
        assert probabilistic_zeta(g) == probabilistic_zeta(q)


class TestSupplementZeta:
    def test_socle_equals_group_reduces_to_zeta(self):
        spec = psl2(5, "psl")
        assert supplement_zeta(spec) == probabilistic_zeta(spec.group)

    def test_pgl25_constant_term(self):
        spec = psl2(5, "pgl")
        poly = supplement_zeta(spec)
        assert poly.coefficient(1) == 1
        # S4 < S5 is a supplement of A5 of index 5, and all five are maximal
        assert poly.coefficient(5) == -5

    def test_pgl27_odd_supplement_coefficient_negative(self):
        poly = supplement_zeta(psl2(7, "pgl"))
        assert poly.coefficient(21) < 0

    def test_supplement_terms_are_subset_of_zeta_indices(self):
        spec = psl2(7, "pgl")
        full = probabilistic_zeta(spec.group)
        supp = supplement_zeta(spec)
        assert set(supp.support()) <= set(full.support()) | {1}


class TestOddSupplementIndices:
    @pytest.mark.parametrize(
        "q,variant,w",
        [(5, "psl", 5), (5, "pgl", 5), (7, "psl", 7), (7, "pgl", 21), (11, "psl", 11)],
    )
    def test_minima(self, q, variant, w):
        assert odd_supplement_indices(psl2(q, variant)).minimum == w

    def test_a5_indices(self):
        rep = odd_supplement_indices(psl2(5, "psl"))
        assert rep.indices == (5,)
        # index 15 subgroups (Klein fours) exist but are not maximal
        detail = {d.index: d for d in rep.details}
        assert 15 in detail and not detail[15].all_maximal

    def test_index_one_never_qualifies(self):
        rep = odd_supplement_indices(psl2(5, "pgl"))
        assert 1 not in rep.indices

    @pytest.mark.parametrize(
        "q,variant",
        [(5, "psl"), (5, "pgl"), (7, "psl"), (7, "pgl"),
         (11, "psl"), (11, "pgl"), (13, "psl"), (13, "pgl")],
    )
    def test_odd_proper_supplement_indices_divisible_by_q(self, q, variant):
        rep = odd_supplement_indices(psl2(q, variant))
        for d in rep.details:
            if d.index > 1:
                assert d.index % q == 0

    @pytest.mark.parametrize("q,variant", [(5, "psl"), (7, "pgl")])
    def test_full_lattice_path_agrees_on_odd_part(self, q, variant):
        spec = psl2(q, variant)
        fast = odd_supplement_indices(spec)
        full = odd_supplement_indices(spec, include_even=True)
        assert tuple(m for m in full.indices if m % 2 == 1) == fast.indices

    def test_even_extension_sees_even_indices(self):
        full = odd_supplement_indices(psl2(5, "psl"), include_even=True)
        assert 6 in full.indices  # the six dihedral D10 are all maximal

    def test_negative_supplement_coefficient_on_omega(self):
        # every index in Omega(X) must carry a strictly negative
        # supplement-zeta coefficient (supplements there are maximal)
        for q, variant in [(5, "psl"), (7, "psl"), (7, "pgl"), (11, "psl")]:
            spec = psl2(q, variant)
            poly = supplement_zeta(spec)
            for m in odd_supplement_indices(spec).indices:
                assert poly.coefficient(m) < 0


class TestWTable:
    def test_closed_form_values(self):
        assert predicted_minimal_odd_index(13, "psl") == 91
        assert predicted_minimal_odd_index(13, "pgl") == 91
        assert predicted_minimal_odd_index(17, "psl") == 153
        assert predicted_minimal_odd_index(19, "psl") == 57
        assert predicted_minimal_odd_index(19, "pgl") == 171
        assert predicted_minimal_odd_index(29, "psl") == 203
        assert predicted_minimal_odd_index(29, "pgl") == 435
        assert predicted_minimal_odd_index(23, "psl") == 23 * 22 // 2
        assert predicted_minimal_odd_index(37, "pgl") == 37 * 38 // 2

    def test_small_rows_match(self):
        rows = minimal_odd_index_table([5, 7])
        assert all(r.status == "MATCH" for r in rows)

    def test_budget_skips_rows(self):
        rows = minimal_odd_index_table([29], budget=Budget(max_order=1000))
        assert all(r.status == "SKIPPED" for r in rows)
        assert all(r.computed is None for r in rows)


class TestChiefFactorization:
    def test_s4_factors(self):
        fac = chief_factorization(group("S4"))
        polys = [str(p) for p in fac.factor_polynomials()]
        assert polys == ["1 - 1/2^s", "1 - 3/3^s", "1 - 4/4^s"]
        assert fac.product_ok
        assert [r.complement_count for r in fac.factors] == [1, 3, 4]
        assert all(r.abelian_identity_ok for r in fac.factors)

    def test_a5_single_factor_is_zeta(self):
        fac = chief_factorization(group("A5"))
        assert len(fac.factors) == 1
        assert fac.factors[0].polynomial == KNOWN_ZETAS["A5"]
        assert not fac.factors[0].frattini

    def test_c4_frattini_factor_is_trivial(self):
        fac = chief_factorization(group("C4"))
        assert fac.zeta == D({1: 1, 2: -1})
        flags = [r.frattini for r in fac.factors]
        assert flags == [False, True]
        assert fac.factors[1].polynomial.is_one()
        assert fac.factors[1].complement_count == 0

    def test_q8_bottom_factor_is_frattini(self):
        # Q8 > C4 > C2 > 1: the bottom C2 is the Frattini subgroup, the
        # middle factor is not Frattini in Q8/C2 = V4 and has 2 complements
        fac = chief_factorization(group("Q8"))
        assert fac.zeta == D({1: 1, 2: -3, 4: 2})
        assert [r.frattini for r in fac.factors] == [False, False, True]
        assert [str(p) for p in fac.factor_polynomials()] == ["1 - 1/2^s", "1 - 2/2^s", "1"]
        assert [r.complement_count for r in fac.factors] == [1, 2, 0]

    def test_product_identity_all_corpus(self):
        for name in ["C6", "C12", "S3", "A4", "D8", "A5xC2"]:
            fac = chief_factorization(group(name))
            assert fac.product_ok, name

    def test_multiset_independent_of_series(self):
        from pzeta.zeta import chief_factor_multiset

        multisets = chief_factor_multiset(group("A5xC2"))
        assert len(multisets) == 2
        assert multisets[0] == multisets[1]


class TestShiftCoefficientConsistency:
    def test_identity_shift(self):
        assert verify_shift_coefficients(psl2(5, "psl"), 1, {2})

    def test_full_projection_kills_everything(self):
        spec = psl2(5, "psl")
        assert prime_projection(supplement_zeta(spec), {2, 3, 5}).is_one()
        assert verify_shift_coefficients(spec, 2, {2, 3, 5})

    def test_psl27_square_shift(self):
        spec = psl2(7, "psl")
        assert verify_shift_coefficients(spec, 2, {2})
        poly = supplement_zeta(spec)
        from pzeta import power_shift

        shifted = prime_projection(power_shift(poly, 2), {2})
        assert shifted.coefficient(21**2) == poly.coefficient(21) * 21

    def test_rejects_prime_set_missing_socle_divisor(self):
        with pytest.raises(ValueError):
            verify_shift_coefficients(psl2(5, "psl"), 2, {11})


class TestFiniteChiefSeriesConditions:
    def test_finite_groups_satisfy_both_conditions(self):
        # non-Frattini composition lengths of a finite group always give
        # a family meeting both finiteness hypotheses
        for name in ["S4", "A5xC2", "C12", "Q8"]:
            fac = chief_factorization(group(name))
            mults = [r.multiplicity for r in fac.factors if not r.frattini]
            verdict = check_sml_conditions(mults)
            assert verdict.condition_i_holds
            assert verdict.condition_ii_witness is not None
