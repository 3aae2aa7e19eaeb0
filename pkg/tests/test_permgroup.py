"""Permutation engine, lattice enumeration, Moebius values, normal
structure, quotients and the projective-line constructions."""

import numpy as np
import pytest

from pzeta import (
    AlmostSimpleSpec,
    Budget,
    BudgetExceeded,
    InvalidParameter,
    NotNormal,
    OrderBoundExceeded,
    PermGroup,
    Permutation,
    alternating,
    all_chief_series_ids,
    builtin_group,
    centralizer_quotient,
    chief_series_ids,
    chief_steps,
    cyclic,
    dihedral,
    direct_product,
    factor_group,
    klein_four,
    make_psl2,
    parse_group_file,
    quaternion8,
    subgroup_lattice,
    symmetric,
)
from pzeta.permgroup import format_group_file
from helpers import group, psl2


class TestPermutation:
    def test_parse_and_format(self):
        p = Permutation.parse("(0 1 2 3 4)(5 6)", 7)
        assert p.images == (1, 2, 3, 4, 0, 6, 5)
        assert p.cycle_string() == "(0 1 2 3 4)(5 6)"

    def test_identity_parse(self):
        assert Permutation.parse("()", 3).is_identity

    def test_composition_left_to_right(self):
        a = Permutation.parse("(0 1)", 3)
        b = Permutation.parse("(1 2)", 3)
        # apply a first: 0 -> 1 -> 2
        assert (a * b)(0) == 2

    def test_inverse_and_order(self):
        p = Permutation.parse("(0 1 2)(3 4)", 5)
        assert (p * p.inverse()).is_identity
        assert p.order() == 6

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Permutation([0, 0, 1])

    def test_rejects_repeated_point_across_cycles(self):
        with pytest.raises(ValueError):
            Permutation.parse("(0 1)(1 2)", 3)


class TestClosure:
    def test_a5_from_standard_generators(self):
        g = PermGroup(5, [Permutation.parse("(0 1 2 3 4)", 5), Permutation.parse("(0 1 2)", 5)])
        assert g.order == 60

    def test_trivial_group(self):
        g = PermGroup(3, [])
        assert g.order == 1
        assert g.elements() == [Permutation.identity(3)]

    def test_s4_from_transposition_and_cycle(self):
        g = PermGroup(4, [Permutation.parse("(0 1)", 4), Permutation.parse("(0 1 2 3)", 4)])
        assert g.order == 24

    def test_order_bound_enforced(self):
        g = PermGroup(5, [Permutation.parse("(0 1 2 3 4)", 5), Permutation.parse("(0 1 2)", 5)],
                      max_order=30)
        with pytest.raises(OrderBoundExceeded):
            _ = g.order

    def test_element_indexing_is_deterministic(self):
        a = symmetric(4).elements()
        b = symmetric(4).elements()
        assert a == b

    def test_engine_product_matches_permutation_product(self):
        import random

        g = symmetric(4)
        eng = g.engine
        rng = random.Random(3)
        for _ in range(50):
            i, j = rng.randrange(24), rng.randrange(24)
            via_engine = eng.permutation(eng.mul(i, j))
            assert via_engine == eng.permutation(i) * eng.permutation(j)


class TestBuiltins:
    @pytest.mark.parametrize(
        "name,order",
        [
            ("S3", 6), ("S4", 24), ("A4", 12), ("A5", 60), ("C7", 7),
            ("D8", 8), ("Q8", 8), ("C2xC2", 4), ("A5xC2", 120),
            ("PSL(2,5)", 60), ("PGL(2,7)", 336), ("PSL2_7", 168),
        ],
    )
    def test_orders(self, name, order):
        assert builtin_group(name).order == order

    def test_cp_with_parameter(self):
        assert builtin_group("Cp", p=7).order == 7

    def test_cp_without_parameter_fails(self):
        with pytest.raises(ValueError):
            builtin_group("Cp")

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            builtin_group("E8")

    def test_q8_has_unique_involution(self):
        eng = quaternion8().engine
        orders = eng.element_orders()
        assert sum(1 for o in orders if o == 2) == 1

    def test_dihedral_is_nonabelian_of_right_order(self):
        d12 = dihedral(12)
        assert d12.order == 12 and not d12.is_abelian


class TestGroupFile:
    def test_round_trip(self):
        g = builtin_group("A5")
        text = format_group_file(g, comment="alternating group")
        g2 = parse_group_file(text)
        assert g2.order == 60 and g2.degree == 5

    def test_comments_and_blank_lines(self):
        text = "# a comment\n\ndegree 3\n(0 1 2)\n# trailing\n"
        assert parse_group_file(text).order == 3

    def test_missing_degree(self):
        with pytest.raises(ValueError):
            parse_group_file("(0 1 2)\n")


class TestLattice:
    def test_s3_subgroups(self):
        lat = group("S3").subgroup_lattice()
        assert lat.node_count == 6
        assert sorted(lat.node_order(i) for i in range(6)) == [1, 2, 2, 2, 3, 6]

    def test_prime_cyclic_has_two_subgroups(self):
        assert group("C7").subgroup_lattice().node_count == 2

    def test_a5_counts_and_class_sizes(self):
        lat = group("A5").subgroup_lattice()
        assert lat.node_count == 59
        assert lat.class_count == 9
        sizes = sorted(len(c) for c in lat.conjugacy_classes)
        assert sizes == sorted([1, 15, 10, 5, 6, 10, 6, 5, 1])

    def test_budget_subgroup_cap(self):
        fresh = symmetric(4)
        with pytest.raises(BudgetExceeded) as ei:
            fresh.subgroup_lattice(Budget(max_subgroups=5))
        assert "subgroups" in ei.value.stats

    def test_budget_order_cap(self):
        fresh = alternating(5)
        with pytest.raises(OrderBoundExceeded):
            fresh.subgroup_lattice(Budget(max_order=10))

    def test_budget_time_hint(self):
        fresh = symmetric(4)
        with pytest.raises(BudgetExceeded):
            fresh.subgroup_lattice(Budget(time_hint_s=0.0))

    def test_enumeration_is_deterministic(self):
        a = alternating(5).subgroup_lattice()
        b = alternating(5).subgroup_lattice()
        assert a.to_json_dict() == b.to_json_dict()

    @pytest.mark.parametrize(
        "name,nodes,classes",
        [
            ("A4", 10, 5),
            ("D10", 8, 4),
            ("D12", 16, 10),
            ("C12", 6, 6),
            ("S5", 156, 19),
            ("PSL(2,7)", 179, 15),
            ("PSL(2,11)", 620, 16),
        ],
    )
    def test_subgroup_counts_match_literature(self, name, nodes, classes):
        lat = group(name).subgroup_lattice()
        assert (lat.node_count, lat.class_count) == (nodes, classes)

    def test_lattice_statistics_are_representation_independent(self):
        # PGL(2,5) on the projective line is S5 in disguise; every
        # lattice statistic must agree with the degree-5 representation
        s5 = group("S5").subgroup_lattice()
        pgl = psl2(5, "pgl").group.subgroup_lattice()
        assert (s5.node_count, s5.class_count) == (pgl.node_count, pgl.class_count)
        assert sorted(len(c) for c in s5.conjugacy_classes) == sorted(
            len(c) for c in pgl.conjugacy_classes
        )
        assert sorted(s5.moebius_values) == sorted(pgl.moebius_values)


def _moebius_by_matrix_inversion(lat):
    """Independent oracle: invert the full zeta matrix of the inclusion
    relation (recomputed from raw element sets) over the integers and
    read off the column at the top node."""
    n = lat.node_count
    sets = [frozenset(lat.node_elements(i)) for i in range(n)]
    z = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if sets[i] <= sets[j]:
                z[i, j] = 1
    minv = np.zeros((n, n), dtype=np.int64)
    for c in range(n):
        minv[c, c] = 1
        for i in range(c - 1, -1, -1):
            if z[i, c] or any(z[i, k] and minv[k, c] for k in range(i + 1, c + 1)):
                minv[i, c] = -sum(int(z[i, k]) * int(minv[k, c]) for k in range(i + 1, c + 1))
    assert (z @ minv == np.eye(n, dtype=np.int64)).all()
    top = lat.top_id
    return [int(minv[i, top]) for i in range(n)]


class TestMoebius:
    def test_prime_cyclic(self):
        lat = group("C7").subgroup_lattice()
        assert lat.moebius(lat.top_id) == 1
        assert lat.moebius(lat.trivial_id) == -1

    def test_s3_values(self):
        lat = group("S3").subgroup_lattice()
        by_order = {}
        for i in range(lat.node_count):
            by_order.setdefault(lat.node_order(i), []).append(lat.moebius(i))
        assert by_order[6] == [1]
        assert by_order[3] == [-1]
        assert by_order[2] == [-1, -1, -1]
        assert by_order[1] == [3]

    @pytest.mark.parametrize("name", ["S3", "S4", "A4", "A5", "D8", "Q8", "C6", "C12", "A5xC2"])
    def test_matches_matrix_inversion_oracle(self, name):
        lat = group(name).subgroup_lattice()
        assert lat.moebius_values == _moebius_by_matrix_inversion(lat)

    def test_conjugate_subgroups_share_moebius(self):
        for name in ["S4", "A5", "PGL(2,7)"]:
            lat = group(name).subgroup_lattice()
            for members in lat.conjugacy_classes:
                values = {lat.moebius(i) for i in members}
                assert len(values) == 1


class TestNormalStructure:
    def test_s4_normal_subgroups(self):
        lat = group("S4").subgroup_lattice()
        orders = sorted(lat.node_order(i) for i in lat.normal_node_ids())
        assert orders == [1, 4, 12, 24]

    def test_a5_is_simple(self):
        lat = group("A5").subgroup_lattice()
        assert sorted(lat.node_order(i) for i in lat.normal_node_ids()) == [1, 60]

    def test_abelian_group_all_normal(self):
        lat = group("C2xC2").subgroup_lattice()
        assert len(lat.normal_node_ids()) == lat.node_count == 5


class TestQuotient:
    def test_s4_mod_v4_is_s3_like(self):
        lat = group("S4").subgroup_lattice()
        v4 = next(
            i for i in lat.normal_node_ids()
            if lat.node_order(i) == 4
        )
        q = lat.quotient_group(v4)
        assert q.order == 6 and not q.is_abelian

    def test_quotient_by_trivial_is_regular_copy(self):
        lat = group("S3").subgroup_lattice()
        q = lat.quotient_group(lat.trivial_id)
        assert q.order == 6 and q.degree == 6

    def test_s4_mod_a4_has_order_two(self):
        lat = group("S4").subgroup_lattice()
        a4 = next(i for i in lat.normal_node_ids() if lat.node_order(i) == 12)
        assert lat.quotient_group(a4).order == 2

    def test_order_multiplicativity(self):
        lat = group("S4").subgroup_lattice()
        for i in lat.normal_node_ids():
            assert lat.quotient_group(i).order * lat.node_order(i) == 24

    def test_not_normal_rejected(self):
        lat = group("S4").subgroup_lattice()
        non_normal = next(i for i in range(lat.node_count) if not lat.is_normal(i))
        with pytest.raises(NotNormal):
            lat.quotient_group(non_normal)


class TestFrattini:
    def test_s4_frattini_trivial(self):
        lat = group("S4").subgroup_lattice()
        assert lat.frattini_node_id() == lat.trivial_id

    def test_c4_frattini_is_c2(self):
        lat = group("C4").subgroup_lattice()
        assert lat.node_order(lat.frattini_node_id()) == 2

    def test_klein_frattini_trivial(self):
        lat = group("C2xC2").subgroup_lattice()
        assert lat.frattini_node_id() == lat.trivial_id

    def test_q8_frattini_is_center(self):
        lat = group("Q8").subgroup_lattice()
        assert lat.node_order(lat.frattini_node_id()) == 2

    def test_frattini_is_normal_and_below_every_maximal(self):
        for name in ["S4", "Q8", "C12", "A4"]:
            lat = group(name).subgroup_lattice()
            frat = lat.frattini_node_id()
            assert lat.is_normal(frat)
            for m in lat.maximal_node_ids():
                assert lat.contains(frat, m)


class TestChiefSeries:
    def test_s4_chain(self):
        lat = group("S4").subgroup_lattice()
        steps = chief_steps(lat)
        assert [(s.label, s.multiplicity) for s in steps] == [("C2", 1), ("C3", 1), ("C2", 2)]
        assert [lat.node_order(i) for i in chief_series_ids(lat)] == [24, 12, 4, 1]

    def test_a5_single_factor(self):
        lat = group("A5").subgroup_lattice()
        steps = chief_steps(lat)
        assert len(steps) == 1
        assert steps[0].label == "A5" and steps[0].multiplicity == 1

    def test_c6_two_abelian_factors(self):
        lat = group("C6").subgroup_lattice()
        labels = sorted(s.label for s in chief_steps(lat))
        assert labels == ["C2", "C3"]

    def test_factors_are_characteristically_simple(self):
        for name in ["S4", "A5xC2", "C12", "Q8", "D8"]:
            lat = group(name).subgroup_lattice()
            for s in chief_steps(lat):
                assert s.factor_order == s.simple_order ** s.multiplicity

    def test_a5xc2_has_two_chief_series(self):
        lat = group("A5xC2").subgroup_lattice()
        chains = all_chief_series_ids(lat)
        assert len(chains) == 2

    def test_factor_group_section(self):
        lat = group("S4").subgroup_lattice()
        chain = chief_series_ids(lat)
        sec = factor_group(lat, chain[1], chain[2])  # A4 / V4
        assert sec.order == 3


class TestCentralizerQuotient:
    def test_s4_bottom_factor_gives_s3(self):
        # V4 is self-centralizing in S4, so the monolithic group of the
        # bottom factor V4/1 is S4/V4 of order 6, nonabelian
        lat = group("S4").subgroup_lattice()
        chain = chief_series_ids(lat)  # S4 > A4 > V4 > 1
        monolith = centralizer_quotient(lat, chain[2], chain[3])
        assert monolith.order == 6 and not monolith.is_abelian

    def test_s4_abelian_c3_factor_gives_c2(self):
        # A4/V4 is abelian, so all of A4 centralizes it and L = S4/A4
        lat = group("S4").subgroup_lattice()
        chain = chief_series_ids(lat)
        monolith = centralizer_quotient(lat, chain[1], chain[2])
        assert monolith.order == 2

    def test_nonabelian_factor_in_product(self):
        # A5 x C2 has the nonabelian chief factor A5; its centralizer is
        # the C2 direct factor, so the monolithic group is A5 itself
        lat = group("A5xC2").subgroup_lattice()
        a5_node = next(
            i for i in lat.normal_node_ids() if lat.node_order(i) == 60
        )
        monolith = centralizer_quotient(lat, a5_node, lat.trivial_id)
        assert monolith.order == 60 and not monolith.is_abelian

    def test_simple_group_gives_itself(self):
        lat = group("A5").subgroup_lattice()
        chain = chief_series_ids(lat)
        monolith = centralizer_quotient(lat, chain[0], chain[1])
        assert monolith.order == 60

    def test_abelian_group_gives_trivial(self):
        lat = group("C6").subgroup_lattice()
        chain = chief_series_ids(lat)
        monolith = centralizer_quotient(lat, chain[0], chain[1])
        assert monolith.order == 1


class TestProjectiveConstructions:
    @pytest.mark.parametrize(
        "q,variant,order,degree",
        [
            (5, "psl", 60, 6),
            (7, "pgl", 336, 8),
            (11, "psl", 660, 12),
            (13, "pgl", 2184, 14),
        ],
    )
    def test_orders_and_degrees(self, q, variant, order, degree):
        spec = psl2(q, variant)
        assert spec.group.order == order
        assert spec.group.degree == degree

    @pytest.mark.parametrize("bad", [4, 9, 3, 2, 15, 1])
    def test_rejects_bad_q(self, bad):
        with pytest.raises(InvalidParameter):
            make_psl2(bad, "psl")

    def test_rejects_bad_variant(self):
        with pytest.raises(InvalidParameter):
            make_psl2(7, "aut")

    def test_pgl_socle_is_psl_of_index_two(self):
        spec = psl2(7, "pgl")
        assert spec.group.order == 2 * spec.socle.order
        assert len(spec.socle_indices) == 168

    def test_psl_socle_is_whole_group(self):
        spec = psl2(5, "psl")
        assert spec.socle_is_whole_group

    def test_psl_is_simple_for_small_q(self):
        lat = psl2(5, "psl").group.subgroup_lattice()
        assert sorted(lat.node_order(i) for i in lat.normal_node_ids()) == [1, 60]

    def test_almost_simple_validation_rejects_abelian_socle(self):
        with pytest.raises(InvalidParameter):
            AlmostSimpleSpec(symmetric(4), cyclic_subgroup_of_s4())

    def test_sylow2_has_full_two_part(self):
        eng = psl2(13, "pgl").group.engine
        elems, gens = eng.sylow2()
        assert len(elems) == 8
        closed = eng.closure(gens)
        assert closed is not None and len(closed) == 8


def cyclic_subgroup_of_s4():
    return PermGroup(4, [Permutation.parse("(0 1 2 3)", 4)], name="C4<S4")


class TestDirectProduct:
    def test_orders_multiply(self):
        g = direct_product(alternating(5), cyclic(2))
        assert g.order == 120 and g.degree == 7

    def test_klein_four(self):
        assert klein_four().order == 4 and klein_four().is_abelian
