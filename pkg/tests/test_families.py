import math

import pytest

from graphenergy import (
    FamilySpec,
    OutOfDomainError,
    canonical_equienergetic_pair,
    complete_graph,
    cycle_graph,
    energy,
    family_ids,
    instantiate_family,
    shadow_split_energy_factor,
    shadow_splitting,
    split_energy_factor,
    sweep,
    verify,
    verify_borderenergetic,
    verify_equienergetic,
)
from graphenergy import jsonio
from graphenergy.families import FAMILIES, get_family


def spec(corollary_id, base=None, base_pair=None, **params):
    return FamilySpec(corollary_id, params, base=base, base_pair=base_pair)


class TestRegistry:
    def test_all_twelve_families_present(self):
        assert family_ids() == [
            "C5_1", "C5_2", "C5_3", "C5_4", "C5_5", "C5_6", "C5_7", "C5_8", "C5_9",
            "C6_1", "C6_2", "C6_3",
        ]

    def test_unknown_family(self):
        with pytest.raises(ValueError, match="unknown family"):
            get_family("C7_1")

    def test_parameter_binding_must_be_exact(self):
        with pytest.raises(ValueError, match="missing"):
            verify(spec("C5_2", t=1, m=1))
        with pytest.raises(ValueError, match="unexpected"):
            verify(spec("C5_6", t=1))


class TestInstantiation:
    def test_c5_9_four_members_order_72(self):
        graphs = instantiate_family(spec("C5_9", t=1))
        assert [g.order for g in graphs] == [72, 72, 72, 72]

    def test_c6_1_first_member_order_9(self):
        graphs = instantiate_family(spec("C6_1", k=1))
        assert graphs[0].order == 9
        assert graphs[1].order == 51

    def test_c6_2_t1_order_49(self):
        graphs = instantiate_family(spec("C6_2", t=1))
        assert len(graphs) == 1
        assert graphs[0].order == 49

    def test_c6_3_t1_order_105(self):
        graphs = instantiate_family(spec("C6_3", t=1))
        assert graphs[0].order == 105

    def test_default_base_is_four_cycle(self):
        graphs = instantiate_family(spec("C5_6"))
        assert [g.order for g in graphs] == [12, 12]

    def test_explicit_base(self):
        graphs = instantiate_family(spec("C5_6", base=complete_graph(3)))
        assert [g.order for g in graphs] == [9, 9]

    def test_c6_families_reject_custom_base(self):
        with pytest.raises(ValueError, match="constructs its own base"):
            instantiate_family(spec("C6_1", base=cycle_graph(4), k=1))


class TestDomains:
    def test_c5_3_requires_m_greater_than_t(self):
        with pytest.raises(OutOfDomainError):
            instantiate_family(spec("C5_3", m=2, t=2))
        with pytest.raises(OutOfDomainError):
            instantiate_family(spec("C5_3", m=1, t=0))

    def test_c5_2_k_must_be_unit(self):
        with pytest.raises(OutOfDomainError, match="k in"):
            instantiate_family(spec("C5_2", t=1, m=1, k=2))

    def test_positive_parameters_required(self):
        for family_id, params in [
            ("C5_4", {"p": 0, "q": 1}),
            ("C5_5", {"c": 1, "k": 0}),
            ("C5_7", {"m": 0}),
            ("C6_1", {"k": 0}),
            ("C6_2", {"t": 0}),
        ]:
            with pytest.raises(OutOfDomainError):
                instantiate_family(FamilySpec(family_id, params))


class TestEquienergeticVerification:
    def test_c5_2_worked_example(self):
        report = verify_equienergetic(spec("C5_2", t=1, m=1, k=1))
        assert report.passed
        assert [m.order for m in report.members] == [52, 52]
        for m in report.members:
            assert m.predicted_energy == pytest.approx(72.0, abs=1e-8)
            assert m.measured_energy == pytest.approx(72.0, abs=1e-8)

    def test_c5_2_negative_unit(self):
        report = verify_equienergetic(spec("C5_2", t=1, m=1, k=-1))
        assert report.passed
        # derived pairs (6,1) and (4,3) share the factor 10
        assert report.members[0].predicted_energy == pytest.approx(40.0, abs=1e-8)

    def test_c5_3_worked_example(self):
        report = verify_equienergetic(spec("C5_3", base=complete_graph(3), m=2, t=1))
        assert report.passed
        expected = math.sqrt(45) * 4
        for m in report.members:
            assert m.measured_energy == pytest.approx(expected, abs=1e-8)

    def test_c5_4_on_manifold(self):
        for p in (1, 2, 3):
            report = verify_equienergetic(spec("C5_4", p=p, q=4 * p - 2))
            assert report.passed
            assert report.members[0].predicted_energy == pytest.approx(
                (5 * p - 2) * 4.0, abs=1e-8
            )

    def test_c5_6_worked_example(self):
        report = verify_equienergetic(spec("C5_6"))
        assert report.passed
        assert [m.order for m in report.members] == [12, 12]
        for m in report.members:
            assert m.measured_energy == pytest.approx(16.0, abs=1e-8)

    def test_c5_9_all_four_members(self):
        report = verify_equienergetic(spec("C5_9", t=1))
        assert report.passed
        assert len(report.members) == 4
        for m in report.members:
            assert m.measured_energy == pytest.approx(72.0, abs=1e-8)

    def test_verify_kind_guards(self):
        with pytest.raises(ValueError, match="not an equienergetic"):
            verify_equienergetic(spec("C6_1", k=1))
        with pytest.raises(ValueError, match="not a borderenergetic"):
            verify_borderenergetic(spec("C5_6"))


class TestNegativeControls:
    def test_c5_4_off_manifold_fails(self):
        report = verify(spec("C5_4", p=2, q=7))
        assert report.orders_equal
        assert not report.energies_equal
        assert report.verdict == "fail"

    def test_c5_5_off_manifold_fails(self):
        report = verify(spec("C5_5", c=2, k=5))
        assert report.orders_equal
        assert not report.energies_equal
        assert not report.passed

    def test_c5_5_on_manifold_passes(self):
        for c in (1, 2, 3):
            assert verify(spec("C5_5", c=c, k=2 * c)).passed


class TestBorderenergeticVerification:
    @pytest.mark.parametrize(
        "k,orders,energies",
        [(1, (9, 51), (16.0, 100.0)), (2, (15, 81), (28.0, 160.0)),
         (3, (21, 111), (40.0, 220.0))],
    )
    def test_c6_1(self, k, orders, energies):
        report = verify_borderenergetic(spec("C6_1", k=k), tolerance=1e-8)
        assert report.passed
        assert tuple(m.order for m in report.members) == orders
        for member, expected in zip(report.members, energies):
            assert member.target_energy == pytest.approx(expected)
            assert member.measured_energy == pytest.approx(expected, abs=1e-8)
            assert member.predicted_energy == pytest.approx(expected, abs=1e-8)

    @pytest.mark.parametrize("t,order,expected", [(1, 49, 96.0), (2, 190, 378.0)])
    def test_c6_2(self, t, order, expected):
        report = verify_borderenergetic(spec("C6_2", t=t), tolerance=1e-8)
        assert report.passed
        member = report.members[0]
        assert member.order == order
        assert member.measured_energy == pytest.approx(expected, abs=1e-8)

    def test_c6_3_t1(self):
        report = verify_borderenergetic(spec("C6_3", t=1), tolerance=1e-8)
        assert report.passed
        assert report.members[0].order == 105
        assert report.members[0].measured_energy == pytest.approx(208.0, abs=1e-8)


class TestBasePair:
    def test_canonical_pair_is_equienergetic(self):
        g1, g2 = canonical_equienergetic_pair()
        assert g1.order == g2.order == 5
        assert abs(energy(g1) - energy(g2)) < 1e-10
        assert g1 != g2

    def test_c5_1_default_pair(self):
        report = verify(spec("C5_1", p=2, q=3))
        assert report.passed
        assert len({m.order for m in report.members}) == 1

    def test_c5_1_explicit_pair(self):
        pair = (complete_graph(4), complete_graph(4))
        report = verify(spec("C5_1", base_pair=pair, p=1, q=2))
        assert report.passed

    def test_shadow_splitting_preserves_pair_equienergy(self):
        # the same-operator principle holds for shadow-splitting too: equal
        # base energies give equal operator-graph energies
        g1, g2 = canonical_equienergetic_pair()
        for c, k in [(1, 1), (2, 3), (3, 2)]:
            assert abs(
                energy(shadow_splitting(g1, c, k)) - energy(shadow_splitting(g2, c, k))
            ) < 1e-8

    def test_c5_1_rejects_mismatched_orders(self):
        pair = (complete_graph(3), complete_graph(4))
        with pytest.raises(OutOfDomainError, match="share one order"):
            verify(spec("C5_1", base_pair=pair, p=1, q=1))

    def test_c5_1_rejects_single_base(self):
        with pytest.raises(ValueError, match="base pair"):
            verify(spec("C5_1", base=cycle_graph(4), p=1, q=1))

    def test_single_base_families_reject_pair(self):
        pair = canonical_equienergetic_pair()
        with pytest.raises(ValueError, match="single base"):
            verify(spec("C5_6", base_pair=pair))


class TestMethods:
    def test_formula_only(self):
        report = verify(spec("C5_8", m=1), method="formula")
        assert report.passed
        assert all(m.measured_energy is None for m in report.members)
        assert all(m.predicted_energy is not None for m in report.members)
        assert report.cospectral is None

    def test_oracle_only(self):
        report = verify(spec("C5_8", m=1), method="oracle")
        assert report.passed
        assert all(m.predicted_energy is None for m in report.members)
        assert report.cospectral is not None

    def test_bad_method(self):
        with pytest.raises(ValueError, match="method"):
            verify(spec("C5_6"), method="guess")

    def test_tolerance_propagates(self):
        report = verify(spec("C5_6"), tolerance=1e-3)
        assert report.tolerance == 1e-3
        with pytest.raises(ValueError):
            verify(spec("C5_6"), tolerance=0.0)


class TestCospectralFlags:
    def test_c5_6_on_triangle_base_is_non_cospectral(self):
        # equal energies with distinct spectra at a non-bipartite base
        report = verify(spec("C5_6", base=complete_graph(3)))
        assert report.passed
        assert report.cospectral == [{"pair": [0, 1], "cospectral": False}]

    def test_c5_6_on_bipartite_base_is_cospectral(self):
        # a bipartite base has a sign-symmetric spectrum, which makes the two
        # members cospectral, not merely equienergetic
        report = verify(spec("C5_6", base=cycle_graph(4)))
        assert report.passed
        assert report.cospectral == [{"pair": [0, 1], "cospectral": True}]

    def test_c5_4_members_differ_spectrally(self):
        report = verify(spec("C5_4", p=1, q=2))
        assert report.passed
        assert report.cospectral == [{"pair": [0, 1], "cospectral": False}]


class TestPerfectSquareDiscriminants:
    def test_scale_factors_are_near_integers(self):
        cases = []
        for t in (1, 2):
            for m in (1, 2):
                for k in (1, -1):
                    p1 = (5 * t - 2) ** 2 * m + k * (5 * t - 2)
                    cases.append(split_energy_factor(p1, m))
        for m in (1, 2, 3):
            cases.append(split_energy_factor(2 * m, 8 * m - 2))
            cases.append(split_energy_factor(3 * m + 1, 12 * m + 2))
            cases.append(shadow_split_energy_factor(5 * m + 1, 10 * m + 2))
        for t in (1, 2, 3):
            cases.append(shadow_split_energy_factor(10 * t - 4, 20 * t - 8))
            cases.append(split_energy_factor(6 * t - 2, 24 * t - 10))
            cases.append(shadow_split_energy_factor((t + 1) ** 2, t * (2 * t + 1)))
        for k in (1, 2, 3):
            cases.append(split_energy_factor(k + 1, k))
            cases.append(split_energy_factor(9 * k + 6, k + 1))
        for factor in cases:
            assert abs(factor - round(factor)) < 1e-9


class TestSweep:
    def test_c6_1_five_passes(self):
        reports = sweep("C6_1", {"k": range(1, 6)}, method="oracle")
        assert len(reports) == 5
        assert all(r.passed for r in reports)
        assert all(len(r.members) == 2 for r in reports)

    def test_c5_3_rectangular_grid_skips_out_of_domain(self):
        reports = sweep("C5_3", {"m": [2, 3, 4], "t": [1, 2, 3]}, method="formula")
        assert len(reports) == 9
        verdicts = {(r.parameters["m"], r.parameters["t"]): r.verdict for r in reports}
        assert verdicts[(2, 1)] == "pass"
        assert verdicts[(2, 2)] == "skipped"
        assert verdicts[(4, 3)] == "pass"
        assert sum(v == "pass" for v in verdicts.values()) == 6
        skipped = [r for r in reports if r.verdict == "skipped"]
        assert all(r.error for r in skipped)

    def test_off_manifold_sweep_collects_failures(self):
        reports = sweep("C5_4", {"p": [1, 2], "q": [3, 7]}, method="formula")
        assert [r.verdict for r in reports] == ["fail", "fail", "fail", "fail"]

    def test_parallel_matches_serial(self):
        serial = sweep("C5_5", {"c": [1, 2], "k": [2, 4]}, jobs=1)
        parallel = sweep("C5_5", {"c": [1, 2], "k": [2, 4]}, jobs=4)
        assert [r.to_dict() for r in serial] == [r.to_dict() for r in parallel]

    def test_rejects_empty_range(self):
        with pytest.raises(ValueError, match="empty range"):
            sweep("C6_1", {"k": []})

    def test_rejects_wrong_parameter_names(self):
        with pytest.raises(ValueError, match="ranges for exactly"):
            sweep("C6_1", {"t": [1]})

    def test_parameterless_family_single_point(self):
        reports = sweep("C5_6", {})
        assert len(reports) == 1
        assert reports[0].passed


class TestReportSerialization:
    def test_dict_layout_and_determinism(self):
        report = verify(spec("C6_2", t=1))
        payload = report.to_dict()
        assert list(payload) == [
            "corollary_id", "kind", "parameters", "method", "tolerance", "members",
            "orders_equal", "energies_equal", "cospectral", "verdict", "error",
        ]
        assert payload["corollary_id"] == "C6_2"
        assert payload["kind"] == "borderenergetic"
        assert payload["verdict"] == "pass"
        text_a = jsonio.dumps(payload)
        text_b = jsonio.dumps(verify(spec("C6_2", t=1)).to_dict())
        assert text_a == text_b

    def test_member_dict_fields(self):
        report = verify(spec("C5_6"))
        member = report.to_dict()["members"][0]
        assert list(member) == [
            "description", "order", "predicted_energy", "measured_energy",
            "target_energy",
        ]
        assert member["target_energy"] is None

    def test_skipped_report_shape(self):
        reports = sweep("C5_3", {"m": [1], "t": [1]})
        assert reports[0].verdict == "skipped"
        payload = reports[0].to_dict()
        assert payload["members"] == []
        assert payload["error"]

    def test_table_rendering(self):
        report = verify(spec("C6_1", k=1))
        table = report.to_table()
        assert "C6_1 [borderenergetic]" in table
        assert "verdict: PASS" in table
        assert "splitting(p=2,q=1) of complete(3)" in table
        assert "16" in table and "100" in table
        # the table carries the same verdict and counts as the record
        assert table.count("\n") >= 4

    def test_table_rendering_skipped(self):
        reports = sweep("C5_3", {"m": [1], "t": [1]})
        table = reports[0].to_table()
        assert "SKIPPED" in table
        assert "error:" in table


def test_summaries_cover_all_families():
    for family in FAMILIES.values():
        assert family.summary
        assert family.kind in ("equienergetic", "borderenergetic")
