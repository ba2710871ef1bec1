"""Tests for the bimodule 2-representation and its verification suites."""

import pytest

from src.qschur_calculus.bimrep import (
    RELATION_FAMILIES,
    bubble_value,
    check_degree_coherence,
    check_functoriality,
    describe_map,
    divided_power_check,
    eval_diagram,
    first_difference,
    maps_equal,
    relation_suite,
    section,
    thick_bubble,
    thick_bubble_check,
)
from src.qschur_calculus.bimrep import bubbles, suite
from src.qschur_calculus.bimrep.bubbles import label_of
from src.qschur_calculus.bimrep.commands import (
    run_bubble,
    run_check_relations,
    run_divided_power_check,
    run_eval_diagram,
)
from src.qschur_calculus.bimrep.relations import check_sideways
from src.qschur_calculus.bimrep.section import z_ring
from src.qschur_calculus.diagrams import DOWN, UP, build_word, cross_lr, dot_up, sideways_expansion
from src.qschur_calculus.errors import AlphabetSizeError, DomainError
from src.qschur_calculus.polysym import format_poly


def dotted(lam=(0, 2), dots=1):
    return build_word(2, 2, lam, [(1, UP)], [[(dot_up(1, dots), 0)]])


class TestSection:
    def test_single_letter(self):
        sec = section(2, 2, (0, 2), ((1, UP),))
        assert sec.left == (1, 1)
        assert sec.initial == ((0,), (1,))
        assert sec.paths == ((0,),)
        assert sec.shift == 0

    def test_letter_out_of_a_full_strand(self):
        sec = section(2, 2, (1, 1), ((1, UP),))
        assert sec.left == (2, 0)
        assert sec.paths == ((0,), (1,))
        assert sec.source_sizes == (2,)
        assert sec.shift == -1
        assert len(sec.basis) == 2

    def test_boundary_leaving_lambda_has_no_paths(self):
        sec = section(2, 2, (2, 0), ((1, UP),))
        assert not sec.valid
        assert sec.paths == ()
        assert sec.basis == ()

    def test_down_letter_moves_back(self):
        sec = section(2, 2, (1, 1), ((1, DOWN),))
        assert sec.left == (0, 2)
        assert sec.paths == ((0,), (1,))


class TestBubbleValues:
    def test_clockwise_degree_two(self):
        assert format_poly(bubble_value(True, 0, 1, (1, 1), 2)) == "-z1 + z2"

    def test_degree_zero_signs(self):
        # lam_bar = 0 so the degree zero label is -1 for both orientations
        assert bubble_value(True, -1, 1, (1, 1), 2) == -1
        assert bubble_value(False, -1, 1, (1, 1), 2) == 1

    def test_below_degree_zero_vanishes(self):
        assert bubble_value(True, 0, 1, (2, 0), 2) == 0
        assert bubble_value(False, -5, 1, (2, 0), 2) == 0

    @pytest.mark.parametrize("lam", [(1, 1), (2, 0), (0, 2)])
    def test_infinite_grassmannian(self, lam):
        lam_bar = lam[0] - lam[1]
        R, _ = z_ring(2)
        for total in range(1, 4):
            acc = R.zero
            for j in range(total + 1):
                acc += bubble_value(False, label_of(False, j, lam_bar), 1, lam, 2) * bubble_value(
                    True, label_of(True, total - j, lam_bar), 1, lam, 2
                )
            assert acc == 0

    def test_bad_colour(self):
        with pytest.raises(DomainError, match="colour"):
            bubble_value(True, 0, 2, (1, 1), 2)

    def test_region_outside_lambda(self):
        with pytest.raises(DomainError, match="Lambda"):
            bubble_value(True, 0, 1, (3, -1), 2)

    def test_thick_bubble_of_thickness_one(self):
        assert thick_bubble(True, 1, (1,), 1, (1, 1), 2) == bubble_value(True, 0, 1, (1, 1), 2)

    def test_thick_bubble_validation(self):
        with pytest.raises(DomainError):
            thick_bubble(True, 0, (), 1, (1, 1), 2)
        with pytest.raises(DomainError, match="parts"):
            thick_bubble(True, 1, (1, 1), 1, (1, 1), 2)

    def test_thick_bubble_check(self):
        report = thick_bubble_check(max_m=2, max_size=2, max_total=3, max_lr=4)
        assert report.ok, [(r.case_id, r.witness) for r in report.failures()]
        assert {r.relation_id for r in report.results} >= {
            "thick-superschur",
            "thick-vanishing",
            "thick-conjugate",
            "thick-lr",
        }
        lr = [r for r in report.results if r.relation_id == "thick-lr"]
        assert "thick-lr/2-1/11x11" in {r.case_id for r in lr}
        assert all(r.status == "pass" for r in lr)

    def test_degenerate_lr_basis_is_skipped(self, monkeypatch):
        def degenerate(*args):
            raise AlphabetSizeError("degenerate basis")

        monkeypatch.setattr(bubbles, "lr_expand", degenerate)
        report = thick_bubble_check(max_m=1, max_size=1, max_total=1, max_lr=2)
        lr = [r for r in report.results if r.relation_id == "thick-lr"]
        assert len(lr) == 2
        assert {(r.status, r.witness) for r in lr} == {("info", "degenerate basis")}
        assert report.ok


class TestEvaluation:
    def test_dot_multiplies_by_moved_variable(self):
        m = eval_diagram(dotted())
        assert list(describe_map(m)) == ["(0,) -> {(0,): z1}"]
        assert m.degree == 2

    def test_maps_compare(self):
        w = dotted()
        assert maps_equal(eval_diagram(w), eval_diagram(w))
        diff = first_difference(eval_diagram(w), eval_diagram(w.scaled(2)))
        assert diff is not None and "basis (0,)" in diff

    def test_invalid_source_gives_zero_map(self):
        m = eval_diagram(dotted(lam=(2, 0)))
        assert m.source.basis == ()
        assert m.is_zero

    def test_same_colour_sideways_crossing(self):
        atom = cross_lr(1, 1)
        m = eval_diagram(build_word(2, 2, (1, 1), atom.bottom, [[(atom, 0)]]))
        one = m.target.ring.one
        z = m.target.z
        assert [e for e, _ in m.source.basis] == [(0, 0), (0, 1)]
        assert m.images == ({(1, 0): one, (1, 1): one}, {(1, 0): z[1], (1, 1): z[0]})
        assert m.degree == 0

    def test_different_colour_sideways_crossing_relabels(self):
        atom = cross_lr(1, 2)
        m = eval_diagram(build_word(3, 2, (0, 2, 0), atom.bottom, [[(atom, 0)]]))
        assert m.images == ({(1, 0): m.target.ring.one},)

    @pytest.mark.parametrize("variant", [1, 2])
    @pytest.mark.parametrize("lam", [(1, 1), (2, 0)])
    def test_sideways_crossing_matches_both_expansions(self, variant, lam):
        atom = cross_lr(1, 1)
        primitive = build_word(2, 2, lam, atom.bottom, [[(atom, 0)]])
        expanded = build_word(2, 2, lam, atom.bottom, sideways_expansion(atom, 0, variant))
        assert maps_equal(eval_diagram(primitive), eval_diagram(expanded))

    @pytest.mark.parametrize(
        "n, lam, kind, a, b",
        [
            (2, (1, 1), "xLR", 1, 1),
            (2, (1, 1), "xRL", 1, 1),
            (2, (0, 2), "xRL", 1, 1),
            (3, (0, 2, 0), "xLR", 1, 2),
            (3, (0, 2, 0), "xRL", 2, 1),
        ],
    )
    def test_sideways_check(self, n, lam, kind, a, b):
        assert check_sideways(n, 2, lam, kind, a, b, 3, 0) is None


class TestSuites:
    def test_family_names(self):
        assert list(RELATION_FAMILIES) == [
            "biadjoint",
            "cyclic",
            "sideways",
            "bubbles",
            "curls",
            "EF",
            "nilhecke",
            "mixed",
            "r3",
            "bubble-slides",
        ]

    def test_relation_suite_smallest_case(self, run_config):
        report = relation_suite(run_config(2, 1))
        assert report.tool == "check-relations"
        assert report.total > 0
        assert report.ok, [r.case_id for r in report.failures()]

    def test_ef_family(self, run_config):
        report = relation_suite(run_config(2, 2, "EF"))
        assert report.total > 0
        assert report.ok, [r.case_id for r in report.failures()]

    def test_unknown_family(self, run_config):
        with pytest.raises(DomainError, match="unknown relation families: nope"):
            relation_suite(run_config(2, 2, "nope"))

    def test_twisted_bubble_needs_three_strands(self, run_config):
        report = relation_suite(run_config(3, 1, "bubbles"))
        twisted = [r for r in report.results if r.relation_id == "twisted"]
        assert [r.parameters["lam"] for r in twisted] == [[0, 1, 0]]
        assert report.ok, [(r.case_id, r.witness) for r in report.failures()]

    def test_same_colour_clockwise_bubble_slides(self, run_config):
        report = relation_suite(run_config(2, 2, "bubble-slides"))
        same = {
            r.parameters["m"]
            for r in report.results
            if r.relation_id == "cw-0" and r.parameters["i"] == r.parameters["j"]
        }
        assert same == {0, 1, 2, 3}
        assert report.ok, [(r.case_id, r.witness) for r in report.failures()]

    @pytest.mark.slow
    @pytest.mark.parametrize("n, d", [(2, 2), (2, 3), (3, 1), (3, 2), (3, 3)])
    def test_full_relation_suite(self, run_config, n, d):
        report = relation_suite(run_config(n, d))
        assert report.ok, [(r.case_id, r.witness) for r in report.failures()]

    def test_degree_coherence(self):
        report = check_degree_coherence(2, 2)
        assert report.total > 0
        assert report.ok, [(r.case_id, r.witness) for r in report.failures()]

    def test_functoriality(self):
        report = check_functoriality(2, 2, samples=4)
        assert report.total == 4
        assert report.ok, [(r.case_id, r.witness) for r in report.failures()]

    def test_functoriality_compares_on_the_random_panel(self, monkeypatch):
        seen = []
        compare = suite.first_difference

        def spy(f, g, panel_size=3, seed=0):
            seen.append((panel_size, seed))
            return compare(f, g, panel_size, seed)

        monkeypatch.setattr(suite, "first_difference", spy)
        report = check_functoriality(2, 2, seed=3, samples=2, panel_size=5)
        assert report.ok
        assert set(seen) == {(5, 3)}
        assert report.results[0].parameters["panel_size"] == 5


class TestDividedPowers:
    def test_above_threshold_vanishes(self):
        report = divided_power_check(1, UP, 2, (1, 1), 2, 2)
        assert report.ok
        ids = {r.case_id for r in report.results}
        assert "vanishing/plus/11/i1/m2" in ids
        assert not any(i.startswith("rank/") for i in ids)

    def test_rank_identity(self):
        report = divided_power_check(1, UP, 2, (0, 2), 2, 2, max_degree=4)
        assert report.ok, [(r.case_id, r.witness) for r in report.failures()]
        assert "rank/plus/02/i1/m2" in {r.case_id for r in report.results}

    def test_idempotency_compares_on_the_random_panel(self, monkeypatch):
        seen = []
        compare = suite.first_difference

        def spy(f, g, panel_size=3, seed=0):
            seen.append((panel_size, seed))
            return compare(f, g, panel_size, seed)

        monkeypatch.setattr(suite, "first_difference", spy)
        report = divided_power_check(1, UP, 1, (0, 2), 2, 2, max_degree=2, panel_size=4, seed=1)
        assert report.ok
        assert seen == [(4, 1)]

    def test_idempotency_defaults_to_a_panel(self, monkeypatch):
        seen = []
        compare = suite.first_difference

        def spy(f, g, panel_size=3, seed=0):
            seen.append(panel_size)
            return compare(f, g, panel_size, seed)

        monkeypatch.setattr(suite, "first_difference", spy)
        divided_power_check(1, DOWN, 1, (1, 1), 2, 2, max_degree=2)
        assert seen == [3]

    def test_thickness_range(self):
        with pytest.raises(DomainError, match="1 <= m <= 3"):
            divided_power_check(1, UP, 4, (0, 2), 2, 2)


class TestCommands:
    def test_check_relations(self, capsys):
        assert run_check_relations(["2", "1", "--family", "EF", "-j", "1"]) == 0
        assert "All" in capsys.readouterr().out

    def test_list_families(self, capsys):
        assert run_check_relations(["2", "2", "--list-families"]) == 0
        out = capsys.readouterr().out.split()
        assert out == list(RELATION_FAMILIES)

    def test_unknown_family(self, capsys):
        assert run_check_relations(["2", "2", "-f", "nope", "-j", "1"]) == 2
        assert "unknown relation families" in capsys.readouterr().err

    def test_json_report(self, tmp_path):
        out = tmp_path / "report.json"
        assert run_check_relations(["2", "1", "-f", "biadjoint", "-j", "1", "--json", str(out)]) == 0
        assert '"tool": "check-relations"' in out.read_text(encoding="utf-8")

    def test_eval_diagram(self, capsys, diagram_file, sample_words):
        path = diagram_file(sample_words["dotted"])
        assert run_eval_diagram([str(path)]) == 0
        out = capsys.readouterr().out
        assert "degree  2" in out
        assert "(0,) -> {(0,): z1}" in out

    def test_eval_diagram_missing_file(self, capsys, tmp_path):
        assert run_eval_diagram([str(tmp_path / "missing.txt")]) == 2
        assert "Error" in capsys.readouterr().err

    def test_bubble(self, capsys):
        assert run_bubble(["--cw", "-r", "0", "-i", "1", "--lambda", "(1,1)"]) == 0
        assert capsys.readouterr().out.strip() == "-z1 + z2"

    def test_bubble_needs_orientation(self):
        assert run_bubble(["-r", "0", "-i", "1", "--lambda", "(1,1)"]) == 2

    def test_divided_power_single_weight(self, capsys):
        assert run_divided_power_check(["2", "2", "--lambda", "(1,1)"]) == 0

    def test_divided_power_outside_lambda(self, capsys):
        assert run_divided_power_check(["2", "2", "--lambda", "(3,0)"]) == 2
        assert "is not in Lambda(2,2)" in capsys.readouterr().err

    def test_divided_power_bad_sign(self):
        assert run_divided_power_check(["2", "2", "--sign", "x"]) == 2
