"""Tests for Soergel words, the functor into S(n,d) and the Soergel suites."""

from fractions import Fraction

import pytest

from src.qschur_calculus.bimrep import section
from src.qschur_calculus.diagrams import DOWN, UP
from src.qschur_calculus.errors import (
    CompositionError,
    DomainError,
    TextFormatError,
    ValidationError,
)
from src.qschur_calculus.soergel import (
    SOERGEL_FAMILIES,
    SOERGEL_RELATIONS,
    SoergelAtom,
    SoergelSum,
    SoergelWord,
    base_weight,
    box_normalize,
    box_normalize_check,
    box_polynomial,
    build_soergel,
    compose_soergel,
    format_soergel_word,
    load_soergel_word,
    oracle_check,
    oracle_map,
    parse_soergel_word,
    sigma,
    sigma_letters,
    soergel_check,
    soergel_relation_suite,
    tensor,
)
from src.qschur_calculus.soergel.commands import run_soergel_check
from src.qschur_calculus.soergel.oracle import oracle_witness
from src.qschur_calculus.soergel.relations import check_soergel_relation, colour_tuples
from src.qschur_calculus.soergel.sigma import box_ring
from src.qschur_calculus.soergel.words import (
    box,
    end_dot,
    four,
    line,
    max_colour,
    merge,
    six,
    start_dot,
)


def barbell(n=3, d=3, i=1):
    return build_soergel(n, d, (), [[(start_dot(i), 0)], [(end_dot(i), 0)]])


class TestAtoms:
    def test_boundaries(self):
        assert six(1, 2).bottom == (1, 2, 1)
        assert six(1, 2).top == (2, 1, 2)
        assert four(1, 3).top == (3, 1)
        assert merge(2).bottom == (2, 2)
        assert start_dot(1).bottom == ()

    def test_degrees(self):
        assert [a.degree for a in (start_dot(1), merge(1), four(1, 3), box(1))] == [1, -1, 0, 2]

    @pytest.mark.parametrize(
        "kind, colours",
        [("zig", (1,)), ("line", (1, 2)), ("four", (1, 2)), ("six", (1, 3))],
    )
    def test_rejects(self, kind, colours):
        with pytest.raises(ValidationError):
            SoergelAtom(kind, colours)

    def test_str(self):
        assert str(six(2, 1)) == "six(2,1)"


class TestWords:
    def test_max_colour(self):
        assert max_colour(4, 4) == 3
        assert max_colour(4, 2) == 1

    def test_sizes(self):
        with pytest.raises(DomainError, match="1 <= d <= n"):
            SoergelWord(2, 3, ())
        with pytest.raises(ValidationError, match="outside 1..2"):
            SoergelWord(3, 3, (3,))

    def test_boxes_need_d_below_n(self):
        with pytest.raises(DomainError, match="d < n"):
            SoergelWord(3, 3, (), ((box(1),),))
        with pytest.raises(ValidationError, match="box 3"):
            SoergelWord(3, 2, (), ((box(3),),))

    def test_barbell(self):
        w = barbell()
        assert w.boundaries == ((), (1,), ())
        assert w.degree == 2

    def test_misfit(self):
        with pytest.raises(ValidationError, match="does not fit"):
            SoergelWord(3, 3, (1, 2), ((merge(1),),))

    def test_lines_fill_gaps(self):
        w = build_soergel(4, 4, (1, 3, 1), [[(four(3, 1), 1)]])
        assert w.slices == ((line(1), four(3, 1)),)
        assert w.top == (1, 1, 3)

    def test_overlap(self):
        with pytest.raises(ValidationError):
            build_soergel(3, 3, (1, 1), [[(merge(1), 0), (end_dot(1), 1)]])

    def test_compose(self):
        start = build_soergel(3, 3, (), [[(start_dot(1), 0)]])
        end = build_soergel(3, 3, (1,), [[(end_dot(1), 0)]], coeff=3)
        w = compose_soergel(end, start)
        assert w.top == ()
        assert w.degree == 2
        assert w.coeff == 3
        with pytest.raises(CompositionError) as exc:
            compose_soergel(start, start)
        assert exc.value.position == 0

    def test_tensor_pads_with_lines(self):
        start = build_soergel(3, 3, (), [[(start_dot(1), 0)]])
        w = tensor(start, SoergelWord.identity(3, 3, (2,)))
        assert w.bottom == (2,)
        assert w.top == (1, 2)
        assert w.slices == ((start_dot(1), line(2)),)

    def test_sums(self):
        w = barbell()
        s = SoergelSum.of(w, w.scaled(2)) - w
        assert len(s.terms) == 3
        assert s.degrees() == {2}
        with pytest.raises(ValidationError, match="not parallel"):
            SoergelSum.of(w, SoergelWord.identity(3, 3, (1,)))
        with pytest.raises(DomainError):
            SoergelSum.of()


class TestTextForm:
    def test_parse_and_format(self, sample_words):
        w = parse_soergel_word(sample_words["six"])
        assert w.bottom == (1, 2, 1)
        assert w.top == (2, 1, 2)
        text = format_soergel_word(w)
        assert text == "n=3, d=3, coeff=1, bottom=[1,2,1]\nsix(1,2)\n"
        assert parse_soergel_word(text) == w

    def test_coefficient(self):
        w = parse_soergel_word("n=3, d=3, coeff=-1/2, bottom=[1]\nendDot(1)\n")
        assert w.coeff == Fraction(-1, 2)

    def test_unknown_atom_reports_line(self):
        with pytest.raises(TextFormatError, match="line 3") as exc:
            parse_soergel_word("n=3, d=3, bottom=[1]\nline(1)\nzap(1)\n")
        assert exc.value.line == 3

    def test_header_errors(self):
        with pytest.raises(TextFormatError, match="missing d"):
            parse_soergel_word("n=3\n")
        with pytest.raises(TextFormatError, match="no header"):
            parse_soergel_word("# empty\n")
        with pytest.raises(TextFormatError, match="bad colour list"):
            parse_soergel_word("n=3, d=3, bottom=[a]\n")

    def test_structure_errors_become_format_errors(self):
        with pytest.raises(TextFormatError, match="does not fit"):
            parse_soergel_word("n=3, d=3, bottom=[1]\nmerge(1)\n")

    def test_load(self, diagram_file, sample_words):
        w = load_soergel_word(diagram_file(sample_words["barbell"]))
        assert w.degree == 2


class TestSigma:
    def test_letters_and_weight(self):
        assert sigma_letters((1, 2)) == ((1, DOWN), (1, UP), (2, DOWN), (2, UP))
        assert base_weight(3, 2) == (1, 1, 0)

    def test_image_keeps_degree(self):
        image = sigma(barbell())
        assert image.degrees() == {2}
        assert image.lam == (1, 1, 1)

    def test_six_has_degree_zero(self, sample_words):
        image = sigma(parse_soergel_word(sample_words["six"]))
        assert image.degrees() == {0}
        assert image.bottom == sigma_letters((1, 2, 1))
        assert image.top == sigma_letters((2, 1, 2))

    @pytest.mark.parametrize("n, atom", [(3, six(1, 2)), (3, six(2, 1)), (4, four(1, 3))])
    def test_vertex_images_are_unscaled(self, n, atom):
        image = sigma(SoergelWord(n, n, atom.bottom, ((atom,),)))
        assert [t.coeff for t in image.terms] == [1]
        assert image.degrees() == {0}

    def test_box_is_a_bubble_sum(self):
        w = SoergelWord(3, 2, (), ((box(1),),))
        image = sigma(w)
        assert len(image.terms) == 2
        assert image.degrees() == {2}


class TestBoxes:
    @pytest.fixture
    def x(self):
        return box_ring(2).gens

    def test_normalize_monomials(self, x):
        x1, x2 = x
        assert box_normalize(x1, 1) == (0, 1)
        assert box_normalize(x2, 1) == (x1 + x2, -1)
        assert box_normalize(x1**2, 1) == (-x1 * x2, x1 + x2)

    def test_normalize_range(self, x):
        with pytest.raises(DomainError, match="box index 2"):
            box_normalize(x[0], 2)

    def test_normalize_check(self):
        report = box_normalize_check(3, 2)
        assert report.total == 5
        assert report.ok
        assert box_normalize_check(3, 3).total == 0

    def test_box_polynomial(self, x):
        x1, x2 = x
        s = box_polynomial(x1 * x2 + 2, 3, 2, (1,), 0)
        assert len(s.terms) == 2
        assert s.degrees() == {0, 4}
        assert {t.coeff for t in s.terms} == {1, 2}


class TestRelations:
    def test_catalogue(self):
        assert list(SOERGEL_FAMILIES) == [
            "isotopy",
            "one-colour",
            "distant",
            "adjacent",
            "three-colour",
            "derived",
            "boxes",
            "grading",
        ]
        families = {family for family, _, _ in SOERGEL_RELATIONS.values()}
        assert families == set(SOERGEL_FAMILIES) - {"grading"}

    def test_colour_tuples(self):
        assert list(colour_tuples("distant", 3, 3)) == []
        assert list(colour_tuples("adjacent", 3, 3)) == [(1, 2), (2, 1)]
        assert list(colour_tuples("middle", 4, 4)) == [(2,)]
        assert list(colour_tuples("box", 3, 3)) == []
        assert list(colour_tuples("box-distant", 4, 3)) == [(1, 3), (2, 1)]
        with pytest.raises(DomainError, match="unknown colour pattern"):
            list(colour_tuples("weird", 3, 3))

    @pytest.mark.parametrize(
        "name, colours",
        [
            ("adjunction-left", (1,)),
            ("dot-rotation-up", (1,)),
            ("needle", (1,)),
            ("lollipop", (1,)),
            ("barbell-forcing", (1,)),
        ],
    )
    def test_one_colour_relations(self, name, colours):
        assert check_soergel_relation(2, 2, name, colours, 1, 0) is None

    def test_suite_domain(self, run_config):
        with pytest.raises(DomainError, match="d <= n"):
            soergel_relation_suite(run_config(2, 3))
        with pytest.raises(DomainError, match="unknown Soergel families"):
            soergel_relation_suite(run_config(2, 2, "nope"))

    def test_family_selection_skips_oracle(self, run_config):
        report = soergel_check(run_config(2, 2, "one-colour"))
        assert report.tool == "soergel-check"
        assert report.total > 0
        assert all(r.case_id.startswith("one-colour/") for r in report.results)
        assert report.ok, [(r.case_id, r.witness) for r in report.failures()]

    @pytest.mark.slow
    @pytest.mark.parametrize("n, d", [(3, 3), (3, 2), (4, 4), (4, 3)])
    def test_full_suite(self, run_config, n, d):
        report = soergel_check(run_config(n, d))
        assert report.ok, [(r.case_id, r.witness) for r in report.failures()]


class TestOracle:
    def test_small_case(self):
        report = oracle_check(2, 2)
        assert report.tool == "soergel-oracle"
        assert "oracle/startDot(1)/empty@0" in {r.case_id for r in report.results}
        assert report.ok, [(r.case_id, r.witness) for r in report.failures()]

    @pytest.mark.parametrize("atom", [six(1, 2), six(2, 1)])
    def test_six_valent_vertex_on_the_whole_basis(self, atom):
        assert oracle_witness(atom, 0, atom.bottom, 3, 3) is None

    def test_six_valent_direct_map_keeps_the_unit(self):
        atom = six(2, 1)
        source = section(3, 3, (1, 1, 1), sigma_letters(atom.bottom))
        target = section(3, 3, (1, 1, 1), sigma_letters(atom.top))
        assert oracle_map(atom, 0, atom.bottom, 3, 3, source.one()) == target.one()

    def test_six_valent_direct_map_moves_a_dot_to_the_right(self):
        atom = six(1, 2)
        source = section(3, 3, (1, 1, 1), sigma_letters(atom.bottom))
        target = section(3, 3, (1, 1, 1), sigma_letters(atom.top))
        image = oracle_map(atom, 0, atom.bottom, 3, 3, source.monomial((0, 1, 0, 0, 0, 0)))
        assert image == target.monomial((0, 0, 0, 0, 0, 1))

    @pytest.mark.slow
    @pytest.mark.parametrize("n, d", [(3, 3), (3, 2)])
    def test_with_six_vertices_and_boxes(self, n, d):
        report = oracle_check(n, d)
        assert report.ok, [(r.case_id, r.witness) for r in report.failures()]


class TestCommand:
    def test_list_families(self, capsys):
        assert run_soergel_check(["3", "3", "--list-families"]) == 0
        assert capsys.readouterr().out.split() == list(SOERGEL_FAMILIES)

    def test_family_run(self, capsys):
        assert run_soergel_check(["2", "2", "-f", "isotopy", "-j", "1", "--no-oracle"]) == 0
        out = capsys.readouterr().out
        assert "S(2,2), no boxes" in out
        assert "All" in out

    def test_word(self, capsys, diagram_file, sample_words):
        path = diagram_file(sample_words["six"])
        assert run_soergel_check(["3", "3", "--word", str(path)]) == 0
        out = capsys.readouterr().out
        assert "bottom  [1,2,1]" in out
        assert "top     [2,1,2]" in out
        assert "degree  0" in out
        assert "# term 0" in out

    def test_d_above_n(self, capsys):
        assert run_soergel_check(["2", "3", "-j", "1"]) == 2
        assert "d <= n" in capsys.readouterr().err

    def test_bad_word_file(self, capsys, diagram_file):
        path = diagram_file("n=3, d=3, bottom=[1]\nwobble(1)\n")
        assert run_soergel_check(["3", "3", "--word", str(path)]) == 2
        assert "line 2" in capsys.readouterr().err
