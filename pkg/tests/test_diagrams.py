"""Tests for diagram words, their composition and their text forms."""

import json
from fractions import Fraction

import pytest

from src.qschur_calculus.diagrams import (
    DOWN,
    UP,
    Atom,
    DiagramSum,
    DiagramWord,
    atom_degree,
    bubble,
    build_word,
    cap_ef,
    cap_fe,
    compose_h,
    compose_sums,
    compose_v,
    cross_lr,
    cross_uu,
    cup_ef,
    cup_fe,
    degree,
    divided_power_idempotent,
    dot_down,
    dot_up,
    find_bubbles,
    format_word,
    id_up,
    is_zero_by_label,
    load_word,
    parse_word,
    rotate180,
    sideways_expansion,
    sl_sign_translate,
    word_from_json,
    word_to_json,
)
from src.qschur_calculus.errors import CompositionError, DomainError, TextFormatError, ValidationError


def up_strand(lam=(0, 2), dots=1):
    return build_word(2, 2, lam, [(1, UP)], [[(dot_up(1, dots), 0)]])


class TestAtoms:
    def test_boundaries(self):
        assert cross_lr(1, 2).bottom == ((1, UP), (2, DOWN))
        assert cross_lr(1, 2).top == ((2, DOWN), (1, UP))
        assert cup_fe(1).bottom == ()
        assert cup_fe(1).top == ((1, UP), (1, DOWN))

    def test_validation(self):
        with pytest.raises(ValidationError):
            Atom("loop", (1,))
        with pytest.raises(ValidationError):
            Atom("xUU", (1,))
        with pytest.raises(ValidationError):
            Atom("dotU", (1,), -1)

    def test_zero_dots_is_the_identity(self):
        assert dot_up(1, 0) == id_up(1)
        assert dot_down(2, 0).kind == "D"

    def test_degrees(self):
        assert atom_degree(dot_up(1, 2), (1, 1)) == 4
        assert atom_degree(cross_uu(1, 1), (1, 1)) == -2
        assert atom_degree(cross_uu(1, 2), (1, 1, 1)) == 1
        assert atom_degree(cup_ef(1), (2, 0)) == 3
        assert atom_degree(cup_fe(1), (2, 0)) == -1
        assert atom_degree(bubble(1, 0, True), (1, 1)) == 2

    def test_rotation_and_text(self):
        assert cup_ef(1).rotated().kind == "capEF"
        assert str(bubble(1, -2, False)) == "bubble(1,-2,ccw)"
        assert str(dot_up(2, 3)) == "dotU(2,3)"


class TestWords:
    def test_build_fills_identities(self):
        w = build_word(3, 2, (1, 0, 1), [(1, UP), (2, DOWN)], [[(dot_up(1), 0)]])
        assert [str(a) for a in w.slices[0]] == ["dotU(1,1)", "D(2)"]
        assert w.top == w.bottom

    def test_regions(self):
        w = up_strand()
        assert w.left_region == (1, 1)
        assert w.level_regions(0) == ((1, 1), (0, 2))
        assert degree(w) == 2
        assert w.target.shift == 2

    def test_atom_must_fit(self):
        with pytest.raises(ValidationError):
            DiagramWord(2, 2, (1, 1), ((1, UP),), ((id_up(1), id_up(1)),))
        with pytest.raises(ValidationError):
            build_word(2, 2, (1, 1), [(1, UP)], [[(cap_fe(1), 0)]])

    def test_overlapping_atoms(self):
        with pytest.raises(ValidationError):
            build_word(2, 2, (1, 1), [(1, UP), (1, UP)], [[(cross_uu(1, 1), 0), (dot_up(1), 1)]])

    def test_compose_v(self):
        w = up_strand()
        twice = compose_v(w, w.scaled(3))
        assert len(twice.slices) == 2
        assert twice.coeff == 3
        assert degree(twice) == 4

    def test_compose_v_mismatch(self):
        down = build_word(2, 2, (1, 1), [(1, DOWN)], [[(dot_down(1), 0)]])
        with pytest.raises(CompositionError) as exc:
            compose_v(down, up_strand(lam=(1, 1)))
        assert exc.value.position == 0
        with pytest.raises(CompositionError):
            compose_v(up_strand(lam=(1, 1)), up_strand())

    def test_compose_h(self):
        right = up_strand()
        left = build_word(2, 2, right.left_region, [], [[(bubble(1, 0, True), 0)]])
        both = compose_h(left, right)
        assert both.bottom == ((1, UP),)
        assert [len(s) for s in both.slices] == [2]
        with pytest.raises(CompositionError):
            compose_h(right, right)

    def test_rotate180(self):
        w = up_strand()
        turned = rotate180(w)
        assert turned.bottom == ((1, DOWN),)
        assert turned.lam == (1, 1)
        assert str(turned.slices[0][0]) == "dotD(1,1)"
        assert rotate180(turned) == w

    @pytest.mark.parametrize("lam, expected", [((1, 1), 1), ((0, 2), -1)])
    def test_sl_sign_of_left_cup(self, lam, expected):
        w = build_word(2, 2, lam, [], [[(cup_fe(1), 0)]])
        same, sign = sl_sign_translate(w)
        assert same == w
        assert sign == expected

    def test_sl_sign_of_left_cap_only(self):
        w = build_word(2, 2, (1, 1), [], [[(cup_ef(1), 0)], [(cap_ef(1), 0)]])
        assert sl_sign_translate(w)[1] == -1


class TestBubbles:
    def test_literal_bubble(self, sample_words):
        w = parse_word(sample_words["cup_cap"])
        (found,) = find_bubbles(w)
        assert found.clockwise
        assert found.dots == 0
        assert found.outside == (1, 1)
        assert found.degree == degree(w) == 2
        assert not is_zero_by_label(w)

    def test_dotted_loop(self):
        w = build_word(
            2, 2, (1, 1), [], [[(cup_ef(1), 0)], [(dot_down(1, 2), 0)], [(cap_ef(1), 0)]]
        )
        (found,) = find_bubbles(w)
        assert not found.clockwise
        assert found.dots == 2

    def test_zero_by_label(self):
        assert is_zero_by_label(up_strand(lam=(2, 0)))
        assert is_zero_by_label(up_strand().scaled(0))
        assert not is_zero_by_label(up_strand())


class TestSums:
    def test_parallel_terms(self):
        w = up_strand()
        s = DiagramSum.of(w, w.scaled(2)) - w
        assert len(s.terms) == 3
        assert s.degrees() == {2}
        with pytest.raises(ValidationError):
            DiagramSum.of(w, rotate180(w))

    def test_empty_sum_needs_boundaries(self):
        with pytest.raises(DomainError):
            DiagramSum.of()
        assert DiagramSum.zero(up_strand()).terms == ()

    def test_compose_sums(self):
        w = up_strand()
        s = compose_sums(DiagramSum.of(w, w), DiagramSum.of(w, w, w))
        assert len(s.terms) == 6


class TestDividedPowers:
    def test_shape(self):
        e = divided_power_idempotent(1, UP, 2, (0, 2), 2, 2)
        assert e.bottom == e.top == ((1, UP), (1, UP))
        assert e.shift == -1
        assert degree(e) == 0
        assert [str(a) for a in e.slices[-1]] == ["dotU(1,1)", "U(1)"]

    def test_down_sign(self):
        e = divided_power_idempotent(1, DOWN, 2, (2, 0), 2, 2)
        assert e.coeff == -1
        assert divided_power_idempotent(1, DOWN, 1, (1, 1), 2, 2).slices == ()

    def test_bad_thickness(self):
        with pytest.raises(DomainError):
            divided_power_idempotent(1, UP, 0, (1, 1), 2, 2)


class TestSideways:
    def test_expansion_keeps_boundaries(self):
        atom = cross_lr(1, 1)
        for variant in (1, 2):
            steps = sideways_expansion(atom, 0, variant)
            w = build_word(2, 2, (1, 1), atom.bottom, steps)
            assert w.top == atom.top

    def test_not_sideways(self):
        with pytest.raises(DomainError):
            sideways_expansion(cross_uu(1, 1), 0)


class TestTextForms:
    def test_parse_and_format(self, sample_words):
        w = parse_word(sample_words["dotted"])
        assert w.lam == (0, 2)
        assert w.bottom == ((1, UP),)
        assert format_word(w) == (
            "n=2, d=2, lambda=(0,2), shift=0, coeff=1, bottom=[+1]\ndotU(1,1)\n"
        )
        assert parse_word(format_word(w)) == w

    def test_missing_header_field(self):
        with pytest.raises(TextFormatError, match="line 1: header is missing lambda"):
            parse_word("n=2, d=2\nU(1)\n")

    def test_bad_atom_reports_line(self):
        with pytest.raises(TextFormatError) as exc:
            parse_word("n=2, d=2, lambda=(1,1), bottom=[+1]\n\nwobble(1)\n")
        assert exc.value.line == 3

    def test_bad_letters_and_empty_text(self):
        with pytest.raises(TextFormatError):
            parse_word("n=2, d=2, lambda=(1,1), bottom=[*1]\n")
        with pytest.raises(TextFormatError):
            parse_word("# nothing here\n")

    def test_invalid_word_is_a_format_error(self):
        with pytest.raises(TextFormatError):
            parse_word("n=2, d=2, lambda=(1,1), bottom=[+1]\nD(1)\n")

    def test_json_mirror(self, tmp_path):
        w = up_strand().scaled(Fraction(1, 2))
        data = word_to_json(w)
        assert data["coeff"] == "1/2"
        assert word_from_json(data) == w
        path = tmp_path / "w.json"
        path.write_text(json.dumps(data))
        assert load_word(path) == w

    def test_bad_json(self, tmp_path):
        path = tmp_path / "w.json"
        path.write_text("{not json")
        with pytest.raises(TextFormatError):
            load_word(path)
        with pytest.raises(TextFormatError):
            word_from_json({"n": 2})

    def test_load_text(self, diagram_file, sample_words):
        assert load_word(diagram_file(sample_words["cup_cap"])).slices[0][0].kind == "cupFE"
