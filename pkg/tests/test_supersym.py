"""Tests for supersymmetric polynomials and the super-schur tool."""

import runpy
from unittest.mock import patch

import pytest

from src.qschur_calculus.errors import DomainError
from src.qschur_calculus.polysym import schur
from src.qschur_calculus.supersym import (
    basis_check,
    conjugate,
    conjugate_duality_check,
    generating_function_check,
    hook_partitions,
    in_gamma,
    lr_expand,
    lr_tableau,
    run_super_schur,
    specialization_check,
    super_elem,
    super_oracles,
    super_pair,
    super_schur,
    supersymmetry_check,
    vanishing_check,
)


class TestPartitions:
    def test_conjugate(self):
        assert conjugate((2, 1)) == (2, 1)
        assert conjugate((3, 1)) == (2, 1, 1)
        assert conjugate(()) == ()

    def test_hooks(self):
        assert in_gamma((3, 1), 1, 1)
        assert not in_gamma((2, 2), 1, 1)
        assert hook_partitions(3, 1, 0) == [(3,)]
        assert (1, 1, 1) in hook_partitions(3, 0, 1)


class TestSuperSchur:
    def test_super_elem(self):
        pair = super_pair(1, 1)
        (x,), (y,) = pair.X.variables, pair.Y.variables
        assert super_elem(0, pair) == pair.ring.one
        assert super_elem(1, pair) == x - y
        assert super_elem(2, pair) == x**2 - x * y
        assert super_elem(-1, pair) == pair.ring.zero

    def test_reduces_to_schur_without_odd_variables(self):
        pair = super_pair(2, 0)
        assert super_schur((2, 1), pair) == schur((2, 1), pair.X)

    def test_vanishing_outside_the_hook(self):
        assert super_schur((1, 1), super_pair(1, 0)) == 0
        assert super_schur((1, 1), super_pair(1, 1)) != 0

    def test_not_a_partition(self):
        with pytest.raises(DomainError):
            super_schur((1, 2), super_pair(1, 1))

    def test_pair_validation(self):
        pair = super_pair(1, 1)
        with pytest.raises(DomainError):
            type(pair)(pair.X, pair.X)
        with pytest.raises(DomainError):
            super_pair(-1, 0)

    @pytest.mark.parametrize("alpha", [(1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2)])
    def test_identities(self, alpha):
        pair = super_pair(2, 2)
        assert conjugate_duality_check(alpha, pair)
        assert supersymmetry_check(super_schur(alpha, pair), pair)
        assert vanishing_check(alpha, pair)
        assert specialization_check(alpha, 3)

    def test_supersymmetry_needs_both_alphabets(self):
        pair = super_pair(2, 0)
        with pytest.raises(DomainError):
            supersymmetry_check(pair.ring.one, pair)

    def test_basis_and_generating_function(self):
        assert basis_check(2, 1, 3)
        assert generating_function_check(2, 2, 5)


class TestLittlewoodRichardson:
    def test_tableau_rule(self):
        assert lr_tableau((1,), (1,)) == {(2,): 1, (1, 1): 1}
        assert lr_tableau((2, 1), (1,)) == {(3, 1): 1, (2, 2): 1, (2, 1, 1): 1}

    def test_solve_matches_tableaux(self):
        for alpha, beta in [((1,), (1,)), ((2,), (1,)), ((1, 1), (2,)), ((2, 1), (1,))]:
            assert lr_expand(alpha, beta) == lr_tableau(alpha, beta)

    def test_vanishing_terms_drop_out(self):
        assert lr_expand((1,), (1,), super_pair(1, 0)) == {(2,): 1}
        assert lr_expand((1,), (1,), super_pair(0, 0)) == {}


def test_super_oracles_pass():
    report = super_oracles(max_size=1, max_degree=3, max_super_degree=3, max_lr=3)
    assert report.ok
    assert report.tool == "super-schur"


def test_super_oracle_bounds_are_parameters():
    report = super_oracles(max_size=1, max_degree=2, max_super_degree=3, max_lr=4)
    ids = {r.case_id for r in report.results}
    assert "supersymmetry/1/1/3" in ids
    assert "vanishing/1/1/3" not in ids
    assert "littlewood-richardson/21x1" in ids
    assert "littlewood-richardson/2x2" in ids
    assert "littlewood-richardson/21x2" not in ids


@pytest.mark.slow
def test_super_oracles_at_acceptance_bounds():
    report = super_oracles()
    assert report.ok, [r.case_id for r in report.failures()]
    ids = {r.case_id for r in report.results}
    assert "supersymmetry/3/3/2111" in ids
    assert "littlewood-richardson/21x11" in ids
    assert "littlewood-richardson/1x1111" in ids


class TestSuperSchurTool:
    def test_prints_polynomial(self, capsys):
        assert run_super_schur(["1", "1", "(1)"]) == 0
        assert capsys.readouterr().out.strip() == "x1 - y1"

    def test_missing_arguments(self, capsys):
        assert run_super_schur([]) == 2
        assert "required" in capsys.readouterr().err

    def test_check_mode(self, capsys):
        assert run_super_schur(["--check", "--max-degree", "2", "--max-lr", "2"]) == 0
        assert "checks passed" in capsys.readouterr().out

    def test_version(self, capsys):
        assert run_super_schur(["--version"]) == 0
        assert "super-schur" in capsys.readouterr().out

    def test_main_block(self, capsys):
        with patch("sys.argv", ["super-schur", "1", "0", "(2)"]), pytest.raises(SystemExit) as exc:
            runpy.run_module("src.qschur_calculus.supersym", run_name="__main__")
        assert exc.value.code == 0
        assert capsys.readouterr().out.strip() == "x1^2"
