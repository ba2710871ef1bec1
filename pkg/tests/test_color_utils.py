"""Test color utility functionality."""

import pytest
from colorama import Fore, Style

from src.qschur_calculus.utils.color_utils import colour_str, status_str


class TestColourStr:
    """Test cases for the colour_str class."""

    def test_initialization(self):
        cs = colour_str("test")
        assert cs.s == "test"
        assert cs.codes == []

    def test_no_colors_string_conversion(self):
        assert str(colour_str("test")) == "test"

    def test_single_colors(self):
        assert str(colour_str("t").red()) == f"{Fore.RED}t{Style.RESET_ALL}"
        assert str(colour_str("t").green()) == f"{Fore.GREEN}t{Style.RESET_ALL}"
        assert str(colour_str("t").yellow()) == f"{Fore.YELLOW}t{Style.RESET_ALL}"
        assert str(colour_str("t").cyan()) == f"{Fore.CYAN}t{Style.RESET_ALL}"

    def test_style_modifiers(self):
        assert str(colour_str("t").dim()) == f"{Style.DIM}t{Style.RESET_ALL}"
        assert str(colour_str("t").bright()) == f"{Style.BRIGHT}t{Style.RESET_ALL}"

    def test_color_chaining(self):
        """Codes are applied in the order they were added."""
        result = str(colour_str("test").red().bright())
        assert result == f"{Fore.RED}{Style.BRIGHT}test{Style.RESET_ALL}"

    def test_method_chaining_returns_self(self):
        cs = colour_str("test")
        assert cs.red() is cs
        assert cs.dim() is cs

    def test_unicode_string(self):
        text = "✅ All 12 checks passed."
        assert str(colour_str(text).green()) == f"{Fore.GREEN}{text}{Style.RESET_ALL}"


class TestStatusStr:
    def test_pass_badge(self):
        assert str(status_str("pass")) == f"{Fore.GREEN}PASS{Style.RESET_ALL}"

    def test_fail_badge(self):
        result = str(status_str("fail"))
        assert result == f"{Fore.RED}{Style.BRIGHT}FAIL{Style.RESET_ALL}"

    def test_info_badge(self):
        assert "INFO" in str(status_str("info"))
        assert Fore.CYAN in str(status_str("info"))

    def test_unknown_status_shows_info(self):
        assert str(status_str("skipped")) == str(status_str("info"))


class TestStyled:
    def test_names_apply_in_order(self):
        result = str(colour_str("t").styled("yellow", "dim"))
        assert result == f"{Fore.YELLOW}{Style.DIM}t{Style.RESET_ALL}"

    def test_unknown_style(self):
        with pytest.raises(KeyError):
            colour_str("t").styled("purple")
