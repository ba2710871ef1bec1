"""Terminal colouring for check output."""

from colorama import Fore, Style

STYLES: dict[str, str] = {
    "red": Fore.RED,
    "green": Fore.GREEN,
    "yellow": Fore.YELLOW,
    "cyan": Fore.CYAN,
    "dim": Style.DIM,
    "bright": Style.BRIGHT,
}

# status -> (badge text, styles)
STATUS_BADGES: dict[str, tuple[str, tuple[str, ...]]] = {
    "pass": ("PASS", ("green",)),
    "fail": ("FAIL", ("red", "bright")),
    "info": ("INFO", ("cyan",)),
}


class colour_str:
    """A string with chained colorama codes, applied when it is printed."""

    def __init__(self, s: str):
        self.s = s
        self.codes: list[str] = []

    def __str__(self) -> str:
        if not self.codes:
            return self.s
        return f"{''.join(self.codes)}{self.s}{Style.RESET_ALL}"

    def styled(self, *names: str) -> "colour_str":
        """Appends the codes of the named styles, in order."""
        self.codes.extend(str(STYLES[name]) for name in names)
        return self

    def red(self) -> "colour_str":
        return self.styled("red")

    def green(self) -> "colour_str":
        return self.styled("green")

    def yellow(self) -> "colour_str":
        return self.styled("yellow")

    def cyan(self) -> "colour_str":
        return self.styled("cyan")

    def dim(self) -> "colour_str":
        return self.styled("dim")

    def bright(self) -> "colour_str":
        return self.styled("bright")


def status_str(status: str) -> colour_str:
    """Coloured badge for a check status; anything unknown is shown as INFO."""
    text, styles = STATUS_BADGES.get(status, STATUS_BADGES["info"])
    return colour_str(text).styled(*styles)
