"""Plain text form of Soergel words, the same layout as diagram words."""

from fractions import Fraction
from pathlib import Path

import regex as re

from ..diagrams.textio import ATOM_TOKEN, HEADER_FIELD
from ..errors import QSchurError, TextFormatError
from .words import SOERGEL_ATOM_TABLE, SoergelAtom, SoergelWord

SOERGEL_ATOM = re.compile(r"^(\w+)\((\d+(?:,\d+)*)\)$")
REQUIRED_FIELDS = ("n", "d")


def parse_colours(text: str) -> tuple[int, ...]:
    """Reads ``[1,2,1]``."""
    body = text.strip().removeprefix("[").removesuffix("]").strip()
    if not body:
        return ()
    try:
        return tuple(int(part) for part in re.split(r"\s*,\s*", body))
    except ValueError as e:
        raise TextFormatError(f"bad colour list {text!r}") from e


def format_colours(colours: tuple[int, ...]) -> str:
    return "[" + ",".join(str(c) for c in colours) + "]"


def parse_soergel_atom(token: str) -> SoergelAtom:
    match = SOERGEL_ATOM.match(re.sub(r"\s+", "", token))
    if not match or match.group(1) not in SOERGEL_ATOM_TABLE:
        raise TextFormatError(f"unknown Soergel atom {token!r}")
    return SoergelAtom(match.group(1), tuple(int(c) for c in match.group(2).split(",")))


def parse_soergel_word(text: str) -> SoergelWord:
    """
    Header line ``n=4, d=4, coeff=1, bottom=[1,2,1]`` followed by one slice
    per line, bottom slice first, e.g. ``line(1) six(2,1)``.
    """
    header: dict[str, str] | None = None
    slices: list[tuple[SoergelAtom, ...]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        if header is None:
            header = dict(HEADER_FIELD.findall(stripped))
            missing = [f for f in REQUIRED_FIELDS if f not in header]
            if missing:
                raise TextFormatError(f"header is missing {', '.join(missing)}", number)
            continue
        try:
            slices.append(tuple(parse_soergel_atom(tok) for tok in ATOM_TOKEN.findall(stripped)))
        except QSchurError as e:
            raise TextFormatError(str(e), number) from e
    if header is None:
        raise TextFormatError("no header line")
    try:
        return SoergelWord(
            n=int(header["n"]),
            d=int(header["d"]),
            bottom=parse_colours(header.get("bottom", "[]")),
            slices=tuple(slices),
            coeff=Fraction(header.get("coeff", "1")),
        )
    except TextFormatError:
        raise
    except (QSchurError, ValueError) as e:
        raise TextFormatError(str(e)) from e


def format_soergel_word(w: SoergelWord) -> str:
    header = f"n={w.n}, d={w.d}, coeff={w.coeff}, bottom={format_colours(w.bottom)}"
    lines = [header] + [" ".join(str(atom) for atom in slc) for slc in w.slices]
    return "\n".join(lines) + "\n"


def load_soergel_word(path: Path) -> SoergelWord:
    return parse_soergel_word(path.read_text(encoding="utf-8"))
