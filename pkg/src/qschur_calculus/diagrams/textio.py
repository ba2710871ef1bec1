"""Plain text and JSON forms of diagram words."""

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

import regex as re

from ..errors import QSchurError, TextFormatError
from ..weights import format_weight, parse_weight
from .atoms import DOWN, UP, Atom, Letter
from .word import DiagramWord

HEADER_FIELD = re.compile(r"(\w+)\s*=\s*(\([^)]*\)|\[[^\]]*\]|[^,\s]+)")
ATOM_TOKEN = re.compile(r"\w+\s*\([^)]*\)|\S+")
ATOM_PATTERNS: dict[str, re.Pattern] = {
    "strand": re.compile(r"^(U|D)\((\d+)\)$"),
    "dotted": re.compile(r"^(dotU|dotD)\((\d+),(\d+)\)$"),
    "crossing": re.compile(r"^(xUU|xDD|xLR|xRL)\((\d+),(\d+)\)$"),
    "turn": re.compile(r"^(cupEF|cupFE|capEF|capFE)\((\d+)\)$"),
    "bubble": re.compile(r"^bubble\((\d+),(-?\d+),(cw|ccw)\)$"),
}
LETTER = re.compile(r"^([+-])(\d+)$")
REQUIRED_FIELDS = ("n", "d", "lambda")


def parse_letters(text: str) -> tuple[Letter, ...]:
    """Reads ``[+1,-2]``."""
    body = text.strip().removeprefix("[").removesuffix("]").strip()
    if not body:
        return ()
    letters = []
    for part in re.split(r"\s*,\s*", body):
        match = LETTER.match(part)
        if not match:
            raise TextFormatError(f"bad boundary letter {part!r}")
        letters.append((int(match.group(2)), UP if match.group(1) == "+" else DOWN))
    return tuple(letters)


def format_letters(letters: tuple[Letter, ...]) -> str:
    return "[" + ",".join(f"{'+' if s == UP else '-'}{c}" for c, s in letters) + "]"


def parse_atom(token: str) -> Atom:
    compact = re.sub(r"\s+", "", token)
    for shape, pattern in ATOM_PATTERNS.items():
        match = pattern.match(compact)
        if not match:
            continue
        if shape == "strand":
            return Atom(match.group(1), (int(match.group(2)),))
        if shape == "dotted":
            return Atom(match.group(1), (int(match.group(2)),), int(match.group(3)))
        if shape == "crossing":
            return Atom(match.group(1), (int(match.group(2)), int(match.group(3))))
        if shape == "turn":
            return Atom(match.group(1), (int(match.group(2)),))
        return Atom(
            "bubble", (int(match.group(1)),), int(match.group(2)), match.group(3) == "cw"
        )
    raise TextFormatError(f"unknown atom {token!r}")


def parse_word(text: str) -> DiagramWord:
    """
    Header line ``n=2, d=2, lambda=(1,1), shift=0, coeff=1, bottom=[+1,-1]``
    followed by one slice per line, bottom slice first.
    """
    header: dict[str, str] | None = None
    slices: list[tuple[Atom, ...]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            header = dict(HEADER_FIELD.findall(line))
            missing = [f for f in REQUIRED_FIELDS if f not in header]
            if missing:
                raise TextFormatError(f"header is missing {', '.join(missing)}", number)
            continue
        try:
            slices.append(tuple(parse_atom(tok) for tok in ATOM_TOKEN.findall(line)))
        except TextFormatError as e:
            raise TextFormatError(str(e), number) from e
    if header is None:
        raise TextFormatError("no header line")
    try:
        return DiagramWord(
            n=int(header["n"]),
            d=int(header["d"]),
            lam=parse_weight(header["lambda"]),
            bottom=parse_letters(header.get("bottom", "[]")),
            slices=tuple(slices),
            shift=int(header.get("shift", "0")),
            coeff=Fraction(header.get("coeff", "1")),
        )
    except TextFormatError:
        raise
    except (QSchurError, ValueError) as e:
        raise TextFormatError(str(e)) from e


def format_word(w: DiagramWord) -> str:
    header = (
        f"n={w.n}, d={w.d}, lambda={format_weight(w.lam)}, shift={w.shift}, "
        f"coeff={w.coeff}, bottom={format_letters(w.bottom)}"
    )
    lines = [header] + [" ".join(str(atom) for atom in slc) for slc in w.slices]
    return "\n".join(lines) + "\n"


def word_to_json(w: DiagramWord) -> dict[str, Any]:
    return {
        "n": w.n,
        "d": w.d,
        "lambda": list(w.lam),
        "shift": w.shift,
        "coeff": str(w.coeff),
        "bottom": format_letters(w.bottom),
        "slices": [[str(atom) for atom in slc] for slc in w.slices],
    }


def word_from_json(data: dict[str, Any]) -> DiagramWord:
    try:
        return DiagramWord(
            n=int(data["n"]),
            d=int(data["d"]),
            lam=tuple(int(x) for x in data["lambda"]),
            bottom=parse_letters(data.get("bottom", "[]")),
            slices=tuple(tuple(parse_atom(tok) for tok in slc) for slc in data.get("slices", [])),
            shift=int(data.get("shift", 0)),
            coeff=Fraction(str(data.get("coeff", "1"))),
        )
    except KeyError as e:
        raise TextFormatError(f"missing key {e}") from e
    except TextFormatError:
        raise
    except (QSchurError, ValueError, TypeError) as e:
        raise TextFormatError(str(e)) from e


def load_word(path: Path) -> DiagramWord:
    """Reads a ``.json`` file as the JSON mirror and anything else as text."""
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".json":
        try:
            return word_from_json(json.loads(text))
        except json.JSONDecodeError as e:
            raise TextFormatError(e.msg, e.lineno) from e
    return parse_word(text)
