"""Reader and writer for the ``.fam`` text format.

A family document is::

    n 4
    A: 1,2
    A: -

A pair document continues the A block with a ``%%`` separator, a block of
``B:`` lines and an ``ell <int>`` trailer. Elements are 1-based and
strictly ascending, ``-`` encodes the empty set, lines end in LF and carry
no trailing whitespace. Members are written in canonical mask order, so
equal objects always have byte-identical encodings.
"""

import logging
from pathlib import Path
from typing import List, Optional, Tuple, Union

from ..exceptions import FormatError
from ..models.families import CrossPair, Family, SubsetMask, elements_of

logger = logging.getLogger(__name__)

SEPARATOR = "%%"
EMPTY_SET = "-"

PathLike = Union[str, Path]


def encode_member(mask: SubsetMask, prefix: str) -> str:
    """One member line, e.g. ``A: 1,3`` or ``B: -``."""
    elements = elements_of(mask)
    body = ",".join(str(e) for e in elements) if elements else EMPTY_SET
    return f"{prefix}: {body}"


def encode_family(f: Family, prefix: str = "A") -> str:
    """Encode a single family."""
    lines = [f"n {f.n}"]
    lines.extend(encode_member(m, prefix) for m in f.members)
    return "\n".join(lines) + "\n"


def encode_pair(p: CrossPair) -> str:
    """Encode a cross pair; this string is also the canonical sort key."""
    lines = [f"n {p.n}"]
    lines.extend(encode_member(m, "A") for m in p.a.members)
    lines.append(SEPARATOR)
    lines.extend(encode_member(m, "B") for m in p.b.members)
    lines.append(f"ell {p.ell}")
    return "\n".join(lines) + "\n"


def _split_lines(text: str, path: Optional[str]) -> List[str]:
    if "\r" in text:
        raise FormatError("CR characters are not allowed", path=path)
    if not text.endswith("\n"):
        raise FormatError("Document must end with a newline", path=path)
    lines = text[:-1].split("\n")
    for number, line in enumerate(lines, start=1):
        if line != line.rstrip():
            raise FormatError("Trailing whitespace", line=number, path=path)
    return lines


def _parse_int(value: str, what: str, number: int, path: Optional[str]) -> int:
    if not (value.isascii() and value.isdigit()) or (
        len(value) > 1 and value[0] == "0"
    ):
        raise FormatError(
            f"Expected a nonnegative integer for {what}, got {value!r}",
            line=number,
            path=path,
        )
    return int(value)


def _parse_header(lines: List[str], path: Optional[str]) -> int:
    if not lines or not lines[0].startswith("n "):
        raise FormatError("First line must be 'n <int>'", line=1, path=path)
    return _parse_int(lines[0][2:], "n", 1, path)


def _parse_member(
    line: str, prefix: str, n: int, number: int, path: Optional[str]
) -> SubsetMask:
    head = f"{prefix}: "
    if not line.startswith(head):
        raise FormatError(
            f"Expected a '{head}' line, got {line!r}", line=number, path=path
        )
    body = line[len(head) :]
    if body == EMPTY_SET:
        return 0
    mask = 0
    previous = 0
    for token in body.split(","):
        element = _parse_int(token, "an element", number, path)
        if element <= previous:
            raise FormatError(
                "Elements must be strictly ascending", line=number, path=path
            )
        if element > n:
            raise FormatError(
                f"Element {element} outside [{n}]", line=number, path=path
            )
        mask |= 1 << (element - 1)
        previous = element
    return mask


def _parse_block(
    lines: List[str],
    start: int,
    prefix: str,
    n: int,
    path: Optional[str],
) -> Tuple[List[SubsetMask], int]:
    """Parse consecutive member lines starting at index ``start``."""
    members: List[SubsetMask] = []
    index = start
    while index < len(lines) and lines[index].startswith(f"{prefix}:"):
        members.append(
            _parse_member(lines[index], prefix, n, index + 1, path)
        )
        index += 1
    if len(set(members)) != len(members):
        raise FormatError(
            f"Duplicate member in the {prefix} block", line=index, path=path
        )
    return members, index


def decode_family(
    text: str, prefix: str = "A", path: Optional[str] = None
) -> Family:
    """Parse a family document.

    :raises FormatError: On any deviation from the format
    """
    lines = _split_lines(text, path)
    n = _parse_header(lines, path)
    members, index = _parse_block(lines, 1, prefix, n, path)
    if index != len(lines):
        raise FormatError(
            f"Unexpected line {lines[index]!r}", line=index + 1, path=path
        )
    return Family.of(n, members)


def decode_pair(text: str, path: Optional[str] = None) -> CrossPair:
    """Parse a pair document.

    :raises FormatError: On any deviation from the format
    """
    lines = _split_lines(text, path)
    n = _parse_header(lines, path)
    a_members, index = _parse_block(lines, 1, "A", n, path)
    if index >= len(lines) or lines[index] != SEPARATOR:
        raise FormatError(
            f"Expected '{SEPARATOR}' after the A block",
            line=index + 1,
            path=path,
        )
    b_members, index = _parse_block(lines, index + 1, "B", n, path)
    if index != len(lines) - 1 or not lines[index].startswith("ell "):
        raise FormatError(
            "Expected a final 'ell <int>' line", line=index + 1, path=path
        )
    ell = _parse_int(lines[index][4:], "ell", index + 1, path)
    return CrossPair(
        a=Family.of(n, a_members),
        b=Family.of(n, b_members),
        ell=ell,
        n=n,
    )


def _read_text(path: PathLike) -> str:
    # Bytes, so that CR characters reach the validator untranslated.
    raw = Path(path).read_bytes()
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as e:
        raise FormatError(f"Not UTF-8: {e}", path=str(path)) from e


def read_pair(path: PathLike) -> CrossPair:
    """Read a pair document from disk."""
    text = _read_text(path)
    return decode_pair(text, path=str(path))


def write_pair(p: CrossPair, path: PathLike) -> None:
    """Write a pair document to disk with LF line endings."""
    Path(path).write_text(encode_pair(p), encoding="utf-8", newline="\n")
    logger.debug("Wrote pair to %s", path)


def read_family(path: PathLike, prefix: str = "A") -> Family:
    text = _read_text(path)
    return decode_family(text, prefix=prefix, path=str(path))


def write_family(f: Family, path: PathLike, prefix: str = "A") -> None:
    Path(path).write_text(
        encode_family(f, prefix), encoding="utf-8", newline="\n"
    )
