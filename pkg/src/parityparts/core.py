"""Integer partitions and their parity structure.

A partition is a weakly decreasing sequence of positive integer parts.
This module provides the base value type plus parsing, canonical text
formatting, parity decomposition, part frequencies, concatenation, and
Ferrers diagram rendering.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

__all__ = [
    "Partition",
    "ParityView",
    "parse_partition",
    "format_partition",
    "parity_split",
    "frequency",
    "concat",
    "render_ferrers",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integer parts.

    Instances are immutable and hashable.  ``weight`` is the sum of the
    parts, computed once at construction.
    """

    weight: int

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        self = super().__new__(cls, parts)
        previous = None
        for part in self:
            if not isinstance(part, int) or part < 1:
                raise ValueError(f"parts must be positive integers, got {part!r}")
            if previous is not None and part > previous:
                raise ValueError(
                    f"parts must be weakly decreasing, got {part} after {previous}"
                )
            previous = part
        self.weight = sum(self)
        return self

    def __repr__(self) -> str:
        return f"Partition({list(self)!r})"


class ParityView(NamedTuple):
    """Parity decomposition of a partition, each side in original order."""

    evens: Partition
    odds: Partition

    @property
    def even_count(self) -> int:
        return len(self.evens)

    @property
    def odd_count(self) -> int:
        return len(self.odds)


def parse_partition(text: str) -> Partition:
    """Parse comma separated parts, with optional ``part^count`` repetition.

    Accepts plain lists like ``"8,8,8,7,5,3"`` as well as the frequency
    form ``"9,7,5,4,2^5"``.  Parts are sorted into weakly decreasing
    order, so input order does not matter.  Whitespace around tokens is
    ignored; an empty or blank string is the empty partition.

    Raises ValueError on malformed tokens, parts below 1, or repetition
    counts below 1.
    """
    parts: list[int] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            if text.strip():
                raise ValueError(f"empty token in partition text {text!r}")
            continue
        base, caret, exponent = token.partition("^")
        try:
            value = int(base)
            count = int(exponent) if caret else 1
        except ValueError:
            raise ValueError(f"malformed partition token {token!r}") from None
        if value < 1:
            raise ValueError(f"parts must be at least 1, got {value}")
        if count < 1:
            raise ValueError(f"repetition count must be at least 1 in {token!r}")
        parts.extend([value] * count)
    parts.sort(reverse=True)
    return Partition(parts)


def format_partition(p: Partition) -> str:
    """Canonical text form: parts joined by commas, empty string for the empty partition."""
    return ",".join(str(part) for part in p)


def parity_split(p: Partition) -> ParityView:
    """Split into even and odd parts, keeping the decreasing order of each side."""
    return ParityView(
        evens=Partition(part for part in p if part % 2 == 0),
        odds=Partition(part for part in p if part % 2 == 1),
    )


def frequency(p: Partition, value: int) -> int:
    """Number of parts equal to ``value``; the value must be at least 1."""
    if value < 1:
        raise ValueError(f"part value must be at least 1, got {value}")
    return tuple.count(p, value)


def concat(upper: Partition, lower: Partition) -> Partition:
    """Join an upper and a lower partition into one.

    Every part of ``upper`` must be at least every part of ``lower``,
    otherwise the joined sequence would not be weakly decreasing.
    """
    if upper and lower and upper[-1] < lower[0]:
        raise ValueError(
            f"cannot concatenate: upper part {upper[-1]} below lower part {lower[0]}"
        )
    return Partition(tuple(upper) + tuple(lower))


def render_ferrers(p: Partition, glyph: str = "#") -> str:
    """Ferrers diagram, one row of glyphs per part."""
    return "\n".join(glyph * part for part in p)
