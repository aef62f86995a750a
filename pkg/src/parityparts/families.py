"""The eight families of partitions whose parts are separated by parity.

A family fixes a parity and a repetition mode for the upper block and the
opposite parity with its own mode for the lower block; every upper part
must be strictly larger than every lower part, and either block may be
empty.  Tokens name the lower block first: ``od_eu`` is distinct odd
parts below unrestricted even parts.

Counting uses an exact dynamic program over part values taken in
decreasing order, with one array for states that have not yet started
the lower block and one for states that have.  Enumeration is an
independent recursive generator, and sampling unranks against tabulated
completion counts, so the three routes cross-check each other.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from .core import Partition

__all__ = [
    "ENUMERATION_CUTOFF",
    "Family",
    "CountTable",
    "FamilySampler",
    "in_family",
    "enumerate_family",
    "count_family",
    "sample_family",
    "counts_csv",
]

# Above this weight enumeration is refused; counting and sampling still work.
ENUMERATION_CUTOFF = 70


class Family(Enum):
    """One of the eight parity-separated families, in chain order.

    Token letters: ``e``/``o`` give the block's parity, ``u``/``d`` say
    whether its parts are unrestricted or distinct.  The lower block is
    named first, so ``eu_od`` has unrestricted even parts below distinct
    odd parts.
    """

    ED_OD = "ed_od"
    OD_ED = "od_ed"
    OD_EU = "od_eu"
    EU_OD = "eu_od"
    ED_OU = "ed_ou"
    EU_OU = "eu_ou"
    OU_ED = "ou_ed"
    OU_EU = "ou_eu"

    @classmethod
    def from_token(cls, token: str) -> "Family":
        try:
            return cls(token)
        except ValueError:
            valid = ", ".join(fam.value for fam in cls)
            raise ValueError(f"unknown family {token!r}, expected one of: {valid}") from None

    @property
    def lower_odd(self) -> bool:
        return self.value[0] == "o"

    @property
    def lower_distinct(self) -> bool:
        return self.value[1] == "d"

    @property
    def upper_odd(self) -> bool:
        return self.value[3] == "o"

    @property
    def upper_distinct(self) -> bool:
        return self.value[4] == "d"


def in_family(p: Partition, family: Family) -> bool:
    """Membership test: block parities, repetition modes, strict separation."""
    upper_rem = 1 if family.upper_odd else 0
    upper = [part for part in p if part % 2 == upper_rem]
    lower = [part for part in p if part % 2 != upper_rem]
    if upper and lower and upper[-1] <= lower[0]:
        return False
    if family.upper_distinct and len(set(upper)) != len(upper):
        return False
    if family.lower_distinct and len(set(lower)) != len(lower):
        return False
    return True


def enumerate_family(
    family: Family, n: int, *, cutoff: int = ENUMERATION_CUTOFF
) -> Iterator[Partition]:
    """Yield every member of the family at weight n in decreasing lexicographic order.

    Raises ValueError for negative n or when n exceeds the cutoff; use
    counting or sampling beyond it.
    """
    if n < 0:
        raise ValueError(f"weight must be nonnegative, got {n}")
    if n > cutoff:
        raise ValueError(
            f"enumeration at n={n} exceeds the cutoff {cutoff}; use counting or sampling"
        )
    upper_rem = 1 if family.upper_odd else 0

    def extend(remaining: int, largest: int, crossed: bool) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for value in range(min(largest, remaining), 0, -1):
            if value % 2 == upper_rem:
                if crossed:
                    continue
                bound = value - 1 if family.upper_distinct else value
                for rest in extend(remaining - value, bound, False):
                    yield (value, *rest)
            else:
                bound = value - 1 if family.lower_distinct else value
                for rest in extend(remaining - value, bound, True):
                    yield (value, *rest)

    for parts in extend(n, n, False):
        yield Partition(parts)


@dataclass(frozen=True)
class CountTable:
    """Exact member counts of one family at every weight 0..max_n."""

    family: Family
    counts: tuple[int, ...]

    @property
    def max_n(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    @classmethod
    def build(cls, family: Family, max_n: int) -> "CountTable":
        """Tabulate counts by scanning part values from max_n down to 1.

        ``open_block[m]`` counts partial partitions of weight m that have
        used only upper-parity values so far; ``crossed[m]`` counts those
        that already contain a lower part.  Taking a lower-parity value
        from an open state performs the block crossing, after which
        upper-parity values are no longer available.
        """
        if max_n < 0:
            raise ValueError(f"max_n must be nonnegative, got {max_n}")
        upper_rem = 1 if family.upper_odd else 0
        open_block = [0] * (max_n + 1)
        open_block[0] = 1
        crossed = [0] * (max_n + 1)
        for value in range(max_n, 0, -1):
            if value % 2 == upper_rem:
                if family.upper_distinct:
                    for m in range(max_n, value - 1, -1):
                        open_block[m] += open_block[m - value]
                else:
                    for m in range(value, max_n + 1):
                        open_block[m] += open_block[m - value]
            else:
                eligible = [a + b for a, b in zip(open_block, crossed)]
                if family.lower_distinct:
                    for m in range(max_n, value - 1, -1):
                        eligible[m] += eligible[m - value]
                else:
                    for m in range(value, max_n + 1):
                        eligible[m] += eligible[m - value]
                crossed = [e - o for e, o in zip(eligible, open_block)]
        totals = tuple(a + b for a, b in zip(open_block, crossed))
        return cls(family=family, counts=totals)


_tables: dict[Family, CountTable] = {}


def count_family(family: Family, n: int) -> int:
    """Exact number of members at weight n, never by enumeration."""
    if n < 0:
        raise ValueError(f"weight must be nonnegative, got {n}")
    table = _tables.get(family)
    if table is None or table.max_n < n:
        # grow geometrically so ascending queries cost O(n^2) overall
        target = max(n, 2 * table.max_n if table else 0, 64)
        table = CountTable.build(family, target)
        _tables[family] = table
    return table[n]


def counts_csv(lo: int, hi: int, families: Iterable[Family] | None = None) -> str:
    """CSV table of counts, one row per weight, columns in chain order."""
    if lo < 0 or hi < lo:
        raise ValueError(f"bad weight range {lo}..{hi}")
    chosen = tuple(Family) if families is None else tuple(families)
    header = "n," + ",".join(f"p_{fam.value}" for fam in chosen)
    rows = [header]
    for n in range(lo, hi + 1):
        rows.append(f"{n}," + ",".join(str(count_family(fam, n)) for fam in chosen))
    return "\n".join(rows)


class FamilySampler:
    """Uniform sampler for one family at a fixed weight, by unranking.

    Completion counts are tabulated per (largest remaining value, weight
    still to place, crossed into the lower block yet) state.  ``unrank``
    walks the table preferring larger parts and higher multiplicities, so
    index order coincides with the order of ``enumerate_family``.
    """

    def __init__(self, family: Family, n: int):
        if n < 0:
            raise ValueError(f"weight must be nonnegative, got {n}")
        self.family = family
        self.n = n
        upper_rem = 1 if family.upper_odd else 0
        # before[v][m]: completions of weight m using values <= v, lower block untouched
        # after[v][m]:  the same once some lower part has been placed; the
        # empty completion is valid there, the crossing part already exists
        before = [[0] * (n + 1)]
        after = [[0] * (n + 1)]
        before[0][0] = 1
        after[0][0] = 1
        for value in range(1, n + 1):
            b_prev, a_prev = before[-1], after[-1]
            if value % 2 == upper_rem:
                a_row = a_prev
                if family.upper_distinct:
                    b_row = [
                        b_prev[m] + (b_prev[m - value] if m >= value else 0)
                        for m in range(n + 1)
                    ]
                else:
                    b_row = b_prev[:]
                    for m in range(value, n + 1):
                        b_row[m] += b_row[m - value]
            else:
                if family.lower_distinct:
                    a_row = [
                        a_prev[m] + (a_prev[m - value] if m >= value else 0)
                        for m in range(n + 1)
                    ]
                    b_row = [
                        b_prev[m] + (a_prev[m - value] if m >= value else 0)
                        for m in range(n + 1)
                    ]
                else:
                    a_row = a_prev[:]
                    for m in range(value, n + 1):
                        a_row[m] += a_row[m - value]
                    b_row = [
                        b_prev[m] + (a_row[m - value] if m >= value else 0)
                        for m in range(n + 1)
                    ]
            before.append(b_row)
            after.append(a_row)
        self._before = before
        self._after = after
        self.count: int = before[n][n]

    def unrank(self, index: int) -> Partition:
        """The index-th member in decreasing lexicographic order."""
        if not 0 <= index < self.count:
            raise ValueError(f"index {index} out of range, count is {self.count}")
        family = self.family
        upper_rem = 1 if family.upper_odd else 0
        parts: list[int] = []
        remaining = self.n
        crossed = False
        value = self.n
        while remaining > 0:
            if value < 1:
                raise RuntimeError("completion tables inconsistent with index walk")
            if value % 2 == upper_rem:
                if not crossed:
                    cap = remaining // value
                    if family.upper_distinct:
                        cap = min(cap, 1)
                    for copies in range(cap, 0, -1):
                        ways = self._before[value - 1][remaining - copies * value]
                        if index < ways:
                            parts.extend([value] * copies)
                            remaining -= copies * value
                            break
                        index -= ways
            else:
                cap = remaining // value
                if family.lower_distinct:
                    cap = min(cap, 1)
                for copies in range(cap, 0, -1):
                    ways = self._after[value - 1][remaining - copies * value]
                    if index < ways:
                        parts.extend([value] * copies)
                        remaining -= copies * value
                        crossed = True
                        break
                    index -= ways
            value -= 1
        return Partition(parts)

    def sample(self, rng: random.Random) -> Partition:
        """Draw one member uniformly at random."""
        if self.count == 0:
            raise ValueError(f"family {self.family.value} has no members at n={self.n}")
        return self.unrank(rng.randrange(self.count))


def sample_family(family: Family, n: int, seed: int) -> Partition:
    """One uniform draw; a fixed (family, n, seed) always gives the same member."""
    return FamilySampler(family, n).sample(random.Random(seed))
