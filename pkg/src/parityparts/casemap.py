"""Weight-preserving 17-case injection between two parity-separated families.

The source family is evens-over-distinct-odds (``Family.OD_EU``); the
image family is distinct-odds-over-evens (``Family.EU_OD``).  A source
partition falls in exactly one structural case, decided by its block
lengths and a few gap conditions.  ``forward`` rewrites it into an image
partition of the same weight whose shape satisfies that case's image
signature, and ``backward`` undoes the rewrite exactly.  Both directions
are defined only at or above the case's minimum weight.

Image signatures do not cover the whole image family: ``witness``
produces, for any weight from 373 up, an image-family member that matches
no signature, which is what makes the map strictly non-surjective there.
"""

from __future__ import annotations

from .core import Partition, format_partition, frequency, parity_split
from .families import Family, in_family

__all__ = [
    "SOURCE_FAMILY",
    "IMAGE_FAMILY",
    "NUM_CASES",
    "case_min_weight",
    "source_case_matches",
    "classify_source",
    "forward",
    "image_case_matches",
    "classify_image",
    "backward",
    "witness",
]

SOURCE_FAMILY = Family.OD_EU
IMAGE_FAMILY = Family.EU_OD
NUM_CASES = 17

WITNESS_MIN_WEIGHT = 373

_MIN_WEIGHT = {
    1: 1,
    2: 12,
    3: 16,
    4: 21,
    5: 5,
    6: 35,
    7: 54,
    8: 20,
    9: 23,
    10: 83,
    11: 7,
    12: 95,
    13: 159,
    14: 227,
    15: 373,
    16: 47,
    17: 59,
}


def case_min_weight(case: int) -> int:
    """Smallest weight at which the case's map and inverse are defined."""
    if case not in _MIN_WEIGHT:
        raise ValueError(f"case must be 1..{NUM_CASES}, got {case}")
    return _MIN_WEIGHT[case]


def _require_member(p: Partition, family: Family) -> None:
    if not in_family(p, family):
        shown = format_partition(p) or "(empty)"
        raise ValueError(f"{shown} is not in family {family.value}")


def source_case_matches(p: Partition) -> tuple[int, ...]:
    """Every source-side case condition that holds for p, in case order.

    The conditions are evaluated independently rather than as a decision
    tree, so totality and mutual exclusion can be verified instead of
    assumed.  ``classify_source`` gives the single-case view.
    """
    _require_member(p, SOURCE_FAMILY)
    view = parity_split(p)
    ev, od = view.evens, view.odds
    n_ev, n_od = len(ev), len(od)
    # strict block separation makes the cross gap odd and at least 1
    gap = ev[-1] - od[0] if n_ev and n_od else 0
    egap = ev[0] - ev[1] if n_ev >= 2 else 0
    top_odd = od[0] if n_od else 0
    conditions = {
        1: n_ev == 0 or n_od == 0,
        2: n_ev == n_od >= 2,
        3: n_ev > n_od >= 2,
        4: n_od > n_ev >= 2,
        5: n_ev == 1 and n_od >= 1 and gap >= 3,
        6: n_ev == 1 and n_od >= 5 and gap == 1,
        7: n_ev == 1 and n_od in (3, 4) and gap == 1,
        8: n_ev == 1 and n_od == 2 and gap == 1,
        9: n_ev == 1 and n_od == 1 and gap == 1,
        10: n_ev == 2 and n_od == 1,
        11: n_ev >= 3 and n_od == 1 and top_odd == 1,
        12: n_ev == 3 and n_od == 1 and top_odd >= 3,
        13: n_ev == 4 and n_od == 1 and top_odd >= 3,
        14: n_ev == 5 and n_od == 1 and top_odd >= 3,
        15: 6 <= n_ev <= 10 and n_od == 1 and top_odd >= 3,
        16: n_ev >= 11 and n_od == 1 and top_odd >= 3 and egap <= 10,
        17: n_ev >= 11 and n_od == 1 and top_odd >= 3 and egap >= 12,
    }
    return tuple(case for case, holds in conditions.items() if holds)


def classify_source(p: Partition) -> int:
    """The unique case of a source-family partition."""
    matches = source_case_matches(p)
    if len(matches) == 1:
        return matches[0]
    shown = format_partition(p) or "(empty)"
    raise ValueError(f"{shown} matched source cases {list(matches)}, expected exactly one")


def _slide(count: int) -> list[int]:
    """The odd increments 2*count-3, 2*count-5, ..., 1 used by the block swaps."""
    return [2 * count - 2 * k - 3 for k in range(count - 1)]


def _fwd_1(ev, od):
    return ev + od


def _fwd_2(ev, od):
    inc = _slide(len(ev))
    to_odd = [ev[k] + inc[k] for k in range(len(ev) - 1)] + [ev[-1] - 1]
    to_even = [od[k] - inc[k] for k in range(len(od) - 1)] + [od[-1] + 1]
    return to_odd + to_even


def _fwd_3(ev, od):
    n_ev, n_od = len(ev), len(od)
    inc = _slide(n_od)
    to_odd = [ev[0] + 2 * (n_ev - n_od) + (2 * n_od - 3)]
    to_odd += [ev[k] + inc[k] for k in range(1, n_od - 1)]
    to_odd += [ev[n_od - 1] - 1]
    kept_even = [part - 2 for part in ev[n_od:]]
    to_even = [od[k] - inc[k] for k in range(n_od - 1)] + [od[-1] + 1]
    return to_odd + kept_even + to_even


def _fwd_4(ev, od):
    n_ev, n_od = len(ev), len(od)
    inc = _slide(n_ev)
    to_odd = [ev[0] + 2 * (n_od - n_ev) + (2 * n_ev - 3)]
    to_odd += [ev[k] + inc[k] for k in range(1, n_ev - 1)]
    to_odd += [ev[-1] - 1]
    kept_odd = [part - 2 for part in od[: n_od - n_ev]]
    tail = od[n_od - n_ev :]
    to_even = [tail[k] - inc[k] for k in range(n_ev - 1)] + [tail[-1] + 1]
    return to_odd + kept_odd + to_even


def _fwd_5(ev, od):
    return [ev[0] - 1] + list(od[:-1]) + [od[-1] + 1]


def _fwd_6(ev, od):
    return list(od[:-2]) + [od[-2] + 1, od[-1] + 1] + [2] * ((ev[0] - 2) // 2)


def _fwd_7(ev, od):
    return [part + 4 for part in od[1:]] + [3] + [2] * (ev[0] - 2 * len(od))


def _fwd_8(ev, od):
    return [ev[0] - 3, od[0] - 4] + [2] * ((od[1] + 7) // 2)


def _fwd_9(ev, od):
    half = ev[0] // 2
    return [4 * half - 15, 5, 3, 2, 2, 2]


def _fwd_10(ev, od):
    return [ev[1] + 7, od[0] + 6, 5] + [2] * ((ev[0] - 18) // 2)


def _fwd_11(ev, od):
    return [ev[0] + 1] + list(ev[1:])


def _fwd_12(ev, od):
    return [ev[1] + 7, ev[2] + 5, od[0] + 4] + [2] * ((ev[0] - 16) // 2)


def _fwd_13(ev, od):
    return [ev[1] + 7, ev[2] + 5, ev[3] + 3, od[0] + 2, 3] + [2] * ((ev[0] - 20) // 2)


def _fwd_14(ev, od):
    return [ev[1] + 9, ev[2] + 7, ev[3] + 5, ev[4] + 3, od[0] + 2] + [2] * (
        (ev[0] - 26) // 2
    )


def _fwd_15(ev, od):
    return (
        [ev[1] + 5, ev[2] + 3, ev[3] + 1]
        + list(ev[4:])
        + [od[0] + 1]
        + [2] * ((ev[0] - 10) // 2)
    )


def _fwd_16(ev, od):
    return (
        [ev[0] + 5, ev[1] + 3, ev[2] + 1]
        + list(ev[3:-4])
        + [part - 2 for part in ev[-4:]]
        + [od[0] - 1]
    )


def _fwd_17(ev, od):
    return (
        [ev[0] - 7, ev[1] + 3, ev[2] + 1]
        + list(ev[3:-4])
        + [part - 2 for part in ev[-4:]]
        + [od[0] - 1]
        + [2] * 6
    )


_FORWARD = {
    1: _fwd_1,
    2: _fwd_2,
    3: _fwd_3,
    4: _fwd_4,
    5: _fwd_5,
    6: _fwd_6,
    7: _fwd_7,
    8: _fwd_8,
    9: _fwd_9,
    10: _fwd_10,
    11: _fwd_11,
    12: _fwd_12,
    13: _fwd_13,
    14: _fwd_14,
    15: _fwd_15,
    16: _fwd_16,
    17: _fwd_17,
}


def forward(p: Partition) -> Partition:
    """Map a source-family partition to its image partition.

    Raises ValueError when the weight sits below the case's minimum, where
    the rewrite is not defined.
    """
    case = classify_source(p)
    if p.weight < _MIN_WEIGHT[case]:
        raise ValueError(
            f"case {case} is undefined below weight {_MIN_WEIGHT[case]}, got {p.weight}"
        )
    view = parity_split(p)
    parts = _FORWARD[case](list(view.evens), list(view.odds))
    return Partition(sorted(parts, reverse=True))


def image_case_matches(p: Partition) -> tuple[int, ...]:
    """Every image-side case signature that p matches, in case order.

    Signatures are checked independently so pairwise disjointness can be
    verified; on signature-covered members exactly one should hold.
    """
    _require_member(p, IMAGE_FAMILY)
    view = parity_split(p)
    e, o = view.evens, view.odds
    u, v = len(e), len(o)
    f2 = frequency(p, 2)
    signatures = {
        1: u == 0 or v == 0,
        2: u == v >= 2 and o[-1] - e[0] >= 2 * v - 3,
        3: u > v >= 2
        and o[0] - o[1] >= 2 * (u - v + 1)
        and e[u - v - 1] - e[u - v] >= 2 * v - 4,
        4: v > u >= 2
        and o[0] - o[1] >= 2 * (v - u + 1)
        and o[-1] - e[0] >= 2 * u - 3,
        5: u == 1 and v >= 1,
        6: v >= 3 and u - v >= 3 and 2 * u - 3 == o[0] and e[0] - e[1] >= 2 and e[2] == 2,
        7: v in (3, 4)
        and u >= 6
        and u % 2 == 0
        and o[-1] == 3
        and e[0] == 2
        and 2 * v + 1 <= o[0] <= u + 2 * v + 1,
        8: v == 2
        and u >= 4
        and o[0] - o[1] == 2
        and e[0] == 2
        and o[1] - 2 * u + 11 > 0
        and o[0] >= 5,
        9: len(p) == 6 and p[1:] == (5, 3, 2, 2, 2) and p[0] >= 9 and p[0] % 4 == 1,
        10: v == 3 and u >= 5 and o[2] == 5 and e[0] == 2 and 2 * u + 25 >= o[0],
        11: u >= 2 and v == 1,
        12: v == 3 and u >= 4 and o[2] >= 7 and e[0] == 2 and 2 * u + 23 >= o[0],
        13: u >= 6 and v == 5 and o[4] == 3 and e[0] == 2 and 2 * u + 27 >= o[0],
        14: u >= 6 and v == 5 and o[4] >= 5 and e[0] == 2 and 2 * u + 35 >= o[0],
        15: f2 > 12
        and v == 3
        and 3 <= u - f2 <= 7
        and e[u - f2 - 1] >= 4
        and 2 * f2 + 15 >= o[0],
        16: u >= 9
        and v == 3
        and f2 <= 5
        and o[0] - o[1] <= 12
        and e[u - 6] - e[u - 5] >= 2,
        17: u >= 15 and v == 3 and 6 <= f2 <= 11 and e[u - 12] - e[u - 11] >= 2,
    }
    return tuple(case for case, holds in signatures.items() if holds)


def classify_image(p: Partition) -> int | None:
    """The case whose image signature p matches, or None when none does."""
    matches = image_case_matches(p)
    if not matches:
        return None
    if len(matches) == 1:
        return matches[0]
    raise ValueError(
        f"{format_partition(p)} matched image signatures {list(matches)}, expected at most one"
    )


def _bwd_1(e, o):
    return e + o


def _bwd_2(e, o):
    inc = _slide(len(e))
    to_even = [o[k] - inc[k] for k in range(len(o) - 1)] + [o[-1] + 1]
    to_odd = [e[k] + inc[k] for k in range(len(e) - 1)] + [e[-1] - 1]
    return to_even + to_odd


def _bwd_3(e, o):
    u, v = len(e), len(o)
    inc = _slide(v)
    to_even = [o[0] - (2 * (u - v) + 2 * v - 3)]
    to_even += [o[k] - inc[k] for k in range(1, v - 1)]
    to_even += [o[-1] + 1]
    kept_even = [part + 2 for part in e[: u - v]]
    tail = e[u - v :]
    to_odd = [tail[k] + inc[k] for k in range(v - 1)] + [tail[-1] - 1]
    return to_even + kept_even + to_odd


def _bwd_4(e, o):
    u, v = len(e), len(o)
    inc = _slide(u)
    to_even = [o[0] - (2 * (v - u) + 2 * u - 3)]
    to_even += [o[k] - inc[k] for k in range(1, u - 1)]
    to_even += [o[u - 1] + 1]
    kept_odd = [part + 2 for part in o[u:]]
    to_odd = [e[k] + inc[k] for k in range(u - 1)] + [e[-1] - 1]
    return to_even + kept_odd + to_odd


def _bwd_5(e, o):
    return [o[0] + 1] + list(o[1:]) + [e[0] - 1]


def _bwd_6(e, o):
    return [2 * len(e) - 2] + list(o) + [e[0] - 1, e[1] - 1]


def _bwd_7(e, o):
    u, v = len(e), len(o)
    return [u + 2 * v, u + 2 * v - 1] + [part - 4 for part in o[:-1]]


def _bwd_8(e, o):
    return [o[0] + 3, o[1] + 4, 2 * e.count(2) - 7]


def _bwd_9(e, o):
    half = (o[0] + 15) // 4
    return [2 * half, 2 * half - 1]


def _bwd_10(e, o):
    return [2 * len(e) + 18, o[0] - 7, o[1] - 6]


def _bwd_11(e, o):
    return [o[0] - 1] + list(e) + [1]


def _bwd_12(e, o):
    return [2 * len(e) + 16, o[0] - 7, o[1] - 5, o[2] - 4]


def _bwd_13(e, o):
    return [2 * len(e) + 20, o[0] - 7, o[1] - 5, o[2] - 3, o[3] - 2]


def _bwd_14(e, o):
    return [2 * len(e) + 26, o[0] - 9, o[1] - 7, o[2] - 5, o[3] - 3, o[4] - 2]


def _bwd_15(e, o):
    twos = e.count(2)
    keep = len(e) - twos
    return (
        [2 * twos + 10, o[0] - 5, o[1] - 3, o[2] - 1]
        + list(e[: keep - 1])
        + [e[keep - 1] - 1]
    )


def _bwd_16(e, o):
    u = len(e)
    return (
        [o[0] - 5, o[1] - 3, o[2] - 1]
        + list(e[: u - 5])
        + [part + 2 for part in e[u - 5 : u - 1]]
        + [e[-1] + 1]
    )


def _bwd_17(e, o):
    u = len(e)
    return (
        [o[0] + 7, o[1] - 3, o[2] - 1]
        + list(e[: u - 11])
        + [part + 2 for part in e[u - 11 : u - 7]]
        + [e[u - 7] + 1]
    )


_BACKWARD = {
    1: _bwd_1,
    2: _bwd_2,
    3: _bwd_3,
    4: _bwd_4,
    5: _bwd_5,
    6: _bwd_6,
    7: _bwd_7,
    8: _bwd_8,
    9: _bwd_9,
    10: _bwd_10,
    11: _bwd_11,
    12: _bwd_12,
    13: _bwd_13,
    14: _bwd_14,
    15: _bwd_15,
    16: _bwd_16,
    17: _bwd_17,
}


def backward(p: Partition) -> Partition:
    """Map a signature-matched image partition back to its source.

    Raises ValueError when no signature matches or the weight sits below
    the matched case's minimum.
    """
    case = classify_image(p)
    if case is None:
        raise ValueError(f"{format_partition(p)} matches no image-side case signature")
    if p.weight < _MIN_WEIGHT[case]:
        raise ValueError(
            f"case {case} inverse is undefined below weight {_MIN_WEIGHT[case]}, got {p.weight}"
        )
    view = parity_split(p)
    parts = _BACKWARD[case](list(view.evens), list(view.odds))
    return Partition(sorted(parts, reverse=True))


def witness(n: int) -> Partition:
    """An image-family member at weight n matching no case signature.

    Defined for n at least 373; the shape depends on n modulo 6.
    """
    if n < WITNESS_MIN_WEIGHT:
        raise ValueError(f"witness construction starts at weight {WITNESS_MIN_WEIGHT}, got {n}")
    k, r = divmod(n, 6)
    if r % 2 == 1:
        parts = [2 * k + 3, 2 * k + 1, 2 * k + r - 8, 2, 2]
    else:
        parts = [2 * k + 1, 2 * k - 1, 2 * k + r - 7, 3, 2, 2]
    return Partition(sorted(parts, reverse=True))
