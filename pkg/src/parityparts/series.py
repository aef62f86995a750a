"""Exact truncated power series over the integers.

Coefficients are plain Python ints, so nothing here ever rounds.  The
module builds the two counting series for the families tied by the
strict inequality: the distinct-odds-over-evens family has generating
function (sum of q^(k^2)) / (product of 1 - q^(2k)), and the
evens-over-distinct-odds family comes from an alternating double sum
against the same even Euler factor, unwrapped by flipping the sign of
every odd coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

__all__ = [
    "Series",
    "series_mul",
    "series_invert",
    "euler_inverse_even",
    "theta_squares",
    "series_p_eu_od",
    "series_p_od_eu",
    "diff_series",
]


@dataclass(frozen=True)
class Series:
    """Integer coefficients c[0..order]; index k is the coefficient of q^k."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        object.__setattr__(self, "coeffs", tuple(coeffs))
        if not self.coeffs:
            raise ValueError("a series needs at least its constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient index {k} outside 0..{self.order}")
        return self.coeffs[k]

    def __add__(self, other: "Series") -> "Series":
        return Series(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "Series") -> "Series":
        return Series(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __mul__(self, other: "Series") -> "Series":
        return series_mul(self, other)


def series_mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated to the smaller order."""
    order = min(a.order, b.order)
    out = [0] * (order + 1)
    for i in range(order + 1):
        left = a.coeffs[i]
        if left == 0:
            continue
        for j in range(order + 1 - i):
            right = b.coeffs[j]
            if right:
                out[i + j] += left * right
    return Series(out)


def series_invert(a: Series) -> Series:
    """Multiplicative inverse; the constant term must be +1 or -1 so the
    inverse stays integral."""
    lead = a.coeffs[0]
    if lead not in (1, -1):
        raise ValueError(f"constant term must be +1 or -1 to invert, got {lead}")
    order = a.order
    out = [0] * (order + 1)
    out[0] = lead
    for k in range(1, order + 1):
        acc = 0
        for i in range(1, k + 1):
            if a.coeffs[i]:
                acc += a.coeffs[i] * out[k - i]
        out[k] = -lead * acc
    return Series(out)


def _euler_even(order: int) -> Series:
    """The product of (1 - q^(2k)) for all 2k up to the order."""
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    step = 2
    while step <= order:
        for m in range(order, step - 1, -1):
            coeffs[m] -= coeffs[m - step]
        step += 2
    return Series(coeffs)


def euler_inverse_even(order: int) -> Series:
    """Coefficients of 1 / product(1 - q^(2k)): partitions into even parts."""
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    return series_invert(_euler_even(order))


def theta_squares(order: int) -> Series:
    """Indicator series of the perfect squares, constant term included."""
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    coeffs = [0] * (order + 1)
    k = 0
    while k * k <= order:
        coeffs[k * k] = 1
        k += 1
    return Series(coeffs)


def series_p_eu_od(order: int) -> Series:
    """Member counts of the distinct-odds-over-evens family, weights 0..order."""
    return series_mul(euler_inverse_even(order), theta_squares(order))


def series_p_od_eu(order: int) -> Series:
    """Member counts of the evens-over-distinct-odds family, weights 0..order.

    The closed form gives the alternating-sign counts: the base factor is
    1 / product(1 - q^(2k)), corrected by an alternating double sum whose
    (m, j) term carries sign (-1)^(m+j) and exponents m(3m+1)/2 - j^2 and
    that plus 2m+1.  The outer index m is exhausted once its smallest
    exponent m(m+1)/2 passes the order.  Flipping every odd-index sign at
    the end removes the alternation.
    """
    base = euler_inverse_even(order)
    correction = [0] * (order + 1)
    m = 1
    while m * (m + 1) // 2 <= order:
        for j in range(1, m + 1):
            sign = -1 if (m + j) % 2 else 1
            low = m * (3 * m + 1) // 2 - j * j
            high = low + 2 * m + 1
            if low <= order:
                correction[low] += sign
            if high <= order:
                correction[high] -= sign
        m += 1
    signed = base - series_mul(base, Series(correction))
    return Series(c if k % 2 == 0 else -c for k, c in enumerate(signed.coeffs))


def diff_series(order: int) -> Series:
    """Coefficientwise count difference, image family minus source family."""
    return series_p_eu_od(order) - series_p_od_eu(order)
