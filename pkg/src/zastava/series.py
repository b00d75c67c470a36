"""Truncated Laurent expansions at infinity.

``InfSeries`` holds c_0..c_{n-1} with the meaning sum_j c_j z^{-j-1}; the
truncation order n is explicit and reads past it raise instead of silently
returning zeros.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .unipoly import UniPoly


@dataclass(frozen=True)
class InfSeries:
    coeffs: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def coeff(self, j: int) -> Fraction:
        if not 0 <= j < len(self.coeffs):
            raise IndexError(
                f"series coefficient c_{j} beyond truncation order {self.order}"
            )
        return self.coeffs[j]


def series_expand(R: UniPoly, Q: UniPoly, n: int) -> InfSeries:
    """First n coefficients of R/Q = c_0/z + c_1/z^2 + ...

    Requires deg R < deg Q.  Computed by the exact recurrence
    c_j = (r_{a-1-j} - sum_{k<j} q_{a+k-j} c_k) / q_a read off from
    R = Q * (c_0/z + c_1/z^2 + ...).
    """
    if Q.is_zero:
        raise ZeroDivisionError("expansion denominator is zero")
    a = Q.degree
    assert a is not None
    if not R.is_zero and R.degree >= a:
        raise ValueError("numerator degree must be below denominator degree")
    lead = Q.coeffs[-1]
    cs: list[Fraction] = []
    for j in range(n):
        acc = R.coeff(a - 1 - j)
        for k in range(j):
            acc -= Q.coeff(a + k - j) * cs[k]
        cs.append(acc / lead)
    return InfSeries(tuple(cs))
