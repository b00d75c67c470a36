"""Points of trigonometric zastava in polynomial and coordinate form.

A point carries, per color i, a monic Q_i of degree a_i and an R_i of lower
degree; when the Q_i split over the rationals it also carries the
coordinate chart (w_{i,r}, y_{i,r}) with w the roots of Q and y = R(w).
All mutating operations return new points and re-derive the dependent
chart.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .linalg import ExactMatrix, hankel_minor_C, solve_linear
from .multirat import MultiRat, Ring, series_coefficient_rat
from .rational import format_scalar, parse_scalar
from .rootdata import RootDatum, datum
from .series import InfSeries, series_expand
from .unipoly import UniPoly, lagrange_interpolate, poly_gcd, rational_roots


class Tier(Enum):
    ZASTAVA = "zastava"
    MONOPOLE = "monopole"
    TRIGONOMETRIC = "trigonometric"


def _classify(Q: UniPoly, R: UniPoly) -> Tier:
    if poly_gcd(Q, R).degree not in (None, 0):
        return Tier.ZASTAVA
    if Q.coeff(0) == 0:
        return Tier.MONOPOLE
    return Tier.TRIGONOMETRIC


@dataclass(frozen=True)
class ZastavaPoint:
    datum: RootDatum
    Q: tuple[UniPoly, ...]
    R: tuple[UniPoly, ...]
    w: Optional[tuple[tuple[Fraction, ...], ...]] = None
    y: Optional[tuple[tuple[Fraction, ...], ...]] = None

    def __post_init__(self):
        if len(self.Q) != self.datum.rank or len(self.R) != self.datum.rank:
            raise ValueError("one (Q_i, R_i) pair per color required")
        for q, r in zip(self.Q, self.R):
            if q.degree is None or not q.is_monic:
                raise ValueError("each Q_i must be monic of degree >= 0")
            if not r.is_zero and r.degree >= q.degree:
                raise ValueError("deg R_i must be < deg Q_i")
        if (self.w is None) != (self.y is None):
            raise ValueError("coordinate form requires both w and y")
        if self.w is not None:
            for i, (ws, ys) in enumerate(zip(self.w, self.y)):
                if len(ws) != self.degrees[i] or len(ys) != self.degrees[i]:
                    raise ValueError("coordinate lists must match the degrees")
                if len(set(ws)) != len(ws):
                    raise ValueError("repeated roots within a color")
                for wv, yv in zip(ws, ys):
                    if self.Q[i](wv) != 0 or self.R[i](wv) != yv:
                        raise ValueError("coordinate form inconsistent with (Q, R)")

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(q.degree for q in self.Q)

    @property
    def tier(self) -> Tier:
        tiers = [_classify(q, r) for q, r in zip(self.Q, self.R)]
        order = [Tier.ZASTAVA, Tier.MONOPOLE, Tier.TRIGONOMETRIC]
        return order[min(order.index(t) for t in tiers)]

    @property
    def has_coords(self) -> bool:
        return self.w is not None

    @property
    def is_sl2(self) -> bool:
        return self.datum.rank == 1 and self.datum.label == "A1"

    # -- series / boundary ------------------------------------------------

    def series(self, i: int = 0, n: Optional[int] = None) -> InfSeries:
        """Expansion of R_i/Q_i at infinity; default order 2*a_i + 1."""
        a = self.degrees[i]
        return series_expand(self.R[i], self.Q[i], 2 * a + 1 if n is None else n)

    def to_json(self) -> dict:
        out = {
            "type": self.datum.label,
            "degrees": list(self.degrees),
            "Q": [q.to_json() for q in self.Q],
            "R": [r.to_json() for r in self.R],
        }
        if self.w is not None:
            out["w"] = [[format_scalar(v) for v in ws] for ws in self.w]
            out["y"] = [[format_scalar(v) for v in ys] for ys in self.y]
        return out

    @staticmethod
    def from_json(data: dict) -> "ZastavaPoint":
        dat = datum(data["type"])
        Q = tuple(UniPoly.from_json(c) for c in data["Q"])
        R = tuple(UniPoly.from_json(c) for c in data["R"])
        w = y = None
        if "w" in data:
            w = tuple(tuple(parse_scalar(v) for v in ws) for ws in data["w"])
            y = tuple(tuple(parse_scalar(v) for v in ys) for ys in data["y"])
        return ZastavaPoint(dat, Q, R, w, y)

    @staticmethod
    def load(path: str) -> "ZastavaPoint":
        with open(path) as fh:
            return ZastavaPoint.from_json(json.load(fh))

    def save(self, path: str) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=2)
            fh.write("\n")


def from_coords(
    dat: RootDatum,
    w: Sequence[Sequence[Fraction]],
    y: Sequence[Sequence[Fraction]],
    require_trigonometric: bool = False,
) -> ZastavaPoint:
    """Build the monic-Q point with the given roots and values.

    Q_i has roots w_{i,*}; R_i is the Lagrange interpolant through
    (w_{i,r}, y_{i,r}).  Roots must be distinct per color, and nonzero when
    the trigonometric tier is required.
    """
    Qs, Rs = [], []
    for ws, ys in zip(w, y):
        if len(set(ws)) != len(ws):
            raise ValueError("repeated roots within a color")
        if require_trigonometric and any(wv == 0 for wv in ws):
            raise ValueError("zero root not allowed on the trigonometric tier")
        Qs.append(UniPoly.from_roots(list(ws)))
        Rs.append(lagrange_interpolate(list(zip(ws, ys))))
    pt = ZastavaPoint(
        dat,
        tuple(Qs),
        tuple(Rs),
        tuple(tuple(Fraction(v) for v in ws) for ws in w),
        tuple(tuple(Fraction(v) for v in ys) for ys in y),
    )
    if require_trigonometric and pt.tier is not Tier.TRIGONOMETRIC:
        raise ValueError("point is not on the trigonometric tier (gcd or zero root)")
    return pt


def recover_coords(pt: ZastavaPoint) -> ZastavaPoint:
    """Attach the coordinate chart when every Q_i splits over the rationals."""
    if pt.has_coords:
        return pt
    ws, ys = [], []
    for q, r in zip(pt.Q, pt.R):
        roots = rational_roots(q)
        if len(roots) != q.degree:
            raise ValueError("Q does not split over the rationals")
        if len(set(roots)) != len(roots):
            raise ValueError("repeated roots; coordinate chart undefined")
        ws.append(tuple(roots))
        ys.append(tuple(r(x) for x in roots))
    return ZastavaPoint(pt.datum, pt.Q, pt.R, tuple(ws), tuple(ys))


# -- Bezout completion and the loop-group matrix ---------------------------


def bezout_complete(Q: UniPoly, R: UniPoly) -> tuple[UniPoly, UniPoly]:
    """The unique monic F (deg a) and D (deg < a) with Q*F - R*D = z^(2a).

    Requires Q monic of degree a >= 1, Q(0) != 0, deg R < a, gcd(Q,R) = 1.
    Solved as a 2a x 2a exact linear system in the unknown low coefficients
    of F and the coefficients of D.
    """
    a = Q.degree
    if a is None or a < 1 or not Q.is_monic:
        raise ValueError("Q must be monic of degree >= 1")
    if Q.coeff(0) == 0:
        raise ValueError("Q(0) = 0: no Bezout completion on the trigonometric tier")
    if not R.is_zero and R.degree >= a:
        raise ValueError("deg R must be < deg Q")
    if poly_gcd(Q, R).degree not in (None, 0):
        raise ValueError("gcd(Q, R) != 1: no Bezout completion exists")
    # unknowns x = (f_0..f_{a-1}, d_0..d_{a-1}); equations: coefficient of
    # z^m in Q*F - R*D - z^(2a) is 0 for m = 0..2a-1 (the z^(2a) terms match
    # automatically since Q and F are monic).
    rows = []
    rhs = []
    for m in range(2 * a):
        row = [Q.coeff(m - t) for t in range(a)] + [-R.coeff(m - t) for t in range(a)]
        rows.append(row)
        # move the known monic contribution q_{m-a} * f_a (f_a = 1) across
        rhs.append(-Q.coeff(m - a))
    x = solve_linear(ExactMatrix(rows), rhs)
    F = UniPoly(list(x[:a]) + [Fraction(1)])
    D = UniPoly(x[a:])
    assert (Q * F - R * D) == UniPoly.monomial(2 * a), "Bezout residual nonzero"
    return F, D


@dataclass(frozen=True)
class GMatrix:
    """The 2x2 loop-group element with entries z^(-a) * (F, D; R, Q).

    Entries are Laurent polynomials in z with exponents in [-a, 0], stored
    through the defining polynomials.
    """

    a: int
    F: UniPoly
    D: UniPoly
    R: UniPoly
    Q: UniPoly

    def laurent_entry(self, r: int, c: int) -> dict[int, Fraction]:
        """Entry (r, c) in {1,2}^2 as {exponent: coefficient}."""
        p = {(1, 1): self.F, (1, 2): self.D, (2, 1): self.R, (2, 2): self.Q}[(r, c)]
        return {k - self.a: v for k, v in enumerate(p.coeffs) if v != 0}

    def coeff_matrix(self, m: int) -> tuple[tuple[Fraction, Fraction], ...]:
        """The 2x2 coefficient A_m of z^m, nonzero only for -a <= m <= 0."""
        t = m + self.a
        return (
            (self.F.coeff(t), self.D.coeff(t)),
            (self.R.coeff(t), self.Q.coeff(t)),
        )

    def det_is_one(self) -> bool:
        return (self.Q * self.F - self.R * self.D) == UniPoly.monomial(2 * self.a)


def g_matrix(Q: UniPoly, R: UniPoly) -> GMatrix:
    F, D = bezout_complete(Q, R)
    return GMatrix(a=Q.degree, F=F, D=D, R=R, Q=Q)


# -- boundary, divisor, shift ----------------------------------------------


def boundary_equation_sl2(pt: ZastavaPoint) -> Fraction:
    """The full principal Hankel minor C_a of the point's series; vanishes
    exactly when gcd(Q, R) != 1."""
    if not pt.is_sl2:
        raise ValueError("boundary equation implemented for SL2 only")
    a = pt.degrees[0]
    return hankel_minor_C(pt.series(0, 2 * a - 1), a)


def factorization_divisor(pt: ZastavaPoint) -> tuple[tuple[Fraction, ...], ...]:
    """The colored multiset of Q-roots, per color, sorted."""
    if not pt.has_coords:
        raise ValueError("coordinate form absent; divisor not available")
    return tuple(tuple(sorted(ws)) for ws in pt.w)


def eta_shift(pt: ZastavaPoint, i: int) -> ZastavaPoint:
    """The shift automorphism on color i: R_i -> z*R_i - r_{i,a_i-1}*Q_i.

    Q is unchanged; on coordinates y_{i,r} -> w_{i,r} * y_{i,r}.  Requires
    the trigonometric tier, which the shift preserves.
    """
    if pt.tier is not Tier.TRIGONOMETRIC:
        raise ValueError("eta shift is defined on the trigonometric tier")
    a = pt.degrees[i]
    lead = pt.R[i].coeff(a - 1)
    newR = pt.R[i].shift(1) - pt.Q[i] * lead
    assert newR.is_zero or newR.degree < a
    R = list(pt.R)
    R[i] = newR
    w = y = None
    if pt.has_coords:
        w = pt.w
        y = list(pt.y)
        y[i] = tuple(newR(wv) for wv in pt.w[i])
        y = tuple(y)
    out = ZastavaPoint(pt.datum, pt.Q, tuple(R), w, y)
    if out.tier is not Tier.TRIGONOMETRIC:
        raise AssertionError("eta shift left the trigonometric tier")
    return out


# -- closed-form series coefficients ---------------------------------------


def coordinate_ring(degrees: Sequence[int], extra: Sequence[str] = ()) -> Ring:
    """Ring over w_{i,r}, y_{i,r} (colors numbered from 1) plus extras."""
    names = []
    for i, a in enumerate(degrees, start=1):
        names += [f"w{i}_{r}" for r in range(1, a + 1)]
        names += [f"y{i}_{r}" for r in range(1, a + 1)]
    return Ring(tuple(names) + tuple(extra))


def series_closed_form(pt: ZastavaPoint, i: int, j: int, ring: Optional[Ring] = None) -> MultiRat:
    """c_j of color i as the rational function sum_r y w^j / Q'(w) in the
    point's coordinate variables."""
    if not pt.has_coords:
        raise ValueError("coordinate form required")
    a = pt.degrees[i]
    if ring is None:
        ring = coordinate_ring(pt.degrees)
    wn = [f"w{i + 1}_{r}" for r in range(1, a + 1)]
    yn = [f"y{i + 1}_{r}" for r in range(1, a + 1)]
    return series_coefficient_rat(ring, wn, yn, j)


def coordinate_assignment(pt: ZastavaPoint) -> dict[str, Fraction]:
    """Map coordinate variable names to the point's values."""
    if not pt.has_coords:
        raise ValueError("coordinate form required")
    out: dict[str, Fraction] = {}
    for i, (ws, ys) in enumerate(zip(pt.w, pt.y), start=1):
        for r, (wv, yv) in enumerate(zip(ws, ys), start=1):
            out[f"w{i}_{r}"] = wv
            out[f"y{i}_{r}"] = yv
    return out
