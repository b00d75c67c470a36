"""Poisson structures on the coordinate charts, in two flavors.

A bracket table fixes, for a root datum and a degree vector, the pairwise
brackets of the chart coordinates w_{i,r}, y_{i,r} (and optionally the
leading coefficients B_i).  The rational flavor has {w, y} proportional to
y; the trigonometric flavor to w*y.  Everything downstream — the Jacobi
identity, the symplectic inverse, and the generating-series identities for
the colored polynomials — is checked symbolically in exact arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .linalg import ExactMatrix
from .multirat import MultiRat, Ring
from .rootdata import RootDatum


@dataclass(frozen=True)
class BracketTable:
    """Pairwise coordinate brackets for one chart.

    kind is "rational" or "trigonometric"; with extended=True the chart
    also carries one coordinate B_i per color (Poisson-central in the
    rational flavor, scaling against y in the trigonometric one).
    """

    datum: RootDatum
    degrees: tuple[int, ...]
    kind: str
    extended: bool = False
    extra: tuple[str, ...] = ()
    ring: Ring = field(init=False, compare=False)

    def __post_init__(self):
        if self.kind not in ("rational", "trigonometric"):
            raise ValueError("kind must be rational or trigonometric")
        if len(self.degrees) != self.datum.rank:
            raise ValueError("one degree per color required")
        names = []
        for i, a in enumerate(self.degrees, start=1):
            names += [f"w{i}_{r}" for r in range(1, a + 1)]
            names += [f"y{i}_{r}" for r in range(1, a + 1)]
            if self.extended:
                names.append(f"B{i}")
        object.__setattr__(self, "ring", Ring(tuple(names) + tuple(self.extra)))

    @property
    def coordinates(self) -> tuple[str, ...]:
        return self.ring.names[: len(self.ring.names) - len(self.extra)]

    def var(self, name: str) -> MultiRat:
        return self.ring.rat_var(name)

    def _parse(self, name: str) -> tuple[str, int, int]:
        # "w3_2" -> ("w", 3, 2); "B3" -> ("B", 3, 0)
        if name.startswith("B"):
            return "B", int(name[1:]), 0
        kind = name[0]
        i, r = name[1:].split("_")
        return kind, int(i), int(r)

    def coordinate_bracket(self, a: str, b: str) -> MultiRat:
        """{a, b} for coordinate names a, b, as a rational function."""
        ka, ia, ra = self._parse(a)
        kb, ib, rb = self._parse(b)
        if ka > kb or (ka == kb and (ia, ra) > (ib, rb)):
            return -self.coordinate_bracket(b, a)
        d = self.datum.d
        P = self.datum.pairing
        R = self.ring
        zero = R.rat_const(0)
        if ka == kb == "w" or ka == kb == "B" or (ka, kb) == ("B", "w"):
            return zero
        if (ka, kb) == ("w", "y"):
            if ia != ib or ra != rb:
                return zero
            coef = R.rat_const(d[ia - 1])
            wy = self.var(a) * self.var(b) if self.kind == "trigonometric" else self.var(b)
            return coef * wy
        if (ka, kb) == ("y", "y"):
            if ia == ib:
                return zero
            w1 = self.var(f"w{ia}_{ra}")
            w2 = self.var(f"w{ib}_{rb}")
            num = (w1 + w2) / R.rat_const(2) if self.kind == "trigonometric" else R.rat_const(1)
            return R.rat_const(P[ia - 1][ib - 1]) * num / (w1 - w2) * self.var(a) * self.var(b)
        if (ka, kb) == ("B", "y"):
            if self.kind == "rational" or ia != ib:
                return zero
            return R.rat_const(Fraction(-d[ia - 1], 2)) * self.var(a) * self.var(b)
        raise AssertionError(f"unhandled pair {a}, {b}")

    def bracket(self, f: MultiRat, g: MultiRat) -> MultiRat:
        """{f, g} by the Leibniz expansion over coordinate pairs.

        Ring variables beyond the coordinates (for example spectral
        parameters) are treated as constants.
        """
        coords = [c for c in self.coordinates if f.depends_on(c) or g.depends_on(c)]
        df = {c: f.diff(c) for c in coords}
        dg = {c: g.diff(c) for c in coords}
        total = self.ring.rat_const(0)
        for a, b in itertools.combinations(coords, 2):
            rule = self.coordinate_bracket(a, b)
            if rule.is_zero:
                continue
            total = total + rule * (df[a] * dg[b] - df[b] * dg[a])
        return total


def jacobi_check(table: BracketTable, f: MultiRat, g: MultiRat, h: MultiRat) -> MultiRat:
    """The cyclic sum {f,{g,h}} + {g,{h,f}} + {h,{f,g}}; zero means pass."""
    return (
        table.bracket(f, table.bracket(g, h))
        + table.bracket(g, table.bracket(h, f))
        + table.bracket(h, table.bracket(f, g))
    )


def jacobi_report(table: BracketTable, triples: Optional[Sequence[tuple[str, str, str]]] = None) -> dict:
    """Jacobi sums over coordinate triples; defaults to every unordered
    triple of chart coordinates."""
    coords = table.coordinates
    if triples is None:
        triples = list(itertools.combinations(coords, 3))
    failures = []
    for a, b, c in triples:
        s = jacobi_check(table, table.var(a), table.var(b), table.var(c))
        if not s.is_zero:
            failures.append((a, b, c))
    return {"ok": not failures, "checked": len(list(triples)), "failures": failures}


def bivector_matrix(table: BracketTable) -> ExactMatrix:
    """Matrix of {x_a, x_b} over the chart coordinates, in chart order."""
    coords = table.coordinates
    return ExactMatrix(
        [[table.coordinate_bracket(a, b) for b in coords] for a in coords]
    )


def symplectic_form_trig(table: BracketTable) -> ExactMatrix:
    """Closed-form inverse of the trigonometric bivector (B_i absent).

    Nonzero blocks: the (y_{i,r}, w_{i,r}) pairing 1/(d_i w y), and the
    cross-color (w_{i,r}, w_{j,s}) entries
    (P_ij / (2 d_i d_j)) (w + w') / ((w - w') w w').
    """
    if table.kind != "trigonometric" or table.extended:
        raise ValueError("closed-form inverse stated for the plain trigonometric chart")
    R = table.ring
    d = table.datum.d
    P = table.datum.pairing
    coords = table.coordinates
    zero = R.rat_const(0)

    def entry(a: str, b: str) -> MultiRat:
        ka, ia, ra = table._parse(a)
        kb, ib, rb = table._parse(b)
        if (ka, kb) == ("y", "w") and (ia, ra) == (ib, rb):
            return R.rat_const(Fraction(1, d[ia - 1])) / (table.var(a) * table.var(b))
        if (ka, kb) == ("w", "y") and (ia, ra) == (ib, rb):
            return -entry(b, a)
        if ka == kb == "w" and ia != ib:
            w1, w2 = table.var(a), table.var(b)
            coef = R.rat_const(Fraction(P[ia - 1][ib - 1], 2 * d[ia - 1] * d[ib - 1]))
            return coef * (w1 + w2) / ((w1 - w2) * w1 * w2)
        return zero

    return ExactMatrix([[entry(a, b) for b in coords] for a in coords])


def symplectic_check_trig(datum: RootDatum, degrees: Sequence[int], point: dict) -> dict:
    """Evaluate bivector and closed-form inverse at a point; assert B*Omega = I.

    The point maps coordinate names to exact scalars; within each color the
    w's must be distinct and nonzero and the y's nonzero.
    """
    table = BracketTable(datum, tuple(degrees), "trigonometric")
    for i, a in enumerate(degrees, start=1):
        ws = [point[f"w{i}_{r}"] for r in range(1, a + 1)]
        ys = [point[f"y{i}_{r}"] for r in range(1, a + 1)]
        if len(set(ws)) != len(ws):
            raise ValueError("repeated w within a color")
        if any(v == 0 for v in ws + ys):
            raise ValueError("zero coordinate value")
    allw = [point[f"w{i}_{r}"] for i, a in enumerate(degrees, start=1) for r in range(1, a + 1)]
    if len(set(allw)) != len(allw):
        raise ValueError("coincident w across colors (form has a pole)")
    coords = table.coordinates
    n = len(coords)
    B = [
        [table.coordinate_bracket(a, b).evaluate(point) for b in coords]
        for a in coords
    ]
    Om_sym = symplectic_form_trig(table)
    Om = [[Om_sym[i, j].evaluate(point) for j in range(n)] for i in range(n)]
    bad = []
    for i in range(n):
        for j in range(n):
            got = sum(B[i][k] * Om[k][j] for k in range(n))
            if got != (1 if i == j else 0):
                bad.append((i, j, got))
    return {"ok": not bad, "size": n, "bivector": B, "form": Om, "failures": bad}


# -- generating polynomials and the descent identities ----------------------


def colored_Q(table: BracketTable, i: int, param: str) -> MultiRat:
    """Q_i(param) = B_i * prod_r (param - w_{i,r}) as a chart function."""
    R = table.ring
    z = R.rat_var(param)
    out = table.var(f"B{i + 1}") if table.extended else R.rat_const(1)
    for r in range(1, table.degrees[i] + 1):
        out = out * (z - table.var(f"w{i + 1}_{r}"))
    return out


def colored_R(table: BracketTable, i: int, param: str) -> MultiRat:
    """R_i(param): the interpolant through (w_{i,r}, y_{i,r}), scaled by B_i."""
    R = table.ring
    z = R.rat_var(param)
    a = table.degrees[i]
    total = R.rat_const(0)
    for r in range(1, a + 1):
        term = table.var(f"y{i + 1}_{r}")
        wr = table.var(f"w{i + 1}_{r}")
        for s in range(1, a + 1):
            if s == r:
                continue
            ws = table.var(f"w{i + 1}_{s}")
            term = term * (z - ws) / (wr - ws)
        total = total + term
    if table.extended:
        total = total * table.var(f"B{i + 1}")
    return total


def _kills_on_roots(table: BracketTable, expr: MultiRat, subs: Sequence[tuple[str, str]]) -> bool:
    """True when expr vanishes under every listed parameter -> root map."""
    cur = [expr]
    for param, prefix in subs:
        nxt = []
        a = int(prefix)  # color index, 1-based
        for e in cur:
            for r in range(1, table.degrees[a - 1] + 1):
                nxt.append(e.subs(param, table.var(f"w{a}_{r}")))
        cur = nxt
    return all(e.is_zero for e in cur)


def verify_descent(datum: RootDatum, degrees: Sequence[int], kind: str) -> dict:
    """Symbolic verification that the coordinate brackets reproduce the
    generating-series brackets of the colored polynomials.

    Four families, for spectral parameters z, u held constant:
      QQ:  {Q_i(z), Q_j(u)} = 0,
      QR:  {Q_i(z), R_j(u)} matches the stated right-hand side after
           evaluating u at each root of Q_j,
      RRx: for i != j, {R_i(z), R_j(u)} minus the pairing term vanishes
           at every (root of Q_i, root of Q_j) pair,
      RR0: {R_i(z), R_i(u)} = 0.
    """
    table = BracketTable(datum, tuple(degrees), kind, extended=True, extra=("z", "u"))
    R = table.ring
    n = datum.rank
    d = datum.d
    P = datum.pairing
    z = R.rat_var("z")
    u = R.rat_var("u")
    two = R.rat_const(2)
    Qz = [colored_Q(table, i, "z") for i in range(n)]
    Qu = [colored_Q(table, i, "u") for i in range(n)]
    Rz = [colored_R(table, i, "z") for i in range(n)]
    Ru = [colored_R(table, i, "u") for i in range(n)]
    checks: dict[str, bool] = {}

    qq = all(
        table.bracket(Qz[i], Qu[j]).is_zero for i in range(n) for j in range(n)
    )
    checks["QQ"] = qq

    qr = True
    for i in range(n):
        for j in range(n):
            lhs = table.bracket(Qz[i], Ru[j])
            if i != j:
                rhs = R.rat_const(0)
            elif kind == "trigonometric":
                rhs = R.rat_const(-d[i]) * (
                    (z + u) / (two * (z - u)) * Qz[i] * Ru[j]
                    - u / (z - u) * Rz[i] * Qu[j]
                )
            else:
                rhs = R.rat_const(-d[i]) / (z - u) * (Qz[i] * Ru[j] - Rz[i] * Qu[j])
            if not _kills_on_roots(table, lhs - rhs, [("u", str(j + 1))]):
                qr = False
    checks["QR"] = qr

    rrx = True
    factor = lambda: (z + u) / (two * (z - u)) if kind == "trigonometric" else R.rat_const(1) / (z - u)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            lhs = table.bracket(Rz[i], Ru[j])
            rhs = R.rat_const(P[i][j]) * factor() * Rz[i] * Ru[j]
            if not _kills_on_roots(table, lhs - rhs, [("z", str(i + 1)), ("u", str(j + 1))]):
                rrx = False
    checks["RRx"] = rrx

    checks["RR0"] = all(table.bracket(Rz[i], Ru[i]).is_zero for i in range(n))

    return {"ok": all(checks.values()), "kind": kind, "checks": checks}
