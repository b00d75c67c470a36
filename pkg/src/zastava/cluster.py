"""Cluster seeds from reduced words, mutation, and log-canonicity testing.

The exchange matrix of a word has one row per letter position and one
column per position whose letter recurs later; the defining rule puts +1
between a position and its next recurrence and Cartan entries between
interleaved positions.  For rank-one points the initial seed consists of
the Hankel-minor functions of the series expansion, interleaved along the
word (0,1)^a, with the last two positions frozen.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .linalg import ExactMatrix, det
from .multirat import MultiRat, Ring, series_coefficient_rat
from .points import Tier, ZastavaPoint, coordinate_ring
from .poisson import BracketTable


@dataclass(frozen=True)
class ExchangeMatrix:
    """Rectangular integer matrix: rows are word positions 1..l, columns
    the exchangeable positions (those with a later recurrence)."""

    length: int
    columns: tuple[int, ...]
    data: tuple[tuple[int, ...], ...]  # shape (length, len(columns))

    def __post_init__(self):
        if len(self.data) != self.length:
            raise ValueError("row count mismatch")
        for row in self.data:
            if len(row) != len(self.columns):
                raise ValueError("column count mismatch")

    def entry(self, s: int, r: int) -> int:
        """b_{s,r} for 1-based positions; zero when r is not a column."""
        if r not in self.columns:
            return 0
        return self.data[s - 1][self.columns.index(r)]

    def exchangeable_block(self) -> list[list[int]]:
        return [[self.entry(s, r) for r in self.columns] for s in self.columns]

    def is_block_skew_symmetric(self) -> bool:
        blk = self.exchangeable_block()
        n = len(blk)
        return all(blk[i][j] == -blk[j][i] for i in range(n) for j in range(n))

    def mutate(self, k: int) -> "ExchangeMatrix":
        """Standard matrix mutation at an exchangeable position k."""
        if k not in self.columns:
            raise ValueError(f"position {k} is not exchangeable")
        kc = self.columns.index(k)
        kr = k - 1
        new = []
        for i in range(self.length):
            row = []
            for j, col in enumerate(self.columns):
                b = self.data[i][j]
                if i == kr or col == k:
                    row.append(-b)
                else:
                    bik = self.data[i][kc]
                    bkj = self.data[kr][j]
                    s = 1 if bik > 0 else (-1 if bik < 0 else 0)
                    row.append(b + s * max(0, bik * bkj))
            new.append(tuple(row))
        return ExchangeMatrix(self.length, self.columns, tuple(new))


def exchange_matrix(word: Sequence[int], cartan: Sequence[Sequence[int]]) -> ExchangeMatrix:
    """Build the exchange matrix of a word in the letters of a Cartan matrix.

    With s+ the next position carrying the same letter as s:
    b_{s+,s} = 1 and b_{s,s+} = -1; for s < r < s+ where the letter at r
    does not recur strictly before s+, b_{s,r} = -C_{i_s,i_r} and
    b_{r,s} = C_{i_r,i_s}.  Entries whose column position is not
    exchangeable are dropped.
    """
    if not word:
        raise ValueError("word must be nonempty")
    l = len(word)
    succ: dict[int, int] = {}
    for s in range(1, l + 1):
        for r in range(s + 1, l + 1):
            if word[r - 1] == word[s - 1]:
                succ[s] = r
                break
    columns = tuple(sorted(succ))
    b: dict[tuple[int, int], int] = {}

    def put(s: int, r: int, v: int) -> None:
        if r in succ:
            b[(s, r)] = b.get((s, r), 0) + v

    for s, sp in succ.items():
        put(sp, s, 1)
        put(s, sp, -1)
        for r in range(s + 1, sp):
            if r in succ and succ[r] < sp:
                continue
            i_s, i_r = word[s - 1], word[r - 1]
            put(s, r, -cartan[i_s][i_r])
            put(r, s, cartan[i_r][i_s])
    data = tuple(
        tuple(b.get((s, r), 0) for r in columns) for s in range(1, l + 1)
    )
    return ExchangeMatrix(l, columns, data)


@dataclass(frozen=True)
class Seed:
    """Cluster variables (chart functions) with their exchange matrix."""

    labels: tuple[str, ...]
    variables: tuple[MultiRat, ...]
    matrix: ExchangeMatrix

    def __post_init__(self):
        if len(self.labels) != self.matrix.length or len(self.variables) != self.matrix.length:
            raise ValueError("one variable per word position required")

    @property
    def frozen(self) -> tuple[int, ...]:
        return tuple(
            s for s in range(1, self.matrix.length + 1) if s not in self.matrix.columns
        )

    @property
    def exchangeable(self) -> tuple[int, ...]:
        return self.matrix.columns

    def variable(self, s: int) -> MultiRat:
        return self.variables[s - 1]


def mutate(seed: Seed, k: int) -> Seed:
    """Mutate at exchangeable position k: new matrix by the standard rule,
    x_k replaced by the exchange binomial divided by x_k."""
    if k not in seed.matrix.columns:
        raise ValueError(f"position {k} is frozen; mutation undefined")
    kc = seed.matrix.columns.index(k)
    ring = seed.variables[0].ring
    plus = ring.rat_const(1)
    minus = ring.rat_const(1)
    for j in range(1, seed.matrix.length + 1):
        b = seed.matrix.data[j - 1][kc]
        if b > 0:
            plus = plus * seed.variable(j) ** b
        elif b < 0:
            minus = minus * seed.variable(j) ** (-b)
    newvar = (plus + minus) / seed.variable(k)
    variables = list(seed.variables)
    variables[k - 1] = newvar
    labels = list(seed.labels)
    labels[k - 1] = f"mu_{k}({seed.labels[k - 1]})"
    return Seed(tuple(labels), tuple(variables), seed.matrix.mutate(k))


# -- rank-one initial seed ---------------------------------------------------


def hankel_variable(ring: Ring, a: int, family: str, m: int) -> MultiRat:
    """The size-m Hankel minor of the closed-form series coefficients,
    family "C" (offset 0) or "D" (offset 1), as a chart function."""
    offset = 0 if family == "C" else 1
    wn = [f"w1_{r}" for r in range(1, a + 1)]
    yn = [f"y1_{r}" for r in range(1, a + 1)]
    cs: dict[int, MultiRat] = {}

    def c(j: int) -> MultiRat:
        if j not in cs:
            cs[j] = series_coefficient_rat(ring, wn, yn, j)
        return cs[j]

    mat = ExactMatrix([[c(j + k + offset) for k in range(m)] for j in range(m)])
    return det(mat, strategy="cofactor")


def initial_seed_sl2(point: Optional[ZastavaPoint], a: int) -> Seed:
    """Seed for a rank-one point of degree a: variables
    [D_1, C_1, D_2, C_2, ..., D_a, C_a] along the word (0,1)^a, with the
    last two positions frozen.
    """
    if point is not None:
        if not point.is_sl2 or point.degrees != (a,):
            raise ValueError("point must be rank-one of the given degree")
        if point.tier is not Tier.TRIGONOMETRIC:
            raise ValueError("point must lie on the trigonometric tier")
    word = (0, 1) * a
    cartan = [[2, -2], [-2, 2]]
    matrix = exchange_matrix(word, cartan)
    ring = coordinate_ring((a,))
    labels = []
    variables = []
    for m in range(1, a + 1):
        labels += [f"D_{m}", f"C_{m}"]
        variables += [
            hankel_variable(ring, a, "D", m),
            hankel_variable(ring, a, "C", m),
        ]
    return Seed(tuple(labels), tuple(variables), matrix)


# -- log-canonicity ----------------------------------------------------------


def sample_chart_point(ring: Ring, a: int, rng: random.Random, positive: bool = False) -> dict[str, Fraction]:
    """Random admissible assignment: distinct nonzero w, nonzero y."""
    for _ in range(1000):
        lo = 1 if positive else -9
        ws = [Fraction(rng.randint(lo, 9), rng.randint(1, 4)) for _ in range(a)]
        ys = [Fraction(rng.randint(lo, 9), rng.randint(1, 4)) for _ in range(a)]
        if 0 in ws or 0 in ys or len(set(ws)) != a:
            continue
        out = {}
        for r in range(1, a + 1):
            out[f"w1_{r}"] = ws[r - 1]
            out[f"y1_{r}"] = ys[r - 1]
        return out
    raise RuntimeError("sampling exhaustion")


def log_canonicity_check(seed: Seed, table: BracketTable, trials: int = 5, rng: Optional[random.Random] = None) -> dict:
    """Test {x, x'}/(x x') for constancy across random admissible points.

    Partials are differentiated symbolically once; brackets are then
    assembled from exact point values (avoiding large symbolic products).
    PASS iff every pair's value set is a singleton.
    """
    if rng is None:
        rng = random.Random(0)
    a = sum(table.degrees)
    coords = table.coordinates
    partials = [{c: v.diff(c) for c in coords} for v in seed.variables]
    rules = {
        (u, v): table.coordinate_bracket(u, v)
        for u, v in itertools.combinations(coords, 2)
    }
    points = []
    while len(points) < trials:
        pt = sample_chart_point(table.ring, a, rng)
        try:
            if any(v.evaluate(pt) == 0 for v in seed.variables):
                continue
        except ZeroDivisionError:
            continue
        points.append(pt)
    pairs = []
    ok = True
    for i, j in itertools.combinations(range(len(seed.variables)), 2):
        vals = []
        for pt in points:
            dvi = {c: partials[i][c].evaluate(pt) for c in coords}
            dvj = {c: partials[j][c].evaluate(pt) for c in coords}
            br = Fraction(0)
            for (u, v), rule in rules.items():
                if rule.is_zero:
                    continue
                br += rule.evaluate(pt) * (dvi[u] * dvj[v] - dvi[v] * dvj[u])
            ratio = br / (seed.variables[i].evaluate(pt) * seed.variables[j].evaluate(pt))
            vals.append(ratio)
        constant = len(set(vals)) == 1
        ok &= constant
        pairs.append(
            {
                "pair": (seed.labels[i], seed.labels[j]),
                "values": vals,
                "constant": constant,
            }
        )
    return {"ok": ok, "trials": trials, "pairs": pairs}
