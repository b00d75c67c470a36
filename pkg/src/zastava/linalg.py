"""Exact matrices, determinant strategies, and structured determinants.

Covers the three cross-checking determinant routes (fraction-free Bareiss
on an integer lift, cofactor expansion with memoization, and Bird's
division-free scheme), Hankel matrices/minors of a Laurent series, the
Sylvester matrix in the row arrangement used throughout this package, and
the odd/even sub-resultant minors cut from it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Sequence

from .series import InfSeries
from .unipoly import UniPoly

Entry = object  # Fraction in numeric mode, MultiRat in symbolic mode

SYMBOLIC_COFACTOR_CAP = 6


@dataclass(frozen=True)
class ExactMatrix:
    entries: tuple[tuple[Entry, ...], ...]

    def __init__(self, rows: Sequence[Sequence[Entry]]):
        tup = tuple(tuple(r) for r in rows)
        if tup and any(len(r) != len(tup[0]) for r in tup):
            raise ValueError("ragged rows")
        object.__setattr__(self, "entries", tup)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, rc: tuple[int, int]) -> Entry:
        return self.entries[rc[0]][rc[1]]

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        return ExactMatrix(
            [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix([[self.entries[i][j] for j in cols] for i in rows])

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = self.entries[i][0] * other.entries[0][j]
                for k in range(1, self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return ExactMatrix(out)


# -- determinant strategies ---------------------------------------------


def _det_bareiss(m: ExactMatrix) -> Fraction:
    """Fraction-free Bareiss on a common-denominator integer lift."""
    n = m.rows
    if n == 0:
        return Fraction(1)
    denlcm = 1
    for row in m.entries:
        for x in row:
            denlcm = denlcm * x.denominator // gcd(denlcm, x.denominator)
    a = [[int(x * denlcm) for x in row] for row in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1], denlcm**n)


def _det_cofactor(m: ExactMatrix) -> Entry:
    """Cofactor expansion memoized over column subsets; entry-type generic."""
    n = m.rows
    if n == 0:
        return Fraction(1)
    cache: dict[tuple[int, ...], Entry] = {}

    def minor(row: int, cols: tuple[int, ...]) -> Entry:
        if len(cols) == 1:
            return m.entries[row][cols[0]]
        if row == m.rows - len(cols) and cols in cache:
            return cache[cols]
        acc = None
        for pos, c in enumerate(cols):
            e = m.entries[row][c]
            rest = cols[:pos] + cols[pos + 1 :]
            term = e * minor(row + 1, rest)
            if pos % 2:
                term = -term
            acc = term if acc is None else acc + term
        if row == m.rows - len(cols):
            cache[cols] = acc
        return acc

    return minor(0, tuple(range(n)))


def _det_division_free(m: ExactMatrix) -> Fraction:
    """Bird's division-free determinant (O(n^4) ring operations)."""
    n = m.rows
    if n == 0:
        return Fraction(1)
    a = [list(row) for row in m.entries]
    x = [row[:] for row in a]
    for _ in range(n - 1):
        # mu(x): strictly upper part kept, lower part zeroed, diagonal entry
        # i replaced by -(x[i+1][i+1] + ... + x[n-1][n-1])
        mu = [[Fraction(0)] * n for _ in range(n)]
        tail = Fraction(0)
        for i in range(n - 1, -1, -1):
            mu[i][i] = -tail
            tail += x[i][i]
            for j in range(i + 1, n):
                mu[i][j] = x[i][j]
        x = [
            [
                sum((mu[i][k] * a[k][j] for k in range(n)), start=Fraction(0))
                for j in range(n)
            ]
            for i in range(n)
        ]
    d = x[0][0]
    return d if n % 2 else -d


_STRATEGIES: dict[str, Callable[[ExactMatrix], Entry]] = {
    "bareiss": _det_bareiss,
    "cofactor": _det_cofactor,
    "division_free": _det_division_free,
}


def det(m: ExactMatrix, strategy: str = "bareiss") -> Entry:
    """Exact determinant; ``strategy`` in {bareiss, cofactor, division_free}.

    Matrices with symbolic (MultiRat) entries must use the cofactor
    strategy and are capped at 6x6.
    """
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    if strategy not in _STRATEGIES:
        raise ValueError(f"unknown determinant strategy {strategy!r}")
    symbolic = any(
        not isinstance(x, (Fraction, int)) for row in m.entries for x in row
    )
    if symbolic:
        if strategy != "cofactor":
            raise ValueError("symbolic-mode determinants require the cofactor strategy")
        if m.rows > SYMBOLIC_COFACTOR_CAP:
            raise ValueError(
                f"symbolic determinant capped at {SYMBOLIC_COFACTOR_CAP}x{SYMBOLIC_COFACTOR_CAP}"
            )
    return _STRATEGIES[strategy](m)


def solve_linear(a: ExactMatrix, b: Sequence[Fraction]) -> list[Fraction]:
    """Solve a*x = b exactly by Gaussian elimination; raises on singular a."""
    if not a.is_square or a.rows != len(b):
        raise ValueError("dimension mismatch in linear solve")
    n = a.rows
    aug = [list(row) + [Fraction(v)] for row, v in zip(a.entries, b)]
    for k in range(n):
        piv = next((i for i in range(k, n) if aug[i][k] != 0), None)
        if piv is None:
            raise ValueError("singular linear system")
        aug[k], aug[piv] = aug[piv], aug[k]
        inv = 1 / aug[k][k]
        aug[k] = [x * inv for x in aug[k]]
        for i in range(n):
            if i != k and aug[i][k] != 0:
                f = aug[i][k]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[k])]
    return [aug[i][n] for i in range(n)]


# -- Hankel matrices and minors -------------------------------------------


def hankel_matrix(c: InfSeries, size: int) -> ExactMatrix:
    """The size x size matrix with entry (j,k) = c_{j+k}."""
    if c.order < 2 * size - 1:
        raise ValueError(
            f"need {2 * size - 1} series coefficients, have {c.order}"
        )
    return ExactMatrix(
        [[c.coeff(j + k) for k in range(size)] for j in range(size)]
    )


def hankel_minor_C(c: InfSeries, r: int) -> Fraction:
    """Principal r x r Hankel minor, det [c_{j+k}]_{j,k=0}^{r-1}."""
    if r < 1:
        raise ValueError("minor size must be >= 1")
    if c.order < 2 * r - 1:
        raise ValueError(f"need {2 * r - 1} series coefficients, have {c.order}")
    return det(
        ExactMatrix([[c.coeff(j + k) for k in range(r)] for j in range(r)])
    )


def hankel_minor_D(c: InfSeries, r: int) -> Fraction:
    """Shifted r x r Hankel minor, det [c_{j+k+1}]_{j,k=0}^{r-1}."""
    if r < 1:
        raise ValueError("minor size must be >= 1")
    if c.order < 2 * r:
        raise ValueError(f"need {2 * r} series coefficients, have {c.order}")
    return det(
        ExactMatrix([[c.coeff(j + k + 1) for k in range(r)] for j in range(r)])
    )


# -- Sylvester arrangement and sub-resultants ------------------------------


def sylvester_matrix(Q: UniPoly, R: UniPoly) -> ExactMatrix:
    """(2a-1) x (2a-1) Sylvester matrix of a monic Q (deg a) and R (deg < a).

    Rows 1..a-1 carry shifted (1, q_{a-1}, ..., q_0); rows a..2a-1 carry the
    R coefficients with r_{a-1} starting at column a and marching left, so
    the bottom row is (r_{a-1}, ..., r_0, 0, ..., 0).
    """
    a = Q.degree
    if a is None or a < 1:
        raise ValueError("Q must have degree >= 1")
    if not Q.is_monic:
        raise ValueError("Q must be monic")
    if not R.is_zero and R.degree >= a:
        raise ValueError("R must have degree < deg Q")
    n = 2 * a - 1
    rows = []
    for t in range(1, a):  # Q-rows
        # entry at column c (1-based): q_{a - c + t}, with q_a = 1
        rows.append(
            [
                Q.coeff(a - c + t) if 0 <= a - c + t <= a else Fraction(0)
                for c in range(1, n + 1)
            ]
        )
    for u in range(1, a + 1):  # R-rows, reversed stacking
        rows.append(
            [
                R.coeff(2 * a - u - c) if 0 <= 2 * a - u - c < a else Fraction(0)
                for c in range(1, n + 1)
            ]
        )
    return ExactMatrix(rows)


def subresultant_odd(Q: UniPoly, R: UniPoly, i: int) -> Fraction:
    """Central minor of the Sylvester matrix with i rows/columns removed on
    every side (size 2a-1-2i)."""
    a = Q.degree
    if a is None:
        raise ValueError("Q must be nonzero")
    if not 0 <= i <= a - 1:
        raise ValueError(f"odd sub-resultant index {i} out of range for a={a}")
    s = sylvester_matrix(Q, R)
    keep = list(range(i, 2 * a - 1 - i))
    return det(s.submatrix(keep, keep))


def subresultant_even(Q: UniPoly, R: UniPoly, i: int) -> Fraction:
    """Minor of the Sylvester matrix with the middle row removed, i rows
    trimmed top and bottom, i columns on the left and i+1 on the right
    (size 2a-2-2i)."""
    a = Q.degree
    if a is None:
        raise ValueError("Q must be nonzero")
    if not 0 <= i <= a - 2:
        raise ValueError(f"even sub-resultant index {i} out of range for a={a}")
    s = sylvester_matrix(Q, R)
    middle = a - 1  # 0-based index of the first R-row
    rows = [r for r in range(i, 2 * a - 1 - i) if r != middle]
    cols = list(range(i, 2 * a - 2 - i))
    return det(s.submatrix(rows, cols))
