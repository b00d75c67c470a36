"""Cartan data for classical finite types and their untwisted affinizations,
plus reduced words for translation elements of the affine Weyl group.

The pairing matrix is P = diag(d) * C, with the symmetrizer d normalized so
the smallest diagonal entry of P is 2.  Affine Cartan matrices are computed
from the highest root rather than hardcoded per type.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence


@dataclass(frozen=True)
class RootDatum:
    label: str
    cartan: tuple[tuple[int, ...], ...]
    d: tuple[Fraction, ...]  # symmetrizers, min normalized to 1
    affine: bool = False
    finite: Optional["RootDatum"] = None  # underlying finite datum when affine

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def pairing(self) -> tuple[tuple[Fraction, ...], ...]:
        """P_ij = d_i * C_ij; symmetric with diagonal 2*d_i."""
        return tuple(
            tuple(self.d[i] * self.cartan[i][j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def __post_init__(self):
        c = self.cartan
        n = self.rank
        for i in range(n):
            if c[i][i] != 2:
                raise ValueError("Cartan diagonal must be 2")
            for j in range(n):
                if i != j and c[i][j] > 0:
                    raise ValueError("off-diagonal Cartan entries must be <= 0")
                if (c[i][j] == 0) != (c[j][i] == 0):
                    raise ValueError("Cartan zero pattern must be symmetric")
        p = self.pairing
        for i in range(n):
            for j in range(n):
                if p[i][j] != p[j][i]:
                    raise ValueError("symmetrizer does not symmetrize the Cartan matrix")
        if min(self.d) != 1:
            raise ValueError("symmetrizer must be normalized to min d_i = 1")


def _cartan_finite(family: str, n: int) -> list[list[int]]:
    if n < 1:
        raise ValueError("rank must be >= 1")
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        c[i][i + 1] = c[i + 1][i] = -1
    if family == "A":
        pass
    elif family == "B":
        if n < 2:
            raise ValueError("B_n needs rank >= 2")
        c[n - 2][n - 1] = -2  # last node short
    elif family == "C":
        if n < 2:
            raise ValueError("C_n needs rank >= 2")
        c[n - 1][n - 2] = -2  # last node long
    elif family == "D":
        if n < 3:
            raise ValueError("D_n needs rank >= 3")
        c[n - 2][n - 1] = c[n - 1][n - 2] = 0
        c[n - 3][n - 1] = c[n - 1][n - 3] = -1
    else:
        raise ValueError(f"unsupported type family {family!r}")
    return c


def _symmetrizer(c: Sequence[Sequence[int]]) -> list[Fraction]:
    """Positive d with d_i C_ij = d_j C_ji, normalized to min 1."""
    n = len(c)
    d: list[Optional[Fraction]] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i != j and c[i][j] != 0:
                    dj = d[i] * Fraction(c[i][j], c[j][i])
                    if d[j] is None:
                        d[j] = dj
                        stack.append(j)
                    elif d[j] != dj:
                        raise ValueError("Cartan matrix is not symmetrizable")
    m = min(d)  # type: ignore[arg-type]
    return [x / m for x in d]  # type: ignore[operator,union-attr]


def _positive_roots(c: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """All positive roots, as coordinate vectors in the simple-root basis."""
    n = len(c)
    simples = [tuple(int(i == j) for j in range(n)) for i in range(n)]

    def reflect(alpha: tuple[int, ...], i: int) -> tuple[int, ...]:
        # s_i(alpha) = alpha - <alpha_i^vee, alpha> alpha_i
        pair = sum(c[i][k] * alpha[k] for k in range(n))
        out = list(alpha)
        out[i] -= pair
        return tuple(out)

    seen = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for alpha in frontier:
            for i in range(n):
                beta = reflect(alpha, i)
                if beta not in seen:
                    seen.add(beta)
                    nxt.append(beta)
        frontier = nxt
    return sorted(a for a in seen if all(x >= 0 for x in a) and any(a))


def _highest_root(c: Sequence[Sequence[int]]) -> tuple[int, ...]:
    pos = _positive_roots(c)
    theta = max(pos, key=sum)
    # the highest root dominates every positive root coordinatewise
    for alpha in pos:
        if any(t < a for t, a in zip(theta, alpha)):
            raise ValueError("no unique highest root (reducible Cartan matrix?)")
    return theta


def datum(type_tag: str) -> RootDatum:
    """Construct a root datum from a tag like "A2", "B3", or "A1-affine"."""
    tag = type_tag.strip()
    affine = False
    if tag.endswith("-affine"):
        affine = True
        tag = tag[: -len("-affine")]
    if len(tag) < 2 or tag[0].upper() not in "ABCD":
        raise ValueError(f"unsupported type tag {type_tag!r}")
    family = tag[0].upper()
    n = int(tag[1:])
    c = _cartan_finite(family, n)
    fin = RootDatum(label=f"{family}{n}", cartan=tuple(map(tuple, c)), d=tuple(_symmetrizer(c)))
    if not affine:
        return fin
    return affinize(fin)


def affinize(fin: RootDatum) -> RootDatum:
    """Untwisted affine Cartan matrix: extra node 0 attached via the highest
    root theta: C_{0j} = -<theta^vee, alpha_j>, C_{j0} = -<alpha_j^vee, theta>."""
    c = fin.cartan
    n = fin.rank
    theta = _highest_root(c)
    dtheta = sum(
        theta[k] * theta[l] * fin.d[k] * c[k][l] for k in range(n) for l in range(n)
    ) / 2
    row0 = [2]
    col0 = []
    for j in range(n):
        # <alpha_j^vee, theta> = sum_k theta_k C_jk
        col0.append(-sum(theta[k] * c[j][k] for k in range(n)))
        # <theta^vee, alpha_j> = (theta, alpha_j) / d_theta = sum_k theta_k d_k C_kj / d_theta
        val = sum(theta[k] * fin.d[k] * c[k][j] for k in range(n)) / dtheta
        if val.denominator != 1:
            raise ValueError("non-integral affine Cartan entry")
        row0.append(-int(val))
    aff = [row0] + [[col0[j]] + list(c[j]) for j in range(n)]
    d0 = [dtheta] + list(fin.d)
    m = min(d0)
    d0 = [x / m for x in d0]
    return RootDatum(
        label=f"{fin.label}-affine",
        cartan=tuple(map(tuple, aff)),
        d=tuple(d0),
        affine=True,
        finite=fin,
    )


@dataclass(frozen=True)
class WeylWord:
    letters: tuple[int, ...]  # indices into I_a; 0 is the affine node

    def __len__(self) -> int:
        return len(self.letters)


class _AffineElement:
    """Element of W ltimes Q^vee as x -> u(x) + nu.

    ``mroot``/``mcoroot`` are the matrices of u on the root and coroot
    lattices (simple-root / simple-coroot bases); ``nu`` is the translation
    part in the coroot basis.
    """

    def __init__(self, mroot, mcoroot, nu):
        self.mroot = mroot
        self.mcoroot = mcoroot
        self.nu = tuple(nu)

    @staticmethod
    def identity(n: int) -> "_AffineElement":
        eye = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        return _AffineElement(eye, eye, (0,) * n)

    def is_identity(self) -> bool:
        n = len(self.nu)
        return all(x == 0 for x in self.nu) and all(
            self.mroot[i][j] == int(i == j) for i in range(n) for j in range(n)
        )


def _mat_apply(m, v):
    return tuple(sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(m)))


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


class AffineWeyl:
    """The affine Weyl group of a finite root datum, realized on the coroot
    lattice with s_0 = t_{theta^vee} s_theta."""

    def __init__(self, fin: RootDatum):
        self.fin = fin
        n = fin.rank
        c = fin.cartan
        self.n = n
        self.theta = _highest_root(c)
        dtheta = sum(
            self.theta[k] * self.theta[l] * fin.d[k] * c[k][l]
            for k in range(n)
            for l in range(n)
        ) / 2
        # theta^vee in the coroot basis
        self.theta_covec = tuple(
            Fraction(self.theta[k]) * fin.d[k] / dtheta for k in range(n)
        )
        if any(x.denominator != 1 for x in self.theta_covec):
            raise ValueError("theta^vee is not in the coroot lattice")
        self.theta_covec = tuple(int(x) for x in self.theta_covec)
        # reflection matrices for the finite generators
        self._sroot = []
        self._scoroot = []
        for i in range(n):
            sr = [[int(a == b) for b in range(n)] for a in range(n)]
            sc = [[int(a == b) for b in range(n)] for a in range(n)]
            for j in range(n):
                sr[i][j] -= c[i][j]  # action on root coordinates
                sc[i][j] -= c[j][i]  # action on coroot coordinates
            self._sroot.append(tuple(map(tuple, sr)))
            self._scoroot.append(tuple(map(tuple, sc)))
        # s_theta on both lattices, built from a reduced word for it
        self._stheta_root, self._stheta_coroot = self._reflection_matrices(self.theta)

    def _reflection_matrices(self, alpha):
        n = self.n
        c = self.fin.cartan
        d = self.fin.d
        dalpha = (
            sum(alpha[k] * alpha[l] * d[k] * c[k][l] for k in range(n) for l in range(n))
            / 2
        )
        alpha_covec = [Fraction(alpha[k]) * d[k] / dalpha for k in range(n)]
        mroot = [[Fraction(0)] * n for _ in range(n)]
        mcoroot = [[Fraction(0)] * n for _ in range(n)]
        for j in range(n):
            # s_alpha(alpha_j) = alpha_j - <alpha^vee, alpha_j> alpha
            pair = sum(alpha_covec[k] * c[k][j] for k in range(n))
            for i in range(n):
                mroot[i][j] = Fraction(int(i == j)) - pair * alpha[i]
            # s_alpha(alpha_j^vee) = alpha_j^vee - <alpha_j^vee, alpha> alpha^vee
            pairc = sum(c[j][k] * alpha[k] for k in range(n))
            for i in range(n):
                mcoroot[i][j] = Fraction(int(i == j)) - pairc * alpha_covec[i]
        return (
            tuple(tuple(row) for row in mroot),
            tuple(tuple(row) for row in mcoroot),
        )

    # -- group operations ------------------------------------------------

    def identity(self) -> _AffineElement:
        return _AffineElement.identity(self.n)

    def translation(self, lam: Sequence[int]) -> _AffineElement:
        e = self.identity()
        return _AffineElement(e.mroot, e.mcoroot, tuple(lam))

    def right_multiply_simple(self, g: _AffineElement, i: int) -> _AffineElement:
        """g * s_i where i in {0, 1..n} (0 = affine node)."""
        if i == 0:
            nu = tuple(
                g.nu[k] + _mat_apply(g.mcoroot, self.theta_covec)[k]
                for k in range(self.n)
            )
            return _AffineElement(
                _mat_mul(g.mroot, self._stheta_root),
                _mat_mul(g.mcoroot, self._stheta_coroot),
                nu,
            )
        j = i - 1
        return _AffineElement(
            _mat_mul(g.mroot, self._sroot[j]),
            _mat_mul(g.mcoroot, self._scoroot[j]),
            g.nu,
        )

    def affine_root_image(self, g: _AffineElement, i: int):
        """Image of the affine simple root alpha_i under g, as (finite part
        in root coordinates, delta coefficient)."""
        if i == 0:
            alpha = tuple(-t for t in self.theta)
            k = 1
        else:
            alpha = tuple(int(j == i - 1) for j in range(self.n))
            k = 0
        beta = _mat_apply(g.mroot, alpha)
        # k' = k - <nu, u(alpha)>
        pair = sum(
            g.nu[j] * sum(self.fin.cartan[j][m] * beta[m] for m in range(self.n))
            for j in range(self.n)
        )
        return beta, k - pair

    def is_negative_affine_root(self, beta, k) -> bool:
        if k != 0:
            return k < 0
        # finite root: negative iff all coordinates <= 0
        return all(x <= 0 for x in beta) and any(beta)

    def right_descent(self, g: _AffineElement, i: int) -> bool:
        beta, k = self.affine_root_image(g, i)
        return self.is_negative_affine_root(beta, k)


def translation_word(aff: RootDatum, lam: Sequence[int]) -> tuple[WeylWord, dict]:
    """Reduced word for the translation by lam (coefficients over the simple
    coroots, all >= 0) in the affine Weyl group.

    Returns the word together with a small report: the word length, the
    value 2*sum(lam), and whether they agree (they do for A_1; the general
    relation is not assumed).
    """
    if not aff.affine or aff.finite is None:
        raise ValueError("translation_word requires an affine datum")
    lam = [int(x) for x in lam]
    if any(x < 0 for x in lam):
        raise ValueError("coweight coefficients must be >= 0")
    group = AffineWeyl(aff.finite)
    g = group.translation(lam)
    letters_rev: list[int] = []
    guard = 4 * sum(lam) * (group.n + 1) ** 2 + 8
    while not g.is_identity():
        if len(letters_rev) > guard:
            raise RuntimeError("descent loop failed to terminate")
        for i in range(group.n + 1):
            if group.right_descent(g, i):
                g = group.right_multiply_simple(g, i)
                letters_rev.append(i)
                break
        else:
            raise RuntimeError("no descent found for a non-identity element")
    word = WeylWord(tuple(reversed(letters_rev)))
    report = {
        "length": len(word),
        "two_sum": 2 * sum(lam),
        "length_matches_two_sum": len(word) == 2 * sum(lam),
    }
    return word, report
