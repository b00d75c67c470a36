import random
from fractions import Fraction as F

import pytest

from zastava.linalg import hankel_minor_C, hankel_minor_D
from zastava.minors import (
    crosscheck_three_routes,
    generalized_minor_v0,
    generalized_minor_v1,
    resolve_patterns,
    wedge_entry,
    wedge_window,
)
from zastava.points import ZastavaPoint, from_coords, g_matrix
from zastava.rootdata import datum
from zastava.series import series_expand
from zastava.unipoly import UniPoly

A1 = datum("A1")


def _pt2():
    return from_coords(A1, [[F(1), F(3)]], [[F(2), F(4)]])


def test_window_transcription_degree1():
    g = g_matrix(UniPoly([-2, 1]), UniPoly([3]))
    # labels -1..2 cover one full period of the degree-1 matrix: the z^0 and
    # z^{-1} coefficients of F, D, R, Q land in a 4x4 block
    m = wedge_window(g, -1, 2)
    # constant coefficients live on the k - k' = -1 shift
    assert wedge_entry(g, 2, 0) == -2  # q_0
    assert wedge_entry(g, 2, -1) == 3  # r_0
    assert wedge_entry(g, 1, -1) == 2  # f_0
    assert wedge_entry(g, 1, 0) == F(-4, 3)  # d_0
    # monic leading coefficients sit on the main diagonal (A_0 = identity)
    assert wedge_entry(g, 1, 1) == 1 and wedge_entry(g, 2, 2) == 1
    assert m.rows == 4 and m.cols == 4


def test_entry_degree2():
    pt = _pt2()
    g = g_matrix(pt.Q[0], pt.R[0])
    # row label -2 = (k'=-2, r'=2), col label -5 = (k=-3, r=1): picks
    # (A_{-1})_{2,1} = r_1
    assert wedge_entry(g, -2, -5) == 1


def test_entries_vanish_outside_band():
    g = g_matrix(UniPoly([-2, 1]), UniPoly([3]))
    assert wedge_entry(g, 1, 5) == 0  # positive Laurent powers absent
    assert wedge_entry(g, 1, -3) == 0  # below -a


def test_resolve_patterns():
    table = resolve_patterns()
    assert table["plain"]["family"] == "C"
    assert all(s == 1 for s in table["plain"]["signs"].values())
    assert table["adjoined"]["family"] == "D"
    assert all(s == (-1) ** r for r, s in table["adjoined"]["signs"].items())


def test_minor_examples():
    pt = _pt2()
    assert generalized_minor_v1(pt, 1) == 1
    assert generalized_minor_v1(pt, 2) == -8
    assert generalized_minor_v0(pt, 1) == 5
    assert generalized_minor_v0(pt, 2) == -24


def test_minor_zero_R():
    pt = ZastavaPoint(A1, (UniPoly([3, -4, 1]),), (UniPoly.zero(),))
    assert generalized_minor_v1(pt, 1) == 0
    assert generalized_minor_v0(pt, 1) == 0


def test_minor_boundary_point():
    # gcd(Q, R) != 1: the top Hankel minor (the resultant up to sign) is 0
    pt = ZastavaPoint(A1, (UniPoly([-1, 0, 1]),), (UniPoly([1, 1]),))
    assert generalized_minor_v1(pt, 2) == 0
    assert generalized_minor_v1(pt, 1) == hankel_minor_C(pt.series(0, 5), 1)


def test_crosscheck_example():
    rep = crosscheck_three_routes(_pt2())
    assert rep["agree"]
    vals = {(r["family"], r["index"]): r for r in rep["records"]}
    assert vals[("C", 1)]["hankel"] == 1 and vals[("C", 2)]["hankel"] == -8
    assert vals[("D", 1)]["hankel"] == 5
    for r in rep["records"]:
        assert r["wedge_sign"] in (1, -1, None)
        assert r["subresultant_sign"] in (1, -1, None)


def test_crosscheck_random():
    rng = random.Random(5)
    for _ in range(8):
        a = rng.randint(1, 4)
        roots = set()
        while len(roots) < a:
            v = F(rng.randint(-9, 9))
            if v != 0:
                roots.add(v)
        R = UniPoly([F(rng.randint(-9, 9)) for _ in range(a)])
        pt = ZastavaPoint(A1, (UniPoly.from_roots(sorted(roots)),), (R,))
        assert crosscheck_three_routes(pt)["agree"]


def test_wedge_matches_hankel_larger_sizes():
    # degree 4 exceeds the calibration range; parity extrapolation of the
    # sign must still match the Hankel oracle
    rng = random.Random(11)
    for _ in range(5):
        roots = set()
        while len(roots) < 4:
            v = F(rng.randint(-9, 9))
            if v != 0:
                roots.add(v)
        Q = UniPoly.from_roots(sorted(roots))
        R = UniPoly([F(rng.randint(-9, 9)) for _ in range(4)])
        pt = ZastavaPoint(A1, (Q,), (R,))
        c = series_expand(R, Q, 9)
        for r in range(1, 5):
            assert generalized_minor_v1(pt, r) == hankel_minor_C(c, r)
        for r in range(1, 4):
            assert generalized_minor_v0(pt, r) == hankel_minor_D(c, r)


def test_rank_one_only():
    pt = from_coords(datum("A2"), [[F(2)], [F(5)]], [[F(1)], [F(1)]])
    with pytest.raises(ValueError):
        generalized_minor_v1(pt, 1)
