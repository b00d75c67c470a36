import random
from fractions import Fraction as F

import pytest

from zastava.linalg import (
    ExactMatrix,
    det,
    hankel_matrix,
    hankel_minor_C,
    hankel_minor_D,
    solve_linear,
    subresultant_even,
    subresultant_odd,
    sylvester_matrix,
)
from zastava.series import InfSeries, series_expand
from zastava.unipoly import UniPoly

STRATEGIES = ("bareiss", "cofactor", "division_free")


def test_det_examples():
    m = ExactMatrix([[1, 5], [5, 17]])
    for s in STRATEGIES:
        assert det(m, strategy=s) == -8
    assert det(ExactMatrix.identity(4)) == 1
    assert det(ExactMatrix([[1, 2], [1, 2]])) == 0


def test_det_non_square():
    with pytest.raises(ValueError):
        det(ExactMatrix([[1, 2]]))


def test_strategy_agreement_random():
    rng = random.Random(5)
    for _ in range(15):
        n = rng.randint(1, 6)
        m = ExactMatrix(
            [[F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)] for _ in range(n)]
        )
        vals = {det(m, strategy=s) for s in STRATEGIES}
        assert len(vals) == 1


def test_hankel_matrix():
    c = InfSeries((F(1), F(5), F(17)))
    m = hankel_matrix(c, 2)
    assert m[0, 0] == 1 and m[0, 1] == 5 and m[1, 0] == 5 and m[1, 1] == 17
    assert hankel_matrix(InfSeries((F(3),)), 1)[0, 0] == 3
    with pytest.raises(Exception):
        hankel_matrix(c, 3)


def test_hankel_minors():
    c = InfSeries((F(1), F(5), F(17), F(53)))
    assert hankel_minor_C(c, 1) == 1
    assert hankel_minor_C(c, 2) == -8
    assert hankel_minor_D(c, 1) == 5
    assert hankel_minor_D(c, 2) == -24
    zero = InfSeries((F(0), F(0), F(0)))
    assert hankel_minor_C(zero, 2) == 0


def test_sylvester_a1():
    m = sylvester_matrix(UniPoly([-2, 1]), UniPoly([3]))
    assert m.rows == m.cols == 1 and m[0, 0] == 3


def test_sylvester_a2_display():
    m = sylvester_matrix(UniPoly([3, -4, 1]), UniPoly([1, 1]))
    rows = [[m[i, j] for j in range(3)] for i in range(3)]
    assert rows == [[1, -4, 3], [0, 1, 1], [1, 1, 0]]


def test_sylvester_zero_R():
    m = sylvester_matrix(UniPoly([-1, 1]), UniPoly.zero())
    assert m.rows == 1 and m[0, 0] == 0


def test_subresultants_a2():
    Q, R = UniPoly([3, -4, 1]), UniPoly([1, 1])
    assert abs(subresultant_odd(Q, R, 0)) == 8
    assert abs(subresultant_odd(Q, R, 1)) == 1
    assert abs(subresultant_even(Q, R, 0)) == 5
    assert subresultant_odd(UniPoly([-2, 1]), UniPoly([3]), 0) == 3


def test_subresultant_range():
    Q, R = UniPoly([3, -4, 1]), UniPoly([1, 1])
    with pytest.raises(ValueError):
        subresultant_odd(Q, R, 2)
    with pytest.raises(ValueError):
        subresultant_even(Q, R, 1)


def test_kronecker_random_a3():
    rng = random.Random(11)
    for _ in range(10):
        roots = set()
        while len(roots) < 3:
            roots.add(F(rng.randint(-6, 6)))
        Q = UniPoly.from_roots(sorted(roots))
        R = UniPoly([F(rng.randint(-6, 6)) for _ in range(3)])
        c = series_expand(R, Q, 7)
        for i in range(3):
            assert abs(subresultant_odd(Q, R, i)) == abs(hankel_minor_C(c, 3 - i))
        for i in range(2):
            assert abs(subresultant_even(Q, R, i)) == abs(hankel_minor_D(c, 2 - i))


def test_solve_linear():
    a = ExactMatrix([[2, 1], [1, 3]])
    x = solve_linear(a, [F(5), F(10)])
    assert x == [F(1), F(3)]
    with pytest.raises(ValueError):
        solve_linear(ExactMatrix([[1, 1], [2, 2]]), [F(1), F(1)])


def test_symbolic_det_cap():
    from zastava.multirat import Ring

    ring = Ring(("t",))
    t = ring.rat_var("t")
    m = ExactMatrix([[t, ring.rat_const(1)], [ring.rat_const(1), t]])
    assert det(m, strategy="cofactor") == t * t - ring.rat_const(1)
    big = ExactMatrix([[t] * 7 for _ in range(7)])
    with pytest.raises(ValueError):
        det(big, strategy="cofactor")
