
import pytest

from zastava.rootdata import datum, translation_word


def test_a1():
    d = datum("A1")
    assert d.cartan == ((2,),)
    assert d.d == (1,)
    assert d.pairing == ((2,),)


def test_a2_pairing():
    d = datum("A2")
    assert d.pairing[0][1] == -1
    assert d.pairing == tuple(zip(*d.pairing))  # symmetric


def test_b2_c3_symmetrizers():
    b2 = datum("B2")
    assert min(b2.d) == 1
    assert min(p[i] for i, p in enumerate(b2.pairing)) == 2
    c3 = datum("C3")
    P = c3.pairing
    assert P == tuple(zip(*P))
    for i in range(3):
        assert P[i][i] == 2 * c3.d[i]


def test_cartan_validity():
    for tag in ("A3", "B3", "C2", "D4"):
        d = datum(tag)
        n = len(d.cartan)
        for i in range(n):
            assert d.cartan[i][i] == 2
            for j in range(n):
                if i != j:
                    assert d.cartan[i][j] <= 0
                    assert (d.cartan[i][j] == 0) == (d.cartan[j][i] == 0)


def test_affine_a1():
    d = datum("A1-affine")
    assert d.cartan == ((2, -2), (-2, 2))


def test_affine_a2():
    d = datum("A2-affine")
    # node 0 attaches to both ends of the A2 diagram
    assert d.cartan[0][1] == -1 and d.cartan[0][2] == -1
    assert d.cartan == tuple(tuple(r) for r in d.cartan)


def test_unsupported_tag():
    with pytest.raises(ValueError):
        datum("E8")


def test_translation_words_a1():
    aff = datum("A1-affine")
    for a in range(5):
        word, report = translation_word(aff, [a])
        assert word.letters == (0, 1) * a
        assert report["length"] == 2 * a
        assert report["length_matches_two_sum"] is True


def test_translation_word_negative():
    with pytest.raises(ValueError):
        translation_word(datum("A1-affine"), [-1])
