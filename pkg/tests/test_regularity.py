import pytest

from hyperlaw.errors import NotAnIdentity
from hyperlaw.laws import classify_identities
from hyperlaw.regularity import intra_regular, invertibility, is_intra_regular_witness
from oracles import as_sets, intra_regular as naive_intra


def test_i4_intra_regular_with_listed_witnesses(fx):
    i4 = fx["I4"]
    report = intra_regular(i4)
    assert report.is_intra_regular and report.failing_element is None
    listed = {"x": "yz", "y": "zz", "z": "yy", "w": "xz"}
    for a, (x, y) in listed.items():
        assert is_intra_regular_witness(i4, i4.index(a), i4.index(x), i4.index(y))


@pytest.mark.parametrize("name", ["K4", "A5"])
def test_not_intra_regular_at_x(fx, name):
    t = fx[name]
    report = intra_regular(t)
    assert not report.is_intra_regular
    assert report.failing_element == t.index("x")


def test_stored_witnesses_verify(fx, p4r):
    for t in [*fx.values(), p4r]:
        report = intra_regular(t)
        for a, w in enumerate(report.witnesses):
            if w is not None:
                assert is_intra_regular_witness(t, a, *w)
        assert report.is_intra_regular == naive_intra(as_sets(t))


def test_p4_listed_witnesses(fx, p4r):
    for t in (fx["P4"], p4r):
        for a, (x, y) in {"x": "xx", "y": "xy", "z": "xz", "w": "xw"}.items():
            assert is_intra_regular_witness(t, t.index(a), t.index(x), t.index(y))


def test_a5_x_not_left_invertible(fx):
    a5 = fx["A5"]
    r = invertibility(a5, a5.index("e"))
    assert r.left_inverse[a5.index("x")] is None
    assert not r.left_invertible


def test_p4_y_not_left_invertible(fx):
    p4 = fx["P4"]
    r = invertibility(p4, p4.index("x"))
    assert r.left_inverse[p4.index("y")] is None


def test_order_one_invertible(trivial):
    r = invertibility(trivial, 0)
    assert r.invertible and r.pure_left_invertible


def test_requires_left_identity(fx):
    r3 = fx["R3"]
    with pytest.raises(NotAnIdentity):
        invertibility(r3, r3.index("x"))


def test_pure_inverse_implies_plain(fx, p4r):
    for t in [fx["A5"], fx["P4"], fx["L5"], fx["I4"], p4r]:
        for e in classify_identities(t).left_identities:
            r = invertibility(t, e)
            for pure, plain in ((r.pure_left_inverse, r.left_inverse),
                                (r.pure_right_inverse, r.right_inverse)):
                for p, q in zip(pure, plain):
                    assert p is None or q is not None
