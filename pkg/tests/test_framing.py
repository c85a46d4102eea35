import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from framedhom.errors import InvalidSurface, MissingArcData, SomeKappaOdd
from framedhom.framing import (
    Framing,
    QForm,
    QVector,
    arf,
    arf_of_form,
    q_vector,
    spin_form,
    winding_parity,
)
from framedhom.lattice import AbsVec, SurfaceSpec, x_curve, y_curve


def test_framing_validation():
    spec = SurfaceSpec(2, (1, 1))
    with pytest.raises(InvalidSurface, match="odd"):
        Framing(spec, (0, 0), (0, 0), (2,))
    f = Framing(spec, (0, 0), (0, 0))
    assert not f.has_arc_data
    # n = 1 framings normalize to empty arc data
    f1 = Framing(SurfaceSpec(2, (2,)), (0, 0), (0, 0))
    assert f1.arc2 == ()


def test_arf_examples():
    spec = SurfaceSpec(2, (2,))
    assert arf(Framing(spec, (0, 0), (0, 0))) == 0
    assert arf(Framing(spec, (1, 0), (0, 0))) == 1
    spec11 = SurfaceSpec(2, (1, 1))
    assert arf(Framing(spec11, (0, 0), (0, 0), (1,))) == 1
    with pytest.raises(MissingArcData):
        arf(Framing(spec11, (0, 0), (0, 0)))


def test_q_vector_examples():
    spec = SurfaceSpec(2, (2,))
    assert q_vector(Framing(spec, (0, 0), (0, 0))).bits == (0, 0, 0, 0)
    assert q_vector(Framing(spec, (1, 0), (0, 0))).bits == (1, 0, 0, 0)
    assert q_vector(Framing(spec, (2, 3), (4, 5))).bits == (0, 0, 1, 1)


def test_spin_form_examples():
    spec = SurfaceSpec(2, (2,))
    q = spin_form(Framing(spec, (0, 0), (0, 0)))
    assert q.qx == (1, 1) and q.qy == (1, 1)
    with pytest.raises(SomeKappaOdd):
        spin_form(Framing(SurfaceSpec(2, (1, 1)), (0, 0), (0, 0), (-1,)))
    spec3 = SurfaceSpec(2, (4, 0, -2))
    q = spin_form(Framing(spec3, (0, 0), (0, 0), (-1, -1)))
    assert q.qx == (1, 1) and q.qy == (1, 1)


def test_arf_of_form_examples():
    assert arf_of_form(QForm((1, 1), (1, 1))) == 0
    assert arf_of_form(QForm((0, 1), (1, 1))) == 1
    assert arf_of_form(QForm((0, 0), (0, 0))) == 0


def test_arf_of_form_matches_arf_when_even():
    # classical Arf agrees with the framing Arf for n = 1
    spec = SurfaceSpec(2, (2,))
    for wx in range(2):
        for wy in range(2):
            f = Framing(spec, (wx, 0), (wy, 1))
            assert arf_of_form(spin_form(f)) == arf(f)


def test_winding_parity_examples():
    spec = SurfaceSpec(2, (2,))
    f = Framing(spec, (0, 0), (0, 0))
    x1, x2, y1 = x_curve(spec, 1), x_curve(spec, 2), y_curve(spec, 1)
    assert winding_parity(f, x1) == 0
    assert winding_parity(f, x1 + x2) == 1  # pants rule: 1 + P(x1) + P(x2)
    assert winding_parity(f, x1 + y1) == 0  # crossing rule: P(x1) + P(y1)


def test_winding_parity_crossing_rule_by_twist():
    # an honest twist-linearity derivation of the crossing-rule value:
    # T_{x_1}(y_1) lies in class x_1 + y_1 mod 2 and its winding is
    # phi(y_1) + <y_1, x_1> phi(x_1)
    spec = SurfaceSpec(2, (2,))
    for wx in range(-2, 3):
        for wy in range(-2, 3):
            f = Framing(spec, (wx, 0), (wy, 0))
            tracked = wy - wx
            assert tracked % 2 == winding_parity(f, x_curve(spec, 1) + y_curve(spec, 1))


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.integers(-4, 4), min_size=4, max_size=4),
    st.lists(st.integers(-9, 9), min_size=4, max_size=4),
    st.lists(st.integers(-9, 9), min_size=4, max_size=4),
)
def test_winding_parity_quadratic_refinement(winds, cu, cw):
    spec = SurfaceSpec(2, (2,))
    f = Framing(spec, tuple(winds[:2]), tuple(winds[2:]))
    u = AbsVec(spec, tuple(cu))
    w = AbsVec(spec, tuple(cw))
    from framedhom.lattice import symplectic_pairing

    lhs = winding_parity(f, u + w)
    rhs = (winding_parity(f, u) + winding_parity(f, w) + 1 + symplectic_pairing(u, w)) % 2
    assert lhs == rhs


def test_even_regime_parity_matches_spin_form():
    spec = SurfaceSpec(2, (0, 2))
    f = Framing(spec, (1, 2), (3, 0), (-3,))
    q = spin_form(f)
    for c in range(16):
        coords = tuple((c >> i) & 1 for i in range(4))
        v = AbsVec(spec, coords)
        assert (winding_parity(f, v) + 1) % 2 == q.evaluate(v)


def test_qvector_shape():
    with pytest.raises(Exception):
        QVector((1, 0, 1))
