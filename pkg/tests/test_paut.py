import random
from math import gcd

import pytest

from framedhom.errors import NotSymplectic, SpecMismatch
from framedhom.lattice import AbsVec, CohomClass, SurfaceSpec, as_rel, x_curve, y_curve
from framedhom.paut import (
    PAutElem,
    _transvection_coords,
    compose,
    decompose,
    factor_sp,
    identity_mat,
    invert,
    is_symplectic,
    mat_mul,
    pullback_h1,
    sp_inverse,
    transvection,
    zero_mat,
)
from framedhom.sampling import random_paut, random_spec, random_symplectic

SPEC = SurfaceSpec(2, (1, 1))


def test_validation():
    with pytest.raises(NotSymplectic):
        PAutElem(2, 1, tuple(tuple(2 if i == j else 0 for j in range(4)) for i in range(4)), zero_mat(4, 0))
    with pytest.raises(Exception):
        PAutElem(2, 2, identity_mat(4), zero_mat(4, 3))
    a = PAutElem.identity(2, 2)
    assert a.is_identity()


def test_compose_examples():
    rng = random.Random(1)
    a = random_paut(rng, SPEC)
    ident = PAutElem.identity(2, 2)
    c = compose(a, ident)
    assert c.S == a.S and c.M == a.M
    c = compose(a, invert(a))
    assert c.is_identity()
    m1 = ((1,), (2,), (0,), (0,))
    m2 = ((0,), (-1,), (3,), (0,))
    r1 = PAutElem(2, 2, identity_mat(4), m1)
    r2 = PAutElem(2, 2, identity_mat(4), m2)
    both = compose(r1, r2)
    assert both.S == identity_mat(4)
    assert both.M == ((1,), (1,), (3,), (0,))
    # point-transvection block is abelian
    assert compose(r2, r1).M == both.M


def test_compose_spec_mismatch():
    with pytest.raises(SpecMismatch):
        compose(PAutElem.identity(2, 2), PAutElem.identity(2, 1))


def test_decompose_examples():
    rng = random.Random(3)
    a = random_paut(rng, SPEC)
    r, st = decompose(a)
    assert r.S == identity_mat(4) and r.M == a.M
    assert st.S == a.S and all(all(v == 0 for v in row) for row in st.M)
    back = compose(r, st)
    assert back.S == a.S and back.M == a.M
    ident = PAutElem.identity(2, 2)
    r0, s0 = decompose(PAutElem(2, 2, a.S, zero_mat(4, 1)))
    assert r0.is_identity() and s0.S == a.S
    r1, s1 = decompose(PAutElem(2, 2, identity_mat(4), a.M))
    assert s1.is_identity() and r1.M == a.M
    assert decompose(ident)[0].is_identity()


def test_act_block_structure():
    rng = random.Random(4)
    a = random_paut(rng, SPEC)
    from framedhom.lattice import arc_class, boundary

    x = arc_class(SPEC, 2) + 3 * as_rel(x_curve(SPEC, 1))
    # purity: the boundary is unchanged by the action
    assert boundary(a.act(x)) == boundary(x)


def test_transvection_examples():
    x1, y1 = x_curve(SPEC, 1), y_curve(SPEC, 1)
    t = transvection(x1, 1)
    assert tuple(t[i][j] for i, j in ((0, 1),)) == (-1,)
    assert AbsVec(SPEC, tuple(r[1] for r in t)) == y1 - x1  # column of y_1
    v = AbsVec(SPEC, (1, 2, 3, 4))
    tv = transvection(v, 5)
    from framedhom.paut import mat_vec

    assert mat_vec(tv, v.coords) == v.coords  # T_v(v) = v
    assert mat_mul(transvection(x1, 1), transvection(x1, 1)) == transvection(x1, 2)
    assert is_symplectic(tv, 2)


def test_sp_inverse():
    rng = random.Random(5)
    for _ in range(30):
        spec = random_spec(rng, rng.choice([2, 3]), 1)
        s = random_symplectic(rng, spec)
        assert mat_mul(s, sp_inverse(s, spec.g)) == identity_mat(2 * spec.g)


def test_factor_sp_examples():
    assert factor_sp(identity_mat(4)) == []
    x1 = x_curve(SPEC, 1)
    fac = factor_sp(transvection(x1, 1))
    assert fac == [((1, 0, 0, 0), 1)]
    with pytest.raises(NotSymplectic):
        factor_sp(tuple(tuple(2 if i == j else 0 for j in range(4)) for i in range(4)))


def test_factor_sp_roundtrip_random():
    rng = random.Random(20)
    for trial in range(1000):
        g = rng.choice([2, 3, 4])
        spec = SurfaceSpec(g, (2 * g - 2,))
        # a few long products keep entry growth honest without dominating runtime
        nfac = 20 if trial % 10 == 0 else rng.randint(2, 8)
        s = random_symplectic(rng, spec, factors=nfac)
        fac = factor_sp(s)
        prod = identity_mat(2 * g)
        for v, k in fac:
            assert gcd(*v) == 1
            prod = mat_mul(prod, _transvection_coords(v, k))
        assert prod == s


def test_pullback_examples():
    th = CohomClass.pairing_with(x_curve(SPEC, 1))
    assert pullback_h1(identity_mat(4), th) == th
    assert pullback_h1(identity_mat(4), CohomClass.zero(2)).is_zero()
    # pullback of <x_1, .> along the mod-2 transvection about x_1 is itself,
    # checked on all 16 classes
    tbar = tuple(tuple(v & 1 for v in row) for row in transvection(x_curve(SPEC, 1), 1))
    pulled = pullback_h1(tbar, th)
    from framedhom.paut import mat_vec

    for c in range(16):
        coords = tuple((c >> i) & 1 for i in range(4))
        image = tuple(v & 1 for v in mat_vec(tbar, coords))
        assert pulled.evaluate(coords) == th.evaluate(image)
    assert pulled == th


def test_group_closure_validates():
    rng = random.Random(8)
    for _ in range(50):
        spec = random_spec(rng, 2, rng.choice([1, 2, 3]))
        a = random_paut(rng, spec)
        b = random_paut(rng, spec)
        c = compose(a, invert(b))  # constructor re-validates
        assert is_symplectic(c.S, 2)
