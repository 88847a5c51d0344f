"""Complexes: Koszul, homology, nullhomotopy, higher homotopies,
minimization, cones."""

import pytest

from mfci.algebra import (
    GradedFreeModule,
    GradedModulePresentation,
    PolyElem,
    PolyMatrix,
    RingCtx,
    free_resolution,
    is_zero_module,
)
from mfci.complexes import (
    ChainComplex,
    ChainMap,
    cone,
    exactness_window,
    higher_homotopies,
    homology,
    koszul,
    koszul_homotopies,
    minimize,
    multi_indices,
    nullhomotopy,
)
from mfci.errors import NotAnRModule, VerificationFailure, WindowTooSmall


def test_koszul_shape_c2(ctx_xy, xy):
    x, y = xy
    K = koszul([x * x, y * y], ctx_xy)
    assert [K.term(0).rank, K.term(-1).rank, K.term(-2).rank] == [1, 2, 1]
    assert K.diff(-1).pretty() == "[[x^2, y^2]]"
    d2 = K.diff(-2)
    assert d2.entry(0, 0) == -(y * y) and d2.entry(1, 0) == x * x


def test_koszul_shape_c1(ctx_xy, xy):
    x, _ = xy
    K = koszul([x * x], ctx_xy)
    assert [K.term(0).rank, K.term(-1).rank] == [1, 1]
    assert K.diff(-1).entry(0, 0) == x * x


def test_koszul_mult_e1(ctx_xy, xy):
    x, y = xy
    K = koszul([x * x, y * y], ctx_xy)
    m0 = K.mult_matrix(0, 0)  # Q -> Q^2, wedge with e_1
    assert m0.entry(0, 0) == PolyElem.const(x.ring, 1) and m0.entry(1, 0).is_zero()
    # mult_e_i ^ 2 = 0 and anticommutativity
    m1 = K.mult_matrix(0, 1)
    assert (m1 * m0).is_zero()
    a0 = K.mult_matrix(1, 0)
    a1 = K.mult_matrix(1, 1)
    assert ((m1 * a0) + (a1 * m0)).is_zero()


def test_koszul_exact_iff_regular(ctx_xy, xy):
    x, y = xy
    K = koszul([x * x, y * y], ctx_xy)
    assert exactness_window(K, -1, -1)
    K2 = koszul([x * y, x * x], ctx_xy)
    assert not exactness_window(K2, -1, -1)


def test_homology_koszul_end(ctx_xy, xy, Qxy):
    x, y = xy
    K = koszul([x * x, y * y], ctx_xy)
    H0 = homology(K, 0)
    # coker of [x^2 y^2]: k[x,y]/(x^2,y^2), Hilbert 1,2,1
    from mfci.algebra.degreewise import hilbert_function

    assert hilbert_function(H0, range(4)) == {0: 1, 1: 2, 2: 1, 3: 0}


def test_homology_periodic_middle(Qxy, xy):
    # R = F101[x]/(x^2): (R -x-> R -x-> R) has vanishing middle homology
    from mfci.algebra import GF, PolyRing

    F = Qxy.field
    Q1 = PolyRing(F, ("x",))
    x1 = PolyElem.var(Q1, "x")
    R1 = RingCtx(Q1, (x1 * x1,))
    T = GradedFreeModule(Q1, (0,))
    terms = {0: T, 1: T.twist(1), 2: T.twist(2)}
    d = {
        0: PolyMatrix(T, T.twist(1), {(0, 0): x1}),
        1: PolyMatrix(T.twist(1), T.twist(2), {(0, 0): x1}),
    }
    C = ChainComplex(R1, 0, 2, terms, d)
    assert is_zero_module(homology(C, 1))


def test_window_guard(ctx_xy, xy):
    x, y = xy
    K = koszul([x * x, y * y], ctx_xy)
    with pytest.raises(WindowTooSmall):
        exactness_window(K, -2, -1)


def test_nullhomotopy_zero_map(ctx_xy, xy):
    x, y = xy
    K = koszul([x, y], ctx_xy)
    z = ChainMap(K, K, 0, {}, check=False)
    h = nullhomotopy(z)
    assert all(m.is_zero() for m in h.components.values())


def test_nullhomotopy_scalar(ctx_xy, xy):
    # x^2 * id on the Koszul resolution of k: homotopy components [x,0]^T, [0 x]
    x, y = xy
    K = koszul([x, y], ctx_xy)
    g = ChainMap.scalar(K, x * x)
    h = nullhomotopy(g)
    assert h.certifies(g)
    h0 = h.component(0)
    assert h0.entry(0, 0) == x and h0.entry(1, 0).is_zero()
    h1 = h.component(-1)
    assert h1.entry(0, 0).is_zero() and h1.entry(0, 1) == x


def test_higher_homotopies_fix_ci2(ctx_xy, xy):
    x, y = xy
    G = koszul([x, y], ctx_xy)
    sys = higher_homotopies(G, [x * x, y * y])
    s10_0 = sys.component((1, 0), 0)
    assert s10_0.entry(0, 0) == x and s10_0.entry(1, 0).is_zero()
    s10_1 = sys.component((1, 0), -1)
    assert s10_1.entry(0, 0).is_zero() and s10_1.entry(0, 1) == x
    s01_0 = sys.component((0, 1), 0)
    assert s01_0.entry(0, 0).is_zero() and s01_0.entry(1, 0) == y
    s01_1 = sys.component((0, 1), -1)
    assert s01_1.entry(0, 0) == -y and s01_1.entry(0, 1).is_zero()
    for i in range(-2, 1):
        assert sys.component((1, 1), i).is_zero()
        assert sys.component((2, 0), i).is_zero()
    sys.verify(slack=1)


def test_higher_homotopies_fix_h1(F101):
    from mfci.algebra import PolyRing

    Q1 = PolyRing(F101, ("x",))
    ctx1 = RingCtx(Q1)
    x1 = PolyElem.var(Q1, "x")
    G1 = koszul([x1], ctx1)
    sys = higher_homotopies(G1, [x1 * x1])
    assert sys.component((1,), 0).entry(0, 0) == x1


def test_higher_homotopies_zero_module(ctx_xy, xy):
    # the zero module has the length-0 zero resolution: nothing to do
    x, y = xy
    G = ChainComplex(ctx_xy, 0, 0, {0: GradedFreeModule(x.ring, ())}, {})
    sys = higher_homotopies(G, [x * x, y * y])
    assert sys.j_max == 0
    sys.verify()


def test_higher_homotopies_length0_nonzero_rejected(ctx_xy, xy):
    x, y = xy
    T = GradedFreeModule(x.ring, (0,))
    G = ChainComplex(ctx_xy, 0, 0, {0: T}, {})
    with pytest.raises(NotAnRModule):
        higher_homotopies(G, [x * x, y * y])


def test_higher_homotopies_requires_module(ctx_xy, xy):
    # x does not annihilate coker(x^2, y^2)
    x, y = xy
    G = koszul([x * x, y * y], ctx_xy)
    with pytest.raises(NotAnRModule):
        higher_homotopies(G, [x, y])


def test_koszul_dg_path_matches(ctx_xy, xy):
    x, y = xy
    G = koszul([x, y], ctx_xy)
    a = higher_homotopies(G, [x * x, y * y])
    b = koszul_homotopies(G, [x * x, y * y])
    for J in [(1, 0), (0, 1)]:
        for i in (0, -1):
            assert a.component(J, i).entries == b.component(J, i).entries


def test_multi_indices():
    assert multi_indices(2, 2) == [(0, 2), (1, 1), (2, 0)]
    assert multi_indices(1, 3) == [(3,)]


def test_minimize_unit_complex(ctx_xy, Qxy):
    one = PolyElem.const(Qxy, 1)
    M0 = GradedFreeModule(Qxy, (0,))
    C = ChainComplex(ctx_xy, 0, 1, {0: M0, 1: M0}, {0: PolyMatrix(M0, M0, {(0, 0): one})})
    m = minimize(C)
    assert all(r == 0 for r in m.complex.ranks().values())


def test_minimize_identity_on_minimal(ctx_xy, xy):
    x, y = xy
    K = koszul([x, y], ctx_xy)
    m = minimize(K)
    assert m.complex.ranks() == K.ranks()


def test_minimize_certificates(ctx_xy, Qxy, xy):
    # glue a contractible (R = R) summand onto the Koszul complex
    x, y = xy
    one = PolyElem.const(Qxy, 1)
    K = koszul([x, y], ctx_xy)
    t1 = K.term(-1).direct_sum(GradedFreeModule(Qxy, (0,)))
    t0 = K.term(0).direct_sum(GradedFreeModule(Qxy, (0,)))
    terms = {-2: K.term(-2), -1: t1, 0: t0}
    d2 = PolyMatrix(
        K.term(-2), t1, {(0, 0): K.diff(-2).entry(0, 0), (1, 0): K.diff(-2).entry(1, 0)}
    )
    d1 = PolyMatrix(
        t1,
        t0,
        {
            (0, 0): K.diff(-1).entry(0, 0),
            (0, 1): K.diff(-1).entry(0, 1),
            (1, 2): one,
        },
    )
    C = ChainComplex(ctx_xy, -2, 0, terms, {-2: d2, -1: d1})
    m = minimize(C)
    assert m.complex.ranks() == {-2: 1, -1: 2, 0: 1}
    m.inclusion.verify()
    m.projection.verify()
    pi = m.projection.compose(m.inclusion)
    assert pi.add(ChainMap.identity(m.complex), sign=-1).is_zero()
    ip = m.inclusion.compose(m.projection)
    target = ChainMap.identity(C).add(ip, sign=-1)
    assert m.homotopy.certifies(target)


def test_cone_of_identity_exact(ctx_xy, xy):
    x, y = xy
    K = koszul([x, y], ctx_xy)
    cn = cone(ChainMap.identity(K))
    assert exactness_window(cn, cn.lo + 1, cn.hi - 1)


def test_cone_sign_convention(ctx_xy, xy):
    x, y = xy
    K = koszul([x, y], ctx_xy)
    cn = cone(ChainMap.identity(K))
    # block [[-d_A, 0], [f, d_B]]: at cone degree i the A-part is A^(i+1)
    d = cn.diff(cn.lo)
    dA = K.diff(cn.lo + 1)
    for (i, j), p in dA.entries.items():
        assert d.entry(i, j) == -p
