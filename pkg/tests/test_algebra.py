"""Kernel-level tests: fields, polynomials, Groebner bases, lifts,
syzygies, resolutions, saturation, annihilators, regular sequences."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mfci.algebra import (
    GF,
    QQ,
    GradedFreeModule,
    GradedModulePresentation,
    Ideal,
    PolyElem,
    PolyMatrix,
    PolyRing,
    RingCtx,
    annihilator,
    free_resolution,
    groebner,
    is_regular_sequence,
    lift,
    parse_poly,
    poly_to_vec,
    radical_contains,
    saturate,
    syzygies,
    vec_to_poly,
)
from mfci.algebra.degreewise import brute_annihilator, brute_kernel, hilbert_function
from mfci.algebra.ops import matrix_gb
from mfci.errors import BudgetExceeded, NotInImage

from conftest import random_matrix, rng_for


# -- fields and polynomials ---------------------------------------------------


def test_field_arithmetic():
    F = GF(101)
    assert F.mul(50, 50) == (2500 % 101)
    assert F.mul(F.inv(7), 7) == 1
    assert QQ.inv(QQ.of(4)) == QQ.of(1) / 4


def test_gf_rejects_composite():
    with pytest.raises(ValueError):
        GF(100)


def test_poly_basic(Qxy, xy):
    x, y = xy
    p = x * x + y.scale(3)
    assert str(p) == "x^2+3*y"
    assert not p.is_homogeneous("x")
    with pytest.raises(Exception):
        p.degree("x")
    assert (x * x + y * y).degree("x") == 2


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(1, 100)), max_size=6))
def test_print_parse_roundtrip(terms):
    F = GF(101)
    ring = PolyRing(F, ("x", "y"))
    d = {}
    for a, b, c in terms:
        d[(a, b)] = (d.get((a, b), 0) + c) % 101
    p = PolyElem(ring, d)
    assert parse_poly(ring, str(p)) == p


def test_parse_rational_coeffs():
    ring = PolyRing(QQ, ("x",))
    p = parse_poly(ring, "1/2*x^2 - 3*x + 7")
    assert str(p) == "1/2*x^2-3*x+7"
    assert parse_poly(ring, str(p)) == p


# -- groebner -----------------------------------------------------------------


def test_groebner_monomial_ideal(ctx_xy, Qxy, xy):
    x, y = xy
    gb = groebner([poly_to_vec(x * x), poly_to_vec(y * y)], ctx_xy)
    elems = sorted(str(vec_to_poly(e, Qxy)) for e in gb.elements)
    assert elems == ["x^2", "y^2"]


def test_groebner_reduces_spair(ctx_xy, Qxy, xy):
    # {x^2+y^2, y^2} has reduced GB {x^2, y^2}
    x, y = xy
    gb = groebner([poly_to_vec(x * x + y * y), poly_to_vec(y * y)], ctx_xy)
    elems = sorted(str(vec_to_poly(e, Qxy)) for e in gb.elements)
    assert elems == ["x^2", "y^2"]


def test_groebner_empty(ctx_xy):
    gb = groebner([], ctx_xy)
    assert gb.elements == []


def test_groebner_deterministic(ctx_xy, Qxy, xy):
    x, y = xy
    gens = [poly_to_vec(x * x + x * y), poly_to_vec(y * y - x * y if False else y * y)]
    a = groebner(gens, ctx_xy).elements
    b = groebner(gens, ctx_xy).elements
    assert a == b


# -- lift ---------------------------------------------------------------------


def _row_xy(Qxy, xy):
    x, y = xy
    src = GradedFreeModule(Qxy, (-1, -1))
    tgt = GradedFreeModule(Qxy, (0,))
    return PolyMatrix(src, tgt, {(0, 0): x, (0, 1): y})


def test_lift_division_solution(ctx_xy, Qxy, xy):
    x, y = xy
    A = _row_xy(Qxy, xy)
    X = lift(poly_to_vec(x * x), A, ctx_xy)
    assert X.entry(0, 0) == x and X.entry(1, 0).is_zero()


def test_lift_zero(ctx_xy, Qxy, xy):
    A = _row_xy(Qxy, xy)
    X = lift({}, A, ctx_xy)
    assert X.is_zero()


def test_lift_not_in_image(ctx_xy, Qxy, xy):
    A = _row_xy(Qxy, xy)
    one = PolyElem.const(Qxy, 1)
    with pytest.raises(NotInImage):
        lift(poly_to_vec(one), A, ctx_xy)


def test_lift_soundness_random(Qxy, ctx_xy):
    rng = rng_for(7)
    for _ in range(5):
        A = random_matrix(Qxy, (0, 1), (-1, 0, 1), rng)
        B = random_matrix(Qxy, (-1, 0, 1), (-2, -1), rng)
        prod = A * B
        X = lift(prod, A, ctx_xy)
        assert (A * X - prod).is_zero()


# -- syzygies -------------------------------------------------------------------


def test_syzygy_koszul(ctx_xy, Qxy, xy):
    x, y = xy
    A = _row_xy(Qxy, xy)
    Z = syzygies(A, ctx_xy)
    assert (A * Z).is_zero()
    assert Z.source.rank == 1
    col = [Z.entry(0, 0), Z.entry(1, 0)]
    # (-y, x) up to sign/scalar
    assert col[0] * PolyElem.var(Qxy, "x") + col[1] * PolyElem.var(Qxy, "y") == PolyElem.zero(Qxy)


def test_syzygy_identity(ctx_xy, Qxy):
    I = PolyMatrix.identity(GradedFreeModule(Qxy, (0, 0)))
    Z = syzygies(I, ctx_xy)
    assert Z.source.rank == 0


def test_syzygy_over_quotient(Qxy, xy, R_ci2):
    x, y = xy
    A = _row_xy(Qxy, xy)
    Z = syzygies(A, R_ci2)
    gb = matrix_gb(Z, R_ci2)
    for want in [{(0, (1, 0)): 1}, {(1, (0, 1)): 1}, {(0, (0, 1)): 100, (1, (1, 0)): 1}]:
        assert gb.contains(want)


def test_syzygy_completeness_corpus(Qxy, ctx_xy):
    # every brute-force kernel element of degree <= 6 lies in <syzygies(A)>
    rng = rng_for(11)
    for t in range(6):
        rows = tuple(rng.choice([0, 1]) for _ in range(rng.choice([1, 2])))
        cols = tuple(rng.choice([-2, -1]) for _ in range(rng.choice([2, 3])))
        A = random_matrix(Qxy, rows, cols, rng)
        Z = syzygies(A, ctx_xy)
        assert (A * Z).is_zero()
        gb = matrix_gb(Z, ctx_xy) if Z.source.rank else None
        for v in brute_kernel(A, ctx_xy, 6):
            if gb is None:
                assert not v
            else:
                assert gb.contains(v)


# -- free resolutions ------------------------------------------------------------


def test_resolution_koszul_shape(ctx_xy, Qxy, xy):
    x, y = xy
    A = _row_xy(Qxy, xy)
    M = GradedModulePresentation(ctx_xy, A)
    C = free_resolution(M, ctx_xy)
    assert [C.term(0).rank, C.term(-1).rank, C.term(-2).rank] == [1, 2, 1]
    # minimality: no constant terms in differentials
    for i in range(C.lo, C.hi):
        for p in C.diff(i).entries.values():
            assert p.constant_coeff() == 0


def test_resolution_free_module(ctx_xy, Qxy):
    M = GradedModulePresentation.free_module(ctx_xy, (0, -1))
    C = free_resolution(M, ctx_xy)
    assert C.lo == 0 and C.term(0).rank == 2


def test_resolution_over_R_budget(Qxy, xy, R_ci2):
    x, y = xy
    Mk = GradedModulePresentation.cyclic(R_ci2, [x, y])
    with pytest.raises(BudgetExceeded):
        free_resolution(Mk, R_ci2)
    C = free_resolution(Mk, R_ci2, max_len=10)
    assert [C.term(-i).rank for i in range(11)] == list(range(1, 12))


def test_resolution_exactness(Qxy, xy, R_ci2):
    from mfci.complexes import exactness_window

    x, y = xy
    Mk = GradedModulePresentation.cyclic(R_ci2, [x, y])
    C = free_resolution(Mk, R_ci2, max_len=6)
    assert exactness_window(C, -5, -1)


# -- saturation and annihilators ----------------------------------------------


def test_annihilator_of_k(Qxy, xy, R_ci2):
    x, y = xy
    Mk = GradedModulePresentation.cyclic(R_ci2, [x, y])
    ann = annihilator(Mk, R_ci2)
    gb_gens = [str(g) for g in ann.gens]
    assert ann.contains(x) and ann.contains(y)
    assert not ann.contains(PolyElem.const(Qxy, 1))


def test_annihilator_against_brute_force(Qxy, ctx_xy):
    rng = rng_for(23)
    for _ in range(4):
        A = random_matrix(Qxy, (0, 0), (-1, -1, -2), rng)
        M = GradedModulePresentation(ctx_xy, A)
        ann = annihilator(M, ctx_xy)
        for g in ann.gens:
            # a * M = 0: each a*e_i in the image
            gb = matrix_gb(A, ctx_xy)
            for i in range(2):
                assert gb.contains(poly_to_vec(g.mul_mono(g.ring.zero_mono), i)) or gb.contains(
                    poly_to_vec(g, i)
                )
        for b in brute_annihilator(M, ctx_xy, 6):
            assert ann.contains(b)


def test_saturate_strips_torsion():
    # S = F101[x, T1, T2], M = S/(T1*x) + torsion piece; saturating by (T1,T2)
    F = GF(101)
    S = PolyRing(F, ("x", "T_1", "T_2"), n_x=1)
    ctx = RingCtx(S)
    x = PolyElem.var(S, "x")
    t1 = PolyElem.var(S, "T_1")
    t2 = PolyElem.var(S, "T_2")
    # M = S/(x*T_1, x*T_2): the x-torsion x*S/(..) is (T)-torsion; saturation kills x
    M = GradedModulePresentation.cyclic(ctx, [x * t1, x * t2])
    sat = saturate(M, Ideal(ctx, [t1, t2]), ctx)
    gb = matrix_gb(sat.matrix, ctx)
    assert gb.contains(poly_to_vec(x, 0))


def test_saturate_of_saturated_is_identity(Qxy, xy, ctx_xy):
    x, y = xy
    M = GradedModulePresentation.cyclic(ctx_xy, [x])
    sat = saturate(M, Ideal(ctx_xy, [x, y]), ctx_xy)
    gb_before = matrix_gb(M.matrix, ctx_xy)
    gb_after = matrix_gb(sat.matrix, ctx_xy)
    # x is (x,y)-saturated already except for the torsion quotient... the
    # quotient S/(x) has no (x,y)-torsion, so nothing changes
    assert all(gb_before.contains(v) for v in sat.matrix.columns())
    assert all(gb_after.contains(v) for v in M.matrix.columns())


# -- regular sequences -----------------------------------------------------------


def test_regular_sequences(ctx_xy, xy):
    x, y = xy
    assert is_regular_sequence([x * x, y * y], ctx_xy)
    assert not is_regular_sequence([x, x], ctx_xy)
    assert not is_regular_sequence([x * y, x * x], ctx_xy)


# -- radical membership ----------------------------------------------------------


def test_radical_membership(ctx_xy, xy):
    x, y = xy
    assert radical_contains([x * x], x, ctx_xy)
    assert not radical_contains([x * x], y, ctx_xy)
    assert radical_contains([x * x + y * y, x * y], x, ctx_xy)  # (x,y)-primary


# -- hilbert functions -------------------------------------------------------------


def test_hilbert_function_of_k(Qxy, xy, R_ci2):
    x, y = xy
    Mk = GradedModulePresentation.cyclic(R_ci2, [x, y])
    h = hilbert_function(Mk, range(0, 3))
    assert h == {0: 1, 1: 0, 2: 0}


def test_hilbert_function_of_R(R_ci2):
    MR = GradedModulePresentation.cyclic(R_ci2, [])
    h = hilbert_function(MR, range(0, 4))
    assert h == {0: 1, 1: 2, 2: 1, 3: 0}
