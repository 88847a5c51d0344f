import random

import pytest

from mfci.algebra import (
    GF,
    GradedFreeModule,
    GradedModulePresentation,
    PolyElem,
    PolyMatrix,
    PolyRing,
    RingCtx,
)


@pytest.fixture
def F101():
    return GF(101)


@pytest.fixture
def Qxy(F101):
    return PolyRing(F101, ("x", "y"))


@pytest.fixture
def ctx_xy(Qxy):
    return RingCtx(Qxy)


@pytest.fixture
def xy(Qxy):
    return PolyElem.var(Qxy, "x"), PolyElem.var(Qxy, "y")


@pytest.fixture
def R_ci2(Qxy, xy):
    x, y = xy
    return RingCtx(Qxy, (x * x, y * y))


def random_homogeneous(ring, deg, rng):
    """A random homogeneous polynomial of the given degree (maybe zero)."""
    from mfci.algebra.degreewise import monomials_of

    monos = monomials_of(ring, deg)
    p = ring.field.zero
    terms = {}
    for m in monos:
        c = rng.randrange(0, ring.field.p)
        if c:
            terms[m] = c
    return PolyElem(ring, terms)


def random_matrix(ring, rows_tw, cols_tw, rng):
    """Random homogeneous matrix with the given twist data."""
    ent = {}
    for i, ti in enumerate(rows_tw):
        for j, tj in enumerate(cols_tw):
            d = ti - tj
            if d < 0:
                continue
            p = random_homogeneous(ring, d, rng)
            if not p.is_zero():
                ent[(i, j)] = p
    src = GradedFreeModule(ring, cols_tw)
    tgt = GradedFreeModule(ring, rows_tw)
    return PolyMatrix(src, tgt, ent)


def rng_for(seed):
    return random.Random(seed)
