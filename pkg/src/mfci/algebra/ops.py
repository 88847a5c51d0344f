"""Public algebra operations: Groebner bases, lifts, syzygies, free
resolutions, saturation, annihilators, regular-sequence and radical
membership tests."""

from ..errors import BudgetExceeded, InhomogeneousInput, NonTermination, NotInImage
from .ctx import GradedModulePresentation, Ideal, RingCtx
from .groebner import (
    GroebnerBasis,
    poly_to_vec,
    term_key,
    vec_degree,
    vec_is_homogeneous,
    vec_lead,
)
from .module import GradedFreeModule, PolyMatrix
from .poly import PolyElem


# -- basic wrappers -----------------------------------------------------------


def groebner(gens, ctx, rank=1, module=None):
    """Reduced Groebner basis of the submodule generated by `gens`.

    `gens` is a list of vecpolys (or a PolyMatrix, whose columns are used).
    """
    if isinstance(gens, PolyMatrix):
        module = gens.target
        rank = gens.target.rank
        gens = gens.columns()
    if module is not None:
        for v in gens:
            if v and not vec_is_homogeneous(v, module):
                raise InhomogeneousInput("generator is not homogeneous")
    return GroebnerBasis(ctx, rank, gens)


def matrix_gb(A, ctx):
    return groebner(A.columns(), ctx, rank=A.target.rank, module=A.target)


def columns_to_matrix(cols, module, ctx=None, fallback_twist=0):
    """Pack vecpoly columns (elements of `module`) into a PolyMatrix.

    Source twists are read off from the degrees of the homogeneous columns.
    """
    ring = module.ring
    twists = []
    ent = {}
    for j, v in enumerate(cols):
        d = vec_degree(v, module) if v else None
        twists.append(-d if d is not None else fallback_twist)
        for (p, m), c in v.items():
            key = (p, j)
            cur = ent.get(key)
            poly = PolyElem(ring, {m: c})
            ent[key] = poly if cur is None else cur + poly
    src = GradedFreeModule(ring, twists)
    return PolyMatrix(src, module, ent)


def lift(b, A, ctx):
    """Solve A.X = b in ctx; deterministic division solution.

    `b` may be a vecpoly over A.target or a PolyMatrix column block; the
    result is a PolyMatrix X with A*X = B (mod relations).
    """
    gb = matrix_gb(A, ctx)
    if isinstance(b, dict):
        cols = [b]
        src_twists = None
    else:
        cols = b.columns()
        src_twists = b.source.twists
    ent = {}
    for j, col in enumerate(cols):
        col = {k: c for k, c in col.items()}
        try:
            comps = gb.express(col)
        except NotInImage:
            raise NotInImage(f"column {j} is not in the image")
        for i, p in enumerate(comps):
            p = ctx.nf(p)
            if not p.is_zero():
                ent[(i, j)] = p
    if src_twists is None:
        src = GradedFreeModule(ctx.ambient, (0,) * len(cols))
    else:
        src = GradedFreeModule(ctx.ambient, src_twists)
    shift = 0 if isinstance(b, dict) else b.degree_shift - A.degree_shift
    return PolyMatrix(src, A.source, ent, degree_shift=shift)


def syzygies(A, ctx):
    """Columns generating ker(A) over ctx, as a PolyMatrix into A.source."""
    gb = matrix_gb(A, ctx)
    vecs = gb.syzygies()
    vecs = [v for v in vecs if v]
    vecs.sort(key=_vec_sort_key(ctx.ambient))
    return columns_to_matrix(vecs, A.source, ctx)


def _vec_sort_key(ring):
    key = term_key(ring)

    def k(v):
        return sorted((key(t) for t in v), reverse=True)

    return k


# -- minimal generators -------------------------------------------------------


def minimal_generator_columns(A, ctx):
    """Subset of A's columns that minimally generates im(A) (graded case).

    Processes columns in increasing degree; a column is redundant when it
    lies in the submodule generated by the kept ones plus (positive-degree
    multiples of) all columns, which by graded Nakayama reduces to a
    degreewise span test.
    """
    from .degreewise import minimal_generator_indices

    idx = minimal_generator_indices(A, ctx)
    cols = A.columns()
    kept = [cols[j] for j in idx]
    return columns_to_matrix(kept, A.target, ctx)


# -- presentations ----------------------------------------------------------


def prune_presentation(M):
    """Split off unit entries of the presentation matrix (Gaussian cancellation)."""
    A = M.ctx.nf_matrix(M.matrix)
    F = M.ctx.field
    while True:
        unit = None
        for (i, j), p in sorted(A.entries.items()):
            if p.is_unit():
                unit = (i, j, p.constant_coeff())
                break
        if unit is None:
            break
        i0, j0, u = unit
        uinv = F.inv(u)
        rows = [r for r in range(A.target.rank) if r != i0]
        cols = [c for c in range(A.source.rank) if c != j0]
        ent = {}
        for ri, r in enumerate(rows):
            for ci, c in enumerate(cols):
                p = A.entry(r, c) - A.entry(r, j0).scale(uinv) * A.entry(i0, c)
                p = M.ctx.nf(p)
                if not p.is_zero():
                    ent[(ri, ci)] = p
        src = GradedFreeModule(A.ring, tuple(A.source.twists[c] for c in cols))
        tgt = GradedFreeModule(A.ring, tuple(A.target.twists[r] for r in rows))
        A = PolyMatrix(src, tgt, ent, A.degree_shift)
    # drop zero columns
    nonzero = sorted({j for (_, j) in A.entries})
    if len(nonzero) != A.source.rank:
        ent = {}
        for (i, j), p in A.entries.items():
            ent[(i, nonzero.index(j))] = p
        src = GradedFreeModule(A.ring, tuple(A.source.twists[j] for j in nonzero))
        A = PolyMatrix(src, A.target, ent, A.degree_shift)
    return GradedModulePresentation(M.ctx, A)


def is_zero_module(M):
    gb = matrix_gb(M.matrix, M.ctx)
    ring = M.ctx.ambient
    one = ring.field.one
    for i in range(M.target.rank):
        if gb.nf({(i, ring.zero_mono): one}):
            return False
    return True


def homology_presentation(A, B, ctx):
    """Presentation of ker(A)/im(B) for composable A*B = 0.

    A may be None, meaning "kernel of nothing" (the whole module); B may be
    None, meaning zero image.
    """
    if A is not None and B is not None:
        assert A.source.twists == B.target.twists
    amb = A.source if A is not None else B.target
    if A is None:
        K = PolyMatrix.identity(amb)
    else:
        K = syzygies(A, ctx)
    rel_cols = []
    if B is not None and not B.is_zero():
        X = lift(B, K, ctx)
        rel_cols.append(X)
    SK = syzygies(K, ctx)
    if not SK.is_zero():
        rel_cols.append(SK)
    tgt = K.source
    if not rel_cols:
        src = GradedFreeModule(ctx.ambient, ())
        return GradedModulePresentation(ctx, PolyMatrix(src, tgt))
    twists = []
    ent = {}
    off = 0
    for Xm in rel_cols:
        for j in range(Xm.source.rank):
            twists.append(Xm.source.twists[j])
        for (i, j), p in Xm.entries.items():
            ent[(i, off + j)] = p
        off += Xm.source.rank
    src = GradedFreeModule(ctx.ambient, twists)
    return GradedModulePresentation(ctx, PolyMatrix(src, tgt, ent))


# -- free resolutions ---------------------------------------------------------


def free_resolution(M, ctx, max_len=None):
    """Minimal graded free resolution of coker(M) over ctx.

    Over the polynomial ring it stops on its own; over a quotient ring a
    finite max_len is required (resolutions there are typically infinite).
    """
    if not ctx.is_regular and max_len is None:
        raise BudgetExceeded("infinite resolution: pass max_len over a quotient ring")
    M.matrix.check_homogeneous()
    M0 = prune_presentation(M)
    mats = []
    A = M0.matrix
    if not A.is_zero():
        A = minimal_generator_columns(A, ctx)
        if A.source.rank:
            mats.append(A)
    step_limit = max_len if max_len is not None else 4 * ctx.ambient.nvars + 4
    while mats and len(mats) < step_limit:
        Z = syzygies(mats[-1], ctx)
        if Z.is_zero() or Z.source.rank == 0:
            break
        Z = minimal_generator_columns(Z, ctx)
        if Z.source.rank == 0:
            break
        mats.append(Z)
    else:
        if mats and ctx.is_regular and max_len is None:
            raise NonTermination("resolution over a polynomial ring did not stop")
    from ..complexes import ChainComplex

    terms = {0: M0.target}
    diffs = {}
    for n, Amat in enumerate(mats, start=1):
        terms[-n] = Amat.source
        diffs[-n] = Amat
    return ChainComplex(ctx, -len(mats), 0, terms, diffs, check=False)


# -- quotients, saturation, annihilators ------------------------------------


def submodule_quotient(cols, g, module, ctx):
    """(N : g) for N = <cols> inside `module`; returns generator columns."""
    rank = module.rank
    H = [poly_to_vec(g, i) for i in range(rank)]
    H.extend(cols)
    gb = GroebnerBasis(ctx, rank, H)
    out = []
    for z in gb.syzygies():
        # the coefficient of g*e_i is the i-th coordinate of a quotient element
        v = {(p, m): c for (p, m), c in z.items() if p < rank}
        if v:
            out.append(_nf_vec_components(v, rank, ctx))
    return _dedupe_columns([v for v in out if v], rank, ctx)


def _dedupe_columns(vecs, rank, ctx):
    """Drop redundant generators (those in the span of the others)."""
    vecs = [v for v in vecs if v]
    vecs.sort(key=_vec_sort_key(ctx.ambient))
    kept = []
    for v in vecs:
        if kept:
            gb = GroebnerBasis(ctx, rank, kept)
            if gb.contains(v):
                continue
        kept.append(v)
    return kept


def submodule_sum_equal(cols_a, cols_b, rank, ctx):
    ga = GroebnerBasis(ctx, rank, cols_a)
    gb = GroebnerBasis(ctx, rank, cols_b)
    return all(ga.contains(v) for v in cols_b) and all(gb.contains(v) for v in cols_a)


def saturate(M, J, ctx, cap=64):
    """Saturation M / Gamma_J(M): iterate (im : J) until stable."""
    if isinstance(J, Ideal):
        jg = list(J.gens)
    else:
        jg = list(J)
    module = M.target
    cur = [v for v in M.matrix.columns() if v]
    for _ in range(cap):
        nxt = None
        for g in jg:
            q = submodule_quotient(cur, g, module, ctx)
            nxt = q if nxt is None else submodule_intersect(nxt, q, module.rank, ctx)
        if nxt is None:
            nxt = cur
        if submodule_sum_equal(cur, nxt, module.rank, ctx):
            A = columns_to_matrix(cur, module, ctx)
            return GradedModulePresentation(ctx, A)
        cur = nxt
    raise NonTermination(f"saturation did not stabilize within {cap} steps")


def submodule_intersect(cols_a, cols_b, rank, ctx):
    """Generators of <cols_a> ∩ <cols_b>."""
    ring = ctx.ambient
    field = ring.field
    H = []
    for v in cols_a:
        H.append(dict(v))
    for v in cols_b:
        H.append({k: field.neg(c) for k, c in v.items()})
    gb = GroebnerBasis(ctx, rank, H)
    na = len(cols_a)
    out = []
    for z in gb.syzygies():
        acc = {}
        for (p, m), c in z.items():
            if p < na:
                from .groebner import vec_add, vec_mul_term

                acc = vec_add(acc, vec_mul_term(cols_a[p], m, c, field), field)
        acc = _nf_vec_components(acc, rank, ctx)
        if acc:
            out.append(acc)
    return _dedupe_columns(out, rank, ctx)


def _nf_vec_components(v, rank, ctx):
    if not ctx.relations:
        return v
    from .groebner import vec_components

    comps = vec_components(v, ctx.ambient, rank)
    out = {}
    for p, comp in enumerate(comps):
        comp = ctx.nf(comp)
        for m, c in comp.terms.items():
            out[(p, m)] = c
    return out


def annihilator(M, ctx):
    """The exact annihilator ideal of coker(M.matrix) over ctx."""
    module = M.target
    cols = [v for v in M.matrix.columns() if v]
    ring = ctx.ambient
    result = None
    for i in range(module.rank):
        e_i = {(i, ring.zero_mono): ring.field.one}
        H = [e_i] + cols
        gb = GroebnerBasis(ctx, module.rank, H)
        ideal_i = []
        for z in gb.syzygies():
            p = PolyElem(ring, {m: c for (pos, m), c in z.items() if pos == 0})
            p = ctx.nf(p)
            if not p.is_zero():
                ideal_i.append(poly_to_vec(p))
        ideal_i = _dedupe_columns(ideal_i, 1, ctx)
        result = ideal_i if result is None else submodule_intersect(result, ideal_i, 1, ctx)
    if result is None:
        return Ideal(ctx, [PolyElem.const(ring, 1)])
    from .groebner import vec_to_poly

    gens = [vec_to_poly(v, ring) for v in result]
    gens = [g for g in gens if not g.is_zero()]
    return Ideal(ctx, gens)


def ideal_sum(I, J):
    return Ideal(I.ctx, list(I.gens) + list(J.gens))


def ideal_intersect(I, J):
    ctx = I.ctx
    a = [poly_to_vec(g) for g in I.gens]
    b = [poly_to_vec(g) for g in J.gens]
    if not a or not b:
        return Ideal(ctx, [])
    vecs = submodule_intersect(a, b, 1, ctx)
    from .groebner import vec_to_poly

    return Ideal(ctx, [vec_to_poly(v, ctx.ambient) for v in vecs])


def ideal_saturate(I, J, cap=64):
    """(I : J^infinity) as an ideal."""
    ctx = I.ctx
    M = GradedModulePresentation.cyclic(ctx, list(I.gens))
    cur = [poly_to_vec(g) for g in I.gens]
    module = M.target
    for _ in range(cap):
        nxt = None
        for g in J.gens:
            q = submodule_quotient(cur, g, module, ctx)
            nxt = q if nxt is None else submodule_intersect(nxt, q, 1, ctx)
        if nxt is None:
            nxt = cur
        if submodule_sum_equal(cur, nxt, 1, ctx):
            from .groebner import vec_to_poly

            return Ideal(ctx, [vec_to_poly(v, ctx.ambient) for v in cur])
        cur = nxt
    raise NonTermination(f"ideal saturation did not stabilize within {cap} steps")


# -- regular sequences -------------------------------------------------------


def is_regular_sequence(f, ctx):
    """True iff H_1 of the Koszul complex on f vanishes (graded setting)."""
    f = list(f)
    for p in f:
        if p.is_zero() or not p.is_homogeneous("x") or p.degree("x") < 1:
            raise InhomogeneousInput("regular-sequence test needs forms of positive degree")
    ring = ctx.ambient
    row = GradedFreeModule(ring, tuple(-p.degree("x") for p in f))
    tgt = GradedFreeModule(ring, (0,))
    A = PolyMatrix(row, tgt, {(0, j): p for j, p in enumerate(f)})
    Z = syzygies(A, ctx)
    koszul_cols = []
    for i in range(len(f)):
        for j in range(i + 1, len(f)):
            v = {}
            for m, c in f[j].terms.items():
                v[(i, m)] = c
            for m, c in f[i].terms.items():
                v[(j, m)] = ring.field.neg(c)
            koszul_cols.append(v)
    gb = GroebnerBasis(ctx, len(f), koszul_cols)
    return all(gb.contains(z) for z in Z.columns() if z)


# -- radical membership -------------------------------------------------------


def radical_contains(gens, g, ctx):
    """g in sqrt(<gens> + relations), by the Rabinowitsch trick."""
    ring = ctx.ambient
    if g.is_zero():
        return True
    ext = ring.extend_vars(("t@",))
    vm = {ring._index[n]: ext._index[n] for n in ring.names}
    t = PolyElem.var(ext, "t@")
    one = PolyElem.const(ext, 1)
    sat = one - t * g.map_ring(ext, vm)
    vecs = [poly_to_vec(p.map_ring(ext, vm)) for p in list(gens) + list(ctx.relations)]
    vecs.append(poly_to_vec(sat))
    gb = GroebnerBasis(RingCtx(ext), 1, vecs)
    return gb.contains(poly_to_vec(one))
