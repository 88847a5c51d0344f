"""Degree-by-degree exact linear algebra over the coefficient field.

This is the workhorse for Hilbert functions, minimal generator picking,
and the brute-force oracles (kernels and annihilators found by plain
Gaussian elimination, independent of the Groebner engine).
"""

from .groebner import vec_degree
from .module import PolyMatrix
from .poly import PolyElem
from .ring import mono_divides, mono_mul


# -- spans ---------------------------------------------------------------------


class SpanTracker:
    """Incremental row-reduction span with optional combination tracking."""

    def __init__(self, field, track_width=0):
        self.field = field
        self.rows = []  # (pivot index, coeff list, combo list)
        self.track_width = track_width

    def _reduce(self, vec, combo):
        F = self.field
        for pivot, prow, pcombo in self.rows:
            c = vec[pivot]
            if c == F.zero:
                continue
            for k in range(len(vec)):
                vec[k] = F.sub(vec[k], F.mul(c, prow[k]))
            if combo is not None:
                for k in range(len(combo)):
                    combo[k] = F.sub(combo[k], F.mul(c, pcombo[k]))
        return vec, combo

    def add(self, vec, combo=None):
        """Reduce and insert; returns (is_new, residual_combo)."""
        F = self.field
        vec = list(vec)
        combo = list(combo) if combo is not None else None
        vec, combo = self._reduce(vec, combo)
        pivot = next((k for k, c in enumerate(vec) if c != F.zero), None)
        if pivot is None:
            return False, combo
        inv = F.inv(vec[pivot])
        vec = [F.mul(c, inv) for c in vec]
        if combo is not None:
            combo = [F.mul(c, inv) for c in combo]
        self.rows.append((pivot, vec, combo))
        return True, None

    def contains(self, vec):
        red, _ = self._reduce(list(vec), None)
        return all(c == self.field.zero for c in red)

    @property
    def rank(self):
        return len(self.rows)


def kernel_of_columns(field, columns, width):
    """Kernel combinations of a list of coordinate columns (length `width`)."""
    tracker = SpanTracker(field)
    out = []
    n = len(columns)
    for j, col in enumerate(columns):
        combo = [field.zero] * n
        combo[j] = field.one
        is_new, residual = _augmented_add(tracker, field, col, combo)
        if not is_new:
            out.append(residual)
    return out


def _augmented_add(tracker, field, vec, combo):
    vec = list(vec)
    combo = list(combo)
    vec, combo = tracker._reduce(vec, combo)
    pivot = next((k for k, c in enumerate(vec) if c != field.zero), None)
    if pivot is None:
        return False, combo
    inv = field.inv(vec[pivot])
    vec = [field.mul(c, inv) for c in vec]
    combo = [field.mul(c, inv) for c in combo]
    tracker.rows.append((pivot, vec, combo))
    return True, None


# -- monomial bases ------------------------------------------------------------


def monomials_of(ring, dx, dt=None):
    """All monomials of weighted x-degree dx (and T-degree dt, if given)."""
    n = ring.nvars
    out = []

    def rec(i, mono, rx, rt):
        if i == n:
            if rx == 0 and (dt is None or rt == 0):
                out.append(tuple(mono))
            return
        if i < ring.n_x:
            w = ring.degrees[i]
            emax = rx // w if w else 0
            for e in range(emax + 1):
                mono.append(e)
                rec(i + 1, mono, rx - e * w, rt)
                mono.pop()
        else:
            w = ring.t_xweights[i - ring.n_x]
            if dt is None:
                emax = rx // w if w else 0
            else:
                emax = rt
                if w:
                    emax = min(emax, rx // w)
            for e in range(emax + 1):
                mono.append(e)
                rec(i + 1, mono, rx - e * w, rt - e if dt is not None else rt)
                mono.pop()

    if dx < 0 or (dt is not None and dt < 0):
        return []
    rec(0, [], dx, dt if dt is not None else 0)
    return ring.sorted_monos(out)


def ring_basis(ctx, dx, dt=None):
    """Monomial basis of the quotient ring in the given (bi)degree."""
    monos = monomials_of(ctx.ambient, dx, dt)
    if ctx.is_regular:
        return monos
    leads = [lm for (pos, lm) in ctx.rel_gb().leads]
    return [m for m in monos if not any(mono_divides(l, m) for l in leads)]


def free_basis(ctx, twists_x, dx, twists_t=None, dt=None):
    """Basis [(pos, mono)] of a free module in (bi)degree, position-major."""
    out = []
    for pos, tx in enumerate(twists_x):
        mdx = dx + tx
        mdt = dt + twists_t[pos] if dt is not None else None
        for m in ring_basis(ctx, mdx, mdt):
            out.append((pos, m))
    return out


def vec_coords(v, basis_index, field, ctx=None, rank=None):
    """Coordinates of a vecpoly in a fixed basis (element must lie in it)."""
    if ctx is not None and not ctx.is_regular:
        from .ops import _nf_vec_components

        v = _nf_vec_components(v, rank, ctx)
    coords = [field.zero] * len(basis_index)
    for key, c in v.items():
        k = basis_index.get(key)
        if k is None:
            raise ValueError(f"term {key} outside the chosen basis")
        coords[k] = field.add(coords[k], c)
    return coords


# -- graded pieces of maps and modules ------------------------------------------


def image_columns_in_degree(cols, module_twists_x, ctx, dx, twists_t=None, dt=None):
    """Coordinate columns spanning the degree-(dx[,dt]) piece of <cols>."""
    ring = ctx.ambient
    field = ring.field
    tgt_basis = free_basis(ctx, module_twists_x, dx, twists_t, dt)
    index = {bm: k for k, bm in enumerate(tgt_basis)}
    out = []
    rank = len(module_twists_x)
    for v in cols:
        if not v:
            continue
        degs = {ring.xdeg(m) - module_twists_x[p] for (p, m) in v}
        if len(degs) != 1:
            raise ValueError("inhomogeneous column")
        d0 = degs.pop()
        dt0 = None
        if dt is not None:
            tdegs = {ring.tdeg(m) - twists_t[p] for (p, m) in v}
            dt0 = tdegs.pop()
        need_x = dx - d0
        need_t = dt - dt0 if dt is not None else None
        if need_x < 0 or (need_t is not None and need_t < 0):
            continue
        for mu in ring_basis(ctx, need_x, need_t):
            shifted = {(p, mono_mul(m, mu)): c for (p, m), c in v.items()}
            out.append(vec_coords(shifted, index, field, ctx, rank))
    return out, tgt_basis


def module_dim(M, dx, dt=None, twists_x=None, twists_t=None):
    """dim_k of coker(M.matrix) in one (bi)degree.

    For an x-graded context the module twists are x-twists and no extra
    data is needed.  For a bigraded check over a T-block ring, pass the
    x-twists and T-twists of the target explicitly.
    """
    ctx = M.ctx
    tw_x = twists_x if twists_x is not None else M.target.twists
    cols = [v for v in M.matrix.columns() if v]
    imcols, basis = image_columns_in_degree(cols, tw_x, ctx, dx, twists_t, dt)
    span = SpanTracker(ctx.field)
    for col in imcols:
        span.add(col)
    return len(basis) - span.rank


def hilbert_function(M, degrees):
    return {d: module_dim(M, d) for d in degrees}


# -- minimal generators ----------------------------------------------------------


def minimal_generator_indices(A, ctx):
    """Indices of a minimal generating subset of A's columns (graded Nakayama).

    Works in the x-grading; requires homogeneous columns.
    """
    ring = ctx.ambient
    field = ring.field
    module = A.target
    cols = A.columns()
    degs = []
    for j, v in enumerate(cols):
        if not v:
            degs.append(None)
            continue
        d = {ring.xdeg(m) - _xtwist(module, p, ring) for (p, m) in v}
        if len(d) != 1:
            raise ValueError("inhomogeneous column in minimal generator search")
        degs.append(d.pop())
    order = sorted(
        (d, j) for j, d in enumerate(degs) if d is not None
    )
    kept = []
    tw_x = tuple(_xtwist(module, p, ring) for p in range(module.rank))
    by_degree = {}
    for d, j in order:
        by_degree.setdefault(d, []).append(j)
    for d in sorted(by_degree):
        basis = free_basis(ctx, tw_x, d)
        index = {bm: k for k, bm in enumerate(basis)}
        span = SpanTracker(field)
        # the degree-d piece of m * (all columns)
        for j, v in enumerate(cols):
            if degs[j] is None:
                continue
            gap = d - degs[j]
            if gap <= 0:
                continue
            for mu in ring_basis(ctx, gap):
                shifted = {(p, mono_mul(m, mu)): c for (p, m), c in v.items()}
                span.add(vec_coords(shifted, index, field, ctx, module.rank))
        for j in by_degree[d]:
            coords = vec_coords(cols[j], index, field, ctx, module.rank)
            is_new, _ = span.add(coords)
            if is_new:
                kept.append(j)
    return kept


def _xtwist(module, pos, ring):
    # module twists are x-twists whenever the ring has no T-block
    if ring.has_t_block:
        raise ValueError("minimal generators need an x-graded (T-free) context")
    return module.twists[pos]


# -- brute-force oracles -----------------------------------------------------------


def brute_kernel(A, ctx, max_degree):
    """All kernel elements of A of degree <= max_degree, degree by degree.

    Returns a list of vecpolys over A.source; pure linear algebra.
    """
    ring = ctx.ambient
    field = ring.field
    out = []
    for d in range(0, max_degree + 1):
        src_basis = free_basis(ctx, A.source.twists, d)
        if not src_basis:
            continue
        d_t = d + A.degree_shift
        tgt_basis = free_basis(ctx, A.target.twists, d_t)
        index = {bm: k for k, bm in enumerate(tgt_basis)}
        cols = []
        for pos, m in src_basis:
            img = {}
            for (i, j), p in A.entries.items():
                if j == pos:
                    shifted = p.mul_mono(m)
                    for mm, c in shifted.terms.items():
                        key = (i, mm)
                        img[key] = field.add(img.get(key, field.zero), c)
            cols.append(vec_coords(img, index, field, ctx, A.target.rank))
        for combo in kernel_of_columns(field, cols, len(tgt_basis)):
            v = {}
            for k, c in enumerate(combo):
                if c != field.zero:
                    pos, m = src_basis[k]
                    v[(pos, m)] = c
            if v:
                out.append(v)
    return out


def brute_annihilator(M, ctx, max_degree):
    """Degree <= max_degree elements of ann(coker M.matrix), by linear algebra.

    Returns every homogeneous annihilating element up to the bound (a basis
    of the solution space per degree), with no Groebner machinery involved.
    """
    ring = ctx.ambient
    field = ring.field
    module = M.target
    cols = [v for v in M.matrix.columns() if v]
    out = []
    for d in range(0, max_degree + 1):
        cand = ring_basis(ctx, d)
        if not cand:
            continue
        # residual of mu*e_pos modulo the image, stacked over all positions
        stacked = [[] for _ in cand]
        for pos in range(module.rank):
            dd = d - module.twists[pos]
            imcols, basis = image_columns_in_degree(cols, module.twists, ctx, dd)
            index = {bm: t for t, bm in enumerate(basis)}
            span = SpanTracker(field)
            for col in imcols:
                span.add(col)
            for k, mu in enumerate(cand):
                coords = vec_coords({(pos, mu): field.one}, index, field, ctx, module.rank)
                residual, _ = span._reduce(list(coords), None)
                stacked[k].extend(residual)
        width = len(stacked[0]) if stacked else 0
        for combo in kernel_of_columns(field, stacked, width):
            p = PolyElem(ring, {cand[k]: c for k, c in enumerate(combo) if c != field.zero})
            if not p.is_zero():
                out.append(p)
    return out
