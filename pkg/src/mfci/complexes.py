"""Chain complexes of graded free modules, Koszul complexes with their DG
structure, nullhomotopies, mapping cones, minimization, homology, and the
higher-homotopy-system constructor.

Conventions, fixed once: differentials raise cohomological degree; a
degree-d map f is a chain map iff del o f = (-1)^d f o del; a nullhomotopy
h of g solves g = del o h - (-1)^(d-1) h o del (the anticommutator when g
has even degree).  A resolution of a module sits in degrees [-n, 0].
"""

from itertools import combinations

from .errors import (
    InhomogeneousInput,
    LiftObstruction,
    NotAnRModule,
    NotInImage,
    NotNullhomotopic,
    VerificationFailure,
    WindowTooSmall,
)
from .algebra import (
    GradedFreeModule,
    GradedModulePresentation,
    PolyElem,
    PolyMatrix,
    homology_presentation,
    is_regular_sequence,
    is_zero_module,
    lift,
    poly_to_vec,
)
from .algebra.ops import matrix_gb


class ChainComplex:
    """A bounded window of a cohomologically indexed complex over a ctx.

    terms: {i: GradedFreeModule} for lo <= i <= hi; diffs: {i: PolyMatrix}
    with diffs[i]: terms[i] -> terms[i+1].  Missing terms are rank zero.
    """

    def __init__(self, ctx, lo, hi, terms, diffs, check=True, graded=True):
        self.ctx = ctx
        self.lo = lo
        self.hi = hi
        self.terms = {}
        for i in range(lo, hi + 1):
            t = terms.get(i)
            self.terms[i] = t if t is not None else GradedFreeModule(ctx.ambient, ())
        self.diffs = {}
        for i, d in diffs.items():
            if d is not None and lo <= i < hi:
                self.diffs[i] = ctx.nf_matrix(d)
        self.graded = graded
        if check:
            self.validate()

    def term(self, i):
        if i in self.terms:
            return self.terms[i]
        return GradedFreeModule(self.ctx.ambient, ())

    def diff(self, i):
        d = self.diffs.get(i)
        if d is not None:
            return d
        return PolyMatrix.zero(self.term(i), self.term(i + 1))

    @property
    def window(self):
        return (self.lo, self.hi)

    def validate(self):
        for i in range(self.lo, self.hi):
            d = self.diff(i)
            if d.source.twists != self.term(i).twists or d.target.twists != self.term(i + 1).twists:
                raise VerificationFailure(f"differential {i} has wrong shape")
            if self.graded:
                d.check_homogeneous()
        for i in range(self.lo, self.hi - 1):
            comp = self.ctx.nf_matrix(self.diff(i + 1) * self.diff(i))
            if not comp.is_zero():
                raise VerificationFailure(f"d^2 != 0 at degree {i}")
        return True

    def ranks(self):
        return {i: self.term(i).rank for i in range(self.lo, self.hi + 1)}

    def __repr__(self):
        return f"ChainComplex[{self.lo},{self.hi}] ranks {self.ranks()}"


class MapSequence:
    """Like a complex but with no d^2 = 0 requirement (liftings live here)."""

    def __init__(self, ctx, lo, hi, terms, maps):
        self.ctx = ctx
        self.lo = lo
        self.hi = hi
        self.terms = dict(terms)
        self.maps = dict(maps)

    def term(self, i):
        t = self.terms.get(i)
        return t if t is not None else GradedFreeModule(self.ctx.ambient, ())

    def map(self, i):
        d = self.maps.get(i)
        if d is not None:
            return d
        return PolyMatrix.zero(self.term(i), self.term(i + 1))


class ChainMap:
    """A degree-d map of complexes: components f^i: source^i -> target^(i+d)."""

    def __init__(self, source, target, degree, components, check=True):
        self.source = source
        self.target = target
        self.degree = degree
        self.components = {i: m for i, m in components.items() if m is not None}
        if check:
            self.verify()

    @property
    def ctx(self):
        return self.source.ctx

    def component(self, i):
        m = self.components.get(i)
        if m is not None:
            return m
        return PolyMatrix.zero(self.source.term(i), self.target.term(i + self.degree))

    def verify(self):
        ctx = self.ctx
        sgn = -1 if self.degree % 2 else 1
        for i in range(self.source.lo, self.source.hi):
            lhs = self.target.diff(i + self.degree) * self.component(i)
            rhs = self.component(i + 1) * self.source.diff(i)
            if sgn < 0:
                rhs = -rhs
            if not ctx.nf_matrix(lhs - rhs).is_zero():
                raise VerificationFailure(f"chain-map square fails at degree {i}")
        return True

    def compose(self, other):
        """self o other."""
        comps = {}
        for i in range(other.source.lo, other.source.hi + 1):
            comps[i] = self.component(i + other.degree) * other.component(i)
        return ChainMap(other.source, self.target, self.degree + other.degree, comps, check=False)

    def add(self, other, sign=1):
        comps = {}
        for i in set(self.components) | set(other.components):
            a = self.component(i)
            b = other.component(i)
            comps[i] = a + b if sign > 0 else a - b
        return ChainMap(self.source, self.target, self.degree, comps, check=False)

    def is_zero(self):
        return all(
            self.ctx.nf_matrix(m).is_zero() for m in self.components.values()
        )

    @staticmethod
    def identity(C):
        comps = {i: PolyMatrix.identity(C.term(i)) for i in range(C.lo, C.hi + 1)}
        return ChainMap(C, C, 0, comps, check=False)

    @staticmethod
    def scalar(C, poly, degree=0):
        comps = {}
        for i in range(C.lo, C.hi + 1):
            t = C.term(i)
            comps[i] = PolyMatrix(
                t, t, {(r, r): poly for r in range(t.rank)}, degree_shift=poly.degree("x") or 0
            )
        return ChainMap(C, C, degree, comps, check=False)


class Homotopy:
    """h with components h^i: source^i -> target^(i + map_degree - 1),
    certifying g = del h - (-1)^(d-1) h del for a degree-d map g."""

    def __init__(self, source, target, map_degree, components):
        self.source = source
        self.target = target
        self.map_degree = map_degree
        self.components = {i: m for i, m in components.items() if m is not None}

    def component(self, i):
        m = self.components.get(i)
        if m is not None:
            return m
        return PolyMatrix.zero(
            self.source.term(i), self.target.term(i + self.map_degree - 1)
        )

    def boundary(self):
        """The map del h - (-1)^(d-1) h del this homotopy bounds."""
        d = self.map_degree
        sgn = -1 if (d - 1) % 2 == 0 else 1  # -(-1)^(d-1)
        comps = {}
        for i in range(self.source.lo, self.source.hi + 1):
            a = self.target.diff(i + d - 1) * self.component(i)
            b = self.component(i + 1) * self.source.diff(i)
            comps[i] = a + b if sgn > 0 else a - b
        return ChainMap(self.source, self.target, d, comps, check=False)

    def certifies(self, g):
        ctx = self.source.ctx
        diff_map = self.boundary().add(g, sign=-1)
        return diff_map.is_zero()


def nullhomotopy(g):
    """Solve g = del h - (-1)^(d-1) h del degree by degree, by lifting.

    The caller guarantees g is nullhomotopic for structural reasons; a
    lifting obstruction raises NotNullhomotopic.
    """
    src, tgt, d = g.source, g.target, g.degree
    ctx = src.ctx
    comps = {}
    h_next = None  # h^(i+1) while descending
    for i in range(src.hi, src.lo - 1, -1):
        rhs = g.component(i)
        if h_next is not None:
            corr = h_next * src.diff(i)
            rhs = rhs + corr if (d - 1) % 2 == 0 else rhs - corr
            # g^i + (-1)^(d-1) h^(i+1) del^i  is what del h^i must equal
        A = tgt.diff(i + d - 1)
        if A.source.rank == 0:
            if not ctx.nf_matrix(rhs).is_zero():
                raise NotNullhomotopic(f"no room to lift at degree {i}")
            h_i = PolyMatrix.zero(src.term(i), tgt.term(i + d - 1))
        else:
            try:
                h_i = lift(ctx.nf_matrix(rhs), A, ctx)
            except NotInImage as exc:
                raise NotNullhomotopic(f"lift obstruction at degree {i}: {exc}")
            h_i = PolyMatrix(src.term(i), tgt.term(i + d - 1), h_i.entries)
        comps[i] = h_i
        h_next = h_i
    h = Homotopy(src, tgt, d, comps)
    if not h.certifies(g):
        raise NotNullhomotopic("constructed homotopy failed re-verification")
    return h


# -- Koszul complexes ---------------------------------------------------------


class KoszulComplex(ChainComplex):
    """Exterior-algebra complex on f_1..f_c with its multiplication maps."""

    def __init__(self, ctx, f):
        self.f = tuple(f)
        c = len(self.f)
        ring = ctx.ambient
        fdeg = [p.degree("x") for p in self.f]
        self.subsets = {j: list(combinations(range(c), j)) for j in range(c + 1)}
        terms = {}
        for j in range(c + 1):
            tw = tuple(-sum(fdeg[i] for i in S) for S in self.subsets[j])
            terms[-j] = GradedFreeModule(ring, tw)
        diffs = {}
        for j in range(1, c + 1):
            ent = {}
            for col, S in enumerate(self.subsets[j]):
                for pos, i in enumerate(S):
                    Sm = tuple(s for s in S if s != i)
                    row = self.subsets[j - 1].index(Sm)
                    coeff = self.f[i] if pos % 2 == 0 else -self.f[i]
                    prev = ent.get((row, col))
                    ent[(row, col)] = coeff if prev is None else prev + coeff
            diffs[-j] = PolyMatrix(terms[-j], terms[-j + 1], ent)
        super().__init__(ctx, -c, 0, terms, diffs)

    def mult_matrix(self, i, j):
        """Multiplication by e_i from exterior degree j to j+1 (wedge)."""
        ring = self.ctx.ambient
        one = PolyElem.const(ring, 1)
        ent = {}
        for col, S in enumerate(self.subsets[j]):
            if i in S:
                continue
            T = tuple(sorted(S + (i,)))
            row = self.subsets[j + 1].index(T)
            sign = sum(1 for s in S if s < i)
            ent[(row, col)] = one if sign % 2 == 0 else -one
        return PolyMatrix(self.term(-j), self.term(-j - 1), ent, degree_shift=self.f[i].degree("x"))


def koszul(f, ctx):
    f = list(f)
    for p in f:
        if not p.is_homogeneous("x"):
            raise InhomogeneousInput("Koszul complex needs homogeneous forms")
    return KoszulComplex(ctx, f)


# -- homology ----------------------------------------------------------------


def homology(C, i):
    """H^i as a subquotient presentation (out-of-window maps count as zero)."""
    if i < C.lo or i > C.hi:
        raise WindowTooSmall(f"degree {i} outside window {C.window}")
    A = C.diff(i) if i < C.hi else None
    B = C.diff(i - 1) if i > C.lo else None
    if A is None and B is None:
        A = PolyMatrix.zero(C.term(i), GradedFreeModule(C.ctx.ambient, ()))
    return homology_presentation(A, B, C.ctx)


def exactness_window(C, a, b):
    """True iff H^i(C) = 0 for all i in [a, b]; needs one degree of margin."""
    if a - 1 < C.lo or b + 1 > C.hi:
        raise WindowTooSmall(f"[{a},{b}] needs margin inside {C.window}")
    for i in range(a, b + 1):
        if not is_zero_module(homology(C, i)):
            return False
    return True


# -- higher homotopy systems ---------------------------------------------------


def multi_indices(c, weight):
    """All J in N^c with |J| = weight, lexicographic."""
    if c == 1:
        return [(weight,)]
    out = []
    for first in range(weight, -1, -1):
        for rest in multi_indices(c - 1, weight - first):
            out.append((first,) + rest)
    return sorted(out)


class HigherHomotopySystem:
    """The family {sigma^J} of odd endomorphisms of a finite Q-resolution G.

    sigma^0 is the differential; sigma^J for J != 0 has cohomological degree
    1 - 2|J| and is stored as {i: PolyMatrix} over the window of G.
    """

    def __init__(self, G, f, sigmas, j_max):
        self.G = G
        self.f = tuple(f)
        self.c = len(self.f)
        self.sigmas = sigmas
        self.j_max = j_max

    def degree(self, J):
        return 1 - 2 * sum(J)

    def component(self, J, i):
        """sigma^J restricted to G^i."""
        w = sum(J)
        if w == 0:
            return self.G.diff(i)
        comps = self.sigmas.get(tuple(J))
        tgt_i = i + 1 - 2 * w
        if comps is None or i not in comps:
            return PolyMatrix.zero(self.G.term(i), self.G.term(tgt_i))
        return comps[i]

    def convolution(self, J, i):
        """sum over J' + J'' = J of sigma^J' sigma^J'' restricted to G^i."""
        ctx = self.G.ctx
        w = sum(J)
        tgt_i = i + 2 * (1 - w)
        acc = PolyMatrix.zero(self.G.term(i), self.G.term(tgt_i))
        for J2 in _summands(J):
            J1 = tuple(a - b for a, b in zip(J, J2))
            mid = i + 1 - 2 * sum(J2)
            acc = acc + self.component(J1, mid) * self.component(J2, i)
        return ctx.nf_matrix(acc)

    def verify(self, slack=1):
        """Check all defining identities for |J| <= j_max + slack, exactly."""
        G = self.G
        for w in range(2, self.j_max + slack + 1):
            for J in multi_indices(self.c, w):
                for i in range(G.lo, G.hi + 1):
                    if not self.convolution(J, i).is_zero():
                        raise VerificationFailure(
                            f"convolution identity fails for J={J} at degree {i}"
                        )
        for k in range(self.c):
            J = tuple(1 if t == k else 0 for t in range(self.c))
            for i in range(G.lo, G.hi + 1):
                got = self.convolution(J, i)
                want = PolyMatrix(
                    G.term(i),
                    G.term(i),
                    {
                        (r, r): self.f[k]
                        for r in range(G.term(i).rank)
                    },
                    degree_shift=self.f[k].degree("x"),
                )
                if not G.ctx.nf_matrix(got - want).is_zero():
                    raise VerificationFailure(f"unit identity fails for f_{k+1} at {i}")
        return True


def _summands(J):
    """All J'' with 0 <= J'' <= J componentwise, in lexicographic order."""
    ranges = [range(a + 1) for a in J]
    out = [()]
    for r in ranges:
        out = [t + (e,) for t in out for e in r]
    return sorted(out)


def higher_homotopies(G, f, check=True):
    """Construct a system of higher homotopies on a finite Q-free resolution.

    For |J| = 1 solves del h + h del = f_i; for |J| >= 2 solves the
    convolution identity by the same canonical lifting; terminates because
    2|J| - 1 eventually exceeds the length of G.
    """
    ctx = G.ctx
    if not ctx.is_regular:
        raise ValueError("higher homotopies are built over the polynomial ring")
    f = list(f)
    c = len(f)
    if not is_regular_sequence(f, ctx):
        raise NotAnRModule("f is not a regular sequence")
    # f_i must kill H^0(G) = coker of the last differential
    if G.term(G.hi).rank:
        if G.hi == G.lo:
            if any(not fk.is_zero() for fk in f):
                raise NotAnRModule("length-0 resolution of a nonzero module")
        else:
            gb = matrix_gb(G.diff(G.hi - 1), ctx)
            for fk in f:
                for pos in range(G.term(G.hi).rank):
                    if not gb.contains(poly_to_vec(fk, pos)):
                        raise NotAnRModule(f"{fk} does not annihilate H^0(G)")

    length = G.hi - G.lo
    j_max = 0
    while 2 * (j_max + 1) - 1 <= length:
        j_max += 1

    sigmas = {}
    for w in range(1, j_max + 1):
        for J in multi_indices(c, w):
            if w == 1:
                k = J.index(1)
                rhs = ChainMap.scalar(G, f[k])
            else:
                comps = {}
                sys_partial = HigherHomotopySystem(G, f, sigmas, j_max)
                for i in range(G.lo, G.hi + 1):
                    acc = None
                    for J2 in _summands(J):
                        if sum(J2) == 0 or J2 == J:
                            continue
                        J1 = tuple(a - b for a, b in zip(J, J2))
                        mid = i + 1 - 2 * sum(J2)
                        term = sys_partial.component(J1, mid) * sys_partial.component(J2, i)
                        acc = term if acc is None else acc + term
                    if acc is not None:
                        comps[i] = -acc
                rhs = ChainMap(G, G, 2 - 2 * w, comps, check=False)
            try:
                h = nullhomotopy(rhs)
            except NotNullhomotopic as exc:
                raise LiftObstruction(f"sigma^{J}: {exc}")
            sigmas[J] = {i: m for i, m in h.components.items() if not m.is_zero()}

    sys = HigherHomotopySystem(G, f, sigmas, j_max)
    if check:
        sys.verify()
    return sys


def koszul_homotopies(K, f, check=True):
    """DG fast path: on a Koszul resolution K(g), multiplication by the
    element lifting f_i gives sigma^i, and sigma^J = 0 for |J| >= 2."""
    ctx = K.ctx
    g = K.f
    ring = ctx.ambient
    row = PolyMatrix(
        GradedFreeModule(ring, tuple(-p.degree("x") for p in g)),
        GradedFreeModule(ring, (0,)),
        {(0, j): p for j, p in enumerate(g)},
    )
    sigmas = {}
    c = len(f)
    for k, fk in enumerate(f):
        coeffs = lift(poly_to_vec(fk), row, ctx)
        J = tuple(1 if t == k else 0 for t in range(c))
        comps = {}
        for i in range(K.lo + 1, K.hi + 1):
            j = -i
            acc = None
            for gi in range(len(g)):
                a = coeffs.entry(gi, 0)
                if a.is_zero():
                    continue
                m = K.mult_matrix(gi, j).scale_poly(a)
                acc = m if acc is None else acc + m
            if acc is not None and not acc.is_zero():
                comps[i] = acc
        sigmas[J] = comps
    sys = HigherHomotopySystem(K, f, sigmas, j_max=1)
    if check:
        sys.verify()
    return sys


# -- minimization and cones ------------------------------------------------------


class Minimization:
    """minimize() output: the minimal complex plus a homotopy equivalence."""

    def __init__(self, complex, inclusion, projection, homotopy):
        self.complex = complex
        self.inclusion = inclusion
        self.projection = projection
        self.homotopy = homotopy


def minimize(C):
    """Split off unit entries until all differentials lie in the maximal ideal.

    Returns a Minimization with verified p o i = 1 and 1 - i o p = dh + hd.
    """
    ctx = C.ctx
    cur = C
    incl = ChainMap.identity(C)
    proj = ChainMap.identity(C)
    htot = Homotopy(C, C, 0, {})
    while True:
        pair = _find_unit(cur)
        if pair is None:
            break
        i, r, c0, u = pair
        nxt, inc1, prj1, h1 = _cancel(cur, i, r, c0, u)
        # compose certificates
        new_incl_comps = {}
        for t in range(nxt.lo, nxt.hi + 1):
            new_incl_comps[t] = incl.component(t) * inc1.component(t)
        new_proj_comps = {}
        for t in range(C.lo, C.hi + 1):
            new_proj_comps[t] = prj1.component(t) * proj.component(t)
        new_h_comps = {}
        for t in range(C.lo, C.hi + 1):
            a = htot.component(t)
            b = incl.component(t - 1) * h1.component(t) * proj.component(t)
            new_h_comps[t] = a + b
        cur = nxt
        incl = ChainMap(cur, C, 0, new_incl_comps, check=False)
        proj = ChainMap(C, cur, 0, new_proj_comps, check=False)
        htot = Homotopy(C, C, 0, new_h_comps)
    return Minimization(cur, incl, proj, htot)


def _find_unit(C):
    for i in range(C.lo, C.hi):
        d = C.diff(i)
        for (r, c0), p in sorted(d.entries.items()):
            q = C.ctx.nf(p)
            if q.is_unit():
                return (i, r, c0, q.constant_coeff())
    return None


def _cancel(C, i, r, c0, u):
    """Cancel the pair (gen c0 of term i) -> (gen r of term i+1)."""
    ctx = C.ctx
    ring = ctx.ambient
    F = ring.field
    uinv = F.inv(u)
    d = C.diff(i)
    rows = [a for a in range(C.term(i + 1).rank) if a != r]
    cols = [b for b in range(C.term(i).rank) if b != c0]
    new_terms = dict(C.terms)
    new_terms[i] = GradedFreeModule(ring, tuple(C.term(i).twists[b] for b in cols))
    new_terms[i + 1] = GradedFreeModule(ring, tuple(C.term(i + 1).twists[a] for a in rows))
    new_diffs = {}
    for t in range(C.lo, C.hi):
        if t == i:
            ent = {}
            for ai, a in enumerate(rows):
                for bi, b in enumerate(cols):
                    p = d.entry(a, b) - d.entry(a, c0).scale(uinv) * d.entry(r, b)
                    p = ctx.nf(p)
                    if not p.is_zero():
                        ent[(ai, bi)] = p
            new_diffs[t] = PolyMatrix(new_terms[i], new_terms[i + 1], ent)
        elif t == i - 1:
            dm = C.diff(t)
            ent = {}
            for (a, b), p in dm.entries.items():
                if a != c0:
                    ent[(cols.index(a), b)] = p
            new_diffs[t] = PolyMatrix(C.term(t), new_terms[i], ent)
        elif t == i + 1:
            dp = C.diff(t)
            ent = {}
            for (a, b), p in dp.entries.items():
                if b != r:
                    ent[(a, rows.index(b))] = p
            new_diffs[t] = PolyMatrix(new_terms[i + 1], C.term(t + 1), ent)
        else:
            new_diffs[t] = C.diffs.get(t)
    C2 = ChainComplex(ctx, C.lo, C.hi, new_terms, new_diffs, check=False, graded=C.graded)

    one = F.one
    # inclusion: identity except at level i, where kept gens pick up a
    # correction clearing row r
    inc_comps = {}
    for t in range(C2.lo, C2.hi + 1):
        if t == i:
            ent = {}
            for bi, b in enumerate(cols):
                ent[(b, bi)] = PolyElem.const(ring, 1)
                corr = ctx.nf(d.entry(r, b).scale(uinv))
                if not corr.is_zero():
                    ent[(c0, bi)] = -corr
            inc_comps[t] = PolyMatrix(C2.term(t), C.term(t), ent)
        elif t == i + 1:
            ent = {(a, ai): PolyElem.const(ring, 1) for ai, a in enumerate(rows)}
            inc_comps[t] = PolyMatrix(C2.term(t), C.term(t), ent)
        else:
            inc_comps[t] = PolyMatrix.identity(C.term(t))
    # projection: identity except at level i+1, where gen r maps to the
    # correction built from column c0
    prj_comps = {}
    for t in range(C.lo, C.hi + 1):
        if t == i:
            ent = {(bi, b): PolyElem.const(ring, 1) for bi, b in enumerate(cols)}
            prj_comps[t] = PolyMatrix(C.term(t), C2.term(t), ent)
        elif t == i + 1:
            ent = {}
            for ai, a in enumerate(rows):
                ent[(ai, a)] = PolyElem.const(ring, 1)
                corr = ctx.nf(d.entry(a, c0).scale(uinv))
                if not corr.is_zero():
                    ent[(ai, r)] = -corr
            prj_comps[t] = PolyMatrix(C.term(t), C2.term(t), ent)
        else:
            prj_comps[t] = PolyMatrix.identity(C.term(t))
    # homotopy: e_r -> u^{-1} e_{c0} at level i+1
    h_ent = {(c0, r): PolyElem.const(ring, F.inv(u) if F.p else 1 / u)}
    h_comps = {
        i + 1: PolyMatrix(C.term(i + 1), C.term(i), h_ent)
    }
    incl = ChainMap(C2, C, 0, inc_comps, check=False)
    proj = ChainMap(C, C2, 0, prj_comps, check=False)
    h = Homotopy(C, C, 0, h_comps)
    return C2, incl, proj, h


def cone(f):
    """Mapping cone of a degree-0 chain map, with the fixed sign convention
    del = [[-del_A, 0], [f, del_B]]."""
    A, B = f.source, f.target
    ctx = A.ctx
    lo = min(A.lo - 1, B.lo)
    hi = max(A.hi - 1, B.hi)
    terms = {}
    for i in range(lo, hi + 1):
        terms[i] = A.term(i + 1).direct_sum(B.term(i))
    diffs = {}
    for i in range(lo, hi):
        tA = A.term(i + 2)
        tB = B.term(i + 1)
        ent = {}
        dA = A.diff(i + 1)
        for (a, b), p in dA.entries.items():
            ent[(a, b)] = -p
        off_r = tA.rank
        off_c = A.term(i + 1).rank
        fc = f.component(i + 1)
        for (a, b), p in fc.entries.items():
            ent[(off_r + a, b)] = p
        dB = B.diff(i)
        for (a, b), p in dB.entries.items():
            ent[(off_r + a, off_c + b)] = p
        diffs[i] = PolyMatrix(terms[i], terms[i + 1], ent)
    return ChainComplex(ctx, lo, hi, terms, diffs, graded=A.graded and B.graded)
