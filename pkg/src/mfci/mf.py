"""Graded matrix factorizations and their algebra: the construction from a
resolution plus higher homotopies, cokernels, shift/twist, tensor / Hom /
dual with their canonical isomorphisms, twisted periodic complexes, and
supports.

A GradedMF over a ring with a T-block is a factorization of W with the
line-bundle twist acting as the S(j) twist; over a plain polynomial ring
the twist is trivial (lam = 0) and the same data is an honest Z/2-graded
complex when W = 0.
"""

from .errors import (
    MFEquationFailure,
    NonRegularContext,
    RingMismatch,
    VerificationFailure,
)
from .algebra import (
    GradedFreeModule,
    GradedModulePresentation,
    Ideal,
    PolyElem,
    PolyMatrix,
    RingCtx,
    annihilator,
    homology_presentation,
    ideal_intersect,
    ideal_saturate,
    ideal_sum,
    syzygies,
)
from .complexes import ChainComplex, multi_indices


class GradedMF:
    """(E1 --g1--> E0 --g0--> E1(lam)) with both composites equal to W."""

    def __init__(self, ring, W, E1, E0, g1, g0, check=True, provenance=None,
                 xtwists_E1=None, xtwists_E0=None):
        self.ring = ring
        self.W = W
        self.E1 = E1
        self.E0 = E0
        self.g1 = g1
        self.g0 = g0
        self.provenance = provenance
        self.xtwists_E1 = xtwists_E1
        self.xtwists_E0 = xtwists_E0
        if check:
            failures = self.check()
            if failures:
                which, i, j, got = failures[0]
                raise MFEquationFailure(
                    f"{which} entry ({i},{j}) = {got} (and {len(failures) - 1} more)"
                )

    @property
    def lam(self):
        """The twist weight: 1 over a T-block ring, 0 otherwise."""
        return 1 if self.ring.has_t_block else 0

    @property
    def is_tpc(self):
        return self.W.is_zero()

    def ctx(self):
        return RingCtx(self.ring)

    def check(self):
        """Re-verify both composites; returns a list of offending entries."""
        failures = []
        lam = self.lam
        w1 = _scalar_matrix(self.E1, self.E1.twist(lam), self.W)
        c1 = self.g0 * self.g1
        for key in set(c1.entries) | set(w1.entries):
            d = c1.entry(*key) - w1.entry(*key)
            if not d.is_zero():
                failures.append(("g0*g1 - W", key[0], key[1], d))
        w0 = _scalar_matrix(self.E0, self.E0.twist(lam), self.W)
        c0 = self.g1.twist(lam) * self.g0
        for key in set(c0.entries) | set(w0.entries):
            d = c0.entry(*key) - w0.entry(*key)
            if not d.is_zero():
                failures.append(("g1(lam)*g0 - W", key[0], key[1], d))
        return sorted(failures, key=lambda t: (t[0], t[1], t[2]))

    def twist(self, n):
        """Tensor with O(n); trivial when the ring carries no T-block."""
        n = n * self.lam
        return GradedMF(
            self.ring,
            self.W,
            self.E1.twist(n),
            self.E0.twist(n),
            self.g1.twist(n),
            self.g0.twist(n),
            check=False,
        )

    def shift(self):
        """E[1] = (E0 -> E1(lam) -> E0(lam)) with negated differentials."""
        lam = self.lam
        return GradedMF(
            self.ring,
            self.W,
            self.E0,
            self.E1.twist(lam),
            -self.g0,
            -self.g1.twist(lam),
            check=False,
        )

    def __eq__(self, other):
        return (
            isinstance(other, GradedMF)
            and self.ring == other.ring
            and self.W == other.W
            and self.E1 == other.E1
            and self.E0 == other.E0
            and self.g1 == other.g1
            and self.g0 == other.g0
        )

    def __repr__(self):
        return f"GradedMF(rk E1={self.E1.rank}, rk E0={self.E0.rank}, W={self.W})"


def _scalar_matrix(src, tgt, w):
    assert src.rank == tgt.rank
    return PolyMatrix(src, tgt, {(i, i): w for i in range(src.rank)} if not w.is_zero() else {})


class AffineMF:
    """Classical affine pair (A, B) with AB = f I = BA over Q."""

    def __init__(self, ctx_or_ring, f, A, B, check=True):
        self.ring = getattr(ctx_or_ring, "ambient", ctx_or_ring)
        self.f = f
        self.A = A
        self.B = B
        if check:
            n = A.target.rank
            if A.source.rank != n or B.target.rank != A.source.rank:
                raise MFEquationFailure("affine factorization must be square")
            for P, Q_, name in ((A, B, "AB"), (B, A, "BA")):
                comp = P * Q_
                for i in range(n):
                    for j in range(n):
                        want = self.f if i == j else PolyElem.zero(self.ring)
                        if not (comp.entry(i, j) - want).is_zero():
                            raise MFEquationFailure(f"{name} != f*I at ({i},{j})")

    @property
    def size(self):
        return self.A.target.rank


class MFMap:
    """A strict morphism (a1, a0) between factorizations of the same W."""

    def __init__(self, source, target, a1, a0, check=True):
        if source.ring != target.ring:
            raise RingMismatch("maps need a common ring")
        self.source = source
        self.target = target
        self.a1 = a1
        self.a0 = a0
        if check:
            self.verify()

    def verify(self):
        E, F = self.source, self.target
        lam = E.lam
        sq1 = self.a0 * E.g1 - F.g1 * self.a1
        if not sq1.is_zero():
            raise VerificationFailure("first square of strict morphism fails")
        sq0 = self.a1.twist(lam) * E.g0 - F.g0 * self.a0
        if not sq0.is_zero():
            raise VerificationFailure("second square of strict morphism fails")
        return True

    def compose(self, other):
        """self o other."""
        return MFMap(
            other.source, self.target, self.a1 * other.a1, self.a0 * other.a0, check=False
        )

    def is_identity(self):
        return (
            self.a1.equal_entries(PolyMatrix.identity(self.source.E1))
            and self.a0.equal_entries(PolyMatrix.identity(self.source.E0))
        )

    def inverse(self):
        """Inverse of a unit-entried (signed permutation) isomorphism."""
        inv1 = _invert_permutation_matrix(self.a1)
        inv0 = _invert_permutation_matrix(self.a0)
        out = MFMap(self.target, self.source, inv1, inv0, check=False)
        if not self.compose(out).is_identity() or not out.compose(self).is_identity():
            raise VerificationFailure("inverse verification failed")
        return out

    @staticmethod
    def identity(E):
        return MFMap(E, E, PolyMatrix.identity(E.E1), PolyMatrix.identity(E.E0), check=False)

    def tensor(self, other):
        """The induced strict map E (x) G -> F (x) H of tensor factorizations."""
        a, b = self, other
        src = tensor_mf(a.source, b.source)
        tgt = tensor_mf(a.target, b.target)
        lam = src.lam
        t1 = _block_diag(
            src.E1, tgt.E1, [a.a0.kronecker(b.a1), a.a1.kronecker(b.a0)]
        )
        t0 = _block_diag(
            src.E0, tgt.E0, [a.a0.kronecker(b.a0), a.a1.kronecker(b.a1)]
        )
        return MFMap(src, tgt, t1, t0, check=False)


def _invert_permutation_matrix(m):
    field = m.ring.field
    ent = {}
    for (i, j), p in m.entries.items():
        if not p.is_unit():
            raise VerificationFailure("inverse only for unit-entried isomorphisms")
        ent[(j, i)] = PolyElem.const(m.ring, field.inv(p.constant_coeff()))
    return PolyMatrix(m.target, m.source, ent)


def _block_diag(src, tgt, blocks):
    ent = {}
    ro = co = 0
    for b in blocks:
        for (i, j), p in b.entries.items():
            ent[(ro + i, co + j)] = p
        ro += b.target.rank
        co += b.source.rank
    assert ro == tgt.rank and co == src.rank
    return PolyMatrix(src, tgt, ent)


# -- construction from a resolution and higher homotopies -----------------------


def extend_to_t_ring(Q, f, t_names=None):
    """S = Q[T_1..T_c] with x-weights making W = sum f_i T_i bihomogeneous."""
    c = len(f)
    if t_names is None:
        t_names = tuple(f"T_{i + 1}" for i in range(c))
    degs = [p.degree("x") for p in f]
    D = max(degs)
    S = Q.extend_t(t_names, t_xweights=tuple(D - d for d in degs))
    vm = {Q._index[n]: S._index[n] for n in Q.names}
    fS = [p.map_ring(S, vm) for p in f]
    W = PolyElem.zero(S)
    for i, p in enumerate(fS):
        W = W + p * PolyElem.var(S, t_names[i])
    return S, W, vm


def build_mf(M, G, sigma):
    """The graded matrix factorization E(M, G, sigma) of W over S = Q[T].

    E1 = sum_j G_{2j+1} (x) S(j), E0 = sum_j G_{2j} (x) S(j); the maps are
    assembled blockwise as sum_J sigma^J (x) T^J and the factorization
    equations are verified exactly before returning.
    """
    Q = G.ctx.ambient
    f = list(sigma.f)
    c = len(f)
    S, W, vm = extend_to_t_ring(Q, f)
    length = G.hi - G.lo

    def blocks(parity):
        out = []
        j = 0
        while 2 * j + parity <= length:
            out.append((j, G.term(-(2 * j + parity))))
            j += 1
        return out

    odd_blocks = blocks(1)
    even_blocks = blocks(0)
    D = max((p.degree("x") for p in f), default=1)

    def module_of(blks):
        tw = []
        xtw = []
        for j, term in blks:
            tw.extend([j] * term.rank)
            xtw.extend([t + j * D for t in term.twists])
        return GradedFreeModule(S, tw), xtw

    E1, xtw1 = module_of(odd_blocks)
    E0, xtw0 = module_of(even_blocks)

    def t_mono(J):
        m = [0] * S.nvars
        for i, a in enumerate(J):
            m[S.n_x + i] = a
        return tuple(m)

    def assemble(src_blocks, src_parity, tgt_blocks, tgt_modfun, target_module):
        ent = {}
        col_off = 0
        offs = {}
        row_off = 0
        for i, term in tgt_blocks:
            offs[i] = row_off
            row_off += term.rank
        for j, term in src_blocks:
            for i, tterm in tgt_blocks:
                w = tgt_modfun(i, j)
                if w is None or w < 0:
                    continue
                for J in multi_indices(c, w):
                    comp = sigma.component(J, -(2 * j + src_parity))
                    if comp.is_zero():
                        continue
                    mono = t_mono(J)
                    for (r, s), p in comp.entries.items():
                        q = p.map_ring(S, vm).mul_mono(mono)
                        key = (offs[i] + r, col_off + s)
                        cur = ent.get(key)
                        ent[key] = q if cur is None else cur + q
            col_off += term.rank
        return ent

    # g1: block (i, j) uses |J| = i - j (sigma: G_{2j+1} -> G_{2i})
    ent1 = assemble(odd_blocks, 1, even_blocks, lambda i, j: i - j, E0)
    g1 = PolyMatrix(E1, E0, ent1)
    # g0: block (i, j) with target E1(1)-block i (twist i+1) uses |J| = i + 1 - j
    ent0 = assemble(even_blocks, 0, odd_blocks, lambda i, j: i + 1 - j, E1.twist(1))
    g0 = PolyMatrix(E0, E1.twist(1), ent0)

    return GradedMF(
        S, W, E1, E0, g1, g0,
        provenance={"G": G, "sigma": sigma, "odd_blocks": odd_blocks, "even_blocks": even_blocks},
        xtwists_E1=xtw1, xtwists_E0=xtw0,
    )


def check_mf(E):
    """Report-style verification of the factorization equations."""
    failures = E.check()
    return {
        "ok": not failures,
        "failures": [
            {"composite": which, "row": i, "col": j, "entry": str(got)}
            for which, i, j, got in failures
        ],
    }


def coker_mf(E):
    """coker(g1) over S/(W); multiplication by W on it is zero."""
    ctx = RingCtx(E.ring, (E.W,) if not E.W.is_zero() else ())
    return GradedModulePresentation(ctx, E.g1)


def affine_collapse(E, t_value=1):
    """For c = 1: substitute T_1 = t_value, producing an AffineMF over Q."""
    S = E.ring
    if S.n_t != 1:
        raise ValueError("affine collapse needs exactly one T variable")
    Q = S.drop_t()
    tname = S.names[S.n_x]
    vm = {S._index[n]: Q._index[n] for n in Q.names}
    val = PolyElem.const(S, t_value)

    def down(p):
        return p.subs_one(tname, val).map_ring(Q, vm)

    fQ = down(E.W)
    tw1 = tuple(E.xtwists_E1) if E.xtwists_E1 else (0,) * E.E1.rank
    tw0 = tuple(E.xtwists_E0) if E.xtwists_E0 else (0,) * E.E0.rank
    M1 = GradedFreeModule(Q, tw1)
    M0 = GradedFreeModule(Q, tw0)
    A = PolyMatrix(M1, M0, {k: down(p) for k, p in E.g1.entries.items()})
    B = PolyMatrix(M0, M1, {k: down(p) for k, p in E.g0.entries.items()})
    return AffineMF(Q, fQ, A, B)


def zero_mf(ring):
    Z = GradedFreeModule(ring, ())
    zero = PolyMatrix(Z, Z)
    return GradedMF(ring, PolyElem.zero(ring), Z, Z, zero, zero, check=False)


def unit_mf(ring):
    """O = (0 -> O -> 0), the tensor unit in MF(-, 0)."""
    E1 = GradedFreeModule(ring, ())
    E0 = GradedFreeModule(ring, (0,))
    lam = 1 if ring.has_t_block else 0
    return GradedMF(
        ring,
        PolyElem.zero(ring),
        E1,
        E0,
        PolyMatrix(E1, E0),
        PolyMatrix(E0, E1.twist(lam)),
        check=False,
    )


# -- tensor / Hom / dual ---------------------------------------------------------


def _require_same_ring(E, F):
    if E.ring != F.ring:
        raise RingMismatch("factorizations live over different rings")


def tensor_mf(E, F):
    """E (x) F, a factorization of W_E + W_F."""
    _require_same_ring(E, F)
    lam = E.lam
    T1 = E.E0.tensor(F.E1).direct_sum(E.E1.tensor(F.E0))
    T0 = E.E0.tensor(F.E0).direct_sum(E.E1.tensor(F.E1).twist(lam))
    i_e0 = PolyMatrix.identity(E.E0)
    i_e1 = PolyMatrix.identity(E.E1)
    i_f0 = PolyMatrix.identity(F.E0)
    i_f1 = PolyMatrix.identity(F.E1)
    b11 = i_e0.kronecker(F.g1)
    b12 = E.g1.kronecker(i_f0)
    b21 = E.g0.kronecker(i_f1)
    b22 = -i_e1.kronecker(F.g0)
    d1 = _four_blocks(T1, T0, b11, b12, b21, b22)
    c11 = i_e0.kronecker(F.g0)
    c12 = E.g1.twist(lam).kronecker(i_f1.twist(lam))
    c21 = E.g0.kronecker(i_f0)
    c22 = (-i_e1.kronecker(F.g1)).twist(lam)
    d0 = _four_blocks(T0, T1.twist(lam), c11, c12, c21, c22)
    return GradedMF(E.ring, E.W + F.W, T1, T0, d1, d0)


def _four_blocks(src, tgt, b11, b12, b21, b22):
    """[[b11, b12], [b21, b22]] with ranks read off the blocks."""
    ent = {}
    r0 = b11.target.rank
    c0 = b11.source.rank
    for (i, j), p in b11.entries.items():
        ent[(i, j)] = p
    for (i, j), p in b12.entries.items():
        ent[(i, c0 + j)] = p
    for (i, j), p in b21.entries.items():
        ent[(r0 + i, j)] = p
    for (i, j), p in b22.entries.items():
        ent[(r0 + i, c0 + j)] = p
    return PolyMatrix(src, tgt, ent)


def hom_module(A, B):
    """Hom(A, B) as a free module; basis pairs (j in A, i in B), j major."""
    tw = []
    for j in range(A.rank):
        for i in range(B.rank):
            tw.append(B.twists[i] - A.twists[j])
    return GradedFreeModule(A.ring, tw)


def _post_hom(A, P):
    """Post-composition with P on Hom(A, -): block diagonal copies of P."""
    return PolyMatrix.identity(A).kronecker(P)


def _pre_hom(Q, B):
    """Pre-composition with Q on Hom(-, B)."""
    return Q.transpose().kronecker(PolyMatrix.identity(B))


def hom_mf(E, F):
    """The mapping object Hom(E, F), a factorization of W_F - W_E.

    When W_E = W_F this is a twisted periodic complex whose H^0 classes
    are the homotopy classes of strict morphisms E -> F.
    """
    _require_same_ring(E, F)
    lam = E.lam
    H1 = hom_module(E.E0, F.E1).direct_sum(hom_module(E.E1, F.E0.twist(-lam)))
    H0 = hom_module(E.E0, F.E0).direct_sum(hom_module(E.E1, F.E1))
    # d^{-1} = [[(f1)_*, -e0^*], [-e1^*, (f0)_*]]
    d1 = _four_blocks(
        H1,
        H0,
        _post_hom(E.E0, F.g1),
        -_pre_hom(E.g0, F.E0),
        -_pre_hom(E.g1, F.E1),
        _post_hom(E.E1, F.g0),
    )
    # d^0 = [[(f0)_*, e0^*], [e1^*, (f1)_*]] into H1(lam)
    d0 = _four_blocks(
        H0,
        H1.twist(lam),
        _post_hom(E.E0, F.g0),
        _pre_hom(E.g0, F.E1),
        _pre_hom(E.g1, F.E0),
        _post_hom(E.E1, F.g1),
    )
    return GradedMF(E.ring, F.W - E.W, H1, H0, d1, d0)


def dual_mf(E):
    """E^dual = (E1(lam)^v --(-g0^T)--> E0^v --(g1^T)--> E1^v), of -W."""
    lam = E.lam
    D1 = E.E1.twist(lam).dual()
    D0 = E.E0.dual()
    d1 = PolyMatrix(D1, D0, (-E.g0.transpose()).entries)
    d0 = PolyMatrix(D0, D1.twist(lam), E.g1.transpose().entries)
    return GradedMF(E.ring, -E.W, D1, D0, d1, d0)


# -- canonical isomorphisms ------------------------------------------------------


def _swap_matrix(A, B, sign=1):
    """The transposition A (x) B -> B (x) A on Kronecker index pairs."""
    ring = A.ring
    one = PolyElem.const(ring, 1 if sign > 0 else -1)
    src = A.tensor(B)
    tgt = B.tensor(A)
    ent = {}
    for i in range(A.rank):
        for j in range(B.rank):
            ent[(j * A.rank + i, i * B.rank + j)] = one
    return PolyMatrix(src, tgt, ent)


def _identity_block(src, tgt, sign=1):
    one = PolyElem.const(src.ring, 1 if sign > 0 else -1)
    assert src.rank == tgt.rank
    return PolyMatrix(src, tgt, {(i, i): one for i in range(src.rank)})


def _two_by_two(src, tgt, blocks):
    """blocks: {(bi, bj): matrix} on a 2x2 block grid with None allowed."""
    row_ranks = []
    col_ranks = []
    for bi in range(2):
        r = None
        for bj in range(2):
            m = blocks.get((bi, bj))
            if m is not None:
                r = m.target.rank
        row_ranks.append(r if r is not None else 0)
    for bj in range(2):
        r = None
        for bi in range(2):
            m = blocks.get((bi, bj))
            if m is not None:
                r = m.source.rank
        col_ranks.append(r if r is not None else 0)
    ent = {}
    ro = [0, row_ranks[0]]
    co = [0, col_ranks[0]]
    for (bi, bj), m in blocks.items():
        if m is None:
            continue
        for (i, j), p in m.entries.items():
            ent[(ro[bi] + i, co[bj] + j)] = p
    return PolyMatrix(src, tgt, ent)


def comm_iso(E, F):
    """E (x) F -> F (x) E, sections a (x) b -> (-1)^(ij) b (x) a."""
    S = tensor_mf(E, F)
    T = tensor_mf(F, E)
    a1 = _two_by_two(
        S.E1,
        T.E1,
        {
            (1, 0): _swap_matrix(E.E0, F.E1),          # E0F1 -> F1E0
            (0, 1): _swap_matrix(E.E1, F.E0),          # E1F0 -> F0E1
        },
    )
    a0 = _two_by_two(
        S.E0,
        T.E0,
        {
            (0, 0): _swap_matrix(E.E0, F.E0),          # E0F0 -> F0E0
            (1, 1): _swap_matrix(E.E1, F.E1, sign=-1), # E1F1 -> F1E1, sign (-1)^{1*1}
        },
    )
    return MFMap(S, T, a1, a0)


def assoc_iso(E, F, G):
    """(E (x) F) (x) G -> E (x) (F (x) G): a pure block reshuffle."""
    S = tensor_mf(tensor_mf(E, F), G)
    T = tensor_mf(E, tensor_mf(F, G))
    r = {k: getattr(E, k).rank for k in ("E1", "E0")}

    def ranks(*mods):
        out = 1
        for m in mods:
            out *= m.rank
        return out

    # degree-1 blocks of S: [E0F0G1, E1F1G1, E0F1G0, E1F0G0]
    # degree-1 blocks of T: [E0F0G1, E0F1G0, E1F0G0, E1F1G1]
    s1_blocks = [
        ranks(E.E0, F.E0, G.E1),
        ranks(E.E1, F.E1, G.E1),
        ranks(E.E0, F.E1, G.E0),
        ranks(E.E1, F.E0, G.E0),
    ]
    perm1 = [0, 3, 1, 2]  # S block b lands at T position perm1[b]
    t1_blocks = [s1_blocks[0], s1_blocks[2], s1_blocks[3], s1_blocks[1]]
    a1 = _block_permutation(S.E1, T.E1, s1_blocks, t1_blocks, perm1)
    # degree-0 blocks of S: [E0F0G0, E1F1G0, E0F1G1, E1F0G1]
    # degree-0 blocks of T: [E0F0G0, E0F1G1, E1F0G1, E1F1G0]
    s0_blocks = [
        ranks(E.E0, F.E0, G.E0),
        ranks(E.E1, F.E1, G.E0),
        ranks(E.E0, F.E1, G.E1),
        ranks(E.E1, F.E0, G.E1),
    ]
    perm0 = [0, 3, 1, 2]
    t0_blocks = [s0_blocks[0], s0_blocks[2], s0_blocks[3], s0_blocks[1]]
    a0 = _block_permutation(S.E0, T.E0, s0_blocks, t0_blocks, perm0)
    return MFMap(S, T, a1, a0)


def _block_permutation(src, tgt, src_blocks, tgt_blocks, perm, signs=None):
    ring = src.ring
    one = PolyElem.const(ring, 1)
    src_off = [0]
    for r in src_blocks:
        src_off.append(src_off[-1] + r)
    tgt_off = [0]
    for r in tgt_blocks:
        tgt_off.append(tgt_off[-1] + r)
    ent = {}
    for b, p in enumerate(perm):
        s = one if (signs is None or signs[b] > 0) else -one
        assert src_blocks[b] == tgt_blocks[p]
        for k in range(src_blocks[b]):
            ent[(tgt_off[p] + k, src_off[b] + k)] = s
    return PolyMatrix(src, tgt, ent)


def homtensor_iso(E, F):
    """E^v (x) F -> Hom(E, F): blockwise canonical with one -1 block."""
    S = tensor_mf(dual_mf(E), F)
    T = hom_mf(E, F)
    a1 = _two_by_two(
        S.E1,
        T.E1,
        {
            (0, 0): _identity_block(_sub(S.E1, 0, T.E1, 0), _sub(T.E1, 0, T.E1, 0)),
            (1, 1): _identity_block(_sub(S.E1, 1, T.E1, 1), _sub(T.E1, 1, T.E1, 1)),
        },
    )
    a0 = _two_by_two(
        S.E0,
        T.E0,
        {
            (0, 0): _identity_block(_sub(S.E0, 0, T.E0, 0), _sub(T.E0, 0, T.E0, 0)),
            (1, 1): _identity_block(_sub(S.E0, 1, T.E0, 1), _sub(T.E0, 1, T.E0, 1), sign=-1),
        },
    )
    return MFMap(S, T, a1, a0)


def _sub(module, which, other, _which2):
    """Half of a two-block module (the two halves always have equal ranks here)."""
    n = module.rank // 2
    tw = module.twists[:n] if which == 0 else module.twists[n:]
    return GradedFreeModule(module.ring, tw)


def dualdouble_iso(E):
    """(E^v)^v -> E: (-1, +1)."""
    DD = dual_mf(dual_mf(E))
    a1 = _identity_block(DD.E1, E.E1, sign=-1)
    a0 = _identity_block(DD.E0, E.E0)
    return MFMap(DD, E, a1, a0)


def dualtensor_iso(E, F):
    """(E (x) F)^v -> E^v (x) F^v: diag(+, +) in degree 1, diag(+, -) in degree 0."""
    P = dual_mf(tensor_mf(E, F))
    Q = tensor_mf(dual_mf(E), dual_mf(F))
    n1a = E.E0.rank * F.E1.rank
    a1 = _two_by_two(
        P.E1,
        Q.E1,
        {
            (0, 0): _identity_block(
                GradedFreeModule(P.ring, P.E1.twists[:n1a]),
                GradedFreeModule(P.ring, Q.E1.twists[:n1a]),
            ),
            (1, 1): _identity_block(
                GradedFreeModule(P.ring, P.E1.twists[n1a:]),
                GradedFreeModule(P.ring, Q.E1.twists[n1a:]),
            ),
        },
    )
    n0a = E.E0.rank * F.E0.rank
    a0 = _two_by_two(
        P.E0,
        Q.E0,
        {
            (0, 0): _identity_block(
                GradedFreeModule(P.ring, P.E0.twists[:n0a]),
                GradedFreeModule(P.ring, Q.E0.twists[:n0a]),
            ),
            (1, 1): _identity_block(
                GradedFreeModule(P.ring, P.E0.twists[n0a:]),
                GradedFreeModule(P.ring, Q.E0.twists[n0a:]),
                sign=-1,
            ),
        },
    )
    return MFMap(P, Q, a1, a0)


def _hom_commutation(A, B, ring, sign=1):
    """Hom(A,B)^v basis (j,i) -> Hom(B,A) basis (i,j)."""
    one = PolyElem.const(ring, 1 if sign > 0 else -1)
    ent = {}
    for j in range(A.rank):
        for i in range(B.rank):
            ent[(i * A.rank + j, j * B.rank + i)] = one
    src_tw = []
    for j in range(A.rank):
        for i in range(B.rank):
            src_tw.append(A.twists[j] - B.twists[i])
    tgt_tw = []
    for i in range(B.rank):
        for j in range(A.rank):
            tgt_tw.append(A.twists[j] - B.twists[i])
    return PolyMatrix(
        GradedFreeModule(ring, src_tw), GradedFreeModule(ring, tgt_tw), ent
    )


def homdual_iso(E, F):
    """Hom(E, F)^v -> Hom(F, E)."""
    P = dual_mf(hom_mf(E, F))
    T = hom_mf(F, E)
    lam = E.lam
    # degree 1: Hom(E0,F1(lam))^v -> Hom(F1,E0(-lam)) [block 0 -> 1, +] and
    #           Hom(E1,F0)^v -> Hom(F0,E1)            [block 1 -> 0, -]
    k_a = _hom_commutation(E.E0, F.E1.twist(lam), E.ring)
    k_b = _hom_commutation(E.E1, F.E0, E.ring, sign=-1)
    a1 = _two_by_two(P.E1, T.E1, {(1, 0): k_a, (0, 1): k_b})
    # degree 0: diag(+K, -K)
    k_c = _hom_commutation(E.E0, F.E0, E.ring)
    k_d = _hom_commutation(E.E1, F.E1, E.ring, sign=-1)
    a0 = _two_by_two(P.E0, T.E0, {(0, 0): k_c, (1, 1): k_d})
    return MFMap(P, T, a1, a0)


def switch_iso(E1m, E2m, E3m, E4m):
    """Hom(E1,E2) (x) Hom(E3,E4) -> Hom(E1,E4) (x) Hom(E3,E2), as a verified
    composite of the primitive isomorphisms."""
    A = dual_mf(E1m)
    C = dual_mf(E3m)
    h12 = homtensor_iso(E1m, E2m)   # A (x) E2 -> Hom(E1,E2)
    h34 = homtensor_iso(E3m, E4m)
    h14 = homtensor_iso(E1m, E4m)
    h32 = homtensor_iso(E3m, E2m)
    phi = h12.tensor(h34)           # (A(x)E2)(x)(C(x)E4) -> Hom(x)Hom
    psi = h14.tensor(h32)           # (A(x)E4)(x)(C(x)E2) -> target
    rearr = _middle_swap(A, E2m, C, E4m)
    return psi.compose(rearr).compose(phi.inverse())


def _middle_swap(A, B, C, D):
    """(A(x)B)(x)(C(x)D) -> (A(x)D)(x)(C(x)B) via assoc / comm moves."""
    CD = tensor_mf(C, D)
    BC = tensor_mf(B, C)
    # (A(x)B)(x)(C(x)D) -> A(x)(B(x)(C(x)D))
    s1 = assoc_iso(A, B, CD)
    # B(x)(C(x)D) <- (B(x)C)(x)D : inverse of assoc
    s2 = MFMap.identity(A).tensor(assoc_iso(B, C, D).inverse())
    # (B(x)C)(x)D -> D(x)(B(x)C)
    s3 = MFMap.identity(A).tensor(comm_iso(BC, D))
    # A(x)(D(x)(B(x)C)) -> (A(x)D)(x)(B(x)C)
    s4 = assoc_iso(A, D, BC).inverse()
    # (A(x)D)(x)(B(x)C) -> (A(x)D)(x)(C(x)B)
    s5 = MFMap.identity(tensor_mf(A, D)).tensor(comm_iso(B, C))
    return s5.compose(s4).compose(s3).compose(s2).compose(s1)


def canonical_isos(E, F, G=None, H=None):
    """Construct and verify the canonical isomorphism family.

    Returns a dict of verified MFMap isomorphisms (each checked to be a
    strict morphism with a two-sided inverse).
    """
    out = {}
    out["comm"] = comm_iso(E, F)
    out["homtensor"] = homtensor_iso(E, F)
    out["dualdouble"] = dualdouble_iso(E)
    out["dualtensor"] = dualtensor_iso(E, F)
    out["homdual"] = homdual_iso(E, F)
    if G is not None:
        out["assoc"] = assoc_iso(E, F, G)
    if G is not None and H is not None:
        out["switch"] = switch_iso(E, F, G, H)
    for name, iso in out.items():
        try:
            iso.verify()
            iso.inverse()
        except VerificationFailure as exc:
            raise VerificationFailure(f"{name}: {exc}")
    return out


# -- periodic complexes and supports ----------------------------------------------


def periodic_complex(E, lo, hi):
    """The unrolled complex gamma^* E over S/(W) on the window [lo, hi].

    Degree 2k holds E0(k), degree 2k-1 holds E1(k); differentials are g1
    and g0 twisted, reduced modulo W.
    """
    ctx = RingCtx(E.ring, (E.W,) if not E.W.is_zero() else ())
    lam = E.lam
    terms = {}
    for i in range(lo, hi + 1):
        k = i // 2 if i % 2 == 0 else (i + 1) // 2
        terms[i] = (E.E0 if i % 2 == 0 else E.E1).twist(k * lam)
    diffs = {}
    for i in range(lo, hi):
        k = (i + 1) // 2
        if i % 2 == 1:  # E1(k) -> E0(k)
            diffs[i] = E.g1.twist(k * lam)
        else:  # E0(k) -> E1(k+1)
            diffs[i] = PolyMatrix(
                terms[i], terms[i + 1], E.g0.twist((k) * lam).entries
            )
    return ChainComplex(ctx, lo, hi, terms, diffs)


def tpc_homology(P):
    """(H^0, H^1) of one period of a twisted periodic complex.

    H^0 = ker g0 / im g1 inside E0; H^1 = ker g1(lam) / im g0 inside E1(lam).
    """
    if not P.is_tpc:
        raise VerificationFailure("homology of one period needs W = 0")
    ctx = P.ctx()
    lam = P.lam
    h0 = homology_presentation(P.g0, P.g1, ctx)
    h1 = homology_presentation(P.g1.twist(lam), P.g0, ctx)
    return h0, h1


def supp_tpc(P, saturate_t=True):
    """Annihilator ideals of (H^0, H^1), saturated by the irrelevant
    T-ideal when projective support is requested."""
    if not P.is_tpc:
        raise NonRegularContext("support of one period needs W = 0 over a polynomial ring")
    h0, h1 = tpc_homology(P)
    ctx = P.ctx()
    a0 = annihilator(h0, ctx)
    a1 = annihilator(h1, ctx)
    if saturate_t and P.ring.has_t_block:
        tvars = [PolyElem.var(P.ring, n) for n in P.ring.names[P.ring.n_x:]]
        J = Ideal(ctx, tvars)
        a0 = ideal_saturate(a0, J)
        a1 = ideal_saturate(a1, J)
    return a0, a1


def support_ideal(P, saturate_t=True):
    """One ideal cutting out supp(P) = supp H^0 union supp H^1."""
    a0, a1 = supp_tpc(P, saturate_t)
    return ideal_intersect(a0, a1)
