"""Buchberger engine for submodules of free modules, with representation
tracking (every basis element knows its expression in the input
generators), canonical normal forms, lifts, and Schreyer syzygies.

Module elements are "vecpolys": dicts {(position, exponent tuple):
coefficient}.  The term order is position-over-term (generator 0 wins)
with grevlex tiebreak.  All loops scan in insertion order and pair
selection sorts by (lcm degree, i, j), so outputs are deterministic.
"""

from ..errors import NotInImage
from .ring import mono_div, mono_divides, mono_lcm, mono_mul
from .poly import PolyElem


# -- vecpoly primitives ------------------------------------------------------


def poly_to_vec(p, pos=0):
    return {(pos, m): c for m, c in p.terms.items()}


def vec_to_poly(v, ring, pos=0):
    return PolyElem(ring, {m: c for (p, m), c in v.items() if p == pos})


def vec_components(v, ring, rank):
    out = [PolyElem.zero(ring) for _ in range(rank)]
    by_pos = {}
    for (p, m), c in v.items():
        by_pos.setdefault(p, {})[m] = c
    for p, terms in by_pos.items():
        out[p] = PolyElem(ring, terms)
    return out


def vec_add(a, b, field):
    out = dict(a)
    for k, c in b.items():
        s = field.add(out.get(k, field.zero), c)
        if s == field.zero:
            out.pop(k, None)
        else:
            out[k] = s
    return out


def vec_scale(a, c, field):
    if c == field.zero:
        return {}
    return {k: field.mul(v, c) for k, v in a.items()}


def vec_mul_term(a, mono, coeff, field):
    """a * coeff*x^mono."""
    if coeff == field.zero:
        return {}
    return {(p, mono_mul(m, mono)): field.mul(c, coeff) for (p, m), c in a.items()}


def vec_mul_poly(a, poly, field):
    out = {}
    for m, c in poly.terms.items():
        out = vec_add(out, vec_mul_term(a, m, c, field), field)
    return out


def term_key(ring):
    ok = ring.order_key

    def key(term):
        pos, mono = term
        return (-pos, ok(mono))

    return key


def vec_lead(v, key):
    return max(v, key=key)


def vec_is_homogeneous(v, module):
    ring = module.ring
    degs = {ring.mdeg(m) - module.twists[p] for (p, m) in v}
    return len(degs) <= 1


def vec_degree(v, module):
    ring = module.ring
    degs = {ring.mdeg(m) - module.twists[p] for (p, m) in v}
    if len(degs) != 1:
        return None
    return degs.pop()


# -- reduction ----------------------------------------------------------------


def _reduce_full(v, basis, leads, field, key, want_quotients=False):
    """Canonical full normal form of v modulo basis (scan in order).

    Returns (nf, quotients) where quotients[i] is a {mono: coeff} poly with
    v = sum_i quotients[i] * basis[i] + nf.
    """
    quot = [dict() for _ in basis] if want_quotients else None
    rem = {}
    work = dict(v)
    while work:
        t = vec_lead(work, key)
        pos, mono = t
        c = work[t]
        hit = -1
        for i, (lp, lm) in enumerate(leads):
            if lp == pos and mono_divides(lm, mono):
                hit = i
                break
        if hit < 0:
            rem[t] = c
            del work[t]
            continue
        g = basis[hit]
        lc = g[leads[hit]]
        factor = field.div(c, lc)
        shift = mono_div(mono, leads[hit][1])
        work = vec_add(work, vec_mul_term(g, shift, field.neg(factor), field), field)
        if want_quotients:
            q = quot[hit]
            s = field.add(q.get(shift, field.zero), factor)
            if s == field.zero:
                q.pop(shift, None)
            else:
                q[shift] = s
    return rem, quot


class GroebnerBasis:
    """A reduced Groebner basis of a submodule of a free module over a ctx.

    Relations of the context are adjoined internally; `n_orig` counts the
    caller's generators, and expressions are reported in those only.
    """

    def __init__(self, ctx, rank, gens):
        self.ctx = ctx
        self.rank = rank
        self.ring = ctx.ambient
        self.gens = list(gens)
        self.n_orig = len(self.gens)
        self._key = term_key(self.ring)
        ext = list(self.gens)
        for r in ctx.relations:
            for pos in range(rank):
                ext.append(poly_to_vec(r, pos))
        self.ext_gens = ext
        self.elements, self.reps = self._buchberger(ext)
        self.leads = [vec_lead(g, self._key) for g in self.elements]

    # -- construction -------------------------------------------------------

    def _buchberger(self, gens):
        field = self.ring.field
        key = self._key
        basis = []
        reps = []
        for i, g in enumerate(gens):
            if not g:
                continue
            lc = g[vec_lead(g, key)]
            inv = field.inv(lc)
            basis.append(vec_scale(g, inv, field))
            reps.append({(i, self.ring.zero_mono): inv})
        leads = [vec_lead(g, key) for g in basis]

        pairs = []

        def add_pairs(k):
            pk, mk = leads[k]
            for l in range(k):
                pl, ml = leads[l]
                if pl != pk:
                    continue
                lcm = mono_lcm(mk, ml)
                if self.rank == 1 and lcm == mono_mul(mk, ml):
                    continue  # coprime leads: valid product criterion for ideals only
                pairs.append((sum(lcm), l, k, lcm))

        for k in range(len(basis)):
            add_pairs(k)

        while pairs:
            pairs.sort()
            _, l, k, lcm = pairs.pop(0)
            gk, gl = basis[k], basis[l]
            uk = mono_div(lcm, leads[k][1])
            ul = mono_div(lcm, leads[l][1])
            s = vec_add(
                vec_mul_term(gk, uk, field.one, field),
                vec_mul_term(gl, ul, field.neg(field.one), field),
                field,
            )
            nf, quot = _reduce_full(s, basis, leads, field, key, want_quotients=True)
            if not nf:
                continue
            rep = vec_add(
                vec_mul_term(reps[k], uk, field.one, field),
                vec_mul_term(reps[l], ul, field.neg(field.one), field),
                field,
            )
            for i, q in enumerate(quot):
                for m, c in q.items():
                    rep = vec_add(
                        rep, vec_mul_term(reps[i], m, field.neg(c), field), field
                    )
            lc = nf[vec_lead(nf, key)]
            inv = field.inv(lc)
            basis.append(vec_scale(nf, inv, field))
            reps.append(vec_scale(rep, inv, field))
            leads.append(vec_lead(basis[-1], key))
            add_pairs(len(basis) - 1)

        return self._autoreduce(basis, reps)

    def _autoreduce(self, basis, reps):
        field = self.ring.field
        key = self._key
        # minimal basis: drop elements whose lead another lead divides
        order = sorted(range(len(basis)), key=lambda i: key(vec_lead(basis[i], key)))
        kept, kept_leads = [], []
        for i in order:
            lp, lm = vec_lead(basis[i], key)
            if any(kp == lp and mono_divides(km, lm) for kp, km in kept_leads):
                continue
            kept.append(i)
            kept_leads.append((lp, lm))
        basis = [basis[i] for i in kept]
        reps = [reps[i] for i in kept]
        # tail-reduce each element modulo the others until stable
        changed = True
        while changed:
            changed = False
            for i in range(len(basis)):
                if not basis[i]:
                    continue
                others, oleads, oreps = [], [], []
                for j, g in enumerate(basis):
                    if j != i and g:
                        others.append(g)
                        oleads.append(vec_lead(g, key))
                        oreps.append(reps[j])
                nf, quot = _reduce_full(
                    basis[i], others, oleads, field, key, want_quotients=True
                )
                if nf == basis[i]:
                    continue
                changed = True
                rep = reps[i]
                for t, q in enumerate(quot):
                    for m, c in q.items():
                        rep = vec_add(
                            rep, vec_mul_term(oreps[t], m, field.neg(c), field), field
                        )
                if not nf:
                    basis[i], reps[i] = {}, {}
                else:
                    inv = field.inv(nf[vec_lead(nf, key)])
                    basis[i] = vec_scale(nf, inv, field)
                    reps[i] = vec_scale(rep, inv, field)
            pruned = [(g, r) for g, r in zip(basis, reps) if g]
            basis = [g for g, _ in pruned]
            reps = [r for _, r in pruned]
        order = sorted(range(len(basis)), key=lambda i: key(vec_lead(basis[i], key)))
        return [basis[i] for i in order], [reps[i] for i in order]

    # -- queries --------------------------------------------------------------

    def nf(self, v):
        field = self.ring.field
        rem, _ = _reduce_full(v, self.elements, self.leads, field, self._key)
        return rem

    def contains(self, v):
        return not self.nf(v)

    def express(self, v):
        """v as a combination of the original generators: list of PolyElem.

        Raises NotInImage when v is not in the submodule (mod relations).
        """
        field = self.ring.field
        rem, quot = _reduce_full(
            v, self.elements, self.leads, field, self._key, want_quotients=True
        )
        if rem:
            raise NotInImage("element is not in the submodule")
        acc = {}
        for i, q in enumerate(quot):
            if not q:
                continue
            for m, c in q.items():
                acc = vec_add(acc, vec_mul_term(self.reps[i], m, c, field), field)
        comps = [dict() for _ in range(self.n_orig)]
        for (gi, m), c in acc.items():
            if gi < self.n_orig:
                comps[gi][m] = c
        return [PolyElem(self.ring, terms) for terms in comps]

    def syzygies(self):
        """Generators of the syzygy module of the original generators.

        Returns a list of vecpolys over positions 0..n_orig-1.
        """
        field = self.ring.field
        key = self._key
        out = []
        # Schreyer: S-pair relations of the reduced basis
        for k in range(len(self.elements)):
            pk, mk = self.leads[k]
            for l in range(k):
                pl, ml = self.leads[l]
                if pl != pk:
                    continue
                lcm = mono_lcm(mk, ml)
                uk = mono_div(lcm, mk)
                ul = mono_div(lcm, ml)
                s = vec_add(
                    vec_mul_term(self.elements[k], uk, field.one, field),
                    vec_mul_term(self.elements[l], ul, field.neg(field.one), field),
                    field,
                )
                rem, quot = _reduce_full(
                    s, self.elements, self.leads, field, key, want_quotients=True
                )
                if rem:
                    raise AssertionError("reduced basis failed to reduce an S-pair")
                z = vec_add(
                    vec_mul_term(self.reps[k], uk, field.one, field),
                    vec_mul_term(self.reps[l], ul, field.neg(field.one), field),
                    field,
                )
                for t, q in enumerate(quot):
                    for m, c in q.items():
                        z = vec_add(
                            z, vec_mul_term(self.reps[t], m, field.neg(c), field), field
                        )
                out.append(z)
        # rows of I - D C (original generators re-expressed through the basis)
        for i, g in enumerate(self.ext_gens):
            rem, quot = _reduce_full(
                g, self.elements, self.leads, field, key, want_quotients=True
            )
            if rem:
                raise AssertionError("input generator failed to reduce to zero")
            row = {(i, self.ring.zero_mono): field.one}
            for t, q in enumerate(quot):
                for m, c in q.items():
                    row = vec_add(
                        row, vec_mul_term(self.reps[t], m, field.neg(c), field), field
                    )
            if row:
                out.append(row)
        # restrict to the caller's generators and normalize mod relations
        res = []
        for z in out:
            zz = {k: c for k, c in z.items() if k[0] < self.n_orig}
            if self.ctx.relations:
                comps = vec_components(zz, self.ring, self.n_orig)
                zz = {}
                for p, comp in enumerate(comps):
                    comp = self.ctx.nf(comp)
                    for m, c in comp.terms.items():
                        zz[(p, m)] = c
            if zz:
                res.append(zz)
        return res


def groebner_vecs(vecs, ring, rank):
    """Groebner basis over the plain ring (no relations)."""
    from .ctx import RingCtx

    return GroebnerBasis(RingCtx(ring), rank, vecs)


def nf_vec(v, gb):
    return gb.nf(v)
