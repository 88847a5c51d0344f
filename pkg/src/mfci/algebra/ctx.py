"""Ring contexts (polynomial ring modulo homogeneous relations) and the
module-presentation / ideal containers built on them."""

from ..errors import InhomogeneousInput
from .module import GradedFreeModule, PolyMatrix
from .poly import PolyElem


class RingCtx:
    """An ambient PolyRing together with a list of homogeneous relations.

    Q and S have no relations; R = Q/(f) carries (f_1..f_c); the graded
    coordinate ring of the hypersurface carries (W) (or (f) + (W)).
    """

    __slots__ = ("ambient", "relations", "_rel_gb")

    def __init__(self, ambient, relations=()):
        self.ambient = ambient
        rels = []
        for r in relations:
            if r.ring != ambient:
                raise ValueError("relation not over the ambient ring")
            if r.is_zero():
                continue
            if not r.is_homogeneous("m") or (ambient.has_t_block and not r.is_homogeneous("t")):
                raise InhomogeneousInput(f"relation {r} not homogeneous")
            rels.append(r)
        self.relations = tuple(rels)
        self._rel_gb = None

    @property
    def field(self):
        return self.ambient.field

    @property
    def is_regular(self):
        """No relations: the context is the polynomial ring itself."""
        return not self.relations

    def rel_gb(self):
        if self._rel_gb is None:
            from .groebner import groebner_vecs, poly_to_vec

            vecs = [poly_to_vec(r) for r in self.relations]
            self._rel_gb = groebner_vecs(vecs, self.ambient, 1)
        return self._rel_gb

    def nf(self, p):
        """Canonical normal form of a polynomial modulo the relations."""
        if not self.relations:
            return p
        from .groebner import nf_vec, poly_to_vec, vec_to_poly

        return vec_to_poly(nf_vec(poly_to_vec(p), self.rel_gb()), self.ambient)

    def nf_matrix(self, A):
        if not self.relations:
            return A
        return A.map_entries(self.nf)

    def is_zero(self, p):
        return self.nf(p).is_zero()

    def free(self, twists):
        return GradedFreeModule(self.ambient, twists)

    def __eq__(self, other):
        return (
            isinstance(other, RingCtx)
            and self.ambient == other.ambient
            and self.relations == other.relations
        )

    def __hash__(self):
        return hash((self.ambient, self.relations))

    def __repr__(self):
        if self.is_regular:
            return f"Ctx({self.ambient!r})"
        rels = ", ".join(str(r) for r in self.relations)
        return f"Ctx({self.ambient!r} / ({rels}))"


class Ideal:
    """A finitely generated ideal over a ring context."""

    __slots__ = ("ctx", "gens")

    def __init__(self, ctx, gens):
        self.ctx = ctx
        cleaned = []
        for g in gens:
            if g.ring != ctx.ambient:
                raise ValueError("generator over wrong ring")
            g = ctx.nf(g)
            if not g.is_zero():
                cleaned.append(g)
        self.gens = tuple(cleaned)

    def is_unit(self):
        from .groebner import groebner_vecs, poly_to_vec, nf_vec

        gb = groebner_vecs(
            [poly_to_vec(g) for g in self.gens]
            + [poly_to_vec(r) for r in self.ctx.relations],
            self.ctx.ambient,
            1,
        )
        one = poly_to_vec(PolyElem.const(self.ctx.ambient, 1))
        return not nf_vec(one, gb)

    def contains(self, p):
        from .groebner import groebner_vecs, poly_to_vec, nf_vec

        gb = groebner_vecs(
            [poly_to_vec(g) for g in self.gens]
            + [poly_to_vec(r) for r in self.ctx.relations],
            self.ctx.ambient,
            1,
        )
        return not nf_vec(poly_to_vec(self.ctx.nf(p)), gb)

    def __repr__(self):
        return "Ideal(" + ", ".join(str(g) for g in self.gens) + ")"


class GradedModulePresentation:
    """coker(matrix) — the target's twists define the module's grading."""

    __slots__ = ("ctx", "matrix")

    def __init__(self, ctx, matrix):
        if matrix.ring != ctx.ambient:
            raise ValueError("presentation matrix over wrong ring")
        self.ctx = ctx
        self.matrix = matrix

    @property
    def target(self):
        return self.matrix.target

    @staticmethod
    def free_module(ctx, twists):
        """The free module of the given twists, as a presentation."""
        tgt = GradedFreeModule(ctx.ambient, twists)
        src = GradedFreeModule(ctx.ambient, ())
        return GradedModulePresentation(ctx, PolyMatrix(src, tgt))

    @staticmethod
    def cyclic(ctx, gens, twist=0):
        """ctx-module (ambient/ideal)(twist) presented by a row of generators."""
        tgt = GradedFreeModule(ctx.ambient, (twist,))
        ent = {}
        twists = []
        for j, g in enumerate(gens):
            ent[(0, j)] = g
            twists.append(twist - (g.degree("m") or 0))
        src = GradedFreeModule(ctx.ambient, twists)
        return GradedModulePresentation(ctx, PolyMatrix(src, tgt, ent))

    def __repr__(self):
        return f"Presentation({self.matrix!r} over {self.ctx!r})"
