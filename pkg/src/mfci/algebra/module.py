"""Graded free modules and sparse homogeneous matrices between them.

Twists follow the S(j) convention: generator i of a module with twist
list `tw` has degree -tw[i] in the ring's module grading, and S(j)_d =
S_{d+j}.  A matrix of degree_shift s is homogeneous when entry (i, j)
has degree  tw_target[i] - tw_source[j] + s  (or is zero).
"""

from ..errors import InhomogeneousInput
from .poly import PolyElem


class GradedFreeModule:
    """A free module with one integer twist per generator."""

    __slots__ = ("ring", "twists")

    def __init__(self, ring, twists):
        self.ring = ring
        self.twists = tuple(int(t) for t in twists)

    @property
    def rank(self):
        return len(self.twists)

    def twist(self, n):
        return GradedFreeModule(self.ring, tuple(t + n for t in self.twists))

    def dual(self):
        return GradedFreeModule(self.ring, tuple(-t for t in self.twists))

    def direct_sum(self, other):
        assert self.ring == other.ring
        return GradedFreeModule(self.ring, self.twists + other.twists)

    def tensor(self, other):
        """Basis ordered pairs (i, j), i major."""
        assert self.ring == other.ring
        tw = [a + b for a in self.twists for b in other.twists]
        return GradedFreeModule(self.ring, tw)

    def gen_degree(self, i):
        return -self.twists[i]

    def __eq__(self, other):
        return (
            isinstance(other, GradedFreeModule)
            and self.ring == other.ring
            and self.twists == other.twists
        )

    def __hash__(self):
        return hash((self.ring, self.twists))

    def __repr__(self):
        return f"Free{list(self.twists)}"


class PolyMatrix:
    """A sparse matrix of polynomials: target <- source (columns map in)."""

    __slots__ = ("source", "target", "entries", "degree_shift")

    def __init__(self, source, target, entries=None, degree_shift=0):
        assert source.ring == target.ring
        self.source = source
        self.target = target
        self.degree_shift = degree_shift
        self.entries = {}
        if entries:
            for (i, j), p in entries.items():
                if p is not None and not p.is_zero():
                    assert 0 <= i < target.rank and 0 <= j < source.rank
                    self.entries[(i, j)] = p

    @property
    def ring(self):
        return self.source.ring

    @property
    def shape(self):
        return (self.target.rank, self.source.rank)

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(source, target, degree_shift=0):
        return PolyMatrix(source, target, {}, degree_shift)

    @staticmethod
    def identity(module):
        one = PolyElem.const(module.ring, 1)
        return PolyMatrix(module, module, {(i, i): one for i in range(module.rank)})

    @staticmethod
    def from_rows(source, target, rows, degree_shift=0):
        """rows: nested list of PolyElem / None, row-major."""
        ent = {}
        for i, row in enumerate(rows):
            for j, p in enumerate(row):
                if p is not None and not p.is_zero():
                    ent[(i, j)] = p
        return PolyMatrix(source, target, ent, degree_shift)

    # -- access ----------------------------------------------------------------

    def entry(self, i, j):
        p = self.entries.get((i, j))
        return p if p is not None else PolyElem.zero(self.ring)

    def column(self, j):
        """Column j as a module element {(pos, mono): coeff}."""
        col = {}
        for (i, jj), p in self.entries.items():
            if jj == j:
                for m, c in p.terms.items():
                    col[(i, m)] = c
        return col

    def columns(self):
        return [self.column(j) for j in range(self.source.rank)]

    def is_zero(self):
        return not self.entries

    # -- arithmetic --------------------------------------------------------------

    def __add__(self, other):
        assert self.source == other.source and self.target == other.target
        ent = dict(self.entries)
        for key, p in other.entries.items():
            q = ent.get(key)
            s = p if q is None else q + p
            if s.is_zero():
                ent.pop(key, None)
            else:
                ent[key] = s
        return PolyMatrix(self.source, self.target, ent, self.degree_shift)

    def __neg__(self):
        return PolyMatrix(
            self.source, self.target, {k: -p for k, p in self.entries.items()}, self.degree_shift
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """self o other (self applied after other)."""
        assert other.target.twists == self.source.twists, "composition shape mismatch"
        by_col = {}
        for (i, j), p in other.entries.items():
            by_col.setdefault(j, []).append((i, p))
        by_row = {}
        for (i, j), p in self.entries.items():
            by_row.setdefault(j, []).append((i, p))
        ent = {}
        for j, col in by_col.items():
            for k, q in col:
                for i, p in by_row.get(k, ()):
                    key = (i, j)
                    prod = p * q
                    cur = ent.get(key)
                    s = prod if cur is None else cur + prod
                    ent[key] = s
        ent = {k: v for k, v in ent.items() if not v.is_zero()}
        return PolyMatrix(
            other.source, self.target, ent, self.degree_shift + other.degree_shift
        )

    def scale(self, c):
        return PolyMatrix(
            self.source, self.target, {k: p.scale(c) for k, p in self.entries.items()},
            self.degree_shift,
        )

    def scale_poly(self, poly):
        return PolyMatrix(
            self.source, self.target, {k: p * poly for k, p in self.entries.items()},
            self.degree_shift,
        )

    def transpose(self):
        """Dual map between dual modules."""
        return PolyMatrix(
            self.target.dual(),
            self.source.dual(),
            {(j, i): p for (i, j), p in self.entries.items()},
            self.degree_shift,
        )

    def twist(self, n):
        return PolyMatrix(
            self.source.twist(n), self.target.twist(n), dict(self.entries), self.degree_shift
        )

    def kronecker(self, other):
        """Kronecker product on tensor modules, index pairs (i, j) i-major."""
        src = self.source.tensor(other.source)
        tgt = self.target.tensor(other.target)
        ent = {}
        rb, cb = other.target.rank, other.source.rank
        for (i1, j1), p in self.entries.items():
            for (i2, j2), q in other.entries.items():
                ent[(i1 * rb + i2, j1 * cb + j2)] = p * q
        return PolyMatrix(src, tgt, ent, self.degree_shift + other.degree_shift)

    # -- structure ------------------------------------------------------------

    def equal_entries(self, other):
        return (
            self.target.rank == other.target.rank
            and self.source.rank == other.source.rank
            and self.entries == other.entries
        )

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and self.source == other.source
            and self.target == other.target
            and self.entries == other.entries
        )

    def check_homogeneous(self, grading="m"):
        """Raise InhomogeneousInput unless every entry has its forced degree."""
        deg = {"m": self.ring.mdeg, "x": self.ring.xdeg, "t": self.ring.tdeg}[grading]
        for (i, j), p in self.entries.items():
            want = self.target.twists[i] - self.source.twists[j] + self.degree_shift
            for m in p.terms:
                if deg(m) != want:
                    raise InhomogeneousInput(
                        f"entry ({i},{j}) = {p} not homogeneous of degree {want}"
                    )
        return True

    def map_entries(self, fn, source=None, target=None):
        return PolyMatrix(
            source or self.source,
            target or self.target,
            {k: fn(p) for k, p in self.entries.items()},
            self.degree_shift,
        )

    def __repr__(self):
        r, c = self.shape
        return f"PolyMatrix({r}x{c})"

    def pretty(self):
        r, c = self.shape
        rows = []
        for i in range(r):
            rows.append("[" + ", ".join(str(self.entry(i, j)) for j in range(c)) + "]")
        return "[" + ", ".join(rows) + "]"


def block_matrix(source, target, blocks, row_ranks, col_ranks, degree_shift=0):
    """Assemble from a dict {(bi, bj): PolyMatrix or None} of block positions."""
    row_off = [0]
    for r in row_ranks:
        row_off.append(row_off[-1] + r)
    col_off = [0]
    for r in col_ranks:
        col_off.append(col_off[-1] + r)
    ent = {}
    for (bi, bj), blk in blocks.items():
        if blk is None:
            continue
        oi, oj = row_off[bi], col_off[bj]
        for (i, j), p in blk.entries.items():
            ent[(oi + i, oj + j)] = p
    return PolyMatrix(source, target, ent, degree_shift)
