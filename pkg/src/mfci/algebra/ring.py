"""Graded polynomial rings and monomial orders.

A PolyRing is k[x_1..x_n] or k[x_1..x_n][T_1..T_c].  Monomials are plain
exponent tuples.  The term order is graded reverse lexicographic on the
full variable list; on free modules we use position-over-term (generator
0 wins) with grevlex tiebreak.

Two gradings coexist:

* the x-grading, weighted by the declared variable degrees (T-variables
  may carry an auxiliary x-weight, used to keep W = sum f_i T_i
  bihomogeneous when the f_i have unequal degrees);
* the T-grading, in which every T-variable has degree 1 and the x-block
  has degree 0.

Module twists are interpreted in the ring's *module grading*: the
T-grading when a T-block is present, the x-grading otherwise.  This
matches the S(j) twist convention on the matrix-factorization side and
ordinary graded Betti bookkeeping over Q and R.
"""

from .field import FieldSpec


class PolyRing:
    """An ordered, graded polynomial ring over an exact field."""

    __slots__ = ("field", "names", "degrees", "n_x", "t_xweights", "_index")

    def __init__(self, field, names, degrees=None, n_x=None, t_xweights=None):
        if not isinstance(field, FieldSpec):
            raise TypeError("field must be a FieldSpec")
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        if n_x is None:
            n_x = len(names)
        if degrees is None:
            degrees = (1,) * len(names)
        degrees = tuple(degrees)
        if len(degrees) != len(names):
            raise ValueError("one degree per variable")
        if any(d < 1 for d in degrees):
            raise ValueError("variable degrees must be >= 1")
        if any(degrees[i] != 1 for i in range(n_x, len(names))):
            raise ValueError("T-block variables must have degree 1")
        self.field = field
        self.names = names
        self.degrees = degrees
        self.n_x = n_x
        # x-weight of each T-variable (for bihomogeneous W bookkeeping)
        self.t_xweights = tuple(t_xweights) if t_xweights else (0,) * (len(names) - n_x)
        self._index = {nm: i for i, nm in enumerate(names)}

    # -- basic queries -------------------------------------------------

    @property
    def nvars(self):
        return len(self.names)

    @property
    def n_t(self):
        return self.nvars - self.n_x

    @property
    def has_t_block(self):
        return self.n_t > 0

    def var_index(self, name):
        return self._index[name]

    @property
    def zero_mono(self):
        return (0,) * self.nvars

    def var_mono(self, i, e=1):
        m = [0] * self.nvars
        m[i] = e
        return tuple(m)

    # -- gradings --------------------------------------------------------

    def xdeg(self, mono):
        d = 0
        for i in range(self.n_x):
            d += mono[i] * self.degrees[i]
        for j in range(self.n_x, self.nvars):
            d += mono[j] * self.t_xweights[j - self.n_x]
        return d

    def tdeg(self, mono):
        return sum(mono[self.n_x:])

    def mdeg(self, mono):
        """Degree in the module grading (T-degree if a T-block exists)."""
        return self.tdeg(mono) if self.has_t_block else self.xdeg(mono)

    # -- term order ------------------------------------------------------

    def order_key(self, mono):
        """Sort key: bigger key = bigger monomial in grevlex."""
        return (sum(mono), tuple(-e for e in reversed(mono)))

    def mono_cmp_ge(self, a, b):
        return self.order_key(a) >= self.order_key(b)

    def sorted_monos(self, monos, reverse=True):
        return sorted(monos, key=self.order_key, reverse=reverse)

    # -- ring maps ---------------------------------------------------------

    def extend_t(self, t_names, t_xweights=None):
        """Adjoin a T-block (ring must not already have one)."""
        if self.has_t_block:
            raise ValueError("ring already has a T-block")
        return PolyRing(
            self.field,
            self.names + tuple(t_names),
            self.degrees + (1,) * len(t_names),
            n_x=self.n_x,
            t_xweights=t_xweights,
        )

    def drop_t(self):
        """The x-block subring."""
        return PolyRing(self.field, self.names[: self.n_x], self.degrees[: self.n_x])

    def extend_vars(self, names):
        """Adjoin extra degree-1 x-variables (used by the Rabinowitsch trick)."""
        return PolyRing(
            self.field,
            self.names[: self.n_x] + tuple(names) + self.names[self.n_x:],
            self.degrees[: self.n_x] + (1,) * len(names) + self.degrees[self.n_x:],
            n_x=self.n_x + len(names),
            t_xweights=self.t_xweights,
        )

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, PolyRing) and (
            self.field,
            self.names,
            self.degrees,
            self.n_x,
            self.t_xweights,
        ) == (other.field, other.names, other.degrees, other.n_x, other.t_xweights)

    def __hash__(self):
        return hash((self.field, self.names, self.degrees, self.n_x, self.t_xweights))

    def __repr__(self):
        xs = ",".join(self.names[: self.n_x])
        if self.has_t_block:
            ts = ",".join(self.names[self.n_x:])
            return f"{self.field!r}[{xs}][{ts}]"
        return f"{self.field!r}[{xs}]"


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))

def mono_divides(a, b):
    """True if a | b."""
    return all(x <= y for x, y in zip(a, b))

def mono_div(a, b):
    """a / b, assuming b | a."""
    return tuple(x - y for x, y in zip(a, b))

def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))
