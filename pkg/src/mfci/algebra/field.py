"""Exact coefficient fields: prime fields F_p and the rationals Q.

Elements of F_p are plain ints reduced into [0, p); elements of Q are
`fractions.Fraction`.  The FieldSpec object carries the arithmetic so no
element wrapper class is needed.
"""

from fractions import Fraction

from ..errors import ParseError


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class FieldSpec:
    """A coefficient field, either prime_field(p) with p < 2**31 or rationals."""

    __slots__ = ("kind", "p")

    def __init__(self, kind, p=None):
        if kind == "prime_field":
            if p is None or p >= 2 ** 31 or not _is_prime(p):
                raise ValueError(f"need a prime < 2^31, got {p!r}")
        elif kind == "rationals":
            p = None
        else:
            raise ValueError(f"unknown field kind {kind!r}")
        self.kind = kind
        self.p = p

    # -- constructors ------------------------------------------------------

    @staticmethod
    def prime(p):
        return FieldSpec("prime_field", p)

    @staticmethod
    def rationals():
        return FieldSpec("rationals")

    # -- arithmetic --------------------------------------------------------

    @property
    def zero(self):
        return 0 if self.p else Fraction(0)

    @property
    def one(self):
        return 1 if self.p else Fraction(1)

    def of(self, n):
        """Coerce an int (or Fraction over Q) into the field."""
        if self.p:
            return int(n) % self.p
        return Fraction(n)

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def mul(self, a, b):
        return (a * b) % self.p if self.p else a * b

    def inv(self, a):
        if self.p:
            return pow(a, -1, self.p)
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    # -- text --------------------------------------------------------------

    def coeff_str(self, a):
        return str(a)

    def coeff_parse(self, s):
        s = s.strip()
        try:
            if "/" in s:
                num, den = s.split("/")
                val = Fraction(int(num), int(den))
                if self.p:
                    return self.div(self.of(val.numerator), self.of(val.denominator))
                return val
            return self.of(int(s))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad coefficient {s!r}: {exc}")

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.kind, self.p) == (other.kind, other.p)

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return f"GF({self.p})" if self.p else "QQ"


def GF(p):
    """Prime field of order p."""
    return FieldSpec.prime(p)


QQ = FieldSpec.rationals()
