"""Sparse exact polynomials over a PolyRing.

The fixed ASCII grammar is `c*x^a*y^b*T_1^d` terms joined by `+` / `-`;
canonical printing sorts monomials descending in the ring order.
"""

import re
from fractions import Fraction

from ..errors import InhomogeneousInput, ParseError
from .ring import PolyRing, mono_mul


class PolyElem:
    """A polynomial: ring handle plus {exponent tuple: nonzero coefficient}."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms=None):
        self.ring = ring
        self.terms = {}
        if terms:
            zero = ring.field.zero
            for m, c in terms.items():
                if c != zero:
                    self.terms[m] = c

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(ring):
        return PolyElem(ring)

    @staticmethod
    def const(ring, c):
        c = ring.field.of(c)
        return PolyElem(ring, {ring.zero_mono: c})

    @staticmethod
    def var(ring, name, e=1):
        return PolyElem(ring, {ring.var_mono(ring.var_index(name), e): ring.field.one})

    @staticmethod
    def mono(ring, mono, c=1):
        return PolyElem(ring, {tuple(mono): ring.field.of(c)})

    # -- predicates ----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_unit(self):
        return len(self.terms) == 1 and self.ring.zero_mono in self.terms

    def constant_coeff(self):
        return self.terms.get(self.ring.zero_mono, self.ring.field.zero)

    def is_homogeneous(self, grading="m"):
        degs = {self._deg(m, grading) for m in self.terms}
        return len(degs) <= 1

    def degree(self, grading="m"):
        """Degree in the chosen grading; None for 0, raises if inhomogeneous."""
        if not self.terms:
            return None
        degs = {self._deg(m, grading) for m in self.terms}
        if len(degs) != 1:
            raise InhomogeneousInput(f"inhomogeneous ({grading}): {self}")
        return degs.pop()

    def _deg(self, m, grading):
        r = self.ring
        return {"m": r.mdeg, "x": r.xdeg, "t": r.tdeg}[grading](m)

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError("ring mismatch")

    def __add__(self, other):
        self._check(other)
        F = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = F.add(out.get(m, F.zero), c)
            if s == F.zero:
                out.pop(m, None)
            else:
                out[m] = s
        return PolyElem(self.ring, out)

    def __neg__(self):
        F = self.ring.field
        return PolyElem(self.ring, {m: F.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, PolyElem):
            return self.scale(other)
        self._check(other)
        F = self.ring.field
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = F.add(out.get(m, F.zero), F.mul(c1, c2))
                if s == F.zero:
                    out.pop(m, None)
                else:
                    out[m] = s
        return PolyElem(self.ring, out)

    def scale(self, c):
        F = self.ring.field
        c = F.of(c) if not isinstance(c, Fraction) else c
        if c == F.zero:
            return PolyElem(self.ring)
        return PolyElem(self.ring, {m: F.mul(cc, c) for m, cc in self.terms.items()})

    def mul_mono(self, mono, c=None):
        F = self.ring.field
        c = F.one if c is None else c
        return PolyElem(self.ring, {mono_mul(m, mono): F.mul(cc, c) for m, cc in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, PolyElem) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items()))))

    # -- leading data ---------------------------------------------------------

    def lead_mono(self):
        return max(self.terms, key=self.ring.order_key)

    def lead_coeff(self):
        return self.terms[self.lead_mono()]

    def monic(self):
        if self.is_zero():
            return self
        inv = self.ring.field.inv(self.lead_coeff())
        return self.scale(inv)

    # -- substitution / ring maps ----------------------------------------------

    def map_ring(self, ring, var_map=None):
        """Reinterpret over another ring; var_map maps old index -> new index."""
        if var_map is None:
            var_map = {self.ring._index[n]: ring._index[n] for n in self.ring.names}
        out = {}
        F = ring.field
        for m, c in self.terms.items():
            mm = [0] * ring.nvars
            for i, e in enumerate(m):
                if e:
                    mm[var_map[i]] = e
            mono = tuple(mm)
            out[mono] = F.add(out.get(mono, F.zero), c)
        return PolyElem(ring, out)

    def subs_one(self, var_name, value_poly):
        """Substitute a polynomial for one variable."""
        ring = value_poly.ring
        i = self.ring.var_index(var_name)
        out = PolyElem.zero(ring)
        for m, c in self.terms.items():
            rest = list(m)
            e = rest[i]
            rest[i] = 0
            term = PolyElem.mono(self.ring, tuple(rest), 1).map_ring(ring)
            p = term.scale(c)
            for _ in range(e):
                p = p * value_poly
            out = out + p
        return out

    # -- text ---------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        ring = self.ring
        F = ring.field
        parts = []
        for m in ring.sorted_monos(self.terms):
            c = self.terms[m]
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(ring.names[i])
                elif e > 1:
                    factors.append(f"{ring.names[i]}^{e}")
            neg = (not ring.field.p) and c < 0
            cabs = -c if neg else c
            if not factors:
                body = F.coeff_str(cabs)
            elif cabs == F.one:
                body = "*".join(factors)
            else:
                body = F.coeff_str(cabs) + "*" + "*".join(factors)
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("-" if neg else "+") + body)
        return "".join(parts)

    def __repr__(self):
        return f"<{self}>"


_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*|\d+/\d+|\d+|\^|\*|\+|\-)")


def parse_poly(ring, text):
    """Parse the fixed grammar into a PolyElem over `ring`."""
    if not isinstance(ring, PolyRing):
        raise TypeError("need a PolyRing")
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"bad token in {text!r}", column=pos)
        tokens.append(m.group(1))
        pos = m.end()

    F = ring.field
    result = PolyElem.zero(ring)
    i = 0
    n = len(tokens)

    def parse_term(i, sign):
        coeff = F.one
        mono = [0] * ring.nvars
        saw_factor = False
        while i < n:
            tok = tokens[i]
            if tok in "+-":
                break
            if tok == "*":
                i += 1
                continue
            if re.fullmatch(r"\d+(/\d+)?", tok):
                coeff = F.mul(coeff, F.coeff_parse(tok))
                i += 1
                saw_factor = True
                continue
            if tok not in ring._index:
                raise ParseError(f"unknown variable {tok!r} in {text!r}")
            vi = ring.var_index(tok)
            e = 1
            i += 1
            if i < n and tokens[i] == "^":
                if i + 1 >= n or not tokens[i + 1].isdigit():
                    raise ParseError(f"bad exponent in {text!r}")
                e = int(tokens[i + 1])
                i += 2
            mono[vi] += e
            saw_factor = True
        if not saw_factor:
            raise ParseError(f"empty term in {text!r}")
        if sign < 0:
            coeff = F.neg(coeff)
        return i, PolyElem(ring, {tuple(mono): coeff})

    sign = 1
    while i < n:
        tok = tokens[i]
        if tok == "+":
            i += 1
            continue
        if tok == "-":
            sign = -sign
            i += 1
            continue
        i, term = parse_term(i, sign)
        result = result + term
        sign = 1
    return result
