"""Sparse multivariate polynomials over Q, Newton polygons and germ tests.

The ``Poly`` type is the input data model for the whole package: germs of
plane curves are parsed into it, the Newton polygon is read off its support,
and both resolution pipelines consume it.  Coefficients are exact rationals;
a polynomial is a canonical map from exponent vectors to non-zero coefficients.
"""

from __future__ import annotations

import re
from fractions import Fraction

import sympy

from . import unipoly
from .errors import (
    Degenerate,
    FaceMismatch,
    NonVanishingAtOrigin,
    ParseError,
    UnknownVariable,
)


class Poly:
    """Immutable sparse polynomial in ``num_vars`` variables over Q.

    ``terms`` maps exponent tuples to non-zero ``Fraction`` coefficients; two
    polynomials are equal iff their term maps are equal, so the representation
    is canonical by construction.
    """

    __slots__ = ("terms", "num_vars")

    def __init__(self, terms, num_vars: int):
        if num_vars < 1:
            raise ValueError("num_vars must be positive")
        clean = {}
        for exps, coeff in dict(terms).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != num_vars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps}")
            coeff = Fraction(coeff)
            if coeff != 0:
                clean[exps] = coeff
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "num_vars", num_vars)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- ring structure ----------------------------------------------------

    @classmethod
    def zero(cls, num_vars: int) -> "Poly":
        return cls({}, num_vars)

    @classmethod
    def constant(cls, c, num_vars: int) -> "Poly":
        return cls({(0,) * num_vars: Fraction(c)}, num_vars)

    @classmethod
    def variable(cls, index: int, num_vars: int) -> "Poly":
        exps = [0] * num_vars
        exps[index] = 1
        return cls({tuple(exps): Fraction(1)}, num_vars)

    def _check_compat(self, other: "Poly"):
        if self.num_vars != other.num_vars:
            raise ValueError("mixed variable counts")

    def __add__(self, other: "Poly") -> "Poly":
        self._check_compat(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return Poly(terms, self.num_vars)

    def __neg__(self) -> "Poly":
        return Poly({e: -c for e, c in self.terms.items()}, self.num_vars)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check_compat(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return Poly(terms, self.num_vars)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        out = Poly.constant(1, self.num_vars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.num_vars == other.num_vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.num_vars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Poly({self.to_text()!r}, num_vars={self.num_vars})"

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self.terms)

    def coefficient(self, exps) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.num_vars, Fraction(0))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def origin_multiplicity(self) -> int:
        """Order of vanishing at the origin (min total degree); -1 for zero."""
        if not self.terms:
            return -1
        return min(sum(e) for e in self.terms)

    def min_exponent(self, var: int) -> int:
        """Largest k with x_var^k dividing the polynomial."""
        if not self.terms:
            raise ValueError("zero polynomial")
        return min(e[var] for e in self.terms)

    def partial(self, var: int) -> "Poly":
        terms = {}
        for e, c in self.terms.items():
            if e[var] > 0:
                ne = list(e)
                ne[var] -= 1
                terms[tuple(ne)] = c * e[var]
        return Poly(terms, self.num_vars)

    def evaluate(self, point) -> Fraction:
        point = [Fraction(v) for v in point]
        acc = Fraction(0)
        for e, c in self.terms.items():
            val = c
            for ex, pv in zip(e, point):
                val *= pv**ex
            acc += val
        return acc

    def substitute_shift(self, var: int, offset) -> "Poly":
        """Replace x_var by (x_var + offset); exact binomial expansion."""
        offset = Fraction(offset)
        if offset == 0:
            return self
        terms = {}
        for e, c in self.terms.items():
            k = e[var]
            binom = 1
            power = Fraction(1)
            for j in range(k, -1, -1):
                ne = list(e)
                ne[var] = j
                ne = tuple(ne)
                terms[ne] = terms.get(ne, Fraction(0)) + c * binom * power
                binom = binom * j // (k - j + 1)
                power *= offset
        return Poly(terms, self.num_vars)

    def restrict_to_zero(self, var: int) -> unipoly.Coeffs:
        """Set x_var = 0 in a 2-variable polynomial; return the other variable's
        coefficient list."""
        assert self.num_vars == 2
        other = 1 - var
        coeffs = {}
        for e, c in self.terms.items():
            if e[var] == 0:
                coeffs[e[other]] = c
        if not coeffs:
            return ()
        out = [Fraction(0)] * (max(coeffs) + 1)
        for k, c in coeffs.items():
            out[k] = c
        return unipoly.make(out)

    def to_text(self, variables=None) -> str:
        """Deterministic text form, re-parsable by :func:`parse_poly`."""
        if variables is None:
            variables = _default_names(self.num_vars)
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
            c = self.terms[e]
            factors = []
            for name, k in zip(variables, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            mag = abs(c)
            coeff_txt = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            if not factors:
                body = coeff_txt
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([coeff_txt] + factors)
            pieces.append(("- " if c < 0 else "+ ") + body)
        head = pieces[0]
        head = "-" + head[2:] if head.startswith("- ") else head[2:]
        return " ".join([head] + pieces[1:])


def _default_names(n: int) -> list[str]:
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i + 1}" for i in range(n)]


# -- parsing ---------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<number>\d+(?:\s*/\s*\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()]))"
)


def _tokenize(text: str):
    pos, tokens = 0, []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        if m.lastgroup == "number":
            literal = m.group("number").replace(" ", "")
            if "/" in literal:
                num, den = literal.split("/")
                if int(den) == 0:
                    raise ParseError("zero denominator in rational literal", m.start())
                value = Fraction(int(num), int(den))
            else:
                value = Fraction(int(literal))
            tokens.append(("number", value, m.start("number")))
        elif m.lastgroup == "name":
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    """Recursive-descent parser for the grammar

        expr   := ['-'] term (('+' | '-') term)*
        term   := factor ('*' factor)*
        factor := atom ['^' number]
        atom   := number | name | '(' expr ')'

    '^' binds tighter than '*', which binds tighter than '+'/'-'; implicit
    multiplication is not part of the grammar.
    """

    def __init__(self, tokens, variables, num_vars):
        self.tokens = tokens
        self.i = 0
        self.vars = {name: k for k, name in enumerate(variables)}
        self.num_vars = num_vars

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.peek()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)
        return self.advance()

    def parse(self) -> Poly:
        result = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected trailing input {val!r}", pos)
        return result

    def expr(self) -> Poly:
        acc = self.signed_term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.advance()
                rhs = self.signed_term()
                acc = acc + rhs if val == "+" else acc - rhs
            else:
                return acc

    def signed_term(self) -> Poly:
        negate = False
        kind, val, _ = self.peek()
        while kind == "op" and val == "-":
            self.advance()
            negate = not negate
            kind, val, _ = self.peek()
        t = self.term()
        return -t if negate else t

    def term(self) -> Poly:
        acc = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.advance()
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> Poly:
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.advance()
            kind, val, pos = self.advance()
            if kind != "number" or val.denominator != 1 or val < 0:
                raise ParseError("exponent must be a non-negative integer", pos)
            return base ** int(val)
        return base

    def atom(self) -> Poly:
        kind, val, pos = self.advance()
        if kind == "number":
            return Poly.constant(val, self.num_vars)
        if kind == "name":
            if val not in self.vars:
                raise UnknownVariable(f"unknown variable {val!r}", pos)
            return Poly.variable(self.vars[val], self.num_vars)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError("expected a number, variable or '('", pos)


def parse_poly(text: str, variables) -> Poly:
    """Parse polynomial text over the named variables into a canonical Poly."""
    variables = list(variables)
    if len(set(variables)) != len(variables):
        raise ValueError("duplicate variable names")
    return _Parser(_tokenize(text), variables, len(variables)).parse()


# -- Newton polygon --------------------------------------------------------


class Face:
    """A compact face of a local Newton polygon: a vertex, or a segment with its
    primitive inner normal (a, b) and value N = min a*i + b*j over the support."""

    __slots__ = ("kind", "points", "normal", "value")

    def __init__(self, kind, points, normal=None, value=None):
        self.kind = kind
        self.points = tuple(points)
        self.normal = normal
        self.value = value

    def __eq__(self, other):
        return (
            isinstance(other, Face)
            and (self.kind, self.points, self.normal, self.value)
            == (other.kind, other.points, other.normal, other.value)
        )

    def __hash__(self):
        return hash((self.kind, self.points, self.normal, self.value))

    def __repr__(self):
        if self.kind == "vertex":
            return f"Face(vertex {self.points[0]})"
        return f"Face(segment {self.points[0]}..{self.points[-1]}, normal={self.normal}, N={self.value})"

    def lattice_points(self):
        """All lattice points on the face, endpoint to endpoint."""
        if self.kind == "vertex":
            return list(self.points)
        (x1, y1), (x2, y2) = self.points
        from math import gcd

        g = gcd(abs(x2 - x1), abs(y2 - y1))
        dx, dy = (x2 - x1) // g, (y2 - y1) // g
        return [(x1 + j * dx, y1 + j * dy) for j in range(g + 1)]


class NewtonPolygon:
    """Convex-hull data of supp(f) + R^2_{>=0} for a two-variable germ.

    ``vertices`` runs from the x-extreme vertex to the y-extreme vertex
    (x descending); ``compact_faces`` lists vertex faces first, then segment
    faces in the same sweep order (normals (a, b) by increasing a/b).
    """

    def __init__(self, vertices, compact_faces):
        self.vertices = tuple(tuple(v) for v in vertices)
        self.compact_faces = tuple(compact_faces)

    def segments(self):
        return [f for f in self.compact_faces if f.kind == "segment"]

    def __eq__(self, other):
        return (
            isinstance(other, NewtonPolygon)
            and self.vertices == other.vertices
            and self.compact_faces == other.compact_faces
        )

    def __hash__(self):
        return hash((self.vertices, self.compact_faces))

    def __repr__(self):
        return f"NewtonPolygon(vertices={list(self.vertices)})"


def _require_local_germ(f: Poly):
    if f.is_zero():
        raise NonVanishingAtOrigin("the zero polynomial is not a germ")
    if f.constant_term() != 0:
        raise NonVanishingAtOrigin("germ does not vanish at the origin")


def newton_polygon_local(f: Poly) -> NewtonPolygon:
    """Newton polygon at the origin of a two-variable germ.

    Only points not dominated componentwise by another support point can be
    vertices; among those the convex chain towards the origin survives.
    """
    if f.num_vars != 2:
        raise ValueError("newton_polygon_local needs a 2-variable polynomial")
    _require_local_germ(f)
    pts = f.support()
    staircase = [
        p for p in pts
        if not any(q != p and q[0] <= p[0] and q[1] <= p[1] for q in pts)
    ]
    staircase.sort(key=lambda p: (-p[0], p[1]))
    chain: list[tuple[int, int]] = []
    for p in staircase:
        while len(chain) >= 2:
            a, b = chain[-2], chain[-1]
            cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
            if cross >= 0:  # b is inside or collinear: not a vertex
                chain.pop()
            else:
                break
        chain.append(p)
    faces = [Face("vertex", [v]) for v in chain]
    from math import gcd

    for p, q in zip(chain, chain[1:]):
        a, b = q[1] - p[1], p[0] - q[0]  # inner normal; both positive on this chain
        g = gcd(a, b)
        a, b = a // g, b // g
        value = a * p[0] + b * p[1]
        assert all(a * i + b * j >= value for (i, j) in pts)
        faces.append(Face("segment", [p, q], normal=(a, b), value=value))
    return NewtonPolygon(chain, faces)


def face_poly(f: Poly, face: Face) -> Poly:
    """Sub-sum of f over the support points lying on the given face."""
    np_f = newton_polygon_local(f)
    if face not in np_f.compact_faces:
        raise FaceMismatch(f"{face!r} is not a face of this polynomial's polygon")
    on_face = set(face.lattice_points())
    return Poly({e: c for e, c in f.terms.items() if e in on_face}, f.num_vars)


def segment_face_coeffs(f: Poly, face: Face) -> unipoly.Coeffs:
    """Dehomogenization of the face polynomial of a segment face.

    Walking the lattice points of the segment from the x-extreme end gives the
    coefficient list; the result always has a non-zero constant term because
    segment endpoints are support points.
    """
    assert face.kind == "segment"
    return unipoly.make([f.coefficient(p) for p in face.lattice_points()])


def is_nondegenerate_curve(f: Poly) -> bool:
    """Newton non-degeneracy for two-variable germs, decided exactly.

    Vertex faces are monomials and never obstruct.  A segment face obstructs
    iff its dehomogenized face polynomial has a repeated non-zero root, i.e.
    gcd(g, g') keeps a factor besides a power of t.
    """
    if f.num_vars != 2:
        raise ValueError("is_nondegenerate_curve needs a 2-variable polynomial")
    _require_local_germ(f)
    for face in newton_polygon_local(f).segments():
        g = segment_face_coeffs(f, face)
        common = unipoly.gcd(g, unipoly.derivative(g))
        if unipoly.degree(unipoly.strip_origin_root(common)) > 0:
            return False
    return True


def require_nondegenerate(f: Poly):
    if not is_nondegenerate_curve(f):
        raise Degenerate("germ is degenerate with respect to its Newton polygon")


# -- reducedness and square-free structure ----------------------------------

_SYM_XY = sympy.symbols("x y")


def _to_sympy(f: Poly):
    x, y = _SYM_XY
    return sympy.Poly(
        {e: sympy.Rational(c.numerator, c.denominator) for e, c in f.terms.items()},
        x,
        y,
        domain="QQ",
    )


def _from_sympy(p) -> Poly:
    terms = {}
    for monom, coeff in p.terms():
        c = sympy.Rational(coeff)
        terms[tuple(int(m) for m in monom)] = Fraction(int(c.p), int(c.q))
    return Poly(terms, 2)


def irreducible_factors(f: Poly) -> list[tuple[Poly, int]]:
    """Factor f over Q into irreducibles (constant dropped), in deterministic
    order.  Conjugate branches stay grouped inside one rational factor."""
    if f.num_vars != 2:
        raise ValueError("irreducible_factors needs a 2-variable polynomial")
    if f.is_zero():
        raise ValueError("zero polynomial")
    _, factors = _to_sympy(f).factor_list()
    out = [(_from_sympy(p), int(m)) for p, m in factors]
    out.sort(key=lambda pm: (pm[1], sorted(pm[0].terms)))
    return out


def germ_factors(f: Poly) -> list[tuple[Poly, int]]:
    """Irreducible factors of f that vanish at the origin, with multiplicities.

    Factors not through the origin are local units and play no role in the germ.
    """
    _require_local_germ(f)
    return [(p, m) for p, m in irreducible_factors(f) if p.constant_term() == 0]


def is_reduced_isolated(f: Poly) -> bool:
    """True iff the germ of f at the origin is reduced (square-free through the
    origin).  Reduced plane-curve germs automatically have isolated singularities."""
    if f.num_vars != 2:
        raise ValueError("is_reduced_isolated needs a 2-variable polynomial")
    _require_local_germ(f)
    return all(m == 1 for _, m in germ_factors(f))
