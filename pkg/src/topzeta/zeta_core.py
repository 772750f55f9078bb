"""The zeta formula: resolution data -> rational functions, poles, thresholds.

A resolution of a germ (or of a global zero locus) is summarized by components
E_i carrying numerical data (N_i, nu_i) and by strata E_I° with their Euler
characteristics.  The local zeta function is

    sum over I of chi(E_I° over the origin) * prod_{i in I} 1/(nu_i + N_i s),

the global one uses the plain Euler characteristics.  All arithmetic is exact;
rational functions are kept in a unique canonical form so equality of values
is equality of representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd

from . import unipoly
from .errors import InvalidResolutionData, NoQualifyingComponent


@dataclass(frozen=True)
class Component:
    id: str
    N: int
    nu: int
    meets_origin_fiber: bool = True


@dataclass(frozen=True)
class Stratum:
    ids: frozenset
    chi_total: int
    chi_origin: int


@dataclass(frozen=True)
class ResolutionData:
    """Numerical data of an embedded resolution.

    ``scope`` records whether the data describes a germ over the origin
    ("local") or a global zero locus ("global"); strata not listed have
    Euler characteristic 0, and the empty stratum I = {} is carried
    explicitly (it contributes a constant to the zeta function).
    ``branch_ids`` optionally marks which components are strict-transform
    branches; pipelines fill it, file input may.
    """

    ambient_dim: int
    components: tuple
    strata: tuple
    empty_chi_total: int = 0
    empty_chi_origin: int = 0
    scope: str = "local"
    branch_ids: tuple = ()

    def __post_init__(self):
        self.validate()

    def validate(self):
        if self.ambient_dim < 1:
            raise InvalidResolutionData("ambient_dim must be positive")
        if self.scope not in ("local", "global"):
            raise InvalidResolutionData(f"unknown scope {self.scope!r}")
        ids = [c.id for c in self.components]
        if len(set(ids)) != len(ids):
            raise InvalidResolutionData("component ids must be unique")
        by_id = {c.id: c for c in self.components}
        for c in self.components:
            if c.N < 1 or c.nu < 1:
                raise InvalidResolutionData(f"component {c.id}: N and nu must be >= 1")
        seen = set()
        for st in self.strata:
            if not st.ids:
                raise InvalidResolutionData("empty stratum must use the dedicated fields")
            if st.ids in seen:
                raise InvalidResolutionData(f"duplicate stratum {sorted(st.ids)}")
            seen.add(st.ids)
            if not st.ids <= set(ids):
                raise InvalidResolutionData(f"stratum {sorted(st.ids)} names unknown components")
            if len(st.ids) > self.ambient_dim:
                raise InvalidResolutionData(
                    f"stratum {sorted(st.ids)} has more than ambient_dim components"
                )
            if st.chi_origin != 0 and any(not by_id[i].meets_origin_fiber for i in st.ids):
                raise InvalidResolutionData(
                    f"stratum {sorted(st.ids)} has chi_origin != 0 off the origin fiber"
                )
        if not set(self.branch_ids) <= set(ids):
            raise InvalidResolutionData("branch_ids names unknown components")

    def component(self, cid: str) -> Component:
        for c in self.components:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def candidate_pole_locations(self) -> list[Fraction]:
        return sorted({Fraction(-c.nu, c.N) for c in self.components}, reverse=True)

    def branch_multiplicities(self) -> list[int]:
        return [self.component(b).N for b in self.branch_ids]


class RationalFunction:
    """Ratio of integer-coefficient polynomials in s, in canonical form:
    gcd(num, den) = 1 over Q, both primitive, den has positive leading
    coefficient.  Equality of values == equality of coefficient tuples."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,)):
        num = unipoly.make(num)
        den = unipoly.make(den)
        if unipoly.is_zero(den):
            raise ZeroDivisionError("zero denominator")
        if unipoly.is_zero(num):
            object.__setattr__(self, "num", (0,))
            object.__setattr__(self, "den", (1,))
            return
        g = unipoly.gcd(num, den)
        num = unipoly.divmod_poly(num, g)[0]
        den = unipoly.divmod_poly(den, g)[0]
        # clear denominators and joint content: the pair (num, den) is scaled by
        # one rational so both are integral, gcd of all coefficients is 1, and
        # the denominator's leading coefficient is positive
        lcm = 1
        for c in list(num) + list(den):
            lcm = lcm * c.denominator // _int_gcd(lcm, c.denominator)
        num_i = [int(c * lcm) for c in num]
        den_i = [int(c * lcm) for c in den]
        content = 0
        for v in num_i + den_i:
            content = _int_gcd(content, abs(v))
        num_i = [v // content for v in num_i]
        den_i = [v // content for v in den_i]
        if den_i[-1] < 0:
            num_i = [-v for v in num_i]
            den_i = [-v for v in den_i]
        object.__setattr__(self, "num", tuple(num_i))
        object.__setattr__(self, "den", tuple(den_i))

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls((0,), (1,))

    @classmethod
    def constant(cls, c) -> "RationalFunction":
        c = Fraction(c)
        return cls((c.numerator,), (c.denominator,))

    def is_zero(self) -> bool:
        return self.num == (0,)

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            unipoly.add(unipoly.mul(self.num, other.den), unipoly.mul(other.num, self.den)),
            unipoly.mul(self.den, other.den),
        )

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(tuple(-c for c in self.num), self.den)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return self + (-other)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            unipoly.mul(self.num, other.num), unipoly.mul(self.den, other.den)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def evaluate(self, x) -> Fraction:
        denom = unipoly.evaluate(unipoly.make(self.den), x)
        if denom == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return unipoly.evaluate(unipoly.make(self.num), x) / denom

    def pole_order(self, location) -> int:
        return unipoly.root_multiplicity(unipoly.make(self.den), location)

    def __repr__(self):
        return f"RationalFunction({_poly_text(self.num)!r}, {_poly_text(self.den)!r})"

    def __str__(self):
        if self.den == (1,):
            return _poly_text(self.num)
        return f"({_poly_text(self.num)}) / ({_poly_text(self.den)})"


def _poly_text(coeffs) -> str:
    if not coeffs or all(c == 0 for c in coeffs):
        return "0"
    pieces = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        elif k == 1:
            body = "s" if mag == 1 else f"{mag}*s"
        else:
            body = f"s^{k}" if mag == 1 else f"{mag}*s^{k}"
        pieces.append(("- " if c < 0 else "+ ") + body)
    head = pieces[0]
    head = "-" + head[2:] if head.startswith("- ") else head[2:]
    return " ".join([head] + pieces[1:])


@dataclass(frozen=True)
class Pole:
    location: Fraction
    order: int


class PoleTable:
    """Poles sorted by location descending, so the pole closest to the origin
    is entry 0.  Every location is a candidate -nu_i/N_i of the data."""

    def __init__(self, entries):
        entries = [Pole(Fraction(loc), int(order)) for loc, order in entries]
        entries.sort(key=lambda p: p.location, reverse=True)
        locs = [p.location for p in entries]
        if len(set(locs)) != len(locs):
            raise InvalidResolutionData("duplicate pole locations")
        if any(p.order < 1 for p in entries):
            raise InvalidResolutionData("pole orders must be positive")
        self.entries = tuple(entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        return isinstance(other, PoleTable) and self.entries == other.entries

    def __repr__(self):
        return f"PoleTable({[(str(p.location), p.order) for p in self.entries]})"

    def closest_to_origin(self):
        return self.entries[0] if self.entries else None

    def max_order(self) -> int:
        return max((p.order for p in self.entries), default=0)

    def of_order(self, n: int):
        return [p for p in self.entries if p.order == n]


def _zeta(rd: ResolutionData, use_origin: bool) -> RationalFunction:
    rd.validate()
    by_id = {c.id: c for c in rd.components}
    total = RationalFunction.constant(
        rd.empty_chi_origin if use_origin else rd.empty_chi_total
    )
    for st in rd.strata:
        chi = st.chi_origin if use_origin else st.chi_total
        if chi == 0:
            continue
        num = (Fraction(chi),)
        den = (Fraction(1),)
        for cid in sorted(st.ids):
            comp = by_id[cid]
            den = unipoly.mul(den, (Fraction(comp.nu), Fraction(comp.N)))
        total = total + RationalFunction(num, den)
    return total


def zeta_local(rd: ResolutionData) -> RationalFunction:
    """Local topological zeta function of the germ the data resolves."""
    if rd.scope != "local":
        raise InvalidResolutionData("zeta_local needs data with scope 'local'")
    return _zeta(rd, use_origin=True)


def zeta_global(rd: ResolutionData) -> RationalFunction:
    """Global topological zeta function; needs data flagged as global with
    chi_total populated."""
    if rd.scope != "global":
        raise InvalidResolutionData("zeta_global needs data with scope 'global'")
    return _zeta(rd, use_origin=False)


def poles(z: RationalFunction, rd: ResolutionData) -> PoleTable:
    """Pole table of a zeta function computed from rd.

    Orders are root multiplicities in the canonical denominator, so candidates
    cancelled during reduction are not poles.  The unreduced denominator is a
    product of (nu_i + N_i s), hence every actual pole is a candidate; the
    final check only fires on values that cannot come from the defining sum.
    """
    entries = []
    total_order = 0
    for loc in rd.candidate_pole_locations():
        order = z.pole_order(loc)
        if order > 0:
            entries.append((loc, order))
            total_order += order
    if total_order != len(z.den) - 1:
        raise InvalidResolutionData(
            "denominator has a root outside the candidate set -nu_i/N_i"
        )
    return PoleTable(entries)


def _lct(rd: ResolutionData, only_origin: bool) -> Fraction:
    ratios = [
        Fraction(c.nu, c.N)
        for c in rd.components
        if (c.meets_origin_fiber or not only_origin)
    ]
    if not ratios:
        raise NoQualifyingComponent(
            "no component meets the origin fiber" if only_origin else "no components"
        )
    return min(ratios)


def lct_local(rd: ResolutionData) -> Fraction:
    """Log canonical threshold at the origin: min nu_i/N_i over components
    whose image contains the origin."""
    return _lct(rd, only_origin=True)


def lct_global(rd: ResolutionData) -> Fraction:
    """Global log canonical threshold: min nu_i/N_i over all components of the
    total transform of the zero locus."""
    return _lct(rd, only_origin=False)


def monomial_resolution_data(n: int, N: int) -> ResolutionData:
    """Identity-resolution data of the normal-crossings germ x_1^N ... x_n^N:
    n components (N, 1) whose full intersection is the origin."""
    if n < 1 or N < 1:
        raise ValueError("n and N must be positive")
    comps = tuple(Component(f"A{i + 1}", N, 1, True) for i in range(n))
    strata = (Stratum(frozenset(c.id for c in comps), 1, 1),)
    return ResolutionData(
        ambient_dim=n,
        components=comps,
        strata=strata,
        scope="local",
        branch_ids=tuple(c.id for c in comps),
    )
