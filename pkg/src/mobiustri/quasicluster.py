"""Quasi-cluster mutation dynamics on seeds of M_n triangulations.

A seed is a triangulation together with one variable per arc, in slot
order.  Mutating slot k flips the k-th arc and replaces its variable by
the value forced by the exchange relation of the flip region:

* ``ptolemy`` - the generic flip.  Erasing the arc from its two faces
  leaves a quadrilateral with cyclic sides (a, b, c, d); the old and new
  variables multiply to a c + b d.
* ``anti_self_folded`` - flipping the self-returning one-sided arc at
  point p against the monogon at p exchanges it with the core; the
  product of old and new variables is just the monogon's variable (the
  boundary segment's coefficient when n = 1).
* ``one_sided_curve`` - the inverse move, flipping the core back out.
* ``crosscap_quad`` - flipping the monogon when the core is present.  In
  the triangle the monogon bounds with two further sides b and c, old
  times new equals (b + c)^2 + a^2 b c, where a is the core's variable.
  The squared core variable is what makes the cycle of moves around the
  cross-cap consistent with the other relations.

Which relation applies is decided by `classify_mutation`; the selection
is exactly the one that makes mutation an involution, a property the
census re-checks at every edge.

Variables live in the field of fractions of an integer polynomial ring
with 2n generators: x_1..x_n are the slot variables of the starting seed
and y_1..y_n are frozen coefficients, one per boundary segment.
`RationalFunction` keeps a quotient in the normal form described on the
class; mutation results always reduce to Laurent form (a check the test
suite performs by exhaustive closure for small n and randomized walks
beyond).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .arc_model import Arc, Core, OneSided, TwoSided, arc_key, arc_to_json
from .enumeration import Triangulation, least_triangulation
from .flips import (TRIANGLE, BoundarySegment, Side, faces, flip,
                    quad_for_flip)

PTOLEMY = "ptolemy"
ANTI_SELF_FOLDED = "anti_self_folded"
ONE_SIDED_CURVE = "one_sided_curve"
CROSSCAP_QUAD = "crosscap_quad"


class Poly:
    """Sparse multivariate polynomial over the integers.

    Terms map exponent tuples (one entry per generator, all >= 0) to
    nonzero integer coefficients.  The generator universe is fixed at
    construction; all arithmetic requires matching universes.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        self.terms = dict(terms or {})
        assert all(v for v in self.terms.values())

    @classmethod
    def constant(cls, nvars: int, c: int) -> "Poly":
        return cls(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def generator(cls, nvars: int, i: int, power: int = 1) -> "Poly":
        exps = [0] * nvars
        exps[i] = power
        return cls(nvars, {tuple(exps): 1})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, tuple(sorted(self.terms.items()))))

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Poly(self.nvars, out)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        out: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                s = out.get(k, 0) + v1 * v2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return Poly(self.nvars, out)

    def __pow__(self, e: int) -> "Poly":
        out = Poly.constant(self.nvars, 1)
        for _ in range(e):
            out = out * self
        return out

    def leading_term(self) -> tuple[tuple, int]:
        k = max(self.terms)
        return k, self.terms[k]

    def exact_divide(self, g: "Poly") -> "Poly | None":
        """self / g when the division is exact over the integers, else None."""
        if not g:
            raise ZeroDivisionError("polynomial division by zero")
        if not self:
            return Poly(self.nvars)
        rem = dict(self.terms)
        out = {}
        gk, gc = g.leading_term()
        while rem:
            fk = max(rem)
            fc = rem[fk]
            qk = tuple(a - b for a, b in zip(fk, gk))
            if min(qk) < 0 or fc % gc:
                return None
            qc = fc // gc
            out[qk] = qc
            for k2, v2 in g.terms.items():
                k = tuple(a + b for a, b in zip(qk, k2))
                s = rem.get(k, 0) - qc * v2
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
        return Poly(self.nvars, out)

    def content(self) -> int:
        return math.gcd(*self.terms.values()) if self.terms else 0

    def monomial_gcd(self) -> tuple:
        it = iter(self.terms)
        g = list(next(it))
        for k in it:
            g = [min(a, b) for a, b in zip(g, k)]
        return tuple(g)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def sorted_terms(self) -> list[tuple[tuple, int]]:
        return sorted(self.terms.items(), reverse=True)

    def __repr__(self):
        return "Poly(%d, %r)" % (self.nvars, dict(self.sorted_terms()))


def _shift(terms: dict, shift: tuple) -> dict:
    return {tuple(a - s for a, s in zip(k, shift)): v for k, v in terms.items()}


class RationalFunction:
    """Quotient of integer polynomials in a reduced normal form.

    The denominator is kept factored as ``monomial * product(factors)``.
    After construction the following hold: every denominator factor is a
    primitive non-monomial polynomial with positive leading coefficient
    that does not divide the numerator; the numerator and the denominator
    monomial share no generator; gcd of the numerator's integer content
    and the denominator coefficient is 1 and the coefficient is positive;
    zero is 0/1.  A value is Laurent exactly when no factors remain, and
    Laurent values are unique in this form, so equality and hashing are
    structural for them.
    """

    __slots__ = ("num", "den_mono", "den_coef", "den_factors")

    def __init__(self, num: Poly, den_mono: tuple | None = None,
                 den_coef: int = 1, den_factors: Iterable[Poly] = ()):
        assert den_coef != 0
        self.num = num
        self.den_mono = den_mono if den_mono is not None else (0,) * num.nvars
        self.den_coef = den_coef
        self.den_factors = tuple(den_factors)
        self._reduce()

    @classmethod
    def from_poly(cls, p: Poly) -> "RationalFunction":
        return cls(p)

    @classmethod
    def generator(cls, nvars: int, i: int) -> "RationalFunction":
        return cls(Poly.generator(nvars, i))

    def _reduce(self) -> None:
        kept = []
        for f in self.den_factors:
            mono = f.monomial_gcd()
            c = f.content()
            if f.leading_term()[1] < 0:
                c = -c
            if any(mono) or c != 1:
                f = Poly(f.nvars, {k: v // c for k, v in _shift(f.terms, mono).items()})
                self.den_mono = tuple(a + b for a, b in zip(self.den_mono, mono))
                self.den_coef *= c
            if f.is_monomial():
                (k, c), = f.terms.items()
                self.den_mono = tuple(a + b for a, b in zip(self.den_mono, k))
                self.den_coef *= c
                continue
            q = self.num.exact_divide(f)
            if q is not None:
                self.num = q
            else:
                kept.append(f)
        self.den_factors = tuple(kept)
        if not self.num:
            self.den_mono = (0,) * self.num.nvars
            self.den_coef = 1
            self.den_factors = ()
            return
        shift = tuple(min(a, b)
                      for a, b in zip(self.num.monomial_gcd(), self.den_mono))
        if any(shift):
            self.num = Poly(self.num.nvars, _shift(self.num.terms, shift))
            self.den_mono = tuple(a - s for a, s in zip(self.den_mono, shift))
        c = math.gcd(self.num.content(), abs(self.den_coef))
        if self.den_coef < 0:
            c = -c
        if c != 1:
            self.num = Poly(self.num.nvars,
                            {k: v // c for k, v in self.num.terms.items()})
            self.den_coef //= c

    @property
    def nvars(self) -> int:
        return self.num.nvars

    def denominator(self) -> Poly:
        d = Poly(self.nvars, {self.den_mono: self.den_coef})
        for f in self.den_factors:
            d = d * f
        return d

    def is_laurent(self) -> bool:
        """True when the value is a Laurent polynomial (monomial denominator)."""
        return not self.den_factors

    def has_positive_coefficients(self) -> bool:
        return all(v > 0 for v in self.num.terms.values()) and self.den_coef > 0

    def key(self) -> tuple:
        return (tuple(sorted(self.num.terms.items())),
                tuple(sorted(self.denominator().terms.items())))

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if self.is_laurent() and other.is_laurent():
            return self.key() == other.key()
        return self.num * other.denominator() == other.num * self.denominator()

    def __hash__(self):
        return hash(self.key()) if self.is_laurent() else 7

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        d1, d2 = self.denominator(), other.denominator()
        return RationalFunction(self.num * d2 + other.num * d1,
                                den_factors=(d1, d2))

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den_mono, self.den_coef,
                                self.den_factors)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return self + (-other)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self.num * other.num,
            tuple(a + b for a, b in zip(self.den_mono, other.den_mono)),
            self.den_coef * other.den_coef,
            self.den_factors + other.den_factors)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        if not other.num:
            raise ZeroDivisionError("rational function division by zero")
        num = self.num * Poly(self.nvars, {other.den_mono: other.den_coef})
        for f in other.den_factors:
            num = num * f
        return RationalFunction(num, self.den_mono, self.den_coef,
                                self.den_factors + (other.num,))

    def __pow__(self, e: int) -> "RationalFunction":
        out = RationalFunction(Poly.constant(self.nvars, 1))
        for _ in range(e):
            out = out * self
        return out

    def _gen_names(self) -> list[str]:
        n = self.nvars // 2
        return (["x%d" % (i + 1) for i in range(n)]
                + ["y%d" % (i + 1) for i in range(n)])

    def __str__(self):
        names = self._gen_names()

        def monomial(k, v, lead=False):
            parts = []
            if abs(v) != 1 or not any(k):
                parts.append(str(abs(v)))
            for i, e in enumerate(k):
                if e:
                    parts.append(names[i] + ("^%d" % e if e > 1 else ""))
            body = "*".join(parts)
            if v < 0:
                return ("-" if lead else "- ") + body
            return body if lead else "+ " + body

        if not self.num:
            return "0"
        terms = self.num.sorted_terms()
        num = " ".join(monomial(k, v, i == 0) for i, (k, v) in enumerate(terms))
        den = self.denominator()
        if den == Poly.constant(self.nvars, 1):
            return num
        dterms = den.sorted_terms()
        dstr = " ".join(monomial(k, v, i == 0) for i, (k, v) in enumerate(dterms))
        return "(%s) / (%s)" % (num, dstr)

    def __repr__(self):
        return "RationalFunction(%s)" % self

    def to_json(self) -> dict:
        def poly_json(p: Poly) -> list[dict]:
            return [{"coeff": v, "exponents": list(k)}
                    for k, v in p.sorted_terms()]

        return {"numerator": poly_json(self.num),
                "denominator": poly_json(self.denominator())}


# -- seeds and mutation -------------------------------------------------------


class MutationStep(NamedTuple):
    slot: int
    removed: Arc
    added: Arc
    relation: str
    value: RationalFunction

    def to_json(self) -> dict:
        return {"arc": arc_to_json(self.added), "relation": self.relation,
                "variable": self.value.to_json()}


@dataclass(frozen=True)
class Seed:
    """An ordered assignment of variables to the arcs of a triangulation."""

    n: int
    slots: tuple[Arc, ...]
    values: dict  # Arc -> RationalFunction

    @cached_property
    def triangulation(self) -> Triangulation:
        return frozenset(self.slots)

    def value(self, arc: Arc) -> RationalFunction:
        return self.values[arc]

    def cluster_key(self) -> frozenset:
        return frozenset(v.key() for v in self.values.values())


def seed_for(t: Triangulation, n: int) -> Seed:
    """Fresh seed on t: slot k gets generator x_k, in canonical arc order."""
    arcs = sorted(t, key=arc_key)
    if len(arcs) != n:
        raise ValueError("not a triangulation: expected %d arcs" % n)
    values = {a: RationalFunction.generator(2 * n, i)
              for i, a in enumerate(arcs)}
    return Seed(n, tuple(arcs), values)


def initial_seed(n: int) -> Seed:
    """Seed on the canonically least triangulation of M_n."""
    return seed_for(least_triangulation(n), n)


def _side_value(side: Side, seed: Seed) -> RationalFunction:
    if isinstance(side, BoundarySegment):
        return RationalFunction.generator(2 * seed.n, seed.n + side.index)
    return seed.values[side]


def classify_mutation(t: Triangulation, arc: Arc, n: int) -> tuple[str, dict]:
    """Relation kind for flipping `arc` in `t`, with its side bindings.

    The bindings name the sides entering the exchange relation: the full
    cyclic quad (a, b, c, d) for `ptolemy`, the glued side a for
    `anti_self_folded` and `one_sided_curve`, and (a, b, c) = (core, the
    two remaining triangle sides) for `crosscap_quad`.
    """
    if isinstance(arc, Core):
        monogons = [x for x in t if isinstance(x, TwoSided) and x.a == x.b]
        ref: Side = monogons[0] if monogons else BoundarySegment(0)
        return ONE_SIDED_CURVE, {"a": ref}
    if (isinstance(arc, OneSided) and arc.i == arc.j
            and (TwoSided(arc.i, arc.i) in t or n == 1)):
        ref = TwoSided(arc.i, arc.i) if n >= 2 else BoundarySegment(0)
        return ANTI_SELF_FOLDED, {"a": ref}
    if (isinstance(arc, TwoSided) and arc.a == arc.b and Core() in t):
        tri = [f for f in faces(t, n) if f.kind == TRIANGLE and arc in f.sides]
        assert len(tri) == 1, "monogon must bound exactly one ordinary triangle"
        b, c = (s for s in tri[0].sides if s != arc)
        return CROSSCAP_QUAD, {"a": Core(), "b": b, "c": c}
    a, b, c, d = quad_for_flip(t, arc, n)
    return PTOLEMY, {"a": a, "b": b, "c": c, "d": d}


def exchange_value(kind: str, bindings: dict, seed: Seed,
                   old: RationalFunction) -> RationalFunction:
    """Solve the exchange relation for the incoming variable."""
    v = {k: _side_value(s, seed) for k, s in bindings.items()}
    if kind == PTOLEMY:
        rhs = v["a"] * v["c"] + v["b"] * v["d"]
    elif kind in (ANTI_SELF_FOLDED, ONE_SIDED_CURVE):
        rhs = v["a"]
    elif kind == CROSSCAP_QUAD:
        rhs = (v["b"] + v["c"]) ** 2 + v["a"] ** 2 * v["b"] * v["c"]
    else:
        raise ValueError("unknown relation kind %r" % kind)
    return rhs / old


def mutate(seed: Seed, slot: int) -> tuple[Seed, MutationStep]:
    """Mutate the 1-based `slot`, returning the new seed and a transcript step."""
    if not 1 <= slot <= seed.n:
        raise ValueError("slot out of range")
    arc = seed.slots[slot - 1]
    t = seed.triangulation
    new_arc = flip(t, arc, seed.n)
    kind, bindings = classify_mutation(t, arc, seed.n)
    value = exchange_value(kind, bindings, seed, seed.values[arc])
    slots = list(seed.slots)
    slots[slot - 1] = new_arc
    values = {a: v for a, v in seed.values.items() if a != arc}
    values[new_arc] = value
    new_seed = Seed(seed.n, tuple(slots), values)
    return new_seed, MutationStep(slot, arc, new_arc, kind, value)


def apply_sequence(seed: Seed, slots: Iterable[int]) -> tuple[Seed, list[MutationStep]]:
    steps = []
    for slot in slots:
        seed, step = mutate(seed, slot)
        steps.append(step)
    return seed, steps


# -- census -------------------------------------------------------------------


@dataclass(frozen=True)
class CensusResult:
    n: int
    num_seeds: int
    num_clusters: int
    num_variables: int
    all_laurent: bool
    all_positive: bool
    variables: dict  # Arc -> RationalFunction
    exchange_edges: frozenset  # of frozenset({t1, t2})


def census(n: int) -> CensusResult:
    """Exhaustive mutation closure from the initial seed.

    Walks the whole exchange structure, checking along the way that
    mutation is involutive at every edge and that the variable attached
    to a triangulation slot does not depend on the mutation path taken to
    reach it.  Intended for small n; the number of seeds is T(n).
    """
    start = initial_seed(n)
    seen: dict[Triangulation, Seed] = {start.triangulation: start}
    frontier = [start.triangulation]
    edges = set()
    while frontier:
        t = frontier.pop()
        seed = seen[t]
        for slot in range(1, n + 1):
            new_seed, step = mutate(seed, slot)
            back, back_step = mutate(new_seed, slot)
            assert back.triangulation == t and back_step.added == step.removed
            assert all(back.values[a] == seed.values[a] for a in t), \
                "mutation failed to be involutive"
            t2 = new_seed.triangulation
            edges.add(frozenset((t, t2)))
            if t2 not in seen:
                seen[t2] = new_seed
                frontier.append(t2)
            else:
                other = seen[t2]
                assert all(other.values[a] == new_seed.values[a] for a in t2), \
                    "variable depends on the mutation path"
    variables: dict = {}
    for seed in seen.values():
        for a, v in seed.values.items():
            if a in variables:
                assert variables[a] == v
            else:
                variables[a] = v
    clusters = {seed.cluster_key() for seed in seen.values()}
    return CensusResult(
        n=n,
        num_seeds=len(seen),
        num_clusters=len(clusters),
        num_variables=len({v.key() for v in variables.values()}),
        all_laurent=all(v.is_laurent() for v in variables.values()),
        all_positive=all(v.has_positive_coefficients()
                         for v in variables.values()),
        variables=variables,
        exchange_edges=frozenset(edges),
    )
