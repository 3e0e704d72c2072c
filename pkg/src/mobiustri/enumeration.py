"""Counting and brute-force enumeration of triangulations of M_n.

A triangulation is a maximal set of pairwise compatible arcs; every one
consists of exactly n arcs.  The count T(n) satisfies

    T(1) = 2,
    T(n) = 2 * sum_{i=0}^{n-2} C(i) T(n-i-1) + n C(n-1)      (n >= 2)

with C(i) the Catalan numbers, and has the closed form

    T(n) = 4^(n-1) + binom(2n-2, n-1).

Equality of the two is equivalent to the convolution identity
2 * sum_{i=0}^{n-2} C(i) T(n-i-1) = 4^(n-1), which `verify_counts` checks
alongside a brute-force recount for small n.
"""

from __future__ import annotations

import itertools
import math
from functools import cache

from .arc_model import (Arc, OneSided, TwoSided, all_arcs, arc_key,
                        arc_to_json, compatible)
from .catalan_polygon import catalan_number

Triangulation = frozenset

#: Largest n the brute-force enumerator accepts without an explicit override.
BRUTE_FORCE_CEILING = 6


def count_closed_form(n: int) -> int:
    """T(n) = 4^(n-1) + binom(2n-2, n-1)."""
    if n < 1:
        raise ValueError("need at least one marked point")
    return 4 ** (n - 1) + math.comb(2 * n - 2, n - 1)


@cache
def count_recurrence(n: int) -> int:
    """T(n) from the Catalan convolution recurrence."""
    if n < 1:
        raise ValueError("need at least one marked point")
    if n == 1:
        return 2
    halved = sum(catalan_number(i) * count_recurrence(n - i - 1)
                 for i in range(n - 1))
    return 2 * halved + n * catalan_number(n - 1)


def convolution_identity_holds(n: int) -> bool:
    """Check 2 * sum C(i) T(n-i-1) == 4^(n-1) for n >= 2."""
    if n < 2:
        raise ValueError("identity starts at n = 2")
    lhs = 2 * sum(catalan_number(i) * count_recurrence(n - i - 1)
                  for i in range(n - 1))
    return lhs == 4 ** (n - 1)


def compatibility_graph(n: int) -> dict[Arc, set[Arc]]:
    """Adjacency map of the pairwise-compatibility graph on all arcs."""
    arcs = all_arcs(n)
    adj: dict[Arc, set[Arc]] = {a: set() for a in arcs}
    for a, b in itertools.combinations(arcs, 2):
        if compatible(a, b, n):
            adj[a].add(b)
            adj[b].add(a)
    return adj


def enumerate_triangulations(n: int) -> list[Triangulation]:
    """All triangulations of M_n, via maximal-clique search, in canonical order.

    This is the brute-force oracle: it never consults the counting formulas.
    """
    adj = compatibility_graph(n)
    found: list[frozenset[Arc]] = []

    def extend(r: set, p: set, x: set) -> None:
        if not p and not x:
            found.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda u: (len(adj[u] & p), arc_key(u)))
        for v in sorted(p - adj[pivot], key=arc_key):
            extend(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    universe = set(adj)
    extend(set(), universe, set())
    return sorted(found, key=lambda t: sorted(arc_key(a) for a in t))


def count_brute_force(n: int, force: bool = False) -> int:
    """|enumerate_triangulations(n)|, guarded against runaway inputs."""
    if n > BRUTE_FORCE_CEILING and not force:
        raise ValueError(
            "brute-force enumeration for n=%d exceeds the default ceiling %d; "
            "pass force=True to run it anyway" % (n, BRUTE_FORCE_CEILING))
    return len(enumerate_triangulations(n))


def least_triangulation(n: int) -> Triangulation:
    """The canonically first triangulation: the fan out of marked point 0.

    It consists of the monogon at 0, the two-sided arcs from 0 to every
    point it does not already reach through the boundary, and the
    one-sided arc at 0.  This is `enumerate_triangulations(n)[0]` without
    the enumeration, and the default starting seed of the mutation
    dynamics.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return frozenset({OneSided(0, 0, 0)})
    fan = [TwoSided(0, 0)] + [TwoSided(0, k) for k in range(2, n)]
    return frozenset(fan + [OneSided(0, 0, 0)])


def is_triangulation(arcs: frozenset, n: int) -> bool:
    """True when `arcs` is pairwise compatible and not extendable."""
    arcs = frozenset(arcs)
    census = all_arcs(n)
    if not arcs <= set(census):
        return False
    for a, b in itertools.combinations(sorted(arcs, key=arc_key), 2):
        if not compatible(a, b, n):
            return False
    for c in census:
        if c not in arcs and all(compatible(c, a, n) for a in arcs):
            return False
    return True


def triangulation_to_json(t: Triangulation, n: int) -> dict:
    return {"n": n, "arcs": [arc_to_json(a) for a in sorted(t, key=arc_key)]}


def verify_counts(max_n: int) -> tuple[bool, list[str]]:
    """Cross-check the counting results for n = 1..max_n.

    For each n the closed form must match the recurrence, the convolution
    identity must hold (n >= 2), a brute-force enumeration (where feasible)
    must recount the same number, and every enumerated triangulation must
    have exactly n arcs.  Returns (all_ok, report_lines).
    """
    ok = True
    lines = []
    for n in range(1, max_n + 1):
        closed = count_closed_form(n)
        rec = count_recurrence(n)
        parts = ["n=%d" % n, "closed=%d" % closed, "recurrence=%d" % rec]
        good = closed == rec
        if n >= 2:
            ident = convolution_identity_holds(n)
            parts.append("identity=%s" % ("ok" if ident else "FAIL"))
            good = good and ident
        if n <= BRUTE_FORCE_CEILING:
            ts = enumerate_triangulations(n)
            sizes_ok = all(len(t) == n for t in ts)
            parts.append("brute=%d" % len(ts))
            parts.append("sizes=%s" % ("ok" if sizes_ok else "FAIL"))
            good = good and len(ts) == closed and sizes_ok
        else:
            parts.append("brute=skipped")
        parts.append("=> %s" % ("ok" if good else "MISMATCH"))
        lines.append(" ".join(parts))
        ok = ok and good
    return ok, lines
