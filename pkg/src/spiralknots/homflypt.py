"""HOMFLYPT polynomial by skein recursion, with the MFW braid-index bound.

Convention: v^-1 P(L+) - v P(L-) = z P(L0), P(unknot) = 1.  The value of
a k-component unlink is delta^(k-1) with delta = (v^-1 - v)/z, which is
itself a Laurent polynomial, so the whole recursion stays in exact
integer Laurent arithmetic.

Evaluation walks toward descending diagrams: simplify with Reidemeister
I/II removals, split distant pieces, then switch-or-smooth the first
crossing whose first visit along a canonical traversal is on the under
strand.  Values are memoized on the relabeling-invariant diagram key.
"""

from __future__ import annotations

import sys

from .diagram import Diagram, DiagramError
from .poly2 import LaurentPoly2, v_breadth

DELTA = LaurentPoly2({(-1, -1): 1, (1, -1): -1})

_V2 = LaurentPoly2.monomial(1, 2, 0)
_VZ = LaurentPoly2.monomial(1, 1, 1)
_VM2 = LaurentPoly2.monomial(1, -2, 0)
_MVM1Z = LaurentPoly2.monomial(-1, -1, 1)


class BudgetExceeded(RuntimeError):
    """Raised when the skein tree outgrows its node budget."""


class SkeinCache:
    """Canonical-key memo with hit/miss counters."""

    def __init__(self):
        self.table: dict = {}
        self.hits = 0
        self.misses = 0

    def get(self, key):
        value = self.table.get(key)
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
        return value

    def put(self, key, value):
        self.table[key] = value

    def __len__(self):
        return len(self.table)


def _remove_reconnected(d: Diagram, gone: set[int]) -> Diagram:
    """Delete crossings in ``gone``, rejoining strands straight through."""
    heads, tails = d._ends()
    succ = d.strand_successor()
    keep = [x for i, x in enumerate(d.crossings) if i not in gone]
    free = d.free_loops
    rename: dict[int, int] = {}
    interior: set[int] = set()
    for arc in heads:
        if heads[arc][0] in gone and tails[arc][0] in gone:
            interior.add(arc)
    entering = [a for a in heads
                if heads[a][0] in gone and tails[a][0] not in gone]
    reached: set[int] = set()
    for e in entering:
        a = succ[e]
        while a in interior:
            reached.add(a)
            a = succ[a]
        # a exits the removed set; its head occurrence now reads e
        rename[a] = e
    # untouched interior arcs close up into free loops
    left = interior - reached
    while left:
        a = left.pop()
        b = succ[a]
        while b != a:
            left.discard(b)
            b = succ[b]
        free += 1
    keep = [x.relabeled(rename) for x in keep]
    return Diagram(keep, free, d.label, validate=False)


def _find_r1(d: Diagram) -> int | None:
    for ci, x in enumerate(d.crossings):
        if x.under_in == x.over_out or x.under_out == x.over_in:
            return ci
    return None


def _find_r2(d: Diagram) -> tuple[int, int] | None:
    """A bigon face whose strand is over at both ends (true R2 pocket)."""
    try:
        faces = d.faces()
    except DiagramError:
        return None
    over_slots = {}
    for face in faces:
        if len(face) != 2:
            continue
        (c1, s1), (c2, s2) = face
        if c1 == c2:
            continue
        x1, x2 = d.crossings[c1], d.crossings[c2]
        arc = x1.slots[s1]
        ends_over = [s in (1, 3) for s in
                     (slot for c, slot in _arc_slots(d, arc))]
        if all(ends_over) or not any(ends_over):
            return (c1, c2)
    return None


def _arc_slots(d: Diagram, arc: int):
    out = []
    for ci, x in enumerate(d.crossings):
        for slot, a in enumerate(x.slots):
            if a == arc:
                out.append((ci, slot))
    return out


def simplify(d: Diagram) -> Diagram:
    """Reduce by Reidemeister I/II removals until no move applies."""
    while True:
        ci = _find_r1(d)
        if ci is not None:
            d = _remove_reconnected(d, {ci})
            continue
        pair = _find_r2(d)
        if pair is not None:
            d = _remove_reconnected(d, set(pair))
            continue
        return d


def _first_bad_crossing(d: Diagram) -> int | None:
    """First crossing met on its under strand, along min-arc traversal."""
    arc_head = {}
    for ci, x in enumerate(d.crossings):
        arc_head[x.under_in] = (ci, True)
        arc_head[x.over_in] = (ci, False)
    visited: set[int] = set()
    succ = d.strand_successor()
    for cycle in sorted(d.arc_cycles(), key=min):
        start = min(cycle)
        a = start
        while True:
            ci, is_under = arc_head[a]
            if ci not in visited:
                if is_under:
                    return ci
                visited.add(ci)
            a = succ[a]
            if a == start:
                break
    return None


class _Evaluator:
    def __init__(self, cache: SkeinCache, budget: int):
        self.cache = cache
        self.budget = budget
        self.nodes = 0

    def value(self, d: Diagram) -> LaurentPoly2:
        d = simplify(d)
        pieces, free = d.split()
        k = len(pieces) + free
        if k == 0:
            return LaurentPoly2.one()
        result = DELTA ** (k - 1)
        for piece in pieces:
            result = result * self.piece_value(piece)
        return result

    def piece_value(self, d: Diagram) -> LaurentPoly2:
        key = d.canonical_key()
        cached = self.cache.get(key)
        if cached is not None:
            return cached
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(
                f"budget exhausted: over {self.budget} skein nodes")
        bad = _first_bad_crossing(d)
        if bad is None:
            # descending diagram: an unlink
            result = DELTA ** (d.components - 1)
        else:
            sign = d.crossings[bad].sign
            switched, smoothed = d.skein_children(bad)
            if sign > 0:
                result = (_V2 * self.value(switched)
                          + _VZ * self.value(smoothed))
            else:
                result = (_VM2 * self.value(switched)
                          + _MVM1Z * self.value(smoothed))
        self.cache.put(key, result)
        return result


def homflypt(d: Diagram, cache: SkeinCache | None = None,
             budget: int = 10**6) -> LaurentPoly2:
    """HOMFLYPT polynomial of an oriented diagram."""
    if cache is None:
        cache = SkeinCache()
    ev = _Evaluator(cache, budget)
    limit = sys.getrecursionlimit()
    need = 4000 + 40 * d.crossing_count * max(1, d.crossing_count)
    try:
        if need > limit:
            sys.setrecursionlimit(need)
        return ev.value(d)
    finally:
        sys.setrecursionlimit(limit)


def mfw_bound(p: LaurentPoly2) -> int:
    """Morton-Franks-Williams lower bound for the braid index."""
    if p.is_zero():
        raise ValueError("MFW bound undefined for the zero polynomial")
    b = v_breadth(p)
    return -(-b // 2) + 1


def determinant(p: LaurentPoly2) -> int:
    """|Delta(-1)| from the HOMFLYPT value of a knot."""
    return abs(p.evaluate_int(v_squared=1, z_squared=-4))
