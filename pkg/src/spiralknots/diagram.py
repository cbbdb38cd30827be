"""Oriented link diagrams as PD codes, plus braid words and diagram surgery.

A crossing stores its four arc labels in counterclockwise slot order
starting at the incoming under-strand, together with which of the two
over slots (1 or 3) carries the incoming over-strand.  Slot 3 incoming
means a positive crossing, slot 1 negative.

Arcs are integer labels.  Every arc is consumed exactly once (as
``under_in`` or ``over_in``) and produced exactly once (``under_out`` or
``over_out``); the strand goes straight through a crossing, slot k to
slot k+2.  Crossing-free circles are carried separately in
``free_loops`` so smoothing a kink keeps a faithful component count.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class Crossing:
    """One crossing: slots CCW from incoming under, over_slot in {1, 3}."""

    slots: tuple[int, int, int, int]
    over_slot: int

    @property
    def under_in(self) -> int:
        return self.slots[0]

    @property
    def under_out(self) -> int:
        return self.slots[2]

    @property
    def over_in(self) -> int:
        return self.slots[self.over_slot]

    @property
    def over_out(self) -> int:
        return self.slots[(self.over_slot + 2) % 4]

    @property
    def sign(self) -> int:
        return 1 if self.over_slot == 3 else -1

    def switched(self) -> "Crossing":
        """Exchange over and under strands (rotate the slot frame)."""
        a, b, c, d = self.slots
        if self.over_slot == 3:
            return Crossing((d, a, b, c), 1)
        return Crossing((b, c, d, a), 3)

    def relabeled(self, mapping: dict[int, int]) -> "Crossing":
        return Crossing(tuple(mapping.get(x, x) for x in self.slots), self.over_slot)


@dataclass(frozen=True)
class BraidWord:
    """Braid word: positive generator index with power +1/-1 per letter."""

    strand_count: int
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.strand_count < 1:
            raise DiagramError("braid needs at least one strand")
        for gen, power in self.letters:
            if not 1 <= gen <= self.strand_count - 1:
                raise DiagramError(f"generator {gen} out of range")
            if power not in (1, -1):
                raise DiagramError("letter power must be +1 or -1")

    @staticmethod
    def parse(text: str) -> "BraidWord":
        """Parse ``s1 s2' s1`` (trailing apostrophe = inverse)."""
        letters = []
        max_gen = 0
        for tok in text.split():
            m = re.fullmatch(r"s(\d+)(')?", tok)
            if not m:
                raise DiagramError(f"bad braid letter {tok!r}")
            gen = int(m.group(1))
            max_gen = max(max_gen, gen)
            letters.append((gen, -1 if m.group(2) else 1))
        return BraidWord(max_gen + 1 if letters else 1, tuple(letters))

    def to_text(self) -> str:
        return " ".join(f"s{g}" + ("'" if p < 0 else "") for g, p in self.letters)

    def inverse_mirror(self) -> "BraidWord":
        return BraidWord(self.strand_count,
                         tuple((g, -p) for g, p in self.letters))


class Diagram:
    """Immutable oriented diagram; edits return new diagrams."""

    __slots__ = ("crossings", "free_loops", "label", "_cycles")

    def __init__(self, crossings: Sequence[Crossing], free_loops: int = 0,
                 label: str | None = None, validate: bool = True):
        self.crossings = tuple(crossings)
        self.free_loops = int(free_loops)
        self.label = label
        self._cycles: tuple[tuple[int, ...], ...] | None = None
        if validate:
            self._validate()

    # -- basic structure ------------------------------------------------

    def _ends(self):
        """heads[arc] = (ci, slot) where consumed; tails likewise."""
        heads: dict[int, tuple[int, int]] = {}
        tails: dict[int, tuple[int, int]] = {}
        for ci, x in enumerate(self.crossings):
            for slot, arc in enumerate(x.slots):
                consumed = slot == 0 or slot == x.over_slot
                table = heads if consumed else tails
                if arc in table:
                    raise DiagramError(
                        f"invalid PD code: arc {arc} duplicated as "
                        f"{'head' if consumed else 'tail'}")
                table[arc] = (ci, slot)
        return heads, tails

    def _validate(self):
        heads, tails = self._ends()
        if set(heads) != set(tails):
            bad = set(heads) ^ set(tails)
            raise DiagramError(f"invalid PD code: unbalanced arcs {sorted(bad)}")
        if self.free_loops < 0:
            raise DiagramError("negative free loop count")

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def arcs(self) -> list[int]:
        seen = set()
        for x in self.crossings:
            seen.update(x.slots)
        return sorted(seen)

    def strand_successor(self) -> dict[int, int]:
        """Next arc along the knot after each arc's head crossing."""
        succ = {}
        for x in self.crossings:
            succ[x.under_in] = x.under_out
            succ[x.over_in] = x.over_out
        return succ

    def arc_cycles(self) -> tuple[tuple[int, ...], ...]:
        """Oriented components as cyclic arc sequences (free loops excluded)."""
        if self._cycles is None:
            succ = self.strand_successor()
            seen: set[int] = set()
            cycles = []
            for start in sorted(succ):
                if start in seen:
                    continue
                cyc = []
                a = start
                while a not in seen:
                    seen.add(a)
                    cyc.append(a)
                    a = succ[a]
                cycles.append(tuple(cyc))
            self._cycles = tuple(cycles)
        return self._cycles

    @property
    def components(self) -> int:
        return len(self.arc_cycles()) + self.free_loops

    def writhe(self) -> int:
        return sum(x.sign for x in self.crossings)

    def is_knot(self) -> bool:
        return self.components == 1

    # -- predicates -----------------------------------------------------

    def is_alternating(self) -> bool:
        """Over/under alternates along every component.

        Each arc must be consumed with one role and produced with the
        other; free loops and the empty diagram count as alternating.
        """
        for x in self.crossings:
            pass
        heads, tails = self._ends()
        for arc in heads:
            hc, hs = heads[arc]
            tc, ts = tails[arc]
            head_under = hs == 0
            tail_under = ts == 2
            if head_under == tail_under:
                return False
        return True

    def is_connected(self) -> bool:
        if not self.crossings:
            return self.free_loops <= 1
        if self.free_loops:
            return False
        return len(self._crossing_pieces()) == 1

    def _crossing_pieces(self) -> list[list[int]]:
        n = len(self.crossings)
        arc_to_cs: dict[int, list[int]] = {}
        for ci, x in enumerate(self.crossings):
            for a in x.slots:
                arc_to_cs.setdefault(a, []).append(ci)
        seen = [False] * n
        pieces = []
        for root in range(n):
            if seen[root]:
                continue
            stack, piece = [root], []
            seen[root] = True
            while stack:
                ci = stack.pop()
                piece.append(ci)
                for a in self.crossings[ci].slots:
                    for cj in arc_to_cs[a]:
                        if not seen[cj]:
                            seen[cj] = True
                            stack.append(cj)
            pieces.append(sorted(piece))
        return pieces

    def split(self) -> tuple[list["Diagram"], int]:
        """Connected crossing-pieces plus the free-loop count."""
        pieces = [
            Diagram([self.crossings[i] for i in piece], 0, validate=False)
            for piece in self._crossing_pieces()
        ]
        return pieces, self.free_loops

    # -- faces (planar embedding combinatorics) -------------------------

    def faces(self) -> list[list[tuple[int, int]]]:
        """Faces as dart cycles; a dart (ci, slot) leaves ci via slot.

        Planarity check: V - E + F = 2 for a connected diagram.
        """
        other_end: dict[tuple[int, int], tuple[int, int]] = {}
        by_arc: dict[int, list[tuple[int, int]]] = {}
        for ci, x in enumerate(self.crossings):
            for slot, arc in enumerate(x.slots):
                by_arc.setdefault(arc, []).append((ci, slot))
        for ends in by_arc.values():
            if len(ends) == 1:
                raise DiagramError("dangling arc; faces undefined")
            (c1, s1), (c2, s2) = ends
            other_end[(c1, s1)] = (c2, s2)
            other_end[(c2, s2)] = (c1, s1)
        darts = set(other_end)
        faces = []
        while darts:
            start = min(darts)
            face = []
            d = start
            while True:
                face.append(d)
                darts.discard(d)
                c2, s2 = other_end[d]
                d = (c2, (s2 + 1) % 4)
                if d == start:
                    break
            faces.append(face)
        return faces

    def euler_check(self) -> bool:
        """True when every connected piece satisfies V - E + F = 2."""
        pieces, _ = self.split()
        for piece in pieces:
            v = piece.crossing_count
            e = 2 * v
            f = len(piece.faces())
            if v - e + f != 2:
                return False
        return True

    # -- serialization ---------------------------------------------------

    _PD_TOKEN = re.compile(r"X\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")

    def to_pd_text(self) -> str:
        return " ".join(
            "X({},{},{},{})".format(*x.slots) for x in self.crossings)

    @staticmethod
    def from_slots(slot_rows: Iterable[tuple[int, int, int, int]],
                   free_loops: int = 0, label: str | None = None) -> "Diagram":
        """Build from PD slot rows, inferring over-strand directions.

        Under roles are fixed by the convention (slot 0 in, slot 2 out);
        each crossing's over direction is resolved by propagating the
        one-head-one-tail constraint.  A component that is never an
        under-strand is genuinely ambiguous; its direction is chosen
        deterministically.
        """
        rows = [tuple(int(v) for v in r) for r in slot_rows]
        occurrences: dict[int, list[tuple[int, int]]] = {}
        for ci, row in enumerate(rows):
            for slot, arc in enumerate(row):
                occurrences.setdefault(arc, []).append((ci, slot))
        for arc, occ in occurrences.items():
            if len(occ) != 2:
                raise DiagramError(
                    f"invalid PD code: arc {arc} appears {len(occ)} times")

        over_slot: dict[int, int] = {}
        # role[(ci, slot)] = True if consumed (head) there
        role: dict[tuple[int, int], bool] = {}
        pending: list[int] = []
        for ci, row in enumerate(rows):
            role[(ci, 0)] = True
            role[(ci, 2)] = False
            pending.extend((row[0], row[2]))

        def set_over(ci: int, s_in: int):
            if over_slot.get(ci, s_in) != s_in:
                raise DiagramError("invalid PD code: inconsistent orientation")
            if ci in over_slot:
                return
            over_slot[ci] = s_in
            s_out = (s_in + 2) % 4
            for s, consumed in ((s_in, True), (s_out, False)):
                key = (ci, s)
                if key not in role:
                    role[key] = consumed
                    pending.append(rows[ci][s])

        progress = True
        while progress:
            while pending:
                arc = pending.pop()
                occ = occurrences[arc]
                known = [(k, role[k]) for k in occ if k in role]
                if len(known) == 2 and known[0][1] == known[1][1]:
                    raise DiagramError(
                        f"invalid PD code: arc {arc} oriented inconsistently")
                if len(known) == 1:
                    (kci, kslot), krole = known[0]
                    other = occ[0] if occ[1] == (kci, kslot) else occ[1]
                    oci, oslot = other
                    if other in role:
                        continue
                    if oslot in (1, 3):
                        # other end must take the opposite role
                        set_over(oci, oslot if not krole else (oslot + 2) % 4)
            progress = False
            for ci in range(len(rows)):
                if ci not in over_slot:
                    set_over(ci, 3)
                    progress = True
                    break

        crossings = [Crossing(tuple(rows[ci]), over_slot[ci])
                     for ci in range(len(rows))]
        return Diagram(crossings, free_loops, label)

    @staticmethod
    def parse_pd(text: str, unknot_components: int = 1,
                 label: str | None = None) -> "Diagram":
        """Parse ``X(a,b,c,d)`` tokens; empty text is the unknot."""
        stripped = text.strip()
        rows = []
        consumed_len = 0
        for m in Diagram._PD_TOKEN.finditer(stripped):
            rows.append(tuple(int(g) for g in m.groups()))
            consumed_len += len(m.group(0))
        residue = re.sub(r"[\s,]", "", Diagram._PD_TOKEN.sub("", stripped))
        if residue:
            raise DiagramError(f"invalid PD code: unparsed text {residue!r}")
        if not rows:
            return Diagram([], unknot_components, label)
        return Diagram.from_slots(rows, 0, label)

    # -- edits ------------------------------------------------------------

    def relabeled(self, mapping: dict[int, int]) -> "Diagram":
        return Diagram([x.relabeled(mapping) for x in self.crossings],
                       self.free_loops, self.label, validate=False)

    def mirror(self) -> "Diagram":
        """Switch every crossing (reflection through the plane)."""
        return Diagram([x.switched() for x in self.crossings],
                       self.free_loops, self.label, validate=False)

    def with_switched(self, ci: int) -> "Diagram":
        xs = list(self.crossings)
        xs[ci] = xs[ci].switched()
        return Diagram(xs, self.free_loops, validate=False)

    def with_smoothed(self, ci: int) -> "Diagram":
        """Oriented smoothing at crossing ci (one fewer crossing)."""
        x = self.crossings[ci]
        rest = [c for i, c in enumerate(self.crossings) if i != ci]
        free = self.free_loops
        welds = [(x.under_in, x.over_out), (x.over_in, x.under_out)]
        for wi, (u, w) in enumerate(welds):
            if u == w:
                free += 1
                continue
            # u keeps its tail; w's head elsewhere now reads u
            rest = [c.relabeled({w: u}) for c in rest]
            for wj in range(wi + 1, len(welds)):
                a, b = welds[wj]
                welds[wj] = (u if a == w else a, u if b == w else b)
        return Diagram(rest, free, validate=False)

    def skein_children(self, ci: int) -> tuple["Diagram", "Diagram"]:
        return self.with_switched(ci), self.with_smoothed(ci)

    def shifted(self, offset: int) -> "Diagram":
        return self.relabeled({a: a + offset for a in self.arcs()})

    def connected_sum(self, other: "Diagram") -> "Diagram":
        """Arc-splice composition of two knot diagrams."""
        if not self.is_knot() or not other.is_knot():
            raise DiagramError("connected sum requires knot diagrams")
        if not self.crossings:
            return Diagram(other.crossings, 0,
                           label=self.label, validate=False)
        if not other.crossings:
            return Diagram(self.crossings, 0, label=self.label, validate=False)
        top = max(self.arcs()) + 1
        b = other.shifted(top)
        x_arc = self.crossings[0].slots[0]
        y_arc = b.crossings[0].slots[0]
        heads_a, _ = self._ends()
        heads_b, _ = b._ends()
        a_rows = [list(c.slots) for c in self.crossings]
        b_rows = [list(c.slots) for c in b.crossings]
        ci, si = heads_a[x_arc]
        cj, sj = heads_b[y_arc]
        a_rows[ci][si] = y_arc
        b_rows[cj][sj] = x_arc
        crossings = [Crossing(tuple(r), c.over_slot)
                     for r, c in zip(a_rows, self.crossings)]
        crossings += [Crossing(tuple(r), c.over_slot)
                      for r, c in zip(b_rows, b.crossings)]
        return Diagram(crossings, 0)

    # -- canonical key ----------------------------------------------------

    def canonical_key(self):
        """Relabeling-invariant key for memoization.

        Minimizes the sorted crossing table over every traversal start;
        split pieces are canonicalized independently and sorted.
        """
        pieces, free = self.split()
        if len(pieces) > 1:
            return ("split", free,
                    tuple(sorted(p.canonical_key() for p in pieces)))
        if not self.crossings:
            return ("unlink", free)

        succ = self.strand_successor()
        heads, _ = self._ends()
        arcs = sorted(succ)
        best = None
        for start in arcs:
            relabel: dict[int, int] = {}
            nxt = 0
            pending = start
            while pending is not None:
                a = pending
                while a not in relabel:
                    relabel[a] = nxt
                    nxt += 1
                    a = succ[a]
                pending = None
                if len(relabel) < len(arcs):
                    # deterministic next component: unlabeled arc at the
                    # crossing with the smallest labeled view
                    best_row = None
                    for x in self.crossings:
                        view = tuple(sorted(relabel.get(s, 1 << 30)
                                            for s in x.slots))
                        if view[-1] < (1 << 30):
                            continue  # fully labeled
                        if view[0] == 1 << 30:
                            continue  # untouched crossing
                        cand = [s for s in x.slots if s not in relabel]
                        pick = min(cand)
                        if best_row is None or (view, pick) < best_row:
                            best_row = (view, pick)
                    if best_row is None:
                        pending = min(a for a in arcs if a not in relabel)
                    else:
                        pending = best_row[1]
            table = tuple(sorted(
                (tuple(relabel[s] for s in x.slots), x.over_slot)
                for x in self.crossings))
            if best is None or table < best:
                best = table
        return ("diagram", free, best)

    def __repr__(self):
        name = f" {self.label}" if self.label else ""
        return (f"<Diagram{name}: {self.crossing_count} crossings, "
                f"{self.components} components>")


def from_braid(word: BraidWord, label: str | None = None) -> Diagram:
    """PD code of the braid closure; crossing count equals word length."""
    k = word.strand_count
    current = list(range(1, k + 1))
    initial = list(current)
    next_label = k + 1
    rows: list[tuple[tuple[int, int, int, int], int]] = []
    for gen, power in word.letters:
        i = gen - 1
        u, w = current[i], current[i + 1]
        u2, w2 = next_label, next_label + 1
        next_label += 2
        if power > 0:
            # strand from position i+1 passes over, NE to SW
            rows.append(((u, w2, u2, w), 3))
        else:
            rows.append(((w, u, w2, u2), 1))
        current[i], current[i + 1] = w2, u2
    free = 0
    rename: dict[int, int] = {}
    for pos in range(k):
        if current[pos] == initial[pos]:
            free += 1
        else:
            rename[current[pos]] = initial[pos]
    crossings = [Crossing(tuple(rename.get(a, a) for a in slots), over)
                 for slots, over in rows]
    return Diagram(crossings, free, label)
