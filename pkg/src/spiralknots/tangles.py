"""Rational and Montesinos-style tangle assembly into diagrams.

A tangle is a partial diagram with four boundary stubs (nw, ne, sw, se).
Crossings are held unoriented (cyclic slot order plus which diagonal is
the over strand) and oriented only when the finished tangle is closed
into a diagram.

Twist conventions are fixed so that all-positive twist vectors yield
alternating diagrams; column entries follow the twist-vector reading in
which ``[2, 1]`` is the 3/2 tangle (2 bottom twists then 1 right twist).
"""

from __future__ import annotations

from fractions import Fraction

from .diagram import Crossing, Diagram, DiagramError


def continued_fraction_value(digits: list[int]) -> Fraction:
    """Value a_k + 1/(a_{k-1} + 1/(... + 1/a_1)) of a twist vector."""
    if not digits:
        return Fraction(0)
    value = Fraction(digits[-1])
    for a in reversed(digits[:-1]):
        if value == 0:
            value = Fraction(10**9)  # guard; not hit by table vectors
        value = a + 1 / value
    return value


class Tangle:
    """Mutable 4-ended tangle under twist and join operations."""

    def __init__(self):
        self.rows: list[tuple[tuple[int, int, int, int], int]] = []
        self.nw = self.ne = self.sw = self.se = 0
        self.next_arc = 1
        self.closed_loops = 0

    @staticmethod
    def zero() -> "Tangle":
        t = Tangle()
        top, bottom = t._fresh(), t._fresh()
        t.nw = t.ne = top
        t.sw = t.se = bottom
        return t

    def _fresh(self) -> int:
        a = self.next_arc
        self.next_arc += 1
        return a

    def _shift(self, offset: int):
        self.rows = [(tuple(a + offset for a in slots), od)
                     for slots, od in self.rows]
        self.nw += offset
        self.ne += offset
        self.sw += offset
        self.se += offset
        self.next_arc += offset

    def _rename(self, old: int, new: int):
        if old == new:
            self.closed_loops += 1
            return
        self.rows = [(tuple(new if a == old else a for a in slots), od)
                     for slots, od in self.rows]
        for end in ("nw", "ne", "sw", "se"):
            if getattr(self, end) == old:
                setattr(self, end, new)

    def twist_bottom(self, count: int):
        """|count| crossings between sw and se; sign picks handedness."""
        for _ in range(abs(count)):
            p, q = self.sw, self.se
            u, w = self._fresh(), self._fresh()
            # crossing below the tangle: NW=p NE=q SW=u SE=w, CCW order
            slots = (p, u, w, q)
            over_diag = 0 if count > 0 else 1
            self.rows.append((slots, over_diag))
            self.sw, self.se = u, w

    def twist_right(self, count: int):
        """|count| crossings between ne and se."""
        for _ in range(abs(count)):
            r, s = self.ne, self.se
            u, w = self._fresh(), self._fresh()
            # crossing to the right: NW=r SW=s NE=u SE=w, CCW order
            slots = (r, s, w, u)
            over_diag = 0 if count > 0 else 1
            self.rows.append((slots, over_diag))
            self.ne, self.se = u, w

    def rotate_ccw(self):
        self.nw, self.sw, self.se, self.ne = self.ne, self.nw, self.sw, self.se

    def join_right(self, other: "Tangle"):
        """Attach ``other`` on the right (ne-nw and se-sw welds)."""
        other = other_copy(other)
        other._shift(self.next_arc)
        self.rows += other.rows
        self.closed_loops += other.closed_loops
        self.next_arc = other.next_arc
        ne, se = self.ne, self.se
        self.ne, self.se = other.ne, other.se
        self._rename(other.nw, ne)
        self._rename(other.sw, se)

    def numerator_closure(self, label: str | None = None) -> Diagram:
        """Close top ends together and bottom ends together."""
        self._rename(self.ne, self.nw)
        self._rename(self.se, self.sw)
        return _orient(self.rows, self.closed_loops, label)


def other_copy(t: Tangle) -> Tangle:
    c = Tangle()
    c.rows = list(t.rows)
    c.nw, c.ne, c.sw, c.se = t.nw, t.ne, t.sw, t.se
    c.next_arc = t.next_arc
    c.closed_loops = t.closed_loops
    return c


def _orient(rows, closed_loops: int, label: str | None) -> Diagram:
    """Pick strand orientations and emit an oriented Diagram."""
    occurrences: dict[int, list[tuple[int, int]]] = {}
    for ci, (slots, _) in enumerate(rows):
        for si, arc in enumerate(slots):
            occurrences.setdefault(arc, []).append((ci, si))
    for arc, occ in occurrences.items():
        if len(occ) != 2:
            raise DiagramError(f"tangle not closed: arc {arc} has {len(occ)} ends")

    # head[(ci, si)] = True when the strand enters the crossing there
    role: dict[tuple[int, int], bool] = {}
    for start_arc in sorted(occurrences):
        if any(k in role for k in occurrences[start_arc]):
            continue
        # walk the component, entering at slot k and leaving at k+2
        ci, si = occurrences[start_arc][0]
        arc = start_arc
        while (ci, si) not in role:
            role[(ci, si)] = True
            out_slot = (si + 2) % 4
            role[(ci, out_slot)] = False
            arc = rows[ci][0][out_slot]
            a, b = occurrences[arc]
            ci, si = b if a == (ci, out_slot) else a

    crossings = []
    for ci, (slots, over_diag) in enumerate(rows):
        under_slots = (1, 3) if over_diag == 0 else (0, 2)
        under_in = next(s for s in under_slots if role[(ci, s)])
        rotated = tuple(slots[(under_in + k) % 4] for k in range(4))
        over_in_old = next(s for s in ((under_in + 1) % 4, (under_in + 3) % 4)
                           if role[(ci, s)])
        over_slot = (over_in_old - under_in) % 4
        crossings.append(Crossing(rotated, over_slot))
    return Diagram(crossings, closed_loops, label)


def twist_vector_tangle(digits: list[int]) -> Tangle:
    """Build the rational tangle of a twist vector.

    Entries alternate bottom twists (first, third, ...) and right twists
    (second, fourth, ...).  Entries may be negative; zero entries skip a
    stage, so ``[2, 0]`` is the rotated form of ``[2]``.
    """
    t = Tangle.zero()
    for i, a in enumerate(digits):
        if i % 2 == 0:
            t.twist_right(a)
        else:
            t.twist_bottom(a)
    return t


def rational_knot(digits: list[int], label: str | None = None) -> Diagram:
    """Numerator closure of a twist-vector tangle.

    Vectors ending on a bottom stage (even length) are rotated a quarter
    turn first; closing them directly would undo the final twists.
    """
    t = twist_vector_tangle(digits)
    if len(digits) % 2 == 0:
        t.rotate_ccw()
    return t.numerator_closure(label)


def montesinos_column(digits: list[int]) -> Tangle:
    """Twist-vector tangle in column position for a tangle sum.

    Odd-length vectors end on a right stage and take a quarter turn;
    even-length vectors are already column-like but need their mirror to
    keep the twist handedness aligned with single-digit columns.
    """
    if len(digits) % 2 == 1:
        col = twist_vector_tangle(digits)
        col.rotate_ccw()
    else:
        col = twist_vector_tangle([-a for a in digits])
    return col


def montesinos_knot(columns: list[list[int]], extra_twists: int = 0,
                    label: str | None = None) -> Diagram:
    """Tangle-sum knot: twist-vector columns joined left to right.

    ``extra_twists = k`` adds |k| crossings between the two right-hand
    closure strands (the ``+``/``-`` decoration on three-column forms,
    with ``+1`` the handedness that keeps all-positive forms alternating).
    """
    total: Tangle | None = None
    for digits in columns:
        col = montesinos_column(digits)
        if total is None:
            total = col
        else:
            total.join_right(col)
    assert total is not None
    total.twist_right(-extra_twists)
    return total.numerator_closure(label)
