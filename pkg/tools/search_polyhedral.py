"""Scan twist-tangle substitutions into crossings of small basic
diagrams (octahedral 6-crossing and 8-crossing alternating braid
closures), bucketing the resulting 9-crossing knots by determinant.
"""

from __future__ import annotations

import itertools
import sys

sys.path.insert(0, "src")

from spiralknots.diagram import BraidWord, Diagram, from_braid
from spiralknots.homflypt import SkeinCache, determinant, homflypt, mfw_bound, simplify
from spiralknots.poly2 import substitute_v_inverse
from spiralknots.tangles import Tangle, twist_vector_tangle, _orient

CACHE = SkeinCache()


def diagram_rows(d: Diagram):
    """Unoriented rows (slots CCW, over diagonal is {1,3}) of a diagram."""
    return [(x.slots, 1) for x in d.crossings]


def substitute(rows, subs):
    """Replace crossings by twist tangles.

    subs: {crossing_index: (twist_count, rotation)}; the tangle's corner
    cycle [sw, se, ne, nw] is glued to slots (0..3) shifted by rotation.
    """
    out = []
    next_arc = 1 + max(a for slots, _ in rows for a in slots)
    loops = 0
    for ci, (slots, od) in enumerate(rows):
        if ci not in subs:
            out.append((slots, od))
            continue
        count, rot = subs[ci]
        t = twist_vector_tangle([count])
        t._shift(next_arc)
        next_arc = t.next_arc
        corners = [t.sw, t.se, t.ne, t.nw]
        rename = {}
        for k in range(4):
            rename[corners[(k + rot) % 4]] = slots[k]
        trows = [(tuple(rename.get(a, a) for a in s), o) for s, o in t.rows]
        out.extend(trows)
        loops += t.closed_loops
    return out, loops


def scan(base: Diagram, sub_count: int, target_crossings: int = 9):
    rows = diagram_rows(base)
    n = len(rows)
    buckets = {}
    for slots_chosen in itertools.combinations(range(n), sub_count):
        for counts in itertools.product((2, -2), repeat=sub_count):
            for rots in itertools.product(range(4), repeat=sub_count):
                subs = {ci: (c, r) for ci, c, r in
                        zip(slots_chosen, counts, rots)}
                new_rows, loops = substitute(rows, subs)
                if len(new_rows) != target_crossings:
                    continue
                try:
                    d = _orient(new_rows, loops, None)
                except Exception:
                    continue
                if d.components != 1 or not d.euler_check():
                    continue
                s = simplify(d)
                if s.crossing_count != target_crossings:
                    continue
                p = homflypt(d, CACHE)
                det = determinant(p)
                entry = buckets.setdefault(det, [])
                if not any(p == q or substitute_v_inverse(p, True) == q
                           for q, _, _ in entry):
                    entry.append((p, d, subs))
    return buckets


if __name__ == "__main__":
    borromean = from_braid(BraidWord(3, ((1, 1), (2, -1)) * 3), "6star")
    star8 = from_braid(BraidWord(3, ((1, 1), (2, -1)) * 4), "8star")
    which = sys.argv[1] if len(sys.argv) > 1 else "all"
    jobs = []
    if which in ("all", "6.3"):
        jobs.append(("6* with 3 subs", borromean, 3))
    if which in ("all", "8.1"):
        jobs.append(("8* with 1 sub", star8, 1))
    for title, base, k in jobs:
        print(f"== {title} ==")
        buckets = scan(base, k)
        for det in sorted(buckets):
            entries = buckets[det]
            mfws = [mfw_bound(p) for p, _, _ in entries]
            alts = [d.is_alternating() for _, d, _ in entries]
            ex = [s for _, _, s in entries[:3]]
            print(f"det={det}: {len(entries)} distinct mfw={mfws} alt={alts} {ex}")
