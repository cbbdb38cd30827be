"""Enumerate alternating braid closures and bucket irreducible knots by
determinant.  Used to pin down table diagrams that have no convenient
twist-vector form; results are frozen into the bundled table by
build_table.py.
"""

from __future__ import annotations

import itertools
import sys

sys.path.insert(0, "src")

from spiralknots.diagram import BraidWord, from_braid
from spiralknots.homflypt import SkeinCache, determinant, homflypt, mfw_bound, simplify
from spiralknots.poly2 import substitute_v_inverse

CACHE = SkeinCache()


def canonical_cyclic(word: tuple) -> tuple:
    return min(word[i:] + word[:i] for i in range(len(word)))


def alternating_words(strands: int, length: int):
    letters = [(g, 1 if g % 2 else 1) for g in range(1, strands)]
    alphabet = [(g, 1 if g % 2 == 1 else -1) for g in range(1, strands)]
    seen = set()
    for word in itertools.product(alphabet, repeat=length):
        gens = {g for g, _ in word}
        if len(gens) != strands - 1:
            continue
        key = canonical_cyclic(word)
        if key in seen:
            continue
        seen.add(key)
        yield key


def survey(strands: int, length: int):
    out = {}
    for word in alternating_words(strands, length):
        d = from_braid(BraidWord(strands, word))
        if d.components != 1:
            continue
        s = simplify(d)
        if s.crossing_count != length:
            continue
        p = homflypt(d, CACHE)
        det = determinant(p)
        out.setdefault(det, []).append((word, p, d))
    return out


def poly_matches(p, q) -> bool:
    return p == q or substitute_v_inverse(p, negate_z=True) == q


if __name__ == "__main__":
    strands = int(sys.argv[1])
    length = int(sys.argv[2])
    buckets = survey(strands, length)
    for det in sorted(buckets):
        entries = buckets[det]
        distinct = []
        for word, p, d in entries:
            if not any(poly_matches(p, q) for _, q, _ in distinct):
                distinct.append((word, p, d))
        words = ["".join(f"{g}{'+' if s>0 else '-'}" for g, s in w)
                 for w, _, _ in distinct[:4]]
        mfws = [mfw_bound(p) for _, p, _ in distinct]
        print(f"det={det}: {len(distinct)} distinct (mfw={mfws}) e.g. {words}")
