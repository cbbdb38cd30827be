"""Generate the bundled knot table (src/spiralknots/data/knots.csv).

Every PD code is built from an explicit construction (twist-vector
closure, tangle-sum, braid closure, or a twist substitution into a small
basic diagram) and then cross-validated: determinant against the
standard value, crossing count, alternating flag, Reidemeister
irreducibility, planarity, and MFW-vs-braid-index consistency.  Braid
index is the computed MFW bound except for the two knots (9_42, 9_49)
where the bound is known to undershoot by one.

Run from the repository root:  python3 tools/build_table.py
"""

from __future__ import annotations

import csv
import itertools
import sys
from pathlib import Path

sys.path.insert(0, "src")

from spiralknots.diagram import BraidWord, Diagram, from_braid
from spiralknots.homflypt import (SkeinCache, determinant, homflypt,
                                  mfw_bound, simplify)
from spiralknots.poly2 import substitute_v_inverse
from spiralknots.tangles import montesinos_knot, rational_knot, twist_vector_tangle, _orient

CACHE = SkeinCache()

# -- standard per-knot data used for validation and table values --------

EXPECTED_DET = {
    "3_1": 3, "4_1": 5, "5_1": 5, "5_2": 7, "6_1": 9, "6_2": 11, "6_3": 13,
    "7_1": 7, "7_2": 11, "7_3": 13, "7_4": 15, "7_5": 17, "7_6": 19, "7_7": 21,
    "8_1": 13, "8_2": 17, "8_3": 17, "8_4": 19, "8_5": 21, "8_6": 23,
    "8_7": 23, "8_8": 25, "8_9": 25, "8_10": 27, "8_11": 27, "8_12": 29,
    "8_13": 29, "8_14": 31, "8_15": 33, "8_16": 35, "8_17": 37, "8_18": 45,
    "8_19": 3, "8_20": 9, "8_21": 15,
    "9_1": 9, "9_2": 15, "9_3": 19, "9_4": 21, "9_5": 23, "9_6": 27,
    "9_7": 29, "9_8": 31, "9_9": 31, "9_10": 33, "9_11": 33, "9_12": 35,
    "9_13": 37, "9_14": 37, "9_15": 39, "9_16": 39, "9_17": 39, "9_18": 41,
    "9_19": 41, "9_20": 41, "9_21": 43, "9_22": 43, "9_23": 45, "9_24": 45,
    "9_25": 47, "9_26": 47, "9_27": 49, "9_28": 51, "9_29": 51, "9_30": 53,
    "9_31": 55, "9_32": 59, "9_33": 61, "9_34": 69, "9_35": 27, "9_36": 37,
    "9_37": 45, "9_38": 57, "9_39": 55, "9_40": 75, "9_41": 49, "9_42": 7,
    "9_43": 13, "9_44": 17, "9_45": 23, "9_46": 9, "9_47": 27, "9_48": 27,
    "9_49": 25,
}

RATIONAL = {
    "3_1": [3], "4_1": [2, 2], "5_1": [5], "5_2": [3, 2], "6_1": [4, 2],
    "6_2": [3, 1, 2], "6_3": [2, 1, 1, 2], "7_1": [7], "7_2": [5, 2],
    "7_3": [4, 3], "7_4": [3, 1, 3], "7_5": [3, 2, 2], "7_6": [2, 2, 1, 2],
    "7_7": [2, 1, 1, 1, 2], "8_1": [6, 2], "8_2": [5, 1, 2], "8_3": [4, 4],
    "8_4": [4, 1, 3], "8_6": [3, 3, 2], "8_7": [4, 1, 1, 2],
    "8_8": [2, 3, 1, 2], "8_9": [3, 1, 1, 3], "8_11": [3, 2, 1, 2],
    "8_12": [2, 2, 2, 2], "8_13": [3, 1, 1, 1, 2], "8_14": [2, 2, 1, 1, 2],
    "9_1": [9], "9_2": [7, 2], "9_3": [6, 3], "9_4": [5, 4],
    "9_5": [5, 1, 3], "9_6": [5, 2, 2], "9_7": [3, 4, 2],
    "9_8": [2, 4, 1, 2], "9_9": [4, 2, 3], "9_10": [3, 3, 3],
    "9_11": [4, 1, 2, 2], "9_12": [4, 2, 1, 2], "9_13": [3, 2, 1, 3],
    "9_14": [4, 1, 1, 1, 2], "9_15": [2, 3, 2, 2], "9_17": [2, 1, 3, 1, 2],
    "9_18": [3, 2, 2, 2], "9_19": [2, 3, 1, 1, 2], "9_20": [3, 1, 2, 1, 2],
    "9_21": [3, 1, 1, 2, 2], "9_23": [2, 2, 1, 2, 2],
    "9_26": [3, 1, 1, 1, 1, 2], "9_27": [2, 1, 2, 1, 1, 2],
    "9_31": [2, 1, 1, 1, 1, 1, 2],
}

MONTESINOS = {
    "8_5": ([[3], [3], [2]], 0), "8_10": ([[3], [2, 1], [2]], 0),
    "8_15": ([[2, 1], [2, 1], [2]], 0), "8_20": ([[3], [-3], [2]], 0),
    "8_21": ([[2, 1], [2, 1], [-2]], 0),
    "9_16": ([[3], [3], [2]], 1), "9_22": ([[2, 1, 1], [3], [2]], 0),
    "9_24": ([[3], [2, 1], [2]], 1), "9_25": ([[2, 2], [2, 1], [2]], 0),
    "9_28": ([[2, 1], [2, 1], [2]], 1), "9_30": ([[2, 1, 1], [2, 1], [2]], 0),
    "9_35": ([[3], [3], [3]], 0), "9_36": ([[2, 2], [3], [2]], 0),
    "9_37": ([[2, 1], [2, 1], [3]], 0), "9_42": ([[2, 2], [3], [-2]], 0),
    "9_43": ([[2, 1, 1], [3], [-2]], 0), "9_44": ([[2, 2], [2, 1], [-2]], 0),
    "9_45": ([[2, 1, 1], [2, 1], [-2]], 0), "9_46": ([[3], [3], [-3]], 0),
}

# column vectors of odd length are quarter-turned by montesinos_knot;
# [2,1,1] ends on a right stage, so feed it pre-rotated via odd length
MONTESINOS["9_22"] = ([[2, 1, 1], [3], [2]], 0)

THREE_CURLY = ["6_1", "7_2", "7_6", "8_4", "8_6", "8_8", "8_15",
               "9_4", "9_7", "9_11", "9_20", "9_24", "9_28"]
FOUR_CURLY = ["8_1", "8_3", "8_12", "9_2", "9_8", "9_12", "9_14", "9_15",
              "9_19", "9_21", "9_25", "9_39", "9_41"]
SUSPECTED_SP5 = ["9_5", "9_35", "9_37"]
TWO_BRAID = ["3_1", "5_1", "7_1", "9_1"]
MFW_UNDERSHOOT = {"9_42": 4, "9_49": 4}

STICK = {"3_1": 6, "4_1": 7, "5_1": 8, "5_2": 8, "6_1": 8, "6_2": 8,
         "6_3": 8, "7_1": 9, "7_2": 9, "7_3": 9, "7_4": 9, "7_5": 9,
         "7_6": 9, "7_7": 9, "8_19": 8, "8_20": 8, "9_46": 9}
STICK_PAPER = {"9_46"}

NONALTERNATING = {"8_19", "8_20", "8_21", "9_42", "9_43", "9_44", "9_45",
                  "9_46", "9_47", "9_48", "9_49"}


def poly_of(d):
    return homflypt(d, CACHE)


def matches(p, q) -> bool:
    return p == q or substitute_v_inverse(p, negate_z=True) == q


def matches_any(p, known: dict) -> str | None:
    for name, (d, q) in known.items():
        if matches(p, q):
            return name
    return None


# -- searches ------------------------------------------------------------

def canonical_cyclic(word):
    return min(word[i:] + word[:i] for i in range(len(word)))


def alternating_braid_knots(strands: int, length: int):
    alphabet = [(g, 1 if g % 2 == 1 else -1) for g in range(1, strands)]
    seen = set()
    for word in itertools.product(alphabet, repeat=length):
        if len({g for g, _ in word}) != strands - 1:
            continue
        key = canonical_cyclic(word)
        if key in seen:
            continue
        seen.add(key)
        d = from_braid(BraidWord(strands, key))
        if d.components != 1:
            continue
        if simplify(d).crossing_count != length:
            continue
        yield d


def substituted_diagrams(base: Diagram, sub_count: int, target: int):
    rows = [(x.slots, 1) for x in base.crossings]
    n = len(rows)
    for chosen in itertools.combinations(range(n), sub_count):
        for counts in itertools.product((2, -2), repeat=sub_count):
            for rots in itertools.product(range(4), repeat=sub_count):
                out = []
                next_arc = 1 + max(a for s, _ in rows for a in s)
                loops = 0
                ok = True
                for ci, (slots, od) in enumerate(rows):
                    if ci not in chosen:
                        out.append((slots, od))
                        continue
                    i = chosen.index(ci)
                    t = twist_vector_tangle([counts[i]])
                    t._shift(next_arc)
                    next_arc = t.next_arc
                    corners = [t.sw, t.se, t.ne, t.nw]
                    rename = {corners[(k + rots[i]) % 4]: slots[k]
                              for k in range(4)}
                    out.extend((tuple(rename.get(a, a) for a in s), o)
                               for s, o in t.rows)
                    loops += t.closed_loops
                if len(out) != target:
                    continue
                try:
                    d = _orient(out, loops, None)
                except Exception:
                    continue
                if d.components != 1 or not d.euler_check():
                    continue
                if simplify(d).crossing_count != target:
                    continue
                yield d


def collect_new(diagrams, known: dict, want: dict, check):
    """Assign diagrams to names in ``want`` (name -> det) via the checks."""
    found: dict[str, tuple[Diagram, object]] = {}
    for d in diagrams:
        p = poly_of(d)
        det = determinant(p)
        targets = [nm for nm, dv in want.items() if dv == det]
        if not targets:
            continue
        if matches_any(p, known) or matches_any(p, found):
            continue
        hits = [nm for nm in targets if nm not in found and check(nm, p, d)]
        if len(hits) == 1:
            found[hits[0]] = (d, p)
        elif len(hits) > 1:
            raise SystemExit(f"ambiguous assignment {hits} for det {det}")
    return found


def main():
    known: dict[str, tuple[Diagram, object]] = {}
    report = []

    def add(name, d, provenance):
        d = Diagram(d.crossings, d.free_loops, name)
        p = poly_of(d)
        det = determinant(p)
        assert det == EXPECTED_DET[name], \
            f"{name}: det {det} != {EXPECTED_DET[name]}"
        cr = int(name.split("_")[0])
        assert d.crossing_count == cr, f"{name}: crossing count {d.crossing_count}"
        assert d.components == 1, name
        assert d.euler_check(), name
        assert simplify(d).crossing_count == cr, f"{name}: reducible"
        alt = d.is_alternating()
        assert alt == (name not in NONALTERNATING), f"{name}: alternating={alt}"
        rt = Diagram.parse_pd(d.to_pd_text())
        assert matches(poly_of(rt), p), f"{name}: PD round-trip"
        dup = matches_any(p, known)
        assert dup is None, f"{name}: polynomial duplicates {dup}"
        known[name] = (d, p)
        report.append((name, provenance))

    for name, digits in sorted(RATIONAL.items()):
        add(name, rational_knot(digits, name),
            "pd=twist-vector " + "".join(map(str, digits)))
    for name, (cols, e) in sorted(MONTESINOS.items()):
        tag = ",".join("".join(str(x) for x in c) for c in cols)
        if e:
            tag += "+" if e > 0 else "-"
        add(name, montesinos_knot(cols, e, name), f"pd=tangle-sum {tag}")
    add("8_19", from_braid(BraidWord(3, ((1, 1), (2, 1)) * 4), "8_19"),
        "pd=braid (s1 s2)^4")

    # 8-crossing 3-braid stragglers, unique by determinant
    want8 = {"8_16": 35, "8_17": 37, "8_18": 45}
    found = collect_new(alternating_braid_knots(3, 8), known, want8,
                        lambda nm, p, d: d.is_alternating())
    assert set(found) == set(want8), f"3-braid search missing {set(want8)-set(found)}"
    for nm, (d, p) in sorted(found.items()):
        add(nm, d, "pd=alternating 3-braid closure")

    # 9-crossing alternating 4-braid closures
    want9a = {"9_29": 51, "9_32": 59, "9_33": 61, "9_34": 69, "9_40": 75}
    found = collect_new(alternating_braid_knots(4, 9), known, want9a,
                        lambda nm, p, d: d.is_alternating())
    assert set(found) == set(want9a), f"4-braid search missing {set(want9a)-set(found)}"
    for nm, (d, p) in sorted(found.items()):
        add(nm, d, "pd=alternating 4-braid closure")

    # twist substitutions into the 6-crossing octahedral closure
    borromean = from_braid(BraidWord(3, ((1, 1), (2, -1)) * 3))
    want6 = {"9_38": 57, "9_39": 55, "9_41": 49, "9_48": 27, "9_49": 25}

    def check6(nm, p, d):
        if nm in ("9_38", "9_39", "9_41"):
            if not d.is_alternating():
                return False
            return mfw_bound(p) == (4 if nm == "9_38" else 5)
        if nm == "9_48":
            return not d.is_alternating() and mfw_bound(p) == 4
        if nm == "9_49":
            return not d.is_alternating() and mfw_bound(p) == 3
        return False

    found6 = collect_new(substituted_diagrams(borromean, 3, 9), known,
                         want6, check6)

    # one twist substitution into the 8-crossing star closure -> 9_47
    star8 = from_braid(BraidWord(3, ((1, 1), (2, -1)) * 4))
    known_plus = dict(known)
    known_plus.update(found6)
    found8 = collect_new(substituted_diagrams(star8, 1, 9), known_plus,
                         {"9_47": 27},
                         lambda nm, p, d: not d.is_alternating())
    assert set(found6) == set(want6), f"6*-scan missing {set(want6)-set(found6)}"
    assert set(found8) == {"9_47"}, "8*-scan missing 9_47"
    for nm, (d, p) in sorted(found6.items()):
        add(nm, d, "pd=octahedral diagram with twist substitutions")
    for nm, (d, p) in sorted(found8.items()):
        add(nm, d, "pd=8-star diagram with twist substitution"
            "; name pair 9_47/9_48 fixed by base form")

    assert len(known) == 84, f"table has {len(known)} knots"

    # braid index: MFW bound, with the two known undershoots corrected
    beta = {}
    for name, (d, p) in known.items():
        m = mfw_bound(p)
        beta[name] = MFW_UNDERSHOOT.get(name, m)
    for name in TWO_BRAID:
        assert beta[name] == 2, (name, beta[name])
    for name in THREE_CURLY:
        assert beta[name] == 4, (name, beta[name])
    for name in FOUR_CURLY + SUSPECTED_SP5:
        assert beta[name] == 5, (name, beta[name])
    twist_beta = {"3_1": 2, "4_1": 3, "5_2": 3, "6_1": 4, "7_2": 4,
                  "8_1": 5, "9_2": 5}
    for name, b in twist_beta.items():
        assert beta[name] == b, (name, beta[name], b)

    rows = []

    def put(name, crossings, bridge, braid, stick, sp, psb, prov):
        rows.append({
            "name": name, "crossings": crossings,
            "pd": known[name][0].to_pd_text() if name != "0_1" else "",
            "bridge": bridge, "braid": braid,
            "two_bridge": "yes" if bridge == 2 else "no",
            "stick": stick if stick is not None else "",
            "paper_sp": sp if sp is not None else "",
            "paper_psb": psb if psb is not None else "",
            "provenance": prov,
        })

    put("0_1", 0, 1, 1, 3, 1, 1, "pd=empty; values=convention")
    prov_by_name = dict(report)
    for name in sorted(known, key=lambda n: (int(n.split("_")[0]),
                                             int(n.split("_")[1]))):
        cr = int(name.split("_")[0])
        bridge = 2 if name in RATIONAL else 3
        b = beta[name]
        # spiral index: 2-braid knots 2; all beta=3 knots 3; curly lists
        # from the classification; otherwise sp = beta (not curly)
        if name in THREE_CURLY:
            sp, sp_src = 3, "paper-curly3"
        elif name in FOUR_CURLY:
            sp, sp_src = 4, "paper-curly4"
        elif name in SUSPECTED_SP5:
            sp, sp_src = None, "paper-open(suspected 5)"
        elif name == "9_46":
            sp, sp_src = 4, "paper"
        else:
            sp, sp_src = b, "paper-noncurly"
        # projective superbridge where derivable
        if b == 2:
            psb, psb_src = 2, "derived-2braid"
        elif bridge == 2 and b > 2:
            psb, psb_src = 3, "derived-2bridge"
        elif sp == 3:
            psb, psb_src = 3, "derived-3spiral"
        elif name == "9_46":
            psb, psb_src = 4, "paper"
        else:
            psb, psb_src = None, ""
        stick = STICK.get(name)
        prov = [prov_by_name[name], "b=std-tables",
                "beta=mfw" if name not in MFW_UNDERSHOOT else "beta=std-tables",
                f"sp={sp_src}"]
        if psb_src:
            prov.append(f"psb={psb_src}")
        if stick is not None:
            prov.append("stick=paper" if name in STICK_PAPER
                        else "stick=std-tables")
        put(name, cr, bridge, b, stick, sp, psb, "; ".join(prov))

    out = Path("src/spiralknots/data/knots.csv")
    with out.open("w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=["name", "crossings", "pd",
                                           "bridge", "braid", "two_bridge",
                                           "stick", "paper_sp", "paper_psb",
                                           "provenance"])
        w.writeheader()
        w.writerows(rows)
    print(f"wrote {out} with {len(rows)} rows "
          f"(cache: {CACHE.hits} hits / {CACHE.misses} misses)")
    by_beta = {}
    for name, b in beta.items():
        by_beta.setdefault(b, []).append(name)
    for b in sorted(by_beta):
        print(f"beta={b}: {len(by_beta[b])} knots")


if __name__ == "__main__":
    main()
