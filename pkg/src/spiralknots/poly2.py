"""Exact two-variable Laurent polynomials over the integers.

Values live in Z[v, v^-1, z, z^-1], the coefficient domain used by the
skein evaluator.  A polynomial is a map (v_exponent, z_exponent) -> int
with no zero coefficients stored, so equality of maps is equality of
polynomials.

Text form: terms ``c*v^a*z^b`` joined by `` + ``, sorted by (a, b).
``parse`` round-trips ``to_text`` exactly.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping


class LaurentPoly2:
    """Immutable Laurent polynomial in (v, z) with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        if terms:
            for (a, b), c in terms.items():
                if c:
                    clean[(int(a), int(b))] = int(c)
        self.terms = clean

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly2":
        return LaurentPoly2()

    @staticmethod
    def one() -> "LaurentPoly2":
        return LaurentPoly2({(0, 0): 1})

    @staticmethod
    def monomial(coeff: int, v_exp: int = 0, z_exp: int = 0) -> "LaurentPoly2":
        return LaurentPoly2({(v_exp, z_exp): coeff})

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return LaurentPoly2(out)

    def __sub__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        return self + (-other)

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2({k: -c for k, c in self.terms.items()})

    def __mul__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return LaurentPoly2(out)

    def __pow__(self, n: int) -> "LaurentPoly2":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = LaurentPoly2.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPoly2) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"LaurentPoly2({self.to_text()!r})"

    # -- queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def v_exponents(self) -> Iterable[int]:
        return (a for a, _ in self.terms)

    def evaluate_int(self, v_squared: int, z_squared: int) -> int:
        """Evaluate at integer v^2 and z^2.

        Only valid when every v-exponent and z-exponent is even, which
        holds for knot skein values; used for determinant-style checks.
        """
        def ipow(base: int, e: int) -> int:
            if e >= 0:
                return base ** e
            if base in (1, -1):
                return base ** (-e)
            raise ValueError("negative exponent at non-unit base")

        total = 0
        for (a, b), c in self.terms.items():
            if a % 2 or b % 2:
                raise ValueError("odd exponent; integer evaluation undefined")
            total += c * ipow(v_squared, a // 2) * ipow(z_squared, b // 2)
        return total

    # -- text form ------------------------------------------------------

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms):
            parts.append(f"{self.terms[(a, b)]}*v^{a}*z^{b}")
        return " + ".join(parts)

    _TERM_RE = re.compile(r"^(-?\d+)\*v\^(-?\d+)\*z\^(-?\d+)$")

    @staticmethod
    def parse(text: str) -> "LaurentPoly2":
        text = text.strip()
        if text == "0":
            return LaurentPoly2.zero()
        terms: dict[tuple[int, int], int] = {}
        for part in text.split(" + "):
            m = LaurentPoly2._TERM_RE.match(part.strip())
            if not m:
                raise ValueError(f"bad polynomial term: {part!r}")
            c, a, b = (int(g) for g in m.groups())
            key = (a, b)
            if key in terms:
                raise ValueError(f"duplicate term for exponents {key}")
            terms[key] = c
        return LaurentPoly2(terms)


def combine(a: LaurentPoly2, b: LaurentPoly2, kind: str) -> LaurentPoly2:
    """Exact add/subtract/multiply, kept as a named entry point."""
    if kind == "add":
        return a + b
    if kind == "subtract":
        return a - b
    if kind == "multiply":
        return a * b
    raise ValueError(f"unknown combine kind: {kind!r}")


def v_breadth(p: LaurentPoly2) -> int:
    """Max minus min v-exponent over nonzero terms."""
    if p.is_zero():
        raise ValueError("breadth undefined for the zero polynomial")
    exps = [a for a, _ in p.terms]
    return max(exps) - min(exps)


def substitute_v_inverse(p: LaurentPoly2, negate_z: bool = False) -> LaurentPoly2:
    """Map v -> v^-1, optionally z -> -z (mirror-image transform)."""
    out: dict[tuple[int, int], int] = {}
    for (a, b), c in p.terms.items():
        if negate_z and b % 2:
            c = -c
        out[(-a, b)] = c
    return LaurentPoly2(out)


ZERO = LaurentPoly2.zero()
ONE = LaurentPoly2.one()
