"""Quasi-polynomial closed forms for the family counts.

For fixed n the doubled necklace sum is a polynomial of degree 2(n-1) in k
plus lower-degree corrections that switch on when small divisors divide k:

    f(k) = base(k) + sum_d [g_d(k)]_{d | k},   2 <= d <= 2n.

``reference_quasipoly`` returns the previously reported closed forms for
n = 3 and n = 5 verbatim (the n = 5 coefficients are known to be wrong;
they are kept so the discrepancy can be machine-checked).
``derive_quasipoly`` re-derives the closed form from exact counts with
rational Newton interpolation and reports term-by-term differences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .counting import count_C_formula
from .errors import FitInconsistent, InvalidN, UnsupportedN

Poly = tuple[Fraction, ...]  # low-to-high coefficients


def _poly_eval(coeffs: Poly, k: int) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * k + c
    return acc


def _poly_trim(coeffs: list[Fraction]) -> Poly:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _poly_sub(a: Poly, b: Poly) -> Poly:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _poly_trim(out)


def _format_poly(coeffs: Poly, var: str = "k") -> str:
    if not coeffs:
        return "0"
    parts = []
    for power in range(len(coeffs) - 1, -1, -1):
        c = coeffs[power]
        if c == 0:
            continue
        term = str(abs(c)) if power == 0 else (
            f"{var}" if abs(c) == 1 else f"{abs(c)}*{var}")
        if power > 1:
            term += f"^{power}"
        parts.append(("- " if c < 0 else "+ ") + term)
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


@dataclass(frozen=True)
class QuasiPolynomial:
    """Base polynomial plus divisor-gated periodic corrections."""

    base: Poly
    terms: tuple[tuple[int, Poly], ...]  # (divisor d, polynomial), d >= 2

    def evaluate(self, k: int) -> Fraction:
        value = _poly_eval(self.base, k)
        for d, poly in self.terms:
            if k % d == 0:
                value += _poly_eval(poly, k)
        return value

    def evaluate_int(self, k: int) -> int:
        value = self.evaluate(k)
        if value.denominator != 1:
            raise FitInconsistent(f"non-integer value {value} at k={k}")
        return int(value)

    def __str__(self) -> str:
        text = _format_poly(self.base)
        for d, poly in self.terms:
            text += f" + [{_format_poly(poly)}]_({d}|k)"
        return text


def evaluate(qp: QuasiPolynomial, k: int) -> Fraction:
    return qp.evaluate(k)


def reference_quasipoly(n: int) -> QuasiPolynomial:
    """Fixed reference closed forms (kept verbatim for cross-checking)."""
    F = Fraction
    if n == 3:
        return QuasiPolynomial(
            base=(F(57, 5), F(61, 6), F(67, 12), F(5, 6), F(1, 60)),
            terms=((2, (F(1),)), (5, (F(8, 5),))),
        )
    if n == 5:
        return QuasiPolynomial(
            base=(F(1682, 126), F(10921, 315), F(3124847, 45360), F(245269, 8640),
                  F(0), F(973, 180), F(11527, 30240), F(11, 1680), F(1, 181440)),
            terms=(
                (2, (F(3, 2), F(1, 4))),
                (3, (F(18, 9), F(10, 9), F(2, 81))),
                (4, (F(1),)),
                (7, (F(12, 7),)),
                (9, (F(4, 3),)),
            ),
        )
    raise UnsupportedN(f"reference closed forms exist for n in {{3, 5}}, got {n}")


# ---------------------------------------------------------------------------
# data-driven derivation
# ---------------------------------------------------------------------------

def _newton_interpolate(points: list[tuple[int, Fraction]]) -> Poly:
    """Exact polynomial through the given points (Newton divided differences)."""
    xs = [Fraction(x) for x, _ in points]
    coeffs = [y for _, y in points]
    m = len(points)
    for j in range(1, m):
        for i in range(m - 1, j - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - j])
    # expand Newton form to monomial coefficients
    poly = [Fraction(0)] * m
    poly[0] = coeffs[-1]
    for i in range(m - 2, -1, -1):
        # poly = poly * (x - xs[i]) + coeffs[i]
        shifted = [Fraction(0)] + poly[:-1]
        poly = [s - xs[i] * p for s, p in zip(shifted, poly)]
        poly[0] += coeffs[i]
    return _poly_trim(poly)


@dataclass
class QuasiFitReport:
    n: int
    fitted: QuasiPolynomial
    reference: QuasiPolynomial | None
    matches_reference: bool | None
    base_diffs: list[tuple[int, Fraction, Fraction]] = field(default_factory=list)
    term_diffs: list[tuple[int, Poly, Poly]] = field(default_factory=list)
    probes: list[tuple[int, int, int]] = field(default_factory=list)  # k, ref, exact

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "fitted": str(self.fitted),
            "reference": str(self.reference) if self.reference else None,
            "matches_reference": self.matches_reference,
            "base_diffs": [(p, str(f), str(r)) for p, f, r in self.base_diffs],
            "term_diffs": [(d, _format_poly(f), _format_poly(r))
                           for d, f, r in self.term_diffs],
            "probes": self.probes,
        }


def derive_quasipoly(n: int, holdout: int = 20) -> QuasiFitReport:
    """Fit the closed form from exact counts and compare to the reference.

    Per residue class r modulo lcm(1..2n) the counting function restricts
    to a single polynomial of degree 2(n-1).  Only the classes r = 1 and
    r = d (for candidate divisors d in 2..2n) are needed to peel the
    divisor-gated terms off the base; the result is then verified exactly
    on held-out counts.
    """
    if not isinstance(n, int) or n < 3 or n % 2 == 0:
        raise InvalidN(f"need an odd integer n >= 3, got {n!r}")
    if n > 7:
        raise InvalidN("derivation guarded to n <= 7 (cost)")
    degree = 2 * (n - 1)
    period = math.lcm(*range(1, 2 * n + 1))
    points_per_class = 2 * n + 1  # degree+... >= degree + 1, plus verification

    def class_poly(r: int) -> Poly:
        ks = [r + j * period for j in range(points_per_class)]
        pts = [(k, Fraction(count_C_formula(n, k))) for k in ks[:degree + 1]]
        poly = _newton_interpolate(pts)
        for k in ks[degree + 1:]:
            if _poly_eval(poly, k) != count_C_formula(n, k):
                raise FitInconsistent(f"class {r} polynomial fails at k={k}")
        return poly

    base = class_poly(1)
    divisors = list(range(2, 2 * n + 1))
    gated: dict[int, Poly] = {}
    for d in divisors:
        poly_d = class_poly(d)
        g = _poly_sub(poly_d, base)
        for d2 in divisors:
            if d2 < d and d % d2 == 0 and d2 in gated:
                g = _poly_sub(g, gated[d2])
        if g:
            gated[d] = g
    fitted = QuasiPolynomial(base=base, terms=tuple(sorted(gated.items())))

    for k in range(2, 2 + holdout):
        if fitted.evaluate(k) != count_C_formula(n, k):
            raise FitInconsistent(f"fitted quasi-polynomial fails at k={k}")

    reference = None
    matches = None
    base_diffs: list[tuple[int, Fraction, Fraction]] = []
    term_diffs: list[tuple[int, Poly, Poly]] = []
    probes: list[tuple[int, int, int]] = []
    try:
        reference = reference_quasipoly(n)
    except UnsupportedN:
        pass
    if reference is not None:
        hi = max(len(fitted.base), len(reference.base))
        for power in range(hi):
            f = fitted.base[power] if power < len(fitted.base) else Fraction(0)
            r = reference.base[power] if power < len(reference.base) else Fraction(0)
            if f != r:
                base_diffs.append((power, f, r))
        ref_terms = dict(reference.terms)
        fit_terms = dict(fitted.terms)
        for d in sorted(set(ref_terms) | set(fit_terms)):
            f = fit_terms.get(d, ())
            r = ref_terms.get(d, ())
            if f != r:
                term_diffs.append((d, f, r))
        matches = not base_diffs and not term_diffs
        if not matches:
            for k in range(2, 8):
                rv = reference.evaluate(k)
                ev = count_C_formula(n, k)
                if rv != ev:
                    probes.append((k, int(rv) if rv.denominator == 1 else float(rv), ev))
    return QuasiFitReport(n=n, fitted=fitted, reference=reference,
                          matches_reference=matches, base_diffs=base_diffs,
                          term_diffs=term_diffs, probes=probes)
