"""Polynomials over F_{p^m} and words in the quotient ring mod x^n - 1.

Coefficients are stored constant term first everywhere, matching the vector
convention used by the windowed-read metrics: the word (x_0, ..., x_{n-1})
is the polynomial x_0 + x_1 x + ... + x_{n-1} x^{n-1}.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import gf
from .errors import DivisionByZeroError, FieldMismatchError
from .gf import FieldElement, FieldParams


@dataclass(frozen=True)
class Poly:
    """Dense polynomial, no trailing zeros; the zero polynomial has no coeffs."""

    field: FieldParams
    coeffs: tuple  # FieldElements, constant term first

    @property
    def degree(self):
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, j: int) -> FieldElement:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return self.field.zero

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for j, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if j == 0:
                terms.append(str(c))
            else:
                terms.append(f"({c})*x^{j}")
        return " + ".join(terms)


def poly(f: FieldParams, coeffs) -> Poly:
    """Build a Poly from FieldElements or plain ints, trimming trailing zeros."""
    els = []
    for c in coeffs:
        if isinstance(c, FieldElement):
            if c.field != f:
                raise FieldMismatchError("coefficient from a different field")
            els.append(c)
        else:
            els.append(f.from_int(int(c)))
    while els and els[-1].is_zero():
        els.pop()
    return Poly(f, tuple(els))


def _check(a: Poly, b: Poly):
    if a.field != b.field:
        raise FieldMismatchError("polynomials over different fields")


def poly_add(a: Poly, b: Poly) -> Poly:
    _check(a, b)
    n = max(len(a.coeffs), len(b.coeffs))
    return poly(a.field, [gf.add(a.coeff(j), b.coeff(j)) for j in range(n)])


def poly_neg(a: Poly) -> Poly:
    return Poly(a.field, tuple(gf.neg(c) for c in a.coeffs))


def poly_sub(a: Poly, b: Poly) -> Poly:
    return poly_add(a, poly_neg(b))


def poly_mul(a: Poly, b: Poly) -> Poly:
    _check(a, b)
    if a.is_zero() or b.is_zero():
        return Poly(a.field, ())
    f = a.field
    out = [f.zero] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x.is_zero():
            continue
        for j, y in enumerate(b.coeffs):
            out[i + j] = gf.add(out[i + j], gf.mul(x, y))
    return poly(f, out)


def poly_divmod(a: Poly, b: Poly):
    _check(a, b)
    if b.is_zero():
        raise DivisionByZeroError("division by the zero polynomial")
    f = a.field
    rem = list(a.coeffs)
    db = b.degree
    lead_inv = gf.inv(b.coeffs[-1])
    quo = [f.zero] * max(len(rem) - db, 0)
    while len(rem) - 1 >= db and rem:
        coef = gf.mul(rem[-1], lead_inv)
        shift = len(rem) - 1 - db
        quo[shift] = coef
        for j, bj in enumerate(b.coeffs):
            rem[shift + j] = gf.sub(rem[shift + j], gf.mul(coef, bj))
        while rem and rem[-1].is_zero():
            rem.pop()
    return poly(f, quo), poly(f, rem)


def poly_mod(a: Poly, b: Poly) -> Poly:
    return poly_divmod(a, b)[1]


def xminus1_pow(f: FieldParams, i: int) -> Poly:
    """(x - 1)^i, computed by repeated multiplication in the field."""
    if i < 0:
        raise ValueError("exponent must be >= 0")
    base = poly(f, [-1, 1])
    out = poly(f, [1])
    for _ in range(i):
        out = poly_mul(out, base)
    return out


# ---------------------------------------------------------------------------
# Words
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Word:
    """A length-n tuple of symbols over any alphabet.

    Only symbol equality and the designated zero symbol are ever used by the
    windowed-read metrics, so symbols may be ints, FieldElements, or anything
    hashable.  `field` is set when the word carries field structure.
    """

    symbols: tuple
    zero: object = 0
    field: FieldParams | None = dc_field(default=None, compare=False)

    @property
    def n(self) -> int:
        return len(self.symbols)

    def support(self):
        return tuple(j for j, s in enumerate(self.symbols) if s != self.zero)

    def hamming_weight(self) -> int:
        return sum(1 for s in self.symbols if s != self.zero)

    def __str__(self):
        return ",".join(str(s) for s in self.symbols)


def word(symbols, zero=0) -> Word:
    return Word(tuple(symbols), zero)


def field_word(f: FieldParams, symbols) -> Word:
    """Word over F_{p^m}; plain ints are lifted into the prime subfield."""
    els = tuple(
        s if isinstance(s, FieldElement) else f.from_int(int(s)) for s in symbols
    )
    return Word(els, f.zero, f)


def to_word(a: Poly, n: int) -> Word:
    """Reduce a mod x^n - 1 and lay the coefficients out as a length-n word."""
    f = a.field
    out = [f.zero] * n
    for j, c in enumerate(a.coeffs):
        out[j % n] = gf.add(out[j % n], c)
    return Word(tuple(out), f.zero, f)


def from_word(w: Word) -> Poly:
    if w.field is None:
        raise FieldMismatchError("word has no field structure")
    return poly(w.field, w.symbols)


def word_sub(x: Word, y: Word) -> Word:
    """Componentwise difference over a field."""
    if x.field is None or x.field != y.field:
        raise FieldMismatchError("words must share a field")
    return Word(
        tuple(gf.sub(a, b) for a, b in zip(x.symbols, y.symbols)), x.zero, x.field
    )


def cyclic_shift(w: Word, s: int) -> Word:
    """Symbol at position j moves to position (j + s) mod n."""
    n = w.n
    if n == 0:
        return w
    s %= n
    out = [None] * n
    for j, sym in enumerate(w.symbols):
        out[(j + s) % n] = sym
    return Word(tuple(out), w.zero, w.field)
