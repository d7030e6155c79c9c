"""Arithmetic in Z_p and in the extension field F_{p^m}.

Elements are coefficient vectors of length m over Z_p, constant term first,
reduced modulo a monic irreducible polynomial of degree m.  For m = 1 the
modulus is the trivial degree-1 polynomial x and elements are single digits.

The element order produced by :func:`enumerate_elements` is lexicographic on
the coefficient tuple (constant term compared first), so the zero element is
always first.  All sweeps in the package rely on this fixed order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import (
    DivisionByZeroError,
    FieldMismatchError,
    NoDefaultModulusError,
    NonPrimeError,
    NotIrreducibleError,
)

# Small irreducible moduli so the common extension fields work out of the box.
# Coefficients constant term first.
DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),      # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),   # x^3 + x + 1
    (3, 2): (1, 0, 1),      # x^2 + 1
}


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over Z_p, on plain int lists (constant term first)
# ---------------------------------------------------------------------------

def _zp_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _zp_mod(a, b, p):
    """Remainder of a modulo monic-leading b over Z_p."""
    a = _zp_trim(list(a))
    b = _zp_trim(list(b))
    inv_lead = pow(b[-1], p - 2, p) if b[-1] != 1 else 1
    while len(a) >= len(b):
        coef = (a[-1] * inv_lead) % p
        shift = len(a) - len(b)
        for j, bj in enumerate(b):
            a[shift + j] = (a[shift + j] - coef * bj) % p
        _zp_trim(a)
    return a


def _zp_irreducible(modulus, p, m) -> bool:
    """Trial division against every monic polynomial of degree 1..m//2."""
    if len(modulus) != m + 1 or modulus[-1] != 1:
        return False
    for deg in range(1, m // 2 + 1):
        # all monic polynomials of degree deg: p^deg choices of lower coeffs
        for code in range(p ** deg):
            cand = []
            v = code
            for _ in range(deg):
                cand.append(v % p)
                v //= p
            cand.append(1)
            if not _zp_mod(modulus, cand, p):
                return False
    return True


@dataclass(frozen=True)
class FieldParams:
    """The field F_{p^m}; immutable, hashable, safe to share between threads."""

    p: int
    m: int
    modulus: tuple  # m+1 ints, constant term first, monic

    @property
    def q(self) -> int:
        return self.p ** self.m

    @cached_property
    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.m)

    @cached_property
    def one(self) -> "FieldElement":
        return FieldElement(self, (1,) + (0,) * (self.m - 1))

    def element(self, coeffs) -> "FieldElement":
        coeffs = tuple(int(c) % self.p for c in coeffs)
        if len(coeffs) != self.m:
            raise ValueError(f"expected {self.m} coefficients, got {len(coeffs)}")
        return FieldElement(self, coeffs)

    def from_int(self, value: int) -> "FieldElement":
        """Prime-subfield element from an integer (reduced mod p); m=1 shortcut."""
        c = [0] * self.m
        c[0] = value % self.p
        return FieldElement(self, tuple(c))

    # index <-> coefficients; index order matches enumerate_elements
    def index_of(self, a: "FieldElement") -> int:
        idx = 0
        for c in a.coeffs:
            idx = idx * self.p + c
        return idx

    def from_index(self, idx: int) -> "FieldElement":
        digits = []
        for _ in range(self.m):
            digits.append(idx % self.p)
            idx //= self.p
        return FieldElement(self, tuple(reversed(digits)))

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"


@dataclass(frozen=True)
class FieldElement:
    field: FieldParams
    coeffs: tuple  # m ints in [0, p), constant term first

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        return mul(self, other)

    def __str__(self):
        return ":".join(str(c) for c in self.coeffs)

    def __repr__(self):
        return f"<{self} in {self.field!r}>"


def make_field(p: int, m: int = 1, modulus=None) -> FieldParams:
    """Validated field parameters; raises on bad p or a reducible modulus."""
    if not is_prime(p):
        raise NonPrimeError(p)
    if m < 1:
        raise ValueError(f"extension degree m={m} must be >= 1")
    if m == 1:
        return FieldParams(p, 1, (0, 1))
    if modulus is None:
        if (p, m) not in DEFAULT_MODULI:
            raise NoDefaultModulusError(p, m)
        modulus = DEFAULT_MODULI[(p, m)]
    modulus = tuple(int(c) % p for c in modulus)
    if not _zp_irreducible(list(modulus), p, m):
        raise NotIrreducibleError(modulus)
    return FieldParams(p, m, modulus)


def _check_same(a: FieldElement, b: FieldElement):
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field!r} vs {b.field!r}")


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a, b)
    p = a.field.p
    return FieldElement(a.field, tuple((x + y) % p for x, y in zip(a.coeffs, b.coeffs)))


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a, b)
    p = a.field.p
    return FieldElement(a.field, tuple((x - y) % p for x, y in zip(a.coeffs, b.coeffs)))


def neg(a: FieldElement) -> FieldElement:
    p = a.field.p
    return FieldElement(a.field, tuple((-x) % p for x in a.coeffs))


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a, b)
    f = a.field
    p, m = f.p, f.m
    if m == 1:
        return FieldElement(f, ((a.coeffs[0] * b.coeffs[0]) % p,))
    prod = [0] * (2 * m - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                prod[i + j] = (prod[i + j] + x * y) % p
    rem = _zp_mod(prod, list(f.modulus), p)
    rem += [0] * (m - len(rem))
    return FieldElement(f, tuple(rem))


def pow_(a: FieldElement, k: int) -> FieldElement:
    if k < 0:
        raise ValueError("exponent must be >= 0")
    result = a.field.one
    base = a
    while k:
        if k & 1:
            result = mul(result, base)
        base = mul(base, base)
        k >>= 1
    return result


def inv(a: FieldElement) -> FieldElement:
    if a.is_zero():
        raise DivisionByZeroError("inverse of zero")
    return pow_(a, a.field.q - 2)


def enumerate_elements(f: FieldParams):
    """All q elements in lexicographic coefficient order; zero first."""
    return [f.from_index(i) for i in range(f.q)]
