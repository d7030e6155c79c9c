"""Repeated-root cyclic codes C_i = <(x-1)^i> of length p^e over F_{p^m}.

Closed forms implemented here:
  * the exact Hamming distance of every C_i,
  * exact b-symbol distances where a rule applies (i = 0; e = 1 with
    i <= p - b; e >= 2 with small i; the p^e - p^{e-k} + i' family),
  * the periodic weight decomposition w_b((x-1)^{p^e - p^{e-k}} g(x))
    in terms of w_b(g), and
  * sandwich intervals when no exact rule applies.

Every closed form is backed by a brute-force enumeration engine that refuses
to sample: beyond the cap it raises instead of approximating.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

from . import gf, polyring
from .bsymbol import weight_b_oracle
from .errors import (
    DegreeTooLargeError,
    EnumerationTooLargeError,
    IndexOutOfRangeError,
    WidthOutOfRangeError,
    WidthTooLargeError,
)
from .gf import FieldParams
from .polyring import Poly, Word, poly, poly_mul, to_word, xminus1_pow

DEFAULT_CAP = 2 ** 22


def enumeration_cap() -> int:
    """Default brute-force cap, overridable via the BSYM_CAP environment var."""
    env = os.environ.get("BSYM_CAP")
    return int(env) if env else DEFAULT_CAP


@dataclass(frozen=True)
class CyclicCodeSpec:
    field: FieldParams
    e: int
    i: int

    def __post_init__(self):
        if self.e < 1:
            raise ValueError(f"e={self.e} must be >= 1")
        if not (0 <= self.i <= self.n):
            raise IndexOutOfRangeError(f"i={self.i} outside [0, {self.n}]")

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def m(self) -> int:
        return self.field.m

    @property
    def n(self) -> int:
        return self.p ** self.e

    @property
    def k_dim(self) -> int:
        return self.n - self.i

    @property
    def size(self) -> int:
        return self.field.q ** self.k_dim

    def generator(self) -> Poly:
        return xminus1_pow(self.field, self.i)


@dataclass(frozen=True)
class ClosedFormResult:
    value: int | None
    rule: str | None           # ZeroCode | Prop6 | Prop8_e1 | Thm9 | Thm11
    interval: tuple | None     # (lower, upper) when only a sandwich applies
    params_echo: dict

    def __post_init__(self):
        if self.value is not None and self.rule is None:
            raise ValueError("exact value requires a rule")
        if self.interval is not None and self.interval[0] > self.interval[1]:
            raise ValueError("interval lower > upper")


@dataclass(frozen=True)
class DistanceRecord:
    p: int
    e: int
    m: int
    i: int
    b: int
    n: int
    k_dim: int
    dH_formula: int
    db_closed: ClosedFormResult
    db_brute: int | None
    bounds: tuple | None
    consistent: bool


def hamming_distance_formula(spec: CyclicCodeSpec) -> int:
    """Exact minimum Hamming distance of C_i; exactly one branch applies."""
    p, e, i = spec.p, spec.e, spec.i
    n = spec.n
    if i == 0:
        return 1
    if i == n:
        return 0
    for beta in range(p - 1):
        if beta * p ** (e - 1) + 1 <= i <= (beta + 1) * p ** (e - 1):
            return beta + 2
    for k in range(1, e):
        for t in range(1, p):
            lo = n - p ** (e - k) + (t - 1) * p ** (e - k - 1) + 1
            hi = n - p ** (e - k) + t * p ** (e - k - 1)
            if lo <= i <= hi:
                return (t + 1) * p ** k
    raise AssertionError(f"no branch matched i={i} (p={p}, e={e})")  # unreachable


def enumerate_codewords(spec: CyclicCodeSpec, cap: int | None = None):
    """All q^{k_dim} codewords as Words, in deterministic message order."""
    cap = enumeration_cap() if cap is None else cap
    if spec.size > cap:
        raise EnumerationTooLargeError(spec.size, cap)
    f = spec.field
    n = spec.n
    gen_word = to_word(spec.generator(), n).symbols
    # precompute the cyclic shifts x^j * (x-1)^i as symbol tuples
    shifts = []
    for j in range(spec.k_dim):
        shifts.append(tuple(gen_word[(t - j) % n] for t in range(n)))
    elements = gf.enumerate_elements(f)
    zero = f.zero

    def rec(j, acc):
        if j == spec.k_dim:
            yield Word(tuple(acc), zero, f)
            return
        for el in elements:
            if el.is_zero():
                yield from rec(j + 1, acc)
            else:
                row = shifts[j]
                nxt = [gf.add(a, gf.mul(el, r)) for a, r in zip(acc, row)]
                yield from rec(j + 1, nxt)

    yield from rec(0, [zero] * n)


@lru_cache(maxsize=64)
def _codeword_masks(spec: CyclicCodeSpec, cap: int):
    """Support bitmasks of all codewords (deduplicated implicitly not needed)."""
    masks = []
    for w in enumerate_codewords(spec, cap):
        mask = 0
        for j, s in enumerate(w.symbols):
            if not s.is_zero():
                mask |= 1 << j
        masks.append(mask)
    return tuple(masks)


def min_hamming_weight_bruteforce(spec: CyclicCodeSpec, cap: int | None = None) -> int:
    """Minimum nonzero Hamming weight by exhaustive enumeration."""
    cap = enumeration_cap() if cap is None else cap
    if spec.i == spec.n:
        return 0
    best = None
    for mask in _codeword_masks(spec, cap):
        if mask == 0:
            continue
        w = bin(mask).count("1")
        if best is None or w < best:
            best = w
    return best


def min_b_weight_bruteforce(
    spec: CyclicCodeSpec, b: int, cap: int | None = None
) -> int:
    """Minimum nonzero b-weight over all codewords (d_b(C) by linearity)."""
    cap = enumeration_cap() if cap is None else cap
    n = spec.n
    if not (1 <= b <= n):
        raise WidthOutOfRangeError(b, n)
    if spec.i == spec.n:
        return 0
    best = None
    for mask in _codeword_masks(spec, cap):
        if mask == 0:
            continue
        support = Word(tuple((mask >> j) & 1 for j in range(n)))
        w = weight_b_oracle(support, b)
        if best is None or w < best:
            best = w
            if best == b:  # b is the global minimum possible for a nonzero word
                break
    return best


def thm11_decompositions(spec: CyclicCodeSpec, b: int):
    """All (k, i') with i = p^e - p^{e-k} + i' inside the rule's hypotheses."""
    p, e, i = spec.p, spec.e, spec.i
    out = []
    for k in range(1, e):
        i2 = i - (spec.n - p ** (e - k))
        if 0 <= i2 <= p ** (e - k - 1) and b + i2 <= p ** (e - k) and i2 <= b:
            out.append((k, i2))
    return out


def closed_form_db(spec: CyclicCodeSpec, b: int) -> ClosedFormResult:
    """Exact d_b when a rule applies, else the tightest known sandwich."""
    p, e, i = spec.p, spec.e, spec.i
    n = spec.n
    if not (2 <= b <= n):
        raise WidthOutOfRangeError(b, n)
    echo = {"p": p, "e": e, "m": spec.m, "i": i, "b": b}

    candidates = []  # (rule, value), in precedence order
    if i == n:
        candidates.append(("ZeroCode", 0))
    if i == 0 and b <= n:
        candidates.append(("Prop6", b))
    if e == 1 and b <= p and 0 <= i <= p - b:
        candidates.append(("Prop8_e1", i + b))
    if e >= 2 and 1 <= i <= p ** (e - 1) and i + b <= n and i <= b:
        candidates.append(("Thm9", i + b))
    decomps = thm11_decompositions(spec, b) if e >= 2 else []
    for k, i2 in decomps:
        candidates.append(("Thm11", p ** k * (b + i2)))

    if candidates:
        values = {v for _, v in candidates}
        if len(values) > 1:
            raise AssertionError(
                f"overlapping exact rules disagree: {candidates} at {echo}"
            )
        rule, value = candidates[0]
        if rule == "Thm11":
            echo["decompositions"] = decomps
        return ClosedFormResult(value, rule, None, echo)

    if b < n and 1 <= i <= p ** (e - 1):
        echo["interval_source"] = "Prop7"
        return ClosedFormResult(None, None, (b + 1, 2 * b), echo)
    d_h = hamming_distance_formula(spec)
    if 0 < d_h <= n - (b - 1):
        echo["interval_source"] = "Cor2"
        return ClosedFormResult(None, None, (d_h + b - 1, b * d_h), echo)
    return ClosedFormResult(None, None, None, echo)


def lemma10_weight(f: FieldParams, e: int, k: int, g: Poly, b: int) -> int:
    """b-weight of c(x) = (x-1)^{p^e - p^{e-k}} g(x) from the b-weight of g.

    c is the p^k-fold periodic repetition of g padded with zeta zeros up to
    one period of length p^{e-k}, so its windows are the padded word's
    windows repeated p^k times.  Requires 1 <= k <= e-1, g != 0,
    deg(g) < p^{e-k}, and b <= p^{e-k} (wider windows straddle more than one
    period and the decomposition no longer holds).

    With a = number of leading zero coefficients of g: if the window width
    never bridges the circular zero gap differently in the two embeddings
    (b <= p^{e-k} - deg(g) + a), the padded word and the full-length word
    have equal b-weight; otherwise the bridge shortens by exactly
    (b - 1) - zeta - a windows per period.
    """
    p = f.p
    if not (1 <= k <= e - 1):
        raise ValueError(f"k={k} outside [1, {e - 1}]")
    if g.is_zero():
        raise ValueError("g must be nonzero")
    d = g.degree
    period = p ** (e - k)
    n = p ** e
    if d >= period:
        raise DegreeTooLargeError(f"deg(g)={d} must be < {period}")
    if b > period:
        raise WidthTooLargeError(f"b={b} must be <= p^(e-k) = {period}")
    w_b_g = weight_b_oracle(to_word(g, n), b)
    a = 0
    while g.coeff(a).is_zero():
        a += 1
    if d <= period - b or a >= b - period + d:
        return p ** k * w_b_g
    zeta = period - d - 1
    return p ** k * (w_b_g - (b - 1) + zeta + a)


def lemma10_codeword(f: FieldParams, e: int, k: int, g: Poly) -> Word:
    """The explicit word of (x-1)^{p^e - p^{e-k}} g(x) mod x^{p^e} - 1."""
    n = f.p ** e
    c = poly_mul(xminus1_pow(f, n - f.p ** (e - k)), g)
    return to_word(c, n)


def build_record(
    spec: CyclicCodeSpec,
    b: int,
    cap: int | None = None,
    with_brute: bool = True,
) -> DistanceRecord:
    """One verification row: formulas, optional brute value, consistency flag."""
    d_h = hamming_distance_formula(spec)
    closed = closed_form_db(spec, b)
    n = spec.n
    bounds = None
    if 0 < d_h <= n - (b - 1):
        bounds = (d_h + b - 1, b * d_h)
    brute = min_b_weight_bruteforce(spec, b, cap) if with_brute else None

    consistent = True
    if brute is not None:
        if closed.value is not None and closed.value != brute:
            consistent = False
        if closed.interval is not None and not (
            closed.interval[0] <= brute <= closed.interval[1]
        ):
            consistent = False
        if bounds is not None and not (bounds[0] <= brute <= bounds[1]):
            consistent = False
    if closed.value is not None and bounds is not None and not (
        bounds[0] <= closed.value <= bounds[1]
    ):
        consistent = False
    return DistanceRecord(
        spec.p, spec.e, spec.m, spec.i, b, n, spec.k_dim,
        d_h, closed, brute, bounds, consistent,
    )


def record_to_dict(rec: DistanceRecord) -> dict:
    c = rec.db_closed
    return {
        "p": rec.p, "e": rec.e, "m": rec.m, "i": rec.i, "b": rec.b,
        "n": rec.n, "dim": rec.k_dim, "dH": rec.dH_formula,
        "db_rule": c.rule,
        "db_closed": c.value,
        "db_lower": c.interval[0] if c.interval else None,
        "db_upper": c.interval[1] if c.interval else None,
        "db_brute": rec.db_brute,
        "consistent": rec.consistent,
    }


CSV_COLUMNS = [
    "p", "e", "m", "i", "b", "n", "dim", "dH",
    "db_rule", "db_closed", "db_lower", "db_upper", "db_brute", "consistent",
]
