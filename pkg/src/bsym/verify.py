"""Verification harness: formula-vs-oracle suites over configurable grids.

Every suite is a deterministic function of (seed, grid): reruns with the same
config produce identical reports.  Failures carry full inputs so each one can
be replayed as a standalone regression test.  Elapsed time is tracked on the
report object but excluded from the canonical JSON so reports compare
byte-identical across runs.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field as dc_field

from . import bsymbol, codes
from .bsymbol import (
    check_bounds,
    dist_b_formula,
    dist_b_oracle,
    weight_b_oracle,
)
from .codes import CyclicCodeSpec, closed_form_db, hamming_distance_formula
from .gf import make_field
from .polyring import Word, cyclic_shift, poly, to_word

DEFAULT_GRID = (
    (2, 2, 1),
    (2, 3, 1),
    (3, 1, 1),
    (3, 2, 1),
    (5, 1, 1),
    (2, 2, 2),
)

LEMMA_GRID = ((2, 2), (2, 3), (3, 2))


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 42
    trials: int = 100_000
    grid: tuple = DEFAULT_GRID
    b_max: int = 6
    exhaustive_n_max: int = 10
    random_qs: tuple = (3, 4)
    random_n_max: int = 30
    lemma_trials: int = 1000
    cap: int = codes.DEFAULT_CAP

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")


@dataclass
class SuiteReport:
    suite: str
    cases: int = 0
    coverage: dict = dc_field(default_factory=dict)
    failures: list = dc_field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def count(self, key: str):
        self.cases += 1
        self.coverage[key] = self.coverage.get(key, 0) + 1

    def fail(self, inputs, expected, actual):
        self.failures.append(
            {"inputs": inputs, "expected": expected, "actual": actual}
        )

    def to_dict(self) -> dict:
        failures = sorted(self.failures, key=lambda f: json.dumps(f, sort_keys=True))
        return {
            "suite": self.suite,
            "cases": self.cases,
            "coverage": dict(sorted(self.coverage.items())),
            "failures": failures,
            "passed": self.passed,
        }


def _binary_word_from_mask(mask: int, n: int) -> Word:
    return Word(tuple((mask >> j) & 1 for j in range(n)))


def _random_word(rng: random.Random, n: int, q: int) -> Word:
    return Word(tuple(rng.randrange(q) for _ in range(n)))


def run_formula_suite(cfg: SuiteConfig) -> SuiteReport:
    """dist_b_formula == dist_b_oracle, exhaustively and at random.

    Both routes read a pair only through the positionwise agreement pattern,
    so the exhaustive binary sweep enumerates every XOR pattern: this covers
    all binary pairs exactly.  A seeded sample of explicit pairs double-checks
    the pattern reduction itself.
    """
    rep = SuiteReport("formula")
    t0 = time.perf_counter()
    rng = random.Random(cfg.seed)

    for n in range(2, cfg.exhaustive_n_max + 1):
        zero = Word((0,) * n)
        for mask in range(2 ** n):
            y = _binary_word_from_mask(mask, n)
            for b in range(2, n + 1):
                f = dist_b_formula(zero, y, b)
                o = dist_b_oracle(zero, y, b)
                rep.count("exhaustive_binary")
                if f != o:
                    rep.fail({"n": n, "b": b, "pattern": mask}, o, f)
                if mask == 0 and f != 0:
                    rep.fail({"n": n, "b": b, "pattern": 0, "check": "x=y"}, 0, f)

    # explicit binary pairs sampled at random, validating the pattern reduction
    for _ in range(min(cfg.trials // 10, 10_000)):
        n = rng.randrange(2, cfg.exhaustive_n_max + 1)
        b = rng.randrange(2, n + 1)
        x = _random_word(rng, n, 2)
        y = _random_word(rng, n, 2)
        pattern = sum(
            1 << j for j in range(n) if x.symbols[j] != y.symbols[j]
        )
        expected = dist_b_oracle(Word((0,) * n), _binary_word_from_mask(pattern, n), b)
        rep.count("binary_pair_sample")
        if dist_b_formula(x, y, b) != expected or dist_b_oracle(x, y, b) != expected:
            rep.fail({"n": n, "b": b, "x": list(x.symbols), "y": list(y.symbols)},
                     expected, dist_b_formula(x, y, b))

    for _ in range(cfg.trials):
        q = cfg.random_qs[rng.randrange(len(cfg.random_qs))]
        n = rng.randrange(2, cfg.random_n_max + 1)
        b = rng.randrange(2, n + 1)
        x = _random_word(rng, n, q)
        y = _random_word(rng, n, q)
        f = dist_b_formula(x, y, b)
        o = dist_b_oracle(x, y, b)
        rep.count(f"random_q{q}")
        if f != o:
            rep.fail({"n": n, "b": b, "q": q,
                      "x": list(x.symbols), "y": list(y.symbols)}, o, f)

    rep.elapsed = time.perf_counter() - t0
    return rep


def run_code_suite(cfg: SuiteConfig) -> SuiteReport:
    """Closed-form Hamming and b-symbol distances vs brute-force minima."""
    rep = SuiteReport("code")
    t0 = time.perf_counter()
    for p, e, m in cfg.grid:
        f = make_field(p, m)
        n = p ** e
        prev_by_b = {}
        for i in range(n + 1):
            spec = CyclicCodeSpec(f, e, i)
            if spec.size > cfg.cap:
                continue
            dh_formula = hamming_distance_formula(spec)
            dh_brute = codes.min_hamming_weight_bruteforce(spec, cfg.cap)
            rep.count("hamming")
            if dh_formula != dh_brute:
                rep.fail({"p": p, "e": e, "m": m, "i": i, "kind": "hamming"},
                         dh_brute, dh_formula)
            for b in range(2, min(cfg.b_max, n) + 1):
                closed = closed_form_db(spec, b)
                brute = codes.min_b_weight_bruteforce(spec, b, cfg.cap)
                if closed.value is not None:
                    rep.count(f"rule_{closed.rule}")
                    if closed.value != brute:
                        rep.fail({"p": p, "e": e, "m": m, "i": i, "b": b,
                                  "rule": closed.rule}, brute, closed.value)
                elif closed.interval is not None:
                    rep.count(f"interval_{closed.params_echo['interval_source']}")
                    lo, hi = closed.interval
                    if not (lo <= brute <= hi):
                        rep.fail({"p": p, "e": e, "m": m, "i": i, "b": b,
                                  "kind": "interval"}, [lo, hi], brute)
                else:
                    rep.count("rule_none")
                # nesting: C_{i} contains C_{i+1}, so d_b may only grow with i
                # (the zero code C_{p^e} is 0 by convention and is excluded)
                if b in prev_by_b and 0 < i < n:
                    if brute < prev_by_b[b].get(i - 1, brute):
                        rep.fail({"p": p, "e": e, "m": m, "i": i, "b": b,
                                  "kind": "nesting"}, prev_by_b[b][i - 1], brute)
                prev_by_b.setdefault(b, {})[i] = brute
    rep.elapsed = time.perf_counter() - t0
    return rep


def _random_lemma_instance(rng: random.Random, f, e: int):
    p = f.p
    n = p ** e
    k = rng.randrange(1, e) if e > 2 else 1
    period = p ** (e - k)
    d = rng.randrange(period)
    b = rng.randrange(2, period + 1)
    coeffs = [rng.randrange(f.q) for _ in range(d)]
    coeffs.append(rng.randrange(1, f.q))  # leading coefficient nonzero
    g = poly(f, [f.from_index(c) for c in coeffs])
    return k, b, g


def run_lemma_suite(cfg: SuiteConfig) -> SuiteReport:
    """Periodic weight decomposition vs the window-scan oracle on c(x)."""
    rep = SuiteReport("lemma")
    t0 = time.perf_counter()
    rng = random.Random(cfg.seed)
    for p, e in LEMMA_GRID:
        f = make_field(p, 1)
        for _ in range(cfg.lemma_trials):
            k, b, g = _random_lemma_instance(rng, f, e)
            predicted = codes.lemma10_weight(f, e, k, g, b)
            actual = weight_b_oracle(codes.lemma10_codeword(f, e, k, g), b)
            case = "case2" if (g.degree > p ** (e - k) - b) else "case1"
            rep.count(f"p{p}e{e}_{case}")
            if predicted != actual:
                rep.fail({"p": p, "e": e, "k": k, "b": b,
                          "g": [f.index_of(c) for c in g.coeffs]},
                         actual, predicted)
    rep.elapsed = time.perf_counter() - t0
    return rep


def run_bounds_suite(cfg: SuiteConfig) -> SuiteReport:
    """Weight/distance sandwiches and monotonicity/invariance properties."""
    rep = SuiteReport("bounds")
    t0 = time.perf_counter()
    rng = random.Random(cfg.seed)

    # the worked example from the golden word
    golden = Word((0, 0, 1, 3, 0, 5, 0, 0, 0, 2, 0, 7, 0, 0, 0))
    lo, hi, holds = check_bounds(golden, 4)
    rep.count("golden_bounds")
    if (lo, hi, holds) != (8, 20, True):
        rep.fail({"word": "golden", "b": 4}, [8, 20, True], [lo, hi, holds])

    # single nonzero symbol: both bounds tight at b
    for n in (4, 7, 9):
        for b in range(2, n + 1):
            w = Word(tuple(1 if j == 2 else 0 for j in range(n)))
            lo, hi, holds = check_bounds(w, b)
            wb = weight_b_oracle(w, b)
            rep.count("single_symbol")
            if not holds or wb != b or lo != b:
                rep.fail({"n": n, "b": b, "kind": "single_symbol"}, b, wb)

    # randomized sandwich + monotonicity in b + shift invariance
    for _ in range(min(cfg.trials, 20_000)):
        q = cfg.random_qs[rng.randrange(len(cfg.random_qs))]
        n = rng.randrange(3, cfg.random_n_max + 1)
        b = rng.randrange(2, n + 1)
        x = _random_word(rng, n, q)
        w_h = x.hamming_weight()
        wb = weight_b_oracle(x, b)
        if 0 < w_h <= n - (b - 1):
            lo, hi, holds = check_bounds(x, b)
            rep.count("prop1_random")
            if not holds:
                rep.fail({"n": n, "b": b, "x": list(x.symbols)}, [lo, hi], wb)
        wprev = weight_b_oracle(x, b - 1)
        rep.count("monotone_b")
        if wb < wprev:
            rep.fail({"n": n, "b": b, "x": list(x.symbols), "kind": "monotone"},
                     f">={wprev}", wb)
        s = rng.randrange(n)
        rep.count("shift_invariance")
        if weight_b_oracle(cyclic_shift(x, s), b) != wb:
            rep.fail({"n": n, "b": b, "s": s, "x": list(x.symbols),
                      "kind": "shift"}, wb, weight_b_oracle(cyclic_shift(x, s), b))

    # Cor2 sandwiches and Prop7 intervals against brute force on the code grid
    for p, e, m in cfg.grid:
        f = make_field(p, m)
        n = p ** e
        for i in range(n + 1):
            spec = CyclicCodeSpec(f, e, i)
            if spec.size > cfg.cap:
                continue
            d_h = hamming_distance_formula(spec)
            for b in range(2, min(cfg.b_max, n) + 1):
                brute = codes.min_b_weight_bruteforce(spec, b, cfg.cap)
                if 0 < d_h <= n - (b - 1):
                    rep.count("cor2")
                    if not (d_h + b - 1 <= brute <= b * d_h):
                        rep.fail({"p": p, "e": e, "m": m, "i": i, "b": b,
                                  "kind": "cor2"}, [d_h + b - 1, b * d_h], brute)
                if 1 <= i <= p ** (e - 1) and b < n:
                    rep.count("prop7")
                    if not (b + 1 <= brute <= 2 * b):
                        rep.fail({"p": p, "e": e, "m": m, "i": i, "b": b,
                                  "kind": "prop7"}, [b + 1, 2 * b], brute)
    rep.elapsed = time.perf_counter() - t0
    return rep


SUITES = {
    "formula": run_formula_suite,
    "code": run_code_suite,
    "lemma": run_lemma_suite,
    "bounds": run_bounds_suite,
}


def run_suites(cfg: SuiteConfig, which: str = "all"):
    names = list(SUITES) if which == "all" else [which]
    return {name: SUITES[name](cfg) for name in names}


def report_json(reports: dict) -> str:
    payload = {name: rep.to_dict() for name, rep in sorted(reports.items())}
    return json.dumps(payload, sort_keys=True, indent=2)
