"""Replication suite: every acceptance row as exact, self-describing checks.

The JSON form carries no timings so that its bytes are reproducible; the
budget verdicts appear as booleans.
"""
from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable

from . import numerology
from .analysis import CurveAnalysis, analyze_curve, random_squarefree
from .exact import RatFunc, UniPoly
from .function_field import CurveModel, PlaneModel
from .report import SCHEMA_VERSION, dumps

SEED = 20240601
RANDOM_PER_GENUS = 3
MODULAR_PRIMES = 3
HYPERELLIPTIC_GENERA = range(3, 11)


@dataclass
class Check:
    name: str
    expected: Any
    observed: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.observed

    def as_dict(self) -> dict:
        return {"name": self.name, "expected": self.expected, "observed": self.observed,
                "passed": self.passed}


@dataclass
class RowResult:
    row: int
    title: str
    checks: list[Check]
    budget_seconds: float | None = None
    elapsed: float = 0.0
    error: str | None = None

    @property
    def within_budget(self) -> bool:
        return self.budget_seconds is None or self.elapsed < self.budget_seconds

    @property
    def passed(self) -> bool:
        return (self.error is None and bool(self.checks)
                and all(c.passed for c in self.checks) and self.within_budget)

    def as_dict(self) -> dict:
        return {
            "row": self.row,
            "title": self.title,
            "passed": self.passed,
            "budget_seconds": self.budget_seconds,
            "within_budget": self.within_budget,
            "error": self.error,
            "checks": [c.as_dict() for c in self.checks],
        }


# ---------------------------------------------------------------------------
# curve corpus

def _xn_minus_1(deg: int) -> UniPoly:
    return UniPoly([-1] + [0] * (deg - 1) + [1])


def hyperelliptic_corpus(seed: int = SEED) -> list[CurveModel]:
    rng = random.Random(seed)
    out = []
    for g in HYPERELLIPTIC_GENERA:
        out.append(CurveModel(2, _xn_minus_1(2 * g + 2), f"hyp-g{g}"))
        for k in range(RANDOM_PER_GENUS):
            out.append(CurveModel(2, random_squarefree(2 * g + 2, rng), f"hyp-g{g}-r{k}"))
    return out


def named_curves() -> dict[str, CurveModel]:
    return {
        "trig-g7": CurveModel(3, _xn_minus_1(9), "trig-g7"),
        "trig-g9": CurveModel(3, _xn_minus_1(10), "trig-g9"),
        "trig-g12": CurveModel(3, _xn_minus_1(13), "trig-g12"),
        "quintic-g6": CurveModel(5, UniPoly([-1, 0, 0, 0, 0, -1]), "quintic-g6"),
        "trig-g4": CurveModel(3, _xn_minus_1(6), "trig-g4"),
    }


def run_corpus(curves: list[CurveModel], jobs: int = 1) -> tuple[list[CurveAnalysis], list[float]]:
    """Analyses in input order; per-curve wall time alongside."""
    def work(c):
        t = time.perf_counter()
        a = analyze_curve(c, modular_primes=MODULAR_PRIMES, seed=SEED)
        return a, time.perf_counter() - t

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            res = list(ex.map(work, curves))
    else:
        res = [work(c) for c in curves]
    return [a for a, _ in res], [t for _, t in res]


# ---------------------------------------------------------------------------
# rows

def _row1(hyp: list[CurveAnalysis], elapsed: float) -> RowResult:
    checks = []
    for a in hyp:
        g = a.genus
        tag = f"{a.label} f={a.f}"
        checks += [
            Check(f"{tag}: rank mu2 = 2g-5", 2 * g - 5, a.rank_mu2),
            Check(f"{tag}: dim I2 = (g-1)(g-2)/2", (g - 1) * (g - 2) // 2, a.dim_i2),
            Check(f"{tag}: rank mu1K = 2g-3", 2 * g - 3, a.rank_mu1K),
        ]
    return RowResult(1, "hyperelliptic rank law, g = 3..10", checks, 60, elapsed)


def _row2(a: CurveAnalysis, elapsed: float) -> RowResult:
    return RowResult(2, "trigonal genus 7: y^3 = x^9 - 1", [
        Check("genus", 7, a.genus),
        Check("rank mu1K", 18, a.rank_mu1K),
        Check("rank mu1L", 9, a.rank_mu1L),
        Check("rank mu2", 9, a.rank_mu2),
    ], 10, elapsed)


def _row3(a9: CurveAnalysis, a12: CurveAnalysis, elapsed: float) -> RowResult:
    checks = []
    for a in (a9, a12):
        g = a.genus
        checks += [
            Check(f"{a.label}: genus", {"trig-g9": 9, "trig-g12": 12}[a.label], g),
            Check(f"{a.label}: rank mu2 = 4g-18", 4 * g - 18, a.rank_mu2),
            Check(f"{a.label}: corank mu1K = g+5", g + 5, a.corank_mu1K),
        ]
    checks.append(Check("trig-g9: rank mu2", 18, a9.rank_mu2))
    checks.append(Check("trig-g12: rank mu2", 30, a12.rank_mu2))
    return RowResult(3, "trigonal rank law, g >= 8", checks, 120, elapsed)


def _row4(a: CurveAnalysis, elapsed: float) -> RowResult:
    return RowResult(4, "plane quintic: y^5 = -x^5 - 1", [
        Check("genus", 6, a.genus),
        Check("dim I2", 6, a.dim_i2),
        Check("rank mu2 (injective)", 6, a.rank_mu2),
        Check("base locus empty", True, bool(a.base_locus and a.base_locus["is_free"])),
    ], 30, elapsed)


def _row5(curves: list[CurveAnalysis]) -> RowResult:
    checks = [Check(f"{a.label}: rank mu2 >= g-3", True, a.rank_mu2 >= a.genus - 3) for a in curves]
    g4 = next(a for a in curves if a.label == "trig-g4")
    checks += [Check("trig-g4: genus", 4, g4.genus), Check("trig-g4: dim I2", 1, g4.dim_i2)]
    return RowResult(5, "lower bound rank mu2 >= g - 3", checks)


def _row6(curves: list[CurveAnalysis]) -> RowResult:
    checks = []
    for a in curves:
        for entry in a.mu2_ram_min_orders:
            low = entry["min_order"]
            checks.append(Check(f"{a.label}: min ord of mu2(I2) at {entry['modulus']} >= 1",
                                True, low is not None and low >= 1))
    return RowResult(6, "base points at ramification", checks)


def _row7(curves: list[CurveAnalysis]) -> RowResult:
    checks = []
    for a in curves:
        checks.append(Check(f"{a.label}: factorization identities", a.factorization_total,
                            a.factorization_checks_passed))
        checks.append(Check(f"{a.label}: every mu2(psi) nonzero", True, a.psi_mu2_nonzero))
    return RowResult(7, "factorization identity for psi quadrics", checks)


def _row8(curves: list[CurveAnalysis]) -> RowResult:
    return RowResult(8, "psi is an isomorphism onto I2", [
        Check(f"{a.label}: rank psi = dim I2", a.dim_i2, a.psi_rank) for a in curves])


def _row9(curves: list[CurveAnalysis]) -> RowResult:
    checks = [
        Check("genus_product(2,1,9,7)", 71,
              numerology.genus_product(numerology.ProductCurveSpec(2, 1, 9, 7))),
        Check("surjectivity_threshold()", 18, numerology.surjectivity_threshold()),
    ]
    for a in curves:
        hyper = a.n == 2
        checks.append(Check(f"{a.label}: dim_i2_expected", a.dim_i2,
                            numerology.dim_i2_expected(a.genus, hyper)))
    return RowResult(9, "numerology", checks)


def _random_ratfunc(rng: random.Random) -> RatFunc:
    num = UniPoly([rng.randint(-4, 4) for _ in range(rng.randint(1, 4))])
    den = UniPoly([rng.randint(-3, 3) for _ in range(rng.randint(1, 3))] + [1])
    return RatFunc(num, den)


def leibniz_checks(count: int = 100, seed: int = SEED) -> tuple[int, int, int]:
    """(Leibniz passes, sum-rule passes, defining-relation passes) over random elements."""
    rng = random.Random(seed)
    models = [
        CurveModel(2, _xn_minus_1(8)),
        CurveModel(3, _xn_minus_1(9)),
        CurveModel(5, UniPoly([-1, 0, 0, 0, 0, -1])),
        PlaneModel([UniPoly([1, 0, 0, -1]), UniPoly([0, 1]), UniPoly([0])]),
    ]
    leib = summ = rel = 0
    for k in range(count):
        F = models[k % len(models)]
        a = F.element([_random_ratfunc(rng) for _ in range(F.n)])
        b = F.element([_random_ratfunc(rng) for _ in range(F.n)])
        da, db = a.derivative(), b.derivative()
        leib += (a * b).derivative() == da * b + a * db
        summ += (a + b).derivative() == da + db
        y = F.y()
        dy = y.derivative()
        if isinstance(F, CurveModel):
            rel += (y ** (F.n - 1)) * dy * F.n == F.element([RatFunc(F.f.derivative())])
        else:
            # d/dx of E(x, y) = y^n + sum a_b y^b vanishes identically
            total = (y ** (F.n - 1)) * dy * F.n
            for bpow, ab in enumerate(F.lower):
                total = total + F.element([RatFunc(ab.derivative())]) * (y ** bpow)
                if bpow:
                    total = total + F.element([RatFunc(ab)]) * (y ** (bpow - 1)) * dy * bpow
            rel += total.is_zero()
    return leib, summ, rel


def _row10(curves: list[CurveAnalysis], identical: bool | None) -> RowResult:
    checks = [Check("mu2 dual-formula agreements (all I2 basis elements)",
                    sum(a.dim_i2 for a in curves), sum(a.mu2_dual_checks for a in curves))]
    n = 100
    leib, summ, rel = leibniz_checks(n)
    checks += [Check("Leibniz rule on random elements", n, leib),
               Check("sum rule on random elements", n, summ),
               Check("defining relation differentiated", n, rel)]
    mods = [m for a in curves for m in a.modular_checks]
    checks.append(Check("modular rank = exact rank (3 primes per matrix)", len(mods),
                        sum(m["agree"] for m in mods)))
    if identical is not None:
        checks.append(Check("byte-identical results across thread counts", True, identical))
    return RowResult(10, "property suites", checks)


def _corpus_bytes(curves: list[CurveAnalysis]) -> str:
    payload = []
    for a in curves:
        d = a.as_dict()
        d.pop("timings_ms")
        payload.append(d)
    return dumps(payload)


ALL_ROWS = tuple(range(1, 11))


def run_verify(rows: tuple[int, ...] = ALL_ROWS, jobs: int = 1,
               thread_check: bool = True,
               progress: Callable[[str], None] | None = None) -> list[RowResult]:
    try:
        return _run_verify(rows, jobs, thread_check, progress or (lambda s: None))
    except Exception as exc:  # the shared corpus itself failed: every row fails
        err = f"{type(exc).__name__}: {exc}"
        return [RowResult(r, f"row {r}", [], error=err) for r in rows]


def _run_verify(rows: tuple[int, ...], jobs: int, thread_check: bool,
                say: Callable[[str], None]) -> list[RowResult]:
    named = named_curves()
    need_hyp = bool({1, 5, 6, 7, 8, 9, 10} & set(rows))
    hyp_curves = hyperelliptic_corpus() if need_hyp else []
    say(f"analyzing {len(hyp_curves)} hyperelliptic curves")
    hyp, hyp_t = run_corpus(hyp_curves, jobs)
    order = ["trig-g7", "trig-g9", "trig-g12", "quintic-g6", "trig-g4"]
    say("analyzing trigonal and plane quintic curves")
    named_res, named_t = run_corpus([named[k] for k in order], jobs)
    by = dict(zip(order, named_res))
    tby = dict(zip(order, named_t))
    everything = hyp + named_res
    rows_1_3 = hyp + [by["trig-g7"], by["trig-g9"], by["trig-g12"]]

    identical = None
    if 10 in rows and thread_check:
        other = 2 if jobs == 1 else 1
        say(f"re-running the corpus with {other} thread(s)")
        again_h, _ = run_corpus(hyp_curves, other)
        again_n, _ = run_corpus([named[k] for k in order], other)
        identical = _corpus_bytes(everything) == _corpus_bytes(again_h + again_n)

    builders = {
        1: lambda: _row1(hyp, sum(hyp_t)),
        2: lambda: _row2(by["trig-g7"], tby["trig-g7"]),
        3: lambda: _row3(by["trig-g9"], by["trig-g12"], tby["trig-g9"] + tby["trig-g12"]),
        4: lambda: _row4(by["quintic-g6"], tby["quintic-g6"]),
        5: lambda: _row5(hyp + [by[k] for k in order]),
        6: lambda: _row6(hyp + [by["trig-g7"], by["trig-g9"], by["trig-g12"]]),
        7: lambda: _row7(rows_1_3),
        8: lambda: _row8(rows_1_3),
        9: lambda: _row9(everything),
        10: lambda: _row10(everything, identical),
    }
    out = []
    for r in rows:
        try:
            out.append(builders[r]())
        except Exception as exc:  # a crashing row is a failing row
            out.append(RowResult(r, f"row {r}", [], error=f"{type(exc).__name__}: {exc}"))
    return out


def verify_payload(results: list[RowResult]) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "seed": SEED,
        "all_passed": all(r.passed for r in results),
        "rows": [r.as_dict() for r in results],
    }


def render_verify_table(results: list[RowResult]) -> str:
    lines = []
    for r in results:
        ok = sum(c.passed for c in r.checks)
        budget = "" if r.budget_seconds is None else f"  {r.elapsed:.1f}s/{r.budget_seconds:g}s"
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"[{status}] row {r.row:>2}  {r.title}  ({ok}/{len(r.checks)} checks){budget}")
        if r.error:
            lines.append(f"        error: {r.error}")
        for c in r.checks:
            if not c.passed:
                lines.append(f"        {c.name}: expected {c.expected!r}, observed {c.observed!r}")
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} rows passed")
    return "\n".join(lines) + "\n"


__all__ = [
    "ALL_ROWS",
    "Check",
    "RowResult",
    "hyperelliptic_corpus",
    "leibniz_checks",
    "named_curves",
    "render_verify_table",
    "run_corpus",
    "run_verify",
    "verify_payload",
]
