"""Machine-readable reports: stable key-sorted JSON with exact numbers only."""
from __future__ import annotations

import json
from importlib import resources
from dataclasses import asdict, dataclass, field, fields
from typing import Any

from .analysis import CurveAnalysis

SCHEMA_VERSION = "1.0"


def load_schema(name: str) -> dict:
    """Bundled JSON schema: "report" or "verify"."""
    text = resources.files("gaussmaps").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


def dumps(obj: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True, allow_nan=False) + "\n"


@dataclass
class RankReport:
    n: int
    f: str
    genus: int
    d: int
    m: int
    label: str | None
    dim_i2: int
    dim_i2_expected: int
    rank_mu1K: int
    corank_mu1K: int
    rank_mu1L: int
    unramified_shift: int | None
    rank_mu2: int
    lower_bound_g_minus_3: bool
    base_locus: dict | None
    factorization_checks_passed: int
    factorization_checks_total: int
    psi_rank: int
    mu2_dual_checks: int
    modular_checks: list = field(default_factory=list)
    timings: dict | None = None
    schema_version: str = SCHEMA_VERSION

    @classmethod
    def from_analysis(cls, a: CurveAnalysis, *, timings: bool = False) -> "RankReport":
        return cls(
            n=a.n, f=a.f, genus=a.genus, d=a.d, m=a.m, label=a.label,
            dim_i2=a.dim_i2, dim_i2_expected=a.dim_i2_expected,
            rank_mu1K=a.rank_mu1K, corank_mu1K=a.corank_mu1K,
            rank_mu1L=a.rank_mu1L, unramified_shift=a.unramified_shift,
            rank_mu2=a.rank_mu2, lower_bound_g_minus_3=a.lower_bound_ok,
            base_locus=a.base_locus,
            factorization_checks_passed=a.factorization_checks_passed or 0,
            factorization_checks_total=a.factorization_total or 0,
            psi_rank=a.psi_rank or 0,
            mu2_dual_checks=a.mu2_dual_checks,
            modular_checks=list(a.modular_checks),
            timings=dict(a.timings_ms) if timings else None,
        )

    def to_dict(self) -> dict:
        d = asdict(self)
        if d["timings"] is None:
            del d["timings"]
        return d

    def to_json(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "RankReport":
        names = {f.name for f in fields(cls)}
        unknown = set(d) - names
        if unknown:
            raise ValueError(f"unknown report keys: {sorted(unknown)}")
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> "RankReport":
        return cls.from_dict(json.loads(text))

    def table_row(self) -> list[str]:
        return [self.label or "", str(self.n), self.f, str(self.genus), str(self.dim_i2),
                str(self.rank_mu1K), str(self.rank_mu1L), str(self.rank_mu2),
                "free" if self.base_locus and self.base_locus["is_free"] else
                ("-" if self.base_locus is None else "base points")]


TABLE_HEADER = ["label", "n", "f", "g", "dim I2", "rk mu1K", "rk mu1L", "rk mu2", "base locus"]


def render_table(rows: list[list[str]], header: list[str] = TABLE_HEADER) -> str:
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    fmt = lambda r: "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()  # noqa: E731
    lines = [fmt(header), fmt(["-" * w for w in widths])]
    lines += [fmt(r) for r in rows]
    return "\n".join(lines) + "\n"


__all__ = ["RankReport", "SCHEMA_VERSION", "TABLE_HEADER", "dumps", "load_schema", "render_table"]
