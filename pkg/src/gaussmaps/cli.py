"""Command-line entry point: analyze, sweep, numerology, verify-paper, baselocus."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from math import gcd
from pathlib import Path

from . import numerology
from .analysis import analyze_curve, ram_place_classes
from .base_locus import base_locus
from .canonical import smallest_unramified_shift
from .errors import CurveError
from .exact import X
from .function_field import CurveModel
from .gaussian import basis_of, i2_basis, mu1_canonical, mu1_restricted, rank_mu2
from .parsing import PolySyntaxError, parse_poly
from .report import SCHEMA_VERSION, TABLE_HEADER, RankReport, dumps, render_table

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


class InputError(ValueError):
    pass


@dataclass
class CurveSpec:
    n: int
    f_source: str
    label: str | None = None
    ram_moduli: tuple[str, ...] = ()

    @classmethod
    def from_dict(cls, d: dict) -> "CurveSpec":
        if not isinstance(d, dict):
            raise InputError("curve spec must be an object")
        unknown = set(d) - {"n", "f", "label", "ram_moduli"}
        if unknown:
            raise InputError(f"unknown curve spec keys: {sorted(unknown)}")
        if "n" not in d or "f" not in d:
            raise InputError("curve spec needs 'n' and 'f'")
        if not isinstance(d["n"], int) or isinstance(d["n"], bool):
            raise InputError("'n' must be an integer")
        return cls(d["n"], str(d["f"]), d.get("label"), tuple(d.get("ram_moduli") or ()))

    def curve(self) -> CurveModel:
        return CurveModel(self.n, parse_poly(self.f_source), self.label)

    def moduli(self):
        return [parse_poly(s) for s in self.ram_moduli] or None


def load_config(path: str) -> list[CurveSpec]:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read config: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"config is not valid JSON: {exc}") from None
    if isinstance(data, dict):
        data = data.get("curves")
    if not isinstance(data, list):
        raise InputError("config must be a list of curve specs or {\"curves\": [...]}")
    return [CurveSpec.from_dict(d) for d in data]


def run_analyze(spec: CurveSpec, *, timings: bool = False, modular: int = 0) -> RankReport:
    a = analyze_curve(spec.curve(), ram_moduli=spec.moduli(), modular_primes=modular)
    return RankReport.from_analysis(a, timings=timings)


def _map(fn, items, jobs: int):
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, items))
    return [fn(x) for x in items]


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommands

def cmd_analyze(args) -> int:
    if args.general:
        return _analyze_general(args)
    if args.config:
        specs = load_config(args.config)
    else:
        if args.n is None or args.f is None:
            raise InputError("analyze needs --n and --f, --config, or --general")
        specs = [CurveSpec(args.n, args.f, args.label, tuple(args.ram_moduli or ()))]
    reports = _map(lambda s: run_analyze(s, timings=args.timings, modular=args.modular), specs, args.jobs)
    if args.json:
        if len(reports) == 1 and not args.config:
            text = reports[0].to_json()
        else:
            text = dumps({"schema_version": SCHEMA_VERSION, "reports": [r.to_dict() for r in reports]})
    else:
        text = render_table([r.table_row() for r in reports])
        if args.timings:
            for r in reports:
                text += f"{r.label or r.f}: " + ", ".join(f"{k} {v} ms" for k, v in r.timings.items()) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def _analyze_general(args) -> int:
    from .general import analyze_general, parse_form, parse_plane_model

    try:
        data = json.loads(Path(args.general).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot load general model: {exc}") from None
    if not isinstance(data, dict) or "equation" not in data or "basis" not in data:
        raise InputError("general model needs 'equation' and 'basis'")
    model = parse_plane_model(data["equation"])
    forms = [parse_form(model, b) for b in data["basis"]]
    res = asdict(analyze_general(model, forms))
    res["schema_version"] = SCHEMA_VERSION
    if args.json:
        text = dumps(res)
    else:
        text = f"WARNING: {res['caveat']}\n" + "".join(
            f"{k}: {res[k]}\n" for k in ("n", "basis_size", "dim_i2", "rank_mu1K", "rank_mu2"))
    if args.json or args.output:
        sys.stderr.write(f"warning: {res['caveat']}\n")
    _emit(text, args.output)
    return EXIT_OK


def sweep_specs(args) -> list[CurveSpec]:
    specs = []
    if args.family == "hyperelliptic":
        for g in range(args.g_min, args.g_max + 1):
            specs.append(CurveSpec(2, f"x^{2 * g + 2} - 1", f"hyp-g{g}"))
    else:
        if args.n is None:
            raise InputError("cyclic sweep needs --n")
        for m in range(args.m_min, args.m_max + 1):
            if gcd(args.n, m) not in (1, args.n):
                continue
            spec = CurveSpec(args.n, f"x^{m} - 1", f"n{args.n}-m{m}")
            if spec.curve().genus >= 3:
                specs.append(spec)
    if not specs:
        raise InputError("sweep range is empty")
    return specs


CSV_FIELDS = ["label", "n", "f", "genus", "d", "m", "dim_i2", "rank_mu1K", "corank_mu1K",
              "rank_mu1L", "rank_mu2", "lower_bound_g_minus_3", "psi_rank",
              "factorization_checks_passed", "base_locus_free"]


def _csv_text(reports: list[RankReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in reports:
        d = r.to_dict()
        d["base_locus_free"] = None if r.base_locus is None else r.base_locus["is_free"]
        w.writerow(["" if d[k] is None else d[k] for k in CSV_FIELDS])
    return buf.getvalue()


def cmd_sweep(args) -> int:
    specs = sweep_specs(args)
    reports = _map(lambda s: run_analyze(s), specs, args.jobs)
    if args.csv:
        Path(args.csv).write_text(_csv_text(reports))
    if args.plot:
        from .plotting import plot_rank_vs_genus

        title = "y^2 = x^(2g+2) - 1" if args.family == "hyperelliptic" else f"y^{args.n} = x^m - 1"
        plot_rank_vs_genus(reports, args.plot, title)
    if args.json:
        _emit(dumps({"schema_version": SCHEMA_VERSION, "reports": [r.to_dict() for r in reports]}), args.output)
    else:
        _emit(render_table([r.table_row() for r in reports], TABLE_HEADER), args.output)
    return EXIT_OK


def cmd_numerology(args) -> int:
    out = {}
    if args.genus_product:
        out["genus_product"] = numerology.genus_product(numerology.ProductCurveSpec(*args.genus_product))
    if args.wahl:
        out["wahl_product_hypotheses"] = numerology.wahl_product_hypotheses(numerology.ProductCurveSpec(*args.wahl))
    if args.dim_i2 is not None:
        out["dim_i2_expected"] = numerology.dim_i2_expected(args.dim_i2, args.hyperelliptic)
    if args.h0:
        out["h0_kK"] = numerology.h0_kK(*args.h0)
    if args.bel:
        out["bel_criterion"] = numerology.bel_criterion(*args.bel)
    if args.maroni:
        out["maroni_admissible"] = numerology.maroni_admissible(*args.maroni)
    if args.surj is not None:
        out["surj_possible"] = numerology.surj_possible(args.surj)
    if args.threshold or not out:
        out["surjectivity_threshold"] = numerology.surjectivity_threshold()
    if args.json:
        _emit(dumps(out), None)
    else:
        _emit("".join(f"{k}: {json.dumps(v)}\n" for k, v in sorted(out.items())), None)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import ALL_ROWS, render_verify_table, run_verify, verify_payload

    rows = tuple(args.rows) if args.rows else ALL_ROWS
    bad = [r for r in rows if r not in ALL_ROWS]
    if bad:
        raise InputError(f"no such acceptance rows: {bad}")
    progress = (lambda s: sys.stderr.write(s + "\n")) if args.verbose else None
    results = run_verify(rows, jobs=args.jobs, thread_check=not args.skip_thread_check,
                         progress=progress)
    payload = verify_payload(results)
    if args.json:
        _emit(dumps(payload), args.output)
    else:
        _emit(render_verify_table(results), args.output)
    return EXIT_OK if payload["all_passed"] else EXIT_CHECK_FAILED


SYSTEMS = ("mu2", "canonical", "mu1K", "mu1L")


def cmd_baselocus(args) -> int:
    spec = CurveSpec(args.n, args.f, args.label, tuple(args.ram_moduli or ()))
    curve = spec.curve()
    classes = ram_place_classes(curve, spec.moduli())
    if args.system == "mu2":
        images = rank_mu2(curve, i2_basis(curve)).images
    elif args.system == "canonical":
        images = basis_of(curve).forms
    elif args.system == "mu1K":
        images = mu1_canonical(curve).images
    else:
        if curve.f(0) == 0:
            t = smallest_unramified_shift(curve.f)
            curve = CurveModel(curve.n, curve.f.compose(X + t), curve.label)
            classes = ram_place_classes(curve, None)
        images = mu1_restricted(curve).images
    if not any(not w.is_zero() for w in images):
        raise InputError("the chosen system is zero on this curve")
    verdict = base_locus(images, classes).summary()
    out = {"schema_version": SCHEMA_VERSION, "n": curve.n, "f": curve.f.render(),
           "system": args.system, "base_locus": verdict}
    if args.json:
        _emit(dumps(out), args.output)
    else:
        lines = [f"system {args.system} on y^{curve.n} = {curve.f.render()}: "
                 + ("base point free" if verdict["is_free"] else "has base points")]
        for r in verdict["ram"]:
            lines.append(f"  ramification {r['modulus']}: min order {r['min_order']}")
        for r in verdict["infinity"]:
            lines.append(f"  infinity {r['class']}: min order {r['min_order']}")
        aff = verdict["affine_unramified"]
        lines.append(f"  affine unramified: {aff if isinstance(aff, str) else aff}")
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser

def _curve_args(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--n", type=int, required=required, help="exponent of y")
    p.add_argument("--f", required=required, help="polynomial in x, e.g. 'x^9 - 1'")
    p.add_argument("--label")
    p.add_argument("--ram-moduli", nargs="+", metavar="POLY",
                   help="squarefree, pairwise coprime divisors of f to report separately")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gaussmaps", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="ranks, quadrics and base locus for one or more curves")
    _curve_args(p, False)
    p.add_argument("--config", help="JSON list of curve specs (or {\"curves\": [...]})")
    p.add_argument("--general", metavar="FILE",
                   help="JSON with a monic-in-y equation and a differential basis")
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true", help="include per-stage timings")
    p.add_argument("--modular", type=int, default=0, metavar="K",
                   help="cross-check every rank modulo K random primes")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", help="rank table over a family")
    p.add_argument("--family", choices=("hyperelliptic", "cyclic"), default="hyperelliptic")
    p.add_argument("--g-min", type=int, default=3)
    p.add_argument("--g-max", type=int, default=8)
    p.add_argument("--n", type=int)
    p.add_argument("--m-min", type=int, default=4)
    p.add_argument("--m-max", type=int, default=10)
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--plot", metavar="PATH", help="write a PNG of rank against genus")
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("numerology", help="closed-form dimension counts")
    p.add_argument("--genus-product", nargs=4, type=int, metavar=("G1", "G2", "D1", "D2"))
    p.add_argument("--wahl", nargs=4, type=int, metavar=("G1", "G2", "D1", "D2"))
    p.add_argument("--dim-i2", type=int, metavar="G")
    p.add_argument("--hyperelliptic", action="store_true")
    p.add_argument("--h0", nargs=2, type=int, metavar=("G", "K"))
    p.add_argument("--bel", nargs=2, type=int, metavar=("G", "L"))
    p.add_argument("--maroni", nargs=2, type=int, metavar=("G", "K"))
    p.add_argument("--surj", type=int, metavar="G")
    p.add_argument("--threshold", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_numerology)

    p = sub.add_parser("verify-paper", help="run the replication suite")
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--rows", nargs="+", type=int)
    p.add_argument("--skip-thread-check", action="store_true",
                   help="do not re-run the corpus with a second thread count")
    p.add_argument("-v", "--verbose", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("baselocus", help="base locus of a linear system on a curve")
    _curve_args(p, True)
    p.add_argument("--system", choices=SYSTEMS, default="mu2")
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_baselocus)
    return ap


def _diagnostic(kind: str, exc: BaseException) -> str:
    d = {"error": {"type": type(exc).__name__, "kind": kind, "message": str(exc)}}
    if isinstance(exc, PolySyntaxError):
        d["error"]["offset"] = exc.offset
    shift = getattr(exc, "shift", None)
    if shift is not None:
        d["error"]["shift"] = shift
    return json.dumps(d, sort_keys=True) + "\n"


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        sys.stderr.write(_diagnostic("input", InputError("--jobs must be positive")))
        return EXIT_INPUT
    try:
        return args.func(args)
    except AssertionError as exc:
        sys.stderr.write(_diagnostic("internal", exc))
        return EXIT_INTERNAL
    except (InputError, PolySyntaxError, CurveError, ValueError, ArithmeticError) as exc:
        sys.stderr.write(_diagnostic("input", exc))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
