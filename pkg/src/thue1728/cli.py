"""Command-line interface.

Subcommands mirror the library layers: unit and pell/orbits expose the
quadratic-ring groundwork, reduce and thue-solve the Thue machinery,
bounds the closed-form counts, curve and verify the curve-level
enumeration and the end-to-end checks.  Exit codes: 0 success, 1 usage or
domain error, 2 reserved for a verified bound violation (only `verify`
can produce one).  All output is deterministic for fixed inputs; JSON is
sorted, numbers that can exceed float range are emitted as strings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .arith import is_squarefree
from .bounds import (
    quartic_count_bound,
    small_k_count_bound,
    curve_count_bound,
    walsh_comparison,
)
from .curves import decompose_point, enumerate_curve_points, verify_theorems
from .pell import enumerate_pell, fundamental_bounds, orbit_count_bound, orbits
from .quadratic import fundamental_unit, plus_one_unit, unit_upper_bound
from .quartic import QuarticForm, invariants
from .reduction import reduce_equation
from .thue import (
    applicable_epsilon,
    classify_solutions,
    enumerate_thue,
    equation_count_bound,
    gap_chain_report,
    inequality_count_bound,
)


@dataclass
class RunConfig:
    """Resolved run-wide settings shared by every subcommand.

    Defaults: precision 256 bits, tol 1e-9, box 10000, ymax 10000,
    jobs 1.  All must be positive.  ``pell`` treats an *unset* --ymax
    specially (it scans exactly the fundamental-solution box); every
    other subcommand reads the resolved values below.
    """

    box: int = 10_000
    ymax: int = 10_000
    precision: int = 256
    tol: float = 1e-9
    jobs: int = 1
    output: str = "text"


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; this toolkit reserves 2 for bound
    violations, so usage problems exit 1 instead."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


# box/ymax use a None sentinel so `pell` can tell "flag not given" apart
# from an explicit 10000; main() resolves them to the documented defaults.
_RESOLVED_BOX = 10_000
_RESOLVED_YMAX = 10_000

_FLAG_DEFAULTS = {
    "box": None,
    "ymax": None,
    "precision": 256,
    "tol": 1e-9,
    "jobs": 1,
    "output": "text",
}


def _add_flags(p: argparse.ArgumentParser, top: bool) -> None:
    # On the top-level parser the flags carry the real defaults; on the
    # subparsers they default to SUPPRESS so a flag given before the
    # subcommand is not clobbered.  Either position works.
    d = (lambda k: _FLAG_DEFAULTS[k]) if top else (lambda k: argparse.SUPPRESS)
    p.add_argument("--box", type=int, default=d("box"),
                   help="search box: x,y box for thue-solve, X ceiling for "
                        "curve/verify (default 10000)")
    p.add_argument("--ymax", type=int, default=d("ymax"),
                   help="y ceiling for quartic scans (default 10000; pell: "
                        "the fundamental-solution box)")
    p.add_argument("--precision", type=int, default=d("precision"),
                   help="working precision in bits for floating checks")
    p.add_argument("--tol", type=float, default=d("tol"),
                   help="tolerance for the analytic gates")
    p.add_argument("--jobs", type=int, default=d("jobs"),
                   help="parallel workers (verify only, across curves)")
    p.add_argument("--output", choices=("json", "csv", "text"), default=d("output"),
                   help="output format")


_OUTPUT_DOC = """\
output formats:
  json   two-space indent, keys sorted; integers of magnitude >= 2^53 are
         emitted as decimal strings so float-based JSON readers lose nothing
  csv    exactly two columns with header `key,value`; nested keys are joined
         with dots, list positions appear as [i], and lists of plain scalars
         are semicolon-joined inside the value cell
  text   indented `key: value` lines (default)

Configuration comes only from flags, so a command line fully determines the
output bytes.  The one environment variable read, THUE1728_BACKEND
(numba|numpy|exact), picks the compute backend; all backends produce
identical results, so it never affects output.
"""


def _build_parser() -> _Parser:
    p = _Parser(
        prog="thue1728",
        description="Integral points on Y^2 = X^3 - N*X via quartic Thue equations.",
        epilog=_OUTPUT_DOC,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    _add_flags(p, top=True)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def _sub(name: str, help_text: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_text)
        _add_flags(sp, top=False)
        return sp

    sp = _sub("unit", "fundamental unit of Z[sqrt(D)]")
    sp.add_argument("D", type=int)

    sp = _sub("pell", "x^2 - D*y^2 = k inside the fundamental box")
    sp.add_argument("D", type=int)
    sp.add_argument("k", type=int)

    sp = _sub("orbits", "orbit classification for x^2 - D*y^2 = k")
    sp.add_argument("D", type=int)
    sp.add_argument("k", type=int)

    sp = _sub("reduce", "reduce x^2 - D*y^4 = k to Thue equations")
    sp.add_argument("D", type=int)
    sp.add_argument("k", type=int)

    sp = _sub("thue-solve", "solve |F(x,y)| = h in a box")
    sp.add_argument("coeffs", help="a0,a1,a2,a3,a4 (comma separated)")
    sp.add_argument("h", type=int)

    sp = _sub("bounds", "closed-form solution-count bounds")
    sp.add_argument("variant", choices=("main", "mainqe", "missproof", "walsh"))
    sp.add_argument("args", nargs="*",
                    help="main/mainqe/walsh: D k; missproof: N")

    sp = _sub("curve", "integral points on Y^2 = X^3 - N*X")
    sp.add_argument("N", type=int)

    sp = _sub("verify", "verify all bounds for a range of N")
    sp.add_argument("N_start", type=int)
    sp.add_argument("N_end", type=int)

    return p


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (result dict, exit code)
# ---------------------------------------------------------------------------


def _cmd_unit(args, cfg: RunConfig):
    u = fundamental_unit(args.D)
    tp, up = plus_one_unit(args.D)
    log_bound = unit_upper_bound(args.D)
    return {
        "command": "unit",
        "D": args.D,
        "T": u.T,
        "U": u.U,
        "norm": u.norm,
        "cf_period": u.cf_period,
        "log_value": u.log_value(),
        "plus_one_unit": {"T": tp, "U": up},
        "log_upper_bound": log_bound,
        "within_log_bound": u.log_value() <= log_bound,
    }, 0


def _cmd_pell(args, cfg: RunConfig):
    y_box, plus = fundamental_bounds(args.D, args.k)
    # unset --ymax means "exactly the fundamental box", not the global default
    y_used = args.ymax if args.ymax is not None else y_box
    sols = enumerate_pell(args.D, args.k, y_used)
    return {
        "command": "pell",
        "D": args.D,
        "k": args.k,
        "fundamental_y_box": y_box,
        "y_scanned": y_used,
        "plus_one_unit": list(plus),
        "solutions": [[s.x, s.y] for s in sols],
        "count": len(sols),
    }, 0


def _cmd_orbits(args, cfg: RunConfig):
    orbs = orbits(args.D, args.k)
    bound = orbit_count_bound(args.k)
    rows = []
    for o in orbs:
        rows.append(
            {
                "fundamental": [o.fundamental.x, o.fundamental.y],
                "members_in_box": [[s.x, s.y] for s in o.members_found],
                "coprime": o.coprime,
                "plus_unit": list(o.plus_unit),
                "unit_norm": o.unit_norm,
                "y_at_boundary": o.y_at_boundary,
                "x_at_boundary": o.x_at_boundary,
                "notes": o.notes,
            }
        )
    coprime_count = sum(1 for o in orbs if o.coprime)
    return {
        "command": "orbits",
        "D": args.D,
        "k": args.k,
        "orbit_count": len(orbs),
        "coprime_orbit_count": coprime_count,
        "coprime_bound": bound,
        "within_bound": coprime_count <= bound,
        "orbits": rows,
    }, 0


def _cmd_reduce(args, cfg: RunConfig):
    res = reduce_equation(args.D, args.k, prec=cfg.precision)
    inst_rows = []
    for inst in res.instances:
        targets = inst.targets()
        truncated = len(targets) > 64
        inst_rows.append(
            {
                "parity": inst.branch.parity,
                "s": inst.branch.s,
                "t": inst.branch.t,
                "multiplier_norm": inst.branch.norm_value,
                "conic_base": list(inst.param.base),
                "rows": [inst.param.R1, inst.param.S1, inst.param.T1,
                         inst.param.R2, inst.param.S2, inst.param.T2],
                "z1": inst.param.z1,
                "form": list(inst.form.coeffs),
                "I": str(inst.I),
                "J": str(inst.J),
                "discriminant": str(inst.Delta),
                "irreducible": inst.irreducible,
                "real_root_count": inst.real_root_count,
                "lemma_I_diagnostic": {
                    "applicable": inst.lemma_check["applicable"],
                    "expected_I": str(inst.lemma_check["expected_I"]),
                    "matches": inst.lemma_check["matches"],
                },
                "delta": inst.delta,
                "targets": targets[:64],
                "targets_truncated": truncated,
                "notes": inst.notes,
            }
        )
    return {
        "command": "reduce",
        "D": args.D,
        "k": args.k,
        "orbit_count": res.orbit_count,
        "instances": inst_rows,
        "excluded_branches": [b.describe() for b in res.excluded_branches],
        "conic_failures": [
            {
                "branch": f["branch"].describe(),
                "error": f["error"],
                "obstructed": f["obstructed"],
                "modulus": f["modulus"],
            }
            for f in res.conic_failures
        ],
    }, 0


def _cmd_thue_solve(args, cfg: RunConfig):
    try:
        coeffs = tuple(int(c.strip()) for c in args.coeffs.split(","))
    except ValueError as exc:
        raise ValueError(f"coefficients must be integers: {exc}") from None
    if len(coeffs) != 5:
        raise ValueError(f"need exactly 5 coefficients, got {len(coeffs)}")
    F = QuarticForm(*coeffs)
    box = cfg.box
    sols = enumerate_thue(F, args.h, box)
    inv = invariants(F)
    result = {
        "command": "thue-solve",
        "coeffs": list(coeffs),
        "h": args.h,
        "box": box,
        "invariants": {"I": str(inv.I), "J": str(inv.J), "Delta": str(inv.Delta)},
        "solutions": [[s.x, s.y, s.value] for s in sols],
        "count": len(sols),
    }
    if args.h >= 1:
        result["equation_count_bound"] = equation_count_bound(args.h)
        result["within_bound"] = len(sols) <= result["equation_count_bound"]
        eps = applicable_epsilon(inv.I, args.h) if inv.I > 1 else None
        result["admissible_epsilon"] = eps
        if eps is not None:
            result["inequality_count_bound"] = inequality_count_bound(
                Fraction(eps).limit_denominator(10**9)
            )
    try:
        classified = classify_solutions(F, sols, args.h,
                                        prec=cfg.precision, tol=cfg.tol)
        result["classified"] = [
            {
                "x": c.solution.x,
                "y": c.solution.y,
                "related_root": c.related_root,
                "large": c.large,
                "xi_abs": c.xi_abs,
                "z_abs": c.z_abs,
                "circle_deviation": c.circle_deviation,
            }
            for c in classified
        ]
        result["gap_report"] = gap_chain_report(F, sols, args.h,
                                                prec=cfg.precision, tol=cfg.tol)
    except ValueError as exc:
        result["classification"] = f"unavailable: {exc}"
    return result, 0


def _cmd_bounds(args, cfg: RunConfig):
    variant = args.variant
    rest = args.args
    if variant in ("main", "mainqe", "walsh"):
        if len(rest) != 2:
            raise ValueError(f"bounds {variant} needs D and k")
        D, k = int(rest[0]), int(rest[1])
        if variant == "main":
            rep = quartic_count_bound(D, k, prec=cfg.precision)
            body = rep.as_dict()
        elif variant == "mainqe":
            rep = small_k_count_bound(D, k, prec=cfg.precision)
            body = rep.as_dict()
        else:
            body = walsh_comparison(D, k, prec=cfg.precision)
        return {"command": "bounds", "variant": variant, **body}, 0
    # missproof: the divisor-sum bound on curve points, parametrized by N
    if len(rest) != 1:
        raise ValueError("bounds missproof needs N (a positive integer)")
    try:
        N = int(rest[0])
    except ValueError:
        raise ValueError(f"bounds missproof needs an integer N, got {rest[0]!r}") from None
    rep = curve_count_bound(N, prec=cfg.precision)
    return {"command": "bounds", "variant": "missproof", **rep.as_dict()}, 0


def _cmd_curve(args, cfg: RunConfig):
    x_max = cfg.box
    points = enumerate_curve_points(args.N, x_max)
    generic, exceptional = [], []
    if is_squarefree(args.N):
        for pt in points:
            d = decompose_point(pt, args.N)
            (generic if d["generic"] else exceptional).append(d)
    cb = curve_count_bound(args.N, prec=cfg.precision) if is_squarefree(args.N) else None
    result = {
        "command": "curve",
        "N": args.N,
        "x_max": x_max,
        "squarefree": is_squarefree(args.N),
        "points": [[p.X, p.Y] for p in points],
        "point_count": len(points),
    }
    if cb is not None:
        generic_total = 2 * len(generic)
        result.update(
            {
                "generic": generic,
                "exceptional": exceptional,
                "generic_count_both_signs": generic_total,
                "curve_bound": cb.as_dict(),
                "within_bound": (not cb.applicable) or (
                    float(generic_total) <= 10 ** cb.log10_value + 0.5
                ),
            }
        )
    else:
        result["note"] = "decomposition and bound need squarefree N"
    return result, 0


def _verify_one(task):
    N, x_max, y_max, prec = task
    rep = verify_theorems(N, x_max=x_max, y_max=y_max, prec=prec)
    return rep.as_dict()


def _cmd_verify(args, cfg: RunConfig):
    if args.N_start < 1 or args.N_end < args.N_start:
        raise ValueError("need 1 <= N_start <= N_end")
    x_max = cfg.box
    y_max = cfg.ymax
    targets = [N for N in range(args.N_start, args.N_end + 1) if is_squarefree(N)]
    skipped = [N for N in range(args.N_start, args.N_end + 1) if not is_squarefree(N)]
    tasks = [(N, x_max, y_max, cfg.precision) for N in targets]
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            curves = list(pool.map(_verify_one, tasks))
    else:
        curves = [_verify_one(t) for t in tasks]
    violations = sum(len(c["violations"]) for c in curves)
    result = {
        "command": "verify",
        "range": [args.N_start, args.N_end],
        "x_max": x_max,
        "y_max": y_max,
        "curves": curves,
        "skipped_non_squarefree": skipped,
        "curves_checked": len(curves),
        "violations_total": violations,
        "ok": violations == 0,
    }
    return result, (0 if violations == 0 else 2)


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _flatten(prefix: str, obj, rows: list):
    if isinstance(obj, dict):
        for k, v in obj.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, rows)
    elif isinstance(obj, (list, tuple)):
        if all(not isinstance(x, (dict, list, tuple)) for x in obj):
            rows.append((prefix, ";".join(str(x) for x in obj)))
        else:
            for i, v in enumerate(obj):
                _flatten(f"{prefix}[{i}]", v, rows)
    else:
        rows.append((prefix, obj))


def _render_text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list, tuple)) and v and any(
                isinstance(x, (dict, list, tuple))
                for x in (v.values() if isinstance(v, dict) else v)
            ):
                lines.append(f"{pad}{k}:")
                lines.extend(_render_text(v, indent + 1))
            elif isinstance(v, dict) and not v:
                lines.append(f"{pad}{k}: {{}}")
            elif isinstance(v, (list, tuple)):
                lines.append(f"{pad}{k}: [{', '.join(str(x) for x in v)}]")
            elif isinstance(v, dict):
                inner = ", ".join(f"{a}={b}" for a, b in v.items())
                lines.append(f"{pad}{k}: {inner}")
            else:
                lines.append(f"{pad}{k}: {v}")
    elif isinstance(obj, (list, tuple)):
        for v in obj:
            if isinstance(v, (list, tuple)) and all(
                not isinstance(x, (dict, list, tuple)) for x in v
            ):
                lines.append(f"{pad}- [{', '.join(str(x) for x in v)}]")
            elif isinstance(v, (dict, list, tuple)):
                lines.append(f"{pad}-")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {v}")
    else:
        lines.append(f"{pad}{obj}")
    return lines


# JSON numbers above this magnitude would lose digits in readers that parse
# integers into 64-bit floats, so they are emitted as decimal strings.
_JSON_INT_LIMIT = 2**53


def _stringify_big(obj):
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) >= _JSON_INT_LIMIT else obj
    if isinstance(obj, dict):
        return {k: _stringify_big(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify_big(v) for v in obj]
    return obj


def _emit(obj: dict, cfg: RunConfig) -> None:
    if cfg.output == "json":
        print(json.dumps(_stringify_big(obj), indent=2, sort_keys=True, default=str))
    elif cfg.output == "csv":
        rows: list = []
        _flatten("", obj, rows)
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("key", "value"))
        for key, value in rows:
            w.writerow((key, value))
        sys.stdout.write(buf.getvalue())
    else:
        print("\n".join(_render_text(obj)))


_HANDLERS = {
    "unit": _cmd_unit,
    "pell": _cmd_pell,
    "orbits": _cmd_orbits,
    "reduce": _cmd_reduce,
    "thue-solve": _cmd_thue_solve,
    "bounds": _cmd_bounds,
    "curve": _cmd_curve,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = RunConfig(
        box=args.box if args.box is not None else _RESOLVED_BOX,
        ymax=args.ymax if args.ymax is not None else _RESOLVED_YMAX,
        precision=args.precision,
        tol=args.tol,
        jobs=args.jobs,
        output=args.output,
    )
    if cfg.precision < 64:
        sys.stderr.write("thue1728: error: --precision must be >= 64\n")
        return 1
    if cfg.box < 1 or cfg.ymax < 1 or cfg.jobs < 1 or not cfg.tol > 0:
        sys.stderr.write(
            "thue1728: error: --box, --ymax, --jobs must be positive, --tol > 0\n"
        )
        return 1
    try:
        result, code = _HANDLERS[args.command](args, cfg)
    except ValueError as exc:
        sys.stderr.write(f"thue1728: error: {exc}\n")
        return 1
    _emit(result, cfg)
    return code


if __name__ == "__main__":
    sys.exit(main())
