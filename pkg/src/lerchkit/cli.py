"""Command-line front end: eval, verify, grid, constants.

Exit codes: 0 success; 1 verification failures; 2 bad arguments (parse
error, unknown identity); 3 evaluation error; 4 I/O failure.
"""
from __future__ import annotations

import argparse
import math
import re
import sys
from pathlib import Path

from .errors import LerchkitError
from .grids import AxisSpec, GridSpec, default_spec, evaluate_grid, grid_csv, render_grid
from .identities import registry
from .lerch import phi, phi_integral, phi_neg_int, phi_root_unity, phi_series, \
    recognize_root_of_unity
from .numerics import GLAISHER_REFERENCE, constants
from .verify import run, serialize_report

_BARE_I = re.compile(r"(?<![0-9.])i")


def parse_complex(text: str) -> complex:
    """Parse 'a+bi' with optional parts and scientific notation."""
    t = text.strip().replace(" ", "")
    if not t:
        raise ValueError("empty complex literal")
    t = _BARE_I.sub("1i", t).replace("i", "j")
    value = complex(t)  # raises ValueError on malformed input
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ValueError(f"non-finite complex literal: {text!r}")
    return value


def format_complex(z: complex) -> str:
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real!r}{sign}{abs(z.imag)!r}i"


def _cmd_eval(args) -> int:
    try:
        z = parse_complex(args.z)
        s = parse_complex(args.s)
        v = parse_complex(args.v)
    except ValueError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    try:
        if args.strategy is None:
            result = phi(z, s, v)
        elif args.strategy == "neg-int":
            if s.imag != 0 or not s.real.is_integer() or s.real > 0:
                raise LerchkitError("neg-int strategy needs s a nonpositive integer")
            result = phi_neg_int(z, int(-s.real), v)
        elif args.strategy == "series":
            result = phi_series(z, s, v)
        elif args.strategy == "root-unity":
            root = recognize_root_of_unity(z)
            if root is None:
                raise LerchkitError("z not recognized as a root of unity")
            result = phi_root_unity(root, s, v)
        else:
            result = phi_integral(z, s, v)
    except LerchkitError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    print(f"value     = {format_complex(result.value)}")
    print(f"est_error = {result.est_error!r}")
    print(f"strategy  = {result.strategy}")
    print(f"work      = {result.work}")
    return 0


def _cmd_verify(args) -> int:
    known = [d.id for d in registry()]
    if args.all:
        ids = known
    elif args.identity is None:
        print("verify: give an identity id or --all", file=sys.stderr)
        return 2
    elif args.identity not in known:
        print(f"unknown identity {args.identity!r}; known: {', '.join(known)}",
              file=sys.stderr)
        return 2
    else:
        ids = [args.identity]

    report_dir: Path | None = None
    report_file: Path | None = None
    if args.report is not None:
        target = Path(args.report)
        if len(ids) > 1:
            report_dir = target
        else:
            report_file = target

    any_fail = False
    try:
        for ident in ids:
            rep = run(ident, seed=args.seed, count=args.samples,
                      tol_scale=args.tol_scale)
            any_fail = any_fail or rep.fails > 0
            print(f"{ident}: samples={rep.samples} passes={rep.passes} "
                  f"fails={rep.fails} skips={rep.skips} "
                  f"worst_rel_err={rep.worst_rel_err:.3e}")
            text = serialize_report(rep)
            if report_dir is not None:
                report_dir.mkdir(parents=True, exist_ok=True)
                (report_dir / f"{ident}.json").write_text(text)
            elif report_file is not None:
                report_file.parent.mkdir(parents=True, exist_ok=True)
                report_file.write_text(text)
    except OSError as exc:
        print(f"I/O failure: {exc}", file=sys.stderr)
        return 4
    return 1 if any_fail else 0


def _parse_axis(text: str, fallback_name: str) -> AxisSpec:
    name, _, rng = text.partition("=")
    if not rng:
        name, rng = fallback_name, text
    parts = rng.split(":")
    if len(parts) != 3:
        raise ValueError(f"axis spec must be name=min:max:steps, got {text!r}")
    return AxisSpec(name, float(parts[0]), float(parts[1]), int(parts[2]))


def _cmd_grid(args) -> int:
    try:
        spec = default_spec(args.expression)
        p1 = _parse_axis(args.p1, spec.p1.name) if args.p1 else spec.p1
        p2 = _parse_axis(args.p2, spec.p2.name) if args.p2 else spec.p2
        fixed = dict(spec.fixed)
        for item in args.fixed or ():
            key, _, val = item.partition("=")
            if not val:
                raise ValueError(f"--fixed expects name=value, got {item!r}")
            fixed[key] = float(val) if "." in val or "e" in val else int(val)
        spec = GridSpec(args.expression, p1, p2, fixed, args.channel)
        spec.validate()
    except (ValueError, LerchkitError) as exc:
        print(f"grid error: {exc}", file=sys.stderr)
        return 2
    rows = evaluate_grid(spec)
    try:
        out = Path(args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(grid_csv(rows))
        if args.fig is not None:
            render_grid(rows, spec, args.fig)
    except OSError as exc:
        print(f"I/O failure: {exc}", file=sys.stderr)
        return 4
    finite = sum(val is not None for _, _, val in rows)
    print(f"wrote {out} ({len(rows)} rows, {finite} finite)")
    if args.fig is not None:
        print(f"wrote {args.fig}")
    return 0


def _cmd_constants(_args) -> int:
    c = constants()
    residual = abs(c.glaisher - GLAISHER_REFERENCE)
    print(f"pi                = {c.pi:.17g}")
    print(f"log2              = {c.log2:.17g}")
    print(f"euler_gamma       = {c.euler_gamma:.17g}")
    print(f"glaisher          = {c.glaisher:.17g}")
    print(f"glaisher_ref      = {GLAISHER_REFERENCE:.17g}")
    print(f"glaisher_residual = {residual:.3e}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lerchkit",
        description="Hurwitz-Lerch zeta evaluation and identity verification")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate Phi(z, s, v)")
    p_eval.add_argument("--z", required=True, help="complex literal, e.g. 0.5 or 1+2i")
    p_eval.add_argument("--s", required=True)
    p_eval.add_argument("--v", required=True)
    p_eval.add_argument("--strategy",
                        choices=["neg-int", "series", "root-unity", "integral"],
                        help="bypass the dispatcher and force one strategy")
    p_eval.set_defaults(fn=_cmd_eval)

    p_verify = sub.add_parser("verify", help="verify identities over seeded samples")
    p_verify.add_argument("identity", nargs="?", help="identity id (see --all)")
    p_verify.add_argument("--all", action="store_true", help="verify all 14 identities")
    p_verify.add_argument("--seed", type=int, default=1)
    p_verify.add_argument("--samples", type=int, default=200)
    p_verify.add_argument("--tol-scale", type=float, default=1.0)
    p_verify.add_argument("--report", help="write JSON report(s) to this file "
                                           "(single id) or directory (--all)")
    p_verify.set_defaults(fn=_cmd_verify)

    p_grid = sub.add_parser("grid", help="emit a surface grid as CSV (and figure)")
    p_grid.add_argument("expression", help="fig-tangent-quotient-rhs or "
                                           "fig-loggamma-product-rhs")
    p_grid.add_argument("--p1", help="axis spec name=min:max:steps")
    p_grid.add_argument("--p2", help="axis spec name=min:max:steps")
    p_grid.add_argument("--fixed", action="append", help="fixed parameter name=value")
    p_grid.add_argument("--out", required=True, help="CSV output path")
    p_grid.add_argument("--fig", help="also render a heatmap to this image path")
    p_grid.add_argument("--channel", choices=["re", "im", "abs"], default="abs")
    p_grid.set_defaults(fn=_cmd_grid)

    p_const = sub.add_parser("constants", help="print named constants")
    p_const.set_defaults(fn=_cmd_constants)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
