"""Command line interface: ``domroots <poly|roots|table|plot|verify|oracle>``.

Exit status: 0 success, 1 verification failure, 2 usage error, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import complexroots, families, graphs, limitsets, realroots, verification
from .plot import render_svg

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    precision_bits: int = complexroots.DEFAULT_PREC
    tol: float = 1e-12
    out: Path | None = None
    fmt: str = "csv"

    def __post_init__(self):
        if self.precision_bits < 64:
            raise UsageError("--precision must be at least 64 bits")
        if not self.tol > 0:
            raise UsageError("--tol must be positive")


def fmt_num(v) -> str:
    """Shortest form with 12 significant digits; '-0' is written as '0'."""
    s = format(float(v), ".12g")
    return "0" if s == "-0" else s


def parse_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected N or A..B") from None
    if b < a:
        raise UsageError(f"empty range {text!r}")
    return list(range(a, b + 1))


def _family_poly(family: str, n: int):
    if n < 1:
        raise UsageError(f"n must be >= 1, got {n}")
    if family == "friendship":
        return families.friendship_poly(n)
    if family == "book":
        return families.book_poly(n)
    raise UsageError(f"unknown family {family!r}")


def _emit(cfg: RunConfig, text: str, stdout) -> None:
    if cfg.out is None:
        stdout.write(text)
    else:
        cfg.out.write_text(text)


def _csv(header: list[str], rows) -> str:
    lines = [",".join(header)] + [",".join(str(c) for c in row) for row in rows]
    return "\n".join(lines) + "\n"


# --- commands -------------------------------------------------------------


def cmd_poly(args, cfg: RunConfig, stdout) -> int:
    p = _family_poly(args.family, args.n)
    if cfg.fmt == "text":
        terms = [f"{c}*x^{k}" for k, c in enumerate(p.coeffs) if c]
        text = " + ".join(reversed(terms)) + "\n"
    else:
        text = "".join(f"{k},{c}\n" for k, c in enumerate(p.coeffs))
    _emit(cfg, text, stdout)
    return EXIT_OK


def cmd_roots(args, cfg: RunConfig, stdout) -> int:
    p = _family_poly(args.family, args.n)
    rs = complexroots.all_roots(p, cfg.precision_bits, label=f"D({args.family[0].upper()}{args.n})")
    rows = []
    for r in rs.roots:
        z = complex(r.value)
        for _ in range(r.multiplicity):
            rows.append((fmt_num(z.real), fmt_num(z.imag), fmt_num(abs(z)), fmt_num(r.residual)))
    _emit(cfg, _csv(["re", "im", "modulus", "residual"], rows), stdout)
    return EXIT_OK


def table_rows(name: str, ns: list[int], cfg: RunConfig):
    if name == "friendship-real":
        ns = [n for n in ns if n % 2 == 0 and n >= 2]
        if not ns:
            raise UsageError("friendship-real needs at least one even n >= 2")
        header = ["n", "x_minus", "x_plus"]
        rows = []
        for n in ns:
            r = realroots.solve_friendship_real_roots(n, cfg.tol)
            rows.append((n, fmt_num(r.x_minus), fmt_num(r.x_plus)))
        return header, rows
    if name == "modulus":
        ns = [n for n in ns if n % 2 == 0 and n >= 2]
        if not ns:
            raise UsageError("modulus needs at least one even n >= 2")
        header = ["n", "max_modulus", "explicit_bound", "implicit_radius"]
        rows = [(r.n, fmt_num(r.max_modulus), fmt_num(r.explicit_bound), fmt_num(r.implicit_radius))
                for r in complexroots.modulus_table(ns, cfg.precision_bits)]
        return header, rows
    if name == "book-real":
        if min(ns) < 2:
            raise UsageError("book-real needs n >= 2 (B1 has no nonzero real root)")
        header = ["n", "root_1", "root_2", "zero_multiplicity", "parity"]
        rows = []
        for n in ns:
            br = realroots.book_real_roots(n, min(cfg.tol, 1e-9))
            if len(br.roots) != 2:
                raise ArithmeticError(f"D(B{n}) has {len(br.roots)} nonzero real roots, table expects 2")
            a, b = sorted(br.roots)
            rows.append((n, fmt_num(a), fmt_num(b), br.zero_multiplicity, "even" if n % 2 == 0 else "odd"))
        return header, rows
    raise UsageError(f"unknown table {name!r}")


def cmd_table(args, cfg: RunConfig, stdout) -> int:
    header, rows = table_rows(args.name, parse_range(args.n), cfg)
    _emit(cfg, _csv(header, rows), stdout)
    return EXIT_OK


def cmd_plot(args, cfg: RunConfig, stdout) -> int:
    if cfg.out is None:
        raise UsageError("plot needs --out PATH")
    p = _family_poly(args.family, args.n)
    rs = complexroots.all_roots(p, cfg.precision_bits)
    reach = max(rs.max_modulus, 3.0)
    if args.family == "friendship":
        reach = max(reach, complexroots.explicit_bound(args.n))
        comps = limitsets.friendship_limit_components(600, reach + 1)
        svg = render_svg(f"Zeros of D(F{args.n}, z)", rs, comps, bound_n=args.n)
    else:
        comps = limitsets.book_limit_components(600, reach + 1)
        svg = render_svg(f"Zeros of D(B{args.n}, z)", rs, comps)
    cfg.out.write_text(svg)
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig, stdout) -> int:
    checks = verification.run(args.scope, stdout)
    counts = {s: sum(c.status == s for c in checks) for s in (verification.PASS, verification.FAIL,
                                                               verification.REPORTED)}
    print(f"summary: {counts['PASS']} PASS, {counts['FAIL']} FAIL, {counts['REPORTED']} REPORTED", file=stdout)
    return EXIT_FAIL if counts["FAIL"] else EXIT_OK


def cmd_oracle(args, cfg: RunConfig, stdout) -> int:
    g = graphs.read_adjacency(args.path)
    p = graphs.brute_force_dompoly(g)
    _emit(cfg, "".join(f"{k},{c}\n" for k, c in enumerate(p.coeffs)), stdout)
    return EXIT_OK


# --- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, default=complexroots.DEFAULT_PREC, metavar="BITS")
    common.add_argument("--tol", type=float, default=1e-12)
    common.add_argument("--out", type=Path, default=None, metavar="PATH")
    common.add_argument("--format", choices=("csv", "svg", "text"), default="csv")

    parser = argparse.ArgumentParser(prog="domroots", description="Domination polynomials of friendship "
                                     "and book graphs and their roots.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", parents=[common], help="closed-form coefficients")
    p.add_argument("family", choices=("friendship", "book"))
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("roots", parents=[common], help="all complex roots as CSV")
    p.add_argument("family", choices=("friendship", "book"))
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("table", parents=[common], help="regenerate a results table")
    p.add_argument("name", choices=("friendship-real", "modulus", "book-real"))
    p.add_argument("--n", required=True, metavar="A..B")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("plot", parents=[common], help="SVG root plot with limit curves")
    p.add_argument("family", choices=("friendship", "book"))
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("verify", parents=[common], help="run the verification suites")
    p.add_argument("scope", nargs="?", default="all", choices=("all", *verification.SCOPES))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", parents=[common], help="brute-force D(G,x) of an adjacency-list file")
    p.add_argument("path", type=Path)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = RunConfig(args.command, args.precision, args.tol, args.out, args.format)
        return args.func(args, cfg, stdout)
    except (ValueError, OSError) as exc:
        print(f"domroots: error: {exc}", file=stderr)
        return EXIT_USAGE
    except (ArithmeticError, complexroots.RootSolveError) as exc:
        print(f"domroots: numeric failure: {exc}", file=stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
