"""Command-line front end.

Exit codes: 0 when every check holds, 2 when any verification fails, 1 on
usage, parse or bound errors.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass

from rrlab.arith import primes_up_to
from rrlab.bernoulli import CacheError, bernoulli, default_table, rr_constants
from rrlab.classes import morita_mumford_class, newton_class
from rrlab.fpd import MAX_ORDER, BoundError, FixedPointData, FixedPointDataError, enumerate_fpd, format_fpd, multiplicities, validate
from rrlab.verify import POR1, POR2, SweepReport, VerificationResult, sweep_main, sweep_porubsky, sweep_voronoi, verify_main

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2
CACHE_ENV = "RRLAB_CACHE"

_DATUM = re.compile(r"^(-?\d+),(-?\d+);((?:-?\d+/-?\d+)(?:,-?\d+/-?\d+)*)?$")


class ParseError(ValueError):
    pass


class UsageError(Exception):
    pass


def parse_fpd(text: str) -> FixedPointData:
    """Parse ``g,n;b1/a1,...`` and validate it. Grammar errors raise ParseError."""
    m = _DATUM.match(text.strip())
    if not m:
        raise ParseError(f"cannot parse datum {text!r}; expected g,n;b1/a1,b2/a2,...")
    g, n = int(m.group(1)), int(m.group(2))
    branch = []
    if m.group(3):
        for item in m.group(3).split(","):
            b, a = item.split("/")
            branch.append((int(b), int(a)))
    return validate(g, n, branch)


@dataclass
class CliConfig:
    cache_path: str | None = None
    output_format: str = "human"
    jobs: int = 1
    max_order: int = MAX_ORDER

    def __post_init__(self):
        if self.jobs < 1:
            raise UsageError(f"--jobs must be >= 1, got {self.jobs}")
        if self.max_order < 1:
            raise UsageError(f"--max-order must be >= 1, got {self.max_order}")
        if self.output_format not in ("human", "json", "tsv"):
            raise UsageError(f"unknown output format {self.output_format!r}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="JSON lines output")
    fmt.add_argument("--tsv", action="store_true", default=argparse.SUPPRESS, help="tab-separated output")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes for sweeps")
    common.add_argument("--cache", default=argparse.SUPPRESS, help=f"Bernoulli cache file (overrides ${CACHE_ENV})")
    common.add_argument("--max-order", type=int, default=argparse.SUPPRESS, help="largest order n a sweep may enumerate")

    parser = _Parser(prog="rrlab", parents=[common], description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("bernoulli", parents=[common], help="table of B_2k and the reduced constants")
    p.add_argument("--max-k", type=positive_int, required=True)

    fpd = sub.add_parser("fpd", help="fixed point data").add_subparsers(dest="fpd_command", required=True, parser_class=_Parser)
    p = fpd.add_parser("enumerate", parents=[common], help="all admissible data of a given genus and order")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--order", type=positive_int, required=True)
    p = fpd.add_parser("classes", parents=[common], help="multiplicities and the classes e_k, s_k of one datum")
    p.add_argument("--data", required=True)
    p.add_argument("--max-k", type=positive_int, required=True)

    ver = sub.add_parser("verify", help="congruence checks").add_subparsers(dest="verify_command", required=True, parser_class=_Parser)
    p = ver.add_parser("main", parents=[common], help="N'_2k e_(2k-1) = D'_2k s_(2k-1) mod n")
    p.add_argument("--data")
    p.add_argument("--k", type=positive_int)
    p.add_argument("--genus-max", type=int)
    p.add_argument("--order-max", type=positive_int)
    p.add_argument("--k-max", type=positive_int)
    p.add_argument("--prime-powers-only", action="store_true")
    p = ver.add_parser("voronoi", parents=[common], help="generalized Voronoi congruence mod p^(a+b)")
    p.add_argument("--p-max", type=positive_int, required=True)
    p.add_argument("--ab-max", type=non_negative_int, required=True)
    p.add_argument("--c-max", type=positive_int, required=True)
    p.add_argument("--k-max", type=positive_int, required=True)
    p = ver.add_parser("porubsky", parents=[common], help="Porubsky's congruence in Z_(N)")
    p.add_argument("--n-max", type=positive_int, required=True)
    p.add_argument("--c-max", type=positive_int, required=True)
    p.add_argument("--k-max", type=positive_int, required=True)
    p.add_argument("--eq", choices=[POR1, POR2], default=POR2)
    return parser


def _config(args, environ) -> CliConfig:
    fmt = "json" if getattr(args, "json", False) else "tsv" if getattr(args, "tsv", False) else "human"
    return CliConfig(
        cache_path=getattr(args, "cache", None) or environ.get(CACHE_ENV) or None,
        output_format=fmt,
        jobs=getattr(args, "jobs", 1),
        max_order=getattr(args, "max_order", MAX_ORDER),
    )


class _Out:
    def __init__(self, fmt: str, stream):
        self.fmt = fmt
        self.stream = stream

    def line(self, text: str = ""):
        print(text, file=self.stream)

    def table(self, header: list[str], rows: list[list]):
        if self.fmt == "json":
            for row in rows:
                self.line(json.dumps(dict(zip(header, row)), sort_keys=True))
        elif self.fmt == "tsv":
            self.line("\t".join(header))
            for row in rows:
                self.line("\t".join(str(x) for x in row))
        else:
            cells = [header] + [[str(x) for x in row] for row in rows]
            widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
            for r in cells:
                self.line("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip())

    def result(self, r: VerificationResult):
        if self.fmt == "json":
            self.line(json.dumps(r.to_dict(), sort_keys=True))
        elif self.fmt == "tsv":
            self.line("\t".join(str(x) for x in (r.check, r.witness, r.modulus, r.lhs.value, r.rhs.value, r.holds)))
        else:
            verdict = "holds" if r.holds else "FAILS"
            self.line(f"{r.check} {verdict}: lhs = {r.lhs.value}, rhs = {r.rhs.value} (mod {r.modulus})  [{r.witness}]")

    def report(self, rep: SweepReport):
        if self.fmt == "json":
            for r in rep.results:
                self.result(r)
            self.line(json.dumps(rep.summary(), sort_keys=True))
            return
        if self.fmt == "tsv":
            self.line("check\twitness\tmodulus\tlhs\trhs\tholds")
            for r in rep.results:
                self.result(r)
            return
        for r in rep.failures:
            self.result(r)
        for u in rep.undefined:
            self.line(f"undefined: {u}")
        self.line(f"{rep.check}: {rep.total} cases, {len(rep.failures)} failures, {len(rep.undefined)} undefined")


def _cmd_bernoulli(args, cfg, out):
    rows = []
    for k in range(1, args.max_k + 1):
        c = rr_constants(k)
        rows.append([k, 2 * k, str(bernoulli(k)), c.n2k, c.d2k, c.n2k_prime, c.d2k_prime])
    out.table(["k", "2k", "B_2k", "N_2k", "D_2k", "N'_2k", "D'_2k"], rows)
    return EXIT_OK


def _cmd_fpd(args, cfg, out):
    if args.fpd_command == "enumerate":
        data = enumerate_fpd(args.genus, args.order, cfg.max_order)
        out.table(["data", "h", "q"], [[format_fpd(d), d.h, d.q] for d in data])
        if out.fmt == "human":
            out.line(f"{len(data)} data")
        return EXIT_OK
    d = parse_fpd(args.data)
    mults = multiplicities(d)
    rows = []
    for k in range(1, args.max_k + 1):
        rows.append([format_fpd(d), k, d.n, morita_mumford_class(d, k).coeff.value, newton_class(d, k).coeff.value])
    if out.fmt == "human":
        out.line(f"{format_fpd(d)}  h = {d.h}  q = {d.q}  n_j = {list(mults)}")
    out.table(["data", "k", "modulus", "e_k", "s_k"], rows)
    return EXIT_OK


def _cmd_verify(args, cfg, out):
    cmd = args.verify_command
    if cmd == "main":
        if args.data is not None:
            if args.k is None:
                raise UsageError("verify main: --data requires --k")
            r = verify_main(parse_fpd(args.data), args.k)
            out.result(r)
            return EXIT_OK if r.holds else EXIT_FAIL
        missing = [f for f in ("genus_max", "order_max", "k_max") if getattr(args, f) is None]
        if missing:
            flags = ", ".join("--" + f.replace("_", "-") for f in missing)
            raise UsageError(f"verify main: either --data/--k or {flags} is required")
        rep = sweep_main(range(2, args.genus_max + 1), range(2, args.order_max + 1), range(1, args.k_max + 1),
                         args.prime_powers_only, cfg.jobs, cfg.max_order)
    elif cmd == "voronoi":
        rep = sweep_voronoi(primes_up_to(args.p_max), args.ab_max, range(1, args.c_max + 1),
                            range(1, args.k_max + 1), cfg.jobs)
    else:
        rep = sweep_porubsky(range(1, args.n_max + 1), range(1, args.c_max + 1), range(1, args.k_max + 1),
                             args.eq, cfg.jobs)
    out.report(rep)
    if out.fmt == "human":
        print(f"elapsed {rep.elapsed:.2f} s", file=sys.stderr)
    return EXIT_OK if rep.ok else EXIT_FAIL


def run(argv=None, stdout=None, stderr=None, environ=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    environ = os.environ if environ is None else environ
    try:
        args = build_parser().parse_args(argv)
        cfg = _config(args, environ)
        table = default_table()
        if cfg.cache_path and os.path.exists(cfg.cache_path):
            table.load(cfg.cache_path)
        out = _Out(cfg.output_format, stdout)
        handler = {"bernoulli": _cmd_bernoulli, "fpd": _cmd_fpd, "verify": _cmd_verify}[args.command]
        code = handler(args, cfg, out)
        if cfg.cache_path:
            table.dump(cfg.cache_path)
        return code
    except (UsageError, ParseError, FixedPointDataError, BoundError, CacheError) as exc:
        print(f"rrlab: {exc}" if not str(exc).startswith("rrlab") else str(exc), file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
