"""Command-line front end.

Subcommands
-----------
cosets        CSV table of the 2-cyclotomic cosets mod 2^m - 1
construct     run one construction; print a summary, JSON, or bare elements
analyze       read a defining set, assemble the code, measure its distance
verify-paper  re-check the embedded reference fixtures
export        construct + optional analysis, written as one JSON document

Exit codes: 0 success, 1 domain error, 2 verification mismatch, 64 usage.

All JSON output carries a top-level ``schema: 1`` field; polynomials
appear as little-endian bit-strings ("1101" = 1 + x + x^3).  ``--hex``
switches human-readable polynomial display to little-endian nibble hex.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Optional

from .codecore import (
    CyclicCode,
    DegenerateCodeError,
    assemble,
    describe,
)
from .constructions import (
    DefiningSet,
    SelectionError,
    build_even_m,
    build_odd_pq,
    build_sqrt_complement,
    build_two_prime,
    build_weight_class,
)
from .cosets import build_table
from .distance import (
    BudgetExceeded,
    SearchError,
    auto_distance,
    exact_min_distance,
    low_weight_search,
)
from .fixtures import run_fixture, select_fixtures
from .gf2 import poly_to_bitstring, poly_to_hex

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISMATCH = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures turned into a catchable exception."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _build_parser() -> _Parser:
    parser = _Parser(prog="bincyclic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="command")

    p_cosets = sub.add_parser("cosets", help="CSV of 2-cyclotomic cosets mod 2^m - 1")
    p_cosets.add_argument("--m", type=int, required=True, help="field degree, n = 2^m - 1")

    p_con = sub.add_parser("construct", help="build a defining set")
    _add_family_args(p_con, (_add_output_args,))

    p_an = sub.add_parser("analyze", help="assemble a code from a defining set and measure it")
    p_an.add_argument("elements", nargs="?", default="-",
                      help="file of residues (whitespace/comma separated); '-' = stdin")
    p_an.add_argument("--m", type=int, required=True, help="field degree, n = 2^m - 1")
    _add_engine_args(p_an)
    _add_output_args(p_an, elements_only=False)

    p_vp = sub.add_parser("verify-paper", help="re-check the embedded reference fixtures")
    p_vp.add_argument("--fixture", metavar="PATTERN",
                      help="fixture id or glob pattern (default: every fast fixture)")
    p_vp.add_argument("--all", action="store_true", help="include slow fixtures")
    p_vp.add_argument("--threads", type=int, default=1)
    p_vp.add_argument("--json", action="store_true")

    def _add_export_args(family_parser: _Parser) -> None:
        _add_engine_args(family_parser, default_engine="none")
        family_parser.add_argument("--output", metavar="FILE",
                                   help="write JSON here (default stdout)")

    p_ex = sub.add_parser("export", help="construct + optional analysis as one JSON document")
    _add_family_args(p_ex, (_add_export_args,))

    return parser


def _add_family_args(parser: _Parser, extras=()) -> None:
    fam = parser.add_subparsers(dest="family", metavar="family", required=True)

    f = fam.add_parser("even-m", help="even-m split (two codes; pick one with --which)")
    f.add_argument("--m", type=int, required=True)
    f.add_argument("--which", choices=("C1", "C2"), required=True)
    f.add_argument("--swap-pairs", action="store_true",
                   help="route each complement pair to the opposite side")

    f = fam.add_parser("two-prime", help="m = 2p for odd prime p; 0 joins the set")
    f.add_argument("--p", type=int, required=True)

    f = fam.add_parser("odd-pq", help="m = p1*p2, distinct odd primes")
    f.add_argument("--p1", type=int, required=True)
    f.add_argument("--p2", type=int, required=True)

    f = fam.add_parser("sqrt", help="odd m block construction")
    f.add_argument("--m", type=int, required=True)
    f.add_argument("--choose", metavar="L1,L2,...",
                   help="comma-separated residual-pair representatives")

    f = fam.add_parser("weight-class", help="odd m >= 9 weight-parity construction")
    f.add_argument("--m", type=int, required=True)
    f.add_argument("--i", type=int, choices=(0, 1), required=True)

    for family_parser in fam.choices.values():
        for extra in extras:
            extra(family_parser)


def _add_engine_args(parser: _Parser, default_engine: str = "auto") -> None:
    choices = ("auto", "exhaustive", "search")
    if default_engine == "none":
        choices = ("none",) + choices
    parser.add_argument("--engine", choices=choices, default=default_engine)
    parser.add_argument("--budget", type=int, default=33,
                        help="max dimension for exhaustive enumeration")
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--iters", type=int, default=10_000)
    parser.add_argument("--depth", type=int, default=2,
                        help="information-pattern weight limit (1-3)")
    parser.add_argument("--threads", type=int, default=1)


def _add_output_args(parser: _Parser, elements_only: bool = True) -> None:
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--hex", action="store_true",
                        help="display polynomials as little-endian nibble hex")
    if elements_only:
        parser.add_argument("--elements-only", action="store_true",
                            help="print the sorted residues, one per line")


def _construct(args) -> tuple[DefiningSet, object]:
    if args.family == "even-m":
        z1, z2, audit = build_even_m(args.m, swap_pairs=args.swap_pairs)
        return (z1 if args.which == "C1" else z2), audit
    if args.family == "two-prime":
        return build_two_prime(args.p)
    if args.family == "odd-pq":
        return build_odd_pq(args.p1, args.p2)
    if args.family == "sqrt":
        overrides = None
        if args.choose:
            overrides = tuple(int(x) for x in args.choose.split(","))
        return build_sqrt_complement(args.m, overrides=overrides)
    if args.family == "weight-class":
        return build_weight_class(args.m, args.i)
    raise UsageError(f"unknown family {args.family!r}")


def _poly_str(poly: Optional[int], use_hex: bool) -> str:
    if poly is None:
        return "-"
    return poly_to_hex(poly) if use_hex else poly_to_bitstring(poly)


def _print_report(report, use_hex: bool) -> None:
    d = report.as_dict()
    print(f"n                : {d['n']}  (m = {d['m']})")
    if d["construction"]:
        pairs = ", ".join(f"{k}={v}" for k, v in d["construction"].items())
        print(f"construction     : {pairs}")
    print(f"defining set     : {len(d['defining_set'])} residues")
    print(f"dimension        : {d['dimension']}")
    print(f"generator        : {_poly_str(report.generator, use_hex)}")
    print(f"bch lower bound  : {d['bch_lower_bound']}  (run starts at {d['bch_interval_start']})")
    dual = d["dual"]
    print(f"dual dimension   : {dual['dimension']}")
    print(f"dual bch bound   : {dual['bch_lower_bound']}  (run starts at {dual['bch_interval_start']})")


def _print_distance(result) -> None:
    d = result.as_dict()
    print(f"distance engine  : {d['method']}")
    if d["exact_distance"] is not None:
        print(f"exact distance   : {d['exact_distance']}")
    else:
        print(f"best weight found: {d['best_weight_found']}")
        print(f"proven bound     : {d['proven_lower_bound']}")
        print(f"search budget    : seed {d['seed']}, {d['iterations']} iterations")
    witness = d["witness_bits"]
    support = [i for i, bit in enumerate(witness) if bit == "1"]
    print(f"witness weight   : {d['witness_weight']}  support {support}")


def _emit_json(payload: dict, output: Optional[str] = None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=False)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _read_elements(source: str) -> list[int]:
    if source == "-":
        raw = sys.stdin.read()
    else:
        with open(source, "r", encoding="utf-8") as fh:
            raw = fh.read()
    tokens = raw.replace(",", " ").split()
    return [int(tok) for tok in tokens]


def _run_distance(code: CyclicCode, args):
    if args.engine == "exhaustive":
        return exact_min_distance(code, budget=args.budget, threads=args.threads)
    if args.engine == "search":
        return low_weight_search(code, seed=args.seed, iterations=args.iters, depth=args.depth)
    return auto_distance(
        code,
        budget=args.budget,
        seed=args.seed,
        iterations=args.iters,
        depth=args.depth,
        threads=args.threads,
    )


def _cmd_cosets(args) -> int:
    table = build_table(args.m)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["leader", "size", "members"])
    for leader in table.leaders:
        leader = int(leader)
        members = table.members(leader)
        writer.writerow([leader, len(members), ";".join(str(x) for x in members)])
    return EXIT_OK


def _cmd_construct(args) -> int:
    zset, audit = _construct(args)
    if args.elements_only:
        sys.stdout.write("".join(f"{x}\n" for x in zset))
        return EXIT_OK
    report = describe(zset)
    if args.json:
        _emit_json({"schema": 1, "code": report.as_dict(), "audit": audit.as_dict()})
        return EXIT_OK
    _print_report(report, args.hex)
    return EXIT_OK


def _cmd_analyze(args) -> int:
    elements = _read_elements(args.elements)
    n = 2**args.m - 1
    zset = DefiningSet.from_elements(n, elements)
    code = assemble(zset)
    report = describe(zset, generator=code.generator)
    result = _run_distance(code, args)
    if args.json:
        _emit_json({"schema": 1, "code": report.as_dict(), "distance": result.as_dict()})
        return EXIT_OK
    _print_report(report, args.hex)
    _print_distance(result)
    return EXIT_OK


def _cmd_verify(args) -> int:
    fixtures = select_fixtures(args.fixture, include_slow=args.all)
    if not fixtures:
        print(f"warning: no fixture matches {args.fixture!r}", file=sys.stderr)
        return EXIT_OK

    reports = []
    failed = 0
    for fx in fixtures:
        rep = run_fixture(fx, threads=args.threads)
        reports.append((fx, rep))
        if not rep.ok:
            failed += 1
        if not args.json:
            flag = "ok  " if rep.ok else "FAIL"
            print(f"[{flag}] {fx.fixture_id:22s} {fx.title}  ({rep.seconds:.2f}s)")
            for row in rep.mismatches():
                where = f"{row.code}." if row.code else ""
                print(f"    {where}{row.field}: expected {row.expected!r}, got {row.actual!r}")
            if not rep.ok and fx.note:
                print(f"    note: {fx.note}")

    if args.json:
        _emit_json(
            {
                "schema": 1,
                "fixtures": [
                    {
                        "id": fx.fixture_id,
                        "ok": rep.ok,
                        "seconds": rep.seconds,
                        "rows": [
                            {
                                "code": row.code,
                                "field": row.field,
                                "expected": _jsonable(row.expected),
                                "actual": _jsonable(row.actual),
                                "ok": row.ok,
                            }
                            for row in rep.rows
                        ],
                    }
                    for fx, rep in reports
                ],
            }
        )
    else:
        print(f"{len(fixtures)} fixture(s): {len(fixtures) - failed} passed, {failed} failed")
    return EXIT_MISMATCH if failed else EXIT_OK


def _jsonable(value):
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    return value


def _cmd_export(args) -> int:
    zset, audit = _construct(args)
    payload: dict = {"schema": 1}
    if args.engine == "none":
        payload["code"] = describe(zset).as_dict()
    else:
        code = assemble(zset)
        payload["code"] = describe(zset, generator=code.generator).as_dict()
        payload["distance"] = _run_distance(code, args).as_dict()
    payload["audit"] = audit.as_dict()
    _emit_json(payload, args.output)
    return EXIT_OK


def run_command(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE

    if args.command is None:
        parser.print_help()
        return EXIT_USAGE

    handlers = {
        "cosets": _cmd_cosets,
        "construct": _cmd_construct,
        "analyze": _cmd_analyze,
        "verify-paper": _cmd_verify,
        "export": _cmd_export,
    }
    try:
        return handlers[args.command](args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except (
        ValueError,
        SelectionError,
        DegenerateCodeError,
        BudgetExceeded,
        SearchError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
