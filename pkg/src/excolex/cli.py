"""Command-line interface: ideal JSON in, result JSON out.

Exit codes: 0 success/verified, 1 claim falsified (a counterexample is a
result, not a tool failure), 2 usage or contract error, 3 resource cap
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .betti import compare_betti, stable_betti_table, tables_agree
from .cartan import cartan_betti
from .colex import colex_ideal
from .enumeration import enumerate_strongly_stable_ideals, enumerate_strongly_stable_sets
from .errors import AmbientCapExceeded, ContractViolation, OracleTooLarge
from .ideals import MonomialIdeal
from .verify import CLAIMS, run_claim

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _read_ideal(path: str, allow_text: bool) -> MonomialIdeal:
    if path == "-":
        data = json.load(sys.stdin)
    else:
        with open(path) as fh:
            data = json.load(fh)
    return MonomialIdeal.from_dict(data, allow_text=allow_text)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _cmd_colex(args) -> int:
    I = _read_ideal(args.input, args.text)
    result = colex_ideal(I, m_cap=args.m_cap)
    _emit(result.as_dict())
    return EXIT_OK


def _cmd_betti(args) -> int:
    I = _read_ideal(args.input, args.text)
    table = stable_betti_table(I, args.i_max)
    if not args.oracle:
        _emit(table.as_dict())
        return EXIT_OK
    oracle_i = min(args.i_max, args.oracle_i_max)
    tables = cartan_betti(I, oracle_i + 1, prime=args.field)
    _emit(
        {
            "formula": table.as_dict(),
            "oracle": {
                "ideal": tables.ideal.as_dict(),
                "quotient": tables.quotient.as_dict(),
            },
            "agreement": tables_agree(table, tables.ideal, oracle_i),
            "agreement_i_max": oracle_i,
        }
    )
    return EXIT_OK


def _cmd_compare(args) -> int:
    left = _read_ideal(args.left, args.text)
    right = _read_ideal(args.right, args.text)
    verdict = compare_betti(left, right, args.i_max)
    _emit(verdict.as_dict())
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = run_claim(args.claim, n_max=args.n_max, i_max=args.i_max)
    payload = report.as_dict()
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    _emit(payload)
    if report.status == "verified":
        return EXIT_OK
    if report.status == "counterexample":
        return EXIT_COUNTEREXAMPLE
    return EXIT_USAGE


def _cmd_enumerate(args) -> int:
    if args.ideals:
        degree_pairs = None
        max_degrees = 2
        if args.d is not None:
            # restrict to ideals generated exactly in degree d
            for mset in enumerate_strongly_stable_sets(args.n, args.d):
                print(json.dumps(MonomialIdeal(args.n, mset).as_dict()))
            return EXIT_OK
        for ideal in enumerate_strongly_stable_ideals(
            args.n, max_degrees=max_degrees, degree_pairs=degree_pairs
        ):
            print(json.dumps(ideal.as_dict()))
        return EXIT_OK
    if args.d is None:
        raise ContractViolation("enumerating sets needs --d")
    for mset in enumerate_strongly_stable_sets(args.n, args.d):
        print(
            json.dumps(
                {"n": args.n, "d": args.d, "monomials": [list(u.indices) for u in mset]}
            )
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="excolex",
        description=(
            "Colexsegment ideals, Betti tables, and exhaustive desk-scale "
            "verification for squarefree monomial ideals in an exterior algebra."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("colex", help="build the colexsegment ideal of an ideal")
    p.add_argument("--input", required=True, help="ideal JSON file, or - for stdin")
    p.add_argument("--m-cap", type=int, default=32, dest="m_cap")
    p.add_argument("--text", action="store_true", help="accept 'e1e3e4' generator strings")
    p.set_defaults(func=_cmd_colex)

    p = sub.add_parser("betti", help="closed-form Betti table of a strongly stable ideal")
    p.add_argument("--input", required=True)
    p.add_argument("--i-max", type=int, default=10, dest="i_max")
    p.add_argument("--oracle", action="store_true", help="also run the homology oracle")
    p.add_argument("--oracle-i-max", type=int, default=4, dest="oracle_i_max")
    p.add_argument("--field", type=int, default=None,
                   help="prime field size for the oracle (default: exact rationals)")
    p.add_argument("--text", action="store_true")
    p.set_defaults(func=_cmd_betti)

    p = sub.add_parser("compare", help="compare total Betti numbers of two ideals")
    p.add_argument("--left", required=True, help="ideal I")
    p.add_argument("--right", required=True, help="ideal J, compared against I")
    p.add_argument("--i-max", type=int, default=10, dest="i_max")
    p.add_argument("--text", action="store_true")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("verify", help="run a named verification campaign")
    p.add_argument("--claim", required=True, choices=CLAIMS)
    p.add_argument("--n-max", type=int, default=None, dest="n_max")
    p.add_argument("--i-max", type=int, default=None, dest="i_max")
    p.add_argument("--json", default=None, help="also write the report to this file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("enumerate", help="stream strongly stable sets or ideals")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--ideals", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ContractViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AmbientCapExceeded, OracleTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
