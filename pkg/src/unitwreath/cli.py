"""Command-line front end.

Subcommands: check, construct, verify, scan, model.  Exit codes:
0 success/pass, 1 hypothesis failure, 2 verification failure, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog, construct, oracle, pcgroup

EXIT_PASS = 0
EXIT_HYPOTHESIS = 1
EXIT_VERIFY = 2
EXIT_INPUT = 3


def _dump(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _parse_witness(group, spec: str):
    """Parse "a=<word>,b=<word>,z=<word>"; words use '*' or '·' separators."""
    parts = {}
    for item in spec.split(","):
        if "=" not in item:
            raise pcgroup.ParseError(f"bad witness component {item!r}")
        key, _, word = item.partition("=")
        parts[key.strip()] = group.parse_word(word)
    missing = {"a", "b", "z"} - set(parts)
    if missing:
        raise pcgroup.ParseError(f"witness override missing {sorted(missing)}")
    return parts["a"], parts["b"], parts["z"]


def _hypothesis_text(group, report) -> str:
    lines = [f"group {group.name} of order {group.order}"]
    lines.append(f"  non-abelian:        {report.nonabelian}")
    lines.append(
        f"  derived subgroup:   order {report.derived_order}, "
        f"cyclic: {report.derived_cyclic}"
    )
    lines.append(f"  center:             order {report.center_order}")
    lines.append(
        "  central involutions outside derived: "
        + (" ".join(group.word_str(x) for x in report.candidates_z) or "none")
    )
    lines.append(f"  hypotheses: {'pass' if report.passed else 'FAIL'}"
                 + (f" ({report.failure_reason})" if report.failure_reason else ""))
    return "\n".join(lines)


def _pipeline_text(result) -> str:
    group = result.group
    lines = [_hypothesis_text(group, result.hypothesis)]
    if result.witness is not None:
        w = result.witness
        lines.append(
            f"  witness: a = {group.word_str(w.a)}, b = {group.word_str(w.b)}, "
            f"z = {group.word_str(w.z)}  (s = {w.s}, k = {w.k})"
        )
    if result.orbit is not None:
        lines.append("  orbit of h = 1 + b(1+z) under conjugation by a:")
        for i, u in enumerate(result.orbit.units):
            lines.append(f"    h^(a^{i}) = {u.words()}")
    if result.section is not None:
        sec = result.section
        lines.append(
            f"  base |X| = {sec.base_order}, ambient |<X,a>| = {sec.ambient_order}, "
            f"kernel = {sec.kernel_order}, section = {sec.quotient_order}"
        )
        for name in construct.CHECK_NAMES:
            if name in sec.checks:
                lines.append(f"    {name:<34} {'ok' if sec.checks[name] else 'FAIL'}")
    if result.error is not None:
        lines.append(f"  error: {result.error}")
    lines.append(f"  verdict: {'pass' if result.verdict else 'FAIL'}")
    return "\n".join(lines)


def _cmd_check(args) -> int:
    group = pcgroup.load_file(args.path)
    report = construct.check_hypotheses(group)
    if args.json:
        print(_dump(report.to_dict(group)))
    else:
        print(_hypothesis_text(group, report))
    return EXIT_PASS if report.passed else EXIT_HYPOTHESIS


def _run_single(args, use_oracle: bool) -> int:
    group = pcgroup.load_file(args.path)
    override = None
    if args.witness:
        override = _parse_witness(group, args.witness)
    result = construct.run_pipeline(
        group, use_oracle=use_oracle, override=override, cap=args.cap
    )
    print(_dump(result.to_dict()) if args.json else _pipeline_text(result))
    if not result.hypothesis.passed:
        return EXIT_HYPOTHESIS
    return EXIT_PASS if result.verdict else EXIT_VERIFY


def _cmd_construct(args) -> int:
    return _run_single(args, use_oracle=False)


def _cmd_verify(args) -> int:
    path = Path(args.path)
    if path.is_dir():
        sweep = catalog.verify_all(
            path,
            order_filter=args.order,
            use_oracle=args.oracle,
            keep_going=args.keep_going,
            cap=args.cap,
        )
        if args.json:
            print(_dump(sweep.to_dict()))
        else:
            print(sweep.census.to_text())
            for result in sweep.results:
                print(_pipeline_text(result))
            print(f"sweep verdict: {'pass' if sweep.verdict else 'FAIL'}")
        if sweep.census.errors:
            return EXIT_INPUT
        return EXIT_PASS if sweep.verdict else EXIT_VERIFY
    return _run_single(args, use_oracle=args.oracle)


def _cmd_scan(args) -> int:
    census = catalog.scan(args.path, order_filter=args.order)
    print(_dump(census.to_dict()) if args.json else census.to_text())
    return EXIT_INPUT if census.errors else EXIT_PASS


def _cmd_model(args) -> int:
    model = oracle.reference_wreath(args.s)
    table = model.to_table_group()
    out = {
        "s": args.s,
        "m": model.m,
        "order": model.order,
        "elements": [f"({v:0{model.m}b},{t})" for (v, t) in model.elements()],
        "table": table.table,
    }
    if args.json:
        print(_dump(out))
    else:
        print(f"C2 wr C{model.m}: order {model.order}")
        for row in table.table:
            print(" ".join(f"{x:3d}" for x in row))
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unitwreath",
        description=(
            "Verify that C2 wr G' is involved in the normalized unit group "
            "of the characteristic-2 group algebra of a 2-group G."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, witness=False, cap=False):
        p.add_argument("--json", action="store_true", help="emit JSON")
        if witness:
            p.add_argument(
                "--witness",
                metavar="a=<word>,b=<word>,z=<word>",
                help="override witness selection (words like b*c; 1 = identity)",
            )
        if cap:
            p.add_argument(
                "--cap", type=int, default=oracle.DEFAULT_CAP,
                help="size cap for unit-group closures",
            )

    p = sub.add_parser("check", help="hypothesis check on one presentation file")
    p.add_argument("path")
    add_common(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("construct", help="build witness, orbit, and section")
    p.add_argument("path")
    add_common(p, witness=True, cap=True)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="construct plus oracle cross-checks")
    p.add_argument("path", help="presentation file or corpus directory")
    add_common(p, witness=True, cap=True)
    p.add_argument("--oracle", action="store_true",
                   help="enable brute-force isomorphism cross-check")
    p.add_argument("--order", type=int, default=None,
                   help="restrict a directory sweep to one group order")
    p.add_argument("--keep-going", action="store_true", default=True)
    p.add_argument("--first-failure", dest="keep_going", action="store_false",
                   help="stop a directory sweep at the first failure")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("scan", help="census of a corpus directory")
    p.add_argument("path")
    add_common(p)
    p.add_argument("--order", type=int, default=None)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("model", help="dump the reference wreath product C2 wr C_(2^s)")
    p.add_argument("s", type=int)
    add_common(p)
    p.set_defaults(func=_cmd_model)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (pcgroup.PcError, oracle.ClosureCapError, construct.NoWitnessError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (FileNotFoundError, NotADirectoryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
