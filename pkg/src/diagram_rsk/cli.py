"""Command-line front end.

Verbs: insert, invert, di, di-invert, growth, enumerate, verify, bratteli.
Positional inputs accept "-" to read from standard input. Exit codes:
0 success (verification passed), 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bijections, diagrams, enumeration, growth
from .diagrams import ResourceLimitError, SetPartitionDiagram, parse_diagram
from .partitions import format_partition
from .tableaux import EMPTY_TABLEAU, StandardTableau, jdt_delete, rsk_insert


def _read_arg(value: str) -> str:
    if value == "-":
        return sys.stdin.read().strip()
    return value


def _parse_k(text: str):
    k = Fraction(text)
    if k.denominator == 1:
        return int(k)
    if k.denominator == 2:
        return k
    raise ValueError(f"--k must be an integer or half-integer, got {text!r}")


def _fmt_partition_parens(p) -> str:
    return "(" + ",".join(str(v) for v in p) + ")" if p else "(-)"


def _vt_parens(vt: bijections.VacillatingTableau) -> str:
    return ";".join(_fmt_partition_parens(p) for p in vt.steps)


def _half_index(t: int) -> str:
    return str(t // 2) if t % 2 == 0 else f"{t}/2"


def _trace_lines(d: SetPartitionDiagram) -> list[str]:
    seq = diagrams.insertion_sequence(d)
    t = EMPTY_TABLEAU
    lines = [f"{'j':>6}  {'E':>3}  {'move':>5}  T"]
    lines.append(f"{'0':>6}  {'':>3}  {'':>5}  {t.to_text()}")
    for idx, label in enumerate(seq.slots):
        move = "jdt<-" if idx % 2 == 0 else "rsk->"
        if label is not None:
            t = jdt_delete(t, label) if idx % 2 == 0 else rsk_insert(t, label)[0]
        lines.append(
            f"{_half_index(idx + 1):>6}  {label if label is not None else '-':>3}"
            f"  {move:>5}  {t.to_text()}"
        )
    return lines


def _di_trace_lines(values, n: int) -> list[str]:
    t = StandardTableau((tuple(range(1, n + 1)),))
    lines = [f"{'j':>6}  {'i':>3}  {'move':>5}  T"]
    lines.append(f"{'0':>6}  {'':>3}  {'':>5}  {t.to_text()}")
    for j, x in enumerate(values):
        t = jdt_delete(t, x)
        lines.append(f"{_half_index(2 * j + 1):>6}  {x:>3}  {'jdt<-':>5}  {t.to_text()}")
        t = rsk_insert(t, x)[0]
        lines.append(f"{_half_index(2 * j + 2):>6}  {x:>3}  {'rsk->':>5}  {t.to_text()}")
    return lines


def _cmd_insert(args) -> int:
    d = parse_diagram(_read_arg(args.diagram))
    p, q = bijections.vac_insert(d)
    if args.json:
        print(json.dumps(
            {"P": p.to_json(), "Q": q.to_json(), "shape": list(p.final_shape)},
            indent=2, sort_keys=True,
        ))
        return 0
    if args.trace:
        for line in _trace_lines(d):
            print(line)
    print(f"P: {p.to_text()}")
    print(f"Q: {q.to_text()}")
    print(f"shape: {format_partition(p.final_shape)}")
    return 0


def _cmd_invert(args) -> int:
    p = bijections.VacillatingTableau.from_text(_read_arg(args.p))
    q = bijections.VacillatingTableau.from_text(_read_arg(args.q))
    d = bijections.vac_invert(p, q, half=args.half)
    if args.json:
        print(json.dumps(d.to_json(), indent=2, sort_keys=True))
    else:
        print(d.to_text())
    return 0


def _cmd_di(args) -> int:
    text = _read_arg(args.sequence)
    try:
        values = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"bad sequence text {text!r}") from None
    t, p = bijections.di_insert(values, args.n)
    if args.json:
        print(json.dumps({"T": t.to_json(), "P": p.to_json()}, indent=2, sort_keys=True))
        return 0
    if args.trace:
        for line in _di_trace_lines(values, args.n):
            print(line)
    print(f"T: {t.to_text()}")
    print(f"P: {_vt_parens(p)}")
    return 0


def _cmd_di_invert(args) -> int:
    t = StandardTableau.from_text(_read_arg(args.tableau))
    p = bijections.VacillatingTableau.from_text(_read_arg(args.path), coords="lambda", n=args.n)
    seq = bijections.di_invert(t, p, args.n)
    if args.json:
        print(json.dumps({"sequence": list(seq)}, indent=2, sort_keys=True))
    else:
        print(",".join(str(v) for v in seq))
    return 0


def _cmd_growth(args) -> int:
    d = parse_diagram(_read_arg(args.diagram))
    g = growth.forward_fill(growth.build_xmarks(d))
    if args.json:
        print(json.dumps(g.to_json(), indent=2, sort_keys=True))
    else:
        sys.stdout.write(growth.render_text(g))
    return 0


def _cmd_enumerate(args) -> int:
    ds = diagrams.enumerate_diagrams(args.k, args.family, force=args.force)
    if args.json:
        print(json.dumps([d.to_json() for d in ds], indent=2, sort_keys=True))
    else:
        for d in ds:
            print(d.to_text())
    return 0


def _cmd_verify(args) -> int:
    fn = enumeration.VERIFIERS[args.identity]
    kwargs = {"workers": args.workers, "force": args.force}
    k = _parse_k(args.k)
    if args.identity == "nk":
        if args.n is None:
            raise ValueError("verify nk requires --n")
        report = fn(args.n, k, **kwargs)
    elif args.identity == "ideal":
        if args.t is None:
            raise ValueError("verify ideal requires --t")
        report = fn(k, args.t, **kwargs)
    elif args.identity == "symmetric":
        report = fn(k, family=args.family or "A", **kwargs)
    else:
        report = fn(k, **kwargs)
    if args.json:
        print(json.dumps(_jsonable(report), indent=2, sort_keys=True))
    else:
        print(f"identity: {report['identity']}")
        print(f"k: {report['k']}")
        for key in ("n", "t", "family"):
            if key in report:
                print(f"{key}: {report[key]}")
        print(f"lhs: {report['lhs']}")
        print(f"rhs: {report['rhs']}")
        has_f = any("f" in row for row in report["per_shape"])
        header = f"{'shape':>10}" + (f"  {'f':>8}" if has_f else "") + f"  {'m':>8}  {'contribution':>12}"
        print(header)
        for row in report["per_shape"]:
            line = f"{row['shape']:>10}"
            if has_f:
                line += f"  {row.get('f', ''):>8}"
            line += f"  {row['m']:>8}  {row['contribution']:>12}"
            print(line)
        print(f"result: {'pass' if report['pass'] else 'FAIL'}")
    if args.report_dir:
        from .reports import write_report_files

        csv_path, png_path = write_report_files(_jsonable(report), args.report_dir)
        print(f"report-csv: {csv_path}")
        print(f"report-figure: {png_path}")
    return 0 if report["pass"] else 1


def _jsonable(report: dict) -> dict:
    out = dict(report)
    if isinstance(out.get("k"), Fraction):
        out["k"] = float(out["k"])
    return out


def _cmd_bratteli(args) -> int:
    bd = enumeration.build_bratteli(_parse_k(args.k), args.family, force=args.force)
    if args.dot:
        sys.stdout.write(enumeration.bratteli_dot(bd))
    elif args.json:
        print(json.dumps(enumeration.bratteli_to_json(bd), indent=2, sort_keys=True))
    else:
        print(f"family: {bd.family}")
        for lvl, label in enumerate(bd.level_labels):
            cells = " | ".join(
                f"{format_partition(s)} ({c})"
                for s, c in zip(bd.levels[lvl], bd.path_counts[lvl])
            )
            print(f"{label}: {cells}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="drsk",
        description="Insertion, growth diagrams, and dimension identities "
                    "for set-partition diagram monoids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("insert", help="diagram -> pair of vacillating tableaux")
    p.add_argument("diagram", help="blocks like \"1 3 4' | 2 1' | 4 3' 2'\", or - for stdin")
    p.add_argument("--trace", action="store_true", help="print the per-step tableau table")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_insert)

    p = sub.add_parser("invert", help="pair of vacillating tableaux -> diagram")
    p.add_argument("p", help="P path, semicolon-separated partitions")
    p.add_argument("q", help="Q path, semicolon-separated partitions")
    p.add_argument("--half", action="store_true", help="mark the result as a half diagram")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_invert)

    p = sub.add_parser("di", help="sequence -> (standard tableau, vacillating tableau)")
    p.add_argument("sequence", help="comma-separated values, e.g. 2,4,3")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_di)

    p = sub.add_parser("di-invert", help="(tableau, path) -> sequence")
    p.add_argument("tableau", help="rows like 1,2,3,6/4/5")
    p.add_argument("path", help="large-form path like (6);(5);(5,1);...")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_di_invert)

    p = sub.add_parser("growth", help="diagram -> filled growth grid")
    p.add_argument("diagram")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_growth)

    p = sub.add_parser("enumerate", help="list every diagram of a family")
    p.add_argument("family", choices=diagrams.FAMILIES)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--force", action="store_true", help="override the size guard")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="check a dimension identity exhaustively")
    p.add_argument("identity", choices=sorted(enumeration.VERIFIERS))
    p.add_argument("--k", required=True, help="integer, or half-integer like 2.5")
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--family", choices=("A", "S", "B", "T", "R", "PR"))
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--force", action="store_true")
    p.add_argument("--report-dir", help="also write the per-shape CSV and a PNG figure here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bratteli", help="export a family's level diagram")
    p.add_argument("family", choices=enumeration.BRATTELI_FAMILIES)
    p.add_argument("--k", required=True)
    p.add_argument("--force", action="store_true")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bratteli)

    return parser


_VALUE_FLAGS = {"--n"}


def _shield_dashed_positionals(argv: list[str]) -> list[str]:
    """Let invert/di-invert take path texts that start with '-'.

    Flags are moved before an inserted '--' so argparse reads the rest as
    positionals.
    """
    if not argv or argv[0] not in ("invert", "di-invert") or "--" in argv:
        return argv
    flags: list[str] = []
    positionals: list[str] = []
    i = 1
    while i < len(argv):
        tok = argv[i]
        if tok.startswith("--"):
            flags.append(tok)
            if tok in _VALUE_FLAGS and i + 1 < len(argv):
                i += 1
                flags.append(argv[i])
        else:
            positionals.append(tok)
        i += 1
    return [argv[0]] + flags + ["--"] + positionals


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_shield_dashed_positionals(list(argv)))
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
