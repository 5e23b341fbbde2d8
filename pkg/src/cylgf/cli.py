"""Command-line front end.

Exit codes: 0 success, 2 for bad input (parse errors, unknown identity
tags, invalid partitions), 3 for internal contract violations.  All file
output ends with a trailing newline and is byte-identical across runs of
the same command.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import genfun, lemmas
from .cylindric import (PartitionError, Profile, ProfileError,
                        enumerate_table, validate)
from .series import NotAUnitError, OrderMismatchError
from .slices import SliceError, board, decompose, flow_graph, shape, shape_letters


class UsageError(ValueError):
    pass


def _threads() -> int:
    """Parallelism cap from CYLGF_THREADS; evaluation is sequential today,
    so this only validates and records the setting."""
    raw = os.environ.get("CYLGF_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"CYLGF_THREADS must be an integer, got {raw!r}")
    if n < 1:
        raise UsageError(f"CYLGF_THREADS must be >= 1, got {n}")
    return n


def _parse_profile(text: str) -> Profile:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse profile {text!r}")
    return Profile(parts)


def _emit(text: str, out: str | None):
    if not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_expand(args) -> int:
    profile = _parse_profile(args.profile)
    if args.method == "borodin":
        series = genfun.borodin(profile, args.order)
    else:
        distinct = args.method == "chain-distinct"
        series = genfun.chain_series(profile, args.order, distinct).marginal()
    if args.format == "json":
        _emit(json.dumps(series.to_json_dict()), args.out)
    else:
        _emit(str(series), args.out)
    return 0


def cmd_count(args) -> int:
    profile = _parse_profile(args.profile)
    table = enumerate_table(profile, args.order)
    if args.format == "json":
        payload = {
            "profile": list(profile.parts),
            "order": table.order,
            "counts": [list(row) for row in table.counts],
        }
        _emit(json.dumps(payload), args.out)
    else:
        _emit(table.to_csv(), args.out)
    return 0


def cmd_flow(args) -> int:
    profile = _parse_profile(args.profile)
    graph = flow_graph(profile, args.max_weight)
    _emit(graph.to_dot(), args.out)
    return 0


def _verify_one(tag: str, order: int, z_power, lines: list[str]) -> bool:
    bad = genfun.verify_identity(tag, order, z_power)
    name = tag if z_power is None else f"{tag}(z=q^{z_power})"
    if bad is None:
        lines.append(f"{name},order={order},PASS")
        return True
    lines.append(
        f"{name},order={order},FAIL@q^{bad.degree} lhs={bad.lhs} rhs={bad.rhs}")
    return False


def cmd_verify(args) -> int:
    lines: list[str] = []
    ok = True
    if args.all:
        from importlib.resources import files

        grid = json.loads(files("cylgf.data").joinpath("verify_all.json").read_text())
        for entry in grid["identities"]:
            order = args.order if args.order is not None else entry["order"]
            ok &= _verify_one(entry["id"], order, entry.get("z_power"), lines)
        lem = grid["lemmas"]
        order = args.order if args.order is not None else lem["order"]
        for spec in lemmas.grid(lem["n_max"], lem["m_max"], lem["k_max"]):
            line, good = lemmas.report_line(spec, order)
            lines.append(line)
            ok &= good
    elif args.id:
        order = args.order if args.order is not None else 40
        if args.format == "csv" and not args.id.startswith("L"):
            lhs, rhs = genfun.catalog_sides(args.id, order, args.z_power)
            rows = ["degree,lhs,rhs,equal"]
            for n in range(order + 1):
                a, b = lhs.coeffs[n], rhs.coeffs[n]
                rows.append(f"{n},{a},{b},{str(a == b).lower()}")
                ok &= a == b
            _emit("\n".join(rows), args.out)
            return 0 if ok else 1
        ok = _verify_one(args.id, order, args.z_power, lines)
    else:
        raise UsageError("verify needs --id or --all")
    _emit("\n".join(lines), args.out)
    return 0 if ok else 1


def cmd_decompose(args) -> int:
    if args.file:
        with open(args.file) as fh:
            data = json.load(fh)
    elif args.json:
        data = json.loads(args.json)
    else:
        raise UsageError("decompose needs --json or --file")
    profile = Profile(tuple(data["profile"]))
    cp = validate(profile, data["rows"])
    letters = shape_letters(profile)
    lines = []
    for k, s in enumerate(decompose(cp), start=1):
        sh = shape(s)
        term = f"{letters[sh]}q^{s.weight}"
        lines.append(
            f"level {k}: t={s.white} weight={s.weight} shape={sh} term={term}")
        if args.boards:
            lines.append(board(s).rstrip("\n"))
    _emit("\n".join(lines) if lines else "", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cylgf",
        description="Generating functions of cylindric partitions, computed "
                    "and cross-checked three independent ways.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, profile=True, order=True):
        if profile:
            sp.add_argument("--profile", required=True,
                            help="comma-separated profile, e.g. 2,1")
        if order:
            sp.add_argument("--order", type=int, required=True,
                            help="truncation degree N")
        sp.add_argument("--out", help="write output to this file")
        sp.add_argument("--verbose", action="store_true")

    sp = sub.add_parser("expand", help="coefficients of F_c(1,q)")
    common(sp)
    sp.add_argument("--method", required=True,
                    choices=["borodin", "chain", "chain-distinct"])
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(fn=cmd_expand)

    sp = sub.add_parser("count", help="refined (max, size) table by enumeration")
    common(sp)
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.set_defaults(fn=cmd_count)

    sp = sub.add_parser("flow", help="slice-flow graph as DOT")
    common(sp, order=False)
    sp.add_argument("--max-weight", type=int, required=True)
    sp.add_argument("--format", choices=["dot"], default="dot")
    sp.set_defaults(fn=cmd_flow)

    sp = sub.add_parser("verify", help="audit series identities and lemmas")
    sp.add_argument("--id", help='identity tag, e.g. 1.2, A1, gasper, L4.2(2)')
    sp.add_argument("--all", action="store_true",
                    help="run the pinned verification grid")
    sp.add_argument("--order", type=int, default=None)
    sp.add_argument("--z-power", type=int, default=None)
    sp.add_argument("--format", choices=["text", "csv"], default="text")
    sp.add_argument("--out", help="write output to this file")
    sp.add_argument("--verbose", action="store_true")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("decompose", help="level slices of one partition")
    sp.add_argument("--json", help='inline JSON {"profile":[2,1],"rows":[[2,2,1],[3]]}')
    sp.add_argument("--file", help="path to a JSON partition file")
    sp.add_argument("--boards", action="store_true", help="ASCII boards too")
    sp.add_argument("--out", help="write output to this file")
    sp.add_argument("--verbose", action="store_true")
    sp.set_defaults(fn=cmd_decompose)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _threads()
        return args.fn(args)
    except (UsageError, ProfileError, PartitionError, SliceError,
            genfun.UnknownIdentityError, json.JSONDecodeError,
            KeyError, ValueError) as exc:
        # contract violations signal bugs, everything else is input trouble
        if isinstance(exc, (OrderMismatchError, NotAUnitError,
                            genfun.FormulaError)):
            print(f"internal error: {exc}", file=sys.stderr)
            return 3
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
