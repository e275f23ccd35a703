"""Command-line interface.

Exit codes: 0 success, 1 input or usage error, 2 a theorem check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, TextIO

from .classes import ClassKind, enumerate_family, is_closed, is_nowhere_nano_dense, is_open
from .core_sets import default_universe, format_subset
from .errors import EnumerationTooLarge, NanoError
from .operators import g_closure, g_interior, nsalpha_closure_formula, nsalpha_interior_formula
from .rough_nano import NanoSpace
from .spacefile import dump_space_text, load_space, parse_names
from .verifier import (
    SPACE_CAP,
    Status,
    enumerate_spaces,
    mine,
    parse_goal,
    verify_spaces,
)

EXIT_OK, EXIT_INPUT, EXIT_FAIL = 0, 1, 2

KIND_ORDER = (ClassKind.NOpen, ClassKind.NAlpha, ClassKind.NSemi, ClassKind.NPre, ClassKind.NSemiAlpha)

# (from, to, note); implications between open families
DIAGRAM_EDGES = (
    (ClassKind.NOpen, ClassKind.NAlpha, ""),
    (ClassKind.NAlpha, ClassKind.NSemi, ""),
    (ClassKind.NAlpha, ClassKind.NPre, ""),
    (ClassKind.NOpen, ClassKind.NSemiAlpha, ""),
    (ClassKind.NAlpha, ClassKind.NSemiAlpha, ""),
    (ClassKind.NSemi, ClassKind.NSemiAlpha, "empirical"),
    (ClassKind.NPre, ClassKind.NSemiAlpha, "independent"),
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def _fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def _table(rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def _subset_list(family) -> list[str]:
    return [format_subset(s) for s in family]


# --- topology ---------------------------------------------------------------


def render_topology(space: NanoSpace, fmt: str) -> str:
    if fmt == "json":
        data = space.describe()
        data.update(
            lower=format_subset(space.lower),
            upper=format_subset(space.upper),
            boundary=format_subset(space.boundary),
            open=_subset_list(space.tau),
            closed=_subset_list(space.closed),
        )
        return _dumps(data)
    return "\n".join(
        [
            dump_space_text(space),
            f"lower: {format_subset(space.lower)}",
            f"upper: {format_subset(space.upper)}",
            f"boundary: {format_subset(space.boundary)}",
            "open: " + " ".join(_subset_list(space.tau)),
            "closed: " + " ".join(_subset_list(space.closed)),
        ]
    )


def cmd_topology(args, out: TextIO) -> int:
    print(render_topology(load_space(args.file), args.format), file=out)
    return EXIT_OK


# --- classify ---------------------------------------------------------------


def _interior_closure(space, kind, c, via):
    if kind is ClassKind.NSemiAlpha and via == "formula":
        return nsalpha_interior_formula(space, c), nsalpha_closure_formula(space, c)
    try:
        return g_interior(space, kind, c), g_closure(space, kind, c)
    except EnumerationTooLarge:
        return None, None


def classify_rows(space: NanoSpace, c, via: str = "formula") -> list[dict]:
    rows = []
    for kind in ClassKind:
        interior, closure = _interior_closure(space, kind, c, via)
        rows.append(
            {
                "kind": kind.label,
                "open": is_open(space, kind, c),
                "closed": is_closed(space, kind, c),
                "interior": None if interior is None else format_subset(interior),
                "closure": None if closure is None else format_subset(closure),
            }
        )
    return rows


def cmd_classify(args, out: TextIO) -> int:
    space = load_space(args.file)
    c = space.universe.subset(parse_names(args.set))
    rows = classify_rows(space, c, args.via)
    nnd = is_nowhere_nano_dense(space, c)
    if args.format == "json":
        print(_dumps({"set": format_subset(c), "classes": rows, "nowhere_nano_dense": nnd}), file=out)
        return EXIT_OK
    table = [["kind", "open", "closed", "interior", "closure"]]
    for r in rows:
        table.append(
            [r["kind"], _fmt_bool(r["open"]), _fmt_bool(r["closed"]), r["interior"] or "n/a", r["closure"] or "n/a"]
        )
    print(f"set: {format_subset(c)}", file=out)
    print(_table(table), file=out)
    print(f"nowhere nano dense: {_fmt_bool(nnd)}", file=out)
    return EXIT_OK


# --- family -----------------------------------------------------------------


def cmd_family(args, out: TextIO) -> int:
    space = load_space(args.file)
    kind = ClassKind.parse(args.kind)
    fam = enumerate_family(space, kind, args.side)
    members = _subset_list(fam)
    if args.format == "json":
        print(_dumps({"kind": kind.label, "side": args.side, "members": members, "count": len(members)}), file=out)
        return EXIT_OK
    for m in members:
        print(m, file=out)
    print(f"count: {len(members)} ({kind.label} {args.side})", file=out)
    return EXIT_OK


# --- verify -----------------------------------------------------------------


def _report_line(space_label: str, r) -> str:
    line = f"{space_label}  {r.theorem.value}  {r.status.value}  checked={r.checked_count}"
    if r.witnesses:
        line += "  witnesses=" + " ".join(format_subset(w) for w in r.witnesses)
    return line


def cmd_verify(args, out: TextIO) -> int:
    if args.all_spaces is not None:
        if args.file is not None:
            raise argparse.ArgumentTypeError("give either a space file or --all-spaces, not both")
        if args.all_spaces > SPACE_CAP:
            raise EnumerationTooLarge(args.all_spaces, SPACE_CAP)
        if args.all_spaces < 1:
            raise argparse.ArgumentTypeError("--all-spaces needs a positive size")
        spaces = enumerate_spaces(default_universe(args.all_spaces))
    elif args.file is not None:
        spaces = iter([load_space(args.file)])
    else:
        raise argparse.ArgumentTypeError("a space file or --all-spaces N is required")

    counts = {s.value: 0 for s in Status}
    total = 0
    first = True
    if args.format == "json":
        out.write('{"reports": [')
    for r in verify_spaces(spaces, jobs=args.jobs):
        total += 1
        counts[r.status.value] += 1
        if args.format == "json":
            out.write(("\n" if first else ",\n") + _dumps(r.to_dict()))
        else:
            label = f"U/R={_partition_label(r.space)} M={_names_label(r.space['target'])}"
            out.write(_report_line(label, r) + "\n")
        first = False
    summary = {"reports": total, **counts}
    if args.format == "json":
        out.write("\n],\n" + '"summary": ' + _dumps(summary) + "}\n")
    else:
        out.write("summary: " + " ".join(f"{k}={v}" for k, v in summary.items()) + "\n")
    return EXIT_FAIL if counts[Status.FAIL.value] else EXIT_OK


def _names_label(names) -> str:
    return "{" + ",".join(names) + "}" if names else "φ"


def _partition_label(desc) -> str:
    return "{" + ",".join(_names_label(b) for b in desc["partition"]) + "}"


# --- mine -------------------------------------------------------------------


def cmd_mine(args, out: TextIO) -> int:
    goal = parse_goal(args.goal)
    if args.size > SPACE_CAP:
        raise EnumerationTooLarge(args.size, SPACE_CAP)
    if args.size < 1:
        raise argparse.ArgumentTypeError("--size needs a positive value")
    hit = mine(default_universe(args.size), goal)
    if args.format == "json":
        data = {"goal": goal.text, "found": hit is not None}
        if hit is not None:
            data["space"] = hit.space.describe()
            data["witnesses"] = [format_subset(w) for w in hit.witnesses]
        print(_dumps(data), file=out)
        return EXIT_OK
    print(f"goal: {goal.text}", file=out)
    if hit is None:
        print("none", file=out)
        return EXIT_OK
    print(dump_space_text(hit.space), file=out)
    print("witness: " + " ".join(format_subset(w) for w in hit.witnesses), file=out)
    return EXIT_OK


# --- diagram ----------------------------------------------------------------


def diagram_data(space: NanoSpace) -> dict:
    fams = {k: set(enumerate_family(space, k, "open").masks) for k in KIND_ORDER}
    nodes = [{"id": k.token, "label": k.label, "count": len(fams[k])} for k in KIND_ORDER]
    edges = []
    for lo, hi, note in DIAGRAM_EDGES:
        a, b = fams[lo], fams[hi]
        if a == b:
            relation = "="
        elif note == "independent":
            relation = "⊂" if a < b else "⊃" if a > b else "independent"
        elif a < b:
            relation = "strict"
        else:
            relation = "violated"
        edges.append({"from": lo.token, "to": hi.token, "relation": relation, "note": note})
    return {"nodes": nodes, "edges": edges}


def render_dot(data: dict) -> str:
    lines = ["digraph weak_open_classes {", "  rankdir=BT;"]
    for n in data["nodes"]:
        lines.append(f'  {n["id"]} [label="{n["label"]} ({n["count"]})"];')
    for e in data["edges"]:
        attrs = [f'label="{e["relation"]}"']
        if e["note"] == "empirical":
            attrs.append("style=dashed")
        elif e["note"] == "independent":
            attrs += ["style=dotted", "dir=none"]
        lines.append(f'  {e["from"]} -> {e["to"]} [{", ".join(attrs)}];')
    lines.append("}")
    return "\n".join(lines)


def render_diagram_text(data: dict) -> str:
    labels = {n["id"]: n["label"] for n in data["nodes"]}
    nodes = [["class", "open sets"]] + [[n["label"], str(n["count"])] for n in data["nodes"]]
    edges = [["from", "to", "relation", "note"]]
    for e in data["edges"]:
        edges.append([labels[e["from"]], labels[e["to"]], e["relation"], e["note"]])
    return _table(nodes) + "\n\n" + _table(edges)


def cmd_diagram(args, out: TextIO) -> int:
    data = diagram_data(load_space(args.file))
    if args.dot:
        print(render_dot(data), file=out)
    elif args.format == "json":
        print(_dumps(data), file=out)
    else:
        print(render_diagram_text(data), file=out)
    return EXIT_OK


# --- entry point ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nanotopo", description="Nano topologies and weak open sets on finite universes")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func: Callable, help_text, file_arg="required"):
        p = sub.add_parser(name, help=help_text)
        if file_arg == "required":
            p.add_argument("file", help="space file (JSON or text), '-' for stdin")
        elif file_arg == "optional":
            p.add_argument("file", nargs="?", help="space file (JSON or text), '-' for stdin")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(func=func)
        return p

    add("topology", cmd_topology, "print approximations, open and closed sets")

    p = add("classify", cmd_classify, "membership of one set in every class")
    p.add_argument("--set", required=True, help="comma-separated names, e.g. 'p,r' ('' for the empty set)")
    p.add_argument("--via", choices=("formula", "family"), default="formula", help="route for NSα interior/closure")

    p = add("family", cmd_family, "list a whole class family")
    p.add_argument("--kind", choices=[k.value for k in ClassKind], default="n")
    p.add_argument("--side", choices=("open", "closed"), default="open")

    p = add("verify", cmd_verify, "run the theorem suite", file_arg="optional")
    p.add_argument("--all-spaces", type=int, metavar="N", help="every space on a universe of size N")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for --all-spaces")

    p = add("mine", cmd_mine, "search all spaces of a size for a witness", file_arg=None)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--goal", required=True, help="e.g. 'NSaO&!NaO', 'meet-escape:NSaO', 'strict:T4.5iv'")

    p = add("diagram", cmd_diagram, "implication diagram between the classes")
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    return parser


def main(argv=None, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    try:
        return args.func(args, out)
    except (NanoError, argparse.ArgumentTypeError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
