"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 domain error, 3 internal
error (safety cap, failed self-check).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bruhat
from .affine import EdgeKind, qbg_neighborhood
from .double import daff_length, length
from .errors import DabruhatError, DomainError, InternalError, ParseError
from .notation import format_element, format_root, infer_rank, parse_element, parse_finite_root, parse_root, root_json
from .oracle import ScanWindow
from .rootsystem import build_root_system

SCHEMA_VERSION = 1


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit code 1 instead of argparse's 2
        raise _UsageError(f"{self.prog}: {message}")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    p.add_argument("--type", dest="type_label", help="Dynkin type A, D or E (default A)")
    p.add_argument("--rank", type=int, help="rank n (inferred from the input when omitted)")
    p.add_argument("--format", choices=["text", "json", "dot"], help="output format (default text)")
    p.add_argument("--seed", type=int, help="seed for randomized self-tests (default 0)")
    p.add_argument("--cap", type=int, help="safety cap on enumerations (default 1000000)")
    p.add_argument("--out", help="write output to FILE instead of stdout")
    p.add_argument("--figure", help="also render a PNG figure (graph, interval) to this path")
    return p


DEFAULTS = dict(type_label="A", rank=None, format="text", seed=0, cap=bruhat.DEFAULT_CAP, out=None, figure=None)


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="dabruhat", parents=[common], description="Double affine Bruhat order calculator.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text)

    add("len", "length of an element").add_argument("element")
    p = add("ldset", "length-difference set L_{x,alpha}")
    p.add_argument("element")
    p.add_argument("root")
    add("cocovers", "all cocovers s_alpha x").add_argument("element")
    add("covers", "all covers s_beta x").add_argument("element")
    p = add("leq", "is ELT1 <= ELT2 in the Bruhat order")
    p.add_argument("lower")
    p.add_argument("upper")
    p = add("interval", "the Bruhat interval [ELT1, ELT2]")
    p.add_argument("lower")
    p.add_argument("upper")
    p = add("graph", "lower graph Gamma_{x,nu} in a window")
    p.add_argument("element")
    p.add_argument("--nu", required=True, help="finite root in simple-root coordinates, e.g. 1,0")
    p.add_argument("--window", nargs=4, type=int, required=True, metavar=("R0", "R1", "J0", "J1"))
    p = add("qbg", "quantum Bruhat graph around the identity")
    p.add_argument("--radius", type=int, required=True)
    add("selftest", "run the oracle agreement suites")
    return parser


def _resolve(args) -> argparse.Namespace:
    for k, v in DEFAULTS.items():
        if not hasattr(args, k):
            setattr(args, k, v)
    return args


def _system(args, *texts):
    rank = args.rank
    if rank is None:
        found = [r for r in (infer_rank(t) for t in texts) if r]
        rank = max(found) if found else 1
    return build_root_system(args.type_label, rank)


def _element_json(z) -> dict:
    b = daff_length(z)
    return {"element": format_element(z), "length": b.total, "big": b.big, "small": b.small}


def _dot_quote(s: str) -> str:
    return '"' + s.replace('"', '\\"') + '"'


# -- commands -----------------------------------------------------------------


def cmd_len(args):
    s = _system(args, args.element)
    x = parse_element(args.element, s)
    b = daff_length(x)
    data = {"command": "len", **_element_json(x)}
    return data, f"{b.total}\n"


def cmd_ldset(args):
    s = _system(args, args.element, args.root)
    x = parse_element(args.element, s)
    alpha = parse_root(args.root, s)
    L = bruhat.length_diff_set(x, alpha, cap=args.cap)
    members = sorted(L.members, key=lambda b: (b.j, b.r, b.nu))
    y = bruhat.apply_reflection_left(alpha, x)
    data = {
        "command": "ldset",
        "x": _element_json(x),
        "y": _element_json(y),
        "root": root_json(alpha),
        "roots": [root_json(b) for b in members],
        "size": len(members),
    }
    text = "".join(format_root(b) + "\n" for b in members) + f"size {len(members)}\n"
    return data, text


def _cocover_rows(x):
    rows = []
    for c in bruhat.cocovers(x):
        row = {"root": root_json(c.alpha), **_element_json(c.y)}
        if c.descriptor is not None:
            d = c.descriptor
            row["case"] = d.case_id
            row["alpha_tilde"] = [list(d.alpha_tilde.nu), d.alpha_tilde.r]
            row["j"] = d.j
        rows.append((c, row))
    return rows


def cmd_cocovers(args):
    s = _system(args, args.element)
    x = parse_element(args.element, s)
    rows = _cocover_rows(x)
    fast = bruhat.theorem2_applies(x)
    data = {
        "command": "cocovers",
        "x": _element_json(x),
        "strategy": "theorem" if fast else "corners",
        "cocovers": [r for _, r in rows],
    }
    lines = []
    for c, row in rows:
        tag = f"  [case {row['case']}]" if "case" in row else ""
        lines.append(f"{format_root(c.alpha)}  {format_element(c.y)}{tag}\n")
    return data, "".join(lines)


def cmd_covers(args):
    s = _system(args, args.element)
    x = parse_element(args.element, s)
    cs = bruhat.covers(x)
    data = {
        "command": "covers",
        "x": _element_json(x),
        "covers": [{"root": root_json(c.beta), **_element_json(c.y)} for c in cs],
    }
    return data, "".join(f"{format_root(c.beta)}  {format_element(c.y)}\n" for c in cs)


def cmd_leq(args):
    s = _system(args, args.lower, args.upper)
    y = parse_element(args.lower, s)
    x = parse_element(args.upper, s)
    ans = bruhat.is_leq(y, x)
    data = {"command": "leq", "lower": _element_json(y), "upper": _element_json(x), "leq": ans}
    return data, ("true\n" if ans else "false\n")


def cmd_interval(args):
    s = _system(args, args.lower, args.upper)
    y = parse_element(args.lower, s)
    x = parse_element(args.upper, s)
    iv = bruhat.interval(y, x, cap=args.cap)
    data = {
        "command": "interval",
        "lower": _element_json(y),
        "upper": _element_json(x),
        "size": len(iv),
        "elements": [_element_json(z) for z in iv.elements],
        "edges": [
            {"upper": format_element(a), "lower": format_element(b), "root": root_json(r)} for a, b, r in iv.edges
        ],
    }
    lines = [f"{length(z)}  {format_element(z)}\n" for z in iv.elements]
    lines.append(f"size {len(iv)}\n")
    dot = ["digraph interval {", "  rankdir=BT;", "  node [shape=box, fontsize=10];"]
    for z in iv.elements:
        dot.append(f"  {_dot_quote(format_element(z))} [label={_dot_quote(format_element(z) + f'  (l={length(z)})')}];")
    for a, b, r in iv.edges:
        dot.append(f"  {_dot_quote(format_element(b))} -> {_dot_quote(format_element(a))} [label={_dot_quote(format_root(r))}];")
    dot.append("}")
    if args.figure:
        from .plotting import plot_interval

        plot_interval(iv, args.figure)
    return data, "".join(lines), "\n".join(dot) + "\n"


def cmd_graph(args):
    s = _system(args, args.element, args.nu)
    x = parse_element(args.element, s)
    nu = parse_finite_root(args.nu, s)
    r0, r1, j0, j1 = args.window
    if r0 > r1 or j0 > j1:
        raise _UsageError("window must satisfy R0 <= R1 and J0 <= J1")
    win = ScanWindow(r0, r1, j0, j1, args.cap)
    g = bruhat.gamma_shape(x, nu)
    pts = [p for p in win.points() if g.contains(*p)]
    cs = bruhat.corners(x, nu)
    data = {
        "command": "graph",
        "x": _element_json(x),
        "nu": list(nu),
        "window": [r0, r1, j0, j1],
        "shape": g.shape,
        "lower_edge": list(g.lower_edge) if g.lower_edge else None,
        "upper_r_max": g.upper_r_max,
        "boundary": {"c0": g.c0, "level": g.level, "t": g.t},
        "points": [list(p) for p in pts],
        "corners": [root_json(a) for a in cs],
    }
    members = set(pts)
    corner_pts = {(a.r, a.j) for a in cs}
    rows = []
    for j in range(j1, j0 - 1, -1):
        cells = ["*" if (r, j) in corner_pts else "#" if (r, j) in members else "." for r in range(r0, r1 + 1)]
        rows.append(f"{j:>4} " + "".join(cells) + "\n")
    text = (
        f"shape {g.shape}\n"
        f"boundary j = {g.c0} - {g.level} r; lower edge {g.lower_edge}; upper edge r <= {g.upper_r_max}\n"
        + "".join(rows)
        + f"     r = {r0}..{r1}\n"
        + "corners: "
        + (", ".join(format_root(a) for a in cs) or "none")
        + "\n"
    )
    dot = ["graph lower_graph {", "  node [shape=circle, width=0.25, fixedsize=true, label=\"\"];"]
    for r, j in win.points():
        style = "filled" if (r, j) in members else "dashed"
        color = "orange" if (r, j) in corner_pts else "steelblue" if (r, j) in members else "gray"
        dot.append(f'  "p_{r}_{j}" [pos="{r},{j}!", style={style}, fillcolor={color}, color={color}, tooltip="({r},{j})"];')
    dot.append("}")
    if args.figure:
        from .plotting import plot_lower_graph

        plot_lower_graph(g, win, cs, args.figure)
    return data, text, "\n".join(dot) + "\n"


def cmd_qbg(args):
    s = _system(args)
    verts, edges = qbg_neighborhood(s, args.radius)

    def word(v):
        return "".join(f"s{i}" for i in v.reduced_word()) or "id"

    edges = sorted(edges, key=lambda e: (e.kind.value, e.source.length(), word(e.source), word(e.target)))
    data = {
        "command": "qbg",
        "system": s.name,
        "radius": args.radius,
        "vertices": [word(v) for v in verts],
        "edges": [
            {"source": word(e.source), "target": word(e.target), "root": [list(e.label.nu), e.label.r], "kind": e.kind.value}
            for e in edges
        ],
    }
    counts = {k.value: sum(e.kind is k for e in edges) for k in EdgeKind}
    lines = [f"{word(e.source)} -> {word(e.target)}  {','.join(map(str, e.label.nu))};{e.label.r}  {e.kind.value}\n" for e in edges]
    lines.append(f"vertices {len(verts)}, bruhat {counts['bruhat']}, quantum {counts['quantum']}\n")
    dot = ["digraph qbg {"]
    dot += [f"  {_dot_quote(word(v))};" for v in verts]
    for e in edges:
        style = "solid" if e.kind is EdgeKind.BRUHAT else "dashed"
        label = f"{','.join(map(str, e.label.nu))};{e.label.r}"
        dot.append(f"  {_dot_quote(word(e.source))} -> {_dot_quote(word(e.target))} [style={style}, label={_dot_quote(label)}];")
    dot.append("}")
    return data, "".join(lines), "\n".join(dot) + "\n"


def cmd_selftest(args):
    from .selftest import run_selftest

    results = run_selftest(args.seed)
    data = {
        "command": "selftest",
        "seed": args.seed,
        "suites": [{"name": r.name, "checked": r.checked, "failures": r.failures} for r in results],
        "ok": all(r.failures == 0 for r in results),
    }
    text = "".join(
        f"{'PASS' if r.failures == 0 else 'FAIL'}  {r.name}  ({r.checked} checked, {r.failures} failures)\n" for r in results
    )
    if not data["ok"]:
        return data, text, None, 3
    return data, text


COMMANDS = {
    "len": cmd_len,
    "ldset": cmd_ldset,
    "cocovers": cmd_cocovers,
    "covers": cmd_covers,
    "leq": cmd_leq,
    "interval": cmd_interval,
    "graph": cmd_graph,
    "qbg": cmd_qbg,
    "selftest": cmd_selftest,
}


def run_command(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = _resolve(build_parser().parse_args(argv))
        result = COMMANDS[args.command](args)
        data, text = result[0], result[1]
        dot = result[2] if len(result) > 2 else None
        code = result[3] if len(result) > 3 else 0
        if args.format == "json":
            out = json.dumps({"schema_version": SCHEMA_VERSION, **data}, indent=2) + "\n"
        elif args.format == "dot":
            if dot is None:
                raise _UsageError(f"--format dot is not available for '{args.command}'")
            out = dot
        else:
            out = text
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(out)
        else:
            stdout.write(out)
        return code
    except _UsageError as e:
        print(f"usage error: {e}", file=stderr)
        return 1
    except ParseError as e:
        print(f"parse error: {e}", file=stderr)
        return 1
    except DomainError as e:
        print(f"domain error: {e}", file=stderr)
        return 2
    except (InternalError, RecursionError, AssertionError) as e:
        print(f"internal error: {e}", file=stderr)
        return 3
    except DabruhatError as e:  # pragma: no cover - every subclass is handled above
        print(f"error: {e}", file=stderr)
        return 3
    except SystemExit as e:  # --help
        return int(e.code or 0)


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
