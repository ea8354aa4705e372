"""Command line front end.

Exit codes: 0 submodular / success, 1 not submodular / violation found /
infeasible, 2 input error, 3 oracle and recognizer disagree.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import io
from .generate import random_instance
from .instance import GameInstance, InstanceError
from .mst import SpanningTree, mst_weight
from .oracle import DEFAULT_GUARD, GuardExceeded, brute_force_submodular
from .recognition import Verdict, decide
from .swide import (NecessaryViolation, SWideInstance, check_theorem12_a,
                    check_theorem12_b, min_swide_tree)

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_DISAGREE = 0, 1, 2, 3

fw = io.format_weight


class UsageError(Exception):
    pass


def _names(inst: GameInstance, xs) -> list[str]:
    return [inst.names[x] for x in sorted(xs)]


def verdict_to_dict(inst: GameInstance, verdict: Verdict) -> dict:
    n = inst.names
    out = {
        "instance": {"vertices": list(inst.names), "root": n[inst.root],
                     "levels": [fw(x) for x in inst.levels],
                     "weights": [[n[u], n[v], fw(w)] for u, v, w in inst.weight_items()]},
        "submodular": verdict.submodular,
        "witness": None,
        "failing_candidate": None,
        "violation": None,
    }
    wit = verdict.witness
    if wit is not None:
        out["witness"] = {
            "kind": wit.kind, "level": wit.level,
            "level_weight": fw(inst.level_weight(wit.level)),
            "cycle": [n[x] for x in wit.vertices],
            "tips": [n[x] for x in wit.tips],
            "evidence": n[wit.evidence],
        }
    if verdict.failing_candidate is not None:
        (u, v), value = verdict.failing_candidate
        out["failing_candidate"] = {"edge": [n[u], n[v]], "value": fw(value)}
    t = verdict.violation
    if t is not None:
        S = set(t.S)
        out["violation"] = {
            "u": n[t.u], "v": n[t.v], "S": _names(inst, S), "value": fw(t.value),
            "mst": {
                "S": fw(mst_weight(inst, S)),
                "S+u": fw(mst_weight(inst, S | {t.u})),
                "S+v": fw(mst_weight(inst, S | {t.v})),
                "S+u+v": fw(mst_weight(inst, S | {t.u, t.v})),
            },
        }
    return out


def verdict_lines(inst: GameInstance, verdict: Verdict, label: str = "verdict") -> list[str]:
    d = verdict_to_dict(inst, verdict)
    lines = [f"{label}: {'submodular' if verdict.submodular else 'not submodular'}"]
    if d["witness"]:
        w = d["witness"]
        kind = "bad hole" if w["kind"] == "bad_hole" else "bad induced diamond"
        tips = f"; tips {', '.join(w['tips'])}" if w["tips"] else ""
        lines.append(f"witness: {kind} in G_{w['level']} (weights <= {w['level_weight']}):"
                     f" {' '.join(w['cycle'])}{tips};"
                     f" {w['evidence']} not adjacent to {d['instance']['root']}")
    if d["failing_candidate"]:
        c = d["failing_candidate"]
        lines.append(f"failing candidate edge: {c['edge'][0]} {c['edge'][1]},"
                     f" f on its expensive neighborhood = {c['value']}")
    if d["violation"]:
        v = d["violation"]
        m = v["mst"]
        lines.append(f"violation: u = {v['u']}, v = {v['v']}, S = {{{', '.join(v['S'])}}},"
                     f" f_uv(S) = {v['value']}")
        lines.append(f"  mst(S+u) = {m['S+u']}, mst(S+v) = {m['S+v']},"
                     f" mst(S) = {m['S']}, mst(S+u+v) = {m['S+u+v']}")
    return lines


def tree_to_dict(names, tree: Optional[SpanningTree]) -> Optional[dict]:
    if tree is None:
        return None
    return {"edges": [[names[a], names[b]] for a, b in tree.edges],
            "cost": fw(tree.total_weight)}


def _emit(as_json: bool, payload: dict, lines: list[str]) -> None:
    if as_json:
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def cmd_check(args) -> int:
    inst = io.read_instance(args.path)
    verdict = decide(inst)
    _emit(args.json, verdict_to_dict(inst, verdict), verdict_lines(inst, verdict))
    return EXIT_OK if verdict.submodular else EXIT_VIOLATION


def cmd_oracle(args) -> int:
    inst = io.read_instance(args.path)
    oracle = brute_force_submodular(inst, args.guard)
    payload = {"oracle": verdict_to_dict(inst, oracle)}
    lines = verdict_lines(inst, oracle, "oracle")
    code = EXIT_OK if oracle.submodular else EXIT_VIOLATION
    if args.compare:
        verdict = decide(inst)
        agree = verdict.submodular == oracle.submodular
        payload["decide"] = verdict_to_dict(inst, verdict)
        payload["agree"] = agree
        lines += verdict_lines(inst, verdict, "decide")
        lines.append("agreement: yes" if agree else "agreement: NO")
        if not agree:
            code = EXIT_DISAGREE
    _emit(args.json, payload, lines)
    return code


def _necessary_dict(names, found: Optional[NecessaryViolation]):
    if found is None:
        return None
    return {"u": names[found.u], "v": names[found.v],
            "tree": tree_to_dict(names, found.tree)}


def cmd_swide(args) -> int:
    doc = io.load(args.path)
    if args.check_necessary:
        inst = doc.to_instance()
        names = inst.names
        a, b = check_theorem12_a(inst), check_theorem12_b(inst)
        payload = {"condition_a": _necessary_dict(names, a),
                   "condition_b": _necessary_dict(names, b)}
        lines = []
        for label, found in (("a", a), ("b", b)):
            if found is None:
                lines.append(f"condition ({label}): no violating minimum spanning tree")
            else:
                t = tree_to_dict(names, found.tree)
                edges = ", ".join(f"{x}{y}" for x, y in t["edges"])
                lines.append(f"condition ({label}) violated for u = {names[found.u]},"
                             f" v = {names[found.v]}: tree {{{edges}}}, cost {t['cost']}")
        _emit(args.json, payload, lines)
        return EXIT_OK if a is None and b is None else EXIT_VIOLATION

    idx, edges = io.document_graph(doc)
    names = doc.vertices
    picked = list(args.vertices)
    if len(picked) < 2:
        raise UsageError("swide needs a root and at least one terminal")
    for x in picked:
        if x not in idx:
            raise UsageError(f"unknown vertex {x!r}")
    root, terminals = idx[picked[0]], [idx[x] for x in picked[1:]]
    try:
        inst = SWideInstance.build(len(names), edges, root, terminals)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    tree = min_swide_tree(inst)
    payload = {"root": picked[0], "terminals": picked[1:],
               "feasible": tree is not None, "tree": tree_to_dict(names, tree)}
    if tree is None:
        lines = ["infeasible: no S-wide spanning tree"]
    else:
        t = tree_to_dict(names, tree)
        lines = [f"cost: {t['cost']}"] + [f"{x} {y}" for x, y in t["edges"]]
    _emit(args.json, payload, lines)
    return EXIT_OK if tree is not None else EXIT_VIOLATION


def cmd_gen(args) -> int:
    if not 0 <= args.seed < 2 ** 64:
        raise UsageError("seed must be an unsigned 64-bit integer")
    try:
        inst = random_instance(args.n, args.levels, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(io.dump(io.InstanceDocument.from_instance(inst), args.json))
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mstgame",
                description="Recognize submodular minimum spanning tree games.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="decide submodularity with a certificate")
    c.add_argument("path")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check)

    o = sub.add_parser("oracle", help="brute-force submodularity check")
    o.add_argument("path")
    o.add_argument("--guard", type=int, default=DEFAULT_GUARD,
                   help="largest vertex count accepted (default %(default)s)")
    o.add_argument("--compare", action="store_true",
                   help="also run the polynomial recognizer and compare")
    o.add_argument("--json", action="store_true")
    o.set_defaults(func=cmd_oracle)

    s = sub.add_parser("swide", help="minimum-cost S-wide spanning tree")
    s.add_argument("path")
    s.add_argument("vertices", nargs="*", metavar="ROOT TERMINAL",
                   help="root followed by one or more terminals")
    s.add_argument("--check-necessary", action="store_true",
                   help="test both necessary tree conditions on the game instead")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_swide)

    g = sub.add_parser("gen", help="print a seeded random instance")
    g.add_argument("n", type=int)
    g.add_argument("levels", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_gen)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except (UsageError, InstanceError, GuardExceeded, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
