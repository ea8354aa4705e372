"""Instance documents: a line-oriented text format and a JSON equivalent.

Text format::

    # comments and blank lines are ignored
    format 1
    root r
    vertices r a b c        (optional; default: root, then first appearance)
    r a 1
    a b 3/2

Weights are exact: integers or fractions ``p/q``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from .instance import GameInstance, InstanceError, Weight, normalize_weight

FORMAT_VERSION = 1


class DocumentError(InstanceError):
    """Malformed or inconsistent instance document."""


_WEIGHT = re.compile(r"[+-]?\d+(/\d+)?")


def parse_weight(token: str) -> Weight:
    text = token.strip()
    if not _WEIGHT.fullmatch(text):
        raise DocumentError(f"weight {token!r} is not an integer or p/q")
    try:
        return normalize_weight(Fraction(text))
    except ZeroDivisionError:
        raise DocumentError(f"weight {token!r} has a zero denominator") from None


def format_weight(w: Weight) -> str:
    if isinstance(w, Fraction):
        return f"{w.numerator}/{w.denominator}" if w.denominator != 1 else str(w.numerator)
    return str(w)


@dataclass(frozen=True)
class InstanceDocument:
    version: int
    vertices: tuple[str, ...]
    root: str
    weights: tuple[tuple[str, str, Weight], ...]

    @classmethod
    def from_instance(cls, inst: GameInstance) -> "InstanceDocument":
        names = inst.names
        return cls(FORMAT_VERSION, names, names[inst.root],
                   tuple((names[u], names[v], w) for u, v, w in inst.weight_items()))

    def index(self) -> dict[str, int]:
        return {x: i for i, x in enumerate(self.vertices)}

    def to_instance(self) -> GameInstance:
        """Validate completeness and build the game instance."""
        idx = self.index()
        seen: dict[frozenset, tuple[str, str]] = {}
        for a, b, _ in self.weights:
            key = frozenset((a, b))
            if key in seen:
                raise DocumentError(f"duplicate weight for pair ({a}, {b})")
            seen[key] = (a, b)
        names = self.vertices
        for i, a in enumerate(names):
            for b in names[i + 1:]:
                if frozenset((a, b)) not in seen:
                    raise DocumentError(f"missing weight for pair ({a}, {b})")
        weights = {(idx[a], idx[b]): w for a, b, w in self.weights}
        return GameInstance(len(names), idx[self.root], weights, names)


def _assemble(version, root, vertices, triples, where) -> InstanceDocument:
    if version != FORMAT_VERSION:
        raise DocumentError(f"unsupported format version {version}")
    if root is None:
        raise DocumentError("no root declared")
    if vertices is None:
        order = [root]
        for a, b, _ in triples:
            for x in (a, b):
                if x not in order:
                    order.append(x)
        vertices = order
    if len(set(vertices)) != len(vertices):
        raise DocumentError("vertex list has duplicates")
    if root not in vertices:
        raise DocumentError(f"root {root!r} is not in the vertex list")
    known = set(vertices)
    for j, (a, b, _) in enumerate(triples):
        for x in (a, b):
            if x not in known:
                raise DocumentError(f"{where(j)}: unknown vertex {x!r}")
        if a == b:
            raise DocumentError(f"{where(j)}: self-loop on {a!r}")
    if len(vertices) < 2:
        raise DocumentError("need at least 2 vertices")
    return InstanceDocument(version, tuple(vertices), root, tuple(triples))


def parse_text(text: str) -> InstanceDocument:
    version, root, vertices = FORMAT_VERSION, None, None
    triples: list[tuple[str, str, Weight]] = []
    lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head = tokens[0]
        if head == "format":
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise DocumentError(f"line {lineno}: expected 'format <int>'")
            version = int(tokens[1])
        elif head == "root":
            if len(tokens) != 2:
                raise DocumentError(f"line {lineno}: expected 'root <name>'")
            if root is not None:
                raise DocumentError(f"line {lineno}: root declared twice")
            root = tokens[1]
        elif head == "vertices":
            if vertices is not None:
                raise DocumentError(f"line {lineno}: vertex list declared twice")
            vertices = tokens[1:]
        elif len(tokens) == 3:
            try:
                w = parse_weight(tokens[2])
            except DocumentError as exc:
                raise DocumentError(f"line {lineno}: {exc}") from None
            triples.append((tokens[0], tokens[1], w))
            lines.append(lineno)
        else:
            raise DocumentError(f"line {lineno}: expected '<u> <v> <weight>'")
    return _assemble(version, root, vertices, triples,
                     lambda j: f"line {lines[j]}")


def parse_json(text: str) -> InstanceDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise DocumentError("top level must be an object")
    triples = []
    for j, item in enumerate(data.get("weights", [])):
        if not (isinstance(item, list) and len(item) == 3):
            raise DocumentError(f"weights[{j}]: expected [u, v, weight]")
        a, b, w = item
        if isinstance(w, float) or isinstance(w, bool):
            raise DocumentError(f"weights[{j}]: weight must be an int or a 'p/q' string")
        w = parse_weight(str(w))
        triples.append((str(a), str(b), w))
    vertices = data.get("vertices")
    return _assemble(data.get("format", FORMAT_VERSION), data.get("root"),
                     None if vertices is None else [str(x) for x in vertices],
                     triples, lambda j: f"weights[{j}]")


def parse(text: str) -> InstanceDocument:
    return parse_json(text) if text.lstrip().startswith("{") else parse_text(text)


def emit_text(doc: InstanceDocument) -> str:
    out = [f"format {doc.version}", f"root {doc.root}",
           "vertices " + " ".join(doc.vertices)]
    out += [f"{a} {b} {format_weight(w)}" for a, b, w in doc.weights]
    return "\n".join(out) + "\n"


def emit_json(doc: InstanceDocument) -> str:
    data = {"format": doc.version, "root": doc.root,
            "vertices": list(doc.vertices),
            "weights": [[a, b, w if isinstance(w, int) else format_weight(w)]
                        for a, b, w in doc.weights]}
    return json.dumps(data, indent=2) + "\n"


def load(path: str) -> InstanceDocument:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def dump(doc: InstanceDocument, as_json: bool = False) -> str:
    return emit_json(doc) if as_json else emit_text(doc)


def read_instance(path: str) -> GameInstance:
    return load(path).to_instance()


def document_graph(doc: InstanceDocument):
    """Index-keyed edges of a possibly incomplete graph document."""
    idx = doc.index()
    edges = {}
    for a, b, w in doc.weights:
        key = (idx[a], idx[b])
        if key in edges or key[::-1] in edges:
            raise DocumentError(f"duplicate edge ({a}, {b})")
        edges[key] = w
    return idx, edges
