"""Line-oriented text format for temporal graphs and 3DM instances.

::

    temporal-graph v1          3dm v1
    vertices 3                 ground 6 2
    mode periodic 4            target 1
    edge 0 1 2                 triple 1 3 5
    edge 1 2 1 3               triple 2 4 6

``mode`` is ``finite`` or ``periodic <p>``.  Blank lines and lines starting
with ``#`` are ignored.  Serialization is canonical: edges sorted by
endpoints, labels ascending, triples in instance order, one trailing newline.
"""
from __future__ import annotations

from typing import Union

from .graph import TemporalGraph
from .reductions import ThreeDMInstance

GRAPH_HEADER = "temporal-graph v1"
TDM_HEADER = "3dm v1"
Instance = Union[TemporalGraph, ThreeDMInstance]


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _records(text: str):
    for no, raw in enumerate(text.split("\n"), start=1):
        s = raw.strip()
        if s and not s.startswith("#"):
            yield no, s.split()


def _ints(no: int, tokens: list[str], what: str) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(no, f"{what} must be integers, got {' '.join(tokens)!r}") from None


def _expect(no: int, tokens: list[str], keyword: str, count: int = None) -> list[int]:
    if tokens[0] != keyword:
        raise ParseError(no, f"expected '{keyword}', got '{tokens[0]}'")
    if count is not None and len(tokens) - 1 != count:
        raise ParseError(no, f"'{keyword}' takes {count} value(s)")
    return _ints(no, tokens[1:], keyword)


def _parse_graph(records) -> TemporalGraph:
    no, tok = next(records, (1, None))
    if tok is None:
        raise ParseError(no, "missing 'vertices' line")
    (n,) = _expect(no, tok, "vertices", 1)
    if n < 1:
        raise ParseError(no, "vertex count must be positive")
    no, tok = next(records, (no, None))
    if tok is None:
        raise ParseError(no, "missing 'mode' line")
    if tok[0] != "mode":
        raise ParseError(no, f"expected 'mode', got '{tok[0]}'")
    if tok[1:] == ["finite"]:
        period = None
    elif len(tok) == 3 and tok[1] == "periodic":
        (period,) = _ints(no, tok[2:], "period")
        if period < 1:
            raise ParseError(no, "period must be positive")
    else:
        raise ParseError(no, "mode must be 'finite' or 'periodic <p>'")
    labels = {}
    for no, tok in records:
        if tok[0] != "edge":
            raise ParseError(no, f"expected 'edge', got '{tok[0]}'")
        if len(tok) < 4:
            raise ParseError(no, "edge needs two endpoints and at least one label")
        u, v, *lab = _ints(no, tok[1:], "edge fields")
        if not 0 <= u < v < n:
            raise ParseError(no, f"edge endpoints must satisfy 0 <= u < v < {n}")
        if (u, v) in labels:
            raise ParseError(no, f"duplicate edge {u} {v}")
        if len(set(lab)) != len(lab):
            raise ParseError(no, "repeated label")
        if any(x < 1 for x in lab):
            raise ParseError(no, "labels must be positive")
        if period is not None and any(x > period for x in lab):
            raise ParseError(no, f"residues must lie in 1..{period}")
        labels[(u, v)] = sorted(lab)
    if period is None:
        return TemporalGraph.finite(n, labels)
    return TemporalGraph.periodic(n, period, labels)


def _parse_3dm(records) -> ThreeDMInstance:
    no, tok = next(records, (1, None))
    if tok is None:
        raise ParseError(no, "missing 'ground' line")
    n, p_size = _expect(no, tok, "ground", 2)
    no, tok = next(records, (no, None))
    if tok is None:
        raise ParseError(no, "missing 'target' line")
    (target,) = _expect(no, tok, "target", 1)
    triples = []
    for no, tok in records:
        triples.append(tuple(_expect(no, tok, "triple", 3)))
    try:
        return ThreeDMInstance(n, p_size, tuple(triples), target)
    except ValueError as e:
        raise ParseError(no, str(e)) from None


def parse_instance(text: str) -> Instance:
    records = _records(text)
    first = next(records, None)
    if first is None:
        raise ParseError(1, "empty instance")
    no, tok = first
    header = " ".join(tok)
    if header == GRAPH_HEADER:
        return _parse_graph(records)
    if header == TDM_HEADER:
        return _parse_3dm(records)
    if tok[0] in ("temporal-graph", "3dm"):
        raise ParseError(no, f"unsupported version '{' '.join(tok[1:])}'")
    raise ParseError(no, f"unknown header '{header}'")


def serialize_instance(obj: Instance) -> str:
    if isinstance(obj, TemporalGraph):
        mode = f"periodic {obj.period}" if obj.is_periodic else "finite"
        lines = [GRAPH_HEADER, f"vertices {obj.n}", f"mode {mode}"]
        for u, v in obj.edges:
            lines.append(" ".join(["edge", str(u), str(v)] + [str(x) for x in obj.labels[(u, v)].labels]))
    elif isinstance(obj, ThreeDMInstance):
        lines = [TDM_HEADER, f"ground {obj.n} {obj.p_size}", f"target {obj.target}"]
        lines += [f"triple {x} {y} {z}" for x, y, z in obj.triples]
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return "\n".join(lines) + "\n"


def read_instance(path: str) -> Instance:
    with open(path, encoding="utf-8") as f:
        return parse_instance(f.read())


def write_instance(path: str, obj: Instance):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(serialize_instance(obj))
