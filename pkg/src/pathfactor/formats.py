"""Graph serialisation (graph6 short form, edge lists) and the JSON report schema."""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from .graph import Graph, build_graph
from .params import is_inf

GRAPH6_MAX_ORDER = 62


class FormatError(ValueError):
    pass


def emit_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 (short form, order <= 62)."""
    n = g.order
    if n > GRAPH6_MAX_ORDER:
        raise FormatError(f"graph6 short form supports at most {GRAPH6_MAX_ORDER} vertices")
    bits = [g.adj[i] >> j & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + n)]
    for start in range(0, len(bits), 6):
        value = 0
        for b in bits[start:start + 6]:
            value = value << 1 | b
        out.append(chr(63 + value))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string (an optional ``>>graph6<<`` header is accepted)."""
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    if not data:
        raise FormatError("empty graph6 string")
    for pos, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"character {ch!r} at position {pos} is outside the graph6 range")
    n = ord(data[0]) - 63
    if n > GRAPH6_MAX_ORDER:
        raise FormatError("only the short graph6 form (order <= 62) is supported")
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(data) != expected:
        raise FormatError(f"graph6 for order {n} needs {expected} characters, got {len(data)}")
    bits = []
    for ch in data[1:]:
        value = ord(ch) - 63
        bits.extend(value >> shift & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise FormatError("nonzero padding bits")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return build_graph(n, edges)


def parse_edge_list(text: str) -> Graph:
    """Parse ``order m`` followed by ``m`` lines ``u v`` (0-based).

    ``#`` starts a comment; blank lines are ignored.
    """
    header: Optional[tuple[int, int]] = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            a, b = (int(f) for f in fields)
        except ValueError:
            raise FormatError(f"line {lineno}: expected two integers, got {raw.strip()!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise FormatError(f"line {lineno}: order and edge count must be nonnegative")
            header = (a, b)
        else:
            edges.append((a, b))
    if header is None:
        raise FormatError("missing 'order m' header line")
    order, m = header
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges but {len(edges)} were given")
    try:
        return build_graph(order, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.order} {g.size()}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def encode_rational(value) -> Any:
    if is_inf(value):
        return "inf"
    value = Fraction(value)
    return {"num": value.numerator, "den": value.denominator}


def decode_rational(data) -> Any:
    if data == "inf":
        return float("inf")
    return Fraction(data["num"], data["den"])


def to_jsonable(obj) -> Any:
    """Convert results into JSON-ready values; rationals never become floats."""
    if isinstance(obj, Fraction) or is_inf(obj):
        return encode_rational(obj)
    if isinstance(obj, float):
        raise TypeError("refusing to serialise a float")
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return obj


@dataclass
class ReportDocument:
    tool_version: str
    command: str
    input_digest: str
    results: Any
    timing_ms: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "toolVersion": self.tool_version,
            "command": self.command,
            "inputDigest": self.input_digest,
            "results": to_jsonable(self.results),
            "timing": self.timing_ms,
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        data = json.loads(text)
        return cls(data["toolVersion"], data["command"], data["inputDigest"],
                   data["results"], data["timing"])
