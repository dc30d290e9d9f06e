"""A tiny expression language for join/union constructions.

Grammar::

    expr  := union ("+" union)*          graph join
    union := term ("|" term)*            disjoint union
    term  := [int "*"] (atom | "(" expr ")")
    atom  := "K" int | "P" int | "C" int | "corona(" expr ")"

so ``"K3+(3*K1|K2)"`` is the complete graph K3 joined with three isolated
vertices and one K2. Whitespace is ignored. Labels follow reading order:
the left operand of ``+`` or ``|`` gets the lower labels.
"""

from __future__ import annotations

from .graph import Graph, complete_graph, corona, cycle_graph, disjoint_union, join, path_graph, repeat


class ExpressionError(ValueError):
    """Syntax or semantic error in a construction expression."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expect(self, token: str):
        self._skip()
        if not self.text.startswith(token, self.pos):
            raise ExpressionError(f"expected {token!r}", self.pos)
        self.pos += len(token)

    def _int(self) -> int:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ExpressionError("expected an integer", start)
        return int(self.text[start:self.pos])

    def parse(self) -> Graph:
        g = self.expr()
        self._skip()
        if self.pos != len(self.text):
            raise ExpressionError(f"unexpected {self.text[self.pos]!r}", self.pos)
        return g

    def expr(self) -> Graph:
        g = self.union()
        while self._peek() == "+":
            self.pos += 1
            g = join(g, self.union())
        return g

    def union(self) -> Graph:
        parts = [self.term()]
        while self._peek() == "|":
            self.pos += 1
            parts.append(self.term())
        return disjoint_union(*parts) if len(parts) > 1 else parts[0]

    def term(self) -> Graph:
        times = 1
        if self._peek().isdigit():
            start = self.pos
            times = self._int()
            self._expect("*")
            if times == 0:
                raise ExpressionError("repeat count must be positive", start)
        if self._peek() == "(":
            self.pos += 1
            g = self.expr()
            self._expect(")")
        else:
            g = self.atom()
        return repeat(g, times) if times > 1 else g

    def atom(self) -> Graph:
        self._skip()
        start = self.pos
        if self.text.startswith("corona", self.pos):
            self.pos += len("corona")
            self._expect("(")
            inner = self.expr()
            self._expect(")")
            return corona(inner)
        head = self._peek()
        if head not in ("K", "P", "C"):
            raise ExpressionError("expected K, P, C, corona( or (", start)
        self.pos += 1
        size = self._int()
        if size == 0:
            raise ExpressionError(f"{head}0 has no vertices", start)
        if head == "K":
            return complete_graph(size)
        if head == "P":
            return path_graph(size)
        if size < 3:
            raise ExpressionError("a cycle needs at least 3 vertices", start)
        return cycle_graph(size)


def parse_construction(text: str) -> Graph:
    """Build the graph described by a construction expression."""
    return _Parser(text).parse()
