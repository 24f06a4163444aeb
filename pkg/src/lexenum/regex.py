"""Small regex frontend: literals, concatenation, ``|``, ``*``, ``+``, ``?``,
parentheses.

Patterns compile through the classic construction with epsilon moves, which
are then eliminated so the resulting :class:`Nfa` satisfies the plain
transition model used everywhere else. The alphabet is the set of literals
that occur in the pattern, ordered by code point.
"""

from __future__ import annotations

from .automaton import Nfa, build_nfa

_SPECIAL = "|*+?()"


class RegexSyntaxError(ValueError):
    """Pattern rejected; ``position`` is the 0-based offset of the problem."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


# AST nodes are tuples tagged by their first element:
# ("eps",) ("lit", ch) ("cat", a, b) ("alt", a, b) ("star", a) ("plus", a) ("opt", a)


class _Parser:
    def __init__(self, pattern: str):
        self.pattern = pattern
        self.pos = 0

    def peek(self):
        return self.pattern[self.pos] if self.pos < len(self.pattern) else None

    def parse(self):
        node = self.alternation()
        if self.pos < len(self.pattern):
            raise RegexSyntaxError(f"unexpected {self.pattern[self.pos]!r}", self.pos)
        return node

    def alternation(self):
        node = self.concatenation()
        while self.peek() == "|":
            self.pos += 1
            node = ("alt", node, self.concatenation())
        return node

    def concatenation(self):
        parts = []
        while True:
            ch = self.peek()
            if ch is None or ch in "|)":
                break
            parts.append(self.repetition())
        if not parts:
            return ("eps",)
        node = parts[0]
        for part in parts[1:]:
            node = ("cat", node, part)
        return node

    def repetition(self):
        node = self.atom()
        while True:
            ch = self.peek()
            if ch == "*":
                node = ("star", node)
            elif ch == "+":
                node = ("plus", node)
            elif ch == "?":
                node = ("opt", node)
            else:
                return node
            self.pos += 1

    def atom(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            node = self.alternation()
            if self.peek() != ")":
                raise RegexSyntaxError("unbalanced '('", self.pos)
            self.pos += 1
            return node
        if ch in "*+?":
            raise RegexSyntaxError(f"nothing to repeat with {ch!r}", self.pos)
        # ')' and '|' terminate concatenation and never reach here; anything
        # else is a literal.
        self.pos += 1
        return ("lit", ch)


def _literals(node, out: set):
    tag = node[0]
    if tag == "lit":
        out.add(node[1])
    elif tag in ("cat", "alt"):
        _literals(node[1], out)
        _literals(node[2], out)
    elif tag in ("star", "plus", "opt"):
        _literals(node[1], out)


class _Builder:
    """Fragment-by-fragment automaton assembly with epsilon edges."""

    def __init__(self, symbol_ids: dict):
        self.symbol_ids = symbol_ids
        self.eps: list[list[int]] = []
        self.sym: list[list[tuple[int, int]]] = []

    def state(self) -> int:
        self.eps.append([])
        self.sym.append([])
        return len(self.eps) - 1

    def build(self, node) -> tuple[int, int]:
        tag = node[0]
        if tag == "eps":
            s = self.state()
            return s, s
        if tag == "lit":
            s, t = self.state(), self.state()
            self.sym[s].append((self.symbol_ids[node[1]], t))
            return s, t
        if tag == "cat":
            s1, t1 = self.build(node[1])
            s2, t2 = self.build(node[2])
            self.eps[t1].append(s2)
            return s1, t2
        if tag == "alt":
            s1, t1 = self.build(node[1])
            s2, t2 = self.build(node[2])
            s, t = self.state(), self.state()
            self.eps[s] += [s1, s2]
            self.eps[t1].append(t)
            self.eps[t2].append(t)
            return s, t
        s1, t1 = self.build(node[1])
        s, t = self.state(), self.state()
        self.eps[s].append(s1)
        self.eps[t1].append(t)
        if tag in ("star", "plus"):
            self.eps[t1].append(s1)
        if tag in ("star", "opt"):
            self.eps[s].append(t)
        return s, t


def _closure(eps: list[list[int]], start: int) -> set[int]:
    seen = {start}
    todo = [start]
    while todo:
        for nxt in eps[todo.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return seen


def compile_regex(pattern: str) -> Nfa:
    """Compile ``pattern`` into an epsilon-free :class:`Nfa`.

    Raises :class:`RegexSyntaxError` with the offending position. The empty
    pattern (and empty branches such as ``a|``) match the empty word.
    """
    ast = _Parser(pattern).parse()
    literals: set[str] = set()
    _literals(ast, literals)
    alphabet = sorted(literals)
    symbol_ids = {ch: i for i, ch in enumerate(alphabet)}

    builder = _Builder(symbol_ids)
    start, accept = builder.build(ast)
    eps, sym = builder.eps, builder.sym

    # Epsilon elimination: each state inherits the symbol transitions of its
    # closure; it is final iff its closure reaches the accepting state.
    closures = [_closure(eps, q) for q in range(len(eps))]
    arcs: list[set[tuple[int, int]]] = []
    finals = []
    for q in range(len(eps)):
        merged = set()
        for p in closures[q]:
            merged.update(sym[p])
        arcs.append(merged)
        if accept in closures[q]:
            finals.append(q)

    # Keep only states reachable from the start, renumbered densely in
    # discovery order.
    order = [start]
    number = {start: 0}
    for q in order:
        for _, t in sorted(arcs[q]):
            if t not in number:
                number[t] = len(order)
                order.append(t)

    transitions = [
        (number[q], a, number[t]) for q in order for a, t in sorted(arcs[q])
    ]
    final_states = [number[q] for q in finals if q in number]
    return build_nfa(alphabet, len(order), [0], final_states, transitions)
