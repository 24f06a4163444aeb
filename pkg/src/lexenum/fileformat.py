"""Line-oriented text format for automata.

::

    # comment lines allowed anywhere; `#` also starts a trailing comment
    alphabet a b          # symbol order = lexicographic order
    states 2
    initial 0             # zero or more states, space-separated
    final 1
    0 a 0                 # transition lines: from symbol to
    0 b 1
    1 a 1

Tokens are whitespace-separated. The ``alphabet`` and ``states`` lines are
required (each exactly once); ``initial``/``final`` lines may repeat and
accumulate. Line order is otherwise free.
"""

from __future__ import annotations

from typing import Optional

from .automaton import Nfa, build_nfa

_DIRECTIVES = ("alphabet", "states", "initial", "final")


class ParseError(ValueError):
    """Diagnostic for a malformed automaton file, with a 1-based line number."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _state_token(token: str, line_no: int) -> int:
    if not token.isdigit():
        raise ParseError(f"expected a state number, got {token!r}", line_no)
    return int(token)


def parse_automaton(text: str) -> Nfa:
    """Parse the text format above into a validated :class:`Nfa`.

    Raises :class:`ParseError` naming the offending line for unknown
    directives, unknown symbols, out-of-range states, malformed lines, and
    missing/duplicate ``alphabet``/``states`` headers.
    """
    alphabet: Optional[list[str]] = None
    alphabet_line = 0
    state_count: Optional[int] = None
    initial_entries: list[tuple[int, int]] = []  # (line, state)
    final_entries: list[tuple[int, int]] = []
    transition_entries: list[tuple[int, int, str, int]] = []  # (line, src, glyph, dst)

    for line_no, raw in enumerate(text.splitlines(), start=1):
        comment = raw.find("#")
        if comment != -1:
            raw = raw[:comment]
        tokens = raw.split()
        if not tokens:
            continue
        head = tokens[0]
        if head == "alphabet":
            if alphabet is not None:
                raise ParseError("duplicate 'alphabet' line", line_no)
            for token in tokens[1:]:
                if len(token) != 1:
                    raise ParseError(
                        f"alphabet symbol {token!r} is not a single character", line_no
                    )
            alphabet = tokens[1:]
            alphabet_line = line_no
        elif head == "states":
            if state_count is not None:
                raise ParseError("duplicate 'states' line", line_no)
            if len(tokens) != 2:
                raise ParseError("'states' expects exactly one number", line_no)
            state_count = _state_token(tokens[1], line_no)
        elif head == "initial":
            initial_entries += [(line_no, _state_token(t, line_no)) for t in tokens[1:]]
        elif head == "final":
            final_entries += [(line_no, _state_token(t, line_no)) for t in tokens[1:]]
        elif head.isdigit():
            if len(tokens) != 3:
                raise ParseError(
                    "transition line must be 'from symbol to'", line_no
                )
            src = _state_token(tokens[0], line_no)
            dst = _state_token(tokens[2], line_no)
            transition_entries.append((line_no, src, tokens[1], dst))
        else:
            raise ParseError(f"unknown directive {head!r}", line_no)

    if alphabet is None:
        raise ParseError("missing 'alphabet' line")
    if state_count is None:
        raise ParseError("missing 'states' line")

    glyph_ids = {}
    for i, glyph in enumerate(alphabet):
        if glyph in glyph_ids:
            raise ParseError(f"duplicate symbol {glyph!r} in alphabet", alphabet_line)
        glyph_ids[glyph] = i

    def check_state(state: int, line_no: int) -> int:
        if state >= state_count:
            raise ParseError(
                f"state {state} out of range for {state_count} states", line_no
            )
        return state

    initial = [check_state(q, ln) for ln, q in initial_entries]
    final = [check_state(q, ln) for ln, q in final_entries]
    transitions = []
    for line_no, src, glyph, dst in transition_entries:
        if glyph not in glyph_ids:
            raise ParseError(f"unknown symbol {glyph!r}", line_no)
        transitions.append(
            (check_state(src, line_no), glyph_ids[glyph], check_state(dst, line_no))
        )

    return build_nfa(alphabet, state_count, initial, final, transitions)
