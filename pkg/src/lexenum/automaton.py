"""Automaton data model: alphabet, dense states, indexed transitions.

States are exactly the integers ``0 .. state_count-1``. Transitions live in
two read-only layouts built once by :func:`build_nfa`:

* per-state adjacency lists of ``(symbol_id, targets)`` pairs, strictly
  increasing in symbol id, with non-empty duplicate-free target tuples;
* a per-(state, symbol) index giving each target tuple in O(1).

``Nfa`` instances are immutable after construction and safe to share across
threads. ``SparseStateSet`` is a single-owner mutable structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from .instrument import ops as _ops

# A word is a tuple of symbol ids, first letter first.
Word = tuple[int, ...]


class AutomatonError(ValueError):
    """Raw automaton input failed validation."""


@dataclass(frozen=True, slots=True)
class Symbol:
    """One alphabet letter: dense id (the lexicographic rank) and its glyph."""

    id: int
    glyph: str


class SparseStateSet:
    """Subset of states with O(1) insert and O(|set|) iterate/clear.

    A byte membership array plus a list of the members in insertion order;
    clearing touches only the members present, and creating a fresh set costs
    O(state_count). Iteration order is insertion order.
    """

    __slots__ = ("membership", "elements")

    def __init__(self, state_count: int):
        self.membership = bytearray(state_count)
        self.elements: list[int] = []

    def insert(self, state: int) -> None:
        """Add ``state`` (0 <= state < state_count); re-inserting is a no-op."""
        if not self.membership[state]:
            self.membership[state] = 1
            self.elements.append(state)

    def clear(self) -> None:
        for q in self.elements:
            self.membership[q] = 0
        self.elements.clear()

    def copy(self) -> "SparseStateSet":
        dup = SparseStateSet.__new__(SparseStateSet)
        dup.membership = bytearray(self.membership)
        dup.elements = list(self.elements)
        return dup

    def __contains__(self, state: int) -> bool:
        return bool(self.membership[state])

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"SparseStateSet({self.elements!r})"


class Nfa:
    """Immutable nondeterministic finite automaton without epsilon moves.

    Build instances through :func:`build_nfa` (or the text/regex frontends);
    the constructor trusts its arguments. ``initial`` is exposed as a
    :class:`SparseStateSet` and must not be mutated.
    """

    __slots__ = (
        "alphabet",
        "state_count",
        "initial",
        "final_flags",
        "final_states",
        "adjacency",
        "transition_count",
        "_glyphs",
        "_glyph_ids",
        "_adj_symbols",
        "_index",
    )

    def __init__(
        self,
        alphabet: tuple[Symbol, ...],
        state_count: int,
        initial: SparseStateSet,
        final_flags: bytearray,
        final_states: tuple[int, ...],
        adjacency: list[list[tuple[int, tuple[int, ...]]]],
        index: list[list[Union[tuple[int, ...], None]]],
        transition_count: int,
    ):
        self.alphabet = alphabet
        self.state_count = state_count
        self.initial = initial
        self.final_flags = final_flags
        self.final_states = final_states
        self.adjacency = adjacency
        self.transition_count = transition_count
        self._glyphs = tuple(s.glyph for s in alphabet)
        self._glyph_ids = {s.glyph: s.id for s in alphabet}
        self._adj_symbols = [[a for a, _ in row] for row in adjacency]
        self._index = index

    @property
    def symbol_count(self) -> int:
        return len(self.alphabet)

    def is_final(self, state: int) -> bool:
        return bool(self.final_flags[state])

    def targets(self, state: int, symbol_id: int) -> tuple[int, ...]:
        """Target states of ``state`` on ``symbol_id``; () when none. O(1)."""
        found = self._index[state][symbol_id]
        return found if found is not None else ()

    def symbol_id(self, glyph: str) -> int:
        try:
            return self._glyph_ids[glyph]
        except KeyError:
            raise AutomatonError(f"unknown symbol {glyph!r}") from None

    def format_word(self, word: Iterable[int]) -> str:
        glyphs = self._glyphs
        return "".join(glyphs[a] for a in word)

    def word_from_str(self, text: str) -> Word:
        return tuple(self.symbol_id(ch) for ch in text)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Nfa):
            return NotImplemented
        return (
            self._glyphs == other._glyphs
            and self.state_count == other.state_count
            and set(self.initial.elements) == set(other.initial.elements)
            and set(self.final_states) == set(other.final_states)
            and self.adjacency == other.adjacency
        )

    __hash__ = None  # mutable buffers inside

    def __repr__(self) -> str:
        return (
            f"Nfa(|Q|={self.state_count}, sigma={''.join(self._glyphs)!r}, "
            f"|delta|={self.transition_count}, I={self.initial.elements}, "
            f"F={list(self.final_states)})"
        )


def _check_state(value, state_count: int, what: str) -> int:
    if not isinstance(value, int) or not 0 <= value < state_count:
        raise AutomatonError(f"{what} {value!r} out of range for {state_count} states")
    return value


def build_nfa(
    alphabet: Sequence[Union[str, Symbol]],
    state_count: int,
    initial: Iterable[int],
    final: Iterable[int],
    transitions: Iterable[tuple],
) -> Nfa:
    """Validate raw automaton pieces and normalise them into an :class:`Nfa`.

    ``alphabet`` lists single-character glyphs whose *declaration order* is the
    lexicographic order. Transitions are ``(state, symbol, state)`` triples
    where the symbol may be a glyph or a symbol id; duplicates are collapsed.
    Target order within a pair is first-occurrence order. The layout build
    costs O(#transitions + |alphabet| * state_count).

    Raises :class:`AutomatonError` for duplicate alphabet glyphs and for
    out-of-range state or symbol references. A 0-state automaton with empty
    initial/final/transitions is legal and accepts nothing.
    """
    symbols: list[Symbol] = []
    glyph_ids: dict[str, int] = {}
    for item in alphabet:
        glyph = item.glyph if isinstance(item, Symbol) else item
        if not isinstance(glyph, str) or len(glyph) != 1:
            raise AutomatonError(f"alphabet entry {glyph!r} is not a single character")
        if glyph in glyph_ids:
            raise AutomatonError(f"duplicate symbol {glyph!r} in alphabet")
        glyph_ids[glyph] = len(symbols)
        symbols.append(Symbol(len(symbols), glyph))
    sigma = len(symbols)

    if not isinstance(state_count, int) or state_count < 0:
        raise AutomatonError(f"state count must be a non-negative integer, got {state_count!r}")

    init_set = SparseStateSet(state_count)
    for q in initial:
        init_set.insert(_check_state(q, state_count, "initial state"))

    final_flags = bytearray(state_count)
    final_states: list[int] = []
    for q in final:
        _check_state(q, state_count, "final state")
        if not final_flags[q]:
            final_flags[q] = 1
            final_states.append(q)

    # Per-(state, symbol) buckets; creating them is the O(sigma*|Q|) share of
    # the layout cost.
    index: list[list] = [[None] * sigma for _ in range(state_count)]
    seen: set[tuple[int, int, int]] = set()
    raw_count = 0
    for entry in transitions:
        raw_count += 1
        try:
            src, sym, dst = entry
        except (TypeError, ValueError):
            raise AutomatonError(f"transition {entry!r} is not a (state, symbol, state) triple") from None
        if isinstance(sym, str):
            if sym not in glyph_ids:
                raise AutomatonError(f"unknown symbol {sym!r} in transition {entry!r}")
            a = glyph_ids[sym]
        elif isinstance(sym, int) and 0 <= sym < sigma:
            a = sym
        else:
            raise AutomatonError(f"unknown symbol {sym!r} in transition {entry!r}")
        _check_state(src, state_count, "transition source")
        _check_state(dst, state_count, "transition target")
        key = (src, a, dst)
        if key in seen:
            continue
        seen.add(key)
        bucket = index[src][a]
        if bucket is None:
            index[src][a] = [dst]
        else:
            bucket.append(dst)

    adjacency: list[list[tuple[int, tuple[int, ...]]]] = []
    for q in range(state_count):
        index_row = index[q]
        row = []
        for a in range(sigma):
            bucket = index_row[a]
            if bucket is not None:
                frozen = tuple(bucket)
                index_row[a] = frozen
                row.append((a, frozen))
        adjacency.append(row)

    if _ops.enabled:
        _ops.ops += 2 * state_count * sigma + raw_count

    return Nfa(
        tuple(symbols),
        state_count,
        init_set,
        final_flags,
        tuple(final_states),
        adjacency,
        index,
        len(seen),
    )


def delta_step(
    nfa: Nfa,
    source: SparseStateSet,
    symbol: Union[int, Symbol],
    into: SparseStateSet,
) -> SparseStateSet:
    """Collect every target reachable from ``source`` on ``symbol`` into ``into``.

    ``into`` must be empty on entry; it is also returned. The work is
    proportional to the transitions labelled by ``symbol`` leaving ``source``
    (plus one index probe per source state).
    """
    a = symbol.id if isinstance(symbol, Symbol) else symbol
    index = nfa._index
    insert = into.insert
    touched = 0
    for q in source.elements:
        targets = index[q][a]
        if targets:
            touched += len(targets)
            for t in targets:
                insert(t)
    if _ops.enabled:
        _ops.ops += len(source.elements) + touched
    return into
