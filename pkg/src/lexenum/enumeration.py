"""Cross-section enumeration: least word, successor search, pull cursors.

The cursor produces the words of one length accepted by an automaton in
strictly increasing lexicographic order. Between two outputs it does a
bounded amount of work, O(length * #transitions), and keeps no state besides
the last output word, one reusable scratch set, and the read-only tables, so
memory stays flat no matter how many words are produced.
"""

from __future__ import annotations

from bisect import bisect_right
from operator import itemgetter
from typing import Iterator, Optional, Union

from .automaton import Nfa, SparseStateSet, Word, delta_step
from .instrument import ops as _ops
from .tables import MinWordTables, precompute


class _ExhaustedType:
    __slots__ = ()

    def __repr__(self) -> str:
        return "EXHAUSTED"


#: Sticky end-of-enumeration marker returned by :meth:`CrossSectionCursor.next`.
EXHAUSTED = _ExhaustedType()

_symbol_of = itemgetter(0)


def min_word(k: int, states: SparseStateSet, tables: MinWordTables) -> Optional[Word]:
    """Least length-k word accepted from any state in ``states``, or None.

    One pass over ``states`` finds the best starting state (and whether any
    state accepts at all); the word is then spelled by following first_step
    entries. A miss costs O(|states|), a hit O(k + |states|).
    """
    elems = states.elements
    if not elems:
        return None
    first_step = tables.first_step
    row = first_step[k]
    order = tables.leq[k]
    n = tables.state_count
    q_min = elems[0]
    found = False
    for q in elems:
        if row[q] is not None:
            found = True
        if order[q * n + q_min]:
            q_min = q
    if _ops.enabled:
        _ops.ops += 2 * len(elems)
    if not found:
        return None
    out = []
    q = q_min
    for level in range(k, 0, -1):
        a, q = first_step[level][q]
        out.append(a)
    if _ops.enabled:
        _ops.ops += k
    return tuple(out)


def build_run_stack(word: Word, nfa: Nfa) -> list[SparseStateSet]:
    """State sets reachable from the initial set after each prefix of ``word``.

    Entry ``i`` holds the states reached after reading ``word[:i]``; entry 0
    is (a copy of) the initial set. The word need not be accepted; trailing
    entries may be empty.
    """
    stack = [nfa.initial.copy()]
    cur = stack[0]
    for a in word:
        nxt = SparseStateSet(nfa.state_count)
        delta_step(nfa, cur, a, nxt)
        stack.append(nxt)
        cur = nxt
    return stack


def next_word(
    word: Word,
    length: int,
    nfa: Nfa,
    stack: list[SparseStateSet],
    tables: MinWordTables,
    scratch: SparseStateSet,
) -> Optional[Word]:
    """Immediate lexicographic successor of ``word`` in the cross-section.

    ``stack`` must be ``build_run_stack(word, nfa)`` and ``scratch`` must be
    empty; it is left empty. Returns None when ``word`` is the maximum.

    Positions are retried from the last to the first. At position ``i`` the
    replacement symbols are the symbols greater than ``word[i]`` that label a
    transition out of ``stack[i]``, merged from the (sorted) adjacency lists
    so symbols without transitions cost nothing; each is tried in increasing
    order with the least completing suffix of length ``length - i - 1``.
    """
    adjacency = nfa.adjacency
    adj_symbols = nfa._adj_symbols
    counting = _ops.enabled
    for i in range(length - 1, -1, -1):
        cur = stack[i]
        wi = word[i]
        candidates = []
        for q in cur.elements:
            row = adjacency[q]
            start = bisect_right(adj_symbols[q], wi)
            if start < len(row):
                candidates.extend(row[start:])
        if not candidates:
            continue
        if counting:
            _ops.ops += len(candidates)
        candidates.sort(key=_symbol_of)
        j = 0
        total = len(candidates)
        while j < total:
            a = candidates[j][0]
            inserted = 0
            while j < total and candidates[j][0] == a:
                targets = candidates[j][1]
                inserted += len(targets)
                for t in targets:
                    scratch.insert(t)
                j += 1
            if counting:
                _ops.ops += inserted
            suffix = min_word(length - i - 1, scratch, tables)
            scratch.clear()
            if suffix is not None:
                return word[:i] + (a,) + suffix
    return None


class CrossSectionCursor:
    """Pull-based enumerator of one cross-section, least word first.

    Every call to :meth:`next` returns the next accepted word of length
    ``length`` or :data:`EXHAUSTED` (sticky once returned). The first call
    costs one least-word lookup; each later call recomputes the run of the
    previous output and searches for its successor, so per-output work is
    O(length * #transitions) regardless of history.

    The automaton and tables are shared and never written; any number of
    cursors may run over them concurrently. A single cursor is not
    thread-safe but may be moved between threads between calls.
    """

    __slots__ = ("nfa", "length", "tables", "_last", "_exhausted", "_scratch")

    def __init__(self, nfa: Nfa, length: int, tables: Optional[MinWordTables] = None):
        if length < 0:
            raise ValueError(f"length must be non-negative, got {length}")
        if tables is None:
            tables = precompute(nfa, length)
        elif tables.length < length:
            raise ValueError(
                f"tables cover lengths up to {tables.length}, need {length}"
            )
        self.nfa = nfa
        self.length = length
        self.tables = tables
        self._last: Optional[Word] = None
        self._exhausted = False
        self._scratch = SparseStateSet(nfa.state_count)

    @property
    def current(self) -> Optional[Word]:
        """The last word produced, or None before the first call."""
        return self._last

    def next(self) -> Union[Word, _ExhaustedType]:
        if self._exhausted:
            return EXHAUSTED
        if self._last is None:
            word = min_word(self.length, self.nfa.initial, self.tables)
        else:
            stack = build_run_stack(self._last, self.nfa)
            word = next_word(
                self._last, self.length, self.nfa, stack, self.tables, self._scratch
            )
        if word is None:
            self._exhausted = True
            return EXHAUSTED
        self._last = word
        return word

    def seek(self, word) -> None:
        """Position the cursor as if ``word`` had just been produced.

        ``word`` must have the cursor's length and valid symbol ids; it is
        assumed to belong to the cross-section (the very property enumeration
        outputs satisfy), so the following :meth:`next` yields its successor.
        """
        word = tuple(word)
        if len(word) != self.length:
            raise ValueError(f"expected a word of length {self.length}, got {len(word)}")
        sigma = len(self.nfa.alphabet)
        for a in word:
            if not 0 <= a < sigma:
                raise ValueError(f"symbol id {a!r} out of range")
        self._last = word
        self._exhausted = False

    def __iter__(self) -> Iterator[Word]:
        while True:
            word = self.next()
            if word is EXHAUSTED:
                return
            yield word


def cross_section(nfa: Nfa, length: int, tables: Optional[MinWordTables] = None) -> Iterator[Word]:
    """Yield the accepted words of exactly ``length``, lexicographically."""
    return iter(CrossSectionCursor(nfa, length, tables))


def radix_words(
    nfa: Nfa,
    max_length: Optional[int] = None,
    limit: Optional[int] = None,
) -> Iterator[Word]:
    """Yield the language in radix order: shorter first, ties lexicographic.

    Chains one cross-section cursor per length, preprocessing each length
    independently. With no ``max_length`` the generator scans lengths
    unboundedly: on an infinite language it never stops by itself, and on a
    finite one it keeps probing ever longer (empty) cross-sections after the
    last word. Supply a bound; exhaustion is not detected.
    """
    if limit is not None and limit <= 0:
        return
    produced = 0
    length = 0
    while max_length is None or length <= max_length:
        for word in CrossSectionCursor(nfa, length):
            yield word
            produced += 1
            if limit is not None and produced >= limit:
                return
        length += 1
