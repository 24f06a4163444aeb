"""Precomputed guidance tables for minimal-word reconstruction.

For every length ``k <= length`` and state ``q`` the tables answer two
questions in O(1):

* ``first_step[k][q]`` is the first transition of the least length-k word
  accepted starting from ``q``: a ``(symbol_id, next_state)`` pair, or
  :data:`EMPTY_WORD` when ``k == 0`` and ``q`` is final, or ``None`` when no
  length-k word is accepted from ``q``.
* ``leq[k][q * n + q']`` is 1 iff a length-k word is accepted from ``q`` and
  (none is accepted from ``q'``, or the least one from ``q`` is
  lexicographically <= the least one from ``q'``). This relation is a
  preorder: neither total nor antisymmetric.

Both tables are dense, fully initialised arrays, so building them costs
O(length * |Q|^2) for ``leq`` plus O(length * #transitions) for
``first_step``; every later access is O(1).
"""

from __future__ import annotations

from typing import Optional, Union

from .automaton import Nfa, Word
from .instrument import ops as _ops

# Level-0 entry of final states: the empty word is accepted. Distinct from
# None, which means "no word of this length".
EMPTY_WORD: Word = ()

Entry = Union[None, tuple[int, int], Word]


class MinWordTables:
    """Read-only tables driving the enumeration phase.

    ``fill_ops`` records how many adjacency pairs were inspected and target
    comparisons made while filling ``first_step``; it is bounded by
    4 * length * #transitions and exists so tests can check that bound.
    """

    __slots__ = ("length", "state_count", "first_step", "leq", "fill_ops")

    def __init__(
        self,
        length: int,
        state_count: int,
        first_step: list[list[Entry]],
        leq: list[bytearray],
        fill_ops: int,
    ):
        self.length = length
        self.state_count = state_count
        self.first_step = first_step
        self.leq = leq
        self.fill_ops = fill_ops

    def min_word_from(self, k: int, q: int) -> Optional[Word]:
        """Spell the least length-k word accepted from ``q``, or None."""
        if self.first_step[k][q] is None:
            return None
        out = []
        for level in range(k, 0, -1):
            a, q = self.first_step[level][q]
            out.append(a)
        return tuple(out)

    def __repr__(self) -> str:
        return f"MinWordTables(length={self.length}, states={self.state_count})"


def precompute(nfa: Nfa, length: int) -> MinWordTables:
    """Build the tables for all word lengths ``0 .. length``.

    Level 0 marks final states as accepting the empty word. Level k derives
    each state's entry from level k-1: its adjacency list is scanned in
    increasing symbol order, within each target tuple the state spelling the
    least length-(k-1) word is selected, and the first symbol whose selected
    target accepts some length-(k-1) word wins. The ``leq`` level is then
    filled by comparing first steps, falling back to level k-1 on ties.
    """
    if length < 0:
        raise ValueError(f"length must be non-negative, got {length}")
    n = nfa.state_count
    counting = _ops.enabled

    first_step: list[list[Entry]] = [[None] * n for _ in range(length + 1)]
    leq = [bytearray(n * n) for _ in range(length + 1)]
    if counting:
        _ops.ops += (length + 1) * (n + n * n)

    step0 = first_step[0]
    leq0 = leq[0]
    for q in nfa.final_states:
        step0[q] = EMPTY_WORD
        base = q * n
        for other in range(n):
            leq0[base + other] = 1
    if counting:
        _ops.ops += len(nfa.final_states) * (n + 1)

    adjacency = nfa.adjacency
    fill_ops = 0
    for k in range(1, length + 1):
        prev_step = first_step[k - 1]
        cur_step = first_step[k]
        prev_leq = leq[k - 1]
        cur_leq = leq[k]

        visited = 0
        for q in range(n):
            for a, targets in adjacency[q]:
                # Least target under the level-(k-1) word order; ties keep
                # the latest candidate, which spells the same word.
                q_min = targets[0]
                for cand in targets:
                    if prev_leq[cand * n + q_min]:
                        q_min = cand
                visited += 2 + 2 * len(targets)
                if prev_step[q_min] is not None:
                    cur_step[q] = (a, q_min)
                    break
        fill_ops += visited

        live = 0
        for q in range(n):
            t = cur_step[q]
            if t is None:
                continue
            live += 1
            a, p = t
            base = q * n
            pbase = p * n
            for other in range(n):
                tp = cur_step[other]
                if tp is None:
                    cur_leq[base + other] = 1
                else:
                    ap = tp[0]
                    if a < ap or (a == ap and prev_leq[pbase + tp[1]]):
                        cur_leq[base + other] = 1
        if counting:
            _ops.ops += visited + n + 3 * live * n

    return MinWordTables(length, n, first_step, leq, fill_ops)
