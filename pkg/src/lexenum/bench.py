"""Delay measurement harness and random instance generation.

:func:`measure_delays` runs one cross-section enumeration with the global
operation counter enabled and records, per output word, the operations and
wall time spent since the previous output. The preprocessing tally covers
automaton layout construction (when a factory is passed) plus table building.
"""

from __future__ import annotations

import random
import string
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Union

from .automaton import Nfa, build_nfa
from .enumeration import EXHAUSTED, CrossSectionCursor
from .instrument import ops
from .tables import precompute

_GLYPH_POOL = string.ascii_lowercase + string.ascii_uppercase + string.digits


@dataclass(frozen=True, slots=True)
class DelayRecord:
    index: int
    word: tuple
    op_count: int
    wall_nanos: int

    @property
    def word_len(self) -> int:
        return len(self.word)


@dataclass(frozen=True)
class DelayReport:
    """Per-run measurement: instance sizes, preprocessing cost, per-output cost.

    ``final_gap_ops``/``final_gap_nanos`` cover the work after the last output
    that established exhaustion; they are None when a limit cut the run short.
    """

    length: int
    state_count: int
    symbol_count: int
    transition_count: int
    preproc_ops: int
    preproc_nanos: int
    records: list[DelayRecord] = field(default_factory=list)
    final_gap_ops: Optional[int] = None
    final_gap_nanos: Optional[int] = None

    @property
    def exhausted(self) -> bool:
        return self.final_gap_ops is not None

    def csv_lines(self) -> Iterator[str]:
        """The report in CSV form: a comment header, a column row, data rows.

        Words themselves are suppressed (only their length is reported) to
        keep the output small.
        """
        yield (
            f"# l={self.length}, Q={self.state_count}, "
            f"sigma={self.symbol_count}, delta={self.transition_count}, "
            f"preproc_ops={self.preproc_ops}, preproc_nanos={self.preproc_nanos}"
        )
        yield "index,word_len,op_count,wall_nanos"
        for r in self.records:
            yield f"{r.index},{len(r.word)},{r.op_count},{r.wall_nanos}"
        if self.final_gap_ops is not None:
            yield f"# final_gap_ops={self.final_gap_ops}, final_gap_nanos={self.final_gap_nanos}"


def measure_delays(
    source: Union[Nfa, Callable[[], Nfa]],
    length: int,
    limit: Optional[int] = None,
) -> DelayReport:
    """Enumerate one cross-section with counting on and report the delays.

    ``source`` is an automaton or a zero-argument factory; pass a factory to
    include the automaton layout construction in the preprocessing tally.
    ``limit`` bounds the number of outputs measured.
    """
    prev_enabled, prev_ops = ops.enabled, ops.ops
    ops.enabled = True
    ops.reset()
    try:
        t0 = time.perf_counter_ns()
        nfa = source() if callable(source) else source
        tables = precompute(nfa, length)
        preproc_nanos = time.perf_counter_ns() - t0
        preproc_ops = ops.take()

        cursor = CrossSectionCursor(nfa, length, tables=tables)
        records: list[DelayRecord] = []
        final_gap_ops = final_gap_nanos = None
        index = 0
        t_prev = time.perf_counter_ns()
        while limit is None or index < limit:
            word = cursor.next()
            now = time.perf_counter_ns()
            gap_ops = ops.take()
            if word is EXHAUSTED:
                final_gap_ops = gap_ops
                final_gap_nanos = now - t_prev
                break
            records.append(DelayRecord(index, word, gap_ops, now - t_prev))
            t_prev = now
            index += 1
        return DelayReport(
            length=length,
            state_count=nfa.state_count,
            symbol_count=nfa.symbol_count,
            transition_count=nfa.transition_count,
            preproc_ops=preproc_ops,
            preproc_nanos=preproc_nanos,
            records=records,
            final_gap_ops=final_gap_ops,
            final_gap_nanos=final_gap_nanos,
        )
    finally:
        ops.enabled = prev_enabled
        ops.ops = prev_ops


def random_automaton(
    rng: random.Random,
    state_count: int,
    symbol_count: int,
    transition_count: int,
    initial_count: Optional[int] = None,
    final_count: Optional[int] = None,
) -> Nfa:
    """Sample an automaton with the given sizes, uniformly without repetition.

    ``transition_count`` is clamped to the ``state_count^2 * symbol_count``
    possible distinct triples. ``initial_count``/``final_count`` default to a
    uniform size in ``0..state_count`` (so either set may come out empty).
    """
    if state_count < 1:
        raise ValueError("need at least one state")
    if not 1 <= symbol_count <= len(_GLYPH_POOL):
        raise ValueError(f"symbol count must be in 1..{len(_GLYPH_POOL)}")
    max_triples = state_count * state_count * symbol_count
    transition_count = min(transition_count, max_triples)
    span = symbol_count * state_count
    transitions = []
    for code in rng.sample(range(max_triples), transition_count):
        src, rest = divmod(code, span)
        a, dst = divmod(rest, state_count)
        transitions.append((src, a, dst))
    if initial_count is None:
        initial_count = rng.randint(0, state_count)
    if final_count is None:
        final_count = rng.randint(0, state_count)
    initial = rng.sample(range(state_count), initial_count)
    final = rng.sample(range(state_count), final_count)
    return build_nfa(_GLYPH_POOL[:symbol_count], state_count, initial, final, transitions)
