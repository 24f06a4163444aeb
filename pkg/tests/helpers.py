"""Shared test utilities: reference automata, corpus sampling, serialization."""

from __future__ import annotations

import random

from lexenum import Nfa, build_nfa, random_automaton


def make_a1() -> Nfa:
    """Two-state automaton accepting a*ba*, the worked example used throughout."""
    return build_nfa(
        ["a", "b"],
        2,
        initial=[0],
        final=[1],
        transitions=[(0, "a", 0), (0, "b", 1), (1, "a", 1)],
    )


def corpus_automaton(rng: random.Random) -> Nfa:
    """One small random instance: |Q| in 1..6, |Sigma| in 1..3, any density,
    initial/final sets possibly empty."""
    n = rng.randint(1, 6)
    s = rng.randint(1, 3)
    t = rng.randint(0, round(1.5 * n * s))
    return random_automaton(rng, n, s, t)


def nested_scaling_family(seed: int, deltas, state_count: int = 20, symbol_count: int = 4):
    """Automata sharing states/initial/final whose transition sets grow by
    prefix, so measurements across |delta| compare like with like."""
    rng = random.Random(seed)
    span = symbol_count * state_count
    codes = rng.sample(range(state_count * state_count * symbol_count), max(deltas))
    triples = []
    for code in codes:
        src, rest = divmod(code, span)
        a, dst = divmod(rest, state_count)
        triples.append((src, a, dst))
    initial = rng.sample(range(state_count), 5)
    final = rng.sample(range(state_count), 5)
    glyphs = "abcdefghijklmnopqrstuvwxyz"[:symbol_count]
    return {
        d: build_nfa(glyphs, state_count, initial, final, triples[:d]) for d in deltas
    }


def rebuild_factory(nfa: Nfa):
    """Zero-argument builder recreating ``nfa`` from raw pieces, so layout
    construction happens inside a measured region."""
    glyphs = [s.glyph for s in nfa.alphabet]
    triples = [
        (q, a, t)
        for q in range(nfa.state_count)
        for a, targets in nfa.adjacency[q]
        for t in targets
    ]
    initial = list(nfa.initial)
    final = list(nfa.final_states)
    return lambda: build_nfa(glyphs, nfa.state_count, initial, final, triples)


def tables_snapshot(tables):
    """Deep, comparable copy of the table contents."""
    return (
        tuple(tuple(row) for row in tables.first_step),
        tuple(bytes(level) for level in tables.leq),
    )


def serialize_automaton(nfa: Nfa) -> str:
    """Inverse of parse_automaton for round-trip testing."""
    lines = [
        "alphabet " + " ".join(s.glyph for s in nfa.alphabet),
        f"states {nfa.state_count}",
        "initial " + " ".join(str(q) for q in nfa.initial.elements),
        "final " + " ".join(str(q) for q in nfa.final_states),
    ]
    glyphs = [s.glyph for s in nfa.alphabet]
    for q in range(nfa.state_count):
        for a, targets in nfa.adjacency[q]:
            for t in targets:
                lines.append(f"{q} {glyphs[a]} {t}")
    return "\n".join(lines) + "\n"
