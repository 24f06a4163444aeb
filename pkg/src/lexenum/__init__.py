"""Enumerate regular-language words in lexicographic or radix order.

The enumerator takes a nondeterministic finite automaton (built directly,
parsed from a small text format, or compiled from a regex) and streams the
accepted words of a given length in strictly increasing lexicographic order.
After a preprocessing pass whose cost is O(|alphabet|*|Q| + l*|Q|^2 +
l*#transitions), consecutive words are produced with O(l*#transitions) work
between outputs, independent of how many words have been emitted, and with
flat memory: each word is derived from the previous one plus the read-only
tables. Radix (shortlex) order over a whole language comes from chaining one
cross-section per length.
"""

from .automaton import (
    AutomatonError,
    Nfa,
    SparseStateSet,
    Symbol,
    Word,
    build_nfa,
    delta_step,
)
from .bench import DelayRecord, DelayReport, measure_delays, random_automaton
from .enumeration import (
    EXHAUSTED,
    CrossSectionCursor,
    build_run_stack,
    cross_section,
    min_word,
    next_word,
    radix_words,
)
from .fileformat import ParseError, parse_automaton
from .oracle import (
    OracleCapExceeded,
    OracleConfig,
    cross_section_bruteforce,
    member,
    min_word_oracle,
    min_words_by_state,
)
from .regex import RegexSyntaxError, compile_regex
from .tables import EMPTY_WORD, MinWordTables, precompute

__version__ = "0.1.0"

__all__ = [
    "AutomatonError",
    "CrossSectionCursor",
    "DelayRecord",
    "DelayReport",
    "EMPTY_WORD",
    "EXHAUSTED",
    "MinWordTables",
    "Nfa",
    "OracleCapExceeded",
    "OracleConfig",
    "ParseError",
    "RegexSyntaxError",
    "SparseStateSet",
    "Symbol",
    "Word",
    "build_nfa",
    "build_run_stack",
    "compile_regex",
    "cross_section",
    "cross_section_bruteforce",
    "delta_step",
    "measure_delays",
    "member",
    "min_word",
    "min_word_oracle",
    "min_words_by_state",
    "next_word",
    "parse_automaton",
    "precompute",
    "radix_words",
    "random_automaton",
]
