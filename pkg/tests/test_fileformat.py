import random

import pytest

from lexenum import ParseError, parse_automaton
from helpers import corpus_automaton, serialize_automaton

A1_TEXT = """\
# comment lines allowed anywhere
alphabet a b          # symbol order = lexicographic order
states 2
initial 0             # zero or more states, space-separated
final 1
0 a 0                 # transition lines: from symbol to
0 b 1
1 a 1
"""


def test_parses_reference_file(a1):
    assert parse_automaton(A1_TEXT) == a1


def test_blank_lines_and_full_line_comments_ignored(a1):
    text = "\n# leading\n\n" + A1_TEXT + "\n# trailing\n\n"
    assert parse_automaton(text) == a1


def test_states_zero_gives_empty_language_automaton():
    nfa = parse_automaton("alphabet a b\nstates 0\n")
    assert nfa.state_count == 0
    assert len(nfa.initial) == 0
    assert nfa.final_states == ()


def test_unknown_symbol_names_line_and_symbol():
    text = "alphabet a b\nstates 2\ninitial 0\nfinal 1\n0 c 1\n"
    with pytest.raises(ParseError, match=r"line 5.*'c'"):
        parse_automaton(text)


def test_unknown_directive_names_line():
    with pytest.raises(ParseError, match="line 2.*unknown directive"):
        parse_automaton("alphabet a\nbogus 1 2\nstates 1\n")


def test_state_out_of_range_names_line():
    text = "alphabet a\nstates 2\ninitial 0\nfinal 1\n0 a 5\n"
    with pytest.raises(ParseError, match="line 5.*out of range"):
        parse_automaton(text)


def test_initial_out_of_range_names_line():
    with pytest.raises(ParseError, match="line 3.*out of range"):
        parse_automaton("alphabet a\nstates 1\ninitial 4\n")


@pytest.mark.parametrize(
    "text,pattern",
    [
        ("states 1\n", "missing 'alphabet'"),
        ("alphabet a\n", "missing 'states'"),
        ("alphabet a\nstates 1\nalphabet b\n", "line 3.*duplicate 'alphabet'"),
        ("alphabet a\nstates 1\nstates 2\n", "line 3.*duplicate 'states'"),
        ("alphabet a\nstates\n", "line 2.*exactly one"),
        ("alphabet a\nstates 1\n0 a\n", "line 3.*from symbol to"),
        ("alphabet a\nstates 1\n0 a 0 0\n", "line 3.*from symbol to"),
        ("alphabet a\nstates 1\ninitial x\n", "line 3.*state number"),
        ("alphabet ab\nstates 1\n", "line 1.*single character"),
        ("alphabet a a\nstates 1\n", "line 1.*duplicate symbol"),
    ],
)
def test_malformed_inputs(text, pattern):
    with pytest.raises(ParseError, match=pattern):
        parse_automaton(text)


def test_directive_order_is_free(a1):
    text = "0 a 0\nfinal 1\n0 b 1\nstates 2\n1 a 1\ninitial 0\nalphabet a b\n"
    assert parse_automaton(text) == a1


def test_initial_final_lines_accumulate():
    text = "alphabet a\nstates 3\ninitial 0\ninitial 2\nfinal 1\nfinal 1 2\n"
    nfa = parse_automaton(text)
    assert set(nfa.initial) == {0, 2}
    assert set(nfa.final_states) == {1, 2}


def test_round_trip_on_reference(a1):
    assert parse_automaton(serialize_automaton(a1)) == a1


def test_round_trip_on_random_corpus():
    rng = random.Random(89)
    for _ in range(60):
        nfa = corpus_automaton(rng)
        assert parse_automaton(serialize_automaton(nfa)) == nfa
