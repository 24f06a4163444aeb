import random

from lexenum import cross_section, measure_delays, precompute
from lexenum.instrument import counting, ops
from helpers import corpus_automaton, make_a1, tables_snapshot


def test_counting_context_restores_state():
    ops.enabled = False
    ops.ops = 0
    with counting() as counter:
        assert counter.enabled
        counter.ops += 5
    assert not ops.enabled
    assert ops.ops == 0


def test_take_reads_and_resets():
    with counting() as counter:
        counter.ops += 3
        assert counter.take() == 3
        assert counter.ops == 0


def test_enumeration_is_identical_with_counters_on_and_off():
    rng = random.Random(97)
    for _ in range(20):
        nfa = corpus_automaton(rng)
        plain_tables = precompute(nfa, 4)
        plain = [list(cross_section(nfa, k, plain_tables)) for k in range(5)]
        with counting():
            counted_tables = precompute(nfa, 4)
            counted = [list(cross_section(nfa, k, counted_tables)) for k in range(5)]
        assert counted == plain
        assert tables_snapshot(counted_tables) == tables_snapshot(plain_tables)


def test_disabled_counter_stays_at_zero():
    ops.enabled = False
    ops.reset()
    nfa = make_a1()
    list(cross_section(nfa, 4))
    assert ops.ops == 0


def test_counter_accumulates_when_enabled():
    nfa = make_a1()
    with counting() as counter:
        precompute(nfa, 3)
        assert counter.ops > 0


def test_measure_delays_reports_all_outputs():
    nfa = make_a1()
    report = measure_delays(nfa, 2)
    assert [r.index for r in report.records] == [0, 1]
    assert all(r.word_len == 2 for r in report.records)
    assert report.exhausted
    assert report.final_gap_ops is not None
    assert report.transition_count == 3
    # measuring must leave the global counter as it found it
    assert not ops.enabled


def test_measure_delays_limit_cuts_short():
    nfa = make_a1()
    report = measure_delays(nfa, 2, limit=1)
    assert len(report.records) == 1
    assert not report.exhausted


def test_csv_lines_shape():
    nfa = make_a1()
    lines = list(measure_delays(nfa, 2).csv_lines())
    assert lines[0].startswith("# l=2, Q=2, sigma=2, delta=3, preproc_ops=")
    assert lines[1] == "index,word_len,op_count,wall_nanos"
    assert len([l for l in lines if not l.startswith("#")]) == 3
