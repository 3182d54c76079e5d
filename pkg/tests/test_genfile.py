from pathlib import Path

import pytest

from condec import (
    Alphabet,
    ParseError,
    build_tilde,
    export_dot,
    make_generator,
    parse_gen,
    prefix_tree,
    serialize_gen,
    word,
)
from condec.sampling import random_generator

from conftest import same_language_bounded

DATA = Path(__file__).parent / "data"

REFERENCE_TEXT = """\
# prefix tree marking three words
generator L51
alphabet a b c d
states q0 q1 q2 q3 q4 q5 q6 q7 q8
initial q0
marked q2 q5 q8
trans q0 b q1
trans q1 a q2
trans q0 c q3
trans q3 d q4
trans q4 b q5
trans q0 d q6
trans q6 c q7
trans q7 b q8
"""


def test_parse_reference_fixture():
    g = parse_gen(REFERENCE_TEXT)
    assert g.n_states == 9
    assert g.accepts(word("c d b"))
    assert not g.accepts(word("c d"))


def test_empty_transitions_with_marked_initial_is_epsilon():
    g = parse_gen("generator E\nalphabet a\nstates q0\ninitial q0\nmarked q0\n")
    assert g.accepts(())
    assert not g.generates(word("a"))


def test_round_trip_is_identity_on_canonical_form():
    g = parse_gen(REFERENCE_TEXT)
    text = serialize_gen(g)
    again = parse_gen(text)
    assert again == g
    assert serialize_gen(again) == text


def test_round_trip_random_generators(rng):
    for _ in range(20):
        g = random_generator(rng, 5, "a b c", density=0.5, marked_prob=0.5)
        again = parse_gen(serialize_gen(g))
        assert again.delta == g.delta
        assert again.marked == g.marked
        assert same_language_bounded(again, g, 6)


def test_duplicate_transition_is_an_error_with_line():
    text = REFERENCE_TEXT + "trans q0 b q3\n"
    with pytest.raises(ParseError, match=r"line 15.*duplicate transition"):
        parse_gen(text)


def test_undeclared_state_is_an_error():
    with pytest.raises(ParseError, match="undeclared"):
        parse_gen("generator X\nalphabet a\nstates q0\ninitial q1\nmarked\n")


def test_event_outside_alphabet_is_an_error():
    with pytest.raises(ParseError, match="not in the alphabet"):
        parse_gen(
            "generator X\nalphabet a\nstates q0\ninitial q0\nmarked\ntrans q0 z q0\n"
        )


def test_sections_must_appear_in_order():
    with pytest.raises(ParseError, match="expected 'alphabet'"):
        parse_gen("generator X\nstates q0\ninitial q0\nmarked\n")


def test_tilde_events_rejected_in_user_input():
    text = "generator X\nalphabet a ~b\nstates q0\ninitial q0\nmarked\n"
    with pytest.raises(ParseError, match="tilde"):
        parse_gen(text)
    assert parse_gen(text, allow_tilde=True).alphabet == Alphabet.of("a ~b")


def test_tilde_round_trip_for_tool_output():
    g = prefix_tree(["c a c b"], "a b c d")
    ts = build_tilde(g, Alphabet.of("a b d"), Alphabet.of("a c d"), Alphabet.of("a d"))
    text = serialize_gen(ts.g_tilde)
    assert b"~b" in text and b"~c" in text
    again = parse_gen(text, allow_tilde=True)
    assert again.delta == ts.g_tilde.delta


def test_dot_export_matches_golden_file():
    g = prefix_tree(["a"], "a b").with_name("TWO")
    golden = (DATA / "two_state.dot").read_bytes()
    assert export_dot(g) == golden


def test_dot_marks_initial_and_marked_states():
    g = make_generator("a", ["s0", "s1"], "s0", ["s1"], [("s0", "a", "s1")])
    dot = export_dot(g).decode()
    assert '__init__ -> "s0"' in dot
    assert '"s1" [shape=doublecircle]' in dot
    assert '"s0" [shape=circle]' in dot
