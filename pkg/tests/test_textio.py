import random

import pytest

from sdikit import Nfa, equivalent
from sdikit.complexity import random_nfa
from sdikit.textio import (
    FormatError,
    parse_automaton,
    parse_dfa,
    parse_words,
    serialize_automaton,
    serialize_words,
)

from conftest import AB

SAMPLE = """\
# three-state sample
alphabet: a b
states: 3
initial: 0
final: 2
0 a -> 0
0 b -> 1
1 a -> 2
"""


def test_parse_sample():
    a = parse_automaton(SAMPLE)
    assert a.state_count == 3
    assert a.initial == 0
    assert a.finals == {2}
    assert a.accepts("ba") and a.accepts("aba")
    assert not a.accepts("ab")


def test_round_trip_is_identity_on_canonical_text():
    text = serialize_automaton(parse_automaton(SAMPLE))
    assert serialize_automaton(parse_automaton(text)) == text


def test_round_trip_preserves_language():
    rng = random.Random(31)
    for _ in range(20):
        a = random_nfa(rng, rng.randint(1, 4), AB)
        b = parse_automaton(serialize_automaton(a))
        assert equivalent(a, b)


def test_serialization_is_deterministic():
    rng = random.Random(37)
    a = random_nfa(rng, 4, AB)
    assert serialize_automaton(a) == serialize_automaton(a)
    # same language built with shuffled state ids serializes identically
    perm = {0: 2, 1: 0, 2: 3, 3: 1}
    b = Nfa(
        a.alphabet,
        a.state_count,
        perm[a.initial],
        frozenset(perm[q] for q in a.finals),
        frozenset((perm[s], sym, perm[t]) for s, sym, t in a.transitions),
    )
    assert serialize_automaton(a) == serialize_automaton(b)


def test_empty_finals_round_trip():
    empty = Nfa.empty_language(AB)
    text = serialize_automaton(empty)
    assert "final:" in text
    assert parse_automaton(text).finals == frozenset()


@pytest.mark.parametrize(
    "bad",
    [
        "alphabet: a b\nstates: 1\ninitial: 0\n",  # missing final header
        "alphabet: a b\nstates: 1\ninitial: 0\nfinal: 0\n0 c -> 0",  # bad symbol
        "alphabet: a b\nstates: 1\ninitial: 0\nfinal: 0\n0 a 0",  # missing arrow
        "alphabet: a b\nstates: 1\ninitial: 3\nfinal: 0\n",  # initial out of range
        "alphabet: a b\nstates: 1\ninitial: 0\nfinal: 9\n",  # final out of range
        "alphabet: a b\nalphabet: a\nstates: 1\ninitial: 0\nfinal: 0\n",  # dup header
        "alphabet: a >\nstates: 1\ninitial: 0\nfinal: 0\n",  # reserved symbol
    ],
)
def test_parse_errors(bad):
    with pytest.raises(FormatError):
        parse_automaton(bad)


def test_parse_dfa_flags_nondeterminism():
    nondet = "alphabet: a\nstates: 2\ninitial: 0\nfinal: 1\n0 a -> 0\n0 a -> 1"
    parse_automaton(nondet)
    with pytest.raises(FormatError):
        parse_dfa(nondet)


def test_word_lists():
    text = "# hosts\nab\n-\n\nba\n"
    assert parse_words(text) == ["ab", "", "ba"]
    assert serialize_words(["ba", "", "ab"]) == "-\nab\nba\n"
