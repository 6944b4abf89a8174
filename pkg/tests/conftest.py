import itertools

import pytest

from sdikit import Alphabet, Nfa

AB = Alphabet.from_string("ab")
ABC = Alphabet.from_string("abc")
MARKED = Alphabet.from_string("ab$%")


def lenlex(words):
    return sorted(words, key=lambda w: (len(w), w))


def all_words(alphabet_str, max_len, min_len=0):
    out = [""] if min_len == 0 else []
    for ln in range(max(1, min_len), max_len + 1):
        out.extend("".join(t) for t in itertools.product(alphabet_str, repeat=ln))
    return out


def ba_blocks(k, tail, alphabet=MARKED):
    """NFA for (b a+)^k followed by the fixed tail word."""
    trans = set()
    state = 0
    for _ in range(k):
        trans.add((state, "b", state + 1))
        trans.add((state + 1, "a", state + 2))
        trans.add((state + 2, "a", state + 2))
        state += 2
    for sym in tail:
        trans.add((state, sym, state + 1))
        state += 1
    return Nfa(alphabet, state + 1, 0, frozenset({state}), frozenset(trans))


@pytest.fixture
def ab_alphabet():
    return AB
