import random

import pytest

from sdikit import (
    Alphabet,
    InputError,
    Nfa,
    ResourceLimitError,
    complement,
    determinize,
    enumerate_language,
    equivalent,
    is_empty,
    is_finite_language,
    is_subset,
    membership,
    product_intersection,
    shortest_word,
    trim,
    union,
)
from sdikit.complexity import random_nfa

from conftest import AB, ABC, all_words, ba_blocks, lenlex


def astar_b():
    # a* b
    return Nfa(AB, 2, 0, frozenset({1}), frozenset({(0, "a", 0), (0, "b", 1)}))


def test_alphabet_validation():
    with pytest.raises(InputError):
        Alphabet(())
    with pytest.raises(InputError):
        Alphabet(("a", "a"))
    with pytest.raises(InputError):
        Alphabet(("#",))
    with pytest.raises(InputError):
        Alphabet((" ",))
    assert tuple(Alphabet.from_string("ba")) == ("a", "b")


def test_nfa_validation():
    with pytest.raises(InputError):
        Nfa(AB, 1, 1, frozenset(), frozenset())
    with pytest.raises(InputError):
        Nfa(AB, 1, 0, frozenset({3}), frozenset())
    with pytest.raises(InputError):
        Nfa(AB, 1, 0, frozenset(), frozenset({(0, "c", 0)}))


def test_membership_basic():
    a = astar_b()
    assert membership(a, "aab")
    assert not membership(a, "")
    with pytest.raises(InputError):
        membership(a, "ax")


def test_membership_section_pattern():
    pattern = ba_blocks(2, "$")
    assert membership(pattern, "baba$")
    assert enumerate_language(pattern, 5) == ["baba$"]


def test_determinize_examples():
    astar = Nfa(Alphabet.from_string("a"), 1, 0, frozenset({0}), frozenset({(0, "a", 0)}))
    d = determinize(astar)
    assert d.state_count == 1 and membership(d, "aaa") and membership(d, "")

    sigma_star_a = Nfa(AB, 2, 0, frozenset({1}),
                       frozenset({(0, "a", 0), (0, "b", 0), (0, "a", 1)}))
    d = determinize(sigma_star_a)
    assert d.state_count == 2
    assert equivalent(d, sigma_star_a)

    empty = Nfa.empty_language(AB)
    d = determinize(empty)
    assert d.state_count == 1 and not d.finals


def test_determinize_cap():
    rng = random.Random(3)
    a = random_nfa(rng, 6, AB, density=0.6)
    with pytest.raises(ResourceLimitError):
        determinize(a, cap=1)


def test_complement_examples():
    assert equivalent(complement(determinize(Nfa.empty_language(AB))), Nfa.universal(AB))
    assert is_empty(complement(determinize(Nfa.universal(AB))))
    comp_a = complement(determinize(Nfa.from_word("a", AB)))
    got = enumerate_language(comp_a, 3)
    expected = [w for w in lenlex(all_words("ab", 3)) if w != "a"]
    assert got == expected


def test_product_intersection_examples():
    astar = Nfa(AB, 1, 0, frozenset({0}), frozenset({(0, "a", 0)}))
    just_a = Nfa.from_word("a", AB)
    assert enumerate_language(product_intersection(astar, just_a), 4) == ["a"]

    rng = random.Random(7)
    for _ in range(5):
        a = random_nfa(rng, 3, AB)
        assert is_empty(product_intersection(a, complement(determinize(a))))

    ab_star = Nfa(AB, 2, 0, frozenset({0}), frozenset({(0, "a", 1), (1, "b", 0)}))
    ends_b = Nfa(AB, 2, 0, frozenset({1}),
                 frozenset({(0, "a", 0), (0, "b", 0), (0, "b", 1)}))
    got = enumerate_language(product_intersection(ab_star, ends_b), 6)
    assert got == ["ab", "abab", "ababab"]


def test_union_examples():
    just_a, just_b = Nfa.from_word("a", AB), Nfa.from_word("b", AB)
    assert enumerate_language(union(Nfa.empty_language(AB), just_a), 3) == ["a"]
    assert enumerate_language(union(just_a, just_b), 2) == ["a", "b"]
    ba_plus = Nfa(AB, 3, 0, frozenset({2}),
                  frozenset({(0, "b", 1), (1, "a", 2), (2, "a", 2)}))
    ab_plus = Nfa(AB, 3, 0, frozenset({2}),
                  frozenset({(0, "a", 1), (1, "b", 2), (2, "b", 2)}))
    got = enumerate_language(union(ba_plus, ab_plus), 4)
    assert got == ["ab", "ba", "abb", "baa", "abbb", "baaa"]


def test_union_alphabet_mismatch():
    with pytest.raises(InputError):
        union(Nfa.from_word("a", AB), Nfa.from_word("a", ABC))


def test_is_empty():
    assert is_empty(Nfa(AB, 2, 0, frozenset(), frozenset({(0, "a", 1)})))
    assert not is_empty(Nfa(AB, 1, 0, frozenset({0}), frozenset()))
    unreachable_final = Nfa(AB, 2, 0, frozenset({1}), frozenset({(1, "a", 1)}))
    assert is_empty(unreachable_final)


def test_is_subset_examples():
    astar = Nfa(Alphabet.from_string("a"), 1, 0, frozenset({0}), frozenset({(0, "a", 0)}))
    just_a = Nfa.from_word("a", Alphabet.from_string("a"))
    assert is_subset(just_a, astar)
    assert not is_subset(astar, just_a)

    ab_star = Nfa(AB, 2, 0, frozenset({0}), frozenset({(0, "a", 1), (1, "b", 0)}))
    even = Nfa(AB, 2, 0, frozenset({0}),
               frozenset({(0, "a", 1), (0, "b", 1), (1, "a", 0), (1, "b", 0)}))
    assert is_subset(ab_star, even)
    got = set(enumerate_language(ab_star, 8))
    assert got <= set(enumerate_language(even, 8))


def test_subset_partial_order():
    rng = random.Random(11)
    autos = [random_nfa(rng, rng.randint(1, 3), AB) for _ in range(8)]
    for a in autos:
        assert is_subset(a, a)
    for a in autos:
        for b in autos:
            if is_subset(a, b) and is_subset(b, a):
                assert equivalent(a, b)


def test_determinize_preserves_language():
    rng = random.Random(13)
    for _ in range(20):
        a = random_nfa(rng, rng.randint(1, 4), AB)
        assert equivalent(a, determinize(a))


def test_double_complement():
    rng = random.Random(17)
    for _ in range(10):
        d = determinize(random_nfa(rng, rng.randint(1, 3), AB))
        assert equivalent(complement(complement(d)), d)


def test_product_enumeration_agrees_with_set_intersection():
    rng = random.Random(19)
    for _ in range(10):
        a, b = random_nfa(rng, 3, AB), random_nfa(rng, 3, AB)
        prod = set(enumerate_language(product_intersection(a, b), 6))
        byhand = set(enumerate_language(a, 6)) & set(enumerate_language(b, 6))
        assert prod == byhand


def test_membership_matches_enumeration():
    rng = random.Random(23)
    for _ in range(5):
        a = random_nfa(rng, 3, AB)
        words = set(enumerate_language(a, 5))
        for w in all_words("ab", 5):
            assert membership(a, w) == (w in words)


def test_enumerate_examples():
    astar = Nfa(Alphabet.from_string("a"), 1, 0, frozenset({0}), frozenset({(0, "a", 0)}))
    assert enumerate_language(astar, 2) == ["", "a", "aa"]
    assert enumerate_language(Nfa.empty_language(AB), 5) == []
    assert enumerate_language(ba_blocks(2, "$"), 6) == ["baba$", "baaba$", "babaa$"]


def test_shortest_word():
    assert shortest_word(Nfa.empty_language(AB)) is None
    assert shortest_word(ba_blocks(2, "$")) == "baba$"
    assert shortest_word(Nfa.universal(AB)) == ""


def test_trim_and_finiteness():
    a = Nfa(AB, 4, 0, frozenset({1}),
            frozenset({(0, "a", 1), (2, "a", 1), (1, "b", 3), (3, "b", 3)}))
    t = trim(a)
    assert t.state_count == 2 and equivalent(t, a)
    assert is_finite_language(Nfa.from_words({"ab", "ba"}, AB))
    assert not is_finite_language(Nfa.universal(AB))
