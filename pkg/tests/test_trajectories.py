import itertools
import random

import pytest

from sdikit import (
    InputError,
    Nfa,
    SdiVariant,
    TrajectoryKind,
    TrajectoryLanguage,
    asdi_nfa_direct,
    bounded_language_op,
    delete_on_trajectory,
    deletion_nfa,
    enumerate_language,
    equivalent,
    membership,
    named_trajectory,
    plain_shuffle_trajectories,
    product_intersection,
    reversed_deletion,
    scan_language,
    sdi_nfa_direct,
    shuffle_nfa,
)
from sdikit.complexity import random_nfa
from sdikit.trajectories import DELETION_ALPHABET, SHUFFLE_ALPHABET

from conftest import AB, all_words


def test_named_trajectory_membership():
    t_asdi = named_trajectory("T_asdi").language.automaton
    assert membership(t_asdi, "ss")
    assert membership(t_asdi, "0ss0")
    assert not membership(t_asdi, "ss0s")
    t_sdi = named_trajectory("T_sdi").language.automaton
    assert not membership(t_sdi, "")
    assert not membership(t_sdi, "000")
    assert not membership(t_sdi, "0s0")  # only one sync block
    assert membership(t_sdi, "0s1s0")
    assert membership(t_sdi, "ss")
    t1 = named_trajectory("T1").language.automaton
    assert membership(t1, "isdsi")
    with pytest.raises(InputError):
        named_trajectory("T3")


def _pattern_words(loop, mid, plus, max_len):
    """Expected words of loop* block mid* block loop* for cross-checking."""
    out = set()
    for total in range(max_len + 1):
        for split in itertools.product(range(total + 1), repeat=4):
            a, b, c, d = split
            e = total - a - b - c - d
            if e < 0:
                continue
            if plus and (b < 1 or d < 1):
                continue
            if not plus and (b != 1 or d != 1):
                continue
            out.add(loop * a + "s" * b + mid * c + "s" * d + loop * e)
    return out


@pytest.mark.parametrize(
    "name,loop,mid,plus",
    [
        ("T_sdi", "0", "1", True),
        ("T_asdi", "0", "1", False),
        ("T1", "i", "d", True),
        ("T1a", "i", "d", False),
        ("T2", "d", "i", True),
        ("T2a", "d", "i", False),
    ],
)
def test_named_trajectory_languages(name, loop, mid, plus):
    auto = named_trajectory(name).language.automaton
    got = set(enumerate_language(auto, 6))
    assert got == _pattern_words(loop, mid, plus, 6)


def test_trajectory_alphabet_validation():
    with pytest.raises(InputError):
        TrajectoryLanguage(TrajectoryKind.SHUFFLE, Nfa.universal(AB))
    with pytest.raises(InputError):
        TrajectoryLanguage(TrajectoryKind.SHUFFLE, Nfa.universal(DELETION_ALPHABET))


def _interleavings(x, y):
    if not x:
        return {y}
    if not y:
        return {x}
    return {x[0] + w for w in _interleavings(x[1:], y)} | {
        y[0] + w for w in _interleavings(x, y[1:])
    }


def test_plain_shuffle_is_ordinary_interleaving():
    astar = Nfa(AB, 1, 0, frozenset({0}), frozenset({(0, "a", 0)}))
    bstar = Nfa(AB, 1, 0, frozenset({0}), frozenset({(0, "b", 0)}))
    got = set(enumerate_language(shuffle_nfa(astar, bstar, plain_shuffle_trajectories()), 5))
    expected = set()
    for la in range(6):
        for lb in range(6 - la):
            expected |= _interleavings("a" * la, "b" * lb)
    assert got == expected


def test_empty_trajectory_set_gives_empty_language():
    t = TrajectoryLanguage(
        TrajectoryKind.SHUFFLE, Nfa.empty_language(SHUFFLE_ALPHABET)
    )
    rng = random.Random(61)
    a, b = random_nfa(rng, 3, AB), random_nfa(rng, 3, AB)
    assert enumerate_language(shuffle_nfa(a, b, t), 6) == []


def test_shuffle_tsdi_matches_oracle():
    rng = random.Random(67)
    t_sdi = named_trajectory("T_sdi").language
    candidates = all_words("ab", 7)
    for _ in range(25):
        a = random_nfa(rng, rng.randint(1, 3), AB)
        b = random_nfa(rng, rng.randint(1, 3), AB)
        got = set(enumerate_language(shuffle_nfa(a, b, t_sdi), 7))
        hosts = set(enumerate_language(a, 7))
        inserted = set(enumerate_language(b, 7))
        assert got == scan_language(SdiVariant.GENERAL, candidates, hosts, inserted)


def test_shuffle_kind_mismatch():
    t1 = named_trajectory("T1").language
    with pytest.raises(InputError):
        shuffle_nfa(Nfa.universal(AB), Nfa.universal(AB), t1)
    t_sdi = named_trajectory("T_sdi").language
    with pytest.raises(InputError):
        deletion_nfa(Nfa.universal(AB), Nfa.universal(AB), t_sdi)


def test_shuffle_product_size_bound():
    rng = random.Random(71)
    t_sdi = named_trajectory("T_sdi").language
    for _ in range(10):
        a = random_nfa(rng, rng.randint(1, 4), AB)
        b = random_nfa(rng, rng.randint(1, 4), AB)
        built = shuffle_nfa(a, b, t_sdi)
        assert built.state_count <= a.state_count * b.state_count * t_sdi.automaton.state_count


def test_asdi_identity_with_trajectory_construction():
    rng = random.Random(73)
    t_asdi = named_trajectory("T_asdi").language
    for _ in range(15):
        a = random_nfa(rng, rng.randint(1, 3), AB)
        b = random_nfa(rng, rng.randint(1, 3), AB)
        assert equivalent(shuffle_nfa(a, b, t_asdi), asdi_nfa_direct(a, b))


def test_deletion_idistar_contains_expected():
    from sdikit import Alphabet

    sig = Alphabet.from_string("abc")
    x = Nfa.from_word("abc", sig)
    y = Nfa.from_word("b", sig)
    traj = TrajectoryLanguage(
        TrajectoryKind.DELETION,
        Nfa(DELETION_ALPHABET, 2, 0, frozenset({0, 1}),
            frozenset({(0, "i", 0), (0, "d", 1), (1, "i", 1)})),
    )
    assert enumerate_language(deletion_nfa(x, y, traj), 4) == ["ac"]


def test_deletion_sync_star_is_intersection():
    sync_star = TrajectoryLanguage(
        TrajectoryKind.DELETION,
        Nfa(DELETION_ALPHABET, 1, 0, frozenset({0}), frozenset({(0, "s", 0)})),
    )
    rng = random.Random(79)
    for _ in range(10):
        a, b = random_nfa(rng, 3, AB), random_nfa(rng, 3, AB)
        assert equivalent(deletion_nfa(a, b, sync_star), product_intersection(a, b))


def test_deletion_keep_star_with_epsilon_is_identity():
    keep_star = TrajectoryLanguage(
        TrajectoryKind.DELETION,
        Nfa(DELETION_ALPHABET, 1, 0, frozenset({0}), frozenset({(0, "i", 0)})),
    )
    eps = Nfa.from_word("", AB)
    rng = random.Random(83)
    for _ in range(10):
        a = random_nfa(rng, rng.randint(1, 4), AB)
        assert equivalent(deletion_nfa(a, eps, keep_star), a)


def _t1_trajectories(xlen):
    """Words of i^a s^b d^c s^d i^e of total length xlen with b, d >= 1."""
    for a in range(xlen + 1):
        for b in range(1, xlen - a + 1):
            for c in range(xlen - a - b + 1):
                for d in range(1, xlen - a - b - c + 1):
                    e = xlen - a - b - c - d
                    yield "i" * a + "s" * b + "d" * c + "s" * d + "i" * e


def test_deletion_t1_matches_trajectory_oracle():
    # finite deleted language keeps the bounded comparison exhaustive:
    # outputs of length <= 4 need hosts of length <= 4 + max|y| = 7
    rng = random.Random(89)
    t1 = named_trajectory("T1").language
    for _ in range(10):
        a = random_nfa(rng, rng.randint(1, 3), AB)
        ys = {w for w in all_words("ab", 3) if rng.random() < 0.3}
        b = Nfa.from_words(ys, AB)
        got = {w for w in enumerate_language(deletion_nfa(a, b, t1), 4)}
        expected = set()
        for x in enumerate_language(a, 7):
            for t in _t1_trajectories(len(x)):
                for y in ys:
                    out = delete_on_trajectory(x, y, t)
                    if out is not None and len(out) <= 4:
                        expected.add(out)
        assert got == expected


def test_reversed_deletion_swaps_arguments():
    rng = random.Random(97)
    t2 = named_trajectory("T2").language
    for _ in range(8):
        a, b = random_nfa(rng, 3, AB), random_nfa(rng, 3, AB)
        assert equivalent(reversed_deletion(a, b, t2), deletion_nfa(b, a, t2))
