"""Shuffle and deletion guided by regular trajectory languages.

A shuffle trajectory over {0,1,s} interleaves two words: 0 takes a symbol
from the left operand, 1 from the right, s synchronizes one matching
symbol of both.  A deletion trajectory over {i,d,s} rebuilds the left
operand while deleting the right: i keeps a symbol, d deletes a matched
symbol, s keeps a matched symbol.  Both operations preserve regularity
for regular trajectory sets, via product constructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .automata import Alphabet, InputError, Nfa, trim

SHUFFLE_ALPHABET = Alphabet.from_string("01s")
DELETION_ALPHABET = Alphabet.from_string("ids")


class TrajectoryKind(Enum):
    SHUFFLE = "shuffle"
    DELETION = "deletion"


_KIND_ALPHABETS = {
    TrajectoryKind.SHUFFLE: SHUFFLE_ALPHABET,
    TrajectoryKind.DELETION: DELETION_ALPHABET,
}


@dataclass(frozen=True)
class TrajectoryLanguage:
    kind: TrajectoryKind
    automaton: Nfa

    def __post_init__(self):
        expected = _KIND_ALPHABETS[self.kind]
        if self.automaton.alphabet != expected:
            raise InputError(
                f"{self.kind.value} trajectory automaton must use alphabet "
                f"{{{','.join(expected)}}}"
            )


@dataclass(frozen=True)
class NamedTrajectory:
    name: str
    language: TrajectoryLanguage


def _two_sync_blocks(loop_sym: str, mid_sym: str, alphabet: Alphabet, plus: bool) -> Nfa:
    """Automaton for  loop* s-block mid* s-block loop*  where an s-block is
    s+ (plus=True) or a single s."""
    if plus:
        # 0: leading loop, 1: first s-block, 2: middle, 3: second s-block,
        # 4: trailing loop
        trans = {
            (0, loop_sym, 0),
            (0, "s", 1),
            (1, "s", 1),
            (1, mid_sym, 2),
            (1, "s", 3),
            (2, mid_sym, 2),
            (2, "s", 3),
            (3, "s", 3),
            (3, loop_sym, 4),
            (4, loop_sym, 4),
        }
        return Nfa(alphabet, 5, 0, frozenset({3, 4}), frozenset(trans))
    trans = {
        (0, loop_sym, 0),
        (0, "s", 1),
        (1, mid_sym, 1),
        (1, "s", 2),
        (2, loop_sym, 2),
    }
    return Nfa(alphabet, 3, 0, frozenset({2}), frozenset(trans))


_NAMED_BUILDERS = {
    # shuffle trajectories guiding insertion: x-symbols on 0, y on 1
    "T_sdi": lambda: TrajectoryLanguage(
        TrajectoryKind.SHUFFLE, _two_sync_blocks("0", "1", SHUFFLE_ALPHABET, plus=True)
    ),
    "T_asdi": lambda: TrajectoryLanguage(
        TrajectoryKind.SHUFFLE, _two_sync_blocks("0", "1", SHUFFLE_ALPHABET, plus=False)
    ),
    # deletion trajectories for the two inverse directions
    "T1": lambda: TrajectoryLanguage(
        TrajectoryKind.DELETION, _two_sync_blocks("i", "d", DELETION_ALPHABET, plus=True)
    ),
    "T1a": lambda: TrajectoryLanguage(
        TrajectoryKind.DELETION, _two_sync_blocks("i", "d", DELETION_ALPHABET, plus=False)
    ),
    "T2": lambda: TrajectoryLanguage(
        TrajectoryKind.DELETION, _two_sync_blocks("d", "i", DELETION_ALPHABET, plus=True)
    ),
    "T2a": lambda: TrajectoryLanguage(
        TrajectoryKind.DELETION, _two_sync_blocks("d", "i", DELETION_ALPHABET, plus=False)
    ),
}

NAMED_TRAJECTORIES = tuple(sorted(_NAMED_BUILDERS))


def named_trajectory(name: str) -> NamedTrajectory:
    try:
        builder = _NAMED_BUILDERS[name]
    except KeyError:
        raise InputError(
            f"unknown trajectory {name!r}; known: {', '.join(NAMED_TRAJECTORIES)}"
        ) from None
    return NamedTrajectory(name, builder())


def plain_shuffle_trajectories() -> TrajectoryLanguage:
    """All of {0,1}*: ordinary (unsynchronized) shuffle."""
    trans = {(0, "0", 0), (0, "1", 0)}
    return TrajectoryLanguage(
        TrajectoryKind.SHUFFLE, Nfa(SHUFFLE_ALPHABET, 1, 0, frozenset({0}), frozenset(trans))
    )


def shuffle_nfa(a: Nfa, b: Nfa, t: TrajectoryLanguage) -> Nfa:
    """NFA for the semantic shuffle of L(a) and L(b) on trajectories L(t).

    Product over reachable triples (state of a, state of b, state of t):
    a 0-step advances a and t, a 1-step advances b and t, an s-step
    advances all three on the same input symbol.
    """
    if t.kind is not TrajectoryKind.SHUFFLE:
        raise InputError("shuffle_nfa needs a shuffle-kind trajectory language")
    alphabet = a.alphabet
    if b.alphabet != alphabet:
        raise InputError("operand alphabets differ")
    traj = t.automaton
    start = (a.initial, b.initial, traj.initial)
    ids: dict[tuple[int, int, int], int] = {start: 0}
    queue = [start]
    trans: set[tuple[int, str, int]] = set()
    finals: set[int] = set()

    def state_id(key: tuple[int, int, int]) -> int:
        if key not in ids:
            ids[key] = len(ids)
            queue.append(key)
        return ids[key]

    while queue:
        key = queue.pop()
        p, q, r = key
        sid = ids[key]
        if p in a.finals and q in b.finals and r in traj.finals:
            finals.add(sid)
        zero_steps = traj.successors(r, "0")
        one_steps = traj.successors(r, "1")
        sync_steps = traj.successors(r, "s")
        for sym in alphabet:
            for p2 in a.successors(p, sym):
                for r2 in zero_steps:
                    trans.add((sid, sym, state_id((p2, q, r2))))
            for q2 in b.successors(q, sym):
                for r2 in one_steps:
                    trans.add((sid, sym, state_id((p, q2, r2))))
            if sync_steps:
                for p2 in a.successors(p, sym):
                    for q2 in b.successors(q, sym):
                        for r2 in sync_steps:
                            trans.add((sid, sym, state_id((p2, q2, r2))))
    return trim(Nfa(alphabet, len(ids), 0, frozenset(finals), frozenset(trans)))


def deletion_nfa(a: Nfa, b: Nfa, t: TrajectoryLanguage) -> Nfa:
    """NFA for deleting L(b) from L(a) along trajectories L(t).

    d-steps consume no input symbol, so the product is built with internal
    epsilon moves which are eliminated before returning.
    """
    if t.kind is not TrajectoryKind.DELETION:
        raise InputError("deletion_nfa needs a deletion-kind trajectory language")
    alphabet = a.alphabet
    if b.alphabet != alphabet:
        raise InputError("operand alphabets differ")
    traj = t.automaton
    start = (a.initial, b.initial, traj.initial)
    ids: dict[tuple[int, int, int], int] = {start: 0}
    queue = [start]
    sym_trans: set[tuple[int, str, int]] = set()
    eps_trans: set[tuple[int, int]] = set()
    finals: set[int] = set()

    def state_id(key: tuple[int, int, int]) -> int:
        if key not in ids:
            ids[key] = len(ids)
            queue.append(key)
        return ids[key]

    while queue:
        key = queue.pop()
        p, q, r = key
        sid = ids[key]
        if p in a.finals and q in b.finals and r in traj.finals:
            finals.add(sid)
        keep_steps = traj.successors(r, "i")
        del_steps = traj.successors(r, "d")
        sync_steps = traj.successors(r, "s")
        for sym in alphabet:
            for p2 in a.successors(p, sym):
                for r2 in keep_steps:
                    sym_trans.add((sid, sym, state_id((p2, q, r2))))
                if sync_steps:
                    for q2 in b.successors(q, sym):
                        for r2 in sync_steps:
                            sym_trans.add((sid, sym, state_id((p2, q2, r2))))
                if del_steps:
                    for q2 in b.successors(q, sym):
                        for r2 in del_steps:
                            eps_trans.add((sid, state_id((p2, q2, r2))))
    n = len(ids)
    finals2, trans2 = _eliminate_epsilon(n, finals, sym_trans, eps_trans)
    return trim(Nfa(alphabet, n, 0, frozenset(finals2), frozenset(trans2)))


def reversed_deletion(a: Nfa, b: Nfa, t: TrajectoryLanguage) -> Nfa:
    """Deletion with the operand roles swapped: delete L(a) from L(b)."""
    return deletion_nfa(b, a, t)


def _eliminate_epsilon(
    n: int,
    finals: set[int],
    sym_trans: set[tuple[int, str, int]],
    eps_trans: set[tuple[int, int]],
) -> tuple[set[int], set[tuple[int, str, int]]]:
    eps_adj: dict[int, list[int]] = {}
    for src, dst in eps_trans:
        eps_adj.setdefault(src, []).append(dst)

    closures: dict[int, set[int]] = {}
    for state in range(n):
        closure = {state}
        stack = [state]
        while stack:
            cur = stack.pop()
            for nxt in eps_adj.get(cur, ()):
                if nxt not in closure:
                    closure.add(nxt)
                    stack.append(nxt)
        closures[state] = closure

    out_by_state: dict[int, list[tuple[str, int]]] = {}
    for src, sym, dst in sym_trans:
        out_by_state.setdefault(src, []).append((sym, dst))

    new_trans: set[tuple[int, str, int]] = set()
    new_finals: set[int] = set()
    for state in range(n):
        closure = closures[state]
        if closure & finals:
            new_finals.add(state)
        for member in closure:
            for sym, dst in out_by_state.get(member, ()):
                new_trans.add((state, sym, dst))
    return new_finals, new_trans
