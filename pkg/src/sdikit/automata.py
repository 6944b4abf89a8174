"""Nondeterministic finite automata and the standard language algebra.

States are dense integer ids 0..state_count-1 with a single initial state
and no epsilon transitions.  All values are immutable after construction;
every operation is a pure function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

Word = str

#: Characters that can never be alphabet symbols: whitespace is used by the
#: file format as a separator, '#' starts comments, '-' and '>' form the
#: transition arrow.
RESERVED_CHARS = frozenset("#->")

DEFAULT_STATE_CAP = 2**20


class InputError(ValueError):
    """Malformed operand: bad symbol, alphabet mismatch, invalid argument."""


class ResourceLimitError(RuntimeError):
    """A construction exceeded its configured state budget."""

    def __init__(self, message: str, details: dict | None = None):
        super().__init__(message)
        self.details = details or {}


@dataclass(frozen=True)
class Alphabet:
    """Ordered finite set of single printable characters."""

    symbols: tuple[str, ...]

    def __post_init__(self):
        if not self.symbols:
            raise InputError("alphabet must be non-empty")
        seen = set()
        for sym in self.symbols:
            if len(sym) != 1:
                raise InputError(f"alphabet symbol must be a single character: {sym!r}")
            if sym.isspace() or not sym.isprintable() or sym in RESERVED_CHARS:
                raise InputError(f"reserved or unprintable alphabet symbol: {sym!r}")
            if sym in seen:
                raise InputError(f"duplicate alphabet symbol: {sym!r}")
            seen.add(sym)
        # canonical order makes alphabet equality order-insensitive
        object.__setattr__(self, "symbols", tuple(sorted(self.symbols)))

    @classmethod
    def from_string(cls, symbols: str) -> "Alphabet":
        return cls(tuple(symbols))

    def __contains__(self, sym: str) -> bool:
        return sym in self.symbols

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def check_word(self, word: Word) -> Word:
        for sym in word:
            if sym not in self.symbols:
                raise InputError(f"symbol {sym!r} not in alphabet {''.join(self.symbols)!r}")
        return word


@dataclass(frozen=True)
class Nfa:
    """NFA with a single initial state and transition triples (from, symbol, to)."""

    alphabet: Alphabet
    state_count: int
    initial: int
    finals: frozenset[int]
    transitions: frozenset[tuple[int, str, int]]

    def __post_init__(self):
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(self, "transitions", frozenset(self.transitions))
        if self.state_count < 1:
            raise InputError("automaton needs at least one state")
        if not 0 <= self.initial < self.state_count:
            raise InputError(f"initial state {self.initial} out of range")
        for q in self.finals:
            if not 0 <= q < self.state_count:
                raise InputError(f"final state {q} out of range")
        for src, sym, dst in self.transitions:
            if not (0 <= src < self.state_count and 0 <= dst < self.state_count):
                raise InputError(f"transition ({src}, {sym!r}, {dst}) out of range")
            if sym not in self.alphabet:
                raise InputError(f"transition symbol {sym!r} not in alphabet")

    @cached_property
    def _delta(self) -> dict[tuple[int, str], tuple[int, ...]]:
        table: dict[tuple[int, str], list[int]] = {}
        for src, sym, dst in self.transitions:
            table.setdefault((src, sym), []).append(dst)
        return {key: tuple(sorted(dsts)) for key, dsts in table.items()}

    def successors(self, state: int, sym: str) -> tuple[int, ...]:
        return self._delta.get((state, sym), ())

    def step(self, states: Iterable[int], sym: str) -> frozenset[int]:
        out: set[int] = set()
        for q in states:
            out.update(self._delta.get((q, sym), ()))
        return frozenset(out)

    def accepts(self, word: Word) -> bool:
        return membership(self, word)

    # -- common construction helpers -------------------------------------

    @classmethod
    def empty_language(cls, alphabet: Alphabet) -> "Nfa":
        return cls(alphabet, 1, 0, frozenset(), frozenset())

    @classmethod
    def universal(cls, alphabet: Alphabet) -> "Nfa":
        trans = frozenset((0, a, 0) for a in alphabet)
        return cls(alphabet, 1, 0, frozenset({0}), trans)

    @classmethod
    def sigma_plus(cls, alphabet: Alphabet) -> "Nfa":
        trans = {(0, a, 1) for a in alphabet} | {(1, a, 1) for a in alphabet}
        return cls(alphabet, 2, 0, frozenset({1}), frozenset(trans))

    @classmethod
    def at_most_one_symbol(cls, alphabet: Alphabet) -> "Nfa":
        trans = frozenset((0, a, 1) for a in alphabet)
        return cls(alphabet, 2, 0, frozenset({0, 1}), trans)

    @classmethod
    def from_word(cls, word: Word, alphabet: Alphabet) -> "Nfa":
        alphabet.check_word(word)
        trans = frozenset((i, sym, i + 1) for i, sym in enumerate(word))
        return cls(alphabet, len(word) + 1, 0, frozenset({len(word)}), trans)

    @classmethod
    def from_words(cls, words: Iterable[Word], alphabet: Alphabet) -> "Nfa":
        """Trie automaton for a finite set of words."""
        ids: dict[Word, int] = {"": 0}
        finals: set[int] = set()
        trans: set[tuple[int, str, int]] = set()
        for word in sorted(set(words), key=lambda w: (len(w), w)):
            alphabet.check_word(word)
            for i in range(len(word)):
                prefix, ext = word[:i], word[: i + 1]
                if ext not in ids:
                    ids[ext] = len(ids)
                    trans.add((ids[prefix], word[i], ids[ext]))
            finals.add(ids[word])
        return cls(alphabet, len(ids), 0, frozenset(finals), frozenset(trans))


@dataclass(frozen=True)
class Dfa(Nfa):
    """Possibly partial DFA: at most one successor per (state, symbol)."""

    def __post_init__(self):
        super().__post_init__()
        seen: set[tuple[int, str]] = set()
        for src, sym, _ in self.transitions:
            if (src, sym) in seen:
                raise InputError(f"nondeterministic on ({src}, {sym!r})")
            seen.add((src, sym))

    def successor(self, state: int, sym: str) -> int | None:
        dsts = self.successors(state, sym)
        return dsts[0] if dsts else None


def is_deterministic(a: Nfa) -> bool:
    seen: set[tuple[int, str]] = set()
    for src, sym, _ in a.transitions:
        if (src, sym) in seen:
            return False
        seen.add((src, sym))
    return True


def as_dfa(a: Nfa) -> Dfa:
    """Reinterpret an NFA as a DFA; fails if it is nondeterministic."""
    if isinstance(a, Dfa):
        return a
    return Dfa(a.alphabet, a.state_count, a.initial, a.finals, a.transitions)


def _require_same_alphabet(a: Nfa, b: Nfa) -> Alphabet:
    if a.alphabet != b.alphabet:
        raise InputError(
            f"alphabet mismatch: {''.join(a.alphabet)!r} vs {''.join(b.alphabet)!r}"
        )
    return a.alphabet


def membership(a: Nfa, word: Word) -> bool:
    """True iff some run of `a` on `word` ends in a final state."""
    a.alphabet.check_word(word)
    states: frozenset[int] = frozenset({a.initial})
    for sym in word:
        states = a.step(states, sym)
        if not states:
            return False
    return bool(states & a.finals)


def determinize(a: Nfa, cap: int = DEFAULT_STATE_CAP) -> Dfa:
    """Subset construction, reachable subsets only.

    Raises ResourceLimitError when more than `cap` subset states appear.
    """
    start = frozenset({a.initial})
    ids: dict[frozenset[int], int] = {start: 0}
    queue = [start]
    trans: set[tuple[int, str, int]] = set()
    finals: set[int] = set()
    while queue:
        subset = queue.pop()
        sid = ids[subset]
        if subset & a.finals:
            finals.add(sid)
        for sym in a.alphabet:
            nxt = a.step(subset, sym)
            if not nxt:
                continue
            if nxt not in ids:
                if len(ids) >= cap:
                    raise ResourceLimitError(
                        f"determinization exceeded {cap} states",
                        {"cap": cap, "input_states": a.state_count},
                    )
                ids[nxt] = len(ids)
                queue.append(nxt)
            trans.add((sid, sym, ids[nxt]))
    return Dfa(a.alphabet, len(ids), 0, frozenset(finals), frozenset(trans))


def complete(d: Dfa) -> Dfa:
    """Total version of a partial DFA; adds a sink state when needed."""
    missing = [
        (q, sym)
        for q in range(d.state_count)
        for sym in d.alphabet
        if d.successor(q, sym) is None
    ]
    if not missing:
        return d
    sink = d.state_count
    trans = set(d.transitions)
    trans.update((q, sym, sink) for q, sym in missing)
    trans.update((sink, sym, sink) for sym in d.alphabet)
    return Dfa(d.alphabet, d.state_count + 1, d.initial, d.finals, frozenset(trans))


def complement(d: Dfa) -> Dfa:
    c = complete(d)
    finals = frozenset(range(c.state_count)) - c.finals
    return Dfa(c.alphabet, c.state_count, c.initial, finals, c.transitions)


def complement_nfa(a: Nfa, cap: int = DEFAULT_STATE_CAP) -> Dfa:
    return complement(determinize(a, cap))


def product_intersection(a: Nfa, b: Nfa) -> Nfa:
    """Product automaton for L(a) ∩ L(b), reachable pairs only."""
    _require_same_alphabet(a, b)
    start = (a.initial, b.initial)
    ids: dict[tuple[int, int], int] = {start: 0}
    queue = [start]
    trans: set[tuple[int, str, int]] = set()
    finals: set[int] = set()
    while queue:
        pair = queue.pop()
        p, q = pair
        pid = ids[pair]
        if p in a.finals and q in b.finals:
            finals.add(pid)
        for sym in a.alphabet:
            for p2 in a.successors(p, sym):
                for q2 in b.successors(q, sym):
                    nxt = (p2, q2)
                    if nxt not in ids:
                        ids[nxt] = len(ids)
                        queue.append(nxt)
                    trans.add((pid, sym, ids[nxt]))
    return Nfa(a.alphabet, len(ids), 0, frozenset(finals), frozenset(trans))


def union(a: Nfa, b: Nfa) -> Nfa:
    """Single-initial union: a fresh initial state mirrors both originals."""
    _require_same_alphabet(a, b)
    off_a, off_b = 1, 1 + a.state_count
    trans: set[tuple[int, str, int]] = set()
    trans.update((src + off_a, sym, dst + off_a) for src, sym, dst in a.transitions)
    trans.update((src + off_b, sym, dst + off_b) for src, sym, dst in b.transitions)
    for sym in a.alphabet:
        trans.update((0, sym, dst + off_a) for dst in a.successors(a.initial, sym))
        trans.update((0, sym, dst + off_b) for dst in b.successors(b.initial, sym))
    finals = {q + off_a for q in a.finals} | {q + off_b for q in b.finals}
    if a.initial in a.finals or b.initial in b.finals:
        finals.add(0)
    return Nfa(a.alphabet, 1 + a.state_count + b.state_count, 0, frozenset(finals), frozenset(trans))


def union_all(automata: list[Nfa], alphabet: Alphabet) -> Nfa:
    result = Nfa.empty_language(alphabet)
    for a in automata:
        result = union(result, a)
    return result


def _reachable(a: Nfa) -> set[int]:
    seen = {a.initial}
    queue = [a.initial]
    fwd: dict[int, list[int]] = {}
    for src, _, dst in a.transitions:
        fwd.setdefault(src, []).append(dst)
    while queue:
        q = queue.pop()
        for dst in fwd.get(q, ()):
            if dst not in seen:
                seen.add(dst)
                queue.append(dst)
    return seen


def _coreachable(a: Nfa) -> set[int]:
    rev: dict[int, list[int]] = {}
    for src, _, dst in a.transitions:
        rev.setdefault(dst, []).append(src)
    seen = set(a.finals)
    queue = list(a.finals)
    while queue:
        q = queue.pop()
        for src in rev.get(q, ()):
            if src not in seen:
                seen.add(src)
                queue.append(src)
    return seen


def is_empty(a: Nfa) -> bool:
    return not (_reachable(a) & a.finals)


def trim(a: Nfa) -> Nfa:
    """Drop states that are unreachable or cannot reach a final state."""
    useful = _reachable(a) & _coreachable(a)
    if a.initial not in useful:
        return Nfa.empty_language(a.alphabet)
    remap = {old: new for new, old in enumerate(sorted(useful))}
    trans = frozenset(
        (remap[src], sym, remap[dst])
        for src, sym, dst in a.transitions
        if src in useful and dst in useful
    )
    finals = frozenset(remap[q] for q in a.finals if q in useful)
    return Nfa(a.alphabet, len(useful), remap[a.initial], finals, trans)


def canonicalize(a: Nfa) -> Nfa:
    """Renumber reachable states in BFS order from the initial state."""
    order = {a.initial: 0}
    queue = [a.initial]
    head = 0
    while head < len(queue):
        q = queue[head]
        head += 1
        for sym in a.alphabet:
            for dst in a.successors(q, sym):
                if dst not in order:
                    order[dst] = len(order)
                    queue.append(dst)
    trans = frozenset(
        (order[src], sym, order[dst])
        for src, sym, dst in a.transitions
        if src in order and dst in order
    )
    finals = frozenset(order[q] for q in a.finals if q in order)
    out = Nfa(a.alphabet, len(order), 0, finals, trans)
    return as_dfa(out) if isinstance(a, Dfa) else out


def is_subset(a: Nfa, b: Nfa, cap: int = DEFAULT_STATE_CAP) -> bool:
    """L(a) ⊆ L(b), decided via emptiness of a ∩ complement(b)."""
    _require_same_alphabet(a, b)
    return is_empty(product_intersection(a, complement_nfa(b, cap)))


def equivalent(a: Nfa, b: Nfa, cap: int = DEFAULT_STATE_CAP) -> bool:
    return is_subset(a, b, cap) and is_subset(b, a, cap)


def enumerate_language(a: Nfa, max_len: int) -> list[Word]:
    """All accepted words of length <= max_len, in length-then-lex order."""
    if max_len < 0:
        return []
    t = trim(a)
    if not t.finals:
        return []
    out: list[Word] = []
    stack: list[tuple[frozenset[int], str]] = [(frozenset({t.initial}), "")]
    while stack:
        states, prefix = stack.pop()
        if states & t.finals:
            out.append(prefix)
        if len(prefix) == max_len:
            continue
        for sym in t.alphabet:
            nxt = t.step(states, sym)
            if nxt:
                stack.append((nxt, prefix + sym))
    out.sort(key=lambda w: (len(w), w))
    return out


def shortest_word(a: Nfa) -> Word | None:
    """Length-lex least accepted word, or None for the empty language."""
    frontier: list[tuple[frozenset[int], str]] = [(frozenset({a.initial}), "")]
    seen: set[frozenset[int]] = {frozenset({a.initial})}
    while frontier:
        for states, word in frontier:
            if states & a.finals:
                return word
        nxt: list[tuple[frozenset[int], str]] = []
        for states, word in frontier:
            for sym in a.alphabet:
                stepped = a.step(states, sym)
                if stepped and stepped not in seen:
                    seen.add(stepped)
                    nxt.append((stepped, word + sym))
        frontier = sorted(nxt, key=lambda item: item[1])
    return None


def is_finite_language(a: Nfa) -> bool:
    """True iff L(a) is finite: the trimmed automaton is acyclic."""
    t = trim(a)
    adj: dict[int, set[int]] = {}
    for src, _, dst in t.transitions:
        adj.setdefault(src, set()).add(dst)
    color = {}  # 0 in-progress, 1 done
    stack: list[tuple[int, Iterator[int]]] = []
    for root in range(t.state_count):
        if root in color:
            continue
        color[root] = 0
        stack.append((root, iter(adj.get(root, ()))))
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if nxt not in color:
                    color[nxt] = 0
                    stack.append((nxt, iter(adj.get(nxt, ()))))
                    advanced = True
                    break
                if color[nxt] == 0:
                    return False
            if not advanced:
                color[node] = 1
                stack.pop()
    return True
