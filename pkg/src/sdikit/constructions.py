"""Direct NFA constructions for site-directed insertion variants.

The general construction runs in five phases over the host word
x1·u·z·v·x2: simulate the host automaton alone, jointly with the insert
automaton on u, the insert automaton alone on z with the host state
frozen, jointly again on v, then the host alone.  Entering and leaving
each overlap phase consumes at least one symbol, which enforces u, v
nonempty.  Reachable states only, so the sizes stay within m + 3mn + m
for the general and m + mn + m for the alphabetic variant.
"""

from __future__ import annotations

from .automata import Alphabet, InputError, Nfa, Word, membership, trim, union_all
from .automata import complement_nfa, product_intersection, DEFAULT_STATE_CAP
from .oracle import SdiVariant, unbordered


def _check_operands(a: Nfa, b: Nfa) -> Alphabet:
    if a.alphabet != b.alphabet:
        raise InputError("operand alphabets differ")
    return a.alphabet


class _Builder:
    """Reachable-state NFA assembly keyed by arbitrary hashable state labels."""

    def __init__(self, alphabet: Alphabet, start):
        self.alphabet = alphabet
        self.ids: dict = {start: 0}
        self.queue = [start]
        self.trans: set[tuple[int, str, int]] = set()
        self.finals: set[int] = set()

    def add(self, src_id: int, sym: str, key) -> None:
        nid = self.ids.get(key)
        if nid is None:
            nid = self.ids[key] = len(self.ids)
            self.queue.append(key)
        self.trans.add((src_id, sym, nid))

    def build(self) -> Nfa:
        return Nfa(
            self.alphabet, len(self.ids), 0, frozenset(self.finals), frozenset(self.trans)
        )


def sdi_nfa_direct(a: Nfa, b: Nfa, require_insertion: bool = False) -> Nfa:
    """NFA for site-directed insertion of L(b) into L(a).

    With require_insertion=True the inserted middle must be nonempty
    (the z phase cannot be skipped).
    """
    alphabet = _check_operands(a, b)
    builder = _Builder(alphabet, ("pre", a.initial))
    while builder.queue:
        key = builder.queue.pop()
        sid = builder.ids[key]
        phase = key[0]
        if phase == "pre":
            _, p = key
            for sym in alphabet:
                a_moves = a.successors(p, sym)
                for p2 in a_moves:
                    builder.add(sid, sym, ("pre", p2))
                b_entry = b.successors(b.initial, sym)
                for p2 in a_moves:
                    for q2 in b_entry:
                        builder.add(sid, sym, ("u", p2, q2))
        elif phase == "u":
            _, p, q = key
            for sym in alphabet:
                a_moves = a.successors(p, sym)
                b_moves = b.successors(q, sym)
                for p2 in a_moves:
                    for q2 in b_moves:
                        builder.add(sid, sym, ("u", p2, q2))
                        if not require_insertion:
                            builder.add(sid, sym, ("v", p2, q2))
                for q2 in b_moves:
                    builder.add(sid, sym, ("z", p, q2))
        elif phase == "z":
            _, p, q = key
            for sym in alphabet:
                b_moves = b.successors(q, sym)
                for q2 in b_moves:
                    builder.add(sid, sym, ("z", p, q2))
                for p2 in a.successors(p, sym):
                    for q2 in b_moves:
                        builder.add(sid, sym, ("v", p2, q2))
        elif phase == "v":
            _, p, q = key
            if p in a.finals and q in b.finals:
                builder.finals.add(sid)
            for sym in alphabet:
                a_moves = a.successors(p, sym)
                b_moves = b.successors(q, sym)
                for p2 in a_moves:
                    for q2 in b_moves:
                        builder.add(sid, sym, ("v", p2, q2))
                if q in b.finals:
                    for p2 in a_moves:
                        builder.add(sid, sym, ("post", p2))
        else:  # post
            _, p = key
            if p in a.finals:
                builder.finals.add(sid)
            for sym in alphabet:
                for p2 in a.successors(p, sym):
                    builder.add(sid, sym, ("post", p2))
    return builder.build()


def asdi_nfa_direct(a: Nfa, b: Nfa, require_insertion: bool = False) -> Nfa:
    """NFA for alphabetic site-directed insertion of L(b) into L(a).

    Three phases: host alone, insert automaton alone between the two
    single-letter joint steps, host alone again.
    """
    alphabet = _check_operands(a, b)
    builder = _Builder(alphabet, ("pre", a.initial))
    while builder.queue:
        key = builder.queue.pop()
        sid = builder.ids[key]
        phase = key[0]
        if phase == "pre":
            _, p = key
            for sym in alphabet:
                a_moves = a.successors(p, sym)
                for p2 in a_moves:
                    builder.add(sid, sym, ("pre", p2))
                for p2 in a_moves:
                    for q2 in b.successors(b.initial, sym):
                        if require_insertion:
                            builder.add(sid, sym, ("mid", p2, q2, False))
                        else:
                            builder.add(sid, sym, ("mid", p2, q2))
        elif phase == "mid":
            p, q = key[1], key[2]
            inserted = key[3] if require_insertion else True
            for sym in alphabet:
                b_moves = b.successors(q, sym)
                for q2 in b_moves:
                    if require_insertion:
                        builder.add(sid, sym, ("mid", p, q2, True))
                    else:
                        builder.add(sid, sym, ("mid", p, q2))
                if inserted and any(q2 in b.finals for q2 in b_moves):
                    for p2 in a.successors(p, sym):
                        builder.add(sid, sym, ("post", p2))
        else:  # post
            _, p = key
            if p in a.finals:
                builder.finals.add(sid)
            for sym in alphabet:
                for p2 in a.successors(p, sym):
                    builder.add(sid, sym, ("post", p2))
    return builder.build()


def insertion_nfa(variant: SdiVariant, a: Nfa, b: Nfa) -> Nfa:
    if variant is SdiVariant.GENERAL:
        return sdi_nfa_direct(a, b)
    if variant is SdiVariant.ALPHABETIC:
        return asdi_nfa_direct(a, b)
    raise InputError(f"no regular construction for {variant.value} on two automata")


# -- single fixed inserted word, maximal / minimal ------------------------


def _push(window: str, sym: str, cap: int) -> str:
    if cap <= 0:
        return ""
    return (window + sym)[-cap:]


def max_sdi_single_nfa(a: Nfa, y: Word) -> Nfa:
    """NFA for the maximal site-directed insertion of the word y into L(a).

    Guesses the split y = y1·y2·y3 and the insertion site.  While reading
    the prefix the state keeps a window of the last |y|-2 symbols, enough
    to refuse splits where a nonempty host suffix extends the matched
    prefix y1 into y1·y2.  After y, the first |y|-2 host symbols are
    matched against the precomputed dangerous continuations of y3.
    """
    if len(y) < 2:
        raise InputError("inserted word must have length at least 2")
    a.alphabet.check_word(y)
    k = len(y)
    window_cap = k - 2
    decs = [(i, j) for i in range(1, k) for j in range(i, k)]

    def blocked_left(window: str, i: int, j: int) -> bool:
        limit = min(len(window), j - i)
        return any(window[-off:] + y[:i] == y[: off + i] for off in range(1, limit + 1))

    forbidden: dict[tuple[int, int], frozenset[str]] = {}
    for i, j in decs:
        y23, y3 = y[i:], y[j:]
        bad = set()
        for pp in range(1, j - i + 1):
            tail = y23[-(len(y3) + pp) :]
            if tail[: len(y3)] == y3:
                bad.add(tail[len(y3) :])
        forbidden[(i, j)] = frozenset(bad)

    builder = _Builder(a.alphabet, ("pre", a.initial, ""))
    while builder.queue:
        key = builder.queue.pop()
        sid = builder.ids[key]
        phase = key[0]
        if phase == "pre":
            _, p, window = key
            for sym in a.alphabet:
                a_moves = a.successors(p, sym)
                for p2 in a_moves:
                    builder.add(sid, sym, ("pre", p2, _push(window, sym, window_cap)))
                if sym == y[0]:
                    for i, j in decs:
                        if blocked_left(window, i, j):
                            continue
                        for p2 in a_moves:
                            builder.add(sid, sym, ("y", (i, j), 1, p2))
        elif phase == "y":
            _, dec, pos, p = key
            i, j = dec
            sym = y[pos]
            frozen = i <= pos < j
            targets = (p,) if frozen else a.successors(p, sym)
            for p2 in targets:
                if pos + 1 == k:
                    start_track = "" if forbidden[dec] else None
                    builder.add(sid, sym, ("post", dec, p2, start_track))
                else:
                    builder.add(sid, sym, ("y", dec, pos + 1, p2))
        else:  # post
            _, dec, p, track = key
            if p in a.finals:
                builder.finals.add(sid)
            i, j = dec
            for sym in a.alphabet:
                for p2 in a.successors(p, sym):
                    if track is None:
                        builder.add(sid, sym, ("post", dec, p2, None))
                        continue
                    extended = track + sym
                    if extended in forbidden[dec]:
                        continue
                    nxt = None if len(extended) >= j - i else extended
                    builder.add(sid, sym, ("post", dec, p2, nxt))
    return trim(builder.build())


def min_sdi_single_nfa(a: Nfa, y: Word) -> Nfa:
    """NFA for the minimal site-directed insertion of the word y into L(a).

    Only splits with unbordered matched prefix and suffix are guessed;
    no further context checks are needed.
    """
    if len(y) < 2:
        raise InputError("inserted word must have length at least 2")
    a.alphabet.check_word(y)
    k = len(y)
    decs = [
        (i, j)
        for i in range(1, k)
        for j in range(i, k)
        if unbordered(y[:i]) and unbordered(y[j:])
    ]
    builder = _Builder(a.alphabet, ("pre", a.initial))
    while builder.queue:
        key = builder.queue.pop()
        sid = builder.ids[key]
        phase = key[0]
        if phase == "pre":
            _, p = key
            for sym in a.alphabet:
                a_moves = a.successors(p, sym)
                for p2 in a_moves:
                    builder.add(sid, sym, ("pre", p2))
                if sym == y[0]:
                    for dec in decs:
                        for p2 in a_moves:
                            builder.add(sid, sym, ("y", dec, 1, p2))
        elif phase == "y":
            _, dec, pos, p = key
            i, j = dec
            sym = y[pos]
            frozen = i <= pos < j
            targets = (p,) if frozen else a.successors(p, sym)
            for p2 in targets:
                if pos + 1 == k:
                    builder.add(sid, sym, ("post", p2))
                else:
                    builder.add(sid, sym, ("y", dec, pos + 1, p2))
        else:  # post
            _, p = key
            if p in a.finals:
                builder.finals.add(sid)
            for sym in a.alphabet:
                for p2 in a.successors(p, sym):
                    builder.add(sid, sym, ("post", p2))
    return trim(builder.build())


def regular_max_sdi_finite(a: Nfa, words: set[Word] | list[Word], variant: SdiVariant) -> Nfa:
    """L(a) max/min-inserted with each word of a finite language.

    Words shorter than 2 admit no nontrivial outfix and are skipped.
    """
    single = {SdiVariant.MAXIMAL: max_sdi_single_nfa, SdiVariant.MINIMAL: min_sdi_single_nfa}
    try:
        build = single[variant]
    except KeyError:
        raise InputError("variant must be maximal or minimal") from None
    parts = [build(a, y) for y in sorted(set(words), key=lambda w: (len(w), w)) if len(y) >= 2]
    return trim(union_all(parts, a.alphabet))


# -- finite host language, regular inserted language ----------------------


def _infix_nfa(prefix: Word, suffix: Word, alphabet: Alphabet) -> Nfa:
    """Automaton for prefix·Σ*·suffix."""
    np, ns = len(prefix), len(suffix)
    loop = np
    trans: set[tuple[int, str, int]] = set()
    for idx, sym in enumerate(prefix):
        trans.add((idx, sym, idx + 1))
    for sym in alphabet:
        trans.add((loop, sym, loop))
    if ns:
        trans.add((loop, suffix[0], loop + 1))
        for idx in range(1, ns):
            trans.add((loop + idx, suffix[idx], loop + idx + 1))
    return Nfa(alphabet, np + ns + 1, 0, frozenset({np + ns}), frozenset(trans))


def _concat_fixed(prefix: Word, core: Nfa, suffix: Word) -> Nfa:
    """Automaton for prefix·L(core)·suffix with fixed words on both sides."""
    npre, nsuf = len(prefix), len(suffix)
    off_core = npre
    off_suf = npre + core.state_count
    trans: set[tuple[int, str, int]] = set()
    for idx in range(npre - 1):
        trans.add((idx, prefix[idx], idx + 1))
    if npre:
        trans.add((npre - 1, prefix[-1], off_core + core.initial))
    trans.update((src + off_core, sym, dst + off_core) for src, sym, dst in core.transitions)
    if nsuf:
        for fin in core.finals:
            trans.add((fin + off_core, suffix[0], off_suf))
        for idx in range(1, nsuf):
            trans.add((off_suf + idx - 1, suffix[idx], off_suf + idx))
        finals = frozenset({off_suf + nsuf - 1})
    else:
        finals = frozenset(fin + off_core for fin in core.finals)
    initial = 0 if npre else off_core + core.initial
    return Nfa(core.alphabet, npre + core.state_count + nsuf, initial, finals, frozenset(trans))


def finite_into_regular(
    variant: SdiVariant,
    words: set[Word] | list[Word],
    a: Nfa,
    cap: int = DEFAULT_STATE_CAP,
) -> Nfa:
    """Max/min insertion of the regular language L(a) into finite host words.

    For every host x = x1·u·v·x2 the inserted words are constrained to
    u·Σ*·v, intersected with L(a); for the maximal variant the finitely
    many extended-outfix languages x1'·u·Σ*·v·x2' are excluded.
    """
    if variant not in (SdiVariant.MAXIMAL, SdiVariant.MINIMAL):
        raise InputError("variant must be maximal or minimal")
    alphabet = a.alphabet
    parts: list[Nfa] = []
    for x in sorted(set(words), key=lambda w: (len(w), w)):
        alphabet.check_word(x)
        for p in range(len(x)):
            for i in range(1, len(x) - p + 1):
                for m in range(1, len(x) - p - i + 1):
                    x1, u = x[:p], x[p : p + i]
                    v, x2 = x[p + i : p + i + m], x[p + i + m :]
                    if variant is SdiVariant.MINIMAL:
                        if not (unbordered(u) and unbordered(v)):
                            continue
                        allowed = product_intersection(a, _infix_nfa(u, v, alphabet))
                    else:
                        extended = [
                            _infix_nfa(x1[len(x1) - lp :] + u, v + x2[:lq], alphabet)
                            for lp in range(len(x1) + 1)
                            for lq in range(len(x2) + 1)
                            if lp or lq
                        ]
                        allowed = product_intersection(a, _infix_nfa(u, v, alphabet))
                        if extended:
                            blocked = union_all(extended, alphabet)
                            allowed = product_intersection(allowed, complement_nfa(blocked, cap))
                    part = trim(_concat_fixed(x1, allowed, x2))
                    if part.finals:
                        parts.append(part)
    return trim(union_all(parts, alphabet))


# -- polynomial membership deciders ---------------------------------------


def _maximal_site_in_word(w: Word, a_: int, b_: int, c_: int, d_: int) -> bool:
    """Maximality of the site w = w[:a]·u·z·v·w[d:] with u = w[a:b],
    z = w[b:c], v = w[c:d], checked through the two one-sided window
    conditions (independent of the oracle's formulation)."""
    for off in range(1, min(a_, c_ - b_) + 1):
        if w[a_ - off : b_] == w[a_ : b_ + off]:
            return False
    for off in range(1, min(len(w) - d_, c_ - b_) + 1):
        if w[c_ : d_ + off] == w[c_ - off : d_]:
            return False
    return True


def _insertion_membership(variant: SdiVariant, w: Word, a: Nfa, b: Nfa) -> bool:
    _check_operands(a, b)
    a.alphabet.check_word(w)
    n = len(w)
    host_ok: dict[tuple[int, int], bool] = {}
    ins_ok: dict[tuple[int, int], bool] = {}
    for bb in range(1, n):
        for cc in range(bb, n):
            key = (bb, cc)
            host_ok[key] = membership(a, w[:bb] + w[cc:])
            if not host_ok[key]:
                continue
            for aa in range(bb):
                for dd in range(cc + 1, n + 1):
                    if variant is SdiVariant.MAXIMAL:
                        if not _maximal_site_in_word(w, aa, bb, cc, dd):
                            continue
                    else:
                        if not (unbordered(w[aa:bb]) and unbordered(w[cc:dd])):
                            continue
                    if (aa, dd) not in ins_ok:
                        ins_ok[(aa, dd)] = membership(b, w[aa:dd])
                    if ins_ok[(aa, dd)]:
                        return True
    return False


def max_sdi_membership(w: Word, a: Nfa, b: Nfa) -> bool:
    """Does maximal insertion of some word of L(b) into L(a) produce w?

    Scans all O(|w|^4) decomposition boundaries; polynomial overall.
    """
    return _insertion_membership(SdiVariant.MAXIMAL, w, a, b)


def min_sdi_membership(w: Word, a: Nfa, b: Nfa) -> bool:
    """Does minimal insertion of some word of L(b) into L(a) produce w?"""
    return _insertion_membership(SdiVariant.MINIMAL, w, a, b)
