"""Text formats: automaton files and word-list files.

Automaton format, one item per line, `#` starts a comment:

    alphabet: a b
    states: 3
    initial: 0
    final: 2
    0 a -> 0
    0 b -> 1
    1 a -> 2

Word lists hold one word per line; the empty word is written `-`
(that character can never be an alphabet symbol).
"""

from __future__ import annotations

from .automata import Alphabet, Dfa, InputError, Nfa, Word, canonicalize, is_deterministic

EPSILON_TOKEN = "-"


class FormatError(InputError):
    """Unparseable automaton or word-list text."""


def _strip(line: str) -> str:
    hash_pos = line.find("#")
    if hash_pos >= 0:
        line = line[:hash_pos]
    return line.strip()


def parse_automaton(text: str) -> Nfa:
    headers: dict[str, list[str]] = {}
    triples: list[tuple[str, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if ":" in line.split()[0]:
            key, _, rest = line.partition(":")
            key = key.strip()
            if key not in ("alphabet", "states", "initial", "final"):
                raise FormatError(f"line {lineno}: unknown header {key!r}")
            if key in headers:
                raise FormatError(f"line {lineno}: duplicate header {key!r}")
            headers[key] = rest.split()
        else:
            tokens = line.split()
            if len(tokens) != 4 or tokens[2] != "->":
                raise FormatError(f"line {lineno}: expected 'FROM SYMBOL -> TO': {raw!r}")
            triples.append((tokens[0], tokens[1], tokens[3]))

    for key in ("alphabet", "states", "initial", "final"):
        if key not in headers:
            raise FormatError(f"missing header {key!r}")
    try:
        alphabet = Alphabet(tuple(headers["alphabet"]))
    except InputError as exc:
        raise FormatError(str(exc)) from None
    try:
        state_count = int(headers["states"][0]) if headers["states"] else -1
        initial = int(headers["initial"][0]) if headers["initial"] else -1
        finals = frozenset(int(tok) for tok in headers["final"])
    except ValueError as exc:
        raise FormatError(f"non-numeric state id: {exc}") from None
    if len(headers["states"]) != 1 or len(headers["initial"]) != 1:
        raise FormatError("'states' and 'initial' each take exactly one value")

    transitions = set()
    for src_tok, sym, dst_tok in triples:
        try:
            src, dst = int(src_tok), int(dst_tok)
        except ValueError:
            raise FormatError(f"non-numeric state id in transition {src_tok} {sym} -> {dst_tok}") from None
        transitions.add((src, sym, dst))
    try:
        return Nfa(alphabet, state_count, initial, finals, frozenset(transitions))
    except InputError as exc:
        raise FormatError(str(exc)) from None


def parse_dfa(text: str) -> Dfa:
    a = parse_automaton(text)
    if not is_deterministic(a):
        raise FormatError("automaton is nondeterministic")
    return Dfa(a.alphabet, a.state_count, a.initial, a.finals, a.transitions)


def serialize_automaton(a: Nfa) -> str:
    """Canonical text: BFS state order, sorted transitions. Deterministic."""
    c = canonicalize(a)
    sym_index = {sym: i for i, sym in enumerate(c.alphabet)}
    lines = [
        "alphabet: " + " ".join(c.alphabet),
        f"states: {c.state_count}",
        f"initial: {c.initial}",
        "final: " + " ".join(str(q) for q in sorted(c.finals)),
    ]
    for src, sym, dst in sorted(c.transitions, key=lambda t: (t[0], sym_index[t[1]], t[2])):
        lines.append(f"{src} {sym} -> {dst}")
    return "\n".join(lines).rstrip() + "\n"


def load_automaton(path: str) -> Nfa:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_automaton(fh.read())


def save_automaton(path: str, a: Nfa) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_automaton(a))


def format_word(word: Word) -> str:
    return word if word else EPSILON_TOKEN


def parse_word(token: str) -> Word:
    return "" if token == EPSILON_TOKEN else token


def parse_words(text: str) -> list[Word]:
    words = []
    for raw in text.splitlines():
        line = _strip(raw)
        if line:
            words.append(parse_word(line))
    return words


def load_words(path: str) -> list[Word]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_words(fh.read())


def serialize_words(words: list[Word]) -> str:
    ordered = sorted(set(words), key=lambda w: (len(w), w))
    return "".join(format_word(w) + "\n" for w in ordered)
