"""Decision procedures: freeness, independence, closure, solvability.

Freeness of L(a) w.r.t. L(b) means no word of L(b) can be inserted into a
word of L(a).  Independence means inserting a nonempty middle into L(a)
never lands in L(b); this uses the insertion-proper construction, where
the inserted middle z must be nonempty (otherwise every language whose
words admit a site would trivially fail against itself).  The maximal
and minimal variants of both predicates coincide with the general ones,
because an insertion site admits a maximal/minimal insertion exactly
when it admits any.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .automata import (
    DEFAULT_STATE_CAP,
    InputError,
    Nfa,
    Word,
    complement_nfa,
    enumerate_language,
    is_empty,
    is_subset,
    membership,
    product_intersection,
    shortest_word,
)
from .constructions import asdi_nfa_direct, regular_max_sdi_finite, sdi_nfa_direct
from .oracle import SdiVariant, bounded_language_op


@dataclass(frozen=True)
class DecisionReport:
    predicate: str
    answer: bool
    witness: Word | None = None
    resources: dict[str, int] = field(default_factory=dict)

    def __str__(self) -> str:
        parts = [f"{self.predicate}: {'true' if self.answer else 'false'}"]
        if self.witness is not None:
            parts.append(f"witness: {self.witness!r}")
        for key in sorted(self.resources):
            parts.append(f"{key}={self.resources[key]}")
        return "  ".join(parts)


def _emptiness_report(predicate: str, product: Nfa, extra: dict[str, int]) -> DecisionReport:
    answer = is_empty(product)
    witness = None if answer else shortest_word(product)
    return DecisionReport(predicate, answer, witness, extra)


def is_sdi_free(a: Nfa, b: Nfa) -> DecisionReport:
    """L(a) ⊕ L(b) = ∅ for general site-directed insertion."""
    c = sdi_nfa_direct(a, b)
    return _emptiness_report("sdi-free", c, {"construction_states": c.state_count})


def is_asdi_free(a: Nfa, b: Nfa) -> DecisionReport:
    c = asdi_nfa_direct(a, b)
    return _emptiness_report("asdi-free", c, {"construction_states": c.state_count})


def is_sdi_independent(a: Nfa, b: Nfa) -> DecisionReport:
    """(L(a) ⊕ nonempty-middle insertions) ∩ L(b) = ∅."""
    grown = sdi_nfa_direct(a, Nfa.sigma_plus(a.alphabet), require_insertion=True)
    product = product_intersection(grown, b)
    return _emptiness_report(
        "sdi-independent",
        product,
        {"construction_states": grown.state_count, "product_states": product.state_count},
    )


def is_asdi_independent(a: Nfa, b: Nfa) -> DecisionReport:
    grown = asdi_nfa_direct(a, Nfa.sigma_plus(a.alphabet), require_insertion=True)
    product = product_intersection(grown, b)
    return _emptiness_report(
        "asdi-independent",
        product,
        {"construction_states": grown.state_count, "product_states": product.state_count},
    )


def _maxmin_name(variant: SdiVariant, suffix: str) -> str:
    if variant is SdiVariant.MAXIMAL:
        return "maxsdi-" + suffix
    if variant is SdiVariant.MINIMAL:
        return "minsdi-" + suffix
    raise InputError("variant must be maximal or minimal")


def is_maxmin_sdi_free(variant: SdiVariant, a: Nfa, b: Nfa) -> DecisionReport:
    """Max/min freeness coincides with general freeness: a site admits a
    maximal (minimal) insertion iff it admits any insertion."""
    base = is_sdi_free(a, b)
    return DecisionReport(_maxmin_name(variant, "free"), base.answer, base.witness, base.resources)


def is_maxmin_sdi_independent(variant: SdiVariant, a: Nfa, b: Nfa) -> DecisionReport:
    """Max/min independence delegates to general independence: inserting
    into a host with the whole remaining word as matched outfix is always
    maximal, and single-letter outfixes are always minimal."""
    base = is_sdi_independent(a, b)
    return DecisionReport(
        _maxmin_name(variant, "independent"), base.answer, base.witness, base.resources
    )


def is_closed_under_sdi(a: Nfa, cap: int = DEFAULT_STATE_CAP) -> DecisionReport:
    """L(a) ⊕ L(a) ⊆ L(a)?  Polynomial for DFA input; NFA input may hit
    the determinization cap, reported as a resource error."""
    grown = sdi_nfa_direct(a, a)
    answer = is_subset(grown, a, cap)
    witness = None
    if not answer:
        witness = shortest_word(product_intersection(grown, complement_nfa(a, cap)))
    return DecisionReport(
        "closed-sdi", answer, witness, {"construction_states": grown.state_count}
    )


def closed_under_finite_maxmin(
    variant: SdiVariant, a: Nfa, words: set[Word] | list[Word], cap: int = DEFAULT_STATE_CAP
) -> DecisionReport:
    """L(a) max/min-inserted with a finite language stays inside L(a)?"""
    grown = regular_max_sdi_finite(a, words, variant)
    answer = is_subset(grown, a, cap)
    witness = None
    if not answer:
        witness = shortest_word(product_intersection(grown, complement_nfa(a, cap)))
    return DecisionReport(
        _maxmin_name(variant, "closed-finite"),
        answer,
        witness,
        {"construction_states": grown.state_count},
    )


def two_var_solvable(r: Nfa) -> DecisionReport:
    """Does X1 ⊕ X2 = L(r) admit any solution pair?

    Solvable exactly when every word of L(r) has length at least two;
    an insertion output always contains the nonempty matched prefix and
    suffix, so no output is shorter than two symbols.
    """
    short = product_intersection(r, Nfa.at_most_one_symbol(r.alphabet))
    answer = is_empty(short)
    witness = None if answer else shortest_word(short)
    return DecisionReport("two-var-solvable", answer, witness, {})


def closure_counterexample_search(
    variant: SdiVariant, a: Nfa, max_len: int
) -> Word | None:
    """Bounded probe: a word of (L(a) ⊕ L(a)) − L(a) of length ≤ max_len.

    Exhaustive at the bound because an insertion output is never shorter
    than either operand.  Absence of a counterexample at the bound proves
    nothing about closure.
    """
    words = enumerate_language(a, max_len)
    produced = bounded_language_op(variant, words, words)
    for w in sorted(produced, key=lambda w: (len(w), w)):
        if len(w) <= max_len and not membership(a, w):
            return w
    return None
