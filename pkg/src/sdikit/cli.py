"""Command-line interface.

Exit codes: 0 success or predicate true, 1 predicate false / unsolvable /
not found, 2 usage or input error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import complexity, decide, equations
from .automata import (
    InputError,
    Nfa,
    ResourceLimitError,
    enumerate_language,
    is_finite_language,
    membership,
    trim,
)
from .constructions import (
    finite_into_regular,
    insertion_nfa,
    max_sdi_membership,
    min_sdi_membership,
    regular_max_sdi_finite,
)
from .equations import EquationResourceError, EquationSpec, UnknownSide
from .oracle import SdiVariant, bounded_language_op
from .textio import (
    EPSILON_TOKEN,
    format_word,
    load_automaton,
    load_words,
    parse_word,
    save_automaton,
    serialize_automaton,
    serialize_words,
)
from .trajectories import (
    NAMED_TRAJECTORIES,
    TrajectoryKind,
    TrajectoryLanguage,
    deletion_nfa,
    named_trajectory,
    shuffle_nfa,
)

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

_VARIANTS = {v.value: v for v in SdiVariant}


class _UsageError(InputError):
    pass


def _variant(name: str) -> SdiVariant:
    return _VARIANTS[name]


def _load_operand(path: str, as_words: bool) -> tuple[Nfa | None, list[str] | None]:
    if as_words:
        return None, load_words(path)
    return load_automaton(path), None


def _operand_automaton(auto: Nfa | None, words: list[str] | None, alphabet) -> Nfa:
    if auto is not None:
        return auto
    return Nfa.from_words(words or [], alphabet)


def _alphabet_of(*operands) -> object:
    for auto, _ in operands:
        if auto is not None:
            return auto.alphabet
    raise _UsageError("at least one operand must be an automaton file")


def _load_trajectory(spec_text: str, kind: TrajectoryKind) -> TrajectoryLanguage:
    """A named trajectory (T_sdi, T1, ...) or an automaton file path."""
    if spec_text in NAMED_TRAJECTORIES:
        language = named_trajectory(spec_text).language
        if language.kind is not kind:
            raise _UsageError(f"{spec_text} is a {language.kind.value} trajectory")
        return language
    return TrajectoryLanguage(kind, load_automaton(spec_text))


def _cmd_op(args) -> int:
    if args.variant in ("shuffle", "deletion"):
        if args.trajectory is None:
            raise _UsageError(f"--variant {args.variant} needs --trajectory (name or file)")
        if args.right is None:
            raise _UsageError("two operands required")
        left = _load_operand(args.left, args.left_words)
        right = _load_operand(args.right, args.right_words)
        alphabet = _alphabet_of(left, right)
        a = _operand_automaton(*left, alphabet)
        b = _operand_automaton(*right, alphabet)
        if args.variant == "shuffle":
            traj = _load_trajectory(args.trajectory, TrajectoryKind.SHUFFLE)
            result = shuffle_nfa(a, b, traj)
        else:
            traj = _load_trajectory(args.trajectory, TrajectoryKind.DELETION)
            result = deletion_nfa(a, b, traj)
        return _emit_result(args, result)

    variant = _variant(args.variant)
    right_path = args.right
    right_words_flag = args.right_words
    if args.words is not None:
        if right_path is not None:
            raise _UsageError("--words replaces the second positional operand")
        right_path, right_words_flag = args.words, True
    if right_path is None:
        raise _UsageError("two operands required")
    left = _load_operand(args.left, args.left_words)
    right = _load_operand(right_path, right_words_flag)
    alphabet = _alphabet_of(left, right)

    if variant in (SdiVariant.GENERAL, SdiVariant.ALPHABETIC):
        a = _operand_automaton(*left, alphabet)
        b = _operand_automaton(*right, alphabet)
        result = insertion_nfa(variant, a, b)
    elif right[1] is not None:
        a = _operand_automaton(*left, alphabet)
        result = regular_max_sdi_finite(a, right[1], variant)
    elif left[1] is not None:
        b = _operand_automaton(*right, alphabet)
        result = finite_into_regular(variant, left[1], b)
    else:
        # two automata under max/min: not regularity preserving
        if args.out:
            raise _UsageError(
                f"{variant.value} of two automata needs --max-len (no automaton output exists in general)"
            )
        if args.max_len is None:
            raise _UsageError(f"{variant.value} of two automata needs --max-len")
        hosts = enumerate_language(left[0], args.max_len)
        inserted = enumerate_language(right[0], args.max_len)
        produced = bounded_language_op(variant, hosts, inserted)
        sys.stdout.write(serialize_words([w for w in produced if len(w) <= args.max_len]))
        return EXIT_TRUE
    return _emit_result(args, result)


def _emit_result(args, result: Nfa) -> int:
    if args.out:
        save_automaton(args.out, result)
        return EXIT_TRUE
    if args.max_len is not None:
        sys.stdout.write(serialize_words(enumerate_language(result, args.max_len)))
        return EXIT_TRUE
    trimmed = trim(result)
    if is_finite_language(trimmed):
        sys.stdout.write(serialize_words(enumerate_language(trimmed, trimmed.state_count)))
        return EXIT_TRUE
    raise _UsageError("result language is infinite; pass --max-len N or --out FILE")


def _cmd_member(args) -> int:
    variant = _variant(args.variant)
    word = parse_word(args.word)
    left = _load_operand(args.left, args.left_words)
    right = _load_operand(args.right, args.right_words)
    alphabet = _alphabet_of(left, right)
    a = _operand_automaton(*left, alphabet)
    b = _operand_automaton(*right, alphabet)
    if variant is SdiVariant.MAXIMAL:
        answer = max_sdi_membership(word, a, b)
    elif variant is SdiVariant.MINIMAL:
        answer = min_sdi_membership(word, a, b)
    else:
        answer = membership(insertion_nfa(variant, a, b), word)
    print("true" if answer else "false")
    return EXIT_TRUE if answer else EXIT_FALSE


def _report_exit(report: decide.DecisionReport) -> int:
    print(report)
    return EXIT_TRUE if report.answer else EXIT_FALSE


def _cmd_decide(args) -> int:
    pred = args.predicate
    if pred in ("sdi-free", "sdi-independent", "asdi-free", "asdi-independent",
                "maxsdi-free", "minsdi-free", "maxsdi-independent", "minsdi-independent"):
        if len(args.operands) != 2:
            raise _UsageError(f"{pred} needs two automaton files")
        a, b = (load_automaton(p) for p in args.operands)
        if pred == "sdi-free":
            return _report_exit(decide.is_sdi_free(a, b))
        if pred == "sdi-independent":
            return _report_exit(decide.is_sdi_independent(a, b))
        if pred == "asdi-free":
            return _report_exit(decide.is_asdi_free(a, b))
        if pred == "asdi-independent":
            return _report_exit(decide.is_asdi_independent(a, b))
        variant = SdiVariant.MAXIMAL if pred.startswith("max") else SdiVariant.MINIMAL
        if pred.endswith("free"):
            return _report_exit(decide.is_maxmin_sdi_free(variant, a, b))
        return _report_exit(decide.is_maxmin_sdi_independent(variant, a, b))
    if pred == "closed-sdi":
        if len(args.operands) != 1:
            raise _UsageError("closed-sdi needs one automaton file")
        return _report_exit(decide.is_closed_under_sdi(load_automaton(args.operands[0])))
    if pred in ("closed-finite-max", "closed-finite-min"):
        if len(args.operands) != 2:
            raise _UsageError(f"{pred} needs an automaton file and a word-list file")
        a = load_automaton(args.operands[0])
        words = load_words(args.operands[1])
        variant = SdiVariant.MAXIMAL if pred.endswith("max") else SdiVariant.MINIMAL
        return _report_exit(decide.closed_under_finite_maxmin(variant, a, words))
    if pred == "two-var-solvable":
        if len(args.operands) != 1:
            raise _UsageError("two-var-solvable needs one automaton file")
        return _report_exit(decide.two_var_solvable(load_automaton(args.operands[0])))
    if pred in ("counterexample-sdi", "counterexample-max", "counterexample-min"):
        if len(args.operands) != 1:
            raise _UsageError(f"{pred} needs one automaton file")
        if args.max_len is None:
            raise _UsageError(f"{pred} needs --max-len")
        variant = {
            "counterexample-sdi": SdiVariant.GENERAL,
            "counterexample-max": SdiVariant.MAXIMAL,
            "counterexample-min": SdiVariant.MINIMAL,
        }[pred]
        witness = decide.closure_counterexample_search(
            variant, load_automaton(args.operands[0]), args.max_len
        )
        if witness is None:
            print(f"no counterexample up to length {args.max_len} (not a closure proof)")
            return EXIT_TRUE
        print(f"counterexample: {format_word(witness)}")
        return EXIT_FALSE
    raise _UsageError(f"unknown predicate {pred!r}")


def _cmd_solve(args) -> int:
    spec = EquationSpec(
        UnknownSide(args.side),
        _variant(args.variant),
        load_automaton(args.known),
        load_automaton(args.result),
    )
    try:
        solution = equations.solve(spec)
    except EquationResourceError as exc:
        print(f"resource cap hit: {exc}", file=sys.stderr)
        if exc.candidate is not None and args.out:
            save_automaton(args.out, exc.candidate)
        return EXIT_RESOURCE
    if not solution.solvable:
        print("unsolvable")
        return EXIT_FALSE
    print("solvable")
    if args.out:
        save_automaton(args.out, solution.candidate)
    else:
        sys.stdout.write(serialize_automaton(solution.candidate))
    return EXIT_TRUE


def _cmd_enum(args) -> int:
    a = load_automaton(args.automaton)
    sys.stdout.write(serialize_words(enumerate_language(a, args.max_len)))
    return EXIT_TRUE


def _cmd_audit(args) -> int:
    def parse_range(text: str) -> tuple[int, int]:
        lo, _, hi = text.partition(":")
        return (int(lo), int(hi or lo))

    audits = complexity.size_audit(
        args.construction,
        parse_range(args.m_range),
        parse_range(args.n_range),
        args.samples,
        seed=args.seed,
    )
    for audit in audits:
        print(f"{audit.construction} {audit.m} {audit.n} {audit.bound} {audit.actual}")
    worst = max((a.actual - a.bound for a in audits), default=0)
    return EXIT_TRUE if worst <= 0 else EXIT_FALSE


def _cmd_fooling(args) -> int:
    a = load_automaton(args.automaton)
    found = complexity.fooling_set_search(a, args.target, args.max_len, seed=args.seed)
    if found is None:
        print(f"no fooling set of size {args.target} found (not an upper bound)")
        return EXIT_FALSE
    check = complexity.fooling_set_check(a, found)
    for x, w in found.pairs:
        print(f"{format_word(x)} {format_word(w)}")
    print(f"lower bound: {check.bound}")
    return EXIT_TRUE


def _cmd_check_format(args) -> int:
    from .automata import is_deterministic

    if args.kind == "words":
        words = load_words(args.file)
        print(f"ok: {len(words)} words")
        return EXIT_TRUE
    a = load_automaton(args.file)
    if args.kind in ("shuffle-trajectory", "deletion-trajectory"):
        kind = TrajectoryKind.SHUFFLE if args.kind.startswith("shuffle") else TrajectoryKind.DELETION
        TrajectoryLanguage(kind, a)  # validates the alphabet
    deterministic = is_deterministic(a)
    label = "deterministic" if deterministic else "nondeterministic"
    print(f"ok: {a.state_count} states, {len(a.transitions)} transitions, {label}")
    if args.require_dfa and not deterministic:
        print("error: automaton is nondeterministic", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_TRUE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sdikit",
        description="Site-directed insertion toolkit: language operations, "
        "decision procedures, equation solving and state-complexity audits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_op = sub.add_parser("op", help="apply a language operation to two operands")
    p_op.add_argument("--variant", required=True,
                      choices=sorted(_VARIANTS) + ["shuffle", "deletion"])
    p_op.add_argument("left", help="automaton file (or word list with --left-words)")
    p_op.add_argument("right", nargs="?", help="automaton file (or word list with --right-words)")
    p_op.add_argument("--left-words", action="store_true", help="left operand is a word-list file")
    p_op.add_argument("--right-words", action="store_true", help="right operand is a word-list file")
    p_op.add_argument("--words", metavar="FILE", help="shorthand: right operand word-list file")
    p_op.add_argument("--trajectory", metavar="NAME_OR_FILE",
                      help="trajectory set for shuffle/deletion: "
                      f"one of {', '.join(NAMED_TRAJECTORIES)} or an automaton file")
    p_op.add_argument("--out", metavar="FILE", help="write the result automaton")
    p_op.add_argument("--max-len", type=int, help="enumerate the result up to this length")
    p_op.set_defaults(func=_cmd_op)

    p_member = sub.add_parser("member", help="decide membership in an operation result")
    p_member.add_argument("--variant", required=True, choices=sorted(_VARIANTS))
    p_member.add_argument("word", help=f"query word ({EPSILON_TOKEN!r} for the empty word)")
    p_member.add_argument("left")
    p_member.add_argument("right")
    p_member.add_argument("--left-words", action="store_true")
    p_member.add_argument("--right-words", action="store_true")
    p_member.set_defaults(func=_cmd_member)

    p_decide = sub.add_parser("decide", help="decision procedures")
    p_decide.add_argument(
        "predicate",
        choices=[
            "sdi-free", "sdi-independent", "asdi-free", "asdi-independent",
            "maxsdi-free", "minsdi-free", "maxsdi-independent", "minsdi-independent",
            "closed-sdi", "closed-finite-max", "closed-finite-min", "two-var-solvable",
            "counterexample-sdi", "counterexample-max", "counterexample-min",
        ],
    )
    p_decide.add_argument("operands", nargs="*")
    p_decide.add_argument("--max-len", type=int, help="bound for counterexample search")
    p_decide.set_defaults(func=_cmd_decide)

    p_solve = sub.add_parser("solve", help="one-variable language equation X op L = R or L op X = R")
    p_solve.add_argument("--side", required=True, choices=["left", "right"],
                         help="which side the unknown X occupies")
    p_solve.add_argument("--variant", required=True, choices=["sdi", "asdi"])
    p_solve.add_argument("known", help="automaton file for the known operand L")
    p_solve.add_argument("result", help="automaton file for the result R")
    p_solve.add_argument("--out", metavar="FILE", help="write the candidate automaton")
    p_solve.set_defaults(func=_cmd_solve)

    p_enum = sub.add_parser("enum", help="enumerate a regular language")
    p_enum.add_argument("automaton")
    p_enum.add_argument("--max-len", type=int, required=True)
    p_enum.set_defaults(func=_cmd_enum)

    p_audit = sub.add_parser("audit", help="construction size audit against the formula bound")
    p_audit.add_argument("--construction", required=True, choices=["sdi", "asdi"])
    p_audit.add_argument("--m-range", required=True, help="LO:HI states of the host automaton")
    p_audit.add_argument("--n-range", required=True, help="LO:HI states of the inserted automaton")
    p_audit.add_argument("--samples", type=int, default=5)
    p_audit.add_argument("--seed", type=int, default=0)
    p_audit.set_defaults(func=_cmd_audit)

    p_fool = sub.add_parser("fooling", help="search a fooling set certifying an NFA lower bound")
    p_fool.add_argument("automaton")
    p_fool.add_argument("--target", type=int, required=True)
    p_fool.add_argument("--max-len", type=int, required=True)
    p_fool.add_argument("--seed", type=int, default=0)
    p_fool.set_defaults(func=_cmd_fooling)

    p_check = sub.add_parser("check-format", help="validate an input file")
    p_check.add_argument("file")
    p_check.add_argument(
        "--kind",
        choices=["automaton", "shuffle-trajectory", "deletion-trajectory", "words"],
        default="automaton",
    )
    p_check.add_argument("--require-dfa", action="store_true")
    p_check.set_defaults(func=_cmd_check_format)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EquationResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
