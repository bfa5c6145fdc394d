"""Command-line interface: ``vslinks <subcommand> ...``.

Exit codes: 0 success, 1 invariant violation found by ``fuzz``, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from typing import Callable

from .bowling import burau, matrix_invariant, permutation_rep_fvb3, rho
from .diagram import (
    BraidWord,
    DiagramError,
    StringLinkDiagram,
    WordSyntaxError,
    closure,
    from_braid_word,
    load_diagram,
    parse_word,
)
from .homology import Cochain2, CocycleError, cohomology, enumerate_cocycles, homology
from .linking import linking_report
from .rewriting import random_rewrite, random_word, replay
from .statesum import state_sum
from .vfb import FiniteVFB, VfbError, constant_action_vfb, count_colorings, make_vfb, trivial_vfb, vfb_violations


class InputError(Exception):
    pass


def _word(text: str, n: int | None = None) -> BraidWord:
    try:
        return parse_word(text, n)
    except WordSyntaxError as e:
        raise InputError(f"cannot parse word {text!r}: {e}") from None


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read {path}: {e}") from None


def _string_link(arg: str, n: int | None) -> StringLinkDiagram:
    if arg.endswith(".json") or os.path.isfile(arg):
        try:
            d = load_diagram(json.dumps(_read_json(arg)))
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"bad diagram in {arg}: {e}") from None
        if not isinstance(d, StringLinkDiagram):
            raise InputError(f"{arg} holds a flat link, not a string link")
        return d
    word = _word(arg, n)
    if not word.is_virtual:
        raise InputError("string-link words may not contain flat letters")
    return from_braid_word(word)


def _flat(arg: str, n: int | None):
    if arg.endswith(".json") or os.path.isfile(arg):
        return load_diagram(json.dumps(_read_json(arg)))
    word = _word(arg, n)
    if not word.is_flat:
        raise InputError("flat words may contain only f and t letters")
    return closure(word)


def _vfb(arg: str) -> FiniteVFB:
    try:
        if os.path.isfile(arg) or arg.endswith(".json"):
            return FiniteVFB.from_json(_read_json(arg))
        return make_vfb(arg)
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"bad VFB {arg!r}: {e}") from None


def _cocycle(arg: str) -> Cochain2:
    try:
        return Cochain2.from_json(_read_json(arg))
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"bad cocycle in {arg}: {e}") from None


# ---------------------------------------------------------------------------
# subcommands


def cmd_matrix(args, out):
    print(matrix_invariant(_string_link(args.input, args.n)), file=out)


def cmd_rho(args, out):
    print(rho(_word(args.word, args.n)), file=out)


def cmd_burau(args, out):
    word = _word(args.word, args.n)
    if not word.is_virtual:
        raise InputError("burau takes virtual braid words")
    print(burau(word), file=out)


def cmd_permrep(args, out):
    word = _word(args.word, 3)
    if not word.is_flat or word.n != 3:
        raise InputError("permrep takes a flat word on 3 strands")
    print(permutation_rep_fvb3(word), file=out)


def cmd_linking(args, out):
    for line in linking_report(_string_link(args.input, args.n)).lines():
        print(line, file=out)


def cmd_vfb(args, out):
    S = _vfb(args.construction)
    if args.action == "make":
        print(S.dumps(), file=out)
        return 0
    problems = vfb_violations(S)
    if problems:
        for p in problems:
            print(p, file=out)
        return 1
    print(f"ok: order {S.order} virtual flat biquandle", file=out)
    return 0


def cmd_colorings(args, out):
    d = _flat(args.input, args.n)
    S = _vfb(args.vfb)
    try:
        count, colorings = count_colorings(d, S, with_list=True)
    except VfbError as e:
        raise InputError(str(e)) from None
    print(count, file=out)
    if args.list:
        for c in colorings:
            print(" ".join(S.label(x) for x in c), file=out)


def cmd_homology(args, out):
    S = _vfb(args.vfb)
    fn = cohomology if args.cohomology else homology
    try:
        groups = fn(S, args.max_degree, args.complex, args.coeff)
    except (ValueError, VfbError) as e:
        raise InputError(str(e)) from None
    tag = "H^" if args.cohomology else "H_"
    for n, g in enumerate(groups):
        print(f"{tag}{n} = {g}", file=out)


def cmd_cocycles(args, out):
    S = _vfb(args.vfb)
    try:
        found = enumerate_cocycles(S, args.coeff)
    except (ValueError, VfbError) as e:
        raise InputError(str(e)) from None
    print(json.dumps([phi.to_json() for phi in found]), file=out)


def cmd_statesum(args, out):
    d = _flat(args.input, args.n)
    S = _vfb(args.vfb)
    phi = _cocycle(args.cocycle)
    try:
        result = state_sum(d, S, phi)
    except (CocycleError, VfbError, ValueError) as e:
        raise InputError(str(e)) from None
    print(result.value, file=out)


# ---------------------------------------------------------------------------
# fuzzing


def _fuzz_target(target: str, args) -> tuple[Callable, str]:
    """(invariant of a word, letter kinds) for a fuzz target."""
    if target == "matrix":
        def inv(w):
            d = from_braid_word(w)
            return (matrix_invariant(d), linking_report(d).lk if w.n == 2 else None)
        return inv, "sSt"
    S = _vfb(args.vfb) if args.vfb else constant_action_vfb([1, 0])
    if target == "vc":
        return (lambda w: count_colorings(closure(w), S)), "ft"
    if args.vfb:
        phis = [_cocycle(args.cocycle)] if args.cocycle else enumerate_cocycles(S)
    else:
        S = trivial_vfb(2)
        phis = [Cochain2("Z", [[0, 1], [-1, 0]])]
    return (lambda w: tuple(state_sum(closure(w), S, p).value for p in phis)), "ft"


def cmd_fuzz(args, out):
    inv, kinds = _fuzz_target(args.target, args)
    flat = args.target != "matrix"
    rng = random.Random(args.seed)
    for trial in range(args.trials):
        n = rng.randint(2, args.max_strands)
        word = random_word(rng, n, rng.randint(0, args.max_length), kinds)
        shift = rng.randrange(len(word)) if flat and len(word) else 0
        start = word.rotate(shift)
        _, trace = random_rewrite(start, args.steps, rng.randrange(2 ** 32), flat=flat)
        expected = inv(word)
        if inv(replay(start, trace)) == expected and (not shift or inv(start) == expected):
            continue
        # shortest failing prefix of the trace
        k = next(k for k in range(len(trace) + 1) if inv(replay(start, trace[:k])) != expected)
        print(f"FAIL trial {trial}: {args.target} changed", file=out)
        print(f"word: {word}", file=out)
        if shift:
            print(f"rotate: {shift}", file=out)
        for step in trace[:k]:
            print(f"  {step}", file=out)
        return 1
    print(f"ok: {args.trials} trials of {args.target}, seed {args.seed}", file=out)
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vslinks", description="Invariants of virtual string links and flat virtual links.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=fn)
        return sp

    sp = add("matrix", cmd_matrix, "dual-number matrix M(L) of a word or diagram JSON")
    sp.add_argument("input")
    sp.add_argument("--n", type=int, help="strand count for words without an n= header")
    for name, fn, help_ in (("rho", cmd_rho, "the representation rho of a virtual braid word"),
                            ("burau", cmd_burau, "Burau matrix of a virtual braid word")):
        sp = add(name, fn, help_)
        sp.add_argument("word")
        sp.add_argument("--n", type=int)
    sp = add("permrep", cmd_permrep, "permutation image of a flat 3-strand word")
    sp.add_argument("word")
    sp = add("linking", cmd_linking, "lk, lk_v and the a_i bounds")
    sp.add_argument("input")
    sp.add_argument("--n", type=int)
    sp = add("vfb", cmd_vfb, "check a VFB table file or print a standard construction")
    sp.add_argument("action", choices=["check", "make"])
    sp.add_argument("construction", help="JSON file, or trivial:M, constant:P0,P1,..., linear:M")
    sp = add("colorings", cmd_colorings, "number of VFB colorings of a flat word's closure")
    sp.add_argument("input")
    sp.add_argument("--vfb", required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--list", action="store_true", help="also print every coloring")
    sp = add("homology", cmd_homology, "VF or SF (co)homology of a VFB")
    sp.add_argument("--vfb", required=True)
    sp.add_argument("--complex", choices=["vf", "sf"], default="vf")
    sp.add_argument("--max-degree", type=int, default=2)
    sp.add_argument("--coeff", default="Z", help="Z or Zm")
    sp.add_argument("--cohomology", action="store_true")
    sp = add("cocycles", cmd_cocycles, "generators of the state-sum 2-cocycles")
    sp.add_argument("--vfb", required=True)
    sp.add_argument("--coeff", default="Z")
    sp = add("statesum", cmd_statesum, "cocycle state sum of a flat word's closure")
    sp.add_argument("input")
    sp.add_argument("--vfb", required=True)
    sp.add_argument("--cocycle", required=True)
    sp.add_argument("--n", type=int)
    sp = add("fuzz", cmd_fuzz, "check invariance under random relation rewrites")
    sp.add_argument("--target", choices=["matrix", "vc", "statesum"], required=True)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--steps", type=int, default=10)
    sp.add_argument("--max-strands", type=int, default=3)
    sp.add_argument("--max-length", type=int, default=8)
    sp.add_argument("--vfb")
    sp.add_argument("--cocycle")
    return p


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args, out)
    except (InputError, DiagramError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return code or 0


def main() -> None:
    sys.exit(run())
