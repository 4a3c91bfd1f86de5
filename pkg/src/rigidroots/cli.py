"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .coxeter import coxeter_w, eval_word, format_word, reflection_root, reflection_root_symbolic
from .errors import InvariantViolation, UsageError
from .lattice_words import crossing_word
from .rank2_roots import LatticeVector, q_form
from .reduction import reduce
from .svg import render_svg
from .verify import run_check, run_lemmas

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

COMMANDS = ("word", "reduce", "root", "check", "lemmas", "svg")
_NEEDS_VECTOR = {"word", "reduce", "root", "svg"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rigidroots", description="Rigid reflections and roots of W(m).")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("-m", type=int, default=None, help="Coxeter label m >= 2")
    p.add_argument("--bound", type=int, default=None, help="box size for check / lemmas")
    p.add_argument("--depth", type=int, default=6, help="sequence depth for lemmas")
    p.add_argument("--workers", type=int, default=1, help="processes for check")
    p.add_argument("--symbolic", action="store_true", help="root as polynomials in x")
    p.add_argument("--matrix", action="store_true", help="also print the group element")
    p.add_argument("-o", "--output", type=Path, default=None, help="SVG destination")
    p.add_argument("--json", type=Path, default=None, help="write a JSON report")
    p.add_argument("coords", nargs="*", type=int, metavar="a b")
    return p


def _need_m(args) -> int:
    if args.m is None:
        raise UsageError(f"{args.command} needs -m")
    if args.m < 2:
        raise UsageError("m must be >= 2")
    return args.m


def _vector(args) -> LatticeVector:
    if len(args.coords) != 2:
        raise UsageError(f"{args.command} takes exactly two coordinates a b")
    return LatticeVector(*args.coords)


def _write_json(path: Path | None, text: str, out) -> None:
    """Write ``text`` to ``path``; the path "-" means the output stream."""
    if path is None:
        return
    if str(path) == "-":
        print(text, file=out)
        return
    try:
        path.write_text(text + "\n")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from exc


def cmd_word(args, out) -> int:
    v = _vector(args)
    w = crossing_word(v)
    print(format_word(w), file=out)
    if args.matrix:
        print(eval_word(coxeter_w(_need_m(args)), w).to_text(), file=out)
    return EXIT_OK


def cmd_reduce(args, out) -> int:
    m = _need_m(args)
    trace = reduce(_vector(args), m)
    print(f"m={m} start {trace.start} Q={q_form(trace.start, m)}", file=out)
    for st in trace.steps:
        flag = " swapped" if st.swapped else ""
        print(
            f"  {st.input} -> {st.output}  n={st.n} kappa={st.kappa} "
            f"{st.branch.value} Q {st.q_before} -> {st.q_after}{flag}",
            file=out,
        )
    print(
        f"result {trace.result} ({trace.result_class}) after {len(trace.steps)} steps",
        file=out,
    )
    _write_json(args.json, json.dumps(trace.to_dict(), indent=2), out)
    return EXIT_OK


def cmd_root(args, out) -> int:
    v = _vector(args)
    w = crossing_word(v)
    if args.symbolic:
        coords = reflection_root_symbolic(w)
        print(", ".join(c.to_text() for c in coords), file=out)
        return EXIT_OK
    m = _need_m(args)
    root = reflection_root(coxeter_w(m), w)
    print(", ".join(str(c) for c in root), file=out)
    for k, c in enumerate(root, start=1):
        print(f"  alpha_{k}: {c.to_text()}", file=out)
    return EXIT_OK


def cmd_check(args, out) -> int:
    m = _need_m(args)
    bound = 30 if args.bound is None else args.bound
    rep = run_check(m, bound, workers=args.workers)
    print(
        f"m={m} bound={bound}: {rep.pairs_checked} vectors, "
        f"{len(rep.surjectivity_failures)} surjectivity failures, "
        f"{len(rep.descent_violations)} descent violations",
        file=out,
    )
    print(
        f"reduced roots {rep.reduced_roots}, distinct images {rep.image_size}, "
        f"collisions {len(rep.collisions)}",
        file=out,
    )
    for u, v in rep.collisions:
        print(f"  collision {u} {v}", file=out)
    if rep.family_match is not None:
        print(f"closed-form family {'matches' if rep.family_match else 'DIFFERS'}", file=out)
    print(f"elapsed {rep.elapsed:.2f}s", file=out)
    _write_json(args.json, rep.to_json(), out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_lemmas(args, out) -> int:
    m = _need_m(args)
    bound = 25 if args.bound is None else args.bound
    rep = run_lemmas(m, args.depth, bound)
    for name, fails in rep.failures.items():
        status = "pass" if not fails else f"FAIL {fails[:5]}"
        print(f"{name:10s} {status}", file=out)
    _write_json(args.json, rep.to_json(), out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_svg(args, out) -> int:
    text = render_svg(_vector(args))
    if args.output is None:
        out.write(text)
        return EXIT_OK
    try:
        args.output.write_text(text)
    except OSError as exc:
        raise UsageError(f"cannot write {args.output}: {exc}") from exc
    return EXIT_OK


_HANDLERS = {
    "word": cmd_word,
    "reduce": cmd_reduce,
    "root": cmd_root,
    "check": cmd_check,
    "lemmas": cmd_lemmas,
    "svg": cmd_svg,
}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_intermixed_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.command not in _NEEDS_VECTOR and args.coords:
        print(f"rigidroots: {args.command} takes no coordinates", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _HANDLERS[args.command](args, out)
    except UsageError as exc:
        print(f"rigidroots: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"rigidroots: invariant violated: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
