"""Command line entry point: ``cycert verify``, ``basis``, ``char-variety``, ``plethysm``, ``reps``.

Exit codes: 0 all checks passed, 1 a computed value disagrees with the
expected one, 2 the input was rejected.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import lie, pipeline
from .ideal import ContractError
from .jacobian import Arrangement, load_arrangement
from .linalg import parse_fraction
from .poly import jacobian_ring

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def parse_order(text: str | None):
    if not text:
        return None
    ring = jacobian_ring()
    names = [s.strip() for s in text.split(",") if s.strip()]
    if sorted(names) != sorted(ring.names):
        raise InputError(f"--order must list each of {', '.join(ring.names)} once")
    return [ring.index(n) for n in names]


def build_arrangement(args) -> Arrangement:
    prec = parse_order(getattr(args, "order", None))
    try:
        if getattr(args, "matrix", None):
            A, lams = load_arrangement(args.matrix)
            return Arrangement(A, lams, prec)
        lams = [parse_fraction(v) for v in (args.vandermonde or "1,2,3,4,5,6,7,8").split(",")]
        return Arrangement.vandermonde(lams, prec)
    except (ValueError, OSError, ZeroDivisionError) as exc:
        raise InputError(str(exc)) from exc


def emit(obj, out: str | None):
    text = json.dumps(obj, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args) -> int:
    arr = build_arrangement(args)
    cert, failures = pipeline.run_verify(arr, default_order=args.order is None)
    emit(cert, args.out)
    for f in failures:
        print(f"FAILED {f}", file=sys.stderr)
    return EXIT_MISMATCH if failures else EXIT_OK


def cmd_basis(args) -> int:
    arr = build_arrangement(args)
    levels = [args.p] if args.p is not None else range(4)
    out = {"arrangement": pipeline.arrangement_echo(arr),
           "bases": {str(p): [arr.ring.format_monomial(m) for m in arr.basis(p)] for p in levels}}
    emit(out, args.out)
    return EXIT_OK


def cmd_char_variety(args) -> int:
    arr = build_arrangement(args)
    exp = pipeline.expected_x0() if arr.is_reference() else None
    stage = pipeline.stage_char_variety(arr, exp, args.k)
    emit(stage, args.out)
    return EXIT_MISMATCH if pipeline.failed(stage) else EXIT_OK


def cmd_plethysm(args) -> int:
    arr = build_arrangement(args)
    exp = pipeline.expected_x0() if arr.is_reference() else None
    stage = pipeline.stage_plethysm(arr, exp)
    emit(stage, args.out)
    return EXIT_MISMATCH if pipeline.failed(stage) else EXIT_OK


def _decomposition(alg, chi):
    return [{"weight": lie.format_weight(alg, w), "multiplicity": m, "dim": lie.weyl_dim(alg, w)}
            for w, m in lie.decompose_character(alg, chi)]


def cmd_reps(args) -> int:
    try:
        task = args.task
        if task == "classify":
            if args.dim is None:
                raise InputError("classify needs --dim")
            if not args.symplectic:
                found = lie.classify_semisimple_irreps(args.dim, symplectic=False)
                out = {"entries": [pipeline.canonical(a, w) for a, w in found]}
            else:
                out = pipeline.classification_report(args.dim, proper=not args.include_full)
            emit(out, args.out)
            return EXIT_OK
        if not args.weights:
            raise InputError(f"reps {task} needs a weight such as A5:[0,0,1,0,0]")
        alg, w = lie.parse_weight(args.weights[0])
        if task == "dim":
            out = {"weight": args.weights[0], "dim": lie.weyl_dim(alg, w)}
        elif task in ("sym2", "wedge2"):
            fn = lie.sym2_character if task == "sym2" else lie.wedge2_character
            dec = lie.decompose_character(alg, fn(lie.weight_system(alg, w, args.cap)))
            out = {"weight": args.weights[0],
                   task: [{"weight": lie.format_weight(alg, u), "multiplicity": m, "dim": lie.weyl_dim(alg, u)}
                          for u, m in dec],
                   "trivial_summand": any(not any(u) for u, _ in dec)}
        elif task == "tensor":
            if len(args.weights) != 2:
                raise InputError("tensor needs two weights")
            alg2, w2 = lie.parse_weight(args.weights[1])
            if alg2 != alg:
                raise InputError("tensor factors must be weights of the same algebra")
            chi = lie.tensor_character(lie.weight_system(alg, w, args.cap), lie.weight_system(alg, w2, args.cap))
            out = {"weights": args.weights, "tensor": _decomposition(alg, chi)}
        elif task == "center":
            c = [parse_fraction(v) for v in args.cocharacter.split(",")] if args.cocharacter else None
            if c is None:
                if alg != (lie.SimpleType("A", 5),):
                    raise InputError("--cocharacter is required except for A5")
                c = [1, 2, 3, 2, 1]
            got = lie.cocharacter_weights(alg, w, c)
            out = {"weight": args.weights[0], "cocharacter": [str(v) for v in c],
                   "multiplicities": {str(k): v for k, v in got.items()}}
        elif task == "form":
            out = {"weight": args.weights[0], "type": lie.is_symplectic(alg, w, args.cap)}
        else:  # pragma: no cover - argparse restricts choices
            raise InputError(task)
    except lie.RepresentationError as exc:
        raise InputError(str(exc)) from exc
    emit(out, args.out)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cycert", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def arrangement_flags(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--vandermonde", help="eight comma-separated rationals (default 1,...,8)")
        g.add_argument("--matrix", help="JSON file with 'vandermonde' or 'matrix'")
        sp.add_argument("--order", help="variable precedence, e.g. x8,x1,...,x7,y1,...,y4")
        sp.add_argument("--out", help="write JSON here instead of stdout")

    sp = sub.add_parser("verify", help="run the whole certificate pipeline")
    arrangement_flags(sp)
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("basis", help="invariant bases of R_p")
    arrangement_flags(sp)
    sp.add_argument("--p", type=int, choices=range(4))
    sp.set_defaults(fn=cmd_basis)

    sp = sub.add_parser("char-variety", help="characteristic ideal and its Hilbert data")
    arrangement_flags(sp)
    sp.add_argument("--k", type=int, choices=(1, 2), default=1)
    sp.set_defaults(fn=cmd_char_variety)

    sp = sub.add_parser("plethysm", help="iterated images on S^2(R)")
    arrangement_flags(sp)
    sp.set_defaults(fn=cmd_plethysm)

    sp = sub.add_parser("reps", help="representation theory")
    sp.add_argument("task", choices=("dim", "sym2", "wedge2", "tensor", "center", "form", "classify"))
    sp.add_argument("weights", nargs="*", help="e.g. A5:[0,0,1,0,0] or A1:[1]+C2:[2,0]")
    sp.add_argument("--dim", type=int)
    sp.add_argument("--symplectic", action="store_true")
    sp.add_argument("--include-full", action="store_true", help="keep the defining module of sp(dim)")
    sp.add_argument("--cocharacter", help="comma-separated pairing with the Dynkin labels")
    sp.add_argument("--cap", type=int, default=lie.DEFAULT_CAP)
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_reps)
    return p


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.fn(args)
    except (InputError, ContractError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
