"""Command-line front end.

Exit status: 0 on success, 1 on input errors, 2 when a size cap is hit.
"""

from __future__ import annotations

import argparse
import sys

from .brpoly import DEFAULT_CAP, reduce, state_sum
from .compositions import CapExceeded, count_odd, count_residue
from .flowers import (
    PeriodicSpec,
    SpecError,
    UnsupportedSpec,
    build_flower,
    closed_form,
    face_class,
    parse_spec,
    periodic_face_class,
    recurrence_family,
)
from .poly import Poly3
from .ribbon import GraphParseError, StructuralError, boundary_components, parse_graph

EXIT_OK, EXIT_INPUT, EXIT_CAP = 0, 1, 2


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ribbonpoly", description="Bollobás–Riordan polynomials of ribbon graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ev = sub.add_parser("eval", help="polynomial of a ribbon v1 graph file")
    ev.add_argument("file")
    ev.add_argument("--method", choices=("auto", "statesum", "reduce"), default="auto")
    ev.add_argument("--cap", type=int, default=DEFAULT_CAP)
    ev.add_argument("--json", action="store_true")

    fl = sub.add_parser("flower", help="polynomial of a flower family")
    fl.add_argument("--spec", required=True)
    how = fl.add_mutually_exclusive_group()
    how.add_argument("--closed", action="store_true")
    how.add_argument("--statesum", action="store_true")
    fl.add_argument("--cap", type=int, default=DEFAULT_CAP)
    fl.add_argument("--json", action="store_true")

    fa = sub.add_parser("faces", help="face count and Z3 class of a flower")
    fa.add_argument("--spec", required=True)

    co = sub.add_parser("comp", help="count constrained compositions")
    co.add_argument("--n", type=int, required=True)
    co.add_argument("--p", type=int, required=True)
    co.add_argument("--i", type=int, required=True)
    co.add_argument("--modulus", type=int)
    co.add_argument("--residue", type=int)

    re_ = sub.add_parser("recurrence", help="table R_0..R_N of a flower family")
    re_.add_argument("--family", choices=("u", "t"), required=True)
    re_.add_argument("--max-n", type=int, required=True)
    return p


def _emit(poly: Poly3, as_json: bool, out) -> None:
    poly = poly.to_basis("X")
    print(poly.to_json() if as_json else poly.render(), file=out)


def _cmd_eval(args, out) -> None:
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {args.file}: {exc.strerror}") from None
    graph = parse_graph(text)
    if args.method == "statesum":
        poly = state_sum(graph, cap=args.cap)
    else:
        poly = reduce(graph, cap=args.cap)
    _emit(poly, args.json, out)


def _cmd_flower(args, out) -> None:
    spec = parse_spec(args.spec)
    if isinstance(spec, PeriodicSpec):
        if args.closed:
            raise InputError("no closed form for periodic flowers")
        poly = state_sum(build_flower(spec), cap=args.cap)
    elif args.statesum:
        poly = state_sum(build_flower(spec), cap=args.cap)
    else:
        try:
            poly = closed_form(spec)
        except UnsupportedSpec as exc:
            if args.closed:
                raise InputError(str(exc)) from None
            poly = state_sum(build_flower(spec), cap=args.cap)
    _emit(poly, args.json, out)


def _cmd_faces(args, out) -> None:
    spec = parse_spec(args.spec)
    if isinstance(spec, PeriodicSpec):
        cls = periodic_face_class(spec)
    elif spec.layout == "separate" and len(spec.sectors) > 1:
        print(f"F={boundary_components(build_flower(spec))}", file=out)
        return
    else:
        cls = face_class(spec.signs)
    print(f"F={cls.faces} class={int(cls)}", file=out)


def _cmd_comp(args, out) -> None:
    if (args.modulus is None) != (args.residue is None):
        raise InputError("--modulus and --residue must be given together")
    if args.modulus is None:
        value = count_odd(args.n, args.p, args.i)
    else:
        try:
            value = count_residue(args.n, args.p, args.i, args.modulus, args.residue)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    print(value, file=out)


def _cmd_recurrence(args, out) -> None:
    if args.max_n < 0:
        raise InputError("--max-n must be non-negative")
    for n, poly in enumerate(recurrence_family(args.family, args.max_n)):
        print(f"R_{n} = {poly.render()}", file=out)


_COMMANDS = {
    "eval": _cmd_eval,
    "flower": _cmd_flower,
    "faces": _cmd_faces,
    "comp": _cmd_comp,
    "recurrence": _cmd_recurrence,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _build_parser().parse_args(argv)
        _COMMANDS[args.command](args, out)
    except CapExceeded as exc:
        print(f"error: {exc}; use reduce or a closed form", file=err)
        return EXIT_CAP
    except GraphParseError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except (InputError, SpecError, StructuralError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
