"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 domain error.

Examples::

    skeintorus mul "T(1,0)" "T(0,1)"
    skeintorus --format json pi "T(3,1)"
    skeintorus lens --matrix=-1,0,5,1 reduce "a(4)"
    skeintorus jw-expand 3 2 1 --eval-at 5
    echo "P(2;1,0)" | skeintorus eval -

An element argument that starts with ``[`` is read as JSON; ``-`` reads it
from stdin.  Put ``--`` before arguments that begin with a minus sign.
"""

from __future__ import annotations

import argparse
import cmath
import json
import sys

from .errors import DomainError
from .expr import ParseError, element_from_json, format_element, parse_and_eval
from .jones_wenzl import check_idempotent_defined, jw_expand, jw_trace
from .laurent import root_of_unity
from .lens import GluingMatrix, lens_reduce
from .skein import intersection_number, sk_embed, sk_unembed
from .solid_torus import st_act, st_pi

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN = 0, 2, 3


def parse_point(text: str) -> complex:
    """``root:r`` for ``exp(i pi / 2r)``, otherwise a complex literal (``i`` or ``j``)."""
    text = text.strip()
    if text.startswith("root:"):
        return root_of_unity(int(text[5:]))
    if text.startswith("exp(") and text.endswith(")"):
        # exp(i*pi/(2r)) shorthand with a numeric r
        inner = text[4:-1].replace(" ", "")
        prefix = "i*pi/(2*"
        if inner.startswith(prefix) and inner.endswith(")"):
            return cmath.exp(1j * cmath.pi / (2 * int(inner[len(prefix):-1])))
    return complex(text.replace("i", "j"))


def _read(arg: str, kind: str):
    text = sys.stdin.read() if arg == "-" else arg
    if text.lstrip().startswith("["):
        try:
            return element_from_json(json.loads(text), kind)
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise ParseError(f"malformed JSON element: {exc}", getattr(exc, "colno", 1)) from None
    return parse_and_eval(text, kind)


def _matrix(text: str) -> GluingMatrix:
    try:
        return GluingMatrix.parse(text)
    except ValueError:
        raise ParseError(f"--matrix expects four integers a,b,p,q, got {text!r}", 1) from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="skeintorus", description="Skein algebra of the torus calculator.")
    ap.add_argument("--format", choices=("text", "json"), default="text")
    ap.add_argument("--eval-at-t", metavar="Z", help="evaluate coefficients at t = Z (complex, or root:r)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="print the normal form of an element")
    p.add_argument("element")
    p.add_argument("--kind", choices=("skein", "nc", "solid"), default="skein")

    p = sub.add_parser("mul", help="multiply two elements")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--kind", choices=("skein", "nc"), default="skein")

    p = sub.add_parser("embed", help="skein element -> noncommutative torus")
    p.add_argument("element")

    p = sub.add_parser("unembed", help="symmetric noncommutative torus element -> skein")
    p.add_argument("element")

    p = sub.add_parser("pi", help="image in the solid torus")
    p.add_argument("element")

    p = sub.add_parser("act", help="act with a skein element on a solid-torus element")
    p.add_argument("element")
    p.add_argument("target")

    p = sub.add_parser("intersect", help="intersection number of two skein elements")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("lens", help="lens space computations")
    p.add_argument("--matrix", required=True, metavar="a,b,p,q")
    lsub = p.add_subparsers(dest="lens_command", required=True)
    r = lsub.add_parser("reduce", help="reduce 1 (x) u to the spanning set")
    r.add_argument("element")

    p = sub.add_parser("jw-expand", help="Jones-Wenzl decorated curve in the T basis")
    p.add_argument("n", type=int)
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--eval-at", type=int, metavar="r", help="evaluate at t = exp(i pi / 2r)")
    return ap


def run(args: argparse.Namespace, out) -> None:
    z = parse_point(args.eval_at_t) if args.eval_at_t else None
    cmd = args.command
    if cmd == "eval":
        result = _read(args.element, args.kind)
    elif cmd == "mul":
        result = _read(args.left, args.kind) * _read(args.right, args.kind)
    elif cmd == "embed":
        result = sk_embed(_read(args.element, "skein"))
    elif cmd == "unembed":
        result = sk_unembed(_read(args.element, "nc"))
    elif cmd == "pi":
        result = st_pi(_read(args.element, "skein"))
    elif cmd == "act":
        result = st_act(_read(args.element, "skein"), _read(args.target, "solid"))
    elif cmd == "intersect":
        result = intersection_number(_read(args.left, "skein"), _read(args.right, "skein"))
    elif cmd == "lens":
        result = lens_reduce(_matrix(args.matrix), _read(args.element, "solid"))
    elif cmd == "jw-expand":
        result = jw_expand(args.n, args.p, args.q)
        if args.eval_at is not None:
            check_idempotent_defined(args.n, args.eval_at)
            z = root_of_unity(args.eval_at)
            if args.format == "text":
                print(f"# trace (-1)^n [n+1] = {format_element(jw_trace(args.n), 'text', z)}", file=out)
    else:  # pragma: no cover - argparse enforces the choices
        raise AssertionError(cmd)
    print(format_element(result, args.format, z), file=out)


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        run(args, sys.stdout)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
