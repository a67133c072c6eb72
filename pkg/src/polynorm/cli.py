"""Batch command line: one JSON document out per invocation.

Exit codes: 0 for any mathematically answered request (including negative
answers such as "is_norm": false), 2 for usage and input-format problems,
3 when the brute-force search cap is exceeded, 4 for precondition
violations, 5 for internal certificate failures. Errors are reported as
{"error": code, "message": text} on stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import jsonio
from .algebra import is_symmetric, minkowski_sum, mirror, symmetric_up_to_translation
from .errors import (DimensionMismatch, EmptyPolytope, IdentityCheckFailed,
                     InputFormatError, InvalidParameter, NotSymmetric,
                     ParseError, PolytopeError, SearchCapExceeded,
                     SliceMismatch, UnknownVariable, ZeroPolynomial)
from .geometry import equal, lattice_points
from .grothendieck import element_eq, is_symmetric_element, norm_difference
from .laurent import parse_laurent
from .normdecomp import decompose, is_integral_norm, verify_norm_identity
from .selftest import run_selftest
from .svg import render_svg

_ERROR_CODES: list[tuple[type, str, int]] = [
    (SearchCapExceeded, "search_cap_exceeded", 3),
    (IdentityCheckFailed, "identity_check_failed", 5),
    (UnknownVariable, "unknown_variable", 2),
    (ParseError, "parse_error", 2),
    (InputFormatError, "input_format", 2),
    (ZeroPolynomial, "zero_polynomial", 4),
    (NotSymmetric, "not_symmetric", 4),
    (EmptyPolytope, "empty_polytope", 4),
    (DimensionMismatch, "dimension_mismatch", 4),
    (InvalidParameter, "invalid_parameter", 4),
    (SliceMismatch, "slice_mismatch", 4),
]


def _read_arg(arg: str) -> str:
    """Inline JSON (starts with '{'), '-' for stdin, anything else a path."""
    if arg.lstrip().startswith("{"):
        return arg
    if arg == "-":
        return sys.stdin.read()
    try:
        return Path(arg).read_text()
    except OSError as exc:
        raise InputFormatError(f"cannot read {arg!r}: {exc}") from exc


def _polytope_arg(arg: str):
    return jsonio.polytope_from_obj(jsonio.loads(_read_arg(arg)))


def _element_arg(arg: str):
    return jsonio.element_from_obj(jsonio.loads(_read_arg(arg)))


def _cmd_sum(args):
    p, q = _polytope_arg(args.p), _polytope_arg(args.q)
    res = minkowski_sum(p, q)
    return jsonio.polytope_to_obj(res), [("P", p), ("Q", q), ("P+Q", res)]


def _cmd_mirror(args):
    p = _polytope_arg(args.p)
    m = mirror(p)
    return jsonio.polytope_to_obj(m), [("P", p), ("-P", m)]


def _cmd_equal(args):
    p, q = _polytope_arg(args.p), _polytope_arg(args.q)
    return {"equal": equal(p, q)}, [("P", p), ("Q", q)]


def _cmd_symmetric(args):
    p = _polytope_arg(args.p)
    t = symmetric_up_to_translation(p)
    return {"symmetric": is_symmetric(p),
            "translation": list(t) if t is not None else None}, [("P", p)]


def _cmd_decompose(args):
    p = _polytope_arg(args.p)
    dec = decompose(p)
    return (jsonio.decomposition_to_obj(dec),
            [("P", dec.p), ("Q", dec.q), ("R", dec.r)])


def _cmd_is_norm(args):
    p = _polytope_arg(args.p)
    witness = is_integral_norm(p, cap=args.cap)
    doc = {"is_norm": witness is not None,
           "witness": jsonio.polytope_to_obj(witness) if witness is not None else None,
           "lattice_point_count": len(lattice_points(p))}
    drawables = [("P", p)]
    if witness is not None:
        drawables.append(("witness", witness))
    return doc, drawables


def _cmd_verify(args):
    obj = jsonio.loads(_read_arg(args.doc))
    if not isinstance(obj, dict):
        raise InputFormatError("certificate document must be a JSON object")
    if {"p", "q", "r"} <= set(obj):
        p = jsonio.polytope_from_obj(obj["p"])
        q = jsonio.polytope_from_obj(obj["q"])
        r = jsonio.polytope_from_obj(obj["r"])
        valid = verify_norm_identity(p, q, r)
        return ({"kind": "decomposition", "valid": valid},
                [("P", p), ("Q", q), ("R", r)])
    if {"element", "certificate"} <= set(obj):
        x = jsonio.element_from_obj(obj["element"])
        cert = jsonio.certificate_from_obj(obj["certificate"])
        lhs = minkowski_sum(x.plus, minkowski_sum(cert.v, mirror(cert.v)))
        rhs = minkowski_sum(x.minus, minkowski_sum(cert.u, mirror(cert.u)))
        valid = equal(lhs, rhs)
        return ({"kind": "norm_difference", "valid": valid},
                [("plus", x.plus), ("minus", x.minus), ("u", cert.u), ("v", cert.v)])
    raise InputFormatError(
        'expected a decomposition ("p","q","r") or a norm-difference '
        '("element","certificate") document')


def _cmd_newton(args):
    text = _read_arg(args.poly)
    if text.lstrip().startswith("{"):
        names, f = jsonio.polynomial_from_obj(jsonio.loads(text))
    else:
        if args.vars is None:
            raise InputFormatError("expression input needs --vars")
        names = [s for s in args.vars.split(",") if s]
        f = parse_laurent(text, names)
    poly = newton = None
    from .laurent import newton_polytope  # local to keep module import light
    newton = newton_polytope(f)
    return jsonio.polytope_to_obj(newton), [("newton", newton)]


def _cmd_group_eq(args):
    x, y = _element_arg(args.x), _element_arg(args.y)
    return ({"equal": element_eq(x, y)},
            [("X.plus", x.plus), ("X.minus", x.minus),
             ("Y.plus", y.plus), ("Y.minus", y.minus)])


def _cmd_norm_diff(args):
    x = _element_arg(args.x)
    cert = norm_difference(x)
    doc = {"element": jsonio.element_to_obj(x),
           "certificate": jsonio.certificate_to_obj(cert),
           "verified": True}
    return doc, [("plus", x.plus), ("minus", x.minus), ("u", cert.u), ("v", cert.v)]


def _cmd_selftest(args):
    return run_selftest(seed=args.seed), []


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polynorm",
        description="Exact integral-polytope arithmetic with certified "
                    "norm decompositions. Inputs are inline JSON, file "
                    "paths, or '-' for stdin.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, svg=True):
        sp.add_argument("--out", metavar="PATH", help="also write the JSON result to PATH")
        if svg:
            sp.add_argument("--svg", metavar="PATH",
                            help="render a 2-D drawing of the result to PATH")

    sp = sub.add_parser("sum", help="Minkowski sum of two polytopes")
    sp.add_argument("p"), sp.add_argument("q"), common(sp)
    sp.set_defaults(func=_cmd_sum)

    sp = sub.add_parser("mirror", help="pointwise negation of a polytope")
    sp.add_argument("p"), common(sp)
    sp.set_defaults(func=_cmd_mirror)

    sp = sub.add_parser("equal", help="exact equality of two polytopes")
    sp.add_argument("p"), sp.add_argument("q"), common(sp)
    sp.set_defaults(func=_cmd_equal)

    sp = sub.add_parser("symmetric", help="central symmetry (exact and up to translation)")
    sp.add_argument("p"), common(sp)
    sp.set_defaults(func=_cmd_symmetric)

    sp = sub.add_parser("decompose",
                        help="certified q, r with p + q + mirror(q) = r + mirror(r)")
    sp.add_argument("p"), common(sp)
    sp.set_defaults(func=_cmd_decompose)

    sp = sub.add_parser("is-norm", help="exhaustive search for q with q + mirror(q) = p")
    sp.add_argument("p")
    sp.add_argument("--cap", type=int, default=20,
                    help="lattice-point cap for the search (default 20)")
    common(sp)
    sp.set_defaults(func=_cmd_is_norm)

    sp = sub.add_parser("verify", help="re-check a certificate emitted by "
                                       "decompose or norm-diff")
    sp.add_argument("doc"), common(sp)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("newton", help="Newton polytope of a Laurent polynomial")
    sp.add_argument("poly")
    sp.add_argument("--vars", metavar="x,y,z",
                    help="variable names for expression input")
    common(sp)
    sp.set_defaults(func=_cmd_newton)

    sp = sub.add_parser("group-eq", help="equality in the polytope Grothendieck group")
    sp.add_argument("x"), sp.add_argument("y"), common(sp)
    sp.set_defaults(func=_cmd_group_eq)

    sp = sub.add_parser("norm-diff",
                        help="write a symmetric group element as a difference of norms")
    sp.add_argument("x"), common(sp)
    sp.set_defaults(func=_cmd_norm_diff)

    sp = sub.add_parser("selftest", help="seeded randomized self-check battery")
    sp.add_argument("--seed", type=int, default=0)
    common(sp, svg=False)
    sp.set_defaults(func=_cmd_selftest)

    return parser


def _fail(code_name: str, message: str, code: int) -> int:
    sys.stderr.write(jsonio.dumps_canonical({"error": code_name, "message": message}))
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage/help
        return int(exc.code or 0)
    try:
        doc, drawables = args.func(args)
        svg_path = getattr(args, "svg", None)
        if svg_path:
            Path(svg_path).write_text(render_svg(drawables))
    except PolytopeError as exc:
        for klass, name, code in _ERROR_CODES:
            if isinstance(exc, klass):
                return _fail(name, str(exc), code)
        return _fail("error", str(exc), 4)
    text = jsonio.dumps_canonical(doc)
    sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(text)
    if isinstance(doc, dict) and doc.get("ok") is False:
        return 5
    return 0


if __name__ == "__main__":
    sys.exit(main())
