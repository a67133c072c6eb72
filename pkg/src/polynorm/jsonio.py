"""Canonical JSON encoding of the values the CLI exchanges.

Serialization is deterministic: sorted object keys, compact separators,
and vertex lists already canonical from the geometry layer, so identical
inputs always produce byte-identical documents. Parsers canonicalize on
load and raise InputFormatError on any shape violation.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import InputFormatError
from .geometry import IntegralPolytope, canonical_hull
from .grothendieck import GrothendieckElement, NormDifferenceCertificate, element
from .laurent import LaurentPolynomial, _merged
from .normdecomp import NormDecomposition


def dumps_canonical(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _expect(cond: bool, message: str):
    if not cond:
        raise InputFormatError(message)


def polytope_to_obj(p: IntegralPolytope) -> dict:
    return {"dim": p.dim, "vertices": [list(v) for v in p.vertices]}


def polytope_from_obj(obj: Any) -> IntegralPolytope:
    _expect(isinstance(obj, dict), "polytope must be a JSON object")
    _expect(set(obj) == {"dim", "vertices"},
            'polytope object needs exactly the keys "dim" and "vertices"')
    dim = obj["dim"]
    _expect(isinstance(dim, int) and dim >= 0, '"dim" must be a nonnegative integer')
    verts = obj["vertices"]
    _expect(isinstance(verts, list) and verts, '"vertices" must be a nonempty list')
    for v in verts:
        _expect(isinstance(v, list) and len(v) == dim
                and all(isinstance(c, int) for c in v),
                f"vertex {v!r} is not a length-{dim} integer vector")
    return canonical_hull([tuple(v) for v in verts], dim)


def element_to_obj(x: GrothendieckElement) -> dict:
    return {"plus": polytope_to_obj(x.plus), "minus": polytope_to_obj(x.minus)}


def element_from_obj(obj: Any) -> GrothendieckElement:
    _expect(isinstance(obj, dict), "group element must be a JSON object")
    _expect(set(obj) == {"plus", "minus"},
            'group element needs exactly the keys "plus" and "minus"')
    return element(polytope_from_obj(obj["plus"]), polytope_from_obj(obj["minus"]))


def certificate_to_obj(cert: NormDifferenceCertificate) -> dict:
    return {"u": polytope_to_obj(cert.u), "v": polytope_to_obj(cert.v)}


def certificate_from_obj(obj: Any) -> NormDifferenceCertificate:
    _expect(isinstance(obj, dict), "certificate must be a JSON object")
    _expect(set(obj) == {"u", "v"}, 'certificate needs exactly the keys "u" and "v"')
    return NormDifferenceCertificate(u=polytope_from_obj(obj["u"]),
                                     v=polytope_from_obj(obj["v"]))


def decomposition_to_obj(dec: NormDecomposition) -> dict:
    return {"p": polytope_to_obj(dec.p), "q": polytope_to_obj(dec.q),
            "r": polytope_to_obj(dec.r), "verified": True}


def polynomial_to_obj(f: LaurentPolynomial, variables: list[str]) -> dict:
    return {"vars": list(variables),
            "terms": [{"exp": list(e), "coef": f.terms[e]} for e in sorted(f.terms)]}


def polynomial_from_obj(obj: Any) -> tuple[list[str], LaurentPolynomial]:
    _expect(isinstance(obj, dict), "polynomial must be a JSON object")
    _expect(set(obj) == {"vars", "terms"},
            'polynomial object needs exactly the keys "vars" and "terms"')
    names = obj["vars"]
    _expect(isinstance(names, list) and all(isinstance(s, str) for s in names),
            '"vars" must be a list of names')
    raw: dict = {}
    _expect(isinstance(obj["terms"], list), '"terms" must be a list')
    for t in obj["terms"]:
        _expect(isinstance(t, dict) and set(t) == {"exp", "coef"},
                'each term needs exactly the keys "exp" and "coef"')
        e = t["exp"]
        _expect(isinstance(e, list) and len(e) == len(names)
                and all(isinstance(c, int) for c in e),
                f"exponent {e!r} is not a length-{len(names)} integer vector")
        _expect(isinstance(t["coef"], int), "coefficients must be integers")
        key = tuple(e)
        raw[key] = raw.get(key, 0) + t["coef"]
    return list(names), _merged(len(names), raw)


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"invalid JSON: {exc}") from exc
