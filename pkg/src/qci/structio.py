"""JSON file formats for presentations and constructed structures.

Two layers of validation on load:
  * shape errors (missing keys, wrong types, unparseable scalars or keys)
    raise FileSyntaxError;
  * well-typed files whose contents break a structural invariant (witness
    equations, boundary coefficients of g, non-monomial antipode rows, ...)
    raise FileSemanticError.

Loading does not re-derive the coefficient tables from the witness: a file
whose g, delta and s entries were perturbed consistently is accepted here
and left for the verifier to reject.
"""

from __future__ import annotations

import json

from .algebra import Presentation, parse_vector_key, vector_key
from .builder import BfaStructure, Witness, check_witness
from .errors import (
    FileSemanticError,
    FileSyntaxError,
    QciError,
    WitnessInvalidError,
)
from .permutations import Permutation
from .scalars import Field, make_field

FORMAT_VERSION = 1


def field_to_json(field: Field) -> dict:
    kind = field.kind
    out = {"kind": kind}
    if kind == "prime":
        out["p"] = field.p
    elif kind == "cyclotomic":
        out["m"] = field.m
    return out


def field_from_json(obj) -> Field:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise FileSyntaxError("field block must be an object with a 'kind'")
    kind = obj["kind"]
    try:
        if kind == "rational":
            return make_field("rational")
        if kind == "prime":
            return make_field("prime", int(obj["p"]))
        if kind == "cyclotomic":
            return make_field("cyclotomic", int(obj["m"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise FileSyntaxError(f"bad field parameters: {exc}") from None
    except QciError as exc:
        raise FileSemanticError(str(exc)) from None
    raise FileSyntaxError(f"unknown field kind {kind!r}")


def presentation_to_json(P: Presentation) -> dict:
    return {
        "field": field_to_json(P.field),
        "n": P.n,
        "a": list(P.a),
        "q": [[str(P.q[i][j]) for j in range(P.n)] for i in range(P.n)],
    }


def presentation_from_json(obj) -> Presentation:
    if not isinstance(obj, dict):
        raise FileSyntaxError("presentation must be an object")
    for key in ("field", "n", "a", "q"):
        if key not in obj:
            raise FileSyntaxError(f"presentation is missing {key!r}")
    field = field_from_json(obj["field"])
    try:
        n = int(obj["n"])
        a = [int(x) for x in obj["a"]]
        rows = obj["q"]
        if not isinstance(rows, list) or len(rows) != n:
            raise FileSyntaxError("q must be an n-by-n array of scalar strings")
        if len(a) != n:
            raise FileSyntaxError("a must have n entries")
        q = []
        for row in rows:
            if not isinstance(row, list) or len(row) != n:
                raise FileSyntaxError("q must be an n-by-n array of scalar strings")
            q.append([field.parse(str(entry)) for entry in row])
    except FileSyntaxError:
        raise
    except (TypeError, ValueError) as exc:
        raise FileSyntaxError(f"bad presentation data: {exc}") from None
    except QciError as exc:
        raise FileSyntaxError(f"bad scalar in presentation: {exc}") from None
    try:
        return Presentation(field, a, q)
    except QciError as exc:
        raise FileSemanticError(str(exc)) from None


def save_presentation(P: Presentation, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(presentation_to_json(P), fh, indent=2)
        fh.write("\n")


def load_presentation(path: str) -> Presentation:
    return presentation_from_json(_read_json(path))


def _read_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FileSyntaxError(f"not valid JSON: {exc}") from None
    except OSError as exc:
        raise FileSyntaxError(f"cannot read {path}: {exc}") from None


def structure_to_json(B: BfaStructure) -> dict:
    P = B.presentation
    out = {
        "format": FORMAT_VERSION,
        "presentation": presentation_to_json(P),
        "pi": list(B.witness.pi.images),
        "c": [str(c) for c in B.witness.c],
        "g": {vector_key(v): str(B.g[v]) for v in P.basis()},
        "delta": {
            vector_key(v): [
                [vector_key(u), vector_key(w), str(c)] for u, w, c in B.delta[v]
            ]
            for v in P.basis()
        },
        "s": {
            vector_key(v): [vector_key(B.s_map[v][0]), str(B.s_map[v][1])]
            for v in P.basis()
        },
    }
    return out


def save_structure(B: BfaStructure, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(structure_to_json(B), fh, indent=2)
        fh.write("\n")


def _parse_key(text, n: int) -> tuple:
    try:
        return parse_vector_key(str(text), n)
    except ValueError as exc:
        raise FileSyntaxError(str(exc)) from None


def structure_from_json(obj) -> BfaStructure:
    if not isinstance(obj, dict):
        raise FileSyntaxError("structure must be an object")
    for key in ("presentation", "pi", "c", "g", "delta", "s"):
        if key not in obj:
            raise FileSyntaxError(f"structure is missing {key!r}")
    P = presentation_from_json(obj["presentation"])
    field = P.field
    n = P.n

    try:
        pi = Permutation(tuple(int(x) for x in obj["pi"]))
    except (TypeError, ValueError) as exc:
        raise FileSyntaxError(f"bad pi: {exc}") from None
    except QciError as exc:
        raise FileSemanticError(f"bad pi: {exc}") from None
    if pi.n != n:
        raise FileSemanticError("pi must permute exactly the generators")

    try:
        c = tuple(field.parse(str(entry)) for entry in obj["c"])
    except QciError as exc:
        raise FileSyntaxError(f"bad c entry: {exc}") from None
    if len(c) != n:
        raise FileSemanticError("c must have one entry per generator")

    witness = Witness(pi, c)
    try:
        check_witness(P, witness)
    except WitnessInvalidError as exc:
        raise FileSemanticError(str(exc)) from None

    basis = P.basis()

    g_obj = obj["g"]
    if not isinstance(g_obj, dict):
        raise FileSyntaxError("g must be an object keyed by exponent vectors")
    g = {}
    for key, val in g_obj.items():
        v = _parse_key(key, n)
        if not P.in_basis(v):
            raise FileSemanticError(f"g key {key!r} is outside the basis")
        try:
            g[v] = field.parse(str(val))
        except QciError as exc:
            raise FileSyntaxError(f"bad g[{key}]: {exc}") from None
    missing = [v for v in basis if v not in g]
    if missing:
        raise FileSemanticError(f"g is missing {vector_key(missing[0])}")
    one = field.one
    for v in basis:
        if g[v].is_zero():
            raise FileSemanticError(f"g[{vector_key(v)}] must be nonzero")
    if g[P.zero_vec] != one or g[P.top] != one:
        raise FileSemanticError("g must be 1 at the zero and top vectors")

    delta_obj = obj["delta"]
    if not isinstance(delta_obj, dict):
        raise FileSyntaxError("delta must be an object keyed by exponent vectors")
    delta = {}
    for key, rows in delta_obj.items():
        v = _parse_key(key, n)
        if not P.in_basis(v):
            raise FileSemanticError(f"delta key {key!r} is outside the basis")
        if not isinstance(rows, list):
            raise FileSyntaxError(f"delta[{key}] must be a list of terms")
        terms = []
        for row in rows:
            if not isinstance(row, list) or len(row) != 3:
                raise FileSyntaxError(f"delta[{key}] terms must be [u, w, coeff]")
            u = _parse_key(row[0], n)
            w = _parse_key(row[1], n)
            if not P.in_basis(u) or not P.in_basis(w):
                raise FileSemanticError(f"delta[{key}] has a term outside the basis")
            try:
                coeff = field.parse(str(row[2]))
            except QciError as exc:
                raise FileSyntaxError(f"bad coefficient in delta[{key}]: {exc}") from None
            if coeff.is_zero():
                raise FileSemanticError(f"delta[{key}] has a zero coefficient")
            terms.append((u, w, coeff))
        delta[v] = terms
    missing = [v for v in basis if v not in delta]
    if missing:
        raise FileSemanticError(f"delta is missing {vector_key(missing[0])}")

    zero = P.zero_vec
    top = P.top
    if sorted(delta[zero]) != [(zero, zero, one)]:
        raise FileSemanticError("delta at the zero vector must be 1 (x) 1")
    for v in basis:
        if v == zero or v == top:
            continue
        expected = sorted([(zero, v, one), (v, zero, one)])
        if sorted(delta[v]) != expected:
            raise FileSemanticError(
                f"delta[{vector_key(v)}] must be primitive below the top vector"
            )
    expected_top = {}
    for u in basis:
        comp = tuple(t - x for t, x in zip(top, u))
        expected_top[(comp, pi.act(u))] = g[u]
    actual_top = {}
    for u, w, coeff in delta[top]:
        if (u, w) in actual_top:
            raise FileSemanticError("delta at the top vector repeats a tensor term")
        actual_top[(u, w)] = coeff
    if actual_top != expected_top:
        raise FileSemanticError("delta at the top vector disagrees with g")

    s_obj = obj["s"]
    if not isinstance(s_obj, dict):
        raise FileSyntaxError("s must be an object keyed by exponent vectors")
    s_map = {}
    for key, row in s_obj.items():
        v = _parse_key(key, n)
        if not P.in_basis(v):
            raise FileSemanticError(f"s key {key!r} is outside the basis")
        if not isinstance(row, list) or len(row) != 2:
            raise FileSyntaxError(f"s[{key}] must be [image, coeff]")
        img = _parse_key(row[0], n)
        if not P.in_basis(img):
            raise FileSemanticError(f"s[{key}] image is outside the basis")
        try:
            coeff = field.parse(str(row[1]))
        except QciError as exc:
            raise FileSyntaxError(f"bad coefficient in s[{key}]: {exc}") from None
        s_map[v] = (img, coeff)
    missing = [v for v in basis if v not in s_map]
    if missing:
        raise FileSemanticError(f"s is missing {vector_key(missing[0])}")
    for v in basis:
        img, coeff = s_map[v]
        if coeff.is_zero():
            raise FileSemanticError(f"s[{vector_key(v)}] has a zero coefficient")
        if img != pi.act(v):
            raise FileSemanticError(f"s[{vector_key(v)}] must land on the pi-image")
    if s_map[top] != (top, one):
        raise FileSemanticError("s must fix the top monomial with coefficient 1")

    return BfaStructure(P, witness, g, delta, s_map)


def load_structure(path: str) -> BfaStructure:
    return structure_from_json(_read_json(path))
