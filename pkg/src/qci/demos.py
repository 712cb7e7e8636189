"""Two built-in worked examples, parametrized by field and by the unit b.

Both live on three generators with all exponents 2.  The first is the
symmetric cycle presentation; the second twists two of the commutation
units by a sign, which makes the Nakayama data nontrivial and forces
fourth roots of unity into the witness scalars.
"""

from __future__ import annotations

from .algebra import Presentation
from .builder import BfaStructure, Witness, build_structure
from .errors import NotInFieldError, QciError
from .permutations import Permutation
from .scalars import Field, make_field

EXAMPLE_IDS = ("6.9", "6.10")


def default_field() -> Field:
    return make_field("cyclotomic", 8)


def _unit(field: Field, b):
    if b is None:
        if field.kind == "cyclotomic":
            return field.zeta
        raise QciError("a value for b is required over this field")
    val = field.parse(b) if isinstance(b, str) else b
    if val.is_zero():
        raise QciError("b must be a nonzero unit")
    return val


def example_presentation(example_id: str, field: Field | None = None, b=None) -> Presentation:
    if field is None:
        field = default_field()
    if example_id not in EXAMPLE_IDS:
        raise QciError(f"unknown example {example_id!r}; choose from {EXAMPLE_IDS}")
    bb = _unit(field, b)
    binv = bb.inverse()
    one = field.one
    if example_id == "6.9":
        q = [
            [one, bb, binv],
            [binv, one, bb],
            [bb, binv, one],
        ]
    else:
        q = [
            [one, bb, binv],
            [binv, one, -bb],
            [bb, -binv, one],
        ]
    return Presentation(field, [2, 2, 2], q)


def example_witness(example_id: str, P: Presentation) -> Witness:
    pi = Permutation((1, 3, 2))
    field = P.field
    if example_id == "6.9":
        c = (field.one, field.one, field.one)
    elif example_id == "6.10":
        root = field.sqrt_minus_one()
        if root is None:
            raise NotInFieldError(
                "this example needs a square root of -1 in the field"
            )
        c = (-field.one, root, root)
    else:
        raise QciError(f"unknown example {example_id!r}; choose from {EXAMPLE_IDS}")
    return Witness(pi, c)


def example_structure(example_id: str, field: Field | None = None, b=None) -> BfaStructure:
    P = example_presentation(example_id, field, b)
    return build_structure(P, example_witness(example_id, P))
