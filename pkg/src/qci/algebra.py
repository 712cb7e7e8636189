"""Finite-dimensional algebras on n skew-commuting nilpotent generators.

A presentation consists of a coefficient field, exponents a_1..a_n (with
a_i >= 2) and a matrix q with q_ii = 1 and q_ij q_ji = 1.  The algebra has
generators x_1..x_n subject to x_i^{a_i} = 0 and x_j x_i = q_ij x_i x_j, and
the monomials x_v = x_1^{v_1} ... x_n^{v_n} with 0 <= v_i <= a_i - 1 form a
basis.  Elements are sparse dicts mapping exponent tuples to scalars; zero
coefficients are never stored.
"""

from __future__ import annotations

import itertools
import os

from .errors import (
    BadDiagonalError,
    BadExponentError,
    BadReciprocalError,
    NotFrobeniusError,
    NotInvertibleError,
    SingularMatrixError,
    TooLargeError,
)
from .linalg import solve_matrix
from .scalars import Field, Scalar

DEFAULT_DIM_LIMIT = 4096


def dim_limit() -> int:
    """Dimension cap; override with the QCI_DIM_LIMIT environment variable."""
    raw = os.environ.get("QCI_DIM_LIMIT")
    if raw is None:
        return DEFAULT_DIM_LIMIT
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_DIM_LIMIT


class Presentation:
    """Validated presentation data plus exact structure-constant arithmetic."""

    def __init__(self, field: Field, a, q):
        self.field = field
        self.a = tuple(int(x) for x in a)
        self.n = len(self.a)
        self.q = tuple(tuple(row) for row in q)
        self._validate()
        self._basis = None
        self._index = None
        self._h_gen = None

    def _validate(self) -> None:
        if self.n < 2:
            raise BadExponentError(f"need at least 2 generators, got {self.n}")
        if any(ai < 2 for ai in self.a):
            raise BadExponentError(f"every exponent must be >= 2, got {self.a}")
        if len(self.q) != self.n or any(len(row) != self.n for row in self.q):
            raise BadReciprocalError(f"q must be a {self.n}x{self.n} matrix")
        one = self.field.one
        for i in range(self.n):
            for j in range(self.n):
                entry = self.q[i][j]
                if not isinstance(entry, Scalar) or entry.field != self.field:
                    raise BadReciprocalError(f"q[{i+1}][{j+1}] is not a field scalar")
                if entry.is_zero():
                    raise BadReciprocalError(f"q[{i+1}][{j+1}] is zero")
            if self.q[i][i] != one:
                raise BadDiagonalError(f"q[{i+1}][{i+1}] must be 1")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.q[i][j] * self.q[j][i] != one:
                    raise BadReciprocalError(
                        f"q[{i+1}][{j+1}] * q[{j+1}][{i+1}] must be 1"
                    )
        dim = 1
        for ai in self.a:
            dim *= ai
        limit = dim_limit()
        if dim > limit:
            raise TooLargeError(f"dimension {dim} exceeds the cap {limit}")

    # -- basis bookkeeping ---------------------------------------------------

    @property
    def dim(self) -> int:
        d = 1
        for ai in self.a:
            d *= ai
        return d

    @property
    def top(self) -> tuple:
        """The exponent vector a - 1 of the socle monomial."""
        return tuple(ai - 1 for ai in self.a)

    @property
    def zero_vec(self) -> tuple:
        return (0,) * self.n

    def basis(self) -> list:
        """All exponent vectors in lexicographic order."""
        if self._basis is None:
            self._basis = list(itertools.product(*[range(ai) for ai in self.a]))
        return self._basis

    def index(self, v) -> int:
        if self._index is None:
            self._index = {v: i for i, v in enumerate(self.basis())}
        return self._index[tuple(v)]

    def in_basis(self, v) -> bool:
        return all(0 <= vi <= ai - 1 for vi, ai in zip(v, self.a))

    def unit_vec(self, i: int) -> tuple:
        """Exponent vector of the generator x_i (1-based i)."""
        return tuple(1 if k == i - 1 else 0 for k in range(self.n))

    # -- structure constants ---------------------------------------------------

    def bracket(self, u, v) -> Scalar:
        """The scalar prod_{i<j} q_ij^{u_j v_i} on arbitrary integer vectors."""
        out = self.field.one
        for i in range(self.n):
            for j in range(i + 1, self.n):
                e = u[j] * v[i]
                if e:
                    out = out * self.q[i][j] ** e
        return out

    def mul_basis(self, u, v):
        """Product of two basis monomials: (w, coeff) or (None, 0)."""
        w = tuple(ui + vi for ui, vi in zip(u, v))
        if not self.in_basis(w):
            return None, self.field.zero
        return w, self.bracket(u, v)

    def monomial(self, v, coeff=None) -> dict:
        coeff = self.field.one if coeff is None else coeff
        if coeff.is_zero():
            return {}
        return {tuple(v): coeff}

    @property
    def one_elem(self) -> dict:
        return {self.zero_vec: self.field.one}

    def mul(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for u, cu in x.items():
            for v, cv in y.items():
                w = tuple(ui + vi for ui, vi in zip(u, v))
                if not self.in_basis(w):
                    continue
                term = cu * cv * self.bracket(u, v)
                acc = out.get(w)
                acc = term if acc is None else acc + term
                if acc.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = acc
        return out

    def add(self, x: dict, y: dict) -> dict:
        out = dict(x)
        for v, c in y.items():
            acc = out.get(v)
            acc = c if acc is None else acc + c
            if acc.is_zero():
                out.pop(v, None)
            else:
                out[v] = acc
        return out

    def scale(self, c: Scalar, x: dict) -> dict:
        if c.is_zero():
            return {}
        return {v: c * cv for v, cv in x.items()}

    def power(self, x: dict, k: int) -> dict:
        out = self.one_elem
        for _ in range(k):
            out = self.mul(out, x)
        return out

    def invert_element(self, x: dict) -> dict:
        """Two-sided inverse of x, via an exact solve; raises when absent."""
        basis = self.basis()
        cols = [self.mul(x, self.monomial(w)) for w in basis]
        mat = [
            [cols[j].get(v, self.field.zero) for j in range(len(basis))]
            for v in basis
        ]
        target = [[self.field.one if v == self.zero_vec else self.field.zero] for v in basis]
        try:
            sol = solve_matrix(self.field, mat, target)
        except SingularMatrixError:
            raise NotInvertibleError("element is not invertible") from None
        inv = {}
        for j, w in enumerate(basis):
            c = sol[j][0]
            if not c.is_zero():
                inv[w] = c
        return inv

    # -- the distinguished automorphism data ------------------------------------

    def h_of(self, v) -> Scalar:
        """bracket(a-1-v, v) / bracket(v, a-1-v) on any integer vector v."""
        comp = tuple(ai - 1 - vi for ai, vi in zip(self.a, v))
        return self.bracket(comp, v) / self.bracket(v, comp)

    def h_generators(self) -> list:
        """The values h_{e_i} = prod_j q_ij^{a_j - 1}."""
        if self._h_gen is None:
            out = []
            for i in range(self.n):
                acc = self.field.one
                for j in range(self.n):
                    acc = acc * self.q[i][j] ** (self.a[j] - 1)
                out.append(acc)
            self._h_gen = out
        return self._h_gen

    def is_symmetric(self) -> bool:
        one = self.field.one
        return all(h == one for h in self.h_generators())

    def nakayama_is_involution(self) -> bool:
        one = self.field.one
        return all(h * h == one for h in self.h_generators())

    def nakayama(self, x: dict) -> dict:
        """The closed-form automorphism scaling each x_v by h_v."""
        return {v: self.h_of(v) * c for v, c in x.items()}

    # -- functionals -------------------------------------------------------------

    def dual_functional(self, v) -> dict:
        """The linear functional picking out the coefficient of x_v."""
        return {tuple(v): self.field.one}

    def apply_functional(self, f: dict, x: dict) -> Scalar:
        out = self.field.zero
        for v, c in x.items():
            fv = f.get(v)
            if fv is not None:
                out = out + fv * c
        return out

    def functional_left_hit(self, a_elem: dict, f: dict) -> dict:
        """The functional x |-> f(x * a)."""
        out: dict = {}
        for v in self.basis():
            val = self.apply_functional(f, self.mul(self.monomial(v), a_elem))
            if not val.is_zero():
                out[v] = val
        return out

    def functional_right_hit(self, f: dict, b_elem: dict) -> dict:
        """The functional x |-> f(b * x)."""
        out: dict = {}
        for v in self.basis():
            val = self.apply_functional(f, self.mul(b_elem, self.monomial(v)))
            if not val.is_zero():
                out[v] = val
        return out

    def pairing_matrix(self, phi: dict) -> list:
        """Matrix (u, v) |-> phi(x_u x_v) over the basis ordering."""
        basis = self.basis()
        mat = []
        for u in basis:
            row = []
            for v in basis:
                w, c = self.mul_basis(u, v)
                if w is None:
                    row.append(self.field.zero)
                else:
                    fv = phi.get(w)
                    row.append(self.field.zero if fv is None else fv * c)
            mat.append(row)
        return mat

    def nakayama_wrt(self, phi: dict) -> list:
        """Images N(x_v) for the automorphism with phi(xy) = phi(y N(x)).

        Returns a list of sparse elements indexed like the basis.  Raises
        when the pairing of phi is degenerate.
        """
        basis = self.basis()
        mat = self.pairing_matrix(phi)
        transposed = [[mat[j][i] for j in range(len(basis))] for i in range(len(basis))]
        try:
            sol = solve_matrix(self.field, mat, transposed)
        except SingularMatrixError:
            raise NotFrobeniusError("functional pairing is degenerate") from None
        images = []
        for j in range(len(basis)):
            img = {}
            for i, w in enumerate(basis):
                c = sol[i][j]
                if not c.is_zero():
                    img[w] = c
            images.append(img)
        return images

    def apply_linear(self, images: list, x: dict) -> dict:
        out: dict = {}
        for v, c in x.items():
            out = self.add(out, self.scale(c, images[self.index(v)]))
        return out

    def element_to_string(self, x: dict) -> str:
        if not x:
            return "0"
        parts = []
        for v in self.basis():
            c = x.get(v)
            if c is None:
                continue
            mono = monomial_name(v)
            parts.append(f"({c})*{mono}" if mono != "1" else f"({c})")
        return " + ".join(parts)

    def __eq__(self, other):
        return (
            isinstance(other, Presentation)
            and other.field == self.field
            and other.a == self.a
            and other.q == self.q
        )

    def __hash__(self):
        return hash((self.field, self.a, self.q))

    def __repr__(self):
        return f"Presentation(n={self.n}, a={self.a}, field={self.field.describe()})"


def monomial_name(v) -> str:
    """Readable name like x1*x3^2 for an exponent vector."""
    parts = []
    for i, e in enumerate(v, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


def vector_key(v) -> str:
    """Comma-joined form of an exponent vector, used in file formats."""
    return ",".join(str(x) for x in v)


def parse_vector_key(text: str, n: int) -> tuple:
    parts = text.split(",")
    if len(parts) != n:
        raise ValueError(f"expected {n} comma-separated entries in {text!r}")
    return tuple(int(p) for p in parts)
