"""Exact scalar arithmetic over the supported coefficient fields.

Three field kinds exist: the rationals, prime fields GF(p), and cyclotomic
fields Q(zeta_m).  Every element carries a canonical representation (Fraction,
least nonnegative residue, or reduced polynomial in zeta), so equality is
structural and nothing is ever rounded.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import (
    DivisionByZeroError,
    InvalidOrderError,
    NotInFieldError,
    NotPrimeError,
    ScalarSyntaxError,
)


def is_prime(p: int) -> bool:
    """Deterministic trial-division primality test; moduli stay small here."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# dense polynomial helpers over Q, coefficients listed from degree 0 upward


def _trim(coeffs):
    i = len(coeffs)
    while i > 0 and coeffs[i - 1] == 0:
        i -= 1
    return coeffs[:i]


def _poly_mul(f, g):
    if not f or not g:
        return []
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi == 0:
            continue
        for j, gj in enumerate(g):
            out[i + j] += fi * gj
    return _trim(out)


def _poly_divmod(f, g):
    """Exact quotient and remainder of f by g over Q."""
    f = list(f)
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 0)
    lead = g[-1]
    while len(f) >= len(g) and _trim(f):
        f = _trim(f)
        if len(f) < len(g):
            break
        k = len(f) - len(g)
        c = f[-1] / lead
        q[k] = c
        for j, gj in enumerate(g):
            f[k + j] -= c * gj
        f = f[:-1]
    return _trim(q), _trim(f)


_cyclotomic_cache: dict[int, tuple[Fraction, ...]] = {}


def cyclotomic_polynomial(m: int) -> tuple[Fraction, ...]:
    """Coefficients of the m-th cyclotomic polynomial, degree 0 first.

    Computed by exact division of x^m - 1 by the product of the cyclotomic
    polynomials of the proper divisors of m.
    """
    if m in _cyclotomic_cache:
        return _cyclotomic_cache[m]
    num = [Fraction(0)] * (m + 1)
    num[0] = Fraction(-1)
    num[m] = Fraction(1)
    den = [Fraction(1)]
    for d in range(1, m):
        if m % d == 0:
            den = _poly_mul(den, list(cyclotomic_polynomial(d)))
    quot, rem = _poly_divmod(num, den)
    assert not rem, "cyclotomic division must be exact"
    result = tuple(quot)
    _cyclotomic_cache[m] = result
    return result


def _poly_xgcd(f, g):
    """Extended gcd over Q: returns (gcd, s, t) with s*f + t*g = gcd."""
    r0, r1 = list(f), list(g)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while _trim(r1):
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _trim([a - b for a, b in _zipcoef(s0, _poly_mul(q, s1))])
        t0, t1 = t1, _trim([a - b for a, b in _zipcoef(t0, _poly_mul(q, t1))])
    return r0, s0, t0


def _zipcoef(f, g):
    n = max(len(f), len(g))
    f = list(f) + [Fraction(0)] * (n - len(f))
    g = list(g) + [Fraction(0)] * (n - len(g))
    return zip(f, g)


# ---------------------------------------------------------------------------


class Scalar:
    """An element of one of the supported fields.

    Arithmetic is exact and closed in the owning field.  Integers coerce on
    either side of an operator.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: "Field", value):
        self.field = field
        self.value = value

    def is_zero(self) -> bool:
        return self.field._is_zero(self.value)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise TypeError("scalars from different fields")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self.field, self.field._add(self.value, other.value))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, self.field._neg(self.value))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self.field, self.field._mul(self.value, other.value))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZeroError("inverse of zero")
        return Scalar(self.field, self.field._inv(self.value))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base = self.inverse()
            k = -k
        result = self.field.one
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return self.field.format(self)

    def __repr__(self):
        return f"Scalar({self.field.describe()}, {self.field.format(self)!r})"


class Field:
    """Common interface of the three field kinds."""

    kind: str

    def characteristic(self) -> int:
        raise NotImplementedError

    def from_int(self, k: int) -> Scalar:
        raise NotImplementedError

    @property
    def zero(self) -> Scalar:
        return self.from_int(0)

    @property
    def one(self) -> Scalar:
        return self.from_int(1)

    def sqrt_minus_one(self):
        """A square root of -1 in this field, or None when absent."""
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError

    def parse(self, text: str) -> Scalar:
        return _parse_scalar(self, text)

    def format(self, s: Scalar) -> str:
        raise NotImplementedError

    # payload-level arithmetic implemented per kind
    def _add(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _inv(self, a):
        raise NotImplementedError

    def _is_zero(self, a) -> bool:
        raise NotImplementedError


class RationalField(Field):
    """The field of rationals with Fraction payloads."""

    kind = "rational"

    def characteristic(self) -> int:
        return 0

    def from_int(self, k: int) -> Scalar:
        return Scalar(self, Fraction(k))

    def from_fraction(self, fr: Fraction) -> Scalar:
        return Scalar(self, Fraction(fr))

    def sqrt_minus_one(self):
        return None

    def describe(self) -> str:
        return "rational"

    def format(self, s: Scalar) -> str:
        return str(s.value)

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _inv(self, a):
        return 1 / a

    def _is_zero(self, a) -> bool:
        return a == 0

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")


class PrimeField(Field):
    """GF(p) with least nonnegative residue payloads."""

    kind = "prime"

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise NotPrimeError(f"modulus {p!r} is not prime")
        self.p = p

    def characteristic(self) -> int:
        return self.p

    def from_int(self, k: int) -> Scalar:
        return Scalar(self, k % self.p)

    def sqrt_minus_one(self):
        if self.p == 2:
            return self.one
        if self.p % 4 != 1:
            return None
        for s in range(2, self.p):
            if s * s % self.p == self.p - 1:
                return Scalar(self, s)
        raise AssertionError("unreachable: p = 1 mod 4 always has sqrt(-1)")

    def describe(self) -> str:
        return f"prime:{self.p}"

    def format(self, s: Scalar) -> str:
        return str(s.value)

    def _add(self, a, b):
        return (a + b) % self.p

    def _neg(self, a):
        return (-a) % self.p

    def _mul(self, a, b):
        return (a * b) % self.p

    def _inv(self, a):
        return pow(a, self.p - 2, self.p)

    def _is_zero(self, a) -> bool:
        return a == 0

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))


class CyclotomicField(Field):
    """Q(zeta_m): payloads are residues mod the m-th cyclotomic polynomial.

    A payload is a tuple of Fractions of length deg(Phi_m) listing the
    coefficients of 1, z, z^2, ... where z denotes zeta_m.
    """

    kind = "cyclotomic"

    def __init__(self, m: int):
        if not isinstance(m, int) or m < 1:
            raise InvalidOrderError(f"cyclotomic order {m!r} must be a positive integer")
        self.m = m
        self.modulus = cyclotomic_polynomial(m)
        self.degree = len(self.modulus) - 1

    def characteristic(self) -> int:
        return 0

    def _pack(self, coeffs) -> tuple:
        coeffs = list(coeffs)[: self.degree]
        coeffs += [Fraction(0)] * (self.degree - len(coeffs))
        return tuple(coeffs)

    def from_int(self, k: int) -> Scalar:
        return Scalar(self, self._pack([Fraction(k)]))

    def from_fraction(self, fr: Fraction) -> Scalar:
        return Scalar(self, self._pack([Fraction(fr)]))

    @property
    def zeta(self) -> Scalar:
        """The distinguished primitive m-th root of unity."""
        return self.zeta_power(1)

    def zeta_power(self, k: int) -> Scalar:
        k %= self.m
        coeffs = [Fraction(0)] * (k + 1)
        coeffs[k] = Fraction(1)
        _, rem = _poly_divmod(coeffs, list(self.modulus))
        return Scalar(self, self._pack(rem))

    def sqrt_minus_one(self):
        if self.m % 4 == 0:
            return self.zeta_power(self.m // 4)
        return None

    def describe(self) -> str:
        return f"cyclotomic:{self.m}"

    def format(self, s: Scalar) -> str:
        parts = []
        for k in range(self.degree - 1, -1, -1):
            c = s.value[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif k == 1:
                body = "z" if mag == 1 else f"{mag}*z"
            else:
                body = f"z^{k}" if mag == 1 else f"{mag}*z^{k}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts) if parts else "0"

    def _add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def _neg(self, a):
        return tuple(-x for x in a)

    def _mul(self, a, b):
        prod = _poly_mul(_trim(list(a)), _trim(list(b)))
        _, rem = _poly_divmod(prod, list(self.modulus))
        return self._pack(rem)

    def _inv(self, a):
        g, s, _ = _poly_xgcd(_trim(list(a)), list(self.modulus))
        # Phi_m is irreducible over Q, so the gcd is a nonzero constant.
        assert len(g) == 1 and g[0] != 0
        scaled = [x / g[0] for x in s]
        _, rem = _poly_divmod(scaled, list(self.modulus))
        return self._pack(rem)

    def _is_zero(self, a) -> bool:
        return all(x == 0 for x in a)

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.m == self.m

    def __hash__(self):
        return hash(("cyclotomic", self.m))


def make_field(kind: str, param: int | None = None) -> Field:
    """Build a field from its descriptor, e.g. ('prime', 5)."""
    if kind == "rational":
        return RationalField()
    if kind == "prime":
        if param is None:
            raise NotPrimeError("prime field needs a modulus")
        return PrimeField(param)
    if kind == "cyclotomic":
        if param is None:
            raise InvalidOrderError("cyclotomic field needs an order")
        return CyclotomicField(param)
    raise ScalarSyntaxError(f"unknown field kind {kind!r}")


def parse_field_descriptor(text: str) -> Field:
    """Parse CLI-style descriptors: rational, prime:<p>, cyclotomic:<m>."""
    name, sep, arg = text.partition(":")
    if name == "rational" and not sep:
        return RationalField()
    if name in ("prime", "cyclotomic") and sep:
        try:
            param = int(arg)
        except ValueError:
            raise ScalarSyntaxError(f"bad field parameter in {text!r}") from None
        return make_field(name, param)
    raise ScalarSyntaxError(f"bad field descriptor {text!r}")


# ---------------------------------------------------------------------------
# scalar literal grammar:
#   scalar := term (('+'|'-') term)*
#   term   := rat | rat '*' zpow | zpow
#   zpow   := 'z' ('^' int)?
#   rat    := int ('/' posint)?

_TOKEN = re.compile(r"\s*(?:(\d+)|([z*/^+-]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ScalarSyntaxError(f"unexpected character at position {pos} in {text!r}")
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1))))
        else:
            tokens.append((m.group(2), None))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, field: Field, tokens, text: str):
        self.field = field
        self.tokens = tokens
        self.pos = 0
        self.text = text

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, why: str):
        raise ScalarSyntaxError(f"{why} in scalar literal {self.text!r}")

    def parse_int(self) -> int:
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take()[0] == "-":
                sign = -sign
        if self.peek() != "int":
            self.fail("expected an integer")
        return sign * self.take()[1]

    def parse_rat(self) -> Fraction:
        num = self.parse_int()
        if self.peek() == "/":
            self.take()
            if self.peek() != "int":
                self.fail("expected a denominator")
            den = self.take()[1]
            if den == 0:
                raise DivisionByZeroError(f"zero denominator in {self.text!r}")
            return Fraction(num, den)
        return Fraction(num)

    def parse_zpow(self) -> Scalar:
        self.take()  # the z
        k = 1
        if self.peek() == "^":
            self.take()
            k = self.parse_int()
        if not isinstance(self.field, CyclotomicField):
            raise NotInFieldError(
                f"the root symbol z has no meaning in the {self.field.describe()} field"
            )
        if k >= 0:
            return self.field.zeta_power(k)
        return self.field.zeta_power(-k).inverse()

    def parse_term(self, negate: bool) -> Scalar:
        if self.peek() == "z":
            out = self.parse_zpow()
        else:
            fr = self.parse_rat()
            if self.peek() == "*":
                self.take()
                if self.peek() != "z":
                    self.fail("expected z after *")
                out = self.parse_zpow() * self._embed(fr)
            else:
                out = self._embed(fr)
        return -out if negate else out

    def _embed(self, fr: Fraction) -> Scalar:
        if fr.denominator == 1:
            return self.field.from_int(fr.numerator)
        if self.field.characteristic() == 0:
            return self.field.from_fraction(fr)
        return self.field.from_int(fr.numerator) / self.field.from_int(fr.denominator)

    def parse_scalar(self) -> Scalar:
        negate = False
        while self.peek() in ("+", "-"):
            if self.take()[0] == "-":
                negate = not negate
        out = self.parse_term(negate)
        while self.peek() in ("+", "-"):
            negate = self.take()[0] == "-"
            while self.peek() in ("+", "-"):
                if self.take()[0] == "-":
                    negate = not negate
            out = out + self.parse_term(negate)
        if self.pos != len(self.tokens):
            self.fail("trailing input")
        return out


def _parse_scalar(field: Field, text: str) -> Scalar:
    tokens = _tokenize(text)
    if not tokens:
        raise ScalarSyntaxError("empty scalar literal")
    return _Parser(field, tokens, text).parse_scalar()


def multiplicative_order(s: Scalar):
    """Order of s in the unit group, or None when s is not a root of unity.

    The bound on candidate orders is exact per field kind: 2 over Q, p - 1
    over GF(p), lcm(2, m) over Q(zeta_m).
    """
    if s.is_zero():
        return None
    field = s.field
    if isinstance(field, RationalField):
        cap = 2
    elif isinstance(field, PrimeField):
        cap = field.p - 1
    else:
        m = field.m
        cap = m if m % 2 == 0 else 2 * m
    acc = field.one
    for k in range(1, cap + 1):
        acc = acc * s
        if acc == field.one:
            return k
    return None
