"""Exhaustive exact verification of a constructed structure.

Every check enumerates the whole basis (or all basis pairs); nothing is
sampled and every comparison is exact.  Failures carry a replayable
counterexample.  Checks run in the fixed order listed in AXIOM_CHECKS and
DERIVED_CHECKS.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import Presentation, monomial_name
from .builder import BfaStructure
from .errors import NotInvertibleError, SingularMatrixError
from .linalg import kernel_basis, rank, solve_matrix

AXIOM_CHECKS = (
    "counit-algebra-map",
    "unit-comultiplication",
    "coassociativity",
    "counit-law",
    "frobenius-pairing",
    "frobenius-copairing",
    "antipode-antihomomorphism",
    "antipode-coalgebra-antihomomorphism",
    "antipode-definition",
)

DERIVED_CHECKS = (
    "counit-via-integral",
    "socle-pairing-normalized",
    "right-integral",
    "integral-space-dimension",
    "unimodularity",
    "unit-via-copairing",
    "left-modular-functional",
    "modular-element",
    "antipode-of-modular-element",
    "nakayama-via-antipode",
    "fourth-power-formula",
    "antipode-graded",
    "antipode-square-is-nakayama",
    "antipode-fourth-power-identity",
    "antipode-fixes-integral",
    "nakayama-involutive",
    "antipode-monomial",
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: dict | None = None

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class VerificationReport:
    checks: list = dc_field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failing(self) -> list:
        return [c for c in self.checks if not c.passed]

    def record(self, name: str, passed: bool, detail: dict | None = None) -> None:
        self.checks.append(CheckResult(name, passed, detail))

    def to_json(self) -> dict:
        return {
            "all_passed": self.all_passed,
            "checks": [c.to_json() for c in self.checks],
        }

    def format_text(self) -> str:
        lines = []
        for c in self.checks:
            mark = "ok" if c.passed else "FAIL"
            extra = "" if c.detail is None else f"  {c.detail}"
            lines.append(f"  [{mark:4}] {c.name}{extra}")
        return "\n".join(lines)


# -- tensor helpers ----------------------------------------------------------


def tensor_product(P: Presentation, x: dict, y: dict) -> dict:
    out = {}
    for u, cu in x.items():
        for w, cw in y.items():
            out[(u, w)] = cu * cw
    return out


def tensor_add_term(out: dict, key, coeff) -> None:
    acc = out.get(key)
    acc = coeff if acc is None else acc + coeff
    if acc.is_zero():
        out.pop(key, None)
    else:
        out[key] = acc


def tensor_mul(P: Presentation, s: dict, t: dict) -> dict:
    """Componentwise product on the tensor square."""
    out: dict = {}
    for (u1, w1), c1 in s.items():
        for (u2, w2), c2 in t.items():
            u = tuple(a + b for a, b in zip(u1, u2))
            w = tuple(a + b for a, b in zip(w1, w2))
            if not P.in_basis(u) or not P.in_basis(w):
                continue
            coeff = c1 * c2 * P.bracket(u1, u2) * P.bracket(w1, w2)
            tensor_add_term(out, (u, w), coeff)
    return out


def _tensor_str(P: Presentation, t: dict) -> str:
    if not t:
        return "0"
    parts = []
    for (u, w) in sorted(t):
        parts.append(f"({t[(u, w)]})*{monomial_name(u)}(x){monomial_name(w)}")
    return " + ".join(parts)


# -- coalgebra-side helpers ---------------------------------------------------


def left_coaction(B: BfaStructure, f: dict, x: dict) -> dict:
    """f -> x = sum x_1 f(x_2)."""
    P = B.presentation
    out: dict = {}
    for v, c in x.items():
        for u, w, coeff in B.delta[v]:
            fv = f.get(w)
            if fv is None:
                continue
            term = c * coeff * fv
            acc = out.get(u)
            acc = term if acc is None else acc + term
            if acc.is_zero():
                out.pop(u, None)
            else:
                out[u] = acc
    return out


def right_coaction(B: BfaStructure, x: dict, f: dict) -> dict:
    """x <- f = sum f(x_1) x_2."""
    out: dict = {}
    for v, c in x.items():
        for u, w, coeff in B.delta[v]:
            fv = f.get(u)
            if fv is None:
                continue
            term = c * coeff * fv
            acc = out.get(w)
            acc = term if acc is None else acc + term
            if acc.is_zero():
                out.pop(w, None)
            else:
                out[w] = acc
    return out


def convolution_inverse(B: BfaStructure, f: dict) -> dict:
    """Inverse of f in the dual algebra (f*g)(x) = sum f(x_1) g(x_2)."""
    P = B.presentation
    basis = P.basis()
    mat = []
    for v in basis:
        row = {w: P.field.zero for w in basis}
        for u, w, coeff in B.delta[v]:
            fv = f.get(u)
            if fv is not None:
                row[w] = row[w] + fv * coeff
        mat.append([row[w] for w in basis])
    target = [[P.field.one if v == P.zero_vec else P.field.zero] for v in basis]
    try:
        sol = solve_matrix(P.field, mat, target)
    except SingularMatrixError:
        raise NotInvertibleError("functional has no convolution inverse") from None
    out = {}
    for i, w in enumerate(basis):
        if not sol[i][0].is_zero():
            out[w] = sol[i][0]
    return out


# -- axiom checks --------------------------------------------------------------


def verify_axioms(B: BfaStructure) -> VerificationReport:
    P = B.presentation
    rep = VerificationReport()
    one = P.field.one
    zero_vec = P.zero_vec
    basis = P.basis()

    # counit-algebra-map
    ok, detail = True, None
    if B.epsilon(P.one_elem) != one:
        ok, detail = False, {"at": "epsilon(1)"}
    else:
        for u in basis:
            for v in basis:
                lhs = B.epsilon(P.mul(P.monomial(u), P.monomial(v)))
                rhs = B.epsilon(P.monomial(u)) * B.epsilon(P.monomial(v))
                if lhs != rhs:
                    ok, detail = False, {"u": list(u), "v": list(v)}
                    break
            if not ok:
                break
    rep.record("counit-algebra-map", ok, detail)

    # unit-comultiplication
    expected = {(zero_vec, zero_vec): one}
    actual = B.delta_elem(P.one_elem)
    rep.record(
        "unit-comultiplication",
        actual == expected,
        None if actual == expected else {"delta(1)": _tensor_str(P, actual)},
    )

    # coassociativity
    ok, detail = True, None
    for v in basis:
        left: dict = {}
        right: dict = {}
        for u, w, c in B.delta[v]:
            for p, q, c2 in B.delta[u]:
                tensor_add_term(left, (p, q, w), c * c2)
            for p, q, c2 in B.delta[w]:
                tensor_add_term(right, (u, p, q), c * c2)
        if left != right:
            ok, detail = False, {"v": list(v)}
            break
    rep.record("coassociativity", ok, detail)

    # counit-law
    ok, detail = True, None
    for v in basis:
        mono = P.monomial(v)
        lhs = right_coaction(B, mono, {zero_vec: one})
        rhs = left_coaction(B, {zero_vec: one}, mono)
        if lhs != mono or rhs != mono:
            ok, detail = False, {"v": list(v)}
            break
    rep.record("counit-law", ok, detail)

    # frobenius-pairing
    pairing = P.pairing_matrix(B.phi())
    full = rank(P.field, pairing) == P.dim
    rep.record("frobenius-pairing", full, None if full else {"rank": rank(P.field, pairing)})

    # frobenius-copairing: rank of w |-> t <- x_w^*
    mat = []
    for w in basis:
        img = right_coaction(B, B.t_elem(), P.dual_functional(w))
        mat.append([img.get(v, P.field.zero) for v in basis])
    full = rank(P.field, mat) == P.dim
    rep.record("frobenius-copairing", full, None if full else {"rank": rank(P.field, mat)})

    # antipode-antihomomorphism
    ok, detail = True, None
    if B.s_elem(P.one_elem) != P.one_elem:
        ok, detail = False, {"at": "S(1)"}
    else:
        for u in basis:
            su = B.s_elem(P.monomial(u))
            for v in basis:
                lhs = B.s_elem(P.mul(P.monomial(u), P.monomial(v)))
                rhs = P.mul(B.s_elem(P.monomial(v)), su)
                if lhs != rhs:
                    ok, detail = False, {"u": list(u), "v": list(v)}
                    break
            if not ok:
                break
    rep.record("antipode-antihomomorphism", ok, detail)

    # antipode-coalgebra-antihomomorphism
    ok, detail = True, None
    for v in basis:
        if B.epsilon(B.s_elem(P.monomial(v))) != B.epsilon(P.monomial(v)):
            ok, detail = False, {"v": list(v), "at": "epsilon"}
            break
        lhs = B.delta_elem(B.s_elem(P.monomial(v)))
        rhs: dict = {}
        for u, w, c in B.delta[v]:
            iu, cu = B.s_map[u]
            iw, cw = B.s_map[w]
            tensor_add_term(rhs, (iw, iu), c * cu * cw)
        if lhs != rhs:
            ok, detail = False, {"v": list(v), "at": "delta"}
            break
    rep.record("antipode-coalgebra-antihomomorphism", ok, detail)

    # antipode-definition: S(x) = sum phi(t_1 x) t_2
    ok, detail = True, None
    phi = B.phi()
    for v in basis:
        acc: dict = {}
        for u, w, c in B.delta[B.t_vec]:
            val = P.apply_functional(phi, P.mul(P.monomial(u), P.monomial(v)))
            if val.is_zero():
                continue
            term = val * c
            cur = acc.get(w)
            cur = term if cur is None else cur + term
            if cur.is_zero():
                acc.pop(w, None)
            else:
                acc[w] = cur
        if acc != B.s_elem(P.monomial(v)):
            ok, detail = False, {
                "v": list(v),
                "expected": P.element_to_string(B.s_elem(P.monomial(v))),
                "actual": P.element_to_string(acc),
            }
            break
    rep.record("antipode-definition", ok, detail)

    return rep


# -- derived checks -------------------------------------------------------------


def _integral_space(P: Presentation, side: str):
    """Kernel basis of y -> (y x_i)_i or (x_i y)_i over all generators."""
    basis = P.basis()
    rows = []
    for i in range(1, P.n + 1):
        gen = P.monomial(P.unit_vec(i))
        cols = []
        for w in basis:
            prod = P.mul(P.monomial(w), gen) if side == "right" else P.mul(gen, P.monomial(w))
            cols.append(prod)
        for target in basis:
            row = [cols[j].get(target, P.field.zero) for j in range(len(basis))]
            if any(not x.is_zero() for x in row):
                rows.append(row)
    if not rows:
        rows = [[P.field.zero] * len(basis)]
    return kernel_basis(P.field, rows)


def verify_derived(B: BfaStructure) -> VerificationReport:
    P = B.presentation
    rep = VerificationReport()
    one = P.field.one
    basis = P.basis()
    phi = B.phi()
    t = B.t_elem()

    # counit-via-integral: epsilon(x) = phi(t x)
    ok, detail = True, None
    for v in basis:
        if P.apply_functional(phi, P.mul(t, P.monomial(v))) != B.epsilon(P.monomial(v)):
            ok, detail = False, {"v": list(v)}
            break
    rep.record("counit-via-integral", ok, detail)

    # socle-pairing-normalized: phi(t) = 1
    val = P.apply_functional(phi, t)
    rep.record("socle-pairing-normalized", val == one, None if val == one else {"phi(t)": str(val)})

    # right-integral: t x = epsilon(x) t
    ok, detail = True, None
    for v in basis:
        lhs = P.mul(t, P.monomial(v))
        rhs = P.scale(B.epsilon(P.monomial(v)), t)
        if lhs != rhs:
            ok, detail = False, {"v": list(v)}
            break
    rep.record("right-integral", ok, detail)

    # integral-space-dimension: both one-dimensional
    right_space = _integral_space(P, "right")
    left_space = _integral_space(P, "left")
    ok = len(right_space) == 1 and len(left_space) == 1
    rep.record(
        "integral-space-dimension",
        ok,
        None if ok else {"right_dim": len(right_space), "left_dim": len(left_space)},
    )

    # unimodularity: the two spaces coincide
    ok = False
    if len(right_space) == 1 and len(left_space) == 1:
        stacked = [right_space[0], left_space[0]]
        ok = rank(P.field, stacked) == 1
    rep.record("unimodularity", ok, None)

    # unit-via-copairing: 1 = t <- phi
    recovered = right_coaction(B, t, phi)
    rep.record(
        "unit-via-copairing",
        recovered == P.one_elem,
        None if recovered == P.one_elem else {"value": P.element_to_string(recovered)},
    )

    # left-modular-functional: alpha = t -> phi equals the counit
    alpha = P.functional_left_hit(t, phi)
    eps_fun = P.dual_functional(P.zero_vec)
    rep.record("left-modular-functional", alpha == eps_fun, None)

    # modular-element: m = phi -> t is group-like (and 1 in characteristic 0)
    modular = left_coaction(B, phi, t)
    ok, detail = True, None
    if B.epsilon(modular) != one:
        ok, detail = False, {"at": "epsilon"}
    elif B.delta_elem(modular) != tensor_product(P, modular, modular):
        ok, detail = False, {"at": "grouplike"}
    elif P.field.characteristic() == 0 and modular != P.one_elem:
        ok, detail = False, {"at": "char-zero-unit"}
    rep.record("modular-element", ok, detail)

    # antipode-of-modular-element: S(m) = m^{-1}
    ok = True
    try:
        inv = P.invert_element(modular)
    except NotInvertibleError:
        ok, inv = False, None
    if ok:
        ok = B.s_elem(modular) == inv
    rep.record("antipode-of-modular-element", ok, None)

    # nakayama-via-antipode: N(x) = m^{-1} S^2(alpha -> x) m
    ok, detail = True, None
    if inv is None:
        ok, detail = False, {"at": "modular-inverse"}
    else:
        for v in basis:
            hit = left_coaction(B, alpha, P.monomial(v))
            conj = P.mul(P.mul(inv, B.s_elem(B.s_elem(hit))), modular)
            if conj != P.nakayama(P.monomial(v)):
                ok, detail = False, {"v": list(v)}
                break
    rep.record("nakayama-via-antipode", ok, detail)

    # fourth-power-formula: S^4(x) = m (alpha^{-1} -> x <- alpha) m^{-1}
    ok, detail = True, None
    if inv is None:
        ok, detail = False, {"at": "modular-inverse"}
    else:
        try:
            alpha_inv = convolution_inverse(B, alpha)
        except NotInvertibleError:
            alpha_inv = None
            ok, detail = False, {"at": "alpha-inverse"}
        if alpha_inv is not None:
            for v in basis:
                x = P.monomial(v)
                s4 = B.s_elem(B.s_elem(B.s_elem(B.s_elem(x))))
                moved = left_coaction(B, alpha_inv, right_coaction(B, x, alpha))
                rhs = P.mul(P.mul(modular, moved), inv)
                if s4 != rhs:
                    ok, detail = False, {"v": list(v)}
                    break
    rep.record("fourth-power-formula", ok, detail)

    # antipode-graded: S preserves total degree
    ok, detail = True, None
    for v in basis:
        img, coeff = B.s_map[v]
        if coeff.is_zero() or sum(img) != sum(v):
            ok, detail = False, {"v": list(v)}
            break
    rep.record("antipode-graded", ok, detail)

    # antipode-square-is-nakayama
    ok, detail = True, None
    for v in basis:
        if B.s_elem(B.s_elem(P.monomial(v))) != P.nakayama(P.monomial(v)):
            ok, detail = False, {"v": list(v)}
            break
    rep.record("antipode-square-is-nakayama", ok, detail)

    # antipode-fourth-power-identity
    ok, detail = True, None
    for v in basis:
        x = P.monomial(v)
        if B.s_elem(B.s_elem(B.s_elem(B.s_elem(x)))) != x:
            ok, detail = False, {"v": list(v)}
            break
    rep.record("antipode-fourth-power-identity", ok, detail)

    # antipode-fixes-integral
    fixed = B.s_elem(t) == t
    rep.record("antipode-fixes-integral", fixed, None)

    # nakayama-involutive
    ok, detail = True, None
    for v in basis:
        hv = P.h_of(v)
        if hv * hv != one:
            ok, detail = False, {"v": list(v), "h": str(hv)}
            break
    rep.record("nakayama-involutive", ok, detail)

    # antipode-monomial: the image map is an involution of the basis fixing top
    ok, detail = True, None
    images = {}
    for v in basis:
        img, coeff = B.s_map[v]
        if coeff.is_zero() or not P.in_basis(img):
            ok, detail = False, {"v": list(v)}
            break
        images[v] = img
    if ok:
        if sorted(images.values()) != sorted(basis):
            ok, detail = False, {"at": "not-a-bijection"}
        elif any(images[images[v]] != v for v in basis):
            ok, detail = False, {"at": "not-an-involution"}
        elif images[P.top] != P.top:
            ok, detail = False, {"at": "top-not-fixed"}
    rep.record("antipode-monomial", ok, detail)

    return rep


def is_hopf_comultiplication(B: BfaStructure) -> bool:
    """Whether delta is multiplicative for the componentwise tensor product."""
    P = B.presentation
    basis = P.basis()
    for u in basis:
        du = B.delta_elem(P.monomial(u))
        for v in basis:
            prod = P.mul(P.monomial(u), P.monomial(v))
            lhs = B.delta_elem(prod)
            rhs = tensor_mul(P, du, B.delta_elem(P.monomial(v)))
            if lhs != rhs:
                return False
    return True


def primitive_space_dim(P: Presentation, delta: dict) -> int:
    """Dimension of {x : delta(x) = 1 (x) x + x (x) 1}, computed exactly."""
    basis = P.basis()
    zero = P.zero_vec
    columns = []
    keys = set()
    for v in basis:
        col: dict = {}
        for u, w, c in delta[v]:
            tensor_add_term(col, (u, w), c)
        tensor_add_term(col, (zero, v), -P.field.one)
        tensor_add_term(col, (v, zero), -P.field.one)
        columns.append(col)
        keys.update(col)
    keys = sorted(keys)
    mat = [[col.get(k, P.field.zero) for col in columns] for k in keys]
    if not mat:
        return P.dim
    return len(kernel_basis(P.field, mat))


def negate_socle_entry(B: BfaStructure, v) -> BfaStructure:
    """A copy of B with the socle coefficient at v negated in g and delta.

    The antipode table is left untouched, so the definition check must
    notice the inconsistency at exactly v.
    """
    v = tuple(v)
    P = B.presentation
    g = dict(B.g)
    g[v] = -g[v]
    delta = {key: list(rows) for key, rows in B.delta.items()}
    top_rows = []
    for u, w, c in delta[B.t_vec]:
        comp = tuple(t - x for t, x in zip(P.top, u))
        if comp == v:
            top_rows.append((u, w, -c))
        else:
            top_rows.append((u, w, c))
    delta[B.t_vec] = top_rows
    return BfaStructure(P, B.witness, g, delta, dict(B.s_map))
