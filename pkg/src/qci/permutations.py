"""Permutations acting on generators and exponent vectors.

A permutation pi of {1..n} acts on an exponent vector by permuting positions:
the image w of v has w_{pi(i)} = v_i, so generators map by x_i |-> x_{pi(i)}.
A permutation preserves a presentation when a_{pi(i)} = a_i and
q_{pi(i) pi(j)} = q_ji for all i, j.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CharTwoError,
    NakayamaOrderError,
    NotCompatibleError,
    NotInvolutionError,
    TooManyGeneratorsError,
)
from .algebra import Presentation
from .scalars import Scalar

ENUMERATION_BOUND = 10


class Permutation:
    """Permutation of {1..n}, stored as the tuple of images of 1..n."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"{images!r} is not a permutation of 1..{n}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(inv)

    def is_involution(self) -> bool:
        return all(self(self(i)) == i for i in range(1, self.n + 1))

    def act(self, v) -> tuple:
        """Permute vector positions: the image w satisfies w_{pi(i)} = v_i."""
        out = [0] * self.n
        for i in range(self.n):
            out[self.images[i] - 1] = v[i]
        return tuple(out)

    def fixed_points(self) -> tuple:
        return tuple(i for i in range(1, self.n + 1) if self(i) == i)

    def moved_points(self) -> tuple:
        return tuple(i for i in range(1, self.n + 1) if self(i) != i)

    def __eq__(self, other):
        return isinstance(other, Permutation) and other.images == self.images

    def __hash__(self):
        return hash(self.images)

    def __str__(self):
        return "[" + ",".join(str(i) for i in self.images) + "]"

    __repr__ = __str__

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        body = text.strip()
        if body.startswith("[") and body.endswith("]"):
            body = body[1:-1]
        return cls(int(p) for p in body.split(","))


def is_compatible(P: Presentation, pi: Permutation) -> bool:
    """Whether pi preserves the exponents and the q matrix."""
    if pi.n != P.n:
        return False
    for i in range(1, P.n + 1):
        if P.a[pi(i) - 1] != P.a[i - 1]:
            return False
    for i in range(1, P.n + 1):
        for j in range(1, P.n + 1):
            if P.q[pi(i) - 1][pi(j) - 1] != P.q[j - 1][i - 1]:
                return False
    return True


def enumerate_compatible(
    P: Presentation, involutions_only: bool = True, bound: int = ENUMERATION_BOUND
) -> list:
    """All compatible permutations (involutions by default), in lexicographic
    order of their image tuples.

    Backtracking assigns images position by position, pruning on exponent
    multisets, the self-inverse requirement, and partial q checks.
    """
    n = P.n
    if n > bound:
        raise TooManyGeneratorsError(f"n = {n} exceeds the enumeration bound {bound}")
    results = []
    images = [0] * (n + 1)  # 1-based
    used = [False] * (n + 1)

    def q_ok(i: int) -> bool:
        # check all q conditions that involve position i and assigned positions
        for j in range(1, n + 1):
            if images[j] == 0:
                continue
            if P.q[images[i] - 1][images[j] - 1] != P.q[j - 1][i - 1]:
                return False
            if P.q[images[j] - 1][images[i] - 1] != P.q[i - 1][j - 1]:
                return False
        return True

    def assign(i: int, img: int) -> bool:
        if used[img] or P.a[img - 1] != P.a[i - 1]:
            return False
        images[i] = img
        used[img] = True
        if not q_ok(i):
            images[i] = 0
            used[img] = False
            return False
        return True

    def unassign(i: int) -> None:
        used[images[i]] = False
        images[i] = 0

    def extend(i: int) -> None:
        if i > n:
            results.append(Permutation(images[1:]))
            return
        if images[i] != 0:
            # image forced earlier by the involution constraint
            extend(i + 1)
            return
        for img in range(1, n + 1):
            if involutions_only and img < i:
                continue  # pairing with an earlier position was already settled
            if not assign(i, img):
                continue
            if involutions_only and img != i:
                if assign(img, i):
                    extend(i + 1)
                    unassign(img)
            else:
                extend(i + 1)
            unassign(i)

    extend(1)
    results.sort(key=lambda p: p.images)
    return results


def q_pi(P: Presentation, pi: Permutation) -> Scalar:
    """prod_{j<k} bracket(pi(e_k), pi(e_j))^{(a_k-1)(a_j-1)}."""
    out = P.field.one
    for j in range(1, P.n + 1):
        for k in range(j + 1, P.n + 1):
            e = (P.a[k - 1] - 1) * (P.a[j - 1] - 1)
            base = P.bracket(pi.act(P.unit_vec(k)), pi.act(P.unit_vec(j)))
            out = out * base**e
    return out


@dataclass(frozen=True)
class PartitionReport:
    """Index classification for a compatible involution.

    fixed/moved split {1..n} by whether pi(i) = i.  Away from characteristic
    2 the classes refine by the sign of h_{e_i} and the parity of a_i:
      i1: fixed, h = 1,  a_i even      j1: moved, h = 1,  a_i even
      i2: fixed, h = 1,  a_i odd       j2: moved, h = 1,  a_i odd
      i3: fixed, h = -1, a_i even      j3: moved, h = -1, a_i even
      i4: fixed, h = -1, a_i odd       j4: moved, h = -1, a_i odd
    i4 further splits by the parity of (a_i - 1)/2 into i4_half_odd and
    i4_half_even.  In characteristic 2 the sign refinement is meaningless;
    only fixed/moved are reported and char_two is set.
    """

    pi: Permutation
    fixed: tuple
    moved: tuple
    i1: tuple
    i2: tuple
    i3: tuple
    i4: tuple
    j1: tuple
    j2: tuple
    j3: tuple
    j4: tuple
    i4_half_odd: tuple
    i4_half_even: tuple
    q_pi: Scalar
    char_two: bool


def partition(P: Presentation, pi: Permutation) -> PartitionReport:
    """Classify indices for a compatible involution; see PartitionReport."""
    if not pi.is_involution():
        raise NotInvolutionError(f"{pi} is not an involution")
    if not is_compatible(P, pi):
        raise NotCompatibleError(f"{pi} does not preserve the presentation")
    fixed = pi.fixed_points()
    moved = pi.moved_points()
    qp = q_pi(P, pi)
    if P.field.characteristic() == 2:
        empty = ()
        return PartitionReport(
            pi, fixed, moved, empty, empty, empty, empty, empty, empty, empty,
            empty, empty, empty, qp, True,
        )
    one = P.field.one
    minus_one = -one
    h = P.h_generators()
    classes: dict = {k: [] for k in ("i1", "i2", "i3", "i4", "j1", "j2", "j3", "j4")}
    for i in range(1, P.n + 1):
        hi = h[i - 1]
        if hi == one:
            sign = "1"
        elif hi == minus_one:
            sign = "3"
        else:
            raise NakayamaOrderError(
                f"h_e{i} is neither 1 nor -1; sign classification undefined"
            )
        even = P.a[i - 1] % 2 == 0
        offset = 0 if even else 1
        key = ("i" if pi(i) == i else "j") + str(int(sign) + offset)
        classes[key].append(i)
    i4 = tuple(classes["i4"])
    half_odd = tuple(i for i in i4 if ((P.a[i - 1] - 1) // 2) % 2 == 1)
    half_even = tuple(i for i in i4 if ((P.a[i - 1] - 1) // 2) % 2 == 0)
    return PartitionReport(
        pi,
        fixed,
        moved,
        tuple(classes["i1"]),
        tuple(classes["i2"]),
        tuple(classes["i3"]),
        tuple(classes["i4"]),
        tuple(classes["j1"]),
        tuple(classes["j2"]),
        tuple(classes["j3"]),
        tuple(classes["j4"]),
        half_odd,
        half_even,
        qp,
        False,
    )


def fourfold_or_char_two_error(report: PartitionReport) -> None:
    """Guard for callers that need the sign refinement."""
    if report.char_two:
        raise CharTwoError("sign classification unavailable in characteristic 2")
