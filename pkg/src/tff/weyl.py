"""Weyl groups as integer matrices on root coordinates.

An element is identified by its action matrix ``M`` (column j is the image
of alpha_j), which is canonical; the reduced word stored alongside is the
lexicographically smallest one, ``w = s_{i1} s_{i2} ... s_{ik}``.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ResourceError
from .rootdata import ParabolicType, RootDatum, Weight, nilradical

DEFAULT_ORDER_CAP = 10**6

Mat = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class WeylElement:
    word: tuple[int, ...]
    matrix: Mat = field(repr=False)
    length: int

    def apply(self, v: Sequence) -> tuple:
        return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in self.matrix)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def word_str(self) -> str:
        return "e" if not self.word else "".join(f"s{i}" for i in self.word)


@dataclass(frozen=True)
class KostantSet:
    parabolic: ParabolicType
    representatives: tuple[WeylElement, ...]


def _identity(n: int) -> Mat:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _matmul(a: Mat, b: Mat) -> Mat:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def simple_reflection_matrix(rd: RootDatum, i: int) -> Mat:
    n = rd.rank
    cols = [rd.reflect(tuple(int(k == j) for k in range(n)), i) for j in range(n)]
    return tuple(tuple(int(cols[j][r]) for j in range(n)) for r in range(n))


def classical_order(rd: RootDatum) -> int:
    n = rd.rank
    t = rd.cartan_type
    if t == "A":
        return math.factorial(n + 1)
    if t in "BC":
        return 2**n * math.factorial(n)
    if t == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return 12


def order_cap() -> int:
    env = os.environ.get("TFF_GROUP_ORDER_CAP")
    if env is None:
        return DEFAULT_ORDER_CAP
    try:
        cap = int(env)
    except ValueError:
        raise ValueError(f"TFF_GROUP_ORDER_CAP must be an integer, got {env!r}") from None
    if cap < 1:
        raise ValueError("TFF_GROUP_ORDER_CAP must be positive")
    return cap


def inversion_count(rd: RootDatum, matrix: Mat) -> int:
    count = 0
    for r in rd.positive_roots:
        img = tuple(sum(row[j] * r[j] for j in range(rd.rank)) for row in matrix)
        if any(x < 0 for x in img):
            count += 1
    return count


_GROUPS: dict[RootDatum, tuple[WeylElement, ...]] = {}


def _generate(rd: RootDatum, generators: Sequence[int]) -> tuple[WeylElement, ...]:
    """Breadth-first closure under right multiplication by the given simple reflections.

    Levels are expanded in lexicographic word order with generators in
    increasing order, so the first word found for each element is its
    lexicographically least reduced word.
    """
    gens = {i: simple_reflection_matrix(rd, i) for i in generators}
    ident = _identity(rd.rank)
    found = {ident: ()}
    level = [((), ident)]
    out = [WeylElement((), ident, 0)]
    while level:
        nxt = []
        for word, m in level:
            for i in sorted(gens):
                m2 = _matmul(m, gens[i])
                if m2 not in found:
                    w2 = word + (i,)
                    found[m2] = w2
                    nxt.append((w2, m2))
        nxt.sort()
        out.extend(WeylElement(w, m, len(w)) for w, m in nxt)
        level = nxt
    return tuple(out)


def generate_weyl_group(rd: RootDatum, cap: int | None = None) -> tuple[WeylElement, ...]:
    """All elements of W, ordered by (length, reduced word)."""
    cap = order_cap() if cap is None else cap
    order = classical_order(rd)
    if order > cap:
        raise ResourceError(f"|W({rd.name})| = {order} exceeds the group-order cap {cap}")
    if rd not in _GROUPS:
        group = _generate(rd, rd.index_set)
        assert len(group) == order
        _GROUPS[rd] = group
    return _GROUPS[rd]


def inverse(rd: RootDatum, w: WeylElement) -> WeylElement:
    return element_from_word(rd, reversed(w.word))


def element_from_word(rd: RootDatum, word: Iterable[int]) -> WeylElement:
    m = _identity(rd.rank)
    for i in word:
        m = _matmul(m, simple_reflection_matrix(rd, i))
    for x in generate_weyl_group(rd):
        if x.matrix == m:
            return x
    raise AssertionError("element not in group")  # pragma: no cover


def multiply(rd: RootDatum, a: WeylElement, b: WeylElement) -> WeylElement:
    m = _matmul(a.matrix, b.matrix)
    for x in generate_weyl_group(rd):
        if x.matrix == m:
            return x
    raise AssertionError("product not in group")  # pragma: no cover


def _inverse_matrix(rd: RootDatum, w: WeylElement) -> Mat:
    m = _identity(rd.rank)
    for i in reversed(w.word):
        m = _matmul(m, simple_reflection_matrix(rd, i))
    return m


def is_kostant_representative(rd: RootDatum, w: WeylElement, levi: Iterable[int]) -> bool:
    """w^{-1} sends every positive root of the Levi to a positive root."""
    winv = _inverse_matrix(rd, w)
    lev = nilradical(rd, levi).levi_roots
    for r in lev:
        img = [sum(row[j] * r[j] for j in range(rd.rank)) for row in winv]
        if any(x < 0 for x in img):
            return False
    return True


def kostant_representatives(rd: RootDatum, levi: Iterable[int], cap: int | None = None) -> KostantSet:
    """Minimal-length representatives of the cosets W_I \\ W."""
    par = nilradical(rd, levi)
    group = generate_weyl_group(rd, cap)
    reps = tuple(w for w in group if is_kostant_representative(rd, w, par.levi))
    return KostantSet(par, reps)


def dot_action(rd: RootDatum, w: WeylElement, lam: Weight) -> Weight:
    """w(lam + rho) - rho, returned in root coordinates."""
    lam_r = rd.root_coords(lam)
    shifted = tuple(a + b for a, b in zip(lam_r, rd.rho))
    img = w.apply(shifted)
    return Weight(tuple(Fraction(a) - b for a, b in zip(img, rd.rho)))


def longest_element(rd: RootDatum, subset: Iterable[int] | None = None) -> WeylElement:
    gens = rd.index_set if subset is None else tuple(sorted(rd.check_subset(subset)))
    if subset is None:
        return generate_weyl_group(rd)[-1]
    return _generate(rd, gens)[-1]


def has_minus_one(rd: RootDatum, levi: Iterable[int]) -> bool:
    """Does the longest element of W_I act as -1 on the span of I?

    For a split Levi this is the condition for L_I(R) (modulo its split
    centre) to contain a compact maximal torus.
    """
    i_set = sorted(rd.check_subset(levi))
    if not i_set:
        return True
    w0 = longest_element(rd, i_set)
    for i in i_set:
        alpha = tuple(int(k == i - 1) for k in range(rd.rank))
        if w0.apply(alpha) != tuple(-x for x in alpha):
            return False
    return True


def length_by_inversions(rd: RootDatum, w: WeylElement) -> int:
    return inversion_count(rd, w.matrix)
