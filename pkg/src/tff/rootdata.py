"""Split reduced root systems with exact weight arithmetic.

Simple roots are indexed 1..rank, following Bourbaki's numbering of the
Dynkin diagram (so in C2 the short root is 1 and the long root is 2).
Weights are stored canonically by their coordinates in the basis of simple
roots; the fundamental-weight basis is derived through the Cartan matrix
``A[i][j] = <alpha_i^vee, alpha_j>``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import linalg

ROOT = "root"
FUNDAMENTAL = "fundamental"

_VALID = {"A": 1, "B": 2, "C": 2, "D": 3, "G": 2}

# classical counts of positive roots, used only as a self-check
_N_POSITIVE = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "G": lambda n: 6,
}


def cartan_matrix(cartan_type: str, rank: int) -> list[list[int]]:
    if cartan_type not in _VALID:
        raise ValueError(f"unknown Cartan type {cartan_type!r}; expected one of A, B, C, D, G")
    if not isinstance(rank, int) or rank < _VALID[cartan_type]:
        raise ValueError(f"type {cartan_type} needs rank >= {_VALID[cartan_type]}, got {rank!r}")
    if cartan_type == "G" and rank != 2:
        raise ValueError(f"type G only exists in rank 2, got {rank}")
    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    if cartan_type == "B":
        a[n - 1][n - 2] = -2
    elif cartan_type == "C":
        a[n - 2][n - 1] = -2
    elif cartan_type == "D":
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
    elif cartan_type == "G":
        a[0][1] = -3
    return a


def _symmetrizer(a: list[list[int]]) -> list[Fraction]:
    """d with d_i a_ij = d_j a_ji, normalised so the shortest root has d = 1."""
    n = len(a)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if a[i][j] != 0 and i != j and d[j] is None:
                    d[j] = d[i] * a[i][j] / a[j][i]
                    stack.append(j)
    smallest = min(d)
    return [x / smallest for x in d]


@dataclass(frozen=True)
class Weight:
    """Rational weight vector tagged with the basis its coordinates refer to."""

    coords: tuple[Fraction, ...]
    basis: str = ROOT

    def __post_init__(self):
        if self.basis not in (ROOT, FUNDAMENTAL):
            raise ValueError(f"unknown basis {self.basis!r}")
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    def __add__(self, other: Weight) -> Weight:
        self._check(other)
        return Weight(tuple(x + y for x, y in zip(self.coords, other.coords)), self.basis)

    def __sub__(self, other: Weight) -> Weight:
        self._check(other)
        return Weight(tuple(x - y for x, y in zip(self.coords, other.coords)), self.basis)

    def __neg__(self) -> Weight:
        return Weight(tuple(-x for x in self.coords), self.basis)

    def scale(self, k) -> Weight:
        return Weight(tuple(k * x for x in self.coords), self.basis)

    def _check(self, other):
        if self.basis != other.basis:
            raise ValueError("cannot combine weights given in different bases")

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class ParabolicType:
    levi: frozenset[int]
    delta_p: tuple[int, ...]
    nilradical_roots: tuple[tuple[int, ...], ...]
    levi_roots: tuple[tuple[int, ...], ...]


@dataclass(frozen=True, eq=False)
class RootDatum:
    """Root system of a split simply connected group of the given type."""

    cartan_type: str
    rank: int
    cartan: tuple[tuple[int, ...], ...] = field(repr=False)
    positive_roots: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def name(self) -> str:
        return f"{self.cartan_type}{self.rank}"

    @property
    def index_set(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    @property
    def simple_roots(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    @cached_property
    def symmetrizer(self) -> tuple[Fraction, ...]:
        return tuple(_symmetrizer([list(r) for r in self.cartan]))

    @cached_property
    def gram(self) -> tuple[tuple[Fraction, ...], ...]:
        """Invariant form on simple roots, (alpha_i, alpha_j) = d_i a_ij."""
        d = self.symmetrizer
        n = self.rank
        return tuple(tuple(d[i] * self.cartan[i][j] for j in range(n)) for i in range(n))

    @cached_property
    def cartan_inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(r) for r in linalg.inverse(self.cartan))

    @cached_property
    def rho(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(sum(col), 2) for col in zip(*self.positive_roots))

    @cached_property
    def fundamental_weights(self) -> tuple[tuple[Fraction, ...], ...]:
        """Root-basis coordinates of each fundamental weight (columns of A^-1)."""
        inv = self.cartan_inverse
        return tuple(tuple(inv[j][i] for j in range(self.rank)) for i in range(self.rank))

    @cached_property
    def root_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.positive_roots) | {tuple(-x for x in r) for r in self.positive_roots}

    # -- pairings -------------------------------------------------------------

    def coroot_pairing(self, weight: Sequence, i: int) -> Fraction:
        """<weight, alpha_i^vee> for a root-basis weight vector and 1-based i."""
        row = self.cartan[i - 1]
        return sum((row[j] * Fraction(weight[j]) for j in range(self.rank)), Fraction(0))

    def pairing_with_coroot(self, weight: Sequence, root: Sequence) -> Fraction:
        """<weight, beta^vee> for an arbitrary root beta (root-basis coordinates)."""
        return 2 * self.inner(weight, root) / self.inner(root, root)

    def inner(self, x: Sequence, y: Sequence) -> Fraction:
        g = self.gram
        n = self.rank
        return sum(
            (Fraction(x[i]) * g[i][j] * Fraction(y[j]) for i in range(n) for j in range(n) if x[i] and y[j]),
            Fraction(0),
        )

    def to_fundamental(self, coords: Sequence) -> tuple[Fraction, ...]:
        return tuple(Fraction(x) for x in linalg.matvec(self.cartan, [Fraction(c) for c in coords]))

    def to_root(self, coords: Sequence) -> tuple[Fraction, ...]:
        return tuple(linalg.matvec(self.cartan_inverse, [Fraction(c) for c in coords]))

    def root_coords(self, w: Weight) -> tuple[Fraction, ...]:
        if len(w.coords) != self.rank:
            raise ValueError(f"weight {w} has {len(w.coords)} coordinates, {self.name} needs {self.rank}")
        return w.coords if w.basis == ROOT else self.to_root(w.coords)

    def fundamental_coords(self, w: Weight) -> tuple[Fraction, ...]:
        if len(w.coords) != self.rank:
            raise ValueError(f"weight {w} has {len(w.coords)} coordinates, {self.name} needs {self.rank}")
        return w.coords if w.basis == FUNDAMENTAL else self.to_fundamental(w.coords)

    def is_dominant(self, w: Weight, subset: Iterable[int] | None = None) -> bool:
        f = self.fundamental_coords(w)
        idx = self.index_set if subset is None else subset
        return all(f[i - 1] >= 0 for i in idx)

    def is_integral(self, w: Weight) -> bool:
        return all(c.denominator == 1 for c in self.fundamental_coords(w))

    def reflect(self, coords: Sequence, i: int) -> tuple:
        """Simple reflection s_i on a root-basis vector."""
        c = self.coroot_pairing(coords, i)
        out = list(coords)
        out[i - 1] = out[i - 1] - c
        return tuple(out)

    def check_subset(self, subset: Iterable[int]) -> frozenset[int]:
        s = frozenset(subset)
        bad = sorted(x for x in s if x not in self.index_set)
        if bad:
            raise ValueError(f"simple-root indices {bad} not in 1..{self.rank}")
        return s

    def __eq__(self, other):
        return isinstance(other, RootDatum) and (self.cartan_type, self.rank) == (other.cartan_type, other.rank)

    def __hash__(self):
        return hash((self.cartan_type, self.rank))


def _positive_roots(cartan: list[list[int]]) -> tuple[tuple[int, ...], ...]:
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(n):
                c = sum(cartan[i][j] * r[j] for j in range(n))
                s = list(r)
                s[i] -= c
                s = tuple(s)
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    pos = [r for r in seen if all(x >= 0 for x in r)]
    return tuple(sorted(pos, key=lambda r: (sum(r), tuple(-x for x in r))))


_CACHE: dict[tuple[str, int], RootDatum] = {}


def build_root_datum(cartan_type: str, rank: int) -> RootDatum:
    """Root datum of the given type, with positive roots found by reflection closure."""
    key = (cartan_type, rank)
    if key in _CACHE:
        return _CACHE[key]
    a = cartan_matrix(cartan_type, rank)
    pos = _positive_roots(a)
    expected = _N_POSITIVE[cartan_type](rank)
    if len(pos) != expected:  # pragma: no cover - would mean a wrong Cartan matrix
        raise AssertionError(f"{cartan_type}{rank}: found {len(pos)} positive roots, expected {expected}")
    rd = RootDatum(cartan_type, rank, tuple(tuple(r) for r in a), pos)
    _CACHE[key] = rd
    return rd


def convert_basis(rd: RootDatum, w: Weight, target_basis: str) -> Weight:
    if target_basis == ROOT:
        return Weight(rd.root_coords(w), ROOT)
    if target_basis == FUNDAMENTAL:
        return Weight(rd.fundamental_coords(w), FUNDAMENTAL)
    raise ValueError(f"unknown basis {target_basis!r}")


def support(root: Sequence) -> frozenset[int]:
    return frozenset(i + 1 for i, c in enumerate(root) if c != 0)


def nilradical(rd: RootDatum, levi: Iterable[int]) -> ParabolicType:
    """Standard parabolic with Levi generated by ``levi``: its Delta_P and Phi(n_P)."""
    i_set = rd.check_subset(levi)
    nil, lev = [], []
    for r in rd.positive_roots:
        (lev if support(r) <= i_set else nil).append(r)
    delta_p = tuple(i for i in rd.index_set if i not in i_set)
    return ParabolicType(i_set, delta_p, tuple(nil), tuple(lev))


def fundamental_weight(rd: RootDatum, i: int) -> Weight:
    return Weight(rd.fundamental_weights[i - 1], ROOT)


def weight_from_fundamental(rd: RootDatum, coords: Sequence) -> Weight:
    if len(coords) != rd.rank:
        raise ValueError(f"expected {rd.rank} fundamental coordinates, got {len(coords)}")
    return Weight(rd.to_root(coords), ROOT)
