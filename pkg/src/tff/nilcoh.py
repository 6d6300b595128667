"""Kostant's description of H^*(n_P, E), quadrants and stalks with supports.

For the standard parabolic with Levi generated by ``levi`` (a set of simple
root indices), ``Delta_P`` is the complement of ``levi``.  The pairing of a
weight with the dual coweight ``t_alpha`` is the coefficient of alpha in the
weight's simple-root expansion, which is exact and needs no choice of form.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .characters import weyl_dimension
from .rootdata import RootDatum, Weight, nilradical
from .weyl import WeylElement, dot_action, generate_weyl_group, kostant_representatives

FINITE = "finite"
MIDDLE = "middle"
PLUS_INFINITY = "plus_infinity"
MINUS_INFINITY = "minus_infinity"
KINDS = (FINITE, MIDDLE, PLUS_INFINITY, MINUS_INFINITY)

_ALIASES = {
    "middle": MIDDLE,
    "plus-inf": PLUS_INFINITY,
    "plus_infinity": PLUS_INFINITY,
    "+inf": PLUS_INFINITY,
    "minus-inf": MINUS_INFINITY,
    "minus_infinity": MINUS_INFINITY,
    "-inf": MINUS_INFINITY,
}


@dataclass(frozen=True)
class WeightProfile:
    kind: str
    coords: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown weight profile kind {self.kind!r}")
        if (self.kind == FINITE) != (self.coords is not None):
            raise ValueError("coordinates are given exactly when the profile is finite")
        if self.coords is not None:
            object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @classmethod
    def finite(cls, coords: Sequence) -> WeightProfile:
        return cls(FINITE, tuple(coords))

    @classmethod
    def parse(cls, text: str) -> WeightProfile:
        """'middle', 'plus-inf', 'minus-inf' or comma-separated root-basis rationals."""
        t = text.strip()
        if t.lower() in _ALIASES:
            return cls(_ALIASES[t.lower()])
        return cls.finite([Fraction(x) for x in t.split(",")])

    @property
    def is_infinite(self) -> bool:
        return self.kind in (PLUS_INFINITY, MINUS_INFINITY)

    def root_coords(self, rd: RootDatum) -> tuple[Fraction, ...]:
        """Root-basis coordinates; only for finite and middle profiles."""
        if self.kind == MIDDLE:
            return tuple(-x for x in rd.rho)
        if self.kind == FINITE:
            if len(self.coords) != rd.rank:
                raise ValueError(f"weight profile has {len(self.coords)} coordinates, {rd.name} needs {rd.rank}")
            return self.coords
        raise ValueError(f"profile {self.kind} has no finite coordinates")

    def __str__(self):
        if self.kind == FINITE:
            return ",".join(str(c) for c in self.coords)
        return self.kind


MIDDLE_PROFILE = WeightProfile(MIDDLE)


@dataclass(frozen=True)
class KostantModule:
    w: WeylElement
    degree: int
    highest_weight: Weight
    quadrant: frozenset[int]


@dataclass(frozen=True)
class StalkTable:
    levi: frozenset[int]
    delta_p: tuple[int, ...]
    support: frozenset[int]
    entries: tuple[tuple[int, KostantModule], ...]


def _check_lambda(rd: RootDatum, lam: Weight) -> None:
    f = rd.fundamental_coords(lam)
    if any(c.denominator != 1 or c < 0 for c in f):
        raise ValueError(f"lambda = {tuple(map(str, f))} is not dominant integral")


def quadrant_of(gamma: Sequence, nu: Sequence, delta_p: Iterable[int]) -> frozenset[int]:
    """{alpha in Delta_P : coefficient of alpha in gamma - nu is < 0} (strict)."""
    return frozenset(a for a in delta_p if Fraction(gamma[a - 1]) - Fraction(nu[a - 1]) < 0)


def i_nu(rd: RootDatum, levi: Iterable[int], w: WeylElement, lam: Weight, nu: WeightProfile) -> frozenset[int]:
    par = nilradical(rd, levi)
    if nu.kind == MINUS_INFINITY:
        return frozenset()
    if nu.kind == PLUS_INFINITY:
        return frozenset(par.delta_p)
    gamma = dot_action(rd, w, lam).coords
    return quadrant_of(gamma, nu.root_coords(rd), par.delta_p)


def kostant_decomposition(
    rd: RootDatum, levi: Iterable[int], lam: Weight, nu: WeightProfile = MIDDLE_PROFILE
) -> list[KostantModule]:
    """H^*(n_P, E_lambda) as a sum of Levi modules, one per Kostant representative."""
    _check_lambda(rd, lam)
    ks = kostant_representatives(rd, levi)
    out = []
    for w in ks.representatives:
        hw = dot_action(rd, w, lam)
        out.append(KostantModule(w, w.length, hw, i_nu(rd, levi, w, lam, nu)))
    return out


def in_cone(gamma: Sequence, nu: Sequence, delta_p: Iterable[int], j: Iterable[int]) -> bool:
    """gamma lies in the cone >= nu(J): coefficient >= that of nu off J."""
    j = set(j)
    return all(Fraction(gamma[a - 1]) >= Fraction(nu[a - 1]) for a in delta_p if a not in j)


def quadrant_membership(rd: RootDatum, levi: Iterable[int], gamma: Weight, nu: WeightProfile, j: Iterable[int]) -> bool:
    par = nilradical(rd, levi)
    j = frozenset(j)
    if not j <= set(par.delta_p):
        raise ValueError(f"J = {sorted(j)} is not a subset of Delta_P = {list(par.delta_p)}")
    return quadrant_of(rd.root_coords(gamma), nu.root_coords(rd), par.delta_p) == j


def quadrant_membership_by_cones(
    rd: RootDatum,
    levi: Iterable[int],
    gamma: Weight,
    nu: WeightProfile,
    j: Iterable[int],
    codim_one_only: bool = False,
) -> bool:
    """Membership through the set difference of cones.

    gamma is in quadrant J iff it lies in the cone >= nu(J) but in no cone
    >= nu(K) for K a proper subset of J (or only |K| = |J| - 1 when
    ``codim_one_only``).
    """
    par = nilradical(rd, levi)
    j = tuple(sorted(j))
    g = rd.root_coords(gamma)
    n = nu.root_coords(rd)
    if not in_cone(g, n, par.delta_p, j):
        return False
    sizes = [len(j) - 1] if codim_one_only else range(len(j))
    for k in sizes:
        if k < 0:
            continue
        for sub in combinations(j, k):
            if in_cone(g, n, par.delta_p, sub):
                return False
    return True


def stalk_with_supports(
    rd: RootDatum, levi: Iterable[int], j: Iterable[int], lam: Weight, nu: WeightProfile
) -> StalkTable:
    """Kostant modules in quadrant J, each shifted up by |J| in degree."""
    par = nilradical(rd, levi)
    j = frozenset(j)
    if not j <= set(par.delta_p):
        raise ValueError(f"J = {sorted(j)} is not a subset of Delta_P = {list(par.delta_p)}")
    mods = kostant_decomposition(rd, par.levi, lam, nu)
    entries = tuple((m.degree + len(j), m) for m in mods if m.quadrant == j)
    return StalkTable(par.levi, par.delta_p, j, entries)


def proxy_scale(rd: RootDatum, lam: Weight) -> Fraction:
    """M = 1 + max |root coordinate| of w(lam + rho) - rho over the whole Weyl group."""
    biggest = Fraction(0)
    for w in generate_weyl_group(rd):
        for c in dot_action(rd, w, lam).coords:
            biggest = max(biggest, abs(c))
    return 1 + biggest


def proxy_profile(rd: RootDatum, lam: Weight, nu: WeightProfile) -> WeightProfile:
    """Finite stand-in for nu = +/-infinity: nu = +/- 2 M rho.

    Every root coordinate of rho is at least 1/2, so 2 M rho beats every
    coordinate of every w(lam + rho) - rho strictly.
    """
    if not nu.is_infinite:
        raise ValueError("proxy_profile needs an infinite weight profile")
    sign = 1 if nu.kind == PLUS_INFINITY else -1
    m = proxy_scale(rd, lam)
    return WeightProfile.finite([sign * 2 * m * r for r in rd.rho])


def graded_dimensions(rd: RootDatum, levi: Iterable[int], lam: Weight) -> list[int]:
    levi = rd.check_subset(levi)
    mods = kostant_decomposition(rd, levi, lam)
    top = len(nilradical(rd, levi).nilradical_roots)
    dims = [0] * (top + 1)
    for m in mods:
        dims[m.degree] += weyl_dimension(rd, levi, m.highest_weight)
    return dims


def _fmt_set(rd: RootDatum, s: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(s)) + "}"


def table_rows(rd: RootDatum, levi: Iterable[int], lam: Weight, nu: WeightProfile) -> list[dict]:
    levi = rd.check_subset(levi)
    rows = []
    for m in kostant_decomposition(rd, levi, lam, nu):
        fund = rd.fundamental_coords(m.highest_weight)
        rows.append(
            {
                "word": m.w.word_str(),
                "length": m.degree,
                "highest_weight": [str(c) for c in fund],
                "quadrant": sorted(m.quadrant),
                "shifted_degree": m.degree + len(m.quadrant),
                "weyl_dimension": weyl_dimension(rd, levi, m.highest_weight),
            }
        )
    return rows


def table_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["word", "length", "highest_weight", "quadrant", "shifted_degree", "weyl_dimension"])
    for r in rows:
        writer.writerow(
            [
                r["word"],
                r["length"],
                " ".join(r["highest_weight"]),
                "{" + ",".join(str(i) for i in r["quadrant"]) + "}",
                r["shifted_degree"],
                r["weyl_dimension"],
            ]
        )
    return buf.getvalue()


def table_json(rd: RootDatum, levi, lam: Weight, nu: WeightProfile, rows: list[dict]) -> str:
    payload = {
        "group": {"type": rd.cartan_type, "rank": rd.rank},
        "levi_subset": sorted(levi),
        "lambda": [str(c) for c in rd.fundamental_coords(lam)],
        "nu": str(nu),
        "rows": rows,
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def table_from_csv(text: str) -> list[dict]:
    rows = []
    for r in csv.DictReader(io.StringIO(text)):
        q = r["quadrant"].strip("{}")
        rows.append(
            {
                "word": r["word"],
                "length": int(r["length"]),
                "highest_weight": r["highest_weight"].split(),
                "quadrant": [int(x) for x in q.split(",")] if q else [],
                "shifted_degree": int(r["shifted_degree"]),
                "weyl_dimension": int(r["weyl_dimension"]),
            }
        )
    return rows
