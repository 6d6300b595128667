"""Torus elements, weight multiplicities and exact character values."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .cyclotomic import ONE, ZERO, CycValue, Magnitude, cyc_sum
from .errors import NeedsExtension
from .rootdata import FUNDAMENTAL, RootDatum, Weight, nilradical
from .weyl import WeylElement, inverse


@dataclass(frozen=True)
class AlgebraicPhase:
    """A unit-modulus number given by its minimal polynomial over Q.

    Used for torus values whose argument is not a rational multiple of 2 pi.
    ``angle`` (in turns) only picks out the root and feeds the float display;
    no exact arithmetic is ever done with it.
    """

    minpoly: tuple[Fraction, ...]
    angle: float

    def __post_init__(self):
        object.__setattr__(self, "minpoly", tuple(Fraction(c) for c in self.minpoly))


Phase = Fraction | AlgebraicPhase


@dataclass(frozen=True)
class ToralElement:
    """Semisimple torus element, recorded by its value m_i * e(theta_i) on each fundamental weight."""

    magnitudes: tuple[Magnitude, ...]
    phases: tuple[Phase, ...]

    def __post_init__(self):
        if len(self.magnitudes) != len(self.phases):
            raise ValueError("magnitudes and phases must have the same length")
        mags = tuple(m if isinstance(m, Magnitude) else Magnitude.of(m) for m in self.magnitudes)
        ph = tuple(p if isinstance(p, AlgebraicPhase) else Fraction(p) % 1 for p in self.phases)
        object.__setattr__(self, "magnitudes", mags)
        object.__setattr__(self, "phases", ph)

    @classmethod
    def identity(cls, rank: int) -> ToralElement:
        return cls((Magnitude(),) * rank, (Fraction(0),) * rank)

    @classmethod
    def from_values(cls, magnitudes: Sequence, phases: Sequence) -> ToralElement:
        return cls(tuple(magnitudes), tuple(phases))

    @property
    def rank(self) -> int:
        return len(self.phases)

    @property
    def has_algebraic_phase(self) -> bool:
        return any(isinstance(p, AlgebraicPhase) for p in self.phases)

    def inverse(self) -> ToralElement:
        ph = []
        for p in self.phases:
            if isinstance(p, AlgebraicPhase):
                # the conjugate root has the same minimal polynomial (real coefficients)
                ph.append(AlgebraicPhase(p.minpoly, -p.angle))
            else:
                ph.append(-p)
        return ToralElement(tuple(m.inverse() for m in self.magnitudes), tuple(ph))

    def split_part(self) -> ToralElement:
        return ToralElement(self.magnitudes, (Fraction(0),) * self.rank)

    def elliptic_part(self) -> ToralElement:
        return ToralElement((Magnitude(),) * self.rank, self.phases)

    def __mul__(self, other: ToralElement) -> ToralElement:
        if self.has_algebraic_phase or other.has_algebraic_phase:
            raise NeedsExtension("product of torus elements with algebraic phases")
        return ToralElement(
            tuple(a * b for a, b in zip(self.magnitudes, other.magnitudes)),
            tuple(a + b for a, b in zip(self.phases, other.phases)),
        )

    def act(self, rd: RootDatum, w: WeylElement) -> ToralElement:
        """The conjugate w e w^{-1}, whose value at mu is e(w^{-1} mu)."""
        winv = inverse(rd, w)
        mags, phases = [], []
        for i in range(rd.rank):
            mu = winv.apply(rd.fundamental_weights[i])
            m, p = _monomial(self, _integral_coords(rd, mu))
            mags.append(m)
            phases.append(p)
        return ToralElement(tuple(mags), tuple(phases))


def _integral_coords(rd: RootDatum, root_coords: Sequence) -> tuple[int, ...]:
    f = rd.to_fundamental(root_coords)
    if any(c.denominator != 1 for c in f):
        raise ValueError(f"weight with fundamental coordinates {tuple(map(str, f))} is not integral")
    return tuple(int(c) for c in f)


def _monomial(e: ToralElement, fund: Sequence[int]) -> tuple[Magnitude, Fraction]:
    mag = Magnitude()
    phase = Fraction(0)
    for k, m, p in zip(fund, e.magnitudes, e.phases):
        if k == 0:
            continue
        if isinstance(p, AlgebraicPhase):
            raise NeedsExtension(
                "needs extension: weight pairs nontrivially with an algebraic (non-torsion) phase"
            )
        mag = mag * m**k
        phase += k * p
    return mag, phase % 1


def evaluate(e: ToralElement, lam: Weight, rd: RootDatum | None = None) -> CycValue:
    """Value of the character ``lam`` at ``e``; ``lam`` must be integral."""
    if lam.basis == FUNDAMENTAL:
        f = lam.coords
    else:
        if rd is None:
            raise ValueError("a root datum is needed to evaluate a root-basis weight")
        f = rd.to_fundamental(lam.coords)
    if len(f) != e.rank:
        raise ValueError(f"weight has {len(f)} coordinates but the torus element has rank {e.rank}")
    if any(Fraction(c).denominator != 1 for c in f):
        raise ValueError(f"cannot evaluate at non-integral weight {tuple(map(str, f))}")
    mag, phase = _monomial(e, [int(c) for c in f])
    return CycValue.monomial(1, mag, phase)


def eval_root_coords(rd: RootDatum, e: ToralElement, coords: Sequence) -> CycValue:
    mag, phase = _monomial(e, _integral_coords(rd, coords))
    return CycValue.monomial(1, mag, phase)


def root_value(rd: RootDatum, e: ToralElement, root: Sequence) -> Fraction:
    """alpha(e) for the split part of e; a positive rational whenever the magnitudes allow it."""
    mag, _ = _monomial(e.split_part(), _integral_coords(rd, root))
    return mag.as_fraction()


# -- Levi representations ---------------------------------------------------------

def _levi_data(rd: RootDatum, levi: frozenset[int]):
    par = nilradical(rd, levi)
    pos = par.levi_roots
    rho_i = tuple(Fraction(sum(col), 2) for col in zip(*pos)) if pos else (Fraction(0),) * rd.rank
    return pos, rho_i


def _check_levi_dominant(rd: RootDatum, levi: frozenset[int], beta: Sequence) -> None:
    f = rd.to_fundamental(beta)
    if any(c.denominator != 1 for c in f):
        raise ValueError(f"highest weight {tuple(map(str, f))} is not integral")
    bad = [i for i in sorted(levi) if f[i - 1] < 0]
    if bad:
        raise ValueError(
            f"highest weight {tuple(map(str, f))} is not dominant for the Levi (negative on {bad})"
        )


def weight_multiplicities(rd: RootDatum, levi: Iterable[int], beta: Weight) -> dict[tuple, int]:
    """Weights of the irreducible L_I-module of highest weight ``beta``, by Freudenthal's recursion.

    Keys are root-basis coordinate tuples.
    """
    levi = rd.check_subset(levi)
    b = rd.root_coords(beta)
    _check_levi_dominant(rd, levi, b)
    return dict(_freudenthal(rd, levi, b))


@lru_cache(maxsize=4096)
def _freudenthal(rd: RootDatum, levi: frozenset[int], beta: tuple) -> tuple:
    pos, rho_i = _levi_data(rd, levi)
    mult: dict[tuple, int] = {beta: 1}
    if not levi:
        return tuple(mult.items())
    simple = [tuple(int(k == i - 1) for k in range(rd.rank)) for i in sorted(levi)]
    br = tuple(x + y for x, y in zip(beta, rho_i))
    norm_top = rd.inner(br, br)
    level = [beta]
    while level:
        candidates = sorted({tuple(x - y for x, y in zip(mu, s)) for mu in level for s in simple})
        nxt = []
        for mu in candidates:
            mr = tuple(x + y for x, y in zip(mu, rho_i))
            denom = norm_top - rd.inner(mr, mr)
            if denom <= 0:
                continue
            total = Fraction(0)
            for a in pos:
                k = 1
                while True:
                    nu = tuple(x + k * y for x, y in zip(mu, a))
                    m = mult.get(nu)
                    if m is None:
                        # weights above mu along a form an unbroken string
                        break
                    total += m * rd.inner(nu, a)
                    k += 1
            val = 2 * total / denom
            if val:
                assert val.denominator == 1 and val > 0
                mult[mu] = int(val)
                nxt.append(mu)
        level = nxt
    return tuple(mult.items())


def weyl_dimension(rd: RootDatum, levi: Iterable[int], beta: Weight) -> int:
    """Weyl dimension formula for the Levi L_I."""
    levi = rd.check_subset(levi)
    b = rd.root_coords(beta)
    _check_levi_dominant(rd, levi, b)
    pos, rho_i = _levi_data(rd, levi)
    br = tuple(x + y for x, y in zip(b, rho_i))
    num = Fraction(1)
    for a in pos:
        num *= rd.inner(br, a) / rd.inner(rho_i, a)
    assert num.denominator == 1
    return int(num)


def character_value(rd: RootDatum, levi: Iterable[int], beta: Weight, e: ToralElement) -> CycValue:
    """Tr(e; V^L_beta) as an exact value."""
    mults = weight_multiplicities(rd, levi, beta)
    if e.has_algebraic_phase:
        # fail early and clearly rather than inside the sum
        for mu in mults:
            eval_root_coords(rd, e, mu)
    return cyc_sum(eval_root_coords(rd, e, mu) * m for mu, m in sorted(mults.items()))


def nilradical_det_factor(rd: RootDatum, levi: Iterable[int], e: ToralElement) -> CycValue:
    """det(1 - Ad(e); n_P) = prod over roots alpha of n_P of (1 - alpha(e))."""
    out = ONE
    for a in nilradical(rd, levi).nilradical_roots:
        out = out * (ONE - eval_root_coords(rd, e, a))
    return out


def exterior_trace(rd: RootDatum, levi: Iterable[int], e: ToralElement) -> CycValue:
    """sum_i (-1)^i Tr(e^{-1}; Lambda^i n_P^*), expanded over subsets of roots."""
    roots = nilradical(rd, levi).nilradical_roots
    einv = e.inverse()
    total = ZERO
    for k in range(len(roots) + 1):
        for subset in combinations(roots, k):
            wt = tuple(-sum(col) for col in zip(*subset)) if subset else (0,) * rd.rank
            term = eval_root_coords(rd, einv, wt)
            total = total + (term if k % 2 == 0 else -term)
    return total


def levi_rho(rd: RootDatum, levi: Iterable[int]) -> tuple[Fraction, ...]:
    return _levi_data(rd, rd.check_subset(levi))[1]


def is_root_of_unity_phase(p: Phase) -> bool:
    return not isinstance(p, AlgebraicPhase)


def phase_float(p: Phase) -> float:
    return p.angle if isinstance(p, AlgebraicPhase) else float(p)


def value_float(e: ToralElement, i: int) -> complex:
    import cmath

    return float(e.magnitudes[i]) * cmath.exp(2j * math.pi * phase_float(e.phases[i]))
