"""Brute-force Chevalley-Eilenberg cohomology H^*(n_P, E).

Cochains Hom(Lambda^k n, E) are spanned by (S, v): the map sending the
wedge x_S of basis vectors to the module basis vector v.  The torus acts
on (S, v) with weight wt(v) - sum_{a in S} a, and the differential
preserves weight, so ranks are computed one weight block at a time.
"""
from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .. import linalg
from ..characters import weight_multiplicities
from ..nilcoh import kostant_decomposition
from ..rootdata import RootDatum, weight_from_fundamental
from .lie import NilpotentLieModel, RepresentationModule, coefficient_module, nilpotent_model

WeightKey = tuple[Fraction, ...]


@dataclass
class GradedCohomologyReport:
    """Dimensions and torus weights of H^k for k = 0..dim n."""

    cartan_type: str
    rank: int
    levi: tuple[int, ...]
    lam: tuple[int, ...]
    module: str
    weights: list[Counter] = field(default_factory=list)

    @property
    def dimensions(self) -> tuple[int, ...]:
        return tuple(sum(c.values()) for c in self.weights)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["degree", "dimension", "weight", "multiplicity"])
        for k, counter in enumerate(self.weights):
            dim = sum(counter.values())
            if not counter:
                w.writerow([k, 0, "", 0])
            for mu in sorted(counter):
                w.writerow([k, dim, _fmt(mu), counter[mu]])
        return buf.getvalue()


def _fmt(mu: Sequence[Fraction]) -> str:
    return "(" + ",".join(str(x) for x in mu) + ")"


def _sort_sign(seq: list[int]) -> tuple[int, tuple[int, ...]] | None:
    """Sign of the permutation sorting ``seq``, or None if it has repeats."""
    if len(set(seq)) != len(seq):
        return None
    sign = 1
    s = list(seq)
    for i in range(len(s)):
        for j in range(len(s) - 1 - i):
            if s[j] > s[j + 1]:
                s[j], s[j + 1] = s[j + 1], s[j]
                sign = -sign
    return sign, tuple(s)


def _cochain_weight(model, module, s, v) -> WeightKey:
    w = list(module.weights[v])
    for a in s:
        w = [x - y for x, y in zip(w, model.roots[a])]
    return tuple(Fraction(x) for x in w)


def _differential(model: NilpotentLieModel, module: RepresentationModule, k: int):
    """d_k as a sparse dict {(T, u): {(S, v): coef}}."""
    n = model.dim
    d: dict[tuple, dict[tuple, Fraction]] = {}
    for t in combinations(range(n), k + 1):
        for j in range(k + 1):
            # x_{t_j} . f(..., hat t_j, ...)
            s = t[:j] + t[j + 1:]
            act = module.action[t[j]]
            for u in range(module.dim):
                for v in range(module.dim):
                    c = act[u][v]
                    if c:
                        row = d.setdefault((t, u), {})
                        row[(s, v)] = row.get((s, v), Fraction(0)) + (-1) ** j * c
        for j in range(k + 1):
            for l in range(j + 1, k + 1):
                rest = [t[i] for i in range(k + 1) if i not in (j, l)]
                for c, coef in model.structure[t[j]][t[l]]:
                    srt = _sort_sign([c] + rest)
                    if srt is None:
                        continue
                    sign, s = srt
                    val = (-1) ** (j + l) * coef * sign
                    for v in range(module.dim):
                        row = d.setdefault((t, v), {})
                        row[(s, v)] = row.get((s, v), Fraction(0)) + val
    return d


def ce_cohomology(
    rd: RootDatum,
    levi: Iterable[int],
    lam: Sequence[int],
    model: NilpotentLieModel | None = None,
    module: RepresentationModule | None = None,
) -> GradedCohomologyReport:
    """H^*(n_P, E_lambda) with weights, from the explicit cochain complex.

    ``lam`` is in fundamental coordinates.  The module defaults to
    :func:`coefficient_module`.
    """
    levi = rd.check_subset(levi)
    model = model or nilpotent_model(rd, levi)
    module = module or coefficient_module(rd, model, lam)
    n = model.dim
    basis: list[dict[WeightKey, list]] = []
    for k in range(n + 1):
        blocks: dict[WeightKey, list] = {}
        for s in combinations(range(n), k):
            for v in range(module.dim):
                blocks.setdefault(_cochain_weight(model, module, s, v), []).append((s, v))
        basis.append(blocks)
    # ranks[k][mu] = rank of d_k on the mu block
    ranks: list[dict[WeightKey, int]] = []
    for k in range(n):
        d = _differential(model, module, k)
        rk = {}
        for mu, cols in basis[k].items():
            rows = basis[k + 1].get(mu, [])
            if not rows:
                rk[mu] = 0
                continue
            mat = [[d.get(r, {}).get(c, 0) for c in cols] for r in rows]
            rk[mu] = linalg.rank(mat)
        ranks.append(rk)
    report = GradedCohomologyReport(
        rd.cartan_type, rd.rank, tuple(sorted(levi)), tuple(int(x) for x in lam), module.name
    )
    for k in range(n + 1):
        counter: Counter = Counter()
        for mu, cols in basis[k].items():
            h = len(cols)
            if k < n:
                h -= ranks[k].get(mu, 0)
            if k > 0:
                h -= ranks[k - 1].get(mu, 0)
            if h:
                counter[mu] = h
        report.weights.append(counter)
    return report


def kostant_weights(rd: RootDatum, levi: Iterable[int], lam: Sequence[int]) -> list[Counter]:
    """Torus weights of H^k predicted by Kostant's theorem, degree by degree."""
    levi = rd.check_subset(levi)
    lam_w = weight_from_fundamental(rd, lam)
    n = len(rd.positive_roots) - len([r for r in rd.positive_roots if all(i + 1 in levi for i, c in enumerate(r) if c)])
    out = [Counter() for _ in range(n + 1)]
    for km in kostant_decomposition(rd, levi, lam_w):
        for mu, m in weight_multiplicities(rd, levi, km.highest_weight).items():
            out[km.degree][tuple(Fraction(x) for x in mu)] += m
    return out


def compare_with_kostant(
    rd: RootDatum, levi: Iterable[int], lam: Sequence[int], report: GradedCohomologyReport
) -> tuple[bool, str]:
    """(True, "") if the report agrees with Kostant's theorem, else (False, description of first mismatch)."""
    expected = kostant_weights(rd, levi, lam)
    got = report.weights
    if len(expected) != len(got):
        return False, f"degree range differs: expected 0..{len(expected) - 1}, report has 0..{len(got) - 1}"
    for k, (e, g) in enumerate(zip(expected, got)):
        if e != g:
            de, dg = sum(e.values()), sum(g.values())
            missing = sorted((e - g).elements())
            extra = sorted((g - e).elements())
            parts = [f"degree {k}: expected dimension {de}, got {dg}"]
            if missing:
                parts.append("missing weights " + " ".join(_fmt(m) for m in missing))
            if extra:
                parts.append("unexpected weights " + " ".join(_fmt(m) for m in extra))
            return False, "; ".join(parts)
    return True, ""


def run_ce_check(rd: RootDatum, levi: Iterable[int], lam: Sequence[int]) -> tuple[GradedCohomologyReport, bool, str]:
    report = ce_cohomology(rd, levi, lam)
    ok, diff = compare_with_kostant(rd, levi, lam, report)
    return report, ok, diff
