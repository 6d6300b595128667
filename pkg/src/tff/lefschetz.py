"""Assembly of the Lefschetz number from a fixed-point dataset.

Each elliptic class e in a double coset of the stratum attached to the
standard parabolic P (Levi generated by ``levi``) contributes

    r * chi_c * (-1)^{|D+|} * sum_{w in W^1_P, I_nu(w) = D+} (-1)^{l(w)} Tr(e^{-1}; V^L_{w.lambda})

where D+ is the set of simple roots of Delta_P with alpha(a_P) < 1.  The
global number is the sum over strata, double cosets and classes.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .characters import ToralElement, character_value, nilradical_det_factor, root_value
from .cyclotomic import CycValue, cyc_sum
from .dataset import (
    Diagnostic,
    DoubleCosetEntry,
    EllipticClassEntry,
    FixedPointDataset,
    Stratum,
    parse_dataset,
)
from .errors import DatasetError
from .nilcoh import MINUS_INFINITY, WeightProfile, kostant_decomposition, proxy_profile
from .rootdata import RootDatum, Weight, nilradical
from .weyl import has_minus_one


def classify_roots(
    rd: RootDatum, levi: Iterable[int], a: Mapping[int, Fraction]
) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """Split Delta_P into expanding (a < 1), contracting (a > 1) and neutral (a = 1) roots."""
    par = nilradical(rd, levi)
    missing = [i for i in par.delta_p if i not in a]
    if missing:
        raise ValueError(f"torus factor has no value for simple roots {missing}")
    plus, minus, zero = set(), set(), set()
    for i in par.delta_p:
        v = Fraction(a[i])
        if v <= 0:
            raise ValueError(f"torus factor value for root {i} must be positive, got {v}")
        (plus if v < 1 else minus if v > 1 else zero).add(i)
    return frozenset(plus), frozenset(minus), frozenset(zero)


def maximal_neutral_parabolic(rd: RootDatum, levi: Iterable[int], a: Mapping[int, Fraction]) -> frozenset[int]:
    """Levi subset of P-dagger, the largest parabolic containing P in whose new directions a is neutral."""
    levi = rd.check_subset(levi)
    _, _, zero = classify_roots(rd, levi, a)
    return levi | zero


def split_part_mismatch(
    rd: RootDatum, levi: Iterable[int], coset: DoubleCosetEntry, cls: EllipticClassEntry
) -> str | None:
    """Why the class's torus representative disagrees with the coset's torus factor, if it does."""
    par = nilradical(rd, levi)
    factor = coset.factor
    if cls.torus_rep.rank != rd.rank:
        return f"torus_rep has rank {cls.torus_rep.rank}, group has rank {rd.rank}"
    for i in par.delta_p:
        alpha = tuple(int(k == i - 1) for k in range(rd.rank))
        try:
            got = root_value(rd, cls.torus_rep, alpha)
        except ValueError:
            return f"split part of torus_rep is irrational on simple root {i}"
        want = factor.get(i)
        if want is not None and got != want:
            return f"split part of torus_rep gives alpha_{i}(a) = {got}, torus factor says {want}"
    return None


def kostant_trace_sum(
    rd: RootDatum, levi: Iterable[int], lam: Weight, nu: WeightProfile, gate: frozenset[int], e: ToralElement
) -> CycValue:
    """sum over w in W^1_P with I_nu(w) = gate of (-1)^{l(w)} Tr(e^{-1}; V^L_{w.lambda})."""
    levi = rd.check_subset(levi)
    einv = e.inverse()
    terms = []
    for m in kostant_decomposition(rd, levi, lam, nu):
        if m.quadrant != gate:
            continue
        tr = character_value(rd, levi, m.highest_weight, einv)
        terms.append(tr if m.degree % 2 == 0 else -tr)
    return cyc_sum(terms)


def _checked_classification(rd, levi, coset, cls):
    why = split_part_mismatch(rd, levi, coset, cls)
    if why is not None:
        raise DatasetError(
            f"class {cls.label!r} in double coset {coset.label!r}: {why}",
            [Diagnostic("error", f"{coset.label}/{cls.label}", why)],
        )
    return classify_roots(rd, levi, coset.factor)


def local_contribution(
    rd: RootDatum,
    levi: Iterable[int],
    lam: Weight,
    nu: WeightProfile,
    coset: DoubleCosetEntry,
    cls: EllipticClassEntry,
) -> CycValue:
    levi = rd.check_subset(levi)
    plus, _, _ = _checked_classification(rd, levi, coset, cls)
    s = kostant_trace_sum(rd, levi, lam, nu, plus, cls.torus_rep)
    sign = -1 if len(plus) % 2 else 1
    return s * (coset.r * cls.chi_c * sign)


def _sorted_cosets(stratum: Stratum):
    for c in sorted(stratum.double_cosets, key=lambda c: c.label):
        for e in sorted(c.classes, key=lambda e: e.label):
            yield c, e


def _sorted_strata(ds: FixedPointDataset):
    return sorted(ds.strata, key=lambda s: (len(s.levi), sorted(s.levi)))


def stratum_contribution(rd: RootDatum, stratum: Stratum, lam: Weight, nu: WeightProfile) -> CycValue:
    return cyc_sum(local_contribution(rd, stratum.levi, lam, nu, c, e) for c, e in _sorted_cosets(stratum))


def _require_valid(ds: FixedPointDataset) -> None:
    errors = [d for d in validate_dataset(ds) if d.level == "error"]
    if errors:
        raise DatasetError("invalid dataset: " + "; ".join(str(d) for d in errors), errors)


def lefschetz_number(ds: FixedPointDataset, nu: WeightProfile | None = None) -> CycValue:
    """Total Lefschetz number; ``nu`` overrides the dataset's weight profile."""
    _require_valid(ds)
    rd = ds.root_datum
    lam = ds.lambda_weight
    nu = ds.nu if nu is None else nu
    return cyc_sum(stratum_contribution(rd, s, lam, nu) for s in _sorted_strata(ds))


def stratum_breakdown(ds: FixedPointDataset, formula: str = "main") -> list[tuple[frozenset[int], CycValue]]:
    """Per-stratum values L(P, y) (or L'(P, y) for ``formula='alternate'``)."""
    _require_valid(ds)
    rd = ds.root_datum
    lam = ds.lambda_weight
    out = []
    for s in _sorted_strata(ds):
        if formula == "alternate":
            v = cyc_sum(_alternate_term(rd, s.levi, lam, ds.nu, c, e) for c, e in _sorted_cosets(s))
        else:
            v = stratum_contribution(rd, s, lam, ds.nu)
        out.append((s.levi, v))
    return out


def _missing_chi(ds: FixedPointDataset) -> list[str]:
    missing = []
    for si, s in enumerate(ds.strata):
        for ci, c in enumerate(s.double_cosets):
            for ei, e in enumerate(c.classes):
                if e.chi is None:
                    missing.append(f"$.strata[{si}].double_cosets[{ci}].classes[{ei}].chi")
    return missing


def _alternate_term(rd, levi, lam, nu, coset, cls) -> CycValue:
    plus, _, zero = _checked_classification(rd, levi, coset, cls)
    gate = plus | zero
    s = kostant_trace_sum(rd, levi, lam, nu, gate, cls.torus_rep)
    sign = -1 if len(gate) % 2 else 1
    return s * (coset.r * cls.chi * sign)


def alternate_lefschetz(ds: FixedPointDataset) -> CycValue:
    """Variant with gate D+ u D0, sign (-1)^{|D+ u D0|} and the ordinary Euler characteristic chi."""
    missing = _missing_chi(ds)
    if missing:
        raise DatasetError(
            "alternate formula needs 'chi' on every class",
            [Diagnostic("error", p, "missing field chi") for p in missing],
        )
    _require_valid(ds)
    rd = ds.root_datum
    lam = ds.lambda_weight
    return cyc_sum(
        _alternate_term(rd, s.levi, lam, ds.nu, c, e) for s in _sorted_strata(ds) for c, e in _sorted_cosets(s)
    )


def infinite_weight_value(ds: FixedPointDataset) -> CycValue:
    """Closed form for nu = -infinity or +infinity.

    Only classes with D+ empty (resp. D+ = Delta_P) survive, and for them
    the alternating Kostant sum collapses to Tr(e^{-1}; E) det(1 - Ad(e); n_P).
    """
    if not ds.nu.is_infinite:
        raise ValueError("infinite_weight_value needs nu = plus_infinity or minus_infinity")
    _require_valid(ds)
    rd = ds.root_datum
    lam = ds.lambda_weight
    everything = frozenset(rd.index_set)
    terms = []
    for s in _sorted_strata(ds):
        par = nilradical(rd, s.levi)
        for c, e in _sorted_cosets(s):
            plus, _, _ = classify_roots(rd, s.levi, c.factor)
            gate = frozenset() if ds.nu.kind == MINUS_INFINITY else frozenset(par.delta_p)
            if plus != gate:
                continue
            trace = character_value(rd, everything, lam, e.torus_rep.inverse())
            val = trace * nilradical_det_factor(rd, s.levi, e.torus_rep)
            sign = -1 if len(gate) % 2 else 1
            terms.append(val * (c.r * e.chi_c * sign))
    return cyc_sum(terms)


def proxy_lefschetz(ds: FixedPointDataset) -> CycValue:
    """lefschetz_number with +/-infinity replaced by its finite stand-in profile."""
    return lefschetz_number(ds, proxy_profile(ds.root_datum, ds.lambda_weight, ds.nu))


def validate_dataset(ds) -> list[Diagnostic]:
    """Schema and consistency diagnostics for a dataset (object or decoded JSON)."""
    if not isinstance(ds, FixedPointDataset):
        ds, diags = parse_dataset(ds)
        if ds is None:
            return diags
    diags: list[Diagnostic] = []
    try:
        rd = ds.root_datum
    except ValueError as exc:
        return [Diagnostic("error", "$.group", str(exc))]
    seen_levi: dict[frozenset, int] = {}
    for si, s in enumerate(ds.strata):
        sp = f"$.strata[{si}]"
        bad = sorted(i for i in s.levi if i not in rd.index_set)
        if bad:
            diags.append(Diagnostic("error", f"{sp}.levi_subset", f"indices {bad} not in 1..{rd.rank}"))
            continue
        if s.levi in seen_levi:
            diags.append(
                Diagnostic("error", f"{sp}.levi_subset", f"same Levi subset as $.strata[{seen_levi[s.levi]}]")
            )
        else:
            seen_levi[s.levi] = si
        par = nilradical(rd, s.levi)
        compact_torus = has_minus_one(rd, s.levi)
        coset_labels = set()
        for ci, c in enumerate(s.double_cosets):
            cp = f"{sp}.double_cosets[{ci}]"
            if c.label in coset_labels:
                diags.append(Diagnostic("error", f"{cp}.label", f"duplicate double-coset label {c.label!r}"))
            coset_labels.add(c.label)
            if c.r < 1:
                diags.append(Diagnostic("error", f"{cp}.r", "r must be a positive integer"))
            factor = c.factor
            for i in par.delta_p:
                if i not in factor:
                    diags.append(
                        Diagnostic("error", f"{cp}.torus_factor", f"missing value for simple root {i} of Delta_P")
                    )
            for i in sorted(factor):
                if i not in par.delta_p:
                    diags.append(
                        Diagnostic("error", f"{cp}.torus_factor.{i}", f"simple root {i} is not in Delta_P")
                    )
                elif factor[i] <= 0:
                    diags.append(Diagnostic("error", f"{cp}.torus_factor.{i}", "value must be positive"))
            class_labels = set()
            for ei, e in enumerate(c.classes):
                ep = f"{cp}.classes[{ei}]"
                if e.label in class_labels:
                    diags.append(Diagnostic("error", f"{ep}.label", f"duplicate class label {e.label!r}"))
                class_labels.add(e.label)
                why = split_part_mismatch(rd, s.levi, c, e)
                if why is not None:
                    diags.append(Diagnostic("error", f"{ep}.torus_rep", why))
                if not compact_torus and e.chi_c != 0:
                    diags.append(
                        Diagnostic(
                            "warning",
                            f"{ep}.chi_c",
                            f"Levi {sorted(s.levi)} has no compact maximal torus but chi_c = {e.chi_c} != 0",
                        )
                    )
    if not any(d.level == "error" for d in diags):
        diags.extend(_neutral_lints(rd, ds))
    return diags


def _neutral_lints(rd: RootDatum, ds: FixedPointDataset) -> list[Diagnostic]:
    """P < Q with the extra roots J neutral for a_P: Q must carry a coset with a_Q = a_P."""
    out = []
    index = {s.levi: si for si, s in enumerate(ds.strata)}
    for si, s in enumerate(ds.strata):
        for ci, c in enumerate(s.double_cosets):
            factor = c.factor
            _, _, zero = classify_roots(rd, s.levi, factor)
            for levi_q, qi in sorted(index.items(), key=lambda kv: kv[1]):
                j = levi_q - s.levi
                if not (s.levi < levi_q and j <= zero):
                    continue
                restricted = {i: v for i, v in factor.items() if i not in levi_q}
                if not any(d.factor == restricted for d in ds.strata[qi].double_cosets):
                    out.append(
                        Diagnostic(
                            "warning",
                            f"$.strata[{si}].double_cosets[{ci}].torus_factor",
                            f"roots {sorted(j)} are neutral but no double coset of $.strata[{qi}] "
                            f"has the matching torus factor {_fmt_factor(restricted)}",
                        )
                    )
    return out


def _fmt_factor(f: Mapping[int, Fraction]) -> str:
    return "{" + ", ".join(f"{k}: {v}" for k, v in sorted(f.items())) + "}"


def evaluate_dataset(ds: FixedPointDataset, formula: str = "main") -> CycValue:
    """Dispatch used by the command line: 'main', 'alternate' or 'auto-infinite'."""
    if formula == "main":
        return lefschetz_number(ds)
    if formula == "alternate":
        return alternate_lefschetz(ds)
    if formula == "auto-infinite":
        return infinite_weight_value(ds) if ds.nu.is_infinite else lefschetz_number(ds)
    raise ValueError(f"unknown formula {formula!r}")

