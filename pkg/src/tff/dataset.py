"""Fixed-point datasets and their versioned JSON format (``tff-dataset/1``).

Layout::

    {"schema": "tff-dataset/1",
     "group": {"type": "A", "rank": 1},
     "lambda": [0],                                  # fundamental-weight coordinates
     "nu": {"kind": "middle"},                       # or finite with root-basis "coords"
     "strata": [
       {"levi_subset": [],
        "double_cosets": [
          {"label": "y1", "r": 1,
           "torus_factor": {"1": "1/4"},             # alpha_i(a_P) for i in Delta_P
           "classes": [
             {"label": "e1", "chi_c": 1, "chi": 1,   # chi is optional
              "torus_rep": {"magnitudes": ["1/2"], "phases": ["0"]}}]}]}]}

Rationals are written as "p/q" strings, never decimals.  A magnitude that
is not rational is written {"base": "p/q", "exp": "r/s"}; a phase that is
not a rational number of turns is written {"minpoly": [...], "angle": x}
with the minimal polynomial of the value at that fundamental weight (lowest
degree first) and ``angle`` a float in turns used only to pick the root.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping

from .characters import AlgebraicPhase, ToralElement
from .cyclotomic import Magnitude
from .errors import DatasetError
from .nilcoh import FINITE, KINDS, WeightProfile
from .rootdata import RootDatum, build_root_datum, weight_from_fundamental

SCHEMA = "tff-dataset/1"

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


@dataclass(frozen=True)
class Diagnostic:
    level: str  # "error" or "warning"
    path: str
    message: str

    def __str__(self):
        return f"{self.level}: {self.path}: {self.message}"


@dataclass(frozen=True)
class EllipticClassEntry:
    label: str
    torus_rep: ToralElement
    chi_c: int
    chi: int | None = None


@dataclass(frozen=True)
class DoubleCosetEntry:
    label: str
    torus_factor: tuple[tuple[int, Fraction], ...]
    r: int = 1
    classes: tuple[EllipticClassEntry, ...] = ()

    def __post_init__(self):
        tf = self.torus_factor
        if isinstance(tf, Mapping):
            tf = tf.items()
        object.__setattr__(self, "torus_factor", tuple(sorted((int(k), Fraction(v)) for k, v in tf)))
        object.__setattr__(self, "classes", tuple(self.classes))

    @property
    def factor(self) -> dict[int, Fraction]:
        return dict(self.torus_factor)


@dataclass(frozen=True)
class Stratum:
    levi: frozenset[int]
    double_cosets: tuple[DoubleCosetEntry, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "levi", frozenset(self.levi))
        object.__setattr__(self, "double_cosets", tuple(self.double_cosets))


@dataclass(frozen=True)
class FixedPointDataset:
    cartan_type: str
    rank: int
    lam: tuple[int, ...]
    nu: WeightProfile
    strata: tuple[Stratum, ...] = ()
    schema: str = field(default=SCHEMA)

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(int(x) for x in self.lam))
        object.__setattr__(self, "strata", tuple(self.strata))

    @property
    def root_datum(self) -> RootDatum:
        return build_root_datum(self.cartan_type, self.rank)

    @property
    def lambda_weight(self):
        return weight_from_fundamental(self.root_datum, self.lam)

    def with_nu(self, nu: WeightProfile) -> FixedPointDataset:
        return replace(self, nu=nu)

    def __add__(self, other: FixedPointDataset) -> FixedPointDataset:
        """Concatenate strata of two datasets over the same group, lambda and nu.

        Strata with the same Levi are merged by concatenating their cosets.
        """
        if (self.cartan_type, self.rank, self.lam, self.nu) != (other.cartan_type, other.rank, other.lam, other.nu):
            raise ValueError("datasets differ in group, lambda or weight profile")
        merged: dict[frozenset, list] = {}
        for s in self.strata + other.strata:
            merged.setdefault(s.levi, []).extend(s.double_cosets)
        return replace(self, strata=tuple(Stratum(k, tuple(v)) for k, v in merged.items()))


# -- parsing ----------------------------------------------------------------------

class _Parser:
    def __init__(self):
        self.diags: list[Diagnostic] = []

    def err(self, path: str, msg: str):
        self.diags.append(Diagnostic("error", path, msg))

    def rational(self, x, path: str, positive: bool = False) -> Fraction | None:
        if not isinstance(x, str) or not _RATIONAL.match(x.strip()):
            self.err(path, f"expected a rational string 'p/q', got {json.dumps(x)}")
            return None
        try:
            q = Fraction(x.strip())
        except ZeroDivisionError:
            self.err(path, "zero denominator")
            return None
        if positive and q <= 0:
            self.err(path, f"expected a positive rational, got {x}")
            return None
        return q

    def integer(self, x, path: str, minimum: int | None = None) -> int | None:
        if not isinstance(x, int) or isinstance(x, bool):
            self.err(path, f"expected an integer, got {json.dumps(x)}")
            return None
        if minimum is not None and x < minimum:
            self.err(path, f"expected an integer >= {minimum}, got {x}")
            return None
        return x

    def obj(self, x, path: str, required: tuple[str, ...], optional: tuple[str, ...] = ()) -> bool:
        if not isinstance(x, dict):
            self.err(path, f"expected an object, got {type(x).__name__}")
            return False
        ok = True
        for k in required:
            if k not in x:
                self.err(f"{path}.{k}", "missing required field")
                ok = False
        for k in x:
            if k not in required and k not in optional:
                self.err(f"{path}.{k}", "unknown field")
        return ok

    def array(self, x, path: str) -> list | None:
        if not isinstance(x, list):
            self.err(path, f"expected an array, got {type(x).__name__}")
            return None
        return x

    def magnitude(self, x, path: str) -> Magnitude | None:
        if isinstance(x, dict):
            if not self.obj(x, path, ("base", "exp")):
                return None
            base = self.rational(x["base"], f"{path}.base", positive=True)
            exp = self.rational(x["exp"], f"{path}.exp")
            if base is None or exp is None:
                return None
            return Magnitude.of(base, exp)
        q = self.rational(x, path, positive=True)
        return None if q is None else Magnitude.of(q)

    def phase(self, x, path: str):
        if isinstance(x, dict):
            if not self.obj(x, path, ("minpoly", "angle")):
                return None
            coeffs = self.array(x["minpoly"], f"{path}.minpoly")
            if coeffs is None:
                return None
            cs = [self.rational(c, f"{path}.minpoly[{i}]") for i, c in enumerate(coeffs)]
            angle = x["angle"]
            if not isinstance(angle, (int, float)) or isinstance(angle, bool):
                self.err(f"{path}.angle", "expected a number (turns)")
                return None
            if any(c is None for c in cs):
                return None
            if len(cs) < 2 or cs[-1] == 0:
                self.err(f"{path}.minpoly", "minimal polynomial must have degree >= 1")
                return None
            return AlgebraicPhase(tuple(cs), float(angle))
        return self.rational(x, path)

    def torus_rep(self, x, path: str, rank: int | None) -> ToralElement | None:
        if not self.obj(x, path, ("magnitudes", "phases")):
            return None
        mags = self.array(x["magnitudes"], f"{path}.magnitudes")
        phases = self.array(x["phases"], f"{path}.phases")
        if mags is None or phases is None:
            return None
        if len(mags) != len(phases):
            self.err(path, f"{len(mags)} magnitudes but {len(phases)} phases")
            return None
        if rank is not None and len(mags) != rank:
            self.err(f"{path}.magnitudes", f"expected {rank} entries (one per fundamental weight), got {len(mags)}")
            return None
        ms = [self.magnitude(m, f"{path}.magnitudes[{i}]") for i, m in enumerate(mags)]
        ps = [self.phase(p, f"{path}.phases[{i}]") for i, p in enumerate(phases)]
        if any(m is None for m in ms) or any(p is None for p in ps):
            return None
        return ToralElement(tuple(ms), tuple(ps))

    def dataset(self, data) -> FixedPointDataset | None:
        if not self.obj(data, "$", ("schema", "group", "lambda", "nu", "strata")):
            return None
        if data["schema"] != SCHEMA:
            self.err("$.schema", f"expected {SCHEMA!r}, got {json.dumps(data['schema'])}")
        rank = None
        ctype = None
        g = data["group"]
        if self.obj(g, "$.group", ("type", "rank")):
            ctype = g["type"]
            rank = self.integer(g["rank"], "$.group.rank", 1)
            if rank is not None:
                try:
                    build_root_datum(ctype, rank)
                except ValueError as exc:
                    self.err("$.group", str(exc))
                    rank = None
        lam = self.array(data["lambda"], "$.lambda")
        lam_v = None
        if lam is not None:
            lam_v = [self.integer(c, f"$.lambda[{i}]", 0) for i, c in enumerate(lam)]
            if rank is not None and len(lam) != rank:
                self.err("$.lambda", f"expected {rank} fundamental coordinates, got {len(lam)}")
        nu = None
        n = data["nu"]
        if self.obj(n, "$.nu", ("kind",), ("coords",)):
            kind = n["kind"]
            if kind not in KINDS:
                self.err("$.nu.kind", f"expected one of {list(KINDS)}, got {json.dumps(kind)}")
            elif kind == FINITE:
                coords = self.array(n.get("coords"), "$.nu.coords")
                if coords is not None:
                    cs = [self.rational(c, f"$.nu.coords[{i}]") for i, c in enumerate(coords)]
                    if rank is not None and len(cs) != rank:
                        self.err("$.nu.coords", f"expected {rank} root-basis coordinates, got {len(cs)}")
                    elif all(c is not None for c in cs):
                        nu = WeightProfile.finite(cs)
            else:
                if "coords" in n:
                    self.err("$.nu.coords", f"profile {kind} takes no coordinates")
                nu = WeightProfile(kind)
        strata = []
        raw_strata = self.array(data["strata"], "$.strata")
        for si, s in enumerate(raw_strata or []):
            sp = f"$.strata[{si}]"
            if not self.obj(s, sp, ("levi_subset", "double_cosets")):
                continue
            levi = self.array(s["levi_subset"], f"{sp}.levi_subset")
            levi_v = []
            for i, x in enumerate(levi or []):
                v = self.integer(x, f"{sp}.levi_subset[{i}]", 1)
                if v is not None and rank is not None and v > rank:
                    self.err(f"{sp}.levi_subset[{i}]", f"simple-root index {v} exceeds rank {rank}")
                    v = None
                if v is not None:
                    levi_v.append(v)
            cosets = []
            for ci, c in enumerate(self.array(s["double_cosets"], f"{sp}.double_cosets") or []):
                cp = f"{sp}.double_cosets[{ci}]"
                if not self.obj(c, cp, ("label", "r", "torus_factor", "classes")):
                    continue
                label = c["label"]
                if not isinstance(label, str):
                    self.err(f"{cp}.label", "expected a string")
                r = self.integer(c["r"], f"{cp}.r", 1)
                tf = {}
                if isinstance(c["torus_factor"], dict):
                    for k, v in c["torus_factor"].items():
                        if not k.isdigit():
                            self.err(f"{cp}.torus_factor.{k}", "keys are simple-root indices")
                            continue
                        q = self.rational(v, f"{cp}.torus_factor.{k}", positive=True)
                        if q is not None:
                            tf[int(k)] = q
                else:
                    self.err(f"{cp}.torus_factor", "expected an object")
                classes = []
                for ei, e in enumerate(self.array(c["classes"], f"{cp}.classes") or []):
                    ep = f"{cp}.classes[{ei}]"
                    if not self.obj(e, ep, ("label", "chi_c", "torus_rep"), ("chi",)):
                        continue
                    el = e["label"]
                    if not isinstance(el, str):
                        self.err(f"{ep}.label", "expected a string")
                    chi_c = self.integer(e["chi_c"], f"{ep}.chi_c")
                    chi = self.integer(e["chi"], f"{ep}.chi") if "chi" in e else None
                    rep = self.torus_rep(e["torus_rep"], f"{ep}.torus_rep", rank)
                    if isinstance(el, str) and chi_c is not None and rep is not None:
                        classes.append(EllipticClassEntry(el, rep, chi_c, chi))
                if isinstance(label, str) and r is not None:
                    cosets.append(DoubleCosetEntry(label, tuple(tf.items()), r, tuple(classes)))
            strata.append(Stratum(frozenset(levi_v), tuple(cosets)))
        if self.diags or rank is None or nu is None or lam_v is None:
            return None
        return FixedPointDataset(ctype, rank, tuple(lam_v), nu, tuple(strata), data["schema"])


def parse_dataset(data: Any) -> tuple[FixedPointDataset | None, list[Diagnostic]]:
    """Parse decoded JSON; returns the dataset (None on schema errors) and the schema diagnostics."""
    p = _Parser()
    ds = p.dataset(data)
    return ds, p.diags


def load_dataset(path: str | Path) -> FixedPointDataset:
    text = Path(path).read_text(encoding="utf-8")
    return loads_dataset(text)


def loads_dataset(text: str) -> FixedPointDataset:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DatasetError(f"invalid JSON: {exc}", [Diagnostic("error", "$", f"invalid JSON: {exc}")]) from None
    ds, diags = parse_dataset(data)
    if ds is None:
        raise DatasetError("dataset does not match " + SCHEMA, diags)
    return ds


# -- serialisation ------------------------------------------------------------------

def _q(x: Fraction) -> str:
    return str(Fraction(x))


def _magnitude_json(m: Magnitude):
    if m.is_rational:
        return _q(m.as_fraction())
    # a single prime power base with a common exponent is the common case
    exps = {e for _, e in m.exponents}
    if len(exps) == 1:
        (e,) = exps
        base = Fraction(1)
        for p, ep in m.exponents:
            base *= p
        return {"base": _q(base), "exp": _q(e)}
    # general factored form: write as base^(1/den) with base rational
    den = 1
    for _, e in m.exponents:
        den = den * e.denominator // _gcd(den, e.denominator)
    base = Fraction(1)
    for p, e in m.exponents:
        base *= Fraction(p) ** int(e * den)
    return {"base": _q(base), "exp": _q(Fraction(1, den))}


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _phase_json(p):
    if isinstance(p, AlgebraicPhase):
        return {"minpoly": [_q(c) for c in p.minpoly], "angle": p.angle}
    return _q(p)


def dataset_to_dict(ds: FixedPointDataset) -> dict:
    nu: dict[str, Any] = {"kind": ds.nu.kind}
    if ds.nu.coords is not None:
        nu["coords"] = [_q(c) for c in ds.nu.coords]
    strata = []
    for s in ds.strata:
        cosets = []
        for c in s.double_cosets:
            classes = []
            for e in c.classes:
                d: dict[str, Any] = {"label": e.label, "chi_c": e.chi_c}
                if e.chi is not None:
                    d["chi"] = e.chi
                d["torus_rep"] = {
                    "magnitudes": [_magnitude_json(m) for m in e.torus_rep.magnitudes],
                    "phases": [_phase_json(p) for p in e.torus_rep.phases],
                }
                classes.append(d)
            cosets.append(
                {
                    "label": c.label,
                    "r": c.r,
                    "torus_factor": {str(k): _q(v) for k, v in c.torus_factor},
                    "classes": classes,
                }
            )
        strata.append({"levi_subset": sorted(s.levi), "double_cosets": cosets})
    return {
        "schema": ds.schema,
        "group": {"type": ds.cartan_type, "rank": ds.rank},
        "lambda": list(ds.lam),
        "nu": nu,
        "strata": strata,
    }


def dumps_dataset(ds: FixedPointDataset) -> str:
    return json.dumps(dataset_to_dict(ds), indent=2) + "\n"


def dump_dataset(ds: FixedPointDataset, path: str | Path) -> None:
    Path(path).write_text(dumps_dataset(ds), encoding="utf-8")
