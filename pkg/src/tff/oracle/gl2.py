"""Fixed-point dataset for the Hecke correspondence of diag(p, 1) on GL2.

The interior stratum carries the elliptic classes of trace t and
determinant p; the Borel stratum has the two cosets diag(p, 1) and
diag(1, p).  Torus values are recorded on the fundamental weight
varpi of the simply connected A1 datum, normalised by sqrt(p).
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Mapping

from ..characters import AlgebraicPhase, ToralElement
from ..cyclotomic import Magnitude
from ..dataset import DoubleCosetEntry, EllipticClassEntry, FixedPointDataset, Stratum
from ..nilcoh import MIDDLE_PROFILE, WeightProfile
from .forms import count_elliptic_classes, elliptic_traces

ChiSource = Mapping[str, int] | Callable[[str], int]


def _phase(p: int, t: int):
    """Argument (in turns) of lambda / sqrt(p), lambda the eigenvalue with positive imaginary part."""
    ang = math.atan2(math.sqrt(4 * p - t * t), t) / (2 * math.pi)
    # rational cases: cos(2 pi theta) = t / (2 sqrt p) with t^2 / p in {0, 2, 3}
    for q in (Fraction(1, 4), Fraction(1, 8), Fraction(3, 8), Fraction(1, 12), Fraction(5, 12)):
        if abs(float(q) - ang) < 1e-12:
            return q
    c = Fraction(t * t, p) - 2
    return AlgebraicPhase((1, 0, -c, 0, 1), ang)


def gl2_class_labels(p: int, limit: int | None = None) -> dict[str, tuple]:
    """Labels of all fixed points, mapped to (stratum levi, coset label)."""
    out = {}
    for t in elliptic_traces(p):
        n = count_elliptic_classes(p, t) if limit is None else count_elliptic_classes(p, t, limit)
        for j in range(1, n + 1):
            out[f"t={t}/k{j}"] = ((1,), "interior")
    out["diag(p,1)"] = ((), "diag(p,1)")
    out["diag(1,p)"] = ((), "diag(1,p)")
    return out


def build_gl2_dataset(
    p: int, chi_c: ChiSource, lam: int = 0, nu: WeightProfile = MIDDLE_PROFILE
) -> FixedPointDataset:
    """Dataset for GL2 at the prime p.

    ``chi_c`` maps each label from :func:`gl2_class_labels` to its compact
    Euler characteristic.
    """
    labels = gl2_class_labels(p)
    get = chi_c if callable(chi_c) else chi_c.get
    missing = [lab for lab in labels if get(lab) is None]
    if missing:
        raise ValueError("no chi_c given for " + ", ".join(missing))
    classes = []
    for t in elliptic_traces(p):
        ph = _phase(p, t)
        rep = ToralElement((Magnitude(),), (ph,))
        for lab in labels:
            if lab.startswith(f"t={t}/"):
                classes.append(EllipticClassEntry(lab, rep, int(get(lab))))
    interior = Stratum({1}, (DoubleCosetEntry("interior", {}, 1, tuple(classes)),))
    root_p = Magnitude.of(p, Fraction(1, 2))
    borel = Stratum(
        set(),
        (
            DoubleCosetEntry(
                "diag(p,1)", {1: Fraction(p)}, 1,
                (EllipticClassEntry("diag(p,1)", ToralElement((root_p,), (0,)), int(get("diag(p,1)"))),),
            ),
            DoubleCosetEntry(
                "diag(1,p)", {1: Fraction(1, p)}, p,
                (EllipticClassEntry("diag(1,p)", ToralElement((root_p.inverse(),), (0,)), int(get("diag(1,p)"))),),
            ),
        ),
    )
    return FixedPointDataset("A", 1, (lam,), nu, (borel, interior))
