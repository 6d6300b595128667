import copy
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tff.characters import AlgebraicPhase, ToralElement
from tff.cyclotomic import Magnitude
from tff.dataset import (
    SCHEMA,
    DoubleCosetEntry,
    EllipticClassEntry,
    FixedPointDataset,
    Stratum,
    dataset_to_dict,
    dumps_dataset,
    load_dataset,
    loads_dataset,
    parse_dataset,
)
from tff.errors import DatasetError
from tff.nilcoh import MIDDLE_PROFILE, WeightProfile

BASE = {
    "schema": SCHEMA,
    "group": {"type": "A", "rank": 1},
    "lambda": [0],
    "nu": {"kind": "middle"},
    "strata": [
        {
            "levi_subset": [],
            "double_cosets": [
                {
                    "label": "y1",
                    "r": 1,
                    "torus_factor": {"1": "1/4"},
                    "classes": [{"label": "e1", "chi_c": 1, "torus_rep": {"magnitudes": ["1/2"], "phases": ["0"]}}],
                }
            ],
        }
    ],
}


def paths(diags):
    return [d.path for d in diags]


def test_parse_base():
    ds, diags = parse_dataset(copy.deepcopy(BASE))
    assert diags == [] and ds.rank == 1 and ds.nu == MIDDLE_PROFILE
    (c,) = ds.strata[0].double_cosets
    assert c.factor == {1: Fraction(1, 4)} and c.classes[0].chi is None


@pytest.mark.parametrize(
    "mutate,path",
    [
        (lambda d: d.pop("schema"), "$.schema"),
        (lambda d: d.update(schema="tff-dataset/0"), "$.schema"),
        (lambda d: d["group"].update(type="Q"), "$.group"),
        (lambda d: d.update({"lambda": [0, 1]}), "$.lambda"),
        (lambda d: d.update({"lambda": [-1]}), "$.lambda[0]"),
        (lambda d: d.update(nu={"kind": "finite"}), "$.nu.coords"),
        (lambda d: d.update(nu={"kind": "middle", "coords": ["1"]}), "$.nu.coords"),
        (lambda d: d["strata"][0]["double_cosets"][0].update(r=0), "$.strata[0].double_cosets[0].r"),
        (lambda d: d["strata"][0]["double_cosets"][0]["torus_factor"].update({"1": "0.25"}),
         "$.strata[0].double_cosets[0].torus_factor.1"),
        (lambda d: d["strata"][0]["double_cosets"][0]["torus_factor"].update({"1": "-1/4"}),
         "$.strata[0].double_cosets[0].torus_factor.1"),
        (lambda d: d["strata"][0]["double_cosets"][0]["classes"][0]["torus_rep"].update(phases=[]),
         "$.strata[0].double_cosets[0].classes[0].torus_rep"),
        (lambda d: d["strata"][0]["double_cosets"][0]["classes"][0].update(chi_c="1"),
         "$.strata[0].double_cosets[0].classes[0].chi_c"),
        (lambda d: d["strata"][0]["double_cosets"][0]["classes"][0].update(extra=1),
         "$.strata[0].double_cosets[0].classes[0].extra"),
        (lambda d: d["strata"][0].update(levi_subset=[2]), "$.strata[0].levi_subset[0]"),
    ],
)
def test_schema_errors_name_paths(mutate, path):
    d = copy.deepcopy(BASE)
    mutate(d)
    ds, diags = parse_dataset(d)
    assert ds is None
    assert path in paths(diags), diags
    with pytest.raises(DatasetError) as exc:
        loads_dataset(json.dumps(d))
    assert path in paths(exc.value.diagnostics)


def test_invalid_json():
    with pytest.raises(DatasetError):
        loads_dataset("{not json")


def test_fixture_files_round_trip_bit_exact(data_dir):
    files = sorted(data_dir.glob("*.json"))
    assert len(files) >= 9
    for f in files:
        text = f.read_text()
        assert dumps_dataset(loads_dataset(text)) == text, f.name


def test_irrational_magnitude_and_algebraic_phase_round_trip():
    rep = ToralElement((Magnitude.of(3, Fraction(1, 2)),), (AlgebraicPhase((1, 0, Fraction(-1, 3), 0, 1), 0.2),))
    ds = FixedPointDataset("A", 1, (0,), MIDDLE_PROFILE, (
        Stratum({1}, (DoubleCosetEntry("i", {}, 1, (EllipticClassEntry("c", rep, 2, 1),)),)),
    ))
    text = dumps_dataset(ds)
    back = loads_dataset(text)
    assert back == ds and dumps_dataset(back) == text
    d = json.loads(text)
    cls = d["strata"][0]["double_cosets"][0]["classes"][0]
    assert cls["torus_rep"]["magnitudes"] == [{"base": "3", "exp": "1/2"}]
    assert cls["torus_rep"]["phases"][0]["minpoly"] == ["1", "0", "-1/3", "0", "1"]


fracs = st.fractions(min_value=Fraction(1, 9), max_value=9, max_denominator=9)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(fracs, fracs, st.fractions(min_value=0, max_value=1, max_denominator=8), st.integers(-3, 3),
                          st.integers(1, 4)), max_size=4),
       st.sampled_from(["middle", "plus-inf", "minus-inf", "1/2,-3"]))
def test_round_trip_property(entries, nu):
    cosets = []
    for i, (m1, m2, ph, chi_c, r) in enumerate(entries):
        rep = ToralElement((Magnitude.of(m1), Magnitude.of(m2)), (ph, 0))
        cosets.append(DoubleCosetEntry(f"y{i}", {1: m1, 2: m2}, r, (EllipticClassEntry("c", rep, chi_c),)))
    ds = FixedPointDataset("C", 2, (1, 0), WeightProfile.parse(nu), (Stratum(set(), tuple(cosets)),))
    text = dumps_dataset(ds)
    assert loads_dataset(text) == ds
    assert dumps_dataset(loads_dataset(text)) == text
    assert json.loads(text) == dataset_to_dict(ds)


def test_concatenation_merges_strata(data_dir):
    a = load_dataset(data_dir / "a1_two_strata.json")
    b = FixedPointDataset("A", 1, (0,), MIDDLE_PROFILE, (Stratum({1}, (DoubleCosetEntry("other", {}, 1, ()),)),))
    c = a + b
    assert len(c.strata) == 2
    interior = next(s for s in c.strata if s.levi == {1})
    assert [x.label for x in interior.double_cosets] == ["interior", "other"]
    with pytest.raises(ValueError):
        a + FixedPointDataset("A", 1, (1,), MIDDLE_PROFILE, ())
