import json
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from higherdet import spectrum as sp
from higherdet.spectrum import LengthSpectrum, Primitive, SpectrumFormatError, TruncationPolicy

GOOD = """{
  "genus": 2,
  "label": "tiny",
  "primitives": [
    {"norm": 20.0},
    {"norm": "9.5", "multiplicity": 3}
  ]
}
"""


def test_parse_sorts_and_defaults():
    spec = sp.loads(GOOD)
    assert spec.genus == 2 and spec.label == "tiny"
    assert [p.norm for p in spec.primitives] == [9.5, 20.0]
    assert [p.multiplicity for p in spec.primitives] == [3, 1]
    assert spec.min_norm == 9.5 and spec.max_norm == 20.0
    assert spec.epsilon == pytest.approx(math.log(9.5))


def test_string_norms_keep_full_precision():
    spec = sp.loads('{"genus": 2, "primitives": [{"norm": "7.38905609893065022723"}]}')
    assert spec.primitives[0].norm == float("7.38905609893065022723")


def test_round_trip():
    spec = sp.loads(GOOD)
    assert sp.loads(spec.dumps()) == spec
    assert json.loads(spec.dumps()) == spec.to_dict()


@pytest.mark.parametrize("text,line,col,fragment", [
    ('{"genus": 2, "primitives": [}', 1, 29, "invalid JSON"),
    ('{"genus": 2,\n "primitives": [],\n "extra": 1}', 3, 2, "unknown field 'extra'"),
    ('{"genus": 2,\n "primitives": [\n  {"norm": 0.5}]}', 3, 4, "must be > 1"),
    ('{"genus": 2,\n "primitives": [\n  {"norm": 3.0},\n  {"norm": 1.0}]}', 4, 4, "primitives[1].norm"),
    ('{"genus": 2, "primitives": [{"norm": 3.0, "weight": 1}]}', 1, 43, "unknown field 'weight'"),
    ('{"genus": 1, "primitives": []}', 1, 2, "genus"),
    ('{"genus": 2, "primitives": [{"norm": "abc"}]}', 1, 30, "not a number"),
    ('{"genus": 2, "primitives": [{"norm": 3, "multiplicity": 0}]}', 1, 41, "multiplicity"),
    ('[1, 2]', 1, 1, "top level"),
    ('{"genus": 2}', 1, 1, "missing field 'primitives'"),
])
def test_errors_cite_line_and_column(text, line, col, fragment):
    with pytest.raises(SpectrumFormatError) as info:
        sp.loads(text)
    assert fragment in str(info.value)
    assert (info.value.line, info.value.column) == (line, col)


def test_error_column_points_at_the_key():
    text = '{"genus": 2, "primitives": [{"norm": 3, "multiplicity": 0}]}'
    with pytest.raises(SpectrumFormatError) as info:
        sp.loads(text)
    assert info.value.column == text.index('"multiplicity"') + 1


def test_bundled_spectra():
    assert sp.bundled_names() == ["synthetic.json", "synthetic_small.json"]
    for name in sp.bundled_names():
        spec = sp.bundled_spectrum(name)
        assert "synthetic" in spec.label
        assert spec.epsilon > 1
        assert all(7 <= p.norm <= 60 for p in spec.primitives)
    default = sp.synthetic_spectrum()
    assert default.genus == 2 and len(default.primitives) == 5


def test_load_from_path(tmp_path):
    path = tmp_path / "s.json"
    path.write_text(GOOD)
    assert sp.load(path) == sp.loads(GOOD)


def test_direct_construction_validates():
    with pytest.raises(ValueError):
        LengthSpectrum(1, ())
    with pytest.raises(ValueError):
        Primitive(1.0)
    with pytest.raises(ValueError):
        Primitive(3.0, 0)
    spec = LengthSpectrum(3, [(5.0, 2), Primitive(4.0)])
    assert [p.norm for p in spec.primitives] == [4.0, 5.0]
    assert LengthSpectrum(2).min_norm is None


def test_truncation_policy_validation():
    assert TruncationPolicy().k_max == 400
    for kw in ({"k_max": 0}, {"n_max": 0}, {"tail_bound_target": 0.0}):
        with pytest.raises(ValueError):
            TruncationPolicy(**kw)


@given(st.lists(st.tuples(st.floats(1.001, 1e6), st.integers(1, 9)), max_size=8), st.integers(2, 20))
def test_dumps_loads_property(prims, genus):
    spec = LengthSpectrum(genus, prims, "p")
    back = sp.loads(spec.dumps())
    assert back == spec
    assert [p.norm for p in back.primitives] == sorted(p.norm for p in back.primitives)
