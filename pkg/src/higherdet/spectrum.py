"""Length spectra: a genus plus a finite list of primitive geodesic norms.

Spectra are read from JSON documents of the form::

    {"genus": 2, "label": "...", "primitives": [{"norm": 7.5, "multiplicity": 1}, ...]}

Unknown fields are rejected and every error reports a line and column.
"""

import json
import math
from dataclasses import dataclass
from importlib import resources

_TOP_FIELDS = {"genus", "label", "primitives"}
_PRIM_FIELDS = {"norm", "multiplicity"}


class SpectrumFormatError(ValueError):
    """A spectrum document failed to parse or validate."""

    def __init__(self, message, line=None, column=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Primitive:
    norm: float
    multiplicity: int = 1

    def __post_init__(self):
        if not (isinstance(self.norm, (int, float)) and math.isfinite(self.norm) and self.norm > 1):
            raise ValueError(f"primitive norms must be finite and > 1, got {self.norm!r}")
        if not (isinstance(self.multiplicity, int) and self.multiplicity >= 1):
            raise ValueError(f"multiplicity must be a positive integer, got {self.multiplicity!r}")
        object.__setattr__(self, "norm", float(self.norm))


@dataclass(frozen=True)
class LengthSpectrum:
    """Genus g >= 2 and primitives sorted by ascending norm."""

    genus: int
    primitives: tuple = ()
    label: str = ""

    def __post_init__(self):
        if not (isinstance(self.genus, int) and not isinstance(self.genus, bool) and self.genus >= 2):
            raise ValueError(f"genus must be an integer >= 2, got {self.genus!r}")
        prims = tuple(p if isinstance(p, Primitive) else Primitive(*p) for p in self.primitives)
        object.__setattr__(self, "primitives", tuple(sorted(prims, key=lambda p: p.norm)))

    @property
    def min_norm(self):
        return self.primitives[0].norm if self.primitives else None

    @property
    def max_norm(self):
        return self.primitives[-1].norm if self.primitives else None

    @property
    def epsilon(self):
        """log of the smallest norm: a lower bound for every log N(gamma)."""
        return math.log(self.min_norm) if self.primitives else None

    def to_dict(self):
        return {
            "genus": self.genus,
            "label": self.label,
            "primitives": [{"norm": p.norm, "multiplicity": p.multiplicity} for p in self.primitives],
        }

    def dumps(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"


@dataclass(frozen=True)
class TruncationPolicy:
    """Caps on the powers k of each primitive and on the product index n.

    Evaluation picks the smallest counts whose certified remainder is below
    ``tail_bound_target`` and fails if that needs more than the cap.
    """

    k_max: int = 400
    n_max: int = 400
    tail_bound_target: float = 1e-15

    def __post_init__(self):
        if self.k_max < 1 or self.n_max < 1 or not self.tail_bound_target > 0:
            raise ValueError("truncation policy values must be positive")


def _position(text, index):
    line = text.count("\n", 0, index) + 1
    col = index - (text.rfind("\n", 0, index) + 1) + 1
    return line, col


def _locate_key(text, key, occurrence=0):
    """Line/column of the given occurrence of "key" in the raw text."""
    needle = json.dumps(key)
    idx = -1
    for _ in range(occurrence + 1):
        idx = text.find(needle, idx + 1)
        if idx < 0:
            return None, None
    return _position(text, idx)


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


def loads(text):
    """Parse and validate a spectrum document."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpectrumFormatError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(data, dict):
        raise SpectrumFormatError("top level must be an object", 1, 1)
    for key in data:
        if key not in _TOP_FIELDS:
            raise SpectrumFormatError(f"unknown field {key!r}", *_locate_key(text, key))
    for key in ("genus", "primitives"):
        if key not in data:
            raise SpectrumFormatError(f"missing field {key!r}", 1, 1)
    genus = data["genus"]
    if not _is_int(genus) or genus < 2:
        raise SpectrumFormatError(f"genus must be an integer >= 2, got {genus!r}", *_locate_key(text, "genus"))
    label = data.get("label", "")
    if not isinstance(label, str):
        raise SpectrumFormatError("label must be text", *_locate_key(text, "label"))
    prims = data["primitives"]
    if not isinstance(prims, list):
        raise SpectrumFormatError("primitives must be an array", *_locate_key(text, "primitives"))
    out = []
    seen = {"norm": 0, "multiplicity": 0}
    for i, rec in enumerate(prims):
        if not isinstance(rec, dict):
            raise SpectrumFormatError(f"primitives[{i}] must be an object", *_locate_key(text, "primitives"))
        for key in rec:
            if key not in _PRIM_FIELDS:
                raise SpectrumFormatError(f"unknown field {key!r} in primitives[{i}]", *_locate_key(text, key))
        if "norm" not in rec:
            raise SpectrumFormatError(f"primitives[{i}] has no norm", *_locate_key(text, "primitives"))
        norm_pos = _locate_key(text, "norm", seen["norm"])
        seen["norm"] += 1
        norm = rec["norm"]
        if isinstance(norm, str):
            try:
                norm = float(norm)
            except ValueError:
                raise SpectrumFormatError(f"primitives[{i}].norm is not a number", *norm_pos) from None
        if isinstance(norm, bool) or not isinstance(norm, (int, float)) or not math.isfinite(norm):
            raise SpectrumFormatError(f"primitives[{i}].norm is not a finite number", *norm_pos)
        if norm <= 1:
            raise SpectrumFormatError(f"primitives[{i}].norm must be > 1 (got {norm})", *norm_pos)
        mult = rec.get("multiplicity", 1)
        if "multiplicity" in rec:
            mult_pos = _locate_key(text, "multiplicity", seen["multiplicity"])
            seen["multiplicity"] += 1
        if not _is_int(mult) or mult < 1:
            raise SpectrumFormatError(f"primitives[{i}].multiplicity must be an integer >= 1", *mult_pos)
        out.append(Primitive(float(norm), mult))
    return LengthSpectrum(genus, tuple(out), label)


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def bundled_names():
    return sorted(p.name for p in resources.files("higherdet.data").iterdir() if p.name.endswith(".json"))


def bundled_spectrum(name="synthetic.json"):
    text = resources.files("higherdet.data").joinpath(name).read_text(encoding="utf-8")
    return loads(text)


def synthetic_spectrum():
    """The default bundled spectrum (genus 2, five primitives)."""
    return bundled_spectrum("synthetic.json")
