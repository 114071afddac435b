"""Flat key-value run configuration.

One ``key = value`` pair per line, UTF-8, ``#`` comments and blank lines
ignored.  Keys are kebab-case; unknown keys are rejected so that typos
fail loudly instead of silently using defaults.  ``serialize`` emits keys
in a fixed order with repr-exact floats, so parse -> serialize -> parse
is the identity on every valid config.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .models import Coupling, Free, Harmonic, LinearField, PotentialModel, SquareWell

__all__ = ["RunConfig", "parse_config", "serialize_config", "load_config"]

_MODELS = ("free", "linear", "harmonic", "well")
_FORMATS = ("csv", "json")
_CONVENTIONS = ("paper", "spectral")
_VARY = ("a", "b", "F", "k", "c")

# field name -> config key; order here is the serialization order
_KEYS = [
    ("model", "model"),
    ("F", "F"),
    ("k", "k"),
    ("c", "c"),
    ("a", "a"),
    ("b", "b"),
    ("e_min", "e-min"),
    ("e_max", "e-max"),
    ("step", "step"),
    ("vary", "vary"),
    ("vary_from", "vary-from"),
    ("vary_to", "vary-to"),
    ("vary_count", "vary-count"),
    ("output", "output"),
    ("format", "format"),
    ("green_convention", "green-convention"),
    ("e_tol", "e-tol"),
    ("f_tol", "f-tol"),
    ("oracle_tol", "oracle-tol"),
]
_KEY_TO_FIELD = {key: name for name, key in _KEYS}


@dataclass
class RunConfig:
    model: Optional[str] = None
    F: Optional[float] = None
    k: Optional[float] = None
    c: Optional[float] = None
    a: Optional[float] = None
    b: Optional[float] = None
    e_min: Optional[float] = None
    e_max: Optional[float] = None
    step: Optional[float] = None
    vary: Optional[str] = None
    vary_from: Optional[float] = None
    vary_to: Optional[float] = None
    vary_count: Optional[int] = None
    output: Optional[str] = None
    format: Optional[str] = None
    green_convention: Optional[str] = None
    e_tol: Optional[float] = None
    f_tol: Optional[float] = None
    oracle_tol: Optional[float] = None

    def coupling(self) -> Coupling:
        return Coupling(self.a if self.a is not None else 0.0,
                        self.b if self.b is not None else 0.0)

    def potential(self) -> PotentialModel:
        if self.model == "free":
            return Free()
        if self.model == "linear":
            if self.F is None:
                raise ValueError("model 'linear' needs F")
            return LinearField(self.F)
        if self.model == "harmonic":
            if self.k is None:
                raise ValueError("model 'harmonic' needs k")
            return Harmonic(self.k)
        if self.model == "well":
            if self.c is None:
                raise ValueError("model 'well' needs c")
            return SquareWell(self.c)
        raise ValueError(f"no potential for model {self.model!r}")


def _convert(field_name: str, raw: str):
    if field_name == "model":
        if raw not in _MODELS:
            raise ValueError(f"model must be one of {_MODELS}, got {raw!r}")
        return raw
    if field_name == "format":
        if raw not in _FORMATS:
            raise ValueError(f"format must be one of {_FORMATS}, got {raw!r}")
        return raw
    if field_name == "green_convention":
        if raw not in _CONVENTIONS:
            raise ValueError(
                f"green-convention must be one of {_CONVENTIONS}, got {raw!r}"
            )
        return raw
    if field_name == "vary":
        if raw not in _VARY:
            raise ValueError(f"vary must be one of {_VARY}, got {raw!r}")
        return raw
    if field_name == "output":
        return raw
    if field_name == "vary_count":
        n = int(raw)
        if n < 2:
            raise ValueError("vary-count must be at least 2")
        return n
    try:
        return float(raw)
    except ValueError:
        raise ValueError(f"bad numeric value {raw!r} for key {field_name!r}") from None


def parse_config(text: str) -> RunConfig:
    """Parse config text; ValueError on unknown keys or bad values."""
    cfg = RunConfig()
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ValueError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, _, raw = stripped.partition("=")
        key = key.strip()
        raw = raw.strip()
        if key not in _KEY_TO_FIELD:
            raise ValueError(f"line {lineno}: unknown config key {key!r}")
        field_name = _KEY_TO_FIELD[key]
        try:
            value = _convert(field_name, raw)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        setattr(cfg, field_name, value)
    return cfg


def _format_value(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def serialize_config(cfg: RunConfig) -> str:
    lines = []
    for field_name, key in _KEYS:
        value = getattr(cfg, field_name)
        if value is not None:
            lines.append(f"{key} = {_format_value(value)}")
    return "\n".join(lines) + "\n"


def load_config(path: str) -> RunConfig:
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())
