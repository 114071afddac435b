"""Background potentials and the point-interaction coupling.

Units are hbar = 2m = 1.  The background Hamiltonian is
H0 = -d^2/dx^2 + V0(x) with V0 one of: zero (Free), a uniform field -F x
(LinearField), the oscillator k^2 x^2 / 16 (Harmonic), or an infinite
square well of half-width c (SquareWell).  The point interaction added at
the origin is W(x) = -a delta(x) + b delta'(x).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

__all__ = [
    "Coupling",
    "Free",
    "Harmonic",
    "LinearField",
    "PotentialModel",
    "SquareWell",
]


class DomainError(ValueError):
    """Parameter outside its admissible domain."""


def _require_positive(name: str, value: float) -> float:
    value = float(value)
    if not value > 0.0:
        raise DomainError(f"{name} must be > 0, got {value!r}")
    return value


@dataclass(frozen=True)
class Free:
    """No background potential."""

    def label(self) -> str:
        return "free"


@dataclass(frozen=True)
class LinearField:
    """Uniform field V0(x) = -F x, F > 0."""

    F: float

    def __post_init__(self):
        object.__setattr__(self, "F", _require_positive("F", self.F))

    def label(self) -> str:
        return "linear"


@dataclass(frozen=True)
class Harmonic:
    """Oscillator V0(x) = k^2 x^2 / 16, k > 0.

    Unperturbed levels are E_n = (k/2)(n + 1/2).
    """

    k: float

    def __post_init__(self):
        object.__setattr__(self, "k", _require_positive("k", self.k))

    def label(self) -> str:
        return "harmonic"


@dataclass(frozen=True)
class SquareWell:
    """Infinite square well on (-c, c); the well width is 2c.

    Unperturbed levels are E_n = (n pi / 2c)^2, n = 1, 2, ...
    """

    c: float

    def __post_init__(self):
        object.__setattr__(self, "c", _require_positive("c", self.c))

    def label(self) -> str:
        return "well"


PotentialModel = Union[Free, LinearField, Harmonic, SquareWell]


@dataclass(frozen=True)
class Coupling:
    """Strengths of the delta (a) and delta-prime (b) terms.

    Both real; solver entry points additionally require (a, b) != (0, 0).
    """

    a: float
    b: float

    def __post_init__(self):
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))

    def is_null(self) -> bool:
        return self.a == 0.0 and self.b == 0.0
