"""Exponential-sum relaxation kernels and their Laplace transforms.

The kernel K(t) = sum_j a_j exp(-b_j t) with a_j > 0 and strictly increasing
decay rates 0 < b_1 < ... < b_N is the only kernel class supported.  Its
Laplace transform is the rational function sum_j a_j b_j / (lam + b_j) with
simple real poles at -b_j.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import PoleProximityError

#: Absolute distance below which evaluation near a pole is rejected.
POLE_GUARD = 1e-12


@dataclass(frozen=True)
class ExponentialKernel:
    """Immutable kernel defined by its (amplitude, rate) terms.

    Terms are sorted by rate at construction; duplicate rates are rejected
    because the theory assumes strictly increasing rates.
    """

    amplitudes: tuple[float, ...]
    rates: tuple[float, ...]

    def __post_init__(self):
        if len(self.amplitudes) != len(self.rates):
            raise ValueError("amplitudes and rates must have equal length")
        if len(self.rates) < 1:
            raise ValueError("kernel needs at least one term")
        for a in self.amplitudes:
            if not (a > 0.0) or not math.isfinite(a):
                raise ValueError(f"amplitude {a} must be positive and finite")
        for b in self.rates:
            if not (b > 0.0) or not math.isfinite(b):
                raise ValueError(f"rate {b} must be positive and finite")
        order = sorted(range(len(self.rates)), key=lambda i: self.rates[i])
        rates = tuple(self.rates[i] for i in order)
        for r0, r1 in zip(rates, rates[1:]):
            if r0 == r1:
                raise ValueError(f"duplicate rate {r0}; rates must be distinct")
        amps = tuple(self.amplitudes[i] for i in order)
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "rates", rates)

    @classmethod
    def from_terms(cls, terms) -> "ExponentialKernel":
        """Build from an iterable of (amplitude, rate) pairs."""
        terms = list(terms)
        return cls(tuple(a for a, _ in terms), tuple(b for _, b in terms))

    @property
    def n_terms(self) -> int:
        return len(self.rates)

    @property
    def amplitude_sum(self) -> float:
        return sum(self.amplitudes)

    def _check_poles(self, lam: complex) -> None:
        for j, b in enumerate(self.rates):
            if abs(lam + b) < POLE_GUARD:
                raise PoleProximityError(lam, j, -b)

    def time_eval(self, t: float) -> float:
        """Evaluate K(t) for t >= 0."""
        if t < 0.0:
            raise ValueError(f"t = {t} must be nonnegative")
        return sum(a * math.exp(-b * t) for a, b in zip(self.amplitudes, self.rates))

    def laplace(self, lam: complex) -> complex:
        """Laplace transform sum_j a_j b_j / (lam + b_j)."""
        self._check_poles(lam)
        return sum(a * b / (lam + b) for a, b in zip(self.amplitudes, self.rates))

    def laplace_deriv(self, lam: complex) -> complex:
        """Derivative of the Laplace transform, -sum_j a_j b_j / (lam + b_j)^2."""
        self._check_poles(lam)
        return -sum(
            a * b / (lam + b) ** 2 for a, b in zip(self.amplitudes, self.rates)
        )

    def dissipativity_margin(self, b_max: float) -> float:
        """Margin 1 - b_max * sum_j a_j of the standing dissipativity assumption.

        Callers that rely on the theory must reject non-positive margins.
        """
        if b_max < 0.0:
            raise ValueError(f"b_max = {b_max} must be nonnegative")
        return 1.0 - b_max * self.amplitude_sum
