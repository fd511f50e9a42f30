"""Dirichlet Laplacian modes on a box, supplying stiffness values alpha.

The stiffness operator is -a * Laplacian on a box with homogeneous Dirichlet
conditions; its eigenvalues are a * pi^2 * sum_j m_j^2 / l_j^2.  The factor a
is included even though it is sometimes dropped in the literature, because the
downstream enclosure constants only reproduce with it.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass


@dataclass(frozen=True)
class BoxDomain:
    """Axis-aligned box (0, l_1) x ... x (0, l_n) with 1 <= n <= 3."""

    lengths: tuple[float, ...]

    def __post_init__(self):
        if not 1 <= len(self.lengths) <= 3:
            raise ValueError(f"dimension {len(self.lengths)} not in 1..3")
        for length in self.lengths:
            if not (length > 0.0) or not math.isfinite(length):
                raise ValueError(f"side length {length} must be positive")

    @property
    def dim(self) -> int:
        return len(self.lengths)


@dataclass(frozen=True)
class Mode:
    """One Laplacian mode: index tuple and its stiffness eigenvalue."""

    indices: tuple[int, ...]
    alpha: float


def mode_alpha(a: float, box: BoxDomain, indices) -> float:
    """Eigenvalue a * pi^2 * sum_j m_j^2 / l_j^2 of the mode ``indices``."""
    indices = tuple(int(m) for m in indices)
    if len(indices) != box.dim:
        raise ValueError(f"expected {box.dim} indices, got {len(indices)}")
    if any(m < 1 for m in indices):
        raise ValueError(f"mode indices must be >= 1, got {indices}")
    s = sum(m * m / (l * l) for m, l in zip(indices, box.lengths))
    return a * math.pi ** 2 * s


def min_stiffness(a: float, box: BoxDomain) -> float:
    """Smallest stiffness eigenvalue (the ground mode (1, ..., 1))."""
    return mode_alpha(a, box, (1,) * box.dim)


def enumerate_modes(a: float, box: BoxDomain, alpha_cap: float) -> list[Mode]:
    """All modes with alpha <= alpha_cap, sorted by (alpha, indices).

    The index bound m_j <= l_j * sqrt(alpha_cap / (a pi^2)) makes the
    enumeration complete; multiplicities are kept as distinct entries.
    """
    base = math.sqrt(max(alpha_cap, 0.0) / (a * math.pi ** 2))
    bounds = [max(int(math.floor(l * base)) + 1, 1) for l in box.lengths]
    cap = alpha_cap * (1.0 + 1e-12)
    modes = []
    for idx in itertools.product(*(range(1, b + 1) for b in bounds)):
        alpha = mode_alpha(a, box, idx)
        if alpha <= cap:
            modes.append(Mode(idx, alpha))
    if not modes:
        warnings.warn(
            f"alpha_cap = {alpha_cap} is below the ground mode "
            f"{min_stiffness(a, box)}; no modes enumerated",
            stacklevel=2,
        )
    modes.sort(key=lambda m: (m.alpha, m.indices))
    return modes
