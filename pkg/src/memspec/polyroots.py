"""Dense real polynomials: companion-matrix roots and Sturm real-root isolation.

Two independent root-finding routes are provided on purpose:

* :func:`all_roots` computes every complex root from the eigenvalues of the
  companion matrix (LAPACK Hessenberg QR via ``numpy.roots``) followed by
  Newton polishing and conjugate-pair symmetrization.
* :func:`real_roots_in_interval` isolates real roots with a Sturm sequence
  and refines them by bisection, without touching the companion route.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.polynomial.polynomial as npp

from .errors import RootFindingError

_TRIM_REL = 1e-13


@dataclass(frozen=True)
class RealPolynomial:
    """Dense real polynomial; coefficients ascending, leading one nonzero."""

    coeffs: tuple[float, ...]

    def __post_init__(self):
        c = [float(x) for x in self.coeffs]
        if not c:
            raise ValueError("empty coefficient list")
        if not all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        while len(c) > 1 and c[-1] == 0.0:
            c.pop()
        if len(c) == 1 and c[0] == 0.0:
            raise ValueError("the zero polynomial is not representable")
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_roots(cls, roots) -> "RealPolynomial":
        """Monic polynomial with the given (conjugate-closed) root multiset."""
        c = npp.polyfromroots(np.asarray(roots, dtype=complex))
        if np.max(np.abs(c.imag)) > 1e-9 * max(1.0, np.max(np.abs(c.real))):
            raise ValueError("root multiset is not conjugate-closed")
        return cls(tuple(c.real))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, lam):
        return npp.polyval(lam, np.asarray(self.coeffs))

    def derivative(self) -> "RealPolynomial":
        if self.degree == 0:
            raise ValueError("derivative of a constant is the zero polynomial")
        return RealPolynomial(tuple(npp.polyder(np.asarray(self.coeffs))))

    def scaled(self) -> "RealPolynomial":
        """Same roots, coefficients divided by max |coeff|."""
        m = max(abs(c) for c in self.coeffs)
        return RealPolynomial(tuple(c / m for c in self.coeffs))


def _residual_scale(coeffs: np.ndarray, z: complex) -> float:
    """Natural evaluation scale sum_k |c_k| |z|^k used for relative residuals."""
    return float(npp.polyval(abs(z), np.abs(coeffs)))


def _newton_polish(coeffs: np.ndarray, dcoeffs: np.ndarray, z: complex,
                   steps: int = 4) -> complex:
    for _ in range(steps):
        pv = npp.polyval(z, coeffs)
        dv = npp.polyval(z, dcoeffs)
        if dv == 0:
            break
        step = pv / dv
        if not np.isfinite(step):
            break
        z_new = z - step
        if abs(npp.polyval(z_new, coeffs)) <= abs(pv):
            z = z_new
        else:
            break
    return z


def _symmetrize_conjugates(roots: np.ndarray, tol: float) -> np.ndarray:
    """Snap near-real roots to the axis and enforce exact conjugate pairing."""
    out = []
    pos, neg = [], []
    for z in roots:
        if abs(z.imag) <= 100.0 * tol * (1.0 + abs(z)):
            out.append(complex(z.real, 0.0))
        elif z.imag > 0:
            pos.append(z)
        else:
            neg.append(z)
    neg = list(neg)
    for z in pos:
        if neg:
            i = int(np.argmin([abs(z - np.conj(w)) for w in neg]))
            w = neg.pop(i)
            avg = 0.5 * (z + np.conj(w))
            out.append(avg)
            out.append(np.conj(avg))
        else:
            out.append(z)
    out.extend(neg)
    arr = np.array(out, dtype=complex)
    return arr[np.lexsort((arr.imag, arr.real))]


def all_roots(p: RealPolynomial, tol: float = 1e-10) -> np.ndarray:
    """All complex roots of ``p`` with multiplicity, sorted by (re, im).

    Every returned root z satisfies |p(z)| <= tol * sum_k |c_k| |z|^k, and the
    set is closed under conjugation.  Raises :class:`RootFindingError` with the
    best iterates attached when the residual guarantee cannot be met.
    """
    if p.degree < 1:
        raise ValueError("degree must be at least 1")
    c = np.asarray(p.scaled().coeffs)
    if p.degree == 1:
        roots = np.array([-c[0] / c[1]], dtype=complex)
    else:
        roots = np.roots(c[::-1])
    dc = npp.polyder(c)
    roots = np.array([_newton_polish(c, dc, z) for z in roots])
    roots = _symmetrize_conjugates(roots, tol)
    bad = []
    for z in roots:
        if abs(npp.polyval(z, c)) > tol * max(_residual_scale(c, z), 1e-300):
            bad.append(z)
    if bad:
        raise RootFindingError(
            f"residual guarantee failed for roots {bad}", best=roots
        )
    return roots


def _trim(c: np.ndarray, scale: float) -> np.ndarray:
    c = np.asarray(c, dtype=float)
    mask = np.abs(c) > _TRIM_REL * scale
    if not mask.any():
        return np.zeros(0)
    last = int(np.nonzero(mask)[0][-1])
    return c[: last + 1]


def _sturm_chain(coeffs: np.ndarray) -> list[np.ndarray]:
    """Sturm sequence of a float polynomial, each element max-normalized.

    Division remainders below the trim threshold terminate the chain, which
    makes the sequence behave like the chain of the square-free part.
    """
    p0 = np.asarray(coeffs, dtype=float)
    p0 = p0 / np.max(np.abs(p0))
    chain = [p0]
    if len(p0) > 1:
        p1 = npp.polyder(p0)
        chain.append(p1 / np.max(np.abs(p1)))
    while len(chain[-1]) > 1:
        _, rem = npp.polydiv(chain[-2], chain[-1])
        rem = _trim(rem, 1.0)
        if rem.size == 0:
            break
        rem = -rem / np.max(np.abs(rem))
        chain.append(rem)
    return chain


def _variations(chain: list[np.ndarray], x: float) -> int:
    signs = []
    for c in chain:
        v = npp.polyval(x, c)
        if v != 0.0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for s0, s1 in zip(signs, signs[1:]) if s0 != s1)


def real_roots_in_interval(p: RealPolynomial, lo: float, hi: float,
                           tol: float = 1e-10) -> list[float]:
    """Sorted distinct real roots of ``p`` in [lo, hi].

    Roots are isolated by Sturm sign-variation counts and refined by bisection
    on the counts until the bracketing interval is narrower than ``tol``.  A
    root within ``tol`` of either endpoint is included.
    """
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    if p.degree == 0:
        return []
    chain = _sturm_chain(np.asarray(p.scaled().coeffs))
    a, b = lo - tol, hi + tol

    def count(x0: float, x1: float) -> int:
        return _variations(chain, x0) - _variations(chain, x1)

    roots: list[float] = []
    stack = [(a, b, count(a, b))]
    while stack:
        x0, x1, k = stack.pop()
        if k <= 0:
            continue
        if k == 1 or x1 - x0 <= tol:
            # refine a single root (or an unresolvable cluster) by bisection;
            # clusters are reported once per counted root, not merged
            while x1 - x0 > tol:
                xm = 0.5 * (x0 + x1)
                if count(x0, xm) >= 1:
                    x1 = xm
                else:
                    x0 = xm
            roots.extend([0.5 * (x0 + x1)] * k)
            continue
        xm = 0.5 * (x0 + x1)
        kl = count(x0, xm)
        stack.append((x0, xm, kl))
        stack.append((xm, x1, k - kl))
    return sorted(roots)
