"""Complex roots of family polynomials and the modulus bounds for friendship graphs."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import mpmath
import numpy as np

from .exactpoly import IntPolynomial, abs_eval_bits, fujiwara_bound
from .families import CoronaVariant, corona_bf_poly, corona_poly, friendship_poly

DEFAULT_PREC = 256
MAX_SWEEPS = 500
PHASE_OFFSET = 0.4
CLUSTER_TOL = 1e-6
RESIDUAL_TOL = 1e-10


class RootSolveError(ArithmeticError):
    pass


@dataclass
class Root:
    value: mpmath.mpc
    residual: float
    multiplicity: int = 1

    def __complex__(self):
        return complex(self.value)

    @property
    def modulus(self) -> float:
        return float(abs(self.value))


@dataclass
class RootSet:
    label: str
    degree: int
    roots: list[Root]
    precision_bits: int
    sweeps: int = 0
    anomalies: list[str] = field(default_factory=list)

    @property
    def values(self) -> list[complex]:
        """Roots with multiplicity, as Python complex numbers."""
        return [complex(r.value) for r in self.roots for _ in range(r.multiplicity)]

    @property
    def count(self) -> int:
        return sum(r.multiplicity for r in self.roots)

    @property
    def max_modulus(self) -> float:
        return max((r.modulus for r in self.roots), default=0.0)

    @property
    def max_residual(self) -> float:
        return max((r.residual for r in self.roots), default=0.0)

    def nonzero(self) -> list[Root]:
        return [r for r in self.roots if r.value != 0]


def _initial_guess(p: IntPolynomial) -> np.ndarray:
    d = p.degree
    center = -p.coeffs[-2] / (d * p.coeffs[-1])
    radius = fujiwara_bound(p) + abs(center)
    k = np.arange(d)
    return center + radius * np.exp(1j * (2 * np.pi * k / d + PHASE_OFFSET))


def _float_newton_ratio(c_desc, c_asc, abs_desc, abs_asc, z):
    """p/p' and the float noise ratio |p| / sum|c_k||z|^k at each z.

    Outside the unit disc the reversed polynomial in 1/z is used so that
    high powers of z never overflow.
    """
    d = len(c_desc) - 1
    inner = np.abs(z) <= 1
    w = np.empty_like(z)
    noise = np.empty(z.shape)
    zi = z[inner]
    if zi.size:
        pv = np.polyval(c_desc, zi)
        w[inner] = pv / np.polyval(np.polyder(c_desc), zi)
        noise[inner] = np.abs(pv) / np.polyval(abs_desc, np.abs(zi))
    zo = z[~inner]
    if zo.size:
        y = 1 / zo
        r = np.polyval(c_asc, y)
        dr = np.polyval(np.polyder(c_asc), y)
        w[~inner] = zo * r / (d * r - y * dr)
        noise[~inner] = np.abs(r) / np.polyval(abs_asc, np.abs(y))
    return w, noise


def _aberth_float(p: IntPolynomial, z: np.ndarray, max_sweeps: int) -> tuple[np.ndarray, int]:
    """Aberth sweeps in hardware floats.

    A root is frozen once its correction is at rounding level or p(z) is
    indistinguishable from float noise there; frozen roots still repel the
    others. Whatever floats cannot resolve is left to the multiprecision phase.
    """
    scale = max(abs(c) for c in p.coeffs)
    c_asc = np.array([float(mpmath.mpf(v) / scale) for v in p.coeffs], dtype=complex)
    c_desc = c_asc[::-1].copy()
    abs_asc, abs_desc = np.abs(c_asc), np.abs(c_desc)
    d = p.degree
    floor = 8 * d * np.finfo(float).eps
    active = np.ones(d, dtype=bool)
    for sweep in range(1, max_sweeps + 1):
        idx = np.flatnonzero(active)
        with np.errstate(all="ignore"):
            w, noise = _float_newton_ratio(c_desc, c_asc, abs_desc, abs_asc, z[idx])
            diff = z[idx, None] - z[None, :]
            diff[np.arange(idx.size), idx] = np.inf
            s = (1.0 / diff).sum(axis=1)
            corr = w / (1.0 - w * s)
        corr = np.where(np.isfinite(corr), corr, 0.0)
        z[idx] = z[idx] - corr
        done = (np.abs(corr) <= 1e-14 * np.maximum(np.abs(z[idx]), 1.0)) | (noise <= floor)
        active[idx[done]] = False
        if not active.any():
            return z, sweep
    return z, max_sweeps


def _aberth_mp(p: IntPolynomial, z: list, prec: int, max_sweeps: int) -> tuple[list, int]:
    coeffs = list(reversed(p.coeffs))
    dcoeffs = [c * (len(coeffs) - 1 - i) for i, c in enumerate(coeffs[:-1])]
    guard = max(abs_eval_bits(p, complex(v)) for v in z)
    with mpmath.workprec(prec + guard + 16):
        z = [mpmath.mpc(v) for v in z]
        tol = mpmath.mpf(2) ** (-prec + 4)
        active = set(range(len(z)))
        for sweep in range(1, max_sweeps + 1):
            new = list(z)
            for i in sorted(active):
                zi = z[i]
                pv = mpmath.polyval(coeffs, zi)
                if pv == 0:
                    active.discard(i)
                    continue
                w = pv / mpmath.polyval(dcoeffs, zi)
                s = mpmath.fsum(1 / (zi - zj) for j, zj in enumerate(z) if j != i)
                corr = w / (1 - w * s)
                new[i] = zi - corr
                if abs(corr) / max(abs(zi), 1) < tol:
                    active.discard(i)
            z = new
            if not active:
                return z, sweep
    return z, max_sweeps


def relative_residual(p: IntPolynomial, z, prec: int) -> float:
    """``|p(z)| / max|c_k|`` evaluated with cancellation guard bits."""
    with mpmath.workprec(prec + abs_eval_bits(p, complex(z)) + 16):
        v = mpmath.polyval(list(reversed(p.coeffs)), mpmath.mpc(z))
        return float(abs(v) / max(abs(c) for c in p.coeffs))


def all_roots(p: IntPolynomial, precision_bits: int = DEFAULT_PREC, label: str | None = None) -> RootSet:
    """All complex roots of ``p`` with multiplicity.

    The root at zero is split off exactly. The rest come from Jacobi-style
    Aberth sweeps, first in hardware floats from an equiangular circle, then at
    ``precision_bits`` until corrections fall below the working precision.
    """
    if p.is_zero or p.degree < 1:
        raise ValueError("need a polynomial of degree >= 1")
    label = label or repr(p)
    zero_mult = p.trailing_zeros()
    q = p.shift_down(zero_mult)
    roots: list[Root] = []
    sweeps = 0
    if q.degree >= 1:
        z, sweeps = _aberth_float(q, _initial_guess(q), MAX_SWEEPS - 100)
        z, more = _aberth_mp(q, list(z), precision_bits, MAX_SWEEPS - sweeps)
        sweeps += more
        for v in z:
            roots.append(Root(v, relative_residual(q, v, precision_bits)))
    bad = [r for r in roots if not r.residual < RESIDUAL_TOL]
    if bad:
        worst = max(r.residual for r in bad)
        raise RootSolveError(f"root solve for {label} did not converge: residual {worst:.3e}")
    # residuals are reported against the full polynomial
    for r in roots:
        r.residual = relative_residual(p, r.value, precision_bits)
    anomalies = _cluster_anomalies(roots)
    if zero_mult:
        roots.append(Root(mpmath.mpc(0), 0.0, zero_mult))
    roots.sort(key=lambda r: (float(r.value.real), float(r.value.imag)))
    return RootSet(label, p.degree, roots, precision_bits, sweeps, anomalies)


def corona_roots(variant: CoronaVariant, m: int, precision_bits: int = DEFAULT_PREC) -> RootSet:
    """Roots of a book-over-friendship corona polynomial.

    The polynomial is the |G|-th power of a small base factor, so the base is
    solved and every multiplicity scaled; Aberth on the power itself would
    crawl towards |G|-fold clusters.
    """
    variant = CoronaVariant(variant)
    b, f = variant.indices(m)
    ng = 2 * b + 2
    base = corona_poly(friendship_poly(f), 2 * f + 1, 1)
    rs = all_roots(base, precision_bits, label=f"B{b}oF{f} base")
    full = corona_bf_poly(variant, m)
    roots = [Root(r.value, relative_residual(full, r.value, precision_bits) if r.value != 0 else 0.0,
                  r.multiplicity * ng) for r in rs.roots]
    return RootSet(f"B{b}oF{f}", full.degree, roots, precision_bits, rs.sweeps, rs.anomalies)


def _cluster_anomalies(roots: list[Root]) -> list[str]:
    out = []
    vals = [complex(r.value) for r in roots]
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            scale = max(abs(vals[i]), abs(vals[j]), 1.0)
            if abs(vals[i] - vals[j]) < CLUSTER_TOL * scale:
                out.append(f"clustered nonzero roots near {vals[i]:.6g}")
    return out


def conjugate_mismatch(rs: RootSet, tol: float = 1e-10) -> float:
    """Largest distance from a root's conjugate to the nearest computed root."""
    vals = np.array(rs.values)
    worst = 0.0
    for v in vals:
        if abs(v.imag) > tol:
            worst = max(worst, float(np.min(np.abs(vals - np.conj(v)))))
    return worst


def reconstruction_error(p: IntPolynomial, rs: RootSet) -> float:
    """Max relative coefficient error of ``prod(x - z_i)`` against monic ``p``.

    Errors are scaled by the largest monic coefficient.
    """
    with mpmath.workprec(rs.precision_bits):
        prod = [mpmath.mpc(1)]
        for r in rs.roots:
            for _ in range(r.multiplicity):
                nxt = [mpmath.mpc(0)] * (len(prod) + 1)
                for k, c in enumerate(prod):
                    nxt[k + 1] += c
                    nxt[k] -= r.value * c
                prod = nxt
        lc = p.leading
        target = [mpmath.mpf(c) / lc for c in p.coeffs]
        scale = max(abs(t) for t in target)
        return float(max(abs(a - b) for a, b in zip(prod, target)) / scale)


# --- modulus bounds -------------------------------------------------------


def modulus_bound_check(z, n: int) -> tuple[bool, float]:
    """(|z|-1)^2 ln|z| <= n for |z| > 1; returns (holds, slack)."""
    r = abs(complex(z))
    if r <= 1:
        return True, float(n)
    slack = n - (r - 1) ** 2 * math.log(r)
    return slack >= 0, slack


def explicit_bound(n: int) -> float:
    if n < 1:
        raise ValueError("n must be >= 1")
    return 1 + math.sqrt(n / math.log(2))


def implicit_radius(n: int, tol: float = 1e-10) -> float:
    """The unique R > 1 with (R-1)^2 ln R = n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    lo, hi = 1.0, explicit_bound(n) + 1
    f = lambda r: (r - 1) ** 2 * math.log(r) - n  # noqa: E731
    if not f(hi) > 0:
        raise ArithmeticError("implicit radius bracket failed")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if f(mid) > 0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


@dataclass
class ModulusReport:
    n: int
    max_modulus: float
    implicit_ok: bool
    min_slack: float
    explicit_bound: float
    implicit_radius: float
    roots: RootSet | None = None

    @property
    def within_bounds(self) -> bool:
        return (
            self.implicit_ok
            and self.max_modulus <= self.explicit_bound
            and self.max_modulus <= self.implicit_radius
        )


def friendship_modulus_report(n: int, precision_bits: int = DEFAULT_PREC) -> ModulusReport:
    rs = all_roots(friendship_poly(n), precision_bits, label=f"D(F{n})")
    checks = [modulus_bound_check(r.value, n) for r in rs.roots]
    return ModulusReport(
        n,
        rs.max_modulus,
        all(ok for ok, _ in checks),
        min(s for _, s in checks),
        explicit_bound(n),
        implicit_radius(n),
        rs,
    )


def modulus_table(n_values, precision_bits: int = DEFAULT_PREC) -> list[ModulusReport]:
    return [friendship_modulus_report(n, precision_bits) for n in n_values]
