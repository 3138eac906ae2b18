"""Real roots of friendship and book domination polynomials.

For even n the two nonzero real roots of D(F_n, x) are found through the
substitutions x = t - 1 and x = -1 - s, which turn the root condition into
the zero of a strictly increasing logarithmic function on (0, 1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import inf

import mpmath

from .exactpoly import (
    IntPolynomial,
    count_real_roots,
    derivative,
    eval_complex,
    abs_eval_bits,
    isolate_real_roots,
    residual,
    repeated_part,
)
from .families import book_poly, friendship_poly

WORK_PREC = 128


class MonotonicityError(AssertionError):
    pass


def _check_unit(name, v):
    if not 0 < v < 1:
        raise ValueError(f"{name} must lie in (0, 1), got {v}")


def _check_even(n):
    if n < 2 or n % 2:
        raise ValueError(f"n must be even and >= 2, got {n}")


def phi(n: int, t):
    _check_unit("t", t)
    t = mpmath.mpf(t)
    return 2 * n * mpmath.log(t) - (n - 1) * mpmath.log1p(-t) - n * mpmath.log1p(t)


def phi_prime(n: int, t):
    _check_unit("t", t)
    t = mpmath.mpf(t)
    return 2 * n / t + (n - 1) / (1 - t) - n / (1 + t)


def psi(n: int, s):
    _check_unit("s", s)
    s = mpmath.mpf(s)
    return 2 * n * mpmath.log(s) - n * mpmath.log1p(-s) - (n - 1) * mpmath.log1p(s)


def psi_prime(n: int, s):
    _check_unit("s", s)
    s = mpmath.mpf(s)
    return 2 * n / s + n / (1 - s) - (n - 1) / (1 + s)


def increasing_zero(f, fprime, tol=mpmath.mpf("1e-12"), coarse=mpmath.mpf("1e-3")):
    """Zero of a strictly increasing f on (0, 1) with f(0+) = -inf, f(1-) = +inf.

    Bisection down to ``coarse``, then Newton inside the bracket; a Newton
    step that leaves the bracket is replaced by a bisection step.
    """
    lo, hi = mpmath.mpf(0), mpmath.mpf(1)
    while hi - lo > coarse:
        mid = (lo + hi) / 2
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    x = (lo + hi) / 2
    eps = min(mpmath.mpf(tol), mpmath.mpf(2) ** (-mpmath.mp.prec // 2))
    for _ in range(100):
        fx = f(x)
        if fx == 0:
            return x
        if fx < 0:
            lo = x
        else:
            hi = x
        nxt = x - fx / fprime(x)
        if not lo < nxt < hi:
            nxt = (lo + hi) / 2
        if abs(nxt - x) < eps:
            return nxt
        x = nxt
    raise ArithmeticError("root refinement did not settle in 100 steps")


@dataclass
class FriendshipRealRoots:
    n: int
    x_minus: mpmath.mpf
    x_plus: mpmath.mpf
    residuals: tuple[float, float]
    derivatives: tuple[float, float]
    certified_count: int

    @property
    def t(self):
        return self.x_plus + 1

    @property
    def s(self):
        return -(self.x_minus + 1)


def solve_friendship_real_roots(n: int, tol=1e-12, prec: int = WORK_PREC) -> FriendshipRealRoots:
    _check_even(n)
    if tol <= 0:
        raise ValueError("tol must be positive")
    p = friendship_poly(n)
    dp = derivative(p)
    with mpmath.workprec(max(prec, WORK_PREC)):
        t = increasing_zero(lambda v: phi(n, v), lambda v: phi_prime(n, v), tol)
        s = increasing_zero(lambda v: psi(n, v), lambda v: psi_prime(n, v), tol)
        x_plus = t - 1
        x_minus = -1 - s
        res = tuple(residual(p, r, mpmath.mp.prec) for r in (x_minus, x_plus))
        der = tuple(residual(dp, r, mpmath.mp.prec) for r in (x_minus, x_plus))
    return FriendshipRealRoots(n, x_minus, x_plus, res, der, count_real_roots(p))


LIMIT_MINUS = -1 - 1 / mpmath.sqrt(2)
LIMIT_PLUS = -1 + 1 / mpmath.sqrt(2)


@dataclass
class MonotoneReport:
    ns: list[int]
    roots: list[FriendshipRealRoots]
    gaps_minus: list
    gaps_plus: list

    @property
    def gap_ratio(self) -> tuple[float, float]:
        """First gap over last gap, for each branch."""
        return (
            float(self.gaps_minus[0] / self.gaps_minus[-1]),
            float(self.gaps_plus[0] / self.gaps_plus[-1]),
        )


def monotone_convergence_report(even_ns, roots=None) -> MonotoneReport:
    """Check strict decrease of both real-root sequences and of their gaps to the limits.

    ``roots`` may supply precomputed :class:`FriendshipRealRoots` (or any objects
    with ``n``, ``x_minus``, ``x_plus``) to check instead of solving afresh.
    Raises :class:`MonotonicityError` naming the first offending pair.
    """
    even_ns = list(even_ns)
    if len(even_ns) < 2 or even_ns != sorted(even_ns):
        raise ValueError("need an ascending list of at least two even n")
    if roots is None:
        roots = [solve_friendship_real_roots(n) for n in even_ns]
    gm = [abs(r.x_minus - LIMIT_MINUS) for r in roots]
    gp = [abs(r.x_plus - LIMIT_PLUS) for r in roots]
    half = 1 / mpmath.sqrt(2)
    for r in roots:
        if not r.x_plus + 1 > half:
            raise MonotonicityError(f"t_{r.n} = {r.x_plus + 1} is not above 1/sqrt2")
        if not -(r.x_minus + 1) < half:
            raise MonotonicityError(f"s_{r.n} = {-(r.x_minus + 1)} is not below 1/sqrt2")
    for i in range(1, len(roots)):
        a, b = roots[i - 1], roots[i]
        if not b.x_minus < a.x_minus:
            raise MonotonicityError(f"x_minus not decreasing between n={a.n} and n={b.n}")
        if not b.x_plus < a.x_plus:
            raise MonotonicityError(f"x_plus not decreasing between n={a.n} and n={b.n}")
        if not gm[i] < gm[i - 1]:
            raise MonotonicityError(f"gap to -1-1/sqrt2 not shrinking between n={a.n} and n={b.n}")
        if not gp[i] < gp[i - 1]:
            raise MonotonicityError(f"gap to -1+1/sqrt2 not shrinking between n={a.n} and n={b.n}")
    return MonotoneReport(even_ns, list(roots), gm, gp)


# --- book graphs ----------------------------------------------------------

BOOK_INTERVALS = ((-inf, Fraction(-2)), (Fraction(-2), Fraction(-1, 2)), (Fraction(-1, 2), Fraction(0)))


@dataclass
class BookRealRoots:
    n: int
    roots: list[mpmath.mpf]
    residuals: list[float]
    brackets: list[tuple[Fraction, Fraction]]
    zero_multiplicity: int
    interval_counts: dict[str, int] = field(default_factory=dict)


def _bracket_root(p: IntPolynomial, lo: Fraction, hi: Fraction, prec: int):
    """Midpoint of an isolating bracket, Newton-polished while steps stay inside it."""
    work = prec + abs_eval_bits(p, float(lo))
    dp = derivative(p)
    with mpmath.workprec(work):
        lo_f = mpmath.mpf(lo.numerator) / lo.denominator
        hi_f = mpmath.mpf(hi.numerator) / hi.denominator
        x = (lo_f + hi_f) / 2
        for _ in range(8):
            d = eval_complex(dp, x, work).real
            if d == 0:
                break
            nxt = x - eval_complex(p, x, work).real / d
            if not lo_f <= nxt <= hi_f:
                break
            x = nxt
        return x


def book_real_roots(n: int, tol=1e-12, prec: int = WORK_PREC) -> BookRealRoots:
    """All distinct nonzero real roots of D(B_n, x), isolated by Sturm bisection."""
    if n < 1:
        raise ValueError("book index must be >= 1")
    p = book_poly(n)
    mult = p.trailing_zeros()
    reduced = p.shift_down(mult)
    width = Fraction(tol).limit_denominator(10**18) if tol < 1 else Fraction(1)
    brackets = []
    counts = {}
    for a, b in BOOK_INTERVALS + ((Fraction(0), inf),):
        counts[f"({a},{b}]"] = count_real_roots(reduced, (a, b))
        if counts[f"({a},{b}]"]:
            brackets += isolate_real_roots(reduced, (a, b), width)
    roots, res = [], []
    for lo, hi in brackets:
        x = _bracket_root(reduced, lo, hi, prec)
        roots.append(x)
        res.append(residual(p, x, prec))
    return BookRealRoots(n, roots, res, brackets, mult, counts)


def check_book_existence(br: BookRealRoots) -> bool:
    """Even n: a root below -2 and a root in (-1/2, 0)."""
    return any(r < -2 for r in br.roots) and any(-0.5 < r < 0 for r in br.roots)


CONSISTENT = "CONSISTENT"
INCONSISTENT = "INCONSISTENT"
SEPARATE = "SEPARATE"


@dataclass
class ConjectureRow:
    n: int
    status: str
    pattern: str
    roots: list
    zero_multiplicity: int
    note: str = ""


def conjecture_book_real_check(n_max: int) -> list[ConjectureRow]:
    """Compare the real roots of D(B_n, x) with the parity pattern conjectured for n >= 2.

    Even n: zero (double), one simple root below -2, one in (-1/2, 0).
    Odd n: zero (double), two simple roots in (-1/2, 0).
    The verdict is a report, never an assertion.
    """
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    rows = []
    for n in range(1, n_max + 1):
        br = book_real_roots(n, tol=1e-9)
        pattern = "even" if n % 2 == 0 else "odd"
        if n == 1:
            rows.append(ConjectureRow(n, SEPARATE, pattern, br.roots, br.zero_multiplicity,
                                      "B1 = C4: squarefree part x^2+4x+6 has no real roots"))
            continue
        reduced = book_poly(n).shift_down(br.zero_multiplicity)
        simple = count_real_roots(repeated_part(reduced)) == 0
        if n % 2 == 0:
            shape = (sum(r < -2 for r in br.roots) == 1 and sum(-0.5 < r < 0 for r in br.roots) == 1
                     and len(br.roots) == 2)
        else:
            shape = sum(-0.5 < r < 0 for r in br.roots) == 2 and len(br.roots) == 2
        ok = shape and simple and br.zero_multiplicity == 2
        rows.append(ConjectureRow(n, CONSISTENT if ok else INCONSISTENT, pattern, br.roots,
                                  br.zero_multiplicity))
    return rows
