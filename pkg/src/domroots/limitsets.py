"""Limits of zeros of exponential polynomial families.

A family f_n = sum_j alpha_j lambda_j^n has z as a limit of zeros exactly when
either two of the |lambda_j(z)| tie and strictly dominate the rest, or one
|lambda_j(z)| strictly dominates and its alpha_j vanishes at z. The book and
friendship domination polynomials are both of this shape.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import mpmath

from .complexroots import all_roots
from .exactpoly import IntPolynomial, add, eval_complex, pow

X = IntPolynomial.x()
ONE = IntPolynomial.const(1)

EPS_ANALYTIC = 1e-9
EPS_SAMPLED = 1e-6


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class ExpPolyFamily:
    name: str
    terms: tuple[tuple[IntPolynomial, IntPolynomial], ...]
    # exact roots shared by every member; they are limit points trivially
    persistent_roots: tuple[complex, ...] = ()

    def __post_init__(self):
        if not self.terms:
            raise FamilyError("a family needs at least one term")
        for j, (a, lam) in enumerate(self.terms):
            if a.is_zero or lam.is_zero:
                raise FamilyError(f"term {j + 1} has a zero polynomial")
        for i in range(len(self.terms)):
            for j in range(i + 1, len(self.terms)):
                c = _constant_ratio(self.terms[i][1], self.terms[j][1])
                if c is not None and abs(c) == 1:
                    raise FamilyError(f"lambda_{i + 1} and lambda_{j + 1} differ by a unimodular constant")

    def poly(self, n: int) -> IntPolynomial:
        if n < 0:
            raise ValueError("n must be nonnegative")
        out = IntPolynomial()
        for a, lam in self.terms:
            out = add(out, a * pow(lam, n))
        return out


def _constant_ratio(p: IntPolynomial, q: IntPolynomial) -> Fraction | None:
    """c with c*p == q if one exists, else None."""
    if p.degree != q.degree:
        return None
    ratio = None
    for a, b in zip(p.coeffs, q.coeffs):
        if (a == 0) != (b == 0):
            return None
        if a:
            r = Fraction(b, a)
            if ratio is None:
                ratio = r
            elif r != ratio:
                return None
    return ratio


def book_family() -> ExpPolyFamily:
    return ExpPolyFamily(
        "book",
        (
            (2 * X + 1, X * (X + 2)),
            (X * X, (X + 1) * (X + 1)),
            (IntPolynomial.const(-2), X),
        ),
        persistent_roots=(0j,),
    )


def friendship_family() -> ExpPolyFamily:
    return ExpPolyFamily(
        "friendship",
        ((ONE, X * (X + 2)), (X, (X + 1) * (X + 1))),
        persistent_roots=(0j,),
    )


# --- point classification -------------------------------------------------


class Verdict(str, Enum):
    TIED_PAIR = "on limit set (tied dominant pair)"
    VANISHING_ALPHA = "on limit set (dominant term with vanishing coefficient)"
    SPECIAL = "special point"
    BOUNDARY = "boundary (three-way tie)"
    NOT_ON = "not on limit set"


@dataclass
class LimitClassification:
    point: complex
    verdict: Verdict
    indices: tuple[int, ...]
    moduli: list[tuple[int, float]]
    alpha_modulus: float | None = None
    margin: float | None = None

    @property
    def on_limit_set(self) -> bool:
        return self.verdict in (Verdict.TIED_PAIR, Verdict.VANISHING_ALPHA, Verdict.SPECIAL)

    def describe(self) -> str:
        mods = ", ".join(f"|l{j}|={m:.10g}" for j, m in self.moduli)
        extra = f"; |alpha|={self.alpha_modulus:.3g}" if self.alpha_modulus is not None else ""
        return f"{self.verdict.value} {self.indices} [{mods}{extra}]"


def classify_point(fam: ExpPolyFamily, z, eps: float = EPS_ANALYTIC, prec: int = 113) -> LimitClassification:
    """Apply the tied-pair and vanishing-coefficient conditions at z.

    Indices are 1-based. Modulus comparisons use ``eps`` as an absolute margin
    scaled by ``max(1, largest modulus)``; a strict inequality must clear it.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    z = complex(z)
    for r in fam.persistent_roots:
        if abs(z - r) <= eps:
            return LimitClassification(z, Verdict.SPECIAL, (), [])
    mods = [(j + 1, float(abs(eval_complex(lam, z, prec)))) for j, (_, lam) in enumerate(fam.terms)]
    ranked = sorted(mods, key=lambda t: -t[1])
    tol = eps * max(1.0, ranked[0][1])
    if len(ranked) == 1:
        top = ranked[0][0]
        am = float(abs(eval_complex(fam.terms[top - 1][0], z, prec)))
        verdict = Verdict.VANISHING_ALPHA if am < eps else Verdict.NOT_ON
        return LimitClassification(z, verdict, (top,), ranked, am, None)
    (i, mi), (j, mj) = ranked[0], ranked[1]
    third = ranked[2][1] if len(ranked) > 2 else None
    if mi - mj <= tol:
        if third is not None and mj - third <= tol:
            return LimitClassification(z, Verdict.BOUNDARY, tuple(k for k, _ in ranked[:3]), ranked,
                                       margin=mj - third)
        margin = mj - third if third is not None else None
        return LimitClassification(z, Verdict.TIED_PAIR, tuple(sorted((i, j))), ranked, margin=margin)
    am = float(abs(eval_complex(fam.terms[i - 1][0], z, prec)))
    verdict = Verdict.VANISHING_ALPHA if am < eps else Verdict.NOT_ON
    return LimitClassification(z, verdict, (i,), ranked, am, mi - mj)


# --- sampled book components ----------------------------------------------


@dataclass
class LimitComponents:
    c12: list[complex]
    c13: list[complex]
    c23: list[complex]
    special: list[complex]
    rejected: list[tuple[str, complex, str]] = field(default_factory=list)

    def polylines(self) -> dict[str, list[list[complex]]]:
        return {name: _split_runs(pts) for name, pts in
                (("C12", self.c12), ("C13", self.c13), ("C23", self.c23))}


def _split_runs(points: list[complex], gap: float = 0.25) -> list[list[complex]]:
    """Break a filtered sample list wherever consecutive points jump apart."""
    runs: list[list[complex]] = []
    for p in points:
        if runs and abs(p - runs[-1][-1]) <= gap:
            runs[-1].append(p)
        else:
            runs.append([p])
    # closed curves: the last run may continue into the first
    if len(runs) > 1 and abs(runs[-1][-1] - runs[0][0]) <= gap:
        runs[0] = runs.pop() + runs[0]
    return runs


def hyperbola_samples(resolution: int, b_max: float) -> list[complex]:
    """Both branches of (a+1)^2 - b^2 = 1/2, parametrised by b."""
    bs = [-b_max + 2 * b_max * k / (resolution - 1) for k in range(resolution)]
    right = [complex(-1 + math.sqrt(0.5 + b * b), b) for b in bs]
    left = [complex(-1 - math.sqrt(0.5 + b * b), b) for b in bs]
    return right + left


def circle_samples(resolution: int) -> list[complex]:
    """(a+2)^2 + b^2 = 1 by angle, starting from the point -1."""
    return [complex(-2 + math.cos(2 * math.pi * k / resolution), math.sin(2 * math.pi * k / resolution))
            for k in range(resolution)]


def _quartic_radius(cos_t: float) -> float:
    """Positive root of r^4 - r^2 + 2 r cos(t) - 1, which is unique."""
    g = lambda r: ((r * r - 1) * r + 2 * cos_t) * r - 1  # noqa: E731
    lo, hi = 0.0, 2.0
    while True:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            return mid
        if g(mid) < 0:
            lo = mid
        else:
            hi = mid


def quartic_samples(resolution: int) -> list[complex]:
    """((a+1)^2 + b^2)^2 = a^2 + b^2 in polar form about -1."""
    out = []
    for k in range(resolution):
        t = 2 * math.pi * k / resolution
        r = _quartic_radius(math.cos(t))
        out.append(complex(-1 + r * math.cos(t), r * math.sin(t)))
    return out


def cartesian_residual(component: str, z: complex) -> float:
    a, b = z.real, z.imag
    if component == "C12":
        return abs((a + 1) ** 2 - b * b - 0.5)
    if component == "C13":
        return abs((a + 2) ** 2 + b * b - 1)
    if component == "C23":
        return abs(((a + 1) ** 2 + b * b) ** 2 - (a * a + b * b))
    raise ValueError(f"unknown component {component}")


_BOOK_FILTERS = {
    # dominance of the tied pair over the remaining modulus
    "C12": lambda z: abs(z + 1) ** 2 - abs(z),
    "C13": lambda z: abs(z) - abs(z + 1) ** 2,
    "C23": lambda z: 1 - abs(z + 2),
}
_BOOK_PAIRS = {"C12": (1, 2), "C13": (1, 3), "C23": (2, 3)}


def book_limit_components(resolution: int = 400, b_max: float = 3.0,
                          eps: float = EPS_SAMPLED) -> LimitComponents:
    """Sample the three book components and keep the arcs where the tied pair dominates.

    A sample is kept only if the dominance margin exceeds ``eps`` and the
    classifier confirms it as the expected tied pair; near the three-way tie
    points this drops a sliver of width about ``eps``.
    """
    if resolution < 2:
        raise ValueError("resolution must be >= 2")
    fam = book_family()
    raw = {
        "C12": hyperbola_samples(resolution, b_max),
        "C13": circle_samples(resolution),
        "C23": quartic_samples(resolution),
    }
    kept: dict[str, list[complex]] = {}
    rejected = []
    for name, pts in raw.items():
        kept[name] = []
        for z in pts:
            if _BOOK_FILTERS[name](z) <= eps:
                continue
            cls = classify_point(fam, z, eps)
            if cls.verdict is Verdict.TIED_PAIR and cls.indices == _BOOK_PAIRS[name]:
                kept[name].append(z)
            elif cls.verdict is not Verdict.SPECIAL:
                rejected.append((name, z, cls.describe()))
    return LimitComponents(kept["C12"], kept["C13"], kept["C23"], [0j, -0.5 + 0j], rejected)


def friendship_limit_components(resolution: int = 400, b_max: float = 6.0) -> LimitComponents:
    """The whole hyperbola |x(x+2)| = |x+1|^2, plus the special point 0."""
    return LimitComponents(hyperbola_samples(resolution, b_max), [], [], [0j])


# --- exact real intersections ---------------------------------------------


@dataclass(frozen=True)
class QuadSurd:
    """a + b*sqrt(d) with rational a, b and squarefree d >= 2 (or b = 0)."""

    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 2

    def _lift(self, other) -> QuadSurd:
        if isinstance(other, QuadSurd):
            if other.b and self.b and other.d != self.d:
                raise ValueError("mixed surd fields")
            return other
        return QuadSurd(Fraction(other), Fraction(0), self.d)

    def _field(self, other: QuadSurd) -> int:
        return self.d if self.b else other.d

    def __add__(self, other):
        o = self._lift(other)
        return QuadSurd(self.a + o.a, self.b + o.b, self._field(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadSurd(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        d = self._field(o)
        return QuadSurd(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0 or sa == sb:
            return sa or sb
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with b^2 d
        diff = self.a * self.a - self.b * self.b * self.d
        return sa if diff > 0 else (sb if diff < 0 else 0)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __eq__(self, other):
        try:
            return (self - other).sign() == 0
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d if self.b else 0))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def to_mpf(self, prec: int = 128):
        with mpmath.workprec(prec):
            return mpmath.mpf(self.a.numerator) / self.a.denominator + (
                mpmath.mpf(self.b.numerator) / self.b.denominator * mpmath.sqrt(self.d)
            )

    def __str__(self):
        if not self.b:
            return str(self.a)
        sign = "+" if self.b > 0 else "-"
        return f"{self.a} {sign} {abs(self.b)}*sqrt({self.d})"


def _surd_poly(p: IntPolynomial, x: QuadSurd) -> QuadSurd:
    acc = QuadSurd(Fraction(0), Fraction(0), x.d)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


# the three |lambda| expressions on the real line
def _book_moduli_exact(x: QuadSurd) -> dict[int, QuadSurd]:
    fam = book_family()
    return {j + 1: abs(_surd_poly(lam, x)) for j, (_, lam) in enumerate(fam.terms)}


@dataclass
class RealIntersection:
    label: str
    value: QuadSurd
    component: str
    equation: str
    equation_holds: bool
    dominance: str
    dominance_holds: bool
    classification: LimitClassification
    listed: bool = True

    @property
    def decimal(self):
        return self.value.to_mpf()

    @property
    def status(self) -> str:
        """PASS for a listed point the classifier confirms, REPORTED for a listed
        point whose dominance fails, EXCLUDED for a candidate correctly dropped."""
        if not self.listed:
            return "EXCLUDED" if not self.dominance_holds else "REPORTED"
        return "PASS" if self.equation_holds and self.dominance_holds else "REPORTED"


def _q(a, b=0, d=2) -> QuadSurd:
    return QuadSurd(Fraction(a), Fraction(b), d)


def book_real_intersections() -> list[RealIntersection]:
    """Real points of the book limit set, each checked in exact surd arithmetic.

    The seven listed values are reproduced with their defining equations; the
    dominance condition of the owning component is evaluated exactly and its
    outcome recorded rather than assumed. The root (-3+sqrt5)/2 of the quartic
    branch is included as an excluded candidate.
    """
    fam = book_family()
    half = Fraction(1, 2)
    specs = [
        ("0", _q(0), "special", "x = 0 is a root of every D(B_n)", lambda x: x == 0, None),
        ("-1/2", _q(Fraction(-1, 2)), "special", "alpha_1(x) = 2x + 1 = 0",
         lambda x: 2 * x + 1 == 0, None),
        ("-1+1/sqrt2", _q(-1, half), "C12", "(a+1)^2 = 1/2",
         lambda x: (x + 1) * (x + 1) == half, "C12"),
        ("-1-1/sqrt2", _q(-1, -half), "C12", "(a+1)^2 = 1/2",
         lambda x: (x + 1) * (x + 1) == half, "C12"),
        ("-1", _q(-1), "C13", "(a+2)^2 = 1", lambda x: (x + 2) * (x + 2) == 1, "C13"),
        ("-3", _q(-3), "C13", "(a+2)^2 = 1", lambda x: (x + 2) * (x + 2) == 1, "C13"),
        ("(-3-sqrt5)/2", _q(Fraction(-3, 2), -half, 5), "C23", "x^2 + 3x + 1 = 0",
         lambda x: x * x + 3 * x + 1 == 0, "C23"),
        ("(-3+sqrt5)/2", _q(Fraction(-3, 2), half, 5), "C23", "x^2 + 3x + 1 = 0",
         lambda x: x * x + 3 * x + 1 == 0, "C23"),
    ]
    out = []
    for label, x, comp, eq, check, dom in specs:
        cls = classify_point(fam, complex(float(x.to_mpf())), EPS_ANALYTIC)
        if dom is None:
            if label == "0":
                holds, text = True, "persistent root"
            else:
                mods = _book_moduli_exact(x)
                top = max(mods.values())
                holds = mods[1] == top and all(mods[1] > mods[k] for k in (2, 3))
                text = "|l1| > |l2|, |l3| with alpha_1 = 0 (exact)"
        else:
            i, j = _BOOK_PAIRS[dom]
            mods = _book_moduli_exact(x)
            (k,) = {1, 2, 3} - {i, j}
            holds = mods[i] == mods[j] and mods[i] >= mods[k]
            text = f"|l{i}| = |l{j}| = {mods[i]} vs |l{k}| = {mods[k]} (exact)"
        listed = label != "(-3+sqrt5)/2"
        out.append(RealIntersection(label, x, comp, eq, check(x), text, holds, cls, listed))
    return out


# --- convergence of root clouds -------------------------------------------


def _segment_distance(p: complex, a: complex, b: complex) -> float:
    ab = b - a
    if ab == 0:
        return abs(p - a)
    t = ((p - a) * ab.conjugate()).real / abs(ab) ** 2
    t = min(1.0, max(0.0, t))
    return abs(p - (a + t * ab))


def distance_to_components(z: complex, comps: LimitComponents) -> float:
    best = min((abs(z - s) for s in comps.special), default=math.inf)
    for runs in comps.polylines().values():
        for run in runs:
            if len(run) == 1:
                best = min(best, abs(z - run[0]))
            for a, b in zip(run, run[1:]):
                best = min(best, _segment_distance(z, a, b))
    return best


def components_for(fam: ExpPolyFamily, resolution: int = 400, b_max: float = 6.0) -> LimitComponents:
    if fam.name == "book":
        return book_limit_components(resolution, b_max)
    if fam.name == "friendship":
        return friendship_limit_components(resolution, b_max)
    raise ValueError(f"no sampled limit set for family {fam.name!r}")


def root_cloud_distance(fam: ExpPolyFamily, n: int, resolution: int = 400,
                        precision_bits: int = 256, window: float | None = None) -> float:
    """Largest distance from a nonzero root of f_n to the sampled limit set.

    Exact persistent roots of the family are excluded. With ``window`` only
    roots with ``|z| <= window`` count; limits of zeros are a statement about
    compact sets, and the outermost roots of these families escape to infinity.
    """
    rs = all_roots(fam.poly(n), precision_bits, label=f"{fam.name} n={n}")
    pts = [complex(r.value) for r in rs.roots]
    pts = [z for z in pts if all(abs(z - e) > 1e-12 for e in fam.persistent_roots)]
    if window is not None:
        pts = [z for z in pts if abs(z) <= window]
    if not pts:
        return 0.0
    b_max = max(abs(z.imag) for z in pts) + 1.0
    comps = components_for(fam, resolution, b_max)
    return max(distance_to_components(z, comps) for z in pts)
