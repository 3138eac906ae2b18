import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from domroots.exactpoly import IntPolynomial as P
from domroots.families import book_poly, friendship_poly
from domroots.limitsets import (
    ExpPolyFamily,
    FamilyError,
    QuadSurd,
    _quartic_radius,
    Verdict,
    book_family,
    book_limit_components,
    book_real_intersections,
    cartesian_residual,
    circle_samples,
    classify_point,
    distance_to_components,
    friendship_family,
    friendship_limit_components,
    hyperbola_samples,
    quartic_samples,
    root_cloud_distance,
)

a, b = sympy.symbols("a b", real=True)
Z = a + sympy.I * b


def abs2(e):
    return sympy.expand(e * sympy.conjugate(e))


class TestComponentEquations:
    """The Cartesian forms follow from the modulus ties, checked symbolically."""

    def test_c12(self):
        tie = abs2(Z * (Z + 2)) - abs2(Z + 1) ** 2
        assert sympy.expand(tie + 2 * ((a + 1) ** 2 - b**2 - sympy.Rational(1, 2))) == 0

    def test_c13(self):
        tie = abs2(Z * (Z + 2)) - abs2(Z)
        assert sympy.factor(tie) == sympy.factor(abs2(Z) * ((a + 2) ** 2 + b**2 - 1))

    def test_c23(self):
        assert sympy.expand(abs2(Z + 1) ** 2 - abs2(Z) - (((a + 1) ** 2 + b**2) ** 2 - (a**2 + b**2))) == 0


class TestFamilies:
    @pytest.mark.parametrize("n", range(1, 12))
    def test_reassembly(self, n):
        assert book_family().poly(n) == book_poly(n)
        assert friendship_family().poly(n) == friendship_poly(n)

    def test_degenerate_rejected(self):
        x = P([0, 1])
        ExpPolyFamily("ok", ((P([1]), x), (P([1]), x * 2)), ())  # |2x| != |x| off the origin
        with pytest.raises(FamilyError):
            ExpPolyFamily("bad", ((P([1]), x), (P([1]), -x)), ())
        with pytest.raises(FamilyError):
            ExpPolyFamily("bad", ((P(), x),), ())


class TestClassifier:
    fam = book_family()

    def test_special_points(self):
        assert classify_point(self.fam, 0).verdict is Verdict.SPECIAL
        assert classify_point(self.fam, -0.5).verdict in (Verdict.SPECIAL, Verdict.VANISHING_ALPHA)

    def test_tied_pairs(self):
        c = classify_point(self.fam, -1 + 2 ** -0.5)
        assert c.verdict is Verdict.TIED_PAIR and c.indices == (1, 2)
        c = classify_point(self.fam, -1)
        assert c.verdict is Verdict.TIED_PAIR and c.indices == (1, 3)
        c = classify_point(self.fam, (-3 - 5 ** 0.5) / 2)
        assert c.verdict is Verdict.TIED_PAIR and c.indices == (2, 3)

    def test_off_set(self):
        c = classify_point(self.fam, 1 + 1j)
        assert c.verdict is Verdict.NOT_ON and not c.on_limit_set
        assert "not on" in c.describe()

    def test_bad_eps(self):
        with pytest.raises(ValueError):
            classify_point(self.fam, 1, eps=0)

    @given(st.floats(0, 6.283), st.sampled_from(["C12", "C13", "C23"]))
    def test_random_component_points(self, t, comp):
        if comp == "C13":
            z = complex(-2 + math.cos(t), math.sin(t))
        elif comp == "C23":
            r = _quartic_radius(math.cos(t))
            z = complex(-1 + r * math.cos(t), r * math.sin(t))
        else:
            y = 3 * math.sin(t)
            z = complex(-1 + math.copysign(math.sqrt(0.5 + y * y), math.cos(t)), y)
        c = classify_point(self.fam, z, eps=1e-7)
        # every point of the curve ties its pair; whether it is on the limit set depends on dominance
        assert c.verdict in (Verdict.TIED_PAIR, Verdict.NOT_ON, Verdict.BOUNDARY, Verdict.SPECIAL,
                             Verdict.VANISHING_ALPHA)
        if c.verdict is Verdict.NOT_ON:
            i, j = {"C12": (1, 2), "C13": (1, 3), "C23": (2, 3)}[comp]
            mods = dict(c.moduli)
            assert abs(mods[i] - mods[j]) <= 1e-6 * max(1, mods[i])
            assert max(mods.values()) > mods[i]


class TestSampling:
    def test_samplers_on_curves(self):
        for name, pts in (("C12", hyperbola_samples(200, 4)), ("C13", circle_samples(200)),
                          ("C23", quartic_samples(200))):
            assert max(cartesian_residual(name, z) for z in pts) <= 1e-12

    def test_book_components(self):
        comps = book_limit_components(400)
        assert comps.c12 and comps.c13 and comps.c23 and not comps.rejected
        for name, pts in (("C12", comps.c12), ("C13", comps.c13), ("C23", comps.c23)):
            assert max(cartesian_residual(name, z) for z in pts) <= 1e-12
        assert comps.special == [0j, -0.5 + 0j]
        assert all(len(runs) >= 1 for runs in comps.polylines().values())

    def test_friendship_components(self):
        comps = friendship_limit_components(101, 5)  # odd count samples b = 0
        assert distance_to_components(-1 + 2 ** -0.5, comps) < 1e-9

    def test_unknown_component(self):
        with pytest.raises(ValueError):
            cartesian_residual("C99", 0j)


class TestQuadSurd:
    def test_arithmetic(self):
        r2 = QuadSurd(Fraction(0), Fraction(1), 2)
        assert r2 * r2 == 2
        assert (r2 - 1).sign() == 1 and (1 - r2).sign() == -1
        assert abs(1 - r2) == r2 - 1
        assert float((r2 * 3 + 1).to_mpf()) == pytest.approx(3 * 2 ** 0.5 + 1)

    @given(st.fractions(max_denominator=50), st.fractions(max_denominator=50))
    def test_sign_matches_float(self, x, y):
        q = QuadSurd(x, y, 5)
        f = float(x) + float(y) * 5 ** 0.5
        if abs(f) > 1e-9:
            assert q.sign() == (1 if f > 0 else -1)
        if x == 0 and y == 0:
            assert q.sign() == 0


class TestRealIntersections:
    pts = {p.label: p for p in book_real_intersections()}

    def test_all_equations_hold_exactly(self):
        assert all(p.equation_holds for p in self.pts.values())

    def test_listed_points(self):
        for label in ("0", "-1/2", "-1+1/sqrt2", "-1", "(-3-sqrt5)/2"):
            assert self.pts[label].status == "PASS", label

    def test_minus3_dominance_fails(self):
        p = self.pts["-3"]
        assert p.status == "REPORTED" and not p.dominance_holds

    def test_excluded_candidate(self):
        assert self.pts["(-3+sqrt5)/2"].status == "EXCLUDED"


def test_root_cloud_window_shrinks():
    fam = book_family()
    assert root_cloud_distance(fam, 20, window=3.0) < root_cloud_distance(fam, 10, window=3.0)
