import pytest
from hypothesis import given, strategies as st

from domroots.exactpoly import IntPolynomial as P
from domroots.families import CoronaVariant, book_poly, friendship_poly
from domroots.introots import (
    FAIL,
    PASS,
    SKIPPED,
    IdentityError,
    book_minus2_identity,
    book_negative_positivity,
    corona_minus2_check,
    integer_root_scan,
)


@given(st.lists(st.integers(-8, 8), min_size=1, max_size=4), st.integers(-3, 3))
def test_scan_finds_planted_roots(roots, c):
    p = P([1])
    for r in roots:
        p = p * P([-r, 1])
    p = p * P([c * c + 1, 0, 1])  # no further integer roots
    scan = integer_root_scan(p)
    assert scan.roots_found == sorted(set(roots))
    lo, hi = scan.tested_range
    assert lo <= min(roots) and max(roots) <= hi


@pytest.mark.parametrize("n", range(1, 21))
def test_family_integer_roots(n):
    assert integer_root_scan(friendship_poly(n)).roots_found == [0]
    assert integer_root_scan(book_poly(n)).nonzero_roots == []


def test_scan_zero_polynomial():
    with pytest.raises(ValueError):
        integer_root_scan(P())


def test_minus2_identity():
    assert [book_minus2_identity(n) for n in (1, 2, 3, 4)] == [8, -4, 20, -28]
    with pytest.raises(ValueError):
        book_minus2_identity(0)


def test_positivity():
    rep = book_negative_positivity(4, 6)
    assert rep.all_positive and rep.values[3] == 1737
    with pytest.raises(ValueError):
        book_negative_positivity(4, 2)


def test_identity_error_is_assertion():
    assert issubclass(IdentityError, AssertionError)


def test_corona_b1f1():
    rep = corona_minus2_check(CoronaVariant.ODD_ODD, 1)
    assert rep.label == "B1oF1" and rep.minus2_root
    assert rep.oracle == PASS and rep.exclusivity == PASS


def test_corona_odd_even_has_extra_real_roots():
    rep = corona_minus2_check(CoronaVariant.ODD_EVEN, 1)
    assert rep.minus2_root and rep.exclusivity == FAIL
    mids = sorted(float(lo + hi) / 2 for lo, hi in rep.extra_root_brackets)
    # u^2 + u - 1 = 0 with u = (1+x)^2
    u = (5 ** 0.5 - 1) / 2
    assert mids == pytest.approx([-1 - u ** 0.5, -1 + u ** 0.5], abs=1e-5)


def test_corona_budget():
    rep = corona_minus2_check(CoronaVariant.ODD_ODD, 1, budget=10)
    assert rep.exclusivity == SKIPPED and "exceeds" in rep.note
