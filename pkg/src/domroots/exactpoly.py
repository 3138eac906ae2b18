"""Exact polynomial arithmetic over the integers and rationals.

Integer polynomials are dense, ascending by degree, and immutable. Real-root
counting uses Sturm chains over :class:`fractions.Fraction` on the squarefree
part, so every count is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache, reduce
from math import gcd, inf
from numbers import Rational

import mpmath


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class IntPolynomial:
    """Dense polynomial with exact integer coefficients, ``coeffs[k]`` multiplies ``x**k``."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(int(c) for c in self.coeffs))

    @classmethod
    def x(cls) -> IntPolynomial:
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def trailing_zeros(self) -> int:
        """Multiplicity of the root x = 0."""
        if self.is_zero:
            raise ValueError("zero polynomial has no finite root multiplicity")
        k = 0
        while self.coeffs[k] == 0:
            k += 1
        return k

    def shift_down(self, k: int) -> IntPolynomial:
        """Divide by ``x**k``; the low coefficients must be zero."""
        if any(self.coeffs[:k]):
            raise ValueError(f"polynomial is not divisible by x^{k}")
        return IntPolynomial(self.coeffs[k:])

    def content(self) -> int:
        return reduce(gcd, self.coeffs, 0)

    def __add__(self, other):
        return add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return add(self, -_coerce(other))

    def __rsub__(self, other):
        return add(_coerce(other), -self)

    def __mul__(self, other):
        return mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return pow(self, e)

    def __call__(self, x):
        return eval_exact(self, x)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"


def _coerce(p) -> IntPolynomial:
    if isinstance(p, IntPolynomial):
        return p
    if isinstance(p, int):
        return IntPolynomial((p,))
    raise TypeError(f"cannot use {type(p).__name__} as an integer polynomial")


def add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    return IntPolynomial([x + y for x, y in zip(a, b)] + list(a[len(b):]))


def mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    if p.is_zero or q.is_zero:
        return IntPolynomial()
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a:
            for j, b in enumerate(q.coeffs):
                out[i + j] += a * b
    return IntPolynomial(out)


def pow(p: IntPolynomial, e: int) -> IntPolynomial:  # noqa: A001
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    result = IntPolynomial((1,))
    base = p
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def eval_exact(p, x) -> Fraction | int:
    """Horner evaluation with no rounding. Integers stay integers."""
    if not isinstance(x, (int, Fraction)):
        if isinstance(x, Rational):
            x = Fraction(x.numerator, x.denominator)
        else:
            raise TypeError("eval_exact needs an int or Fraction argument")
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def eval_complex(p: IntPolynomial, z, prec: int = 53) -> mpmath.mpc:
    """Horner evaluation of ``p`` at ``z`` carried out with ``prec`` bits."""
    if prec < 53:
        raise ValueError("precision must be at least 53 bits")
    with mpmath.workprec(prec):
        z = mpmath.mpc(z)
        acc = mpmath.mpc(0)
        for c in reversed(p.coeffs):
            acc = acc * z + c
        return +acc


def abs_eval_bits(p: IntPolynomial, z) -> int:
    """Bits of cancellation headroom for Horner at z: log2 of sum |c_k| |z|^k."""
    with mpmath.workprec(32):
        r = max(abs(mpmath.mpc(z)), 1)
        total = mpmath.mpf(0)
        for c in reversed(p.coeffs):
            total = total * r + abs(c)
        return max(int(mpmath.log(total, 2)) + 1, 0) if total > 0 else 0


def residual(p: IntPolynomial, z, prec: int = 53) -> float:
    """``|p(z)|`` with enough guard bits that ``prec`` bits survive cancellation."""
    return float(abs(eval_complex(p, z, prec + abs_eval_bits(p, z))))


def derivative(p: IntPolynomial) -> IntPolynomial:
    return IntPolynomial(k * c for k, c in enumerate(p.coeffs) if k)


# --- rational polynomials -------------------------------------------------


@dataclass(frozen=True)
class RatPolynomial:
    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(Fraction(c) for c in self.coeffs))

    @classmethod
    def from_int(cls, p: IntPolynomial) -> RatPolynomial:
        return cls(p.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __neg__(self):
        return RatPolynomial(-c for c in self.coeffs)

    def monic(self) -> RatPolynomial:
        lc = self.leading
        return RatPolynomial(c / lc for c in self.coeffs)

    def derivative(self) -> RatPolynomial:
        return RatPolynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def divmod(self, other: RatPolynomial) -> tuple[RatPolynomial, RatPolynomial]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.leading
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c:
                f = c / lc
                quot[k - dq] = f
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= f * b
        return RatPolynomial(quot), RatPolynomial(rem[:dq])

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def to_int(self) -> IntPolynomial:
        """Clear denominators and content; the sign of the leading coefficient is kept."""
        if self.is_zero:
            return IntPolynomial()
        den = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(gcd, ints, 0)
        return IntPolynomial(c // g for c in ints)

    def sign_at(self, x) -> int:
        """Exact sign at a rational point, or at +-inf."""
        if self.is_zero:
            return 0
        if x == inf:
            return _sgn(self.leading)
        if x == -inf:
            return _sgn(self.leading) * (-1 if self.degree % 2 else 1)
        return _sgn(eval_exact(self._scaled, Fraction(x)))

    @cached_property
    def _scaled(self) -> IntPolynomial:
        # positive rescaling keeps signs and lets Horner run on integers
        p = self.to_int()
        return p if _sgn(p.leading) == _sgn(self.leading) else -p


def _sgn(v) -> int:
    return (v > 0) - (v < 0)


def poly_gcd(p: RatPolynomial, q: RatPolynomial) -> RatPolynomial:
    """Monic gcd by the Euclidean algorithm over Q."""
    a, b = p, q
    while not b.is_zero:
        r = a % b
        a, b = b, (r.monic() if not r.is_zero else r)
    return a.monic() if not a.is_zero else a


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """``p / gcd(p, p')`` as a primitive integer polynomial with positive leading coefficient."""
    if p.is_zero:
        raise ValueError("squarefree part of the zero polynomial is undefined")
    rp = RatPolynomial.from_int(p)
    g = poly_gcd(rp, rp.derivative())
    sf = (rp // g).to_int()
    return -sf if sf.leading < 0 else sf


def repeated_part(p: IntPolynomial) -> IntPolynomial:
    """``p / squarefree_part(p)``; constant exactly when every root of p is simple."""
    q, r = RatPolynomial.from_int(p).divmod(RatPolynomial.from_int(squarefree_part(p)))
    if not r.is_zero:
        raise ArithmeticError("squarefree part does not divide its polynomial")
    return q.to_int()


@dataclass(frozen=True)
class SturmChain:
    """Sturm sequence ``p, p', -rem(p, p'), ...``.

    Each negated remainder is stored divided by its positive content, which
    leaves every sign pattern intact and keeps coefficient growth linear.
    """

    polys: tuple[RatPolynomial, ...]

    @classmethod
    def of(cls, p: IntPolynomial) -> SturmChain:
        return _sturm_chain(p)

    def variations(self, x) -> int:
        signs = [s for s in (q.sign_at(x) for q in self.polys) if s]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count(self, a=-inf, b=inf) -> int:
        """Distinct roots in the half-open interval ``(a, b]``."""
        return self.variations(a) - self.variations(b)


@lru_cache(maxsize=256)
def _sturm_chain(p: IntPolynomial) -> SturmChain:
    p0 = RatPolynomial.from_int(p)
    chain = [p0, RatPolynomial.from_int(p0.derivative().to_int())]
    while not chain[-1].is_zero and chain[-1].degree > 0:
        r = -(chain[-2] % chain[-1])
        chain.append(RatPolynomial.from_int(r.to_int()))
    if chain[-1].is_zero:
        chain.pop()
    return SturmChain(tuple(chain))


def count_real_roots(p: IntPolynomial, interval=(-inf, inf)) -> int:
    """Exact number of distinct real roots of ``p`` in ``(a, b]``."""
    if p.is_zero:
        raise ValueError("cannot count roots of the zero polynomial")
    a, b = interval
    if a >= b:
        return 0
    return SturmChain.of(squarefree_part(p)).count(a, b)


def isolate_real_roots(p: IntPolynomial, interval=(-inf, inf), width=Fraction(1, 10**12)):
    """Return disjoint intervals ``(lo, hi]`` each holding exactly one distinct real root.

    Intervals are refined until ``hi - lo <= width``. Infinite endpoints are
    first replaced with a root bound.
    """
    sf = squarefree_part(p)
    chain = SturmChain.of(sf)
    bound = Fraction(cauchy_bound(sf))
    a, b = interval
    a = max(Fraction(a), -bound - 1) if a != -inf else -bound - 1
    b = min(Fraction(b), bound + 1) if b != inf else bound + 1
    width = Fraction(width)

    found = []
    stack = [(a, b, chain.count(a, b))]
    while stack:
        lo, hi, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            found.append(_refine(sf, lo, hi, width))
            continue
        mid = (lo + hi) / 2
        left = chain.count(lo, mid)
        stack.append((mid, hi, k - left))
        stack.append((lo, mid, left))
    return sorted(found)


def _refine(sf: IntPolynomial, lo: Fraction, hi: Fraction, width: Fraction):
    # sf is squarefree with exactly one root in (lo, hi]: a root at hi or a sign change
    if sf(hi) == 0:
        return hi, hi
    s_hi = _sgn(sf(hi))
    while hi - lo > width:
        mid = (lo + hi) / 2
        v = sf(mid)
        if v == 0:
            return mid, mid
        if _sgn(v) == s_hi:
            hi = mid
        else:
            lo = mid
    return lo, hi


def cauchy_bound(p: IntPolynomial) -> int:
    """Integer ``1 + ceil(max |c_i| / |lead|)``; every complex root has modulus below it."""
    lc = abs(p.leading)
    m = max((abs(c) for c in p.coeffs[:-1]), default=0)
    return 1 + -(-m // lc)


def fujiwara_bound(p: IntPolynomial) -> int:
    """Integer upper bound on root moduli, usually far tighter than the Cauchy bound.

    ``2 * max(|a_{d-k}/a_d|^(1/k))`` with the constant term halved.
    """
    d = p.degree
    if d < 1:
        return 0
    lc = abs(p.leading)
    best = 0
    for k in range(1, d + 1):
        c = abs(p.coeffs[d - k])
        if not c:
            continue
        num, den = (c, lc) if k < d else (c, 2 * lc)
        r = _iroot_ceil(-(-num // den), k)
        best = max(best, r)
    return 2 * best


def _iroot_ceil(v: int, k: int) -> int:
    """Smallest integer r >= 0 with r**k >= v."""
    if v <= 0:
        return 0
    lo, hi = 0, 1 << (v.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**k >= v:
            hi = mid
        else:
            lo = mid + 1
    return lo
