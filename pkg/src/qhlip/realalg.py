"""Exact real algebraic numbers.

A number is stored as a square-free monic defining polynomial together with
an isolating rational interval: either lo == hi and the number is the
rational lo (with defpoly t - lo), or the defpoly has exactly one real root
in (lo, hi) and neither endpoint is a root.  Equality and sign tests are
exact (gcd plus Sturm counts); intervals are refined on demand.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .polyalg import (
    RatLike,
    TPoly,
    UniPoly,
    cauchy_root_bound,
    count_roots_between,
    interval_eval,
    poly_gcd,
    resultant,
    sign,
    square_free_part,
)

DEFAULT_PRECISION_BITS = 80
_PRECISION_ENV = "QHLIP_PRECISION_BITS"

#: probe rounds spent looking for a small-denominator rational in a fresh
#: isolating interval; catches every rational of modest height
_RATIONAL_PROBE_ROUNDS = 4


def precision_bits() -> int:
    raw = os.environ.get(_PRECISION_ENV)
    if raw is None:
        return DEFAULT_PRECISION_BITS
    bits = int(raw)
    if bits < 8:
        raise ValueError(f"{_PRECISION_ENV} must be >= 8")
    return bits


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with the smallest denominator in the open interval (lo, hi)."""
    if lo >= hi:
        raise ValueError("empty interval")
    if lo < 0 < hi:
        return Fraction(0)
    if hi <= 0:
        return -simplest_between(-hi, -lo)
    fl = lo.numerator // lo.denominator
    if lo == fl:
        if hi > fl + 1:
            return Fraction(fl + 1)
        inv = 1 / (hi - fl)
        return fl + Fraction(1, inv.numerator // inv.denominator + 1)
    if hi > fl + 1:
        return Fraction(fl + 1)
    return fl + 1 / simplest_between(1 / (hi - fl), 1 / (lo - fl))


class RealAlg:
    """A real algebraic number with a certified isolating interval."""

    __slots__ = ("defpoly", "lo", "hi")

    def __init__(self, defpoly: UniPoly, lo: Fraction, hi: Fraction):
        # Internal constructor; use from_rational / isolate_real_roots /
        # the arithmetic operations to build values.
        self.defpoly = defpoly
        self.lo = lo
        self.hi = hi

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rational(value: RatLike) -> "RealAlg":
        v = Fraction(value)
        return RealAlg(UniPoly((-v, 1)), v, v)

    # -- basic queries -----------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.lo == self.hi

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("not a known rational")
        return self.lo

    def interval(self) -> tuple[Fraction, Fraction]:
        return self.lo, self.hi

    def __repr__(self) -> str:
        if self.is_rational:
            return f"RealAlg({self.lo})"
        return f"RealAlg({self.defpoly!r} on ({self.lo}, {self.hi}))"

    # -- refinement --------------------------------------------------------

    def refine(self, width: RatLike) -> "RealAlg":
        """Same number with interval width at most `width`."""
        width = Fraction(width)
        if width <= 0:
            raise ValueError("width must be positive")
        if self.is_rational or self.hi - self.lo <= width:
            return self
        lo, hi = self.lo, self.hi
        chain_ok = _count_cached(self.defpoly, lo, hi)  # sanity: exactly one
        assert chain_ok == 1
        while hi - lo > width:
            mid = (lo + hi) / 2
            if self.defpoly(mid) == 0:
                return RealAlg.from_rational(mid)
            if _count_cached(self.defpoly, lo, mid) == 1:
                hi = mid
            else:
                lo = mid
        return RealAlg(self.defpoly, lo, hi)

    def to_float(self) -> float:
        """Round to double after refining the interval below 2**-precision."""
        if self.is_rational:
            return float(self.lo)
        r = self.refine(Fraction(1, 2**precision_bits()))
        if r.is_rational:
            return float(r.lo)
        return float((r.lo + r.hi) / 2)

    __float__ = to_float

    # -- comparisons -------------------------------------------------------

    def sign(self) -> int:
        return compare(self, _ZERO)

    def compare(self, other: "RealAlg") -> int:
        return compare(self, other)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RealAlg.from_rational(other)
        if not isinstance(other, RealAlg):
            return NotImplemented
        return compare(self, other) == 0

    def __lt__(self, other: "RealAlg") -> bool:
        return compare(self, _coerce(other)) < 0

    def __le__(self, other: "RealAlg") -> bool:
        return compare(self, _coerce(other)) <= 0

    def __gt__(self, other: "RealAlg") -> bool:
        return compare(self, _coerce(other)) > 0

    def __ge__(self, other: "RealAlg") -> bool:
        return compare(self, _coerce(other)) >= 0

    __hash__ = None  # semantic equality is not hash-compatible

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "RealAlg":
        return add(self, _coerce(other))

    def __radd__(self, other) -> "RealAlg":
        return add(_coerce(other), self)

    def __sub__(self, other) -> "RealAlg":
        return add(self, neg(_coerce(other)))

    def __rsub__(self, other) -> "RealAlg":
        return add(_coerce(other), neg(self))

    def __mul__(self, other) -> "RealAlg":
        return mul(self, _coerce(other))

    def __rmul__(self, other) -> "RealAlg":
        return mul(_coerce(other), self)

    def __truediv__(self, other) -> "RealAlg":
        return div(self, _coerce(other))

    def __rtruediv__(self, other) -> "RealAlg":
        return div(_coerce(other), self)

    def __neg__(self) -> "RealAlg":
        return neg(self)

    def __abs__(self) -> "RealAlg":
        return abs_alg(self)


_ZERO = RealAlg.from_rational(0)


def _coerce(value) -> RealAlg:
    if isinstance(value, RealAlg):
        return value
    if isinstance(value, (int, Fraction)):
        return RealAlg.from_rational(value)
    raise TypeError(f"cannot interpret {value!r} as RealAlg")


@lru_cache(maxsize=None)
def _count_pair(defpoly: UniPoly, lo: Fraction, hi: Fraction) -> int:
    return count_roots_between(defpoly, lo, hi)


def _count_cached(defpoly: UniPoly, lo: Fraction, hi: Fraction) -> int:
    return _count_pair(defpoly, lo, hi)


# ---------------------------------------------------------------------------
# Certified construction from a candidate defining polynomial + enclosure
# ---------------------------------------------------------------------------


def _strip_endpoint_roots(D: UniPoly, lo: Fraction, hi: Fraction) -> UniPoly:
    # The target value is strictly interior, so rational roots sitting on the
    # enclosure endpoints belong to other conjugates and can be divided out.
    t = UniPoly.var()
    while D(lo) == 0:
        D = D.divexact(t - UniPoly.constant(lo))
    while D(hi) == 0:
        D = D.divexact(t - UniPoly.constant(hi))
    return D


def _try_make(D: UniPoly, lo: Fraction, hi: Fraction) -> Optional[RealAlg]:
    """Certify (D, (lo, hi)) as a RealAlg holding the unique interior root.

    Returns None when the enclosure still contains more than one root of D;
    the caller then refines its sources and retries with a smaller enclosure.
    """
    if lo == hi:
        return RealAlg.from_rational(lo)
    D = _strip_endpoint_roots(D, lo, hi)
    n = _count_cached(D, lo, hi)
    if n == 0:
        raise ArithmeticError("enclosure lost the root; internal bug")
    if n > 1:
        return None
    # exactly one root: hunt for a small rational before settling
    for _ in range(_RATIONAL_PROBE_ROUNDS):
        cand = simplest_between(lo, hi)
        if D(cand) == 0:
            return RealAlg.from_rational(cand)
        if _count_cached(D, lo, cand) == 1:
            hi = cand
        else:
            lo = cand
    return RealAlg(D, lo, hi)


# ---------------------------------------------------------------------------
# Real root isolation
# ---------------------------------------------------------------------------


def isolate_real_roots(p: UniPoly) -> list[RealAlg]:
    """All distinct real roots of p, strictly increasing, certified."""
    if p.is_zero:
        raise ValueError("cannot isolate roots of the zero polynomial")
    if p.degree == 0:
        return []
    q = square_free_part(p)
    if q.degree == 0:
        return []
    bound = cauchy_root_bound(q)
    roots: list[RealAlg] = []

    def split(lo: Fraction, hi: Fraction) -> None:
        n = _count_cached(q, lo, hi)
        if n == 0:
            return
        if n == 1:
            made = _try_make(q, lo, hi)
            assert made is not None
            roots.append(made)
            return
        mid = (lo + hi) / 2
        if q(mid) == 0:
            roots.append(RealAlg.from_rational(mid))
            eps = (hi - lo) / 4
            while (
                q(mid - eps) == 0
                or q(mid + eps) == 0
                or _count_cached(q, mid - eps, mid + eps) != 1
            ):
                eps /= 2
            split(lo, mid - eps)
            split(mid + eps, hi)
        else:
            split(lo, mid)
            split(mid, hi)

    split(-bound, bound)
    roots.sort(key=lambda r: (r.lo + r.hi) / 2)
    return roots


# ---------------------------------------------------------------------------
# Exact sign and order
# ---------------------------------------------------------------------------


def sign_at(p: UniPoly, a: RealAlg) -> int:
    """Exact sign of p(a)."""
    if p.is_zero:
        return 0
    if a.is_rational:
        return sign(p(a.lo))
    # roots of g lie among the roots of defpoly, so the interval endpoints
    # are never roots of g and the count below is well-posed
    g = poly_gcd(a.defpoly, p)
    if g.degree >= 1 and _count_cached(g, a.lo, a.hi) == 1:
        return 0
    q = square_free_part(p)
    lo, hi = a.lo, a.hi
    while True:
        if q(lo) != 0 and q(hi) != 0 and _count_cached(q, lo, hi) == 0:
            mid = (lo + hi) / 2
            return sign(p(mid))
        mid = (lo + hi) / 2
        if a.defpoly(mid) == 0:
            return sign(p(mid))  # a turned out to be the rational mid
        if _count_cached(a.defpoly, lo, mid) == 1:
            hi = mid
        else:
            lo = mid


def compare(a: RealAlg, b: RealAlg) -> int:
    """Exact total-order comparison: -1, 0 or +1."""
    if a.is_rational and b.is_rational:
        return sign(a.lo - b.lo)
    if b.is_rational:
        return _compare_with_rational(b.lo, a)
    if a.is_rational:
        return -_compare_with_rational(a.lo, b)
    # both irrational
    if a.hi <= b.lo:
        return -1
    if b.hi <= a.lo:
        return 1
    if sign_at(b.defpoly, a) != 0:
        # definitely distinct; separate the intervals
        ra, rb = a, b
        while True:
            if ra.hi <= rb.lo:
                return -1
            if rb.hi <= ra.lo:
                return 1
            ra = ra.refine((ra.hi - ra.lo) / 2)
            rb = rb.refine((rb.hi - rb.lo) / 2)
            if ra.is_rational or rb.is_rational:
                return compare(ra, rb)
    # a is a root of b's defpoly; decide whether it is *the* root in b's box
    ra = a
    while True:
        if b.lo < ra.lo and ra.hi < b.hi:
            return 0
        if ra.hi <= b.lo:
            return -1
        if b.hi <= ra.lo:
            return 1
        ra = ra.refine((ra.hi - ra.lo) / 2)
        if ra.is_rational:
            return compare(ra, b)


def _compare_with_rational(r: Fraction, b: RealAlg) -> int:
    """sign(b - r)."""
    if b.defpoly(r) == 0 and b.lo < r < b.hi:
        return 0
    rb = b
    while rb.lo < r < rb.hi:
        rb = rb.refine((rb.hi - rb.lo) / 2)
        if rb.is_rational:
            return sign(rb.lo - r)
    if r <= rb.lo:
        return 1
    return -1


# ---------------------------------------------------------------------------
# Resultant compositions (cached on the defining polynomials)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _sum_defpoly(A: UniPoly, B: UniPoly) -> UniPoly:
    """Polynomial vanishing at a+b: Res_t(A(t), B(x - t))."""
    x_minus_t = TPoly((UniPoly((0, 1)), UniPoly((-1,))))
    acc = TPoly((UniPoly.one(),))
    powers = [acc]
    for _ in range(B.degree):
        acc = acc * x_minus_t
        powers.append(acc)
    comp = TPoly()
    for j, c in enumerate(B.coeffs):
        if c:
            comp = comp - powers[j].scale(UniPoly.constant(-c))
    return square_free_part(resultant(A, comp))


@lru_cache(maxsize=None)
def _product_defpoly(A: UniPoly, B: UniPoly) -> UniPoly:
    """Polynomial vanishing at a*b: Res_t(A(t), t^n B(x/t)), B(0) != 0."""
    n = B.degree
    coeffs = []
    for k in range(n + 1):
        # coefficient of t^(n-k) is b_k x^k
        b = B.coeff(k)
        coeffs.append(UniPoly((0,) * k + (b,)) if b else UniPoly())
    comp = TPoly(tuple(reversed(coeffs)))
    return square_free_part(resultant(A, comp))


@lru_cache(maxsize=None)
def _eval_defpoly(A: UniPoly, P: UniPoly) -> UniPoly:
    """Polynomial vanishing at P(a): Res_t(A(t), x - P(t))."""
    coeffs = [UniPoly((-c,)) for c in P.coeffs]
    coeffs[0] = UniPoly((-P.coeff(0), 1))
    return square_free_part(resultant(A, TPoly(tuple(coeffs))))


def _avoid_zero(a: RealAlg) -> RealAlg:
    """Refine a nonzero number until 0 is outside its closed interval, and
    drop a spurious zero root from its defining polynomial."""
    r = a
    while r.lo <= 0 <= r.hi:
        if r.is_rational:
            raise ZeroDivisionError("value is zero")
        r = r.refine((r.hi - r.lo) / 2)
    D = r.defpoly
    if not r.is_rational and D.coeff(0) == 0:
        D = D.divexact(UniPoly((0, 1)))
        r = RealAlg(D, r.lo, r.hi)
    return r


# ---------------------------------------------------------------------------
# Field operations
# ---------------------------------------------------------------------------


def neg(a: RealAlg) -> "RealAlg":
    if a.is_rational:
        return RealAlg.from_rational(-a.lo)
    D = UniPoly(tuple(c if i % 2 == 0 else -c for i, c in enumerate(a.defpoly.coeffs)))
    return RealAlg(D.monic(), -a.hi, -a.lo)


def abs_alg(a: RealAlg) -> RealAlg:
    return neg(a) if a.sign() < 0 else a


def add(a: RealAlg, b: RealAlg) -> RealAlg:
    if a.is_rational and b.is_rational:
        return RealAlg.from_rational(a.lo + b.lo)
    if a.is_rational:
        return add(b, a)
    if b.is_rational:
        r = b.lo
        shift = UniPoly((-r, 1))  # t - r
        D = a.defpoly.compose(shift)  # roots move by +r
        return RealAlg(D.monic(), a.lo + r, a.hi + r)
    D = _sum_defpoly(a.defpoly, b.defpoly)
    ra, rb = a, b
    while True:
        made = _try_make(D, ra.lo + rb.lo, ra.hi + rb.hi)
        if made is not None:
            return made
        ra = ra.refine((ra.hi - ra.lo) / 2)
        rb = rb.refine((rb.hi - rb.lo) / 2)
        if ra.is_rational or rb.is_rational:
            return add(ra, rb)


def mul(a: RealAlg, b: RealAlg) -> RealAlg:
    if a.is_rational and b.is_rational:
        return RealAlg.from_rational(a.lo * b.lo)
    if a.is_rational:
        return mul(b, a)
    if b.is_rational:
        r = b.lo
        if r == 0:
            return RealAlg.from_rational(0)
        # roots scale by r: substitute t/r and clear denominators
        n = a.defpoly.degree
        D = UniPoly(tuple(c * r ** (n - i) for i, c in enumerate(a.defpoly.coeffs)))
        lo, hi = sorted((a.lo * r, a.hi * r))
        return RealAlg(D.monic(), lo, hi)
    a = _avoid_zero(a) if a.lo <= 0 <= a.hi else a
    if a.is_rational:
        return mul(a, b)
    b = _avoid_zero(b)
    if b.is_rational:
        return mul(a, b)
    D = _product_defpoly(a.defpoly, b.defpoly)
    ra, rb = a, b
    while True:
        cands = (ra.lo * rb.lo, ra.lo * rb.hi, ra.hi * rb.lo, ra.hi * rb.hi)
        made = _try_make(D, min(cands), max(cands))
        if made is not None:
            return made
        ra = ra.refine((ra.hi - ra.lo) / 2)
        rb = rb.refine((rb.hi - rb.lo) / 2)
        if ra.is_rational or rb.is_rational:
            return mul(ra, rb)


def inverse(b: RealAlg) -> RealAlg:
    if b.is_rational:
        if b.lo == 0:
            raise ZeroDivisionError("division by zero")
        return RealAlg.from_rational(1 / b.lo)
    b = _avoid_zero(b)
    if b.is_rational:
        return inverse(b)
    D = b.defpoly.reversed_coeffs().monic()
    lo, hi = sorted((1 / b.hi, 1 / b.lo))
    return RealAlg(D, lo, hi)


def div(a: RealAlg, b: RealAlg) -> RealAlg:
    return mul(a, inverse(b))


def eval_alg(p: UniPoly, a: RealAlg) -> RealAlg:
    """The algebraic number p(a)."""
    if a.is_rational:
        return RealAlg.from_rational(p(a.lo))
    if p.is_constant:
        return RealAlg.from_rational(p.coeff(0))
    D = _eval_defpoly(a.defpoly, p)
    ra = a
    while True:
        lo, hi = interval_eval(p, ra.lo, ra.hi)
        if lo == hi:
            return RealAlg.from_rational(lo)
        made = _try_make(D, lo, hi)
        if made is not None:
            return made
        ra = ra.refine((ra.hi - ra.lo) / 2)
        if ra.is_rational:
            return eval_alg(p, ra)


def _exact_int_nth_root(n: int, k: int) -> Optional[int]:
    """Integer k-th root of n >= 0 when exact, else None."""
    if n in (0, 1):
        return n
    r = round(n ** (1.0 / k))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**k == n:
            return cand
    return None


def nth_root_pos(a: RealAlg, n: int) -> RealAlg:
    """The unique positive real n-th root of a > 0."""
    if n < 1:
        raise ValueError("root order must be >= 1")
    if n == 1:
        return a
    if a.sign() <= 0:
        raise ValueError("nth_root_pos requires a positive radicand")
    if a.is_rational:
        v = a.lo
        np_ = _exact_int_nth_root(v.numerator, n)
        dp_ = _exact_int_nth_root(v.denominator, n)
        if np_ is not None and dp_ is not None:
            return RealAlg.from_rational(Fraction(np_, dp_))
        D = UniPoly((-v,) + (0,) * (n - 1) + (1,))  # x**n - v
        made = _try_make(D, *_root_bracket(v, v, n))
        assert made is not None
        return made
    ra = _avoid_zero(a)  # positive interval, defpoly nonzero at 0
    if ra.is_rational:
        return nth_root_pos(ra, n)
    D = ra.defpoly.stretch(n)
    while True:
        made = _try_make(D, *_root_bracket(ra.lo, ra.hi, n))
        if made is not None:
            return made
        ra = ra.refine((ra.hi - ra.lo) / 2)
        if ra.is_rational:
            return nth_root_pos(ra, n)


def _root_bracket(lo: Fraction, hi: Fraction, n: int) -> tuple[Fraction, Fraction]:
    """Positive rational bracket (l, u) with l**n < lo <= hi < u**n."""
    l = min(Fraction(1), lo)
    while l**n >= lo:
        l /= 2
    u = max(Fraction(1), hi)
    while u**n <= hi:
        u *= 2
    for _ in range(64):
        m = (l + u) / 2
        if m**n < lo:
            l = m
        elif m**n > hi:
            u = m
        else:
            break
    return l, u


def pow_int(a: RealAlg, k: int) -> RealAlg:
    """a**k for integer k (k < 0 requires a != 0)."""
    if k == 0:
        return RealAlg.from_rational(1)
    if k < 0:
        return inverse(pow_int(a, -k))
    if a.is_rational:
        return RealAlg.from_rational(a.lo**k)
    return eval_alg(UniPoly((0,) * k + (1,)), a)
