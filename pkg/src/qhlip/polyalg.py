"""Exact polynomial arithmetic over arbitrary-precision rationals.

Univariate polynomials are dense (the degrees in play stay small), bivariate
polynomials are sparse (quasihomogeneous supports are thin).  Everything is
immutable and every operation is a pure function, so values can be shared and
cached freely.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd as _int_gcd, lcm as _int_lcm
from typing import Iterable, Iterator, Mapping, Sequence, Union

Rat = Fraction
RatLike = Union[Fraction, int]


def rat(num: RatLike, den: RatLike = 1) -> Fraction:
    """Build a rational scalar in canonical form."""
    return Fraction(num) / Fraction(den)


def sign(x: RatLike) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


class UniPoly:
    """Dense univariate polynomial with Fraction coefficients.

    ``coeffs[i]`` is the coefficient of the i-th power; trailing zeros are
    trimmed, so the zero polynomial has an empty coefficient tuple and
    degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RatLike] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly()

    @staticmethod
    def one() -> "UniPoly":
        return UniPoly((1,))

    @staticmethod
    def var() -> "UniPoly":
        """The polynomial t."""
        return UniPoly((0, 1))

    @staticmethod
    def constant(c: RatLike) -> "UniPoly":
        return UniPoly((Fraction(c),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: Union["UniPoly", RatLike]) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ci in enumerate(a):
            if ci:
                for j, cj in enumerate(b):
                    out[i + j] += ci * cj
        return UniPoly(out)

    def __rmul__(self, other: RatLike) -> "UniPoly":
        return self.scale(other)

    def scale(self, c: RatLike) -> "UniPoly":
        c = Fraction(c)
        if c == 0:
            return UniPoly()
        return UniPoly(tuple(c * a for a in self.coeffs))

    def __call__(self, x: RatLike) -> Fraction:
        """Exact evaluation by Horner's rule."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i >= 1))

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(), self
        quo = [Fraction(0)] * (dq + 1)
        lc = other.leading
        for k in range(dq, -1, -1):
            top = rem[k + other.degree]
            if top == 0:
                continue
            q = top / lc
            quo[k] = q
            for j, c in enumerate(other.coeffs):
                rem[k + j] -= q * c
        return UniPoly(quo), UniPoly(rem)

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[1]

    def divexact(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        return self.scale(1 / self.leading)

    def primitive(self) -> "UniPoly":
        """Scale by a positive rational so coefficients are coprime integers.

        Positive scaling preserves signs everywhere, which is what Sturm
        chains rely on.
        """
        if self.is_zero:
            return self
        den = 1
        for c in self.coeffs:
            den = _int_lcm(den, c.denominator)
        num = 0
        for c in self.coeffs:
            num = _int_gcd(num, abs(c.numerator * (den // c.denominator)))
        return self.scale(Fraction(den, num))

    def compose(self, inner: "UniPoly") -> "UniPoly":
        """self(inner(t)), exact."""
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + UniPoly.constant(c)
        return acc

    def stretch(self, n: int) -> "UniPoly":
        """self(t**n)."""
        if n < 1:
            raise ValueError("stretch exponent must be >= 1")
        if self.is_zero:
            return self
        out = [Fraction(0)] * (self.degree * n + 1)
        for i, c in enumerate(self.coeffs):
            out[i * n] = c
        return UniPoly(out)

    def reversed_coeffs(self) -> "UniPoly":
        """t**deg * self(1/t); constant term must be nonzero."""
        if self.is_zero or self.coeffs[0] == 0:
            raise ValueError("reversal needs a nonzero constant term")
        return UniPoly(tuple(reversed(self.coeffs)))

    def __repr__(self) -> str:
        if self.is_zero:
            return "UniPoly(0)"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{i}")
        return "UniPoly(" + " + ".join(parts) + ")"


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic greatest common divisor; both-zero input is an error."""
    if p.is_zero and q.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    a, b = p, q
    while not b.is_zero:
        a, b = b, (a % b)
        if not b.is_zero:
            b = b.primitive()
    return a.monic()


def square_free_part(p: UniPoly) -> UniPoly:
    """p / gcd(p, p'), monic."""
    if p.is_zero:
        raise ValueError("square-free part of the zero polynomial")
    if p.degree == 0:
        return UniPoly.one()
    g = poly_gcd(p, p.derivative())
    return p.divexact(g).monic()


@lru_cache(maxsize=None)
def sturm_sequence(p: UniPoly) -> tuple[UniPoly, ...]:
    """Standard Sturm chain p, p', -rem, ... for a square-free p.

    Content is stripped (by positive factors only) between steps to control
    coefficient growth; that keeps every sign evaluation unchanged.
    """
    if p.is_zero:
        raise ValueError("Sturm sequence of the zero polynomial")
    chain = [p, p.derivative()]
    while not chain[-1].is_zero:
        r = -(chain[-2] % chain[-1])
        if r.is_zero:
            break
        chain.append(r.primitive())
    return tuple(chain)


def sign_variations(values: Sequence[Fraction]) -> int:
    count = 0
    prev = 0
    for v in values:
        s = sign(v)
        if s == 0:
            continue
        if prev != 0 and s != prev:
            count += 1
        prev = s
    return count


def count_roots_between(p: UniPoly, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of square-free p in (lo, hi).

    Requires p(lo) != 0 and p(hi) != 0.
    """
    if lo > hi:
        raise ValueError("empty interval")
    if lo == hi:
        return 0
    chain = sturm_sequence(p)
    assert chain[0](lo) != 0 and chain[0](hi) != 0, "endpoint is a root"
    va = sign_variations([q(lo) for q in chain])
    vb = sign_variations([q(hi) for q in chain])
    return va - vb


def cauchy_root_bound(p: UniPoly) -> Fraction:
    """B with every real root of p strictly inside (-B, B)."""
    if p.is_zero:
        raise ValueError("root bound of the zero polynomial")
    lc = abs(p.leading)
    m = max((abs(c) for c in p.coeffs[:-1]), default=Fraction(0))
    return 1 + m / lc


def interval_eval(p: UniPoly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Interval extension of p over [lo, hi] by interval Horner."""
    alo = ahi = Fraction(0)
    for c in reversed(p.coeffs):
        cands = (alo * lo, alo * hi, ahi * lo, ahi * hi)
        alo, ahi = min(cands) + c, max(cands) + c
    return alo, ahi


# ---------------------------------------------------------------------------
# Bivariate polynomials (sparse)
# ---------------------------------------------------------------------------


class BiPoly:
    """Sparse polynomial in X, Y; maps exponent pairs to nonzero Fractions."""

    __slots__ = ("terms", "_key")

    def __init__(self, terms: Mapping[tuple[int, int], RatLike] = ()):
        clean: dict[tuple[int, int], Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError("negative exponent in BiPoly")
            c = Fraction(c)
            if c == 0:
                continue
            key = (int(i), int(j))
            c = clean.get(key, Fraction(0)) + c if key in clean else c
            if c == 0:
                clean.pop(key, None)
            else:
                clean[key] = c
        self.terms: dict[tuple[int, int], Fraction] = clean
        self._key = tuple(sorted(clean.items()))

    @staticmethod
    def zero() -> "BiPoly":
        return BiPoly()

    @staticmethod
    def monomial(i: int, j: int, c: RatLike = 1) -> "BiPoly":
        return BiPoly({(i, j): c})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BiPoly) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return BiPoly(out)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __mul__(self, other: Union["BiPoly", RatLike]) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, Fraction(0)) + c1 * c2
        return BiPoly(out)

    def __rmul__(self, other: RatLike) -> "BiPoly":
        return self.scale(other)

    def scale(self, c: RatLike) -> "BiPoly":
        c = Fraction(c)
        return BiPoly({k: c * v for k, v in self.terms.items()})

    def __call__(self, x: RatLike, y: RatLike) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        return sum((c * x**i * y**j for (i, j), c in self.terms.items()), Fraction(0))

    def eval_float(self, x: float, y: float) -> float:
        return sum(float(c) * x**i * y**j for (i, j), c in self._key)

    def substitute_y(self, x_value: RatLike) -> UniPoly:
        """F(x_value, t) as a univariate polynomial in t."""
        x_value = Fraction(x_value)
        deg = max((j for (_, j) in self.terms), default=0)
        out = [Fraction(0)] * (deg + 1)
        for (i, j), c in self.terms.items():
            out[j] += c * x_value**i
        return UniPoly(out)

    def scale_vars(self, a: RatLike, b: RatLike) -> "BiPoly":
        """F(aX, bY)."""
        a, b = Fraction(a), Fraction(b)
        return BiPoly({(i, j): c * a**i * b**j for (i, j), c in self.terms.items()})

    def monomials(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        return iter(self._key)

    def __repr__(self) -> str:
        if self.is_zero:
            return "BiPoly(0)"
        parts = []
        for (i, j), c in sorted(self.terms.items(), reverse=True):
            piece = str(c)
            if i:
                piece += f"*X^{i}" if i > 1 else "*X"
            if j:
                piece += f"*Y^{j}" if j > 1 else "*Y"
            parts.append(piece)
        return "BiPoly(" + " + ".join(parts) + ")"


def x_multiplicity(F: BiPoly) -> int:
    """Largest e with X**e dividing F."""
    if F.is_zero:
        raise ValueError("x_multiplicity of the zero polynomial")
    return min(i for (i, _) in F.terms)


def y_divides(F: BiPoly) -> bool:
    """Whether Y divides F."""
    if F.is_zero:
        raise ValueError("y_divides of the zero polynomial")
    return all(j >= 1 for (_, j) in F.terms)


def is_cxd(F: BiPoly) -> tuple[Fraction, int] | None:
    """(c, d) when F = c*X**d, else None."""
    if F.is_zero:
        raise ValueError("is_cxd of the zero polynomial")
    if len(F.terms) != 1:
        return None
    ((i, j), c), = F.terms.items()
    if j != 0:
        return None
    return c, i


# ---------------------------------------------------------------------------
# Resultants via the subresultant pseudo-remainder sequence
# ---------------------------------------------------------------------------


class TPoly:
    """Polynomial in t whose coefficients are UniPoly values in x.

    This is the two-level representation the resultant kernel works in:
    the eliminated variable is t, the surviving variable is x.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[UniPoly] = ()):
        cs = list(coeffs)
        while cs and cs[-1].is_zero:
            cs.pop()
        self.coeffs: tuple[UniPoly, ...] = tuple(cs)

    @staticmethod
    def from_unipoly_in_t(p: UniPoly) -> "TPoly":
        return TPoly(tuple(UniPoly.constant(c) for c in p.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> UniPoly:
        if not self.coeffs:
            raise ValueError("zero polynomial")
        return self.coeffs[-1]

    def shift(self, k: int) -> "TPoly":
        if self.is_zero:
            return self
        return TPoly((UniPoly(),) * k + self.coeffs)

    def scale(self, c: UniPoly) -> "TPoly":
        if c.is_zero:
            return TPoly()
        return TPoly(tuple(a * c for a in self.coeffs))

    def divexact_scalar(self, c: UniPoly) -> "TPoly":
        return TPoly(tuple(a.divexact(c) for a in self.coeffs))

    def __sub__(self, other: "TPoly") -> "TPoly":
        a, b = list(self.coeffs), other.coeffs
        if len(a) < len(b):
            a += [UniPoly()] * (len(b) - len(a))
        for i, c in enumerate(b):
            a[i] = a[i] - c
        return TPoly(a)

    def __mul__(self, other: "TPoly") -> "TPoly":
        if self.is_zero or other.is_zero:
            return TPoly()
        out = [UniPoly() for _ in range(self.degree + other.degree + 1)]
        for i, ci in enumerate(self.coeffs):
            if not ci.is_zero:
                for j, cj in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + ci * cj
        return TPoly(out)


def _pseudo_rem(A: TPoly, B: TPoly) -> TPoly:
    """prem(A, B): lc(B)**(deg A - deg B + 1) * A reduced mod B."""
    d = B.leading
    delta = A.degree - B.degree
    R = A
    steps = delta + 1
    while not R.is_zero and R.degree >= B.degree:
        R = R.scale(d) - B.scale(R.leading).shift(R.degree - B.degree)
        steps -= 1
    if steps > 0:
        mult = d
        for _ in range(steps - 1):
            mult = mult * d
        R = R.scale(mult)
    return R


def resultant(p: UniPoly | TPoly, q: UniPoly | TPoly) -> UniPoly:
    """Resultant with respect to t, exact, via the subresultant PRS.

    Inputs are polynomials in t; coefficients may involve one extra variable
    x (TPoly).  Plain UniPoly arguments are read as polynomials in t with
    constant coefficients.  The result is a UniPoly in x.
    """
    A = p if isinstance(p, TPoly) else TPoly.from_unipoly_in_t(p)
    B = q if isinstance(q, TPoly) else TPoly.from_unipoly_in_t(q)
    if A.is_zero or B.is_zero:
        raise ValueError("resultant of a zero polynomial")
    s = 1
    if A.degree < B.degree:
        if (A.degree * B.degree) % 2 == 1:
            s = -s
        A, B = B, A
    if B.degree == 0:
        out = UniPoly.one()
        for _ in range(A.degree):
            out = out * B.leading
        return out if s == 1 else -out
    g = UniPoly.one()
    h = UniPoly.one()
    while True:
        dA, dB = A.degree, B.degree
        delta = dA - dB
        if dA % 2 == 1 and dB % 2 == 1:
            s = -s
        R = _pseudo_rem(A, B)
        A = B
        if R.is_zero:
            return UniPoly.zero()
        divisor = g
        for _ in range(delta):
            divisor = divisor * h
        B = R.divexact_scalar(divisor)
        g = A.leading
        if delta == 0:
            pass  # h unchanged
        elif delta == 1:
            h = g
        else:
            num = g
            for _ in range(delta - 1):
                num = num * g
            den = h
            for _ in range(delta - 2):
                den = den * h
            h = num.divexact(den)
        if B.degree == 0:
            break
    # deg A >= 1 here; fold the last constant into the subresultant scale
    num = B.leading
    for _ in range(A.degree - 1):
        num = num * B.leading
    den = UniPoly.one()
    for _ in range(A.degree - 1):
        den = den * h
    out = num.divexact(den)
    return out if s == 1 else -out
