"""Zygotheties: the witness group for pairing height functions.

A zygothety is a pair of nonzero scale factors with equal signs together
with a pair of bi-Lipschitz self-maps of the line, composed with a twist
when the scales are negative.  The maps are symbolic descriptors evaluated
on demand; exact data (scales, limit slopes, the constants c) drives every
verdict, while numeric evaluation only feeds the witness harness.
"""

from __future__ import annotations

import bisect
import random
from dataclasses import dataclass
from fractions import Fraction
from .lipclass import Orientation, Pairing1D, critical_data
from .polyalg import UniPoly
from .realalg import RealAlg, abs_alg, compare, inverse as alg_inverse, nth_root_pos, pow_int

_BRACKET_REFINE = Fraction(1, 2**64)


class ConstructionUnavailable(Exception):
    """No known construction upgrades this pairing to a regular zygothety."""


class PLMap:
    """Monotone bijection of the reals, described symbolically."""

    def orientation(self) -> int:
        raise NotImplementedError

    def limit_slope(self) -> RealAlg:
        """The common two-sided limit of m(t)/t, exact."""
        raise NotImplementedError

    def inverse(self) -> "PLMap":
        raise NotImplementedError

    def eval_float(self, t: float) -> float:
        raise NotImplementedError

    def json_dict(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class Affine(PLMap):
    """t -> a*t + b with rational a != 0, b."""

    a: Fraction
    b: Fraction

    def orientation(self) -> int:
        return 1 if self.a > 0 else -1

    def limit_slope(self) -> RealAlg:
        return RealAlg.from_rational(self.a)

    def inverse(self) -> "PLMap":
        return Affine(1 / self.a, -self.b / self.a)

    def eval_float(self, t: float) -> float:
        return float(self.a) * t + float(self.b)

    def eval_exact(self, t: Fraction) -> Fraction:
        return self.a * t + self.b

    def json_dict(self) -> dict:
        return {"kind": "affine", "a": str(self.a), "b": str(self.b)}


def identity_map() -> Affine:
    return Affine(Fraction(1), Fraction(0))


class BranchMap(PLMap):
    """phi = (g restricted to a branch)^-1 o (c * f), branch by branch.

    The i-th interval cut out of the line by the critical points of f maps
    onto the matching interval of g: the i-th one for an increasing map, the
    mirror one for a decreasing map.  Inversion of g on a monotone branch is
    numeric (bracketing plus bisection) with exact interval endpoints.
    """

    __slots__ = ("c", "increasing", "f", "g", "crits_f", "crits_g", "_flt")

    def __init__(self, c, increasing, f, g, crits_f, crits_g):
        self.c: RealAlg = c
        self.increasing: bool = increasing
        self.f: UniPoly = f
        self.g: UniPoly = g
        self.crits_f: tuple[RealAlg, ...] = tuple(crits_f)
        self.crits_g: tuple[RealAlg, ...] = tuple(crits_g)
        self._flt = None

    def orientation(self) -> int:
        return 1 if self.increasing else -1

    def limit_slope(self) -> RealAlg:
        deg = self.f.degree
        assert deg == self.g.degree and deg >= 1
        ratio = self.c * Fraction(self.f.leading, self.g.leading)
        if deg % 2 == 1:
            assert (ratio.sign() > 0) == self.increasing
        else:
            assert ratio.sign() > 0
        mag = nth_root_pos(abs_alg(ratio), deg)
        return mag if self.increasing else -mag

    def inverse(self) -> "PLMap":
        return BranchMap(
            alg_inverse(self.c),
            self.increasing,
            self.g,
            self.f,
            self.crits_g,
            self.crits_f,
        )

    def _floats(self):
        if self._flt is None:
            cf = [x.refine(_BRACKET_REFINE).to_float() for x in self.crits_f]
            cg = [x.refine(_BRACKET_REFINE).to_float() for x in self.crits_g]
            self._flt = (self.c.to_float(), cf, cg)
        return self._flt

    def eval_float(self, t: float) -> float:
        cflt, cf, cg = self._floats()
        p = len(cf)
        i = bisect.bisect_left(cf, t)
        j = i if self.increasing else p - i
        y = cflt * self.f.eval_float(t)
        return _invert_on_branch(self.g, cg, j, y)

    def json_dict(self) -> dict:
        from .jsonio import alg_json

        return {
            "kind": "branch",
            "c": alg_json(self.c),
            "orientation": "increasing" if self.increasing else "decreasing",
            "f": [str(c) for c in self.f.coeffs],
            "g": [str(c) for c in self.g.coeffs],
            "crits_f": [alg_json(x) for x in self.crits_f],
            "crits_g": [alg_json(x) for x in self.crits_g],
        }


def _invert_on_branch(g: UniPoly, crit_floats: list[float], j: int, y: float) -> float:
    """Solve g(u) = y for u in the j-th branch interval, bisecting on u."""
    p = len(crit_floats)
    if p == 0:
        lo, hi = -1.0, 1.0
        unbounded_lo = unbounded_hi = True
    else:
        lo = crit_floats[j - 1] if j >= 1 else crit_floats[0] - 1.0
        hi = crit_floats[j] if j < p else crit_floats[p - 1] + 1.0
        unbounded_lo = j == 0
        unbounded_hi = j == p
    flo = g.eval_float(lo) - y
    fhi = g.eval_float(hi) - y
    step = max(1.0, abs(lo), abs(hi))
    for _ in range(600):
        if flo == 0.0 or fhi == 0.0 or flo * fhi < 0.0:
            break
        if unbounded_lo and (not unbounded_hi or abs(flo) < abs(fhi)):
            lo -= step
            flo = g.eval_float(lo) - y
        elif unbounded_hi:
            hi += step
            fhi = g.eval_float(hi) - y
        else:
            # bounded branch: y can sit a rounding error outside the image
            return lo if abs(flo) <= abs(fhi) else hi
        step *= 2.0
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if not (lo < mid < hi):
            break
        fmid = g.eval_float(mid) - y
        if fmid == 0.0:
            return mid
        if flo * fmid < 0.0:
            hi, fhi = mid, fmid
        else:
            lo, flo = mid, fmid
        if hi - lo <= 1e-15 * max(1.0, abs(lo), abs(hi)):
            break
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class Neg(PLMap):
    """t -> -inner(t)."""

    inner: PLMap

    def orientation(self) -> int:
        return -self.inner.orientation()

    def limit_slope(self) -> RealAlg:
        return -self.inner.limit_slope()

    def inverse(self) -> "PLMap":
        return Compose(self.inner.inverse(), Affine(Fraction(-1), Fraction(0)))

    def eval_float(self, t: float) -> float:
        return -self.inner.eval_float(t)

    def json_dict(self) -> dict:
        return {"kind": "neg", "inner": self.inner.json_dict()}


@dataclass(frozen=True)
class NegConj(PLMap):
    """t -> -inner(-t); preserves orientation and limit slope."""

    inner: PLMap

    def orientation(self) -> int:
        return self.inner.orientation()

    def limit_slope(self) -> RealAlg:
        return self.inner.limit_slope()

    def inverse(self) -> "PLMap":
        return NegConj(self.inner.inverse())

    def eval_float(self, t: float) -> float:
        return -self.inner.eval_float(-t)

    def json_dict(self) -> dict:
        return {"kind": "neg_conj", "inner": self.inner.json_dict()}


@dataclass(frozen=True)
class Compose(PLMap):
    """t -> outer(inner(t)); closure node for the group operation."""

    outer: PLMap
    inner: PLMap

    def orientation(self) -> int:
        return self.outer.orientation() * self.inner.orientation()

    def limit_slope(self) -> RealAlg:
        return self.outer.limit_slope() * self.inner.limit_slope()

    def inverse(self) -> "PLMap":
        return Compose(self.inner.inverse(), self.outer.inverse())

    def eval_float(self, t: float) -> float:
        return self.outer.eval_float(self.inner.eval_float(t))

    def json_dict(self) -> dict:
        return {
            "kind": "compose",
            "outer": self.outer.json_dict(),
            "inner": self.inner.json_dict(),
        }


# ---------------------------------------------------------------------------
# The group
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Zygothety:
    lam1: RealAlg
    lam2: RealAlg
    phi1: PLMap
    phi2: PLMap

    def __post_init__(self):
        assert self.lam1.sign() * self.lam2.sign() > 0, "scales must share a sign"

    @property
    def lam_sign(self) -> int:
        return self.lam1.sign()


def identity() -> Zygothety:
    one = RealAlg.from_rational(1)
    return Zygothety(one, one, identity_map(), identity_map())


def compose(outer: Zygothety, inner: Zygothety) -> Zygothety:
    """Zygothetic product (outer after inner); swaps outer components when
    the inner scales are negative."""
    if inner.lam_sign > 0:
        return Zygothety(
            inner.lam1 * outer.lam1,
            inner.lam2 * outer.lam2,
            Compose(outer.phi1, inner.phi1),
            Compose(outer.phi2, inner.phi2),
        )
    return Zygothety(
        inner.lam1 * outer.lam2,
        inner.lam2 * outer.lam1,
        Compose(outer.phi2, inner.phi1),
        Compose(outer.phi1, inner.phi2),
    )


def inverse(z: Zygothety) -> Zygothety:
    if z.lam_sign > 0:
        return Zygothety(
            alg_inverse(z.lam1),
            alg_inverse(z.lam2),
            z.phi1.inverse(),
            z.phi2.inverse(),
        )
    return Zygothety(
        alg_inverse(z.lam2),
        alg_inverse(z.lam1),
        z.phi2.inverse(),
        z.phi1.inverse(),
    )


def limit_slope(m: PLMap) -> RealAlg:
    return m.limit_slope()


def is_beta_regular(z: Zygothety, r: int, s: int) -> bool:
    """Exact test of |lam1|^beta * L1 == |lam2|^beta * L2 with beta = r/s.

    Both sides are raised to the s-th power so the comparison stays inside
    real algebraic arithmetic; signs are compared separately.
    """
    L1 = z.phi1.limit_slope()
    L2 = z.phi2.limit_slope()
    s1, s2 = L1.sign(), L2.sign()
    if s1 == 0 or s2 == 0 or s1 != s2:
        return False
    lhs = pow_int(abs_alg(z.lam1), r) * pow_int(abs_alg(L1), s)
    rhs = pow_int(abs_alg(z.lam2), r) * pow_int(abs_alg(L2), s)
    return compare(lhs, rhs) == 0


# ---------------------------------------------------------------------------
# Constructions that realize a pairing as a beta-regular zygothety
# ---------------------------------------------------------------------------


def _lambda_from_c(c: RealAlg, d: int, lam_sign: int) -> RealAlg:
    lam = alg_inverse(nth_root_pos(c, d))
    return lam if lam_sign > 0 else -lam


def _branch_map(c: RealAlg, orientation: Orientation, f: UniPoly, g: UniPoly) -> PLMap:
    df = critical_data(f)
    dg = critical_data(g)
    return BranchMap(
        c, orientation is Orientation.INCREASING, f, g, df.points, dg.points
    )


def make_regular(option, F, G) -> Zygothety:
    """Build a beta-regular zygothety realizing a pairing option for (F, G).

    The pairing option supplies an admissible scale sign and one 1-D pairing
    per side; the parity of (r, s) picks the construction.  Raises
    ConstructionUnavailable when the sides force incompatible constants.
    """
    from .qhdecide import heights

    r, s, d, e = F.r, F.s, F.d, F.e
    hf, hg = heights(F), heights(G)
    sgn = option.lambda_sign
    g_for_plus = hg.f_plus if sgn > 0 else hg.f_minus
    g_for_minus = hg.f_minus if sgn > 0 else hg.f_plus
    p1: Pairing1D = option.plus
    p2: Pairing1D = option.minus

    if r % 2 == 0 or s % 2 == 1:
        # duplicate the (+)-side data; the (-)-side identity follows from
        # the parity relations between the height functions
        c1 = p1.c_set.pick()
        phi1 = _branch_map(c1, p1.orientation, hf.f_plus, g_for_plus)
        lam1 = _lambda_from_c(c1, d, sgn)
        phi2 = phi1 if r % 2 == 0 else NegConj(phi1)
        z = Zygothety(lam1, lam1, phi1, phi2)
    else:
        # r odd, s even: scales must agree unless X divides neither side
        if e == 0:
            c1, c2 = p1.c_set.pick(), p2.c_set.pick()
        else:
            common = p1.c_set.compatible_common_value(p2.c_set)
            if common is None:
                raise ConstructionUnavailable(
                    "sides force distinct constants while X divides the polynomials"
                )
            c1 = c2 = common
        phi1 = _branch_map(c1, p1.orientation, hf.f_plus, g_for_plus)
        phi2 = _branch_map(c2, p2.orientation, hf.f_minus, g_for_minus)
        if p1.orientation is not p2.orientation:
            # height functions are even here, so flipping the second map
            # preserves its pairing identity while fixing coherence
            phi2 = Neg(phi2)
        z = Zygothety(_lambda_from_c(c1, d, sgn), _lambda_from_c(c2, d, sgn), phi1, phi2)
    assert is_beta_regular(z, r, s)
    return z


def action_residual(
    z: Zygothety,
    d: int,
    f_plus: UniPoly,
    f_minus: UniPoly,
    g_plus: UniPoly,
    g_minus: UniPoly,
    samples: int = 50,
    seed: int = 20240901,
) -> float:
    """Spot-check |lam_i|^d * g(phi_i(t)) = f_i(t) on random points.

    Exact verification when the maps and scales are rational; otherwise the
    maximum relative float residual over the sample set is returned.
    """
    sgn = z.lam_sign
    g1, g2 = (g_plus, g_minus) if sgn > 0 else (g_minus, g_plus)
    rng = random.Random(seed)
    pts = [Fraction(rng.randint(-300, 300), 100) for _ in range(samples)]
    worst = 0.0
    for lam, phi, gg, ff in ((z.lam1, z.phi1, g1, f_plus), (z.lam2, z.phi2, g2, f_minus)):
        if isinstance(phi, Affine) and lam.is_rational:
            scale = abs(lam.as_fraction()) ** d
            for t in pts:
                if scale * gg(phi.eval_exact(t)) != ff(t):
                    raise AssertionError("exact action identity failed")
            continue
        scale = abs(lam.to_float()) ** d
        for t in pts:
            tf = float(t)
            lhs = scale * gg.eval_float(phi.eval_float(tf))
            rhs = ff.eval_float(tf)
            err = abs(lhs - rhs) / max(1.0, abs(rhs))
            worst = max(worst, err)
    return worst
