"""Lipschitz classification of univariate polynomial functions.

Two polynomial functions f, g are Lipschitz equivalent when g o phi = c f
for some bi-Lipschitz homeomorphism phi of the reals and some c > 0.  The
decision reduces to exact data: degree, the ordered critical points with
multiplicities, the critical values, and (for two or more critical points)
similarity of the multiplicity symbols.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .polyalg import UniPoly, sign
from .realalg import RealAlg, compare, eval_alg, isolate_real_roots, sign_at


class Orientation(enum.Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"

    def flip(self) -> "Orientation":
        return (
            Orientation.DECREASING
            if self is Orientation.INCREASING
            else Orientation.INCREASING
        )


class Reason1D(enum.Enum):
    DEGREE_MISMATCH = "DegreeMismatch"
    CRIT_COUNT_MISMATCH = "CritCountMismatch"
    SIGN_MISMATCH = "SignMismatch"
    EXTREMUM_TYPE_MISMATCH = "ExtremumTypeMismatch"
    SYMBOL_NOT_SIMILAR = "SymbolNotSimilar"
    CONSTANT_SIGN_MISMATCH = "ConstantSignMismatch"


@dataclass(frozen=True)
class CSet:
    """Admissible scaling constants: a forced value or all of (0, oo)."""

    c: Optional[RealAlg]  # None means any positive constant works

    @staticmethod
    def any_positive() -> "CSet":
        return CSet(None)

    @staticmethod
    def unique(c: RealAlg) -> "CSet":
        assert c.sign() > 0
        return CSet(c)

    @property
    def is_unique(self) -> bool:
        return self.c is not None

    def pick(self) -> RealAlg:
        """A concrete admissible constant (1 when the set is free)."""
        return self.c if self.c is not None else RealAlg.from_rational(1)

    def compatible_common_value(self, other: "CSet") -> Optional[RealAlg]:
        """A constant admissible for both sets, when one exists."""
        if self.c is None:
            return other.pick()
        if other.c is None:
            return self.c
        if compare(self.c, other.c) == 0:
            return self.c
        return None


@dataclass(frozen=True)
class Pairing1D:
    orientation: Orientation
    c_set: CSet


@dataclass(frozen=True)
class Verdict1D:
    equivalent: bool
    pairings: tuple[Pairing1D, ...] = ()
    reason: Optional[Reason1D] = None

    def __post_init__(self):
        assert self.equivalent == bool(self.pairings)


@dataclass(frozen=True)
class CritData:
    """Ordered critical points of a nonconstant polynomial function."""

    points: tuple[RealAlg, ...]
    mults: tuple[int, ...]
    values: tuple[RealAlg, ...]
    degree: int
    leading_sign: int

    @property
    def count(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class MultSymbol:
    """The ordered pair (critical values, multiplicities), defined for p >= 2."""

    values: tuple[RealAlg, ...]
    mults: tuple[int, ...]


def multiplicity_at(f: UniPoly, point: RealAlg) -> int:
    """Smallest k >= 1 with the k-th derivative nonzero at the point."""
    if f.is_constant:
        raise ValueError("multiplicity of a constant function")
    d = f.derivative()
    k = 1
    while d.degree >= 0:
        if sign_at(d, point) != 0:
            return k
        d = d.derivative()
        k += 1
    raise AssertionError("nonconstant polynomial with all derivatives zero")


@lru_cache(maxsize=None)
def critical_data(f: UniPoly) -> CritData:
    """Critical points of f (roots of f'), their multiplicities and values."""
    if f.is_constant:
        raise ValueError("critical_data of a constant function")
    points = tuple(isolate_real_roots(f.derivative()))
    mults = tuple(multiplicity_at(f, p) for p in points)
    values = tuple(eval_alg(f, p) for p in points)
    assert all(m >= 2 for m in mults)
    return CritData(points, mults, values, f.degree, sign(f.leading))


def symbol_of(f: UniPoly) -> MultSymbol:
    data = critical_data(f)
    if data.count < 2:
        raise ValueError("multiplicity symbol needs at least two critical points")
    return MultSymbol(data.values, data.mults)


@dataclass(frozen=True)
class Similarity:
    """Outcome of the symbol similarity test; None entries mean 'not that way'."""

    direct: Optional[CSet]
    reverse: Optional[CSet]

    @property
    def is_similar(self) -> bool:
        return self.direct is not None or self.reverse is not None


def _proportional(avals: tuple[RealAlg, ...], bvals: tuple[RealAlg, ...]) -> Optional[CSet]:
    """CSet with b = c*a for some c > 0, or None.

    The constant comes from the first nonzero entry; the other entries are
    cross-checked through the exact identities b_j * a_i = a_j * b_i, which
    avoids committing to a division per entry.
    """
    signs_a = [v.sign() for v in avals]
    signs_b = [v.sign() for v in bvals]
    if signs_a != signs_b:
        return None
    try:
        i0 = next(i for i, s in enumerate(signs_a) if s != 0)
    except StopIteration:
        return CSet.any_positive()
    for j in range(len(avals)):
        if j == i0 or signs_a[j] == 0:
            continue
        if compare(bvals[j] * avals[i0], avals[j] * bvals[i0]) != 0:
            return None
    return CSet.unique(bvals[i0] / avals[i0])


def similar(A: MultSymbol, B: MultSymbol) -> Similarity:
    """Direct/reverse similarity of two multiplicity symbols of equal length."""
    if len(A.values) != len(B.values):
        raise ValueError("multiplicity symbols must have the same length")
    direct = _proportional(A.values, B.values) if A.mults == B.mults else None
    rev_vals = tuple(reversed(A.values))
    rev_mults = tuple(reversed(A.mults))
    reverse = _proportional(rev_vals, B.values) if rev_mults == B.mults else None
    return Similarity(direct, reverse)


def _constant_value_sign(f: UniPoly) -> int:
    return sign(f.coeff(0))


def classify_pair(f: UniPoly, g: UniPoly) -> Verdict1D:
    """Full Lipschitz-equivalence decision for two polynomial functions."""
    if f.is_constant or g.is_constant:
        if not (f.is_constant and g.is_constant):
            return Verdict1D(False, reason=Reason1D.DEGREE_MISMATCH)
        if _constant_value_sign(f) != _constant_value_sign(g):
            return Verdict1D(False, reason=Reason1D.CONSTANT_SIGN_MISMATCH)
        free = CSet.any_positive()
        return Verdict1D(
            True,
            (Pairing1D(Orientation.INCREASING, free), Pairing1D(Orientation.DECREASING, free)),
        )
    if f.degree != g.degree:
        return Verdict1D(False, reason=Reason1D.DEGREE_MISMATCH)
    df, dg = critical_data(f), critical_data(g)
    if df.count != dg.count:
        return Verdict1D(False, reason=Reason1D.CRIT_COUNT_MISMATCH)
    p = df.count
    d = f.degree

    if p == 0:
        # both are monotone homeomorphisms of the line (d is necessarily odd)
        assert d % 2 == 1, "even-degree polynomial cannot be critical-point-free"
        orient = (
            Orientation.INCREASING
            if df.leading_sign == dg.leading_sign
            else Orientation.DECREASING
        )
        return Verdict1D(True, (Pairing1D(orient, CSet.any_positive()),))

    if p == 1:
        if df.mults[0] != dg.mults[0]:
            return Verdict1D(False, reason=Reason1D.SYMBOL_NOT_SIMILAR)
        sf, sg = df.values[0].sign(), dg.values[0].sign()
        if sf != sg:
            return Verdict1D(False, reason=Reason1D.SIGN_MISMATCH)
        if d % 2 == 0:
            # single critical point of an even-degree function is the global
            # extremum; its type is the sign of the leading coefficient
            if df.leading_sign != dg.leading_sign:
                return Verdict1D(False, reason=Reason1D.EXTREMUM_TYPE_MISMATCH)
        c_set = (
            CSet.unique(dg.values[0] / df.values[0])
            if sf != 0
            else CSet.any_positive()
        )
        if d % 2 == 1:
            orient = (
                Orientation.INCREASING
                if df.leading_sign == dg.leading_sign
                else Orientation.DECREASING
            )
            return Verdict1D(True, (Pairing1D(orient, c_set),))
        return Verdict1D(
            True,
            (
                Pairing1D(Orientation.INCREASING, c_set),
                Pairing1D(Orientation.DECREASING, c_set),
            ),
        )

    sim = similar(MultSymbol(df.values, df.mults), MultSymbol(dg.values, dg.mults))
    pairings = []
    if sim.direct is not None:
        pairings.append(Pairing1D(Orientation.INCREASING, sim.direct))
    if sim.reverse is not None:
        pairings.append(Pairing1D(Orientation.DECREASING, sim.reverse))
    if not pairings:
        return Verdict1D(False, reason=Reason1D.SYMBOL_NOT_SIMILAR)
    verdict = Verdict1D(True, tuple(pairings))
    assert df.degree == dg.degree and df.count == dg.count
    return verdict
