"""Decision procedure for quasihomogeneous polynomials in two variables.

A polynomial F with F(tX, t^beta Y) = t^d F(X, Y) for t > 0, beta = r/s > 1
in lowest terms, is modeled with its exact invariants (d, the X-multiplicity
e, the top expansion index n).  The decision for a pair (F, G) combines the
necessary direction (unpairable height functions plus real zeros force
non-equivalence) with the sufficient constructions that upgrade a height
pairing to a regular zygothety, and reports Unknown with a machine-readable
reason whenever neither side applies.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from . import zygothety as zyg
from .lipclass import Pairing1D, classify_pair, critical_data
from .polyalg import BiPoly, UniPoly, is_cxd, sign, x_multiplicity, y_divides
from .realalg import RealAlg, isolate_real_roots, nth_root_pos


class NotQuasihomogeneousError(ValueError):
    pass


class BetaRangeError(ValueError):
    pass


class BetaMismatchError(ValueError):
    pass


class DegreeMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class QHPoly:
    """A validated quasihomogeneous polynomial with its exact invariants."""

    poly: BiPoly
    r: int
    s: int
    d: int
    e: int  # multiplicity of X as a factor
    n: int  # top index of the quasihomogeneous expansion

    @property
    def beta(self) -> Fraction:
        return Fraction(self.r, self.s)

    @property
    def is_cxd(self) -> bool:
        return self.n == 0


@dataclass(frozen=True)
class HeightPair:
    f_plus: UniPoly
    f_minus: UniPoly


def validate_qh(F: BiPoly, r: int, s: int) -> QHPoly:
    """Check the support condition and compute (d, e, n)."""
    if F.is_zero:
        raise NotQuasihomogeneousError("the zero polynomial is excluded")
    if r <= 0 or s <= 0 or math.gcd(r, s) != 1:
        raise BetaRangeError("weights must be coprime positive integers")
    if r <= s:
        raise BetaRangeError("beta = r/s must be greater than 1")
    d_times_s = None
    for (i, j), _ in F.monomials():
        val = i * s + j * r
        if d_times_s is None:
            d_times_s = val
        elif val != d_times_s:
            raise NotQuasihomogeneousError(
                f"support is not on a single line: X^{i}*Y^{j} breaks the degree"
            )
        if j % s != 0:
            raise NotQuasihomogeneousError(
                f"Y-exponent {j} is not a multiple of s={s}"
            )
    assert d_times_s is not None
    if d_times_s % s != 0:
        raise NotQuasihomogeneousError("degree d is not an integer")
    d = d_times_s // s
    if d <= 0:
        raise NotQuasihomogeneousError("degree d must be a positive integer")
    n = max(j // s for (_, j), _ in F.monomials())
    e = x_multiplicity(F)
    assert e == d - r * n
    return QHPoly(F, r, s, d, e, n)


@dataclass(frozen=True)
class BetaInference:
    matches: tuple[tuple[int, int, int], ...]  # (r, s, d)
    ambiguous: bool  # single monomial: a parametric family of betas


def infer_beta(F: BiPoly) -> BetaInference:
    """All coprime (r, s) with r > s > 0 and integer d > 0 that fit F."""
    if F.is_zero:
        raise NotQuasihomogeneousError("the zero polynomial is excluded")
    support = [key for key, _ in F.monomials()]
    if len(support) == 1:
        return BetaInference((), True)
    (i1, j1), (i2, j2) = support[0], support[1]
    if j1 == j2:
        return BetaInference((), False)
    beta = Fraction(i2 - i1, j1 - j2)
    if beta <= 1:
        return BetaInference((), False)
    r, s = beta.numerator, beta.denominator
    try:
        qh = validate_qh(F, r, s)
    except (NotQuasihomogeneousError, BetaRangeError):
        return BetaInference((), False)
    return BetaInference(((qh.r, qh.s, qh.d),), False)


@lru_cache(maxsize=None)
def _heights_cached(F: BiPoly) -> HeightPair:
    return HeightPair(F.substitute_y(1), F.substitute_y(-1))


def heights(Q: QHPoly) -> HeightPair:
    pair = _heights_cached(Q.poly)
    expected = Q.s * Q.n
    assert pair.f_plus.degree == expected or (Q.n == 0 and pair.f_plus.is_constant)
    assert pair.f_minus.degree == pair.f_plus.degree or (
        pair.f_plus.is_constant and pair.f_minus.is_constant
    )
    return pair


# ---------------------------------------------------------------------------
# Pairing search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PairingOption:
    """One way to pair the height functions through the group action.

    lambda_sign +1 pairs (+) with (+) and (-) with (-); -1 crosses them.
    `plus` pairs F's right height with its partner, `minus` the left one.
    """

    lambda_sign: int
    plus: Pairing1D
    minus: Pairing1D


def _require_same_family(F: QHPoly, G: QHPoly) -> None:
    if (F.r, F.s) != (G.r, G.s):
        raise BetaMismatchError("polynomials have different beta")
    if F.d != G.d:
        raise DegreeMismatchError("polynomials have different degree")


def pairing_search(F: QHPoly, G: QHPoly) -> list[PairingOption]:
    """Enumerate height pairings, straight-sign options first."""
    _require_same_family(F, G)
    hf, hg = heights(F), heights(G)
    options: list[PairingOption] = []
    for lam_sign, g_for_plus, g_for_minus in (
        (1, hg.f_plus, hg.f_minus),
        (-1, hg.f_minus, hg.f_plus),
    ):
        v_plus = classify_pair(hf.f_plus, g_for_plus)
        if not v_plus.equivalent:
            continue
        v_minus = classify_pair(hf.f_minus, g_for_minus)
        if not v_minus.equivalent:
            continue
        for p1 in v_plus.pairings:
            for p2 in v_minus.pairings:
                options.append(PairingOption(lam_sign, p1, p2))
    if options:
        assert F.e == G.e, "pairable heights must share the X-multiplicity"
    return options


# ---------------------------------------------------------------------------
# Verdicts
# ---------------------------------------------------------------------------


class TheoremTag(enum.Enum):
    CXD_CASE = "CxdCase"
    SUFF_A_PARITY = "SuffA_ParityEven_or_sOdd"
    SUFF_B_EQUAL_LAMBDA = "SuffB_EqualLambda"
    SUFF_C_NO_X_FACTOR = "SuffC_NoXFactor"
    COR_NO_CRIT_POINTS = "Cor_NoCritPoints"
    COR_R_ODD_S_EVEN_NO_Y_FACTOR = "Cor_rOdd_sEven_NoYFactor"
    COR_R_ODD_S_EVEN_ONE_CRIT = "Cor_rOdd_sEven_OneCrit"


class NEKind(enum.Enum):
    CXD_SIGN_MISMATCH = "CxdSignMismatch"
    HEIGHTS_NOT_PAIRABLE = "HeightsNotPairable"


class UnknownKind(enum.Enum):
    MIXED_CXD_CASE = "MixedCxdCase"
    NECESSITY_CONDITIONS_UNAVAILABLE = "NecessityConditionsUnavailable"
    SUFFICIENCY_GAP = "SufficiencyGap"


@dataclass(frozen=True)
class Certificate:
    theorem_tag: TheoremTag
    zygothety: zyg.Zygothety
    pairing_trace: dict


@dataclass(frozen=True)
class NEReason:
    kind: NEKind
    necessity: tuple[dict, ...] = ()  # which quoted conditions licensed it
    pairing_failures: tuple[dict, ...] = ()


@dataclass(frozen=True)
class UnknownReason:
    kind: UnknownKind
    detail: str = ""


@dataclass(frozen=True)
class Verdict2D:
    kind: str  # "equivalent" | "not_equivalent" | "unknown"
    certificate: Optional[Certificate] = None
    reason: object = None

    @property
    def is_equivalent(self) -> bool:
        return self.kind == "equivalent"


# ---------------------------------------------------------------------------
# The decision tree
# ---------------------------------------------------------------------------


def _distinct_real_zeros(f: UniPoly) -> int:
    if f.is_constant:
        return 0
    return len(isolate_real_roots(f))


def _necessity_conditions(F: QHPoly, G: QHPoly) -> tuple[dict, ...]:
    """Quoted hypotheses licensing non-equivalence from unpairable heights.

    (a) each height of one polynomial has a real zero and X does not divide
    the other; (b) each height of one polynomial has two distinct real
    zeros.  Both orientations are checked.
    """
    satisfied = []
    for name, P, Q in (("F", F, G), ("G", G, F)):
        hp = heights(P)
        z_plus = _distinct_real_zeros(hp.f_plus)
        z_minus = _distinct_real_zeros(hp.f_minus)
        if min(z_plus, z_minus) >= 1 and Q.e == 0:
            satisfied.append(
                {
                    "condition": "a",
                    "zero_side": name,
                    "zeros": [z_plus, z_minus],
                    "x_free_side": "G" if name == "F" else "F",
                }
            )
        if min(z_plus, z_minus) >= 2:
            satisfied.append({"condition": "b", "zero_side": name, "zeros": [z_plus, z_minus]})
    return tuple(satisfied)


def _pairing_failures(F: QHPoly, G: QHPoly) -> tuple[dict, ...]:
    hf, hg = heights(F), heights(G)
    out = []
    for lam_sign, g_plus, g_minus in (
        (1, hg.f_plus, hg.f_minus),
        (-1, hg.f_minus, hg.f_plus),
    ):
        entry: dict = {"lambda_sign": "+" if lam_sign > 0 else "-"}
        v1 = classify_pair(hf.f_plus, g_plus)
        v2 = classify_pair(hf.f_minus, g_minus)
        entry["plus_side"] = "Equivalent" if v1.equivalent else v1.reason.value
        entry["minus_side"] = "Equivalent" if v2.equivalent else v2.reason.value
        for tag, f, g, v in (
            ("plus_side", hf.f_plus, g_plus, v1),
            ("minus_side", hf.f_minus, g_minus, v2),
        ):
            if not v.equivalent and not f.is_constant and not g.is_constant:
                if f.degree == g.degree:
                    df, dg = critical_data(f), critical_data(g)
                    if df.count == dg.count and df.count >= 2:
                        entry[tag + "_symbols"] = {
                            "left": _symbol_json(df),
                            "right": _symbol_json(dg),
                        }
        out.append(entry)
    return tuple(out)


def _symbol_json(data) -> dict:
    from .jsonio import alg_json

    return {
        "values": [alg_json(v) for v in data.values],
        "mults": list(data.mults),
    }


def _cxd_zygothety(a: Fraction, b: Fraction, d: int) -> zyg.Zygothety:
    ratio = Fraction(a, b)
    mag = nth_root_pos(RealAlg.from_rational(abs(ratio)), d)
    lam = mag if ratio > 0 else -mag
    return zyg.Zygothety(lam, lam, zyg.identity_map(), zyg.identity_map())


def _certify(option: PairingOption, F: QHPoly, G: QHPoly, tag: TheoremTag) -> Verdict2D:
    z = zyg.make_regular(option, F, G)
    assert zyg.is_beta_regular(z, F.r, F.s)
    hf, hg = heights(F), heights(G)
    residual = zyg.action_residual(
        z, F.d, hf.f_plus, hf.f_minus, hg.f_plus, hg.f_minus
    )
    assert residual <= 1e-6, f"action spot-check failed: {residual}"
    trace = {
        "lambda_sign": "+" if option.lambda_sign > 0 else "-",
        "plus_side": _pairing_json(option.plus),
        "minus_side": _pairing_json(option.minus),
        "action_spot_check_residual": residual,
    }
    return Verdict2D("equivalent", certificate=Certificate(tag, z, trace))


def _pairing_json(p: Pairing1D) -> dict:
    from .jsonio import alg_json

    return {
        "orientation": p.orientation.value,
        "c": alg_json(p.c_set.c) if p.c_set.is_unique else "any_positive",
    }


def decide(F: QHPoly, G: QHPoly) -> Verdict2D:
    """Decide R-semialgebraic Lipschitz equivalence of F and G."""
    _require_same_family(F, G)
    d = F.d

    # pure X-power cases are settled from first principles
    cf, cg = is_cxd(F.poly), is_cxd(G.poly)
    if cf is not None and cg is not None:
        a, b = cf[0], cg[0]
        if d % 2 == 0 and sign(a) != sign(b):
            return Verdict2D(
                "not_equivalent",
                reason=NEReason(NEKind.CXD_SIGN_MISMATCH),
            )
        z = _cxd_zygothety(a, b, d)
        assert zyg.is_beta_regular(z, F.r, F.s)
        trace = {"map": "x -> (a/b)^(1/d) * x, y -> y", "a": str(a), "b": str(b)}
        return Verdict2D(
            "equivalent", certificate=Certificate(TheoremTag.CXD_CASE, z, trace)
        )
    if (cf is None) != (cg is None):
        return Verdict2D(
            "unknown",
            reason=UnknownReason(
                UnknownKind.MIXED_CXD_CASE,
                "exactly one polynomial is a pure X-power; the necessity "
                "theorem needs real zeros of the height functions",
            ),
        )

    options = pairing_search(F, G)
    if not options:
        necessity = _necessity_conditions(F, G)
        failures = _pairing_failures(F, G)
        if necessity:
            return Verdict2D(
                "not_equivalent",
                reason=NEReason(NEKind.HEIGHTS_NOT_PAIRABLE, necessity, failures),
            )
        return Verdict2D(
            "unknown",
            reason=UnknownReason(
                UnknownKind.NECESSITY_CONDITIONS_UNAVAILABLE,
                "heights are not pairable but no quoted zero condition applies",
            ),
        )

    r, s = F.r, F.s
    hf, hg = heights(F), heights(G)
    all_heights = (hf.f_plus, hf.f_minus, hg.f_plus, hg.f_minus)
    crit_counts = [critical_data(h).count for h in all_heights]

    if min(crit_counts) == 0:
        return _certify(options[0], F, G, TheoremTag.COR_NO_CRIT_POINTS)
    if r % 2 == 0 or s % 2 == 1:
        return _certify(options[0], F, G, TheoremTag.SUFF_A_PARITY)
    # r odd, s even from here on
    if F.e == 0 and G.e == 0:
        return _certify(options[0], F, G, TheoremTag.SUFF_C_NO_X_FACTOR)
    if not y_divides(F.poly) and not y_divides(G.poly):
        # scales are forced equal; every option must carry matching constants
        for option in options:
            if option.plus.c_set.compatible_common_value(option.minus.c_set) is not None:
                return _certify(
                    option, F, G, TheoremTag.COR_R_ODD_S_EVEN_NO_Y_FACTOR
                )
        raise AssertionError(
            "no Y factor forces equal scales, yet no option admits a common constant"
        )
    if min(crit_counts) == 1:
        for option in options:
            if option.plus.c_set.compatible_common_value(option.minus.c_set) is not None:
                return _certify(option, F, G, TheoremTag.COR_R_ODD_S_EVEN_ONE_CRIT)
        raise AssertionError(
            "a single-critical-point height has value zero, so a side must be free"
        )
    for option in options:
        if option.plus.c_set.compatible_common_value(option.minus.c_set) is not None:
            return _certify(option, F, G, TheoremTag.SUFF_B_EQUAL_LAMBDA)
    return Verdict2D(
        "unknown",
        reason=UnknownReason(
            UnknownKind.SUFFICIENCY_GAP,
            "r odd, s even, X and Y divide the polynomials, every height has "
            "two or more critical points, and the pairings force distinct "
            "constants",
        ),
    )
