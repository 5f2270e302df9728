import random
from fractions import Fraction as F

import pytest

from qhlip.polyalg import BiPoly, UniPoly
from qhlip.qhdecide import (
    BetaMismatchError,
    BetaRangeError,
    DegreeMismatchError,
    NEKind,
    NotQuasihomogeneousError,
    TheoremTag,
    UnknownKind,
    decide,
    heights,
    infer_beta,
    pairing_search,
    validate_qh,
)
from qhlip.zygothety import is_beta_regular

from helpers import rand_qhpoly


def hp(lam) -> "QHPoly":
    """Continuous-moduli family member X^6 - 3*lam*X^4*Y + Y^3 with beta = 2."""
    return validate_qh(BiPoly({(6, 0): 1, (4, 1): -3 * F(lam), (0, 3): 1}), 2, 1)


class TestValidate:
    def test_hp_member(self):
        q = hp(1)
        assert (q.d, q.e, q.n) == (6, 0, 3)

    def test_xy(self):
        q = validate_qh(BiPoly({(1, 1): 1}), 2, 1)
        assert (q.d, q.e, q.n) == (3, 1, 1)

    def test_parabola_like(self):
        q = validate_qh(BiPoly({(2, 0): 1, (0, 1): 1}), 2, 1)
        assert (q.d, q.e, q.n) == (2, 0, 1)

    def test_support_violation(self):
        with pytest.raises(NotQuasihomogeneousError):
            validate_qh(BiPoly({(2, 0): 1, (1, 1): 1}), 2, 1)

    def test_beta_range(self):
        with pytest.raises(BetaRangeError):
            validate_qh(BiPoly({(1, 1): 1}), 1, 2)
        with pytest.raises(BetaRangeError):
            validate_qh(BiPoly({(1, 1): 1}), 4, 2)

    def test_zero_rejected(self):
        with pytest.raises(NotQuasihomogeneousError):
            validate_qh(BiPoly(), 2, 1)


class TestInferBeta:
    def test_hp(self):
        out = infer_beta(hp(1).poly)
        assert out.matches == ((2, 1, 6),)
        assert not out.ambiguous

    def test_two_monomials(self):
        out = infer_beta(BiPoly({(6, 0): 1, (4, 1): -3}))
        assert out.matches == ((2, 1, 6),)

    def test_monomial_is_ambiguous(self):
        out = infer_beta(BiPoly({(3, 0): 1}))
        assert out.ambiguous
        assert out.matches == ()

    def test_no_valid_beta(self):
        out = infer_beta(BiPoly({(2, 0): 1, (0, 2): 1}))  # beta would be 1
        assert not out.ambiguous
        assert out.matches == ()


class TestHeights:
    def test_hp(self):
        h = heights(hp(1))
        assert h.f_plus == UniPoly([1, -3, 0, 1])
        assert h.f_minus == UniPoly([1, -3, 0, 1])

    def test_xy(self):
        h = heights(validate_qh(BiPoly({(1, 1): 1}), 2, 1))
        assert h.f_plus == UniPoly([0, 1])
        assert h.f_minus == UniPoly([0, -1])

    def test_negative_family_member(self):
        h = heights(hp(-1))
        assert h.f_plus == UniPoly([1, 3, 0, 1])


class TestPairingSearch:
    def test_negative_members_pair(self):
        opts = pairing_search(hp(-1), hp(-2))
        assert opts
        assert any(o.lambda_sign == 1 for o in opts)
        assert all(
            not o.plus.c_set.is_unique and not o.minus.c_set.is_unique for o in opts
        )

    def test_moduli_pair_is_empty(self):
        assert pairing_search(hp(1), hp(4)) == []

    def test_identity_pairing_exists(self):
        assert pairing_search(hp(2), hp(2))

    def test_beta_mismatch_rejected(self):
        other = validate_qh(BiPoly({(6, 0): 1, (0, 2): 1}), 3, 1)
        with pytest.raises((BetaMismatchError,)):
            pairing_search(hp(1), other)

    def test_degree_mismatch_rejected(self):
        small = validate_qh(BiPoly({(2, 0): 1, (0, 1): 1}), 2, 1)
        with pytest.raises(DegreeMismatchError):
            pairing_search(hp(1), small)


class TestDecide:
    def test_hp_distinct_positive_not_equivalent(self):
        v = decide(hp(1), hp(4))
        assert v.kind == "not_equivalent"
        assert v.reason.kind is NEKind.HEIGHTS_NOT_PAIRABLE
        conditions = {entry["condition"] for entry in v.reason.necessity}
        assert "a" in conditions
        failures = v.reason.pairing_failures
        assert any(
            entry.get("plus_side") == "SymbolNotSimilar" for entry in failures
        )

    def test_hp_negative_equivalent(self):
        v = decide(hp(-1), hp(-2))
        assert v.kind == "equivalent"
        assert v.certificate.theorem_tag is TheoremTag.COR_NO_CRIT_POINTS
        assert is_beta_regular(v.certificate.zygothety, 2, 1)

    def test_pure_power_sign_mismatch(self):
        a = validate_qh(BiPoly({(4, 0): 2}), 2, 1)
        b = validate_qh(BiPoly({(4, 0): -3}), 2, 1)
        v = decide(a, b)
        assert v.kind == "not_equivalent"
        assert v.reason.kind is NEKind.CXD_SIGN_MISMATCH

    def test_pure_power_odd_degree(self):
        a = validate_qh(BiPoly({(3, 0): 2}), 2, 1)
        b = validate_qh(BiPoly({(3, 0): -3}), 2, 1)
        v = decide(a, b)
        assert v.kind == "equivalent"
        assert v.certificate.theorem_tag is TheoremTag.CXD_CASE

    def test_mixed_pure_power_is_unknown(self):
        a = validate_qh(BiPoly({(4, 0): 2}), 2, 1)
        b = validate_qh(BiPoly({(4, 0): 1, (2, 1): 1}), 2, 1)
        v = decide(a, b)
        assert v.kind == "unknown"
        assert v.reason.kind is UnknownKind.MIXED_CXD_CASE

    def test_reflexive_on_random(self):
        rng = random.Random(300)
        for _ in range(12):
            q = rand_qhpoly(rng)
            v = decide(q, q)
            assert v.kind == "equivalent", (q, v.reason)

    def test_symmetric_kind(self):
        rng = random.Random(301)
        pairs = [(hp(1), hp(4)), (hp(-1), hp(-3)), (hp(F(1, 4)), hp(1))]
        for _ in range(6):
            a = rand_qhpoly(rng)
            b_poly = a.poly.scale_vars(
                F(rng.randint(1, 3)), F(rng.choice([-2, -1, 1, 2]))
            )
            pairs.append((a, validate_qh(b_poly, a.r, a.s)))
        for a, b in pairs:
            assert decide(a, b).kind == decide(b, a).kind

    def test_oracle_soundness_sample(self):
        rng = random.Random(302)
        for _ in range(15):
            q = rand_qhpoly(rng)
            g_poly = q.poly.scale_vars(
                F(rng.randint(1, 4), rng.randint(1, 3)),
                F(rng.choice([x for x in range(-4, 5) if x != 0]), rng.randint(1, 2)),
            )
            g = validate_qh(g_poly, q.r, q.s)
            v = decide(q, g)
            assert v.kind != "not_equivalent"

    def test_pairable_implies_equal_x_multiplicity(self):
        rng = random.Random(303)
        for _ in range(10):
            a, b = rand_qhpoly(rng), rand_qhpoly(rng)
            if (a.r, a.s, a.d) != (b.r, b.s, b.d):
                continue
            if pairing_search(a, b):
                assert a.e == b.e

    def test_suffc_tag_for_x_free_r_odd_s_even(self):
        # beta = 3/2, X does not divide either polynomial
        a = validate_qh(BiPoly({(3, 2): 1, (0, 4): 1, (6, 0): 1}), 3, 2)
        b = validate_qh(BiPoly({(3, 2): 2, (0, 4): 2, (6, 0): 2}), 3, 2)
        v = decide(a, b)
        assert v.kind == "equivalent"
        assert v.certificate.theorem_tag in (
            TheoremTag.SUFF_C_NO_X_FACTOR,
            TheoremTag.COR_NO_CRIT_POINTS,
        )
