"""Shared generators and independent oracles for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from qhlip.polyalg import BiPoly, UniPoly, cauchy_root_bound, square_free_part
from qhlip.qhdecide import QHPoly, validate_qh


def rand_unipoly(rng: random.Random, max_deg: int = 6, coeff_bound: int = 5) -> UniPoly:
    """Random nonconstant polynomial with integer coefficients."""
    d = rng.randint(1, max_deg)
    cs = [Fraction(rng.randint(-coeff_bound, coeff_bound)) for _ in range(d)]
    lc = Fraction(rng.choice([x for x in range(-coeff_bound, coeff_bound + 1) if x != 0]))
    return UniPoly(cs + [lc])


def rand_nonzero_rational(rng: random.Random, num_bound: int = 4, den_bound: int = 4) -> Fraction:
    n = rng.choice([x for x in range(-num_bound, num_bound + 1) if x != 0])
    return Fraction(n, rng.randint(1, den_bound))


def affine_conjugate(f: UniPoly, a: Fraction, b: Fraction, c: Fraction) -> UniPoly:
    """g(u) = c * f((u - b) / a); then g o phi = c f with phi(t) = a t + b."""
    inner = UniPoly([-b / a, Fraction(1) / a])
    return f.compose(inner).scale(c)


def rand_qhpoly(rng: random.Random, betas=((3, 2), (2, 1), (5, 2), (3, 1)), max_d: int = 12) -> QHPoly:
    """Random valid quasihomogeneous polynomial with n >= 1."""
    while True:
        r, s = rng.choice(list(betas))
        n = rng.randint(1, 3)
        e = rng.randint(0, 2)
        d = r * n + e
        if d > max_d:
            continue
        coeffs = {k: rng.randint(-3, 3) for k in range(n)}
        coeffs[n] = rng.choice([x for x in range(-3, 4) if x != 0])
        terms = {}
        for k, c in coeffs.items():
            if c:
                terms[(d - r * k, s * k)] = c
        return validate_qh(BiPoly(terms), r, s)


def brute_force_real_root_count(p: UniPoly) -> int:
    """Distinct real roots of p by an exact sign scan over a refining grid.

    Scans sign changes of the square-free part on a uniform rational grid
    inside the Cauchy bound, doubling the resolution until two consecutive
    passes agree.  Grid evaluation is exact (integers after clearing
    denominators), and grid points that hit roots exactly are counted once.
    """
    q = square_free_part(p).primitive()
    if q.degree == 0:
        return 0
    bound = cauchy_root_bound(q)
    num_b, den_b = bound.numerator, bound.denominator
    coeffs = [c.numerator for c in q.coeffs]

    def scan(cells: int) -> int:
        # grid point j: x_j = (-num_b + 2*num_b*j/cells) / den_b
        count = 0
        prev_sign = 0
        for j in range(cells + 1):
            num = -num_b * cells + 2 * num_b * j
            den = den_b * cells
            acc = 0
            mp = 1
            for c in reversed(coeffs):
                acc = acc * num + c * mp
                mp *= den
            s = (acc > 0) - (acc < 0)
            if s == 0:
                count += 1
                prev_sign = 0
                continue
            if prev_sign != 0 and s != prev_sign:
                count += 1
            prev_sign = s
        return count

    cells = 512
    last = scan(cells)
    while True:
        cells *= 2
        cur = scan(cells)
        if cur == last:
            return cur
        last = cur
