"""Executable bi-Lipschitz witnesses and their numeric verification.

A regular zygothety determines a plane map fiberwise: on the half-plane
x > 0 the fiber parameter t = y / |x|^beta is pushed through the first map,
on x < 0 through the second, and the vertical axis moves by the common
weighted slope.  The conjugacy G o Phi = F is an exact theorem; the harness
here samples it in floating point and reports residuals, empirical
Lipschitz ratios, and the asymptotic shape of the one-dimensional maps.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .qhdecide import QHPoly
from .realalg import RealAlg
from .zygothety import Affine, PLMap, Zygothety, is_beta_regular


@dataclass(frozen=True)
class GridSpec:
    """Sampling grid for conjugacy checks: log-spaced in |x|, linear in t."""

    x_count: int = 50
    t_count: int = 100
    delta: float = 1.0
    t_window: float = 2.0
    x_min: float = 1e-6

    @property
    def total_samples(self) -> int:
        return 2 * self.x_count * self.t_count + self.t_count


@dataclass
class VerificationReport:
    max_rel_residual: Optional[float] = None
    tol: Optional[float] = None
    conjugacy_pass: Optional[bool] = None
    lipschitz_ratio_min: Optional[float] = None
    lipschitz_ratio_max: Optional[float] = None
    asymptotic: Optional[dict] = None
    samples: int = 0
    delta: Optional[float] = None


class InverseBetaTransform:
    """The plane map built fiberwise from a beta-regular zygothety."""

    __slots__ = ("z", "r", "s", "L1", "L2", "_f")

    def __init__(self, z: Zygothety, r: int, s: int):
        if not is_beta_regular(z, r, s):
            raise ValueError("zygothety is not beta-regular")
        self.z = z
        self.r = r
        self.s = s
        self.L1: RealAlg = z.phi1.limit_slope()
        self.L2: RealAlg = z.phi2.limit_slope()
        beta = r / s
        lam1 = z.lam1.to_float()
        lam2 = z.lam2.to_float()
        # |lam1|^beta * L1 == |lam2|^beta * L2; float both sides and average
        # out the last-bit disagreement for the axis slope
        v1 = abs(lam1) ** beta * self.L1.to_float()
        v2 = abs(lam2) ** beta * self.L2.to_float()
        self._f = (beta, lam1, lam2, 0.5 * (v1 + v2))

    @property
    def beta(self) -> float:
        return self._f[0]

    def __call__(self, point: tuple[float, float]) -> tuple[float, float]:
        return self.eval(point)

    def eval(self, point: tuple[float, float]) -> tuple[float, float]:
        x, y = point
        beta, lam1, lam2, axis_slope = self._f
        if x == 0.0:
            return (0.0, axis_slope * y)
        if x > 0.0:
            lam, phi = lam1, self.z.phi1
        else:
            lam, phi = lam2, self.z.phi2
        ax_b = abs(x) ** beta
        scale = abs(lam) ** beta
        if isinstance(phi, Affine):
            # phi(y/|x|^beta) * |x|^beta collapses exactly
            y_out = scale * (float(phi.a) * y + float(phi.b) * ax_b)
        else:
            t = y / ax_b
            y_out = scale * phi.eval_float(t) * ax_b
        return (lam * x, y_out)


def eval_transform(T: InverseBetaTransform, point: tuple[float, float]) -> tuple[float, float]:
    return T.eval(point)


def _log_spaced(lo: float, hi: float, count: int) -> list[float]:
    import math

    if count == 1:
        return [hi]
    ratio = math.log(hi / lo)
    return [lo * math.exp(ratio * k / (count - 1)) for k in range(count)]


def _linear(lo: float, hi: float, count: int) -> list[float]:
    if count == 1:
        return [lo]
    step = (hi - lo) / (count - 1)
    return [lo + step * k for k in range(count)]


def verify_conjugacy(
    F: QHPoly,
    G: QHPoly,
    T: InverseBetaTransform,
    grid: GridSpec = GridSpec(),
    tol: float = 1e-8,
) -> VerificationReport:
    """Sample |G(Phi(p)) - F(p)| / max(1, |F(p)|) over the fiber grid."""
    beta = T.beta
    fp = F.poly
    gp = G.poly
    xs = _log_spaced(grid.x_min, grid.delta, grid.x_count)
    ts = _linear(-grid.t_window, grid.t_window, grid.t_count)
    worst = 0.0
    count = 0
    for sgn in (1.0, -1.0):
        phi = T.z.phi1 if sgn > 0 else T.z.phi2
        phi_vals = None
        if not isinstance(phi, Affine):
            phi_vals = [phi.eval_float(t) for t in ts]
        for xi in xs:
            x = sgn * xi
            ax_b = xi**beta
            for k, t in enumerate(ts):
                y = t * ax_b
                px, py = T.eval((x, y)) if phi_vals is None else _eval_cached(
                    T, x, ax_b, phi_vals[k]
                )
                fv = fp.eval_float(x, y)
                gv = gp.eval_float(px, py)
                err = abs(gv - fv) / max(1.0, abs(fv))
                worst = max(worst, err)
                count += 1
    for y in ts:
        px, py = T.eval((0.0, y))
        fv = fp.eval_float(0.0, y)
        gv = gp.eval_float(px, py)
        worst = max(worst, abs(gv - fv) / max(1.0, abs(fv)))
        count += 1
    return VerificationReport(
        max_rel_residual=worst,
        tol=tol,
        conjugacy_pass=worst <= tol,
        samples=count,
        delta=grid.delta,
    )


def _eval_cached(
    T: InverseBetaTransform, x: float, ax_b: float, phi_t: float
) -> tuple[float, float]:
    beta, lam1, lam2, _ = T._f
    lam = lam1 if x > 0 else lam2
    return (lam * x, abs(lam) ** beta * phi_t * ax_b)


def verify_lipschitz(
    T: InverseBetaTransform,
    samples: int = 2000,
    delta: float = 1.0,
    t_window: float = 2.0,
    seed: int = 20240901,
) -> tuple[float, float]:
    """Empirical bi-Lipschitz ratios over random point pairs in the strip."""
    if delta <= 0:
        raise ValueError("delta must be positive")
    rng = random.Random(seed)
    beta = T.beta

    def sample_point() -> tuple[float, float]:
        x = 0.0
        while abs(x) < 1e-9:
            x = rng.uniform(-delta, delta)
        t = rng.uniform(-t_window, t_window)
        return (x, t * abs(x) ** beta)

    ratio_min = float("inf")
    ratio_max = 0.0
    for _ in range(samples):
        p = sample_point()
        q = sample_point()
        dx, dy = p[0] - q[0], p[1] - q[1]
        dist = (dx * dx + dy * dy) ** 0.5
        if dist < 1e-12:
            continue
        ip = T.eval(p)
        iq = T.eval(q)
        dix, diy = ip[0] - iq[0], ip[1] - iq[1]
        idist = (dix * dix + diy * diy) ** 0.5
        ratio = idist / dist
        ratio_min = min(ratio_min, ratio)
        ratio_max = max(ratio_max, ratio)
    return (ratio_min, ratio_max)


_SHELL_INNER = 1e4
_SHELL_OUTER = 1e6
_SHELL_POINTS = 25


def verify_asymptotic(m: PLMap) -> tuple[float, float, float]:
    """Estimate the straight-line shape of a map at infinity.

    Returns (lambda_est, k_est, alpha_tail_max): the exact limit slope
    rounded to a double, the offset estimated at |t| = 1e6, and the largest
    deviation from the line over |t| in [1e4, 1e6].
    """
    lam = m.limit_slope().to_float()
    k_est = 0.5 * (
        (m.eval_float(_SHELL_OUTER) - lam * _SHELL_OUTER)
        + (m.eval_float(-_SHELL_OUTER) + lam * _SHELL_OUTER)
    )
    tail = 0.0
    for t in _shell_points(_SHELL_INNER, _SHELL_OUTER):
        tail = max(tail, abs(m.eval_float(t) - lam * t - k_est))
    return (lam, k_est, tail)


def asymptotic_shell_decay(m: PLMap) -> tuple[float, float]:
    """Max |phi(t) - lambda t - k| on the |t|=1e4 and |t|=1e6 shells."""
    lam = m.limit_slope().to_float()
    k_est = 0.5 * (
        (m.eval_float(_SHELL_OUTER) - lam * _SHELL_OUTER)
        + (m.eval_float(-_SHELL_OUTER) + lam * _SHELL_OUTER)
    )

    def shell_max(radius: float) -> float:
        worst = 0.0
        for u in (radius, 1.25 * radius, 1.5 * radius):
            for t in (u, -u):
                worst = max(worst, abs(m.eval_float(t) - lam * t - k_est))
        return worst

    return (shell_max(_SHELL_INNER), shell_max(_SHELL_OUTER))


def _shell_points(inner: float, outer: float) -> list[float]:
    pts = _log_spaced(inner, outer, _SHELL_POINTS)
    return pts + [-t for t in pts]


def transform_from_certificate(cert, r: int, s: int) -> InverseBetaTransform:
    return InverseBetaTransform(cert.zygothety, r, s)
