"""JSON views of verdicts, certificates and reports.

All dictionaries are built in a fixed key order and rationals are rendered
as exact strings, so serialized output is byte-deterministic for fixed
inputs.
"""

from __future__ import annotations

from fractions import Fraction

from .lipclass import Verdict1D
from .qhdecide import Certificate, NEReason, UnknownReason, Verdict2D
from .realalg import RealAlg
from .witness import VerificationReport
from .zygothety import Zygothety


def frac_str(x: Fraction) -> str:
    return str(x)


def alg_json(a: RealAlg) -> dict:
    if a.is_rational:
        return {"rational": frac_str(a.lo), "approx": a.to_float()}
    return {
        "defpoly": [frac_str(c) for c in a.defpoly.coeffs],
        "interval": [frac_str(a.lo), frac_str(a.hi)],
        "approx": a.to_float(),
    }


def zygothety_json(z: Zygothety) -> dict:
    return {
        "lambda1": alg_json(z.lam1),
        "lambda2": alg_json(z.lam2),
        "phi1": z.phi1.json_dict(),
        "phi2": z.phi2.json_dict(),
    }


def certificate_json(cert: Certificate) -> dict:
    return {
        "theorem": cert.theorem_tag.value,
        "zygothety": zygothety_json(cert.zygothety),
        "pairing_trace": cert.pairing_trace,
    }


def verdict1_json(v: Verdict1D) -> dict:
    out: dict = {"verdict": "Equivalent" if v.equivalent else "NotEquivalent"}
    if v.equivalent:
        out["pairings"] = [
            {
                "orientation": p.orientation.value,
                "c": alg_json(p.c_set.c) if p.c_set.is_unique else "any_positive",
            }
            for p in v.pairings
        ]
    else:
        out["reason"] = v.reason.value
    return out


def verdict2_json(v: Verdict2D) -> dict:
    kind_names = {
        "equivalent": "Equivalent",
        "not_equivalent": "NotEquivalent",
        "unknown": "Unknown",
    }
    out: dict = {"verdict": kind_names[v.kind]}
    if v.certificate is not None:
        out["certificate"] = certificate_json(v.certificate)
    if isinstance(v.reason, NEReason):
        out["reason"] = {
            "kind": v.reason.kind.value,
            "necessity_conditions": list(v.reason.necessity),
            "pairing_failures": list(v.reason.pairing_failures),
        }
    elif isinstance(v.reason, UnknownReason):
        out["reason"] = {"kind": v.reason.kind.value, "detail": v.reason.detail}
    return out


def report_json(rep: VerificationReport) -> dict:
    out: dict = {}
    if rep.max_rel_residual is not None:
        out["max_rel_residual"] = rep.max_rel_residual
        out["tol"] = rep.tol
        out["conjugacy_pass"] = rep.conjugacy_pass
    if rep.lipschitz_ratio_min is not None:
        out["lipschitz_ratio_min"] = rep.lipschitz_ratio_min
        out["lipschitz_ratio_max"] = rep.lipschitz_ratio_max
    if rep.asymptotic is not None:
        out["asymptotic"] = rep.asymptotic
    out["samples"] = rep.samples
    if rep.delta is not None:
        out["delta"] = rep.delta
    return out
