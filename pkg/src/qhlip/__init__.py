"""Exact Lipschitz classification of polynomial functions.

Decides Lipschitz equivalence of univariate real polynomial functions and
R-semialgebraic Lipschitz equivalence of quasihomogeneous polynomials in two
variables, with certificates and executable bi-Lipschitz witness maps.
"""

from .lipclass import (
    CritData,
    CSet,
    MultSymbol,
    Orientation,
    Pairing1D,
    Reason1D,
    Verdict1D,
    classify_pair,
    critical_data,
    similar,
    symbol_of,
)
from .polyalg import BiPoly, Rat, UniPoly, is_cxd, rat, resultant, x_multiplicity, y_divides
from .qhdecide import (
    BetaInference,
    Certificate,
    HeightPair,
    PairingOption,
    QHPoly,
    TheoremTag,
    Verdict2D,
    decide,
    heights,
    infer_beta,
    pairing_search,
    validate_qh,
)
from .realalg import RealAlg, compare, eval_alg, isolate_real_roots, nth_root_pos, sign_at
from .witness import (
    GridSpec,
    InverseBetaTransform,
    VerificationReport,
    eval_transform,
    verify_asymptotic,
    verify_conjugacy,
    verify_lipschitz,
)
from .zygothety import (
    Affine,
    BranchMap,
    Compose,
    Neg,
    NegConj,
    PLMap,
    Zygothety,
    compose,
    identity,
    inverse,
    is_beta_regular,
    limit_slope,
    make_regular,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
