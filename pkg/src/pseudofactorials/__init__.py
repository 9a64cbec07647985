"""Exact and numerical computations around the pseudo-factorial numbers

    alpha_0 = 1,   alpha_{n+1} = (-1)^(n+1) sum_k C(n, k) alpha_k alpha_{n-k}.

Submodules: ``algebra`` (rationals, polynomials, determinants), ``series``
(truncated power series), ``pseudofact`` (the sequence and its EGF identities),
``cf_engine`` (J-fractions and Hankel determinants), ``orthopoly``,
``congruence``, ``numeric_elliptic`` and the ``pf`` command in ``cli``.
"""

from .algebra import Poly, bareiss_det
from .cf_engine import (
    JFraction,
    closed_form_cf_coeffs,
    convergents,
    hankel,
    hankel_closed_form,
    jfraction_from_ogf,
    jfraction_from_sr,
    pseudofactorial_jfraction,
    sr_decompose,
)
from .congruence import alpha_mod, detect_period, figure3_table, modular_convergent
from .orthopoly import q_family, verify_theorem5
from .pseudofact import alpha_seq, check_identities, egf_f, verify_addition_formula
from .series import QQ, QQz, TruncSeries, Zmod

__version__ = "0.1.0"

__all__ = [
    "JFraction",
    "Poly",
    "QQ",
    "QQz",
    "TruncSeries",
    "Zmod",
    "alpha_mod",
    "alpha_seq",
    "bareiss_det",
    "check_identities",
    "closed_form_cf_coeffs",
    "convergents",
    "detect_period",
    "egf_f",
    "figure3_table",
    "hankel",
    "hankel_closed_form",
    "jfraction_from_ogf",
    "jfraction_from_sr",
    "modular_convergent",
    "pseudofactorial_jfraction",
    "q_family",
    "sr_decompose",
    "verify_addition_formula",
    "verify_theorem5",
]
