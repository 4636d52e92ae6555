"""Exact combinatorics of twisted Iwahori-Weyl groups."""

from __future__ import annotations

from .admissible import (
    AdmissibleSet,
    StrataPoset,
    admissible_set,
    admissible_set_J,
    curve_chain,
    frob_orbit_step,
    kr_poset_very_special,
    stembridge_step,
)
from .data import (
    gl,
    gsp4,
    inner_twist,
    pgl,
    quotient_datum,
    restriction_of_scalars,
    sl,
    sp4,
    standard_datum,
    torus,
    unitary_twist,
)
from .errors import IwahoriError
from .frobenius import FrobeniusTwist, apply_sigma, kottwitz_Gamma, kottwitz_I, mu_diamond, mu_natural, split_twist
from .rootsystem import (
    AffineWeylDatum,
    dominance_leq,
    dominant_rep,
    integral_dominance_leq,
    length_translation,
    two_rho,
)
from .sigma import BPoint, b_of_g_mu, is_sigma_straight, mu_ordinary, newton_point
from .weyl import (
    ExtendedAffineElement,
    ParahoricType,
    bruhat_leq,
    double_coset_rep,
    enumerate_up_to_length,
    multiply,
    omega_component,
    simple_reflections,
    translation,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "admissible_set",
    "admissible_set_J",
    "AdmissibleSet",
    "AffineWeylDatum",
    "annotations",
    "apply_sigma",
    "b_of_g_mu",
    "BPoint",
    "bruhat_leq",
    "curve_chain",
    "dominance_leq",
    "dominant_rep",
    "double_coset_rep",
    "enumerate_up_to_length",
    "ExtendedAffineElement",
    "frob_orbit_step",
    "FrobeniusTwist",
    "gl",
    "gsp4",
    "inner_twist",
    "integral_dominance_leq",
    "is_sigma_straight",
    "IwahoriError",
    "kottwitz_Gamma",
    "kottwitz_I",
    "kr_poset_very_special",
    "length_translation",
    "mu_diamond",
    "mu_natural",
    "mu_ordinary",
    "multiply",
    "newton_point",
    "omega_component",
    "ParahoricType",
    "pgl",
    "quotient_datum",
    "restriction_of_scalars",
    "simple_reflections",
    "sl",
    "sp4",
    "split_twist",
    "standard_datum",
    "stembridge_step",
    "StrataPoset",
    "torus",
    "translation",
    "two_rho",
    "unitary_twist",
]
