"""Exact local data of parahoric group schemes and invariants of torsor moduli.

All rational values cross the boundary as `fractions.Fraction`; points are
sequences of Fractions, integers, or "p/q" strings. Root coordinates are in
the simple-root basis (Bourbaki numbering), apartment points in the
fundamental-coweight basis.
"""

from parahoric._core import (
    RootSystem,
    alcove_walk,
    centralizer,
    classify_subsystem,
    e_g,
    eval_affine,
    facet,
    facets,
    fuchsian_check,
    hecke_fiber_dimension,
    moduli_dimension,
    parabolic_set,
    parahoric_exponents,
    parahoric_exponents_at,
    reductive_quotient,
    rs_codim_bound,
    torsion_order,
    unstable_codim_bound,
    vanishing_set,
    verify,
)

__all__ = [
    "RootSystem",
    "alcove_walk",
    "centralizer",
    "classify_subsystem",
    "e_g",
    "eval_affine",
    "facet",
    "facets",
    "fuchsian_check",
    "hecke_fiber_dimension",
    "moduli_dimension",
    "parabolic_set",
    "parahoric_exponents",
    "parahoric_exponents_at",
    "reductive_quotient",
    "rs_codim_bound",
    "torsion_order",
    "unstable_codim_bound",
    "vanishing_set",
    "verify",
]

__version__ = "0.1.0"
