"""Exact invariants of numerical semigroup rings k[[t^H]].

The canonical ideal, its degrees (cdeg, bideg, tdeg), canonical index,
Hilbert coefficient e1, roots, the ring m:m, and Herzog data for
3-generated semigroups, all computed on value sets.
"""
from .degrees import (
    bideg,
    canonical_ideal,
    canonical_index,
    cdeg,
    classify,
    degree_report,
    e1_and_s0,
    is_canonical,
    tdeg,
)
from .endo import endo_checks, endo_semigroup, idealization_degrees, product_degrees, tcdeg_identity
from .enumerate import count_by_genus, enumerate_semigroups
from .errors import NsringError
from .herzog import closed_form_degrees, herzog_data
from .ideal import RelativeIdeal, length_between, maximal_ideal, unit_ideal
from .roots import RootWitness, is_root, rho_bound_from_root, rootset
from .semigroup import NumericalSemigroup, semigroup

__version__ = "0.1.0"

__all__ = [
    "NumericalSemigroup", "semigroup", "RelativeIdeal", "unit_ideal", "maximal_ideal",
    "length_between", "canonical_ideal", "cdeg", "bideg", "tdeg", "canonical_index",
    "e1_and_s0", "classify", "is_canonical", "degree_report", "endo_semigroup",
    "tcdeg_identity", "endo_checks", "idealization_degrees", "product_degrees",
    "herzog_data", "closed_form_degrees", "rootset", "is_root", "rho_bound_from_root",
    "RootWitness", "enumerate_semigroups", "count_by_genus", "NsringError",
]
