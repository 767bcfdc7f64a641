"""Isomorphism classes of Schubert varieties in cominuscule flag varieties."""
from .chow import build_mult_table, chevalley_lower, reconstruct_labeled_poset
from .decide import SchubertSpec, census, decide_isomorphic
from .labeled import LabeledPoset, abstract_poset, find_isomorphism
from .minimal import classify_marked, minimal_embedding, restricted_diagram
from .poset import (
    CominPoset,
    Ideal,
    build_comin_poset,
    delta,
    dynkin_core,
    enumerate_ideals,
    principal_ideal,
    space,
    support,
)
from .roots import DynkinType, Length, RootSystem, build_root_system, inner_product, length_class, reflect
from .words import Word, act, inversion_set, reduced_word

__version__ = "0.1.0"
