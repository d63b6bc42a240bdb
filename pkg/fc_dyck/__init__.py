"""
fc-dyck: fully commutative elements of type A, Dyck paths and homogeneous KLR modules
"""
__version__ = "1.0.0"

from .bijection import phi, psi
from .canonical import CanonicalForm, Segment, canonical_form_of, enumerate_fc
from .coxeter import Word, is_fully_commutative, is_reduced
from .dimension import DimensionResult, dimension
from .dyck import DyckPath, count_T, enumerate_paths
from .homogeneity import Component, component_of, weight_graph_components
from .klr_verify import Quiver, build_module, verify_relations, verify_single_degree

__all__ = [
    "CanonicalForm",
    "Component",
    "DimensionResult",
    "DyckPath",
    "Quiver",
    "Segment",
    "Word",
    "build_module",
    "canonical_form_of",
    "component_of",
    "count_T",
    "dimension",
    "enumerate_fc",
    "enumerate_paths",
    "is_fully_commutative",
    "is_reduced",
    "phi",
    "psi",
    "verify_relations",
    "verify_single_degree",
    "weight_graph_components",
]
