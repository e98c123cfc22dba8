"""Finite Krasner hyperfields: verification, enumeration and extensions."""

from .constructors import (
    FiniteFieldSpec,
    field_hyperfield,
    field_spec,
    krasner,
    named,
    quotient_hyperfield,
    sign_hyperfield,
    weak_hyperfield,
)
from .core import AxiomReport, FiniteMonoid, HyperStructure, StructureError, is_hyperfield, parity_check, verify
from .enumeration import EnumerationResult, enumerate_hyperfields, naive_enumerate, negation_representatives
from .groups import AbelianGroup, abelian_groups, automorphisms
from .kernels import BACKEND
from .morphisms import MorphismMap, canonical_form, extension_digraph, find_homs, is_isomorphic

__version__ = "0.1.0"
