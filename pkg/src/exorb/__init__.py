"""Exact Chevalley-basis Lie algebras and nilpotent orbit analysis."""

from .roots import (
    TypeRank,
    Root,
    RootSystem,
    build_root_system,
    structure_constant,
    dominant_weyl_representative,
)
from .linalg import RatMatrix, rref, rank, kernel, solve, intersect, member
from .algebra import (
    LieAlgebra,
    Element,
    Subspace,
    build_lie_algebra,
    bracket,
    ad_matrix,
    centralizer,
    derived_subalgebra,
    subalgebra_closure,
    quotient_with_action,
)
from .orbits import (
    WeightedDynkinDiagram,
    Characteristic,
    Sl2Triple,
    Grading,
    NilpotentOrbit,
    characteristic_element,
    grading_from_h,
    dynkin_test,
    find_representative,
    complete_triple,
    enumerate_orbits,
    orbit_dimension,
)
from .reach import OrbitAnalysis, analyze, reachable_table, rigid_discrepancy_report
from .refdata import OrbitRecord, ExceptionRecord, load_tables, lookup, exceptions

__version__ = "0.1.0"

__all__ = [
    "TypeRank",
    "Root",
    "RootSystem",
    "build_root_system",
    "structure_constant",
    "dominant_weyl_representative",
    "RatMatrix",
    "rref",
    "rank",
    "kernel",
    "solve",
    "intersect",
    "member",
    "LieAlgebra",
    "Element",
    "Subspace",
    "build_lie_algebra",
    "bracket",
    "ad_matrix",
    "centralizer",
    "derived_subalgebra",
    "subalgebra_closure",
    "quotient_with_action",
    "WeightedDynkinDiagram",
    "Characteristic",
    "Sl2Triple",
    "Grading",
    "NilpotentOrbit",
    "characteristic_element",
    "grading_from_h",
    "dynkin_test",
    "find_representative",
    "complete_triple",
    "enumerate_orbits",
    "orbit_dimension",
    "OrbitAnalysis",
    "analyze",
    "reachable_table",
    "rigid_discrepancy_report",
    "OrbitRecord",
    "ExceptionRecord",
    "load_tables",
    "lookup",
    "exceptions",
    "__version__",
]
