"""Exact degree-by-degree verification of stable mapping class group cohomology.

The package builds the stable cohomology rings and modules degree by degree
in exact rational arithmetic and mechanically certifies their structure:
free generation by the twisted classes, the contraction pairing, the two
degree-shifting maps and their kernel/cokernel descriptions, Koszul
homology, exactness of the associated forms complex, and the vanishing of
H^1 for the bordered-torus mapping class group.  See the README for the
mathematical statements and the `mmmcoh` command for the runnable suite.
"""

__version__ = "0.1.0"

from .algebra import (
    AlgebraElement,
    DegreeBoundError,
    Monomial,
    PolynomialAlgebra,
    exterior_basis,
    exterior_dim,
)
from .forms import DifferentialForms, ExactnessReport, FormBasisElement, FormElement
from .groupcoh import (
    GroupPresentation,
    H1Certificate,
    MatrixRep,
    cocycle_space,
    coboundary_space,
    evaluate_word,
    h1_certificate,
    h1_dimension,
    load_group_data,
    load_group_file,
)
from .linalg import (
    SparseMatrix,
    VectorQ,
    column_space_basis,
    kernel_basis,
    rank,
    rref,
    solve,
    solve_many,
)
from .modules import (
    FreeGradedModule,
    GradedModule,
    GradedModuleMap,
    MinimalGenerators,
    TorResult,
    direct_sum,
    free_module,
    kernel_module,
    koszul_differential,
    minimal_generators,
    tor_dimension,
    tor_table,
    trivial_module,
)
from .stable import (
    FalsificationError,
    GeneratorsReport,
    StableCohomology,
    StableCohomologyTable,
    TorReport,
    TwistedClassSymbol,
    TwistedElement,
    contraction_pairing,
    kernel_generator,
)
from .verify import CheckResult, VerificationReport, run_verification

__all__ = [
    "AlgebraElement",
    "CheckResult",
    "DegreeBoundError",
    "DifferentialForms",
    "ExactnessReport",
    "FalsificationError",
    "FormBasisElement",
    "FormElement",
    "FreeGradedModule",
    "GeneratorsReport",
    "GradedModule",
    "GradedModuleMap",
    "GroupPresentation",
    "H1Certificate",
    "MatrixRep",
    "MinimalGenerators",
    "Monomial",
    "PolynomialAlgebra",
    "SparseMatrix",
    "StableCohomology",
    "StableCohomologyTable",
    "TorReport",
    "TorResult",
    "TwistedClassSymbol",
    "TwistedElement",
    "VectorQ",
    "VerificationReport",
    "cocycle_space",
    "coboundary_space",
    "column_space_basis",
    "contraction_pairing",
    "direct_sum",
    "evaluate_word",
    "exterior_basis",
    "exterior_dim",
    "free_module",
    "h1_certificate",
    "h1_dimension",
    "kernel_basis",
    "kernel_generator",
    "kernel_module",
    "koszul_differential",
    "load_group_data",
    "load_group_file",
    "minimal_generators",
    "rank",
    "rref",
    "run_verification",
    "solve",
    "solve_many",
    "tor_dimension",
    "tor_table",
    "trivial_module",
    "__version__",
]
