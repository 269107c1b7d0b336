"""Exact cohomology rings of closed surface groups with local coefficients."""

from .presentation import (
    NONORIENTABLE,
    ORIENTABLE,
    Generator,
    Letter,
    SurfacePresentation,
    Word,
    parse_word,
    relator,
    word_product,
)
from .groupring import GroupRingElement, augmentation, fox_derivative
from .intlinalg import (
    AbelianGroup,
    IntMatrix,
    SmithDecomposition,
    cokernel,
    kernel_basis,
    smith_normal_form,
    subquotient,
)
from .resolution import (
    BasisLabel,
    ChainElement,
    Resolution,
    apply_boundary,
    build_resolution,
    contracting_s0,
)
from .coefficients import (
    CoefficientModule,
    DeterminantNotUnit,
    RelatorNotRespected,
    builtin_module,
    builtin_modules,
    evaluate,
    make_module,
    tensor,
    trivial_module,
)
from .diagonal import (
    TensorElement,
    TensorTerm,
    delta0,
    delta02,
    delta1,
    delta11_closed,
    delta11_recursive,
    verify_chain_identity,
)
from .cohomology import (
    Cochain,
    CochainComplex,
    CohomologyReport,
    build_cochain_complex,
    classify_torus_bundles,
    cohomology_groups,
    cohomology_of,
    cup11,
    cup_table,
    cup_with_h0,
    h2_lyndon,
)
from .verify import verify_suite

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "BasisLabel",
    "ChainElement",
    "Cochain",
    "CochainComplex",
    "CoefficientModule",
    "CohomologyReport",
    "DeterminantNotUnit",
    "Generator",
    "GroupRingElement",
    "IntMatrix",
    "Letter",
    "NONORIENTABLE",
    "ORIENTABLE",
    "RelatorNotRespected",
    "Resolution",
    "SmithDecomposition",
    "SurfacePresentation",
    "TensorElement",
    "TensorTerm",
    "Word",
    "apply_boundary",
    "augmentation",
    "build_cochain_complex",
    "build_resolution",
    "builtin_module",
    "builtin_modules",
    "classify_torus_bundles",
    "cohomology_groups",
    "cohomology_of",
    "cokernel",
    "contracting_s0",
    "cup11",
    "cup_table",
    "cup_with_h0",
    "delta0",
    "delta02",
    "delta1",
    "delta11_closed",
    "delta11_recursive",
    "evaluate",
    "fox_derivative",
    "h2_lyndon",
    "kernel_basis",
    "make_module",
    "parse_word",
    "relator",
    "smith_normal_form",
    "subquotient",
    "tensor",
    "trivial_module",
    "verify_chain_identity",
    "verify_suite",
    "word_product",
]
