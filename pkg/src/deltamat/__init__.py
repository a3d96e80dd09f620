"""Delta-matroids on small ground sets: twists, handle slides, minors and
binary representability, with an exhaustive census for ``n <= 4``."""

from .catalog import EXCLUDED, FIGURE1_FAMILY, FIGURE1_MATRIX, S1, S2, S3, S4, S5
from .census import (
    CensusRecord,
    enumerate_delta_matroids,
    find_escape,
    verify_binary_closure,
    verify_commutation_laws,
    verify_theorem,
)
from .gf2 import (
    BinaryVerdict,
    SymmetricBinaryMatrix,
    gf2_invertible,
    is_binary_by_excluded_minors,
    is_binary_by_search,
    matroid_of_matrix,
)
from .golden import run_golden_suite
from .isomorphism import apply_relabeling, are_isomorphic, canonical_form
from .setsystem import (
    AxiomViolation,
    DeltaMatroidError,
    EmptyFamily,
    GroundSetTooLarge,
    OutOfRange,
    SameElement,
    SetSystem,
    SizeMismatch,
    WouldBeEmpty,
    elements,
    family_equal,
    find_violation,
    is_delta_matroid,
    make_set_system,
    subset,
)
from .textio import ParseError, format_system, parse_matrix, parse_system
from .transforms import (
    SlideInstruction,
    SlideWitness,
    apply_sequence,
    contract,
    delete,
    dual,
    handle_slide,
    minors,
    twist,
)

__version__ = "0.1.0"
