"""spinecheck: exact correction-term profiles and the PL-sphere/spine
obstruction for rational homology sphere boundaries.

All arithmetic is exact (stdlib fractions); there is no floating point
anywhere in the package.
"""

from .dcore import (
    DProfile,
    ProfileError,
    Rational,
    RawProfile,
    conj_index,
    format_profile,
    frac_mod2,
    mirror,
    parse_profile,
    residue_table,
    shift_by_even,
)
from .families import (
    MpDescriptor,
    QmDescriptor,
    lens_n1_profile,
    mp_profile,
    qkm_profile,
    qkm_structure,
    qm_profile,
)
from .knots import (
    MonotonicityViolation,
    VSequence,
    random_v_sequence,
    v_at,
    v_from_values,
    v_torus_2strand,
    v_trefoil,
    v_unknot,
)
from .lattice import (
    CharCoset,
    IntLattice,
    SearchOverflow,
    chain_lattice,
    char_cosets,
    d_lower_bound,
)
from .obstruct import (
    AllowedDiffs,
    BranchResult,
    CheckResult,
    InapplicableError,
    Overall,
    Sign,
    SpineVerdict,
    allowed_differences,
    check_labeled,
    enumerate_labelings,
    verdict,
)
from .pi1 import (
    CosetResult,
    NotCoprime,
    Presentation,
    SeifertData,
    abelianization_is_trivial,
    brieskorn_presentation,
    fiber_word,
    normal_generation_check,
    seifert_data,
    todd_coxeter,
)
from .surgery import (
    SurgeryBoundInput,
    niwu_bound_check,
    niwu_bound_deficit,
    niwu_profile,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
