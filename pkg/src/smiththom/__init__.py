"""Smith theory over F2 and the Smith-Thom deficiency of Hilbert squares."""

__version__ = "0.1.0"

from .ci_invariants import (
    CompleteIntersection,
    HodgeDiamond,
    complex_betti,
    d_of_n,
    euler_characteristic,
    hkk_equals_b2k,
    hodge_numbers,
)
from .classify import ScanRange, lefschetz_trace_check, scan
from .errors import InconsistencyError, PreconditionError, SmithThomError, StructureError
from .f2linalg import F2Matrix, coker_dim, kernel_basis, rank
from .hilbert_square import (
    DeficiencyReport,
    StrataReport,
    Verdict,
    deficiency_square,
    deficiency_via_mu,
    implied_rank_mu,
    maximality_verdict,
)
from .profile import RealVarietyProfile, Violation, check_betti_identities, validate
from .simplicial import SimplicialComplex, betti, relative_betti
from .smith import (
    SimplicialInvolution,
    SmithReport,
    fixed_subcomplex,
    quotient_complex,
    regularize,
    smith_report,
    verify_relative_quotient,
)
