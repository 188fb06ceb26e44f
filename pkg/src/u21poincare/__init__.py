"""Betti numbers of U(2,1) and SU(2,1) surface-group representation spaces.

Exact Poincaré polynomials of the connected components, computed by Morse
theory on the corresponding Higgs bundle moduli spaces.
"""
from .critical import (
    ChainType,
    CriticalReport,
    Length3Invariants,
    dim_critical,
    dim_downflow,
    enumerate_length3,
    morse_index,
    morse_index_length3,
    n2_poincare,
    n3_poincare,
    u_rank_deg,
)
from .errors import (
    EulerMismatch,
    GenusTooSmall,
    InternalError,
    NegativeCoefficient,
    NonZeroRemainder,
    NotCoprime,
    NotNormalized,
    ToledoViolated,
    TruncationExceeded,
    U21Error,
    ValidationError,
)
from .moduli import (
    ComponentReport,
    ModuliParams,
    NormalizedParams,
    component_poincare,
    enumerate_components,
    euler_fixed_closed_form,
    torsion_action_defect,
    torsion_defect_by_critical,
    validate,
)
from .poly import LaurentPoly, SeriesX
from .symprod import SymProdQuery, binom, macdonald_euler_check, macdonald_poincare

__version__ = "0.1.0"
