"""Exact construction and root certification for cluster-complex face polynomials."""

from .polycore import (
    NonZeroRemainder,
    Poly,
    Rational,
    compose_affine,
    derivative,
    divrem,
    exact_divide,
    is_square_free,
    poly_gcd,
)
from .catalog import (
    A,
    B,
    D,
    E6,
    E7,
    E8,
    F4,
    FIXED_TYPES,
    G2,
    H3,
    H4,
    I2,
    CoxeterData,
    Family,
    IdentityMismatch,
    InvalidRank,
    RodriguesFormMismatch,
    RootSystemType,
    UnsupportedType,
    coxeter_data,
    f_poly,
    f_vector,
    fplus_poly,
    h_poly,
    jacobi_shifted,
    rodrigues_f,
)
from .sturm import (
    EQUAL,
    GREATER,
    LESS,
    EndpointRoot,
    Interval,
    RootBox,
    SturmChain,
    compare_roots,
    count_real_roots,
    count_roots,
    first_root_box,
    isolate_roots,
    rational_root_box,
    refine,
    sturm_chain,
    variations_at,
)
from .verify import Report, verify_identities, verify_simple_roots

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
