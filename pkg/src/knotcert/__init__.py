"""knotcert: exact-arithmetic invariants, surgery calculus, and independence
certificates for twisted satellites of torus knots.

The library computes the integer-valued instanton index of Brieskorn
homology spheres with certified integrality, the closed-form Chern-Simons
and Pontryagin quantities of the surgery family Sigma(p, q, k*p*q - 1),
the torus decomposition of double branched covers of the satellites
D_n(T_{p,q}), the three definite cobordisms out of those covers, and the
growth criterion that certifies infinite families independent in the smooth
concordance group.  All certificate arithmetic is exact.
"""

from .cobordisms import (
    BoundaryComponent,
    CobordismLabel,
    CobordismRecord,
    build_P,
    build_R,
    build_Z,
    default_crossing_count,
    reverse_orientation,
)
from .covers import (
    KILL_LONGITUDE,
    KILL_MERIDIAN,
    THREE_SPHERE,
    BranchedCover,
    CoverDecomposition,
    SatelliteParams,
    ThreeSphere,
    TorusGluingMap,
    TorusLinkExterior,
    double_cover_decomposition,
    moser_identify,
    pattern_gluing_map,
    post_surgery_gluing,
    satellite_alexander_trivial,
    slope_from_filling,
)
from .cs_invariants import (
    CompactnessCheck,
    CompactnessReport,
    H1Data,
    TauValue,
    compactness_check,
    count_reducibles,
    lens_cs_lower_bound,
    parity_obstruction,
    pontryagin_number,
    tau_brieskorn_family,
)
from .errors import (
    AllZeroCoefficients,
    IntegralityFailure,
    InvalidParams,
    KnotcertError,
    NonIntegerCount,
    UnsupportedSlope,
)
from .exactmath import (
    Definiteness,
    Rational,
    Slope,
    SNFResult,
    SymIntMatrix,
    definiteness,
    direct_sum,
    gcd,
    smith_normal_form,
)
from .fs_invariant import (
    BrieskornSphere,
    RValue,
    r_family_closed_form,
    r_invariant,
)
from .obstruction import (
    AssembledManifold,
    ChainCheck,
    Family,
    IndependenceCertificate,
    Verdict,
    assemble_X,
    certify_family,
    doubled_growth,
    furuta_chain_check,
    generate_family,
    next_member,
    single_growth,
)

__version__ = "0.1.0"
