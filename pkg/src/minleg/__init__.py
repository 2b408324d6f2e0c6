"""minleg: numerical verification for minimal Legendrian submanifolds of spheres."""

__version__ = "0.1.0"

from .geometry import (
    DegeneratePointError,
    ImmersionChart,
    Interval,
    NonPSDError,
    PointData,
    PointFrame,
    Spectrum,
    apply_J,
    derivative_cross_check,
    f_m,
    frame_at,
    fundamental_matrix,
    gauss_rank,
    legendrian_residual,
    minimality_residual,
    point_data,
    scalar_curvature_intrinsic,
    sigma_at,
    sigma_symmetry_defect,
    simons_residual,
    spectrum_of,
    structure_constants_check,
)
from .lu_inequality import (
    FamilyValidationError,
    LuReport,
    MatrixFamily,
    canonical_extremal,
    extremal_search,
    family_from_text,
    family_to_text,
    load_family,
    lu_bound,
    lu_check,
    normalize_family,
    save_family,
)
from .symmat import EigenResult, commutator, frobenius_inner, frobenius_norm, sym_eigen, symmetrize
from .verify import (
    GridSpec,
    ScanResult,
    Tolerances,
    VerificationReport,
    chart_volume,
    grid_points,
    integral_p1,
    pinching_scan,
    sample_points,
    scan_to_csv,
    verify_chart,
)
from .zoo import (
    UnknownExampleError,
    ZooEntry,
    calabi_sigma_closed_form,
    calabi_torus,
    default_entries,
    equivariant_sphere3,
    flat_legendrian_torus,
    geodesic_sphere,
    get_entry,
)

__all__ = [name for name in dir() if not name.startswith("_")]
