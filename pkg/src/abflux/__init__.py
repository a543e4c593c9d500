"""Solenoid gauge potentials, flux/circulation verification, loop phases,
and exact charge-lattice arithmetic."""

from .errors import (
    AbfluxError,
    AxisSingularity,
    EmptyChargeSet,
    FieldUndefinedOnSolenoid,
    InvalidRadius,
    PathCrossesSolenoid,
    PathTouchesAxis,
    QuadratureNotConverged,
    StencilCrossesSolenoid,
    WindingUnresolvable,
    ZeroCharge,
)
from .fields import (
    BOUNDARY_BAND,
    Point,
    SolenoidField,
    Vec3,
    ab_standard,
    curl_fd,
    eval_A,
    eval_B,
    gauge_shift,
)
from .geometry import (
    PATH_CLEARANCE,
    Circle,
    ClosedPath,
    Polyline,
    QuadratureSpec,
    arc_integral,
    circulation,
    flux_direct,
    load_circle_json,
    load_polyline_csv,
    sector_flux,
    segment_integral,
    winding_number,
)
from .phase import (
    InterferometerGeometry,
    PhaseFactor,
    holonomy,
    interference,
    interference_csv,
    periodicity_check,
    phase_closed_form,
    phases_equivalent,
)
from .quantize import (
    ChargeSpectrum,
    RationalCharge,
    antiparticle_closure,
    charge_allowed,
    infer_minimal_N,
    kappa_allowed,
    kappa_constraints,
    spectrum,
)
from .stokes import LIMIT_DELTAS, StokesReport, chart_audit, verify_stokes

__version__ = "0.1.0"

__all__ = [
    "AbfluxError",
    "AxisSingularity",
    "BOUNDARY_BAND",
    "ChargeSpectrum",
    "Circle",
    "ClosedPath",
    "EmptyChargeSet",
    "FieldUndefinedOnSolenoid",
    "InterferometerGeometry",
    "InvalidRadius",
    "LIMIT_DELTAS",
    "PATH_CLEARANCE",
    "PathCrossesSolenoid",
    "PathTouchesAxis",
    "PhaseFactor",
    "Point",
    "Polyline",
    "QuadratureNotConverged",
    "QuadratureSpec",
    "RationalCharge",
    "SolenoidField",
    "StencilCrossesSolenoid",
    "StokesReport",
    "Vec3",
    "WindingUnresolvable",
    "ZeroCharge",
    "ab_standard",
    "antiparticle_closure",
    "arc_integral",
    "chart_audit",
    "charge_allowed",
    "circulation",
    "curl_fd",
    "eval_A",
    "eval_B",
    "flux_direct",
    "gauge_shift",
    "holonomy",
    "infer_minimal_N",
    "interference",
    "interference_csv",
    "kappa_allowed",
    "kappa_constraints",
    "load_circle_json",
    "load_polyline_csv",
    "periodicity_check",
    "phase_closed_form",
    "phases_equivalent",
    "sector_flux",
    "segment_integral",
    "spectrum",
    "verify_stokes",
    "winding_number",
]
