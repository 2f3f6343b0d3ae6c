"""Segregation limit of a two-component condensate in a harmonic trap.

Numerical companion to the sharp-interface analysis: ground-state
solver, two-component gradient-flow minimization, the spin (density,
phase) decomposition of the energy, the 1D cell problem and limiting
weighted perimeter, explicit recovery constructions, and the symmetry
comparison between sector and radial interfaces.
"""

from .grid import (
    Curve,
    Field,
    GridSpec,
    dump_field,
    field_from_function,
    integrate,
    load_field,
    signed_distance,
)
from .ground_state import (
    ConvergenceError,
    EtaReport,
    GroundState,
    Params,
    check_eta_properties,
    energy_single,
    radial_average,
    rayleigh_lambda,
    solve_eta,
)
from .sharp_interface import (
    Annuli,
    CellProblemResult,
    Circle,
    Diameter,
    DiskSector,
    InterfaceSpec,
    PAPER_SIGMA,
    Polyline,
    ProfileSpec,
    TrendReport,
    TrendRow,
    build_recovery,
    cell_oracle,
    default_T,
    extract_interface,
    gamma_trend,
    interface_curves,
    limit_energy,
    mass_in_region,
    profile_values,
    signed_geometry,
    spec_weighted_length,
)
from .spin import (
    EnergyBreakdown,
    SpinPair,
    decompose,
    f_energy,
    from_spin,
    g_energy,
    g_tilde,
    interface_min_v,
    split_residual,
    to_spin,
)
from .symmetry import (
    RadialConfig,
    SECTOR_VALUE,
    SymmetryVerdict,
    best_radial,
    delta0,
    f_alpha,
    g_n,
    merge_zero,
    sector_energy,
)
from .thomas_fermi import (
    TF_RADIUS,
    TFDensity,
    mass_disk,
    mass_radius,
    tf_field,
    tf_lambda,
    weighted_length,
)
from .two_component import (
    CondensatePair,
    DiskAnnulus,
    FromFiles,
    HalfDisk,
    Random,
    energy_two,
    minimize_two,
    overlap,
    scaled_excess,
)

__version__ = "0.1.0"

__all__ = [
    "Annuli",
    "CellProblemResult",
    "Circle",
    "CondensatePair",
    "ConvergenceError",
    "Curve",
    "Diameter",
    "DiskAnnulus",
    "DiskSector",
    "EnergyBreakdown",
    "EtaReport",
    "Field",
    "FromFiles",
    "GridSpec",
    "GroundState",
    "HalfDisk",
    "InterfaceSpec",
    "PAPER_SIGMA",
    "SECTOR_VALUE",
    "Params",
    "Polyline",
    "ProfileSpec",
    "RadialConfig",
    "Random",
    "SpinPair",
    "SymmetryVerdict",
    "TFDensity",
    "TF_RADIUS",
    "TrendReport",
    "TrendRow",
    "best_radial",
    "build_recovery",
    "cell_oracle",
    "check_eta_properties",
    "decompose",
    "default_T",
    "delta0",
    "dump_field",
    "energy_single",
    "energy_two",
    "extract_interface",
    "f_alpha",
    "f_energy",
    "field_from_function",
    "from_spin",
    "g_energy",
    "g_n",
    "g_tilde",
    "gamma_trend",
    "integrate",
    "interface_curves",
    "interface_min_v",
    "limit_energy",
    "load_field",
    "mass_disk",
    "mass_in_region",
    "mass_radius",
    "merge_zero",
    "minimize_two",
    "overlap",
    "profile_values",
    "radial_average",
    "rayleigh_lambda",
    "scaled_excess",
    "sector_energy",
    "signed_distance",
    "signed_geometry",
    "solve_eta",
    "spec_weighted_length",
    "split_residual",
    "tf_field",
    "tf_lambda",
    "to_spin",
    "weighted_length",
]
