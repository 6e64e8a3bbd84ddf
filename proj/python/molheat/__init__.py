"""Blackbody heating rates of cold polar molecules near layered surfaces."""

from ._core import (
    CriticalDistanceResult,
    GreenDiag,
    GroundState,
    MaterialModel,
    Molecule,
    QuadratureError,
    QuadratureSpec,
    RateMatrix,
    RateMode,
    Reflector,
    RootNotFoundError,
    SurfaceContext,
    SurfaceRate,
    Transition,
    boltzmann,
    build_rate_matrix,
    constants,
    critical_distance,
    default_data_dir,
    empirical_factor,
    empirical_rate,
    empirical_zc,
    evolve_populations,
    find_material,
    find_molecule,
    freespace_rate,
    im_trace_G0,
    load_materials,
    load_molecules,
    nonretarded_green,
    retarded_green,
    rotational_channels,
    scattering_green,
    steady_state,
    surface_rate,
    surface_ratio,
    thermal_n,
    vibrational_channel,
    wigner3j,
    z_nonretarded,
    z_nonretarded_drude,
)

__version__ = "0.1.0"

__all__ = [
    "CriticalDistanceResult",
    "GreenDiag",
    "GroundState",
    "MaterialModel",
    "Molecule",
    "QuadratureError",
    "QuadratureSpec",
    "RateMatrix",
    "RateMode",
    "Reflector",
    "RootNotFoundError",
    "SurfaceContext",
    "SurfaceRate",
    "Transition",
    "boltzmann",
    "build_rate_matrix",
    "constants",
    "critical_distance",
    "default_data_dir",
    "empirical_factor",
    "empirical_rate",
    "empirical_zc",
    "evolve_populations",
    "find_material",
    "find_molecule",
    "freespace_rate",
    "im_trace_G0",
    "load_materials",
    "load_molecules",
    "nonretarded_green",
    "retarded_green",
    "rotational_channels",
    "scattering_green",
    "steady_state",
    "surface_rate",
    "surface_ratio",
    "thermal_n",
    "vibrational_channel",
    "wigner3j",
    "z_nonretarded",
    "z_nonretarded_drude",
]
