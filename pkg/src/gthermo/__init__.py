"""Quantum thermodynamics of two bosonic Gaussian modes under bilinear interactions.

The package computes the complete first-law ledger (heat, work, bound and
free energy, intrinsic temperatures, correlation measures) for two-mode
Gaussian states evolving under frequency-converter and parametric-
amplifier interactions, provides closed-form predictors and
work-extraction optimizers for the tractable state families, and ships an
independent truncated Fock-space oracle for verification.
"""

from .core import (
    OMEGA,
    TOL_INV,
    TOL_NUM,
    TOL_PHYS,
    NormalForm,
    SymplecticSpectrum,
    assemble_cov,
    block_a,
    block_b,
    block_eps,
    check_cov2,
    check_cov4,
    entropy_vn_single,
    entropy_vn_two_mode,
    g,
    g_inv,
    intrinsic_temperature,
    is_entangled,
    normal_form,
    purity,
    renyi2_entropy,
    renyi2_mutual_information,
    symplectic_spectrum,
    temperature_of,
    thermal_photons,
)
from .errors import (
    CoherentSystemSignal,
    CorrelationBoundViolation,
    DegenerateEntropy,
    DomainError,
    EnvelopeExceeded,
    GThermoError,
    NonPhysical,
    NumericalDomain,
    TruncationOverflow,
    UnknownScenario,
)
from .extraction import (
    ExtractionResult,
    Type1Optimum,
    net_work,
    numeric_maximize,
    optimal_theta_type1,
    pa_type2_optimum,
    tmsv_optimum,
)
from .fock import FockDensity, apply_bilinear_fock, build_fock, oracle_report, synthesize
from .states import (
    PREDICTORS,
    CorrelatedSpec,
    SingleModeSpec,
    build_state,
    fc_balanced_cooling_threshold,
    fs_factor,
    gs_factor,
    make_custom,
    make_product,
    make_single_mode,
    make_tmsv,
    make_type1,
    make_type2,
    predict,
    type1_pa_negative_heat_threshold,
)
from .thermo import (
    EnergyBreakdown,
    ThermoReport,
    bound_energy,
    clausius_residual,
    free_energy,
    heat_from_dets,
    heat_from_entropies,
    infinitesimal_clausius_check,
    internal_energy,
    ledger,
    ledger_quantities,
    renyi_bound_energy_relation,
)
from .transforms import (
    BilinearTransform,
    TwoModeState,
    apply,
    block_identities_ok,
    displacement_evolution,
    displacements_from_mean,
    fc,
    fc_symplectic,
    is_symplectic,
    mean_from_displacements,
    pa,
    pa_symplectic,
    reflection,
    rotation,
    squeeze_symplectic,
    symplectic_of,
)

__version__ = "0.1.0"
