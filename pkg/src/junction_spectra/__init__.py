"""Scattering, transparency resonances and bound states of the barrier-well
(regularized delta-prime) junction, with a transfer-matrix oracle for every
closed form and the TE slab-waveguide mapping."""

from .junction import (
    ResonanceLevel,
    jump_ratio_sq,
    resonance_levels,
    resonance_sigmas,
    resonance_transmission,
    transmission_closed_form,
)
from .potential import (
    MAX_SIGMA,
    DeltaScatterer,
    PiecewisePotential,
    Slab,
    build_barrier_well,
    build_double_delta,
    free_potential,
)
from .spectrum import (
    BoundState,
    SpectrumCurve,
    bound_state_residual,
    bound_state_zeta,
    bound_states,
    count_bound_states,
    spectrum_curves,
    threshold_residual,
    threshold_root,
)
from .transfer import (
    ScatteringResult,
    TransferMatrix,
    bound_state_mismatch,
    evaluate_scattering_wavefunction,
    find_bound_states_numeric,
    scatter,
    total_matrix,
    transmission,
)
from .waveguide import (
    ModePoint,
    WaveguideConfig,
    cutoff_points,
    dispersion_curve,
    map_parameters,
    sector_of,
    transverse_transmission,
)

__version__ = "0.1.0"
