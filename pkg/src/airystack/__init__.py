"""Transfer-matrix transmission through squeezed biased multilayers.

Core pipeline: describe a structure (potential), realize it at a squeeze
parameter, build its transfer matrix (transfer, airy), scatter plane
waves against it (scattering), and compare against the closed-form
zero-thickness limits and their resonance sets (limits, resonance,
sweep).
"""

from .airy import AiryQuad, ScaledAiryQuad, airy_eval, airy_eval_scaled
from .errors import (
    AirystackError,
    BiasFreeLayerError,
    ConfigError,
    DegenerateSlopeError,
    EvanescentLeadError,
    NoClosedFormLimitError,
    NotAResonanceRootError,
)
from .limits import (
    AsymptoticMatrix,
    AsymptoticRegime,
    LimitClassification,
    LimitKind,
    TransistorSpec,
    TwoLayerMode,
    delta_transmission,
    lambda_k_form,
    lambda_large_z,
    lambda_small_z,
    limit_transmission_on_resonance,
    single_layer_limit,
    transistor_delta_limit,
    transistor_deltaprime_limit,
    two_layer_limit_matrices,
)
from .potential import (
    EV_TO_INVNM2,
    ConcreteLayer,
    DerivedCoefficients,
    LayerSpec,
    RegionClass,
    StructureSpec,
    classify_region,
    derived_coefficients,
    ev_to_invnm2,
    invnm2_to_ev,
    realize,
)
from .resonance import (
    ResonanceEquation,
    ResonanceRoot,
    ResonanceSet,
    find_resonances_deltaprime_2layer,
    find_resonances_transistor_deltaprime,
    resonances_delta_barrier_well,
    resonances_transistor_delta,
    scan_and_bisect,
)
from .scattering import ScatteringResult, s_matrix, scatter
from .sweep import SweepRequest, SweepResult, detect_peaks, run_sweep
from .transfer import (
    AiryLayerParams,
    TransferMatrix,
    airy_layer_params,
    layer_matrix,
    layer_matrix_constant,
    layer_matrix_linear,
    structure_matrix,
)

__version__ = "0.1.0"
