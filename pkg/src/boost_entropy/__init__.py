"""Spin entropy of boosted particles: Lorentz-boosted Gaussian spinors and a Galilean box model."""

__version__ = "0.1.0"

from .core import (
    BlochVector,
    BoostParams,
    ConvergenceError,
    DomainError,
    InvalidStateError,
    QubitDensityMatrix,
    binary_entropy,
    boost_from_beta,
    entropy_from_bloch,
    entropy_from_density_matrix,
    entropy_from_modulus,
)
from .galilean import BoxModel, abs_f, boosted_state, galilean_entropy, overlap_f, reduced_density_matrix
from .relativistic import (
    GaussianPacket,
    bloch_from_amplitudes,
    nz_prime_quadrature,
    nz_prime_series,
    peres_entropy_exact,
    peres_entropy_leading,
)
from .compare import entropy_comparison, match_box_to_packet
