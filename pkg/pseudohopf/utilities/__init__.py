from .seeder import sample_rng
from .logging import get_logger
from .version import __version__
from .tolerances import Tolerances
from .data_classes import IdentityResult, ResidualTracker, VerificationReport, round_significant
from .constants import (
    TOTAL_CURVATURE,
    BASE_CURVATURE,
    DEFAULT_SEED,
    DEFAULT_SAMPLES,
    DEFAULT_TOLERANCES,
    IDENTITY_ANCHORS,
    CURVATURE_CONVENTION
)

__all__ = [
    'sample_rng',
    'get_logger',
    'Tolerances',
    'IdentityResult',
    'ResidualTracker',
    'VerificationReport',
    'round_significant',
    'TOTAL_CURVATURE',
    'BASE_CURVATURE',
    'DEFAULT_SEED',
    'DEFAULT_SAMPLES',
    'DEFAULT_TOLERANCES',
    'IDENTITY_ANCHORS',
    'CURVATURE_CONVENTION',
    '__version__'
]
