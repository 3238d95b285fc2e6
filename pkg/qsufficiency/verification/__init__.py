"""Random models, property suites and the self-test."""

from .random_models import random_model, constructed_ki_model, MODEL_SETTINGS
from .property_suite import verify_model
from .selftest import run_selftest, structure_round_trip, SELFTEST_SETTINGS

__all__ = [
    "random_model",
    "constructed_ki_model",
    "MODEL_SETTINGS",
    "verify_model",
    "run_selftest",
    "structure_round_trip",
    "SELFTEST_SETTINGS",
]
