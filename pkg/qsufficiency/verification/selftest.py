"""Reproducible random self-test of the whole package."""

from proglog import default_bar_logger

from ..Tolerances import Tolerances
from ..SufficiencyError import SufficiencyError
from ..ResidualCheck import ResidualChecks
from ..StructureDecomposition import canonical_blocks
from ..structure import identify_structure, random_blocks, scrambled_algebra
from ..matcore import derive_seeds
from .random_models import random_model
from .property_suite import verify_model

SELFTEST_SETTINGS = ("states", "derivatives", "degenerate")


def structure_round_trip(blocks, mode="star", seed=0, tolerances=None):
    """Scramble the canonical algebra of the blocks by a random unitary and
    return (identified_blocks, expected_blocks), both canonical sorted
    lists of descriptors."""
    algebra, _ = scrambled_algebra(blocks, mode=mode, seed=seed)
    decomposition = identify_structure(algebra, mode=mode, tolerances=tolerances, seed=seed)
    return (
        canonical_blocks(decomposition.blocks, mode=mode),
        canonical_blocks(blocks, mode=mode),
    )


def run_selftest(seed=0, dims=(2, 3, 4), n_trials=1, tolerances=None, logger=None):
    """Run the property suite on random models and structure round trips.

    For each dimension and trial, one random model per setting in
    SELFTEST_SETTINGS goes through ``verify_model``, and one random algebra
    per mode goes through a structure round trip. Each trial has its own
    seed derived from the master seed, so results do not depend on the
    order of the trials.

    Returns (checks, results).
    """
    tolerances = Tolerances.from_any(tolerances)
    logger = default_bar_logger(logger, bars=("trial",), min_time_interval=0.2)
    trials = [
        (dim, trial, setting)
        for dim in dims
        for trial in range(n_trials)
        for setting in SELFTEST_SETTINGS + ("star structure", "jordan structure")
    ]
    seeds = derive_seeds(seed, len(trials))
    checks = ResidualChecks(title="self-test checks")
    results = {}
    for (dim, trial, setting), trial_seed in logger.iter_bar(trial=list(zip(trials, seeds))):
        name = "dim %d, trial %d, %s" % (dim, trial, setting)
        if setting.endswith("structure"):
            mode = setting.split()[0]
            blocks = random_blocks(dim, mode=mode, seed=trial_seed)
            try:
                found, expected = structure_round_trip(
                    blocks, mode=mode, seed=trial_seed, tolerances=tolerances
                )
            except SufficiencyError as error:
                checks.add(name, float("inf"), 0, message=str(error))
                continue
            results[name] = {
                "expected": [str(block) for block in expected],
                "found": [str(block) for block in found],
            }
            checks.add(name, 0 if found == expected else 1, 0)
            continue
        model = random_model(dim, n_elements=2, setting=setting, seed=trial_seed)
        trial_checks, trial_results = verify_model(
            model, tolerances=tolerances, seed=trial_seed, n_enlargements=2
        )
        trial_results.pop("certificate", None)
        results[name] = trial_results
        checks.extend(trial_checks, prefix=name)
    return checks, results
