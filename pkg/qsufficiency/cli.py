"""qsufficiency - sufficiency computations on quantum statistical models.

Usage:
  qsufficiency restrict <model> [options]
  qsufficiency ratios <model> [options]
  qsufficiency minsuff <model> [--scalars=<scalars>] [options]
  qsufficiency jordan <model> [options]
  qsufficiency ce <model> [options]
  qsufficiency pipeline <model> [options]
  qsufficiency structure <model> [--mode=<mode>] [options]
  qsufficiency ki <model> [--target=<target>] [options]
  qsufficiency bound <model> [--setting=<setting>] [--params=<d>] [options]
  qsufficiency fisher <model> --povm=<povm> [options]
  qsufficiency verify <model> [options]
  qsufficiency selftest [--dims=<dims>] [--trials=<n>] [options]
  qsufficiency -h | --help
  qsufficiency --version

Commands:
  restrict   Restrict the model to its support space H_S.
  ratios     Likelihood ratios of the restricted model.
  minsuff    Minimal sufficient real (or complex) *-algebra.
  jordan     Minimal sufficient real Jordan algebra.
  ce         Sufficient conditional expectation onto the minimal algebra.
  pipeline   Fixed-point pipeline certificate of that expectation.
  structure  Block structure of the minimal sufficient algebra.
  ki         Koashi-Imoto decomposition of the model.
  bound      Bound on the number of outcomes of an optimal POVM.
  fisher     Classical and SLD Fisher information of a POVM.
  verify     Full property suite on the model.
  selftest   Property suites on random models and algebras.

Options:
  --scalars=<scalars>  Either real or complex [default: real].
  --mode=<mode>        Either star or jordan [default: star].
  --target=<target>    Algebra of the KI decomposition, star or jordan
                       [default: star].
  --setting=<setting>  Either local or bayesian [default: local].
  --params=<d>         Number of parameters (local setting) [default: 1].
  --povm=<povm>        POVM file, a JSON object {"elements": [matrices]}.
  --dims=<dims>        Comma-separated dimensions [default: 2,3,4].
  --trials=<n>         Trials per dimension and setting [default: 1].
  --tol=<tol>          Tolerance of sufficiency and membership residuals.
  --rank-tol=<tol>     Relative threshold under which eigenvalues are zero.
  --seed=<seed>        Master seed of all random draws [default: 0].
  --format=<format>    Either json or text [default: json].
  --out=<path>         Write the report to a file, a folder or a .zip archive.
  --progress           Show progress bars (on stderr).
  -h --help            Show this screen.
  --version            Show the version.

Exit codes: 0 if all residual checks pass, 1 if a check fails, 2 for an
input error.
"""

import sys

import numpy as np
from docopt import docopt, DocoptExit
from proglog import default_bar_logger

from .version import __version__
from .Tolerances import Tolerances
from .SufficiencyError import SufficiencyError, ModelFileError
from .ResidualCheck import ResidualChecks
from .RealSubspace import closure_residuals, is_modular_invariant
from .matcore import hs_norm, matrix_to_json, min_eigenvalue
from .sufficiency import (
    conditional_expectation,
    fixed_point_pipeline,
    is_positive_sampled,
    likelihood_ratio_residuals,
    minimal_sufficient_jordan,
    minimal_sufficient_star,
    bimodule_residual,
    jordan_witness,
    sufficiency_checks,
)
from .structure import (
    classical_fisher,
    identify_structure,
    jordan_dim,
    ki_decompose,
    sld_fisher,
    support_size_bound,
)
from .reports import Report, file_digest, parse_model, parse_povm, write_report
from . import verification

COMMANDS = (
    "restrict",
    "ratios",
    "minsuff",
    "jordan",
    "ce",
    "pipeline",
    "structure",
    "ki",
    "bound",
    "fisher",
    "verify",
    "selftest",
)


def _choice(params, flag, choices):
    value = params[flag]
    if value not in choices:
        raise ValueError("%s should be one of %s, got %s" % (flag, ", ".join(choices), value))
    return value


def _positive_int(value, flag):
    try:
        number = int(value)
    except ValueError:
        raise ValueError("%s should be an integer, got %s" % (flag, value))
    if number < 1:
        raise ValueError("%s should be positive, got %s" % (flag, value))
    return number


def _float_or_none(value, flag):
    if value is None:
        return None
    try:
        return float(value)
    except ValueError:
        raise ValueError("%s should be a number, got %s" % (flag, value))


def tolerances_from_params(params):
    """Return the Tolerances set by --tol and --rank-tol."""
    tol = _float_or_none(params["--tol"], "--tol")
    return Tolerances(
        sufficiency_tol=tol,
        member_tol=tol,
        rank_tol=_float_or_none(params["--rank-tol"], "--rank-tol"),
    )


def _algebra_checks(algebra, model, tolerances):
    checks = ResidualChecks(title="algebra checks")
    residuals = closure_residuals(algebra)
    for name in ("contains_identity", "star_closed", "mult_closed"):
        checks.add(name.replace("_", " "), residuals[name], tolerances.member_tol)
    _, worst, _ = is_modular_invariant(
        algebra, model.rho, tolerances=tolerances, return_details=True
    )
    checks.add("rho-modular invariant", worst, tolerances.member_tol)
    checks.extend(likelihood_ratio_residuals(algebra, model, tolerances))
    return checks


def run_restrict(model, params, tolerances, logger):
    restricted = model.restrict_to_HS()
    checks = ResidualChecks(title="restriction checks")
    V = restricted.isometry
    checks.add(
        "isometry",
        hs_norm(V.conj().T @ V - np.eye(restricted.dim)),
        tolerances.ortho_tol * (1 + restricted.dim),
    )
    for element, original in zip(restricted.elements, model.elements):
        checks.add(
            "V X V* = X (%s)" % element.label,
            hs_norm(V @ element.X @ V.conj().T - original.X),
            tolerances.recon_tol * (1 + hs_norm(original.X)),
        )
    results = {
        "dim": model.dim,
        "dim H_S": restricted.dim,
        "restricted_model": restricted.to_dict(),
    }
    return results, checks


def run_ratios(model, params, tolerances, logger):
    restricted = model.restrict_to_HS()
    checks = ResidualChecks(title="likelihood ratio checks")
    ratios = {}
    for element, ratio in zip(restricted.elements, restricted.likelihood_ratio_set()):
        rho = restricted.rho
        if element.kind == "state":
            name, reconstruction = "R rho R = X", ratio @ rho @ ratio
        else:
            name, reconstruction = "(L rho + rho L)/2 = X", (ratio @ rho + rho @ ratio) / 2
        checks.add(
            "%s (%s)" % (name, element.label),
            hs_norm(reconstruction - element.X),
            tolerances.recon_tol * (1 + hs_norm(element.X)),
        )
        ratios[element.label] = {"kind": element.kind, "ratio": matrix_to_json(ratio)}
    return {"dim H_S": restricted.dim, "ratios": ratios}, checks


def run_minsuff(model, params, tolerances, logger):
    scalars = _choice(params, "--scalars", ("real", "complex"))
    restricted = model.restrict_to_HS()
    algebra = minimal_sufficient_star(
        restricted, scalars=scalars, tolerances=tolerances, logger=logger
    )
    results = {"scalars": scalars, "dimension": algebra.dimension, "algebra": algebra.to_dict()}
    return results, _algebra_checks(algebra, restricted, tolerances)


def run_jordan(model, params, tolerances, logger):
    restricted = model.restrict_to_HS()
    star_algebra = minimal_sufficient_star(restricted, tolerances=tolerances, logger=logger)
    jordan_algebra, rho0 = minimal_sufficient_jordan(
        restricted, tolerances=tolerances, logger=logger, star_algebra=star_algebra
    )
    _, _, residual = jordan_witness(restricted, jordan_algebra, star_algebra, tolerances)
    checks = ResidualChecks(title="Jordan algebra checks")
    residuals = closure_residuals(jordan_algebra)
    checks.add("Jordan closed", residuals["jordan_closed"], tolerances.member_tol)
    checks.add("beta_J sufficient", residual, tolerances.sufficiency_tol)
    results = {
        "dimension": jordan_algebra.dimension,
        "star_dimension": star_algebra.dimension,
        "algebra": jordan_algebra.to_dict(),
        "rho0": matrix_to_json(rho0),
    }
    return results, checks


def _minimal_expectation(model, tolerances, logger):
    restricted = model.restrict_to_HS()
    algebra = minimal_sufficient_star(restricted, tolerances=tolerances, logger=logger)
    alpha = conditional_expectation(algebra, restricted.rho, tolerances=tolerances)
    return restricted, algebra, alpha


def run_ce(model, params, tolerances, logger):
    restricted, algebra, alpha = _minimal_expectation(model, tolerances, logger)
    seed = int(params["--seed"])
    checks = sufficiency_checks(restricted, alpha, tolerances)
    _, lowest = is_positive_sampled(alpha, seed=seed, tolerances=tolerances)
    checks.add("positive (sampled)", lowest, -tolerances.psd_tol, comparison="min")
    checks.add("bimodule law", bimodule_residual(alpha, algebra), tolerances.sufficiency_tol)
    results = {
        "algebra_dimension": algebra.dimension,
        "map": {"label": alpha.label, "matrix": alpha.matrix},
    }
    return results, checks


def run_pipeline(model, params, tolerances, logger):
    restricted, _, alpha = _minimal_expectation(model, tolerances, logger)
    certificate = fixed_point_pipeline(
        restricted, alpha, tolerances=tolerances, seed=int(params["--seed"]), logger=logger
    )
    return {"certificate": certificate.to_dict()}, certificate.checks


def run_structure(model, params, tolerances, logger):
    mode = _choice(params, "--mode", ("star", "jordan"))
    restricted = model.restrict_to_HS()
    algebra = minimal_sufficient_star(restricted, tolerances=tolerances, logger=logger)
    if mode == "jordan":
        algebra, _ = minimal_sufficient_jordan(
            restricted, tolerances=tolerances, logger=logger, star_algebra=algebra
        )
    decomposition = identify_structure(
        algebra, mode=mode, tolerances=tolerances, seed=int(params["--seed"]), logger=logger
    )
    results = {
        "algebra_dimension": algebra.dimension,
        "structure": decomposition.to_dict(),
    }
    return results, decomposition.checks


def run_ki(model, params, tolerances, logger):
    target = _choice(params, "--target", ("star", "jordan"))
    seed = int(params["--seed"])
    restricted, _, alpha = _minimal_expectation(model, tolerances, logger)
    certificate = fixed_point_pipeline(
        restricted, alpha, tolerances=tolerances, seed=seed, logger=logger
    )
    ki = ki_decompose(restricted, certificate, target=target, tolerances=tolerances, seed=seed)
    checks = ResidualChecks(title="KI checks")
    checks.extend(certificate.checks, prefix="certificate")
    checks.extend(ki.checks)
    return {"target": target, "ki": ki.to_dict()}, checks


def run_bound(model, params, tolerances, logger):
    setting = _choice(params, "--setting", ("local", "bayesian"))
    d = _positive_int(params["--params"], "--params")
    restricted = model.restrict_to_HS()
    jordan_algebra, _ = minimal_sufficient_jordan(restricted, tolerances=tolerances, logger=logger)
    decomposition = identify_structure(
        jordan_algebra, mode="jordan", tolerances=tolerances, seed=int(params["--seed"])
    )
    dimension = jordan_dim(decomposition.blocks)
    checks = ResidualChecks(title="bound checks")
    checks.extend(decomposition.checks, prefix="structure")
    checks.add(
        "jordan_dim of the blocks = dim A_J",
        abs(dimension - jordan_algebra.dimension),
        0,
    )
    results = {
        "setting": setting,
        "params": d,
        "blocks": [block.to_dict() for block in decomposition.blocks],
        "jordan_dim": dimension,
        "support_size_bound": support_size_bound(decomposition.blocks, d=d, setting=setting),
    }
    return results, checks


def run_fisher(model, params, tolerances, logger):
    derivatives = [e for e in model.elements if e.kind == "derivative"]
    if len(derivatives) == 0:
        raise ValueError("The fisher command needs a model with derivative elements")
    povm = parse_povm(params["--povm"], dim=model.dim, tolerances=tolerances)
    derivs = [e.X for e in derivatives]
    classical = classical_fisher(model.rho, derivs, povm, tolerances=tolerances)
    quantum = sld_fisher(model.rho, derivs, tolerances=tolerances)
    checks = ResidualChecks(title="Fisher information checks")
    checks.add(
        "classical <= SLD Fisher information",
        min_eigenvalue(quantum - classical),
        -tolerances.recon_tol * (1 + hs_norm(quantum)),
        comparison="min",
    )
    results = {
        "parameters": [e.label for e in derivatives],
        "povm_outcomes": len(povm),
        "classical_fisher": classical,
        "sld_fisher": quantum,
    }
    return results, checks


def run_verify(model, params, tolerances, logger):
    checks, results = verification.verify_model(
        model, tolerances=tolerances, seed=int(params["--seed"]), logger=logger
    )
    return results, checks


def run_selftest_command(params, tolerances, logger):
    dims = [_positive_int(d, "--dims") for d in params["--dims"].split(",")]
    checks, results = verification.run_selftest(
        seed=int(params["--seed"]),
        dims=dims,
        n_trials=_positive_int(params["--trials"], "--trials"),
        tolerances=tolerances,
        logger=logger,
    )
    return results, checks


RUNNERS = {
    "restrict": run_restrict,
    "ratios": run_ratios,
    "minsuff": run_minsuff,
    "jordan": run_jordan,
    "ce": run_ce,
    "pipeline": run_pipeline,
    "structure": run_structure,
    "ki": run_ki,
    "bound": run_bound,
    "fisher": run_fisher,
    "verify": run_verify,
}


def run(params):
    """Run the command selected in docopt-style ``params`` and return
    (report, model_path)."""
    command = [name for name in COMMANDS if params.get(name)][0]
    tolerances = tolerances_from_params(params)
    try:
        seed = int(params["--seed"])
    except ValueError:
        raise ValueError("--seed should be an integer, got %s" % params["--seed"])
    _choice(params, "--format", ("json", "text"))
    logger = default_bar_logger("bar" if params["--progress"] else None)
    model_path = params.get("<model>")
    digest = None
    try:
        if command == "selftest":
            results, checks = run_selftest_command(params, tolerances, logger)
        else:
            digest = file_digest(model_path)
            model = parse_model(model_path, tolerances=tolerances)
            results, checks = RUNNERS[command](model, params, tolerances, logger)
    except ModelFileError:
        raise
    except SufficiencyError as error:
        results = {"error": str(error)}
        checks = ResidualChecks(title="checks")
        checks.add(
            error.check or "%s completed" % command,
            float("inf") if error.residual is None else error.residual,
            0,
            passes=False,
            message=str(error),
        )
    report = Report(
        command,
        results=results,
        checks=checks,
        seed=seed,
        tolerances=tolerances,
        inputs_digest=digest,
    )
    return report, model_path


def main(argv=None):
    """Command-line entry point. Returns the exit code."""
    try:
        params = docopt(__doc__, argv=argv, version=__version__)
    except DocoptExit as error:
        sys.stderr.write(str(error) + "\n")
        return 2
    try:
        report, model_path = run(params)
    except (ModelFileError, ValueError, IOError, OSError) as error:
        sys.stderr.write("Input error: %s\n" % error)
        return 2
    output_format = params["--format"]
    if params["--out"] is not None:
        write_report(report, params["--out"], input_path=model_path, output_format=output_format)
    elif output_format == "json":
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.to_text())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
