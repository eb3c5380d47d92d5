"""
Verification Commands

verify-lemmas runs the seminorm, J₁ and Q-operator sweeps for ψ;
verify-theorem runs the Λ bounds and the modulus-of-continuity reports for
the assembled solution, plus the ψ = 0 corollary run.
"""

import logging
from typing import List

from ..boundary_data import constant, is_zero, lipschitz_seminorm_circle
from ..config import RunConfig, load_run_config
from ..majorants import check_hardy_littlewood
from ..solver import solve
from ..utils.report_builder import build_success_document
from ..utils.validators import DomainError
from ..verification import (
    component_modulus_check,
    hypothesis_reports,
    j1_explicit_check,
    j2_lambda_check,
    j3_lambda_check,
    lemma_sweep_j1,
    lemma_sweep_q_equimodular,
    lemma_sweep_q_lambda,
    lemma_sweep_q_radial,
    lemma_sweep_q_sup,
    modulus_report,
    phi1_equivalence_check,
    poisson_modulus_report,
    q_domination_check,
    q_modulus_report,
)
from . import EXIT_OK, EXIT_VERIFICATION_FAILED, numeric_stage, run_guarded
from .solve import open_output

logger = logging.getLogger(__name__)


def _majorants(config: RunConfig):
    if config.majorants is None:
        raise DomainError("Verification needs a 'majorants' section with omega1 and omega2")
    return config.majorants.build()


def lemma_reports(config: RunConfig) -> List[object]:
    """All lemma-level reports for the configured ψ, φ and majorants."""
    omega1, omega2 = _majorants(config)
    phi, psi, spec = config.phi(), config.psi(), config.quadrature
    settings = config.verification
    sweep = dict(levels=settings.levels, growth_budget=settings.growth_budget, n_pairs=settings.n_pairs)
    seminorm = lipschitz_seminorm_circle(psi, omega2, settings.n_pairs)
    return [
        seminorm.model_copy(update={"quantity": "seminorm_psi"}),
        check_hardy_littlewood(omega2),
        phi1_equivalence_check(phi, omega1, settings.n_pairs),
        lemma_sweep_j1(psi, omega2, spec, **sweep),
        j1_explicit_check(psi, omega2, spec, levels=settings.levels, n_pairs=settings.n_pairs),
        q_domination_check(psi, spec, levels=settings.levels),
        lemma_sweep_q_sup(psi, omega2, spec, **sweep),
        lemma_sweep_q_lambda(psi, omega2, spec, **sweep),
        lemma_sweep_q_radial(psi, omega2, spec, **sweep),
        lemma_sweep_q_equimodular(psi, omega2, spec, **sweep),
    ]


def theorem_reports(config: RunConfig) -> List[object]:
    """Hypotheses, closed-form Λ bounds and modulus reports of the solution."""
    omega1, omega2 = _majorants(config)
    phi, psi, g, spec = config.phi(), config.psi(), config.g(), config.quadrature
    settings = config.verification
    stability = dict(levels=settings.levels, growth_budget=settings.growth_budget, seed=settings.seed)

    reports: List[object] = list(hypothesis_reports(phi, psi, omega1, omega2, settings.n_pairs))
    reports.append(j2_lambda_check(phi, None, spec))
    reports.append(j3_lambda_check(g, None, spec))
    field = solve(phi, psi, g, spec)
    reports.extend(component_modulus_check(field, omega1, levels=settings.levels, seed=settings.seed))
    reports.append(q_modulus_report(psi, omega2, spec, **stability))
    reports.append(poisson_modulus_report(psi, omega2, spec, **stability))
    reports.append(modulus_report(field, omega1, omega2, **stability))
    if settings.include_corollaries and not is_zero(psi):
        corollary = solve(phi, constant(0.0), g, spec)
        reports.append(modulus_report(corollary, omega1, omega2, quantity="modulus_f_psi_zero", **stability))
    return reports


def _emit(reports: List[object], path) -> int:
    document = build_success_document(reports)
    with open_output(path) as handle:
        handle.write(document + "\n")
    failing = [entry["quantity"] if "quantity" in entry else entry.get("condition")
               for entry in (r.to_json_dict() for r in reports) if not entry.get("pass", True)]
    for name in failing:
        logger.error(f"Verification failed: {name}")
    return EXIT_VERIFICATION_FAILED if failing else EXIT_OK


def register_verify_commands(subparsers):
    """
    Register the verify-lemmas and verify-theorem subcommands.

    Args:
        subparsers: argparse sub-parser collection
    """
    for name, builder, help_text in (
        ("verify-lemmas", lemma_reports, "Seminorm, J1 and Q-operator sweeps (JSON)"),
        ("verify-theorem", theorem_reports, "Lambda bounds and modulus reports of the solution (JSON)"),
    ):
        parser = subparsers.add_parser(name, help=help_text)
        parser.add_argument("config", help="Path to the JSON run config")
        parser.add_argument("--output", "-o", default=None, help="JSON path (overrides output.json)")

        def cmd_verify(args, builder=builder, name=name) -> int:
            """Run a verification suite and emit its JSON document.

            Args:
                args: Parsed arguments with config and output

            Returns:
                int: 0 if every report passes, 1 otherwise
            """
            def body() -> int:
                config = load_run_config(args.config)
                _majorants(config)
                logger.info(f"Running {name}")
                with numeric_stage():
                    reports = builder(config)
                return _emit(reports, args.output or config.output.json_path)

            return run_guarded(body, f"Failed to run {name}")

        parser.set_defaults(handler=cmd_verify)
