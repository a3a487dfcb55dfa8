"""Runs the commands of the application."""

##############################################################################
# Backward compatibility.
from __future__ import annotations

##############################################################################
# Python imports.
from dataclasses import dataclass
from fractions import Fraction
from json import dumps
from logging import getLogger
from typing import Final

##############################################################################
# Typing extension imports.
from typing_extensions import assert_never

##############################################################################
# Local imports.
from ..game import (
    Allocation,
    BadDecimal,
    GameError,
    IsrGame,
    Outcome,
    core_segment,
    in_core_oracle,
    is_stable,
    is_subadditive,
    is_submodular,
    parse_decimal,
    shapley,
    shapley_oracle,
    to_tu_game,
)
from ..scenario import (
    ReportFormat,
    Scenario,
    analyse,
    emit_report,
    read_scenario,
    render_core_plot,
)
from ..scenario.report import ProposalSource
from .data import ExitState
from .options import CliConfig

##############################################################################
log = getLogger(__name__)

OUTSIDE_STEP: Final[Fraction] = Fraction(1, 1000)
"""How far past each end of the core the oracle check looks."""


##############################################################################
class NoProposal(GameError):
    """Raised when a proposal is needed but none was given."""

    def __str__(self) -> str:
        return "No proposal to verify; give one in the scenario or with --proposal"


##############################################################################
@dataclass
class BadProposal(GameError):
    """Raised when a proposal on the command line isn't two shares."""

    text: str
    """The proposal as it was given."""

    def __str__(self) -> str:
        return f"--proposal: {self.text!r} is not two comma-separated shares"


##############################################################################
class NoOutput(GameError):
    """Raised when a plot is asked for without saying where to write it."""

    def __str__(self) -> str:
        return "The plot command needs an output path; give one with --output"


##############################################################################
@dataclass(frozen=True)
class CommandResult:
    """The result of running a command."""

    state: ExitState
    """The exit state of the command."""
    output: bytes = b""
    """The bytes the command emits."""

    @property
    def failed(self) -> bool:
        """Did the command fail?"""
        return self.state == ExitState.ERROR


##############################################################################
def _proposal(
    config: CliConfig, scenario: Scenario
) -> tuple[Allocation | None, ProposalSource | None]:
    """Find the proposal for a run, the command line taking precedence.

    Args:
        config: The configuration of the run.
        scenario: The scenario being worked on.

    Returns:
        The proposal and where it came from, or a pair of `None`.

    Raises:
        BadProposal: If the command line doesn't give exactly two shares.
        BadDecimal: If a share given on the command line isn't a decimal.
    """
    if config.proposal_override is not None:
        if len(config.proposal_override) != 2:
            raise BadProposal(",".join(config.proposal_override))
        shares: list[Fraction] = []
        for share in config.proposal_override:
            try:
                shares.append(parse_decimal(share))
            except ValueError:
                raise BadDecimal("--proposal", share) from None
        return Allocation(*shares), "command line"
    if scenario.proposal is not None:
        return scenario.proposal, "scenario"
    return None, None


##############################################################################
_VERIFY_STATES: Final[dict[Outcome, ExitState]] = {
    Outcome.ACCEPT: ExitState.OKAY,
    Outcome.RENEGOTIATE: ExitState.UNFAIR,
    Outcome.REJECT: ExitState.UNSTABLE,
}
"""The exit state for each outcome of a verified proposal."""


##############################################################################
def oracle_checks(
    game: IsrGame, proposal: Allocation | None = None
) -> list[tuple[str, bool]]:
    """Compare the brute-force oracles with the closed-form results.

    Args:
        game: The game to check.
        proposal: An extra allocation to check core membership of.

    Returns:
        The name of each check and whether the two sides agree.
    """
    tu_game = to_tu_game(game)
    segment = core_segment(game)
    point = shapley(game)
    log.debug("Checking the oracles for %s", game)

    # Every feasible two-firm game is both subadditive and submodular.
    checks = [
        ("subadditive", is_subadditive(tu_game).holds),
        ("submodular", is_submodular(tu_game).holds),
        (
            "shapley",
            shapley_oracle(tu_game) == [point.provider_share, point.receiver_share],
        ),
    ]

    lower = segment.provider_lower - OUTSIDE_STEP
    upper = segment.provider_upper + OUTSIDE_STEP
    points = [
        ("alpha", segment.alpha),
        ("beta", segment.beta),
        ("shapley point", point),
        ("below alpha", Allocation(lower, game.t_sigma - lower)),
        ("above beta", Allocation(upper, game.t_sigma - upper)),
    ]
    if proposal is not None:
        points.append(("proposal", proposal))
    for name, allocation in points:
        in_core = in_core_oracle(
            tu_game, [allocation.provider_share, allocation.receiver_share]
        )
        checks.append(
            (f"core {name} {allocation}", in_core.holds == is_stable(game, allocation).stable)
        )
    return checks


##############################################################################
def _oracle_report(checks: list[tuple[str, bool]], format: ReportFormat) -> bytes:
    """Emit the result of the oracle checks."""
    agree = all(agreed for _, agreed in checks)
    if format == "json":
        return (
            dumps(
                {
                    "agree": agree,
                    "checks": [{"agree": agreed, "name": name} for name, agreed in checks],
                },
                sort_keys=True,
                ensure_ascii=False,
            )
            + "\n"
        ).encode("utf-8")
    lines = [f"{name}: {'agree' if agreed else 'DIVERGE'}" for name, agreed in checks]
    lines.append(f"oracle check: {'agree' if agree else 'DIVERGE'}")
    return ("\n".join(lines) + "\n").encode("utf-8")


##############################################################################
def error_output(error: Exception, format: ReportFormat) -> bytes:
    """Describe an error in the format of the run.

    Args:
        error: The error to describe.
        format: The format of the run.

    Returns:
        The description of the error.
    """
    kind = type(error).__name__
    if format == "json":
        return (
            dumps(
                {"error": {"kind": kind, "message": str(error)}},
                sort_keys=True,
                ensure_ascii=False,
            )
            + "\n"
        ).encode("utf-8")
    return f"error: {kind}: {error}\n".encode("utf-8")


##############################################################################
def _run(config: CliConfig) -> CommandResult:
    """Run a command, letting any errors escape."""
    scenario = read_scenario(config.scenario_path)
    game = scenario.game
    proposal, source = _proposal(config, scenario)
    resources = (scenario.provider.resource, scenario.receiver.resource)

    match config.command:
        case "analyze":
            report = analyse(game, proposal, source, scenario.unit, resources)
            return CommandResult(ExitState.OKAY, emit_report(report, config.format))
        case "verify":
            if proposal is None:
                raise NoProposal()
            report = analyse(game, proposal, source, scenario.unit, resources)
            assert report.verdict is not None
            return CommandResult(
                _VERIFY_STATES[report.verdict.outcome],
                emit_report(report, config.format),
            )
        case "plot":
            if config.output_path is None:
                raise NoOutput()
            config.output_path.write_bytes(
                render_core_plot(
                    core_segment(game), shapley(game), game, config.plot_size
                )
            )
            log.debug("Wrote the core plot to %s", config.output_path)
            return CommandResult(ExitState.OKAY)
        case "oracle-check":
            checks = oracle_checks(game, proposal)
            return CommandResult(
                ExitState.OKAY
                if all(agreed for _, agreed in checks)
                else ExitState.ORACLE_DIVERGENCE,
                _oracle_report(checks, config.format),
            )
        case _:
            assert_never(config.command)


##############################################################################
def run(config: CliConfig) -> CommandResult:
    """Run the command a configuration asks for.

    Args:
        config: The configuration of the run.

    Returns:
        The exit state of the command and the bytes it emits. Errors are
        reported as `ExitState.ERROR` with a description of the error as
        the output.
    """
    try:
        return _run(config)
    except (GameError, OSError) as error:
        log.debug("%s failed", config.command, exc_info=error)
        return CommandResult(ExitState.ERROR, error_output(error, config.format))


### commands.py ends here
