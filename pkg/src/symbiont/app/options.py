"""Command line options for the application."""

##############################################################################
# Backward compatibility.
from __future__ import annotations

##############################################################################
# Python imports.
import sys
from argparse import ArgumentParser
from dataclasses import dataclass
from pathlib import Path
from typing import Final, Literal, NoReturn, Sequence, TypeAlias, cast

##############################################################################
# Local imports.
from .. import __version__
from ..scenario import ReportFormat
from .data import ExitState, load_configuration

##############################################################################
Command: TypeAlias = Literal["analyze", "verify", "plot", "oracle-check"]
"""The commands the application offers."""

COMMANDS: Final[tuple[Command, ...]] = ("analyze", "verify", "plot", "oracle-check")
"""All of the commands, in the order they're documented."""


##############################################################################
@dataclass(frozen=True)
class CliConfig:
    """The configuration of one run of the application."""

    command: Command
    """The command to run."""
    scenario_path: Path
    """The path to the scenario file."""
    proposal_override: tuple[str, ...] | None = None
    """A proposal given on the command line, one string per share."""
    format: ReportFormat = "text"
    """The format of the report."""
    output_path: Path | None = None
    """Where to write the plot."""
    plot_size: int = 480
    """The edge length of the square plot."""
    verbose: bool = False
    """Log debugging information?"""


##############################################################################
def proposal_shares(text: str) -> tuple[str, ...]:
    """Split a proposal given as `<provider share>,<receiver share>`.

    Args:
        text: The text of the proposal.

    Returns:
        The shares, stripped of whitespace. They are checked when the
        command runs.
    """
    return tuple(share.strip() for share in text.split(","))


##############################################################################
class _Parser(ArgumentParser):
    """An argument parser whose usage errors exit as errors of the application."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(ExitState.ERROR, f"error: UsageError: {message}\n")


##############################################################################
def _parser() -> ArgumentParser:
    """Build the command line parser.

    Returns:
        The parser.
    """
    parser = _Parser(
        prog="symbiont",
        description="Cost allocation and decision support for industrial symbiotic relations.",
        epilog=f"v{__version__}",
    )
    parser.add_argument(
        "command",
        choices=COMMANDS,
        help="What to do with the scenario",
    )
    parser.add_argument("scenario", type=Path, help="The scenario file to read")
    parser.add_argument(
        "-p",
        "--proposal",
        type=proposal_shares,
        metavar="A,B",
        help="A proposed split of the operational cost; overrides any proposal in the scenario",
    )
    parser.add_argument(
        "-f",
        "--format",
        choices=("text", "json"),
        help="The format of the report (default from the configuration file, else text)",
    )
    parser.add_argument(
        "-o", "--output", type=Path, help="Where to write the plot (plot command)"
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="Log what is being computed"
    )
    return parser


##############################################################################
def parse_arguments(arguments: Sequence[str] | None = None) -> CliConfig:
    """Parse the command line.

    Args:
        arguments: The arguments to parse; `None` for the process arguments.

    Returns:
        The configuration for the run.

    Notes:
        Exits with `ExitState.ERROR` if the command line can't be parsed.
    """
    parsed = _parser().parse_args(arguments)
    configuration = load_configuration()
    return CliConfig(
        command=parsed.command,
        scenario_path=parsed.scenario,
        proposal_override=parsed.proposal,
        format=cast(ReportFormat, parsed.format or configuration.report_format),
        output_path=parsed.output,
        plot_size=configuration.plot_size,
        verbose=parsed.verbose,
    )


### options.py ends here
