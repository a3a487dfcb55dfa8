"""The command line application for analysing ISR scenarios."""

##############################################################################
# Local imports.
from .commands import (
    BadProposal,
    CommandResult,
    NoOutput,
    NoProposal,
    oracle_checks,
    run,
)
from .options import CliConfig, parse_arguments

##############################################################################
# Exports.
__all__ = [
    "BadProposal",
    "CliConfig",
    "CommandResult",
    "NoOutput",
    "NoProposal",
    "oracle_checks",
    "parse_arguments",
    "run",
]

### __init__.py ends here
