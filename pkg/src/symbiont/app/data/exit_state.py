"""Defines exit states for the application."""

##############################################################################
# Python imports.
from enum import IntEnum


##############################################################################
class ExitState(IntEnum):
    """Exit state for the application."""

    OKAY = 0
    """The command worked; for `verify`, the proposal is stable and fair."""

    ERROR = 1
    """The command failed: a scenario couldn't be read, parsed or built."""

    UNFAIR = 2
    """The proposal is stable but not fair."""

    UNSTABLE = 3
    """The proposal is not stable."""

    ORACLE_DIVERGENCE = 4
    """The brute-force oracles disagree with the closed-form results."""


### exit_state.py ends here
