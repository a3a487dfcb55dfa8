"""Provides functions and classes for managing the app's data."""

##############################################################################
# Local imports.
from .config import (
    Configuration,
    configuration_file,
    load_configuration,
    save_configuration,
    update_configuration,
)
from .exit_state import ExitState

##############################################################################
# Exports.
__all__ = [
    "Configuration",
    "configuration_file",
    "ExitState",
    "load_configuration",
    "save_configuration",
    "update_configuration",
]


### __init__.py ends here
