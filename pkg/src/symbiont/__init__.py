"""Symbiont -- cost allocation and decision support for industrial symbiotic relations."""

##############################################################################
# Python imports.
from importlib.metadata import version

##############################################################################
# Main app information.
__author__ = "Symbiont developers"
__copyright__ = "Copyright 2025, Symbiont developers"
__credits__ = ["Symbiont developers"]
__maintainer__ = "Symbiont developers"
__version__ = version("symbiont")
__licence__ = "GPLv3+"

### __init__.py ends here
