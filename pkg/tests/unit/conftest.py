"""Shared fixtures for the unit tests."""

##############################################################################
# Python imports.
from fractions import Fraction
from pathlib import Path
from typing import Iterator

##############################################################################
# Pytest imports.
from pytest import MonkeyPatch, fixture

##############################################################################
# Application imports.
from symbiont.app.data import load_configuration
from symbiont.game import FirmRole, IsrGame, TraditionalCosts, build_isr_game

##############################################################################
SCENARIOS = Path(__file__).parents[2] / "scenarios"
"""The directory of bundled scenario files."""


##############################################################################
@fixture(autouse=True)
def isolated_configuration(tmp_path: Path, monkeypatch: MonkeyPatch) -> Iterator[Path]:
    """Keep every test away from the real user configuration."""
    config_home = tmp_path / "xdg-config"
    monkeypatch.setenv("XDG_CONFIG_HOME", str(config_home))
    load_configuration.cache_clear()
    yield config_home / "symbiont"
    load_configuration.cache_clear()


##############################################################################
@fixture
def glass_ceramics() -> IsrGame:
    """The glass powder exchange: T_A = 7, T_B = 11, T = 15."""
    return build_isr_game(
        FirmRole.provider("Glass manufacturer"),
        FirmRole.receiver("Ceramics manufacturer"),
        TraditionalCosts(discharge=Fraction(7), purchasing=Fraction(11)),
        Fraction(15),
    )


##############################################################################
@fixture
def scenarios() -> Path:
    """The directory of bundled scenario files."""
    return SCENARIOS


### conftest.py ends here
