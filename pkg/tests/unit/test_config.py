"""Tests for the user configuration."""

##############################################################################
# Python imports.
from json import loads
from pathlib import Path

##############################################################################
# Pytest imports.
from pytest import LogCaptureFixture, mark

##############################################################################
# Application imports.
from symbiont.app.data import (
    Configuration,
    configuration_file,
    load_configuration,
    save_configuration,
    update_configuration,
)


##############################################################################
def test_defaults_are_saved(isolated_configuration: Path) -> None:
    """A missing configuration is created with the defaults."""
    configuration = load_configuration()
    assert configuration == Configuration()
    assert configuration_file() == isolated_configuration / "configuration.json"
    assert loads(configuration_file().read_text(encoding="utf-8")) == {
        "default_format": "text",
        "plot_size": 480,
    }


##############################################################################
def test_saved_settings_are_used() -> None:
    """Saved settings are what gets loaded next."""
    save_configuration(Configuration(default_format="json", plot_size=320))
    assert load_configuration().report_format == "json"
    assert load_configuration().plot_size == 320


##############################################################################
def test_unknown_format_falls_back() -> None:
    """A format nobody knows means text."""
    assert Configuration(default_format="yaml").report_format == "text"


##############################################################################
def test_unknown_settings_are_ignored() -> None:
    """Settings the application doesn't know about don't stop it loading."""
    load_configuration()
    configuration_file().write_text('{"plot_size": 640, "theme": "dark"}', encoding="utf-8")
    load_configuration.cache_clear()
    assert load_configuration() == Configuration(plot_size=640)


##############################################################################
def test_unreadable_configuration(caplog: LogCaptureFixture) -> None:
    """A broken configuration file is reported and the defaults used."""
    load_configuration()
    configuration_file().write_text("{not json", encoding="utf-8")
    load_configuration.cache_clear()
    assert load_configuration() == Configuration()
    assert "unreadable configuration" in caplog.text


##############################################################################
def test_updated_configuration_is_saved() -> None:
    """Changes made while updating are kept."""
    with update_configuration() as configuration:
        configuration.plot_size = 200
    load_configuration.cache_clear()
    assert load_configuration().plot_size == 200
    assert loads(configuration_file().read_text(encoding="utf-8"))["plot_size"] == 200



##############################################################################
@mark.parametrize(
    "stored",
    (
        '{"plot_size": "big"}',
        '{"plot_size": 0}',
        '{"plot_size": -480}',
        '{"plot_size": true}',
        '{"plot_size": 12.5}',
        '{"default_format": 7}',
    ),
)
def test_unusable_settings_are_ignored(stored: str, caplog: LogCaptureFixture) -> None:
    """A setting of the wrong kind is reported and its default used."""
    load_configuration()
    configuration_file().write_text(stored, encoding="utf-8")
    load_configuration.cache_clear()
    assert load_configuration() == Configuration()
    assert "Ignoring unusable" in caplog.text


##############################################################################
def test_usable_settings_survive_unusable_neighbours() -> None:
    """One bad setting doesn't throw away the good ones."""
    load_configuration()
    configuration_file().write_text(
        '{"default_format": "json", "plot_size": "big"}', encoding="utf-8"
    )
    load_configuration.cache_clear()
    assert load_configuration() == Configuration(default_format="json")


### test_config.py ends here
