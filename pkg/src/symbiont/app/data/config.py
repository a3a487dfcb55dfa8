"""Code relating to the application's configuration file."""

##############################################################################
# Python imports.
from contextlib import contextmanager
from dataclasses import asdict, dataclass, fields
from functools import lru_cache
from json import JSONDecodeError, dumps, loads
from logging import getLogger
from pathlib import Path
from typing import Any, Callable, Final, Iterator

##############################################################################
# XDG imports.
from xdg_base_dirs import xdg_config_home

##############################################################################
log = getLogger(__name__)


##############################################################################
@dataclass
class Configuration:
    """The configuration data for the application."""

    default_format: str = "text"
    """The report format to use when none is given on the command line."""

    plot_size: int = 480
    """The edge length of the square core plot, in viewbox units."""

    @property
    def report_format(self) -> str:
        """The default report format, falling back to text if it's unknown."""
        return self.default_format if self.default_format in ("text", "json") else "text"


##############################################################################
def configuration_file() -> Path:
    """The path to the file that holds the application configuration.

    Returns:
        `configuration.json` in the `symbiont` directory under
        `$XDG_CONFIG_HOME`.

    Note:
        The directory is created if it doesn't exist yet.
    """
    (directory := xdg_config_home() / "symbiont").mkdir(parents=True, exist_ok=True)
    return directory / "configuration.json"


##############################################################################
def save_configuration(configuration: Configuration) -> Configuration:
    """Save the given configuration.

    Args:
        configuration: The configuration to store.

    Returns:
        The configuration as it now loads.
    """
    load_configuration.cache_clear()
    configuration_file().write_text(
        dumps(asdict(configuration), indent=4), encoding="utf-8"
    )
    return load_configuration()


##############################################################################
_VALID_SETTING: Final[dict[str, Callable[[Any], bool]]] = {
    "default_format": lambda value: isinstance(value, str),
    "plot_size": lambda value: (
        isinstance(value, int) and not isinstance(value, bool) and value > 0
    ),
}
"""How to tell a usable value for each setting."""


##############################################################################
def _known_settings(data: Any) -> dict[str, Any]:
    """Keep only the usable settings a `Configuration` knows about.

    Args:
        data: The data loaded from the configuration file.

    Returns:
        The known settings with usable values. Anything else is left to
        its default.
    """
    if not isinstance(data, dict):
        return {}
    settings: dict[str, Any] = {}
    for setting in fields(Configuration):
        if setting.name not in data:
            continue
        if _VALID_SETTING[setting.name](value := data[setting.name]):
            settings[setting.name] = value
        else:
            log.warning("Ignoring unusable %s setting %r", setting.name, value)
    return settings


##############################################################################
@lru_cache(maxsize=None)
def load_configuration() -> Configuration:
    """Load the configuration.

    Returns:
        The configuration.

    Note:
        A missing configuration file is created holding the defaults. An
        unreadable one is left alone, logged, and the defaults used. The
        result is cached until the configuration is next saved.
    """
    source = configuration_file()
    if not source.exists():
        return save_configuration(Configuration())
    try:
        return Configuration(**_known_settings(loads(source.read_text(encoding="utf-8"))))
    except JSONDecodeError:
        log.warning("Ignoring unreadable configuration file %s", source)
        return Configuration()


##############################################################################
@contextmanager
def update_configuration() -> Iterator[Configuration]:
    """Load the configuration for changing, saving it afterwards.

    Example:
        ```python
        with update_configuration() as configuration:
            configuration.default_format = "json"
        ```
    """
    configuration = load_configuration()
    try:
        yield configuration
    finally:
        save_configuration(configuration)


### config.py ends here
