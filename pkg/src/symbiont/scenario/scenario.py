"""Provides a class for holding an ISR scenario, and loading and saving it.

A scenario file is a JSON document describing exactly one bilateral ISR:

```json
{
    "schema_version": "1",
    "unit": "thousand EUR",
    "provider": {"label": "A: glass manufacturer", "resource_out": "glass powder"},
    "receiver": {"label": "B: ceramics manufacturer", "resource_in": "sand"},
    "traditional": {"discharge": "7", "purchasing": "11"},
    "operational": {"total": "15"},
    "proposal": {"provider_share": "5.5", "receiver_share": "9.5"}
}
```

Every cost is a decimal string so that it can be read exactly. The
operational cost can be given as a `total`, as an itemised `treatment`,
`transportation` and `transaction` breakdown, or as both, in which case the
two have to agree.
"""

##############################################################################
# Backward compatibility.
from __future__ import annotations

##############################################################################
# Python imports.
from dataclasses import dataclass
from json import JSONDecodeError, dumps, loads
from logging import getLogger
from pathlib import Path
from typing import Any, Final

##############################################################################
# jsonschema imports.
from jsonschema import Draft7Validator
from jsonschema.exceptions import ValidationError, best_match

##############################################################################
# Local imports.
from ..game import (
    Allocation,
    BadDecimal,
    FirmRole,
    GameError,
    IsrGame,
    NegativeCost,
    OperationalBreakdown,
    TraditionalCosts,
    Util,
    build_isr_game,
    is_decimal,
    parse_decimal,
    util_text,
)

##############################################################################
log = getLogger(__name__)

##############################################################################
SCHEMA_VERSION: Final[str] = "1"
"""The version of the scenario schema this code reads and writes."""


##############################################################################
class ScenarioError(GameError):
    """Base class for errors in scenario documents."""


##############################################################################
@dataclass
class ParseError(ScenarioError):
    """A scenario document could not be parsed."""

    location: str
    """Where in the document the problem is."""
    reason: str
    """What the problem is."""

    def __str__(self) -> str:
        return f"{self.location}: {self.reason}"


##############################################################################
class OperationalConflict(ParseError):
    """The operational total and breakdown of a scenario disagree."""


##############################################################################
@dataclass
class UnknownField(ScenarioError):
    """A scenario document holds a field that isn't part of the schema."""

    name: str
    """The name of the unknown field."""

    def __str__(self) -> str:
        return f"Unknown field {self.name!r}"


##############################################################################
@dataclass
class UnwritableValue(ScenarioError):
    """A scenario holds a value that a document can't hold exactly."""

    location: str
    """Where in the document the value would go."""
    value: Util
    """The value."""

    def __str__(self) -> str:
        return (
            f"{self.location}: {self.value.numerator}/{self.value.denominator} "
            "has no exact decimal form"
        )


##############################################################################
@dataclass
class SchemaVersionUnsupported(ScenarioError):
    """A scenario document is written for an unsupported schema version."""

    version: str
    """The version the document claims."""

    def __str__(self) -> str:
        return (
            f"Scenario schema version {self.version!r} is not supported "
            f"(expected {SCHEMA_VERSION!r})"
        )


##############################################################################
_DECIMAL: Final[dict[str, Any]] = {"type": "string"}
"""Schema for a decimal string; the grammar itself is checked when parsing."""

_SCHEMA: Final[dict[str, Any]] = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "additionalProperties": False,
    "required": ["schema_version", "provider", "receiver", "traditional", "operational"],
    "properties": {
        "schema_version": {"type": "string"},
        "unit": {"type": "string"},
        "description": {"type": "string"},
        "provider": {
            "type": "object",
            "additionalProperties": False,
            "required": ["label"],
            "properties": {
                "label": {"type": "string"},
                "resource_out": {"type": "string"},
            },
        },
        "receiver": {
            "type": "object",
            "additionalProperties": False,
            "required": ["label"],
            "properties": {
                "label": {"type": "string"},
                "resource_in": {"type": "string"},
            },
        },
        "traditional": {
            "type": "object",
            "additionalProperties": False,
            "required": ["discharge", "purchasing"],
            "properties": {"discharge": _DECIMAL, "purchasing": _DECIMAL},
        },
        "operational": {
            "type": "object",
            "additionalProperties": False,
            "minProperties": 1,
            "properties": {
                "total": _DECIMAL,
                "treatment": _DECIMAL,
                "transportation": _DECIMAL,
                "transaction": _DECIMAL,
            },
            "dependencies": {
                "treatment": ["transportation", "transaction"],
                "transportation": ["treatment", "transaction"],
                "transaction": ["treatment", "transportation"],
            },
        },
        "proposal": {
            "type": "object",
            "additionalProperties": False,
            "required": ["provider_share", "receiver_share"],
            "properties": {"provider_share": _DECIMAL, "receiver_share": _DECIMAL},
        },
    },
}
"""The JSON schema of a scenario document."""

_BREAKDOWN: Final[tuple[str, ...]] = ("treatment", "transportation", "transaction")
"""The names of the components of an operational breakdown."""


##############################################################################
@dataclass(frozen=True)
class FirmDetails:
    """The description of one firm of a scenario."""

    label: str
    """The display label for the firm."""
    resource: str = ""
    """The resource the firm gives (provider) or takes (receiver)."""


##############################################################################
@dataclass(frozen=True)
class Scenario:
    """A validated ISR scenario."""

    provider: FirmDetails
    """The provider firm."""
    receiver: FirmDetails
    """The receiver firm."""
    traditional: TraditionalCosts
    """The traditional costs of the firms."""
    operational: OperationalBreakdown | Util
    """The operational cost, itemised if the document itemised it."""
    proposal: Allocation | None = None
    """The proposed allocation, if there is one."""
    unit: str | None = None
    """The free-text unit of the costs; never interpreted."""
    description: str | None = None
    """A free-text description of the scenario."""
    schema_version: str = SCHEMA_VERSION
    """The schema version of the document."""

    @property
    def t_sigma(self) -> Util:
        """The total operational cost."""
        return (
            self.operational.total
            if isinstance(self.operational, OperationalBreakdown)
            else self.operational
        )

    @property
    def game(self) -> IsrGame:
        """The ISR game the scenario describes.

        Raises:
            InfeasibleIsr: If the operational cost exceeds the traditional
                costs.
        """
        return build_isr_game(
            FirmRole.provider(self.provider.label),
            FirmRole.receiver(self.receiver.label),
            self.traditional,
            self.operational,
        )

    @staticmethod
    def from_json(data: dict[str, Any]) -> Scenario:
        """Create a `Scenario` from validated JSON-sourced data.

        Args:
            data: The data to create the object from.

        Returns:
            A fresh `Scenario` instance.

        Raises:
            BadDecimal: If a cost isn't a decimal number.
            NegativeCost: If a cost is negative.
            OperationalConflict: If the operational total and breakdown
                disagree.
        """

        def cost(section: str, name: str, allow_negative: bool = False) -> Util:
            text = data[section][name]
            try:
                value = parse_decimal(text)
            except ValueError:
                raise BadDecimal(f"{section}.{name}", text) from None
            if value < 0 and not allow_negative:
                raise NegativeCost(f"{section}.{name}", value)
            return value

        operational: OperationalBreakdown | Util
        if "treatment" in data["operational"]:
            operational = OperationalBreakdown(
                *(cost("operational", name) for name in _BREAKDOWN)
            )
            if "total" in data["operational"] and (
                (total := cost("operational", "total")) != operational.total
            ):
                raise OperationalConflict(
                    "operational",
                    f"breakdown sums to {util_text(operational.total)} "
                    f"but total is {util_text(total)}",
                )
        else:
            operational = cost("operational", "total")
        return Scenario(
            provider=FirmDetails(
                data["provider"]["label"], data["provider"].get("resource_out", "")
            ),
            receiver=FirmDetails(
                data["receiver"]["label"], data["receiver"].get("resource_in", "")
            ),
            traditional=TraditionalCosts(
                discharge=cost("traditional", "discharge"),
                purchasing=cost("traditional", "purchasing"),
            ),
            operational=operational,
            proposal=(
                Allocation(
                    cost("proposal", "provider_share", allow_negative=True),
                    cost("proposal", "receiver_share", allow_negative=True),
                )
                if "proposal" in data
                else None
            ),
            unit=data.get("unit"),
            description=data.get("description"),
            schema_version=data["schema_version"],
        )

    @property
    def as_json(self) -> dict[str, Any]:
        """The scenario as a JSON-friendly dictionary.

        Raises:
            UnwritableValue: If a value has no terminating decimal form.
        """

        def text(section: str, name: str, value: Util) -> str:
            if not is_decimal(value):
                raise UnwritableValue(f"{section}.{name}", value)
            return util_text(value, max_places=None)

        data: dict[str, Any] = {"schema_version": self.schema_version}
        if self.unit is not None:
            data["unit"] = self.unit
        if self.description is not None:
            data["description"] = self.description
        data["provider"] = {"label": self.provider.label}
        if self.provider.resource:
            data["provider"]["resource_out"] = self.provider.resource
        data["receiver"] = {"label": self.receiver.label}
        if self.receiver.resource:
            data["receiver"]["resource_in"] = self.receiver.resource
        data["traditional"] = {
            "discharge": text("traditional", "discharge", self.traditional.discharge),
            "purchasing": text("traditional", "purchasing", self.traditional.purchasing),
        }
        data["operational"] = (
            {
                name: text("operational", name, getattr(self.operational, name))
                for name in _BREAKDOWN
            }
            if isinstance(self.operational, OperationalBreakdown)
            else {"total": text("operational", "total", self.operational)}
        )
        if self.proposal is not None:
            data["proposal"] = {
                "provider_share": text(
                    "proposal", "provider_share", self.proposal.provider_share
                ),
                "receiver_share": text(
                    "proposal", "receiver_share", self.proposal.receiver_share
                ),
            }
        return data


##############################################################################
def _location(error: ValidationError) -> str:
    """Get the dotted location of a validation error."""
    return ".".join(str(part) for part in error.absolute_path) or "<document>"


##############################################################################
def _validate(data: Any) -> None:
    """Validate scenario data against the schema.

    Args:
        data: The JSON-sourced data.

    Raises:
        SchemaVersionUnsupported: If the document is for another version.
        UnknownField: If the document holds a field not in the schema.
        ParseError: For any other problem with the structure.
    """
    if isinstance(data, dict) and "schema_version" in data:
        if data["schema_version"] != SCHEMA_VERSION:
            raise SchemaVersionUnsupported(str(data["schema_version"]))
    errors = sorted(
        Draft7Validator(_SCHEMA).iter_errors(data),
        key=lambda error: [str(part) for part in error.absolute_path],
    )
    for error in errors:
        if error.validator == "additionalProperties":
            unexpected = sorted(
                set(error.instance) - set(error.schema.get("properties", {}))
            )
            prefix = _location(error) if error.absolute_path else ""
            raise UnknownField(f"{prefix}.{unexpected[0]}" if prefix else unexpected[0])
    if (error := best_match(errors)) is not None:
        raise ParseError(_location(error), error.message)


##############################################################################
def load_scenario(document: bytes) -> Scenario:
    """Load a scenario from a JSON document.

    Args:
        document: The raw bytes of the document.

    Returns:
        The validated scenario.

    Raises:
        ParseError: If the document isn't valid JSON or has the wrong shape.
        UnknownField: If the document holds a field not in the schema.
        SchemaVersionUnsupported: If the document is for another version.
        BadDecimal: If a cost isn't a decimal number.
        NegativeCost: If a cost is negative.
    """
    try:
        data = loads(document.decode("utf-8"))
    except UnicodeDecodeError as error:
        raise ParseError(f"byte {error.start}", "document is not UTF-8") from None
    except JSONDecodeError as error:
        raise ParseError(f"line {error.lineno} column {error.colno}", error.msg) from None
    _validate(data)
    scenario = Scenario.from_json(data)
    log.debug("Loaded scenario %r -> %r", scenario.provider.label, scenario.receiver.label)
    return scenario


##############################################################################
def read_scenario(path: Path) -> Scenario:
    """Read a scenario from a file.

    Args:
        path: The path to the scenario file.

    Returns:
        The validated scenario.
    """
    return load_scenario(path.read_bytes())


##############################################################################
def dump_scenario(scenario: Scenario) -> bytes:
    """Write a scenario as a JSON document.

    Args:
        scenario: The scenario to write.

    Returns:
        The document, as UTF-8 bytes.

    Raises:
        UnwritableValue: If a value has no terminating decimal form.

    Notes:
        Costs are written as decimals with as many places as they need, so
        the document reloads to exactly the same values.
    """
    return (dumps(scenario.as_json, indent=4, ensure_ascii=False) + "\n").encode("utf-8")


### scenario.py ends here
