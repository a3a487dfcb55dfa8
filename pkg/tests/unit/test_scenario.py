"""Tests for loading and saving scenario documents."""

##############################################################################
# Python imports.
from fractions import Fraction
from json import dumps
from pathlib import Path
from typing import Any

##############################################################################
# Hypothesis imports.
from hypothesis import assume, given

##############################################################################
# Pytest imports.
from pytest import mark, raises

##############################################################################
# Application imports.
from symbiont.game import (
    Allocation,
    BadDecimal,
    InfeasibleIsr,
    IsrGame,
    NegativeCost,
    OperationalBreakdown,
    TraditionalCosts,
    is_decimal,
)
from symbiont.scenario import (
    FirmDetails,
    OperationalConflict,
    ParseError,
    Scenario,
    ScenarioError,
    SchemaVersionUnsupported,
    UnknownField,
    UnwritableValue,
    dump_scenario,
    load_scenario,
    read_scenario,
)

##############################################################################
# Local imports.
from strategies import isr_games

##############################################################################
F = Fraction


##############################################################################
def document(**changes: Any) -> dict[str, Any]:
    """A minimal valid scenario document, with some top-level changes."""
    data: dict[str, Any] = {
        "schema_version": "1",
        "provider": {"label": "A"},
        "receiver": {"label": "B"},
        "traditional": {"discharge": "7", "purchasing": "11"},
        "operational": {"total": "15"},
    }
    data.update(changes)
    return data


##############################################################################
def load(data: Any) -> Scenario:
    return load_scenario(dumps(data).encode("utf-8"))


##############################################################################
def test_read_bundled(scenarios: Path) -> None:
    """The bundled glass powder scenario reads as the worked example."""
    scenario = read_scenario(scenarios / "glass_ceramics.json")
    assert scenario.provider == FirmDetails("Glass manufacturer", "glass powder")
    assert scenario.receiver == FirmDetails("Ceramics manufacturer", "sand")
    assert scenario.traditional == TraditionalCosts(F(7), F(11))
    assert scenario.t_sigma == 15
    assert scenario.proposal is None
    assert scenario.unit == "k€/year"
    game = scenario.game
    assert (game.t_sigma, game.t_bar_provider, game.t_bar_receiver) == (15, 7, 11)
    assert game.provider.label == "Glass manufacturer"


##############################################################################
def test_read_itemised(scenarios: Path) -> None:
    """An itemised operational cost is kept along with the proposal."""
    scenario = read_scenario(scenarios / "glass_ceramics_itemised.json")
    assert scenario.operational == OperationalBreakdown(F(10), F(3), F(2))
    assert scenario.game.breakdown == OperationalBreakdown(F(10), F(3), F(2))
    assert scenario.proposal == Allocation(F(6), F(9))


##############################################################################
def test_infeasible_scenario_loads(scenarios: Path) -> None:
    """A well-formed but infeasible scenario loads; building its game fails."""
    scenario = read_scenario(scenarios / "infeasible.json")
    with raises(InfeasibleIsr):
        _ = scenario.game


##############################################################################
def test_decimal_values() -> None:
    """Costs read as exact decimals."""
    scenario = load(
        document(
            traditional={"discharge": "0.1", "purchasing": "0.2"},
            operational={"total": "0.3"},
        )
    )
    assert scenario.t_sigma == F(3, 10)
    assert scenario.game.traditional_total == scenario.t_sigma


##############################################################################
def test_breakdown_only() -> None:
    """A breakdown without a total stands for its sum."""
    scenario = load(
        document(operational={"treatment": "1", "transportation": "2", "transaction": "3"})
    )
    assert scenario.t_sigma == 6


##############################################################################
def test_operational_conflict() -> None:
    """A breakdown and total that disagree are refused."""
    with raises(OperationalConflict) as error:
        load(
            document(
                operational={
                    "total": "15",
                    "treatment": "10",
                    "transportation": "3",
                    "transaction": "1",
                }
            )
        )
    assert isinstance(error.value, ParseError)
    assert error.value.location == "operational"


##############################################################################
@mark.parametrize(
    "data, name",
    (
        (document(colour="blue"), "colour"),
        (document(provider={"label": "A", "colour": "blue"}), "provider.colour"),
        (
            document(traditional={"discharge": "7", "purchasing": "11", "tax": "1"}),
            "traditional.tax",
        ),
    ),
)
def test_unknown_field(data: dict[str, Any], name: str) -> None:
    """Fields outside the schema are named in the error."""
    with raises(UnknownField) as error:
        load(data)
    assert error.value.name == name


##############################################################################
def test_schema_version() -> None:
    """Only the current schema version is read."""
    with raises(SchemaVersionUnsupported) as error:
        load(document(schema_version="2", colour="blue"))
    assert error.value.version == "2"


##############################################################################
@mark.parametrize(
    "data, location",
    (
        ({key: value for key, value in document().items() if key != "operational"}, "<document>"),
        (document(traditional={"discharge": 7, "purchasing": "11"}), "traditional.discharge"),
        (document(operational={}), "operational"),
        (document(operational={"treatment": "1"}), "operational"),
        ([], "<document>"),
    ),
)
def test_parse_errors(data: Any, location: str) -> None:
    """Structural problems are parse errors that say where they are."""
    with raises(ParseError) as error:
        load(data)
    assert error.value.location == location


##############################################################################
@mark.parametrize("raw", (b"{", b"\xff\xfe", b""))
def test_unreadable(raw: bytes) -> None:
    """Documents that aren't UTF-8 JSON are parse errors."""
    with raises(ParseError):
        load_scenario(raw)


##############################################################################
@mark.parametrize(
    "traditional, error",
    (
        ({"discharge": "7e1", "purchasing": "11"}, BadDecimal),
        ({"discharge": "seven", "purchasing": "11"}, BadDecimal),
        ({"discharge": "-7", "purchasing": "11"}, NegativeCost),
    ),
)
def test_bad_costs(traditional: dict[str, str], error: type[Exception]) -> None:
    """Costs have to be non-negative decimals."""
    with raises(error):
        load(document(traditional=traditional))


##############################################################################
def test_negative_purchasing() -> None:
    """A negative cost names the field it came from."""
    with raises(NegativeCost) as error:
        load(document(traditional={"discharge": "7", "purchasing": "-1"}))
    assert error.value.where == "traditional.purchasing"


##############################################################################
def test_breakdown_against_short_total() -> None:
    """A breakdown of 10, 3 and 2 can't have a total of 14."""
    with raises(OperationalConflict):
        load(
            document(
                operational={
                    "total": "14",
                    "treatment": "10",
                    "transportation": "3",
                    "transaction": "2",
                }
            )
        )


##############################################################################
def test_bad_cost_location() -> None:
    """A bad cost names the field it came from."""
    with raises(BadDecimal) as error:
        load(document(operational={"total": "1,5"}))
    assert error.value.field == "operational.total"


##############################################################################
def test_negative_proposal_share() -> None:
    """A proposal may hold a negative share; judging it is another matter."""
    scenario = load(document(proposal={"provider_share": "-1", "receiver_share": "16"}))
    assert scenario.proposal == Allocation(F(-1), F(16))


##############################################################################
def test_errors_are_game_errors() -> None:
    """Scenario errors can be caught with the library's base error."""
    with raises(ScenarioError):
        load(document(colour="blue"))


##############################################################################
def test_dump_round_trip(scenarios: Path) -> None:
    """A dumped scenario reloads to the same scenario."""
    for path in sorted(scenarios.glob("*.json")):
        scenario = read_scenario(path)
        assert load_scenario(dump_scenario(scenario)) == scenario


##############################################################################
@given(isr_games())
def test_dump_keeps_exact_values(game: IsrGame) -> None:
    """Costs survive being written out, however many places they need."""
    scenario = Scenario(
        provider=FirmDetails("A"),
        receiver=FirmDetails("B"),
        traditional=TraditionalCosts(game.t_bar_provider, game.t_bar_receiver),
        operational=game.t_sigma,
    )
    # Only terminating decimals can be written as a document.
    assume(
        all(
            is_decimal(value)
            for value in (game.t_bar_provider, game.t_bar_receiver, game.t_sigma)
        )
    )
    assert load_scenario(dump_scenario(scenario)).game == game



##############################################################################
@mark.parametrize(
    "operational, proposal, location",
    (
        (F(1, 3), None, "operational.total"),
        (
            OperationalBreakdown(F(10), F(3), F(2, 3)),
            None,
            "operational.transaction",
        ),
        (F(15), Allocation(F(17, 3), F(28, 3)), "proposal.provider_share"),
    ),
)
def test_dump_refuses_unwritable_values(
    operational: Fraction | OperationalBreakdown,
    proposal: Allocation | None,
    location: str,
) -> None:
    """A value with no exact decimal form can't be written to a document."""
    scenario = Scenario(
        provider=FirmDetails("A"),
        receiver=FirmDetails("B"),
        traditional=TraditionalCosts(F(7), F(11)),
        operational=operational,
        proposal=proposal,
    )
    with raises(UnwritableValue) as error:
        dump_scenario(scenario)
    assert error.value.location == location
    assert isinstance(error.value, ScenarioError)


### test_scenario.py ends here
