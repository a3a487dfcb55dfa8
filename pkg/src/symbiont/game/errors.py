"""The errors raised by the game library."""

##############################################################################
# Python imports.
from dataclasses import dataclass
from fractions import Fraction


##############################################################################
class GameError(Exception):
    """Base class for all errors raised by Symbiont."""


##############################################################################
@dataclass
class MissingCoalition(GameError):
    """A cost function does not give a cost for a coalition."""

    coalition: str
    """The display form of the coalition that has no cost."""

    def __str__(self) -> str:
        return f"No cost given for coalition {self.coalition}"


##############################################################################
@dataclass
class ForeignCoalition(GameError):
    """A coalition names players that are not part of the game."""

    members: int
    """The member bitset of the coalition."""
    players: int
    """The number of players in the game."""

    def __str__(self) -> str:
        return (
            f"Coalition with members {self.members:#b} does not belong to "
            f"a game of {self.players} players"
        )


##############################################################################
@dataclass
class NegativeCost(GameError):
    """A cost that must be non-negative is negative."""

    where: str
    """Where the cost was found."""
    value: Fraction
    """The offending value."""

    def __str__(self) -> str:
        return f"Cost for {self.where} is negative ({self.value})"


##############################################################################
@dataclass
class NonzeroEmptyCost(GameError):
    """The empty coalition was given a cost other than zero."""

    value: Fraction
    """The cost that was given."""

    def __str__(self) -> str:
        return f"The empty coalition must cost 0, not {self.value}"


##############################################################################
@dataclass
class InvalidPlayers(GameError):
    """The players of a game are not indexed 0..n-1 without gaps."""

    indices: tuple[int, ...]
    """The indices that were given."""

    def __str__(self) -> str:
        return f"Player indices must run 0..n-1 in order, got {list(self.indices)}"


##############################################################################
@dataclass
class GameTooLarge(GameError):
    """A game has too many players for an exhaustive check."""

    players: int
    """The number of players in the game."""
    limit: int
    """The largest number of players the check will accept."""

    def __str__(self) -> str:
        return (
            f"Game has {self.players} players; this check enumerates and "
            f"accepts at most {self.limit}"
        )


##############################################################################
class PlayerSetMismatch(GameError):
    """Two games that need the same players have different players."""

    def __str__(self) -> str:
        return "The games do not share the same player set"


##############################################################################
@dataclass
class LengthMismatch(GameError):
    """An allocation does not have one share per player."""

    expected: int
    """The number of players."""
    received: int
    """The number of shares given."""

    def __str__(self) -> str:
        return f"Expected {self.expected} shares, got {self.received}"


##############################################################################
@dataclass
class RoleMismatch(GameError):
    """A firm was given in a role that doesn't match its kind."""

    label: str
    """The label of the firm."""
    expected: str
    """The role the firm should have had."""

    def __str__(self) -> str:
        return f"Firm {self.label!r} must be the {self.expected}"


##############################################################################
@dataclass
class InconsistentBreakdown(GameError):
    """An operational breakdown does not add up to its total."""

    breakdown_total: Fraction
    """The sum of the breakdown components."""
    t_sigma: Fraction
    """The total operational cost it was meant to explain."""

    def __str__(self) -> str:
        return (
            f"Operational breakdown sums to {self.breakdown_total}, "
            f"but the total operational cost is {self.t_sigma}"
        )


##############################################################################
@dataclass
class InfeasibleIsr(GameError):
    """The operational cost of an ISR exceeds the traditional costs it replaces."""

    t_sigma: Fraction
    """The total operational cost T(σ)."""
    sum_traditional: Fraction
    """The sum of the traditional costs T_A(σ̄) + T_B(σ̄)."""

    def __str__(self) -> str:
        return (
            f"Infeasible ISR: T(σ) = {self.t_sigma} > T_A(σ̄) + T_B(σ̄) = "
            f"{self.sum_traditional}; an ISR is only feasible when "
            "T(σ) ≤ T_A(σ̄) + T_B(σ̄)"
        )


##############################################################################
@dataclass
class BadDecimal(GameError):
    """Text that should hold an exact decimal number doesn't."""

    field: str
    """The name of the field the text came from."""
    text: str
    """The text that failed to parse."""

    def __str__(self) -> str:
        return f"{self.field}: {self.text!r} is not a decimal number"


##############################################################################
@dataclass
class MismatchedInputs(GameError):
    """Values that should describe the same game don't."""

    reason: str
    """What doesn't match."""

    def __str__(self) -> str:
        return self.reason


### errors.py ends here
