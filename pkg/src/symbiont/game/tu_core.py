"""General cooperative cost games with transferable utility.

A TU cost game is a set of players plus a cost for every coalition of them.
The checks in here are exhaustive: they enumerate coalitions rather than
reason about them, which keeps them simple enough to act as oracles for the
closed-form two-player results elsewhere in the library.
"""

##############################################################################
# Backward compatibility.
from __future__ import annotations

##############################################################################
# Python imports.
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from logging import getLogger
from typing import Callable, Final, Iterator, Literal, Mapping, Sequence, TypeAlias

##############################################################################
# Local imports.
from .coalition import Coalition, PlayerId
from .errors import (
    ForeignCoalition,
    GameTooLarge,
    InvalidPlayers,
    MissingCoalition,
    NegativeCost,
    NonzeroEmptyCost,
    PlayerSetMismatch,
)
from .utils import Util

##############################################################################
log = getLogger(__name__)

##############################################################################
PAIRWISE_LIMIT: Final[int] = 12
"""The most players a pairwise coalition check will enumerate."""


##############################################################################
@dataclass(frozen=True)
class TUGame:
    """A cooperative cost game with transferable utility.

    The cost function is held densely: `costs[m]` is the cost of the
    coalition whose member bitset is `m`, so there is exactly one cost for
    each of the `2**n` coalitions.
    """

    players: tuple[PlayerId, ...]
    """The players of the game, in index order."""
    costs: tuple[Util, ...]
    """The cost of every coalition, indexed by member bitset."""

    def __post_init__(self) -> None:
        indices = tuple(player.index for player in self.players)
        if indices != tuple(range(len(self.players))):
            raise InvalidPlayers(indices)
        if len(self.costs) != 1 << len(self.players):
            raise MissingCoalition(
                f"of a {len(self.players)}-player game "
                f"({len(self.costs)} of {1 << len(self.players)} costs given)"
            )
        if self.costs[0] != 0:
            raise NonzeroEmptyCost(self.costs[0])
        for members, cost in enumerate(self.costs):
            if cost < 0:
                raise NegativeCost(Coalition(members).label(self.players), cost)

    @property
    def size(self) -> int:
        """The number of players in the game."""
        return len(self.players)

    @property
    def grand_coalition(self) -> Coalition:
        """The coalition of all the players."""
        return Coalition.grand(self.size)

    def coalitions(self) -> Iterator[Coalition]:
        """Iterate every coalition of the game in bitset order.

        Yields:
            Each coalition, starting with the empty one.
        """
        return Coalition.all_of(self.size)

    def cost(self, coalition: Coalition) -> Util:
        """Get the cost of a coalition.

        Args:
            coalition: The coalition to get the cost of.

        Returns:
            The cost of the coalition.

        Raises:
            ForeignCoalition: If the coalition names players that aren't in
                the game.
        """
        if coalition.members >= len(self.costs):
            raise ForeignCoalition(coalition.members, self.size)
        return self.costs[coalition.members]

    def label(self, coalition: Coalition) -> str:
        """Get the display label of a coalition of this game.

        Args:
            coalition: The coalition to label.

        Returns:
            The label, made from the player labels.
        """
        return coalition.label(self.players)


##############################################################################
def make_game(players: Sequence[PlayerId], cost: Mapping[Coalition, Util]) -> TUGame:
    """Make a validated game from a cost map.

    Args:
        players: The players of the game.
        cost: The cost of each coalition.

    Returns:
        The game.

    Raises:
        ForeignCoalition: If the map costs a coalition outside the game.
        MissingCoalition: If a coalition has no cost.
        NonzeroEmptyCost: If the empty coalition doesn't cost 0.
        NegativeCost: If any coalition has a negative cost.
        InvalidPlayers: If the players aren't indexed 0..n-1.
    """
    count = 1 << len(players)
    for coalition in cost:
        if coalition.members >= count:
            raise ForeignCoalition(coalition.members, len(players))
    costs: list[Util] = []
    for coalition in Coalition.all_of(len(players)):
        if coalition not in cost:
            raise MissingCoalition(coalition.label(players))
        costs.append(Fraction(cost[coalition]))
    return TUGame(tuple(players), tuple(costs))


##############################################################################
def make_game_from(
    players: Sequence[PlayerId], cost_of: Callable[[Coalition], Util]
) -> TUGame:
    """Make a validated game from a cost function.

    Args:
        players: The players of the game.
        cost_of: Function that gives the cost of a coalition.

    Returns:
        The game.
    """
    return TUGame(
        tuple(players),
        tuple(Fraction(cost_of(coalition)) for coalition in Coalition.all_of(len(players))),
    )


##############################################################################
@dataclass(frozen=True)
class PairViolation:
    """A pair of coalitions for which a pairwise cost inequality fails."""

    first: Coalition
    """The first coalition of the pair (S)."""
    second: Coalition
    """The second coalition of the pair (T)."""
    cost_first: Util
    """c(S)."""
    cost_second: Util
    """c(T)."""
    cost_union: Util
    """c(S ∪ T)."""
    cost_intersection: Util
    """c(S ∩ T)."""

    @classmethod
    def of(cls, game: TUGame, first: Coalition, second: Coalition) -> PairViolation:
        """Capture the costs of a pair of coalitions of a game."""
        return cls(
            first,
            second,
            game.cost(first),
            game.cost(second),
            game.cost(first | second),
            game.cost(first & second),
        )

    @property
    def slack(self) -> Util:
        """c(S) + c(T) - c(S ∪ T) - c(S ∩ T); negative for a real violation."""
        return (
            self.cost_first
            + self.cost_second
            - self.cost_union
            - self.cost_intersection
        )


##############################################################################
CoreCondition: TypeAlias = Literal["efficiency", "non-negativity", "rationality"]
"""The conditions an allocation must meet to be in the core."""


##############################################################################
@dataclass(frozen=True)
class CoalitionViolation:
    """A coalition for which an allocation breaks a core condition."""

    coalition: Coalition
    """The coalition concerned."""
    condition: CoreCondition
    """The condition that was broken."""
    allocated: Util
    """The total allocated to the coalition."""
    bound: Util
    """The bound the allocated total was checked against."""


##############################################################################
@dataclass(frozen=True)
class PropertyWitness:
    """The result of checking a property of a game."""

    holds: bool
    """Does the property hold?"""
    counterexample: PairViolation | CoalitionViolation | None = None
    """The first counterexample found, if the property doesn't hold."""

    def __bool__(self) -> bool:
        return self.holds


##############################################################################
def ensure_enumerable(game: TUGame, limit: int) -> None:
    """Ensure a game is small enough to enumerate.

    Args:
        game: The game to check.
        limit: The most players allowed.

    Raises:
        GameTooLarge: If the game has more than `limit` players.
    """
    if game.size > limit:
        raise GameTooLarge(game.size, limit)


##############################################################################
def _submasks(mask: int) -> Iterator[int]:
    """Iterate the submasks of a bitset in ascending order.

    Args:
        mask: The bitset.

    Yields:
        Every bitset contained in `mask`, starting with 0.
    """
    submask = 0
    while True:
        yield submask
        if submask == mask:
            return
        submask = (submask - mask) & mask


##############################################################################
def is_subadditive(game: TUGame) -> PropertyWitness:
    """Check if a game is subadditive.

    Args:
        game: The game to check.

    Returns:
        The result of the check; the counterexample is the first disjoint
        pair (S, T), in bitset order, with c(S) + c(T) < c(S ∪ T).

    Raises:
        GameTooLarge: If the game has more than 12 players.
    """
    ensure_enumerable(game, PAIRWISE_LIMIT)
    log.debug("Checking subadditivity of a %d-player game", game.size)
    full = game.grand_coalition.members
    costs = game.costs
    for first in range(full + 1):
        for second in _submasks(full ^ first):
            if costs[first] + costs[second] < costs[first | second]:
                return PropertyWitness(
                    False, PairViolation.of(game, Coalition(first), Coalition(second))
                )
    return PropertyWitness(True)


##############################################################################
def _has_diminishing_marginals(game: TUGame) -> bool:
    """Check the local form of submodularity.

    A set function is submodular exactly when adding a player never costs
    more in a larger coalition: c(S ∪ i) + c(S ∪ j) >= c(S ∪ i ∪ j) + c(S)
    for every S and every i, j outside it.

    Args:
        game: The game to check.

    Returns:
        `True` if the local condition holds everywhere.
    """
    costs = game.costs
    for members in range(len(costs)):
        outside = [index for index in range(game.size) if not members >> index & 1]
        for position, first in enumerate(outside):
            with_first = members | 1 << first
            for second in outside[position + 1 :]:
                with_second = members | 1 << second
                if (
                    costs[with_first] + costs[with_second]
                    < costs[with_first | with_second] + costs[members]
                ):
                    return False
    return True


##############################################################################
def is_submodular(game: TUGame) -> PropertyWitness:
    """Check if a game is submodular.

    Args:
        game: The game to check.

    Returns:
        The result of the check; the counterexample is the first pair
        (S, T), in bitset order, with c(S) + c(T) < c(S ∪ T) + c(S ∩ T).

    Raises:
        GameTooLarge: If the game has more than 12 players.
    """
    ensure_enumerable(game, PAIRWISE_LIMIT)
    log.debug("Checking submodularity of a %d-player game", game.size)
    if _has_diminishing_marginals(game):
        return PropertyWitness(True)
    costs = game.costs
    for first, second in product(range(len(costs)), repeat=2):
        if (first & second) in (first, second):
            # Nested pairs always balance.
            continue
        if costs[first] + costs[second] < costs[first | second] + costs[first & second]:
            return PropertyWitness(
                False, PairViolation.of(game, Coalition(first), Coalition(second))
            )
    # The local and pairwise forms are equivalent, so this is unreachable.
    raise AssertionError("Local submodularity failed without a pairwise witness")


##############################################################################
def add_games(first: TUGame, second: TUGame) -> TUGame:
    """Add two games coalition by coalition.

    Args:
        first: The first game.
        second: The second game.

    Returns:
        The game whose cost for every coalition is the sum of the costs in
        the two games.

    Raises:
        PlayerSetMismatch: If the games don't have the same players.
    """
    if first.players != second.players:
        raise PlayerSetMismatch()
    return TUGame(
        first.players,
        tuple(left + right for left, right in zip(first.costs, second.costs)),
    )


##############################################################################
def are_symmetric(game: TUGame, first: int, second: int) -> bool:
    """Are two players interchangeable in a game?

    Args:
        game: The game.
        first: The index of one player.
        second: The index of the other player.

    Returns:
        `True` if c(S ∪ {first}) = c(S ∪ {second}) for every coalition S
        that contains neither.
    """
    pair = Coalition.of(first, second)
    return all(
        game.cost(coalition.with_player(first)) == game.cost(coalition.with_player(second))
        for coalition in game.coalitions()
        if coalition.isdisjoint(pair)
    )


##############################################################################
def is_dummy(game: TUGame, player: int) -> bool:
    """Is a player a dummy in a game?

    Args:
        game: The game.
        player: The index of the player.

    Returns:
        `True` if the player always adds exactly its stand-alone cost to
        any coalition it joins.
    """
    alone = game.cost(Coalition.of(player))
    return all(
        game.cost(coalition.with_player(player)) - game.cost(coalition) == alone
        for coalition in game.coalitions()
        if player not in coalition
    )


### tu_core.py ends here
