"""Brute-force allocation oracles for TU cost games.

These work for any number of players (within enumeration limits) and are
used to cross-check the closed-form results for two-firm games.
"""

##############################################################################
# Python imports.
from fractions import Fraction
from itertools import permutations
from logging import getLogger
from math import factorial
from typing import Final, Sequence

##############################################################################
# Local imports.
from .coalition import Coalition
from .errors import LengthMismatch
from .tu_core import (
    PAIRWISE_LIMIT,
    CoalitionViolation,
    PropertyWitness,
    TUGame,
    ensure_enumerable,
)
from .utils import Util

##############################################################################
log = getLogger(__name__)

##############################################################################
PERMUTATION_LIMIT: Final[int] = 8
"""The most players the permutation Shapley oracle will enumerate."""


##############################################################################
def shapley_oracle(game: TUGame) -> list[Util]:
    """Compute the Shapley value by averaging over every player ordering.

    Args:
        game: The game to compute the Shapley value of.

    Returns:
        One share per player, in index order. Each player's share is its
        marginal cost c(P ∪ {i}) - c(P), where P is the set of players
        ahead of it, averaged over all n! orderings.

    Raises:
        GameTooLarge: If the game has more than 8 players.
    """
    ensure_enumerable(game, PERMUTATION_LIMIT)
    log.debug("Enumerating %d orderings for the Shapley oracle", factorial(game.size))
    totals = [Fraction(0)] * game.size
    for ordering in permutations(range(game.size)):
        ahead = Coalition()
        for player in ordering:
            joined = ahead.with_player(player)
            totals[player] += game.cost(joined) - game.cost(ahead)
            ahead = joined
    orderings = factorial(game.size)
    return [total / orderings for total in totals]


##############################################################################
def in_core_oracle(game: TUGame, allocation: Sequence[Util]) -> PropertyWitness:
    """Check if an allocation is in the core of a game.

    Args:
        game: The game.
        allocation: One share per player, in index order.

    Returns:
        The result of the check. The conditions are tested in the order
        efficiency, non-negativity of each share, then rationality of every
        coalition in bitset order; the counterexample is the first failure.

    Raises:
        LengthMismatch: If there isn't one share per player.
        GameTooLarge: If the game has more than 12 players.
    """
    if len(allocation) != game.size:
        raise LengthMismatch(game.size, len(allocation))
    ensure_enumerable(game, PAIRWISE_LIMIT)
    shares = [Fraction(share) for share in allocation]

    def allocated(coalition: Coalition) -> Util:
        return sum((shares[index] for index in coalition), Fraction(0))

    grand = game.grand_coalition
    if (total := allocated(grand)) != game.cost(grand):
        return PropertyWitness(
            False, CoalitionViolation(grand, "efficiency", total, game.cost(grand))
        )
    for index, share in enumerate(shares):
        if share < 0:
            return PropertyWitness(
                False,
                CoalitionViolation(
                    Coalition.of(index), "non-negativity", share, Fraction(0)
                ),
            )
    for coalition in game.coalitions():
        if (total := allocated(coalition)) > game.cost(coalition):
            return PropertyWitness(
                False,
                CoalitionViolation(
                    coalition, "rationality", total, game.cost(coalition)
                ),
            )
    return PropertyWitness(True)


### oracles.py ends here
