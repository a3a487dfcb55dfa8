"""Generators of games for the property tests.

The hypothesis strategies are for tests that want shrinking; the seeded
generators are for the fixed-size suites, which always check the same games.
"""

##############################################################################
# Python imports.
from fractions import Fraction
from random import Random

##############################################################################
# Hypothesis imports.
from hypothesis import strategies as st

##############################################################################
# Application imports.
from symbiont.game import (
    Allocation,
    Coalition,
    FirmRole,
    IsrGame,
    PlayerId,
    TraditionalCosts,
    TUGame,
    build_isr_game,
    make_game_from,
)

##############################################################################
DENOMINATORS = (1, 2, 4, 5, 10, 100)
"""Denominators of the decimal costs that get generated."""


##############################################################################
def costs(max_value: int = 1_000) -> st.SearchStrategy[Fraction]:
    """Non-negative decimal costs."""
    return st.builds(
        Fraction,
        st.integers(min_value=0, max_value=max_value),
        st.sampled_from(DENOMINATORS),
    )


##############################################################################
def shares(max_value: int = 1_000) -> st.SearchStrategy[Fraction]:
    """Decimal shares, which may be negative."""
    return st.builds(
        Fraction,
        st.integers(min_value=-max_value, max_value=max_value),
        st.sampled_from(DENOMINATORS),
    )


##############################################################################
@st.composite
def isr_games(draw: st.DrawFn) -> IsrGame:
    """Feasible ISR games with decimal costs."""
    discharge = draw(costs())
    purchasing = draw(costs())
    fraction = draw(st.fractions(min_value=0, max_value=1, max_denominator=20))
    return build_isr_game(
        FirmRole.provider(),
        FirmRole.receiver(),
        TraditionalCosts(discharge, purchasing),
        (discharge + purchasing) * fraction,
    )


##############################################################################
@st.composite
def allocations(draw: st.DrawFn) -> Allocation:
    """Allocations that may or may not be stable."""
    return Allocation(draw(shares()), draw(shares()))


##############################################################################
def players(count: int) -> tuple[PlayerId, ...]:
    """Players labelled P0, P1, ..."""
    return tuple(PlayerId(index, f"P{index}") for index in range(count))


##############################################################################
@st.composite
def tu_games(draw: st.DrawFn, min_players: int = 1, max_players: int = 4) -> TUGame:
    """Arbitrary TU cost games of up to `max_players` players."""
    count = draw(st.integers(min_value=min_players, max_value=max_players))
    tail = draw(
        st.lists(costs(100), min_size=(1 << count) - 1, max_size=(1 << count) - 1)
    )
    return TUGame(players(count), (Fraction(0), *tail))


##############################################################################
def random_cost(rng: Random, max_value: int = 1_000) -> Fraction:
    """A random non-negative decimal cost."""
    return Fraction(rng.randint(0, max_value), rng.choice(DENOMINATORS))


##############################################################################
def random_isr_game(rng: Random) -> IsrGame:
    """A random feasible ISR game.

    A quarter of the games have an operational cost well below the gap
    between the traditional costs, so that the non-negativity clamp gets
    exercised as often as the open segment.
    """
    discharge = random_cost(rng)
    purchasing = random_cost(rng)
    total = discharge + purchasing
    if rng.random() < 0.25:
        t_sigma = abs(discharge - purchasing) * Fraction(rng.randint(0, 20), 20)
    else:
        t_sigma = total * Fraction(rng.randint(0, 100), 100)
    return build_isr_game(
        FirmRole.provider(),
        FirmRole.receiver(),
        TraditionalCosts(discharge, purchasing),
        t_sigma,
    )


##############################################################################
def random_tu_game(rng: Random, count: int) -> TUGame:
    """A random TU cost game with `count` players."""
    return TUGame(
        players(count),
        (Fraction(0), *(random_cost(rng, 100) for _ in range((1 << count) - 1))),
    )


##############################################################################
def _concave_cost(increments: list[Fraction]) -> list[Fraction]:
    """Costs by size whose increments never grow."""
    costs = [Fraction(0)]
    for increment in sorted(increments, reverse=True):
        costs.append(costs[-1] + increment)
    return costs


##############################################################################
def submodular_from(
    count: int,
    weights: list[Fraction],
    groups: list[tuple[Coalition, list[Fraction]]],
) -> TUGame:
    """A submodular game built as an additive part plus concave group costs.

    Args:
        count: The number of players.
        weights: The additive cost of each player.
        groups: Groups of players, each with the increments of a concave
            cost of how many of the group take part.

    Returns:
        A game that is submodular by construction.
    """
    concave = [(group, _concave_cost(increments)) for group, increments in groups]
    return make_game_from(
        players(count),
        lambda coalition: sum((weights[index] for index in coalition), Fraction(0))
        + sum(
            (by_size[len(coalition & group)] for group, by_size in concave),
            Fraction(0),
        ),
    )


##############################################################################
@st.composite
def submodular_tu_games(
    draw: st.DrawFn, min_players: int = 3, max_players: int = 4
) -> TUGame:
    """Submodular TU cost games, built to be submodular."""
    count = draw(st.integers(min_value=min_players, max_value=max_players))
    weights = draw(st.lists(costs(100), min_size=count, max_size=count))
    groups = draw(
        st.lists(
            st.tuples(
                st.integers(min_value=1, max_value=(1 << count) - 1).map(Coalition),
                st.lists(costs(100), min_size=count, max_size=count),
            ),
            max_size=3,
        )
    )
    return submodular_from(count, weights, groups)


##############################################################################
def random_submodular_game(rng: Random, count: int) -> TUGame:
    """A random TU cost game with `count` players that is submodular."""
    return submodular_from(
        count,
        [random_cost(rng, 100) for _ in range(count)],
        [
            (
                Coalition(rng.randint(1, (1 << count) - 1)),
                [random_cost(rng, 100) for _ in range(count)],
            )
            for _ in range(rng.randint(0, 3))
        ],
    )


### strategies.py ends here
