"""Defines classes for players and coalitions of players."""

##############################################################################
# Backward compatibility.
from __future__ import annotations

##############################################################################
# Python imports.
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterator, Sequence


##############################################################################
@dataclass(frozen=True)
class PlayerId:
    """The identity of a player in a game."""

    index: int
    """The index of the player within its game."""
    label: str
    """The display label for the player."""

    def __str__(self) -> str:
        return self.label


##############################################################################
@total_ordering
@dataclass(frozen=True)
class Coalition:
    """A set of players, held as a bitset of player indices.

    Bit `i` of `members` is set when the player with index `i` is in the
    coalition. Coalitions order by their bitset, which is also the order in
    which the exhaustive checks enumerate them.
    """

    members: int = 0
    """The member bitset."""

    def __post_init__(self) -> None:
        if self.members < 0:
            raise ValueError("A coalition bitset can't be negative")

    @classmethod
    def of(cls, *indices: int) -> Coalition:
        """Create a coalition from player indices.

        Args:
            indices: The indices of the players in the coalition.

        Returns:
            A fresh `Coalition`.
        """
        members = 0
        for index in indices:
            if index < 0:
                raise ValueError(f"{index} is not a valid player index")
            members |= 1 << index
        return cls(members)

    @classmethod
    def grand(cls, players: int) -> Coalition:
        """The coalition of all players in a game.

        Args:
            players: The number of players in the game.

        Returns:
            The grand coalition.
        """
        return cls((1 << players) - 1)

    @classmethod
    def all_of(cls, players: int) -> Iterator[Coalition]:
        """Iterate every coalition of a game, in bitset order.

        Args:
            players: The number of players in the game.

        Yields:
            Each coalition, starting with the empty one.
        """
        for members in range(1 << players):
            yield cls(members)

    @property
    def is_empty(self) -> bool:
        """Is this the empty coalition?"""
        return self.members == 0

    @property
    def highest_index(self) -> int:
        """The highest player index in the coalition, or -1 if empty."""
        return self.members.bit_length() - 1

    def with_player(self, index: int) -> Coalition:
        """Get the coalition with a player added.

        Args:
            index: The index of the player to add.

        Returns:
            The enlarged coalition.
        """
        return Coalition(self.members | (1 << index))

    def without_player(self, index: int) -> Coalition:
        """Get the coalition with a player removed.

        Args:
            index: The index of the player to remove.

        Returns:
            The reduced coalition.
        """
        return Coalition(self.members & ~(1 << index))

    def isdisjoint(self, other: Coalition) -> bool:
        """Does this coalition share no players with another?

        Args:
            other: The other coalition.

        Returns:
            `True` if there are no common players, `False` if there are.
        """
        return not self.members & other.members

    def label(self, players: Sequence[PlayerId]) -> str:
        """Get a display label for the coalition.

        Args:
            players: The players of the game the coalition belongs to.

        Returns:
            The labels of the members, in index order, as a set.
        """
        return "{" + ", ".join(players[index].label for index in self) + "}"

    def __or__(self, other: Coalition) -> Coalition:
        return Coalition(self.members | other.members)

    def __and__(self, other: Coalition) -> Coalition:
        return Coalition(self.members & other.members)

    def __contains__(self, index: object) -> bool:
        return isinstance(index, int) and index >= 0 and bool(self.members >> index & 1)

    def __iter__(self) -> Iterator[int]:
        members, index = self.members, 0
        while members:
            if members & 1:
                yield index
            members >>= 1
            index += 1

    def __len__(self) -> int:
        return self.members.bit_count()

    def __lt__(self, value: object, /) -> bool:
        if isinstance(value, Coalition):
            return self.members < value.members
        return NotImplemented

    def __str__(self) -> str:
        return "{" + ", ".join(str(index) for index in self) + "}"


### coalition.py ends here
