"""Provides classes for holding a bilateral industrial symbiotic relation.

In an industrial symbiotic relation (ISR) a provider firm's excess resource
replaces a receiver firm's primary input. Without the ISR the provider pays
to discharge the resource and the receiver pays to purchase its input; with
it the two firms share the operational cost of treating, transporting and
trading the resource.
"""

##############################################################################
# Backward compatibility.
from __future__ import annotations

##############################################################################
# Python imports.
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from logging import getLogger

##############################################################################
# Local imports.
from .coalition import Coalition, PlayerId
from .errors import InconsistentBreakdown, InfeasibleIsr, NegativeCost, RoleMismatch
from .tu_core import TUGame, make_game_from
from .utils import Util

##############################################################################
log = getLogger(__name__)


##############################################################################
class FirmKind(Enum):
    """The role a firm plays in an ISR."""

    PROVIDER = "A"
    """The firm whose excess resource is recycled."""
    RECEIVER = "B"
    """The firm whose primary input the resource substitutes."""

    @property
    def tag(self) -> str:
        """The short tag for the role."""
        return self.value

    @property
    def index(self) -> int:
        """The player index of a firm in this role."""
        return 0 if self is FirmKind.PROVIDER else 1

    @property
    def other(self) -> FirmKind:
        """The other role of the relation."""
        return FirmKind.RECEIVER if self is FirmKind.PROVIDER else FirmKind.PROVIDER


##############################################################################
@dataclass(frozen=True)
class FirmRole:
    """A firm taking part in an ISR."""

    kind: FirmKind
    """The role the firm plays."""
    label: str
    """The display label for the firm."""

    @classmethod
    def provider(cls, label: str = "A") -> FirmRole:
        """Create a provider firm.

        Args:
            label: The label for the firm.

        Returns:
            A fresh `FirmRole`.
        """
        return cls(FirmKind.PROVIDER, label)

    @classmethod
    def receiver(cls, label: str = "B") -> FirmRole:
        """Create a receiver firm.

        Args:
            label: The label for the firm.

        Returns:
            A fresh `FirmRole`.
        """
        return cls(FirmKind.RECEIVER, label)


##############################################################################
def _ensure_non_negative(**values: Util) -> None:
    """Ensure some costs are all non-negative.

    Args:
        values: The costs to check, keyed by name.

    Raises:
        NegativeCost: For the first negative cost found.
    """
    for name, value in values.items():
        if value < 0:
            raise NegativeCost(name, Fraction(value))


##############################################################################
@dataclass(frozen=True)
class OperationalBreakdown:
    """The components of the operational cost of an ISR."""

    treatment: Util
    """The cost of treating the resource so it can be used."""
    transportation: Util
    """The cost of moving the resource from provider to receiver."""
    transaction: Util
    """The cost of arranging and running the exchange."""

    def __post_init__(self) -> None:
        _ensure_non_negative(
            treatment=self.treatment,
            transportation=self.transportation,
            transaction=self.transaction,
        )

    @property
    def total(self) -> Util:
        """The total operational cost."""
        return self.treatment + self.transportation + self.transaction


##############################################################################
@dataclass(frozen=True)
class TraditionalCosts:
    """The costs each firm pays when there is no ISR."""

    discharge: Util
    """What the provider pays to discharge its excess resource."""
    purchasing: Util
    """What the receiver pays to purchase its primary input."""

    def __post_init__(self) -> None:
        _ensure_non_negative(discharge=self.discharge, purchasing=self.purchasing)


##############################################################################
@dataclass(frozen=True)
class IsrGame:
    """A validated ISR cost game.

    Construction fails for an infeasible relation, one whose operational
    cost exceeds the traditional costs it replaces, so every `IsrGame` is
    subadditive.
    """

    provider: FirmRole
    """The provider firm (A)."""
    receiver: FirmRole
    """The receiver firm (B)."""
    t_sigma: Util
    """The total operational cost of the relation, T(σ)."""
    t_bar_provider: Util
    """The provider's traditional cost, T_A(σ̄)."""
    t_bar_receiver: Util
    """The receiver's traditional cost, T_B(σ̄)."""
    breakdown: OperationalBreakdown | None = None
    """The components of the operational cost, if known."""

    def __post_init__(self) -> None:
        if self.provider.kind is not FirmKind.PROVIDER:
            raise RoleMismatch(self.provider.label, "provider")
        if self.receiver.kind is not FirmKind.RECEIVER:
            raise RoleMismatch(self.receiver.label, "receiver")
        _ensure_non_negative(
            t_sigma=self.t_sigma,
            t_bar_provider=self.t_bar_provider,
            t_bar_receiver=self.t_bar_receiver,
        )
        if self.t_sigma > self.traditional_total:
            raise InfeasibleIsr(Fraction(self.t_sigma), Fraction(self.traditional_total))
        if self.breakdown is not None and self.breakdown.total != self.t_sigma:
            raise InconsistentBreakdown(self.breakdown.total, self.t_sigma)

    @property
    def traditional_total(self) -> Util:
        """The sum of the traditional costs, T_A(σ̄) + T_B(σ̄)."""
        return self.t_bar_provider + self.t_bar_receiver

    def firm(self, kind: FirmKind) -> FirmRole:
        """Get the firm that plays a role.

        Args:
            kind: The role.

        Returns:
            The firm in that role.
        """
        return self.provider if kind is FirmKind.PROVIDER else self.receiver

    def traditional_cost(self, firm: FirmRole | FirmKind) -> Util:
        """Get the traditional cost of a firm.

        Args:
            firm: The firm, or its role.

        Returns:
            The firm's traditional cost, T_i(σ̄).
        """
        kind = firm.kind if isinstance(firm, FirmRole) else firm
        return self.t_bar_provider if kind is FirmKind.PROVIDER else self.t_bar_receiver


##############################################################################
def build_isr_game(
    provider: FirmRole,
    receiver: FirmRole,
    traditional: TraditionalCosts,
    operational: OperationalBreakdown | Util,
) -> IsrGame:
    """Build an ISR game from its costs.

    Args:
        provider: The provider firm.
        receiver: The receiver firm.
        traditional: The traditional costs of the two firms.
        operational: The operational cost, either itemised or as a total.

    Returns:
        The ISR game.

    Raises:
        NegativeCost: If any cost is negative.
        InfeasibleIsr: If the operational cost exceeds the sum of the
            traditional costs.
        RoleMismatch: If the firms are given in the wrong roles.
    """
    breakdown = operational if isinstance(operational, OperationalBreakdown) else None
    t_sigma = Fraction(breakdown.total if breakdown is not None else operational)
    log.debug(
        "Building ISR game: T(σ)=%s, T_A(σ̄)=%s, T_B(σ̄)=%s",
        t_sigma,
        traditional.discharge,
        traditional.purchasing,
    )
    return IsrGame(
        provider=provider,
        receiver=receiver,
        t_sigma=t_sigma,
        t_bar_provider=Fraction(traditional.discharge),
        t_bar_receiver=Fraction(traditional.purchasing),
        breakdown=breakdown,
    )


##############################################################################
def to_tu_game(isr: IsrGame) -> TUGame:
    """Express an ISR game as a general TU game.

    Args:
        isr: The ISR game.

    Returns:
        The two-player game with the provider as player 0 and the receiver
        as player 1, where each firm alone costs its traditional cost and
        the pair costs the operational cost.
    """
    costs = {
        Coalition(): Fraction(0),
        Coalition.of(0): isr.t_bar_provider,
        Coalition.of(1): isr.t_bar_receiver,
        Coalition.of(0, 1): isr.t_sigma,
    }
    return make_game_from(
        (PlayerId(0, isr.provider.label), PlayerId(1, isr.receiver.label)),
        costs.__getitem__,
    )


##############################################################################
def total_saving(isr: IsrGame) -> Util:
    """Get the total saving the ISR brings.

    Args:
        isr: The ISR game.

    Returns:
        T_A(σ̄) + T_B(σ̄) - T(σ), which is never negative.
    """
    return isr.traditional_total - isr.t_sigma


### isr_game.py ends here
