"""Stable and fair allocations of the operational cost of an ISR.

An allocation is stable when it is in the core of the ISR game: both shares
are non-negative, they add up to the operational cost, and neither firm
pays more than its traditional cost. For a two-firm game the core is a
segment of the line `T_A + T_B = T(σ)`. An allocation is fair when it is
the Shapley allocation, which sits at the midpoint of that segment whenever
non-negativity doesn't cut the segment short.
"""

##############################################################################
# Backward compatibility.
from __future__ import annotations

##############################################################################
# Python imports.
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import TypeAlias

##############################################################################
# Local imports.
from .isr_game import FirmKind, FirmRole, IsrGame
from .utils import Util, util_text


##############################################################################
def _kind(firm: FirmRole | FirmKind) -> FirmKind:
    return firm.kind if isinstance(firm, FirmRole) else firm


##############################################################################
@dataclass(frozen=True)
class Allocation:
    """A split of the operational cost between the two firms."""

    provider_share: Util
    """The cost allocated to the provider (A)."""
    receiver_share: Util
    """The cost allocated to the receiver (B)."""

    @property
    def total(self) -> Util:
        """The total cost allocated."""
        return self.provider_share + self.receiver_share

    def share_of(self, firm: FirmRole | FirmKind) -> Util:
        """Get the share allocated to a firm.

        Args:
            firm: The firm, or its role.

        Returns:
            The share of that firm.
        """
        return (
            self.provider_share
            if _kind(firm) is FirmKind.PROVIDER
            else self.receiver_share
        )

    def distance_to(self, other: Allocation) -> Util:
        """The L1 distance between two allocations.

        Args:
            other: The other allocation.

        Returns:
            The sum of the absolute differences of the shares.
        """
        return abs(self.provider_share - other.provider_share) + abs(
            self.receiver_share - other.receiver_share
        )

    def scaled(self, factor: Util) -> Allocation:
        """Get the allocation with both shares scaled.

        Args:
            factor: The factor to scale by.

        Returns:
            The scaled allocation.
        """
        return Allocation(self.provider_share * factor, self.receiver_share * factor)

    def __add__(self, other: Allocation) -> Allocation:
        return Allocation(
            self.provider_share + other.provider_share,
            self.receiver_share + other.receiver_share,
        )

    def __str__(self) -> str:
        return f"⟨{util_text(self.provider_share)}, {util_text(self.receiver_share)}⟩"


##############################################################################
@dataclass(frozen=True)
class CoreSegment:
    """The segment of stable allocations of an ISR game.

    `alpha` is the end most favourable to the provider and `beta` the end
    most favourable to the receiver.
    """

    alpha: Allocation
    """The stable allocation where the provider pays least."""
    beta: Allocation
    """The stable allocation where the provider pays most."""
    provider_lower: Util
    """The least the provider can pay in a stable allocation."""
    provider_upper: Util
    """The most the provider can pay in a stable allocation."""
    clamp_active: bool = False
    """Did non-negativity cut the segment short of the firms' bounds?"""

    @property
    def midpoint(self) -> Allocation:
        """The allocation halfway between the two ends."""
        return (self.alpha + self.beta).scaled(Fraction(1, 2))

    @property
    def is_degenerate(self) -> bool:
        """Is the segment a single point?"""
        return self.provider_lower == self.provider_upper

    def contains(self, allocation: Allocation) -> bool:
        """Is an allocation on the segment?

        Args:
            allocation: The allocation to test.

        Returns:
            `True` if the allocation lies on the segment.
        """
        return (
            allocation.total == self.alpha.total
            and self.provider_lower <= allocation.provider_share <= self.provider_upper
        )


##############################################################################
@dataclass(frozen=True)
class NonNegativity:
    """A firm was allocated a negative share."""

    firm: FirmKind
    """The firm concerned."""
    share: Util
    """The negative share."""

    def __str__(self) -> str:
        return f"NonNegativity({self.firm.tag}, {util_text(self.share)})"


##############################################################################
@dataclass(frozen=True)
class Efficiency:
    """The shares don't add up to the operational cost."""

    gap: Util
    """The allocated total minus the operational cost."""

    def __str__(self) -> str:
        return f"Efficiency({util_text(self.gap)})"


##############################################################################
@dataclass(frozen=True)
class IndividualRationality:
    """A firm was allocated more than its traditional cost."""

    firm: FirmKind
    """The firm concerned."""
    excess: Util
    """How much the share exceeds the firm's traditional cost."""

    def __str__(self) -> str:
        return f"IndividualRationality({self.firm.tag}, {util_text(self.excess)})"


##############################################################################
Violation: TypeAlias = NonNegativity | Efficiency | IndividualRationality
"""The conditions of stability an allocation can break."""


##############################################################################
@dataclass(frozen=True)
class NegativeShapleyShare:
    """The Shapley formula gives a firm a negative share."""

    firm: FirmKind
    """The firm concerned."""
    share: Util
    """The negative share."""

    def __str__(self) -> str:
        return (
            f"NegativeShapleyShare({self.firm.tag}, {util_text(self.share)}): "
            "the Shapley allocation is outside the core because "
            "T(σ) < |T_A(σ̄) - T_B(σ̄)|"
        )


##############################################################################
class Outcome(Enum):
    """What a verdict on a proposal means for the collaboration decision."""

    ACCEPT = "accept"
    """The proposal is stable and fair."""
    RENEGOTIATE = "renegotiate"
    """The proposal is stable but not fair."""
    REJECT = "reject"
    """The proposal is not stable."""


##############################################################################
@dataclass(frozen=True)
class Verdict:
    """The verdict on a proposed allocation."""

    violations: tuple[Violation, ...]
    """The stability conditions broken, empty if there are none."""
    shapley_distance: Util
    """The L1 distance from the Shapley allocation."""
    warnings: tuple[NegativeShapleyShare, ...] = field(default_factory=tuple)
    """Diagnostics about the game the proposal was judged against."""

    @property
    def stable(self) -> bool:
        """Is the proposal stable?"""
        return not self.violations

    @property
    def fair(self) -> bool:
        """Is the proposal fair?"""
        return self.shapley_distance == 0

    @property
    def outcome(self) -> Outcome:
        """The decision the verdict supports."""
        if not self.stable:
            return Outcome.REJECT
        return Outcome.ACCEPT if self.fair else Outcome.RENEGOTIATE


##############################################################################
def u_bound(isr: IsrGame, firm: FirmRole | FirmKind) -> Util:
    """Get the least a firm could be asked to pay while the other firm stays.

    Args:
        isr: The ISR game.
        firm: The firm, or its role.

    Returns:
        U_i(σ) = T(σ) - T_j(σ̄), where j is the other firm. This may be
        negative.
    """
    return isr.t_sigma - isr.traditional_cost(_kind(firm).other)


##############################################################################
def core_segment(isr: IsrGame) -> CoreSegment:
    """Get the core of an ISR game.

    Args:
        isr: The ISR game.

    Returns:
        The segment of allocations that are non-negative, efficient and
        individually rational. It is never empty for a feasible ISR.
    """
    lower_bound = u_bound(isr, FirmKind.PROVIDER)
    provider_lower = max(Fraction(0), lower_bound)
    provider_upper = min(isr.t_sigma, isr.t_bar_provider)
    return CoreSegment(
        alpha=Allocation(provider_lower, isr.t_sigma - provider_lower),
        beta=Allocation(provider_upper, isr.t_sigma - provider_upper),
        provider_lower=provider_lower,
        provider_upper=provider_upper,
        clamp_active=lower_bound < 0 or isr.t_bar_provider > isr.t_sigma,
    )


##############################################################################
def marginal_contributions(isr: IsrGame, firm: FirmRole | FirmKind) -> tuple[Util, Util]:
    """Get a firm's marginal cost in each of the two arrival orders.

    Args:
        isr: The ISR game.
        firm: The firm, or its role.

    Returns:
        The firm's marginal cost when it arrives first, which is its
        traditional cost, and when it arrives second, which is U_i(σ).
    """
    return isr.traditional_cost(_kind(firm)), u_bound(isr, firm)


##############################################################################
def shapley(isr: IsrGame) -> Allocation:
    """Get the Shapley allocation of an ISR game.

    Args:
        isr: The ISR game.

    Returns:
        The allocation where each firm pays the average of its marginal
        costs over the two arrival orders:
        ½[T(σ) + T_i(σ̄) - T_j(σ̄)].
    """
    provider = sum(marginal_contributions(isr, FirmKind.PROVIDER), Fraction(0)) / 2
    return Allocation(provider, isr.t_sigma - provider)


##############################################################################
def shapley_warnings(isr: IsrGame) -> tuple[NegativeShapleyShare, ...]:
    """Get diagnostics for a Shapley allocation that falls outside the core.

    Args:
        isr: The ISR game.

    Returns:
        A warning for each firm the Shapley formula gives a negative share.
    """
    point = shapley(isr)
    return tuple(
        NegativeShapleyShare(kind, point.share_of(kind))
        for kind in FirmKind
        if point.share_of(kind) < 0
    )


##############################################################################
def individual_saving(
    isr: IsrGame, allocation: Allocation, firm: FirmRole | FirmKind
) -> Util:
    """Get the saving a firm makes under an allocation.

    Args:
        isr: The ISR game.
        allocation: The allocation.
        firm: The firm, or its role.

    Returns:
        The firm's traditional cost less its allocated share.
    """
    return isr.traditional_cost(_kind(firm)) - allocation.share_of(firm)


##############################################################################
def best_for(segment: CoreSegment, firm: FirmRole | FirmKind) -> Allocation:
    """Get the stable allocation most favourable to a firm.

    Args:
        segment: The core of the game.
        firm: The firm, or its role.

    Returns:
        `alpha` for the provider, `beta` for the receiver.
    """
    return segment.alpha if _kind(firm) is FirmKind.PROVIDER else segment.beta


##############################################################################
def _violations(isr: IsrGame, proposal: Allocation) -> tuple[Violation, ...]:
    """Get the stability conditions a proposal breaks, in reporting order."""
    violations: list[Violation] = [
        NonNegativity(kind, proposal.share_of(kind))
        for kind in FirmKind
        if proposal.share_of(kind) < 0
    ]
    if proposal.total != isr.t_sigma:
        violations.append(Efficiency(proposal.total - isr.t_sigma))
    violations.extend(
        IndividualRationality(kind, proposal.share_of(kind) - isr.traditional_cost(kind))
        for kind in FirmKind
        if proposal.share_of(kind) > isr.traditional_cost(kind)
    )
    return tuple(violations)


##############################################################################
def is_stable(isr: IsrGame, proposal: Allocation) -> Verdict:
    """Check if a proposed allocation is in the core.

    Args:
        isr: The ISR game.
        proposal: The proposed allocation.

    Returns:
        A verdict whose `stable` answers the question. It lists every
        broken condition: negative shares, then the efficiency gap, then
        shares above traditional costs.
    """
    return classify(isr, proposal)


##############################################################################
def is_fair(isr: IsrGame, proposal: Allocation) -> Verdict:
    """Check if a proposed allocation is the Shapley allocation.

    Args:
        isr: The ISR game.
        proposal: The proposed allocation.

    Returns:
        A verdict whose `fair` answers the question. It holds the L1
        distance of the proposal from the Shapley allocation; the proposal
        is fair only at distance zero.
    """
    return classify(isr, proposal)


##############################################################################
def classify(isr: IsrGame, proposal: Allocation) -> Verdict:
    """Check both the stability and the fairness of a proposed allocation.

    Args:
        isr: The ISR game.
        proposal: The proposed allocation.

    Returns:
        The verdict.
    """
    return Verdict(
        violations=_violations(isr, proposal),
        shapley_distance=proposal.distance_to(shapley(isr)),
        warnings=shapley_warnings(isr),
    )


### allocation.py ends here
