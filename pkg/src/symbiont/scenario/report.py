"""Provides the analysis report for an ISR game, and its text and JSON forms."""

##############################################################################
# Backward compatibility.
from __future__ import annotations

##############################################################################
# Python imports.
from dataclasses import dataclass
from json import dumps
from typing import Any, Literal, TypeAlias

##############################################################################
# Local imports.
from ..game import (
    Allocation,
    CoreSegment,
    Efficiency,
    FirmKind,
    IndividualRationality,
    IsrGame,
    NonNegativity,
    OperationalBreakdown,
    Util,
    Verdict,
    Violation,
    classify,
    core_segment,
    individual_saving,
    shapley,
    shapley_warnings,
    total_saving,
    u_bound,
    util_text,
)

##############################################################################
ReportFormat: TypeAlias = Literal["text", "json"]
"""The formats a report can be emitted in."""

ProposalSource: TypeAlias = Literal["scenario", "command line"]
"""Where a proposal came from."""


##############################################################################
@dataclass(frozen=True)
class AnalysisReport:
    """The full analysis of an ISR game and, optionally, a proposal."""

    game: IsrGame
    """The game that was analysed."""
    total_saving: Util
    """The total saving the ISR brings."""
    u_provider: Util
    """U_A(σ), the provider's share when the receiver pays its traditional cost."""
    u_receiver: Util
    """U_B(σ), the receiver's share when the provider pays its traditional cost."""
    segment: CoreSegment
    """The core of the game."""
    shapley: Allocation
    """The Shapley allocation of the game."""
    shapley_savings: Allocation
    """What each firm saves under the Shapley allocation."""
    proposal: Allocation | None = None
    """The proposal that was judged, if any."""
    proposal_source: ProposalSource | None = None
    """Where the proposal came from."""
    proposal_savings: Allocation | None = None
    """What each firm saves under the proposal."""
    verdict: Verdict | None = None
    """The verdict on the proposal."""
    unit: str | None = None
    """The free-text unit of the costs."""
    resources: tuple[str, str] = ("", "")
    """The resources the provider gives and the receiver takes, if described."""
    warnings: tuple[str, ...] = ()
    """Diagnostics about the game."""


##############################################################################
def _savings(isr: IsrGame, allocation: Allocation) -> Allocation:
    """Get the savings of both firms under an allocation, as a pair."""
    return Allocation(
        individual_saving(isr, allocation, FirmKind.PROVIDER),
        individual_saving(isr, allocation, FirmKind.RECEIVER),
    )


##############################################################################
def analyse(
    isr: IsrGame,
    proposal: Allocation | None = None,
    proposal_source: ProposalSource | None = None,
    unit: str | None = None,
    resources: tuple[str, str] = ("", ""),
) -> AnalysisReport:
    """Analyse an ISR game.

    Args:
        isr: The game to analyse.
        proposal: An optional proposal to judge.
        proposal_source: Where the proposal came from.
        unit: The free-text unit of the costs.
        resources: The resources the provider gives and the receiver takes.

    Returns:
        The analysis report.
    """
    point = shapley(isr)
    return AnalysisReport(
        game=isr,
        total_saving=total_saving(isr),
        u_provider=u_bound(isr, FirmKind.PROVIDER),
        u_receiver=u_bound(isr, FirmKind.RECEIVER),
        segment=core_segment(isr),
        shapley=point,
        shapley_savings=_savings(isr, point),
        proposal=proposal,
        proposal_source=proposal_source if proposal is not None else None,
        proposal_savings=None if proposal is None else _savings(isr, proposal),
        verdict=None if proposal is None else classify(isr, proposal),
        unit=unit,
        resources=resources,
        warnings=tuple(str(warning) for warning in shapley_warnings(isr)),
    )


##############################################################################
def _pair(allocation: Allocation) -> dict[str, str]:
    return {
        "provider": util_text(allocation.provider_share),
        "receiver": util_text(allocation.receiver_share),
    }


##############################################################################
def _violation(violation: Violation) -> dict[str, str]:
    """Get the JSON form of a violated stability condition."""
    match violation:
        case NonNegativity(firm, magnitude) | IndividualRationality(firm, magnitude):
            return {
                "kind": type(violation).__name__,
                "firm": firm.tag,
                "magnitude": util_text(magnitude),
            }
        case Efficiency(gap):
            return {"kind": "Efficiency", "magnitude": util_text(gap)}


##############################################################################
def report_json(report: AnalysisReport) -> dict[str, Any]:
    """Get the JSON-friendly form of a report.

    Args:
        report: The report.

    Returns:
        The report as a dictionary of strings, booleans, lists and
        dictionaries; every number is an exact decimal or fraction string.
    """
    game = report.game
    breakdown = game.breakdown
    verdict = report.verdict
    return {
        "game": {
            "provider": {
                "label": game.provider.label,
                "resource_out": report.resources[0] or None,
                "traditional": util_text(game.t_bar_provider),
                "u_bound": util_text(report.u_provider),
            },
            "receiver": {
                "label": game.receiver.label,
                "resource_in": report.resources[1] or None,
                "traditional": util_text(game.t_bar_receiver),
                "u_bound": util_text(report.u_receiver),
            },
            "operational": util_text(game.t_sigma),
            "breakdown": (
                None
                if breakdown is None
                else {
                    "treatment": util_text(breakdown.treatment),
                    "transportation": util_text(breakdown.transportation),
                    "transaction": util_text(breakdown.transaction),
                }
            ),
            "total_saving": util_text(report.total_saving),
            "unit": report.unit,
        },
        "core": {
            "alpha": _pair(report.segment.alpha),
            "beta": _pair(report.segment.beta),
            "provider_range": [
                util_text(report.segment.provider_lower),
                util_text(report.segment.provider_upper),
            ],
            "clamp_active": report.segment.clamp_active,
        },
        "shapley": _pair(report.shapley),
        "savings": {
            "at_shapley": _pair(report.shapley_savings),
            "at_proposal": (
                None
                if report.proposal_savings is None
                else _pair(report.proposal_savings)
            ),
        },
        "proposal": (
            None
            if report.proposal is None
            else {"source": report.proposal_source, **_pair(report.proposal)}
        ),
        "verdict": (
            None
            if verdict is None
            else {
                "stable": verdict.stable,
                "fair": verdict.fair,
                "outcome": verdict.outcome.value,
                "shapley_distance": util_text(verdict.shapley_distance),
                "violations": [_violation(violation) for violation in verdict.violations],
            }
        ),
        "warnings": list(report.warnings),
    }


##############################################################################
def _breakdown_lines(breakdown: OperationalBreakdown | None) -> list[str]:
    if breakdown is None:
        return []
    return [
        f"  treatment: {util_text(breakdown.treatment)}",
        f"  transportation: {util_text(breakdown.transportation)}",
        f"  transaction: {util_text(breakdown.transaction)}",
    ]


##############################################################################
def report_text(report: AnalysisReport) -> str:
    """Get the human-readable form of a report.

    Args:
        report: The report.

    Returns:
        The report as a block of text lines.
    """
    game = report.game
    segment = report.segment
    gives, takes = report.resources
    lines = [
        f"provider (A): {game.provider.label}" + (f" (gives {gives})" if gives else ""),
        f"receiver (B): {game.receiver.label}" + (f" (takes {takes})" if takes else ""),
    ]
    if report.unit is not None:
        lines.append(f"unit: {report.unit}")
    lines += [
        f"operational cost T(σ): {util_text(game.t_sigma)}",
        *_breakdown_lines(game.breakdown),
        f"traditional cost T_A(σ̄): {util_text(game.t_bar_provider)}",
        f"traditional cost T_B(σ̄): {util_text(game.t_bar_receiver)}",
        f"total saving: {util_text(report.total_saving)}",
        f"U_A(σ): {util_text(report.u_provider)}",
        f"U_B(σ): {util_text(report.u_receiver)}",
        f"core: provider pays {util_text(segment.provider_lower)} to "
        f"{util_text(segment.provider_upper)}",
        f"  alpha: {segment.alpha}",
        f"  beta: {segment.beta}",
        f"  non-negativity clamp: {'active' if segment.clamp_active else 'inactive'}",
        f"shapley: {report.shapley}",
        f"  savings: {report.shapley_savings}",
    ]
    if report.proposal is not None and report.verdict is not None:
        verdict = report.verdict
        lines += [
            f"proposal ({report.proposal_source}): {report.proposal}",
            f"  savings: {report.proposal_savings}",
            f"verdict: {'stable' if verdict.stable else 'not stable'}, "
            f"{'fair' if verdict.fair else 'not fair'} ({verdict.outcome.value})",
            f"  shapley distance: {util_text(verdict.shapley_distance)}",
            *(f"  violation: {violation}" for violation in verdict.violations),
        ]
    lines += [f"warning: {warning}" for warning in report.warnings]
    return "\n".join(lines) + "\n"


##############################################################################
def emit_report(report: AnalysisReport, format: ReportFormat = "text") -> bytes:
    """Emit a report.

    Args:
        report: The report to emit.
        format: The format to emit it in.

    Returns:
        The report as UTF-8 bytes. The same report always gives the same
        bytes; the JSON form is a single line with sorted keys.
    """
    if format == "json":
        return (
            dumps(report_json(report), sort_keys=True, ensure_ascii=False) + "\n"
        ).encode("utf-8")
    return report_text(report).encode("utf-8")


### report.py ends here
