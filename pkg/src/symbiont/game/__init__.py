"""Library for cooperative cost games and industrial symbiotic relations."""

##############################################################################
# Local imports.
from .allocation import (
    Allocation,
    CoreSegment,
    Efficiency,
    IndividualRationality,
    NegativeShapleyShare,
    NonNegativity,
    Outcome,
    Verdict,
    Violation,
    best_for,
    classify,
    core_segment,
    individual_saving,
    is_fair,
    is_stable,
    marginal_contributions,
    shapley,
    shapley_warnings,
    u_bound,
)
from .coalition import Coalition, PlayerId
from .errors import (
    BadDecimal,
    ForeignCoalition,
    GameError,
    GameTooLarge,
    InconsistentBreakdown,
    InfeasibleIsr,
    InvalidPlayers,
    LengthMismatch,
    MismatchedInputs,
    MissingCoalition,
    NegativeCost,
    NonzeroEmptyCost,
    PlayerSetMismatch,
    RoleMismatch,
)
from .isr_game import (
    FirmKind,
    FirmRole,
    IsrGame,
    OperationalBreakdown,
    TraditionalCosts,
    build_isr_game,
    to_tu_game,
    total_saving,
)
from .oracles import PERMUTATION_LIMIT, in_core_oracle, shapley_oracle
from .tu_core import (
    PAIRWISE_LIMIT,
    CoalitionViolation,
    PairViolation,
    PropertyWitness,
    TUGame,
    add_games,
    are_symmetric,
    is_dummy,
    is_subadditive,
    is_submodular,
    make_game,
    make_game_from,
)
from .utils import Util, is_decimal, parse_decimal, parse_util, util_text

##############################################################################
# Exports.
__all__ = [
    "add_games",
    "Allocation",
    "are_symmetric",
    "BadDecimal",
    "best_for",
    "build_isr_game",
    "classify",
    "Coalition",
    "CoalitionViolation",
    "core_segment",
    "CoreSegment",
    "Efficiency",
    "FirmKind",
    "FirmRole",
    "ForeignCoalition",
    "GameError",
    "GameTooLarge",
    "in_core_oracle",
    "InconsistentBreakdown",
    "IndividualRationality",
    "individual_saving",
    "InfeasibleIsr",
    "InvalidPlayers",
    "is_decimal",
    "is_dummy",
    "is_fair",
    "is_stable",
    "is_subadditive",
    "is_submodular",
    "IsrGame",
    "LengthMismatch",
    "make_game",
    "make_game_from",
    "marginal_contributions",
    "MismatchedInputs",
    "MissingCoalition",
    "NegativeCost",
    "NegativeShapleyShare",
    "NonNegativity",
    "NonzeroEmptyCost",
    "OperationalBreakdown",
    "Outcome",
    "PAIRWISE_LIMIT",
    "PairViolation",
    "parse_decimal",
    "parse_util",
    "PERMUTATION_LIMIT",
    "PlayerId",
    "PlayerSetMismatch",
    "PropertyWitness",
    "RoleMismatch",
    "shapley",
    "shapley_oracle",
    "shapley_warnings",
    "to_tu_game",
    "total_saving",
    "TraditionalCosts",
    "TUGame",
    "u_bound",
    "Util",
    "util_text",
    "Verdict",
    "Violation",
]

### __init__.py ends here
