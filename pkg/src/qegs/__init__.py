"""Exact analysis of bimatrix games and their quantum extensions.

The package builds the permissible quantum extensions of 2x2 games (three
classes with one added unitary strategy, eight with two), solves arbitrary
bimatrix games for pure Nash equilibria, strictly dominated strategies and
maximin strategies in exact rational arithmetic, and decomposes
single-parameter games into exact solution segments. A CLI (``qegs``), an
HTTP service and a Markdown report generator sit on top of the same engine.
"""

__version__ = "0.1.0"

from .algebraic import QuadAlgebraic
from .core import (
    Bimatrix,
    PayoffPair,
    PayoffPoly,
    Rational,
    evaluate,
    evaluate_bimatrix,
    format_rational,
    game_to_dict,
    is_symmetric,
    parse_game,
    parse_rational,
    serialize_game,
)
from .ewl import (
    FLIP,
    IDENTITY,
    Angle,
    OutcomeWeights,
    UnitaryParams,
    ewl_payoff,
    ewl_weights,
    extension_3x3_from_u,
)
from .extensions import (
    CLASS_NAMES,
    ExtensionClass,
    class_info,
    extend,
    extend3,
    extend4,
    gamma1,
    gamma2,
    gamma3,
)
from .report import ReportPlan, generate_report, plan_report, render_report
from .solver import (
    SolveResult,
    check_profile,
    dominated_strategies,
    find_pure_ne,
    maximin,
    result_to_json,
    solve,
)
from .sweep import Segment, SweepResult, sweep

__all__ = [
    "Angle",
    "Bimatrix",
    "CLASS_NAMES",
    "ExtensionClass",
    "FLIP",
    "IDENTITY",
    "OutcomeWeights",
    "PayoffPair",
    "PayoffPoly",
    "QuadAlgebraic",
    "Rational",
    "ReportPlan",
    "Segment",
    "SolveResult",
    "SweepResult",
    "UnitaryParams",
    "check_profile",
    "class_info",
    "dominated_strategies",
    "evaluate",
    "evaluate_bimatrix",
    "ewl_payoff",
    "ewl_weights",
    "extend",
    "extend3",
    "extend4",
    "extension_3x3_from_u",
    "find_pure_ne",
    "format_rational",
    "game_to_dict",
    "gamma1",
    "gamma2",
    "gamma3",
    "generate_report",
    "is_symmetric",
    "maximin",
    "parse_game",
    "parse_rational",
    "plan_report",
    "render_report",
    "result_to_json",
    "serialize_game",
    "solve",
    "sweep",
]
