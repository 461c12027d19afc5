"""Optimal antithickenings of claw-free trigraphs."""

from .antithicken import (
    AntithickeningResult,
    ThickeningMap,
    compose_thickenings,
    contract_pairs,
    collect_maximal_schposcs,
    find_square_connected_pair,
    is_laminar,
    optimal_antithickening,
    verify_thickening,
)
from .exceptions import (
    CapExceeded,
    DomainError,
    InputRejected,
    ParseError,
    SamplingBudgetExceeded,
    StructuralError,
    TrigraphError,
)
from .gen import gen_cliques_matching, gen_named, gen_random_laminar_base, thicken
from .io import parse_map, parse_trigraph, serialize_map, serialize_trigraph
from .schposc import StepCounter, schposc
from .structure import (
    CliquePair,
    is_deletion_minimal,
    is_hposc,
    is_square,
    is_square_connected,
    set_relation,
)
from .trigraph import (
    SEMI,
    STRONG,
    STRONG_ANTI,
    AdjacencyValue,
    Classification,
    Trigraph,
    classify,
    complement,
    is_claw_free,
    is_connected,
)


__all__ = [
    "AntithickeningResult",
    "ThickeningMap",
    "compose_thickenings",
    "contract_pairs",
    "collect_maximal_schposcs",
    "find_square_connected_pair",
    "is_laminar",
    "optimal_antithickening",
    "verify_thickening",
    "CapExceeded",
    "DomainError",
    "InputRejected",
    "ParseError",
    "SamplingBudgetExceeded",
    "StructuralError",
    "TrigraphError",
    "CliquePair",
    "is_deletion_minimal",
    "is_hposc",
    "is_square",
    "is_square_connected",
    "set_relation",
    "SEMI",
    "STRONG",
    "STRONG_ANTI",
    "AdjacencyValue",
    "Classification",
    "Trigraph",
    "classify",
    "complement",
    "is_claw_free",
    "is_connected",
    "gen_cliques_matching",
    "gen_named",
    "gen_random_laminar_base",
    "thicken",
    "parse_map",
    "parse_trigraph",
    "serialize_map",
    "serialize_trigraph",
    "StepCounter",
    "schposc",
    "OptimalAntithickening",
    "check_trigraph",
]

__version__ = "0.1.0"


def __getattr__(name):
    # sklearn is slow to import; only load it when the estimator is wanted
    if name in ("OptimalAntithickening", "check_trigraph"):
        from . import estimator

        return getattr(estimator, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
