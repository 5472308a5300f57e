"""Exact calculus for prime-order automorphisms of localized polynomial rings.

Core objects: exact sparse polynomials over prime fields, the rationals, or
the integers (poly); Buchberger bases with localization-aware divisibility
and principality tests (groebner); p-cyclic actions and their augmentation
calculus (action); the inductive generator tower (tower); decomposition over
the invariant subring (descent); pseudo-reflection and dimension-count checks
(regularity); and a scenario-driven verification CLI (scenario, runner, cli).
"""

from .action import AugmentationIdeal, Certificate, CyclicAction
from .descent import Decomposition, descend, divisibility_transfer_check, monogenic_basis_check, recompose
from .groebner import (
    GroebnerBasis,
    IdealGens,
    LocalPrime,
    buchberger,
    colon_ideal,
    divides_locally,
    ideal_member,
    ideals_equal,
    in_prime,
    is_principal_locally,
)
from .poly import Field, LocalFraction, Poly, Ring
from .regularity import (
    ParameterSystem,
    RankReport,
    free_rank_condition,
    invariant_parameters,
    lambda_count,
    p3_inequalities,
    pseudo_reflection_direct,
)
from .scenario import Scenario, parse_scenario, parse_scenario_text
from .tower import TowerTable, tower_build, tower_closed_form, tower_verify, universal_orbit_ring

__version__ = "0.1.0"

__all__ = [
    "AugmentationIdeal",
    "Certificate",
    "CyclicAction",
    "Decomposition",
    "Field",
    "GroebnerBasis",
    "IdealGens",
    "LocalFraction",
    "LocalPrime",
    "ParameterSystem",
    "Poly",
    "RankReport",
    "Ring",
    "Scenario",
    "TowerTable",
    "buchberger",
    "colon_ideal",
    "descend",
    "divides_locally",
    "divisibility_transfer_check",
    "free_rank_condition",
    "ideal_member",
    "ideals_equal",
    "in_prime",
    "invariant_parameters",
    "is_principal_locally",
    "lambda_count",
    "monogenic_basis_check",
    "p3_inequalities",
    "parse_scenario",
    "parse_scenario_text",
    "pseudo_reflection_direct",
    "recompose",
    "tower_build",
    "tower_closed_form",
    "tower_verify",
    "universal_orbit_ring",
]
