"""Admissible weighted trees over odd cyclic groups.

Validate trees, split ``HZ ^ X(T)_+`` into representation-sphere summands,
replay every connecting-map obstruction, and check the answers against
Bredon homology computed from explicit chains.
"""
from .decomp import (Decomposition, NoTheoremApplies, Summand, canonical_eq, counters,
                     decompose, underlying_betti)
from .geom import (Block, FiltrationStep, compatible_same_group, compatible_subgroup,
                   filtration_steps, fixed_census_block, tangential_reps)
from .mackey import (LevelValue, decomposition_homology, induce_complex, level_homology,
                     sphere_complex, verify_table)
from .obstruct import (ObstructionRecord, claim_card_eq, replay, replay_cp2_orders,
                       replay_tree, stab_bound_check)
from .reps import VirtualRep, dim, fixed_dim, hz_canonical, parse_rep
from .trees import (AdmissibleTree, InadmissibleTree, RawTree, Violation, Weight, build,
                    generate_random, load, normalize_root, parse, reorient, strata, validate,
                    violations)
from .vanish import (MackeyName, Verdict, criterion_vanishes, obstruction_verdict, pi_cp,
                     table_verdict)

__all__ = [
    "AdmissibleTree",
    "Block",
    "Decomposition",
    "FiltrationStep",
    "InadmissibleTree",
    "LevelValue",
    "MackeyName",
    "NoTheoremApplies",
    "ObstructionRecord",
    "RawTree",
    "Summand",
    "Verdict",
    "Violation",
    "VirtualRep",
    "Weight",
    "build",
    "canonical_eq",
    "claim_card_eq",
    "compatible_same_group",
    "compatible_subgroup",
    "counters",
    "criterion_vanishes",
    "decompose",
    "decomposition_homology",
    "dim",
    "filtration_steps",
    "fixed_census_block",
    "fixed_dim",
    "generate_random",
    "hz_canonical",
    "induce_complex",
    "level_homology",
    "load",
    "normalize_root",
    "obstruction_verdict",
    "parse",
    "parse_rep",
    "pi_cp",
    "reorient",
    "replay",
    "replay_cp2_orders",
    "replay_tree",
    "sphere_complex",
    "stab_bound_check",
    "strata",
    "table_verdict",
    "tangential_reps",
    "underlying_betti",
    "validate",
    "verify_table",
    "violations",
]

__version__ = "0.1.0"
