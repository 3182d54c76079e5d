"""Finite-automata toolkit for conditional decomposability of regular
languages, coordinator alphabet extension, and nonblockingness of
coordinated modular systems."""

from .events import Alphabet, AlphabetFamily, Event, FamilyError
from .generator import (
    Generator,
    Word,
    erase,
    make_generator,
    prefix_tree,
    render_word,
    strip_tilde,
    word,
)
from .ops import (
    Witness,
    WitnessKind,
    accepts_projected,
    closure_generator,
    complement,
    complete,
    compose_all,
    is_empty,
    is_nonblocking,
    language_equal,
    language_subset,
    lift_selfloops,
    minimize,
    parallel,
    project,
    rename_tilde,
    trim,
)
from .cdcheck import CdVerdict, TildeSystem, build_tilde, is_cd, is_cd2
from .extension import ExtensionTrace, extend2, extend_n
from .nonblocking import (
    CoordinatedSystem,
    NonblockingReport,
    PremiseError,
    coordinated_nonblocking,
    corollary_coordinator,
    intersection_coordinator,
    nonconflicting,
    observer_check,
)
from .oracle import (
    BoundedLanguage,
    EnumerationLimitError,
    cd_by_definition,
    closure_words,
    enumerate_words,
    prefixes,
    projected_words,
)
from .genfile import ParseError, export_dot, parse_gen, serialize_gen
from .schema import REPORT_SCHEMA, SCHEMA_ID

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AlphabetFamily",
    "BoundedLanguage",
    "CdVerdict",
    "CoordinatedSystem",
    "EnumerationLimitError",
    "Event",
    "ExtensionTrace",
    "FamilyError",
    "Generator",
    "NonblockingReport",
    "ParseError",
    "PremiseError",
    "REPORT_SCHEMA",
    "SCHEMA_ID",
    "TildeSystem",
    "Witness",
    "WitnessKind",
    "Word",
    "accepts_projected",
    "build_tilde",
    "cd_by_definition",
    "closure_generator",
    "closure_words",
    "complement",
    "complete",
    "compose_all",
    "coordinated_nonblocking",
    "corollary_coordinator",
    "enumerate_words",
    "erase",
    "export_dot",
    "extend2",
    "extend_n",
    "intersection_coordinator",
    "is_cd",
    "is_cd2",
    "is_empty",
    "is_nonblocking",
    "language_equal",
    "language_subset",
    "lift_selfloops",
    "make_generator",
    "minimize",
    "nonconflicting",
    "observer_check",
    "parallel",
    "parse_gen",
    "prefix_tree",
    "prefixes",
    "project",
    "projected_words",
    "rename_tilde",
    "render_word",
    "serialize_gen",
    "strip_tilde",
    "trim",
    "word",
]
