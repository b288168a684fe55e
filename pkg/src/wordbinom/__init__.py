"""Reconstruction of words from subsequence (scattered-factor) counts.

The package exposes the core machinery in layers: exact counting and the
brute-force oracle (``words``), shuffle/infiltration products and Lyndon
reduction (``algebra``), the binary block-coefficient solver (``binary``),
the adaptive query game (``protocol``), projection-based reconstruction over
arbitrary alphabets (``multi``), and exact bound comparisons (``bounds``).
"""

from ._backend import BACKEND
from .algebra import (
    WordPolynomial,
    eval_reduction,
    infiltrate,
    is_lyndon,
    lyndon_split,
    lyndon_words,
    reduce_to_lyndon,
    shuffle,
)
from .binary import (
    BlockDecomposition,
    BlockSystem,
    Inconsistent,
    NotYetUnique,
    Reconstructed,
    block_coefficient,
    characterize_pair_uniqueness,
    is_unique_fast,
    max_block_value,
    minimal_unique_level,
    reconstruct_binary,
    solution_set,
)
from .bounds import (
    BoundReport,
    binary_baseline,
    count_small_coefficient_words,
    general_baseline,
    kr_threshold,
    lyndon_count,
    mobius,
    our_binary_bound,
    our_general_bound,
)
from .multi import (
    CoverageWitness,
    MergedWord,
    NoWord,
    Reconstructible,
    build_graph,
    coverage_decide,
    find_k_valid_marking,
    merge_scattered_factors,
    minimal_general_coefficients,
    project,
    reconstruct_from_pairwise_projections,
    reconstruct_general,
    topo_sort_unique,
)
from .protocol import (
    QueryTranscript,
    TranscriptOracle,
    WordOracle,
    adaptive_reconstruct,
    nonadaptive_set,
    replay,
)
from .words import (
    Alphabet,
    Word,
    is_uniquely_determined_brute,
    parikh,
    scattered_factor_count,
    words_of_length,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "BACKEND",
    "BlockDecomposition",
    "BlockSystem",
    "BoundReport",
    "CoverageWitness",
    "Inconsistent",
    "MergedWord",
    "NotYetUnique",
    "NoWord",
    "QueryTranscript",
    "Reconstructed",
    "Reconstructible",
    "TranscriptOracle",
    "Word",
    "WordOracle",
    "WordPolynomial",
    "adaptive_reconstruct",
    "binary_baseline",
    "block_coefficient",
    "build_graph",
    "characterize_pair_uniqueness",
    "count_small_coefficient_words",
    "coverage_decide",
    "eval_reduction",
    "find_k_valid_marking",
    "general_baseline",
    "infiltrate",
    "is_lyndon",
    "is_unique_fast",
    "is_uniquely_determined_brute",
    "kr_threshold",
    "lyndon_count",
    "lyndon_split",
    "lyndon_words",
    "max_block_value",
    "merge_scattered_factors",
    "minimal_general_coefficients",
    "minimal_unique_level",
    "mobius",
    "nonadaptive_set",
    "our_binary_bound",
    "our_general_bound",
    "parikh",
    "project",
    "reconstruct_binary",
    "reconstruct_from_pairwise_projections",
    "reconstruct_general",
    "replay",
    "scattered_factor_count",
    "shuffle",
    "solution_set",
    "topo_sort_unique",
    "words_of_length",
]
