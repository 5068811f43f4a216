"""Heffter arrays over finite fields and the complete-graph embeddings they induce."""

from .algebra import Field, make_field, parse_header, prime_power_split
from .arrays import (
    HeffterShape,
    PartiallyFilledArray,
    build_rank_one,
    entry_set_is_multiplicative_subgroup,
    field_for_parameters,
    from_text,
    is_rank_one,
    shape_of,
    to_text,
    validate_heffter,
    validate_quasi_heffter,
)
from .autgroup import (
    AutReport,
    classify_automorphism,
    classify_isomorphism,
    cycle_notation,
    exhaustive_search,
    group_structure,
    iter_full_group,
    multiplicative_auts,
    restricted_search,
    translation_perm,
)
from .catalog import admissible_parameters, compute_row
from .embedding import (
    Embedding,
    Face,
    build_embedding,
    closed_form_faces,
    faces_to_json,
    faces_to_text,
    surface_report,
    trace_faces,
    validate_rotation,
    verify_biembedding,
    zero_rotation_from_orderings,
)
from .orderings import (
    OrderingPair,
    check_globally_simple,
    is_compatible,
    is_simple,
    natural_orderings,
)

__version__ = "0.1.0"
