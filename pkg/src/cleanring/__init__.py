"""Clean, r-clean, *-clean and g(x)-r-clean decompositions in finite rings.

Rings are dense Cayley tables over element ids ``0..n-1``; every property
is decided by exhaustive search, and every witness is the lexicographically
smallest pair of ids.
"""

from .classify import (
    Census,
    CentralPolynomial,
    ElementProfile,
    basic_sets,
    central_polynomial,
    clean_profile,
    element_profile,
    exchange_profile,
    g_profile,
    integer_polynomial,
    parse_central_polynomial,
    ring_census,
    star_profile,
)
from .constructors import (
    boolean_ring,
    direct_product,
    make_poly_quotient,
    make_zn,
    matrix_ring,
    triangular_ring,
    truncated_skew_series,
)
from .dsl import build_spec, parse_ring_spec
from .errors import *  # noqa: F401,F403
from .ring import FiniteRing, build_ring
from .search import Caps, CorpusEntry, WitnessQuery, corpus_generate, find_witness, parse_query
from .star import (
    Involution,
    enumerate_involutions,
    identity_involution,
    induced_involution,
    involution_by_name,
    projections,
    standard_involutions,
    validate_involution,
)
from .structure import (
    Ideal,
    RingMap,
    center,
    corner_ring,
    endomorphisms,
    frobenius_map,
    grading_validate,
    idempotents_lift,
    ideal_closure,
    is_regular_ideal,
    jacobson_radical,
    make_ideal,
    quotient_ring,
    ring_map,
)
from .theorems import CATALOG, CHECK_IDS, CheckReport, run_check, run_suite, summarize

__version__ = "0.1.0"
