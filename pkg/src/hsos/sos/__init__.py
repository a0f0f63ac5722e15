from .bounds import RankClass, SosBounds, classify_rank, compute_bounds, compute_k0
from .report import SosReport, dumps, render_text
from .search import (
    DEFAULT_BUDGET,
    SearchResult,
    Violation,
    candidate_pool,
    canonical_key,
    exhaustive_small_search,
    search_space_size,
)
from .theorem import (
    EXAMPLE_G,
    EXAMPLE_GENERATORS,
    STAGES,
    NecessaryCondition,
    ScalingResult,
    check_independent,
    containment_check,
    containment_pair,
    find_scaling,
    ideals_from_form,
    necessary_condition,
    scaled_form,
    verify_paper_example,
)
