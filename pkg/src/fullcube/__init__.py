"""Full vertices of induced hypercube subgraphs, Kruskal-Katona tools and
two-part induced edge covers of Q_k."""
from .binomial import (
    ArithmeticOverflow,
    BinomialRep,
    binomial,
    check_claim_superadd,
    check_lemma1,
    check_lemma2,
    check_lemma3,
    ubr,
    upper_boundary,
)
from .cover import (
    CoverPair,
    extremal_cover,
    is_edge_cover,
    minmax_cover_bruteforce,
    minmax_cover_formula,
    minmax_lower_bound,
)
from .hypercube import (
    BudgetExceeded,
    HcrDecomp,
    VertexSet,
    decompose,
    edge_max_bruteforce,
    edge_max_formula,
    edge_max_recurrence,
    extremal_set,
    full_vertices,
    hcr,
    phi_bruteforce,
    phi_formula,
    phi_recurrence,
)
from .kruskal_katona import (
    FVector,
    SetFamily,
    apex_union,
    build_complex,
    colex_rank,
    colex_unrank,
    first_sets,
    is_complex,
    is_f_vector,
)

__version__ = "0.1.0"
