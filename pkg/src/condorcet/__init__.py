"""Condorcet domains from never-condition schemes.

Construction (set-alternating and Fishburn alternating schemes), structure
analysis (peak-pit, copiousness, connectedness, maximality, bipartitions),
exact size counting (recurrences and closed forms), the Dyck-word bijection
for even schemes, and exhaustive enumeration of maximal domains at small n.
"""

from ._core import BACKEND
from .model import (
    Domain,
    NeverCondition,
    ResourceGuardError,
    all_triples,
    dual_domain,
    dump_domain,
    load_domain,
    order_string,
    parse_order,
    restrict_domain,
    restrict_order,
    reverse_complement,
    satisfied_conditions,
)
from .schemes import (
    Scheme,
    fishburn_scheme,
    make_scheme,
    named_set,
    read_scheme,
    set_alternating_scheme,
    write_scheme,
)
from .generate import (
    brute_force_domain,
    common_part_domain,
    count_domain,
    domain_satisfies,
    generate_domain,
)
from .analyze import (
    AnalysisReport,
    check_bipartition,
    classify,
    find_bipartition,
    find_midpoint_bipartition,
    is_condorcet,
    is_connected,
    is_copious,
    is_maximal,
    is_peak_pit,
)
from .sizes import (
    catalan,
    even_scheme_size,
    even_scheme_size_is_odd,
    fib_common_size,
    growth_report,
    half_set,
    size_half_set,
    size_recursive,
    size_single_closed,
    size_suffix_set,
)
from .graph import (
    DomainGraph,
    build_betweenness_graph,
    build_swap_graph,
    export_dot,
    graph_distances,
    is_median_graph,
    kendall_matrix,
    median_check,
)
from .dyck import (
    dyck_words,
    is_dyck_word,
    mu,
    mu_inverse,
    part_index,
    part_size_table,
    split_parts,
)
from .enumerate_all import (
    census,
    enumerate_maximal_condorcet,
    isomorphism_classes,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "BACKEND",
    "Domain",
    "DomainGraph",
    "NeverCondition",
    "ResourceGuardError",
    "Scheme",
    "all_triples",
    "brute_force_domain",
    "build_betweenness_graph",
    "build_swap_graph",
    "catalan",
    "census",
    "check_bipartition",
    "classify",
    "common_part_domain",
    "count_domain",
    "domain_satisfies",
    "dual_domain",
    "dump_domain",
    "dyck_words",
    "enumerate_maximal_condorcet",
    "even_scheme_size",
    "even_scheme_size_is_odd",
    "export_dot",
    "fib_common_size",
    "find_bipartition",
    "find_midpoint_bipartition",
    "fishburn_scheme",
    "generate_domain",
    "graph_distances",
    "growth_report",
    "half_set",
    "is_condorcet",
    "is_connected",
    "is_copious",
    "is_dyck_word",
    "is_maximal",
    "is_median_graph",
    "is_peak_pit",
    "isomorphism_classes",
    "kendall_matrix",
    "load_domain",
    "make_scheme",
    "median_check",
    "mu",
    "mu_inverse",
    "named_set",
    "order_string",
    "parse_order",
    "part_index",
    "part_size_table",
    "read_scheme",
    "restrict_domain",
    "restrict_order",
    "reverse_complement",
    "satisfied_conditions",
    "set_alternating_scheme",
    "size_half_set",
    "size_recursive",
    "size_single_closed",
    "size_suffix_set",
    "split_parts",
    "write_scheme",
    "__version__",
]
