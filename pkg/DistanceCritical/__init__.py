from ._version import __version__

from .graphs import Graph, GraphError, GraphSizeError, VertexRangeError, LoopError, DuplicateEdgeError, Graph6Error
from .graphs import decode_graph6, encode_graph6, iter_graph6, to_dot, all_pairs_distances, girth, max_clique, clique_number, canonical_form, are_isomorphic, UNREACHABLE, ACYCLIC
from .criticality import NotCriticalError, DeterminingPair, CriticalityReport, GraphDescription
from .criticality import common_neighbors, determining_pairs_of, is_distance_critical, is_distance_critical_pairs, is_distance_critical_direct, involved_set, is_edge_maximal_critical, describe_graph
from .products import ProductKind, ProductLemmaReport, product, check_product_lemmas
from .constructions import GammaLayout, cycle, cycle_power, circulant, graph_power, antipodal_cycle, dodecahedron, petersen, gamma, embed_host, max_degree_extremal, regular_extremal, regular_degree_bound
from .enumeration import EnumerationTally, enumerate_graphs, enumerate_connected, survey, count_distance_critical, count_edge_maximal, sum_tallies, tally_table, connected_universe
from .enumeration import CONNECTED_COUNTS, PUBLISHED_CRITICAL, PUBLISHED_MAXIMAL
from .verify import NotATreeError, LemmaCheck, LEMMA_IDS, run_lemma, run_all, merge_lemma_checks, graham_pollak_determinant, graham_pollak_value, distance_determinant, pendant_deletion_check

__all__ = ["Graph", "GraphError", "GraphSizeError", "VertexRangeError", "LoopError", "DuplicateEdgeError", "Graph6Error"]
__all__ += ["decode_graph6", "encode_graph6", "iter_graph6", "to_dot", "all_pairs_distances", "girth", "max_clique", "clique_number", "canonical_form", "are_isomorphic", "UNREACHABLE", "ACYCLIC"]
__all__ += ["NotCriticalError", "DeterminingPair", "CriticalityReport", "GraphDescription"]
__all__ += ["common_neighbors", "determining_pairs_of", "is_distance_critical", "is_distance_critical_pairs", "is_distance_critical_direct", "involved_set", "is_edge_maximal_critical", "describe_graph"]
__all__ += ["ProductKind", "ProductLemmaReport", "product", "check_product_lemmas"]
__all__ += ["GammaLayout", "cycle", "cycle_power", "circulant", "graph_power", "antipodal_cycle", "dodecahedron", "petersen", "gamma", "embed_host", "max_degree_extremal", "regular_extremal", "regular_degree_bound"]
__all__ += ["EnumerationTally", "enumerate_graphs", "enumerate_connected", "survey", "count_distance_critical", "count_edge_maximal", "sum_tallies", "tally_table", "connected_universe"]
__all__ += ["CONNECTED_COUNTS", "PUBLISHED_CRITICAL", "PUBLISHED_MAXIMAL"]
__all__ += ["NotATreeError", "LemmaCheck", "LEMMA_IDS", "run_lemma", "run_all", "merge_lemma_checks", "graham_pollak_determinant", "graham_pollak_value", "distance_determinant", "pendant_deletion_check"]
