from ._graph import Graph, GraphError, GraphSizeError, VertexRangeError, LoopError, DuplicateEdgeError, MAX_ORDER
from ._graph import iter_bits, bits_to_list, empty_graph, complete_graph, path_graph, star_graph, delete_vertex, add_edge, induced_subgraph, relabel, disjoint_union, to_dot
from ._graph6 import Graph6Error, decode_graph6, encode_graph6, iter_graph6, strip_graph6_header
from ._distances import DistanceTable, UNREACHABLE, ACYCLIC, all_pairs_distances, is_connected, is_two_connected, connected_components, component_mask, girth
from ._canonical import CanonicalForm, CanonicalLabeling, canonical_form, canonical_labeling, canonical_graph, automorphism_orbits, orbit_partition, are_isomorphic
from ._clique import max_clique, clique_number

__all__ = ["Graph", "GraphError", "GraphSizeError", "VertexRangeError", "LoopError", "DuplicateEdgeError", "MAX_ORDER"]
__all__ += ["iter_bits", "bits_to_list", "empty_graph", "complete_graph", "path_graph", "star_graph", "delete_vertex", "add_edge", "induced_subgraph", "relabel", "disjoint_union", "to_dot"]
__all__ += ["Graph6Error", "decode_graph6", "encode_graph6", "iter_graph6", "strip_graph6_header"]
__all__ += ["DistanceTable", "UNREACHABLE", "ACYCLIC", "all_pairs_distances", "is_connected", "is_two_connected", "connected_components", "component_mask", "girth"]
__all__ += ["CanonicalForm", "CanonicalLabeling", "canonical_form", "canonical_labeling", "canonical_graph", "automorphism_orbits", "orbit_partition", "are_isomorphic"]
__all__ += ["max_clique", "clique_number"]
