"""
Exhaustive checks of the structural statements on distance-critical graphs, and the tree
distance determinant.

Every statement is turned into a per-graph predicate that returns how many instances of its
hypothesis the graph offers and whether they all satisfy the conclusion. run_lemma applies it to
every graph of an enumerated universe and records failing graphs by their graph6 string.
"""
import time
import warnings
from collections import namedtuple

import numpy as np
import sympy
from tqdm import tqdm

from .graphs import GraphError, UNREACHABLE, add_edge, all_pairs_distances, delete_vertex, encode_graph6, girth, is_connected, is_two_connected, iter_bits, clique_number
from .criticality import all_have_pairs, edge_maximal_unchecked, involved_set, determining_pairs_of
from .constructions import regular_extremal, regular_degree_bound
from .enumeration import connected_universe, graph_universe

MAX_LEMMA_ORDER = 9

LEMMA_IDS = ("GIRTH", "CYCLE5", "NO_DOM", "EDGE_ADD", "DEG3", "S_SIZE", "DPSTAR", "ANTICHAIN", "MIN_EDGES", "MAX_DEG", "REG_BOUND", "NONEDGE_S", "T_CLIQUE", "MAXL_CONN", "CLIQUE_GAP", "NONEDGES")


class NotATreeError(GraphError):
    pass


class LemmaCheck(namedtuple("LemmaCheck", ("id", "universe", "checked", "violations", "elapsed"))):
    """
    Outcome of one exhaustive check.

    checked counts the hypothesis instances met, violations lists graph6 strings of the graphs
    where the conclusion failed.
    """

    __slots__ = ()

    @property
    def passed(self):
        return not self.violations

    def to_dict(self, include_elapsed=False):
        out = {"id": self.id, "universe": self.universe, "checked": self.checked, "violations": list(self.violations), "passed": self.passed}
        if include_elapsed:
            out["elapsed"] = self.elapsed
        return out


def merge_lemma_checks(c1, c2):
    """
    Combine two partial checks of the same statement: counts add, violations concatenate.
    """
    if c1.id != c2.id:
        raise ValueError("Cannot merge checks of {} and {}".format(c1.id, c2.id))
    return LemmaCheck(c1.id, c1.universe, c1.checked + c2.checked, list(c1.violations) + list(c2.violations), c1.elapsed + c2.elapsed)


def _critical(g):
    return all_have_pairs(g.adj, g.n)


def _check_girth(g):
    if g.n == 0 or min(g.degrees()) < 2 or girth(g) <= 4:
        return 0, True
    return 1, _critical(g)


def _long_path(adj, start, target, seen, min_length):
    """
    Is there a simple path from start to target of at least min_length edges avoiding seen?
    """
    stack = [(start, seen | (1 << start), 0)]
    while stack:
        u, visited, length = stack.pop()
        for w in iter_bits(adj[u] & ~visited):
            if w == target:
                if length + 1 >= min_length:
                    return True
                continue
            stack.append((w, visited | (1 << w), length + 1))
    return False


def on_long_cycle(g, v, length=5):
    """
    True iff v lies on a cycle with at least length vertices.
    """
    nbrs = list(iter_bits(g.adj[v]))
    for i, a in enumerate(nbrs):
        for b in nbrs[i + 1:]:
            if _long_path(g.adj, a, b, 1 << v, length - 2):
                return True
    return False


def _check_cycle5(g):
    if not (_critical(g) and is_two_connected(g)):
        return 0, True
    return 1, all(on_long_cycle(g, v) for v in range(g.n))


def _check_no_dom(g):
    if not _critical(g):
        return 0, True
    return 1, max(g.degrees()) < g.n - 1


def _check_edge_add(g):
    if not _critical(g):
        return 0, True
    dist = all_pairs_distances(g).dist
    checked, ok = 0, True
    for x, y in g.non_edges():
        if dist[x, y] == UNREACHABLE or dist[x, y] <= 3:
            continue
        checked += 1
        h = add_edge(g, x, y)
        ok = ok and all_have_pairs(h.adj, h.n)
    return checked, ok


def _check_deg3(g):
    if not _critical(g):
        return 0, True
    involved = set(involved_set(g))
    checked, ok = 0, True
    for v in range(g.n):
        if g.degree(v) > 3:
            continue
        f = delete_vertex(g, v)
        if not all_have_pairs(f.adj, f.n):
            continue
        checked += 1
        ok = ok and v in involved
    return checked, ok


def _check_s_size(g):
    if not _critical(g):
        return 0, True
    s = len(involved_set(g))
    return 1, s * s > 2 * g.n


def _check_dpstar(g):
    if not _critical(g):
        return 0, True
    pairs = [determining_pairs_of(g, z) for z in range(g.n)]
    checked, ok = 0, True
    for x, y in g.non_edges():
        h = add_edge(g, x, y)
        for z in range(g.n):
            if determining_pairs_of(h, z):
                continue
            checked += 1
            ok = ok and all(a in (x, y) or b in (x, y) for a, b in pairs[z])
    return checked, ok


def _check_antichain(g):
    if not _critical(g):
        return 0, True
    adj = g.adj
    for u in range(g.n):
        for w in range(g.n):
            if u != w and adj[u] & ~adj[w] == 0:
                return 1, False
    return 1, True


def _check_min_edges(g):
    if not _critical(g):
        return 0, True
    return 1, g.number_of_edges() >= g.n


def _check_max_deg(g):
    if g.n < 6 or not _critical(g):
        return 0, True
    return 1, max(g.degrees()) <= g.n - 4


def _check_reg_bound(g):
    degrees = g.degrees()
    if g.n < 5 or min(degrees) != max(degrees) or not _critical(g):
        return 0, True
    return 1, degrees[0] <= regular_degree_bound(g.n)


def _edge_maximal_critical(g):
    return _critical(g) and edge_maximal_unchecked(g)


def _check_nonedge_s(g):
    if not _edge_maximal_critical(g):
        return 0, True
    involved = set(involved_set(g))
    return 1, all(x in involved or y in involved for x, y in g.non_edges())


def _check_t_clique(g):
    if not _edge_maximal_critical(g):
        return 0, True
    involved = set(involved_set(g))
    rest = [v for v in range(g.n) if v not in involved]
    return 1, all(g.has_edge(x, y) for i, x in enumerate(rest) for y in rest[i + 1:])


def _check_maxl_conn(g):
    if not _edge_maximal_critical(g):
        return 0, True
    return 1, is_connected(g)


def _check_clique_gap(g):
    if not _critical(g):
        return 0, True
    omega = clique_number(g)
    return 1, (g.n - omega + 1) ** 2 >= 2 * omega + 1


def _check_nonedges(g):
    if not _critical(g):
        return 0, True
    return 1, g.n * (g.n - 1) // 2 - g.number_of_edges() >= g.n


# id: (predicate, whole graph universe instead of connected graphs, universe description)
_LEMMAS = {
    "GIRTH": (_check_girth, False, "connected graphs with minimum degree >= 2 and girth > 4"),
    "CYCLE5": (_check_cycle5, False, "2-connected distance-critical graphs"),
    "NO_DOM": (_check_no_dom, False, "distance-critical graphs"),
    "EDGE_ADD": (_check_edge_add, False, "non-edges at distance > 3 in distance-critical graphs"),
    "DEG3": (_check_deg3, False, "vertices v of degree <= 3 with G and G - v distance critical"),
    "S_SIZE": (_check_s_size, False, "distance-critical graphs"),
    "DPSTAR": (_check_dpstar, False, "(non-edge xy, vertex z) with z losing its determining pairs in G + xy"),
    "ANTICHAIN": (_check_antichain, False, "distance-critical graphs"),
    "MIN_EDGES": (_check_min_edges, False, "distance-critical graphs"),
    "MAX_DEG": (_check_max_deg, False, "distance-critical graphs with n >= 6"),
    "REG_BOUND": (_check_reg_bound, False, "regular distance-critical graphs with n >= 5, and regular_extremal"),
    "NONEDGE_S": (_check_nonedge_s, False, "edge-maximal distance-critical graphs"),
    "T_CLIQUE": (_check_t_clique, False, "edge-maximal distance-critical graphs"),
    "MAXL_CONN": (_check_maxl_conn, True, "edge-maximal distance-critical graphs, connected or not"),
    "CLIQUE_GAP": (_check_clique_gap, False, "distance-critical graphs"),
    "NONEDGES": (_check_nonedges, False, "distance-critical graphs"),
}


def _check_chunk(lemma_id, graphs):
    predicate = _LEMMAS[lemma_id][0]
    checked = 0
    violations = []
    for g in graphs:
        count, ok = predicate(g)
        checked += count
        if not ok:
            violations.append(encode_graph6(g))
    return checked, violations


def _regular_witnesses(n_cap):
    checked = 0
    violations = []
    for n in range(5, n_cap + 1):
        g = regular_extremal(n)
        degrees = g.degrees()
        checked += 1
        if not (min(degrees) == max(degrees) == regular_degree_bound(n) and _critical(g)):
            violations.append(encode_graph6(g))
    return checked, violations


def _universe_for(lemma_id, n_cap, cache_dir, verbose):
    if _LEMMAS[lemma_id][1]:
        return graph_universe(n_cap, cache_dir=cache_dir, verbose=verbose)
    return connected_universe(n_cap, cache_dir=cache_dir, verbose=verbose)


def _check_arguments(lemma_id, n_cap):
    if lemma_id not in _LEMMAS:
        raise ValueError("Unknown lemma id {}, should be one of {}".format(lemma_id, LEMMA_IDS))
    if not 1 <= n_cap <= MAX_LEMMA_ORDER:
        raise ValueError("n_cap should be between 1 and {}, got {}".format(MAX_LEMMA_ORDER, n_cap))


def run_lemma(lemma_id, n_cap, n_jobs=1, verbose=False, cache_dir=None):
    """
    Check one statement over every graph with at most n_cap vertices.

    Parameters
    ----------
    lemma_id : str
        One of LEMMA_IDS.
    n_cap : int
        Largest order, 1 <= n_cap <= 9.
    n_jobs : int, default=1
        Number of joblib workers.
    verbose : bool, default=False
    cache_dir : str, default=None
        Directory of the graph6 universe cache, see connected_universe.

    Returns
    -------
    LemmaCheck
    """
    _check_arguments(lemma_id, n_cap)
    start = time.perf_counter()
    universe = _universe_for(lemma_id, n_cap, cache_dir, verbose)
    return _run_on(lemma_id, n_cap, universe, n_jobs, verbose, start)


def _run_on(lemma_id, n_cap, universe, n_jobs, verbose, start):
    description = _LEMMAS[lemma_id][2]
    if n_jobs <= 1:
        checked, violations = _check_chunk(lemma_id, tqdm(universe, disable=not verbose, desc=lemma_id))
    else:
        from joblib import Parallel, delayed

        chunks = [universe[k :: 4 * n_jobs] for k in range(4 * n_jobs)]
        results = Parallel(n_jobs=n_jobs)(delayed(_check_chunk)(lemma_id, chunk) for chunk in chunks)
        checked = sum(r[0] for r in results)
        violations = sorted(v for r in results for v in r[1])
    if lemma_id == "REG_BOUND":
        extra_checked, extra_violations = _regular_witnesses(n_cap)
        checked += extra_checked
        violations = list(violations) + extra_violations
    if lemma_id == "DEG3" and checked == 0:
        warnings.warn("DEG3: no vertex of degree <= 3 with G - v distance critical up to n = {}".format(n_cap))
    result = LemmaCheck(lemma_id, "{}, n <= {}".format(description, n_cap), checked, list(violations), time.perf_counter() - start)
    if verbose:
        tqdm.write("{}: {} checked, {} violations in {:.1f} s".format(lemma_id, result.checked, len(result.violations), result.elapsed))
    return result


def run_all(n_cap, n_jobs=1, verbose=False, cache_dir=None):
    """
    run_lemma for every id of LEMMA_IDS, in that order.

    Each universe (connected graphs, all graphs) is generated once and shared by the checks;
    the elapsed time of a check excludes the generation.
    """
    checks = []
    universes = {}
    for lemma_id in LEMMA_IDS:
        _check_arguments(lemma_id, n_cap)
        all_graphs = _LEMMAS[lemma_id][1]
        if all_graphs not in universes:
            universes[all_graphs] = _universe_for(lemma_id, n_cap, cache_dir, verbose)
        checks.append(_run_on(lemma_id, n_cap, universes[all_graphs], n_jobs, verbose, time.perf_counter()))
    return checks


def graham_pollak_value(n):
    """
    -(n-1) (-2)^(n-2), the distance determinant of every tree on n >= 2 vertices.
    """
    if n < 2:
        raise ValueError("The closed form needs n >= 2, got {}".format(n))
    return -(n - 1) * (-2) ** (n - 2)


def distance_determinant(g):
    """
    Exact determinant of the distance matrix of a connected graph, by fraction-free elimination.
    """
    if g.n == 0:
        raise GraphError("The distance matrix of the empty graph has no determinant")
    dist = all_pairs_distances(g).dist
    if (dist == UNREACHABLE).any():
        raise GraphError("The distance matrix of a disconnected graph has unreachable entries")
    return int(sympy.Matrix(dist.tolist()).det(method="bareiss"))


def _check_tree(t):
    if t.n < 2 or t.number_of_edges() != t.n - 1 or not is_connected(t):
        raise NotATreeError("Expected a tree with at least 2 vertices, got n={} with {} edges".format(t.n, t.number_of_edges()))


def graham_pollak_determinant(t):
    """
    Determinant of the distance matrix of the tree t.

    The star K_{1,3} gives -12, as does the closed form graham_pollak_value(4).

    Raises
    ------
    NotATreeError
    """
    _check_tree(t)
    return distance_determinant(t)


def pendant_deletion_check(t):
    """
    True iff deleting any leaf of the tree t keeps every remaining distance.
    """
    _check_tree(t)
    base = all_pairs_distances(t).dist
    for v in range(t.n):
        if t.degree(v) != 1:
            continue
        reduced = all_pairs_distances(delete_vertex(t, v)).dist
        kept = np.delete(np.delete(base, v, axis=0), v, axis=1)
        if not np.array_equal(kept, reduced):
            return False
    return True
