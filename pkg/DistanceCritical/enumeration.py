#!python3
# -*- coding: utf-8 -*-

"""
Isomorph-free generation of graphs by canonical augmentation, and the distance-critical tallies.

A graph on n vertices is produced from its canonical parent, the graph obtained by deleting its
designated vertex: among the eligible vertices (non-cut vertices for connected generation,
all vertices otherwise) the ones with the largest (degree, sum of neighbour degrees) key, then
the ones on the most triangles, and among those the one placed last by the canonical labelling.
A child of a parent P, made by joining a new vertex x to a subset S of V(P), is kept iff x lies
in the orbit of the designated vertex and S is the least subset of its orbit under the
automorphisms of P. Every isomorphism class is then generated exactly once.
"""
import json
import os
import time
import warnings
from collections import namedtuple

import numpy as np
import xarray as xr
from tqdm import tqdm

from .graphs import Graph, canonical_labeling, orbit_partition, component_mask, iter_bits, encode_graph6, iter_graph6
from .criticality import all_have_pairs, edge_maximal_unchecked

MAX_ENUMERATION_ORDER = 11
LONG_RUN_ORDER = 11
# vertex key (degree, sum of neighbour degrees) packed as (degree << _KEY_SHIFT) + sum
_KEY_SHIFT = 16

# A001349, A349402 and A371674, indexed by n
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080, 10: 11716571, 11: 1006700565}
PUBLISHED_CRITICAL = {1: 0, 2: 0, 3: 0, 4: 0, 5: 1, 6: 1, 7: 4, 8: 15, 9: 168, 10: 2252, 11: 94504}
PUBLISHED_MAXIMAL = {1: 0, 2: 0, 3: 0, 4: 0, 5: 1, 6: 1, 7: 2, 8: 4, 9: 14, 10: 82, 11: 557}


class EnumerationTally(namedtuple("EnumerationTally", ("n", "connected_count", "critical_count", "maximal_count", "partition", "elapsed"))):
    """
    Counts of one enumeration run.

    maximal_count is None when edge maximality was not requested, connected_count is None when the
    run skipped the connected count. partition is (shard index, shard total).
    """

    __slots__ = ()

    def to_dict(self, include_elapsed=False):
        out = {"n": self.n, "connected_count": self.connected_count, "critical_count": self.critical_count, "maximal_count": self.maximal_count, "partition": list(self.partition)}
        if include_elapsed:
            out["elapsed"] = self.elapsed
        return out


def _add_optional(x, y):
    if x is None or y is None:
        return None
    return x + y


def sum_tallies(t1, t2):
    """
    Merge two partial tallies of the same n. The partition of the result is the one of t1 when
    both agree, (0, 1) otherwise.
    """
    if t1.n != t2.n:
        raise ValueError("Cannot merge tallies for n={} and n={}".format(t1.n, t2.n))
    partition = t1.partition if t1.partition == t2.partition else (0, 1)
    return EnumerationTally(t1.n, _add_optional(t1.connected_count, t2.connected_count), t1.critical_count + t2.critical_count, _add_optional(t1.maximal_count, t2.maximal_count), partition, t1.elapsed + t2.elapsed)


def _is_non_cut(adj, v, full):
    alive = full & ~(1 << v)
    if not alive:
        return True
    source = (alive & -alive).bit_length() - 1
    return component_mask(adj, source, alive) == alive


def _triangles(adj, v):
    av = adj[v]
    return sum((adj[u] & av).bit_count() for u in iter_bits(av))


def _accept(adj, n, keys, connected):
    """
    Canonical parent test: is the last vertex in the orbit of the designated vertex?

    keys[v] is the packed (degree, sum of neighbour degrees) key of v in adj. Ties are broken
    by the number of triangles at the vertex, then by the canonical labelling.
    """
    x = n - 1
    kx = keys[x]
    full = (1 << n) - 1
    ties = [x]
    for v in range(x):
        if keys[v] < kx:
            continue
        if connected and not _is_non_cut(adj, v, full):
            continue
        if keys[v] > kx:
            return False
        ties.append(v)
    if len(ties) == 1:
        return True
    triangles = {v: _triangles(adj, v) for v in ties}
    best = max(triangles.values())
    if triangles[x] < best:
        return False
    ties = [v for v in ties if triangles[v] == best]
    if len(ties) == 1:
        return True
    lab = canonical_labeling(Graph(n, adj, check=False))
    position = [0] * n
    for i, v in enumerate(lab.labeling):
        position[v] = i
    designated = max(ties, key=lambda v: position[v])
    if designated == x:
        return True
    orbits = orbit_partition(n, lab.generators)
    return orbits[designated] == orbits[x]


def _orbit_minimal_subsets(order, generators, first):
    """
    Subsets of range(order), as bitsets >= first in increasing order, that are the least element
    of their orbit under the group generated by generators.
    """
    size = 1 << order
    if not generators:
        return range(first, size)
    images = []
    for gamma in generators:
        image = [0] * size
        for subset in range(1, size):
            low = subset & -subset
            image[subset] = image[subset ^ low] | (1 << gamma[low.bit_length() - 1])
        images.append(image)
    seen = bytearray(size)
    minimal = []
    for subset in range(first, size):
        if seen[subset]:
            continue
        minimal.append(subset)
        seen[subset] = 1
        stack = [subset]
        while stack:
            current = stack.pop()
            for image in images:
                other = image[current]
                if not seen[other]:
                    seen[other] = 1
                    stack.append(other)
    return minimal


def _children(adj, order, connected):
    """
    Accepted one-vertex extensions of the parent bitsets adj (order vertices), in subset order.

    The keys of a child are derived from the parent's: joining x to S raises the degree of every
    v in S by one and the neighbour-degree sum of v by |N(v) & S|, plus |S| when v is in S.
    """
    generators = canonical_labeling(Graph(order, adj, check=False)).generators if order > 1 else []
    deg = [a.bit_count() for a in adj]
    base = [(d << _KEY_SHIFT) + sum(deg[u] for u in iter_bits(a)) for d, a in zip(deg, adj)]
    in_subset = 1 << _KEY_SHIFT
    new_bit = 1 << order
    for subset in _orbit_minimal_subsets(order, generators, 1 if connected else 0):
        s = subset.bit_count()
        kx = (s << _KEY_SHIFT) + sum(deg[v] for v in iter_bits(subset)) + s
        keys = [b + (a & subset).bit_count() + (in_subset + s if (subset >> v) & 1 else 0) for v, (a, b) in enumerate(zip(adj, base))]
        child = [a | new_bit if (subset >> v) & 1 else a for v, a in enumerate(adj)]
        child.append(subset)
        if max(keys) < kx:
            yield child
            continue
        keys.append(kx)
        if _accept(child, order + 1, keys, connected):
            yield child


def _walk(adj, order, target, connected):
    """
    Depth-first generation of the descendants of adj at order target.
    """
    if order == target:
        yield adj
        return
    for child in _children(adj, order, connected):
        yield from _walk(child, order + 1, target, connected)


def _frontier_order(n):
    return max(1, n - 2)


def _check_shard(shard):
    if shard is None:
        return (0, 1)
    index, total = int(shard[0]), int(shard[1])
    if total < 1 or not 0 <= index < total:
        raise ValueError("Invalid shard {} of {}".format(index, total))
    return index, total


def _frontier(n, connected, shard):
    """
    The graphs at depth n - 2 of the augmentation tree that belong to shard.
    """
    index, total = shard
    level = _frontier_order(n)
    return [adj for k, adj in enumerate(_walk([0], 1, level, connected)) if k % total == index]


def _check_order(n, allow_long_run=False, low=1):
    if not low <= n <= MAX_ENUMERATION_ORDER:
        raise ValueError("Enumeration supports {} <= n <= {}, got {}".format(low, MAX_ENUMERATION_ORDER, n))
    if n >= LONG_RUN_ORDER and not allow_long_run:
        raise ValueError("n = {} takes hours, pass allow_long_run=True to run it".format(n))


def enumerate_graphs(n, connected=True, shard=None):
    """
    Generate one graph per isomorphism class on n vertices.

    Parameters
    ----------
    n : int
        Order, 1 <= n <= 11.
    connected : bool, default=True
        Restrict to connected graphs. Otherwise every graph, connected or not, is produced.
    shard : (int, int), default=None
        (index, total): only the subtrees of the frontier graphs k with k % total == index.

    Yields
    ------
    Graph
    """
    _check_order(n, allow_long_run=True)
    shard = _check_shard(shard)
    for root in _frontier(n, connected, shard):
        for adj in _walk(root, _frontier_order(n), n, connected):
            yield Graph(n, adj, check=False)


def enumerate_connected(n, visitor, shard=None):
    """
    Call visitor(graph) once for every connected graph on n vertices up to isomorphism.

    The visit order is deterministic for a fixed shard layout.
    """
    for g in enumerate_graphs(n, connected=True, shard=shard):
        visitor(g)


def _girth_above_four(adj, n):
    for u in range(n):
        au = adj[u]
        for w in range(u + 1, n):
            common = au & adj[w]
            if common and ((au >> w) & 1 or common & (common - 1)):
                return False
    return True


def is_critical_filtered(adj, n):
    """
    Pairs test behind three cheap filters: a vertex of degree below 2 or a dominating vertex
    rejects, minimum degree 2 with girth above 4 accepts.
    """
    if n == 0:
        return False
    deg = [a.bit_count() for a in adj]
    if min(deg) < 2 or max(deg) == n - 1:
        return False
    if _girth_above_four(adj, n):
        return True
    return all_have_pairs(adj, n)


def _survey_chunk(roots, n, edge_maximal, collect):
    """
    Tally the subtrees below roots. Returns (connected, critical, maximal, hits).
    """
    level = _frontier_order(n)
    n_connected = n_critical = n_maximal = 0
    hits = []
    for root in roots:
        for adj in _walk(root, level, n, True):
            n_connected += 1
            if not is_critical_filtered(adj, n):
                continue
            n_critical += 1
            is_hit = not edge_maximal
            if edge_maximal and edge_maximal_unchecked(Graph(n, adj, check=False)):
                n_maximal += 1
                is_hit = True
            if collect and is_hit:
                hits.append(tuple(adj))
    return n_connected, n_critical, n_maximal, hits


def _chunks(items, count):
    count = max(1, min(count, len(items)))
    return [items[k::count] for k in range(count)]


def survey(n, edge_maximal=False, visitor=None, shard=None, n_jobs=1, count_connected=True, allow_long_run=False, verbose=False):
    """
    Enumerate the connected graphs on n vertices and count the distance-critical ones.

    Parameters
    ----------
    n : int
        Order, 1 <= n <= 11.
    edge_maximal : bool, default=False
        Also count the edge-maximal distance-critical graphs; hits are then those graphs.
    visitor : callable, default=None
        Called with every hit (a Graph), serially and in deterministic order.
    shard : (int, int), default=None
        (index, total) partition of the frontier of the augmentation tree.
    n_jobs : int, default=1
        Number of joblib workers processing frontier subtrees.
    count_connected : bool, default=True
        Report the number of connected graphs walked, otherwise connected_count is None.
    allow_long_run : bool, default=False
        Required for n = 11.
    verbose : bool, default=False
        Progress bar and summary on stderr.

    Returns
    -------
    EnumerationTally
    """
    _check_order(n, allow_long_run=allow_long_run)
    shard = _check_shard(shard)
    start = time.perf_counter()
    roots = _frontier(n, True, shard)
    collect = visitor is not None
    n_tasks = 1 if n_jobs <= 1 else 4 * n_jobs
    tasks = _chunks(roots, n_tasks) if roots else []
    if n_jobs <= 1:
        results = (_survey_chunk(chunk, n, edge_maximal, collect) for chunk in tasks)
    else:
        from joblib import Parallel, delayed

        results = Parallel(n_jobs=n_jobs, return_as="generator")(delayed(_survey_chunk)(chunk, n, edge_maximal, collect) for chunk in tasks)
    n_connected = n_critical = n_maximal = 0
    for c, k, m, hits in tqdm(results, total=len(tasks), disable=not verbose, desc="n={}".format(n)):
        n_connected += c
        n_critical += k
        n_maximal += m
        for adj in hits:
            visitor(Graph(n, adj, check=False))
    elapsed = time.perf_counter() - start
    tally = EnumerationTally(n, n_connected if count_connected else None, n_critical, n_maximal if edge_maximal else None, shard, elapsed)
    if verbose:
        tqdm.write("n={}: {} connected, {} critical, {} edge-maximal in {:.1f} s".format(n, tally.connected_count, tally.critical_count, tally.maximal_count, elapsed))
    return tally


def count_distance_critical(n, **kwargs):
    """
    Tally of the connected distance-critical graphs on n vertices, see survey for the keywords.
    """
    return survey(n, edge_maximal=False, **kwargs)


def count_edge_maximal(n, **kwargs):
    """
    Tally including the edge-maximal distance-critical graphs on n vertices.
    """
    return survey(n, edge_maximal=True, **kwargs)


def check_published(tally):
    """
    Warn when a tally differs from the published counts. Returns True when it matches.
    """
    ok = True
    if tally.partition[1] != 1:
        return ok
    if tally.critical_count != PUBLISHED_CRITICAL[tally.n]:
        warnings.warn("n={}: {} distance-critical graphs found, {} published".format(tally.n, tally.critical_count, PUBLISHED_CRITICAL[tally.n]))
        ok = False
    if tally.maximal_count is not None and tally.maximal_count != PUBLISHED_MAXIMAL[tally.n]:
        warnings.warn("n={}: {} edge-maximal graphs found, {} published".format(tally.n, tally.maximal_count, PUBLISHED_MAXIMAL[tally.n]))
        ok = False
    if tally.connected_count is not None and tally.connected_count != CONNECTED_COUNTS[tally.n]:
        warnings.warn("n={}: {} connected graphs found, {} expected".format(tally.n, tally.connected_count, CONNECTED_COUNTS[tally.n]))
        ok = False
    return ok


def tally_table(n_values, edge_maximal=True, n_jobs=1, allow_long_run=False, verbose=False):
    """
    Counts for several orders next to the published values.

    Returns
    -------
    xarray.Dataset
        Variables connected, critical, maximal, published_critical, published_maximal over dimension n.
        maximal is -1 when edge_maximal is False.
    """
    n_values = [int(n) for n in n_values]
    tallies = [survey(n, edge_maximal=edge_maximal, n_jobs=n_jobs, allow_long_run=allow_long_run, verbose=verbose) for n in n_values]
    for tally in tallies:
        check_published(tally)
    data = {
        "connected": (["n"], np.array([t.connected_count for t in tallies], dtype=np.int64)),
        "critical": (["n"], np.array([t.critical_count for t in tallies], dtype=np.int64)),
        "maximal": (["n"], np.array([-1 if t.maximal_count is None else t.maximal_count for t in tallies], dtype=np.int64)),
        "published_critical": (["n"], np.array([PUBLISHED_CRITICAL[n] for n in n_values], dtype=np.int64)),
        "published_maximal": (["n"], np.array([PUBLISHED_MAXIMAL[n] for n in n_values], dtype=np.int64)),
    }
    return xr.Dataset(data, coords={"n": n_values}, attrs={"elapsed": float(sum(t.elapsed for t in tallies))})


def _load_cached(cache_dir, name, expected):
    path = os.path.join(cache_dir, name)
    manifest_path = os.path.join(cache_dir, "manifest.json")
    if not (os.path.exists(path) and os.path.exists(manifest_path)):
        return None
    with open(manifest_path) as f:
        manifest = json.load(f)
    if manifest.get(name) is None:
        return None
    with open(path) as f:
        graphs = list(iter_graph6(f))
    if len(graphs) != manifest[name] or (expected is not None and len(graphs) != expected):
        return None
    return graphs


def _store_cached(cache_dir, name, graphs):
    os.makedirs(cache_dir, exist_ok=True)
    with open(os.path.join(cache_dir, name), "w") as f:
        for g in graphs:
            f.write(encode_graph6(g) + "\n")
    manifest_path = os.path.join(cache_dir, "manifest.json")
    manifest = {}
    if os.path.exists(manifest_path):
        with open(manifest_path) as f:
            manifest = json.load(f)
    manifest[name] = len(graphs)
    with open(manifest_path, "w") as f:
        json.dump(manifest, f, indent=1, sort_keys=True)


def _universe(n_cap, connected, cache_dir, verbose):
    prefix = "connected" if connected else "graphs"
    universe = []
    for n in tqdm(range(1, n_cap + 1), disable=not verbose, desc=prefix):
        name = "{}_{}.g6".format(prefix, n)
        graphs = None
        if cache_dir is not None:
            graphs = _load_cached(cache_dir, name, CONNECTED_COUNTS[n] if connected else None)
        if graphs is None:
            graphs = list(enumerate_graphs(n, connected=connected))
            if cache_dir is not None:
                _store_cached(cache_dir, name, graphs)
        universe += graphs
    return universe


def connected_universe(n_cap, cache_dir=None, verbose=False):
    """
    All connected graphs with 1 to n_cap vertices, one per isomorphism class.

    Parameters
    ----------
    n_cap : int
    cache_dir : str, default=None
        When given, each order is read from or written to connected_<n>.g6 in this directory,
        with counts recorded in manifest.json. A file disagreeing with the manifest is regenerated.
    """
    _check_order(n_cap)
    return _universe(n_cap, True, cache_dir, verbose)


def graph_universe(n_cap, cache_dir=None, verbose=False):
    """
    All graphs, connected or not, with 1 to n_cap vertices, one per isomorphism class.
    """
    _check_order(n_cap)
    return _universe(n_cap, False, cache_dir, verbose)
