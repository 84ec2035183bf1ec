"""
Exact maximum clique by branch and bound with a greedy colouring bound.
"""
from ._graph import iter_bits


def _colour_classes(adj, candidates):
    """
    Greedy sequential colouring of candidates.

    Returns the list of (vertex, colour) in colouring order; colours start at 1 and the last
    colour bounds the clique number of the candidate set.
    """
    order = []
    colour = 0
    uncoloured = candidates
    while uncoloured:
        colour += 1
        available = uncoloured
        while available:
            low = available & -available
            v = low.bit_length() - 1
            order.append((v, colour))
            uncoloured ^= low
            available &= ~adj[v] & ~low
    return order


def _expand(adj, clique, candidates, best):
    for v, colour in reversed(_colour_classes(adj, candidates)):
        if len(clique) + colour <= len(best):
            return
        clique.append(v)
        inner = candidates & adj[v]
        if inner:
            _expand(adj, clique, inner, best)
        elif len(clique) > len(best):
            best[:] = clique
        clique.pop()
        candidates &= ~(1 << v)


def _has_clique(adj, candidates, k):
    if k == 0:
        return True
    if candidates.bit_count() < k:
        return False
    order = _colour_classes(adj, candidates)
    if order[-1][1] < k:
        return False
    for v in iter_bits(candidates):
        above = candidates & ~((1 << (v + 1)) - 1)
        if _has_clique(adj, above & adj[v], k - 1):
            return True
    return False


def clique_number(g):
    if g.n == 0:
        return 0
    best = []
    _expand(g.adj, [], g.vertex_mask, best)
    return len(best)


def max_clique(g):
    """
    A maximum clique of g.

    Among all maximum cliques, the lexicographically least sorted vertex list is returned.

    Parameters
    ----------
    g : Graph

    Returns
    -------
    list of int
    """
    omega = clique_number(g)
    adj = g.adj
    clique = []
    candidates = g.vertex_mask
    while len(clique) < omega:
        for v in iter_bits(candidates):
            above = candidates & ~((1 << (v + 1)) - 1)
            if _has_clique(adj, above & adj[v], omega - len(clique) - 1):
                clique.append(v)
                candidates = above & adj[v]
                break
    return clique
