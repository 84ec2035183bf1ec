"""
Canonical labelling by equitable partition refinement and backtracking.

The canonical form of a graph is the lexicographically least upper-triangle bit-string
(row-major, pair (0,1) first) over all leaves of the search tree. Leaves with equal
certificates give automorphisms, which prune sibling branches and generate the full
automorphism group.
"""
from collections import namedtuple

from ._graph import Graph, iter_bits


class CanonicalForm(namedtuple("CanonicalForm", ("n", "bits"))):
    """
    Canonical form: order n and the upper-triangle bit-string, stored as an integer whose most
    significant of the n(n-1)/2 bits is the pair (0,1).
    """

    __slots__ = ()

    def bitstring(self):
        length = self.n * (self.n - 1) // 2
        return format(self.bits, "0{}b".format(length)) if length else ""

    def to_graph(self):
        """
        The canonically relabelled graph.
        """
        n = self.n
        adj = [0] * n
        k = n * (n - 1) // 2 - 1
        for i in range(n):
            for j in range(i + 1, n):
                if (self.bits >> k) & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                k -= 1
        return Graph(n, adj, check=False)


CanonicalLabeling = namedtuple("CanonicalLabeling", ("form", "labeling", "generators"))


def _mask(cell):
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def _refine(adj, cells):
    """
    Coarsest equitable refinement of the ordered partition cells.

    A cell is split by the number of neighbours of its vertices in a splitter cell;
    fragments are ordered by increasing count. The procedure only depends on the partition,
    so it commutes with relabelling.
    """
    masks = [_mask(c) for c in cells]
    i = 0
    while i < len(cells):
        splitter = masks[i]
        new_cells = []
        new_masks = []
        split = False
        for cell, mask in zip(cells, masks):
            if len(cell) == 1:
                new_cells.append(cell)
                new_masks.append(mask)
                continue
            groups = {}
            for x in cell:
                groups.setdefault((adj[x] & splitter).bit_count(), []).append(x)
            if len(groups) == 1:
                new_cells.append(cell)
                new_masks.append(mask)
                continue
            split = True
            for count in sorted(groups):
                new_cells.append(groups[count])
                new_masks.append(_mask(groups[count]))
        if split:
            cells, masks = new_cells, new_masks
            i = 0
        else:
            i += 1
    return cells


def _certificate(adj, lab):
    n = len(lab)
    rpos = [0] * n
    for i, v in enumerate(lab):
        rpos[v] = n - 1 - i
    cert = 0
    for i, v in enumerate(lab[:-1]):
        width = n - 1 - i
        row = 0
        for u in iter_bits(adj[v]):
            row |= 1 << rpos[u]
        cert = (cert << width) | (row & ((1 << width) - 1))
    return cert


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def orbit_partition(n, generators):
    """
    Orbit representative (smallest member) of every vertex under the group generated by generators.
    """
    parent = list(range(n))
    for gamma in generators:
        for v, w in enumerate(gamma):
            rv, rw = _find(parent, v), _find(parent, w)
            if rv != rw:
                parent[max(rv, rw)] = min(rv, rw)
    return [_find(parent, v) for v in range(n)]


class _Search(object):
    def __init__(self, adj, n):
        self.adj = adj
        self.n = n
        self.best_cert = None
        self.best_lab = None
        self.generators = []

    def run(self, cells, prefix):
        cells = _refine(self.adj, cells)
        if len(cells) == self.n:
            self._leaf([c[0] for c in cells])
            return
        target = next(k for k, c in enumerate(cells) if len(c) > 1)
        cell = cells[target]
        tried = []
        for v in cell:
            if tried and self._equivalent(v, tried, prefix):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            self.run(cells[:target] + [[v], rest] + cells[target + 1 :], prefix + [v])

    def _leaf(self, lab):
        cert = _certificate(self.adj, lab)
        if self.best_cert is None or cert < self.best_cert:
            self.best_cert = cert
            self.best_lab = lab
        elif cert == self.best_cert:
            gamma = [0] * self.n
            for v, w in zip(lab, self.best_lab):
                gamma[v] = w
            self.generators.append(gamma)

    def _equivalent(self, v, tried, prefix):
        stabilizer = [gamma for gamma in self.generators if all(gamma[p] == p for p in prefix)]
        if not stabilizer:
            return False
        orbits = orbit_partition(self.n, stabilizer)
        return any(orbits[v] == orbits[u] for u in tried)


def canonical_labeling(g):
    """
    Canonical labelling of g.

    Parameters
    ----------
    g : Graph
        Any graph; the search is tuned for the enumeration range n <= 16.

    Returns
    -------
    CanonicalLabeling
        form: the CanonicalForm;
        labeling: labeling[i] is the vertex of g placed at position i of the canonical graph;
        generators: automorphisms of g (as lists v -> gamma[v]) generating its automorphism group.
    """
    n = g.n
    if n == 0:
        return CanonicalLabeling(CanonicalForm(0, 0), [], [])
    search = _Search(g.adj, n)
    search.run([list(range(n))], [])
    return CanonicalLabeling(CanonicalForm(n, search.best_cert), search.best_lab, search.generators)


def canonical_form(g):
    """
    Relabelling-invariant form of g: isomorphic graphs, and only they, share it.
    """
    return canonical_labeling(g).form


def canonical_graph(g):
    return canonical_form(g).to_graph()


def automorphism_orbits(g):
    """
    Orbits of the automorphism group of g, as sorted lists ordered by smallest member.
    """
    lab = canonical_labeling(g)
    reps = orbit_partition(g.n, lab.generators)
    orbits = {}
    for v, r in enumerate(reps):
        orbits.setdefault(r, []).append(v)
    return [orbits[r] for r in sorted(orbits)]


def are_isomorphic(g, h):
    if g.n != h.n or g.number_of_edges() != h.number_of_edges() or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
