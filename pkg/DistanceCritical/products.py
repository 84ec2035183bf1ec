"""
Cartesian, tensor and strong products.

Vertex (i, j) of a product of g and h has index i * h.n + j.
"""
import enum
from collections import namedtuple

from tqdm import tqdm

from .graphs import Graph, GraphSizeError, MAX_ORDER, iter_bits, encode_graph6
from .criticality import all_have_pairs


class ProductKind(enum.Enum):
    CARTESIAN = "cartesian"
    TENSOR = "tensor"
    STRONG = "strong"


ProductLemmaReport = namedtuple("ProductLemmaReport", ("n_cap", "cartesian_checked", "tensor_checked", "strong_checked", "violations"))


def product(kind, g, h):
    """
    Product of g and h.

    Parameters
    ----------
    kind : ProductKind or str
        "cartesian": (x, y) ~ (x', y') iff x = x' and y ~ y', or y = y' and x ~ x'.
        "tensor": iff x ~ x' and y ~ y'.
        "strong": iff the pairs are distinct and each coordinate is equal or adjacent.
    g, h : Graph

    Returns
    -------
    Graph on g.n * h.n vertices
    """
    kind = ProductKind(kind)
    ng, nh = g.n, h.n
    if ng * nh > MAX_ORDER:
        raise GraphSizeError("Product of orders {} and {} exceeds {} vertices".format(ng, nh, MAX_ORDER))
    adj = []
    for i in range(ng):
        gi = g.adj[i]
        for j in range(nh):
            hj = h.adj[j]
            row_i = hj << (i * nh)
            column_j = 0
            tensor = 0
            for k in iter_bits(gi):
                column_j |= 1 << (k * nh + j)
                tensor |= hj << (k * nh)
            if kind is ProductKind.CARTESIAN:
                adj.append(row_i | column_j)
            elif kind is ProductKind.TENSOR:
                adj.append(tensor)
            else:
                adj.append(row_i | column_j | tensor)
    return Graph(ng * nh, adj, check=False)


def _check_pair(kind, g, h):
    return all_have_pairs(product(kind, g, h).adj, g.n * h.n)


def check_product_lemmas(n_cap, n_jobs=1, verbose=False):
    """
    Exhaustive check of the three product preservation statements.

    Over all connected graphs with at most n_cap vertices:
    G critical implies G cartesian H critical for every H; G and H critical imply the tensor and
    the strong products critical.

    Parameters
    ----------
    n_cap : int
        Largest factor order, at most 6.
    n_jobs : int, default=1
        Number of joblib workers.

    Returns
    -------
    ProductLemmaReport
        violations lists (kind, graph6 of G, graph6 of H).
    """
    from .enumeration import connected_universe

    if not 1 <= n_cap <= 6:
        raise ValueError("n_cap should be between 1 and 6, got {}".format(n_cap))
    universe = connected_universe(n_cap, verbose=verbose)
    critical = [g for g in universe if all_have_pairs(g.adj, g.n)]
    tasks = [(ProductKind.CARTESIAN, g, h) for g in critical for h in universe]
    tasks += [(kind, g, h) for kind in (ProductKind.TENSOR, ProductKind.STRONG) for g in critical for h in critical]
    if n_jobs <= 1:
        results = [_check_pair(kind, g, h) for kind, g, h in tqdm(tasks, disable=not verbose, desc="products")]
    else:
        from joblib import Parallel, delayed

        results = Parallel(n_jobs=n_jobs)(delayed(_check_pair)(kind, g, h) for kind, g, h in tasks)
    counts = {kind: 0 for kind in ProductKind}
    violations = []
    for (kind, g, h), ok in zip(tasks, results):
        counts[kind] += 1
        if not ok:
            violations.append((kind.value, encode_graph6(g), encode_graph6(h)))
    if verbose:
        tqdm.write("products: {} checks, {} violations".format(len(tasks), len(violations)))
    return ProductLemmaReport(n_cap, counts[ProductKind.CARTESIAN], counts[ProductKind.TENSOR], counts[ProductKind.STRONG], violations)
