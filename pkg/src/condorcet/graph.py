"""Domain graphs: adjacent-swap edges, betweenness edges, median check.

For a connected Condorcet domain the two graphs coincide, so either
can stand in for the other; both are built explicitly here and the
test corpus checks the equality rather than assuming it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from ._core import betweenness_adjacency, median_unique_ok
from .model import Domain, ResourceGuardError, order_string

BETWEENNESS_SIZE_CAP = 10_000
MEDIAN_SIZE_CAP = 5_000


@dataclass(frozen=True)
class DomainGraph:
    vertices: tuple[tuple[int, ...], ...]
    edges: frozenset[tuple[int, int]]  # index pairs, i < j

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_orders(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        return sorted(
            (self.vertices[i], self.vertices[j]) for i, j in self.edges
        )

    def adjacency(self) -> csr_matrix:
        if not self.edges:
            k = self.vertex_count
            return csr_matrix((k, k), dtype=np.int8)
        rows, cols = zip(*self.edges)
        k = self.vertex_count
        data = np.ones(len(rows), dtype=np.int8)
        m = csr_matrix((data, (rows, cols)), shape=(k, k))
        return m + m.T

    def is_connected(self) -> bool:
        if self.vertex_count <= 1:
            return True
        return connected_components(self.adjacency(), directed=False, return_labels=False) == 1


def build_swap_graph(domain: Domain) -> DomainGraph:
    """Edges join orders differing by one adjacent transposition."""
    verts = domain.orders()
    index = {o: i for i, o in enumerate(verts)}
    edges = set()
    for i, o in enumerate(verts):
        lst = list(o)
        for p in range(len(lst) - 1):
            lst[p], lst[p + 1] = lst[p + 1], lst[p]
            j = index.get(tuple(lst))
            if j is not None and i < j:
                edges.add((i, j))
            lst[p], lst[p + 1] = lst[p + 1], lst[p]
    return DomainGraph(tuple(verts), frozenset(edges))


def kendall_matrix(domain: Domain) -> np.ndarray:
    """Pairwise swap distances, computed from pair-comparison sign tables."""
    ranks = domain.ranks().astype(np.float32)
    n = domain.n
    cols = []
    for i in range(n):
        for j in range(i + 1, n):
            cols.append(np.sign(ranks[:, i] - ranks[:, j]))
    comp = np.stack(cols, axis=1)
    agree = comp @ comp.T  # in [-P, P], exact in float32 at these sizes
    p = n * (n - 1) // 2
    return ((p - agree) / 2).astype(np.int32)


def build_betweenness_graph(domain: Domain) -> DomainGraph:
    """Edges join orders with no third member between them.

    An order is between two others when it agrees with every pairwise
    comparison they share, which is exactly additivity of the swap
    distance.
    """
    if len(domain) > BETWEENNESS_SIZE_CAP:
        raise ResourceGuardError(
            f"betweenness graph needs |D| <= {BETWEENNESS_SIZE_CAP}, got {len(domain)}"
        )
    verts = domain.orders()
    dist = kendall_matrix(domain)
    if dist.size and dist.max() > np.iinfo(np.int16).max:
        raise ResourceGuardError("swap distances exceed the kernel range")
    dist = np.ascontiguousarray(dist, dtype=np.int16)
    adj = betweenness_adjacency(dist)
    ii, jj = np.nonzero(adj)
    edges = frozenset((int(i), int(j)) for i, j in zip(ii, jj) if i < j)
    return DomainGraph(tuple(verts), edges)


def graph_distances(g: DomainGraph) -> np.ndarray:
    """All-pairs hop counts; disconnected pairs come back negative."""
    d = shortest_path(g.adjacency(), method="D", unweighted=True)
    d[np.isinf(d)] = -1
    return d.astype(np.int32)


def median_check(g: DomainGraph) -> tuple[bool, Optional[tuple[int, int, int]]]:
    """Median-graph verdict plus a witness triple when it fails."""
    if g.vertex_count > MEDIAN_SIZE_CAP:
        raise ResourceGuardError(
            f"median check needs |V| <= {MEDIAN_SIZE_CAP}, got {g.vertex_count}"
        )
    if g.vertex_count == 0:
        return True, None
    if not g.is_connected():
        return False, None
    dist = np.ascontiguousarray(graph_distances(g), dtype=np.int16)
    return median_unique_ok(dist)


def is_median_graph(g: DomainGraph) -> bool:
    """Every vertex triple must admit exactly one median vertex.

    A disconnected graph fails outright (no geodesics across parts).
    """
    ok, _ = median_check(g)
    return ok


def export_dot(g: DomainGraph) -> str:
    lines = ["graph domain {"]
    for v in g.vertices:
        lines.append(f'  "{order_string(v)}";')
    for u, w in g.edge_orders():
        lines.append(f'  "{order_string(u)}" -- "{order_string(w)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def edges_csv(g: DomainGraph) -> str:
    lines = ["u,v"]
    for u, w in g.edge_orders():
        lines.append(f"{order_string(u)},{order_string(w)}")
    return "\n".join(lines) + "\n"
