"""Graph operators built from small coefficient matrices.

Each operator graph is the Kronecker product of a block-pattern coefficient
matrix with the base adjacency matrix. The same graphs can be built directly
from the vertex-neighborhood rules; `construct_by_neighborhood` provides that
independent route so the two can be cross-checked entrywise.

Vertex layout is fixed: all copies of the base graph first, then the
splitting-vertex sets, with base vertex order preserved inside every block.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph, check_order


@dataclass(frozen=True)
class SplitParams:
    """Parameters of the generalized splitting operator.

    p: number of disjoint copies of the base graph.
    q: number of splitting-vertex sets wired across all copies.
    """

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ValueError(f"splitting parameters must be >= 1, got p={self.p}, q={self.q}")


@dataclass(frozen=True)
class ShadowSplitParams:
    """Parameters of the shadow-splitting operator.

    c: number of mutually shadowed copies of the base graph.
    k: number of splitting-vertex sets attached to all copies.
    """

    c: int
    k: int

    def __post_init__(self):
        if self.c < 1 or self.k < 1:
            raise ValueError(f"shadow-splitting parameters must be >= 1, got c={self.c}, k={self.k}")


@dataclass(frozen=True)
class CoefficientMatrix:
    """Small symmetric 0/1 block-pattern matrix defining an operator.

    Kronecker-multiplying `entries` with a base adjacency matrix yields the
    operator graph's adjacency matrix.
    """

    entries: np.ndarray

    def __post_init__(self):
        e = np.asarray(self.entries, dtype=np.int64)
        if e.ndim != 2 or e.shape[0] != e.shape[1] or e.shape[0] < 1:
            raise ValueError("coefficient matrix must be square and nonempty")
        if not np.isin(e, (0, 1)).all():
            raise ValueError("coefficient matrix entries must be 0 or 1")
        if not np.array_equal(e, e.T):
            raise ValueError("coefficient matrix must be symmetric")
        e = e.copy()
        e.setflags(write=False)
        object.__setattr__(self, "entries", e)

    @property
    def dimension(self) -> int:
        return self.entries.shape[0]


def coefficient_matrix_split(p: int, q: int) -> CoefficientMatrix:
    """Block matrix [[I_p, J], [J, 0_q]] of the generalized splitting operator."""
    SplitParams(p, q)
    m = np.ones((p + q, p + q), dtype=np.int64)
    m[:p, :p] = np.eye(p, dtype=np.int64)
    m[p:, p:] = 0
    return CoefficientMatrix(m)


def coefficient_matrix_shadow(c: int, k: int) -> CoefficientMatrix:
    """Block matrix [[J_c, J], [J, 0_k]] of the shadow-splitting operator."""
    ShadowSplitParams(c, k)
    m = np.ones((c + k, c + k), dtype=np.int64)
    m[c:, c:] = 0
    return CoefficientMatrix(m)


def _kron_graph(coeff: CoefficientMatrix, g: Graph, context: str) -> Graph:
    check_order(coeff.dimension * g.order, context)
    return Graph(np.kron(coeff.entries.astype(np.uint8), g.adjacency))


def generalized_splitting(g: Graph, p: int, q: int) -> Graph:
    """Generalized splitting graph: p copies of g plus q splitting sets.

    Every splitting vertex u_i is adjacent to the neighbors of vertex i in
    all p copies; the copies themselves stay disjoint. Order is (p+q) times
    the base order.
    """
    return _kron_graph(
        coefficient_matrix_split(p, q), g, f"splitting graph (p={p}, q={q})"
    )


def shadow_splitting(g: Graph, c: int, k: int) -> Graph:
    """Shadow-splitting graph: c mutually shadowed copies plus k splitting sets.

    Copies are pairwise shadowed (every vertex also adjacent to the neighbor
    images in every other copy) and each splitting vertex u_i attaches to the
    neighbors of vertex i in all c copies. Order is (c+k) times the base order.
    """
    return _kron_graph(
        coefficient_matrix_shadow(c, k), g, f"shadow-splitting graph (c={c}, k={k})"
    )


def m_shadow(g: Graph, m: int) -> Graph:
    """Shadow graph: m fully interconnected copies, adjacency kron(J_m, A)."""
    if m < 1:
        raise ValueError(f"shadow multiplicity must be >= 1, got {m}")
    check_order(m * g.order, f"shadow graph (m={m})")
    j = np.ones((m, m), dtype=np.uint8)
    return Graph(np.kron(j, g.adjacency))


def m_splitting(g: Graph, m: int) -> Graph:
    """Splitting graph with m splitting sets: one copy of g, m vertex sets."""
    if m < 1:
        raise ValueError(f"splitting multiplicity must be >= 1, got {m}")
    return generalized_splitting(g, 1, m)


def kronecker_product(g: Graph, h: Graph) -> Graph:
    """Kronecker (tensor) product of two graphs.

    Vertex pair (u, v) maps to index u * h.order + v; pairs are adjacent iff
    both coordinates are adjacent in their factors.
    """
    check_order(g.order * h.order, "Kronecker product")
    return Graph(np.kron(g.adjacency, h.adjacency))


def construct_by_neighborhood(g: Graph, params: SplitParams | ShadowSplitParams) -> Graph:
    """Build an operator graph edge-by-edge from its neighborhood rules.

    This intentionally avoids the Kronecker product: it wires every edge from
    the definitions, using the same vertex layout (copies first, then
    splitting sets, base order within blocks). The result must equal the
    coefficient-matrix route entrywise; the redundancy exists to catch
    index-convention bugs the energy formulas cannot see.
    """
    if isinstance(params, SplitParams):
        copies, splits, shadowed = params.p, params.q, False
    elif isinstance(params, ShadowSplitParams):
        copies, splits, shadowed = params.c, params.k, True
    else:
        raise TypeError(f"unsupported parameter object {params!r}")

    n = g.order
    total = (copies + splits) * n
    check_order(total, "operator graph")
    a = np.zeros((total, total), dtype=np.uint8)

    def copy_vertex(block: int, i: int) -> int:
        return block * n + i

    def split_vertex(block: int, i: int) -> int:
        return (copies + block) * n + i

    for i in range(n):
        for j in g.neighbors(i):
            # Copies keep their own edges; shadowed copies also link across
            # all pairs of copies (including back into their own copy).
            for a_block in range(copies):
                if shadowed:
                    for b_block in range(copies):
                        a[copy_vertex(a_block, i), copy_vertex(b_block, j)] = 1
                else:
                    a[copy_vertex(a_block, i), copy_vertex(a_block, j)] = 1
            # Splitting vertex u_i adjoins the neighbors of v_i in every copy.
            for s_block in range(splits):
                for c_block in range(copies):
                    a[split_vertex(s_block, i), copy_vertex(c_block, j)] = 1
                    a[copy_vertex(c_block, j), split_vertex(s_block, i)] = 1

    return Graph(np.maximum(a, a.T))
