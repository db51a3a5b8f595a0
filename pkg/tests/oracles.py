"""Reference computations that share no code with the package under test."""

import itertools

import networkx as nx
import sympy as sp


def nx_graph(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def floyd_warshall(g):
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(g.n)] for i in range(g.n)]
    for u, v in g.edges:
        d[u][v] = d[v][u] = 1
    for k in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def exact_eigenvalues(rows):
    """Roots of the characteristic polynomial, with multiplicity, sorted descending."""
    lam = sp.Symbol("lam")
    m = sp.Matrix(rows).applyfunc(sp.nsimplify)
    roots = sp.roots(sp.Poly((m - lam * sp.eye(m.rows)).det(), lam))
    out = []
    for r, mult in roots.items():
        out += [float(sp.N(r, 30))] * mult
    return sorted(out, reverse=True)


def count_labeled_connected(n):
    """Connected labeled graphs on n vertices, filtered with networkx."""
    pairs = list(itertools.combinations(range(n), 2))
    count = 0
    for mask in range(1 << len(pairs)):
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(p for k, p in enumerate(pairs) if mask >> k & 1)
        count += nx.is_connected(h)
    return count
