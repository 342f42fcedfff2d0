"""Chromatic and near-chromatic symmetric functions of small simple graphs.

X_G = Σ_{S ⊆ E} (-1)^{|S|} p_{λ(S)}, where λ(S) lists the component sizes of
the spanning subgraph (V, S); Y_G = (X_G + ω X_G) / 2.
"""

from fractions import Fraction
import itertools
import logging

import networkx as nx
from networkx.utils import UnionFind
from scipy.special import comb

from gamma import linalg
from gamma.algebra import PExpansion, coefficient_rows, non_odd_support, omega
from gamma.combinat import odd_partitions, sort_to_partition
from gamma.errors import GraphSyntaxError, check_guard
from gamma.parallel import batched, run_chunks
from gamma.tableaux import MonomialPolynomial

MAX_EDGES = 25


class SimpleGraph:
    """Vertices 0..n-1 and a set of unordered edges without loops."""

    def __init__(self, n, edges=()):
        if n < 0:
            raise GraphSyntaxError(f"Vertex count must be non-negative, got {n}")
        self.n = n
        normalized = set()
        for u, v in edges:
            if u == v:
                raise GraphSyntaxError(f"Loop at vertex {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphSyntaxError(f"Edge {u}-{v} leaves the vertex range 0..{n - 1}")
            normalized.add((min(u, v), max(u, v)))
        self.edges = tuple(sorted(normalized))

    @classmethod
    def from_networkx(cls, graph):
        index = {node: i for i, node in enumerate(sorted(graph.nodes()))}
        return cls(len(index), [(index[u], index[v]) for u, v in graph.edges()])

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def is_connected(self):
        return self.n > 0 and nx.is_connected(self.to_networkx())

    def __eq__(self, other):
        return isinstance(other, SimpleGraph) and (self.n, self.edges) == (other.n, other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __str__(self):
        return f"n={self.n};edges=" + ",".join(f"{u}-{v}" for u, v in self.edges)

    def __repr__(self):
        return f"SimpleGraph({str(self)})"


def spanning_component_sizes(n, edges):
    """Component sizes of the spanning subgraph ([n], edges), as a partition."""
    forest = UnionFind(range(n))
    for u, v in edges:
        forest.union(u, v)
    return sort_to_partition(len(block) for block in forest.to_sets())


def chromatic_sym(g, max_edges=MAX_EDGES):
    """X_G by direct enumeration of all 2^|E| edge subsets."""
    check_guard("edge count", len(g.edges), max_edges)
    terms = {}
    for mask in range(1 << len(g.edges)):
        chosen = [edge for index, edge in enumerate(g.edges) if mask >> index & 1]
        key = spanning_component_sizes(g.n, chosen)
        terms[key] = terms.get(key, 0) + (-1 if len(chosen) % 2 else 1)
    return PExpansion(terms, g.n)


def near_chromatic(g, max_edges=MAX_EDGES):
    x = chromatic_sym(g, max_edges)
    return (x + omega(x)).scale(Fraction(1, 2))


def star(n):
    """S_n: vertex 0 joined to each of the other n-1 vertices."""
    if n < 1:
        raise GraphSyntaxError(f"star needs n >= 1, got {n}")
    return SimpleGraph(n, [(0, i) for i in range(1, n)])


def triangle():
    return SimpleGraph(3, [(0, 1), (1, 2), (0, 2)])


def null_graph(n):
    return SimpleGraph(n)


def path_graph(n):
    return SimpleGraph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n):
    return SimpleGraph(n, list(itertools.combinations(range(n), 2)))


def disjoint_union(g, h):
    shifted = [(u + g.n, v + g.n) for u, v in h.edges]
    return SimpleGraph(g.n + h.n, list(g.edges) + shifted)


def star_closed_form(n):
    """X_{S_n} = Σ_{r=0}^{n-1} (-1)^r C(n-1, r) p_{r+1} p_1^{n-r-1}."""
    terms = {}
    for r in range(n):
        key = sort_to_partition((r + 1,) + (1,) * (n - r - 1))
        terms[key] = (-1) ** r * comb(n - 1, r, exact=True)
    return PExpansion(terms, n)


def near_star_closed_form(n):
    """Y_{S_n}: the terms of X_{S_n} with r even."""
    terms = {}
    for r in range(0, n, 2):
        key = sort_to_partition((r + 1,) + (1,) * (n - r - 1))
        terms[key] = comb(n - 1, r, exact=True)
    return PExpansion(terms, n)


def coloring_monomial(g, k):
    """X_G(x_1, ..., x_k) as the sum over proper colourings V -> {1..k}."""
    terms = {}
    for colours in itertools.product(range(k), repeat=g.n):
        if any(colours[u] == colours[v] for u, v in g.edges):
            continue
        exponents = [0] * k
        for c in colours:
            exponents[c] += 1
        key = tuple(exponents)
        terms[key] = terms.get(key, 0) + 1
    return MonomialPolynomial(k, terms)


def disjoint_edge_pairs(g):
    return sum(1 for e, f in itertools.combinations(g.edges, 2) if not set(e) & set(f))


def all_graphs(max_vertices, up_to_isomorphism=True):
    """Every simple graph on 1..max_vertices vertices.

    Isomorphism classes come from the networkx graph atlas (at most 7
    vertices); otherwise every labelled edge set is listed.
    """
    if up_to_isomorphism:
        if max_vertices > 7:
            raise GraphSyntaxError("The graph atlas only covers graphs on at most 7 vertices")
        return [SimpleGraph.from_networkx(graph) for graph in nx.graph_atlas_g()
                if 1 <= graph.number_of_nodes() <= max_vertices]
    graphs = []
    for n in range(1, max_vertices + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            graphs.append(SimpleGraph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1]))
    return graphs


def is_star_or_triangle_with_null(g):
    """G = H ∪ null graph with H a triangle, a star or empty."""
    graph = g.to_networkx()
    nontrivial = [c for c in nx.connected_components(graph) if len(c) > 1]
    if not nontrivial:
        return True
    if len(nontrivial) > 1:
        return False
    component = graph.subgraph(nontrivial[0])
    size = component.number_of_nodes()
    edges = component.number_of_edges()
    if size == 3 and edges == 3:
        return True
    return edges == size - 1 and max(d for _, d in component.degree()) == size - 1


def _witness(f):
    key = non_odd_support(f)
    if key is None:
        return None
    return (key, f.coefficient(key))


def gamma_membership_classify(g, max_edges=MAX_EDGES):
    return _membership(g, chromatic_sym(g, max_edges))


def _membership(g, x):
    y = (x + omega(x)).scale(Fraction(1, 2))
    x_witness = _witness(x)
    y_witness = _witness(y)
    return {
        "x_in_gamma": x_witness is None,
        "y_in_gamma": y_witness is None,
        "witness": y_witness or x_witness,
        "x_witness": x_witness,
        "y_witness": y_witness,
        "structural": is_star_or_triangle_with_null(g),
    }


def family_graph(family, i):
    """The generator G_i of the family: B1 = {S1, C3, S5, S7, ...}, B2 = {S1, S3, S5, ...}."""
    if i % 2 == 0:
        raise GraphSyntaxError(f"Generators are indexed by odd sizes, got {i}")
    if family == "b1" and i == 3:
        return triangle()
    if family in ("b1", "b2"):
        return star(i)
    raise GraphSyntaxError(f"Unknown family '{family}' (expected b1 or b2)")


def y_basis_check(family, n):
    """Exact rank of {∏ Y_{G_{λ_i}} : λ ∈ OP(n)} over {p_λ : λ ∈ OP(n)}."""
    basis = odd_partitions(n)
    generators = {}
    products = []
    for la in basis:
        product = PExpansion.one()
        for part in la:
            if part not in generators:
                generators[part] = near_chromatic(family_graph(family, part))
            product = product * generators[part]
        products.append(product)
    found = linalg.rank(coefficient_rows(products, basis))
    logging.info(f"Y({family.upper()}) in degree {n}: rank {found} of {len(basis)}")
    return {"family": family, "n": n, "rank": found, "size": len(basis), "is_basis": found == len(basis)}


def parse_graph(text):
    """Graph grammar: star:N, triangle, null:N, path:N, complete:N,
    union:G1,G2,... over the named graphs, or n=N;edges=u-v,...
    """
    text = (text or "").strip()
    if not text:
        raise GraphSyntaxError("Empty graph description")
    try:
        if text.startswith("union:"):
            pieces = [p for p in text[len("union:"):].split(",") if p.strip()]
            if not pieces:
                raise GraphSyntaxError("union: needs at least one component")
            result = SimpleGraph(0)
            for piece in pieces:
                if piece.strip().startswith(("union:", "n=")):
                    raise GraphSyntaxError(f"'{piece}' cannot appear inside union:")
                result = disjoint_union(result, parse_graph(piece))
            return result
        if text.startswith("n="):
            head, _, tail = text.partition(";")
            n = int(head[2:])
            if not tail.startswith("edges="):
                raise GraphSyntaxError(f"Expected 'edges=' after '{head}' in '{text}'")
            edges = []
            for pair in tail[len("edges="):].split(","):
                if pair.strip():
                    u, v = pair.split("-")
                    edges.append((int(u), int(v)))
            return SimpleGraph(n, edges)
        name, _, arg = text.partition(":")
        builders = {"star": star, "null": null_graph, "path": path_graph, "complete": complete_graph}
        if name == "triangle" and not arg:
            return triangle()
        if name in builders and arg:
            return builders[name](int(arg))
    except GraphSyntaxError:
        raise
    except ValueError as e:
        raise GraphSyntaxError(f"Cannot read graph '{text}': {str(e)}")
    raise GraphSyntaxError(f"Unknown graph '{text}'")


def _classify_chunk(graphs):
    rows = []
    for g in graphs:
        x = chromatic_sym(g)
        verdict = _membership(g, x)
        pairs = disjoint_edge_pairs(g)
        y = (x + omega(x)).scale(Fraction(1, 2))
        coefficient = y.coefficient((2, 2) + (1,) * (g.n - 4)) if g.n >= 4 else Fraction(0)
        omega_positive = all(c >= 0 for c in omega(x).terms.values())
        rows.append((g, verdict, pairs, coefficient, omega_positive))
    return rows


def chromatic_sweep(max_vertices, workers=1, progress=False, up_to_isomorphism=True):
    """Brute-force the membership classification over every small graph.

    Checks X_G ∈ Γ ⟺ no edges, Y_G ∈ Γ ⟺ triangle/star plus isolated
    vertices, the p_(2,2,1..) coefficient of Y_G against disjoint edge pairs,
    and p-positivity of ω(X_G) on connected graphs.
    """
    graphs = all_graphs(max_vertices, up_to_isomorphism)
    logging.info(f"Chromatic sweep over {len(graphs)} graphs on at most {max_vertices} vertices")
    failures = []
    counts = {"graphs": 0, "y_in_gamma": 0, "x_in_gamma": 0}
    for rows in run_chunks(_classify_chunk, batched(graphs, 20), workers, progress, "chromatic sweep"):
        for g, verdict, pairs, coefficient, omega_positive in rows:
            counts["graphs"] += 1
            counts["y_in_gamma"] += verdict["y_in_gamma"]
            counts["x_in_gamma"] += verdict["x_in_gamma"]
            if verdict["x_in_gamma"] != (len(g.edges) == 0):
                failures.append((str(g), "X membership"))
            if verdict["y_in_gamma"] != verdict["structural"]:
                failures.append((str(g), "Y membership"))
            if coefficient != pairs:
                failures.append((str(g), "disjoint edge pairs"))
            if g.is_connected() and not omega_positive:
                failures.append((str(g), "omega(X) positivity"))
    failures.sort()
    return {"max_vertices": max_vertices, "counts": counts, "failures": failures, "ok": not failures}
