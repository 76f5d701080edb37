"""Newton polytope of the symmetric determinant, for small n.

Monomial classes live in the upper-triangular exponent coordinates, where
the lattice is integral with entries 0, 1, 2.  Vertices are the classes
whose semisimple graphs have no even cycle of length >= 4; two vertices
form an edge when their graph union has at most n + 1 edges and at most
one even cycle of length >= 4.  Every edge has lattice length 1 or 2, and
a lattice length 2 edge arises from trading k >= 2 transpositions for a
2k-cycle, which sits at the edge midpoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import SizeLimit
from .monomials import (
    PUBLIC_CLASS_LIMIT,
    SignedMonomialClass,
    class_by_exponent,
    cycles_of,
    sym_det_monomials,
)
from .mpoly import perm_sign
from .tropmat import TropMatrix


def _check_n(n: int):
    if n > PUBLIC_CLASS_LIMIT:
        raise SizeLimit(f"polytope predicates support n <= {PUBLIC_CLASS_LIMIT}")


def polytope_vertices(n: int) -> tuple:
    """Classes whose graphs consist of loops, isolated edges, and odd cycles."""
    _check_n(n)
    out = []
    for cls in sym_det_monomials(n):
        if all(kind != "cycle" or len(verts) % 2 == 1 for kind, verts in cls.graph_components()):
            out.append(cls)
    return tuple(out)


def _union_graph(u: SignedMonomialClass, v: SignedMonomialClass):
    """Union of the two semisimple graphs; loops tagged separately."""
    items = u.edge_items() | v.edge_items()
    loops = {i for kind, i in ((e[0], e[1]) for e in items if e[0] == "loop")}
    edges = {e for e in items if e[0] != "loop"}
    return loops, edges


def _even_big_cycles(nverts: int, edges: set) -> int:
    """Count simple cycles of even length >= 4 in a small graph."""
    adj: dict = {i: set() for i in range(nverts)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    count = 0
    seen_cycles = set()

    def dfs(start, current, visited, length):
        nonlocal count
        for nxt in adj[current]:
            if nxt == start and length >= 3:
                key = frozenset(visited)
                if key not in seen_cycles:
                    seen_cycles.add(key)
                    if (length + 1) % 2 == 0 and length + 1 >= 4:
                        count += 1
            elif nxt > start and nxt not in visited:
                dfs(start, nxt, visited | {nxt}, length + 1)

    for s in range(nverts):
        dfs(s, s, {s}, 0)
    return count


def is_polytope_edge(u: SignedMonomialClass, v: SignedMonomialClass) -> bool:
    """Edge criterion: |E_u ∪ E_v| <= n + 1 and at most one even cycle >= 4."""
    if u == v:
        return False
    n = u.n
    loops, edges = _union_graph(u, v)
    if len(loops) + len(edges) > n + 1:
        return False
    return _even_big_cycles(n, edges) <= 1


@dataclass(frozen=True)
class NewtonEdge:
    u: SignedMonomialClass
    v: SignedMonomialClass
    lattice_length: int  # 1 or 2
    midpoint: SignedMonomialClass | None
    union_cycle_length: int | None  # even length of the midpoint cycle, lattice 2 only


def edge_lattice_data(u: SignedMonomialClass, v: SignedMonomialClass) -> NewtonEdge:
    """Lattice length and midpoint of a vertex pair that forms an edge."""
    n = u.n
    diff = [
        u.exponent[i][j] - v.exponent[i][j] for i in range(n) for j in range(n)
    ]
    if all(x % 2 == 0 for x in diff) and any(diff):
        mid = tuple(
            tuple((u.exponent[i][j] + v.exponent[i][j]) // 2 for j in range(n))
            for i in range(n)
        )
        mid_cls = class_by_exponent(n, mid)
        assert mid_cls is not None, "midpoint of a lattice-2 edge must be a monomial"
        cyc = max(
            (len(verts) for kind, verts in mid_cls.graph_components() if kind == "cycle"),
            default=None,
        )
        return NewtonEdge(u, v, 2, mid_cls, cyc)
    return NewtonEdge(u, v, 1, None, None)


def polytope_edges(n: int) -> tuple:
    _check_n(n)
    verts = polytope_vertices(n)
    out = []
    for u, v in combinations(verts, 2):
        if is_polytope_edge(u, v):
            out.append(edge_lattice_data(u, v))
    return tuple(out)


def birkhoff_edge(sigma1, sigma2) -> bool:
    """Two permutation-matrix vertices are adjacent iff their quotient is one cycle."""
    sigma1, sigma2 = tuple(sigma1), tuple(sigma2)
    if sigma1 == sigma2:
        return False
    inv2 = [0] * len(sigma2)
    for i, img in enumerate(sigma2):
        inv2[img] = i
    quotient = tuple(sigma1[inv2[i]] for i in range(len(sigma1)))
    nontrivial = [c for c in cycles_of(quotient) if len(c) >= 2]
    return len(nontrivial) == 1


def initial_form(classes, weights: TropMatrix) -> tuple:
    """Classes minimizing the weight pairing (the argmin on the polytope)."""
    values = [(cls.value(weights), cls) for cls in classes]
    best = min(v for v, _ in values)
    return tuple(cls for v, cls in values if v == best)


def edge_positive_ok(edge: NewtonEdge) -> bool:
    """Positive-part test for an edge's normal cone: opposite signs at
    lattice length 1, or a midpoint cycle length divisible by 4."""
    if edge.lattice_length == 1:
        return edge.u.sign != edge.v.sign
    return edge.union_cycle_length is not None and edge.union_cycle_length % 4 == 0


def table2_rows() -> tuple:
    """The five showcase monomials of the 4x4 symmetric determinant:
    a triangle with a loop, two loops with an isolated edge, the two
    transposition pairs, and the 4-cycle at their edge midpoint."""
    perms = ((1, 2, 0, 3), (0, 1, 3, 2), (1, 0, 3, 2), (3, 2, 1, 0), (1, 2, 3, 0))
    return tuple(SignedMonomialClass.from_permutation(p, True) for p in perms)
