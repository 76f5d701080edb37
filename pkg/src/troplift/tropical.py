"""Tropical determinants, rank notions, and Barvinok factorizations.

All minima are exhaustive enumerations over permutations (or monomial
classes for the symmetric determinant), with an integer fast path: entries
are rescaled by their denominator lcm so the hot loops run on ints.
Enumeration refuses inputs above the configured bound rather than risking
a wrong uniqueness verdict; a Hungarian-method value without tie data is
available separately for larger matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

from .errors import SizeLimit
from .monomials import SignedMonomialClass, _classes
from .tropmat import TropMatrix, trop_mat_mul  # noqa: F401  (re-exported)

ENUMERATION_BOUND = 8


@dataclass(frozen=True)
class TropDetResult:
    min_value: Fraction
    argmin: tuple  # SignedMonomialClass, all attaining the minimum
    tie: bool


def _check_square(a: TropMatrix, bound: int):
    if not a.is_square():
        raise SizeLimit(f"determinant needs a square matrix, got {a.rows}x{a.cols}")
    if a.rows > bound:
        raise SizeLimit(f"enumeration bound {bound} exceeded (n = {a.rows})")


def trop_det(a: TropMatrix, bound: int = ENUMERATION_BOUND) -> TropDetResult:
    """Minimum over all permutation monomials, with the full argmin set."""
    _check_square(a, bound)
    n = a.rows
    scale, grid = a.as_int_grid()
    best = None
    arg: list = []
    for sigma in permutations(range(n)):
        v = sum(grid[i][sigma[i]] for i in range(n))
        if best is None or v < best:
            best = v
            arg = [sigma]
        elif v == best:
            arg.append(sigma)
    classes = tuple(SignedMonomialClass.from_permutation(s, False) for s in arg)
    return TropDetResult(Fraction(best, scale), classes, len(arg) >= 2)


def sym_trop_det(a: TropMatrix, bound: int = ENUMERATION_BOUND) -> TropDetResult:
    """Minimum over monomial classes of the symmetric determinant."""
    _check_square(a, bound)
    if not a.symmetric:
        a = TropMatrix.make(a.entries, symmetric=True)
    n = a.rows
    best = None
    arg: list = []
    for cls in _classes(n, True):
        v = cls.value(a)
        if best is None or v < best:
            best = v
            arg = [cls]
        elif v == best:
            arg.append(cls)
    return TropDetResult(best, tuple(arg), len(arg) >= 2)


def assignment_min(a: TropMatrix) -> Fraction:
    """Optimal-assignment value by the Hungarian method (no tie data)."""
    from scipy.optimize import linear_sum_assignment

    scale, grid = a.as_int_grid()
    rows, cols = linear_sum_assignment(grid)
    return Fraction(sum(grid[i][j] for i, j in zip(rows, cols)), scale)


def _grid_nonsingular(grid, rows, cols) -> bool:
    """Unique-minimum test for the plain tropical determinant of a subgrid."""
    best = None
    hits = 0
    for sigma in permutations(range(len(rows))):
        v = 0
        for i, s in enumerate(sigma):
            v += grid[rows[i]][cols[s]]
        if best is None or v < best:
            best = v
            hits = 1
        elif v == best:
            hits += 1
            # not unique; keep scanning only if a lower value may exist
    return hits == 1


def _grid_sym_nonsingular(a: TropMatrix, idx) -> bool:
    sub = TropMatrix.make(
        [[a[i, j] for j in idx] for i in idx], symmetric=True
    )
    best = None
    hits = 0
    for cls in _classes(len(idx), True):
        v = cls.value(sub)
        if best is None or v < best:
            best, hits = v, 1
        elif v == best:
            hits += 1
    return hits == 1


def trop_rank(a: TropMatrix, bound: int = ENUMERATION_BOUND) -> int:
    """Largest size of a tropically nonsingular square submatrix.

    Tropically nonsingular matrices contain nonsingular submatrices of
    every smaller size, so the search ascends and stops at the first size
    with no nonsingular submatrix.
    """
    _, grid = a.as_int_grid()
    d, n = a.rows, a.cols
    rank = 0
    for k in range(1, min(d, n) + 1):
        if k > bound:
            raise SizeLimit(f"rank certification needs {k} <= bound {bound}")
        found = False
        for rows in combinations(range(d), k):
            for cols in combinations(range(n), k):
                if _grid_nonsingular(grid, rows, cols):
                    found = True
                    break
            if found:
                break
        if not found:
            return rank
        rank = k
    return rank


def sym_trop_rank(a: TropMatrix, bound: int = ENUMERATION_BOUND) -> int:
    """Largest nonsingular submatrix size, using the symmetric determinant
    (class ties) on principal submatrices and the plain one elsewhere."""
    if not a.symmetric:
        a = TropMatrix.make(a.entries, symmetric=True)
    _, grid = a.as_int_grid()
    n = a.rows
    rank = 0
    for k in range(1, n + 1):
        if k > bound:
            raise SizeLimit(f"rank certification needs {k} <= bound {bound}")
        found = False
        for rows in combinations(range(n), k):
            for cols in combinations(range(n), k):
                if rows == cols:
                    ok = _grid_sym_nonsingular(a, rows)
                else:
                    ok = _grid_nonsingular(grid, rows, cols)
                if ok:
                    found = True
                    break
            if found:
                break
        if not found:
            return rank
        rank = k
    return rank


def barvinok_rank2(a: TropMatrix, bound: int = ENUMERATION_BOUND):
    """Decide Barvinok rank <= 2 and build a factorization witness.

    Returns (flag, witness, reason); witness is a pair (B, C) of TropMatrix
    factors with A = B ⊙ C through at most two inner dimensions.  A matrix
    has Barvinok rank <= 2 exactly when its bicolored tree is a
    caterpillar, and the witness reads the factors off the spine.
    """
    from . import trees

    rank = trop_rank(a, bound)
    if rank > 2:
        return False, None, {"kind": "rank_too_high", "tropical_rank": rank}
    tree = trees.tree_from_rank2(a, bound=bound)
    if not trees.is_caterpillar(tree):
        return False, None, {"kind": "tree_not_caterpillar"}
    b, c = _caterpillar_witness(a, tree)
    assert trop_mat_mul(b, c).entries == a.entries, "witness must reproduce the matrix"
    return True, (b, c), {"kind": "caterpillar"}


def _spine_coordinates(tree):
    """Arc-length coordinate of every node along a caterpillar spine."""
    adj = tree.adj
    if tree.nodes == 1:
        return {0: Fraction(0)}
    ends = sorted(u for u in range(tree.nodes) if len(adj[u]) == 1)
    start = ends[0]
    coord = {start: Fraction(0)}
    prev, cur = None, start
    while True:
        nxt = [v for v in adj[cur] if v != prev]
        if not nxt:
            break
        (v,) = nxt
        coord[v] = coord[cur] + adj[cur][v]
        prev, cur = cur, v
    return coord


def _caterpillar_witness(a: TropMatrix, tree):
    coord = _spine_coordinates(tree)
    d, n = a.rows, a.cols
    p = [coord[tree.leaf_node("red", i + 1)] for i in range(d)]
    q = [coord[tree.leaf_node("blue", j + 1)] for j in range(n)]
    # Gauge: a_ij = c_i + c'_j - |p_i - q_j| / 2.
    cp0 = Fraction(0)
    c = [a[i, 0] + abs(p[i] - q[0]) / 2 - cp0 for i in range(d)]
    cp = [a[0, j] + abs(p[0] - q[j]) / 2 - c[0] for j in range(n)]
    b = TropMatrix.make([[c[i] - p[i] / 2, c[i] + p[i] / 2] for i in range(d)])
    cmat = TropMatrix.make([[cp[j] + q[j] / 2 for j in range(n)], [cp[j] - q[j] / 2 for j in range(n)]])
    return b, cmat


def sym_barvinok_rank2(a: TropMatrix, bound: int = ENUMERATION_BOUND):
    """Decide symmetric Barvinok rank <= 2 with a witness B, A = B ⊙ B^T.

    Holds exactly when the symbic tree is a caterpillar whose color-swap
    automorphism fixes a single point; the two factor columns correspond
    to the two sides of that fixed point.
    """
    from . import trees

    if not a.symmetric:
        a = TropMatrix.make(a.entries, symmetric=True)
    rank = trop_rank(a, bound)
    if rank > 2:
        return False, None, {"kind": "rank_too_high", "tropical_rank": rank}
    tree = trees.tree_from_rank2(a, bound=bound)
    report = trees.symbic_classify(tree)
    if report.kind != "symbic":
        return False, None, {"kind": report.kind}
    if not trees.is_caterpillar(tree):
        return False, None, {"kind": "tree_not_caterpillar"}
    if not report.one_fixed_point:
        return False, None, {"kind": "fixed_path_not_point"}
    b = _sym_caterpillar_witness(a, tree, report)
    assert trop_mat_mul(b, b.transpose()).entries == a.entries
    return True, b, {"kind": "one_fixed_point_caterpillar"}


def _sym_caterpillar_witness(a: TropMatrix, tree, report):
    coord = _spine_coordinates(tree)
    n = a.rows
    if report.fixed_nodes:
        center = coord[report.fixed_nodes[0]]
    else:
        u, v = report.swapped_edge
        center = (coord[u] + coord[v]) / 2
    side = []
    dist = []
    for i in range(n):
        x = coord[tree.leaf_node("blue", i + 1)]
        dist.append(abs(x - center))
        side.append(0 if x == center else (1 if x > center else -1))
    shift = [a[i, i] / 2 for i in range(n)]
    ref = next((s for s in side if s != 0), 1)
    rows = []
    for i in range(n):
        if side[i] == 0 or side[i] == ref:
            rows.append([shift[i], shift[i] + dist[i]])
        else:
            rows.append([shift[i] + dist[i], shift[i]])
    return TropMatrix.make(rows)
