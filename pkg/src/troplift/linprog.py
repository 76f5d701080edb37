"""Small dense exact-rational simplex, two phase, Bland's rule.

Solves max c.x subject to A x = b, x >= 0 over Fractions.  Sizes here are
tens of variables and rows (convex-hull membership and small feasibility
systems), so a dense tableau is plenty.
"""

from __future__ import annotations

from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def _pivot(tab, basis, prow, pcol):
    piv = tab[prow][pcol]
    tab[prow] = [x / piv for x in tab[prow]]
    for r in range(len(tab)):
        if r != prow and tab[r][pcol] != 0:
            f = tab[r][pcol]
            tab[r] = [a - f * b for a, b in zip(tab[r], tab[prow])]
    basis[prow - 1] = pcol


def _run(tab, basis, ncols):
    """Pivot until the objective row has no negative reduced cost."""
    while True:
        pcol = next((j for j in range(ncols) if tab[0][j] < 0), None)
        if pcol is None:
            return OPTIMAL
        prow = None
        best = None
        for r in range(1, len(tab)):
            if tab[r][pcol] > 0:
                ratio = tab[r][-1] / tab[r][pcol]
                if best is None or ratio < best or (ratio == best and basis[r - 1] < basis[prow - 1]):
                    best, prow = ratio, r
        if prow is None:
            return UNBOUNDED
        _pivot(tab, basis, prow, pcol)


def lp_maximize(c, a, b):
    """Maximize c.x over {A x = b, x >= 0}; returns (status, value).

    status is "optimal", "infeasible", or "unbounded"; value is the exact
    optimum for "optimal" and None otherwise.
    """
    m = len(a)
    n = len(a[0]) if m else len(c)
    rows = [[Fraction(x) for x in row] for row in a]
    rhs = [Fraction(x) for x in b]
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]
    total = n + m  # real variables then artificials
    tab = [[Fraction(0)] * (total + 1)]
    basis = []
    for i in range(m):
        line = rows[i] + [Fraction(0)] * m + [rhs[i]]
        line[n + i] = Fraction(1)
        tab.append(line)
        basis.append(n + i)
    # Phase 1: minimize the artificial sum; objective row starts as
    # sum of the artificial rows so the basic columns read zero.
    for j in range(total + 1):
        tab[0][j] = -sum(tab[r][j] for r in range(1, m + 1))
        if n <= j < total:
            tab[0][j] += Fraction(1)
    status = _run(tab, basis, total)
    assert status == OPTIMAL, "phase 1 cannot be unbounded"
    if -tab[0][-1] > 0:
        return INFEASIBLE, None
    # Pivot leftover artificials out of the basis or drop their rows.
    for r in range(m, 0, -1):
        if basis[r - 1] >= n:
            pcol = next((j for j in range(n) if tab[r][j] != 0), None)
            if pcol is None:
                del tab[r]
                del basis[r - 1]
            else:
                _pivot(tab, basis, r, pcol)
    # Phase 2 on the real objective.
    tab[0] = [Fraction(0)] * (total + 1)
    for j in range(n):
        tab[0][j] = -Fraction(c[j])
    for r in range(1, len(tab)):
        j = basis[r - 1]
        if tab[0][j] != 0:
            f = tab[0][j]
            tab[0] = [x - f * y for x, y in zip(tab[0], tab[r])]
    for r in range(len(tab)):
        for j in range(n, total):
            tab[r][j] = Fraction(0)  # artificials stay out
    status = _run(tab, basis, n)
    if status == UNBOUNDED:
        return UNBOUNDED, None
    return OPTIMAL, tab[0][-1]


def lp_feasible(a, b) -> bool:
    """Feasibility of {A x = b, x >= 0}."""
    status, _ = lp_maximize([0] * (len(a[0]) if a else 0), a, b)
    return status != INFEASIBLE
