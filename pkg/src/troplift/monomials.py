"""Monomial classes of the determinant and the symmetric determinant.

A monomial of the n x n determinant is a permutation.  In the symmetric
determinant, permutations that differ only by reorienting cycles give the
same monomial, so a class stores an upper-triangular exponent matrix with
entries 0, 1, 2 (diagonal 0 or 1), the common sign, and the coefficient
2^(number of cycles of length >= 3).  Classes double as vertices of the
Newton polytope via their semisimple graphs: components are loops (fixed
points), isolated edges (transpositions), and cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .errors import SizeLimit
from .mpoly import perm_sign
from .tropmat import TropMatrix

INTERNAL_CLASS_LIMIT = 8
PUBLIC_CLASS_LIMIT = 7


def cycles_of(sigma) -> list[tuple[int, ...]]:
    """Cycle decomposition, fixed points included, each cycle from its minimum."""
    seen = [False] * len(sigma)
    out = []
    for i in range(len(sigma)):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = sigma[j]
        out.append(tuple(cyc))
    return out


@dataclass(frozen=True)
class SignedMonomialClass:
    exponent: tuple  # n x n integer matrix; upper-triangular when symmetric
    sign: int
    coefficient: int
    representative: tuple
    cycle_type: tuple
    symmetric: bool

    @staticmethod
    def from_permutation(sigma, symmetric: bool) -> "SignedMonomialClass":
        sigma = tuple(sigma)
        n = len(sigma)
        cycles = cycles_of(sigma)
        exp = [[0] * n for _ in range(n)]
        if symmetric:
            for i, img in enumerate(sigma):
                a, b = min(i, img), max(i, img)
                exp[a][b] += 1
        else:
            for i, img in enumerate(sigma):
                exp[i][img] = 1
        coeff = 1
        if symmetric:
            coeff = 2 ** sum(1 for c in cycles if len(c) >= 3)
        return SignedMonomialClass(
            exponent=tuple(tuple(r) for r in exp),
            sign=perm_sign(sigma),
            coefficient=coeff,
            representative=sigma,
            cycle_type=tuple(sorted(len(c) for c in cycles)),
            symmetric=symmetric,
        )

    @property
    def n(self) -> int:
        return len(self.exponent)

    def value(self, weights: TropMatrix) -> Fraction:
        """Tropical value <exponent, weights> of the class on a weight matrix."""
        total = Fraction(0)
        for i in range(self.n):
            row = self.exponent[i]
            for j in range(self.n):
                if row[j]:
                    total += row[j] * weights[i, j]
        return total

    def graph_components(self) -> list[tuple]:
        """Semisimple-graph components: ('loop', (i,)), ('edge', (i, j)) or ('cycle', verts)."""
        out = []
        for cyc in cycles_of(self.representative):
            if len(cyc) == 1:
                out.append(("loop", cyc))
            elif len(cyc) == 2:
                out.append(("edge", tuple(sorted(cyc))))
            else:
                out.append(("cycle", cyc))
        return out

    def edge_items(self) -> frozenset:
        """Edges of the semisimple graph; loops tagged, multi-edges collapsed."""
        items = set()
        for i in range(self.n):
            for j in range(i, self.n):
                e = self.exponent[i][j] + (self.exponent[j][i] if j > i else 0)
                if e:
                    items.add(("loop", i) if i == j else (i, j))
        return frozenset(items)

    def monomial_str(self) -> str:
        bits = []
        if self.coefficient != 1:
            bits.append(str(self.coefficient))
        for i in range(self.n):
            for j in range(i, self.n):
                e = self.exponent[i][j]
                if e:
                    var = f"x{i + 1}{j + 1}"
                    bits.append(var if e == 1 else f"{var}^{e}")
        lead = "-" if self.sign < 0 else ""
        return lead + "*".join(bits)


@lru_cache(maxsize=None)
def _classes(n: int, symmetric: bool) -> tuple:
    if n > INTERNAL_CLASS_LIMIT:
        raise SizeLimit(f"monomial enumeration capped at n = {INTERNAL_CLASS_LIMIT}")
    if not symmetric:
        return tuple(
            SignedMonomialClass.from_permutation(s, False) for s in permutations(range(n))
        )
    by_exp = {}
    for sigma in permutations(range(n)):
        cls = SignedMonomialClass.from_permutation(sigma, True)
        prev = by_exp.get(cls.exponent)
        if prev is None or cls.representative < prev.representative:
            by_exp[cls.exponent] = cls
    return tuple(sorted(by_exp.values(), key=lambda c: c.exponent))


def sym_det_monomials(n: int) -> tuple:
    """All monomial classes of the n x n symmetric determinant."""
    if n > PUBLIC_CLASS_LIMIT:
        raise SizeLimit(f"symmetric monomial enumeration supports n <= {PUBLIC_CLASS_LIMIT}")
    return _classes(n, True)


def class_by_exponent(n: int, exponent: tuple) -> SignedMonomialClass | None:
    for cls in _classes(n, True):
        if cls.exponent == exponent:
            return cls
    return None
