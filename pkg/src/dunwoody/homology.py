"""
Exact first homology of finitely presented groups.

Everything here runs on Python integers, so entries never overflow or
round.  Matrices are plain lists of lists.
"""
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .words import Presentation, Word

__all__ = [
    "AbelianGroup", "abelianize", "smith_normal_form", "cokernel", "homology",
    "circulant_order", "exponent_polynomial", "resultant", "determinant",
    "matmul", "identity",
]


@dataclass(frozen=True)
class AbelianGroup:
    """``Z^free_rank`` plus cyclic factors in divisibility-chain form."""

    free_rank: int
    torsion: tuple = ()

    def __post_init__(self):
        torsion = tuple(int(t) for t in self.torsion)
        if any(t < 2 for t in torsion):
            raise ValueError(f"torsion coefficients must be >= 2, got {torsion}")
        if any(b % a for a, b in zip(torsion, torsion[1:])):
            raise ValueError(f"torsion {torsion} is not a divisibility chain")
        object.__setattr__(self, "torsion", torsion)

    @property
    def order(self) -> int:
        """Order of the group, with 0 standing for infinite."""
        if self.free_rank:
            return 0
        out = 1
        for t in self.torsion:
            out *= t
        return out

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z_{t}" for t in self.torsion]
        return " ⊕ ".join(parts) if parts else "0"


def identity(k: int) -> list:
    return [[int(i == j) for j in range(k)] for i in range(k)]


def matmul(x: list, y: list) -> list:
    cols = len(y[0]) if y else 0
    return [[sum(row[k] * y[k][j] for k in range(len(y))) for j in range(cols)] for row in x]


def determinant(m: list) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    k = len(m)
    if k == 0:
        return 1
    a = [list(row) for row in m]
    sign, prev = 1, 1
    for i in range(k - 1):
        if a[i][i] == 0:
            swap = next((r for r in range(i + 1, k) if a[r][i] != 0), None)
            if swap is None:
                return 0
            a[i], a[swap] = a[swap], a[i]
            sign = -sign
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
        prev = a[i][i]
    return sign * a[k - 1][k - 1]


def abelianize(p: Presentation) -> list:
    """Exponent-sum matrix: one row per relator, one column per generator."""
    return [r.exponent_sums() for r in p.relators]


def smith_normal_form(m: list):
    """
    Smith normal form ``D = U * m * V`` with ``U``, ``V`` unimodular.

    ``D`` is diagonal with non-negative entries, each dividing the next.
    The pivot is the entry of smallest absolute value in the remaining
    block, ties broken by lowest (row, column) index.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    D = [list(map(int, row)) for row in m]
    U = identity(rows)
    V = identity(cols)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        # row dst += q * row src
        D[dst] = [x + q * y for x, y in zip(D[dst], D[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, q):
        for row in D:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(rows, cols)):
        while True:
            pivot = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if D[i][j] and (pivot is None or abs(D[i][j]) < abs(D[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            p = D[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = D[i][t] // p
                if q:
                    add_row(t, i, -q)
                dirty = dirty or D[i][t] != 0
            for j in range(t + 1, cols):
                q = D[t][j] // p
                if q:
                    add_col(t, j, -q)
                dirty = dirty or D[t][j] != 0
            if dirty:
                continue
            # Row and column are clear; enforce divisibility on the rest.
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if D[i][j] % p), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if D[t][t] < 0:
            U[t] = [-x for x in U[t]]
            D[t] = [-x for x in D[t]]
    return D, U, V


def cokernel(m: list, cols: int = None) -> AbelianGroup:
    """The abelian group presented by the rows of ``m`` as relations."""
    if cols is None:
        cols = len(m[0]) if m else 0
    if any(len(row) != cols for row in m):
        raise DomainError("relation matrix is not rectangular")
    if not m:
        return AbelianGroup(cols)
    D, _, _ = smith_normal_form(m)
    diag = [D[i][i] for i in range(min(len(D), cols))]
    rank = sum(1 for x in diag if x)
    return AbelianGroup(cols - rank, tuple(x for x in diag if x > 1))


def homology(p: Presentation) -> AbelianGroup:
    """Abelianization of the presented group, read from the Smith normal form."""
    return cokernel(abelianize(p), p.rank)


def exponent_polynomial(w: Word) -> list:
    """Coefficients, constant term first, of ``sum_j e_j t^(j-1)``."""
    return w.exponent_sums()


def _trim(f: list) -> list:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def resultant(f: list, g: list) -> int:
    """
    Resultant of two integer polynomials (coefficient lists, constant first).

    Euclid's algorithm over exact rationals, using
    ``Res(f, g) = (-1)^(deg f * deg g) * lc(g)^(deg f - deg r) * Res(g, r)``
    with ``r = f mod g``.  The zero polynomial has resultant 0 with anything.
    """
    f = [Fraction(x) for x in _trim(f)]
    g = [Fraction(x) for x in _trim(g)]
    if not f or not g:
        return 0
    result = Fraction(1)
    while True:
        df, dg = len(f) - 1, len(g) - 1
        if dg == 0:
            result *= g[0] ** df
            break
        if df == 0:
            result *= f[0] ** dg
            break
        if df < dg:
            f, g = g, f
            if (df * dg) % 2:
                result = -result
            continue
        r = list(f)
        while len(r) - 1 >= dg and r:
            q = r[-1] / g[-1]
            shift = len(r) - len(g)
            for k, x in enumerate(g):
                r[shift + k] -= q * x
            r = _trim(r)
        if not r:
            return 0
        dr = len(r) - 1
        if (df * dg) % 2:
            result = -result
        result *= g[-1] ** (df - dr)
        f, g = g, r
    assert result.denominator == 1
    return int(result)


def circulant_order(w: Word, n: int = None) -> int:
    """
    ``|Res(p_w, t^n - 1)|`` for the exponent polynomial ``p_w`` of ``w``.

    This is the order of the first homology of ``G_n(w)`` when nonzero;
    0 means the homology is infinite.
    """
    n = w.rank if n is None else n
    if n != w.rank:
        raise ValueError(f"word has rank {w.rank}, expected {n}")
    return abs(resultant(exponent_polynomial(w), [-1] + [0] * (n - 1) + [1]))
