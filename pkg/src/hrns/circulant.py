"""Circulant integer matrices and the abelian groups they present.

An exponent vector ``(a_0, ..., a_{n-1})`` is the first row of the
relation matrix ``circ_n(a_0, ..., a_{n-1})`` of a cyclic presentation;
row ``i`` is the first row rotated right by ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import List, Sequence, Tuple

from .intpoly import IntPolynomial, poly_gcd, resultant


@dataclass(frozen=True, init=False)
class ExponentVector:
    entries: Tuple[int, ...]

    def __init__(self, entries: Sequence[int]):
        entries = tuple(int(a) for a in entries)
        if not entries:
            raise ValueError("exponent vector needs n >= 1 entries")
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    def rotate(self, k: int) -> "ExponentVector":
        k %= self.n
        return ExponentVector(self.entries[k:] + self.entries[:k])

    def matrix(self) -> List[List[int]]:
        n, a = self.n, self.entries
        return [[a[(j - i) % n] for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class AbelianGroup:
    """``Z^betti`` plus the cyclic factors ``Z_d`` for d in invariant_factors."""

    betti: int
    invariant_factors: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "invariant_factors", tuple(self.invariant_factors))
        if self.betti < 0:
            raise ValueError("negative Betti number")
        fs = self.invariant_factors
        if any(d < 2 for d in fs):
            raise ValueError(f"invariant factors must be >= 2, got {fs}")
        if any(fs[i + 1] % fs[i] for i in range(len(fs) - 1)):
            raise ValueError(f"invariant factors must form a divisibility chain, got {fs}")

    @property
    def is_finite(self) -> bool:
        return self.betti == 0

    @property
    def order(self) -> int:
        """Group order, 0 when infinite."""
        return prod(self.invariant_factors) if self.betti == 0 else 0

    @property
    def rank(self) -> int:
        """Minimum number of generators d(A)."""
        return self.betti + len(self.invariant_factors)

    def is_trivial(self) -> bool:
        return self.betti == 0 and not self.invariant_factors

    def two_rank(self) -> int:
        """Dimension of A/2A over the field with two elements."""
        return self.betti + sum(1 for d in self.invariant_factors if d % 2 == 0)

    def __str__(self) -> str:
        parts = [f"Z_{d}" for d in self.invariant_factors]
        if self.betti == 1:
            parts.append("Z")
        elif self.betti > 1:
            parts.append(f"Z^{self.betti}")
        return " + ".join(parts) if parts else "1"


def _vec(v) -> ExponentVector:
    return v if isinstance(v, ExponentVector) else ExponentVector(v)


def representer_polynomial(v) -> IntPolynomial:
    return IntPolynomial(_vec(v).entries)


def circulant_rank(v) -> int:
    v = _vec(v)
    f = representer_polynomial(v)
    if not f:
        return 0
    return v.n - poly_gcd(f, IntPolynomial.x_pow_minus_one(v.n)).degree


def circulant_det_abs(v) -> int:
    v = _vec(v)
    return abs(resultant(IntPolynomial.x_pow_minus_one(v.n), representer_polynomial(v)))


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in matrix]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    rank, prev = 0, 1
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][c]
        for i in range(rank + 1, rows):
            ai = a[i]
            m = ai[c]
            for j in range(c + 1, cols):
                ai[j] = (p * ai[j] - m * a[rank][j]) // prev
            ai[c] = 0
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


def smith_diagonal(matrix: Sequence[Sequence[int]]) -> List[int]:
    """Smith normal form diagonal of a square integer matrix.

    Min-|pivot| elimination to diagonal form, then a gcd/lcm pass to get
    the divisibility chain.  Zeros come last.
    """
    a = [list(row) for row in matrix]
    n = len(a)
    diag = []
    for k in range(n):
        while True:
            best = None
            for i in range(k, n):
                row = a[i]
                for j in range(k, n):
                    x = row[j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
                        if best[0] == 1:
                            break
                if best and best[0] == 1:
                    break
            if best is None:
                diag.extend([0] * (n - k))
                return _chain(diag)
            _, pi, pj = best
            a[k], a[pi] = a[pi], a[k]
            if pj != k:
                for row in a:
                    row[k], row[pj] = row[pj], row[k]
            p = a[k][k]
            clean = True
            pivot_row = a[k]
            for i in range(k + 1, n):
                x = a[i][k]
                if x:
                    q = x // p
                    row = a[i]
                    for j in range(k, n):
                        row[j] -= q * pivot_row[j]
                    if row[k]:
                        clean = False
            for j in range(k + 1, n):
                x = pivot_row[j]
                if x:
                    q = x // p
                    for i in range(k, n):
                        a[i][j] -= q * a[i][k]
                    if pivot_row[j]:
                        clean = False
            if clean:
                diag.append(abs(p))
                break
    return _chain(diag)


def _chain(diag: List[int]) -> List[int]:
    nz = [d for d in diag if d]
    zeros = len(diag) - len(nz)
    # (a, b) -> (gcd, lcm) sorts the nonzero entries into a divisibility chain
    for i in range(len(nz)):
        for j in range(i + 1, len(nz)):
            a, b = nz[i], nz[j]
            g = gcd(a, b)
            nz[i], nz[j] = g, a // g * b
    return nz + [0] * zeros


def smith_normal_form(v) -> List[int]:
    return smith_diagonal(_vec(v).matrix())


def invariants_from_diagonal(diag: Sequence[int]) -> AbelianGroup:
    betti = sum(1 for d in diag if d == 0)
    return AbelianGroup(betti, tuple(d for d in diag if d > 1))


def abelian_invariants(v) -> AbelianGroup:
    return invariants_from_diagonal(smith_normal_form(v))
