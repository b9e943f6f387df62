"""Cyclic presentations G_n(w) and the generalized Fibonacci groups H(r, n, s).

Only abelianized data is computed: a word is reduced to its exponent-sum
vector, and everything downstream is circulant-matrix arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .circulant import AbelianGroup, ExponentVector, abelian_invariants, circulant_det_abs
from .intpoly import IntPolynomial

Letter = Tuple[int, int]


@dataclass(frozen=True)
class CyclicWord:
    """A word in x_0..x_{n-1}; letters are (generator index, +1 or -1)."""

    n: int
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple((int(i), int(e)) for i, e in self.letters))
        if self.n < 1:
            raise ValueError("a cyclic word needs n >= 1 generators")
        for i, e in self.letters:
            if not 0 <= i < self.n:
                raise ValueError(f"generator index {i} out of range for n={self.n}")
            if e not in (1, -1):
                raise ValueError(f"letter exponent must be +1 or -1, got {e}")

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"x{i}" if e == 1 else f"x{i}^-1" for i, e in self.letters)


@dataclass(frozen=True)
class HParams:
    r: int
    n: int
    s: int

    def __post_init__(self):
        for name in ("r", "n", "s"):
            if isinstance(getattr(self, name), bool) or not isinstance(getattr(self, name), int):
                raise TypeError(f"{name} must be an integer")
        if self.r < 1 or self.s < 1:
            raise ValueError(f"need r, s >= 1, got r={self.r}, s={self.s}")
        if self.n < 2:
            raise ValueError(f"need n >= 2, got n={self.n}")

    def astuple(self) -> Tuple[int, int, int]:
        return (self.r, self.n, self.s)

    def __str__(self) -> str:
        return f"H({self.r},{self.n},{self.s})"


def _params(p) -> HParams:
    return p if isinstance(p, HParams) else HParams(*p)


def h_word(p) -> CyclicWord:
    """Relator x_0...x_{r-1} (x_r...x_{r+s-1})^-1 with indices mod n."""
    p = _params(p)
    pos = [(j % p.n, 1) for j in range(p.r)]
    neg = [((p.r + p.s - 1 - j) % p.n, -1) for j in range(p.s)]
    return CyclicWord(p.n, tuple(pos + neg))


def h_polynomial(p) -> IntPolynomial:
    """Unreduced representer polynomial 1 + ... + t^(r-1) - t^r - ... - t^(r+s-1)."""
    p = _params(p)
    return IntPolynomial([1] * p.r + [-1] * p.s)


def exponent_vector(w: CyclicWord) -> ExponentVector:
    a = [0] * w.n
    for i, e in w.letters:
        a[i] += e
    return ExponentVector(a)


def abelianization(w: CyclicWord) -> AbelianGroup:
    return abelian_invariants(exponent_vector(w))


def h_exponent_vector(p) -> ExponentVector:
    return exponent_vector(h_word(p))


def h_abelianization(p) -> AbelianGroup:
    return abelianization(h_word(p))


def ab_order(p) -> int:
    """|H(r,n,s)^ab| via the circulant determinant; 0 encodes infinite."""
    return circulant_det_abs(h_exponent_vector(p))
