"""Dense polynomials with arbitrary-precision integer coefficients.

Coefficients are stored low degree first, so ``IntPolynomial((1, 1, -1))``
is ``1 + t - t^2``.  Everything here is exact; nothing ever goes through
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from math import gcd
from typing import Iterable, Optional, Sequence, Tuple


@dataclass(frozen=True, init=False)
class IntPolynomial:
    coeffs: Tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * k + [c])

    @classmethod
    def x_pow_minus_one(cls, n: int) -> "IntPolynomial":
        """``t^n - 1``."""
        return cls([-1] + [0] * (n - 1) + [1]) if n > 0 else cls()

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        m = max(len(self), len(other))
        return IntPolynomial(self[i] + other[i] for i in range(m))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        m = max(len(self), len(other))
        return IntPolynomial(self[i] - other[i] for i in range(m))

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def content(self) -> int:
        return reduce(gcd, self.coeffs, 0)

    def primitive(self) -> "IntPolynomial":
        """Primitive part, normalized to a positive leading coefficient."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return IntPolynomial(x // c for x in self.coeffs)

    def exact_div_scalar(self, c: int) -> "IntPolynomial":
        q = []
        for x in self.coeffs:
            d, r = divmod(x, c)
            if r:
                raise ArithmeticError(f"{c} does not divide {self}")
            q.append(d)
        return IntPolynomial(q)

    def divmod_exact(self, divisor: "IntPolynomial") -> Tuple["IntPolynomial", "IntPolynomial"]:
        """Division in Z[t] when every quotient coefficient is integral.

        Always fine for monic divisors.  Raises ArithmeticError if a
        non-integral quotient coefficient shows up.
        """
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dd = divisor.degree
        lc = divisor.lc
        if len(r) - 1 < dd:
            return IntPolynomial(), self
        q = [0] * (len(r) - dd)
        for k in range(len(r) - 1 - dd, -1, -1):
            c, rem = divmod(r[k + dd], lc)
            if rem:
                raise ArithmeticError(f"{divisor} does not divide {self} over Z")
            q[k] = c
            if c:
                for j, b in enumerate(divisor.coeffs):
                    r[k + j] -= c * b
        return IntPolynomial(q), IntPolynomial(r[:dd])

    def pseudo_rem(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """Pseudo-remainder: lc(divisor)^(deg self - deg divisor + 1) * self mod divisor."""
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        dd = divisor.degree
        r = list(self.coeffs)
        if len(r) - 1 < dd:
            return self
        lc = divisor.lc
        e = len(r) - 1 - dd + 1
        while len(r) - 1 >= dd and r:
            c = r[-1]
            shift = len(r) - 1 - dd
            r = [x * lc for x in r]
            for j, b in enumerate(divisor.coeffs):
                r[shift + j] -= c * b
            r.pop()
            while r and r[-1] == 0:
                r.pop()
            e -= 1
        # pad the power of lc so the result is the textbook prem
        return IntPolynomial(x * lc**e for x in r)

    def reduce_mod_xn_minus_one(self, n: int) -> "IntPolynomial":
        """Fold exponents mod n, i.e. the remainder on division by ``t^n - 1``."""
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            out[i % n] += c
        return IntPolynomial(out)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = "t" if i == 1 else f"t^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


def as_poly(p) -> IntPolynomial:
    return p if isinstance(p, IntPolynomial) else IntPolynomial(p)


def poly_gcd(p, q) -> IntPolynomial:
    """Gcd over Q[t] via the primitive PRS, returned primitive with lc > 0."""
    a, b = as_poly(p), as_poly(q)
    if not a and not b:
        raise ValueError("gcd of zero polynomials")
    if not b:
        return a.primitive()
    if not a:
        return b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    a, b = a.primitive(), b.primitive()
    while b:
        r = a.pseudo_rem(b)
        a, b = b, r.primitive()
    return a.primitive()


def resultant(p, q) -> int:
    """Resultant via the subresultant PRS (Collins).

    Sign convention is the Sylvester determinant with the rows of ``p``
    on top, so for monic ``p`` this is the product of ``q`` over the roots
    of ``p``.  Zero when either argument is the zero polynomial.
    """
    a, b = as_poly(p), as_poly(q)
    if not a or not b:
        return 0
    da, db = a.degree, b.degree
    if da == 0:
        return a.lc**db
    if db == 0:
        return b.lc**da

    sign = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if da % 2 and db % 2:
            sign = -sign

    ca, cb = a.content(), b.content()
    scale = ca**db * cb**da
    a, b = a.exact_div_scalar(ca), b.exact_div_scalar(cb)

    g = h = 1
    while True:
        da, db = a.degree, b.degree
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        r = a.pseudo_rem(b)
        if not r:
            return 0
        a = b
        b = r.exact_div_scalar(g * h**delta)
        g = a.lc
        # h <- g^delta / h^(delta - 1), exact
        if delta == 0:
            h = h
        elif delta == 1:
            h = g
        else:
            h = g**delta // h ** (delta - 1)
        if b.degree == 0:
            break

    da = a.degree
    # final h^(1-da) * lc(b)^da
    res = b.lc**da
    if da > 1:
        res //= h ** (da - 1)
    return sign * scale * res


def _divisors(m: int) -> list:
    small, large = [], []
    i = 1
    while i * i <= m:
        if m % i == 0:
            small.append(i)
            if i * i != m:
                large.append(m // i)
        i += 1
    return small + large[::-1]


def euler_phi(m: int) -> int:
    result, k, p = m, m, 2
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            result -= result // p
        p += 1
    if k > 1:
        result -= result // k
    return result


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(m: int) -> Tuple[int, ...]:
    num = IntPolynomial.x_pow_minus_one(m)
    for d in _divisors(m)[:-1]:
        num, rem = num.divmod_exact(IntPolynomial(_cyclotomic_coeffs(d)))
        assert not rem
    return num.coeffs


def cyclotomic(m: int) -> IntPolynomial:
    """The m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("cyclotomic index must be >= 1")
    return IntPolynomial(_cyclotomic_coeffs(m))


def has_cyclotomic_factor(p) -> Tuple[bool, Optional[int]]:
    """Return ``(True, m)`` for the least m with Phi_m | p, else ``(False, None)``.

    phi(m) >= sqrt(m/2), so only m <= 2 deg(p)^2 can have phi(m) <= deg(p).
    """
    p = as_poly(p)
    if not p:
        raise ValueError("has_cyclotomic_factor of the zero polynomial")
    deg = p.degree
    for m in range(1, 2 * deg * deg + 1):
        if euler_phi(m) > deg:
            continue
        _, rem = p.divmod_exact(cyclotomic(m))
        if not rem:
            return True, m
    return False, None


def sylvester_matrix(p: Sequence[int], q: Sequence[int]) -> list:
    """Sylvester matrix of p (deg m) and q (deg n), (m+n) x (m+n), p rows first."""
    p, q = as_poly(p), as_poly(q)
    m, n = p.degree, q.degree
    size = m + n
    rows = []
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    for i in range(n):
        rows.append([0] * i + pc + [0] * (size - i - len(pc)))
    for i in range(m):
        rows.append([0] * i + qc + [0] * (size - i - len(qc)))
    return rows
