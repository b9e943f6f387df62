"""Which H(r, n, s) are connected LOG groups / torus knot groups.

The decisions here only use arithmetic on (r, n, s) plus abelianization
orders; no non-abelian computation is attempted.  A connected LOG group
abelianizes to Z, so anything with d(H^ab) != 1 is ruled out.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, Optional, Tuple, Union

from .cycpres import HParams, _params, ab_order


class Verdict(str, enum.Enum):
    TORUS_KNOT = "ConfirmedLOG_TorusKnot"
    INFINITE_CYCLIC = "ConfirmedLOG_InfiniteCyclic"
    NOT_CONNECTED_LOG = "NotConnectedLOG"
    CANDIDATE_CASE_C = "CandidateCaseC"


class Reason(str, enum.Enum):
    BETTI_NE_1 = "BETTI_NE_1"
    D_LOWER_BOUND_GT_1 = "D_LOWER_BOUND_GT_1"
    HALF_PARAMS_NOT_PERFECT = "HALF_PARAMS_NOT_PERFECT"
    EXCLUDED_PAIR_4_2 = "EXCLUDED_PAIR_4_2"
    GCD_N_RPLUSS_NE_2 = "GCD_N_RPLUSS_NE_2"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    reason: Optional[Reason] = None
    torus: Optional[Tuple[int, int]] = None
    half_params: Optional[Tuple[int, int, int]] = None
    witness: Dict[str, Union[int, str]] = field(default_factory=dict)

    def __post_init__(self):
        if (self.reason is not None) != (self.verdict is Verdict.NOT_CONNECTED_LOG):
            raise ValueError("reason is set iff the verdict is NotConnectedLOG")
        if (self.torus is not None) != (self.verdict is Verdict.TORUS_KNOT):
            raise ValueError("torus data is set iff the verdict is a torus knot")
        if self.verdict is Verdict.CANDIDATE_CASE_C and self.half_params is None:
            raise ValueError("CandidateCaseC carries the half parameters")

    @property
    def presentation(self) -> Optional[str]:
        if self.torus is None:
            return None
        r, n = self.torus
        return f"<a,b | a^{n}=b^{r}>"

    @property
    def is_connected_log(self) -> Optional[bool]:
        """True/False when decided, None for the open case (c)."""
        if self.verdict is Verdict.CANDIDATE_CASE_C:
            return None
        return self.verdict is not Verdict.NOT_CONNECTED_LOG

    def witness_string(self) -> str:
        return ";".join(f"{k}={v}" for k, v in self.witness.items())


@dataclass(frozen=True)
class GeneratorBound:
    """Lower bounds on d(H(r,n,s)^ab)."""

    kappa: int
    easy_bound: int
    hard_bound: int

    @property
    def combined(self) -> int:
        return max(self.kappa, self.easy_bound, self.hard_bound)


@dataclass(frozen=True)
class FreeProduct:
    """Z_m * Z * ... * Z with ``free_rank`` copies of Z (Z_1 is trivial)."""

    m: int
    free_rank: int


@dataclass(frozen=True)
class FreeGroup:
    """r = s = 0 mod n: every relator cancels, leaving F_n."""

    rank: int


def _gcd3(p: HParams) -> int:
    return gcd(p.r, p.n, p.s)


def h_betti_formula(p) -> int:
    p = _params(p)
    if p.r != p.s:
        return _gcd3(p) - 1
    return gcd(p.r, p.n)


def kappa(p) -> int:
    """Rank of the largest elementary abelian 2-quotient forced by H^ab ->> Z_2^kappa."""
    p = _params(p)
    delta = gcd(p.n, p.r + p.s)
    return delta if ((p.r + p.s) // delta) % 2 == 0 else delta - 1


def half_params(p) -> HParams:
    p = _params(p)
    return HParams(p.r // 2, p.n // 2, p.s // 2)


def half_order(p) -> int:
    """|H(r/2, n/2, s/2)^ab|; for n = 2 the 1x1 relation matrix is (r/2 - s/2)."""
    p = _params(p)
    if p.n // 2 == 1:
        return abs(p.r // 2 - p.s // 2)
    return ab_order(half_params(p))


def d_lower_bound(p) -> GeneratorBound:
    p = _params(p)
    easy = hard = 0
    if _gcd3(p) == 2:
        if abs(p.r - p.s) != 2:
            easy = 2
        elif half_order(p) != 1:
            hard = 2
    return GeneratorBound(kappa(p), easy, hard)


def perfect_necessary(p) -> bool:
    """Necessary (not sufficient) condition for H(r,n,s) to be perfect."""
    p = _params(p)
    return abs(p.r - p.s) == 1 and gcd(p.n, p.r + p.s) == 1


def infinite_by_balanced(p) -> bool:
    """True when a finite balanced presentation would need d(G^ab) > 3.

    False only means the criterion is silent.
    """
    p = _params(p)
    delta = gcd(p.n, p.r + p.s)
    if ((p.r + p.s) // delta) % 2 == 0:
        return delta >= 4
    return delta >= 5


def free_product_decomposition(p) -> Union[FreeProduct, FreeGroup, None]:
    p = _params(p)
    if p.r % p.n and p.s % p.n:
        return None
    if p.r == p.s:
        return FreeGroup(p.n)
    diff = abs(p.r - p.s)
    g = gcd(p.n, diff)
    return FreeProduct(diff // g, g - 1)


def two_generator_knot(p) -> Tuple[bool, Optional[Tuple[int, int]]]:
    p = _params(p)
    if p.r == p.s and gcd(p.r, p.n) == 1:
        return True, (p.r, p.n)
    return False, None


def _not_log(reason: Reason, **witness) -> Classification:
    return Classification(Verdict.NOT_CONNECTED_LOG, reason=reason, witness=witness)


def h_classify(p) -> Classification:
    p = _params(p)
    r, n, s = p.r, p.n, p.s

    if r == s and gcd(r, n) == 1:
        return Classification(
            Verdict.TORUS_KNOT,
            torus=(r, n),
            witness={"torus_r": r, "torus_n": n, "relation": f"a^{n}=b^{r}"},
        )

    betti = h_betti_formula(p)
    if betti != 1:
        return _not_log(Reason.BETTI_NE_1, betti=betti)

    # from here r != s and (r, n, s) = 2
    diff = abs(r - s)
    if r % n == 0 or s % n == 0:
        if diff == 2:
            return Classification(Verdict.INFINITE_CYCLIC, witness={"group": "Z"})
        return _not_log(Reason.D_LOWER_BOUND_GT_1, abs_r_minus_s=diff)

    if diff != 2:
        return _not_log(Reason.D_LOWER_BOUND_GT_1, abs_r_minus_s=diff)
    half = half_params(p)
    if {r, s} == {4, 2}:
        # H(2, n/2, 1) is a Fibonacci group, never perfect
        return _not_log(Reason.EXCLUDED_PAIR_4_2, half=str(half), half_order=str(ab_order(half)))
    delta = gcd(n, r + s)
    if delta != 2:
        return _not_log(Reason.GCD_N_RPLUSS_NE_2, gcd_n_r_plus_s=delta)
    order = ab_order(half)
    if order != 1:
        return _not_log(
            Reason.HALF_PARAMS_NOT_PERFECT,
            half=str(half),
            half_order=str(order) if order else "infinite",
        )
    return Classification(
        Verdict.CANDIDATE_CASE_C,
        half_params=half.astuple(),
        witness={"half": str(half), "status": "unknown"},
    )
