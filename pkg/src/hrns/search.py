"""Parameter sweeps over H(r, n, s): perfect groups, the finiteness precheck,
and the verification suites that cross-check the closed formulas.

Sweeps can be fanned out over processes.  Work is split by r, every worker
is a pure function, and results are sorted on merge, so the output does not
depend on the number of jobs.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from math import gcd
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Tuple

from .circulant import (
    AbelianGroup,
    ExponentVector,
    bareiss_rank,
    circulant_det_abs,
    circulant_rank,
    smith_normal_form,
)
from .cycpres import HParams, ab_order, h_abelianization, h_exponent_vector, h_polynomial
from .hclass import (
    FreeGroup,
    FreeProduct,
    Verdict,
    d_lower_bound,
    free_product_decomposition,
    h_betti_formula,
    h_classify,
    infinite_by_balanced,
)
from .intpoly import has_cyclotomic_factor

MAX_TRIPLES = 10_000_000
MAX_N = 5_000

Triple = Tuple[int, int, int]


class SearchBoundsError(ValueError):
    pass


def check_bounds(r_max: int, n_max: int, s_max: int) -> None:
    for name, value, low in (("r_max", r_max, 1), ("n_max", n_max, 2), ("s_max", s_max, 1)):
        if isinstance(value, bool) or not isinstance(value, int):
            raise SearchBoundsError(f"{name} must be an integer")
        if value < low:
            raise SearchBoundsError(f"{name} must be >= {low}, got {value}")
    if n_max > MAX_N:
        raise SearchBoundsError(f"n_max={n_max} exceeds the supported maximum {MAX_N}")
    total = r_max * (n_max - 1) * s_max
    if total > MAX_TRIPLES:
        raise SearchBoundsError(f"{total} triples exceeds the supported maximum {MAX_TRIPLES}")


def triples(r_max: int, n_max: int, s_max: int) -> Iterator[HParams]:
    """All (r, n, s) in range, lexicographic."""
    for r in range(1, r_max + 1):
        for n in range(2, n_max + 1):
            for s in range(1, s_max + 1):
                yield HParams(r, n, s)


@dataclass(frozen=True)
class PerfectTriple:
    r: int
    n: int
    s: int
    # False when r = 0 or s = 0 mod n, which the conjecture excludes
    conjecture_relevant: bool
    reverified: bool

    def to_dict(self) -> dict:
        d = asdict(self)
        if self.conjecture_relevant:
            d["shift_orbit"] = f"H({self.r}+a*{self.n},{self.n},{self.s}+a*{self.n}), a>=0"
        return d


@dataclass(frozen=True)
class CandidateTriple:
    r: int
    n: int
    s: int
    half: Triple
    reverified: bool

    def to_dict(self) -> dict:
        return {"r": self.r, "n": self.n, "s": self.s, "half": list(self.half), "reverified": self.reverified}


@dataclass(frozen=True)
class PrecheckResult:
    r: int
    s: int
    applicable: bool
    f0_nonzero: Optional[bool] = None
    no_cyclotomic_factor: Optional[bool] = None
    finitely_many_n: Optional[bool] = None
    cyclotomic_witness: Optional[int] = None


def cremona_precheck(r: int, s: int) -> PrecheckResult:
    """Hypotheses for "only finitely many n give a perfect H(r,n,s)".

    Needs |r - s| = 1; otherwise f(1) = r - s is not a unit and H^ab is
    never trivial, so the check does not apply.
    """
    if abs(r - s) != 1:
        return PrecheckResult(r, s, applicable=False)
    f = h_polynomial((r, 2, s))
    f0 = f[0] != 0
    has_cyc, m = has_cyclotomic_factor(f)
    return PrecheckResult(
        r,
        s,
        applicable=True,
        f0_nonzero=f0,
        no_cyclotomic_factor=not has_cyc,
        finitely_many_n=f0 and not has_cyc,
        cyclotomic_witness=m,
    )


@dataclass
class SearchReport:
    r_max: int
    n_max: int
    s_max: int
    perfect: List[PerfectTriple] = field(default_factory=list)
    candidates: List[CandidateTriple] = field(default_factory=list)
    prechecks: List[PrecheckResult] = field(default_factory=list)
    examined: int = 0
    wall_time: float = 0.0

    @property
    def conjecture_relevant(self) -> List[PerfectTriple]:
        return [t for t in self.perfect if t.conjecture_relevant]

    @property
    def sound(self) -> bool:
        return all(t.reverified for t in self.perfect) and all(c.reverified for c in self.candidates)

    def to_dict(self, include_timing: bool = False) -> dict:
        d = {
            "ranges": {"r_max": self.r_max, "n_max": self.n_max, "s_max": self.s_max},
            "examined": self.examined,
            "perfect": [t.to_dict() for t in self.perfect],
            "conjecture_relevant_count": len(self.conjecture_relevant),
            "candidate_case_c": [c.to_dict() for c in self.candidates],
            "prechecks": [asdict(p) for p in self.prechecks],
        }
        if include_timing:
            d["wall_time"] = round(self.wall_time, 3)
        return d

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2, sort_keys=False) + "\n"

    def summary(self) -> str:
        noun = "triple" if self.examined == 1 else "triples"
        return (
            f"{self.examined} {noun} examined; {len(self.perfect)} perfect; "
            f"{len(self.conjecture_relevant)} conjecture-relevant perfect triples; "
            f"{len(self.candidates)} CandidateCaseC; {self.wall_time:.2f}s"
        )


def _scan_r(r: int, n_max: int, s_max: int) -> Tuple[int, List[PerfectTriple], List[CandidateTriple]]:
    perfect, candidates, count = [], [], 0
    for n in range(2, n_max + 1):
        for s in range(1, s_max + 1):
            p = HParams(r, n, s)
            count += 1
            if ab_order(p) == 1:
                relevant = r % n != 0 and s % n != 0
                # independent route: SNF instead of the resultant
                ok = h_abelianization(p).is_trivial()
                perfect.append(PerfectTriple(r, n, s, relevant, ok))
            c = h_classify(p)
            if c.verdict is Verdict.CANDIDATE_CASE_C:
                again = h_classify(p)
                ok = again.verdict is Verdict.CANDIDATE_CASE_C and ab_order(again.half_params) == 1
                candidates.append(CandidateTriple(r, n, s, c.half_params, ok))
    return count, perfect, candidates


def _fan_out(worker: Callable, args: Iterable[tuple], jobs: int) -> list:
    args = list(args)
    if jobs <= 1 or len(args) <= 1:
        return [worker(*a) for a in args]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, *zip(*args)))


def search_perfect(r_max: int, n_max: int, s_max: int, jobs: int = 1) -> SearchReport:
    check_bounds(r_max, n_max, s_max)
    if jobs < 1:
        raise SearchBoundsError("jobs must be >= 1")
    start = time.perf_counter()
    report = SearchReport(r_max, n_max, s_max)
    for count, perfect, candidates in _fan_out(_scan_r, [(r, n_max, s_max) for r in range(1, r_max + 1)], jobs):
        report.examined += count
        report.perfect.extend(perfect)
        report.candidates.extend(candidates)
    report.perfect.sort(key=lambda t: (t.r, t.n, t.s))
    report.candidates.sort(key=lambda t: (t.r, t.n, t.s))
    report.prechecks = [
        cremona_precheck(r, s)
        for r in range(1, r_max + 1)
        for s in range(1, s_max + 1)
        if abs(r - s) == 1
    ]
    report.wall_time = time.perf_counter() - start
    return report


# --- verification suites -------------------------------------------------


@dataclass
class VerificationReport:
    suite: str
    checked: int = 0
    counterexamples: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.suite}: {status} ({self.checked} checked, {len(self.counterexamples)} counterexamples)"


def verify_betti_formula(r_max: int, n_max: int, s_max: int) -> VerificationReport:
    """Betti formula vs deg gcd(f, t^n - 1) vs zero count of the SNF."""
    check_bounds(r_max, n_max, s_max)
    rep = VerificationReport("thmB")
    for p in triples(r_max, n_max, s_max):
        v = h_exponent_vector(p)
        formula = h_betti_formula(p)
        by_gcd = p.n - circulant_rank(v)
        by_snf = smith_normal_form(v).count(0)
        rep.checked += 1
        if not formula == by_gcd == by_snf:
            rep.counterexamples.append(
                {"r": p.r, "n": p.n, "s": p.s, "formula": formula, "deg_gcd": by_gcd, "snf_zeros": by_snf}
            )
    return rep


def verify_generator_bounds(r_max: int, n_max: int, s_max: int) -> VerificationReport:
    """kappa <= dim(H^ab / 2H^ab) and combined bound <= d(H^ab)."""
    check_bounds(r_max, n_max, s_max)
    rep = VerificationReport("lemma41")
    for p in triples(r_max, n_max, s_max):
        ab = h_abelianization(p)
        bound = d_lower_bound(p)
        rep.checked += 1
        problems = []
        if ab.two_rank() < bound.kappa:
            problems.append("kappa")
        if bound.combined > ab.rank:
            problems.append("combined")
        if infinite_by_balanced(p) and not (ab.betti >= 1 or bound.combined >= 4):
            problems.append("balanced")
        if problems:
            rep.counterexamples.append(
                {"r": p.r, "n": p.n, "s": p.s, "failed": problems, "kappa": bound.kappa,
                 "combined": bound.combined, "ab": str(ab)}
            )
    return rep


def verify_shift(r_max: int, n_max: int, s_max: int, alphas: Tuple[int, ...] = (1, 2)) -> VerificationReport:
    """H(r,n,s)^ab == H(r + a n, n, s + a n)^ab."""
    check_bounds(r_max, n_max, s_max)
    rep = VerificationReport("shift")
    for p in triples(r_max, n_max, s_max):
        base = h_abelianization(p)
        for a in alphas:
            q = HParams(p.r + a * p.n, p.n, p.s + a * p.n)
            shifted = h_abelianization(q)
            rep.checked += 1
            if shifted != base:
                rep.counterexamples.append(
                    {"r": p.r, "n": p.n, "s": p.s, "alpha": a, "base": str(base), "shifted": str(shifted)}
                )
    return rep


def expected_free_product_ab(decomp) -> AbelianGroup:
    if isinstance(decomp, FreeGroup):
        return AbelianGroup(decomp.rank)
    assert isinstance(decomp, FreeProduct)
    return AbelianGroup(decomp.free_rank, (decomp.m,) if decomp.m > 1 else ())


def verify_free_product(r_max: int, n_max: int, s_max: int) -> VerificationReport:
    """Abelianization agrees with Z_m (+) Z^k whenever r or s is 0 mod n."""
    check_bounds(r_max, n_max, s_max)
    rep = VerificationReport("freeprod")
    for p in triples(r_max, n_max, s_max):
        decomp = free_product_decomposition(p)
        if decomp is None:
            continue
        rep.checked += 1
        got = h_abelianization(p)
        want = expected_free_product_ab(decomp)
        if got != want:
            rep.counterexamples.append({"r": p.r, "n": p.n, "s": p.s, "computed": str(got), "expected": str(want)})
    return rep


def random_vectors(count: int, n_max: int, seed: int = 0, low: int = -3, high: int = 3) -> List[ExponentVector]:
    rng = random.Random(seed)
    return [
        ExponentVector([rng.randint(low, high) for _ in range(rng.randint(1, n_max))])
        for _ in range(count)
    ]


def _det_rank_problems(v: ExponentVector) -> Optional[dict]:
    diag = smith_normal_form(v)
    zeros = diag.count(0)
    det = circulant_det_abs(v)
    rank_poly = circulant_rank(v)
    rank_elim = bareiss_rank(v.matrix())
    snf_prod = 1
    for d in diag:
        if d:
            snf_prod *= d
    det_ok = (det == snf_prod) if zeros == 0 else (det == 0)
    rank_ok = rank_poly == rank_elim == v.n - zeros
    if det_ok and rank_ok:
        return None
    return {"vector": list(v.entries), "det": str(det), "snf": [str(d) for d in diag],
            "rank_poly": rank_poly, "rank_elim": rank_elim}


def verify_det_cross(
    r_max: int = 0,
    n_max: int = 16,
    s_max: int = 0,
    random_count: int = 500,
    random_n_max: int = 16,
    seed: int = 0,
) -> VerificationReport:
    """|Res(t^n - 1, f)| vs SNF product, and three routes to the rank.

    Runs over the H(r,n,s) range when r_max, s_max >= 1, plus random
    exponent vectors with entries in [-3, 3].
    """
    rep = VerificationReport("detxcheck")
    corpus: List[Tuple[Optional[HParams], ExponentVector]] = []
    if r_max >= 1 and s_max >= 1:
        check_bounds(r_max, n_max, s_max)
        corpus += [(p, h_exponent_vector(p)) for p in triples(r_max, n_max, s_max)]
    corpus += [(None, v) for v in random_vectors(random_count, random_n_max, seed)]
    for p, v in corpus:
        rep.checked += 1
        problem = _det_rank_problems(v)
        if problem is not None:
            if p is not None:
                problem.update(r=p.r, n=p.n, s=p.s)
            rep.counterexamples.append(problem)
    return rep


def verify_torus_knots(r_max: int, n_max: int) -> VerificationReport:
    """H(r,n,r) with (r,n) = 1 abelianizes to Z, like <a,b | a^n = b^r>."""
    rep = VerificationReport("torus")
    for r in range(1, r_max + 1):
        for n in range(2, n_max + 1):
            if gcd(r, n) != 1:
                continue
            rep.checked += 1
            ab = h_abelianization(HParams(r, n, r))
            if ab != AbelianGroup(1):
                rep.counterexamples.append({"r": r, "n": n, "s": r, "ab": str(ab)})
    return rep


def verify_classifier(r_max: int, n_max: int, s_max: int) -> VerificationReport:
    """Every ConfirmedLOG verdict has H^ab = Z by SNF."""
    check_bounds(r_max, n_max, s_max)
    rep = VerificationReport("classifier")
    for p in triples(r_max, n_max, s_max):
        c = h_classify(p)
        if c.verdict not in (Verdict.TORUS_KNOT, Verdict.INFINITE_CYCLIC):
            continue
        rep.checked += 1
        ab = h_abelianization(p)
        if ab != AbelianGroup(1):
            rep.counterexamples.append({"r": p.r, "n": p.n, "s": p.s, "verdict": c.verdict.value, "ab": str(ab)})
    return rep


SUITES: Dict[str, Callable[..., VerificationReport]] = {
    "thmB": verify_betti_formula,
    "lemma41": verify_generator_bounds,
    "shift": verify_shift,
    "freeprod": verify_free_product,
    "detxcheck": verify_det_cross,
}
