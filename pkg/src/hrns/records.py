"""Serialized per-triple results shared by the CLI and the search reports.

JSON carries every big integer as a decimal string; infinite orders are
written "infinite" in JSON and "inf" in CSV.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from .cycpres import HParams, h_abelianization
from .hclass import d_lower_bound, h_classify

CSV_COLUMNS = ("r", "n", "s", "betti", "invariant_factors", "order", "verdict", "reason", "witness")


@dataclass(frozen=True)
class OutputRecord:
    r: int
    n: int
    s: int
    betti: int
    invariant_factors: Tuple[int, ...]
    order: str
    verdict: Optional[str] = None
    reason: Optional[str] = None
    witness: Dict[str, str] = field(default_factory=dict)
    bounds: Optional[Dict[str, int]] = None

    @classmethod
    def build(cls, p: HParams, classify: bool = False) -> "OutputRecord":
        ab = h_abelianization(p)
        order = str(ab.order) if ab.is_finite else "infinite"
        verdict = reason = bounds = None
        witness: Dict[str, str] = {}
        if classify:
            c = h_classify(p)
            verdict = c.verdict.value
            reason = c.reason.value if c.reason else None
            witness = {k: str(v) for k, v in c.witness.items()}
            b = d_lower_bound(p)
            bounds = {"kappa": b.kappa, "easy": b.easy_bound, "hard": b.hard_bound, "combined": b.combined}
        return cls(p.r, p.n, p.s, ab.betti, ab.invariant_factors, order, verdict, reason, witness, bounds)

    def to_dict(self) -> dict:
        d = {
            "r": self.r,
            "n": self.n,
            "s": self.s,
            "betti": self.betti,
            "invariant_factors": [str(x) for x in self.invariant_factors],
            "order": self.order,
        }
        if self.verdict is not None:
            d["classification"] = {
                "verdict": self.verdict,
                "reason": self.reason,
                "witness": dict(self.witness),
            }
            d["bounds"] = self.bounds
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "OutputRecord":
        c = d.get("classification") or {}
        return cls(
            r=int(d["r"]),
            n=int(d["n"]),
            s=int(d["s"]),
            betti=int(d["betti"]),
            invariant_factors=tuple(int(x) for x in d["invariant_factors"]),
            order=d["order"],
            verdict=c.get("verdict"),
            reason=c.get("reason"),
            witness=dict(c.get("witness", {})),
            bounds=d.get("bounds"),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        return cls.from_dict(json.loads(text))

    def witness_string(self) -> str:
        return ";".join(f"{k}={v}" for k, v in self.witness.items())

    def csv_row(self) -> List[str]:
        return [
            str(self.r),
            str(self.n),
            str(self.s),
            str(self.betti),
            ";".join(str(x) for x in self.invariant_factors),
            "inf" if self.order == "infinite" else self.order,
            self.verdict or "",
            self.reason or "",
            self.witness_string(),
        ]

    def plain(self) -> str:
        factors = ", ".join(str(x) for x in self.invariant_factors)
        lines = [
            f"H({self.r},{self.n},{self.s})^ab: betti={self.betti} invariant_factors=[{factors}] order={self.order}",
        ]
        if self.verdict is not None:
            lines.append(f"  classification: {self.verdict}" + (f" ({self.reason})" if self.reason else ""))
            if self.witness:
                lines.append(f"  witness: {self.witness_string()}")
            if self.bounds:
                b = self.bounds
                lines.append(
                    f"  d(H^ab) lower bounds: kappa={b['kappa']} easy={b['easy']} hard={b['hard']} combined={b['combined']}"
                )
        return "\n".join(lines)


def to_csv(records: Iterable[OutputRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for rec in records:
        w.writerow(rec.csv_row())
    return buf.getvalue()
