"""Random exploration of matrix ideals ``I_{A,d}`` (evidence only).

Every sample records whether all principal minors of ``A`` are nonzero and the
WLP/SLP verdicts of ``R/I_{A,d}``.  Nothing here settles the open problems
the classes come from; for binomial-row matrices a positive SLP answer is
predicted and any other answer is flagged.
"""

from __future__ import annotations

import csv
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .constructions import (
    has_nonzero_principal_minors,
    matrix_ideal,
    random_binomial_matrix,
    random_nonzero_minor_matrix,
    random_pm_one_minor_matrix,
    random_positive_definite,
)
from .lefschetz import DEFAULT_TRIALS, Mode, decide_lefschetz
from .quotient import NotArtinian, build_quotient

CLASSES = {
    "nonzero-minors": random_nonzero_minor_matrix,
    "binomial-rows": random_binomial_matrix,
    "pm-one-minors": random_pm_one_minor_matrix,
    "positive-definite": random_positive_definite,
}
CSV_FIELDS = ("sample_id", "n", "class", "minors_nonzero", "wlp", "slp", "seed")


@dataclass(frozen=True)
class ScanRow:
    sample_id: int
    n: int
    cls: str
    minors_nonzero: bool
    wlp: str
    slp: str
    seed: int
    matrix: tuple
    d: tuple

    @property
    def flagged(self) -> bool:
        """A binomial-row sample whose SLP answer is not ``holds``."""
        return self.cls == "binomial-rows" and self.slp != "holds"

    def csv_row(self) -> dict:
        return {
            "sample_id": self.sample_id,
            "n": self.n,
            "class": self.cls,
            "minors_nonzero": str(self.minors_nonzero).lower(),
            "wlp": self.wlp,
            "slp": self.slp,
            "seed": self.seed,
        }

    def to_dict(self) -> dict:
        out = self.csv_row()
        out["minors_nonzero"] = self.minors_nonzero
        out["matrix"] = [[str(x) for x in row] for row in self.matrix]
        out["d"] = list(self.d)
        out["flagged"] = self.flagged
        return out


def scan_sample(cls: str, n: int, sample_id: int, seed: int, d: Sequence[int] | None = None, trials: int = DEFAULT_TRIALS) -> ScanRow:
    rng = random.Random(f"{seed}:scan:{cls}:{n}:{sample_id}")
    A = CLASSES[cls](n, rng)
    d = tuple(d) if d else (1,) * n
    sample_seed = rng.randrange(2**32)
    nonzero = has_nonzero_principal_minors(A)
    try:
        Q = build_quotient(matrix_ideal(A, d))
    except NotArtinian:
        wlp = slp = "not_artinian"
    else:
        wlp = decide_lefschetz(Q, Mode.WLP, trials=trials, seed=sample_seed).verdict.value
        slp = decide_lefschetz(Q, Mode.SLP, trials=trials, seed=sample_seed).verdict.value
    return ScanRow(sample_id, n, cls, nonzero, wlp, slp, sample_seed, tuple(map(tuple, A)), d)


def run_scan(cls: str, n: int, samples: int, seed: int = 0, d: Sequence[int] | None = None, trials: int = DEFAULT_TRIALS) -> list[ScanRow]:
    if cls not in CLASSES:
        raise ValueError(f"unknown class {cls!r}; choose from {', '.join(CLASSES)}")
    if n < 1 or (cls == "binomial-rows" and n < 2):
        raise ValueError(f"n = {n} is too small for class {cls}")
    if d is not None and len(d) != n:
        raise ValueError(f"d has {len(d)} entries, expected {n}")
    if samples < 0:
        raise ValueError("samples must be non-negative")
    return [scan_sample(cls, n, i, seed, d, trials) for i in range(samples)]


def append_csv(rows: Sequence[ScanRow], path: str | Path) -> None:
    """Append rows, writing the header first if the file is new or empty.
    Nothing is written for an empty batch."""
    if not rows:
        return
    path = Path(path)
    fresh = not path.exists() or path.stat().st_size == 0
    with path.open("a", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS)
        if fresh:
            writer.writeheader()
        for row in rows:
            writer.writerow(row.csv_row())
