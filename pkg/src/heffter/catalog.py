"""Family scan: every admissible (m, n, q) up to a bound, with summaries.

Admissible means q = 2mn+1 is a prime power and m, n are odd, coprime and at
least 3.  Both orientations (m, n) and (n, m) are listed because they swap
the two face-length classes of the embedding.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import gcd

from .algebra import prime_power_split
from .arrays import build_rank_one, field_for_parameters
from .autgroup import restricted_search
from .embedding import build_embedding, surface_report, trace_faces
from .orderings import check_globally_simple, is_compatible, natural_orderings


class BudgetExceeded(RuntimeError):
    pass


class Deadline:
    """Soft per-instance compute budget, checked at stage boundaries."""

    def __init__(self, budget_ms: int | None):
        self.budget_ms = budget_ms
        self.started = time.monotonic()

    def restart(self) -> None:
        self.started = time.monotonic()

    def check(self, stage: str) -> None:
        if self.budget_ms is None:
            return
        elapsed_ms = (time.monotonic() - self.started) * 1000.0
        if elapsed_ms > self.budget_ms:
            raise BudgetExceeded(stage)


def admissible_parameters(qmax: int) -> list[tuple[int, int, int]]:
    """All ordered (m, n, q) with q = 2mn+1 <= qmax a prime power, m, n odd
    coprime >= 3, sorted by (q, m, n)."""
    found = []
    for q in range(2 * 3 * 5 + 1, qmax + 1, 2):
        half = (q - 1) // 2
        if half % 2 == 0 or prime_power_split(q) is None:
            continue
        for m in range(3, half):
            if half % m != 0:
                continue
            n = half // m
            if n < 3 or gcd(m, n) != 1:
                continue
            found.append((m, n, q))
    found.sort(key=lambda t: (t[2], t[0], t[1]))
    return found


@dataclass
class CatalogRow:
    m: int
    n: int
    q: int
    prime_or_power: str
    globally_simple: bool | None = None
    compatible: bool | None = None
    aut0: int | None = None
    total: int | None = None
    genus: int | None = None

    FIELDS = ("m", "n", "q", "prime_or_power", "globally_simple", "compatible", "aut0", "total", "genus")

    def to_json(self) -> dict:
        return {name: getattr(self, name) for name in self.FIELDS}

    def to_csv_values(self) -> list[str]:
        out = []
        for name in self.FIELDS:
            value = getattr(self, name)
            out.append("" if value is None else str(value).lower() if isinstance(value, bool) else str(value))
        return out


def compute_row(m: int, n: int, deadline: Deadline | None = None) -> CatalogRow:
    """Summary of one instance; cells past an exhausted budget stay empty."""
    field = field_for_parameters(m, n)
    split = prime_power_split(field.q)
    row = CatalogRow(m=m, n=n, q=field.q, prime_or_power="prime" if split[1] == 1 else "prime_power")
    if deadline is not None:
        deadline.restart()
    try:
        array = build_rank_one(field, m, n)
        row.globally_simple = check_globally_simple(array)
        if deadline:
            deadline.check("orderings")
        pair = natural_orderings(array, 0)
        row.compatible = is_compatible(pair)
        if deadline:
            deadline.check("embedding")
        emb = build_embedding(array, pair)
        faces = trace_faces(emb)
        row.genus = surface_report(emb, faces).genus
        if deadline:
            deadline.check("autgroup")
        report = restricted_search(emb, m, n)
        row.aut0 = report.aut0_plus + report.aut0_minus
        row.total = report.total
    except BudgetExceeded:
        pass
    return row
