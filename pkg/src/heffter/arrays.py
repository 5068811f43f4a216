"""Partially filled arrays over the additive group of a finite field.

A Heffter array is an m x n partially filled array over a group of order
2nk+1 (h filled cells per row, k per column) such that the multiset
[x, -x | x in the array] covers every nonzero group element exactly once and
every row and column sums to zero.  Dropping the zero-sum condition gives a
quasi-Heffter array.  Validators return structured reports with witnesses
rather than bare booleans.

`build_rank_one` constructs the totally filled H(m,n) over GF(2mn+1) whose
(i,j) cell is eps^i * xi^j (0-based), for xi of multiplicative order n and
eps of order m.  Every row of that array is a scalar multiple of its first
row, hence "rank one".
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dataclass_field

from .algebra import Field, make_field, parse_header, prime_power_split

Cell = int | None


@dataclass(frozen=True)
class PartiallyFilledArray:
    group: Field
    cells: tuple[tuple[Cell, ...], ...]

    def __post_init__(self) -> None:
        widths = {len(row) for row in self.cells}
        if len(widths) != 1:
            raise ValueError("ragged rows in array")
        for i, row in enumerate(self.cells):
            for j, x in enumerate(row):
                if x is not None and not 0 <= x < self.group.q:
                    raise ValueError(f"cell ({i},{j}) holds {x}, outside 0..{self.group.q - 1}")

    @property
    def m(self) -> int:
        return len(self.cells)

    @property
    def n(self) -> int:
        return len(self.cells[0])

    def entries(self) -> list[int]:
        """Filled entries in row-major reading order."""
        return [x for row in self.cells for x in row if x is not None]

    def row_entries(self, i: int) -> list[int]:
        return [x for x in self.cells[i] if x is not None]

    def col_entries(self, j: int) -> list[int]:
        return [row[j] for row in self.cells if row[j] is not None]

    def is_totally_filled(self) -> bool:
        return all(x is not None for row in self.cells for x in row)

    def transpose(self) -> "PartiallyFilledArray":
        return PartiallyFilledArray(self.group, tuple(zip(*self.cells)))


@dataclass(frozen=True)
class HeffterShape:
    """Fill-count profile: h filled cells per row, k per column, group order v."""

    m: int
    n: int
    h: int
    k: int
    v: int


def shape_of(array: PartiallyFilledArray) -> HeffterShape:
    """Shape of a uniformly filled array; raises on ragged fill counts."""
    row_counts = {len(array.row_entries(i)) for i in range(array.m)}
    col_counts = {len(array.col_entries(j)) for j in range(array.n)}
    if len(row_counts) != 1 or len(col_counts) != 1:
        raise ValueError("rows or columns are not uniformly filled")
    return HeffterShape(
        m=array.m, n=array.n, h=row_counts.pop(), k=col_counts.pop(), v=array.group.q
    )


@dataclass
class ValidationReport:
    ok: bool
    violations: list[str] = dataclass_field(default_factory=list)
    row_sums: list[int] | None = None
    col_sums: list[int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def validate_quasi_heffter(array: PartiallyFilledArray) -> ValidationReport:
    """Check the quasi-Heffter conditions, with witnesses for every failure.

    (a1) every row has the same number h of filled cells and every column the
         same number k, with group order 2nk+1;
    (b1) the multiset [x, -x | x filled] covers each nonzero group element
         exactly once.
    """
    g = array.group
    violations: list[str] = []

    for i, row in enumerate(array.cells):
        for j, x in enumerate(row):
            if x == 0:
                violations.append(f"cell ({i},{j}) holds 0, which cannot occur")

    row_counts = [len(array.row_entries(i)) for i in range(array.m)]
    col_counts = [len(array.col_entries(j)) for j in range(array.n)]
    if len(set(row_counts)) != 1:
        violations.append(f"rows are not uniformly filled: counts {row_counts}")
    if len(set(col_counts)) != 1:
        violations.append(f"columns are not uniformly filled: counts {col_counts}")
    k = col_counts[0] if len(set(col_counts)) == 1 else None
    if k is not None and g.q != 2 * array.n * k + 1:
        violations.append(
            f"group order {g.q} != 2nk+1 = {2 * array.n * k + 1} for n={array.n}, k={k}"
        )

    cover = Counter()
    for x in array.entries():
        cover[x] += 1
        cover[g.neg(x)] += 1
    missing = [x for x in range(1, g.q) if cover[x] == 0]
    repeated = sorted(x for x, c in cover.items() if x != 0 and c > 1)
    if cover[0]:
        violations.append("0 covered by a +-pair")
    if missing:
        violations.append(f"uncovered nonzero elements: {missing[:10]}")
    if repeated:
        violations.append(f"elements covered more than once: {repeated[:10]}")

    return ValidationReport(ok=not violations, violations=violations)


def validate_heffter(array: PartiallyFilledArray) -> ValidationReport:
    """Quasi-Heffter conditions plus zero row and column sums."""
    report = validate_quasi_heffter(array)
    g = array.group
    row_sums = []
    for i in range(array.m):
        s = 0
        for x in array.row_entries(i):
            s = g.add(s, x)
        row_sums.append(s)
        if s != 0:
            report.violations.append(f"row {i} sums to {s}, not 0")
    col_sums = []
    for j in range(array.n):
        s = 0
        for x in array.col_entries(j):
            s = g.add(s, x)
        col_sums.append(s)
        if s != 0:
            report.violations.append(f"column {j} sums to {s}, not 0")
    report.row_sums = row_sums
    report.col_sums = col_sums
    report.ok = not report.violations
    return report


def check_rank_one_parameters(m: int, n: int) -> None:
    from math import gcd

    if m < 3 or n < 3:
        raise ValueError(f"need m, n >= 3, got ({m},{n})")
    if m % 2 == 0 or n % 2 == 0:
        raise ValueError(f"need m, n odd, got ({m},{n})")
    if gcd(m, n) != 1:
        raise ValueError(f"need m, n coprime, got ({m},{n})")


def build_rank_one(
    group: Field, m: int, n: int, xi: int | None = None, eps: int | None = None
) -> PartiallyFilledArray:
    """Totally filled m x n Heffter array with cells eps^i * xi^j (0-based).

    Requires the group to be GF(q) with q = 2mn+1, m and n odd coprime and
    at least 3, xi of multiplicative order n and eps of order m.  Defaults
    pick the smallest-encoded element of each order, so repeated runs build
    the identical array.
    """
    check_rank_one_parameters(m, n)
    if group.q != 2 * m * n + 1:
        raise ValueError(f"group order {group.q} != 2mn+1 = {2 * m * n + 1}")
    if xi is None:
        xi = group.element_of_order(n)
    elif group.element_order(xi) != n:
        raise ValueError(f"xi={xi} has order {group.element_order(xi)}, expected {n}")
    if eps is None:
        eps = group.element_of_order(m)
    elif group.element_order(eps) != m:
        raise ValueError(f"eps={eps} has order {group.element_order(eps)}, expected {m}")

    row0 = [group.pow(xi, j) for j in range(n)]
    cells = []
    scale = 1
    for _ in range(m):
        cells.append(tuple(group.mul(scale, x) for x in row0))
        scale = group.mul(scale, eps)
    array = PartiallyFilledArray(group, tuple(cells))
    report = validate_heffter(array)
    assert report.ok, f"rank-one construction produced an invalid array: {report.violations}"
    return array


def is_rank_one(array: PartiallyFilledArray) -> bool:
    """True iff every row is a scalar multiple of one fixed vector.

    Tested via vanishing 2x2 minors against the first row with a nonzero
    entry (all minors a[r,j]*a[i,j'] - a[r,j']*a[i,j] must be 0).
    """
    if not array.is_totally_filled():
        raise ValueError("array is not totally filled")
    g = array.group
    pivot = next((i for i in range(array.m) if any(array.cells[i])), None)
    if pivot is None:
        return True
    ref = array.cells[pivot]
    for i in range(array.m):
        if i == pivot:
            continue
        row = array.cells[i]
        for j in range(array.n):
            for jj in range(j + 1, array.n):
                lhs = g.mul(ref[j], row[jj])
                rhs = g.mul(ref[jj], row[j])
                if lhs != rhs:
                    return False
    return True


def entry_set_is_multiplicative_subgroup(array: PartiallyFilledArray) -> bool:
    """True iff the filled entries form a multiplicative subgroup of size mh."""
    g = array.group
    entries = array.entries()
    values = set(entries)
    if len(values) != len(entries) or 1 not in values or 0 in values:
        return False
    return all(g.mul(a, b) in values for a in values for b in values)


def to_text(array: PartiallyFilledArray) -> str:
    """Serialize: field header line, then one line per row, `-` for empty."""
    lines = [array.group.header()]
    for row in array.cells:
        lines.append(" ".join("-" if x is None else str(x) for x in row))
    return "\n".join(lines) + "\n"


def from_text(text: str) -> PartiallyFilledArray:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty array file")
    group = parse_header(lines[0])
    cells = []
    for line in lines[1:]:
        cells.append(tuple(None if tok == "-" else int(tok) for tok in line.split()))
    if not cells:
        raise ValueError("array file has no rows")
    return PartiallyFilledArray(group, tuple(cells))


def field_for_parameters(m: int, n: int) -> Field:
    """GF(2mn+1) for admissible (m,n); raises if 2mn+1 is not a prime power."""
    check_rank_one_parameters(m, n)
    q = 2 * m * n + 1
    split = prime_power_split(q)
    if split is None:
        raise ValueError(f"2mn+1 = {q} is not a prime power")
    return make_field(*split)
