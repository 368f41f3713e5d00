"""Set-valued tableaux, the "on mu" condition, and the coefficient N_S.

A tableau is stored as a tuple of rows, each row a tuple of cells, each
cell a sorted tuple of positive integers.  Row i of the tuple is row i of
the diagram (1-based in the public API).  Empty cells are only allowed
for generalized tableaux, which arise as differences ``S - R``.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from itertools import chain, combinations, product
from typing import Iterable, Iterator, Sequence

from . import _kernels
from .core_index import Box, Partition, partition_leq

Cell = tuple[int, ...]


@dataclass(frozen=True, order=True)
class SetValuedTableau:
    rows: tuple[tuple[Cell, ...], ...]
    generalized: bool = False

    def __post_init__(self) -> None:
        rows = [tuple(tuple(sorted(set(int(x) for x in cell))) for cell in row) for row in self.rows]
        while rows and not rows[-1]:
            rows.pop()
        rows = tuple(rows)
        object.__setattr__(self, "rows", rows)
        lengths = [len(r) for r in rows]
        if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
            raise ValueError(f"row lengths not weakly decreasing: {lengths}")
        for row in rows:
            for cell in row:
                if not cell and not self.generalized:
                    raise ValueError("empty cell in a set-valued tableau")
                if cell and cell[0] < 1:
                    raise ValueError(f"nonpositive entry in cell {cell}")

    @classmethod
    def from_cells(cls, rows: Iterable[Iterable[Iterable[int] | int]], generalized: bool = False) -> "SetValuedTableau":
        """Build from nested rows; a bare int is a singleton cell."""
        norm = []
        for row in rows:
            norm.append(tuple((c,) if isinstance(c, int) else tuple(c) for c in row))
        return cls(tuple(norm), generalized)

    @classmethod
    def parse(cls, text: str) -> "SetValuedTableau":
        """Parse the compact form ``"1{1,2}/2"``: rows split on ``/``, digits are
        singleton cells, braces hold a set."""
        rows = []
        if text.strip():
            for chunk in text.strip().split("/"):
                cells = []
                for m in re.finditer(r"\{([^}]*)\}|(\d)", chunk):
                    if m.group(1) is not None:
                        cells.append(tuple(int(x) for x in m.group(1).split(",") if x.strip()))
                    else:
                        cells.append((int(m.group(2)),))
                rows.append(tuple(cells))
        return cls(tuple(rows))

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    def cell(self, i: int, j: int) -> Cell:
        return self.rows[i - 1][j - 1]

    def boxes(self) -> list[Box]:
        return [Box(i, j) for i, row in enumerate(self.rows, 1) for j in range(1, len(row) + 1)]

    def entries(self) -> Iterator[tuple[int, int, int]]:
        """Yield (x, row, col) for every entry, row-major, ascending within a box."""
        for i, row in enumerate(self.rows, 1):
            for j, cell in enumerate(row, 1):
                for x in cell:
                    yield x, i, j

    @property
    def total_entries(self) -> int:
        """|S|"""
        return sum(len(c) for row in self.rows for c in row)

    @property
    def num_boxes(self) -> int:
        """||S||"""
        return sum(len(row) for row in self.rows)

    def is_young(self) -> bool:
        return all(len(c) == 1 for row in self.rows for c in row)

    def sort_key(self) -> tuple[Cell, ...]:
        return tuple(chain.from_iterable(self.rows))

    def to_json(self) -> list[list[list[int]]]:
        return [[list(c) for c in row] for row in self.rows]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[Sequence[int]]]) -> "SetValuedTableau":
        return cls(tuple(tuple(tuple(c) for c in row) for row in data))

    def label(self) -> str:
        """Compact form, the inverse of ``parse`` for entries below 10."""

        def fmt(cell: Cell) -> str:
            if len(cell) == 1 and cell[0] < 10:
                return str(cell[0])
            return "{" + ",".join(map(str, cell)) + "}"

        rows = ["".join(fmt(c) for c in row) for row in self.rows]
        while rows and not rows[-1]:
            rows.pop()
        return "/".join(rows)

    def __str__(self) -> str:
        return self.label() or "()"


def _check_same_shape(r: SetValuedTableau, s: SetValuedTableau) -> None:
    if r.shape.parts != s.shape.parts:
        raise ValueError(f"shape mismatch: {r.shape} vs {s.shape}")


def canonical_order(tableaux: Iterable[SetValuedTableau]) -> list[SetValuedTableau]:
    return sorted(tableaux, key=SetValuedTableau.sort_key)


def is_semistandard(s: SetValuedTableau) -> bool:
    rows = s.rows
    for i, row in enumerate(rows):
        for j, cell in enumerate(row):
            if not cell:
                continue
            top = cell[-1]
            if j + 1 < len(row) and row[j + 1] and top > row[j + 1][0]:
                return False
            if i + 1 < len(rows) and j < len(rows[i + 1]) and rows[i + 1][j] and top >= rows[i + 1][j][0]:
                return False
    return True


def entry_on_mu(x: int, r: int, c: int, mu: Partition) -> bool:
    return x <= len(mu) and x + c - r <= mu.part(x)


def is_on_mu(s: SetValuedTableau, mu: Sequence[int] | Partition) -> bool:
    mu = Partition.of(mu)
    return all(entry_on_mu(x, r, c, mu) for x, r, c in s.entries())


def _allowed_entries(r: int, c: int, lower: int, mu: Partition) -> list[int]:
    return [x for x in range(max(lower, 1), len(mu) + 1) if x + c - r <= mu.part(x)]


def _nonempty_subsets(items: Sequence[int]) -> Iterator[Cell]:
    for k in range(1, len(items) + 1):
        yield from combinations(items, k)


def _fit_shape(lam: Sequence[int] | Partition, mu: Partition) -> Partition | None:
    lam = Partition.of(lam)
    if len(lam) > len(mu) and any(lam.parts[len(mu):]):
        return None
    return Partition.of(lam, len(mu))


def _enumerate(lam: Partition, mu: Partition, set_valued: bool) -> list[SetValuedTableau]:
    boxes = lam.boxes()
    grid: dict[tuple[int, int], Cell] = {}
    out: list[SetValuedTableau] = []
    nrows = len(lam)

    def rec(k: int) -> None:
        if k == len(boxes):
            rows = tuple(tuple(grid[(i, j)] for j in range(1, lam.part(i) + 1)) for i in range(1, nrows + 1))
            out.append(SetValuedTableau(rows))
            return
        r, c = boxes[k]
        lower = 1
        if c > 1:
            lower = max(lower, grid[(r, c - 1)][-1])
        if r > 1:
            lower = max(lower, grid[(r - 1, c)][-1] + 1)
        allowed = _allowed_entries(r, c, lower, mu)
        cells = _nonempty_subsets(allowed) if set_valued else ((x,) for x in allowed)
        for cell in cells:
            grid[(r, c)] = cell
            rec(k + 1)
        grid.pop((r, c), None)

    rec(0)
    return canonical_order(out)


def enumerate_ssyt(lam: Sequence[int] | Partition, mu: Sequence[int] | Partition) -> list[SetValuedTableau]:
    """SSYT_{lam,mu}: semistandard Young tableaux of shape lam on mu, canonical order."""
    mu = Partition.of(mu)
    shape = _fit_shape(lam, mu)
    if shape is None:
        return []
    return _enumerate(shape, mu, set_valued=False)


def enumerate_ssvt(lam: Sequence[int] | Partition, mu: Sequence[int] | Partition) -> list[SetValuedTableau]:
    """SSVT_{lam,mu}: semistandard set-valued tableaux of shape lam on mu, canonical order."""
    mu = Partition.of(mu)
    shape = _fit_shape(lam, mu)
    if shape is None:
        return []
    return _enumerate(shape, mu, set_valued=True)


def union(r: SetValuedTableau, s: SetValuedTableau) -> SetValuedTableau:
    _check_same_shape(r, s)
    rows = tuple(
        tuple(tuple(sorted(set(a) | set(b))) for a, b in zip(ra, sa)) for ra, sa in zip(r.rows, s.rows)
    )
    return SetValuedTableau(rows, r.generalized and s.generalized)


def union_all(tableaux: Iterable[SetValuedTableau]) -> SetValuedTableau:
    it = iter(tableaux)
    acc = next(it)
    for t in it:
        acc = union(acc, t)
    return acc


def contains(r: SetValuedTableau, s: SetValuedTableau) -> bool:
    """True iff r is contained in s cellwise."""
    _check_same_shape(r, s)
    return all(set(a) <= set(b) for ra, sa in zip(r.rows, s.rows) for a, b in zip(ra, sa))


def difference(s: SetValuedTableau, r: SetValuedTableau) -> SetValuedTableau:
    """The generalized tableau S - R, cells may be empty."""
    _check_same_shape(r, s)
    rows = tuple(
        tuple(tuple(x for x in b if x not in set(a)) for a, b in zip(ra, sa)) for ra, sa in zip(r.rows, s.rows)
    )
    return SetValuedTableau(rows, generalized=True)


def ssyt_contained_in(s: SetValuedTableau) -> list[SetValuedTableau]:
    """SSYT(S): semistandard single-valued selections of S."""
    boxes = s.boxes()
    grid: dict[tuple[int, int], int] = {}
    out: list[SetValuedTableau] = []

    def rec(k: int) -> None:
        if k == len(boxes):
            out.append(SetValuedTableau(tuple(tuple((grid[(i, j)],) for j in range(1, len(row) + 1))
                                               for i, row in enumerate(s.rows, 1))))
            return
        r, c = boxes[k]
        lower = 1
        if c > 1:
            lower = max(lower, grid[(r, c - 1)])
        if r > 1:
            lower = max(lower, grid[(r - 1, c)] + 1)
        for x in s.cell(r, c):
            if x >= lower:
                grid[(r, c)] = x
                rec(k + 1)

    rec(0)
    return canonical_order(out)


def q_count(s: SetValuedTableau) -> int:
    return len(ssyt_contained_in(s))


def entry_bits(tableaux: Sequence[SetValuedTableau]) -> dict[tuple[int, int, int], int]:
    """Assign a bit to every (row, col, entry) occurring in ``tableaux``."""
    keys = sorted({(r, c, x) for t in tableaux for x, r, c in t.entries()})
    return {k: i for i, k in enumerate(keys)}


def encode(t: SetValuedTableau, bits: dict[tuple[int, int, int], int]) -> int:
    mask = 0
    for x, r, c in t.entries():
        mask |= 1 << bits[(r, c, x)]
    return mask


def _n_definition(s: SetValuedTableau, backend: str | None) -> int:
    gens = ssyt_contained_in(s)
    if not gens:
        return 0
    bits = entry_bits([s])
    totals = _kernels.signed_union_totals([encode(g, bits) for g in gens], backend=backend)
    return totals.get(encode(s, bits), 0)


def subset_union_counts(s: SetValuedTableau) -> list[int]:
    """[N_{S,1}, ..., N_{S,q_S}]: number of j-subsets of SSYT(S) with union S."""
    gens = ssyt_contained_in(s)
    counts = []
    for j in range(1, len(gens) + 1):
        counts.append(sum(1 for sub in combinations(gens, j) if union_all(sub) == s))
    return counts


def sub_tableaux(s: SetValuedTableau) -> Iterator[SetValuedTableau]:
    """Every set-valued R contained in S (all cells nonempty)."""
    cells = [c for row in s.rows for c in row]
    shape = [len(row) for row in s.rows]
    for choice in product(*(list(_nonempty_subsets(c)) for c in cells)):
        it = iter(choice)
        yield SetValuedTableau(tuple(tuple(next(it) for _ in range(k)) for k in shape))


def _n_inclusion_exclusion(s: SetValuedTableau) -> int:
    total = s.total_entries
    first = 0
    second = 0
    for r in sub_tableaux(s):
        sign = -1 if (total - r.total_entries) % 2 else 1
        first += sign
        if q_count(r) == 0:
            second += sign
    return first - second


def _n_closed(s: SetValuedTableau) -> int:
    if not is_semistandard(s):
        return 0
    return -1 if (s.total_entries + s.num_boxes) % 2 else 1


N_STRATEGIES = ("closed", "definition", "inclusion_exclusion")


def n_coefficient(s: SetValuedTableau, strategy: str = "closed", backend: str | None = None) -> int:
    """N_S, the signed count of subsets of SSYT(S) whose union is S.

    ``definition`` sums (-1)^(j+1) N_{S,j} over subsets of SSYT(S);
    ``inclusion_exclusion`` sums (-1)^{|S-R|} over R in S, minus the same sum
    restricted to R with no semistandard selection; ``closed`` is the sign
    (-1)^(|S|+||S||) on semistandard S and 0 otherwise.
    """
    if strategy == "closed":
        return _n_closed(s)
    if strategy == "definition":
        return _n_definition(s, backend)
    if strategy == "inclusion_exclusion":
        return _n_inclusion_exclusion(s)
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {N_STRATEGIES}")


def top_ssyt(lam: Sequence[int] | Partition) -> SetValuedTableau:
    lam = Partition.of(lam)
    return SetValuedTableau(tuple(tuple((i,) for _ in range(p)) for i, p in enumerate(lam.parts, 1)))


def ladder_moves_ssyt(p: SetValuedTableau, mu: Sequence[int] | Partition) -> list[SetValuedTableau]:
    """All single-entry increments of p that stay semistandard and on mu."""
    mu = Partition.of(mu)
    out = []
    for i, row in enumerate(p.rows):
        for j, cell in enumerate(row):
            x = cell[0] + 1
            r, c = i + 1, j + 1
            if not entry_on_mu(x, r, c, mu):
                continue
            rows = [list(rw) for rw in p.rows]
            rows[i][j] = (x,)
            q = SetValuedTableau(tuple(tuple(rw) for rw in rows))
            if is_semistandard(q):
                out.append(q)
    return canonical_order(out)


def ladder_closure_ssyt(lam: Sequence[int] | Partition, mu: Sequence[int] | Partition) -> list[SetValuedTableau]:
    """Everything reachable from the top tableau by ladder moves, within SSYT on mu."""
    mu = Partition.of(mu)
    shape = _fit_shape(lam, mu)
    if shape is None or not partition_leq(shape, mu):
        return []
    start = top_ssyt(shape)
    seen = {start}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        for u in ladder_moves_ssyt(t, mu):
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return canonical_order(seen)
