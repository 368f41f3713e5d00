"""Indexing combinatorics of the Grassmannian Gr(d, n).

Fixed points and Schubert varieties are indexed by d-subsets of {1..n};
partitions in the d x (n-d) box index the same set via ``pi``.  All indices
(rows, columns, positions inside a subset) are 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, NamedTuple, Sequence


class InvalidIndexError(ValueError):
    """Raised for malformed subsets or partitions."""


class Box(NamedTuple):
    row: int
    col: int


def box_leq(p: Box, q: Box) -> bool:
    """Componentwise order on boxes: (i,j) <= (k,l) iff i <= k and j <= l."""
    return p[0] <= q[0] and p[1] <= q[1]


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of nonnegative parts (trailing zeros kept)."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 0 for p in parts):
            raise InvalidIndexError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidIndexError(f"parts not weakly decreasing: {parts}")

    @classmethod
    def of(cls, parts: Sequence[int] | "Partition", length: int | None = None) -> "Partition":
        """Coerce ``parts`` into a partition, padding with zeros to ``length``."""
        if isinstance(parts, Partition):
            parts = parts.parts
        parts = tuple(parts)
        if length is not None:
            if len(parts) > length:
                if any(parts[length:]):
                    raise InvalidIndexError(f"{parts} has more than {length} nonzero parts")
                parts = parts[:length]
            parts = parts + (0,) * (length - len(parts))
        return cls(parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def part(self, i: int) -> int:
        """The 1-based i-th part; zero past the end."""
        if i < 1:
            raise InvalidIndexError(f"part index must be positive, got {i}")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def boxes(self) -> list[Box]:
        """Boxes of the Young diagram in row-major order."""
        return [Box(i, j) for i, p in enumerate(self.parts, 1) for j in range(1, p + 1)]

    def contains_box(self, box: tuple[int, int]) -> bool:
        i, j = box
        return 1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]

    def column_length(self, j: int) -> int:
        return sum(1 for p in self.parts if p >= j)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class GrassIndex:
    """A d-element subset of {1..n}, stored increasing."""

    d: int
    n: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        d, n = self.d, self.n
        if not 0 < d < n:
            raise InvalidIndexError(f"need 0 < d < n, got d={d}, n={n}")
        if len(entries) != d:
            raise InvalidIndexError(f"expected {d} entries, got {len(entries)}")
        if any(entries[i] >= entries[i + 1] for i in range(d - 1)):
            raise InvalidIndexError(f"entries not strictly increasing: {entries}")
        if entries[0] < 1 or entries[-1] > n:
            raise InvalidIndexError(f"entries out of range 1..{n}: {entries}")

    def __call__(self, i: int) -> int:
        """alpha(i), 1-based."""
        return self.entries[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return self.d

    def complement(self) -> tuple[int, ...]:
        return complement(self)

    def length(self) -> int:
        return length(self)

    def partition(self) -> Partition:
        return pi(self)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.entries)) + "}"


def grass_indices(d: int, n: int) -> Iterator[GrassIndex]:
    """All of I_{d,n} in lexicographic order."""
    for c in combinations(range(1, n + 1), d):
        yield GrassIndex(d, n, c)


def grass_partitions(d: int, n: int) -> Iterator[Partition]:
    """All of J_{d,n}, in the order induced by ``grass_indices``."""
    for a in grass_indices(d, n):
        yield pi(a)


def pi(alpha: GrassIndex) -> Partition:
    d = alpha.d
    return Partition(tuple(alpha(d + 1 - i) - (d + 1 - i) for i in range(1, d + 1)))


def pi_inverse(lam: Sequence[int] | Partition, d: int, n: int) -> GrassIndex:
    lam = Partition.of(lam, d)
    if lam.part(1) > n - d:
        raise InvalidIndexError(f"{lam} does not fit in a {d} x {n - d} box")
    # alpha(k) = lambda_{d+1-k} + k
    return GrassIndex(d, n, tuple(lam.part(d + 1 - k) + k for k in range(1, d + 1)))


def complement(alpha: GrassIndex) -> tuple[int, ...]:
    s = set(alpha.entries)
    return tuple(i for i in range(1, alpha.n + 1) if i not in s)


def length(alpha: GrassIndex) -> int:
    return sum(a - i for i, a in enumerate(alpha.entries, 1))


def partition_leq(lam: Sequence[int] | Partition, mu: Sequence[int] | Partition) -> bool:
    lam_p = lam.parts if isinstance(lam, Partition) else tuple(lam)
    mu_p = mu.parts if isinstance(mu, Partition) else tuple(mu)
    k = max(len(lam_p), len(mu_p))
    lam_p = lam_p + (0,) * (k - len(lam_p))
    mu_p = mu_p + (0,) * (k - len(mu_p))
    return all(a <= b for a, b in zip(lam_p, mu_p))


def mu_column_identity(beta: GrassIndex) -> bool:
    """Check mu_j = #{i : beta'(i) < beta(d+1-j)} for every row j of pi(beta)."""
    mu = pi(beta)
    comp = complement(beta)
    d = beta.d
    return all(
        mu.part(j) == sum(1 for b in comp if b < beta(d + 1 - j)) for j in range(1, d + 1)
    )
