"""Partitions, integer weights, and the shifted reflection combinatorics on them.

Everything here is exact integer arithmetic on immutable values.  Partitions
never store zero parts; a separate padding step embeds them into Z^n when a
fixed dimension is needed.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(x) for x in self.parts)
        object.__setattr__(self, "parts", parts)
        for k, part in enumerate(parts):
            if part < 1:
                raise ValueError(f"parts must be positive integers, got {part}")
            if k and parts[k - 1] < part:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse a comma-separated string such as '4,1'."""
        text = text.strip()
        if not text:
            raise ValueError("empty partition string")
        try:
            parts = tuple(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise ValueError(f"malformed partition string: {text!r}") from exc
        return cls(parts)

    def csv(self) -> str:
        """Comma-separated serialization, inverse to :meth:`parse`."""
        return ",".join(str(x) for x in self.parts)

    def __str__(self) -> str:
        return "(" + self.csv() + ")"

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, k: int) -> int:
        return self.parts[k]

    def part(self, k: int) -> int:
        """The k-th part, 1-based, zero past the last row."""
        return self.parts[k - 1] if 1 <= k <= len(self.parts) else 0

    def conjugate(self) -> Partition:
        """Transpose of the Young diagram."""
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for part in self.parts:
            for j in range(part):
                cols[j] += 1
        return Partition(tuple(cols))

    def padded(self, n: int) -> tuple[int, ...]:
        """Coordinates in Z^n, padded with zeros; errors if there are more than n parts."""
        if len(self.parts) > n:
            raise ValueError(f"partition {self} has more than {n} parts")
        return self.parts + (0,) * (n - len(self.parts))

    def to_weight(self, n: int) -> Weight:
        return Weight(self.padded(n))

    def dominates(self, other: Partition) -> bool:
        """Dominance order via partial sums; False when the sizes differ."""
        if self.size != other.size:
            return False
        acc_self = acc_other = 0
        for k in range(1, max(self.length, other.length) + 1):
            acc_self += self.part(k)
            acc_other += other.part(k)
            if acc_self < acc_other:
                return False
        return True

    def cells(self) -> Iterator[tuple[int, int]]:
        """(row, column) pairs of the diagram, 0-based, row-major."""
        for i, part in enumerate(self.parts):
            for j in range(part):
                yield (i, j)


@dataclass(frozen=True)
class Weight:
    """An integer vector of fixed dimension, an element of Z^n."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        coords = tuple(int(x) for x in self.coords)
        if not coords:
            raise ValueError("weights must have positive dimension")
        object.__setattr__(self, "coords", coords)

    @property
    def n(self) -> int:
        return len(self.coords)

    def _check_dim(self, other: Weight) -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other: Weight) -> Weight:
        self._check_dim(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Weight) -> Weight:
        self._check_dim(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __getitem__(self, k: int) -> int:
        return self.coords[k]

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    @property
    def total(self) -> int:
        return sum(self.coords)

    def is_dominant(self) -> bool:
        return all(self.coords[k] >= self.coords[k + 1] for k in range(self.n - 1))

    def to_partition(self) -> Partition:
        """Strip trailing zeros; requires a dominant vector with nonnegative entries."""
        if not self.is_dominant() or self.coords[-1] < 0:
            raise ValueError(f"{self.coords} is not a dominant polynomial weight")
        return Partition(tuple(x for x in self.coords if x))


@dataclass(frozen=True)
class AffineReflection:
    """The map v -> s_ij(v) + level * (e_i - e_j) with 1-based indices i < j.

    ``s_ij`` swaps coordinates i and j.  When used for the shifted action at a
    prime p the level is a multiple of p; only the absolute level is stored.
    """

    i: int
    j: int
    level: int = 0

    def __post_init__(self) -> None:
        if not 1 <= self.i < self.j:
            raise ValueError(f"need 1 <= i < j, got i={self.i}, j={self.j}")

    def apply(self, v: Weight) -> Weight:
        if self.j > v.n:
            raise ValueError(f"reflection indices ({self.i},{self.j}) exceed dimension {v.n}")
        c = list(v.coords)
        a, b = c[self.i - 1], c[self.j - 1]
        c[self.i - 1] = b + self.level
        c[self.j - 1] = a - self.level
        return Weight(tuple(c))


def rho(n: int) -> Weight:
    """The staircase weight (n-1, n-2, ..., 1, 0)."""
    if n < 1:
        raise ValueError("n must be positive")
    return Weight(tuple(range(n - 1, -1, -1)))


def dot_reflect(s: AffineReflection, w: Weight) -> Weight:
    """Shifted action s . w = s(w + rho) - rho."""
    shift = rho(w.n)
    return s.apply(w + shift) - shift


def hook_partition(p: int, i: int) -> Partition:
    """The hook (p-i, 1^i), a partition of p."""
    if not 0 <= i <= p - 1:
        raise ValueError(f"hook index must satisfy 0 <= i <= p-1, got i={i} for p={p}")
    return Partition((p - i,) + (1,) * i)


def is_p_regular(lam: Partition, p: int) -> bool:
    """True when no part value is repeated p or more times."""
    return all(count < p for count in Counter(lam.parts).values())


def is_column_p_regular(lam: Partition, p: int) -> bool:
    """True when all successive differences, including last part against 0, are below p."""
    parts = lam.parts + (0,)
    return all(parts[k] - parts[k + 1] < p for k in range(len(parts) - 1))


def partitions(
    total: int, max_length: int | None = None, max_part: int | None = None
) -> Iterator[Partition]:
    """All partitions of ``total``, in descending lexicographic order."""
    if total < 0:
        raise ValueError("total must be nonnegative")
    cap_len = total if max_length is None else max_length
    cap_part = total if max_part is None else max_part

    def rec(remaining: int, cap: int, slots: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if slots == 0 or cap == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    for parts in rec(total, cap_part, cap_len):
        yield Partition(parts)


def p_regular_partitions(total: int, p: int) -> Iterator[Partition]:
    for lam in partitions(total):
        if is_p_regular(lam, p):
            yield lam
