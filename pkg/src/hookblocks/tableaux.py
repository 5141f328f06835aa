"""Young tableaux: validation, exhaustive enumeration, hook-length counting."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from hookblocks.partitions import Partition


@dataclass(frozen=True)
class Tableau:
    """A filling of the diagram of ``shape`` by positive integers, row by row."""

    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if tuple(len(row) for row in rows) != self.shape.parts:
            raise ValueError("row lengths do not match the shape")
        for row in rows:
            for x in row:
                if x < 1:
                    raise ValueError("entries must be positive integers")

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows if len(row) > j)

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def content(self, letters: int | None = None) -> tuple[int, ...]:
        """Multiplicities of the letters 1..letters (default: up to the max entry)."""
        word = self.reading_word()
        top = letters if letters is not None else (max(word) if word else 0)
        counts = [0] * top
        for x in word:
            counts[x - 1] += 1
        return tuple(counts)

    def _rows_increase(self, strict: bool) -> bool:
        for row in self.rows:
            for a, b in zip(row, row[1:]):
                if b < a or (strict and b == a):
                    return False
        return True

    def _columns_increase(self) -> bool:
        for i in range(1, len(self.rows)):
            for j in range(len(self.rows[i])):
                if self.rows[i][j] <= self.rows[i - 1][j]:
                    return False
        return True

    def is_standard(self) -> bool:
        word = self.reading_word()
        if sorted(word) != list(range(1, len(word) + 1)):
            return False
        return self._rows_increase(strict=True) and self._columns_increase()

    def is_semistandard(self) -> bool:
        return self._rows_increase(strict=False) and self._columns_increase()


@lru_cache(maxsize=None)
def standard_tableaux(shape: Partition) -> tuple[Tableau, ...]:
    """All standard fillings, in lexicographic order of the row-reading word.

    Backtracks over cells in row-major order trying the smallest unused entry
    first, which emits reading words in increasing lexicographic order.
    """
    size = shape.size
    cells = [(i, j) for i, part in enumerate(shape.parts) for j in range(part)]
    grid = [[0] * part for part in shape.parts]
    used = [False] * (size + 1)
    found: list[Tableau] = []

    def fill(pos: int) -> None:
        if pos == len(cells):
            found.append(Tableau(shape, tuple(tuple(row) for row in grid)))
            return
        i, j = cells[pos]
        for value in range(1, size + 1):
            if used[value]:
                continue
            if j > 0 and grid[i][j - 1] >= value:
                continue
            if i > 0 and grid[i - 1][j] >= value:
                continue
            grid[i][j] = value
            used[value] = True
            fill(pos + 1)
            used[value] = False
            grid[i][j] = 0

    fill(0)
    return tuple(found)


@lru_cache(maxsize=None)
def semistandard_tableaux(shape: Partition, content: tuple[int, ...]) -> tuple[Tableau, ...]:
    """All semistandard fillings with the given letter multiplicities.

    ``content[k]`` is the number of entries equal to k+1.  Output is ordered
    lexicographically by row-reading word.
    """
    content = tuple(int(c) for c in content)
    if any(c < 0 for c in content):
        raise ValueError("content entries must be nonnegative")
    if sum(content) != shape.size:
        raise ValueError(f"content {content} does not sum to |{shape}| = {shape.size}")
    cells = [(i, j) for i, part in enumerate(shape.parts) for j in range(part)]
    grid = [[0] * part for part in shape.parts]
    remaining = list(content)
    found: list[Tableau] = []

    def fill(pos: int) -> None:
        if pos == len(cells):
            found.append(Tableau(shape, tuple(tuple(row) for row in grid)))
            return
        i, j = cells[pos]
        for value in range(1, len(content) + 1):
            if not remaining[value - 1]:
                continue
            if j > 0 and grid[i][j - 1] > value:
                continue
            if i > 0 and grid[i - 1][j] >= value:
                continue
            grid[i][j] = value
            remaining[value - 1] -= 1
            fill(pos + 1)
            remaining[value - 1] += 1
            grid[i][j] = 0

    fill(0)
    return tuple(found)


def standard_tableaux_count(shape: Partition) -> int:
    """Number of standard fillings, by the hook-length formula."""
    if shape.size == 0:
        return 1
    conj = shape.conjugate()
    denom = 1
    for i, part in enumerate(shape.parts):
        for j in range(part):
            denom *= part - j + conj.parts[j] - i - 1
    count, rem = divmod(math.factorial(shape.size), denom)
    if rem:
        raise ArithmeticError("hook-length product does not divide the factorial")
    return count
