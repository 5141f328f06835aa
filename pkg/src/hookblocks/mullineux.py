"""The Mullineux involution on p-regular partitions, via rim-stripping symbols."""

from __future__ import annotations

from functools import lru_cache

from hookblocks.partitions import Partition, is_p_regular, partitions


def strip_p_rim(parts: tuple[int, ...], p: int) -> tuple[tuple[int, ...], int]:
    """Remove the p-rim and report how many cells went.

    The rim is read from the top-right cell downward and leftward.  Cells are
    taken in runs of p; when a run fills up while the current row still has rim
    cells left, those cells are skipped and the next run starts at the
    rightmost rim cell of the row below.  Every row loses at least one cell.
    """
    out = []
    removed = 0
    seg = 0
    count = len(parts)
    for k in range(count):
        right = parts[k]
        left = parts[k + 1] if k + 1 < count else 1
        take = min(right - left + 1, p - seg)
        out.append(parts[k] - take)
        removed += take
        seg += take
        if seg == p:
            seg = 0
    return tuple(x for x in out if x), removed


def mullineux_symbol(lam: Partition, p: int) -> tuple[tuple[int, int], ...]:
    """Columns (cells removed, row count) of the successive p-rim strippings."""
    if not is_p_regular(lam, p):
        raise ValueError(f"{lam} is not {p}-regular")
    cols = []
    parts = lam.parts
    while parts:
        rows = len(parts)
        parts, removed = strip_p_rim(parts, p)
        if not is_p_regular(Partition(parts), p):
            raise ArithmeticError("p-rim stripping left a non-regular partition")
        cols.append((removed, rows))
    return tuple(cols)


@lru_cache(maxsize=None)
def _symbols_by_size(total: int, p: int) -> dict[tuple[tuple[int, int], ...], Partition]:
    """Symbol -> partition index over all p-regular partitions of ``total``.

    The symbol determines the partition, so this is a bijection; it is how
    transformed symbols are turned back into partitions.
    """
    index: dict[tuple[tuple[int, int], ...], Partition] = {}
    for lam in partitions(total):
        if is_p_regular(lam, p):
            index[mullineux_symbol(lam, p)] = lam
    return index


def mullineux(lam: Partition, p: int) -> Partition:
    """Image of a p-regular partition under the Mullineux map.

    The image's symbol keeps each rim size a and replaces the row count r by
    a - r, plus one exactly when p does not divide a.  The image is the unique
    p-regular partition of the same size carrying the transformed symbol.
    """
    if not is_p_regular(lam, p):
        raise ValueError(f"{lam} is not {p}-regular")
    if lam.size == 0:
        return lam
    transformed = tuple(
        (a, a - r + (0 if a % p == 0 else 1)) for a, r in mullineux_symbol(lam, p)
    )
    image = _symbols_by_size(lam.size, p).get(transformed)
    if image is None:
        raise ArithmeticError(
            f"no {p}-regular partition of {lam.size} carries the symbol {transformed}"
        )
    return image
