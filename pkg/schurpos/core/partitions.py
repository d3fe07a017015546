"""
Partition Kit Module for SchurPos
Partitions, compositions, hooks, dominance, (k+1)-cores and the weak horizontal strips
of the k-Schur Pieri rule

Partitions are plain tuples of positive integers in weakly decreasing order; the empty
tuple is the partition of 0. Cells are 1-based (row, col) pairs in English notation.
"""

import threading
from itertools import permutations
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Set, Tuple

from .errors import BoundedError, CellError, CoreError, PartitionError, SizeMismatchError

Partition = Tuple[int, ...]
StrictPartition = Tuple[int, ...]
Composition = Tuple[int, ...]

LEQ = "less-or-equal"
GREATER = "greater"
INCOMPARABLE = "incomparable"


class CorePartition(NamedTuple):
    """A (k+1)-core together with the size of its k-bounded partner"""

    shape: Partition
    k: int
    bounded_weight: int


# ---------------------------------------------------------------------------
# Construction and validation
# ---------------------------------------------------------------------------

def make_partition(parts: Iterable[int]) -> Partition:
    """
    Validate and freeze a partition

    Args:
        parts: Weakly decreasing positive integers

    Returns:
        Partition: The parts as a tuple
    """
    result = tuple(int(p) for p in parts)
    if any(p <= 0 for p in result):
        raise PartitionError(f"partition parts must be positive: {list(result)}")
    if any(result[i] < result[i + 1] for i in range(len(result) - 1)):
        raise PartitionError(f"partition parts must be weakly decreasing: {list(result)}")
    return result


def make_strict_partition(parts: Iterable[int]) -> StrictPartition:
    result = make_partition(parts)
    if any(result[i] == result[i + 1] for i in range(len(result) - 1)):
        raise PartitionError(f"strict partition parts must be strictly decreasing: {list(result)}")
    return result


def make_composition(parts: Iterable[int]) -> Composition:
    result = tuple(int(p) for p in parts)
    if any(p <= 0 for p in result):
        raise PartitionError(f"composition parts must be positive: {list(result)}")
    return result


def is_strict(la: Partition) -> bool:
    return all(la[i] > la[i + 1] for i in range(len(la) - 1))


def is_bounded(la: Partition, k: int) -> bool:
    return not la or la[0] <= k


def require_bounded(la: Partition, k: int) -> None:
    if not is_bounded(la, k):
        raise BoundedError(f"partition {list(la)} has a part larger than k={k}")


def sort_partition(parts: Iterable[int]) -> Partition:
    """Sort arbitrary positive parts into a partition (drops zeros)."""
    return tuple(sorted((p for p in parts if p > 0), reverse=True))


def order_key(la: Partition) -> Tuple[int, Tuple[int, ...]]:
    """Sort key: by size, then reverse lexicographic (largest first) within a size."""
    return (sum(la), tuple(-p for p in la))


# ---------------------------------------------------------------------------
# Shape operations
# ---------------------------------------------------------------------------

def conjugate(la: Partition) -> Partition:
    """Transpose the Young diagram."""
    if not la:
        return ()
    return tuple(sum(1 for p in la if p > c) for c in range(la[0]))


def dominance_leq(la: Partition, mu: Partition) -> str:
    """
    Compare two partitions of the same size in dominance order

    Returns:
        str: "less-or-equal" if la <= mu, "greater" if mu < la, otherwise "incomparable"
    """
    if sum(la) != sum(mu):
        raise SizeMismatchError(f"dominance needs equal sizes: |{list(la)}| != |{list(mu)}|")
    length = max(len(la), len(mu))
    sums_la = sums_mu = 0
    la_exceeds = mu_exceeds = False
    for i in range(length):
        sums_la += la[i] if i < len(la) else 0
        sums_mu += mu[i] if i < len(mu) else 0
        if sums_la > sums_mu:
            la_exceeds = True
        elif sums_la < sums_mu:
            mu_exceeds = True
    if not la_exceeds:
        return LEQ
    if not mu_exceeds:
        return GREATER
    return INCOMPARABLE


def _partitions(n: int, max_part: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def partitions_of(n: int, max_part: Optional[int] = None, strict: bool = False,
                  odd_parts: bool = False) -> List[Partition]:
    """
    All partitions of n matching the filters, in reverse lexicographic order

    Args:
        n: Size
        max_part: Optional bound on the parts
        strict: Keep only strictly decreasing partitions
        odd_parts: Keep only partitions whose parts are all odd

    Returns:
        List[Partition]: Partitions, largest first (refines reverse dominance)
    """
    if n < 0:
        raise PartitionError(f"cannot partition a negative number: {n}")
    bound = n if max_part is None else min(n, max_part)
    result = []
    for la in _partitions(n, bound):
        if strict and not is_strict(la):
            continue
        if odd_parts and any(p % 2 == 0 for p in la):
            continue
        result.append(la)
    return result


def compositions_of(n: int) -> List[Composition]:
    """All compositions of n, lexicographically descending."""
    if n == 0:
        return [()]
    result = []
    for first in range(n, 0, -1):
        for rest in compositions_of(n - first):
            result.append((first,) + rest)
    return result


def rearrangements(alpha: Composition) -> List[Composition]:
    """Distinct orderings of the parts of alpha, sorted."""
    return sorted(set(permutations(alpha)))


def hook_length(la: Partition, row: int, col: int) -> int:
    """Arm + leg + 1 of the 1-based cell (row, col)."""
    if row < 1 or row > len(la) or col < 1 or col > la[row - 1]:
        raise CellError(f"cell ({row},{col}) is outside the shape {list(la)}")
    arm = la[row - 1] - col
    leg = sum(1 for r in range(row, len(la)) if la[r] >= col)
    return arm + leg + 1


def hook_lengths(la: Partition) -> List[List[int]]:
    conj = conjugate(la)
    return [[la[r] - c + conj[c] - r - 1 for c in range(la[r])] for r in range(len(la))]


def is_core(la: Partition, t: int) -> bool:
    """True iff no hook length of la is divisible by t."""
    if t < 2:
        raise CoreError(f"core parameter must be at least 2, got {t}")
    return all(h % t for row in hook_lengths(la) for h in row)


def contains(la: Partition, mu: Partition) -> bool:
    """True iff la is contained in mu."""
    if len(la) > len(mu):
        return False
    return all(la[i] <= mu[i] for i in range(len(la)))


def is_horizontal_strip(la: Partition, mu: Partition) -> bool:
    """mu/la has at most one cell per column."""
    if not contains(la, mu):
        return False
    return all(mu[i + 1] <= la[i] for i in range(len(mu) - 1) if i < len(la)) and len(mu) <= len(la) + 1


def is_vertical_strip(la: Partition, mu: Partition) -> bool:
    """mu/la has at most one cell per row."""
    if not contains(la, mu):
        return False
    return all(mu[i] - (la[i] if i < len(la) else 0) <= 1 for i in range(len(mu)))


# ---------------------------------------------------------------------------
# Cores and the k-bounded bijection
# ---------------------------------------------------------------------------

def addable_cells(la: Partition) -> List[Tuple[int, int]]:
    """0-based (row, col) positions where a cell can be added."""
    result = []
    for r in range(len(la) + 1):
        length = la[r] if r < len(la) else 0
        if r == 0 or la[r - 1] > length:
            result.append((r, length))
    return result


def _add_residue(shape: Partition, residue: int, modulus: int) -> Optional[Partition]:
    rows = [r for r, c in addable_cells(shape) if (c - r) % modulus == residue]
    if not rows:
        return None
    grown = list(shape) + [0]
    for r in rows:
        grown[r] += 1
    return sort_partition(grown)


def bounded_of_shape(shape: Partition, k: int) -> Partition:
    """Row i counts the cells of row i with hook length at most k."""
    return tuple(n for n in (sum(1 for h in row if h <= k) for row in hook_lengths(shape)) if n > 0)


class _CoreTable:
    """Breadth-first generation of (k+1)-cores, level d = bounded weight d"""

    def __init__(self, k: int):
        self.k = k
        self.levels: List[Set[Partition]] = [{()}]
        self.to_core: Dict[Partition, Partition] = {(): ()}
        self.to_bounded: Dict[Partition, Partition] = {(): ()}

    def extend(self, max_weight: int) -> None:
        modulus = self.k + 1
        while len(self.levels) <= max_weight:
            weight = len(self.levels)
            level: Set[Partition] = set()
            for core in self.levels[-1]:
                for residue in range(modulus):
                    grown = _add_residue(core, residue, modulus)
                    if grown is not None:
                        level.add(grown)
            bounded_map = {}
            for core in level:
                bounded = bounded_of_shape(core, self.k)
                if sum(bounded) != weight:
                    raise CoreError(
                        f"residue step produced core {list(core)} of bounded weight {sum(bounded)}, expected {weight}"
                    )
                bounded_map[bounded] = core
            self.to_core.update(bounded_map)
            self.to_bounded.update({core: bounded for bounded, core in bounded_map.items()})
            self.levels.append(level)


_core_tables: Dict[int, _CoreTable] = {}
_core_lock = threading.Lock()


def core_table(k: int, max_weight: int) -> _CoreTable:
    """The memoized core table for k, grown to at least max_weight."""
    if k < 1:
        raise CoreError(f"k must be positive, got {k}")
    with _core_lock:
        table = _core_tables.get(k)
        if table is None:
            table = _core_tables[k] = _CoreTable(k)
        if len(table.levels) <= max_weight:
            table.extend(max_weight)
        return table


def cores_with_weight(k: int, weight: int) -> List[Partition]:
    return sorted(core_table(k, weight).levels[weight], key=order_key)


def make_core(shape: Iterable[int], k: int) -> CorePartition:
    shape = make_partition(shape)
    if not is_core(shape, k + 1):
        raise CoreError(f"{list(shape)} is not a {k + 1}-core")
    return CorePartition(shape, k, sum(bounded_of_shape(shape, k)))


def core_to_bounded(core: CorePartition) -> Partition:
    """The k-bounded partition attached to a (k+1)-core."""
    if not is_core(core.shape, core.k + 1):
        raise CoreError(f"{list(core.shape)} is not a {core.k + 1}-core")
    bounded = bounded_of_shape(core.shape, core.k)
    if sum(bounded) != core.bounded_weight:
        raise CoreError(f"core {list(core.shape)} has bounded weight {sum(bounded)}, not {core.bounded_weight}")
    return bounded


def bounded_to_core(la: Partition, k: int) -> CorePartition:
    """The unique (k+1)-core whose hook counts give la."""
    require_bounded(la, k)
    table = core_table(k, sum(la))
    return CorePartition(table.to_core[la], k, sum(la))


def k_conjugate(la: Partition, k: int) -> Partition:
    """Conjugate the (k+1)-core of la and read off the k-bounded partition again."""
    core = bounded_to_core(la, k)
    return core_to_bounded(CorePartition(conjugate(core.shape), k, core.bounded_weight))


def is_weak_horizontal_strip(la: Partition, mu: Partition, k: int, r: int) -> bool:
    """
    The t=1 weak Pieri condition

    True iff la is inside mu, |mu| - |la| = r, mu/la is a horizontal strip and the
    k-conjugates form a vertical strip.
    """
    require_bounded(la, k)
    require_bounded(mu, k)
    if r < 0:
        raise PartitionError(f"strip size must be non-negative, got {r}")
    if sum(mu) - sum(la) != r:
        return False
    if r == 0:
        return la == mu
    if not is_horizontal_strip(la, mu):
        return False
    return is_vertical_strip(k_conjugate(la, k), k_conjugate(mu, k))


def horizontal_strip_extensions(la: Partition, r: int, max_part: Optional[int] = None) -> List[Partition]:
    """All mu with mu/la a horizontal r-strip and parts at most max_part."""
    bound = max_part if max_part is not None else (la[0] if la else 0) + r
    rows = list(la) + [0]
    result: List[Partition] = []

    def grow(i: int, remaining: int, acc: List[int]) -> None:
        if i == len(rows):
            if remaining == 0:
                result.append(sort_partition(acc))
            return
        ceiling = bound if i == 0 else rows[i - 1]
        for extra in range(min(remaining, ceiling - rows[i]), -1, -1):
            grow(i + 1, remaining - extra, acc + [rows[i] + extra])

    grow(0, r, [])
    return sorted(set(result), key=order_key)
