"""Noncrossing partitions without singletons and the boundary labeling.

The 2n boundary points of an order-n rectangle are labeled 1..2n starting at
the bottom-left corner and continuing counterclockwise: bottom position p
(from the left) carries label p, top position p carries label 2n+1-p.

P_{2n} is the set of partitions of {1,...,2n} whose blocks all have size at
least 2 and which are noncrossing: no a < b < c < d with {a,c} in one block
and {b,d} in another.  These partitions index the basis of the order-n
algebra, and their count is the Riordan number R_{2n}.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product

from .errors import CapExceeded, PartitionError

__all__ = [
    "Partition",
    "BOTTOM",
    "TOP",
    "DEFAULT_ENUMERATION_CAP",
    "boundary_label",
    "boundary_position",
    "is_noncrossing",
    "enumerate_basis",
    "riordan",
    "classify_block",
    "covers",
    "pad_partition",
    "identity_partition",
    "partition_to_json",
    "partition_from_json",
]

BOTTOM = "bottom"
TOP = "top"

DEFAULT_ENUMERATION_CAP = 8

Block = tuple[int, ...]


def boundary_label(side: str, position: int, n: int) -> int:
    """Label of the boundary point at `position` (1..n from the left).

    Bottom points are labeled 1..n left to right, top points n+1..2n right
    to left, so the full cycle 1..2n runs counterclockwise.
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if not 1 <= position <= n:
        raise ValueError(f"position {position} out of range 1..{n}")
    if side == BOTTOM:
        return position
    if side == TOP:
        return 2 * n + 1 - position
    raise ValueError(f"unknown side {side!r}")


def boundary_position(label: int, n: int) -> tuple[str, int]:
    """Inverse of boundary_label: label 1..2n to (side, position)."""
    if not 1 <= label <= 2 * n:
        raise ValueError(f"label {label} out of range 1..{2 * n}")
    if label <= n:
        return (BOTTOM, label)
    return (TOP, 2 * n + 1 - label)


def _check_cover(blocks, n: int) -> None:
    seen: set[int] = set()
    total = 0
    for block in blocks:
        for x in block:
            if not isinstance(x, int) or not 1 <= x <= 2 * n:
                raise PartitionError(f"point {x!r} outside 1..{2 * n}")
            seen.add(x)
            total += 1
    if total != 2 * n or len(seen) != 2 * n:
        raise PartitionError(
            f"blocks do not partition 1..{2 * n} (covered {sorted(seen)})"
        )


def _blocks_cross(a: Block, b: Block) -> bool:
    # Two disjoint sorted blocks cross iff membership along their merged
    # point sequence alternates a,b,a,b (three or more switches).
    merged = sorted([(x, 0) for x in a] + [(x, 1) for x in b])
    switches = sum(
        1 for (_, s), (_, t) in zip(merged, merged[1:]) if s != t
    )
    return switches >= 3


def is_noncrossing(blocks, n: int) -> bool:
    """True iff no two blocks cross.

    Raises:
        PartitionError: if the blocks do not form a set partition of 1..2n.
    """
    blocks = [tuple(sorted(b)) for b in blocks]
    _check_cover(blocks, n)
    return not any(
        _blocks_cross(a, b) for a, b in combinations(blocks, 2)
    )


class Partition:
    """A canonical noncrossing partition of {1,...,2n} without singletons.

    Blocks are stored sorted ascending, ordered by their minimum element.
    Instances are immutable, hashable and totally ordered by their block
    encoding (the order used for all deterministic output).
    """

    __slots__ = ("n", "blocks")

    def __init__(self, n: int, blocks):
        if n < 1:
            raise PartitionError(f"order must be positive, got {n}")
        canon = tuple(sorted(tuple(sorted(b)) for b in blocks))
        _check_cover(canon, n)
        for block in canon:
            if len(block) < 2:
                raise PartitionError(f"singleton block {block}")
        for a, b in combinations(canon, 2):
            if _blocks_cross(a, b):
                raise PartitionError(f"crossing blocks {a} and {b}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", canon)

    def __setattr__(self, *args):
        raise AttributeError("Partition is immutable")

    def block_of(self, label: int) -> Block:
        for block in self.blocks:
            if label in block:
                return block
        raise PartitionError(f"label {label} not covered")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Partition)
            and self.n == other.n
            and self.blocks == other.blocks
        )

    def __lt__(self, other: "Partition") -> bool:
        if self.n != other.n:
            return self.n < other.n
        return self.blocks < other.blocks

    def __hash__(self) -> int:
        return hash((self.n, self.blocks))

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)
        return f"Partition(n={self.n}, {{{body}}})"


def identity_partition(n: int) -> Partition:
    """The partition pairing bottom position j with top position j."""
    return Partition(n, [(j, 2 * n + 1 - j) for j in range(1, n + 1)])


@lru_cache(maxsize=None)
def _segment_patterns(length: int) -> tuple[tuple[Block, ...], ...]:
    """All noncrossing no-singleton partitions of the points 0..length-1.

    The block of point 0 is chosen as 0 plus a nonempty subset of the rest;
    noncrossing forces every other block into a single gap between chosen
    points, so the gaps recurse independently.  Gaps of size 1 are dead ends
    (they would need a singleton) and are pruned.
    """
    if length == 0:
        return ((),)
    if length == 1:
        return ()
    results: list[tuple[Block, ...]] = []
    rest = range(1, length)
    for size in range(1, length):
        for chosen in combinations(rest, size):
            bounds = (0, *chosen, length)
            gaps = [
                (bounds[i] + 1, bounds[i + 1] - bounds[i] - 1)
                for i in range(len(bounds) - 1)
            ]
            if any(g == 1 for _, g in gaps):
                continue
            gap_parts = [
                [
                    tuple(tuple(x + start for x in blk) for blk in pat)
                    for pat in _segment_patterns(g)
                ]
                for start, g in gaps
                if g > 0
            ]
            head: Block = (0, *chosen)
            for pick in product(*gap_parts):
                blocks = [head]
                for part in pick:
                    blocks.extend(part)
                results.append(tuple(sorted(blocks)))
    return tuple(results)


def enumerate_basis(n: int, *, cap: int | None = DEFAULT_ENUMERATION_CAP) -> list[Partition]:
    """All of P_{2n} in canonical order (lexicographic block encoding).

    Generates noncrossing no-singleton partitions directly (never by
    filtering all set partitions).

    Raises:
        CapExceeded: if n exceeds the enumeration cap.
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if cap is not None and n > cap:
        raise CapExceeded(f"order {n} exceeds enumeration cap {cap}")
    out = [
        Partition(n, [tuple(x + 1 for x in blk) for blk in pattern])
        for pattern in _segment_patterns(2 * n)
    ]
    out.sort()
    return out


def riordan(k: int) -> int:
    """The k-th Riordan number, R_0 = 1, R_1 = 0.

    Satisfies (k+1) R_k = (k-1) (2 R_{k-1} + 3 R_{k-2}); every division in
    the recurrence is exact, and an inexact one signals an indexing bug.
    """
    if k < 0:
        raise ValueError(f"index must be non-negative, got {k}")
    values = [1, 0]
    while len(values) <= k:
        m = len(values)
        num = (m - 1) * (2 * values[m - 1] + 3 * values[m - 2])
        q, r = divmod(num, m + 1)
        if r:
            raise ArithmeticError(f"inexact Riordan division at index {m}")
        values.append(q)
    return values[k]


def classify_block(p: Partition, block) -> str:
    """Classify a block as 'top-isolated', 'bottom-isolated' or 'crossing'.

    A block is top-isolated when all its labels lie on the top side
    (label > n), bottom-isolated when all lie on the bottom, and crossing
    when it touches both sides.
    """
    block = tuple(sorted(block))
    if block not in p.blocks:
        raise PartitionError(f"block {block} not in partition")
    if all(x > p.n for x in block):
        return "top-isolated"
    if all(x <= p.n for x in block):
        return "bottom-isolated"
    return "crossing"


def _side_positions(block: Block, n: int) -> list[int]:
    return sorted(boundary_position(x, n)[1] for x in block)


def covers(p: Partition, a, b) -> bool:
    """True iff block `a` together with its side of the rectangle encloses
    block `b`: every point of b lies strictly between two consecutive
    points of a on the same side.

    Both blocks must be isolated on the same side and distinct; anything
    else is a misuse error, not False.
    """
    a = tuple(sorted(a))
    b = tuple(sorted(b))
    ka = classify_block(p, a)
    kb = classify_block(p, b)
    if ka == "crossing" or kb == "crossing":
        raise ValueError("covers is defined only for isolated blocks")
    if ka != kb:
        raise ValueError("covers requires blocks on the same side")
    if a == b:
        raise ValueError("covers requires two distinct blocks")
    pa = _side_positions(a, p.n)
    pb = _side_positions(b, p.n)
    for x, y in zip(pa, pa[1:]):
        if x < pb[0] and pb[-1] < y:
            return True
    return False


def pad_partition(p: Partition, n: int) -> Partition:
    """Embed an order-m partition into order n by appending vertical strands
    at positions m+1..n.

    Existing points keep their positions: bottom labels are unchanged and a
    top label t of p (position 2m+1-t) becomes 2n+1-position.
    """
    m = p.n
    if n < m:
        raise ValueError(f"target order {n} below partition order {m}")
    if n == m:
        return p

    def relabel(x: int) -> int:
        if x <= m:
            return x
        return 2 * n + 1 - (2 * m + 1 - x)

    blocks = [tuple(relabel(x) for x in block) for block in p.blocks]
    blocks.extend((j, 2 * n + 1 - j) for j in range(m + 1, n + 1))
    return Partition(n, blocks)


def partition_to_json(p: Partition) -> dict:
    return {"n": p.n, "blocks": [list(b) for b in p.blocks]}


def partition_from_json(data: dict) -> Partition:
    return Partition(int(data["n"]), data["blocks"])
