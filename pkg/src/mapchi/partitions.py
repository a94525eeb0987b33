"""Integer partitions in reverse-lexicographic order and their statistics.

Partitions index both the power-sum/monomial bases of symmetric functions
and the vertex-valence data of maps.  Throughout the package a partition is
written with weakly decreasing positive parts, and lists of all partitions
of n are produced in reverse-lexicographic order: (n) first, (1,...,1) last.
For partitions of equal weight that order coincides with plain
lexicographic comparison of the part tuples.
"""

from __future__ import annotations

import math
from functools import lru_cache


class Partition:
    """An immutable integer partition with cached weight.

    >>> Partition((3, 1, 1)).weight
    5
    >>> Partition((3, 1, 1)).length
    3
    """

    __slots__ = ("parts", "weight")

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"partition parts must be positive, got {p}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "weight", sum(parts))

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> dict[int, int]:
        """Map part value -> multiplicity."""
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, k):
        return self.parts[k]

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition{self.parts!r}"

    def rlex_le(self, other: Partition) -> bool:
        """Reverse-lexicographic comparison for equal-weight partitions.

        Returns True when self comes no later than other in the order where
        (n) is largest and (1^n) smallest, i.e. self.parts <= other.parts.
        """
        if self.weight != other.weight:
            raise ValueError("reverse-lex comparison needs equal weights")
        return self.parts <= other.parts


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order.

    >>> [p.parts for p in partitions_of(4)]
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    >>> partitions_of(0)
    (Partition(),)
    """
    if n < 0:
        raise ValueError("cannot partition a negative integer")

    def gen(rest: int, cap: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(Partition(p) for p in gen(n, n))


def z_of(mu: Partition) -> int:
    """The centralizer order z_mu = prod_k k^{m_k} m_k!.

    The conjugacy class of cycle type mu in the symmetric group on
    |mu| letters has |mu|!/z_mu elements.

    >>> z_of(Partition((2, 1, 1)))
    4
    >>> z_of(Partition((3,)))
    3
    """
    out = 1
    for part, mult in mu.multiplicities().items():
        out *= part**mult * math.factorial(mult)
    return out


def vertex_distribution_of(mu: Partition) -> tuple[int, ...]:
    """Multiplicity vector (i_1, i_2, ...) with i_k = #parts equal to k.

    The tuple ends at the largest part, so it never has trailing zeros.

    >>> vertex_distribution_of(Partition((3, 1, 1)))
    (2, 0, 1)
    >>> vertex_distribution_of(Partition(()))
    ()
    """
    if not mu.parts:
        return ()
    out = [0] * mu.parts[0]
    for p in mu.parts:
        out[p - 1] += 1
    return tuple(out)


def partition_from_distribution(i: tuple[int, ...]) -> Partition:
    """Inverse of `vertex_distribution_of` (trailing zeros tolerated).

    >>> partition_from_distribution((2, 0, 1)).parts
    (3, 1, 1)
    """
    parts = []
    for k in range(len(i), 0, -1):
        if i[k - 1] < 0:
            raise ValueError("multiplicities must be nonnegative")
        parts.extend([k] * i[k - 1])
    return Partition(parts)
