"""Labeled digraphs with loops, on the vertex set [1, n].

Vertices are identified with their labels, so a digraph is just its order
and a set of arcs.  A 1-regular digraph is the same thing as a permutation
of [1, n]: the arc (i, j) says that i maps to j, and loops are fixed points.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

Arc = tuple[int, int]


class DigraphError(ValueError):
    """Raised when a digraph cannot be built from the given data."""


@dataclass(frozen=True)
class LabeledDigraph:
    n: int
    arcs: tuple[Arc, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise DigraphError(f"order must be a positive integer, got {self.n!r}")
        arcs = tuple(sorted((int(u), int(v)) for u, v in self.arcs))
        for u, v in arcs:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise DigraphError(f"arc ({u},{v}) has an endpoint outside [1,{self.n}]")
        for first, second in zip(arcs, arcs[1:]):
            if first == second:
                raise DigraphError(f"duplicate arc {first}")
        object.__setattr__(self, "arcs", arcs)

    def __len__(self):
        return len(self.arcs)

    def __iter__(self):
        return iter(self.arcs)

    def __contains__(self, arc):
        return tuple(arc) in self.arc_set

    @property
    def arc_set(self) -> frozenset[Arc]:
        return frozenset(self.arcs)

    def out_degrees(self) -> Counter:
        return Counter(u for u, _ in self.arcs)

    def in_degrees(self) -> Counter:
        return Counter(v for _, v in self.arcs)

    def permutation(self) -> list[int]:
        """One-line image list [f(1), ..., f(n)] of a 1-regular digraph."""
        if not is_one_regular(self):
            raise DigraphError("digraph is not 1-regular")
        image = [0] * self.n
        for u, v in self.arcs:
            image[u - 1] = v
        return image


@dataclass(frozen=True, order=True)
class CycleType:
    """Multiset of cycle lengths, stored in non-increasing order."""

    lengths: tuple[int, ...]

    def __post_init__(self):
        lengths = tuple(sorted((int(k) for k in self.lengths), reverse=True))
        if any(k < 1 for k in lengths):
            raise ValueError(f"cycle lengths must be positive: {lengths}")
        object.__setattr__(self, "lengths", lengths)

    @classmethod
    def of(cls, *lengths: int) -> "CycleType":
        return cls(tuple(lengths))

    @property
    def order(self) -> int:
        return sum(self.lengths)

    def counts(self) -> dict[int, int]:
        """Map cycle length -> multiplicity."""
        return dict(sorted(Counter(self.lengths).items(), reverse=True))

    def union(self, other: "CycleType") -> "CycleType":
        return CycleType(self.lengths + other.lengths)

    def __iter__(self):
        return iter(self.lengths)

    def __len__(self):
        return len(self.lengths)

    def __str__(self):
        parts = []
        for k, mult in self.counts().items():
            parts.append(f"C{k}+" if mult == 1 else f"{mult}C{k}+")
        return " u ".join(parts) if parts else "empty"


def from_arcs(n: int, arcs: Iterable[Sequence[int]]) -> LabeledDigraph:
    return LabeledDigraph(n, tuple(tuple(arc) for arc in arcs))


def from_permutation(image: Sequence[int]) -> LabeledDigraph:
    """Digraph with arcs (i, image[i-1]) for i in [1, n]."""
    n = len(image)
    if n == 0:
        raise DigraphError("empty permutation")
    if sorted(image) != list(range(1, n + 1)):
        raise DigraphError(f"{list(image)} is not a permutation of [1,{n}]")
    return LabeledDigraph(n, tuple((i, v) for i, v in enumerate(image, start=1)))


def is_one_regular(D: LabeledDigraph) -> bool:
    if len(D.arcs) != D.n:
        return False
    outs, ins = D.out_degrees(), D.in_degrees()
    return all(outs[x] == 1 and ins[x] == 1 for x in range(1, D.n + 1))


def cycle_type(D: LabeledDigraph) -> CycleType:
    image = dict(D.arcs)
    if not is_one_regular(D):
        raise DigraphError("cycle type is only defined for 1-regular digraphs")
    seen = set()
    lengths = []
    for start in range(1, D.n + 1):
        if start in seen:
            continue
        length, x = 0, start
        while x not in seen:
            seen.add(x)
            x = image[x]
            length += 1
        lengths.append(length)
    return CycleType(tuple(lengths))


def disjoint_union(D1: LabeledDigraph, D2: LabeledDigraph) -> LabeledDigraph:
    shift = D1.n
    arcs = D1.arcs + tuple((u + shift, v + shift) for u, v in D2.arcs)
    return LabeledDigraph(D1.n + D2.n, arcs)


def reverse(D: LabeledDigraph) -> LabeledDigraph:
    return LabeledDigraph(D.n, tuple((v, u) for u, v in D.arcs))


def rotate_quarter(D: LabeledDigraph) -> LabeledDigraph:
    """Rotate the adjacency matrix 90 degrees clockwise: cell (r, c) -> (c, n+1-r)."""
    n = D.n
    return LabeledDigraph(n, tuple((c, n + 1 - r) for r, c in D.arcs))


def is_isomorphic_one_regular(D1: LabeledDigraph, D2: LabeledDigraph) -> bool:
    """Isomorphism test for 1-regular digraphs; cycle type is a complete invariant."""
    return cycle_type(D1) == cycle_type(D2)
