"""Exhaustive search for standard and modular n-queens solutions.

Solutions are produced row by row with the columns tried in increasing
order, so every stream is lexicographic in the column vector.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import gcd
from typing import Iterator, Optional, Sequence

from .digraph import CycleType, LabeledDigraph, cycle_type, from_permutation
from .labeling import Placement, diff_multiset, sum_multiset, verify_modular_queen
from .product import FamilyAssignment, oh_product

# largest number of (D, h) pairs modular_bound_check will enumerate exhaustively
EXHAUSTIVE_LIMIT = 200_000


def _search(n: int, modular: bool) -> Iterator[list[int]]:
    columns = [0] * n
    full = (1 << n) - 1

    if modular:
        def extend(row, cols, sums, diffs):
            if row == n:
                yield [c + 1 for c in columns]
                return
            free = full & ~cols
            while free:
                bit = free & -free
                free ^= bit
                c = bit.bit_length() - 1
                s, d = 1 << ((row + c) % n), 1 << ((c - row) % n)
                if sums & s or diffs & d:
                    continue
                columns[row] = c
                yield from extend(row + 1, cols | bit, sums | s, diffs | d)
    else:
        def extend(row, cols, sums, diffs):
            if row == n:
                yield [c + 1 for c in columns]
                return
            # shift the diagonal masks so bit c marks a blocked column in this row
            free = full & ~(cols | sums | diffs)
            while free:
                bit = free & -free
                free ^= bit
                columns[row] = bit.bit_length() - 1
                yield from extend(row + 1, cols | bit, ((sums | bit) >> 1), ((diffs | bit) << 1) & full)

    yield from extend(0, 0, 0, 0)


def _stream(n: int, modular: bool, limit: Optional[int]) -> Iterator[Placement]:
    if n < 1:
        raise ValueError(f"board size must be positive, got {n}")
    solutions = _search(n, modular)
    if limit is not None:
        solutions = itertools.islice(solutions, limit)
    for columns in solutions:
        yield Placement.from_columns(columns)


def enumerate_standard(n: int, limit: Optional[int] = None) -> Iterator[Placement]:
    return _stream(n, False, limit)


def enumerate_modular(n: int, limit: Optional[int] = None) -> Iterator[Placement]:
    return _stream(n, True, limit)


def count_standard(n: int) -> int:
    if n < 1:
        raise ValueError(f"board size must be positive, got {n}")
    return sum(1 for _ in _search(n, False))


def count_modular(n: int) -> int:
    if n < 1:
        raise ValueError(f"board size must be positive, got {n}")
    return sum(1 for _ in _search(n, True))


def standard_digraphs(n: int) -> list[LabeledDigraph]:
    return [from_permutation(cols) for cols in _search(n, False)]


def modular_digraphs(n: int) -> list[LabeledDigraph]:
    return [from_permutation(cols) for cols in _search(n, True)]


def achievable_cycle_types(n: int) -> set[CycleType]:
    return {cycle_type(D) for D in standard_digraphs(n)}


def shared_set_family(n: int, size: int = 2) -> list[LabeledDigraph]:
    """The first `size` modular n-solutions, in lexicographic order, that
    share their integer sum and difference sets with an earlier solution."""
    groups: dict = {}
    for D in modular_digraphs(n):
        key = (frozenset(sum_multiset(D)), frozenset(diff_multiset(D)))
        groups.setdefault(key, []).append(D)
        if len(groups[key]) == size:
            return groups[key]
    raise ValueError(f"no {size} modular {n}-solutions share their sum and difference sets")


@dataclass(frozen=True)
class BoundReport:
    m: int
    n: int
    mode: str  # "full", "restricted" or "sampled"
    family_size: int
    generated: int
    all_valid: bool
    distinct: bool
    invalid: int
    bound: int  # M(m) * |family|^m for the family actually used

    @property
    def ok(self) -> bool:
        return self.all_valid and self.distinct and self.generated == self.bound


def _check_sizes(m, n):
    for k in (m, n):
        if k < 1 or k > 7 or gcd(k, 6) != 1:
            raise ValueError(f"sizes must lie in [1,7] and be coprime to 6, got m={m}, n={n}")


def modular_bound_check(
    m: int,
    n: int,
    family: Optional[Sequence[LabeledDigraph]] = None,
    samples: Optional[int] = None,
    seed: int = 0,
) -> BoundReport:
    """Build products of every modular m-solution with assignments into a
    family of modular n-solutions, and check validity and distinctness.

    `family` defaults to all modular n-solutions.  With `samples`, that many
    (D, h) pairs are drawn at random instead of enumerating all of them;
    repeated draws are discarded before checking.
    """
    _check_sizes(m, n)
    bases = modular_digraphs(m)
    gamma = tuple(family) if family is not None else tuple(modular_digraphs(n))
    for F in gamma:
        if F.n != n or not verify_modular_queen(F).is_valid:
            raise ValueError(f"family member {F.arcs} is not a modular {n}-queens digraph")
    k = len(gamma)
    total = len(bases) * k ** m

    if samples is None:
        if total > EXHAUSTIVE_LIMIT:
            raise ValueError(f"{total} products is too many to enumerate; pass a smaller family or use sampling")
        keys = [(d, idx) for d in range(len(bases)) for idx in itertools.product(range(k), repeat=m)]
        mode = "full" if family is None else "restricted"
    else:
        rng = random.Random(seed)
        keys = list(dict.fromkeys(
            (rng.randrange(len(bases)), tuple(rng.randrange(k) for _ in range(m)))
            for _ in range(samples)
        ))
        mode = "sampled"

    seen = set()
    invalid = 0
    for d, idx in keys:
        D = bases[d]
        P = oh_product(D, FamilyAssignment.from_sequence(D, gamma, idx))
        if not verify_modular_queen(P).is_valid:
            invalid += 1
        seen.add(P.arcs)

    return BoundReport(
        m=m, n=n, mode=mode, family_size=k,
        generated=len(keys),
        all_valid=invalid == 0,
        distinct=len(seen) == len(keys),
        invalid=invalid,
        bound=len(bases) * k ** m,
    )
