"""Induced sums and differences, queen-labeling verification, and boards.

An arc (u, v) of a labeled digraph induces the sum u + v and the difference
v - u.  A labeling is a queen labeling when both kinds of values are pairwise
distinct over the arcs, and a modular queen labeling when they stay distinct
modulo the order.  Reading each arc (u, v) as a queen on row u and column v
turns 1-regular queen digraphs into n-queens solutions, sums and differences
into the two diagonal directions.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .digraph import Arc, DigraphError, LabeledDigraph, is_one_regular

CONDITION_TAGS = ("sum", "diff", "sum-mod", "diff-mod", "bijectivity", "regularity")


@dataclass(frozen=True)
class Failure:
    tag: str
    witness: Optional[tuple[Arc, Arc]] = None
    value: Optional[int] = None
    where: str = ""
    detail: str = ""

    def __str__(self):
        parts = [self.tag]
        if self.where:
            parts.append(f"[{self.where}]")
        if self.witness is not None:
            a, b = self.witness
            parts.append(f"arcs {a} and {b}")
        if self.value is not None:
            parts.append(f"share value {self.value}")
        if self.detail:
            parts.append(self.detail)
        return " ".join(parts)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a check: valid exactly when no failure was recorded.

    `parts` keeps the sub-reports of composite checks (hypotheses of the
    product theorems, the re-verified product, ...) keyed by name.
    """

    failures: tuple[Failure, ...] = ()
    parts: dict = field(default_factory=dict, compare=False)

    @property
    def is_valid(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.is_valid

    def first(self, tag: str) -> Optional[Failure]:
        for failure in self.failures:
            if failure.tag == tag:
                return failure
        return None

    def tags(self) -> set[str]:
        return {f.tag for f in self.failures}

    def summary(self) -> str:
        if self.is_valid:
            return "valid"
        return "invalid: " + "; ".join(str(f) for f in self.failures)

    @classmethod
    def combine(cls, **parts: "VerificationReport") -> "VerificationReport":
        failures = []
        for name, report in parts.items():
            for f in report.failures:
                where = f"{name}/{f.where}" if f.where else name
                failures.append(Failure(f.tag, f.witness, f.value, where, f.detail))
        return cls(tuple(failures), dict(parts))


@dataclass(frozen=True)
class Placement:
    """Queens on an n x n board, as 1-based (row, column) cells."""

    n: int
    queens: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"board size must be a positive integer, got {self.n!r}")
        queens = tuple(sorted((int(r), int(c)) for r, c in self.queens))
        for r, c in queens:
            if not (1 <= r <= self.n and 1 <= c <= self.n):
                raise ValueError(f"queen ({r},{c}) lies outside the {self.n}x{self.n} board")
        for first, second in zip(queens, queens[1:]):
            if first == second:
                raise ValueError(f"two queens on cell {first}")
        object.__setattr__(self, "queens", queens)

    @classmethod
    def from_columns(cls, columns) -> "Placement":
        """Queen i sits at (i, columns[i-1])."""
        return cls(len(columns), tuple((i, c) for i, c in enumerate(columns, start=1)))

    def columns(self) -> list[int]:
        """Column of the queen in each row; requires exactly one queen per row."""
        if len(self.queens) != self.n or len({r for r, _ in self.queens}) != self.n:
            raise ValueError("placement does not have exactly one queen per row")
        return [c for _, c in self.queens]

    def __len__(self):
        return len(self.queens)


def sum_multiset(D: LabeledDigraph) -> list[int]:
    return [u + v for u, v in D.arcs]


def diff_multiset(D: LabeledDigraph) -> list[int]:
    return [v - u for u, v in D.arcs]


def _collisions(arcs: Iterable[Arc], key: Callable[[Arc], int], tag: str) -> list[Failure]:
    groups = defaultdict(list)
    for arc in arcs:
        groups[key(arc)].append(arc)
    failures = []
    for value, members in groups.items():
        if len(members) > 1:
            # arcs arrive sorted, so the first two are the smallest colliding pair
            failures.append(Failure(tag, (members[0], members[1]), value))
    failures.sort(key=lambda f: f.witness)
    return failures


def _regularity(D: LabeledDigraph) -> list[Failure]:
    if is_one_regular(D):
        return []
    outs, ins = D.out_degrees(), D.in_degrees()
    bad = [x for x in range(1, D.n + 1) if outs[x] != 1 or ins[x] != 1]
    return [Failure("regularity", detail=f"vertices {bad} do not have in- and out-degree 1")]


def verify_queen(D: LabeledDigraph, require_one_regular: bool = False) -> VerificationReport:
    failures = _collisions(D.arcs, lambda a: a[0] + a[1], "sum")
    failures += _collisions(D.arcs, lambda a: a[1] - a[0], "diff")
    if require_one_regular:
        failures += _regularity(D)
    return VerificationReport(tuple(failures))


def verify_modular_queen(D: LabeledDigraph, require_one_regular: bool = False) -> VerificationReport:
    n = D.n
    failures = _collisions(D.arcs, lambda a: (a[0] + a[1]) % n, "sum-mod")
    failures += _collisions(D.arcs, lambda a: (a[1] - a[0]) % n, "diff-mod")
    if require_one_regular:
        failures += _regularity(D)
    return VerificationReport(tuple(failures))


def to_placement(D: LabeledDigraph) -> Placement:
    return Placement(D.n, D.arcs)


def from_placement(P: Placement) -> LabeledDigraph:
    rows, cols = set(), set()
    for r, c in P.queens:
        if r in rows:
            raise DigraphError(f"two queens in row {r}")
        if c in cols:
            raise DigraphError(f"two queens in column {c}")
        rows.add(r)
        cols.add(c)
    return LabeledDigraph(P.n, P.queens)


def sigma_identity_check(D: LabeledDigraph) -> bool:
    """Sum of induced sums is n(n+1) and sum of induced differences is 0."""
    if not is_one_regular(D):
        raise DigraphError("the sum identities hold for 1-regular digraphs only")
    return sum(sum_multiset(D)) == D.n * (D.n + 1) and sum(diff_multiset(D)) == 0


def verify_placement(P: Placement, modular: bool = False) -> VerificationReport:
    """Check that P solves the (modular) n-queens problem.

    Adds bijectivity failures for a wrong queen count or shared rows and
    columns, then checks the diagonals through the induced digraph.
    """
    failures = []
    if len(P.queens) != P.n:
        failures.append(Failure("bijectivity", detail=f"{len(P.queens)} queens on a board of size {P.n}"))
    failures += [
        Failure("bijectivity", f.witness, f.value, detail="same row")
        for f in _collisions(P.queens, lambda q: q[0], "bijectivity")
    ]
    failures += [
        Failure("bijectivity", f.witness, f.value, detail="same column")
        for f in _collisions(P.queens, lambda q: q[1], "bijectivity")
    ]
    D = LabeledDigraph(P.n, P.queens)
    check = verify_modular_queen if modular else verify_queen
    failures += check(D).failures
    return VerificationReport(tuple(failures))


def attacking_pairs(P: Placement, toroidal: bool = False) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """All pairs of queens that attack each other, found by board geometry.

    On the torus a diagonal wraps around, so two queens share one when their
    row and column offsets agree up to sign modulo n.
    """
    n = P.n
    pairs = []
    queens = P.queens
    for idx, (r1, c1) in enumerate(queens):
        for r2, c2 in queens[idx + 1:]:
            dr, dc = r2 - r1, c2 - c1
            if dr == 0 or dc == 0:
                hit = True
            elif toroidal:
                hit = (dr - dc) % n == 0 or (dr + dc) % n == 0
            else:
                hit = abs(dr) == abs(dc)
            if hit:
                pairs.append(((r1, c1), (r2, c2)))
    return pairs


def is_solution(P: Placement, toroidal: bool = False) -> bool:
    """True when P places n mutually nonattacking queens."""
    return len(P.queens) == P.n and not attacking_pairs(P, toroidal)
