"""The h-product of a digraph with a family of labeled digraphs.

Given a digraph D, a family of digraphs on [1, n] and a map h sending each
arc of D to a family member, the product has vertex set V(D) x [1, n] and an
arc ((a, i), (b, j)) whenever (a, b) is an arc of D and (i, j) is an arc of
h(a, b).  Vertex (a, i) gets the label n(a - 1) + i, so a product arc has

    sum        n(a + b - 2) + i + j
    difference n(b - a) + j - i

With a constant h this is the Kronecker (direct) product.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Mapping, Sequence

from .digraph import Arc, LabeledDigraph
from .labeling import (
    Failure,
    VerificationReport,
    diff_multiset,
    sum_multiset,
    verify_modular_queen,
    verify_queen,
)


class ProductError(ValueError):
    """Raised for an inconsistent family or arc assignment."""


@dataclass(frozen=True)
class FamilyAssignment:
    gamma: tuple[LabeledDigraph, ...]
    assign: Mapping[Arc, int]

    def __post_init__(self):
        gamma = tuple(self.gamma)
        if not gamma:
            raise ProductError("the family must not be empty")
        orders = {F.n for F in gamma}
        if len(orders) != 1:
            raise ProductError(f"family members have different orders {sorted(orders)}")
        assign = {tuple(arc): idx for arc, idx in dict(self.assign).items()}
        for arc, idx in assign.items():
            if not (isinstance(idx, int) and 0 <= idx < len(gamma)):
                raise ProductError(f"arc {arc} is assigned index {idx!r}, outside the family of size {len(gamma)}")
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "assign", assign)

    @property
    def n(self) -> int:
        return self.gamma[0].n

    @classmethod
    def constant(cls, D: LabeledDigraph, member: LabeledDigraph) -> "FamilyAssignment":
        return cls((member,), {arc: 0 for arc in D.arcs})

    @classmethod
    def from_sequence(cls, D: LabeledDigraph, gamma: Sequence[LabeledDigraph], indices: Sequence[int]) -> "FamilyAssignment":
        """Assign indices[k] to the k-th arc of D in sorted arc order."""
        if len(indices) != len(D.arcs):
            raise ProductError(f"{len(indices)} indices for {len(D.arcs)} arcs")
        return cls(tuple(gamma), dict(zip(D.arcs, indices)))

    def member(self, arc: Arc) -> LabeledDigraph:
        return self.gamma[self.assign[arc]]

    def validate_for(self, D: LabeledDigraph) -> None:
        missing = [arc for arc in D.arcs if arc not in self.assign]
        if missing:
            raise ProductError(f"arcs {missing} of D have no assigned family member")
        extra = [arc for arc in self.assign if arc not in D]
        if extra:
            raise ProductError(f"assignment mentions arcs {extra} that are not in D")


def product_label(n: int, a: int, i: int) -> int:
    return n * (a - 1) + i


def oh_product(D: LabeledDigraph, fa: FamilyAssignment) -> LabeledDigraph:
    fa.validate_for(D)
    n = fa.n
    arcs = []
    for a, b in D.arcs:
        for i, j in fa.member((a, b)).arcs:
            arcs.append((product_label(n, a, i), product_label(n, b, j)))
    return LabeledDigraph(D.n * n, tuple(arcs))


def direct_product(D1: LabeledDigraph, D2: LabeledDigraph) -> LabeledDigraph:
    return oh_product(D1, FamilyAssignment.constant(D1, D2))


def _shifted_condition(D, fa, value, member_values, tag) -> VerificationReport:
    # ordered pairs (e, e2) with value(e) == value(e2) - 1 need
    # (member_values(h(e)) - n) disjoint from member_values(h(e2))
    fa.validate_for(D)
    n = fa.n
    by_value = defaultdict(list)
    for arc in D.arcs:
        by_value[value(arc)].append(arc)
    cache = {}

    def values_of(idx):
        if idx not in cache:
            cache[idx] = set(member_values(fa.gamma[idx]))
        return cache[idx]

    failures = []
    for e in D.arcs:
        for e2 in by_value.get(value(e) + 1, ()):
            shifted = {x - n for x in values_of(fa.assign[e])}
            common = shifted & values_of(fa.assign[e2])
            if common:
                failures.append(Failure(
                    tag, (e, e2), min(common),
                    detail=f"members {fa.assign[e]} and {fa.assign[e2]} overlap after shifting by {n}",
                ))
    failures.sort(key=lambda f: f.witness)
    return VerificationReport(tuple(failures))


def check_sum_condition(D: LabeledDigraph, fa: FamilyAssignment) -> VerificationReport:
    return _shifted_condition(D, fa, lambda a: a[0] + a[1], sum_multiset, "sum")


def check_diff_condition(D: LabeledDigraph, fa: FamilyAssignment) -> VerificationReport:
    return _shifted_condition(D, fa, lambda a: a[1] - a[0], diff_multiset, "diff")


def check_corollary_sets(gamma: Sequence[LabeledDigraph], n: int) -> bool:
    """All members share one sum set I and one difference set J, and both
    are disjoint from their own shift by -n."""
    if not gamma or any(F.n != n for F in gamma):
        return False
    sums = {frozenset(sum_multiset(F)) for F in gamma}
    diffs = {frozenset(diff_multiset(F)) for F in gamma}
    if len(sums) != 1 or len(diffs) != 1:
        return False
    (I,), (J,) = sums, diffs
    return not ({x - n for x in I} & I) and not ({x - n for x in J} & J)


def check_modular_family_sets(gamma: Sequence[LabeledDigraph]) -> bool:
    """True when all members have the same integer sum set and the same
    integer difference set.

    Modular validity of the factors alone does not make a product with a
    non-constant assignment modular: an arc sum i + j of one member can be
    congruent to, yet differ by n from, an arc sum of another.  Shared
    integer sets rule that out, so the product of a modular D with such a
    family is modular for every assignment.
    """
    if not gamma:
        return False
    sums = {frozenset(sum_multiset(F)) for F in gamma}
    diffs = {frozenset(diff_multiset(F)) for F in gamma}
    return len(sums) == 1 and len(diffs) == 1


def _hypotheses(D, fa, verify) -> dict:
    parts = {"D": verify(D)}
    for idx, F in enumerate(fa.gamma):
        parts[f"gamma[{idx}]"] = verify(F)
    return parts


def product_preserves_queen(D: LabeledDigraph, fa: FamilyAssignment) -> VerificationReport:
    """Check the hypotheses of the product theorem and re-verify its conclusion.

    Valid only when D and every family member are queen digraphs, both
    shifted-set conditions hold, and the product itself verifies.
    """
    parts = _hypotheses(D, fa, verify_queen)
    parts["sum-condition"] = check_sum_condition(D, fa)
    parts["diff-condition"] = check_diff_condition(D, fa)
    parts["product"] = verify_queen(oh_product(D, fa))
    return VerificationReport.combine(**parts)


def product_preserves_modular(D: LabeledDigraph, fa: FamilyAssignment) -> VerificationReport:
    """Modular version: no side conditions, just factors and product."""
    parts = _hypotheses(D, fa, verify_modular_queen)
    parts["product"] = verify_modular_queen(oh_product(D, fa))
    return VerificationReport.combine(**parts)
