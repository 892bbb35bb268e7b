"""Explicit families of (modular) queen digraphs.

Constructions stated over Z_p are shifted to labels by x -> x + 1, except
for the Jacobsthal digraph, which lives on [1, n] with residue 0 read as n.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt, lcm
from typing import Optional, Sequence

from .digraph import CycleType, LabeledDigraph, from_permutation
from .labeling import Placement, is_solution


class ConstructionError(ValueError):
    """Raised when a construction's hypotheses are not met."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for d in range(3, isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


def strong_cycle(k: int) -> LabeledDigraph:
    """The oriented cycle 1 -> 2 -> ... -> k -> 1; a loop when k = 1."""
    if k < 1:
        raise ConstructionError(f"cycle length must be positive, got {k}")
    return from_permutation([i % k + 1 for i in range(1, k + 1)])


def polya_doubling(p: int) -> LabeledDigraph:
    """Digraph of x -> 2x (mod p), with residue x carried by label x + 1.

    Defined for every p >= 1; it is 1-regular exactly when p is odd.
    """
    if p < 1:
        raise ConstructionError(f"p must be positive, got {p}")
    return LabeledDigraph(p, tuple((x + 1, (2 * x) % p + 1) for x in range(p)))


def multiplicative_order(g: int, p: int) -> int:
    if p < 2:
        raise ConstructionError(f"modulus must be at least 2, got {p}")
    if gcd(g, p) != 1:
        raise ConstructionError(f"{g} is not invertible modulo {p}")
    k, x = 1, g % p
    while x != 1:
        x = x * g % p
        k += 1
    return k


def is_primitive_root(g: int, p: int) -> bool:
    if not is_prime(p):
        raise ConstructionError(f"{p} is not prime")
    return multiplicative_order(g, p) == p - 1


def park_criterion(p: int) -> Optional[bool]:
    """Decide whether 2 is a primitive root of p from the shape of p alone.

    p = 2q + 1, q an odd prime: yes iff q = 1 (mod 4).
    p = 4q + 1, q an odd prime: always yes.
    Returns None when p has neither shape.
    """
    if not is_prime(p):
        raise ConstructionError(f"{p} is not prime")
    q, r = divmod(p - 1, 2)
    if r == 0 and q % 2 == 1 and is_prime(q):
        return q % 4 == 1
    q, r = divmod(p - 1, 4)
    if r == 0 and q % 2 == 1 and is_prime(q):
        return True
    return None


def doubling_structure(p: int) -> CycleType:
    """Predicted cycle type of the doubling digraph for an odd prime p.

    Zero is fixed and the nonzero residues split into cosets of the
    subgroup generated by 2, each of size ord_p(2).
    """
    if p == 2 or not is_prime(p):
        raise ConstructionError(f"{p} is not an odd prime")
    d = multiplicative_order(2, p)
    return CycleType((d,) * ((p - 1) // d) + (1,))


def jacobsthal_number(i: int) -> int:
    """a_1 = a_2 = 1, a_i = a_{i-1} + 2 a_{i-2}."""
    if i < 1:
        raise ConstructionError(f"index must be positive, got {i}")
    a, b = 1, 1
    for _ in range(i - 1):
        a, b = b, b + 2 * a
    return a


def jacobsthal_digraph(n: int) -> LabeledDigraph:
    """Digraph of u -> -2u + 2 (mod n) on [1, n], residue 0 read as n."""
    if n < 1 or n % 2 == 0:
        raise ConstructionError(f"n must be a positive odd integer, got {n}")
    return LabeledDigraph(n, tuple((u, (-2 * u + 2) % n or n) for u in range(1, n + 1)))


@dataclass(frozen=True)
class ThetaPartition:
    """Vertices of the Jacobsthal digraph grouped by the index k of the
    first Jacobsthal number a_k with 3 a_k x = 2 a_k (mod n)."""

    n: int
    classes: dict

    def __post_init__(self):
        members = sorted(x for cls in self.classes.values() for x in cls)
        if members != list(range(1, self.n + 1)):
            raise ValueError("classes do not partition [1, n]")
        for k, cls in self.classes.items():
            if cls and len(cls) % k:
                raise ValueError(f"|Theta_{k}| = {len(cls)} is not divisible by {k}")

    def predicted_cycle_type(self) -> CycleType:
        lengths = []
        for k, cls in self.classes.items():
            lengths += [k] * (len(cls) // k)
        return CycleType(tuple(lengths))


def theta_partition(n: int) -> ThetaPartition:
    if n < 1 or n % 2 == 0:
        raise ConstructionError(f"n must be a positive odd integer, got {n}")
    classes: dict[int, set[int]] = {}
    for x in range(1, n + 1):
        a_prev, a = 0, 1  # a_0 = 0 keeps the recurrence giving a_1 = a_2 = 1
        k = 1
        while (3 * x - 2) * a % n:
            a_prev, a = a, (a + 2 * a_prev) % n
            k += 1
            if k > n:
                raise ConstructionError(f"no index found for x={x}, n={n}")
        classes.setdefault(k, set()).add(x)
    return ThetaPartition(n, {k: frozenset(v) for k, v in sorted(classes.items())})


def three_cycles_placement(m: int) -> Placement:
    """m(m-1) queens whose digraph is a union of m(m-1)/3 oriented 3-cycles."""
    if m < 3 or m % 3 == 2:
        raise ConstructionError(f"m must be at least 3 with m = 0 or 1 (mod 3), got {m}")
    columns = [
        (m - 1) * ((i - 1) % m) + (m - 1) - (i - 1) // m
        for i in range(1, m * (m - 1) + 1)
    ]
    return Placement.from_columns(columns)


def polya_composite(standard: Sequence[Placement], pi: Sequence[int], modular_g: Placement) -> Placement:
    """Standard mn-queens solution with row an + b in column f_pi(b)(a) n + g(b).

    Rows, columns and the entries of `pi` (indices into `standard`) are
    0-based internally; the result is an ordinary 1-based placement.
    """
    if not standard:
        raise ConstructionError("need at least one standard m-solution")
    m, n = standard[0].n, modular_g.n
    if m <= 3 or n <= 3:
        raise ConstructionError(f"need m, n > 3, got m={m}, n={n}")
    if gcd(n, 6) != 1:
        raise ConstructionError(f"gcd({n}, 6) != 1, no modular {n}-solution exists")
    for idx, f in enumerate(standard):
        if f.n != m or not is_solution(f):
            raise ConstructionError(f"standard[{idx}] is not a valid {m}-queens solution")
    if not is_solution(modular_g, toroidal=True):
        raise ConstructionError(f"g is not a valid modular {n}-queens solution")
    if len(pi) != n:
        raise ConstructionError(f"pi must have {n} entries, got {len(pi)}")
    for b, idx in enumerate(pi):
        if not 0 <= idx < len(standard):
            raise ConstructionError(f"pi({b}) = {idx} is not an index into the {len(standard)} solutions")

    fs = [[c - 1 for c in f.columns()] for f in standard]
    g = [c - 1 for c in modular_g.columns()]
    columns = [0] * (m * n)
    for a in range(m):
        for b in range(n):
            columns[a * n + b] = fs[pi[b]][a] * n + g[b] + 1
    return Placement.from_columns(columns)


def final_lemma_structure(m: int, p: int) -> CycleType:
    """Cycle type of (m(m-1)/3) C3 (x) (C_{p-1} u C1).

    Each 3-cycle times C_{p-1} gives gcd(p-1, 3) cycles of length
    lcm(p-1, 3); each 3-cycle times the loop gives a 3-cycle.
    """
    if m < 3 or m % 3 == 2:
        raise ConstructionError(f"m must be at least 3 with m = 0 or 1 (mod 3), got {m}")
    if p <= 4 or not is_prime(p) or not is_primitive_root(2, p):
        raise ConstructionError(f"p must be a prime > 4 with 2 as a primitive root, got {p}")
    copies = m * (m - 1) // 3
    per_copy = (lcm(p - 1, 3),) * gcd(p - 1, 3) + (3,)
    return CycleType(per_copy * copies)
