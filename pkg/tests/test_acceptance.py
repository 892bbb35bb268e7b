"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line (printed in the terminal summary) and
checks its own time budget.
"""

import itertools
import random
import time
from contextlib import contextmanager
from functools import lru_cache
from math import gcd, lcm

from oracles import naive_solutions, nonattacking
from queen_digraphs import (
    CycleType,
    FamilyAssignment,
    Placement,
    achievable_cycle_types,
    check_diff_condition,
    check_sum_condition,
    count_modular,
    count_standard,
    cycle_type,
    diff_multiset,
    direct_product,
    doubling_structure,
    from_arcs,
    from_permutation,
    from_placement,
    is_one_regular,
    is_prime,
    jacobsthal_digraph,
    modular_bound_check,
    oh_product,
    polya_composite,
    polya_doubling,
    reverse,
    rotate_quarter,
    shared_set_family,
    strong_cycle,
    sum_multiset,
    theta_partition,
    three_cycles_placement,
    to_placement,
    verify_modular_queen,
    verify_placement,
    verify_queen,
)
from queen_digraphs.cli import dispatch
from queen_digraphs.documents import (
    DocumentError,
    PlacementDocument,
    dump_digraph,
    dump_placement,
    load_any,
    loads_digraph,
    loads_placement,
)
from queen_digraphs.enumeration import modular_digraphs, standard_digraphs

RESULTS = []
SAMPLE_CAP = 10_000
SEED = 20240601


@contextmanager
def criterion(number, title, budget):
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < budget, f"took {elapsed:.1f}s, budget {budget}s"
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        RESULTS.append(f"FAIL  {number:>2}. {title} ({elapsed:.2f}s): {str(exc).splitlines()[0] if str(exc) else type(exc).__name__}")
        raise
    RESULTS.append(f"PASS  {number:>2}. {title} ({elapsed:.2f}s)")


@lru_cache(maxsize=None)
def standard(n):
    return tuple(standard_digraphs(n))


@lru_cache(maxsize=None)
def modular(n):
    return tuple(modular_digraphs(n))


def test_01_example1_reproduction():
    with criterion(1, "Example 1: order-25 product passes standard and toroidal scanners", 1.0):
        D = from_arcs(5, [(1, 5), (2, 3), (3, 1), (4, 4), (5, 2)])
        F1, F2 = D, reverse(D)
        fa = FamilyAssignment((F1, F2), {(1, 5): 0, (2, 3): 0, (4, 4): 0, (3, 1): 1, (5, 2): 1})
        P = oh_product(D, fa)
        queens = to_placement(P).queens
        checks = {
            "order 25": P.n == 25,
            "1-regular": is_one_regular(P),
            "standard scanner": nonattacking(queens, 25),
            "toroidal scanner": nonattacking(queens, 25, toroidal=True),
        }
        failed = [name for name, ok in checks.items() if not ok]
        assert not failed, f"failed: {', '.join(failed)}"


def test_02_example2_reproduction():
    with criterion(2, "Example 2: order-32 standard solution, no factor modular", 1.0):
        D = from_arcs(4, [(1, 3), (2, 1), (3, 4), (4, 2)])
        F1 = from_arcs(8, [(1, 5), (2, 2), (3, 4), (4, 7), (5, 3), (6, 8), (7, 6), (8, 1)])
        F2 = from_arcs(8, [(1, 1), (2, 5), (3, 8), (4, 6), (5, 3), (6, 7), (7, 2), (8, 4)])
        F3 = rotate_quarter(F2)
        F4 = rotate_quarter(F3)
        fa = FamilyAssignment((F1, F2, F3, F4), {(2, 1): 0, (1, 3): 1, (3, 4): 2, (4, 2): 3})
        P = oh_product(D, fa)
        assert P.n == 32 and is_one_regular(P)
        assert nonattacking(to_placement(P).queens, 32)
        assert verify_queen(P).is_valid
        for F in (D, F1, F2, F3, F4):
            assert verify_queen(F).is_valid
            assert not verify_modular_queen(F).is_valid


def test_03_enumeration_oracle():
    with criterion(3, "Counts match naive oracle (n<=10), published values, modular iff gcd(n,6)=1", 60.0):
        for n in range(1, 11):
            assert count_standard(n) == len(naive_solutions(n)), n
        assert [count_standard(n) for n in range(4, 9)] == [2, 10, 4, 40, 92]
        for n in range(2, 14):
            assert (count_modular(n) == 0) == (gcd(n, 6) > 1), n


def test_04_cycle_type_catalog():
    with criterion(4, "Cycle-type catalog for n = 4..7", 10.0):
        t4, t5, t6, t7 = (achievable_cycle_types(n) for n in (4, 5, 6, 7))
        C = CycleType.of
        assert C(4) in t4
        assert C(3, 1) not in t4
        assert C(5) not in t5
        assert C(4, 1) in t5
        assert C(6) in t6 and C(3, 3) in t6
        assert C(5, 1) not in t6
        assert C(6, 1) in t7 and C(3, 3, 1) in t7 and C(7) in t7
        assert C(4, 3) not in t7


def test_05_lemma_conformance():
    with criterion(5, "Sum/difference totals and ranges on 1000 random 1-regular digraphs", 5.0):
        rng = random.Random(SEED)
        for _ in range(1000):
            n = rng.randint(2, 50)
            image = list(range(1, n + 1))
            rng.shuffle(image)
            D = from_permutation(image)
            sums, diffs = sum_multiset(D), diff_multiset(D)
            assert sum(sums) == n * (n + 1)
            assert sum(diffs) == 0
            assert all(2 <= s <= 2 * n for s in sums)
            assert all(-(n - 1) <= d <= n - 1 for d in diffs)


def _combinations(bases, family, m, rng):
    """(D, assignment indices) pairs: all of them when few enough, else a sample."""
    total = len(bases) * len(family) ** m
    if total <= SAMPLE_CAP:
        for D in bases:
            for idx in itertools.product(range(len(family)), repeat=m):
                yield D, idx
    else:
        for _ in range(SAMPLE_CAP):
            yield rng.choice(bases), tuple(rng.randrange(len(family)) for _ in range(m))


def test_06a_queen_product_theorem():
    with criterion("6a", "Queen product theorem: zero counterexamples, orders <= 7 x <= 7", 120.0):
        rng = random.Random(SEED)
        orders = [k for k in range(1, 8) if standard(k)]
        checked = counterexamples = 0
        for m, n in itertools.product(orders, repeat=2):
            family = standard(n)
            for D, idx in _combinations(standard(m), family, m, rng):
                fa = FamilyAssignment.from_sequence(D, family, idx)
                if check_sum_condition(D, fa).is_valid and check_diff_condition(D, fa).is_valid:
                    checked += 1
                    if not verify_queen(oh_product(D, fa)).is_valid:
                        counterexamples += 1
        assert checked > 0
        assert counterexamples == 0, f"{counterexamples} of {checked} products invalid"


def test_06b_modular_product_theorem():
    with criterion("6b", "Modular product theorem, no side conditions, m, n in {5, 7}", 120.0):
        rng = random.Random(SEED)
        checked = counterexamples = 0
        for m, n in itertools.product((5, 7), repeat=2):
            family = modular(n)
            for D, idx in _combinations(modular(m), family, m, rng):
                fa = FamilyAssignment.from_sequence(D, family, idx)
                checked += 1
                if not verify_modular_queen(oh_product(D, fa)).is_valid:
                    counterexamples += 1
        assert counterexamples == 0, f"{counterexamples} of {checked} products are not modular"


def test_07_structure_lemmas():
    with criterion(7, "Doubling, Jacobsthal, 3-cycle and cycle-product structure", 30.0):
        for p in range(3, 98):
            if is_prime(p):
                assert doubling_structure(p) == cycle_type(polya_doubling(p)), p
        for n in range(1, 100, 2):
            assert theta_partition(n).predicted_cycle_type() == cycle_type(jacobsthal_digraph(n)), n
        for m in (3, 4, 6, 7, 9, 10):
            P = three_cycles_placement(m)
            assert nonattacking(P.queens, m * (m - 1)), m
            assert set(cycle_type(from_placement(P)).lengths) == {3}, m
        for m in range(2, 13):
            for n in range(2, 13):
                expected = CycleType((lcm(m, n),) * gcd(m, n))
                assert cycle_type(direct_product(strong_cycle(m), strong_cycle(n))) == expected, (m, n)


def test_08_polya_composite():
    with criterion(8, "Composite construction: 32 distinct valid 20-queens solutions", 5.0):
        fours = [Placement.from_columns(cols) for cols in ([2, 4, 1, 3], [3, 1, 4, 2])]
        g = Placement.from_columns([(2 * b) % 5 + 1 for b in range(5)])
        outputs = set()
        for pi in itertools.product(range(2), repeat=5):
            P = polya_composite(fours, list(pi), g)
            assert nonattacking(P.queens, 20)
            outputs.add(P.queens)
        assert len(outputs) == 32


def test_09_counting_corollary():
    with criterion(9, "Counting bound (5,5), 2-member family: 320 distinct modular 25-solutions", 30.0):
        report = modular_bound_check(5, 5, family=shared_set_family(5, 2))
        assert report.generated == 10 * 2 ** 5 == 320
        assert report.all_valid and report.distinct


def _library_verdict(path, modular_flag):
    try:
        doc = load_any(path)
    except DocumentError:
        return 2
    if isinstance(doc, PlacementDocument):
        report = verify_placement(doc.placement, modular=modular_flag or bool(doc.modular))
    else:
        report = (verify_modular_queen if modular_flag else verify_queen)(doc)
    return 0 if report.is_valid else 1


def test_10_roundtrip_and_verify(fixtures_dir, capsys):
    with criterion(10, "Document round trip x100; verify exit codes match the library", 5.0):
        rng = random.Random(SEED)
        for k in range(100):
            n = rng.randint(1, 12)
            cells = sorted({(rng.randint(1, n), rng.randint(1, n)) for _ in range(rng.randint(0, n))})
            if k % 2:
                D = from_arcs(n, cells)
                assert loads_digraph(dump_digraph(D)) == D
                assert dump_digraph(loads_digraph(dump_digraph(D))) == dump_digraph(D)
            else:
                P = Placement(n, tuple(cells))
                flag = rng.choice([None, True, False])
                doc = loads_placement(dump_placement(P, flag))
                assert doc == PlacementDocument(P, flag)
        fixtures = sorted(fixtures_dir.glob("*.json"))
        assert len(fixtures) >= 15
        for path in fixtures:
            for flags in ([], ["--modular"]):
                code = dispatch(["verify", "--input", str(path), *flags])
                assert code == _library_verdict(path, bool(flags)), (path.name, flags)
        capsys.readouterr()
