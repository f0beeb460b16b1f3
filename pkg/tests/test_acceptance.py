"""Acceptance criteria 1-11.

Each criterion is a function returning ``(ok, detail)``.  Under pytest each
becomes a test and the outcome is printed in the terminal summary; run the
file directly to get the same lines without pytest.
"""

from __future__ import annotations

import itertools
import math
import random
import sys
import time
from functools import lru_cache
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
from dircut.dirmc import (  # noqa: E402
    DirectedPathDecomposition,
    build_pathwidth2_decomposition,
    expand_weights,
    extract_hom_from_cutset,
    lift_hom_to_cutset,
    reduce_psi_to_dirmc,
    solve_dirmc_exact,
    validate_path_decomposition,
    verify_multicut,
)
from dircut.errors import BoundViolation  # noqa: E402
from dircut.graph import Digraph  # noqa: E402
from dircut.psi import (  # noqa: E402
    all_host_variants,
    gen_psi_planted,
    is_partitioned_homomorphism,
    planted_witness,
    random_psi,
    small_patterns,
    solve_psi,
)
from dircut.sepstruct import (  # noqa: E402
    CutContext,
    bounds,
    check_anti_isolation,
    check_reverse_anti_isolation,
    cut_minimal_core,
    enum_important_separators,
    enum_minimal_cuts,
    find_splitting_cut,
    find_sunflower,
    is_important_separator,
    max_isolating_family,
    participating_arcs,
)
from dircut.graph import reverse_graph  # noqa: E402
from dircut.stor import extract_hom_from_orientation, reduce_psi_to_stor, solve_stor_exact, verify_orientation  # noqa: E402

RESULTS: dict[int, tuple[bool, str]] = {}

STOR_MAX_EDGES = 40  # n = 3 instances carry up to 25 undirected edges


def record(number: int, ok: bool, detail: str) -> tuple[bool, str]:
    RESULTS[number] = (ok, detail)
    print(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
    return ok, detail


def random_digraph(rng: random.Random, n: int, p: float) -> Digraph:
    return Digraph(n, tuple((u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p))


# -- instance corpora --------------------------------------------------------------


@lru_cache(maxsize=None)
def dirmc_corpus():
    """Every host graph with n = 2 over patterns with ell <= 3, k <= 2, plus
    100 seeded random instances with n = 3, k = 1."""
    insts = [inst for pattern in small_patterns(3, 2) for inst in all_host_variants(2, pattern)]
    rng = random.Random(2024)
    for _ in range(100):
        inst, _ = random_psi(3, [(1, 2)], rng.randrange(1 << 30), density=rng.choice((0.1, 0.2, 0.35)))
        insts.append(inst)
    return tuple(insts)


@lru_cache(maxsize=None)
def dirmc_results():
    out = []
    for inst in dirmc_corpus():
        red = reduce_psi_to_dirmc(inst)
        out.append((inst, red, solve_dirmc_exact(red)))
    return tuple(out)


@lru_cache(maxsize=None)
def stor_corpus():
    insts = [inst for pattern in small_patterns(4, 2) for inst in all_host_variants(2, pattern)]
    rng = random.Random(77)
    for _ in range(100):
        inst, _ = random_psi(3, [(1, 2)], rng.randrange(1 << 30), density=rng.choice((0.1, 0.2, 0.35)))
        insts.append(inst)
    return tuple(insts)


def psi_answer(inst) -> bool:
    yes = solve_psi(inst) is not None
    assert yes == oracles.psi_backtrack(inst.classes, inst.pattern_edges, inst.host_edges)
    return yes


# -- criteria ----------------------------------------------------------------------


def criterion_1():
    checked = 0
    slowest = 0.0
    bad = []
    for pattern in small_patterns(4, 3):
        for n in (1, 2, 3):
            for seed in range(4):
                inst = gen_psi_planted(n, pattern, seed)
                phi = planted_witness(n, pattern, seed)
                t0 = time.perf_counter()
                red = reduce_psi_to_dirmc(inst, M=2)
                cut = lift_hom_to_cutset(inst, phi, red)
                ok = red.budget == 13 * inst.k and cut.weight == red.budget and verify_multicut(red, cut)
                slowest = max(slowest, time.perf_counter() - t0)
                checked += 1
                if not ok:
                    bad.append((n, sorted(pattern), seed))
    ok = not bad and slowest < 1.0
    return record(1, ok, f"{checked} planted instances, budget=(6M+1)k=lift weight, {len(bad)} mismatches, slowest {slowest:.3f}s")


def criterion_2():
    t0 = time.perf_counter()
    disagree = 0
    for inst, red, cut in dirmc_results():
        yes = psi_answer(inst)
        if yes != (cut is not None and cut.weight <= red.budget):
            disagree += 1
    total = len(dirmc_corpus())
    elapsed = time.perf_counter() - t0
    return record(2, disagree == 0 and elapsed < 600, f"{total - disagree}/{total} agree, {elapsed:.1f}s")


def criterion_3():
    yes_count = failures = 0
    for inst, red, cut in dirmc_results():
        if cut is None:
            continue
        yes_count += 1
        try:
            phi = extract_hom_from_cutset(red, cut, inst)
            if not is_partitioned_homomorphism(inst, phi):
                failures += 1
        except Exception:
            failures += 1
    return record(3, failures == 0 and yes_count > 0, f"{yes_count - failures}/{yes_count} extracted homomorphisms valid")


def topological_dag(rng: random.Random, n: int) -> tuple[Digraph, DirectedPathDecomposition]:
    perm = list(range(n))
    rng.shuffle(perm)
    arcs = tuple((perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4)
    return Digraph(n, arcs), DirectedPathDecomposition.of([[v] for v in perm])


def criterion_4():
    widths = set()
    bad = 0
    for _, red, _ in dirmc_results():
        check = validate_path_decomposition(red.graph, build_pathwidth2_decomposition(red))
        widths.add(check.width)
        bad += not (check.ok and check.width == 2)
    rng = random.Random(4)
    dag_bad = 0
    for _ in range(200):
        g, d = topological_dag(rng, rng.randint(1, 9))
        check = validate_path_decomposition(g, d)
        dag_bad += not (check.ok and check.width == 1)
    ok = bad == 0 and dag_bad == 0
    return record(4, ok, f"{len(dirmc_results())} reduced instances width {sorted(w for w in widths if w)}; 200 DAG fixtures, {dag_bad} not width 1")


def criterion_5():
    t0 = time.perf_counter()
    mismatches = 0
    opt_values = []
    for inst in all_host_variants(2, [(1, 2)]):
        red = reduce_psi_to_dirmc(inst)
        weighted = solve_dirmc_exact(red, method="exhaustive")
        big, origin = expand_weights(red)
        unit = solve_dirmc_exact(big)
        same = (weighted is None) == (unit is None)
        if same and weighted is not None:
            same = weighted.weight == unit.weight and verify_multicut(red, {origin[v] for v in unit.vertices})
            opt_values.append(unit.weight)
        mismatches += not same
    elapsed = time.perf_counter() - t0
    return record(
        5,
        mismatches == 0,
        f"16 instances, {mismatches} mismatches, yes-optima {sorted(set(opt_values))}, {elapsed:.1f}s",
    )


def criterion_6():
    t0 = time.perf_counter()
    disagree = bad_pairs = bad_extract = 0
    for inst in stor_corpus():
        red = reduce_psi_to_stor(inst)
        bad_pairs += len(red.terminal_pairs) != 2 * inst.ell + 10 * inst.k
        o = solve_stor_exact(red, max_edges=STOR_MAX_EDGES)
        if psi_answer(inst) != (o is not None):
            disagree += 1
        if o is not None:
            ok = verify_orientation(red, o) and is_partitioned_homomorphism(inst, extract_hom_from_orientation(red, o, inst))
            bad_extract += not ok
    total = len(stor_corpus())
    elapsed = time.perf_counter() - t0
    ok = disagree == 0 and bad_pairs == 0 and bad_extract == 0 and elapsed < 600
    return record(6, ok, f"{total - disagree}/{total} agree, {bad_pairs} bad pair counts, {elapsed:.1f}s")


def criterion_7():
    rng = random.Random(7)
    graphs = violations = literal_checked = 0
    most = {k: 0 for k in range(4)}
    while graphs < 500:
        n = rng.randint(2, 6)
        g = random_digraph(rng, n, rng.choice((0.25, 0.4, 0.6)))
        graphs += 1
        for k in range(4):
            ctx = CutContext(g, 0, n - 1, k)
            try:
                got = enum_important_separators(ctx)
            except BoundViolation:
                violations += 1
                continue
            filtered = [c for c in enum_minimal_cuts(ctx) if is_important_separator(ctx, c)]
            violations += got != filtered or len(got) > 4**k
            if len(g.arcs) <= 16:
                literal_checked += 1
                violations += got != oracles.important_separators(n, g.arcs, 0, n - 1, k)
            most[k] = max(most[k], len(got))
    return record(
        7,
        violations == 0,
        f"{graphs} graphs x k=0..3, {violations} violations, max counts {most} vs 4^k, {literal_checked} literal checks",
    )


def criterion_8():
    rng = random.Random(8)
    violations = families = 0
    largest = {k: 0 for k in range(3)}
    for _ in range(150):
        n = rng.randint(2, 6)
        g = random_digraph(rng, n, rng.choice((0.3, 0.5)))
        for k in range(3):
            for graph, check in ((g, check_anti_isolation), (reverse_graph(g), check_reverse_anti_isolation)):
                targets, cuts = max_isolating_family(graph, 0, k)
                if check is check_reverse_anti_isolation:
                    cuts = [[(v, u) for u, v in c] for c in cuts]
                try:
                    rep = check(g, 0, targets, cuts, k)
                except BoundViolation:
                    violations += 1
                    continue
                families += 1
                violations += not rep.premise_ok or rep.r > (k + 1) * 4 ** (k + 1)
                largest[k] = max(largest[k], rep.r)
    g1_exact = bounds(1).g == 32
    return record(8, violations == 0 and g1_exact, f"{families} maximal families, largest r {largest}, {violations} violations, g(1)={bounds(1).g}")


def criterion_9():
    rng = random.Random(9)
    failures = runs = 0
    while runs < 1200:
        d, k = rng.randint(1, 3), rng.randint(1, 3)
        need = math.factorial(d) * k**d + 1
        ground = range(max(3 * d * k, d + 4) + rng.randint(0, 6))
        pool = list(itertools.combinations(ground, d))
        if len(pool) < need:
            continue
        family = [frozenset(s) for s in rng.sample(pool, min(len(pool), need + rng.randint(0, 10)))]
        runs += 1
        f = find_sunflower(family, k)
        if f is None or len(f.petals) <= k or len(set(f.petals)) != len(f.petals) or not set(f.petals) <= set(family):
            failures += 1
            continue
        failures += any(a & b != f.core for a, b in itertools.combinations(f.petals, 2))
    return record(9, failures == 0, f"{runs} families with |H| > d!k^d, {failures} failures")


def criterion_10():
    rng = random.Random(10)
    bad = graphs = shrunk = 0
    while graphs < 120:
        n = rng.randint(3, 8)
        g = random_digraph(rng, n, rng.choice((0.2, 0.3, 0.4)))
        k = rng.randint(0, 3)
        graphs += 1
        ctx = CutContext(g, 0, n - 1, k)
        core = cut_minimal_core(ctx)
        again = cut_minimal_core(core.context)
        cg, cs, ct = core.graph, core.context.s, core.context.t
        touched = {v for c in oracles.minimal_cuts(cg.n, cg.arcs, cs, ct, k) for a in c for v in a}
        ok = again.graph == cg and all(v in touched for v in range(cg.n) if v not in (cs, ct))
        shrunk += cg.n < n
        bad += not ok
    return record(10, bad == 0, f"{graphs} graphs, {shrunk} shrank, {bad} failures")


def ladder(length: int) -> tuple[Digraph, int, int]:
    arcs = set()
    top, bottom = 0, length
    for rail in (top, bottom):
        for v in range(rail, rail + length - 1):
            arcs |= {(v, v + 1), (v + 1, v)}
    for v in range(length):
        arcs |= {(v, v + length), (v + length, v)}
    s, t = 2 * length, 2 * length + 1
    arcs |= {(s, top), (s, bottom), (length - 1, t), (2 * length - 1, t)}
    return Digraph(2 * length + 2, tuple(sorted(arcs))), s, t


def criterion_11():
    rng = random.Random(11)
    cases = []
    for length in range(3, 9):
        path = Digraph(length + 1, tuple((v, v + 1) for v in range(length)))
        cases += [(path, 0, length, 1), (path, 0, length, 2)]
    for length in range(3, 6):
        g, s, t = ladder(length)
        cases.append((g, s, t, 2))
    for _ in range(150):
        n = rng.randint(3, 8)
        cases.append((random_digraph(rng, n, rng.choice((0.2, 0.35))), 0, n - 1, rng.randint(1, 2)))
    returned = false_positives = 0
    for g, s, t, k in cases:
        ctx = CutContext(g, s, t, k)
        part = participating_arcs(ctx)
        families = [part] + [tuple(a for a in part if rng.random() < 0.6) for _ in range(2)]
        minimal = set(oracles.minimal_cuts(g.n, g.arcs, s, t, k))
        for fam in families:
            cut = find_splitting_cut(ctx, fam)
            if cut is None:
                continue
            returned += 1
            fwd = oracles.reach(g.n, g.arcs, [s], removed_arcs=cut)
            back = oracles.reach_back(g.n, g.arcs, [t], removed_arcs=cut)
            rest = set(fam) - set(cut)
            ok = (
                tuple(cut) in minimal
                and sum(u in fwd for u, _ in rest) > k
                and sum(v in back for _, v in rest) > k
            )
            false_positives += not ok
    return record(11, false_positives == 0 and returned > 0, f"{returned} splitting cuts returned, {false_positives} false positives")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


def test_criterion_1_budget_and_witness_weight():
    assert criterion_1()[0]


def test_criterion_2_dirmc_round_trip():
    assert criterion_2()[0]


def test_criterion_3_extraction():
    assert criterion_3()[0]


def test_criterion_4_pathwidth():
    assert criterion_4()[0]


def test_criterion_5_weight_expansion():
    assert criterion_5()[0]


def test_criterion_6_stor_round_trip():
    assert criterion_6()[0]


def test_criterion_7_important_separators():
    assert criterion_7()[0]


def test_criterion_8_anti_isolation():
    assert criterion_8()[0]


def test_criterion_9_sunflower():
    assert criterion_9()[0]


def test_criterion_10_cut_minimal_core():
    assert criterion_10()[0]


def test_criterion_11_splitting_cuts():
    assert criterion_11()[0]


if __name__ == "__main__":
    failed = [c.__name__ for c in CRITERIA if not c()[0]]
    sys.exit(1 if failed else 0)
