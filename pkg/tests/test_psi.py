import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from dircut.errors import InputError
from dircut.psi import (
    PsiInstance,
    all_host_variants,
    gen_psi_planted,
    is_partitioned_homomorphism,
    normalize_psi,
    planted_witness,
    random_psi,
    small_patterns,
    solve_psi,
)

EDGE = frozenset({(1, 2)})


def test_homomorphism_check_on_single_edge():
    inst = PsiInstance(((0, 1), (2, 3)), EDGE, frozenset({(0, 2)}))
    assert is_partitioned_homomorphism(inst, (1, 1))
    assert not is_partitioned_homomorphism(inst, (1, 2))
    with pytest.raises(InputError):
        is_partitioned_homomorphism(inst, (1, 3))
    with pytest.raises(InputError):
        is_partitioned_homomorphism(inst, (1,))


def test_triangle_copy_accepts_identity():
    tri = frozenset({(1, 2), (1, 3), (2, 3)})
    inst = PsiInstance(((0,), (1,), (2,)), tri, frozenset({(0, 1), (0, 2), (1, 2)}))
    assert is_partitioned_homomorphism(inst, (1, 1, 1))
    assert solve_psi(inst) == (1, 1, 1)


def test_solver_first_witness_and_no_instance():
    full = frozenset((u, v) for u in (0, 1) for v in (2, 3))
    assert solve_psi(PsiInstance(((0, 1), (2, 3)), EDGE, full)) == (1, 1)
    assert solve_psi(PsiInstance(((0, 1), (2, 3)), EDGE, frozenset())) is None
    # Only v^1_2 v^2_1 exists, so the lexicographic scan lands on (2, 1).
    assert solve_psi(PsiInstance(((0, 1), (2, 3)), EDGE, frozenset({(1, 2)}))) == (2, 1)


def test_instance_validation():
    with pytest.raises(InputError):
        PsiInstance(((0,), (1,)), frozenset({(1, 3)}), frozenset())
    with pytest.raises(InputError):
        PsiInstance(((0,), (0,)), EDGE, frozenset())
    with pytest.raises(InputError):
        PsiInstance(((0,), (1,)), EDGE, frozenset({(0, 7)}))


def test_normalize_pads_unequal_classes():
    raw = PsiInstance(((0, 1), (2,)), EDGE, frozenset({(0, 2)}))
    norm = normalize_psi(raw)
    assert norm.n == 2 and norm.is_normalized()
    assert norm.classes[1][0] == 2 and norm.classes[1][1] not in (0, 1, 2)
    assert (solve_psi(norm) is None) == (not oracles.psi_backtrack(raw.classes, raw.pattern_edges, raw.host_edges))


def test_normalize_drops_isolated_pattern_vertices_and_renumbers():
    raw = PsiInstance(((0,), (1,), (2, 3)), frozenset({(1, 3)}), frozenset({(0, 3)}))
    norm = normalize_psi(raw)
    assert norm.ell == 2 and norm.pattern_edges == {(1, 2)}
    assert norm.classes[0][0] == 0 and norm.classes[1] == (2, 3)
    assert solve_psi(norm) == (1, 2)


def test_normalize_reports_empty_class_as_trivial_no():
    assert normalize_psi(PsiInstance(((0,), ()), EDGE, frozenset())) is None
    # An empty class of an isolated pattern vertex also leaves no total map.
    assert normalize_psi(PsiInstance(((0,), (1,), ()), EDGE, frozenset({(0, 1)}))) is None


@st.composite
def raw_instances(draw):
    ell = draw(st.integers(2, 3))
    sizes = [draw(st.integers(1, 3)) for _ in range(ell)]
    ids = iter(range(100))
    classes = tuple(tuple(next(ids) for _ in range(s)) for s in sizes)
    pairs = list(itertools.combinations(range(1, ell + 1), 2))
    pattern = draw(st.sets(st.sampled_from(pairs), min_size=1))
    slots = [(u, v) for i, j in pattern for u in classes[i - 1] for v in classes[j - 1]]
    host = draw(st.sets(st.sampled_from(slots))) if slots else set()
    return PsiInstance(classes, frozenset(pattern), frozenset(host))


@given(raw_instances())
def test_normalize_preserves_answer_and_is_idempotent(raw):
    norm = normalize_psi(raw)
    assert norm is not None
    assert normalize_psi(norm) == norm
    assert (solve_psi(norm) is not None) == oracles.psi_backtrack(raw.classes, raw.pattern_edges, raw.host_edges)


@given(st.integers(1, 3), st.sampled_from(small_patterns(3, 3)), st.integers(0, 10**6), st.floats(0, 1))
def test_solver_agrees_with_backtracking(n, pattern, seed, density):
    inst, _ = random_psi(n, pattern, seed, density=density)
    h = solve_psi(inst)
    assert (h is not None) == oracles.psi_backtrack(inst.classes, inst.pattern_edges, inst.host_edges)
    if h is not None:
        assert is_partitioned_homomorphism(inst, h)
        # Lexicographically first: no smaller assignment works.
        for phi in itertools.product(range(1, n + 1), repeat=inst.ell):
            if phi == h:
                break
            assert not is_partitioned_homomorphism(inst, phi)


@given(st.integers(1, 3), st.sampled_from(small_patterns(3, 3)), st.integers(0, 10**6))
def test_planted_instances_are_yes(n, pattern, seed):
    inst = gen_psi_planted(n, pattern, seed)
    assert inst == gen_psi_planted(n, pattern, seed)
    assert is_partitioned_homomorphism(inst, planted_witness(n, pattern, seed))
    assert solve_psi(inst) is not None


def test_generator_rejects_isolated_or_empty_patterns():
    with pytest.raises(InputError):
        gen_psi_planted(2, [(1, 3)], 0)
    with pytest.raises(InputError):
        gen_psi_planted(2, [], 0)
    with pytest.raises(InputError):
        gen_psi_planted(0, [(1, 2)], 0)


def test_small_pattern_catalogue():
    # Labelled graphs without isolated vertices: one on 2 vertices, and on 3
    # vertices three paths plus the triangle.
    assert len(small_patterns(3, 3)) == 1 + 3 + 1
    assert len(list(all_host_variants(2, EDGE))) == 16
