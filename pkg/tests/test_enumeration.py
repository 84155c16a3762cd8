"""Exhaustive search: counts pinned by a second route, dedupe, resource caps."""

import pytest

from conftest import bijection_level_oracle, cycle_solution3, trivial_solution
from ybekit.enumeration import (
    EnumerationConfig,
    EnumerationLimitError,
    candidate_count,
    dedupe_up_to_iso,
    enumerate_solutions,
    iso_classes,
)
from ybekit.setsolutions import (
    Permutation,
    SetSolution,
    check_solution,
    isomorphic_set,
)


def test_candidate_count():
    assert candidate_count(1) == 1
    assert candidate_count(2) == 4
    assert candidate_count(3) == 216
    assert candidate_count(4) == 331776


def test_config_validation():
    with pytest.raises(ValueError):
        EnumerationConfig(0)
    with pytest.raises(ValueError):
        EnumerationConfig(2, limit=0)
    with pytest.raises(ValueError):
        EnumerationConfig(2, max_n=0)


def test_counts_frozen(sols2, sols3, sols4):
    assert enumerate_solutions(EnumerationConfig(1)) == [trivial_solution(1)]
    assert len(sols2) == 2
    assert len(sols3) == 12
    assert len(sols4) == 168


def test_n2_solutions_frozen(sols2):
    assert sols2[0] == trivial_solution(2)
    assert sols2[1] == SetSolution(2, ((2, 1), (2, 1)), ((2, 1), (2, 1)))


def test_all_emitted_pass_checks(sols3):
    for s in sols3:
        rep = check_solution(s)
        assert rep.nondegenerate and rep.involutive and rep.braided


def test_output_sorted_and_deterministic(sols3):
    assert [s.sigma for s in sols3] == sorted(s.sigma for s in sols3)
    again = enumerate_solutions(EnumerationConfig(3))
    assert again == sols3


def test_sigma_level_equals_bijection_level_oracle(sols2, sols3):
    assert bijection_level_oracle(1) == enumerate_solutions(EnumerationConfig(1))
    assert bijection_level_oracle(2) == sols2
    assert bijection_level_oracle(3) == sols3


def test_dedupe_counts(sols2, sols3, sols4):
    assert len(dedupe_up_to_iso(sols2)) == 2
    assert len(dedupe_up_to_iso(sols3)) == 5
    assert len(dedupe_up_to_iso(sols4)) == 23


def test_iso_class_sizes_frozen(sols3):
    classes = iso_classes(sols3)
    assert [len(c) for c in classes] == [1, 3, 3, 3, 2]
    assert sum(len(c) for c in classes) == len(sols3)


def test_iso_classes_structure(sols3):
    classes = iso_classes(sols3)
    reps = [cls[0] for cls in classes]
    for cls in classes:
        assert cls[0] == min(cls, key=lambda s: (s.sigma, s.gamma))
        for member in cls:
            assert isomorphic_set(cls[0], member) is not None
    for i, a in enumerate(reps):
        for b in reps[i + 1:]:
            assert isomorphic_set(a, b) is None


def test_dedupe_removes_relabeled_duplicate():
    s = cycle_solution3()
    mu = Permutation((2, 3, 1))
    inv = mu.inverse()
    relabel = lambda tables: tuple(
        tuple(mu(tables[inv(x) - 1][inv(y) - 1]) for y in range(1, 4))
        for x in range(1, 4))
    t = SetSolution(3, relabel(s.sigma), relabel(s.gamma))
    kept = dedupe_up_to_iso([s, t])
    assert kept == [min([s, t], key=lambda v: (v.sigma, v.gamma))]


def test_dedupe_empty():
    assert dedupe_up_to_iso([]) == []


def test_iso_classes_rejects_mixed_sizes():
    with pytest.raises(ValueError):
        iso_classes([trivial_solution(2), trivial_solution(3)])


def test_size_cap():
    with pytest.raises(EnumerationLimitError):
        enumerate_solutions(EnumerationConfig(5))
    assert len(enumerate_solutions(EnumerationConfig(2, max_n=2))) == 2
    with pytest.raises(EnumerationLimitError):
        enumerate_solutions(EnumerationConfig(3, max_n=2))


def test_candidate_space_limit():
    with pytest.raises(EnumerationLimitError):
        enumerate_solutions(EnumerationConfig(2, limit=3))
    assert len(enumerate_solutions(EnumerationConfig(2, limit=4))) == 2


def test_limit_error_is_runtime_error():
    assert issubclass(EnumerationLimitError, RuntimeError)
