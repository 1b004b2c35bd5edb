import numpy as np
import pytest

import shallowsort as ss


def is_sorted(a):
    return bool(np.all(a[:-1] <= a[1:]))


@pytest.mark.parametrize("engine", ss.ENGINES)
@pytest.mark.parametrize("policy", ss.POLICIES)
def test_every_policy_engine_sorts(policy, engine):
    rng = np.random.default_rng(1234)
    a = rng.integers(0, 50, size=2000).astype(np.int64)
    before = a.copy()
    metrics = ss.sort_in_place(a, policy=policy, engine=engine)
    assert is_sorted(a)
    assert np.array_equal(np.sort(before), a)
    assert metrics["comparisons"] > 0


@pytest.mark.parametrize("kernel", ss.KERNELS)
def test_kernels(kernel):
    a = ss.generate("uniform_random", n=5000, seed=7)
    before = a.copy()
    ss.sort_in_place(a, engine="walkback", kernel=kernel)
    assert ss.verify_sorted_permutation(before, a)


def test_walkback_trace_matches_standard():
    a = ss.generate("uniform_random", n=4096, seed=3)
    t_std = ss.trace(a, policy="powersort", engine="standard")
    t_wb = ss.trace(a, policy="powersort", engine="walkback")
    assert t_std["merges"] == t_wb["merges"]
    assert t_wb["metrics"]["walkback_steps"] > 0
    assert t_std["metrics"]["walkback_steps"] == 0


def test_detect_runs_and_entropy():
    a = np.array([1, 3, 2, 2, 4, 1], dtype=np.int64)
    runs = ss.detect_runs(a)
    assert runs == [(0, 2), (2, 3), (5, 1)]
    assert ss.run_entropy([2, 2]) == pytest.approx(1.0)
    assert ss.run_entropy([2, 1, 1]) == pytest.approx(1.5)


def test_node_power_examples():
    assert ss.node_power(2, 9, 7) == 0
    assert ss.node_power(2, 6, 7) == 1
    assert ss.shivers_level(5, 1.0) == 2


def test_counterexample_generator():
    a = ss.generate("counterexample_a", n=64)
    runs = ss.detect_runs(a.copy())
    assert [l for (_, l) in runs] == [32, 16, 8, 2, 2, 2, 2]


def test_jumpback_handles_worst_case_without_walking():
    a = ss.generate("counterexample_b", n=1 << 14)
    before = a.copy()
    metrics = ss.sort_in_place(a, policy="timsort", engine="jumpback")
    assert ss.verify_sorted_permutation(before, a)
    assert metrics["walkback_steps"] == 0
    assert metrics["encode_ops"] >= 0
