import itertools

import pytest
from util import move_pairs

from coverpebble import (
    BinaryWeighting,
    BudgetExceeded,
    Configuration,
    InvalidSpec,
    LengthMismatch,
    Multipartite,
    Path,
    SolveMemo,
    Wheel,
    composition_count,
    enumerate_configs,
    gamma_exact,
    generate,
    iter_count_vectors,
    solve,
    stacked,
    validate_certificate,
    verify_threshold,
)

K2 = generate(Multipartite((1, 1)))
P3 = generate(Path(3))
W3 = generate(Wheel(3))


def test_solve_k2_examples():
    out = solve(K2, Configuration((2, 0)))
    assert not out.solvable
    assert out.certificate is None
    assert out.decision == "unsolvable"

    out = solve(K2, Configuration((3, 0)))
    assert out.solvable
    assert move_pairs(out.certificate) == [(0, 1)]
    assert out.decision == "solvable"


def test_solve_wheel_stack_example():
    assert not solve(W3, stacked(W3, 1, 6)).solvable
    assert solve(W3, stacked(W3, 1, 7)).solvable


def test_solve_certificates_replay():
    for counts in itertools.product(range(4), repeat=3):
        out = solve(P3, Configuration(counts))
        if out.solvable:
            final = validate_certificate(P3, out.certificate)
            assert all(x > 0 for x in final.counts)


def test_solve_weighted_targets():
    b = BinaryWeighting((0, 0, 1))
    out = solve(P3, Configuration((4, 0, 0)), b)
    assert out.solvable
    final = validate_certificate(P3, out.certificate, b)
    assert final.counts[2] >= 1
    assert not solve(P3, Configuration((3, 0, 0)), b).solvable


def test_solve_empty_weighting_is_trivial():
    b = BinaryWeighting((0, 0, 0))
    out = solve(P3, Configuration((0, 0, 0)), b)
    assert out.solvable
    assert out.certificate.moves == ()


def test_solve_length_checks():
    with pytest.raises(LengthMismatch):
        solve(P3, Configuration((1, 1)))
    with pytest.raises(LengthMismatch):
        solve(P3, Configuration((1, 1, 1)), BinaryWeighting((1, 1)))


def test_solve_budget():
    with pytest.raises(BudgetExceeded):
        solve(generate(Wheel(5)), stacked(generate(Wheel(5)), 1, 20), budget=3)
    # a generous budget changes nothing
    out = solve(K2, Configuration((3, 0)), budget=10_000)
    assert out.solvable


def test_solve_memo_reuse_guard():
    memo = SolveMemo()
    solve(P3, Configuration((1, 1, 1)), memo=memo)
    solve(P3, Configuration((2, 1, 1)), memo=memo)
    with pytest.raises(ValueError):
        solve(K2, Configuration((1, 1)), memo=memo)


def test_enumerate_examples():
    assert [c.counts for c in enumerate_configs(2, 2)] == [(2, 0), (1, 1), (0, 2)]
    assert sum(1 for _ in enumerate_configs(4, 7)) == 120
    assert composition_count(4, 7) == 120
    assert [c.counts for c in enumerate_configs(1, 5)] == [(5,)]
    assert [c.counts for c in enumerate_configs(3, 0)] == [(0, 0, 0)]


def test_enumerate_rejects_bad_arguments():
    with pytest.raises(InvalidSpec):
        list(enumerate_configs(0, 2))
    with pytest.raises(InvalidSpec):
        list(enumerate_configs(2, -1))


def test_enumeration_is_colex_sorted_and_complete():
    for n in range(1, 5):
        for k in range(7):
            vecs = list(iter_count_vectors(n, k))
            assert len(vecs) == composition_count(n, k)
            assert len(set(vecs)) == len(vecs)
            assert all(sum(v) == k and len(v) == n for v in vecs)
            assert vecs == sorted(vecs, key=lambda v: v[::-1])
            assert vecs[0] == (k,) + (0,) * (n - 1)


def test_enumeration_range_slices_agree():
    for n, k in [(3, 5), (4, 6), (5, 4)]:
        full = list(iter_count_vectors(n, k))
        total = composition_count(n, k)
        for parts in (2, 3, 7):
            bounds = [i * total // parts for i in range(parts + 1)]
            joined = []
            for i in range(parts):
                joined.extend(iter_count_vectors(n, k, bounds[i], bounds[i + 1]))
            assert joined == full
        assert list(iter_count_vectors(n, k, 5, 5)) == []
        assert list(iter_count_vectors(n, k, total - 1, total + 10)) == [full[-1]]


def test_verify_threshold_examples():
    assert verify_threshold(W3, 7).ok
    assert verify_threshold(W3, 7).configs_checked == 120

    below = verify_threshold(W3, 6)
    assert not below.ok
    # colex-first witness is the hub stack
    assert below.witness.counts == (6, 0, 0, 0)
    assert below.configs_checked == 1

    assert verify_threshold(K2, 3).ok


def test_verify_threshold_worker_determinism():
    for k in (6, 7):
        baseline = verify_threshold(W3, k, 1)
        for workers in (2, 3, 8):
            again = verify_threshold(W3, k, workers)
            assert again == baseline


def test_verify_threshold_shared_memo_speedup_is_consistent():
    memo = SolveMemo()
    first = verify_threshold(P3, 7, memo=memo)
    second = verify_threshold(P3, 7, memo=memo)
    assert first == second
    assert first.ok


def test_gamma_k2():
    result = gamma_exact(K2)
    assert result.gamma == 3
    assert result.witness.counts == (2, 0)
    assert result.witness.size == 2
    assert not solve(K2, result.witness).solvable


def test_gamma_p3():
    result = gamma_exact(P3)
    assert result.gamma == 7
    assert result.witness.size == 6
    assert not solve(P3, result.witness).solvable


def test_gamma_w4():
    result = gamma_exact(generate(Wheel(4)))
    assert result.gamma == 11


def test_gamma_with_hints():
    # a low hint doubles upward, a high hint walks downward; both land
    # on the same value and witness
    plain = gamma_exact(P3)
    low = gamma_exact(P3, upper_hint=2)
    high = gamma_exact(P3, upper_hint=25)
    assert plain.gamma == low.gamma == high.gamma == 7
    assert plain.witness == low.witness == high.witness


def test_gamma_single_vertex():
    single = generate(Path(1))
    result = gamma_exact(single)
    assert result.gamma == 1
    assert result.witness.counts == (0,)
