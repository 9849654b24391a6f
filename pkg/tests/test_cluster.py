import itertools
import random

import pytest

from combine.analysis import DistanceMatrix, hcluster


def matrix_from_full(rows):
    n = len(rows)
    values = tuple(rows[i][j] for i in range(n) for j in range(i + 1, n))
    return DistanceMatrix(n=n, values=values)


def random_matrix(rng, n, quantize=None):
    rows = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = rng.random()
            if quantize:
                v = round(v * quantize) / quantize
            rows[i][j] = rows[j][i] = v
    return matrix_from_full(rows)


def oracle_hcluster(d, linkage):
    """From-scratch agglomeration: linkage recomputed over member sets each step."""
    n = d.n
    members = {i: frozenset([i]) for i in range(n)}
    merges = []
    next_id = n
    while len(members) > 1:
        best = None
        for a, b in itertools.combinations(sorted(members), 2):
            pairs = [d.get(i, j) for i in members[a] for j in members[b]]
            if linkage == "single":
                dist = min(pairs)
            elif linkage == "complete":
                dist = max(pairs)
            else:
                dist = sum(pairs) / len(pairs)
            key = (dist, a, b)
            if best is None or key < best:
                best = key
        dist, a, b = best
        merges.append((a, b, dist, next_id))
        members[next_id] = members.pop(a) | members.pop(b)
        next_id += 1
    return merges


def test_single_item():
    d = DistanceMatrix(n=1, values=())
    assert hcluster(d).merges == ()


def test_two_points_forced_merge():
    d = DistanceMatrix(n=2, values=(0.4,))
    dend = hcluster(d, "single")
    assert len(dend.merges) == 1
    m = dend.merges[0]
    assert (m.a, m.b, m.height, m.cluster) == (0, 1, 0.4, 2)


def test_unknown_linkage():
    with pytest.raises(ValueError):
        hcluster(DistanceMatrix(n=1, values=()), "ward")


@pytest.mark.parametrize("linkage", ["single", "complete", "average"])
def test_matches_brute_force_oracle(linkage):
    rng = random.Random(42)
    for _ in range(60):
        n = rng.randint(2, 8)
        # quantized distances force ties for single/complete; average uses raw
        d = random_matrix(rng, n, quantize=8 if linkage != "average" else None)
        got = hcluster(d, linkage)
        expected = oracle_hcluster(d, linkage)
        assert len(got.merges) == n - 1
        for merge, (a, b, h, cid) in zip(got.merges, expected):
            assert (merge.a, merge.b, merge.cluster) == (a, b, cid)
            assert merge.height == pytest.approx(h, abs=1e-12)


@pytest.mark.parametrize("linkage", ["single", "complete"])
def test_heights_non_decreasing(linkage):
    rng = random.Random(9)
    for _ in range(40):
        n = rng.randint(2, 10)
        dend = hcluster(random_matrix(rng, n), linkage)
        heights = [m.height for m in dend.merges]
        assert heights == sorted(heights)


def test_members_cover_all_leaves():
    rng = random.Random(3)
    d = random_matrix(rng, 6)
    dend = hcluster(d, "average")
    root = dend.merges[-1].cluster
    assert dend.members(root) == frozenset(range(6))


def test_each_cluster_consumed_once():
    rng = random.Random(5)
    d = random_matrix(rng, 7)
    dend = hcluster(d, "complete")
    consumed = [c for m in dend.merges for c in (m.a, m.b)]
    assert len(consumed) == len(set(consumed))
