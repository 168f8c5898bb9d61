"""Python smoke tests of the _entod extension module.

Runnable under pytest or directly: python3 tests/python/test_smoke.py
"""

import math
import os
import sys
import tempfile

import entod

# -(2/3)ln(2/3) - (1/3)ln(1/3), frozen from 50-digit arithmetic
H21 = 0.6365141682948128


def test_encode_and_shapes():
    t = entod.encode([["a", "x"], ["a", "y"], ["b", "x"]])
    assert t.n == 3 and t.m == 2
    assert t.cardinality(0) == 2
    assert t.column_counts(0) == [2, 1]
    assert t.decode() == [["a", "x"], ["a", "y"], ["b", "x"]]


def test_entropy_values():
    t = entod.encode([["a", "x"], ["a", "y"], ["b", "x"]])
    assert abs(entod.independent_entropy(t) - 2 * H21) < 1e-12
    assert abs(entod.joint_entropy(t) - math.log(3)) < 1e-12
    assert abs(entod.attribute_entropy([2, 1], 3) - H21) < 1e-12


def test_detect_finds_the_deviant():
    t = entod.encode([["a", "x"]] * 5 + [["b", "y"]])
    r = entod.greedy_detect(t, 1)
    assert list(r.selected) == [5]
    assert abs(r.entropy_trace[-1]) < 1e-12

    naive = entod.naive_greedy_detect(t, 1)
    assert list(naive.selected) == [5]

    subset, entropy = entod.exhaustive_optimal(t, 1)
    assert list(subset) == [5]
    assert abs(entropy) < 1e-12


def test_greedy_matches_naive():
    t = entod.generate_synthetic(rows=60, attributes=4, classes=3,
                                 noise=0.3, seed=17)
    fast = entod.greedy_detect(t, 6)
    slow = entod.naive_greedy_detect(t, 6)
    assert list(fast.selected) == list(slow.selected)
    assert all(abs(a - b) < 1e-9
               for a, b in zip(fast.entropy_trace, slow.entropy_trace))


def test_synthetic_determinism_and_downsample():
    a = entod.generate_synthetic(rows=50, attributes=3, classes=2, seed=9)
    b = entod.generate_synthetic(rows=50, attributes=3, classes=2, seed=9)
    assert a.decode() == b.decode()
    assert a.labels == b.labels

    down = entod.downsample_class(a, "c1", 3, seed=4)
    assert down.labels.count("c1") == 3
    assert down.labels.count("c0") == 25


def test_coverage_report():
    t = entod.generate_synthetic(rows=40, attributes=4, classes=2,
                                 noise=0.0, seed=2)
    down = entod.downsample_class(t, "c1", 1, seed=1)
    r = entod.greedy_detect(down, 3)
    report = entod.coverage_at(r, down.labels, ["c1"], [1, 3])
    assert report.total_rare == 1
    assert report.rows[0].rare_found == 1  # the singleton comes out first
    assert report.rows[0].coverage == 1.0


def test_file_roundtrip():
    t = entod.generate_synthetic(rows=20, attributes=3, classes=2, seed=5)
    with tempfile.TemporaryDirectory() as tmp:
        data = os.path.join(tmp, "t.data")
        entod.write_table(t, data)
        loaded = entod.load_table(data, label_col=3)
        assert loaded.n == t.n and loaded.m == t.m
        assert loaded.labels == t.labels

        result = entod.greedy_detect(loaded, 2)
        out = os.path.join(tmp, "r.csv")
        entod.write_result(result, loaded, out)
        assert entod.read_result_indices(out) == list(result.selected)


def test_error_mapping():
    try:
        entod.encode([])
        raise AssertionError("expected ValueError")
    except ValueError:
        pass
    try:
        entod.load_table("/no/such/file.data")
        raise AssertionError("expected OSError")
    except OSError:
        pass
    t = entod.encode([["a"], ["b"]])
    try:
        entod.greedy_detect(t, 2)
        raise AssertionError("expected ValueError")
    except ValueError:
        pass


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"ok   {name}")
            except Exception as exc:  # noqa: BLE001
                failures += 1
                print(f"FAIL {name}: {exc}")
    sys.exit(1 if failures else 0)
