"""Compiled kernels against the pure-Python fallback, and both against
generic code paths."""

import itertools
import random

import pytest

from mdioid import _kernels
from mdioid._kernels import _pure

cext = _kernels._cext
needs_cext = pytest.mark.skipif(cext is None, reason="compiled kernels not built")


def random_masks(rng, count, width):
    return [rng.getrandbits(width) & rng.getrandbits(width) for _ in range(count)]


@needs_cext
def test_backend_reports_cython():
    assert _kernels.BACKEND == "cython"


@needs_cext
def test_bool_bidet_parity():
    rng = random.Random(1)
    for _ in range(3000):
        n = rng.randint(0, 7)
        rows = random_masks(rng, n, max(n, 1))
        assert cext.bool_bidet(rows, n) == _pure.bool_bidet(rows, n)


@needs_cext
def test_first_unit_diagonal_parity():
    rng = random.Random(2)
    for _ in range(3000):
        n = rng.randint(1, 7)
        rows = random_masks(rng, n, n)
        for parity in (-1, 0, 1):
            assert cext.first_unit_diagonal(rows, n, parity) == _pure.first_unit_diagonal(rows, n, parity)


@needs_cext
@pytest.mark.parametrize("fn", ["sign_pattern_attach", "closure_attach", "union_collision"])
def test_mask_search_parity(fn):
    rng = random.Random(3)
    for _ in range(2000):
        k = rng.randint(0, 9)
        masks = random_masks(rng, k, rng.randint(1, 8))
        assert getattr(cext, fn)(masks) == getattr(_pure, fn)(masks)


@needs_cext
def test_even_cycle_parity():
    rng = random.Random(4)
    for _ in range(3000):
        n = rng.randint(1, 8)
        adj = [rng.getrandbits(n) & ~(1 << i) for i in range(n)]
        assert cext.even_cycle(adj, n) == _pure.even_cycle(adj, n)


def test_wide_masks_fall_back_to_python():
    rows = [1 << 70, 1 << 3]
    assert _kernels.bool_bidet(rows, 2) == _pure.bool_bidet(rows, 2)
    assert _kernels.sign_pattern_attach([1 << 70, 1 << 70]) == (1, 2)


def test_sign_pattern_is_lexicographic_first():
    """Kernel result equals the first hit in an explicit {U, A, B}^k scan."""
    rng = random.Random(5)
    for _ in range(500):
        k = rng.randint(1, 6)
        masks = random_masks(rng, k, 4)
        expected = None
        for digits in itertools.product((0, 1, 2), repeat=k):
            first = next((d for d in digits if d), 0)
            if first != 1:
                continue
            a = b = ua = ub = 0
            for i, d in enumerate(digits):
                if d == 1:
                    a |= 1 << i
                    ua |= masks[i]
                elif d == 2:
                    b |= 1 << i
                    ub |= masks[i]
            if ua == ub:
                expected = (a, b)
                break
        assert _kernels.sign_pattern_attach(masks) == expected


def test_closure_and_sign_pattern_agree_on_existence():
    rng = random.Random(6)
    for _ in range(2000):
        masks = random_masks(rng, rng.randint(1, 8), rng.randint(1, 6))
        s = _kernels.sign_pattern_attach(masks)
        c = _kernels.closure_attach(masks)
        assert (s is None) == (c is None)
        if c is not None:
            a, b = c
            ua = ub = 0
            for i, m in enumerate(masks):
                if (a >> i) & 1:
                    ua |= m
                if (b >> i) & 1:
                    ub |= m
            assert ua == ub and not (a & b) and (a | b)


def test_pure_backend_selected_by_environment():
    import os
    import subprocess
    import sys

    out = subprocess.run(
        [sys.executable, "-c", "import mdioid._kernels as k; print(k.BACKEND)"],
        env={**os.environ, "MDIOID_PURE_PYTHON": "1"},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"


@needs_cext
def test_benchmark_script_runs(capsys):
    import importlib.util
    import pathlib

    path = pathlib.Path(__file__).resolve().parent.parent / "benchmarks" / "bench_kernels.py"
    spec = importlib.util.spec_from_file_location("bench_kernels", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    assert mod.main(["--repeat", "1"]) == 0
    assert "speedup" in capsys.readouterr().out
