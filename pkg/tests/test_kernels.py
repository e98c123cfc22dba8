import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperfields import _kernels_py, kernels, named
from hyperfields.groups import abelian_groups

compiled = pytest.importorskip("hyperfields._kernels")


@st.composite
def tables(draw):
    n = draw(st.integers(2, 5))
    group = draw(st.sampled_from(abelian_groups(n - 1)))
    add = [draw(st.integers(0, (1 << n) - 1)) for _ in range(n * n)]
    # bias towards near-valid tables: keep 0 + x = {x} most of the time
    if draw(st.booleans()):
        for x in range(n):
            add[x] = add[x * n] = 1 << x
    if draw(st.booleans()):
        for x in range(n):
            for y in range(x):
                add[x * n + y] = add[y * n + x]
    mul = tuple(v for row in group.monoid_table for v in row)
    return n, add, mul, draw(st.integers(1, n - 1))


@settings(max_examples=500, deadline=None)
@given(tables())
def test_backends_agree(t):
    n, add, mul, e = t
    assert compiled.is_hyperfield(add, mul, n, e) == _kernels_py.is_hyperfield(add, mul, n, e)
    if all(add):
        assert compiled.assoc_failures(add, n) == _kernels_py.assoc_failures(add, n)
        assert compiled.assoc_failures(add, n, 3) == _kernels_py.assoc_failures(add, n, 3)
        a, b = add[n + 1] or 1, add[2 * n - 1] or 2
        assert compiled.set_add(add, n, a, b) == _kernels_py.set_add(add, n, a, b)


def test_backends_agree_on_catalog():
    from hyperfields.catalog import load_catalog

    for entry in load_catalog().entries.values():
        h = entry.structure
        args = (list(h.flat_add), h.flat_mul, h.order, h.neg_one)
        assert compiled.is_hyperfield(*args) == _kernels_py.is_hyperfield(*args)
        assert compiled.assoc_failures(args[0], h.order) == _kernels_py.assoc_failures(args[0], h.order)


def test_large_orders_fall_back():
    assert kernels._pick(compiled.MAX_N + 1) is _kernels_py


def test_backend_flag():
    assert kernels.BACKEND == "cython"
    env = dict(os.environ, HYPERFIELD_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import hyperfields; print(hyperfields.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_pure_python_enumeration_matches():
    env = dict(os.environ, HYPERFIELD_PURE_PYTHON="1")
    code = ("from hyperfields import enumerate_hyperfields as e; "
            "print(e(5).count, e(5).forms == sorted(e(5).forms))")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["27", "True"]


def test_set_add_on_known_table():
    k = named("K")
    assert kernels.set_add(k.flat_add, 2, 0b11, 0b10) == 0b11
