import os
import random
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from uslab import kernel
from uslab.pbw import make_lie_structure

needs_c = pytest.mark.skipif(kernel.CKernel is None, reason="compiled kernel not built")


def int_table(lie):
    return [[tuple((a, int(c)) for a, c in sorted(entry.items())) for entry in row] for row in lie.bracket_table]


def random_mono(rng, lie, laurent):
    m = [0] * lie.size
    for _ in range(rng.randint(0, 4)):
        m[rng.randrange(lie.size)] += 1
    if laurent:
        for k in range(lie.e0_start, lie.size):
            m[k] = rng.randint(-2, 2)
    return tuple(m)


@needs_c
def test_default_kernel_is_compiled():
    assert kernel.Kernel is kernel.CKernel
    assert kernel.IMPLEMENTATION != kernel.PyKernel.implementation


@needs_c
@given(st.integers(0, 10**6), st.sampled_from([2, 3]), st.booleans())
def test_compiled_and_python_kernels_agree(seed, n, laurent):
    lie = make_lie_structure(n)
    table = int_table(lie)
    ck = kernel.CKernel(lie.size, lie.e0_start, table)
    pk = kernel.PyKernel(lie.size, lie.e0_start, table)
    rng = random.Random(seed)
    m1, m2 = random_mono(rng, lie, laurent), random_mono(rng, lie, laurent)
    assert ck.mono_mono(m1, m2) == pk.mono_mono(m1, m2)


@needs_c
def test_cache_clear():
    lie = make_lie_structure(2)
    k = kernel.CKernel(lie.size, lie.e0_start, int_table(lie))
    k.mono_mono(lie.unit_mono(lie.e0_start), lie.unit_mono(0))
    assert k.cache_size() > 0
    k.clear()
    assert k.cache_size() == 0


def test_pure_python_fallback_selected_by_environment():
    code = (
        "from uslab import kernel; from uslab.pbw import E, H, make_lie_structure;"
        "lie = make_lie_structure(2);"
        "print(kernel.IMPLEMENTATION, lie.gen(E(0, 1)) * lie.gen(H(1)))"
    )
    env = dict(os.environ, USLAB_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split()[0] == "python"
    assert "1 * e[0][1] + 1 * h[1] * e[0][1]" in out.stdout
