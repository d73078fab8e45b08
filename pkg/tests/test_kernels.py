import os
import random

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from arspace import _kernels, _pykernels

try:
    from arspace import _ckernels
except ImportError:
    _ckernels = None

BACKENDS = [_pykernels] + ([_ckernels] if _ckernels is not None else [])


def test_backend_selected():
    assert _kernels.BACKEND in ("python", "cython")
    forced = bool(os.environ.get("ARSPACE_PURE_PYTHON"))
    assert (_kernels.BACKEND == "cython") == (_ckernels is not None and not forced)


hom_rows = st.integers(1, 12).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.sampled_from([-1, 1])),
            max_size=2 * n,
        ),
    )
)


def _rows(n, spec):
    out = []
    for a, b, s in spec:
        row = [0] * n
        row[a] += 1
        row[b] += s
        out.append(row)
    return out


@pytest.mark.parametrize("k", BACKENDS, ids=lambda k: k.__name__.rsplit(".", 1)[-1])
@given(hom_rows)
def test_int_rank_matches_sympy(k, data):
    n, spec = data
    rows = _rows(n, spec)
    want = sympy.Matrix(rows).rank() if rows else 0
    assert k.int_rank(rows, n) == want


@pytest.mark.parametrize("k", BACKENDS, ids=lambda k: k.__name__.rsplit(".", 1)[-1])
def test_int_rank_dense(k):
    rng = random.Random(1)
    for _ in range(30):
        n = rng.randint(1, 8)
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(rng.randint(1, 8))]
        assert k.int_rank(rows, n) == sympy.Matrix(rows).rank()


@pytest.mark.parametrize("k", BACKENDS, ids=lambda k: k.__name__.rsplit(".", 1)[-1])
def test_euler_form(k):
    # 0 -> 1 <- 2, both reps the full interval
    assert k.euler_form([1, 1, 1], [1, 1, 1], [1, -1]) == 1
    assert k.euler_form([1, 0, 0], [0, 1, 0], [1, -1]) == -1
    assert k.euler_form([0, 1, 0], [1, 0, 0], [1, -1]) == 0
