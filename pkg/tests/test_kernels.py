import pytest
from hypothesis import given
from hypothesis import strategies as st

from posetcat import kernels
from posetcat.homotopy import _allowed_masks, kernel_tables

from strategies import maps_between, spaces

needs_c = pytest.mark.skipif(kernels.BACKEND != "cython", reason="compiled kernels not built")


def _enum(X, Y, force):
    return kernels.enumerate_maps(X.linext, X.lower_covers, _allowed_masks(X, Y, False),
                                  Y.up, 10 ** 6, force_python=force)


@needs_c
@given(spaces(5), spaces(5))
def test_enumeration_backends_agree(X, Y):
    assert sorted(_enum(X, Y, False)) == sorted(_enum(X, Y, True))


@needs_c
@given(st.data())
def test_component_backends_agree(data):
    X, Y = data.draw(spaces(5)), data.draw(spaces(5))
    f = data.draw(maps_between(X, Y))
    g = data.draw(maps_between(X, Y))
    tables = kernel_tables(X, Y)
    comp_c, n_c = kernels.component_search(*tables, f.values, None, 0, 10 ** 6)
    comp_p, n_p = kernels.component_search(*tables, f.values, None, 0, 10 ** 6,
                                           force_python=True)
    assert sorted(comp_c) == sorted(comp_p) and n_c == n_p
    path_c, _ = kernels.component_search(*tables, f.values, {g.values}, 0, 10 ** 6)
    path_p, _ = kernels.component_search(*tables, f.values, {g.values}, 0, 10 ** 6,
                                         force_python=True)
    assert (path_c is None) == (path_p is None)
    if path_c is not None:
        assert path_c[0] == f.values and path_c[-1] == g.values


def test_backend_is_reported():
    assert kernels.BACKEND in ("cython", "python")


def test_python_fallback_env(tmp_path):
    import subprocess
    import sys
    out = subprocess.run([sys.executable, "-c", "import posetcat.kernels as k; print(k.BACKEND)"],
                         env={"POSETCAT_PURE_PYTHON": "1", "PATH": ""}, capture_output=True,
                         text=True, check=True)
    assert out.stdout.strip() == "python"
