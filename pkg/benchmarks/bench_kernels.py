"""Compare the compiled kernels with the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

from posetcat import kernels
from posetcat.catalog import chain, diamond, pseudocircle, pseudocircle_squared
from posetcat.homotopy import _allowed_masks, kernel_tables
from posetcat.maps import constant
from posetcat.space import product


def enum_case(X, Y):
    args = (X.linext, X.lower_covers, _allowed_masks(X, Y, False), Y.up, 10 ** 8)
    return lambda force: len(kernels.enumerate_maps(*args, force_python=force))


def component_case(X, Y):
    tables = kernel_tables(X, Y)
    start = constant(X, Y).values
    return lambda force: kernels.component_search(*tables, start, None, 0, 10 ** 8,
                                                  force_python=force)[1]


def cases():
    S, S2 = pseudocircle(), pseudocircle_squared()
    yield "enumerate S -> SxS", enum_case(S, S2)
    yield "enumerate diamond x C3 -> S", enum_case(product(diamond(), chain(3)), S)
    yield "enumerate SxS -> S", enum_case(S2, S)
    yield "component of const S -> SxS", component_case(S, S2)
    yield "component of const C3xC2 -> S", component_case(product(chain(3), chain(2)), S)
    yield "enumerate S x C3 -> SxS", enum_case(product(S, chain(3)), S2)
    yield "component of const S x C3 -> SxS", component_case(product(S, chain(3)), S2)


def best(fn, force, repeat):
    times, out = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(force)
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.BACKEND != "cython":
        print("compiled kernels unavailable; build with `python3 setup.py build_ext --inplace`")
        return
    print(f"{'case':34} {'result':>9} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, fn in cases():
        tp, rp = best(fn, True, args.repeat)
        tc, rc = best(fn, False, args.repeat)
        assert rp == rc, f"backends disagree on {name}"
        print(f"{name:34} {rc:>9} {tp:>10.4f} {tc:>10.4f} {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
