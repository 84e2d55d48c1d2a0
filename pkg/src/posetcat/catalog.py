"""Named spaces and maps shared by the command line and the test harness."""
import re

from .errors import InputError
from .maps import ContinuousMap, constant, diagonal, identity
from .space import build_space, product, product_with_projections, singleton, subspace


def chain(n: int):
    pts = list(range(n))
    return build_space(pts, [(i, i + 1) for i in range(n - 1)], 0)


def discrete(n: int):
    return build_space(list(range(n)), [], 0)


def pseudocircle():
    pts = ["a1", "a2", "b1", "b2"]
    rel = [("b1", "a1"), ("b2", "a1"), ("b1", "a2"), ("b2", "a2")]
    return build_space(pts, rel, "b1")


def pseudocircle_squared():
    S = pseudocircle()
    return product(S, S)


def pseudocircle_wedge():
    """Two pseudocircles glued at b1."""
    pts = ["a1", "a2", "b1", "b2", "c1", "c2", "d2"]
    rel = [("b1", "a1"), ("b2", "a1"), ("b1", "a2"), ("b2", "a2"),
           ("b1", "c1"), ("d2", "c1"), ("b1", "c2"), ("d2", "c2")]
    return build_space(pts, rel, "b1")


def diamond():
    return build_space([0, 1, 2, 3], [(0, 1), (0, 2), (1, 3), (2, 3)], 0)


def pseudocircle_inclusion(i: int) -> ContinuousMap:
    """Inclusion of U_i = {b1, b2, a_i} into the pseudocircle."""
    S = pseudocircle()
    return subspace(S, ["b1", "b2", f"a{i}"])[1]


SPACES = {
    "singleton": singleton,
    "pseudocircle": pseudocircle,
    "pseudocircle-squared": pseudocircle_squared,
    "pseudocircle-wedge": pseudocircle_wedge,
    "diamond": diamond,
}


def space(name: str):
    m = re.fullmatch(r"(chain|discrete)-(\d+)", name)
    if m:
        k = int(m.group(2))
        if k < 1:
            raise InputError("catalog sizes start at 1")
        return chain(k) if m.group(1) == "chain" else discrete(k)
    try:
        return SPACES[name]()
    except KeyError:
        raise InputError(f"unknown catalog space {name!r}") from None


def space_names():
    return sorted(SPACES) + ["chain-3", "discrete-2"]


def map_(name: str) -> ContinuousMap:
    """Catalog maps: ``id:<space>``, ``const:<space>``, ``diagonal:<space>``,
    ``pr1:<space>`` / ``pr2:<space>`` (projections of <space> x <space>),
    ``U1`` / ``U2``."""
    if name in ("U1", "U2"):
        return pseudocircle_inclusion(int(name[1]))
    kind, _, rest = name.partition(":")
    if not rest:
        raise InputError(f"unknown catalog map {name!r}")
    Y = space(rest)
    if kind == "id":
        return identity(Y)
    if kind == "const":
        return constant(Y, Y)
    if kind == "diagonal":
        return diagonal(Y)
    if kind in ("pr1", "pr2"):
        _, p1, p2 = product_with_projections(Y, Y)
        return p1 if kind == "pr1" else p2
    raise InputError(f"unknown catalog map {name!r}")


def map_names():
    return ["U1", "U2", "id:pseudocircle", "const:pseudocircle", "diagonal:pseudocircle",
            "pr1:pseudocircle", "pr2:pseudocircle", "id:chain-3", "const:diamond"]
