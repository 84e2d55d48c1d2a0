"""Fat wedges, mapping cylinders and the Whitehead-style lifting category.

For a closed inclusion A <= Y the n-th fat wedge is the subspace of Y^(n+1)
of tuples with some coordinate in A. A map into Y^(n+1) is a tuple of maps
into Y and homotopies in a product are componentwise, so a lift
l: X -> T^n with t_n o l ~ diag o f is the same as maps h_0..h_n, each
homotopic to f, whose preimages h_i^-1(A) cover X. ``liftcat_wg`` solves
that set cover; ``liftcat_wg_literal`` searches maps into T^n directly and is
kept as a slower cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .budget import DEFAULT_BUDGET, Budget
from .covers import BUDGET, FINITE, INFINITE, InvariantResult
from .errors import BudgetExceeded, InputError
from .homotopy import enumerate_maps, is_homotopic, kernel_tables
from .maps import ContinuousMap, Fence
from .setcover import min_set_cover
from .space import FiniteSpace, _label_to_json, bits, power, subspace

EXCEEDS = "exceeds-op-bound"


@dataclass(frozen=True)
class MappingCylinder:
    source_map: ContinuousMap
    space: FiniteSpace
    mu: ContinuousMap
    j: ContinuousMap
    r: ContinuousMap
    rel_fence: Fence


@dataclass(frozen=True)
class FatWedge:
    base: ContinuousMap
    level: int
    space: FiniteSpace
    t: ContinuousMap


@dataclass
class WGWitness:
    """Maps h_i ~ f (one per coordinate) whose A-preimages cover X."""

    level: int
    maps: list
    fences: list
    subset: int  # mask of A inside the codomain
    source: ContinuousMap | None = None

    def to_json(self) -> dict:
        d = {
            "kind": "whitehead",
            "level": self.level,
            "maps": [m.to_json()["values"] for m in self.maps],
            "fences": [fc.to_json() for fc in self.fences],
        }
        if self.source is not None:
            Y = self.source.codomain
            d["f"] = self.source.to_json()
            d["subset"] = [_label_to_json(Y.points[i]) for i in bits(self.subset)]
        return d


def mapping_cylinder(iota: ContinuousMap) -> MappingCylinder:
    """A + Y ordered by y <= a iff y <= iota(a); the copy of A is closed."""
    A, Y = iota.domain, iota.codomain
    na = A.n
    points = [("A", a) for a in A.points] + [("Y", y) for y in Y.points]
    down = []
    for i in range(na):
        down.append(A.down[i] | (Y.down[iota.values[i]] << na))
    for k in range(Y.n):
        down.append(Y.down[k] << na)
    bp = ("Y", Y.basepoint) if Y.basepoint is not None else None
    M = FiniteSpace(points, down, bp)
    mu = ContinuousMap(A, M, tuple(range(na)), check=False)
    j = ContinuousMap(Y, M, tuple(na + k for k in range(Y.n)), check=False)
    r = ContinuousMap(M, Y, tuple(iota.values) + tuple(range(Y.n)), check=False)
    fence = Fence([j.after(r), ContinuousMap(M, M, tuple(range(M.n)), check=False)])
    return MappingCylinder(iota, M, mu, j, r, fence)


def inclusion_image(iota: ContinuousMap):
    """Mask of iota(A) if iota is a subspace inclusion (order embedding), else None."""
    A, Y = iota.domain, iota.codomain
    if len(set(iota.values)) != A.n:
        return None
    v = iota.values
    for i in range(A.n):
        for k in range(A.n):
            if A.leq(i, k) != Y.leq(v[i], v[k]):
                return None
    mask = 0
    for x in v:
        mask |= 1 << x
    return mask


def fat_wedge(iota: ContinuousMap, n: int, budget: Budget = DEFAULT_BUDGET) -> FatWedge:
    if n < 0:
        raise InputError("fat wedge level must be >= 0")
    image = inclusion_image(iota)
    if image is None:
        raise InputError("fat_wedge needs a subspace inclusion; use mapping_cylinder first")
    Y = iota.codomain
    if n == 0:
        return FatWedge(iota, 0, iota.domain, iota)
    P = power(Y, n + 1, budget)
    names = Y.points
    in_a = {names[i] for i in bits(image)}
    members = [p for p in P.points if any(c in in_a for c in p)]
    T, t = subspace(P, members)
    return FatWedge(iota, n, T, t)


def _closed_replacement(f, iota):
    """(f', iota', A-mask) with iota' the inclusion of a closed subspace."""
    image = inclusion_image(iota)
    if image is not None and iota.codomain.is_closed(image):
        return f, iota, image
    cyl = mapping_cylinder(iota)
    return cyl.j.after(f), cyl.mu, (1 << iota.domain.n) - 1


def liftcat_wg(f: ContinuousMap, iota: ContinuousMap, pointed=False,
               budget: Budget = DEFAULT_BUDGET) -> InvariantResult:
    if f.codomain != iota.codomain:
        raise InputError("f and iota must share their codomain")
    if pointed and not (f.is_pointed() and iota.is_pointed()):
        raise InputError("pointed flavour needs pointed maps")
    f2, iota2, amask = _closed_replacement(f, iota)
    X, Y = f2.domain, f2.codomain
    stats = {"replaced_by_cylinder": iota2 is not iota}
    frozen = (1 << X.base_index) if pointed else 0
    try:
        comp, visited = kernels.component_search(*kernel_tables(X, Y), f2.values, None,
                                                 frozen, budget.map_cap)
        stats["component_size"] = visited
        pre = {}
        for h in comp:
            m = 0
            for x in range(X.n):
                if amask >> h[x] & 1:
                    m |= 1 << x
            if m and m not in pre:
                pre[m] = h
        sets = _maximal_sets(list(pre))
        chosen, cs = min_set_cover(X.full, sets, budget.cover_node_cap)
    except BudgetExceeded as exc:
        stats["cap"] = exc.cap
        return InvariantResult(None, BUDGET, None, stats, "liftcat-wg")
    stats["cover_nodes"] = cs["nodes"]
    if chosen is None:
        return InvariantResult(None, INFINITE, None, stats, "liftcat-wg")
    maps, fences = [], []
    for k in chosen:
        h = ContinuousMap(X, Y, pre[sets[k]], check=False)
        v = is_homotopic(f2, h, pointed, budget=budget)
        maps.append(h)
        fences.append(v.certificate)
    n = len(chosen) - 1
    stats["refuted_below"] = len(chosen)
    return InvariantResult(n, FINITE, WGWitness(n, maps, fences, amask, f2), stats, "liftcat-wg")


def _maximal_sets(masks):
    masks = sorted(set(masks), key=lambda m: (-bin(m).count("1"), m))
    out = []
    for m in masks:
        if not any(m & ~o == 0 for o in out):
            out.append(m)
    return out


def liftcat_wg_literal(f: ContinuousMap, iota: ContinuousMap, pointed=False,
                       budget: Budget = DEFAULT_BUDGET) -> InvariantResult:
    """Search n = 0, 1, ..., |X|-1 for l: X -> T^n with t_n o l ~ diag o f.

    Enumerates every map into the fat wedge; only usable on tiny instances.
    Reports ``exceeds-op-bound`` when nothing is found up to |X| - 1.
    """
    from .maps import whisker
    from .space import product

    f2, iota2, _ = _closed_replacement(f, iota)
    X, Y = f2.domain, f2.codomain
    tried = 0
    try:
        for n in range(X.n):
            fw = fat_wedge(iota2, n, budget)
            if n == 0:
                target, P = f2, Y
            else:
                P = fw.t.codomain
                target = ContinuousMap(X, P, tuple(_diag_index(P, Y, v, n + 1) for v in f2.values),
                                       check=False)
            for l in enumerate_maps(X, fw.space, pointed, budget):
                tried += 1
                v = is_homotopic(fw.t.after(l), target, pointed, budget=budget)
                if v.homotopic is None:
                    raise BudgetExceeded("homotopy decision", budget.map_cap)
                if v.homotopic:
                    return InvariantResult(n, FINITE, None, {"maps_tried": tried}, "liftcat-wg")
    except BudgetExceeded as exc:
        return InvariantResult(None, BUDGET, None, {"cap": exc.cap, "maps_tried": tried},
                               "liftcat-wg")
    return InvariantResult(None, EXCEEDS, None, {"maps_tried": tried}, "liftcat-wg")


def _diag_index(P, Y, v, k):
    return P.index[(Y.points[v],) * k]
