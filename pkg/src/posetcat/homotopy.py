"""Deciding homotopy of maps between finite spaces.

Two maps are homotopic iff they are joined by a fence of pointwise comparable
maps, and a comparable pair can always be refined into moves that change one
point's value along one cover relation. Searches therefore walk that move
graph. Domain and codomain are first reduced to their cores: f ~ g iff
r o f o i ~ r o g o i on the cores, and fences found there are lifted back.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels
from .budget import DEFAULT_BUDGET, Budget
from .errors import BudgetExceeded, InputError
from .maps import ContinuousMap, Fence, glue_fences, glue_maps, identity
from .space import CoreReduction, FiniteSpace, connected_components, core, subspace


@dataclass
class HomotopyVerdict:
    homotopic: bool | None
    certificate: Fence | None = None
    search_stats: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        if self.homotopic is None:
            return "budget-exceeded"
        return "homotopic" if self.homotopic else "not-homotopic"

    def __bool__(self):
        if self.homotopic is None:
            raise BudgetExceeded("homotopy decision", self.search_stats.get("cap"))
        return self.homotopic

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "fence": None if self.certificate is None else self.certificate.to_json(),
            "search_stats": self.search_stats,
        }


def _trivial_reduction(X: FiniteSpace) -> CoreReduction:
    ident = identity(X)
    return CoreReduction(X, X, ident, ident, (), Fence([ident]))


def _reduce(X, keep, use_core):
    return core(X, keep=keep) if use_core else _trivial_reduction(X)


def kernel_tables(X: FiniteSpace, Y: FiniteSpace):
    return (X.lower_covers, X.upper_covers, Y.lower_covers, Y.upper_covers, Y.down)


class _Reduced:
    """Search context for maps X -> Y carried out on core(X) -> core(Y)."""

    def __init__(self, X, Y, pointed, use_core=True):
        if pointed and (X.basepoint is None or Y.basepoint is None):
            raise InputError("pointed mode needs pointed domain and codomain")
        self.X, self.Y, self.pointed = X, Y, pointed
        self.cx = _reduce(X, X.basepoint if pointed else None, use_core)
        self.cy = _reduce(Y, Y.basepoint if pointed else None, use_core)
        Xc = self.cx.core
        self.frozen = (1 << Xc.base_index) if pointed else 0
        self.tables = kernel_tables(Xc, self.cy.core)
        self._ix = self.cx.inclusion.values
        self._rx = self.cx.retraction.values
        self._iy = self.cy.inclusion.values
        self._ry = self.cy.retraction.values

    def down(self, F: ContinuousMap) -> tuple:
        """r_Y o F o i_X as a value tuple on the cores."""
        ry, fv = self._ry, F.values
        return tuple(ry[fv[i]] for i in self._ix)

    def up(self, p) -> ContinuousMap:
        """i_Y o p o r_X as a map X -> Y."""
        iy = self._iy
        return ContinuousMap(self.X, self.Y, tuple(iy[p[j]] for j in self._rx), check=False)

    def search(self, start, targets, budget):
        return kernels.component_search(*self.tables, start, targets, self.frozen, budget.map_cap)

    def _to_core(self, F: ContinuousMap) -> Fence:
        """Fence F ~ i_Y r_Y F i_X r_X."""
        a = self.cx.fence.post(F)
        b = self.cy.fence.pre(a.end)
        return a.then(b)

    def lift_fence(self, path, F, G) -> Fence:
        mid = Fence([self.up(p) for p in path])
        return self._to_core(F).then(mid).then(self._to_core(G).reversed())


def _split_map(F: ContinuousMap):
    """(pr1 o F, pr2 o F) for F into a space built by product()."""
    Y1, Y2 = F.codomain.factors
    m = Y2.n
    return (ContinuousMap(F.domain, Y1, tuple(v // m for v in F.values), check=False),
            ContinuousMap(F.domain, Y2, tuple(v % m for v in F.values), check=False))


def _pair(Y, a: ContinuousMap, b: ContinuousMap) -> ContinuousMap:
    m = b.codomain.n
    return ContinuousMap(a.domain, Y, tuple(x * m + y for x, y in zip(a.values, b.values)),
                         check=False)


def _pair_fence(Y, fence1: Fence, fence2: Fence) -> Fence:
    """Move the first coordinate along fence1, then the second along fence2."""
    steps = [_pair(Y, s, fence2.start) for s in fence1.steps]
    steps += [_pair(Y, fence1.end, s) for s in fence2.steps[1:]]
    return Fence(steps)


def _find_lift_in_product(F, iota, pointed, budget):
    """Lift search into Y1 x Y2: explore the two factor classes of F once, then
    test candidate lifts coordinatewise."""
    U, Y, A = F.domain, F.codomain, iota.domain
    F1, F2 = _split_map(F)
    ctx1 = _Reduced(U, Y.factors[0], pointed)
    ctx2 = _Reduced(U, Y.factors[1], pointed)
    comp1 = set(ctx1.search(ctx1.down(F1), None, budget)[0])
    comp2 = set(ctx2.search(ctx2.down(F2), None, budget)[0])
    ca = core(A, keep=A.basepoint if pointed else None)
    ia, rx = ca.inclusion.values, ctx1.cx.retraction.values
    # core value of pr_k o iota at each core point of A
    m = Y.factors[1].n
    t1 = [ctx1._ry[iota.values[a] // m] for a in ia]
    t2 = [ctx2._ry[iota.values[a] % m] for a in ia]
    seen = set()
    for lv in map_tuples(ctx1.cx.core, ca.core, pointed, budget):
        d1 = tuple(t1[a] for a in lv)
        d2 = tuple(t2[a] for a in lv)
        if (d1, d2) in seen:
            continue
        seen.add((d1, d2))
        if d1 in comp1 and d2 in comp2:
            L = ContinuousMap(U, A, tuple(ia[lv[j]] for j in rx), check=False)
            G1, G2 = _split_map(iota.after(L))
            v1 = is_homotopic(F1, G1, pointed, budget=budget)
            v2 = is_homotopic(F2, G2, pointed, budget=budget)
            if v1.homotopic is None or v2.homotopic is None:
                raise BudgetExceeded("homotopy decision", budget.map_cap)
            return L, _pair_fence(Y, v1.certificate, v2.certificate)
    return None


def _component_inclusions(X):
    """Inclusions of the connected components, or None if X is connected."""
    comps = connected_components(X)
    if len(comps) < 2:
        return None
    return [subspace(X, c)[1] for c in comps]


def _check_pair(f, g, pointed):
    if f.domain != g.domain or f.codomain != g.codomain:
        raise InputError("maps must share domain and codomain")
    if pointed and not (f.is_pointed() and g.is_pointed()):
        raise InputError("pointed mode requires pointed maps")


def is_homotopic(f: ContinuousMap, g: ContinuousMap, pointed=False, use_core=True,
                 budget: Budget = DEFAULT_BUDGET) -> HomotopyVerdict:
    _check_pair(f, g, pointed)
    if f.comparable(g):
        return HomotopyVerdict(True, Fence([f, g]), {"maps_visited": 0, "comparable": True})
    pieces = _component_inclusions(f.domain)
    if pieces:
        # maps on a disjoint union are homotopic iff they are on every piece
        fences, stats = [], {"maps_visited": 0, "domain_components": len(pieces)}
        for j in pieces:
            ptd = pointed and j.domain.basepoint is not None
            v = is_homotopic(f.after(j), g.after(j), ptd, use_core, budget)
            if v.homotopic is None:
                return v
            stats["maps_visited"] += v.search_stats.get("maps_visited", 0)
            if not v.homotopic:
                return HomotopyVerdict(False, None, stats)
            fences.append(v.certificate)
        return HomotopyVerdict(True, glue_fences(f.domain, fences), stats)
    if f.codomain.factors is not None:
        # homotopies into a product are pairs of homotopies
        (f1, f2), (g1, g2) = _split_map(f), _split_map(g)
        v1 = is_homotopic(f1, g1, pointed, use_core, budget)
        if not v1.homotopic:
            return v1
        v2 = is_homotopic(f2, g2, pointed, use_core, budget)
        if not v2.homotopic:
            return v2
        stats = {"maps_visited": v1.search_stats.get("maps_visited", 0)
                 + v2.search_stats.get("maps_visited", 0), "factors": 2}
        return HomotopyVerdict(True, _pair_fence(f.codomain, v1.certificate, v2.certificate),
                               stats)
    ctx = _Reduced(f.domain, f.codomain, pointed, use_core)
    start, goal = ctx.down(f), ctx.down(g)
    try:
        path, visited = ctx.search(start, {goal}, budget)
    except BudgetExceeded:
        return HomotopyVerdict(None, None, {"cap": budget.map_cap})
    stats = {"maps_visited": visited, "core_domain": ctx.cx.core.n, "core_codomain": ctx.cy.core.n}
    if path is None:
        return HomotopyVerdict(False, None, stats)
    return HomotopyVerdict(True, ctx.lift_fence(path, f, g), stats)


def is_nullhomotopic(f: ContinuousMap, pointed=False, use_core=True,
                     budget: Budget = DEFAULT_BUDGET) -> HomotopyVerdict:
    """Homotopic to some constant (pointed: to the basepoint constant)."""
    X, Y = f.domain, f.codomain
    if pointed and not f.is_pointed():
        raise InputError("pointed mode requires a pointed map")
    if Y.factors is not None:
        f1, f2 = _split_map(f)
        v1 = is_nullhomotopic(f1, pointed, use_core, budget)
        if not v1.homotopic:
            return v1
        v2 = is_nullhomotopic(f2, pointed, use_core, budget)
        if not v2.homotopic:
            return v2
        stats = {"maps_visited": v1.search_stats.get("maps_visited", 0)
                 + v2.search_stats.get("maps_visited", 0), "factors": 2}
        return HomotopyVerdict(True, _pair_fence(Y, v1.certificate, v2.certificate), stats)
    ctx = _Reduced(X, Y, pointed, use_core)
    n = ctx.cx.core.n
    if pointed:
        cands = [ctx.cy.core.base_index]
    else:
        cands = range(ctx.cy.core.n)
    targets = {(c,) * n: c for c in cands}
    try:
        path, visited = ctx.search(ctx.down(f), targets, budget)
    except BudgetExceeded:
        return HomotopyVerdict(None, None, {"cap": budget.map_cap})
    stats = {"maps_visited": visited}
    if path is None:
        return HomotopyVerdict(False, None, stats)
    c = ctx._iy[targets[path[-1]]]
    const = ContinuousMap(X, Y, (c,) * X.n, check=False)
    return HomotopyVerdict(True, ctx.lift_fence(path, f, const), stats)


def _allowed_masks(X, Y, pointed):
    full = Y.full
    allowed = [full] * X.n
    if pointed:
        if X.basepoint is None or Y.basepoint is None:
            raise InputError("pointed mode needs pointed domain and codomain")
        allowed[X.base_index] = 1 << Y.base_index
    return allowed


def map_tuples(X, Y, pointed=False, budget: Budget = DEFAULT_BUDGET):
    return kernels.enumerate_maps(X.linext, X.lower_covers, _allowed_masks(X, Y, pointed),
                                  Y.up, budget.map_cap)


def enumerate_maps(X: FiniteSpace, Y: FiniteSpace, pointed=False,
                   budget: Budget = DEFAULT_BUDGET):
    """All continuous (pointed) maps X -> Y, in a fixed order."""
    for v in map_tuples(X, Y, pointed, budget):
        yield ContinuousMap(X, Y, v, check=False)


def find_lift(F: ContinuousMap, iota: ContinuousMap, pointed=False,
              budget: Budget = DEFAULT_BUDGET):
    """Search l: dom(F) -> dom(iota) with iota o l ~ F.

    Returns ``(l, fence)`` with the fence running from F to iota o l, or None.
    Candidate lifts range over maps core(dom F) -> core(A); every other lift
    is homotopic to one of these composed with the core retraction.
    """
    U, Y, A = F.domain, F.codomain, iota.domain
    if iota.codomain != Y:
        raise InputError("lift target must share the codomain")
    if pointed and not (F.is_pointed() and iota.is_pointed()):
        raise InputError("pointed mode requires pointed maps")
    pieces = _component_inclusions(U)
    if pieces:
        # lifts on a disjoint union are chosen piece by piece
        lifts, fences = [], []
        for j in pieces:
            found = find_lift(F.after(j), iota, pointed and j.domain.basepoint is not None,
                              budget)
            if found is None:
                return None
            lifts.append(found[0])
            fences.append(found[1])
        return glue_maps(U, lifts), glue_fences(U, fences)
    if Y.factors is not None:
        return _find_lift_in_product(F, iota, pointed, budget)
    ctx = _Reduced(U, Y, pointed)
    ca = core(A, keep=A.basepoint if pointed else None)
    Uc, Ac = ctx.cx.core, ca.core
    ia, iv, ry = ca.inclusion.values, iota.values, ctx._ry
    targets = {}
    for lv in map_tuples(Uc, Ac, pointed, budget):
        t = tuple(ry[iv[ia[a]]] for a in lv)
        targets.setdefault(t, lv)
    path, _ = ctx.search(ctx.down(F), targets, budget)
    if path is None:
        return None
    lv = targets[path[-1]]
    L = ContinuousMap(U, A, tuple(ia[lv[j]] for j in ctx._rx), check=False)
    G = iota.after(L)
    return L, ctx.lift_fence(path, F, G)


def homotopy_classes(X: FiniteSpace, Y: FiniteSpace, pointed=False,
                     budget: Budget = DEFAULT_BUDGET):
    """Partition of all (pointed) maps X -> Y into homotopy classes.

    Full enumeration plus union-find over single cover moves; no core
    reduction, so this serves as an oracle for :func:`is_homotopic`.
    """
    maps = map_tuples(X, Y, pointed, budget)
    pos = {v: k for k, v in enumerate(maps)}
    uf = UnionFind(len(maps))
    frozen = (1 << X.base_index) if pointed else 0
    movable = [x for x in range(X.n) if not frozen >> x & 1]
    for v in maps:
        a = pos[v]
        for x in movable:
            for w in Y.upper_covers[v[x]]:
                g = v[:x] + (w,) + v[x + 1:]
                b = pos.get(g)
                if b is not None:
                    uf.union(a, b)
    groups = {}
    for v in maps:
        groups.setdefault(uf.find(pos[v]), []).append(ContinuousMap(X, Y, v, check=False))
    return list(groups.values())


class UnionFind:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, a):
        parent = self.parent
        root = a
        while parent[root] != root:
            root = parent[root]
        while parent[a] != root:
            parent[a], a = root, parent[a]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra
