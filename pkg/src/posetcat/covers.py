"""Invariants defined by open covers with homotopy lifts, in free and pointed
flavours. Sectional category, LS category, topological complexity and
homotopic distance are all special cases of the lifting category.

Admissibility of an open set (a lift exists up to homotopy on it) is
inherited by smaller opens, so only maximal admissible opens matter; the
invariant is then a minimum set cover by those opens, minus one.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .budget import DEFAULT_BUDGET, Budget
from .errors import BudgetExceeded, InputError, NotPathConnected
from .homotopy import find_lift, is_homotopic
from .maps import (ContinuousMap, diagonal, glue_fences, glue_maps, identity,
                   point_inclusion, whisker)
from .setcover import min_set_cover
from .space import (FiniteSpace, OpenSet, bits, connected_components, is_path_connected,
                    popcount, product_with_projections, subspace)

FINITE, INFINITE, BUDGET = "finite", "infinite", "budget-exceeded"


@dataclass
class OpenCover:
    """A categorical cover with one certificate per part.

    ``kind == "lift"``: fences run from f|U to iota o lift.
    ``kind == "distance"``: fences run from f|U to g|U and ``lifts`` is empty.
    """

    target: FiniteSpace
    parts: list
    fences: list
    lifts: list
    source: ContinuousMap
    other: ContinuousMap
    kind: str = "lift"
    pointed: bool = False

    def __len__(self):
        return len(self.parts)

    def to_json(self) -> dict:
        from .space import _label_to_json
        return {
            "kind": self.kind,
            "pointed": self.pointed,
            "space": self.target.to_json(),
            "f": self.source.to_json(),
            ("iota" if self.kind == "lift" else "g"): self.other.to_json(),
            "parts": [[_label_to_json(p) for p in u.points] for u in self.parts],
            "lifts": [[[_label_to_json(p), _label_to_json(l.codomain.points[v])]
                       for p, v in zip(l.domain.points, l.values)] for l in self.lifts],
            "fences": [fc.to_json() for fc in self.fences],
        }


@dataclass
class InvariantResult:
    value: int | None
    status: str = FINITE
    certificate: OpenCover | None = None
    exhaustion_proof: dict = field(default_factory=dict)
    name: str = ""

    @property
    def number(self):
        """The value as a number (``math.inf`` when infinite)."""
        if self.status == BUDGET:
            raise BudgetExceeded(self.name or "invariant", self.exhaustion_proof.get("cap"))
        return math.inf if self.status == INFINITE else self.value

    def __repr__(self):
        shown = self.value if self.status == FINITE else self.status
        return f"InvariantResult({self.name}={shown})"

    def to_json(self) -> dict:
        return {
            "invariant": self.name,
            "status": self.status,
            "value": self.value if self.status == FINITE else self.status,
            "exhaustion_proof": self.exhaustion_proof,
            "certificate": None if self.certificate is None else self.certificate.to_json(),
        }


# -- admissibility problems ------------------------------------------

class _Problem:
    kind = "lift"

    def __init__(self, f, other, budget):
        self.f, self.other, self.budget = f, other, budget
        self.X = f.domain
        self.cache = {}
        self.tests = 0

    def admissible(self, mask, pointed):
        key = (mask, pointed)
        if key not in self.cache:
            self.tests += 1
            self.cache[key] = self._test(mask, pointed)
        return self.cache[key]


class _LiftProblem(_Problem):
    def _test(self, mask, pointed):
        _, inc = subspace(self.X, mask)
        return find_lift(self.f.after(inc), self.other, pointed, self.budget)


class _DistanceProblem(_Problem):
    kind = "distance"

    def _test(self, mask, pointed):
        _, inc = subspace(self.X, mask)
        v = is_homotopic(self.f.after(inc), self.other.after(inc), pointed, budget=self.budget)
        if v.homotopic is None:
            raise BudgetExceeded("homotopy decision", self.budget.map_cap)
        return (None, v.certificate) if v.homotopic else None


def _maximal_admissible(problem, X, top, base, pointed, budget):
    """Maximal admissible opens V with base <= V <= top, largest first.

    Walks down from ``top`` level by level, removing one maximal point at a
    time. Any open not below an already found admissible open lies below a
    non-admissible open of the previous level, so only those are expanded.
    """
    found = []
    level = {top}
    visited = 0
    while level:
        nxt = set()
        for V in sorted(level, reverse=True):
            if any(V & ~M == 0 for M in found):
                continue
            visited += 1
            if visited > budget.open_cap:
                raise BudgetExceeded("admissible open search", budget.open_cap)
            if problem.admissible(V, pointed) is not None:
                found.append(V)
                continue
            for x in bits(V & ~base):
                if X.up[x] & V == 1 << x:
                    W = V & ~(1 << x)
                    if W:
                        nxt.add(W)
        level = nxt
    return found, visited


def admissible_opens(f: ContinuousMap, iota: ContinuousMap, pointed=False,
                     budget: Budget = DEFAULT_BUDGET):
    """Maximal opens U of dom(f) admitting l: U -> A with iota o l ~ f|U.

    Returns a list of ``(OpenSet, lift, fence)``. In the pointed flavour
    only opens containing the basepoint are considered.
    """
    _check_lift_args(f, iota, pointed)
    X = f.domain
    prob = _LiftProblem(f, iota, budget)
    base = X.down[X.base_index] if pointed else 0
    found, _ = _maximal_admissible(prob, X, X.full, base, pointed, budget)
    out = []
    for V in found:
        lift, fence = prob.admissible(V, pointed)
        out.append((OpenSet(X, V), lift, fence))
    return out


def _check_lift_args(f, iota, pointed):
    if f.codomain != iota.codomain:
        raise InputError("f and iota must share their codomain")
    if pointed and not (f.is_pointed() and iota.is_pointed()):
        raise InputError("pointed flavour needs pointed maps")


# -- the common solver ---------------------------------------------------

def _solve(problem, name, pointed, budget):
    X = problem.X
    comps = connected_components(X)
    b = X.base_index if pointed else None
    per_comp = []
    stats = {"components": len(comps), "admissibility_tests": 0, "opens_visited": 0,
             "cover_nodes": 0, "maximal_opens": 0}
    try:
        for C in comps:
            ptd = pointed and C >> b & 1 == 1
            base = X.down[b] if ptd else 0
            # finiteness: every point must lie in some admissible open
            for x in bits(C):
                if problem.admissible(X.down[x] | base, ptd) is None:
                    stats["admissibility_tests"] = problem.tests
                    stats["uncoverable_point"] = X.points[x]
                    return InvariantResult(None, INFINITE, None, stats, name)
            found, visited = _maximal_admissible(problem, X, C, base, ptd, budget)
            chosen, cs = min_set_cover(C, found, budget.cover_node_cap)
            stats["opens_visited"] += visited
            stats["cover_nodes"] += cs["nodes"]
            stats["maximal_opens"] += len(found)
            per_comp.append((C, ptd, [found[k] for k in chosen]))
    except BudgetExceeded as exc:
        stats["admissibility_tests"] = problem.tests
        stats["cap"] = exc.cap
        stats["reason"] = str(exc)
        return InvariantResult(None, BUDGET, None, stats, name)
    stats["admissibility_tests"] = problem.tests
    k = max(len(parts) for _, _, parts in per_comp)
    stats["refuted_below"] = k
    cover = _assemble(problem, per_comp, k, pointed)
    return InvariantResult(k - 1, FINITE, cover, stats, name)


def _assemble(problem, per_comp, k, pointed):
    """Glue per-component covers into k parts of X with glued certificates."""
    X = problem.X
    parts, lifts, fences = [], [], []
    for j in range(k):
        pieces = []
        for C, ptd, cparts in per_comp:
            pieces.append((cparts[j] if j < len(cparts) else cparts[0], ptd))
        mask = 0
        for V, _ in pieces:
            mask |= V
        U, _ = subspace(X, mask)
        certs = [problem.admissible(V, ptd) for V, ptd in pieces]
        fences.append(glue_fences(U, [c[1] for c in certs]))
        if problem.kind == "lift":
            lifts.append(glue_maps(U, [c[0] for c in certs]))
        parts.append(OpenSet(X, mask))
    return OpenCover(X, parts, fences, lifts, problem.f, problem.other, problem.kind, pointed)


# -- public invariants ---------------------------------------------------

def liftcat_op(f: ContinuousMap, iota: ContinuousMap, pointed=False,
               budget: Budget = DEFAULT_BUDGET) -> InvariantResult:
    """Least n such that dom(f) has an (n+1)-part open cover with homotopy
    lifts of f through iota on every part."""
    _check_lift_args(f, iota, pointed)
    return _solve(_LiftProblem(f, iota, budget), "liftcat", pointed, budget)


def secat_op(iota: ContinuousMap, pointed=False, budget: Budget = DEFAULT_BUDGET):
    res = liftcat_op(identity(iota.codomain), iota, pointed, budget)
    res.name = "secat"
    return res


def homotopic_distance(f: ContinuousMap, g: ContinuousMap, pointed=False,
                       budget: Budget = DEFAULT_BUDGET) -> InvariantResult:
    """Least n with an (n+1)-part open cover on whose parts f and g are homotopic."""
    if f.domain != g.domain or f.codomain != g.codomain:
        raise InputError("f and g must share domain and codomain")
    if pointed and not (f.is_pointed() and g.is_pointed()):
        raise InputError("pointed flavour needs pointed maps")
    return _solve(_DistanceProblem(f, g, budget), "distance", pointed, budget)


def homotopic_distance_direct(f: ContinuousMap, g: ContinuousMap, pointed=False,
                              budget: Budget = DEFAULT_BUDGET) -> InvariantResult:
    """The same distance as a lifting category of (f, g) through the diagonal."""
    if f.domain != g.domain or f.codomain != g.codomain:
        raise InputError("f and g must share domain and codomain")
    w = whisker(f, g)
    res = liftcat_op(w, diagonal(f.codomain, w.codomain), pointed, budget)
    res.name = "distance-direct"
    return res


def topological_complexity(Y: FiniteSpace, pointed=False,
                           budget: Budget = DEFAULT_BUDGET) -> InvariantResult:
    res = secat_op(diagonal(Y), pointed, budget)
    res.name = "tc"
    return res


def tc_via_distance(Y: FiniteSpace, pointed=False, budget: Budget = DEFAULT_BUDGET):
    _, pr1, pr2 = product_with_projections(Y, Y)
    res = homotopic_distance(pr1, pr2, pointed, budget)
    res.name = "tc-distance"
    return res


def ls_category(f: ContinuousMap, pointed=False, budget: Budget = DEFAULT_BUDGET):
    """Lifting category of f through a constant map * -> Y (the basepoint)."""
    Y = f.codomain
    if not pointed and not is_path_connected(Y):
        raise NotPathConnected("free LS category needs a path-connected codomain")
    res = liftcat_op(f, point_inclusion(Y), pointed, budget)
    res.name = "cat"
    return res


def ls_category_space(X: FiniteSpace, pointed=False, budget: Budget = DEFAULT_BUDGET):
    return ls_category(identity(X), pointed, budget)


def boolean_secat(iota: ContinuousMap, pointed=False, budget: Budget = DEFAULT_BUDGET):
    """0 if iota has a homotopy section, else 1. Returns ``(value, section, fence)``."""
    Y = iota.codomain
    found = find_lift(identity(Y), iota, pointed, budget)
    if found is None:
        return 1, None, None
    return 0, found[0], found[1]
