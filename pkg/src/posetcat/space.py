"""Finite T0 spaces as posets.

Convention: ``x <= y`` iff x lies in every open set containing y. Open sets
are therefore down-sets and continuous maps are order-preserving functions. Point sets are handled as int bitmasks indexed by
point position.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator

from .budget import DEFAULT_BUDGET, Budget
from .errors import BudgetExceeded, InputError


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class FiniteSpace:
    """An immutable finite T0 space.

    ``down[i]`` / ``up[i]`` are bitmasks of the points below / above point i
    (both inclusive). Build instances through :func:`build_space`,
    :func:`product` or :func:`subspace`; the constructor trusts its input.
    """

    __slots__ = (
        "points", "index", "down", "up", "basepoint",
        "lower_covers", "upper_covers", "linext", "quotient_of", "_key", "factors",
    )

    def __init__(self, points, down, basepoint=None):
        self.points = tuple(points)
        n = len(self.points)
        self.index = {p: i for i, p in enumerate(self.points)}
        self.down = tuple(down)
        up = [0] * n
        for i in range(n):
            for j in bits(self.down[i]):
                up[j] |= 1 << i
        self.up = tuple(up)
        self.basepoint = basepoint
        self.factors = None  # (X, Y) when built by product(); lets searches split
        lower, upper = [], []
        for i in range(n):
            strict = self.down[i] & ~(1 << i)
            lower.append(tuple(j for j in bits(strict) if self.up[j] & strict == 1 << j))
            strict = self.up[i] & ~(1 << i)
            upper.append(tuple(j for j in bits(strict) if self.down[j] & strict == 1 << j))
        self.lower_covers = tuple(lower)
        self.upper_covers = tuple(upper)
        self.linext = tuple(sorted(range(n), key=lambda i: (popcount(self.down[i]), i)))
        self.quotient_of = None
        self._key = (self.points, self.down, basepoint)

    # -- basic queries -------------------------------------------------
    def __len__(self):
        return len(self.points)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def full(self) -> int:
        return (1 << len(self.points)) - 1

    @property
    def base_index(self):
        return None if self.basepoint is None else self.index[self.basepoint]

    def leq(self, i: int, j: int) -> bool:
        return bool(self.down[j] >> i & 1)

    def leq_points(self, p, q) -> bool:
        return self.leq(self.index[p], self.index[q])

    def mask_of(self, labels: Iterable[Hashable]) -> int:
        m = 0
        for p in labels:
            try:
                m |= 1 << self.index[p]
            except KeyError:
                raise InputError(f"{p!r} is not a point of the space") from None
        return m

    def labels_of(self, mask: int) -> list:
        return [self.points[i] for i in bits(mask)]

    def down_closure(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= self.down[i]
        return out

    def up_closure(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= self.up[i]
        return out

    def is_open(self, mask: int) -> bool:
        return self.down_closure(mask) == mask

    def is_closed(self, mask: int) -> bool:
        return self.up_closure(mask) == mask

    def relation_pairs(self):
        """Cover relation as label pairs (x, y) with x < y."""
        return [(self.points[j], self.points[i])
                for i in range(self.n) for j in self.lower_covers[i]]

    def with_basepoint(self, p) -> "FiniteSpace":
        if p is not None and p not in self.index:
            raise InputError(f"basepoint {p!r} is not a point of the space")
        return FiniteSpace(self.points, self.down, p)

    def __eq__(self, other):
        return isinstance(other, FiniteSpace) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        bp = "" if self.basepoint is None else f", basepoint={self.basepoint!r}"
        return f"FiniteSpace({list(self.points)!r}{bp})"

    # -- JSON ----------------------------------------------------------
    def to_json(self) -> dict:
        d = {
            "points": [_label_to_json(p) for p in self.points],
            "leq": [[_label_to_json(a), _label_to_json(b)] for a, b in self.relation_pairs()],
        }
        if self.basepoint is not None:
            d["basepoint"] = _label_to_json(self.basepoint)
        return d

    @classmethod
    def from_json(cls, data) -> "FiniteSpace":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            points = [_label_from_json(p) for p in data["points"]]
            pairs = [(_label_from_json(a), _label_from_json(b)) for a, b in data.get("leq", [])]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed space JSON: {exc}") from None
        bp = data.get("basepoint")
        return build_space(points, pairs, None if bp is None else _label_from_json(bp))


def _label_to_json(p):
    if isinstance(p, tuple):
        return [_label_to_json(q) for q in p]
    return p


def _label_from_json(p):
    if isinstance(p, list):
        return tuple(_label_from_json(q) for q in p)
    return p


@dataclass(frozen=True)
class OpenSet:
    space: FiniteSpace
    members: int

    @property
    def points(self):
        return self.space.labels_of(self.members)

    def __len__(self):
        return popcount(self.members)

    def __contains__(self, p):
        return bool(self.members >> self.space.index[p] & 1)

    def __repr__(self):
        return f"OpenSet({self.points!r})"


# -- construction ------------------------------------------------------

def build_space(points, pairs=(), basepoint=None) -> FiniteSpace:
    """Build the T0 quotient of the preorder generated by ``pairs``.

    ``pairs`` are (x, y) meaning x <= y. When points are identified, the
    returned space carries ``quotient_of``: a dict sending every input label
    to its representative.
    """
    points = list(points)
    if not points:
        raise InputError("spaces are non-empty")
    idx = {}
    for i, p in enumerate(points):
        if p in idx:
            raise InputError(f"duplicate point identifier {p!r}")
        idx[p] = i
    if basepoint is not None and basepoint not in idx:
        raise InputError(f"basepoint {basepoint!r} is not among the points")
    n = len(points)
    down = [1 << i for i in range(n)]
    for a, b in pairs:
        if a not in idx or b not in idx:
            raise InputError(f"relation ({a!r}, {b!r}) mentions an unknown point")
        down[idx[b]] |= 1 << idx[a]
    # transitive closure (Warshall on bitsets)
    for k in range(n):
        bk = 1 << k
        dk = down[k]
        for i in range(n):
            if down[i] & bk:
                down[i] |= dk
    # T0 quotient: classes of mutually comparable points
    rep = list(range(n))
    for i in range(n):
        for j in range(i):
            if rep[j] == j and down[i] >> j & 1 and down[j] >> i & 1:
                rep[i] = j
                break
    if all(rep[i] == i for i in range(n)):
        return FiniteSpace(points, down, basepoint)
    keep = [i for i in range(n) if rep[i] == i]
    pos = {i: k for k, i in enumerate(keep)}
    qdown = []
    for i in keep:
        m = 0
        for j in bits(down[i]):
            m |= 1 << pos[rep[j]]
        qdown.append(m)
    bp = None if basepoint is None else points[rep[idx[basepoint]]]
    space = FiniteSpace([points[i] for i in keep], qdown, bp)
    space.quotient_of = {points[i]: points[rep[i]] for i in range(n)}
    return space


def singleton(label="*") -> FiniteSpace:
    return FiniteSpace([label], [1], label)


def product(X: FiniteSpace, Y: FiniteSpace) -> FiniteSpace:
    """Componentwise order on X x Y; point (i, j) sits at index i*|Y| + j."""
    m = Y.n
    points = [(x, y) for x in X.points for y in Y.points]
    down = []
    for i in range(X.n):
        for j in range(m):
            mask = 0
            dj = Y.down[j]
            for a in bits(X.down[i]):
                mask |= dj << (a * m)
            down.append(mask)
    bp = None
    if X.basepoint is not None and Y.basepoint is not None:
        bp = (X.basepoint, Y.basepoint)
    P = FiniteSpace(points, down, bp)
    P.factors = (X, Y)
    return P


def product_with_projections(X: FiniteSpace, Y: FiniteSpace):
    from .maps import ContinuousMap

    P = product(X, Y)
    m = Y.n
    pr1 = ContinuousMap(P, X, tuple(k // m for k in range(P.n)), check=False)
    pr2 = ContinuousMap(P, Y, tuple(k % m for k in range(P.n)), check=False)
    return P, pr1, pr2


def power(Y: FiniteSpace, k: int, budget: Budget = DEFAULT_BUDGET) -> FiniteSpace:
    """Y^k with points flattened to k-tuples."""
    if k < 1:
        raise InputError("power needs k >= 1")
    if Y.n ** k > budget.power_cap:
        raise BudgetExceeded(f"power space |Y|^{k}", budget.power_cap)
    P = Y
    for _ in range(k - 1):
        P = product(P, Y)
    if k == 1:
        return FiniteSpace([(p,) for p in Y.points], Y.down,
                           None if Y.basepoint is None else (Y.basepoint,))
    flat = [_flatten(p, k) for p in P.points]
    bp = None if P.basepoint is None else _flatten(P.basepoint, k)
    return FiniteSpace(flat, P.down, bp)


def _flatten(p, k):
    out = []
    for _ in range(k - 1):
        p, last = p
        out.append(last)
    out.append(p)
    return tuple(reversed(out))


def subspace(X: FiniteSpace, members):
    """Induced order on ``members`` (labels or a bitmask) plus the inclusion."""
    from .maps import ContinuousMap

    mask = members if isinstance(members, int) else X.mask_of(members)
    if mask == 0:
        raise InputError("spaces are non-empty")
    keep = list(bits(mask))
    pos = {i: k for k, i in enumerate(keep)}
    down = []
    for i in keep:
        m = 0
        for j in bits(X.down[i] & mask):
            m |= 1 << pos[j]
        down.append(m)
    bp = X.basepoint if X.basepoint is not None and X.index[X.basepoint] in pos else None
    S = FiniteSpace([X.points[i] for i in keep], down, bp)
    return S, ContinuousMap(S, X, tuple(keep), check=False)


def disjoint_union(X: FiniteSpace, Y: FiniteSpace, tags=(0, 1)) -> FiniteSpace:
    points = [(tags[0], p) for p in X.points] + [(tags[1], p) for p in Y.points]
    down = list(X.down) + [d << X.n for d in Y.down]
    return FiniteSpace(points, down)


# -- opens -------------------------------------------------------------

def down_sets(X: FiniteSpace, must_contain: int = 0, cap: int | None = None) -> Iterator[int]:
    """Every down-set as a bitmask, in a fixed order (decisions along a linear
    extension, 'in' before 'out')."""
    order = X.linext
    lower = X.lower_covers
    required = X.down_closure(must_contain)
    count = 0
    n = len(order)

    def rec(k, mask):
        nonlocal count
        if k == n:
            count += 1
            if cap is not None and count > cap:
                raise BudgetExceeded("open-set enumeration", cap)
            yield mask
            return
        x = order[k]
        bit = 1 << x
        if all(mask >> y & 1 for y in lower[x]):
            yield from rec(k + 1, mask | bit)
        if not required & bit:
            yield from rec(k + 1, mask)

    yield from rec(0, 0)


def enumerate_opens(X: FiniteSpace, must_contain=None, budget: Budget = DEFAULT_BUDGET):
    """Yield every open set of X once; optionally only those containing a point."""
    req = 0 if must_contain is None else X.mask_of([must_contain])
    for m in down_sets(X, req, budget.open_cap):
        yield OpenSet(X, m)


# -- point-set properties ---------------------------------------------

def connected_components(X: FiniteSpace) -> list[int]:
    """Components of the comparability graph, as bitmasks, ordered by least index."""
    seen = 0
    comps = []
    for s in range(X.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for i in bits(frontier):
                nxt |= X.down[i] | X.up[i]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append(comp)
    return comps


def is_path_connected(X: FiniteSpace) -> bool:
    return len(connected_components(X)) == 1


def is_normal(X: FiniteSpace):
    """Return ``(normal, witness)``.

    Disjoint closed sets F, G have disjoint open neighbourhoods iff their
    down-closures are disjoint. A failing pair always contains a failing pair
    of principal up-sets, so checking point pairs is exhaustive; the witness
    is that pair of closed sets as label lists, or None.
    """
    for i in range(X.n):
        for j in range(i + 1, X.n):
            if X.up[i] & X.up[j]:
                continue
            if X.down[i] & X.down[j]:
                return False, (X.labels_of(X.up[i]), X.labels_of(X.up[j]))
    return True, None


def is_normal_exhaustive(X: FiniteSpace, budget: Budget = DEFAULT_BUDGET):
    """Literal check over all pairs of disjoint nonempty up-sets (capped)."""
    full = X.full
    closed = [full & ~m for m in down_sets(X, cap=budget.open_cap)]
    closed = [c for c in closed if c]
    pairs = len(closed) * (len(closed) - 1) // 2
    if pairs > budget.normal_pair_cap:
        raise BudgetExceeded("normality up-set pairs", budget.normal_pair_cap)
    for a in range(len(closed)):
        F = closed[a]
        dF = X.down_closure(F)
        for b in range(a + 1, len(closed)):
            G = closed[b]
            if F & G:
                continue
            if dF & X.down_closure(G):
                return False, (X.labels_of(F), X.labels_of(G))
    return True, None


# -- cores -------------------------------------------------------------

@dataclass(frozen=True)
class CoreReduction:
    original: FiniteSpace
    core: FiniteSpace
    inclusion: "object"  # ContinuousMap core -> original
    retraction: "object"  # ContinuousMap original -> core
    removal_trace: tuple
    fence: "object"  # Fence id_original ~ inclusion o retraction

    @property
    def trivial(self) -> bool:
        return not self.removal_trace


def beat_point(X: FiniteSpace, alive: int, keep: int = 0):
    """First beat point of the subspace ``alive`` (ascending index), or None.

    Returns (point, target) where target is the max of the strict down-set or
    the min of the strict up-set inside ``alive``.
    """
    for x in bits(alive & ~keep):
        below = X.down[x] & alive & ~(1 << x)
        if below:
            tops = [y for y in bits(below) if X.up[y] & below == 1 << y]
            if len(tops) == 1:
                return x, tops[0]
        above = X.up[x] & alive & ~(1 << x)
        if above:
            bottoms = [y for y in bits(above) if X.down[y] & above == 1 << y]
            if len(bottoms) == 1:
                return x, bottoms[0]
    return None


_core_cache: dict = {}


def core(X: FiniteSpace, keep=None) -> CoreReduction:
    """Remove beat points (never ``keep``) until none remain.

    The removal order is by ascending point index, so the result is
    deterministic. With ``keep`` set to the basepoint every map and fence in
    the record is pointed.
    """
    key = (X, keep)
    hit = _core_cache.get(key)
    if hit is not None:
        return hit
    from .maps import ContinuousMap, Fence

    keep_mask = 0 if keep is None else X.mask_of([keep])
    alive = X.full
    rho = list(range(X.n))  # current retraction as a self-map of X
    steps = [tuple(rho)]
    trace = []
    while True:
        found = beat_point(X, alive, keep_mask)
        if found is None:
            break
        x, target = found
        alive &= ~(1 << x)
        rho = [target if v == x else v for v in rho]
        steps.append(tuple(rho))
        trace.append(X.points[x])
    C, inc = subspace(X, alive)
    pos = {i: k for k, i in enumerate(inc.values)}
    ret = ContinuousMap(X, C, tuple(pos[v] for v in rho), check=False)
    fence = Fence([ContinuousMap(X, X, s, check=False) for s in steps])
    red = CoreReduction(X, C, inc, ret, tuple(trace), fence)
    if len(_core_cache) > 4096:
        _core_cache.clear()
    _core_cache[key] = red
    return red
