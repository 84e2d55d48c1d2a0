"""Continuous maps between finite spaces and fences of pointwise-comparable maps."""
from __future__ import annotations

from .errors import InputError


class ContinuousMap:
    """An order-preserving map; ``values[i]`` is the codomain index of f(point i)."""

    __slots__ = ("domain", "codomain", "values")

    def __init__(self, domain, codomain, values, check=True):
        self.domain = domain
        self.codomain = codomain
        self.values = tuple(values)
        if check:
            if len(self.values) != domain.n:
                raise InputError("map must assign a value to every domain point")
            for v in self.values:
                if not 0 <= v < codomain.n:
                    raise InputError(f"value index {v} out of range")
            for x in range(domain.n):
                for y in domain.lower_covers[x]:
                    if not codomain.leq(self.values[y], self.values[x]):
                        raise InputError(
                            f"map is not order-preserving at "
                            f"{domain.points[y]!r} <= {domain.points[x]!r}")

    @classmethod
    def from_dict(cls, domain, codomain, table: dict) -> "ContinuousMap":
        try:
            vals = [codomain.index[table[p]] for p in domain.points]
        except KeyError as exc:
            raise InputError(f"map table missing or invalid entry: {exc}") from None
        return cls(domain, codomain, vals)

    def __call__(self, p):
        return self.codomain.points[self.values[self.domain.index[p]]]

    def as_dict(self) -> dict:
        return {p: self.codomain.points[v] for p, v in zip(self.domain.points, self.values)}

    def __eq__(self, other):
        return (isinstance(other, ContinuousMap) and self.values == other.values
                and self.domain == other.domain and self.codomain == other.codomain)

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"ContinuousMap({self.as_dict()!r})"

    def after(self, inner: "ContinuousMap") -> "ContinuousMap":
        """self o inner."""
        if inner.codomain != self.domain:
            raise InputError("cannot compose: codomain/domain mismatch")
        v = self.values
        return ContinuousMap(inner.domain, self.codomain, tuple(v[i] for i in inner.values), check=False)

    def leq(self, other: "ContinuousMap") -> bool:
        c = self.codomain
        return all(c.leq(a, b) for a, b in zip(self.values, other.values))

    def comparable(self, other: "ContinuousMap") -> bool:
        return self.leq(other) or other.leq(self)

    def is_pointed(self) -> bool:
        X, Y = self.domain, self.codomain
        if X.basepoint is None or Y.basepoint is None:
            return False
        return self.values[X.base_index] == Y.base_index

    def is_constant(self) -> bool:
        return len(set(self.values)) == 1

    def restrict(self, inclusion: "ContinuousMap") -> "ContinuousMap":
        return self.after(inclusion)

    def to_json(self) -> dict:
        from .space import _label_to_json
        return {
            "domain": self.domain.to_json(),
            "codomain": self.codomain.to_json(),
            "values": [[_label_to_json(p), _label_to_json(self.codomain.points[v])]
                       for p, v in zip(self.domain.points, self.values)],
        }

    @classmethod
    def from_json(cls, data) -> "ContinuousMap":
        import json
        from .space import FiniteSpace, _label_from_json
        if isinstance(data, str):
            data = json.loads(data)
        try:
            X = FiniteSpace.from_json(data["domain"])
            Y = FiniteSpace.from_json(data["codomain"])
            raw = data["values"]
            pairs = raw.items() if isinstance(raw, dict) else raw
            table = {_label_from_json(a): _label_from_json(b) for a, b in pairs}
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed map JSON: {exc}") from None
        if X.quotient_of:
            table = {X.quotient_of.get(k, k): v for k, v in table.items()}
        if Y.quotient_of:
            table = {k: Y.quotient_of.get(v, v) for k, v in table.items()}
        return cls.from_dict(X, Y, table)


def identity(X) -> ContinuousMap:
    return ContinuousMap(X, X, tuple(range(X.n)), check=False)


def constant(X, Y, y=None) -> ContinuousMap:
    """Constant map at label ``y`` (default: Y's basepoint, else its first point)."""
    if y is None:
        y = Y.basepoint if Y.basepoint is not None else Y.points[0]
    return ContinuousMap(X, Y, (Y.index[y],) * X.n, check=False)


def point_inclusion(Y, y=None) -> ContinuousMap:
    """The constant map * -> Y at y; * is pointed so this is pointed when y is Y's basepoint."""
    from .space import singleton
    if y is None:
        y = Y.basepoint if Y.basepoint is not None else Y.points[0]
    return ContinuousMap(singleton(), Y, (Y.index[y],), check=False)


def whisker(f: ContinuousMap, g: ContinuousMap, P=None) -> ContinuousMap:
    """(f, g): X -> Y x Y'."""
    from .space import product
    if f.domain != g.domain:
        raise InputError("whisker map needs a common domain")
    if P is None:
        P = product(f.codomain, g.codomain)
    m = g.codomain.n
    return ContinuousMap(f.domain, P, tuple(a * m + b for a, b in zip(f.values, g.values)), check=False)


def product_map(f: ContinuousMap, g: ContinuousMap, dom=None, cod=None) -> ContinuousMap:
    """f x g: X x X' -> Y x Y'."""
    from .space import product
    dom = dom or product(f.domain, g.domain)
    cod = cod or product(f.codomain, g.codomain)
    m = g.codomain.n
    vals = tuple(a * m + b for a in f.values for b in g.values)
    return ContinuousMap(dom, cod, vals, check=False)


def diagonal(Y, P=None) -> ContinuousMap:
    return whisker(identity(Y), identity(Y), P)


def swap(X, Y, dom=None, cod=None) -> ContinuousMap:
    """X x Y -> Y x X."""
    from .space import product
    dom = dom or product(X, Y)
    cod = cod or product(Y, X)
    m, n = Y.n, X.n
    return ContinuousMap(dom, cod, tuple((k % m) * n + k // m for k in range(dom.n)), check=False)


class Fence:
    """Consecutive steps pointwise comparable; certifies steps[0] ~ steps[-1]."""

    __slots__ = ("steps",)

    def __init__(self, steps):
        steps = list(steps)
        if not steps:
            raise InputError("a fence needs at least one map")
        compact = [steps[0]]
        for s in steps[1:]:
            if s.values != compact[-1].values:
                compact.append(s)
        self.steps = tuple(compact)

    def __len__(self):
        return len(self.steps)

    @property
    def start(self):
        return self.steps[0]

    @property
    def end(self):
        return self.steps[-1]

    def reversed(self) -> "Fence":
        return Fence(reversed(self.steps))

    def then(self, other: "Fence") -> "Fence":
        if self.end.values != other.start.values:
            raise InputError("fences do not meet")
        return Fence(self.steps + other.steps)

    def post(self, h: ContinuousMap) -> "Fence":
        """h o fence."""
        return Fence([h.after(s) for s in self.steps])

    def pre(self, k: ContinuousMap) -> "Fence":
        """fence o k."""
        return Fence([s.after(k) for s in self.steps])

    def is_valid(self, pointed=False) -> bool:
        first = self.steps[0]
        for s in self.steps:
            if s.domain != first.domain or s.codomain != first.codomain:
                return False
            if pointed and not s.is_pointed():
                return False
        return all(a.comparable(b) for a, b in zip(self.steps, self.steps[1:]))

    def to_json(self) -> list:
        from .space import _label_to_json
        return [[[_label_to_json(p), _label_to_json(s.codomain.points[v])]
                 for p, v in zip(s.domain.points, s.values)] for s in self.steps]


def glue_maps(U, pieces) -> ContinuousMap:
    """Map on U assembled from maps on disjoint pieces covering U."""
    cod = pieces[0].codomain
    table = {}
    for p in pieces:
        table.update(p.as_dict())
    return ContinuousMap(U, cod, tuple(cod.index[table[x]] for x in U.points), check=False)


def glue_fences(U, fences) -> Fence:
    """Fence on U assembled from fences on disjoint pieces covering U."""
    if len(fences) == 1 and fences[0].start.domain == U:
        return fences[0]
    # Run the pieces one after another: aligning them step by step could pair
    # an upward move on one component with a downward move on another.
    stage = [fc.steps[0] for fc in fences]
    steps = [glue_maps(U, stage)]
    for k, fc in enumerate(fences):
        for s in fc.steps[1:]:
            stage[k] = s
            steps.append(glue_maps(U, stage))
    return Fence(steps)
