"""Independent re-validation of emitted certificates.

Works on the JSON documents alone and deliberately imports nothing from the
rest of the package. The order is re-closed here and maps are rebuilt as
plain dicts before each condition is checked.
"""
from __future__ import annotations


class CertificateError(ValueError):
    pass


def _lab(x):
    return tuple(_lab(y) for y in x) if isinstance(x, list) else x


class _Order:
    def __init__(self, doc):
        self.points = [_lab(p) for p in doc["points"]]
        pts = set(self.points)
        if len(pts) != len(self.points):
            raise CertificateError("duplicate points")
        below = {p: {p} for p in self.points}
        for a, b in doc.get("leq", []):
            a, b = _lab(a), _lab(b)
            if a not in pts or b not in pts:
                raise CertificateError(f"relation mentions unknown point {a!r} or {b!r}")
            below[b].add(a)
        changed = True
        while changed:
            changed = False
            for p in self.points:
                extra = set().union(*(below[q] for q in below[p])) - below[p]
                if extra:
                    below[p] |= extra
                    changed = True
        for p in self.points:
            for q in below[p]:
                if q != p and p in below[q]:
                    raise CertificateError("relation is not antisymmetric")
        self.below = below
        self.base = _lab(doc["basepoint"]) if "basepoint" in doc else None

    def le(self, a, b):
        return a in self.below[b]

    def is_open(self, subset):
        return all(self.below[p] <= subset for p in subset)


def _as_map(pairs, dom_points, cod: _Order, what):
    m = {_lab(a): _lab(b) for a, b in pairs}
    if set(m) != set(dom_points):
        raise CertificateError(f"{what}: not defined exactly on its domain")
    for v in m.values():
        if v not in cod.below:
            raise CertificateError(f"{what}: value {v!r} outside the codomain")
    return m


def _monotone(m, dom: _Order, subset, cod: _Order, what):
    for p in subset:
        for q in dom.below[p] & subset:
            if not cod.le(m[q], m[p]):
                raise CertificateError(f"{what}: not order preserving at {q!r} <= {p!r}")


def _comparable(m1, m2, cod: _Order):
    return all(cod.le(m1[p], m2[p]) for p in m1) or all(cod.le(m2[p], m1[p]) for p in m1)


def _check_fence(steps, dom: _Order, subset, cod: _Order, start, end, pointed, what):
    if not steps:
        raise CertificateError(f"{what}: empty fence")
    maps = [_as_map(s, subset, cod, f"{what} step {k}") for k, s in enumerate(steps)]
    for k, m in enumerate(maps):
        _monotone(m, dom, subset, cod, f"{what} step {k}")
        if pointed and dom.base in subset and m[dom.base] != cod.base:
            raise CertificateError(f"{what} step {k}: basepoint not preserved")
    for k in range(len(maps) - 1):
        if not _comparable(maps[k], maps[k + 1], cod):
            raise CertificateError(f"{what}: steps {k} and {k + 1} are not comparable")
    if maps[0] != {p: start[p] for p in subset}:
        raise CertificateError(f"{what}: fence does not start at the source map")
    if maps[-1] != {p: end[p] for p in subset}:
        raise CertificateError(f"{what}: fence does not end at the target map")


def _load_map(doc, what):
    dom, cod = _Order(doc["domain"]), _Order(doc["codomain"])
    m = _as_map(doc["values"], dom.points, cod, what)
    _monotone(m, dom, set(dom.points), cod, what)
    return dom, cod, m


def verify_fence(f_doc: dict, g_doc: dict, fence: list, pointed=False) -> bool:
    """Check that ``fence`` joins the maps f and g through comparable steps."""
    dom, cod, f = _load_map(f_doc, "f")
    _, _, g = _load_map(g_doc, "g")
    _check_fence(fence, dom, set(dom.points), cod, f, g, pointed, "fence")
    return True


def verify_cover(cert: dict, value=None) -> bool:
    """Check an open-cover certificate; ``value`` is the claimed invariant."""
    X = _Order(cert["space"])
    fdom, Y, f = _load_map(cert["f"], "f")
    if set(fdom.points) != set(X.points):
        raise CertificateError("cover space differs from the domain of f")
    pointed = cert.get("pointed", False)
    parts = [{_lab(p) for p in part} for part in cert["parts"]]
    if value is not None and len(parts) != value + 1:
        raise CertificateError(f"{len(parts)} parts for claimed value {value}")
    if set().union(*parts) != set(X.points):
        raise CertificateError("parts do not cover the space")
    if len(cert["fences"]) != len(parts):
        raise CertificateError("one fence per part is required")
    if cert["kind"] == "lift":
        adom, acod, iota = _load_map(cert["iota"], "iota")
        if set(acod.points) != set(Y.points):
            raise CertificateError("iota and f have different codomains")
        if len(cert["lifts"]) != len(parts):
            raise CertificateError("one lift per part is required")
    elif cert["kind"] == "distance":
        gdom, gcod, g = _load_map(cert["g"], "g")
    else:
        raise CertificateError(f"unknown certificate kind {cert['kind']!r}")
    for i, U in enumerate(parts):
        if not X.is_open(U):
            raise CertificateError(f"part {i} is not open")
        if pointed and X.base not in U:
            raise CertificateError(f"part {i} misses the basepoint")
        if cert["kind"] == "lift":
            lift = _as_map(cert["lifts"][i], U, adom, f"lift {i}")
            _monotone(lift, X, U, adom, f"lift {i}")
            if pointed and lift[X.base] != adom.base:
                raise CertificateError(f"lift {i}: basepoint not preserved")
            end = {p: iota[lift[p]] for p in U}
        else:
            end = g
        _check_fence(cert["fences"][i], X, U, Y, f, end, pointed, f"fence {i}")
    return True


def verify_result(doc: dict) -> bool:
    """Check an invariant report; results without a cover need nothing."""
    if doc.get("status") != "finite" or doc.get("certificate") is None:
        return True
    cert = doc["certificate"]
    if cert.get("kind") == "whitehead":
        return verify_whitehead(cert, doc["value"])
    return verify_cover(cert, doc["value"])


def verify_whitehead(cert: dict, value=None, pointed=False) -> bool:
    """Check maps h_i ~ f whose preimages of the closed subset cover X."""
    X, Y, f = _load_map(cert["f"], "f")
    subset = {_lab(p) for p in cert["subset"]}
    if not subset <= set(Y.points):
        raise CertificateError("subset is not inside the codomain")
    for p in subset:
        if any(q not in subset for q in Y.points if Y.le(p, q)):
            raise CertificateError("subset is not closed")
    if value is not None and len(cert["maps"]) != value + 1:
        raise CertificateError(f"{len(cert['maps'])} maps for claimed value {value}")
    full = set(X.points)
    covered = set()
    for i, (vals, fence) in enumerate(zip(cert["maps"], cert["fences"], strict=True)):
        h = _as_map(vals, X.points, Y, f"map {i}")
        _monotone(h, X, full, Y, f"map {i}")
        _check_fence(fence, X, full, Y, f, h, pointed, f"fence {i}")
        covered |= {p for p in X.points if h[p] in subset}
    if covered != full:
        raise CertificateError("preimages do not cover the space")
    return True
