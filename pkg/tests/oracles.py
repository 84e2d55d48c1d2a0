"""Brute-force reference implementations for tiny spaces.

Spaces here are (points, le) with ``le`` a set of pairs, built from scratch
out of FiniteSpace.to_json output so no engine logic is reused.
"""
import itertools
import math


def order(space_json):
    pts = [tuple(p) if isinstance(p, list) else p for p in space_json["points"]]
    le = {(p, p) for p in pts}
    le |= {(tuple(a) if isinstance(a, list) else a, tuple(b) if isinstance(b, list) else b)
           for a, b in space_json["leq"]}
    while True:
        extra = {(a, d) for (a, b) in le for (c, d) in le if b == c} - le
        if not extra:
            return pts, le
        le |= extra


def opens(pts, le):
    out = []
    for r in range(len(pts) + 1):
        for sub in itertools.combinations(pts, r):
            s = set(sub)
            if all(a in s for (a, b) in le if b in s):
                out.append(frozenset(s))
    return out


def maps(dom, cod, dom_pts=None):
    dpts, dle = dom
    cpts, cle = cod
    dpts = dom_pts if dom_pts is not None else dpts
    out = []
    for vals in itertools.product(cpts, repeat=len(dpts)):
        m = dict(zip(dpts, vals))
        if all((m[a], m[b]) in cle for (a, b) in dle if a in m and b in m):
            out.append(m)
    return out


def comparable(m1, m2, cle):
    return all((m1[p], m2[p]) in cle for p in m1) or all((m2[p], m1[p]) in cle for p in m1)


def homotopy_classes(dom, cod, dom_pts=None):
    ms = maps(dom, cod, dom_pts)
    parent = list(range(len(ms)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in itertools.combinations(range(len(ms)), 2):
        if comparable(ms[i], ms[j], cod[1]):
            parent[find(i)] = find(j)
    return ms, [find(i) for i in range(len(ms))]


def homotopic(dom, cod, f, g, dom_pts=None):
    ms, cls = homotopy_classes(dom, cod, dom_pts)
    key = lambda m: tuple(sorted(m.items(), key=repr))
    idx = {key(m): c for m, c in zip(ms, cls)}
    return idx[key(f)] == idx[key(g)]


def liftcat(X, Y, A, f, iota):
    """Least n with n+1 opens each admitting l: U -> A, f|U ~ iota o l."""
    pts = X[0]
    adm = []
    for U in opens(*X):
        if not U:
            continue
        sub = sorted(U, key=repr)
        ms, cls = homotopy_classes(X, Y, sub)
        key = lambda m: tuple(sorted(m.items(), key=repr))
        idx = {key(m): c for m, c in zip(ms, cls)}
        target = idx[key({p: f[p] for p in sub})]
        if any(idx[key({p: iota[l[p]] for p in sub})] == target for l in maps(X, A, sub)):
            adm.append(U)
    for k in range(1, len(pts) + 1):
        for combo in itertools.combinations(adm, k):
            if set().union(*combo) == set(pts):
                return k - 1
    return math.inf


def as_dict(m):
    """ContinuousMap -> label dict via its JSON form."""
    d = m.to_json()
    fix = lambda x: tuple(x) if isinstance(x, list) else x
    return {fix(a): fix(b) for a, b in d["values"]}
