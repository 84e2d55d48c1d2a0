# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in _pykernels.py.

Maps are packed into uint64 words (``bits_per_value`` bits per domain point),
so these apply when codomain size <= 64 and n * bits_per_value <= 64. The
dispatcher in __init__ falls back to Python otherwise.
"""
from libc.stdint cimport uint64_t, int64_t
from libcpp.vector cimport vector
from libcpp.unordered_map cimport unordered_map
from libcpp.unordered_set cimport unordered_set

from ..errors import BudgetExceeded


cdef inline int _ctz(uint64_t x) nogil:
    return __builtin_ctzll(x)

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


def enumerate_maps(order, lower, allowed, cod_up, cap):
    cdef int n = len(order)
    if n == 0:
        return [()]
    cdef vector[int] ordv
    cdef vector[uint64_t] allow
    cdef vector[uint64_t] up
    cdef vector[vector[int]] low
    cdef int i, k, x
    for i in range(n):
        ordv.push_back(order[i])
        allow.push_back(allowed[i])
        low.push_back(vector[int]())
        for y in lower[i]:
            low[i].push_back(y)
    for v in cod_up:
        up.push_back(v)
    cdef vector[int] vals = vector[int](n, 0)
    cdef vector[uint64_t] cand = vector[uint64_t](n + 1, 0)
    cdef long long limit = cap
    cdef long long count = 0
    cdef uint64_t c, lowbit
    out = []
    # iterative backtracking: cand[k] holds the untried values for position k
    k = 0
    x = ordv[0]
    c = allow[x]
    for y in low[x]:
        c &= up[vals[y]]
    cand[0] = c
    while k >= 0:
        if cand[k] == 0:
            k -= 1
            continue
        lowbit = cand[k] & (~cand[k] + 1)
        cand[k] ^= lowbit
        x = ordv[k]
        vals[x] = _ctz(lowbit)
        if k == n - 1:
            count += 1
            if count > limit:
                raise BudgetExceeded("map enumeration", cap)
            out.append(tuple([vals[i] for i in range(n)]))
            continue
        k += 1
        x = ordv[k]
        c = allow[x]
        for y in low[x]:
            c &= up[vals[y]]
        cand[k] = c
    return out


def component_search(dom_lower, dom_upper, cod_lower, cod_upper, cod_down,
                     start, targets, frozen, cap):
    cdef int n = len(start)
    cdef int m = len(cod_down)
    cdef int b = 1
    while (1 << b) < m:
        b += 1
    cdef uint64_t vmask = (<uint64_t>1 << b) - 1
    cdef vector[vector[int]] dl, du, cl, cu
    cdef vector[uint64_t] cd
    cdef int i, x, v, w, u, j
    for i in range(n):
        dl.push_back(vector[int]())
        du.push_back(vector[int]())
        for y in dom_lower[i]:
            dl[i].push_back(y)
        for y in dom_upper[i]:
            du[i].push_back(y)
    for i in range(m):
        cl.push_back(vector[int]())
        cu.push_back(vector[int]())
        for y in cod_lower[i]:
            cl[i].push_back(y)
        for y in cod_upper[i]:
            cu[i].push_back(y)
        cd.push_back(cod_down[i])
    cdef vector[int] movable
    for i in range(n):
        if not (frozen >> i) & 1:
            movable.push_back(i)

    cdef uint64_t s = 0
    for i in range(n):
        s |= (<uint64_t>start[i]) << (i * b)
    cdef unordered_set[uint64_t] tset
    cdef bint have_targets = targets is not None
    if have_targets:
        for t in targets:
            tset.insert(_pack(t, b))
        if tset.count(s):
            return [tuple(start)], 1

    cdef unordered_map[uint64_t, uint64_t] parent
    cdef vector[uint64_t] queue
    cdef size_t head = 0
    cdef long long limit = cap
    cdef uint64_t f, g, hit = 0
    cdef bint found = False, ok
    cdef vector[int] vals = vector[int](n, 0)
    parent[s] = s
    queue.push_back(s)
    while head < queue.size() and not found:
        f = queue[head]
        head += 1
        for i in range(n):
            vals[i] = <int>((f >> (i * b)) & vmask)
        for j in range(<int>movable.size()):
            x = movable[j]
            v = vals[x]
            for w in cu[v]:
                ok = True
                for u in du[x]:
                    if not ((cd[vals[u]] >> w) & 1):
                        ok = False
                        break
                if not ok:
                    continue
                g = (f & ~(vmask << (x * b))) | ((<uint64_t>w) << (x * b))
                if parent.count(g):
                    continue
                parent[g] = f
                if <long long>parent.size() > limit:
                    raise BudgetExceeded("homotopy component search", cap)
                if have_targets and tset.count(g):
                    hit = g
                    found = True
                    break
                queue.push_back(g)
            if found:
                break
            for w in cl[v]:
                ok = True
                for u in dl[x]:
                    if not ((cd[w] >> vals[u]) & 1):
                        ok = False
                        break
                if not ok:
                    continue
                g = (f & ~(vmask << (x * b))) | ((<uint64_t>w) << (x * b))
                if parent.count(g):
                    continue
                parent[g] = f
                if <long long>parent.size() > limit:
                    raise BudgetExceeded("homotopy component search", cap)
                if have_targets and tset.count(g):
                    hit = g
                    found = True
                    break
                queue.push_back(g)
            if found:
                break
    cdef long long visited = parent.size()
    if found:
        path = []
        g = hit
        while True:
            path.append(_unpack(g, n, b, vmask))
            if g == s:
                break
            g = parent[g]
        path.reverse()
        return path, visited
    if not have_targets:
        return [_unpack(q, n, b, vmask) for q in queue], visited
    return None, visited


cdef uint64_t _pack(t, int b):
    cdef uint64_t out = 0
    cdef int i
    for i in range(len(t)):
        out |= (<uint64_t>t[i]) << (i * b)
    return out


cdef tuple _unpack(uint64_t f, int n, int b, uint64_t vmask):
    return tuple([<int>((f >> (i * b)) & vmask) for i in range(n)])
