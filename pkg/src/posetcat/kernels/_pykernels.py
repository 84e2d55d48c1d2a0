"""Pure-Python search kernels. Always available; the compiled module mirrors
these signatures exactly."""
from collections import deque

from ..errors import BudgetExceeded


def enumerate_maps(order, lower, allowed, cod_up, cap):
    """All order-preserving assignments as tuples.

    ``order`` is a linear extension of the domain, ``lower[i]`` the lower covers
    of domain point i, ``allowed[i]`` a bitmask of admissible codomain values for
    i, ``cod_up[v]`` the up-set bitmask of codomain point v.
    """
    n = len(order)
    vals = [0] * n
    out = []

    def rec(k):
        if k == n:
            if len(out) >= cap:
                raise BudgetExceeded("map enumeration", cap)
            out.append(tuple(vals))
            return
        x = order[k]
        cand = allowed[x]
        for y in lower[x]:
            cand &= cod_up[vals[y]]
        while cand:
            low = cand & -cand
            vals[x] = low.bit_length() - 1
            rec(k + 1)
            cand ^= low

    if n == 0:
        return [()]
    rec(0)
    return out


def _neighbours(f, movable, dom_lower, dom_upper, cod_lower, cod_upper, cod_down):
    for x in movable:
        v = f[x]
        for w in cod_upper[v]:
            if all(cod_down[f[u]] >> w & 1 for u in dom_upper[x]):
                yield f[:x] + (w,) + f[x + 1:]
        for w in cod_lower[v]:
            dw = cod_down[w]
            if all(dw >> f[l] & 1 for l in dom_lower[x]):
                yield f[:x] + (w,) + f[x + 1:]


def component_search(dom_lower, dom_upper, cod_lower, cod_upper, cod_down,
                     start, targets, frozen, cap):
    """Breadth-first search from ``start`` through single-point cover moves.

    Two maps are homotopic iff they are joined by such moves. Returns
    ``(path, visited)`` where ``path`` runs from start to the first target met
    (None when the component holds no target); with ``targets`` None the whole
    component is explored and ``path`` is the list of its maps.
    """
    start = tuple(start)
    if targets is not None and start in targets:
        return [start], 1
    movable = [x for x in range(len(start)) if not frozen >> x & 1]
    parent = {start: None}
    queue = deque([start])
    while queue:
        f = queue.popleft()
        for g in _neighbours(f, movable, dom_lower, dom_upper, cod_lower, cod_upper, cod_down):
            if g in parent:
                continue
            parent[g] = f
            if len(parent) > cap:
                raise BudgetExceeded("homotopy component search", cap)
            if targets is not None and g in targets:
                path = [g]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                path.reverse()
                return path, len(parent)
            queue.append(g)
    if targets is None:
        return list(parent), len(parent)
    return None, len(parent)
