"""Exact minimum set cover over bitmask sets by branch and bound."""
from .errors import BudgetExceeded
from .space import bits, popcount


def greedy_cover(universe, sets):
    chosen = []
    left = universe
    if left and not sets:
        return None
    while left:
        best = max(range(len(sets)), key=lambda k: (popcount(sets[k] & left), -k))
        if not sets[best] & left:
            return None
        chosen.append(best)
        left &= ~sets[best]
    return chosen


def min_set_cover(universe, sets, node_cap=5_000_000):
    """Return ``(indices, stats)`` for a smallest cover of ``universe``.

    Branches on the uncovered point contained in the fewest sets; prunes with
    the bound chosen + ceil(uncovered / largest set). ``stats['nodes']`` counts
    search nodes, the evidence that no smaller cover exists. Returns
    ``(None, stats)`` when the sets do not cover the universe.
    """
    sets = [s & universe for s in sets]
    stats = {"candidates": len(sets), "nodes": 0}
    if not universe:
        return [], stats
    seed = greedy_cover(universe, sets)
    if seed is None:
        return None, stats
    best = list(seed)
    stats["greedy"] = len(seed)
    containing = {x: [k for k, s in enumerate(sets) if s >> x & 1] for x in bits(universe)}
    for x in containing:
        containing[x].sort(key=lambda k: (-popcount(sets[k]), k))
    maxsize = max(popcount(s) for s in sets)

    def rec(left, chosen):
        nonlocal best
        stats["nodes"] += 1
        if stats["nodes"] > node_cap:
            raise BudgetExceeded("set cover search", node_cap)
        if not left:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        need = -(-popcount(left) // maxsize)
        if len(chosen) + need >= len(best):
            return
        pivot = min(bits(left), key=lambda x: (len(containing[x]), x))
        for k in containing[pivot]:
            chosen.append(k)
            rec(left & ~sets[k], chosen)
            chosen.pop()

    rec(universe, [])
    stats["optimum"] = len(best)
    return sorted(best), stats
