"""Catalog of executable properties of the invariants.

Each property draws an instance from a seeded RNG (``make``) and checks it
(``check``). Instances are plain dicts of spaces and maps so that failures
can be serialized and replayed.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Callable

from ..catalog import pseudocircle
from ..covers import (homotopic_distance, homotopic_distance_direct, liftcat_op,
                      ls_category, ls_category_space, secat_op, boolean_secat,
                      tc_via_distance, topological_complexity)
from ..homotopy import is_homotopic, is_nullhomotopic, kernel_tables
from .. import kernels
from ..maps import (ContinuousMap, constant, identity, product_map, whisker)
from ..space import FiniteSpace, is_normal, is_path_connected, product
from ..whitehead import liftcat_wg
from .generators import GeneratorConfig, gen_inclusion, gen_map, gen_space


class Skip(Exception):
    """Instance rejected by a filter; drawn again."""


@dataclass(frozen=True)
class Property:
    id: str
    statement: str
    make: Callable
    check: Callable
    normal_filter: bool = False
    max_points: int | None = None


REGISTRY: dict[str, Property] = {}


def prop(id, statement, normal_filter=False, max_points=None):
    def deco(make):
        def register(check):
            REGISTRY[id] = Property(id, statement, make, check, normal_filter, max_points)
            return check
        return register
    return deco


# -- instance helpers --------------------------------------------------

def _space(rng, cfg, connected=False, normal=False, pointed=False, max_points=None):
    c = GeneratorConfig(max_points=max_points or cfg.max_points,
                        edge_density=rng.choice((0.25, 0.45, 0.65)),
                        pointed=pointed, seed=cfg.seed)
    for _ in range(cfg.max_retries):
        X = gen_space(c, rng)
        if connected and not is_path_connected(X):
            continue
        if normal and not _normal_ok(cfg, X):
            continue
        return X
    raise Skip("filters rejected every candidate")


def _normal_ok(cfg, X):
    return not getattr(cfg, "filter_normal", True) or is_normal(X)[0]


def _map(rng, X, Y, pointed=False):
    return gen_map(X, Y, GeneratorConfig(), rng, pointed=pointed)


def _homotopic_variant(rng, f, pointed=False, cap=20_000):
    """A random member of f's homotopy class (searched without cores)."""
    X, Y = f.domain, f.codomain
    frozen = (1 << X.base_index) if pointed else 0
    comp, _ = kernels.component_search(*kernel_tables(X, Y), f.values, None, frozen, cap)
    return ContinuousMap(X, Y, rng.choice(comp), check=False)


def _num(res):
    return res.number


# -- axioms and lifting category --------------------------------------

def _make_iota(rng, cfg):
    Y = _space(rng, cfg)
    A = _space(rng, cfg)
    return {"iota": _map(rng, A, Y)}


@prop("secat-zero-iff-homotopy-section",
      "secat(iota) = 0 iff iota has a homotopy section")
def _mk_s0(rng, cfg):
    return _make_iota(rng, cfg)


@_mk_s0
def _ck_s0(inst, budget):
    s = _num(secat_op(inst["iota"], budget=budget))
    b, _, _ = boolean_secat(inst["iota"], budget=budget)
    return (s == 0) == (b == 0), f"secat={s} boolean={b}"


@prop("secat-monotone-under-factorization",
      "kappa ~ iota o zeta implies secat(iota) <= secat(kappa)")
def _mk_s1(rng, cfg):
    Y, A, B = _space(rng, cfg), _space(rng, cfg), _space(rng, cfg)
    iota, zeta = _map(rng, A, Y), _map(rng, B, A)
    return {"iota": iota, "kappa": _homotopic_variant(rng, iota.after(zeta))}


@_mk_s1
def _ck_s1(inst, budget):
    a = _num(secat_op(inst["iota"], budget=budget))
    b = _num(secat_op(inst["kappa"], budget=budget))
    return a <= b, f"secat(iota)={a} secat(kappa)={b}"


@prop("secat-product-with-identity", "secat(iota x id_Z) = secat(iota)")
def _mk_s2a(rng, cfg):
    d = _make_iota(rng, cfg)
    d["Z"] = _space(rng, cfg)
    return d


@_mk_s2a
def _ck_s2a(inst, budget):
    iota, Z = inst["iota"], inst["Z"]
    a = _num(secat_op(iota, budget=budget))
    b = _num(secat_op(product_map(iota, identity(Z)), budget=budget))
    return a == b, f"secat(iota)={a} secat(iota x id)={b}"


@prop("liftcat-product", "liftcat_{f x kappa}(iota x id_Z) = liftcat_f(iota)", max_points=4)
def _mk_s2b(rng, cfg):
    mp = 4
    X, Y, A = (_space(rng, cfg, max_points=mp) for _ in range(3))
    B, Z = _space(rng, cfg, max_points=mp), _space(rng, cfg, max_points=mp)
    return {"f": _map(rng, X, Y), "iota": _map(rng, A, Y), "kappa": _map(rng, B, Z)}


@_mk_s2b
def _ck_s2b(inst, budget):
    f, iota, kappa = inst["f"], inst["iota"], inst["kappa"]
    a = _num(liftcat_op(f, iota, budget=budget))
    b = _num(liftcat_op(product_map(f, kappa), product_map(iota, identity(kappa.codomain)),
                        budget=budget))
    return a == b, f"liftcat_f={a} liftcat_(f x kappa)={b}"


def _make_lift(rng, cfg):
    X, Y, A = _space(rng, cfg), _space(rng, cfg), _space(rng, cfg)
    return {"f": _map(rng, X, Y), "iota": _map(rng, A, Y)}


@prop("liftcat-homotopy-invariance", "h ~ g and iota ~ kappa give equal liftcat")
def _mk_inv(rng, cfg):
    d = _make_lift(rng, cfg)
    d["f2"] = _homotopic_variant(rng, d["f"])
    d["iota2"] = _homotopic_variant(rng, d["iota"])
    return d


@_mk_inv
def _ck_inv(inst, budget):
    a = _num(liftcat_op(inst["f"], inst["iota"], budget=budget))
    b = _num(liftcat_op(inst["f2"], inst["iota2"], budget=budget))
    return a == b, f"{a} vs {b}"


@prop("liftcat-le-secat", "liftcat_f(iota) <= secat(iota)")
def _mk_le(rng, cfg):
    return _make_lift(rng, cfg)


@_mk_le
def _ck_le(inst, budget):
    a = _num(liftcat_op(inst["f"], inst["iota"], budget=budget))
    b = _num(secat_op(inst["iota"], budget=budget))
    return a <= b, f"liftcat={a} secat={b}"


@prop("liftcat-composition", "liftcat_{f o g}(iota) <= liftcat_f(iota)")
def _mk_comp(rng, cfg):
    d = _make_lift(rng, cfg)
    W = _space(rng, cfg)
    d["g"] = _map(rng, W, d["f"].domain)
    return d


@_mk_comp
def _ck_comp(inst, budget):
    f, g, iota = inst["f"], inst["g"], inst["iota"]
    a = _num(liftcat_op(f.after(g), iota, budget=budget))
    b = _num(liftcat_op(f, iota, budget=budget))
    return a <= b, f"liftcat_(f o g)={a} liftcat_f={b}"


# -- homotopic distance ----------------------------------------------

def _make_pair(rng, cfg, normal=False, connected=False):
    X = _space(rng, cfg, normal=normal, connected=connected)
    Y = _space(rng, cfg)
    return {"f": _map(rng, X, Y), "g": _map(rng, X, Y)}


def _D(f, g, budget):
    return _num(homotopic_distance(f, g, budget=budget))


@prop("distance-separation", "D(f,g) = 0 iff f ~ g")
def _mk_sep(rng, cfg):
    return _make_pair(rng, cfg)


@_mk_sep
def _ck_sep(inst, budget):
    d = _D(inst["f"], inst["g"], budget)
    h = bool(is_homotopic(inst["f"], inst["g"], budget=budget))
    return (d == 0) == h, f"D={d} homotopic={h}"


@prop("distance-symmetry", "D(f,g) = D(g,f)")
def _mk_sym(rng, cfg):
    return _make_pair(rng, cfg)


@_mk_sym
def _ck_sym(inst, budget):
    a, b = _D(inst["f"], inst["g"], budget), _D(inst["g"], inst["f"], budget)
    return a == b, f"{a} vs {b}"


@prop("distance-right-composition", "D(f o h, g o h) <= D(f,g)")
def _mk_rc(rng, cfg):
    d = _make_pair(rng, cfg)
    d["h"] = _map(rng, _space(rng, cfg), d["f"].domain)
    return d


@_mk_rc
def _ck_rc(inst, budget):
    f, g, h = inst["f"], inst["g"], inst["h"]
    a, b = _D(f.after(h), g.after(h), budget), _D(f, g, budget)
    return a <= b, f"D(fh,gh)={a} D(f,g)={b}"


@prop("distance-left-composition", "D(h o f, h o g) <= D(f,g)")
def _mk_lc(rng, cfg):
    d = _make_pair(rng, cfg)
    d["h"] = _map(rng, d["f"].codomain, _space(rng, cfg))
    return d


@_mk_lc
def _ck_lc(inst, budget):
    f, g, h = inst["f"], inst["g"], inst["h"]
    a, b = _D(h.after(f), h.after(g), budget), _D(f, g, budget)
    return a <= b, f"D(hf,hg)={a} D(f,g)={b}"


@prop("distance-product-swap", "D(f x f', g x g') = D(f x g', g x f')")
def _mk_swap(rng, cfg):
    d = _make_pair(rng, cfg)
    e = _make_pair(rng, cfg)
    return {"f": d["f"], "g": d["g"], "f2": e["f"], "g2": e["g"]}


@_mk_swap
def _ck_swap(inst, budget):
    f, g, f2, g2 = inst["f"], inst["g"], inst["f2"], inst["g2"]
    dom = product(f.domain, f2.domain)
    cod = product(f.codomain, f2.codomain)
    a = _D(product_map(f, f2, dom, cod), product_map(g, g2, dom, cod), budget)
    b = _D(product_map(f, g2, dom, cod), product_map(g, f2, dom, cod), budget)
    return a == b, f"{a} vs {b}"


@prop("distance-times-map", "D(f x h, g x h) = D(f,g)")
def _mk_th(rng, cfg):
    d = _make_pair(rng, cfg)
    d["h"] = _map(rng, _space(rng, cfg), _space(rng, cfg))
    return d


@_mk_th
def _ck_th(inst, budget):
    f, g, h = inst["f"], inst["g"], inst["h"]
    a = _D(product_map(f, h), product_map(g, h), budget)
    b = _D(f, g, budget)
    return a == b, f"D(fxh,gxh)={a} D(f,g)={b}"


@prop("distance-as-liftcat", "D(f,g) = liftcat_{(id,f)}((id,g))")
def _mk_al(rng, cfg):
    return _make_pair(rng, cfg)


@_mk_al
def _ck_al(inst, budget):
    f, g = inst["f"], inst["g"]
    ix = identity(f.domain)
    P = product(f.domain, f.codomain)
    a = _num(liftcat_op(whisker(ix, f, P), whisker(ix, g, P), budget=budget))
    b = _D(f, g, budget)
    return a == b, f"liftcat={a} D={b}"


@prop("distance-lower-bound", "D(f,g) >= max(liftcat_f(g), liftcat_g(f))")
def _mk_lb(rng, cfg):
    return _make_pair(rng, cfg)


@_mk_lb
def _ck_lb(inst, budget):
    f, g = inst["f"], inst["g"]
    d = _D(f, g, budget)
    a = _num(liftcat_op(f, g, budget=budget))
    b = _num(liftcat_op(g, f, budget=budget))
    return d >= max(a, b), f"D={d} liftcat_f(g)={a} liftcat_g(f)={b}"


@prop("distance-cover-equals-diagonal", "cover distance = diagonal lifting distance")
def _mk_oracle(rng, cfg):
    return _make_pair(rng, cfg)


@_mk_oracle
def _ck_oracle(inst, budget):
    a = _D(inst["f"], inst["g"], budget)
    b = _num(homotopic_distance_direct(inst["f"], inst["g"], budget=budget))
    return a == b, f"cover={a} direct={b}"


# -- triangle inequality and consequences (normal domains) ------------

@prop("triangle-inequality", "X normal: D(f,h) <= D(f,g) + D(g,h)", normal_filter=True)
def _mk_tri(rng, cfg):
    d = _make_pair(rng, cfg, normal=True)
    d["h"] = _map(rng, d["f"].domain, d["f"].codomain)
    return d


@_mk_tri
def _ck_tri(inst, budget):
    f, g, h = inst["f"], inst["g"], inst["h"]
    a, b, c = _D(f, h, budget), _D(f, g, budget), _D(g, h, budget)
    return a <= b + c, f"D(f,h)={a} D(f,g)={b} D(g,h)={c}"


@prop("distance-of-composites", "X normal: D(f' o f, g' o g) <= D(f,g) + D(f',g')",
      normal_filter=True)
def _mk_dc(rng, cfg):
    d = _make_pair(rng, cfg, normal=True)
    Z = _space(rng, cfg)
    Y = d["f"].codomain
    d["f2"], d["g2"] = _map(rng, Y, Z), _map(rng, Y, Z)
    return d


@_mk_dc
def _ck_dc(inst, budget):
    f, g, f2, g2 = inst["f"], inst["g"], inst["f2"], inst["g2"]
    a = _D(f2.after(f), g2.after(g), budget)
    b, c = _D(f, g, budget), _D(f2, g2, budget)
    return a <= b + c, f"{a} <= {b} + {c}"


@prop("distance-of-products", "X x X' normal: D(f x f', g x g') <= D(f,g) + D(f',g')",
      normal_filter=True)
def _mk_dp(rng, cfg):
    for _ in range(cfg.max_retries):
        d = _make_pair(rng, cfg)
        e = _make_pair(rng, cfg)
        if _normal_ok(cfg, product(d["f"].domain, e["f"].domain)):
            return {"f": d["f"], "g": d["g"], "f2": e["f"], "g2": e["g"]}
    raise Skip("no normal product")


@_mk_dp
def _ck_dp(inst, budget):
    f, g, f2, g2 = inst["f"], inst["g"], inst["f2"], inst["g2"]
    a = _D(product_map(f, f2), product_map(g, g2), budget)
    b, c = _D(f, g, budget), _D(f2, g2, budget)
    return a <= b + c, f"{a} <= {b} + {c}"


@prop("tc-of-products", "(AxA)x(BxB) normal: TC(A x B) <= TC(A) + TC(B)",
      normal_filter=True, max_points=3)
def _mk_tcp(rng, cfg):
    for _ in range(cfg.max_retries):
        A, B = _space(rng, cfg, max_points=3), _space(rng, cfg, max_points=3)
        if _normal_ok(cfg, product(product(A, A), product(B, B))):
            return {"A": A, "B": B}
    raise Skip("no normal product")


@_mk_tcp
def _ck_tcp(inst, budget):
    A, B = inst["A"], inst["B"]
    a = _num(topological_complexity(product(A, B), budget=budget))
    b = _num(topological_complexity(A, budget=budget))
    c = _num(topological_complexity(B, budget=budget))
    return a <= b + c, f"{a} <= {b} + {c}"


# -- LS category ---------------------------------------------------------

def _cat(X, budget):
    return _num(ls_category_space(X, budget=budget))


@functools.lru_cache(maxsize=8)
def _cat_memo(X, budget):
    return _cat(X, budget)


@prop("secat-le-cat", "Y path-connected: secat(alpha) <= cat(Y), equality if alpha nullhomotopic")
def _mk_sc(rng, cfg):
    Y = _space(rng, cfg, connected=True)
    return {"alpha": _map(rng, _space(rng, cfg), Y)}


@_mk_sc
def _ck_sc(inst, budget):
    alpha = inst["alpha"]
    s = _num(secat_op(alpha, budget=budget))
    c = _cat(alpha.codomain, budget)
    null = bool(is_nullhomotopic(alpha, budget=budget))
    ok = s <= c and (not null or s == c)
    return ok, f"secat={s} cat={c} nullhomotopic={null}"


# The bound through cat X needs f and iota to meet a common path component
# of Y (the square with a one-point corner must exist); a connected Y ensures it.
@prop("liftcat-le-cat-and-secat",
      "X, Y path-connected: liftcat_f(iota) <= min(cat X, secat iota)")
def _mk_lcs(rng, cfg):
    X = _space(rng, cfg, connected=True)
    Y, A = _space(rng, cfg, connected=True), _space(rng, cfg)
    return {"f": _map(rng, X, Y), "iota": _map(rng, A, Y)}


@_mk_lcs
def _ck_lcs(inst, budget):
    f, iota = inst["f"], inst["iota"]
    a = _num(liftcat_op(f, iota, budget=budget))
    c = _cat(f.domain, budget)
    s = _num(secat_op(iota, budget=budget))
    return a <= min(c, s), f"liftcat={a} cat(X)={c} secat={s}"


@prop("cat-of-map", "X, Y path-connected: cat(f) <= min(cat X, cat Y)")
def _mk_cm(rng, cfg):
    X = _space(rng, cfg, connected=True)
    Y = _space(rng, cfg, connected=True)
    return {"f": _map(rng, X, Y)}


@_mk_cm
def _ck_cm(inst, budget):
    f = inst["f"]
    a = _num(ls_category(f, budget=budget))
    b, c = _cat(f.domain, budget), _cat(f.codomain, budget)
    return a <= min(b, c), f"cat(f)={a} cat(X)={b} cat(Y)={c}"


@prop("distance-le-cat-and-tc", "X, Y path-connected: D(f,g) <= min(cat X, TC Y)")
def _mk_dct(rng, cfg):
    X = _space(rng, cfg, connected=True)
    Y = _space(rng, cfg, connected=True)
    return {"f": _map(rng, X, Y), "g": _map(rng, X, Y)}


@_mk_dct
def _ck_dct(inst, budget):
    f, g = inst["f"], inst["g"]
    d = _D(f, g, budget)
    c = _cat(f.domain, budget)
    t = _num(topological_complexity(f.codomain, budget=budget))
    return d <= min(c, t), f"D={d} cat(X)={c} TC(Y)={t}"


@prop("cat-tc-sandwich", "X path-connected: D(id, const) = cat X <= TC X <= cat(X x X)")
def _mk_sand(rng, cfg):
    return {"X": _space(rng, cfg, connected=True)}


@_mk_sand
def _ck_sand(inst, budget):
    X = inst["X"]
    d = _D(identity(X), constant(X, X), budget)
    c = _cat(X, budget)
    t = _num(topological_complexity(X, budget=budget))
    t2 = _num(tc_via_distance(X, budget=budget))
    cc = _cat(product(X, X), budget)
    return d == c <= t <= cc and t == t2, f"D={d} cat={c} TC={t} TC(pr1,pr2)={t2} cat(XxX)={cc}"


@prop("distance-of-axis-inclusions", "X path-connected: D(in1, in2) = cat X")
def _mk_ax(rng, cfg):
    return {"X": _space(rng, cfg, connected=True)}


@_mk_ax
def _ck_ax(inst, budget):
    X = inst["X"]
    P = product(X, X)
    in1 = whisker(identity(X), constant(X, X), P)
    in2 = whisker(constant(X, X), identity(X), P)
    d = _D(in1, in2, budget)
    c = _cat(X, budget)
    return d == c, f"D(in1,in2)={d} cat={c}"


@prop("cat-of-products", "X, Y path-connected, X x Y normal: cat(X x Y) <= cat X + cat Y",
      normal_filter=True)
def _mk_cp(rng, cfg):
    for _ in range(cfg.max_retries):
        X = _space(rng, cfg, connected=True)
        Y = _space(rng, cfg, connected=True)
        if _normal_ok(cfg, product(X, Y)):
            return {"X": X, "Y": Y}
    raise Skip("no normal product")


@_mk_cp
def _ck_cp(inst, budget):
    X, Y = inst["X"], inst["Y"]
    a = _cat(product(X, Y), budget)
    b, c = _cat(X, budget), _cat(Y, budget)
    return a <= b + c, f"cat(XxY)={a} cat X={b} cat Y={c}"


@prop("pseudocircle-product-counterexample",
      "non-normal S: cat(S x S) = 3 > cat S + cat S = 2")
def _mk_ps(rng, cfg):
    return {"S": pseudocircle()}


@_mk_ps
def _ck_ps(inst, budget):
    S = inst["S"]
    c = _cat_memo(S, budget)
    cc = _cat_memo(product(S, S), budget)
    normal = is_normal(S)[0]
    return (not normal) and c == 1 and cc == 3, f"normal={normal} cat={c} cat(SxS)={cc}"


# -- pointed and Whitehead comparisons --------------------------------

@prop("pointed-equals-free",
      "X normal, connected, maximal basepoint: free liftcat n > 0 gives pointed n; "
      "n = 0 gives pointed <= 1", normal_filter=True)
def _mk_pt(rng, cfg):
    X = _space(rng, cfg, connected=True, normal=True)
    top = max(range(X.n), key=lambda i: bin(X.down[i]).count("1"))
    X = X.with_basepoint(X.points[top])
    Y = _space(rng, cfg, pointed=True)
    A = _space(rng, cfg, pointed=True)
    return {"f": _map(rng, X, Y, pointed=True), "iota": _map(rng, A, Y, pointed=True)}


@_mk_pt
def _ck_pt(inst, budget):
    f, iota = inst["f"], inst["iota"]
    free = _num(liftcat_op(f, iota, budget=budget))
    ptd = _num(liftcat_op(f, iota, pointed=True, budget=budget))
    ok = ptd == free if free > 0 else ptd <= 1
    return ok and ptd >= free, f"free={free} pointed={ptd}"


@prop("op-le-whitehead", "liftcat_op <= liftcat_wg, with equality when X is normal")
def _mk_wg(rng, cfg):
    X, Y = _space(rng, cfg), _space(rng, cfg)
    return {"f": _map(rng, X, Y), "iota": gen_inclusion(Y, rng)}


@_mk_wg
def _ck_wg(inst, budget):
    f, iota = inst["f"], inst["iota"]
    a = _num(liftcat_op(f, iota, budget=budget))
    b = _num(liftcat_wg(f, iota, budget=budget))
    normal = is_normal(f.domain)[0]
    return a <= b and (not normal or a == b), f"op={a} wg={b} normal={normal}"


@prop("tc-equals-projection-distance", "TC(Y) = D(pr1, pr2)")
def _mk_tcd(rng, cfg):
    return {"Y": _space(rng, cfg)}


@_mk_tcd
def _ck_tcd(inst, budget):
    a = _num(topological_complexity(inst["Y"], budget=budget))
    b = _num(tc_via_distance(inst["Y"], budget=budget))
    return a == b, f"TC={a} D(pr1,pr2)={b}"
