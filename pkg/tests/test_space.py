import json

import pytest
from hypothesis import given

from posetcat.budget import Budget
from posetcat.catalog import chain, discrete, pseudocircle, space, space_names
from posetcat.errors import BudgetExceeded, InputError
from posetcat.space import (FiniteSpace, build_space, connected_components, core,
                            enumerate_opens, is_normal, is_normal_exhaustive,
                            is_path_connected, power, product, singleton, subspace)

from oracles import opens, order
from strategies import spaces


class TestBuild:
    def test_closure_and_order(self):
        X = build_space("abc", [("a", "b"), ("b", "c")])
        assert X.leq_points("a", "c")
        assert not X.leq_points("c", "a")

    def test_t0_quotient_identifies_cycles(self):
        X = build_space("abc", [("a", "b"), ("b", "a"), ("b", "c")])
        assert X.n == 2
        assert X.quotient_of["a"] == X.quotient_of["b"]

    @pytest.mark.parametrize("args", [([], ()), (["a", "a"], ()), (["a"], [("a", "z")])])
    def test_rejects_bad_input(self, args):
        with pytest.raises(InputError):
            build_space(*args)

    def test_unknown_basepoint(self):
        with pytest.raises(InputError):
            build_space(["a"], basepoint="b")

    def test_json_format_from_docs(self):
        doc = {"points": ["a1", "a2", "b1", "b2"],
               "leq": [["b1", "a1"], ["b2", "a1"], ["b1", "a2"], ["b2", "a2"]],
               "basepoint": "b1"}
        assert FiniteSpace.from_json(doc) == pseudocircle()

    @pytest.mark.parametrize("name", space_names())
    def test_catalog_round_trip(self, name):
        X = space(name)
        assert FiniteSpace.from_json(json.loads(json.dumps(X.to_json()))) == X


class TestProducts:
    def test_pseudocircle_square_has_16_points(self):
        assert product(pseudocircle(), pseudocircle()).n == 16

    def test_unit_law(self):
        S = pseudocircle()
        P = product(S, singleton())
        assert P.n == S.n
        assert sorted(bin(d).count("1") for d in P.down) == sorted(bin(d).count("1") for d in S.down)

    def test_chain_squared(self):
        P = product(chain(2), chain(2))
        assert P.leq_points((0, 0), (0, 1)) and P.leq_points((1, 0), (1, 1))
        assert not P.leq_points((0, 1), (1, 0)) and not P.leq_points((1, 0), (0, 1))

    def test_power_cap(self):
        with pytest.raises(BudgetExceeded):
            power(pseudocircle(), 4, Budget(power_cap=100))


class TestOpens:
    def test_pseudocircle_opens(self):
        S = pseudocircle()
        got = {frozenset(o.points) for o in enumerate_opens(S)}
        want = [set(), {"b1"}, {"b2"}, {"b1", "b2"}, {"b1", "b2", "a1"}, {"b1", "b2", "a2"},
                {"a1", "a2", "b1", "b2"}]
        assert got == {frozenset(w) for w in want}

    @pytest.mark.parametrize("n", [1, 3, 5])
    def test_discrete(self, n):
        assert len(list(enumerate_opens(discrete(n)))) == 2 ** n

    def test_chain(self):
        assert len(list(enumerate_opens(chain(3)))) == 4

    def test_cap(self):
        with pytest.raises(BudgetExceeded):
            list(enumerate_opens(discrete(6), budget=Budget(open_cap=10)))

    @given(spaces(5))
    def test_matches_oracle(self, X):
        got = {frozenset(o.points) for o in enumerate_opens(X)}
        assert got == set(opens(*order(X.to_json())))


class TestSubspace:
    def test_inclusion(self):
        S = pseudocircle()
        U, inc = subspace(S, ["b1", "b2", "a1"])
        assert U.n == 3 and inc("a1") == "a1"

    def test_empty_rejected(self):
        with pytest.raises(InputError):
            subspace(pseudocircle(), [])


class TestNormality:
    def test_discrete(self):
        assert is_normal(discrete(3))[0]

    def test_pseudocircle_witness(self):
        ok, witness = is_normal(pseudocircle())
        assert not ok
        assert {frozenset(w) for w in witness} == {frozenset({"a1"}), frozenset({"a2"})}

    @pytest.mark.parametrize("n", [1, 2, 4])
    def test_chains(self, n):
        assert is_normal(chain(n))[0]

    @given(spaces(5))
    def test_agrees_with_exhaustive_check(self, X):
        assert is_normal(X)[0] == is_normal_exhaustive(X)[0]

    def test_exhaustive_cap(self):
        with pytest.raises(BudgetExceeded):
            is_normal_exhaustive(discrete(8), Budget(normal_pair_cap=100))


class TestConnectivity:
    def test_examples(self):
        assert is_path_connected(pseudocircle())
        assert not is_path_connected(discrete(2))
        assert is_path_connected(singleton())

    @given(spaces(5))
    def test_components_partition(self, X):
        comps = connected_components(X)
        acc = 0
        for c in comps:
            assert acc & c == 0
            acc |= c
        assert acc == X.full


class TestCore:
    def test_chain_core_is_point(self):
        assert core(chain(3)).core.n == 1

    def test_pseudocircle_is_minimal(self):
        c = core(pseudocircle())
        assert c.core.n == 4 and c.trivial

    def test_product_with_point(self):
        S = pseudocircle()
        assert core(product(S, singleton())).core.n == core(S).core.n

    def test_keep_basepoint(self):
        X = chain(3)
        c = core(X, keep=2)
        assert c.core.points == (2,)

    @given(spaces(5))
    def test_retraction_and_fence(self, X):
        c = core(X)
        assert c.retraction.after(c.inclusion).is_constant() or \
            c.retraction.after(c.inclusion).values == tuple(range(c.core.n))
        fence = c.fence
        assert fence.start.values == tuple(range(X.n))
        assert fence.end == c.inclusion.after(c.retraction)
        assert fence.is_valid(False)
