import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from posetcat.catalog import chain, discrete, pseudocircle
from posetcat.covers import liftcat_op
from posetcat.errors import InputError
from posetcat.harness.generators import gen_inclusion
from posetcat.homotopy import find_lift
from posetcat.maps import constant, identity, point_inclusion
from posetcat.space import core, is_normal, subspace
from posetcat.whitehead import (EXCEEDS, fat_wedge, inclusion_image, liftcat_wg,
                                liftcat_wg_literal, mapping_cylinder)

from strategies import maps_between, spaces


class TestMappingCylinder:
    def test_retraction_recovers_map(self):
        S = pseudocircle()
        U, inc = subspace(S, ["b1", "b2", "a1"])
        cyl = mapping_cylinder(inc)
        assert cyl.r.after(cyl.mu) == inc
        assert cyl.rel_fence.is_valid(False)
        assert core(cyl.space).core.n == S.n

    def test_point_gives_one_new_point(self):
        S = pseudocircle()
        cyl = mapping_cylinder(point_inclusion(S, "b1"))
        M = cyl.space
        assert M.n == S.n + 1
        new = ("A", "*")
        assert set(M.labels_of(M.down[M.index[new]])) == {new, ("Y", "b1")}

    def test_identity_cylinder_stacks(self):
        S = pseudocircle()
        cyl = mapping_cylinder(identity(S))
        assert cyl.space.n == 2 * S.n
        assert core(cyl.space).core.n == S.n

    def test_mu_is_closed_inclusion(self):
        cyl = mapping_cylinder(constant(chain(2), pseudocircle(), "a1"))
        img = inclusion_image(cyl.mu)
        assert img is not None and cyl.space.is_closed(img)


class TestFatWedge:
    def test_level_zero(self):
        inc = point_inclusion(pseudocircle())
        assert fat_wedge(inc, 0).space == inc.domain

    @pytest.mark.parametrize("Y", [pseudocircle(), chain(3)])
    def test_level_one_of_point(self, Y):
        assert fat_wedge(point_inclusion(Y), 1).space.n == 2 * Y.n - 1

    def test_full_subspace(self):
        Y = chain(2)
        assert fat_wedge(identity(Y), 2).space.n == Y.n ** 3

    def test_needs_inclusion(self):
        with pytest.raises(InputError):
            fat_wedge(constant(chain(2), chain(2)), 1)


class TestLiftcatWG:
    def test_pseudocircle_point(self):
        S = pseudocircle()
        # S is minimal, so the class of id_S is a single map and no coordinate hits b1
        assert liftcat_wg(identity(S), point_inclusion(S)).number == math.inf
        assert liftcat_op(identity(S), point_inclusion(S)).number == 1

    def test_literal_route_agrees_on_tiny_case(self):
        D = discrete(2)
        f, iota = identity(D), point_inclusion(D, 0)
        assert liftcat_wg(f, iota).number == math.inf
        assert liftcat_wg_literal(f, iota).status == EXCEEDS

    def test_literal_route_on_chain(self):
        C = chain(2)
        f, iota = identity(C), point_inclusion(C, 0)
        assert liftcat_wg(f, iota).number == liftcat_wg_literal(f, iota).number == 0

    @given(st.data())
    def test_zero_iff_global_lift(self, data):
        X, Y = data.draw(spaces(4)), data.draw(spaces(4))
        f = data.draw(maps_between(X, Y))
        rng = random.Random(data.draw(st.integers(0, 10 ** 6)))
        iota = gen_inclusion(Y, rng)
        assert (liftcat_wg(f, iota).number == 0) == (find_lift(f, iota) is not None)

    @given(st.data())
    def test_op_bounds_wg(self, data):
        X, Y = data.draw(spaces(4)), data.draw(spaces(4))
        f = data.draw(maps_between(X, Y))
        iota = gen_inclusion(Y, random.Random(data.draw(st.integers(0, 10 ** 6))))
        op, wg = liftcat_op(f, iota).number, liftcat_wg(f, iota).number
        assert op <= wg
        if is_normal(X)[0]:
            assert op == wg
