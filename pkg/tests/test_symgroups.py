"""Aggregate symmetry groups: relations, symbols, constrained orbits."""

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smallweights.fourier import aleph_value
from smallweights.symgroups import (
    Tuple4Data,
    Tuple7Data,
    constrained_orbit,
    d12_act,
    d12_constraint,
    d12_orbit,
    double_triangle_symbol,
    extended_orbit,
    in_z,
    s4s4_act,
    s4s4_constraint,
    s4s4_orbit,
    sym_act,
    sym_constraint,
    sym_orbit,
    triangle_symbol,
)


def rand4(rng, n, lo=-12, hi=4):
    return Tuple4Data(
        tuple(rng.randrange(lo, hi) for _ in range(n)),
        rng.randrange(lo, hi),
        rng.randrange(lo, hi),
        tuple(rng.randrange(lo, hi) for _ in range(n - 1)),
    )


def rand7(rng, lo=-12, hi=4):
    return Tuple7Data(
        tuple(rng.randrange(lo, hi) for _ in range(3)),
        rng.randrange(lo, hi),
        rng.randrange(lo, hi),
        tuple(rng.randrange(lo, hi) for _ in range(2)),
        rng.randrange(lo, hi),
        rng.randrange(lo, hi),
        tuple(rng.randrange(lo, hi) for _ in range(2)),
    )


def generic4(n):
    # entries are distinct powers of three, so no derived sums collide
    p = [-(3 ** k) for k in range(1, 2 * n + 2)]
    return Tuple4Data(tuple(p[:n]), p[n], p[n + 1], tuple(p[n + 2:2 * n + 1]))


def generic7():
    p = [-(3 ** k) for k in range(1, 12)]
    return Tuple7Data((p[0], p[1], p[2]), p[3], p[4], (p[5], p[6]),
                      p[7], p[8], (p[9], p[10]))


def free_orbit(y, moves):
    seen = {y}
    frontier = [y]
    while frontier:
        grown = []
        for x in frontier:
            for move in moves:
                z = move(x)
                if z not in seen:
                    seen.add(z)
                    grown.append(z)
        frontier = grown
    return seen


# ---------------------------------------------------------- validation

def test_tuple4_shape_checked():
    with pytest.raises(ValueError):
        Tuple4Data((-1, -2), -1, -1, (-1, -2))
    with pytest.raises(ValueError):
        Tuple4Data((-1,), -1, -1, (-1,))


def test_tuple7_shape_checked():
    with pytest.raises(ValueError):
        Tuple7Data((-1, -2), -1, -1, (-1, -2), -1, -1, (-1, -2))
    with pytest.raises(ValueError):
        Tuple7Data((-1, -2, -3), -1, -1, (-1,), -1, -1, (-1, -2))


def test_in_z():
    assert in_z(Tuple4Data((-1, 0), -2, 0, (-3,)))
    assert not in_z(Tuple4Data((-1, 1), -2, 0, (-3,)))


def test_generator_index_errors():
    y = Tuple4Data((-1, -2), -3, -4, (-5,))
    with pytest.raises(ValueError):
        sym_act(0, y)
    with pytest.raises(ValueError):
        sym_act(3, y)
    with pytest.raises(ValueError):
        sym_constraint(0, y)
    with pytest.raises(ValueError):
        d12_act((3,), Tuple4Data((-1, -2, -3), -4, -5, (-6, -7)))
    with pytest.raises(ValueError):
        s4s4_act((0,), generic7())
    with pytest.raises(ValueError):
        s4s4_constraint(6, generic7())


def test_triangle_symbol_needs_three():
    with pytest.raises(ValueError):
        triangle_symbol(Tuple4Data((-1, -2), -3, -4, (-5,)))


# ------------------------------------------------------------ S_{N+1}

def test_sym_act_example():
    y = Tuple4Data((-3, -1), -2, -1, (-9,))
    z = sym_act(1, y)
    assert z == Tuple4Data((-2, -1), -3, 0, (-9,))


def test_sym_involution_and_braid():
    rng = random.Random(401)
    checks = 0
    for _ in range(90):
        n = rng.randrange(2, 6)
        y = rand4(rng, n)
        for j in range(1, n + 1):
            assert sym_act(j, sym_act(j, y)) == y
            checks += 1
            for k in range(1, n + 1):
                if j == k:
                    continue
                left = sym_act(j, sym_act(k, sym_act(j, y)))
                right = sym_act(k, sym_act(j, sym_act(k, y)))
                assert left == right
                checks += 1
    assert checks >= 1000


def test_sym_acts_like_transpositions_with_extra_slot():
    # v_tilde behaves as slot N+1: generator j exchanges it with slot j,
    # so two generators applied in either order differ on generic data
    # while jkj and kjk agree, and the free orbit has size (N+1)!.
    y = generic4(4)
    assert sym_act(1, sym_act(3, y)) != sym_act(3, sym_act(1, y))
    for n in (2, 3, 4):
        y = generic4(n)
        moves = [lambda x, j=j: sym_act(j, x) for j in range(1, n + 1)]
        assert len(free_orbit(y, moves)) == math.factorial(n + 1)


def test_sym_conserved_quantities():
    rng = random.Random(402)
    for _ in range(50):
        n = rng.randrange(2, 6)
        y = rand4(rng, n)
        word = [rng.randrange(1, n + 1) for _ in range(12)]
        z = y
        for j in word:
            z = sym_act(j, z)
        assert z.v_bar == y.v_bar
        assert z.d + z.v_tilde == y.d + y.v_tilde
        assert sorted(z.v + (z.v_tilde,)) == sorted(y.v + (y.v_tilde,))


def test_sym_constraint_stabilized():
    rng = random.Random(403)
    for _ in range(200):
        n = rng.randrange(2, 6)
        y = rand4(rng, n, lo=-3, hi=1)
        for j in range(1, n + 1):
            assert sym_constraint(j, y) == sym_constraint(j, sym_act(j, y))


@given(st.integers(-40, 10), st.integers(-40, 10), st.integers(-40, 10),
       st.integers(-40, 10), st.integers(-40, 10), st.integers(1, 3))
@settings(max_examples=120, deadline=None)
def test_sym_involution_property(a, b, c, vt, d, j):
    y = Tuple4Data((a, b, c), vt, d, (a - 1, b - 1))
    assert sym_act(j, sym_act(j, y)) == y


# ---------------------------------------------------------------- D12

def test_d12_involutions_and_order_six():
    y = generic4(3)
    assert d12_act((1, 1), y) == y
    assert d12_act((2, 2), y) == y
    z = y
    for step in range(1, 7):
        z = d12_act((1, 2), z)
        if step < 6:
            assert z != y
    assert z == y


def test_d12_symbol_moves():
    y = generic4(3)
    a, b, c, d, e, f, g, h = triangle_symbol(y)
    s1 = triangle_symbol(d12_act((1,), y))
    assert (s1[0], s1[4]) == (e, a) and (s1[6], s1[7]) == (h, g)
    assert s1[1] == b
    s2 = triangle_symbol(d12_act((2,), y))
    assert (s2[1], s2[4]) == (e, b) and (s2[6], s2[7]) == (g, h)
    assert s2[0] == a
    flip = triangle_symbol(d12_act((1, 2, 1, 2, 1, 2), y))
    assert (flip[6], flip[7]) == (h, g)
    assert (flip[0], flip[1], flip[4]) == (a, b, e)


def test_d12_symbol_sum_relations():
    rng = random.Random(404)
    for _ in range(100):
        y = rand4(rng, 3)
        word = [rng.randrange(1, 3) for _ in range(8)]
        z = d12_act(word, y)
        a, b, c, d, e, f, g, h = triangle_symbol(z)
        assert c == a + b and g == d + e and h == e + f
        assert z.v[2] == y.v[2] and z.v_bar[1] == y.v_bar[1]
        assert sorted((a, b, e)) == sorted(
            (y.v[0], y.v[1], y.v_tilde))


def test_d12_free_orbit_size():
    moves = [lambda x: d12_act((1,), x), lambda x: d12_act((2,), x)]
    assert len(free_orbit(generic4(3), moves)) == 12


def sat_d12(rng):
    v1 = rng.randrange(-9, 1)
    v2 = rng.randrange(-9, 1)
    v3 = rng.randrange(-9, 1)
    vt = rng.randrange(-9, 1)
    f = rng.randrange(-9, 1)
    return Tuple4Data((v1, v2, v3), vt, v1 + v2 - vt - f, (f, v3))


def test_d12_constraint_stabilized():
    rng = random.Random(405)
    for _ in range(200):
        y = sat_d12(rng)
        assert d12_constraint(y)
        for word in ((1,), (2,)):
            assert d12_constraint(d12_act(word, y))
    for _ in range(200):
        y = rand4(rng, 3, lo=-3, hi=1)
        for word in ((1,), (2,)):
            assert d12_constraint(y) == d12_constraint(d12_act(word, y))


# ------------------------------------------------------------- S4 x S4

def test_s4s4_involutions():
    y = generic7()
    for i in (1, 2, 3, 4):
        assert s4s4_act((i, i), y) == y


def test_s4s4_cross_move_square():
    # the linking move is not an involution: its square restores every
    # field except the first entry of v_bar2
    rng = random.Random(406)
    for _ in range(100):
        y = rand7(rng)
        z = s4s4_act((5, 5), y)
        assert z.v == y.v and z.v_tilde1 == y.v_tilde1
        assert z.d1 == y.d1 and z.v_bar1 == y.v_bar1
        assert z.v_tilde2 == y.v_tilde2 and z.d2 == y.d2
        assert z.v_bar2[1] == y.v_bar2[1]
        assert z.v_bar2[0] == y.v[0] + y.v_bar1[0] - y.v_tilde2


def test_s4s4_symbol_moves():
    y = generic7()
    s0 = double_triangle_symbol(y)
    a, b, c, d, e, f, g, h, i, j, k, l, m = s0
    s1 = double_triangle_symbol(s4s4_act((1,), y))
    assert (s1[0], s1[4], s1[6], s1[7]) == (e, a, h, g)
    assert (s1[1], s1[8], s1[9], s1[10]) == (b, i, j, k)
    s2 = double_triangle_symbol(s4s4_act((2,), y))
    assert (s2[1], s2[4]) == (e, b)
    assert (s2[0], s2[6], s2[7]) == (a, g, h)
    s3 = double_triangle_symbol(s4s4_act((3,), y))
    assert s3 == (a, b, c, i, j, k, l, m, d, e, f, g, h)
    s4 = double_triangle_symbol(s4s4_act((4,), y))
    assert (s4[7], s4[12]) == (m, h)
    assert (s4[0], s4[1], s4[4], s4[6], s4[9], s4[11]) == (a, b, e, g, j, l)
    s5 = double_triangle_symbol(s4s4_act((5,), y))
    assert (s5[0], s5[4], s5[12]) == (e, a, h)
    assert (s5[2], s5[5], s5[6], s5[9], s5[11]) == (c, f, g, j, l)


def test_s4s4_letter_multisets():
    rng = random.Random(407)
    for _ in range(100):
        y = rand7(rng)
        s0 = double_triangle_symbol(y)
        word = [rng.randrange(1, 5) for _ in range(10)]
        s1 = double_triangle_symbol(s4s4_act(word, y))
        for slots in ((0, 1, 4, 9), (6, 7, 11, 12)):
            assert sorted(s1[x] for x in slots) == sorted(
                s0[x] for x in slots)


def test_s4s4_six_step_flips():
    y = generic7()
    s0 = double_triangle_symbol(y)
    s1 = double_triangle_symbol(s4s4_act((1, 2) * 3, y))
    assert (s1[6], s1[7]) == (s0[7], s0[6])
    assert all(s1[x] == s0[x] for x in (0, 1, 4, 9, 11, 12))
    s2 = double_triangle_symbol(s4s4_act((2, 3) * 3, y))
    assert all(s2[x] == s0[x] for x in (0, 1, 4, 9))
    assert sorted(s2[x] for x in (6, 7, 11, 12)) == sorted(
        s0[x] for x in (6, 7, 11, 12))
    assert s4s4_act((2, 3) * 6, y) == y


def test_s4s4_free_orbit_sizes():
    y = generic7()
    twelve = free_orbit(y, [lambda x: s4s4_act((1,), x),
                            lambda x: s4s4_act((2,), x)])
    assert len(twelve) == 12
    first3 = free_orbit(y, [lambda x, i=i: s4s4_act((i,), x)
                            for i in (1, 2, 3)])
    assert len(first3) == 192
    full = free_orbit(y, [lambda x, i=i: s4s4_act((i,), x)
                          for i in (1, 2, 3, 4)])
    symbols = {double_triangle_symbol(x) for x in full}
    assert len(symbols) == 576
    # the two hidden entries ride along with their triangles, so each
    # symbol appears with both hidden arrangements
    assert len(full) == 1152


def sat_s4s4(rng, i):
    while True:
        v3 = rng.randrange(-9, 1)
        vt1 = rng.randrange(-9, 1)
        d1 = rng.randrange(-9, 1)
        f1 = rng.randrange(-9, 1)
        vt2 = rng.randrange(-9, 1)
        d2 = rng.randrange(-9, 1)
        k1 = rng.randrange(-9, 1)
        k2 = rng.randrange(-9, 1)
        if i in (1, 2):
            v1 = rng.randrange(-9, 1)
            y = Tuple7Data((v1, vt1 + d1 + f1 - v1, v3), vt1, d1, (f1, v3),
                           vt2, d2, (k1, k2))
        elif i == 4:
            y = Tuple7Data(
                (rng.randrange(-9, 1), rng.randrange(-9, 1), v3),
                vt1, d1, (f1, k2), vt2, d1, (k1, k2))
        else:
            y = Tuple7Data((vt1 + f1, rng.randrange(-9, 1), v3),
                           vt1, d1, (f1, v3), vt2, d2, (k1, k2))
        if s4s4_constraint(i, y):
            return y


def test_s4s4_constraint_stabilized():
    rng = random.Random(408)
    for i in (1, 2, 4):
        for _ in range(150):
            y = sat_s4s4(rng, i)
            assert s4s4_constraint(i, s4s4_act((i,), y))
    for _ in range(200):
        y = rand7(rng, lo=-3, hi=1)
        for i in (1, 2, 3, 4):
            assert s4s4_constraint(i, y) == s4s4_constraint(
                i, s4s4_act((i,), y))


def test_random_words_round_trip():
    # a word in involutive generators applied forwards then backwards is
    # the identity; one thousand words across the three actions
    rng = random.Random(409)
    for _ in range(400):
        n = rng.randrange(2, 6)
        y = rand4(rng, n)
        word = [rng.randrange(1, n + 1) for _ in range(rng.randrange(1, 9))]
        z = y
        for j in word:
            z = sym_act(j, z)
        for j in reversed(word):
            z = sym_act(j, z)
        assert z == y
    for _ in range(300):
        y = rand4(rng, 3)
        word = [rng.randrange(1, 3) for _ in range(rng.randrange(1, 9))]
        assert d12_act(word + word[::-1], y) == y
    for _ in range(300):
        y = rand7(rng)
        word = [rng.randrange(1, 5) for _ in range(rng.randrange(1, 9))]
        assert s4s4_act(word + word[::-1], y) == y


# ----------------------------------------------------- constrained orbits

def test_constrained_orbit_stuck_point():
    y = Tuple4Data((-5, -4), -3, -2, (-1,))
    assert sym_orbit(y) == {y}


def test_constrained_orbit_one_move():
    y = Tuple4Data((-5, -4), -3, -2, (-4,))
    orbit = sym_orbit(y)
    assert sym_act(1, y) in orbit
    assert y in orbit
    for z in orbit:
        assert z.v_bar == (-4,)


def test_constrained_orbit_member_filter():
    y = Tuple4Data((-5, -4), -3, 2, (-4,))
    orbit = sym_orbit(y)
    inside = sym_orbit(y, member=in_z)
    assert inside == {z for z in orbit if in_z(z)}
    assert len(inside) < len(orbit)


def test_constrained_orbit_depth_cap():
    n = 6
    y = generic4(n)
    gens = [lambda x, j=j: sym_act(j, x) for j in range(1, n + 1)]
    free = [lambda x: True] * n
    with pytest.raises(ValueError):
        constrained_orbit(y, gens, free, depth_cap=8)
    big = constrained_orbit(y, gens, free, depth_cap=20)
    assert len(big) == math.factorial(n + 1)


def test_d12_orbit_of_constrained_point():
    rng = random.Random(410)
    for _ in range(40):
        y = sat_d12(rng)
        orbit = d12_orbit(y)
        assert y in orbit and len(orbit) <= 12
        assert all(d12_constraint(z) for z in orbit)


def test_extended_orbit_contains_base():
    # wide entry range keeps accidental constraint hits rare, so the
    # constrained orbits stay within the default depth cap
    rng = random.Random(411)
    for _ in range(60):
        y = rand7(rng, lo=-30, hi=1)
        base = s4s4_orbit(y)
        ext = extended_orbit(y)
        assert base <= ext
    y = sat_s4s4(rng, 5)
    ext = extended_orbit(y)
    assert s4s4_act((5,), y) in ext


def test_unclipped_invariance_along_constrained_orbits():
    # replacing an aggregate by any member of its constrained orbit keeps
    # the unclipped evaluation fixed, for all three actions
    rng = random.Random(412)
    for _ in range(120):
        n = rng.randrange(2, 6)
        y = rand4(rng, n, lo=-6, hi=3)
        want = aleph_value(y, clip=False)
        for z in sym_orbit(y):
            assert aleph_value(z, clip=False) == want
    for _ in range(120):
        y = sat_d12(rng)
        want = aleph_value(y, clip=False)
        for z in d12_orbit(y):
            assert aleph_value(z, clip=False) == want
    for _ in range(120):
        y = rand7(rng, lo=-9, hi=1)
        want = aleph_value(y, clip=False)
        for z in s4s4_orbit(y):
            assert aleph_value(z, clip=False) == want
    for i in (1, 2, 3, 4):
        for _ in range(60):
            y = sat_s4s4(rng, i)
            assert aleph_value(s4s4_act((i,), y), clip=False) == \
                aleph_value(y, clip=False)
