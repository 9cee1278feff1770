"""Symmetry-group actions on defect aggregates and constrained orbits.

Three groups act on the aggregate data attached to non-normal weights: a
symmetric group S_{N+1} on 4-part tuples, a dihedral group of order 12 on
triangle symbols, and a product of two copies of S_4 on double-triangle
symbols, extended by one further move linking the two triangles.  Each
generator comes with a local constraint; a constrained orbit applies a
generator only where its constraint holds.  Replacing an aggregate by a
member of its constrained orbit never changes the coefficient it encodes,
which is what makes these orbits useful.
"""

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class Tuple4Data:
    """Aggregate (v, v_tilde, d, v_bar) with len(v_bar) == len(v) - 1."""

    v: tuple
    v_tilde: int
    d: int
    v_bar: tuple

    def __post_init__(self):
        if len(self.v_bar) != len(self.v) - 1:
            raise ValueError("v_bar must be one entry shorter than v")

    def entries(self) -> tuple:
        return self.v + (self.v_tilde, self.d) + self.v_bar


@dataclass(frozen=True, order=True)
class Tuple7Data:
    """Aggregate (v, v_tilde1, d1, v_bar1, v_tilde2, d2, v_bar2).

    Both v_bar parts are one entry shorter than v.  The two
    (v_tilde, d, v_bar) triples play symmetric roles and are swapped
    wholesale by the third generator.  The double-triangle moves below
    assume len(v) == 3; the longer shape only ever carries a value.
    """

    v: tuple
    v_tilde1: int
    d1: int
    v_bar1: tuple
    v_tilde2: int
    d2: int
    v_bar2: tuple

    def __post_init__(self):
        if len(self.v) < 3 or len(self.v_bar1) != len(self.v) - 1 \
                or len(self.v_bar2) != len(self.v) - 1:
            raise ValueError("need len(v) >= 3 and len(v_bar*) == len(v) - 1")

    def entries(self) -> tuple:
        return (self.v + (self.v_tilde1, self.d1) + self.v_bar1
                + (self.v_tilde2, self.d2) + self.v_bar2)


def in_z(y) -> bool:
    """Whether every entry of the aggregate is non-positive."""
    return all(e <= 0 for e in y.entries())


# ------------------------------------------------------------ S_{N+1}

def sym_act(j: int, y: Tuple4Data) -> Tuple4Data:
    """Generator j of S_{N+1}: swap v(j) with v_tilde, shift d."""
    n = len(y.v)
    if not 1 <= j <= n:
        raise ValueError("generator index out of range")
    vj = y.v[j - 1]
    v = y.v[:j - 1] + (y.v_tilde,) + y.v[j:]
    return Tuple4Data(v, vj, y.v_tilde + y.d - vj, y.v_bar)


def sym_constraint(j: int, y: Tuple4Data) -> bool:
    """Generator j applies only where v with slot j removed equals v_bar."""
    n = len(y.v)
    if not 1 <= j <= n:
        raise ValueError("generator index out of range")
    return y.v[:j - 1] + y.v[j:] == y.v_bar


# ----------------------------------------------------- triangle symbols

def triangle_symbol(y: Tuple4Data) -> tuple:
    """(a, b, c, d, e, f, g, h) with a+b=c, d+e=g, e+f=h.

    Requires len(v) == 3; v(3) and v_bar(2) stay outside the symbol.
    """
    if len(y.v) != 3:
        raise ValueError("triangle symbols need len(v) == 3")
    a, b = y.v[0], y.v[1]
    d, e, f = y.d, y.v_tilde, y.v_bar[0]
    return (a, b, a + b, d, e, f, d + e, e + f)


def _d12_1(y: Tuple4Data) -> Tuple4Data:
    # swap a with e and g with h in the triangle symbol
    a, vt = y.v[0], y.v_tilde
    return Tuple4Data(
        (vt,) + y.v[1:],
        a,
        vt + y.v_bar[0] - a,
        (y.d + vt - a,) + y.v_bar[1:],
    )


def _d12_2(y: Tuple4Data) -> Tuple4Data:
    # swap b with e in the triangle symbol
    b, vt = y.v[1], y.v_tilde
    return Tuple4Data(
        (y.v[0], vt) + y.v[2:],
        b,
        y.d + vt - b,
        (vt + y.v_bar[0] - b,) + y.v_bar[1:],
    )


_D12_GENS = (_d12_1, _d12_2)


def d12_act(word, y: Tuple4Data) -> Tuple4Data:
    """Apply a word over generators {1, 2} of the order-12 dihedral group."""
    for i in word:
        if i not in (1, 2):
            raise ValueError(f"unknown generator {i!r}")
        y = _D12_GENS[i - 1](y)
    return y


def d12_constraint(y: Tuple4Data) -> bool:
    """Shared constraint of both dihedral generators."""
    return (y.v[2] == y.v_bar[1]
            and y.v[0] + y.v[1] == y.v_tilde + y.d + y.v_bar[0])


# ----------------------------------------------- double-triangle symbols

def double_triangle_symbol(y: Tuple7Data) -> tuple:
    """(a..h, i, j, k, l, m) with a+b=c, d+e=g, e+f=h, i+j=l, j+k=m."""
    a, b = y.v[0], y.v[1]
    d, e, f = y.d1, y.v_tilde1, y.v_bar1[0]
    i, j, k = y.d2, y.v_tilde2, y.v_bar2[0]
    return (a, b, a + b, d, e, f, d + e, e + f, i, j, k, i + j, j + k)


def _s4s4_1(y: Tuple7Data) -> Tuple7Data:
    # swap a with e and g with h in the first triangle
    a, vt = y.v[0], y.v_tilde1
    return Tuple7Data(
        (vt,) + y.v[1:], a,
        vt + y.v_bar1[0] - a,
        (y.d1 + vt - a, y.v_bar1[1]),
        y.v_tilde2, y.d2, y.v_bar2,
    )


def _s4s4_2(y: Tuple7Data) -> Tuple7Data:
    # swap b with e in the first triangle
    b, vt = y.v[1], y.v_tilde1
    return Tuple7Data(
        (y.v[0], vt, y.v[2]), b,
        y.d1 + vt - b,
        (vt + y.v_bar1[0] - b, y.v_bar1[1]),
        y.v_tilde2, y.d2, y.v_bar2,
    )


def _s4s4_3(y: Tuple7Data) -> Tuple7Data:
    # swap the two triangles wholesale
    return Tuple7Data(y.v, y.v_tilde2, y.d2, y.v_bar2,
                      y.v_tilde1, y.d1, y.v_bar1)


def _s4s4_4(y: Tuple7Data) -> Tuple7Data:
    # swap h with m, keeping every other symbol entry fixed
    return Tuple7Data(
        y.v, y.v_tilde1, y.d1,
        (y.v_tilde2 + y.v_bar2[0] - y.v_tilde1, y.v_bar1[1]),
        y.v_tilde2, y.d2,
        (y.v_tilde1 + y.v_bar1[0] - y.v_tilde2, y.v_bar2[1]),
    )


def _s4s4_5(y: Tuple7Data) -> Tuple7Data:
    # the cross move: swap a with e keeping c, f, g, j, l fixed and
    # replace m by a+f
    vt = y.v_tilde1
    return Tuple7Data(
        (vt, y.v[0] + y.v[1] - vt, y.v[2]),
        y.v[0],
        y.d1 + vt - y.v[0],
        y.v_bar1,
        y.v_tilde2, y.d2,
        (vt + y.v_bar1[0] - y.v_tilde2, y.v_bar2[1]),
    )


_S4S4_GENS = (_s4s4_1, _s4s4_2, _s4s4_3, _s4s4_4, _s4s4_5)


def s4s4_act(word, y: Tuple7Data) -> Tuple7Data:
    """Apply a word over generators {1..4} plus the cross move 5."""
    for i in word:
        if i not in (1, 2, 3, 4, 5):
            raise ValueError(f"unknown generator {i!r}")
        y = _S4S4_GENS[i - 1](y)
    return y


def s4s4_constraint(i: int, y: Tuple7Data) -> bool:
    """Local constraint of generator i (the cross move is 5)."""
    if i in (1, 2):
        return (y.v[2] == y.v_bar1[1]
                and y.v[0] + y.v[1] == y.v_tilde1 + y.d1 + y.v_bar1[0])
    if i == 3:
        return True
    if i == 4:
        return y.d1 == y.d2 and y.v_bar1[1] == y.v_bar2[1]
    if i == 5:
        return (y.v[2] == y.v_bar1[1]
                and y.v[0] == y.v_tilde1 + y.v_bar1[0])
    raise ValueError(f"unknown generator {i!r}")


# ------------------------------------------------------ orbit search

def constrained_orbit(y, generators, constraints, member=None, depth_cap=8):
    """Breadth-first orbit applying each generator only where allowed.

    generators and constraints run in parallel; a generator fires at an
    element exactly when its constraint holds there, and the constraint is
    asserted to hold again afterwards.  Raises ValueError when the search
    tree exceeds depth_cap levels.  member, when given, filters the
    returned set without affecting the search.
    """
    seen = {y}
    frontier = [y]
    depth = 0
    while frontier:
        depth += 1
        if depth > depth_cap:
            raise ValueError("orbit search exceeded depth cap")
        grown = []
        for x in frontier:
            for gen, allowed in zip(generators, constraints):
                if not allowed(x):
                    continue
                z = gen(x)
                if not allowed(z):
                    raise AssertionError("constraint not stabilized")
                if z not in seen:
                    seen.add(z)
                    grown.append(z)
        frontier = grown
    if member is None:
        return seen
    return {x for x in seen if member(x)}


def sym_orbit(y: Tuple4Data, member=None, depth_cap=8):
    """Constrained orbit under all S_{N+1} generators."""
    n = len(y.v)
    gens = [lambda x, j=j: sym_act(j, x) for j in range(1, n + 1)]
    cons = [lambda x, j=j: sym_constraint(j, x) for j in range(1, n + 1)]
    return constrained_orbit(y, gens, cons, member, depth_cap)


def d12_orbit(y: Tuple4Data, member=None, depth_cap=8):
    """Constrained orbit under both dihedral generators."""
    cons = [d12_constraint, d12_constraint]
    return constrained_orbit(y, _D12_GENS, cons, member, depth_cap)


def s4s4_orbit(y: Tuple7Data, member=None, depth_cap=8):
    """Constrained orbit under generators 1..4 (no cross move)."""
    gens = _S4S4_GENS[:4]
    cons = [lambda x, i=i: s4s4_constraint(i, x) for i in (1, 2, 3, 4)]
    return constrained_orbit(y, gens, cons, member, depth_cap)


def extended_orbit(y: Tuple7Data, member=None, depth_cap=8):
    """Constrained orbit allowing at most one cross move on any path.

    The cross move need not stabilize its own constraint, so it is never
    iterated: the result is the plain constrained orbit together with the
    constrained orbits of every admissible single cross image.
    """
    base = s4s4_orbit(y, None, depth_cap)
    out = set(base)
    for x in sorted(base):
        if s4s4_constraint(5, x):
            out |= s4s4_orbit(_s4s4_5(x), None, depth_cap)
    if member is None:
        return out
    return {x for x in out if member(x)}
