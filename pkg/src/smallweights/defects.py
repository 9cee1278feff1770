"""Defect data of small weights and the aggregate data built from it.

Every nonzero small weight lies in the orbit of a dominant weight whose
symbol lists the sizes of its canonical blocks.  Within one orbit the
weights fall into suborbits under the natural parabolic subgroup (the
last-coordinate stabiliser in types D and E, the first-coordinate
stabiliser in type F), and each suborbit carries a closed-form defect
rule.  The defect of a weight counts, in compressed form, the positive
roots responsible for the gap between the weight and its dominant
representative; subtracting the cut-off constants of the root system
turns defects into aggregate data, whose evaluation in the fourier
module yields the coefficient attached to the weight.

Conventions used throughout:

* weights are tuples of doubled coordinates, as everywhere else in the
  package, so a half turns into 1 and a two into 4;
* statistic helpers prefixed with d operate on plain integer vectors
  (the doubled entries halved), while the half-shape helpers (h, o, p)
  read the doubled entries directly;
* in types E the statistics are computed on the leading block of
  coordinates fixed by the parabolic, and almost always in the
  reversed form; type F uses the trailing three coordinates and the
  plain form.

Three container shapes appear.  Suborbits of fully blocked weights get
a bare vector of defects.  One block of size two contributes a fourfold
package (vector, tilde scalar, partial scalar, reduced vector); a size
two block followed by further blocks contributes a sevenfold package
with two scalar-vector correction pairs.  A weight may also fail the
comparison against the dominant representative outright, in which case
its defect is the NOT_LESS sentinel and its aggregate is the zero
value.
"""

from __future__ import annotations

from itertools import combinations

from . import rootsys
from .fourier import Vect, ZEROED
from .invariants import eta_constants, scalar_classes
from .rootsys import RootSystem, Vec, sub
from .symgroups import Tuple4Data, Tuple7Data, s4s4_act


class _NotLess:
    """Sentinel for weights not below the dominant representative."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "NOT_LESS"


NOT_LESS = _NotLess()


# ---------------------------------------------------------------------------
# statistics on integer vectors


def norm1(vec) -> int:
    return sum(abs(x) for x in vec)


def minus_positions(vec):
    """1-based positions of the entries equal to minus one."""
    return [i for i, x in enumerate(vec, 1) if x == -1]


def d_stat(vec, j: int) -> int:
    """Sum of absolute values strictly after the j-th minus one."""
    pos = minus_positions(vec)
    if len(pos) < j:
        return 0
    return sum(abs(x) for x in vec[pos[j - 1]:])


def d_stat_rev(vec, k: int) -> int:
    """Sum of absolute values strictly before the k-th minus one from the right."""
    pos = minus_positions(vec)
    if len(pos) < k:
        return 0
    return sum(abs(x) for x in vec[:pos[-k] - 1])


def d_vec(vec, m: int, rev: bool = False):
    f = d_stat_rev if rev else d_stat
    return tuple(f(vec, j) for j in range(1, m + 1))


def d_norm(vec, rev: bool = False) -> int:
    return sum(d_vec(vec, len(minus_positions(vec)), rev))


def natural(vec):
    """Append a trailing one when the absolute sum is odd."""
    return tuple(vec) + ((1,) if norm1(vec) % 2 else ())


def ind_stat(vec) -> int:
    """1-based position of the unique entry of absolute value two."""
    for i, x in enumerate(vec, 1):
        if abs(x) == 2:
            return i
    raise ValueError("no entry of absolute value two")


def sgn_stat(vec) -> int:
    return 0 if vec[ind_stat(vec) - 1] > 0 else 1


def sharp(vec):
    """Split the two into two adjacent copies of its half."""
    i = ind_stat(vec)
    h = vec[i - 1] // 2
    return vec[:i - 1] + (h, h) + vec[i:]


def flat(vec):
    """Zero out the entry of absolute value two."""
    i = ind_stat(vec)
    return vec[:i - 1] + (0,) + vec[i:]


# ---------------------------------------------------------------------------
# statistics on doubled half-integer vectors


def ind5(part) -> int:
    """1-based position of the unique five-half entry (doubled scale)."""
    for i, x in enumerate(part, 1):
        if abs(x) == 5:
            return i
    raise ValueError("no five-half entry")


def sgn5(part) -> int:
    return 0 if part[ind5(part) - 1] > 0 else 1


def o_stat(part) -> int:
    i = ind5(part)
    after = sum(1 for j in range(i, len(part)) if part[j] == 1)
    if part[i - 1] > 0:
        return after
    return after + sum(1 for j in range(i - 1) if abs(part[j]) == 1)


def p_stat(part) -> int:
    i = ind5(part)
    return sum(1 for j in range(i, len(part)) if part[j] == -1)


def j_local(part, i: int, rev: bool = False):
    """Positions paired with the three-half entry at position i."""
    n = len(part)
    if part[i - 1] > 0:
        if rev:
            return {j for j in range(1, i) if part[j - 1] == -1}
        return {j for j in range(i + 1, n + 1) if part[j - 1] == -1}
    if rev:
        return ({j for j in range(i + 1, n + 1) if abs(part[j - 1]) == 1}
                | {j for j in range(1, i) if part[j - 1] == -1})
    return ({j for j in range(1, i) if abs(part[j - 1]) == 1}
            | {j for j in range(i + 1, n + 1) if part[j - 1] == -1})


def h_stat(part, n: int, rev: bool = False) -> int:
    """Sum over n-subsets of three-half positions of the common pair count."""
    jset = [i for i in range(1, len(part) + 1) if abs(part[i - 1]) == 3]
    if len(jset) < n:
        return 0
    total = 0
    for combo in combinations(jset, n):
        inter = set.intersection(*(j_local(part, i, rev) for i in combo))
        total += len(inter)
    return total


def h_base(part) -> int:
    """Inversions of the negative three-half entries against all of them."""
    jset = [i for i in range(1, len(part) + 1) if abs(part[i - 1]) == 3]
    return sum(sum(1 for j in jset if j < i)
               for i in jset if part[i - 1] < 0)


# ---------------------------------------------------------------------------
# block-family defect rules on integer vectors


def b_defect(vec):
    """Defect vector for a sign vector in the odd orthogonal family."""
    nat = natural(vec)
    m = norm1(nat) // 2
    if len(minus_positions(nat)) > m:
        return NOT_LESS
    return d_vec(nat, m)


def c_defect(vec):
    """Defect vector for the symplectic family, with or without a two."""
    m = norm1(vec) // 2
    if any(abs(x) == 2 for x in vec):
        sh = sharp(vec)
        if len(minus_positions(sh)) > m:
            return NOT_LESS
        return d_vec(sh, m)
    if len(minus_positions(vec)) > m:
        return NOT_LESS
    return d_vec(vec, m)


def d_normal_defect(vec, rev: bool = False):
    """Defect vector for a sign vector in the even orthogonal family."""
    m = norm1(vec) // 2
    if len(minus_positions(vec)) > m:
        return NOT_LESS
    return d_vec(vec, m, rev)


def d_double_defect(vec, rev: bool = False):
    """Defect pair for plus or minus twice a coordinate vector."""
    n = len(vec)
    i = ind_stat(vec)
    if vec[i - 1] > 0:
        return (n - i, 0) if rev else (i - 1, 0)
    return (n - 1, i - 1) if rev else (n - 1, n - i)


def d_nonnormal_defect(vec, rev: bool = False):
    """Fourfold defect package for a two followed by sign entries.

    Returns (vector, tilde, partial, reduced vector) or NOT_LESS; the
    vector has one entry per block and the reduced vector one less.
    """
    m = norm1(vec) // 2
    sh = sharp(vec)
    if len(minus_positions(sh)) > m:
        return NOT_LESS
    dv = d_vec(sh, m, rev)
    db = d_vec(flat(vec), m - 1, rev)
    sg = sgn_stat(vec)
    i = ind_stat(vec)
    n = len(vec)
    if rev:
        dt = (2 * (i - 1) - 1) * sg + sum(1 - x for x in vec[i:])
    else:
        dt = (2 * (n - i) - 1) * sg + sum(1 - x for x in vec[:i - 1])
    return dv, dt, sg, db


# ---------------------------------------------------------------------------
# coordinate handling


def split_coordinates(rs: RootSystem, lam: Vec):
    """Split off the doubled coefficient fixed by the parabolic.

    Types E return (coefficient, leading block); type F returns
    (coefficient, trailing three coordinates).  The redundant ambient
    coordinates of the smaller E systems are checked for consistency.
    """
    if rs.kind == "F":
        return lam[0], tuple(lam[1:4])
    if rs.rank == 6:
        if not (lam[5] == lam[6] == -lam[7]):
            raise ValueError("not in the rank six span")
        return lam[7], tuple(lam[0:5])
    if rs.rank == 7:
        if lam[6] != -lam[7]:
            raise ValueError("not in the rank seven span")
        return lam[7], tuple(lam[0:6])
    return lam[7], tuple(lam[0:7])


def _paper_ints(part):
    if any(x % 2 for x in part):
        raise ValueError("coordinates are not integral")
    return tuple(x // 2 for x in part)


def _keep(vec, idx):
    want = set(idx)
    return tuple(x if i in want else 0 for i, x in enumerate(vec))


# ---------------------------------------------------------------------------
# suborbit classification

# Keys are (doubled fixed coefficient, sorted absolute doubled leading
# block, minus-count parity); the parity is None when a zero entry makes
# it reducible by the parabolic.

_E6_CLASSES = {
    "1,1": {
        (2, (0, 0, 0, 0, 2), None): "unit",
        (1, (1, 1, 1, 1, 3), 1): "spinor",
        (0, (0, 0, 0, 0, 4), None): "double",
        (0, (0, 2, 2, 2, 2), None): "ones",
    },
    "2": {
        (2, (0, 0, 2, 2, 2), None): "ones-unit",
        (1, (1, 1, 1, 3, 3), 0): "halves",
        (0, (0, 0, 2, 2, 4), None): "with-two",
    },
    "2,1": {
        (3, (1, 1, 1, 1, 1), 1): "top",
        (2, (2, 2, 2, 2, 2), 1): "all-ones",
        (2, (0, 0, 0, 2, 4), None): "two-unit",
        (1, (1, 1, 3, 3, 3), 1): "halves",
        (1, (1, 1, 1, 1, 5), 0): "five-half",
        (0, (2, 2, 2, 2, 4), 0): "with-two",
        (0, (2, 2, 2, 2, 4), 1): "with-two",
    },
    "2,2": {
        (4, (0, 0, 0, 0, 0), None): "top",
        (2, (0, 0, 0, 0, 6), None): "three",
        (1, (3, 3, 3, 3, 3), 1): "half-three",
    },
}

_E7_CLASSES = {
    "1,1": {
        (2, (0, 0, 0, 0, 2, 2), None): "unit",
        (1, (1, 1, 1, 1, 1, 3), 0): "spinor",
        (0, (0, 0, 0, 0, 0, 4), None): "double",
        (0, (0, 0, 2, 2, 2, 2), None): "ones",
    },
    "1,1,1": {
        (2, (0, 0, 0, 0, 0, 4), None): "unit",
        (0, (2, 2, 2, 2, 2, 2), 0): "ones",
    },
    "2": {
        (3, (1, 1, 1, 1, 1, 1), 1): "top",
        (2, (0, 0, 2, 2, 2, 2), None): "ones-unit",
        (1, (1, 1, 1, 1, 3, 3), 1): "halves",
        (0, (0, 0, 0, 2, 2, 4), None): "with-two",
        (0, (2, 2, 2, 2, 2, 2), 1): "all-ones",
    },
    "2,1": {
        (3, (1, 1, 1, 1, 1, 3), 0): "top",
        (2, (0, 0, 0, 2, 2, 4), None): "two-unit",
        (2, (2, 2, 2, 2, 2, 2), 0): "ones-unit",
        (1, (1, 1, 1, 1, 1, 5), 1): "five-half",
        (1, (1, 1, 1, 3, 3, 3), 0): "halves",
        (0, (0, 2, 2, 2, 2, 4), None): "with-two",
    },
}

_E8_CLASSES = {
    "1,1": {
        (4, (0, 0, 0, 0, 0, 0, 0), None): "top",
        (3, (1, 1, 1, 1, 1, 1, 1), 1): "halves",
        (2, (0, 0, 0, 0, 2, 2, 2), None): "ones-unit",
        (1, (1, 1, 1, 1, 1, 1, 3), 1): "spinor",
        (0, (0, 0, 0, 0, 0, 0, 4), None): "double",
        (0, (0, 0, 0, 2, 2, 2, 2), None): "ones",
    },
    "2": {
        (4, (0, 0, 0, 0, 0, 2, 2), None): "top2",
        (3, (1, 1, 1, 1, 1, 1, 3), 0): "halves1",
        (2, (0, 0, 0, 0, 0, 2, 4), None): "two-unit",
        (2, (0, 0, 2, 2, 2, 2, 2), None): "ones-unit",
        (1, (1, 1, 1, 1, 1, 3, 3), 0): "halves2",
        (0, (0, 0, 0, 0, 2, 2, 4), None): "with-two",
        (0, (0, 2, 2, 2, 2, 2, 2), None): "ones6",
    },
    "2,1": {
        (5, (1, 1, 1, 1, 1, 1, 1), 0): "top",
        (4, (0, 0, 0, 2, 2, 2, 2), None): "ones-top2",
        (3, (1, 1, 1, 1, 1, 3, 3), 1): "halves2",
        (2, (0, 0, 0, 2, 2, 2, 4), None): "two-unit",
        (2, (2, 2, 2, 2, 2, 2, 2), 1): "ones-unit",
        (1, (1, 1, 1, 1, 1, 1, 5), 0): "five-half",
        (1, (1, 1, 1, 1, 3, 3, 3), 1): "halves3",
        (0, (0, 0, 2, 2, 2, 2, 4), None): "with-two",
    },
}

_E_CLASSES = {6: _E6_CLASSES, 7: _E7_CLASSES, 8: _E8_CLASSES}

_F4_CLASSES = {
    (3, (1, 1, 1)): "top",
    (2, (0, 2, 2)): "ones-unit",
    (1, (1, 1, 3)): "halves",
    (0, (2, 2, 2)): "ones",
}


def _e_shape(rank: int, sym: str) -> str:
    if sym in ("1,1", "1,1,1"):
        return "vect"
    if sym == "2":
        return "tuple4"
    if sym == "2,2":
        return "tuple7"
    return "tuple4" if rank == 6 else "tuple7"


def _root_symbol(rs: RootSystem, lam: Vec) -> str:
    if rs.kind in ("B", "C", "F", "G"):
        key = ("root_length_split",)
        if key not in rs._cache:
            lens = sorted({rootsys.dot2(a, a) for a in rs.roots})
            rs._cache[key] = lens[0]
        return "1s" if rootsys.dot2(lam, lam) == rs._cache[key] else "1l"
    return "1"


def classify_suborbit(rs: RootSystem, lam: Vec):
    """Classify a small weight as (shape, symbol, suborbit tag).

    The shape names the aggregate container ("vect", "tuple4" or
    "tuple7"), the symbol is the symbol text of the dominant
    representative of the orbit, and the tag selects the defect rule.
    Roots get the tags "plus" and "minus", the zero weight "zero", and
    weights whose fixed coefficient is negative "neg".  Anything else
    raises, which signals either a weight outside the small orbits or a
    classification bug.
    """
    lam = tuple(lam)
    if not any(lam):
        return ("vect", "", "zero")
    if lam in rs.roots:
        tag = "plus" if rs.root_height[lam] > 0 else "minus"
        return ("vect", _root_symbol(rs, lam), tag)
    kind = rs.kind
    if kind in ("A", "G"):
        raise ValueError("only root orbits carry defect data in this type")
    if kind == "B":
        vec = _paper_ints(lam)
        if any(abs(x) > 1 for x in vec):
            raise ValueError("not a small weight")
        k = norm1(vec)
        return ("vect", ",".join(["1l"] * (k // 2) + ["1s"] * (k % 2)),
                "ones")
    if kind == "C":
        vec = _paper_ints(lam)
        big = [x for x in vec if abs(x) > 1]
        k = norm1(vec) // 2
        if not big:
            if norm1(vec) % 2:
                raise ValueError("not a small weight")
            return ("vect", ",".join(["1s"] * k), "ones")
        if len(big) == 1 and abs(big[0]) == 2 and norm1(vec) % 2 == 0:
            return ("vect", ",".join(["1l"] + ["1s"] * (k - 1)), "with-two")
        raise ValueError("not a small weight")
    if kind == "D":
        vec = _paper_ints(lam)
        big = [x for x in vec if abs(x) > 1]
        if norm1(vec) % 2 or (big and (len(big) > 1 or abs(big[0]) != 2)):
            raise ValueError("not a small weight")
        k = norm1(vec) // 2
        if big and k == 1:
            return ("tuple4", "1|1", "double")
        if big:
            return ("tuple4", "2" + ",1" * (k - 2), "with-two")
        # rank four merges the two-block symbols under triality
        sym = "1|1" if rs.rank == 4 and k == 2 else ",".join(["1"] * k)
        return ("vect", sym, "ones")
    if kind == "F":
        c2, part = lam[0], tuple(lam[1:4])
        ms = tuple(sorted(abs(x) for x in part))
        if (abs(c2), ms) not in _F4_CLASSES:
            raise ValueError("not a small weight")
        if c2 < 0:
            return ("vect", "1l,1s", "neg")
        return ("vect", "1l,1s", _F4_CLASSES[(c2, ms)])
    c2, part = split_coordinates(rs, lam)
    ms = tuple(sorted(abs(x) for x in part))
    parity = None if 0 in ms else sum(1 for x in part if x < 0) % 2
    classes = _E_CLASSES[rs.rank]
    if c2 < 0:
        for sym, table in classes.items():
            for kc2, kms, _ in table:
                if kc2 == -c2 and kms == ms:
                    return (_e_shape(rs.rank, sym), sym, "neg")
        raise ValueError("not a small weight")
    for sym, table in classes.items():
        tag = table.get((c2, ms, parity))
        if tag is not None:
            return (_e_shape(rs.rank, sym), sym, tag)
    raise ValueError("not a small weight")


# ---------------------------------------------------------------------------
# defect rules for the rank six exceptional system (leading block of five)


def _e6_pair(tag, part):
    if tag == "unit":
        return (0, 0)
    if tag == "spinor":
        return (h_stat(part, 1), 0)
    vec = _paper_ints(part)
    if tag == "double":
        return d_double_defect(vec, rev=True)
    base = d_normal_defect(vec, rev=True)
    if base is NOT_LESS:
        return NOT_LESS
    return (base[0] + 1, base[1])


def _e6_two(tag, part):
    if tag == "ones-unit":
        vec = _paper_ints(part)
        return Tuple4Data((0, 0), d_norm(vec, rev=True), 0, (0,))
    if tag == "with-two":
        base = d_nonnormal_defect(_paper_ints(part), rev=True)
        if base is NOT_LESS:
            return NOT_LESS
        dv, dt, sg, db = base
        return Tuple4Data((dv[0] + 1, dv[1]), dt + 1, sg + 1, db)
    h1, h2 = h_stat(part, 1), h_stat(part, 2)
    hb = h_base(part)
    cap = min(h2, 2)
    return Tuple4Data((cap + 2 * hb, 0), h1 - cap + 2 * hb, cap, (0,))


def _e6_twoone(tag, part):
    if tag == "top":
        return Tuple4Data((0, 0, 0), 0, 0, (0, 0))
    if tag == "five-half":
        i, sg = ind5(part), sgn5(part)
        o, p = o_stat(part), p_stat(part)
        cap = min(p, 2)
        d2 = 2 * (i // 2) * sg + 2 * (max(p - 2, 0) // 2) + cap
        d1 = 2 * (i - 1) * sg + 2 * p + cap + o - d2
        return Tuple4Data((d1, d2, 0), 2 * (i - 1) * sg + 2 * p - cap,
                          cap, (cap + o, 0))
    if tag == "halves":
        h1, h2, h3 = (h_stat(part, n) for n in (1, 2, 3))
        hb = h_base(part)
        if hb == 3 or (hb == 2 and h1 >= 4):
            return NOT_LESS
        if hb <= 1:
            partial = max(h3 - h2 // 2, 0)
            return Tuple4Data((h1 + 2 * hb + 1, h3, 0), h2 + 2 * hb,
                              partial, (h1 - h2 + h3 - partial + 1, 0))
        if h1 <= 2 and h2 <= 1:
            return Tuple4Data((h1 + 5, h2 + 1, 0), h3 + 3, h2 + 1,
                              (h1 - h3 + 2, 0))
        # remaining half-shapes have zero coefficient as well
        return NOT_LESS
    vec = _paper_ints(part)
    if tag == "two-unit":
        i, sg = ind_stat(vec), sgn_stat(vec)
        after = vec[i:]
        before = vec[:i - 1]
        d1 = (2 * (i - 1) - 1) * sg + sum(1 - x for x in after)
        dbar1 = ((-2 + 2 * sum(1 - abs(x) for x in before)) * sg
                 + sum(1 - abs(x) for x in after))
        dtilde = ((1 + 2 * sum(abs(x) for x in before)) * sg
                  + sum(abs(x) - x for x in after))
        return Tuple4Data((d1, 0, 0), dtilde, 0, (dbar1, 0))
    if tag == "with-two":
        base = d_nonnormal_defect(vec, rev=True)
        if base is NOT_LESS:
            return NOT_LESS
        dv, dt, sg, db = base
        return Tuple4Data((dv[0] + 2, dv[1] + 1, dv[2]), dt + 1, sg + 1,
                          (db[0] + 1, db[1]))
    # all-ones
    total = d_norm(vec, rev=True)
    tail = d_norm((0, 0) + vec[2:], rev=True)
    return Tuple4Data((total - tail, 0, 0), tail, 0, (total - 2 * tail, 0))


def _e6_twotwo(tag, part):
    if tag == "top":
        return 0
    if tag == "three":
        i = next(j for j, x in enumerate(part, 1) if abs(x) == 6)
        return 5 - i if part[i - 1] > 0 else 3 + i
    if part[4] == -3:
        return NOT_LESS
    return h_base(part) + 1


# ---------------------------------------------------------------------------
# defect rules for the rank seven exceptional system (leading block of six)


def _e7_pair(tag, part):
    if tag == "spinor":
        return (h_stat(part, 1), 0)
    vec = _paper_ints(part)
    if tag == "double":
        return d_double_defect(vec, rev=True)
    base = d_normal_defect(vec, rev=True)
    if base is NOT_LESS:
        return NOT_LESS
    if tag == "unit":
        return (base[0], 0)
    return (base[0] + 2, base[1])


def _e7_triple(tag, part):
    vec = _paper_ints(part)
    if tag == "unit":
        pair = d_double_defect(vec, rev=True)
        return (pair[0], pair[1], 0)
    base = d_normal_defect(vec, rev=True)
    if base is NOT_LESS:
        return NOT_LESS
    return (base[1] + 6, base[0], base[2])


def _e7_two(tag, part):
    if tag == "top":
        return Tuple4Data((0, 0), 0, 0, (0,))
    if tag == "halves":
        h1, h2, hb = h_stat(part, 1), h_stat(part, 2), h_base(part)
        cap = min(h2, 3)
        return Tuple4Data((cap + 2 * hb, 0), h1 - cap + 2 * hb, cap, (0,))
    vec = _paper_ints(part)
    if tag == "ones-unit":
        nz = [j for j, x in enumerate(vec) if x]
        s = d_norm(_keep(vec, nz[2:]), rev=True)
        return Tuple4Data((s, 0), d_norm(vec, rev=True) - s, s, (0,))
    if tag == "with-two":
        base = d_nonnormal_defect(vec, rev=True)
        if base is NOT_LESS:
            return NOT_LESS
        dv, dt, sg, db = base
        return Tuple4Data((dv[0] + 2, dv[1]), dt + 2, sg + 2, db)
    # all-ones
    if len(minus_positions(vec)) > 3:
        return NOT_LESS
    b = d_vec(vec, 3, rev=True)
    return Tuple4Data((b[1] + 2, b[2]), b[0] + 2, b[1], (b[2],))


def _e7_ones_unit(vec):
    """Sevenfold package for six sign entries next to the fixed vector.

    Splits on the first reversed statistic; the extreme case delegates
    to the all-ones rule of the rank six subsystem sitting in the
    leading five coordinates.
    """
    r1 = d_stat_rev(vec, 1)
    if r1 <= 4:
        a = d_norm(vec, rev=True)
        dt1 = r1 + d_stat_rev((0, 0) + vec[2:], 2)
        return Tuple7Data((a, 0, 0), dt1, 0, (a - dt1, 0),
                          a - dt1, 0, (dt1, 0))
    five = vec[:5]
    total = d_norm(five, rev=True)
    t5 = d_norm((0, 0) + five[2:], rev=True)
    return Tuple7Data((total - t5 + 5, 1, 0), t5 + 4, 1,
                      (total - 2 * t5 + 1, 0),
                      d_norm(vec, rev=True) - 5, 0, (5, 0))


def _e7_twoone(tag, part):
    if tag == "top":
        h1 = h_stat(part, 1)
        return Tuple7Data((h1, 0, 0), 0, 0, (0, 0), 0, 0, (h1, 0))
    if tag == "five-half":
        i, sg = ind5(part), sgn5(part)
        o, p = o_stat(part), p_stat(part)
        cap = min(p, 3)
        d2 = 2 * (i // 2) * sg + 2 * (max(p - 3, 0) // 2) + cap
        d1 = 2 * (i - 1) * sg + 2 * p + cap + o - d2
        return Tuple7Data((d1, d2, 0), 1 + d1 + d2, 0, (0, 0),
                          1 + 2 * (i - 1) * sg + 2 * p - cap, cap,
                          (cap + o, 0))
    if tag == "halves":
        h1, h2, h3 = (h_stat(part, n) for n in (1, 2, 3))
        hb = h_base(part)
        if hb <= 1:
            return Tuple7Data((h1 + h2 + 2 * hb + 3, h3, 0),
                              3 + h2 + 2 * hb, h3, (h1 + 2, 0),
                              h1 + 2 * hb, h3, (h2 + 1, 0))
        if hb == 2 and h3 <= 1:
            return Tuple7Data((h1 + h2 + 7, h3 + 2, 0), 5 + h2, 2 + h3,
                              (h1 + 2, 0), 4 + h1, h3, (h2 + 3, 0))
        if hb == 2 and (h1, h2, h3) == (2, 2, 2):
            return Tuple7Data((11, 3, 0), 8, 3, (3, 0), 7, 3, (3, 0))
        if hb == 3 and h1 <= 2 and h2 <= 1 and h3 == 0:
            return Tuple7Data((h1 + h2 + 6, 4, 0), h2 + 6, 2,
                              (h1 + h2, 0), h1 + 3, 2, (4, 0))
        return NOT_LESS
    vec = _paper_ints(part)
    if tag == "ones-unit":
        return _e7_ones_unit(vec)
    if tag == "with-two":
        base = d_nonnormal_defect(vec, rev=True)
        if base is NOT_LESS:
            return NOT_LESS
        dv, dt, sg, db = base
        return Tuple7Data((dv[0] + 7, dv[1] + 2, dv[2]), dt + 4, sg + 2,
                          (db[0] + 2, db[1]),
                          dt + sg + db[0] + db[1] + 1, 1, (5, 0))
    # two-unit
    i, sg = ind_stat(vec), sgn_stat(vec)
    if sg == 0:
        d2 = max(d_stat_rev(sharp(vec), 1) - 2, 0)
        d1 = sum(1 - x for x in vec[i:])
        db2 = d2 + sum(1 - abs(x) for x in vec[i:])
        return Tuple7Data((d1, d2, 0), d1 + d2, 0, (0, 0),
                          d1 + d2 - db2, d2, (db2, 0))
    if sum(vec[i:]) == 2:
        return Tuple7Data((i + 2, 0, 0), 3, 0, (i - 1, 0), i - 1, 0, (3, 0))
    d1 = 2 * i - 3 + sum(1 - x for x in vec[i:])
    return Tuple7Data((d1, 1, 0), d1 + 1 + d_norm(flat(vec), rev=True), 0,
                      (0, 0), d_norm(sharp(vec), rev=True) - 1, 1,
                      (2 + sum(1 - abs(x) for x in vec[:i - 1]), 0))


# ---------------------------------------------------------------------------
# defect rules for the rank eight exceptional system (leading block of seven)


def _e8_pair(tag, part):
    if tag in ("top", "halves"):
        return (0, 0)
    if tag == "spinor":
        return (h_stat(part, 1) + 1, 0)
    vec = _paper_ints(part)
    if tag == "ones-unit":
        return (d_norm(vec, rev=True), 0)
    if tag == "double":
        pair = d_double_defect(vec, rev=True)
        return (pair[0] + 1, pair[1])
    base = d_normal_defect(vec, rev=True)
    if base is NOT_LESS:
        return NOT_LESS
    return (base[0] + 4, base[1])


def _e8_two(tag, part):
    if tag == "halves1":
        return Tuple4Data((0, 0), h_stat(part, 1), 0, (0,))
    if tag == "halves2":
        h1, h2, hb = h_stat(part, 1), h_stat(part, 2), h_base(part)
        cap = min(h2, 5)
        return Tuple4Data((cap + 2 * hb, 0), h1 - cap + 2 * hb,
                          cap + 2 * hb, (0,))
    vec = _paper_ints(part)
    if tag == "top2":
        return Tuple4Data((0, 0), d_norm(vec, rev=True), 0, (0,))
    if tag == "two-unit":
        i, sg = ind_stat(vec), sgn_stat(vec)
        dtilde = sg * (2 * (i - 1) - 1) + sum(1 - x for x in vec[i:])
        return Tuple4Data((d_norm(sharp(vec), rev=True), 0), dtilde, sg,
                          (0,))
    if tag == "ones-unit":
        nz = [j for j, x in enumerate(vec) if x]
        s = d_norm(_keep(vec, nz[2:]), rev=True)
        return Tuple4Data((s, 0), d_norm(vec, rev=True) - s + 2, s, (0,))
    if tag == "with-two":
        base = d_nonnormal_defect(vec, rev=True)
        if base is NOT_LESS:
            return NOT_LESS
        dv, dt, sg, db = base
        return Tuple4Data((dv[0] + 4, dv[1]), dt + 5, sg + 4, db)
    # ones6
    if len(minus_positions(vec)) > 3:
        return NOT_LESS
    b = d_vec(vec, 3, rev=True)
    return Tuple4Data((b[0] + 2, b[2]), b[1] + 8, b[0], (b[2],))


def _e8_ones_unit(vec):
    """Sevenfold package for seven sign entries next to the fixed vector.

    The extreme case delegates to the matching rule of the rank seven
    subsystem in the leading six coordinates.
    """
    r1 = d_stat_rev(vec, 1)
    if r1 <= 5:
        a = d_norm(vec, rev=True)
        m2 = d_norm(_keep(vec, (4, 5)), rev=True)
        t = (0, 0) + vec[2:]
        db2 = r1 - m2 + d_stat_rev(t, 2) + d_stat_rev(t, 3)
        dt2 = a - m2 + 2 - db2
        return Tuple7Data((a - m2 + 2, m2, 0), db2 + 2, m2, (dt2 - 2, 0),
                          dt2, m2, (db2, 0))
    inner = _e7_ones_unit(vec[:6])
    return Tuple7Data((inner.v[0] + 6, inner.v[1] + 2, inner.v[2]),
                      inner.v_tilde1 + 4, inner.d1 + 2,
                      (inner.v_bar1[0] + 2, inner.v_bar1[1]),
                      inner.v_tilde2 + 4, inner.d2 + 2,
                      (inner.v_bar2[0] + 2, inner.v_bar2[1]))


def _e8_twoone(tag, part):
    if tag == "top":
        return Tuple7Data((0, 0, 0), 0, 0, (0, 0), 0, 0, (0, 0))
    if tag == "five-half":
        i, sg = ind5(part), sgn5(part)
        o, p = o_stat(part), p_stat(part)
        cap = min(p, 5)
        d2 = 2 * (i // 2) * sg + 2 * (max(p - 5, 0) // 2) + cap + 1
        d1 = 2 * (i - 1) * sg + 2 * p + cap + o - d2 + 8
        return Tuple7Data((d1, d2, 0), 6 + 2 * (i - 1) * sg + 2 * p - cap,
                          cap + 1, (cap + o + 1, 0), d1 + d2, 0, (7, 0))
    if tag == "halves2":
        h1, h2, hb = h_stat(part, 1), h_stat(part, 2), h_base(part)
        return Tuple7Data((h1 + h2 + 2 * hb + 1, 0, 0), h1 + 1 + 2 * hb,
                          0, (h2, 0), h2 + 2 * hb, 0, (h1 + 1, 0))
    if tag == "halves3":
        h1, h2, h3 = (h_stat(part, n) for n in (1, 2, 3))
        hb = h_base(part)
        if hb <= 1:
            return Tuple7Data((h1 + h2 + 2 * hb + 7, h3 + 1, 0),
                              h2 + 2 * hb + 6, h3 + 1, (h1 + 3, 0),
                              h1 + 2 * hb + 3, h3 + 1, (h2 + 2, 0))
        if hb == 2 and h3 <= 2:
            return Tuple7Data((h1 + h2 + 11, h3 + 3, 0), h2 + 8, h3 + 3,
                              (h1 + 3, 0), h1 + 7, h3 + 1, (h2 + 4, 0))
        if hb == 2 and (h1, h2, h3) == (3, 3, 3):
            return Tuple7Data((17, 5, 0), 12, 5, (5, 0), 11, 5, (5, 0))
        if hb == 3 and h3 == 0 and h2 <= 2:
            lead = min(h2, 1)
            p1 = 3 + h2 - lead
            dt1 = lead + 10
            db1 = h1 + 3
            return Tuple7Data((db1 + dt1, p1 + 2, 0), dt1, p1, (db1, 0),
                              db1 + p1 + 1, 2, (lead + 6, 0))
        if hb == 3 and h3 == 1 and h2 <= 2 and h1 <= 3:
            return Tuple7Data((h1 + h2 + 12, 6, 0), h2 + 10, 4,
                              (h1 + h2 + 2, 0), h1 + 7, 4, (6, 0))
        return NOT_LESS
    vec = _paper_ints(part)
    if tag == "ones-top2":
        nz = [j for j, x in enumerate(vec) if x]
        full = d_norm(vec, rev=True)
        tail = d_norm(_keep(vec, nz[2:]), rev=True)
        return Tuple7Data((full, 0, 0), full - tail, 0, (tail, 0),
                          tail, 0, (full - tail, 0))
    if tag == "ones-unit":
        return _e8_ones_unit(vec)
    if tag == "with-two":
        base = d_nonnormal_defect(vec, rev=True)
        if base is NOT_LESS:
            return NOT_LESS
        dv, dt, sg, db = base
        return Tuple7Data((dv[0] + 13, dv[1] + 4, dv[2]), dt + 7, sg + 4,
                          (db[0] + 4, db[1]),
                          db[0] + db[1] + dt + sg + 6, 2, (7, 0))
    # two-unit
    i, sg = ind_stat(vec), sgn_stat(vec)
    if sg == 0:
        sh = sharp(vec)
        d2 = (max(d_stat_rev(sh, 1) - 2, 0)
              + max(d_stat_rev(sh, 2) - 2, 0))
        d1 = d_norm(sh, rev=True) + sum(1 - abs(x) for x in vec[i:]) + 4
        db1 = d2 + sum(1 - abs(x) for x in vec[i:])
        db2 = d_norm(flat(vec), rev=True) + 4
        return Tuple7Data((d1, d2, 0), d1 - db1, d2, (db1, 0),
                          d1 - db2, 0, (db2, 0))
    if sum(vec[i:]) == 3:
        return Tuple7Data((i + 6, 0, 0), i + 3, 0, (3, 0), 3, 0,
                          (i + 3, 0))
    sh = sharp(vec)
    nz = [j for j, x in enumerate(sh) if x]
    st = d_norm(_keep(sh, nz[2:]), rev=True)
    p2 = 1 + max(st - 1, 0)
    dt2 = d_norm(sh, rev=True) - p2 + 2
    db2 = 1 + p2 + sum(1 - abs(x) for x in vec[:i - 1])
    db1 = d_norm(flat(vec), rev=True) + 4
    d1 = dt2 + db2 + 2
    return Tuple7Data((d1, p2, 0), d1 - db1 + 2, 1, (db1, 0), dt2, p2,
                      (db2, 0))


# ---------------------------------------------------------------------------
# defect rules for the rank four exceptional system (trailing block of three)


def _f4_data(tag, lam):
    if tag == "top":
        return (0, 0)
    if tag == "halves":
        # the trailing one makes the leading entry match the total defect
        lifted = (lam[0] + 2,) + tuple(lam[1:4])
        return (h_stat(lam, 1, rev=True) + 2 * h_base(lifted) + 1, 0)
    if tag == "ones-unit":
        return (d_norm(natural(_paper_ints(lam))), 0)
    base = b_defect(_paper_ints(lam[1:4]))
    if base is NOT_LESS:
        return NOT_LESS
    return (base[0] + 2, base[1])


# ---------------------------------------------------------------------------
# public entry points


def _defect_from(rs: RootSystem, lam: Vec, shape, sym, tag):
    if tag == "zero":
        return ()
    if tag == "plus":
        return (0,)
    if tag == "minus":
        return (1,)
    if tag == "neg":
        return NOT_LESS
    kind = rs.kind
    if kind == "B":
        return b_defect(_paper_ints(lam))
    if kind == "C":
        return c_defect(_paper_ints(lam))
    if kind == "D":
        vec = _paper_ints(lam)
        if tag == "double":
            return d_double_defect(vec)
        if tag == "with-two":
            base = d_nonnormal_defect(vec)
            if base is NOT_LESS:
                return NOT_LESS
            dv, dt, sg, db = base
            return Tuple4Data(dv, dt, sg, db)
        return d_normal_defect(vec)
    if kind == "F":
        return _f4_data(tag, lam)
    c2, part = split_coordinates(rs, lam)
    if rs.rank == 6:
        if sym == "1,1":
            return _e6_pair(tag, part)
        if sym == "2":
            return _e6_two(tag, part)
        if sym == "2,1":
            return _e6_twoone(tag, part)
        return _e6_twotwo(tag, part)
    if rs.rank == 7:
        if sym == "1,1":
            return _e7_pair(tag, part)
        if sym == "1,1,1":
            return _e7_triple(tag, part)
        if sym == "2":
            return _e7_two(tag, part)
        return _e7_twoone(tag, part)
    if sym == "1,1":
        return _e8_pair(tag, part)
    if sym == "2":
        return _e8_two(tag, part)
    return _e8_twoone(tag, part)


def defect_data(rs: RootSystem, lam: Vec):
    """Defect data of a small weight, or NOT_LESS.

    The container matches the aggregate shape of the suborbit: a plain
    tuple for fully blocked weights, a fourfold or sevenfold package
    otherwise, and a single count for the doubled top orbit of the rank
    six system.  All numeric entries are nonnegative.
    """
    lam = tuple(lam)
    shape, sym, tag = classify_suborbit(rs, lam)
    return _defect_from(rs, lam, shape, sym, tag)


def _swapped_cutoff(rs: RootSystem, lam: Vec, sym, tag) -> bool:
    # the rank seven mixed symbol uses the transposed cut-off on the
    # suborbits whose two corrections exchange their roles
    if rs.kind != "E" or rs.rank != 7 or sym != "2,1":
        return False
    if tag == "five-half":
        return True
    if tag != "two-unit":
        return False
    _, part = split_coordinates(rs, lam)
    vec = _paper_ints(part)
    i = ind_stat(vec)
    if sgn_stat(vec) == 0:
        return True
    return sum(vec[i:]) != 2


def _tuple7_cutoff(table):
    head = tuple(x + y for x, y in zip(table.cutoff_1N(3),
                                       (table.delta, 0, 0)))
    pair = table.cutoff_1N(2)
    return Tuple7Data(head, table.eta_1N[3], table.delta, pair,
                      table.eta_tilde, table.delta, pair)


def _e6_top_aggregate(rs: RootSystem, lam: Vec, d: int):
    lo, hi = min(d, 4), max(d - 4, 0)
    agg = Tuple7Data((d - 8, d - 7, -4, -1), 2 * lo - 10, -2,
                     (hi - 4, hi - 3, -1), 2 * hi - 5, -2,
                     (lo - 5, lo - 4, -1))
    # the value is zero as soon as one step towards the wall already is
    for alpha in sorted(scalar_classes(rs, lam).a3_pos):
        step = aggregate(rs, sub(lam, alpha))
        if step is ZEROED or any(e >= 0 for e in step.v):
            return ZEROED
    return agg


def aggregate(rs: RootSystem, lam: Vec):
    """Aggregate data of a small weight: defects minus cut-offs.

    Vector defects lose the cut-off vector of their length, fourfold
    and sevenfold packages additionally lose the tilde and partial
    constants, and a lone doubled block is embedded into the fourfold
    shape.  NOT_LESS defects give the zero value.  Results are cached
    on the root system.
    """
    lam = tuple(lam)
    cache = rs._cache.setdefault("defect_aggregate", {})
    if lam in cache:
        return cache[lam]
    shape, sym, tag = classify_suborbit(rs, lam)
    data = _defect_from(rs, lam, shape, sym, tag)
    table = eta_constants(rs)
    if tag == "zero":
        agg = Vect(())
    elif data is NOT_LESS:
        agg = ZEROED
    elif isinstance(data, int):
        agg = _e6_top_aggregate(rs, lam, data)
    elif tag == "double" and rs.kind == "D":
        a1 = data[0] - table.eta_11
        a2 = data[1] - 1
        agg = Tuple4Data((a2,), a1, a2, ())
    elif isinstance(data, Tuple4Data):
        m = len(data.v)
        agg = Tuple4Data(
            tuple(x - y for x, y in zip(data.v, table.cutoff_1N(m))),
            data.v_tilde - table.eta_tilde, data.d - table.delta,
            tuple(x - y for x, y in zip(data.v_bar, table.cutoff_1N(m - 1))))
    elif isinstance(data, Tuple7Data):
        cut = _tuple7_cutoff(table)
        if _swapped_cutoff(rs, lam, sym, tag):
            cut = s4s4_act((2,), cut)
        agg = Tuple7Data(
            tuple(x - y for x, y in zip(data.v, cut.v)),
            data.v_tilde1 - cut.v_tilde1, data.d1 - cut.d1,
            tuple(x - y for x, y in zip(data.v_bar1, cut.v_bar1)),
            data.v_tilde2 - cut.v_tilde2, data.d2 - cut.d2,
            tuple(x - y for x, y in zip(data.v_bar2, cut.v_bar2)))
    else:
        cut = table.cutoff_1N(len(data))
        agg = Vect(tuple(x - y for x, y in zip(data, cut)))
    cache[lam] = agg
    return agg
