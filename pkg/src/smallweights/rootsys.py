"""Finite root systems in exact doubled coordinates.

Every vector is a tuple of integers holding twice its real coordinates, so
half-integral spinor coordinates stay exact.  All arithmetic is integer or
Fraction arithmetic; nothing here is approximate.

Supported types: A_n (n >= 1), B_n (n >= 2), C_n (n >= 3), D_n (n >= 4),
E6, E7, E8, F4, G2.  The classical types use the standard orthonormal
realization.  E6 and E7 are realized inside the E8 ambient space on the
spans of (e1..e5, -e6-e7+e8) and (e1..e6, e8-e7) respectively, so a weight
of E6 or E7 is still a tuple of eight doubled coordinates.
"""

from __future__ import annotations

from fractions import Fraction

Vec = tuple[int, ...]

_RANK_BOUNDS = {"A": 1, "B": 2, "C": 3, "D": 4, "E": 6, "F": 4, "G": 2}


def dot2(u: Vec, v: Vec) -> int:
    """Scalar product of two doubled vectors (four times the real product)."""
    return sum(a * b for a, b in zip(u, v, strict=True))


def add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def neg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def scale(k: int, u: Vec) -> Vec:
    return tuple(k * a for a in u)


def pairing_raw(lam: Vec, alpha: Vec) -> int:
    """<lam, alpha^vee> = 2(lam, alpha)/(alpha, alpha); no validation."""
    num = 2 * dot2(lam, alpha)
    den = dot2(alpha, alpha)
    q, r = divmod(num, den)
    if r:
        raise ValueError("pairing is not an integer")
    return q


def reflect_by(lam: Vec, alpha: Vec) -> Vec:
    """Reflection of lam in the hyperplane orthogonal to the root alpha."""
    k = pairing_raw(lam, alpha)
    return tuple(a - k * b for a, b in zip(lam, alpha, strict=True))


def _simple_roots(kind: str, rank: int) -> tuple[list[Vec], int]:
    """Doubled simple roots and ambient dimension for one type."""
    if kind == "A":
        dim = rank + 1
        simples = []
        for i in range(rank):
            v = [0] * dim
            v[i], v[i + 1] = 2, -2
            simples.append(tuple(v))
        return simples, dim
    if kind in ("B", "C", "D"):
        dim = rank
        simples = []
        for i in range(rank - 1):
            v = [0] * dim
            v[i], v[i + 1] = 2, -2
            simples.append(tuple(v))
        v = [0] * dim
        if kind == "B":
            v[rank - 1] = 2
        elif kind == "C":
            v[rank - 1] = 4
        else:
            v[rank - 2] = v[rank - 1] = 2
        simples.append(tuple(v))
        return simples, dim
    if kind == "E":
        dim = 8
        a1 = (1, -1, -1, -1, -1, -1, -1, 1)
        a2 = (2, 2, 0, 0, 0, 0, 0, 0)
        simples = [a1, a2]
        for i in range(3, rank + 1):
            v = [0] * dim
            v[i - 3], v[i - 2] = -2, 2
            simples.append(tuple(v))
        return simples, dim
    if kind == "F":
        return [
            (0, 2, -2, 0),
            (0, 0, 2, -2),
            (0, 0, 0, 2),
            (1, -1, -1, -1),
        ], 4
    if kind == "G":
        return [(2, -2, 0), (-4, 2, 2)], 3
    raise ValueError(f"unknown root system type {kind!r}")


class RootSystem:
    """An irreducible finite root system with exact integer data.

    Instances are built by build_root_system and are immutable in use.
    positive_roots is sorted by (height, coordinates), so iteration order
    is deterministic everywhere downstream.
    """

    __slots__ = (
        "kind",
        "rank",
        "name",
        "dim",
        "simple_roots",
        "positive_roots",
        "roots",
        "theta_long",
        "theta_short",
        "simply_laced",
        "cartan",
        "root_height",
        "_pivots",
        "_inv",
        "_hfun",
        "_cache",
    )

    def __init__(self, kind: str, rank: int):
        if kind not in _RANK_BOUNDS:
            raise ValueError(f"unknown root system type {kind!r}")
        if kind == "E":
            if rank not in (6, 7, 8):
                raise ValueError("type E has rank 6, 7 or 8")
        elif kind in ("F", "G"):
            if rank != _RANK_BOUNDS[kind]:
                raise ValueError(f"type {kind} has fixed rank {_RANK_BOUNDS[kind]}")
        elif rank < _RANK_BOUNDS[kind]:
            raise ValueError(f"type {kind} needs rank >= {_RANK_BOUNDS[kind]}")
        simples, dim = _simple_roots(kind, rank)
        self.kind = kind
        self.rank = rank
        self.name = f"{kind}{rank}"
        self.dim = dim
        self.simple_roots = tuple(simples)
        self._pivots, self._inv = _coefficient_map(simples)
        roots = _closure(simples)
        self.roots = frozenset(roots)
        heights = {}
        for r in roots:
            heights[r] = _height_from(self._pivots, self._inv, r)
        self.root_height = heights
        pos = sorted((r for r in roots if heights[r] > 0), key=lambda r: (heights[r], r))
        self.positive_roots = tuple(pos)
        norms = sorted({dot2(r, r) for r in roots})
        self.simply_laced = len(norms) == 1
        long_n, short_n = norms[-1], norms[0]
        self.theta_long = max(
            (r for r in pos if dot2(r, r) == long_n), key=lambda r: heights[r]
        )
        self.theta_short = max(
            (r for r in pos if dot2(r, r) == short_n), key=lambda r: heights[r]
        )
        self.cartan = tuple(
            tuple(pairing_raw(a, b) for b in self.simple_roots) for a in self.simple_roots
        )
        hv = [Fraction(0)] * dim
        for i in range(rank):
            for j, p in enumerate(self._pivots):
                hv[p] += self._inv[i][j]
        self._hfun = tuple(hv)
        self._cache = {}

    def __repr__(self) -> str:
        return f"RootSystem({self.name})"


def _coefficient_map(simples: list[Vec]):
    """Pivot columns and exact inverse for simple-root coordinates.

    Returns (pivots, inv) with inv a rank x rank Fraction matrix such that
    c_i = sum_j inv[i][j] * v[pivots[j]] are the candidate coefficients of v
    in the simple-root basis.
    """
    rank = len(simples)
    dim = len(simples[0])
    # Gaussian elimination on the dim x rank matrix of the simples' columns
    # to find rank many independent coordinate rows.
    rows = [[Fraction(simples[i][d]) for i in range(rank)] for d in range(dim)]
    pivots = []
    basis_rows = []
    for d in range(dim):
        row = rows[d][:]
        for prow, pcol in basis_rows:
            if row[pcol]:
                f = row[pcol] / prow[pcol]
                row = [a - f * b for a, b in zip(row, prow)]
        lead = next((j for j in range(rank) if row[j]), None)
        if lead is not None:
            basis_rows.append((row, lead))
            pivots.append(d)
            if len(pivots) == rank:
                break
    if len(pivots) < rank:
        raise ValueError("simple roots are linearly dependent")
    # Invert the rank x rank submatrix at the pivot rows.
    mat = [[Fraction(simples[i][p]) for i in range(rank)] for p in pivots]
    inv = [[Fraction(int(i == j)) for j in range(rank)] for i in range(rank)]
    for col in range(rank):
        piv = next(r for r in range(col, rank) if mat[r][col])
        mat[col], mat[piv] = mat[piv], mat[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        f = mat[col][col]
        mat[col] = [a / f for a in mat[col]]
        inv[col] = [a / f for a in inv[col]]
        for r in range(rank):
            if r != col and mat[r][col]:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[col])]
                inv[r] = [a - f * b for a, b in zip(inv[r], inv[col])]
    # inv now maps pivot-coordinate values to coefficients: c = inv @ v[pivots]
    return tuple(pivots), tuple(tuple(row) for row in inv)


def _height_from(pivots, inv, v: Vec) -> int:
    total = Fraction(0)
    for i in range(len(inv)):
        row = inv[i]
        total += sum(row[j] * v[p] for j, p in enumerate(pivots))
    if total.denominator != 1 or total % 1:
        raise ValueError("vector has non-integral height")
    return int(total)


def _closure(simples: list[Vec]) -> list[Vec]:
    roots = set(simples) | {neg(s) for s in simples}
    frontier = list(roots)
    while frontier:
        nxt = []
        for r in frontier:
            for s in simples:
                img = reflect_by(r, s)
                if img not in roots:
                    roots.add(img)
                    nxt.append(img)
        frontier = nxt
    return sorted(roots)


def build_root_system(kind: str, rank: int) -> RootSystem:
    """Build the irreducible root system of the given type and rank."""
    return RootSystem(kind, rank)


def root_coefficients(rs: RootSystem, lam: Vec) -> tuple[Fraction, ...] | None:
    """Coefficients of lam in the simple-root basis, or None if outside the span."""
    if len(lam) != rs.dim:
        raise ValueError("wrong ambient dimension")
    coeffs = []
    for i in range(rs.rank):
        row = rs._inv[i]
        coeffs.append(sum(row[j] * lam[p] for j, p in enumerate(rs._pivots)))
    recon = [0] * rs.dim
    for c, s in zip(coeffs, rs.simple_roots):
        for d in range(rs.dim):
            recon[d] += c * s[d]
    if any(recon[d] != lam[d] for d in range(rs.dim)):
        return None
    return tuple(coeffs)


def in_root_lattice(rs: RootSystem, lam: Vec) -> bool:
    coeffs = root_coefficients(rs, lam)
    return coeffs is not None and all(c.denominator == 1 for c in coeffs)


def in_positive_cone(rs: RootSystem, lam: Vec) -> bool:
    """True when lam is a nonnegative integer combination of simple roots."""
    coeffs = root_coefficients(rs, lam)
    return coeffs is not None and all(c.denominator == 1 and c >= 0 for c in coeffs)


def height(rs: RootSystem, lam: Vec) -> int:
    """Sum of simple-root coefficients; requires lam in the root lattice."""
    h = rs.root_height.get(lam)
    if h is not None:
        return h
    coeffs = root_coefficients(rs, lam)
    if coeffs is None or any(c.denominator != 1 for c in coeffs):
        raise ValueError("weight is not in the root lattice")
    return int(sum(coeffs))


def pairing(rs: RootSystem, lam: Vec, alpha: Vec) -> int:
    """<lam, alpha^vee> for a root alpha of rs."""
    if alpha not in rs.roots:
        raise ValueError("second argument is not a root")
    return pairing_raw(lam, alpha)


def reflect(rs: RootSystem, i: int, lam: Vec) -> Vec:
    """Simple reflection s_i applied to lam (0-based index)."""
    return reflect_by(lam, rs.simple_roots[i])


def is_dominant(rs: RootSystem, lam: Vec) -> bool:
    return all(dot2(lam, s) >= 0 for s in rs.simple_roots)


def dominant_representative(rs: RootSystem, lam: Vec) -> tuple[Vec, tuple[int, ...]]:
    """Dominant Weyl-orbit representative and a reduced word reaching it.

    The word (i1, .., im) satisfies dom = s_im(.. s_i1(lam) ..); applying the
    reversed word to dom recovers lam.
    """
    cur = lam
    word = []
    while True:
        for i, s in enumerate(rs.simple_roots):
            if dot2(cur, s) < 0:
                cur = reflect_by(cur, s)
                word.append(i)
                break
        else:
            return cur, tuple(word)


def apply_word(rs: RootSystem, word, lam: Vec) -> Vec:
    """Apply s_i for i in word, left to right."""
    cur = lam
    for i in word:
        cur = reflect_by(cur, rs.simple_roots[i])
    return cur


def weyl_orbit(rs: RootSystem, lam: Vec) -> tuple[Vec, ...]:
    """The full Weyl orbit of lam, sorted."""
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for v in frontier:
            for s in rs.simple_roots:
                img = reflect_by(v, s)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return tuple(sorted(seen))


class Component:
    """One irreducible component of a parabolic subsystem."""

    __slots__ = (
        "kind",
        "rank",
        "tag",
        "simple_roots",
        "positive_roots",
        "roots",
        "theta_long",
        "theta_short",
        "simply_laced",
    )

    def __init__(self, simple_roots, positive_roots, tag):
        self.simple_roots = tuple(simple_roots)
        self.positive_roots = tuple(positive_roots)
        self.roots = frozenset(positive_roots) | {neg(r) for r in positive_roots}
        self.rank = len(self.simple_roots)
        self.tag = tag
        norms = sorted({dot2(r, r) for r in self.roots})
        self.simply_laced = len(norms) == 1
        long_n, short_n = norms[-1], norms[0]
        longs = [r for r in positive_roots if dot2(r, r) == long_n]
        shorts = [r for r in positive_roots if dot2(r, r) == short_n]
        self.theta_long = _component_dominant(self.simple_roots, longs)
        self.theta_short = _component_dominant(self.simple_roots, shorts)
        n_short = 0 if self.simply_laced else 2 * len(shorts)
        self.kind = _classify(self.rank, 2 * len(positive_roots), n_short)

    def __repr__(self) -> str:
        return f"Component({self.kind}, tag={self.tag})"


def _component_dominant(simples, candidates):
    doms = [r for r in candidates if all(dot2(r, s) >= 0 for s in simples)]
    if len(doms) != 1:
        raise ValueError("component has no unique dominant root of that length")
    return doms[0]


def _classify(rank: int, n_roots: int, n_short: int) -> str:
    if n_short == 0:
        if n_roots == rank * (rank + 1):
            return f"A{rank}"
        if n_roots == 2 * rank * (rank - 1):
            return f"D{rank}"
        if (rank, n_roots) == (6, 72):
            return "E6"
        if (rank, n_roots) == (7, 126):
            return "E7"
        if (rank, n_roots) == (8, 240):
            return "E8"
    else:
        if (rank, n_roots, n_short) == (2, 12, 6):
            return "G2"
        if (rank, n_roots, n_short) == (4, 48, 24):
            return "F4"
        if n_short == 2 * rank and n_roots == 2 * rank * rank:
            return f"B{rank}"
        if n_short == 2 * rank * (rank - 1) and n_roots == 2 * rank * rank:
            return f"C{rank}"
    raise ValueError(f"unrecognized component signature {(rank, n_roots, n_short)}")


class ParabolicSubsystem:
    """The subsystem of roots orthogonal to a set of vectors."""

    __slots__ = ("parent", "vectors", "roots", "positive_roots", "simple_roots", "components")

    def __init__(self, parent: RootSystem, vectors):
        self.parent = parent
        self.vectors = tuple(vectors)
        pos = [
            r
            for r in parent.positive_roots
            if all(dot2(r, v) == 0 for v in self.vectors)
        ]
        self.positive_roots = tuple(pos)
        self.roots = frozenset(pos) | {neg(r) for r in pos}
        posset = set(pos)
        simples = []
        for r in pos:
            if not any(sub(r, p) in posset for p in pos if p != r):
                simples.append(r)
        simples.sort()
        self.simple_roots = tuple(simples)
        # split into connected components of the orthogonality graph
        remaining = set(simples)
        comps = []
        while remaining:
            seed = min(remaining)
            group = {seed}
            frontier = [seed]
            while frontier:
                cur = frontier.pop()
                for other in list(remaining - group):
                    if dot2(cur, other) != 0:
                        group.add(other)
                        frontier.append(other)
            remaining -= group
            comps.append(sorted(group))
        comps.sort()
        built = []
        for group in comps:
            gpos = sorted(
                (r for r in _closure(group) if parent.root_height[r] > 0),
                key=lambda r: (parent.root_height[r], r),
            )
            tag = self.simple_roots.index(min(group))
            built.append(Component(group, gpos, tag))
        self.components = tuple(built)

    def __repr__(self) -> str:
        kinds = "x".join(c.kind for c in self.components) or "empty"
        return f"ParabolicSubsystem({self.parent.name}: {kinds})"


def parabolic(rs: RootSystem, vectors) -> ParabolicSubsystem:
    """Roots of rs orthogonal to every vector in the given collection."""
    return ParabolicSubsystem(rs, vectors)
